/** Typed client for the analysis API. Responses are used verbatim: the client
 * never re-simulates, it only reshapes payload values for drawing. */

export type Pair = [number, number];

export interface GateDoc {
  kind: "h" | "x" | "cnot" | "swap" | "cp";
  operands: number[];
  theta?: number;
}

export interface BlockDoc {
  name: string;
  gates: GateDoc[];
}

export interface CircuitDoc {
  qubits: number;
  title?: string;
  blocks: BlockDoc[];
}

export interface StepDoc {
  step: number;
  block: number;
  gate: GateDoc;
}

export interface CircuitResponse {
  id: string;
  circuit: CircuitDoc;
  steps: StepDoc[];
}

export interface BlockSpanDoc {
  block: number;
  name: string;
  first_step: number;
  last_step: number;
}

export interface SummaryDoc {
  num_qubits: number;
  step_count: number;
  labels: string[];
  matrix: number[][];
  block_spans: BlockSpanDoc[];
  creations: Record<string, number | null>;
}

export interface EvolutionNodeDoc {
  step: number;
  label: string;
  index: number;
  amp: Pair;
  prob: number;
  sign: "positive" | "negative";
}

export interface EvolutionEdgeDoc {
  from: { step: number; label: string };
  to: { step: number; label: string };
  contribution: Pair;
}

export interface HubDoc {
  step: number;
  prob: number;
  labels: string[];
}

export interface EvolutionDoc {
  num_qubits: number;
  from_step: number;
  to_step: number;
  nodes: EvolutionNodeDoc[];
  edges: EvolutionEdgeDoc[];
  hubs: HubDoc[];
}

export interface ExplanationRowDoc {
  qubit: number;
  initial: string;
  operation:
    | "hadamard"
    | "not"
    | "control"
    | "target"
    | "swap_pair"
    | "phase"
    | "none";
  finals: string[];
}

export interface ExplanationDoc {
  step: number;
  gate: GateDoc;
  input_label: string;
  rows: ExplanationRowDoc[];
  output_labels: string[];
}

export interface ElementDoc {
  label: string;
  point: Pair;
  r0: number;
  k: number;
  center: Pair;
  radius: number;
  sticks: { real: [Pair, Pair]; imag: [Pair, Pair] };
}

export interface FigureDoc {
  k: number;
  axis_extent: number;
  elements: ElementDoc[];
}

export interface DandelionPairDoc {
  step: number;
  k: number;
  pre: FigureDoc;
  post: FigureDoc;
}

export interface ExampleDoc {
  name: string;
  description: string;
  circuit: CircuitDoc;
}

export interface ErrorDoc {
  error: string;
  detail: string;
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly body: ErrorDoc,
  ) {
    super(`${body.error}: ${body.detail}`);
  }
}

async function parse<T>(response: Response): Promise<T> {
  const body = await response.json();
  if (!response.ok) {
    throw new ApiError(response.status, body as ErrorDoc);
  }
  return body as T;
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

/** Thin wrapper over the published endpoints; `fetchImpl` is injectable so
 * tests can serve recorded payloads. */
export class ApiClient {
  constructor(
    private readonly base = "",
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  postCircuit(circuit: CircuitDoc): Promise<{ id: string }> {
    return this.fetchImpl(`${this.base}/api/circuits`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(circuit),
    }).then((r) => parse<{ id: string }>(r));
  }

  getCircuit(id: string): Promise<CircuitResponse> {
    return this.fetchImpl(`${this.base}/api/circuits/${id}`).then((r) =>
      parse<CircuitResponse>(r),
    );
  }

  getSummary(id: string): Promise<SummaryDoc> {
    return this.fetchImpl(`${this.base}/api/circuits/${id}/summary`).then((r) =>
      parse<SummaryDoc>(r),
    );
  }

  getEvolution(id: string, from?: number, to?: number): Promise<EvolutionDoc> {
    const params = new URLSearchParams();
    if (from !== undefined) params.set("from", String(from));
    if (to !== undefined) params.set("to", String(to));
    const query = params.size > 0 ? `?${params.toString()}` : "";
    return this.fetchImpl(
      `${this.base}/api/circuits/${id}/evolution${query}`,
    ).then((r) => parse<EvolutionDoc>(r));
  }

  getExplanation(
    id: string,
    step: number,
    label: string,
  ): Promise<ExplanationDoc> {
    return this.fetchImpl(
      `${this.base}/api/circuits/${id}/steps/${step}/explanation?label=${label}`,
    ).then((r) => parse<ExplanationDoc>(r));
  }

  getDandelion(id: string, step: number, k: number): Promise<DandelionPairDoc> {
    return this.fetchImpl(
      `${this.base}/api/circuits/${id}/steps/${step}/dandelion?k=${k}`,
    ).then((r) => parse<DandelionPairDoc>(r));
  }

  getExamples(): Promise<ExampleDoc[]> {
    return this.fetchImpl(`${this.base}/api/examples`).then((r) =>
      parse<ExampleDoc[]>(r),
    );
  }
}
