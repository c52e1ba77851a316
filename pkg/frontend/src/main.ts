/** App wiring: load an example (or ?id= from the URL), fetch the bundle
 * products, render the five panels, and coordinate their interactions. */
import {
  ApiClient,
  type CircuitResponse,
  type EvolutionDoc,
  type SummaryDoc,
} from "./api";
import { LatestWins, Store, clampK } from "./state";
import { renderCircuit } from "./views/circuit";
import { highlightAncestry, renderEvolution } from "./views/evolution";
import { renderExplanation } from "./views/explanation";
import { renderDandelionPair } from "./views/pair";
import { renderSummary } from "./views/summary";

interface Panels {
  circuit: Element;
  summary: Element;
  evolution: Element;
  explanation: Element;
  dandelion: Element;
  status: Element;
}

export class App {
  private store = new Store();
  private evolutionFetch = new LatestWins();
  private circuitDoc: CircuitResponse | null = null;
  private summaryDoc: SummaryDoc | null = null;
  private evolutionDoc: EvolutionDoc | null = null;

  constructor(
    private readonly client: ApiClient,
    private readonly panels: Panels,
  ) {}

  private status(text: string): void {
    this.panels.status.textContent = text;
  }

  async loadExample(name: string): Promise<void> {
    try {
      const examples = await this.client.getExamples();
      const example = examples.find((e) => e.name === name) ?? examples[0];
      const { id } = await this.client.postCircuit(example.circuit);
      await this.loadCircuit(id);
    } catch (error) {
      this.status(`failed to load example: ${String(error)}`);
      throw error;
    }
  }

  async loadCircuit(id: string): Promise<void> {
    try {
      this.store.update({ circuitId: id, brush: null, hovered: null, selectedStep: null });
      const [circuit, summary, evolution] = await Promise.all([
        this.client.getCircuit(id),
        this.client.getSummary(id),
        this.client.getEvolution(id),
      ]);
      this.circuitDoc = circuit;
      this.summaryDoc = summary;
      this.evolutionDoc = evolution;
      this.renderAll();
      this.status(`loaded ${circuit.circuit.title ?? id}`);
      // the final step makes a natural first selection
      await this.selectStep(circuit.steps.length - 1);
    } catch (error) {
      this.status(`failed to load circuit: ${String(error)}`);
      throw error;
    }
  }

  private renderAll(): void {
    if (!this.circuitDoc || !this.summaryDoc || !this.evolutionDoc) return;
    renderCircuit(this.panels.circuit, this.circuitDoc, {
      onSelectStep: (step) => void this.selectStep(step),
    }, this.store.get().selectedStep);
    renderSummary(this.panels.summary, this.summaryDoc, {
      onBrush: (range) => void this.setBrush(range),
    });
    this.renderEvolutionPanel();
  }

  private renderEvolutionPanel(): void {
    if (!this.circuitDoc || !this.evolutionDoc) return;
    renderEvolution(this.panels.evolution, this.evolutionDoc, this.circuitDoc.steps, {
      onHover: (target) => this.setHover(target),
      onSelectStep: (step) => void this.selectStep(step),
    });
  }

  /** Brushing the summary refetches the evolution graph for that range. */
  async setBrush(range: [number, number] | null): Promise<void> {
    const id = this.store.get().circuitId;
    if (!id) return;
    this.store.update({ brush: range, hovered: null });
    await this.evolutionFetch.run(
      () =>
        range === null
          ? this.client.getEvolution(id)
          : this.client.getEvolution(id, range[0], range[1]),
      (doc) => {
        this.evolutionDoc = doc;
        this.renderEvolutionPanel();
      },
    ).catch((error) => this.status(`evolution fetch failed: ${String(error)}`));
  }

  /** Hovering restyles the already-fetched graph; no request is made. */
  setHover(target: { step: number; label: string } | null): void {
    if (!this.evolutionDoc) return;
    this.store.update({ hovered: target });
    highlightAncestry(this.panels.evolution, this.evolutionDoc, target);
  }

  /** Selecting a step fetches its explanation and dandelion pair; the
   * explanation input is the most probable alive state before the gate. */
  async selectStep(step: number): Promise<void> {
    const id = this.store.get().circuitId;
    if (!id || !this.summaryDoc) return;
    this.store.update({ selectedStep: step });
    if (this.circuitDoc) {
      renderCircuit(this.panels.circuit, this.circuitDoc, {
        onSelectStep: (s) => void this.selectStep(s),
      }, step);
    }
    const row = this.summaryDoc.matrix[step];
    const best = row.indexOf(Math.max(...row));
    const label = this.summaryDoc.labels[best];
    try {
      const [expl, pair] = await Promise.all([
        this.client.getExplanation(id, step, label),
        this.client.getDandelion(id, step, this.store.get().k),
      ]);
      renderExplanation(this.panels.explanation, expl);
      renderDandelionPair(this.panels.dandelion, pair, this.store.get().k, {
        onScale: (k) => this.store.update({ k: clampK(k) }),
      });
    } catch (error) {
      this.status(`step ${step} fetch failed: ${String(error)}`);
    }
  }

  get state() {
    return this.store.get();
  }
}

export function boot(): void {
  const byId = (id: string) => document.getElementById(id)!;
  const app = new App(new ApiClient(), {
    circuit: byId("circuit"),
    summary: byId("summary"),
    evolution: byId("evolution"),
    explanation: byId("explanation"),
    dandelion: byId("dandelion"),
    status: byId("status"),
  });
  const params = new URLSearchParams(window.location.search);
  const id = params.get("id");
  if (id) void app.loadCircuit(id);
  else void app.loadExample(params.get("example") ?? "grover2");
}

if (typeof document !== "undefined" && document.getElementById("summary")) {
  boot();
}
