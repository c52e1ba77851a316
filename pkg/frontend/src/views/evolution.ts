/** State evolution graph: one column of rounded rectangles per state index,
 * vertical position by measured probability, equal-probability states grouped
 * inside hub outlines, pink dotted contribution edges, gate symbols between
 * columns, and red ancestry highlighting on hover. */
import * as d3 from "d3";
import type { EvolutionDoc, StepDoc } from "../api";
import { edgeKey, nodeKey, traceBack, type Ancestry } from "../traceback";

export const NODE_W = 46;
export const NODE_H = 16;
export const COLUMN_GAP = 96;
export const MARGIN = { top: 26, right: 30, bottom: 16, left: 44 };

export const POSITIVE_FILL = "#a6cee3";
export const NEGATIVE_FILL = "#1f78b4";
export const EDGE_COLOR = "#e786b8";
export const TRACE_COLOR = "#d62728";

export interface NodePlacement {
  step: number;
  label: string;
  sign: "positive" | "negative";
  x: number;
  y: number;
}

export interface HubPlacement {
  step: number;
  prob: number;
  x: number;
  y: number;
  height: number;
}

export interface EvolutionLayout {
  width: number;
  height: number;
  nodes: NodePlacement[];
  hubs: HubPlacement[];
  position: Map<string, NodePlacement>;
}

/** Columns at each state index; within a column, hubs sit at the y of their
 * probability and their member nodes stack tightly inside. */
export function layoutEvolution(graph: EvolutionDoc, plotHeight = 300): EvolutionLayout {
  const span = graph.to_step - graph.from_step;
  const width = MARGIN.left + MARGIN.right + NODE_W + span * (NODE_W + COLUMN_GAP);
  const height = MARGIN.top + MARGIN.bottom + plotHeight;
  const y = d3.scaleLinear().domain([0, 1]).range([plotHeight, 0]);
  const xOf = (step: number) =>
    MARGIN.left + (step - graph.from_step) * (NODE_W + COLUMN_GAP);

  const nodes: NodePlacement[] = [];
  const hubs: HubPlacement[] = [];
  const position = new Map<string, NodePlacement>();
  const signOf = new Map<string, "positive" | "negative">();
  for (const node of graph.nodes) {
    signOf.set(nodeKey(node.step, node.label), node.sign);
  }

  for (const hub of graph.hubs) {
    const hubHeight = hub.labels.length * (NODE_H + 3) + 3;
    const centre = MARGIN.top + y(hub.prob);
    const top = Math.max(MARGIN.top, centre - hubHeight / 2);
    hubs.push({ step: hub.step, prob: hub.prob, x: xOf(hub.step), y: top, height: hubHeight });
    hub.labels.forEach((label, i) => {
      const placement: NodePlacement = {
        step: hub.step,
        label,
        sign: signOf.get(nodeKey(hub.step, label)) ?? "positive",
        x: xOf(hub.step),
        y: top + 3 + i * (NODE_H + 3),
      };
      nodes.push(placement);
      position.set(nodeKey(hub.step, label), placement);
    });
  }
  return { width, height, nodes, hubs, position };
}

export interface EvolutionCallbacks {
  onHover: (target: { step: number; label: string } | null) => void;
  onSelectStep: (step: number) => void;
}

export function renderEvolution(
  container: Element,
  graph: EvolutionDoc,
  steps: StepDoc[],
  callbacks: EvolutionCallbacks,
): void {
  d3.select(container).selectAll("*").remove();
  if (graph.to_step === graph.from_step && graph.nodes.length === 0) {
    d3.select(container).append("div").attr("class", "placeholder")
      .text("empty step range");
    return;
  }
  const layout = layoutEvolution(graph);
  const svg = d3
    .select(container)
    .append("svg")
    .attr("class", "evolution")
    .attr("width", layout.width)
    .attr("height", layout.height)
    .attr("viewBox", `0 0 ${layout.width} ${layout.height}`);

  svg
    .selectAll("rect.hub")
    .data(layout.hubs)
    .join("rect")
    .attr("class", "hub")
    .attr("x", (d) => d.x - 4)
    .attr("y", (d) => d.y - 2)
    .attr("width", NODE_W + 8)
    .attr("height", (d) => d.height)
    .attr("rx", 5)
    .attr("fill", "none")
    .attr("stroke", "#aaa")
    .append("title")
    .text((d) => `p = ${d.prob}`);

  const edgePath = (d: EvolutionDoc["edges"][number]) => {
    const a = layout.position.get(nodeKey(d.from.step, d.from.label))!;
    const b = layout.position.get(nodeKey(d.to.step, d.to.label))!;
    const x1 = a.x + NODE_W;
    const y1 = a.y + NODE_H / 2;
    const x2 = b.x;
    const y2 = b.y + NODE_H / 2;
    const mx = (x1 + x2) / 2;
    return `M${x1},${y1} C${mx},${y1} ${mx},${y2} ${x2},${y2}`;
  };

  svg
    .selectAll("path.edge")
    .data(graph.edges)
    .join("path")
    .attr("class", "edge")
    .attr("data-key", (d) => edgeKey(d.from.step, d.from.label, d.to.label))
    .attr("d", edgePath)
    .attr("fill", "none")
    .attr("stroke", EDGE_COLOR)
    .attr("stroke-dasharray", "3 3");

  // gate symbol between columns, clickable to select the step
  const gateSteps = steps.filter(
    (s) => s.step >= graph.from_step && s.step < graph.to_step,
  );
  const symbol = svg
    .selectAll("g.gate-symbol")
    .data(gateSteps)
    .join("g")
    .attr("class", "gate-symbol")
    .attr("data-step", (d) => d.step)
    .attr("cursor", "pointer")
    .attr(
      "transform",
      (d) =>
        `translate(${MARGIN.left + (d.step - graph.from_step) * (NODE_W + COLUMN_GAP) + NODE_W + COLUMN_GAP / 2 - 11},4)`,
    )
    .on("click", (_event, d) => callbacks.onSelectStep(d.step));
  symbol
    .append("rect")
    .attr("width", 22)
    .attr("height", 16)
    .attr("rx", 3)
    .attr("fill", "#f0f0f0")
    .attr("stroke", "#888");
  symbol
    .append("text")
    .attr("x", 11)
    .attr("y", 12)
    .attr("text-anchor", "middle")
    .attr("font-size", 10)
    .text((d) => d.gate.kind === "cnot" ? "cx" : d.gate.kind);
  symbol
    .append("title")
    .text((d) => `step ${d.step}: ${d.gate.kind} on q${d.gate.operands.join(", q")}`);

  const node = svg
    .selectAll("g.node")
    .data(layout.nodes)
    .join("g")
    .attr("class", "node")
    .attr("data-key", (d) => nodeKey(d.step, d.label))
    .attr("transform", (d) => `translate(${d.x},${d.y})`)
    .on("mouseenter", (_event, d) =>
      callbacks.onHover({ step: d.step, label: d.label }),
    )
    .on("mouseleave", () => callbacks.onHover(null));
  node
    .append("rect")
    .attr("width", NODE_W)
    .attr("height", NODE_H)
    .attr("rx", 6)
    .attr("fill", (d) => (d.sign === "positive" ? POSITIVE_FILL : NEGATIVE_FILL))
    .attr("stroke", "#666");
  node
    .append("text")
    .attr("x", NODE_W / 2)
    .attr("y", NODE_H - 4)
    .attr("text-anchor", "middle")
    .attr("font-size", 10)
    .attr("fill", (d) => (d.sign === "positive" ? "#1a1a1a" : "#fff"))
    .text((d) => `|${d.label}⟩`);
}

/** Restyle an already-rendered graph for the hovered node's ancestry; pass
 * null to clear. Returns the ancestry so callers can inspect it. */
export function highlightAncestry(
  container: Element,
  graph: EvolutionDoc,
  target: { step: number; label: string } | null,
): Ancestry | null {
  const svg = d3.select(container).select("svg.evolution");
  const ancestry = target ? traceBack(graph, target.step, target.label) : null;
  svg
    .selectAll<SVGGElement, unknown>("g.node")
    .classed("traced", function () {
      const key = (this as SVGGElement).getAttribute("data-key")!;
      return ancestry !== null && ancestry.nodes.has(key);
    })
    .select("rect")
    .attr("stroke", function () {
      const parent = (this as SVGRectElement).parentElement as Element | null;
      const key = parent?.getAttribute("data-key") ?? "";
      return ancestry !== null && ancestry.nodes.has(key) ? TRACE_COLOR : "#666";
    })
    .attr("stroke-width", function () {
      const parent = (this as SVGRectElement).parentElement as Element | null;
      const key = parent?.getAttribute("data-key") ?? "";
      return ancestry !== null && ancestry.nodes.has(key) ? 2.5 : 1;
    });
  svg
    .selectAll<SVGPathElement, unknown>("path.edge")
    .classed("traced", function () {
      const key = (this as SVGPathElement).getAttribute("data-key")!;
      return ancestry !== null && ancestry.edges.has(key);
    })
    .attr("stroke", function () {
      const key = (this as SVGPathElement).getAttribute("data-key")!;
      return ancestry !== null && ancestry.edges.has(key) ? TRACE_COLOR : EDGE_COLOR;
    })
    .attr("stroke-width", function () {
      const key = (this as SVGPathElement).getAttribute("data-key")!;
      return ancestry !== null && ancestry.edges.has(key) ? 2 : 1;
    });
  return ancestry;
}
