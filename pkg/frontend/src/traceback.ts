/** Ancestry computation over a fetched evolution graph: walk the edges
 * backwards from one node and collect everything that fed it. */
import type { EvolutionDoc } from "./api";

export interface Ancestry {
  /** Node keys "step:label" of the hovered node and all its ancestors. */
  nodes: Set<string>;
  /** Edge keys "step:srcLabel>dstLabel" lying on ancestry paths. */
  edges: Set<string>;
}

export function nodeKey(step: number, label: string): string {
  return `${step}:${label}`;
}

export function edgeKey(step: number, src: string, dst: string): string {
  return `${step}:${src}>${dst}`;
}

export function traceBack(
  graph: EvolutionDoc,
  step: number,
  label: string,
): Ancestry {
  const exists = graph.nodes.some((n) => n.step === step && n.label === label);
  if (!exists) {
    throw new Error(`no node (step=${step}, label=${label}) in graph`);
  }
  const incoming = new Map<string, { step: number; label: string }[]>();
  for (const edge of graph.edges) {
    const key = nodeKey(edge.to.step, edge.to.label);
    const list = incoming.get(key) ?? [];
    list.push({ step: edge.from.step, label: edge.from.label });
    incoming.set(key, list);
  }

  const nodes = new Set<string>();
  const frontier: { step: number; label: string }[] = [{ step, label }];
  while (frontier.length > 0) {
    const current = frontier.pop()!;
    const key = nodeKey(current.step, current.label);
    if (nodes.has(key)) continue;
    nodes.add(key);
    for (const parent of incoming.get(key) ?? []) frontier.push(parent);
  }

  const edges = new Set<string>();
  for (const edge of graph.edges) {
    if (
      nodes.has(nodeKey(edge.to.step, edge.to.label)) &&
      nodes.has(nodeKey(edge.from.step, edge.from.label))
    ) {
      edges.add(edgeKey(edge.from.step, edge.from.label, edge.to.label));
    }
  }
  return { nodes, edges };
}

/** Labels present in the earliest step of an ancestry: the origins the
 * hovered state was generated from. */
export function originLabels(graph: EvolutionDoc, ancestry: Ancestry): string[] {
  let first = Infinity;
  for (const key of ancestry.nodes) {
    const step = Number(key.split(":")[0]);
    if (step < first) first = step;
  }
  const labels: string[] = [];
  for (const key of ancestry.nodes) {
    const [step, label] = key.split(":");
    if (Number(step) === first) labels.push(label);
  }
  return labels.sort();
}
