/** Probability summary: stacked bands per basis state across all states of the
 * circuit (each column stacks to 1), block rectangles along the step axis,
 * creation marks at each state's first alive step, and an x-range brush that
 * reports the selected state-index range. */
import * as d3 from "d3";
import type { SummaryDoc } from "../api";
import { clampBrush } from "../state";

export const WIDTH = 640;
export const HEIGHT = 220;
export const MARGIN = { top: 10, right: 110, bottom: 34, left: 36 };

export const BLOCK_COLORS = d3.schemeTableau10;

export interface SummaryLayer {
  label: string;
  /** [y0, y1] probability bounds per state index (stacked, 0..1). */
  bounds: [number, number][];
}

/** Stack the matrix rows into per-label bands; band order = label order. */
export function stackLayers(summary: SummaryDoc): SummaryLayer[] {
  const layers: SummaryLayer[] = summary.labels.map((label) => ({
    label,
    bounds: [],
  }));
  for (const row of summary.matrix) {
    let acc = 0;
    row.forEach((p, i) => {
      layers[i].bounds.push([acc, acc + p]);
      acc += p;
    });
  }
  return layers;
}

export interface SummaryCallbacks {
  onBrush: (range: [number, number] | null) => void;
}

export function renderSummary(
  container: Element,
  summary: SummaryDoc,
  callbacks: SummaryCallbacks,
): void {
  d3.select(container).selectAll("*").remove();
  const svg = d3
    .select(container)
    .append("svg")
    .attr("class", "summary")
    .attr("width", WIDTH)
    .attr("height", HEIGHT)
    .attr("viewBox", `0 0 ${WIDTH} ${HEIGHT}`);

  const plotW = WIDTH - MARGIN.left - MARGIN.right;
  const plotH = HEIGHT - MARGIN.top - MARGIN.bottom;
  const g = svg.append("g").attr("transform", `translate(${MARGIN.left},${MARGIN.top})`);
  const x = d3.scaleLinear().domain([0, summary.step_count]).range([0, plotW]);
  const y = d3.scaleLinear().domain([0, 1]).range([plotH, 0]);
  const color = d3
    .scaleOrdinal<string, string>(d3.schemeSet3)
    .domain(summary.labels);

  const area = d3
    .area<[number, number]>()
    .x((_, i) => x(i))
    .y0((d) => y(d[0]))
    .y1((d) => y(d[1]));

  const layers = stackLayers(summary);
  g.selectAll("path.band")
    .data(layers)
    .join("path")
    .attr("class", "band")
    .attr("data-label", (d) => d.label)
    .attr("d", (d) => area(d.bounds))
    .attr("fill", (d) => color(d.label))
    .attr("fill-opacity", 0.85)
    .attr("stroke", "#fff")
    .attr("stroke-width", 0.5)
    .append("title")
    .text((d) => `|${d.label}⟩`);

  // block spans under the x axis; a block over gate steps [a, b] covers the
  // state interval [a, b + 1]
  g.selectAll("rect.block-span")
    .data(summary.block_spans)
    .join("rect")
    .attr("class", "block-span")
    .attr("data-block", (d) => d.block)
    .attr("x", (d) => x(d.first_step))
    .attr("width", (d) => x(d.last_step + 1) - x(d.first_step))
    .attr("y", plotH + 6)
    .attr("height", 10)
    .attr("fill", (d) => BLOCK_COLORS[d.block % BLOCK_COLORS.length])
    .append("title")
    .text((d) => d.name);

  // creation marks: first state where a basis state becomes alive
  const creations = summary.labels
    .map((label) => ({ label, step: summary.creations[label] }))
    .filter((d): d is { label: string; step: number } => d.step !== null);
  const marks = g
    .selectAll("g.creation")
    .data(creations)
    .join("g")
    .attr("class", "creation")
    .attr("data-label", (d) => d.label)
    .attr(
      "transform",
      (d) => {
        const layer = layers[summary.labels.indexOf(d.label)];
        const [y0, y1] = layer.bounds[d.step];
        return `translate(${x(d.step)},${y((y0 + y1) / 2)})`;
      },
    );
  marks.append("circle").attr("r", 4).attr("fill", "#fff").attr("stroke", "#555");
  marks
    .append("text")
    .attr("x", 6)
    .attr("dy", 3)
    .attr("font-size", 9)
    .text((d) => `|${d.label}⟩`);

  // drag-to-brush overlay emitting clamped state-index ranges
  const overlay = g
    .append("rect")
    .attr("class", "brush-overlay")
    .attr("width", plotW)
    .attr("height", plotH)
    .attr("fill", "transparent")
    .attr("cursor", "crosshair");
  const selection = g
    .append("rect")
    .attr("class", "brush-selection")
    .attr("y", 0)
    .attr("height", plotH)
    .attr("fill", "#777")
    .attr("fill-opacity", 0.15)
    .attr("stroke", "#777")
    .attr("display", "none");

  let anchor: number | null = null;
  const toStep = (px: number) => x.invert(Math.max(0, Math.min(plotW, px)));
  // px relative to the overlay; avoids getScreenCTM, which test DOMs lack
  const localX = (event: MouseEvent) =>
    event.clientX - (overlay.node() as Element).getBoundingClientRect().left;

  overlay
    .on("pointerdown", (event: MouseEvent) => {
      anchor = localX(event);
    })
    .on("pointermove", (event: MouseEvent) => {
      if (anchor === null) return;
      const current = localX(event);
      const lo = Math.min(anchor, current);
      const hi = Math.max(anchor, current);
      selection
        .attr("display", null)
        .attr("x", lo)
        .attr("width", Math.max(0, hi - lo));
    })
    .on("pointerup", (event: MouseEvent) => {
      if (anchor === null) return;
      const current = localX(event);
      const range = clampBrush(
        [toStep(Math.min(anchor, current)), toStep(Math.max(anchor, current))],
        summary.step_count,
      );
      anchor = null;
      if (range[1] - range[0] < 1) {
        selection.attr("display", "none");
        callbacks.onBrush(null); // click without drag clears the brush
      } else {
        callbacks.onBrush(range);
      }
    });
}
