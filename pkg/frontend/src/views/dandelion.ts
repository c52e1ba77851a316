/** Dandelion chart: basis-state amplitudes as points in the complex plane,
 * each carrying a probability-proportional circle that shrinks with a shared
 * factor while the point stays on its edge.
 *
 * `dandelionChart` is the reusable entry point; it takes the state vector as
 * [re, im] pairs, the basis-state names, the container to draw into, the chart
 * size in pixels, the [x, y] position offset, and the circle shrink factor.
 */
import * as d3 from "d3";
import type { FigureDoc, Pair } from "../api";

export interface ElementGeometry {
  label: string;
  point: Pair;
  r0: number;
  center: Pair;
  radius: number;
  area: number;
  stickReal: [Pair, Pair];
  stickImag: [Pair, Pair];
}

const EPS_ALIVE = 1e-9;

export const STICK_REAL_COLOR = "#2e8b57";
export const STICK_IMAG_COLOR = "#d9534f";
export const CIRCLE_COLOR = "#6baed6";

/** Circle geometry for one amplitude at scale factor k: radius k*r0 around
 * center (1-k)*point keeps the point on the circle's edge for every k. */
export function elementGeometry(
  label: string,
  amp: Pair,
  factor: number,
): ElementGeometry {
  const [x, y] = amp;
  const r0 = Math.hypot(x, y);
  const radius = factor * r0;
  const center: Pair = [(1 - factor) * x, (1 - factor) * y];
  return {
    label,
    point: [x, y],
    r0,
    center,
    radius,
    area: Math.PI * radius * radius,
    stickReal: [
      [x, y],
      [0, y],
    ],
    stickImag: [
      [x, y],
      [x, 0],
    ],
  };
}

export function figureGeometry(
  stateVector: Pair[],
  names: string[],
  factor: number,
): ElementGeometry[] {
  const elements: ElementGeometry[] = [];
  stateVector.forEach((amp, i) => {
    const prob = amp[0] * amp[0] + amp[1] * amp[1];
    if (prob > EPS_ALIVE) {
      elements.push(elementGeometry(names[i] ?? String(i), amp, factor));
    }
  });
  return elements;
}

/** Re-derive drawable geometry from a fetched figure at a new factor without
 * touching the fetched values (the slider never refetches). */
export function rescaleFigure(figure: FigureDoc, factor: number): ElementGeometry[] {
  return figure.elements.map((el) => elementGeometry(el.label, el.point, factor));
}

/** All basis-state names for the given number of digits, in index order
 * ("00", "01", "10", "11" for two digits). */
export function generateStates(numDigits: number): string[] {
  const names: string[] = [];
  for (let i = 0; i < 2 ** numDigits; i += 1) {
    names.push(i.toString(2).padStart(numDigits, "0"));
  }
  return names;
}

export function dandelionChart(
  stateVector: Pair[],
  names: string[],
  container: Element,
  size: number,
  position: Pair,
  factor: number,
): void {
  const elements = figureGeometry(stateVector, names, factor);
  const extent = Math.max(
    1,
    ...elements.flatMap((el) => [Math.abs(el.point[0]), Math.abs(el.point[1])]),
  );
  const margin = 0.1 * size;
  const plot = size - 2 * margin;
  const sx = d3.scaleLinear().domain([-extent, extent]).range([0, plot]);
  const sy = d3.scaleLinear().domain([-extent, extent]).range([plot, 0]);
  const px = (w: number) => sx(w);
  const py = (w: number) => sy(w);
  const plen = (w: number) => (w * plot) / (2 * extent);

  const root = d3
    .select(container)
    .append("svg")
    .attr("class", "dandelion")
    .attr("width", size)
    .attr("height", size)
    .attr("viewBox", `0 0 ${size} ${size}`);
  const g = root
    .append("g")
    .attr("transform", `translate(${position[0] + margin},${position[1] + margin})`);

  g.append("line")
    .attr("class", "axis-x")
    .attr("x1", px(-extent)).attr("y1", py(0))
    .attr("x2", px(extent)).attr("y2", py(0))
    .attr("stroke", "#444");
  g.append("line")
    .attr("class", "axis-y")
    .attr("x1", px(0)).attr("y1", py(-extent))
    .attr("x2", px(0)).attr("y2", py(extent))
    .attr("stroke", "#444");

  const entity = g
    .selectAll("g.state")
    .data(elements, (d) => (d as ElementGeometry).label)
    .join("g")
    .attr("class", "state")
    .attr("data-label", (d) => d.label);

  entity
    .append("line")
    .attr("class", "stem")
    .attr("x1", px(0)).attr("y1", py(0))
    .attr("x2", (d) => px(d.point[0])).attr("y2", (d) => py(d.point[1]))
    .attr("stroke", "#999");
  entity
    .append("line")
    .attr("class", "stick-real")
    .attr("x1", (d) => px(d.stickReal[0][0])).attr("y1", (d) => py(d.stickReal[0][1]))
    .attr("x2", (d) => px(d.stickReal[1][0])).attr("y2", (d) => py(d.stickReal[1][1]))
    .attr("stroke", STICK_REAL_COLOR)
    .attr("stroke-dasharray", "4 3");
  entity
    .append("line")
    .attr("class", "stick-imag")
    .attr("x1", (d) => px(d.stickImag[0][0])).attr("y1", (d) => py(d.stickImag[0][1]))
    .attr("x2", (d) => px(d.stickImag[1][0])).attr("y2", (d) => py(d.stickImag[1][1]))
    .attr("stroke", STICK_IMAG_COLOR)
    .attr("stroke-dasharray", "4 3");
  entity
    .append("circle")
    .attr("class", "prob-circle")
    .attr("cx", (d) => px(d.center[0]))
    .attr("cy", (d) => py(d.center[1]))
    .attr("r", (d) => plen(d.radius))
    .attr("fill", CIRCLE_COLOR)
    .attr("fill-opacity", 0.25)
    .attr("stroke", CIRCLE_COLOR);
  entity
    .append("circle")
    .attr("class", "amp-point")
    .attr("cx", (d) => px(d.point[0]))
    .attr("cy", (d) => py(d.point[1]))
    .attr("r", 3)
    .attr("fill", "#222");
  entity
    .append("text")
    .attr("class", "state-label")
    .attr("x", (d) => px(d.point[0]) + 6)
    .attr("y", (d) => py(d.point[1]) - 6)
    .attr("font-size", 11)
    .text((d) => `|${d.label}⟩`);
}
