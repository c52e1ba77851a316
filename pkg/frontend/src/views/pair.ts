/** Side-by-side dandelion charts for the states before and after one gate,
 * sharing one scale factor; the slider re-derives geometry locally from the
 * fetched points and never refetches. */
import type { DandelionPairDoc, FigureDoc, Pair } from "../api";
import { dandelionChart } from "./dandelion";

export const CHART_SIZE = 260;

function drawFigure(target: Element, figure: FigureDoc, k: number): void {
  target.innerHTML = "";
  const points: Pair[] = figure.elements.map((el) => el.point);
  const names = figure.elements.map((el) => el.label);
  dandelionChart(points, names, target, CHART_SIZE, [0, 0], k);
}

export interface PairCallbacks {
  onScale: (k: number) => void;
}

export function renderDandelionPair(
  container: Element,
  pair: DandelionPairDoc,
  k: number,
  callbacks: PairCallbacks,
): void {
  container.innerHTML = "";

  const caption = document.createElement("div");
  caption.className = "pair-caption";
  caption.textContent = `state before / after step ${pair.step}`;
  container.appendChild(caption);

  const charts = document.createElement("div");
  charts.className = "pair-charts";
  const left = document.createElement("div");
  left.className = "pair-pre";
  const right = document.createElement("div");
  right.className = "pair-post";
  charts.appendChild(left);
  charts.appendChild(right);
  container.appendChild(charts);

  const controls = document.createElement("label");
  controls.className = "k-slider";
  controls.textContent = "circle scale k ";
  const slider = document.createElement("input");
  slider.type = "range";
  slider.min = "0.05";
  slider.max = "1";
  slider.step = "0.05";
  slider.value = String(k);
  const value = document.createElement("span");
  value.className = "k-value";
  value.textContent = k.toFixed(2);
  controls.appendChild(slider);
  controls.appendChild(value);
  container.appendChild(controls);

  const redraw = (factor: number) => {
    value.textContent = factor.toFixed(2);
    drawFigure(left, pair.pre, factor);
    drawFigure(right, pair.post, factor);
  };
  slider.addEventListener("input", () => {
    const factor = Number(slider.value);
    redraw(factor);
    callbacks.onScale(factor);
  });
  redraw(k);
}
