/** Static circuit diagram: one horizontal wire per qubit drawn bottom-to-top
 * (qubit 0 on the bottom row), one column per flattened step, block
 * backgrounds, and click-to-select on every gate glyph. */
import * as d3 from "d3";
import type { CircuitResponse } from "../api";
import { BLOCK_COLORS } from "./summary";

export const COL_W = 34;
export const ROW_H = 30;
export const MARGIN = { top: 26, right: 16, bottom: 10, left: 46 };

export interface CircuitCallbacks {
  onSelectStep: (step: number) => void;
}

export function renderCircuit(
  container: Element,
  doc: CircuitResponse,
  callbacks: CircuitCallbacks,
  selectedStep: number | null = null,
): void {
  d3.select(container).selectAll("*").remove();
  const n = doc.circuit.qubits;
  const width = MARGIN.left + MARGIN.right + doc.steps.length * COL_W;
  const height = MARGIN.top + MARGIN.bottom + n * ROW_H;
  // bottom-to-top: qubit 0 sits on the lowest wire
  const wireY = (q: number) => MARGIN.top + (n - 1 - q) * ROW_H + ROW_H / 2;
  const colX = (step: number) => MARGIN.left + step * COL_W + COL_W / 2;

  const svg = d3
    .select(container)
    .append("svg")
    .attr("class", "circuit")
    .attr("width", width)
    .attr("height", height)
    .attr("viewBox", `0 0 ${width} ${height}`);

  // block backgrounds with names
  const spans = new Map<number, { first: number; last: number; name: string }>();
  for (const step of doc.steps) {
    const block = doc.circuit.blocks[step.block];
    const span = spans.get(step.block);
    if (span) span.last = step.step;
    else spans.set(step.block, { first: step.step, last: step.step, name: block.name });
  }
  const blockG = svg
    .selectAll("g.block")
    .data([...spans.entries()])
    .join("g")
    .attr("class", "block");
  blockG
    .append("rect")
    .attr("x", ([, s]) => colX(s.first) - COL_W / 2 + 2)
    .attr("width", ([, s]) => (s.last - s.first + 1) * COL_W - 4)
    .attr("y", MARGIN.top - 8)
    .attr("height", n * ROW_H + 8)
    .attr("rx", 4)
    .attr("fill", ([b]) => BLOCK_COLORS[b % BLOCK_COLORS.length])
    .attr("fill-opacity", 0.12)
    .attr("stroke", ([b]) => BLOCK_COLORS[b % BLOCK_COLORS.length]);
  blockG
    .append("text")
    .attr("x", ([, s]) => colX(s.first) - COL_W / 2 + 6)
    .attr("y", MARGIN.top - 12)
    .attr("font-size", 10)
    .text(([, s]) => s.name);

  // qubit wires and labels
  for (let q = 0; q < n; q += 1) {
    svg
      .append("line")
      .attr("class", "wire")
      .attr("x1", MARGIN.left - 6)
      .attr("x2", width - MARGIN.right)
      .attr("y1", wireY(q))
      .attr("y2", wireY(q))
      .attr("stroke", "#555");
    svg
      .append("text")
      .attr("x", 8)
      .attr("y", wireY(q) + 4)
      .attr("font-size", 11)
      .text(`q${q}`);
  }

  const gate = svg
    .selectAll("g.gate")
    .data(doc.steps)
    .join("g")
    .attr("class", "gate")
    .attr("data-step", (d) => d.step)
    .attr("cursor", "pointer")
    .on("click", (_event, d) => callbacks.onSelectStep(d.step));

  gate.each(function (d) {
    const g = d3.select(this);
    const x = colX(d.step);
    const selected = d.step === selectedStep;
    const [a, b] = [d.gate.operands[0], d.gate.operands[1] ?? d.gate.operands[0]];
    if (d.gate.kind === "h" || d.gate.kind === "x") {
      g.append("rect")
        .attr("x", x - 11)
        .attr("y", wireY(a) - 11)
        .attr("width", 22)
        .attr("height", 22)
        .attr("fill", selected ? "#ffe9a8" : "#fff")
        .attr("stroke", "#333");
      g.append("text")
        .attr("x", x)
        .attr("y", wireY(a) + 4)
        .attr("text-anchor", "middle")
        .attr("font-size", 11)
        .text(d.gate.kind.toUpperCase());
    } else {
      g.append("line")
        .attr("x1", x).attr("x2", x)
        .attr("y1", wireY(a)).attr("y2", wireY(b))
        .attr("stroke", "#333");
      if (d.gate.kind === "cnot") {
        g.append("circle").attr("cx", x).attr("cy", wireY(a)).attr("r", 4).attr("fill", "#333");
        g.append("circle")
          .attr("cx", x).attr("cy", wireY(b)).attr("r", 8)
          .attr("fill", selected ? "#ffe9a8" : "none").attr("stroke", "#333");
        g.append("line")
          .attr("x1", x - 8).attr("x2", x + 8)
          .attr("y1", wireY(b)).attr("y2", wireY(b)).attr("stroke", "#333");
      } else if (d.gate.kind === "swap") {
        for (const q of [a, b]) {
          g.append("text")
            .attr("x", x).attr("y", wireY(q) + 5)
            .attr("text-anchor", "middle").attr("font-size", 14)
            .text("✕");
        }
      } else {
        // controlled phase: dots on both wires plus the angle
        for (const q of [a, b]) {
          g.append("circle").attr("cx", x).attr("cy", wireY(q)).attr("r", 4)
            .attr("fill", selected ? "#d99a00" : "#333");
        }
        g.append("text")
          .attr("x", x + 3)
          .attr("y", (wireY(a) + wireY(b)) / 2)
          .attr("font-size", 9)
          .text(`${((d.gate.theta ?? 0) / Math.PI).toFixed(2)}π`);
      }
    }
    if (selected) {
      g.append("rect")
        .attr("class", "selected-marker")
        .attr("x", x - COL_W / 2 + 2)
        .attr("y", MARGIN.top - 6)
        .attr("width", COL_W - 4)
        .attr("height", n * ROW_H + 4)
        .attr("fill", "none")
        .attr("stroke", "#d99a00")
        .attr("stroke-width", 1.5);
    }
  });
}
