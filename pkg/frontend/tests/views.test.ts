import { describe, expect, it, vi } from "vitest";
import type {
  CircuitResponse,
  EvolutionDoc,
  ExplanationDoc,
  SummaryDoc,
} from "../src/api";
import { renderCircuit } from "../src/views/circuit";
import {
  NEGATIVE_FILL,
  POSITIVE_FILL,
  TRACE_COLOR,
  highlightAncestry,
  layoutEvolution,
  renderEvolution,
} from "../src/views/evolution";
import { renderExplanation } from "../src/views/explanation";
import { HEIGHT, MARGIN, renderSummary, stackLayers } from "../src/views/summary";
import circuitRaw from "./fixtures/grover_circuit.json";
import oracleRaw from "./fixtures/grover_evolution_2_5.json";
import explanationRaw from "./fixtures/grover_explanation_s0.json";
import summaryRaw from "./fixtures/grover_summary.json";

const circuitDoc = circuitRaw as unknown as CircuitResponse;
const oracle = oracleRaw as unknown as EvolutionDoc;
const explanation = explanationRaw as unknown as ExplanationDoc;
const summary = summaryRaw as unknown as SummaryDoc;

describe("summary view", () => {
  it("stacks every column to exactly one", () => {
    const layers = stackLayers(summary);
    for (let s = 0; s <= summary.step_count; s += 1) {
      let top = 0;
      for (const layer of layers) {
        expect(layer.bounds[s][0]).toBeCloseTo(top, 9);
        top = layer.bounds[s][1];
      }
      expect(top).toBeCloseTo(1, 9);
    }
  });

  it("renders bands, block spans and creation marks", () => {
    const host = document.createElement("div");
    renderSummary(host, summary, { onBrush: () => {} });
    expect(host.querySelectorAll("path.band")).toHaveLength(4);
    expect(host.querySelectorAll("rect.block-span")).toHaveLength(3);
    const creations = [...host.querySelectorAll("g.creation")].map((el) =>
      el.getAttribute("data-label"),
    );
    expect(creations?.sort()).toEqual(["00", "01", "10", "11"]);
  });

  it("emits a clamped state range when dragged", () => {
    const host = document.createElement("div");
    const onBrush = vi.fn();
    renderSummary(host, summary, { onBrush });
    const overlay = host.querySelector("rect.brush-overlay")!;
    const plotW = 640 - MARGIN.left - MARGIN.right;
    const px = (step: number) => (step / summary.step_count) * plotW;
    overlay.dispatchEvent(new MouseEvent("pointerdown", { clientX: px(2), bubbles: true }));
    overlay.dispatchEvent(new MouseEvent("pointermove", { clientX: px(4), bubbles: true }));
    overlay.dispatchEvent(new MouseEvent("pointerup", { clientX: px(5), bubbles: true }));
    expect(onBrush).toHaveBeenCalledWith([2, 5]);
  });

  it("keeps the svg height fixed regardless of content", () => {
    const host = document.createElement("div");
    renderSummary(host, summary, { onBrush: () => {} });
    expect(host.querySelector("svg.summary")!.getAttribute("height")).toBe(String(HEIGHT));
  });
});

describe("evolution view", () => {
  it("places higher-probability hubs higher up", () => {
    const layout = layoutEvolution(oracle);
    const at3 = layout.hubs.filter((h) => h.step === 3);
    const sorted = [...at3].sort((a, b) => b.prob - a.prob);
    for (let i = 1; i < sorted.length; i += 1) {
      expect(sorted[i - 1].y).toBeLessThan(sorted[i].y);
    }
  });

  it("renders nodes with sign-class fills and dotted edges", () => {
    const host = document.createElement("div");
    renderEvolution(host, oracle, circuitDoc.steps, {
      onHover: () => {},
      onSelectStep: () => {},
    });
    const fills = new Map(
      [...host.querySelectorAll("g.node")].map((node) => [
        node.getAttribute("data-key"),
        node.querySelector("rect")!.getAttribute("fill"),
      ]),
    );
    expect(fills.get("5:11")).toBe(NEGATIVE_FILL); // sign flipped by the oracle
    expect(fills.get("5:00")).toBe(POSITIVE_FILL);
    for (const edge of host.querySelectorAll("path.edge")) {
      expect(edge.getAttribute("stroke-dasharray")).toBe("3 3");
    }
    expect(host.querySelectorAll("g.gate-symbol")).toHaveLength(3);
  });

  it("highlights exactly the hovered ancestry in red", () => {
    const host = document.createElement("div");
    renderEvolution(host, oracle, circuitDoc.steps, {
      onHover: () => {},
      onSelectStep: () => {},
    });
    const ancestry = highlightAncestry(host, oracle, { step: 5, label: "11" })!;
    const traced = [...host.querySelectorAll("g.node.traced")].map((n) =>
      n.getAttribute("data-key"),
    );
    expect(traced.sort()).toEqual([...ancestry.nodes].sort());
    for (const node of host.querySelectorAll("g.node.traced rect")) {
      expect(node.getAttribute("stroke")).toBe(TRACE_COLOR);
    }
    // clearing the hover restores every stroke
    highlightAncestry(host, oracle, null);
    expect(host.querySelectorAll("g.node.traced")).toHaveLength(0);
  });

  it("reports hovers and step selections", () => {
    const host = document.createElement("div");
    const onHover = vi.fn();
    const onSelectStep = vi.fn();
    renderEvolution(host, oracle, circuitDoc.steps, { onHover, onSelectStep });
    const node = host.querySelector('g.node[data-key="5:11"]')!;
    node.dispatchEvent(new MouseEvent("mouseenter"));
    expect(onHover).toHaveBeenCalledWith({ step: 5, label: "11" });
    const symbol = host.querySelector('g.gate-symbol[data-step="3"]')!;
    symbol.dispatchEvent(new MouseEvent("click", { bubbles: true }));
    expect(onSelectStep).toHaveBeenCalledWith(3);
  });
});

describe("explanation view", () => {
  it("lays out initial / operation / final rows per qubit", () => {
    const host = document.createElement("div");
    renderExplanation(host, explanation);
    const rows = host.querySelectorAll("table.explanation tr");
    expect(rows).toHaveLength(4); // header + three parts
    const finalCells = [...rows[3].querySelectorAll("td")].map((td) => td.textContent);
    expect(finalCells[1]).toBe("|0⟩ |1⟩"); // hadamard row: two finals
    expect(finalCells[2]).toBe("|0⟩");
    expect(host.querySelectorAll(".connector.none")).toHaveLength(1);
    expect(host.textContent).toContain("|00⟩");
  });
});

describe("circuit view", () => {
  it("draws wires bottom-to-top with qubit 0 on the lowest row", () => {
    const host = document.createElement("div");
    renderCircuit(host, circuitDoc, { onSelectStep: () => {} });
    const labels = [...host.querySelectorAll("svg.circuit > text")];
    const q0 = labels.find((t) => t.textContent === "q0")!;
    const q1 = labels.find((t) => t.textContent === "q1")!;
    expect(Number(q0.getAttribute("y"))).toBeGreaterThan(Number(q1.getAttribute("y")));
  });

  it("selects a step on gate click and marks it", () => {
    const host = document.createElement("div");
    const onSelectStep = vi.fn();
    renderCircuit(host, circuitDoc, { onSelectStep }, 2);
    expect(host.querySelectorAll("rect.selected-marker")).toHaveLength(1);
    const gate = host.querySelector('g.gate[data-step="6"]')!;
    gate.dispatchEvent(new MouseEvent("click", { bubbles: true }));
    expect(onSelectStep).toHaveBeenCalledWith(6);
  });

  it("shows one block background per block", () => {
    const host = document.createElement("div");
    renderCircuit(host, circuitDoc, { onSelectStep: () => {} });
    expect(host.querySelectorAll("g.block")).toHaveLength(3);
  });
});
