import { describe, expect, it } from "vitest";
import type { EvolutionDoc } from "../src/api";
import { nodeKey, originLabels, traceBack } from "../src/traceback";
import oracleRange from "./fixtures/grover_evolution_2_5.json";
import fullRange from "./fixtures/grover_evolution_full.json";

const oracle = oracleRange as unknown as EvolutionDoc;
const full = fullRange as unknown as EvolutionDoc;

describe("traceBack", () => {
  it("finds the merged origins of the oracle-phase |11>", () => {
    const ancestry = traceBack(oracle, 5, "11");
    expect([...ancestry.nodes].sort()).toEqual(
      ["2:10", "2:11", "3:10", "4:11", "5:11"].sort(),
    );
    expect(originLabels(oracle, ancestry)).toEqual(["10", "11"]);
  });

  it("keeps every in-edge of every ancestor (closure)", () => {
    const ancestry = traceBack(full, 16, "11");
    for (const edge of full.edges) {
      const dstKey = nodeKey(edge.to.step, edge.to.label);
      if (ancestry.nodes.has(dstKey)) {
        expect(ancestry.nodes.has(nodeKey(edge.from.step, edge.from.label))).toBe(true);
      }
    }
  });

  it("returns just the node itself at the first step", () => {
    const ancestry = traceBack(oracle, 2, "01");
    expect([...ancestry.nodes]).toEqual(["2:01"]);
    expect(ancestry.edges.size).toBe(0);
  });

  it("rejects nodes that are not in the graph", () => {
    expect(() => traceBack(oracle, 3, "11")).toThrow(/no node/);
  });

  it("never includes edges leaving the ancestry", () => {
    const ancestry = traceBack(oracle, 4, "00");
    for (const key of ancestry.edges) {
      const [step, rest] = key.split(":");
      const [src, dst] = rest.split(">");
      expect(ancestry.nodes.has(`${step}:${src}`)).toBe(true);
      expect(ancestry.nodes.has(`${Number(step) + 1}:${dst}`)).toBe(true);
    }
  });
});
