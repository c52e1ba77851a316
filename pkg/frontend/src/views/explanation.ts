/** Gate explanation: a three-row table (initial state, operation, final state)
 * with one column per qubit; qubits the gate does not touch get a dotted grey
 * connector. */
import type { ExplanationDoc } from "../api";

const OPERATION_GLYPHS: Record<string, string> = {
  hadamard: "H",
  not: "X",
  control: "●", // filled dot
  target: "⊕", // circled plus
  swap_pair: "✕",
  phase: "θ",
  none: "",
};

export function renderExplanation(container: Element, expl: ExplanationDoc): void {
  container.innerHTML = "";
  const caption = document.createElement("div");
  caption.className = "explanation-caption";
  const theta = expl.gate.theta !== undefined ? `(${expl.gate.theta.toFixed(3)})` : "";
  caption.textContent =
    `step ${expl.step}: ${expl.gate.kind}${theta} on ` +
    `q${expl.gate.operands.join(", q")} applied to |${expl.input_label}⟩ ` +
    `→ ${expl.output_labels.map((l) => `|${l}⟩`).join(" ")}`;
  container.appendChild(caption);

  const table = document.createElement("table");
  table.className = "explanation";

  const header = table.insertRow();
  header.insertCell().textContent = "";
  for (const row of expl.rows) {
    const cell = header.insertCell();
    cell.textContent = `q${row.qubit}`;
    cell.className = "qubit-head";
  }

  const initial = table.insertRow();
  initial.className = "initial";
  initial.insertCell().textContent = "initial";
  for (const row of expl.rows) {
    initial.insertCell().textContent = `|${row.initial}⟩`;
  }

  const operation = table.insertRow();
  operation.className = "operation";
  operation.insertCell().textContent = "operation";
  for (const row of expl.rows) {
    const cell = operation.insertCell();
    cell.className = `op op-${row.operation}`;
    const connector = document.createElement("span");
    connector.className = row.operation === "none" ? "connector none" : "connector";
    connector.textContent = OPERATION_GLYPHS[row.operation] ?? row.operation;
    cell.appendChild(connector);
  }

  const final = table.insertRow();
  final.className = "final";
  final.insertCell().textContent = "final";
  for (const row of expl.rows) {
    const cell = final.insertCell();
    cell.textContent = row.finals.map((f) => `|${f}⟩`).join(" ");
    if (row.finals.length === 2) cell.className = "superposed";
  }

  container.appendChild(table);
}
