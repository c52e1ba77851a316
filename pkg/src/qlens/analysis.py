"""Derived explanation products over a simulation trace.

Three products: the probability summary (per-step probability matrix with
block spans and creation marks), the basis-state evolution graph (alive states
per step, contribution edges induced by the gate unitaries, equal-probability
hubs) and per-basis-state gate explanations (qubit-level before/op/after rows).

Tolerances: a basis state exists as a node when its probability exceeds
EPS_ALIVE; an edge exists when the contribution modulus exceeds EPS_EDGE;
hub grouping rounds probabilities to GROUP_DECIMALS places and groups equal
values, which keeps the partition transitive and order-independent.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circuit import BasisLabel, Gate, GateKind, Step, gate_action
from .errors import DeadStateError, NodeNotFoundError, SchemaError, StepRangeError
from .statevec import StateVector, StepTrace

EPS_ALIVE = 1e-9
EPS_EDGE = 1e-9
EPS_GROUP = 1e-6
GROUP_DECIMALS = 6

SIGN_POSITIVE = "positive"
SIGN_NEGATIVE = "negative"


# ---------------------------------------------------------------------------
# probability summary


@dataclass(frozen=True)
class BlockSpan:
    block_index: int
    name: str
    first_step: int
    last_step: int


@dataclass(frozen=True)
class ProbabilitySummary:
    num_qubits: int
    step_count: int
    labels: tuple[str, ...]
    matrix: np.ndarray  # shape (step_count + 1, 2^n), row s = state index s
    block_spans: tuple[BlockSpan, ...]
    creations: dict[str, int | None]  # label -> first alive state index, None if never


def build_summary(trace: StepTrace) -> ProbabilitySummary:
    n = trace.num_qubits
    matrix = np.vstack(trace.probs)
    matrix.setflags(write=False)
    labels = tuple(format(i, f"0{n}b") for i in range(1 << n))

    spans: list[BlockSpan] = []
    for step in trace.steps:
        if spans and spans[-1].block_index == step.block_index:
            spans[-1] = BlockSpan(step.block_index, spans[-1].name,
                                  spans[-1].first_step, step.step_index)
        else:
            spans.append(BlockSpan(step.block_index,
                                   trace.circuit.blocks[step.block_index].name,
                                   step.step_index, step.step_index))

    creations: dict[str, int | None] = {}
    for i, label in enumerate(labels):
        alive_steps = np.nonzero(matrix[:, i] > EPS_ALIVE)[0]
        creations[label] = int(alive_steps[0]) if alive_steps.size else None

    return ProbabilitySummary(num_qubits=n, step_count=trace.step_count,
                              labels=labels, matrix=matrix,
                              block_spans=tuple(spans), creations=creations)


# ---------------------------------------------------------------------------
# evolution graph


@dataclass(frozen=True)
class EvolutionNode:
    step: int  # state index: 0 = initial, s + 1 = after gate step s
    index: int
    label: str
    amp: complex
    prob: float
    sign_class: str

    @property
    def key(self) -> tuple[int, int]:
        return (self.step, self.index)


@dataclass(frozen=True)
class EvolutionEdge:
    step: int  # gate step s; connects state s -> state s + 1
    src: int
    dst: int
    contribution: complex


@dataclass(frozen=True)
class Hub:
    step: int
    prob: float  # shared probability, rounded to GROUP_DECIMALS
    indices: tuple[int, ...]


@dataclass(frozen=True)
class EvolutionGraph:
    num_qubits: int
    from_step: int
    to_step: int
    nodes: tuple[EvolutionNode, ...]
    edges: tuple[EvolutionEdge, ...]
    hubs: tuple[Hub, ...]

    def node_at(self, step: int, index: int) -> EvolutionNode | None:
        return self._by_key.get((step, index))

    def in_edges(self, step: int, index: int) -> tuple[EvolutionEdge, ...]:
        return tuple(self._incoming.get((step, index), ()))

    def __post_init__(self):
        object.__setattr__(self, "_by_key", {node.key: node for node in self.nodes})
        incoming: dict[tuple[int, int], list[EvolutionEdge]] = {}
        for edge in self.edges:
            incoming.setdefault((edge.step + 1, edge.dst), []).append(edge)
        object.__setattr__(self, "_incoming", incoming)


def _sign_class(amp: complex) -> str:
    return SIGN_POSITIVE if amp.real >= 0 else SIGN_NEGATIVE


def _alive_indices(probs: np.ndarray) -> list[int]:
    return [int(i) for i in np.nonzero(probs > EPS_ALIVE)[0]]


def _node(trace: StepTrace, state_index: int, basis_index: int) -> EvolutionNode:
    amp = complex(trace.states[state_index].amps[basis_index])
    return EvolutionNode(
        step=state_index,
        index=basis_index,
        label=format(basis_index, f"0{trace.num_qubits}b"),
        amp=amp,
        prob=float(trace.probs[state_index][basis_index]),
        sign_class=_sign_class(amp),
    )


def _hubs_for(step: int, nodes: list[EvolutionNode]) -> list[Hub]:
    groups: dict[float, list[int]] = {}
    for node in nodes:
        groups.setdefault(round(node.prob, GROUP_DECIMALS), []).append(node.index)
    return [Hub(step=step, prob=prob, indices=tuple(sorted(indices)))
            for prob, indices in sorted(groups.items(), key=lambda kv: -kv[0])]


def build_evolution(trace: StepTrace, from_step: int, to_step: int) -> EvolutionGraph:
    """Evolution graph over state indices [from_step, to_step].

    Nodes are the alive basis states of every state in the range. For each gate
    step s in [from_step, to_step) an edge x -> y is emitted when x is alive at
    s, the contribution amp(x) * U[y, x] has modulus above EPS_EDGE, and y is
    still alive at s + 1 (outputs annihilated by interference get no node and
    no incident edges).
    """
    if not 0 <= from_step <= to_step <= trace.step_count:
        raise StepRangeError(
            f"evolution range [{from_step}, {to_step}] outside [0, {trace.step_count}]")
    n = trace.num_qubits

    nodes: list[EvolutionNode] = []
    hubs: list[Hub] = []
    alive: dict[int, list[int]] = {}
    for s in range(from_step, to_step + 1):
        alive[s] = _alive_indices(trace.probs[s])
        step_nodes = [_node(trace, s, i) for i in alive[s]]
        nodes.extend(step_nodes)
        hubs.extend(_hubs_for(s, step_nodes))

    edges: list[EvolutionEdge] = []
    for s in range(from_step, to_step):
        gate = trace.steps[s].gate
        alive_next = set(alive[s + 1])
        for x in alive[s]:
            amp_x = complex(trace.states[s].amps[x])
            for y, coeff in gate_action(gate, n, x):
                contribution = amp_x * coeff
                if abs(contribution) > EPS_EDGE and y in alive_next:
                    edges.append(EvolutionEdge(step=s, src=x, dst=y,
                                               contribution=contribution))

    return EvolutionGraph(num_qubits=n, from_step=from_step, to_step=to_step,
                          nodes=tuple(nodes), edges=tuple(edges), hubs=tuple(hubs))


def trace_back(graph: EvolutionGraph, step: int, index: int) -> EvolutionGraph:
    """Ancestry sub-graph of one node: the node plus everything reachable over
    reversed edges, ordered by (step, basis index)."""
    target = graph.node_at(step, index)
    if target is None:
        raise NodeNotFoundError(f"no node (step={step}, index={index}) in graph")

    keep: set[tuple[int, int]] = set()
    frontier = [target.key]
    while frontier:
        key = frontier.pop()
        if key in keep:
            continue
        keep.add(key)
        for edge in graph.in_edges(*key):
            frontier.append((edge.step, edge.src))

    nodes = tuple(sorted((n for n in graph.nodes if n.key in keep),
                         key=lambda n: n.key))
    edges = tuple(e for e in graph.edges
                  if (e.step + 1, e.dst) in keep and (e.step, e.src) in keep)
    hubs: list[Hub] = []
    for s in sorted({n.step for n in nodes}):
        hubs.extend(_hubs_for(s, [n for n in nodes if n.step == s]))
    return EvolutionGraph(num_qubits=graph.num_qubits,
                          from_step=graph.from_step, to_step=target.step,
                          nodes=nodes, edges=edges, hubs=tuple(hubs))


# ---------------------------------------------------------------------------
# gate explanation


OP_HADAMARD = "hadamard"
OP_NOT = "not"
OP_CONTROL = "control"
OP_TARGET = "target"
OP_SWAP_PAIR = "swap_pair"
OP_PHASE = "phase"
OP_NONE = "none"


@dataclass(frozen=True)
class QubitRow:
    qubit: int
    initial: str  # "0" or "1"
    operation: str
    finals: tuple[str, ...]


@dataclass(frozen=True)
class GateExplanation:
    step: int
    gate: Gate
    input_label: str
    rows: tuple[QubitRow, ...]
    output_labels: tuple[str, ...]


def explain_action(gate: Gate, num_qubits: int, bits: str) -> tuple[tuple[QubitRow, ...], tuple[str, ...]]:
    """Qubit-level rows and full output labels for one gate on one basis label.

    Pure on (gate, label); aliveness is the caller's concern.
    """
    rows: list[QubitRow] = []
    operations = {q: OP_NONE for q in range(num_qubits)}
    finals = {q: (bits[q],) for q in range(num_qubits)}
    kind = gate.kind

    if kind is GateKind.H:
        q = gate.operands[0]
        operations[q] = OP_HADAMARD
        finals[q] = ("0", "1")
        outputs = (bits[:q] + "0" + bits[q + 1:], bits[:q] + "1" + bits[q + 1:])
    elif kind is GateKind.X:
        q = gate.operands[0]
        operations[q] = OP_NOT
        flipped = "1" if bits[q] == "0" else "0"
        finals[q] = (flipped,)
        outputs = (bits[:q] + flipped + bits[q + 1:],)
    elif kind is GateKind.CNOT:
        c, t = gate.operands
        operations[c] = OP_CONTROL
        operations[t] = OP_TARGET
        if bits[c] == "1":
            flipped = "1" if bits[t] == "0" else "0"
            finals[t] = (flipped,)
        out = list(bits)
        out[t] = finals[t][0]
        outputs = ("".join(out),)
    elif kind is GateKind.SWAP:
        a, b = gate.operands
        operations[a] = operations[b] = OP_SWAP_PAIR
        finals[a], finals[b] = (bits[b],), (bits[a],)
        out = list(bits)
        out[a], out[b] = bits[b], bits[a]
        outputs = ("".join(out),)
    elif kind is GateKind.CP:
        c, t = gate.operands
        operations[c] = operations[t] = OP_PHASE
        outputs = (bits,)
    else:
        raise SchemaError(f"unknown gate kind {kind!r}")

    for q in range(num_qubits):
        rows.append(QubitRow(qubit=q, initial=bits[q],
                             operation=operations[q], finals=finals[q]))
    return tuple(rows), outputs


def explain_gate(trace: StepTrace, step: int, label: BasisLabel | str) -> GateExplanation:
    """Explain one gate step acting on one alive input basis state."""
    if not 0 <= step < trace.step_count:
        raise StepRangeError(f"step {step} outside [0, {trace.step_count})")
    bits = label.bits if isinstance(label, BasisLabel) else label
    if len(bits) != trace.num_qubits or any(c not in "01" for c in bits):
        raise SchemaError(f"label {bits!r} is not a {trace.num_qubits}-bit basis label")
    index = int(bits, 2)
    if trace.probs[step][index] <= EPS_ALIVE:
        raise DeadStateError(f"basis state |{bits}> has no probability at step {step}")
    gate = trace.steps[step].gate
    rows, outputs = explain_action(gate, trace.num_qubits, bits)
    return GateExplanation(step=step, gate=gate, input_label=bits,
                           rows=rows, output_labels=outputs)


def amplitude_pair(trace: StepTrace, step: int) -> tuple[StateVector, StateVector]:
    """(pre, post) states around one gate step, for side-by-side comparison."""
    if not 0 <= step < trace.step_count:
        raise StepRangeError(f"step {step} outside [0, {trace.step_count})")
    return trace.states[step], trace.states[step + 1]
