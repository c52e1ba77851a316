"""Dense state-vector simulation with a full per-step trace.

Amplitudes are native complex numbers (re = a, im = b); probabilities are
a^2 + b^2. Gate application uses axis-indexed updates on the reshaped state
tensor, which matches the dense full-system matrix product exactly. The global
phase is never normalized away: views downstream read signed amplitudes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .circuit import (
    DEFAULT_QUBIT_CAP,
    Circuit,
    Gate,
    GateKind,
    Step,
    flatten,
)
from .errors import BoundsError

NORM_TOL = 1e-9

_SQRT2_INV = 1.0 / math.sqrt(2.0)
_H2 = np.array([[1, 1], [1, -1]], dtype=np.complex128) * _SQRT2_INV
_X2 = np.array([[0, 1], [1, 0]], dtype=np.complex128)


def probability_of(amp: complex) -> float:
    """Measured probability of one amplitude: |a|^2 + |b|^2."""
    return amp.real * amp.real + amp.imag * amp.imag


@dataclass(frozen=True)
class StateVector:
    num_qubits: int
    amps: np.ndarray  # complex128, shape (2^n,), read-only

    def __post_init__(self):
        amps = np.asarray(self.amps, dtype=np.complex128)
        if amps.shape != (1 << self.num_qubits,):
            raise ValueError(
                f"expected {1 << self.num_qubits} amplitudes, got shape {amps.shape}")
        if not np.all(np.isfinite(amps.view(np.float64))):
            raise ValueError("amplitudes must be finite")
        norm = float(np.sum(amps.real**2 + amps.imag**2))
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"state not normalized: sum of probabilities = {norm!r}")
        amps.setflags(write=False)
        object.__setattr__(self, "amps", amps)

    def probabilities(self) -> np.ndarray:
        probs = self.amps.real**2 + self.amps.imag**2
        probs.setflags(write=False)
        return probs

    def probability(self, index: int) -> float:
        return probability_of(complex(self.amps[index]))

    def label(self, index: int) -> str:
        return format(index, f"0{self.num_qubits}b")


def initial_state(num_qubits: int, max_qubits: int = DEFAULT_QUBIT_CAP) -> StateVector:
    """The all-zero register |0...0>."""
    if not 1 <= num_qubits <= max_qubits:
        raise BoundsError(f"qubit count must be in [1, {max_qubits}], got {num_qubits}")
    amps = np.zeros(1 << num_qubits, dtype=np.complex128)
    amps[0] = 1.0
    return StateVector(num_qubits=num_qubits, amps=amps)


def _apply_gate_array(amps: np.ndarray, gate: Gate, num_qubits: int) -> np.ndarray:
    """Apply one gate to a flat amplitude array, returning a new array.

    Reshaping to [2]*n puts qubit q on tensor axis q (qubit 0 is the most
    significant index bit, which is axis 0 in C order).
    """
    n = num_qubits
    for q in gate.operands:
        if not 0 <= q < n:
            raise BoundsError(f"qubit index {q} out of range for n={n}")
    psi = amps.reshape([2] * n)
    kind = gate.kind
    if kind in (GateKind.H, GateKind.X):
        matrix = _H2 if kind is GateKind.H else _X2
        q = gate.operands[0]
        out = np.tensordot(matrix, psi, axes=([1], [q]))
        # tensordot moved axis q to the front; put it back
        out = np.moveaxis(out, 0, q)
        return np.ascontiguousarray(out).reshape(-1)
    new = psi.copy()
    if kind is GateKind.CNOT:
        c, t = gate.operands
        sel0 = _slices(n, {c: 1, t: 0})
        sel1 = _slices(n, {c: 1, t: 1})
        new[sel0], new[sel1] = psi[sel1], psi[sel0]
    elif kind is GateKind.SWAP:
        a, b = gate.operands
        sel01 = _slices(n, {a: 0, b: 1})
        sel10 = _slices(n, {a: 1, b: 0})
        new[sel01], new[sel10] = psi[sel10], psi[sel01]
    elif kind is GateKind.CP:
        c, t = gate.operands
        new[_slices(n, {c: 1, t: 1})] *= complex(math.cos(gate.theta), math.sin(gate.theta))
    else:
        raise BoundsError(f"unknown gate kind {kind!r}")
    return new.reshape(-1)


def _slices(n: int, fixed: dict[int, int]) -> tuple:
    sel: list = [slice(None)] * n
    for axis, value in fixed.items():
        sel[axis] = value
    return tuple(sel)


def apply_gate(state: StateVector, gate: Gate) -> StateVector:
    return StateVector(num_qubits=state.num_qubits,
                       amps=_apply_gate_array(state.amps, gate, state.num_qubits))


def apply_step(state: StateVector, step: Step) -> StateVector:
    """U * psi for the step's full-system unitary."""
    return apply_gate(state, step.gate)


@dataclass(frozen=True)
class StepTrace:
    """Per-step simulation record: states[0] is the initial state and
    states[s + 1] the post-state of step s."""

    circuit: Circuit
    steps: tuple[Step, ...]
    states: tuple[StateVector, ...]
    probs: tuple[np.ndarray, ...]

    @property
    def step_count(self) -> int:
        return len(self.steps)

    @property
    def num_qubits(self) -> int:
        return self.circuit.num_qubits


def simulate(circuit: Circuit, max_qubits: int = DEFAULT_QUBIT_CAP) -> StepTrace:
    """Run the whole circuit from |0...0>, recording every intermediate state."""
    steps = flatten(circuit)
    states = [initial_state(circuit.num_qubits, max_qubits=max_qubits)]
    for step in steps:
        states.append(apply_step(states[-1], step))
    probs = tuple(state.probabilities() for state in states)
    return StepTrace(circuit=circuit, steps=steps, states=tuple(states), probs=probs)
