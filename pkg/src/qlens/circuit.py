"""Circuit structure: gates, blocks, basis-label conventions, and the two input formats.

Qubit-to-bit convention used everywhere: qubit 0 is the leftmost character of a
basis label and the most significant bit of its integer index, i.e.
``index = sum(bits[q] << (n - 1 - q))``.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import (
    BoundsError,
    CapExceededError,
    EmptyCircuitError,
    ParseError,
    SchemaError,
    UnsupportedGateError,
)

DEFAULT_QUBIT_CAP = 12

TWO_PI = 2.0 * math.pi


class GateKind(str, Enum):
    H = "h"
    X = "x"
    CNOT = "cnot"
    SWAP = "swap"
    CP = "cp"

    @property
    def arity(self) -> int:
        return 1 if self in (GateKind.H, GateKind.X) else 2


# text-format mnemonic -> gate kind
MNEMONICS = {"h": GateKind.H, "x": GateKind.X, "cx": GateKind.CNOT,
             "swap": GateKind.SWAP, "cp": GateKind.CP}
_KIND_TO_MNEMONIC = {GateKind.H: "h", GateKind.X: "x", GateKind.CNOT: "cx",
                     GateKind.SWAP: "swap", GateKind.CP: "cp"}


@dataclass(frozen=True)
class Gate:
    """One gate application. For cnot/cp, operands are (control, target)."""

    kind: GateKind
    operands: tuple[int, ...]
    theta: float | None = None  # radians, cp only, reduced into [0, 2*pi)

    def __post_init__(self):
        object.__setattr__(self, "operands", tuple(int(q) for q in self.operands))
        if len(self.operands) != self.kind.arity:
            raise SchemaError(
                f"gate '{self.kind.value}' takes {self.kind.arity} operand(s), "
                f"got {len(self.operands)}"
            )
        if len(set(self.operands)) != len(self.operands):
            raise SchemaError(f"gate '{self.kind.value}' operands must be distinct")
        if self.kind is GateKind.CP:
            if self.theta is None or not math.isfinite(self.theta):
                raise SchemaError("cp gate requires a finite 'theta'")
            object.__setattr__(self, "theta", float(self.theta) % TWO_PI)
        elif self.theta is not None:
            raise SchemaError(f"gate '{self.kind.value}' does not take 'theta'")


@dataclass(frozen=True)
class Block:
    """A named group of consecutive gates treated as one functional unit."""

    name: str
    gates: tuple[Gate, ...]

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        if not self.gates:
            raise EmptyCircuitError(f"block '{self.name}' has no gates")


@dataclass(frozen=True)
class Circuit:
    num_qubits: int
    blocks: tuple[Block, ...]
    title: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        if self.num_qubits < 1:
            raise SchemaError("'qubits' must be a positive integer")
        if not self.blocks:
            raise EmptyCircuitError("circuit has no blocks")
        for block in self.blocks:
            for gate in block.gates:
                for q in gate.operands:
                    if not 0 <= q < self.num_qubits:
                        raise BoundsError(
                            f"qubit index {q} out of range for {self.num_qubits}-qubit circuit"
                        )


@dataclass(frozen=True)
class Step:
    """One gate in the flattened block sequence."""

    step_index: int
    block_index: int
    gate: Gate


@dataclass(frozen=True)
class BasisLabel:
    """Bit-string label of one basis state; leftmost character is qubit 0."""

    bits: str
    index: int

    @classmethod
    def from_index(cls, index: int, num_qubits: int) -> "BasisLabel":
        if not 0 <= index < (1 << num_qubits):
            raise BoundsError(f"basis index {index} out of range for n={num_qubits}")
        return cls(bits=format(index, f"0{num_qubits}b"), index=index)

    @classmethod
    def from_bits(cls, bits: str) -> "BasisLabel":
        if not bits or any(c not in "01" for c in bits):
            raise SchemaError(f"basis label must be a non-empty string of 0/1, got {bits!r}")
        return cls(bits=bits, index=int(bits, 2))

    @property
    def num_qubits(self) -> int:
        return len(self.bits)

    def bit(self, qubit: int) -> int:
        return int(self.bits[qubit])


def bit_of(index: int, qubit: int, num_qubits: int) -> int:
    """Value of one qubit's bit inside a basis index (qubit 0 = most significant)."""
    return (index >> (num_qubits - 1 - qubit)) & 1


def flatten(circuit: Circuit) -> tuple[Step, ...]:
    """Flatten blocks into the global step sequence, preserving authored order."""
    steps = []
    for b, block in enumerate(circuit.blocks):
        for gate in block.gates:
            steps.append(Step(step_index=len(steps), block_index=b, gate=gate))
    return tuple(steps)


# ---------------------------------------------------------------------------
# gate action and full-system matrices


def gate_action(gate: Gate, num_qubits: int, index: int) -> list[tuple[int, complex]]:
    """Nonzero entries of column `index` of the gate's full-system unitary.

    Returns (output_index, coefficient) pairs ordered by output index; this is
    the image of one basis state under the gate.
    """
    for q in gate.operands:
        if not 0 <= q < num_qubits:
            raise BoundsError(f"qubit index {q} out of range for n={num_qubits}")
    kind = gate.kind
    if kind is GateKind.H:
        mask = 1 << (num_qubits - 1 - gate.operands[0])
        lo, hi = index & ~mask, index | mask
        r = 1.0 / math.sqrt(2.0)
        sign = -r if index & mask else r
        return [(lo, complex(r)), (hi, complex(sign))]
    if kind is GateKind.X:
        mask = 1 << (num_qubits - 1 - gate.operands[0])
        return [(index ^ mask, 1.0 + 0j)]
    if kind is GateKind.CNOT:
        c, t = gate.operands
        cmask = 1 << (num_qubits - 1 - c)
        tmask = 1 << (num_qubits - 1 - t)
        return [(index ^ tmask if index & cmask else index, 1.0 + 0j)]
    if kind is GateKind.SWAP:
        a, b = gate.operands
        amask = 1 << (num_qubits - 1 - a)
        bmask = 1 << (num_qubits - 1 - b)
        abit, bbit = bool(index & amask), bool(index & bmask)
        out = index
        if abit != bbit:
            out ^= amask | bmask
        return [(out, 1.0 + 0j)]
    if kind is GateKind.CP:
        c, t = gate.operands
        cmask = 1 << (num_qubits - 1 - c)
        tmask = 1 << (num_qubits - 1 - t)
        if index & cmask and index & tmask:
            return [(index, complex(math.cos(gate.theta), math.sin(gate.theta)))]
        return [(index, 1.0 + 0j)]
    raise SchemaError(f"unknown gate kind {kind!r}")


def gate_matrix(gate: Gate, num_qubits: int) -> np.ndarray:
    """Full-system 2^n x 2^n unitary: the gate on its operands, identity elsewhere."""
    dim = 1 << num_qubits
    matrix = np.zeros((dim, dim), dtype=np.complex128)
    for col in range(dim):
        for row, coeff in gate_action(gate, num_qubits, col):
            matrix[row, col] = coeff
    return matrix


# ---------------------------------------------------------------------------
# JSON format

_GATE_FIELDS = {"kind", "operands", "theta"}
_KINDS = {k.value for k in GateKind}


def _gate_from_dict(obj) -> Gate:
    if not isinstance(obj, dict):
        raise SchemaError("gate must be an object")
    extra = set(obj) - _GATE_FIELDS
    if extra:
        raise SchemaError(f"gate has unknown field(s): {sorted(extra)}")
    kind = obj.get("kind")
    if kind not in _KINDS:
        raise SchemaError(f"gate 'kind' must be one of {sorted(_KINDS)}, got {kind!r}")
    operands = obj.get("operands")
    if not isinstance(operands, list) or not all(
        isinstance(q, int) and not isinstance(q, bool) for q in operands
    ):
        raise SchemaError("gate 'operands' must be a list of integers")
    theta = obj.get("theta")
    if kind == "cp":
        if not isinstance(theta, (int, float)) or isinstance(theta, bool):
            raise SchemaError("cp gate requires a numeric 'theta'")
    elif "theta" in obj:
        raise SchemaError(f"gate '{kind}' does not take 'theta'")
    return Gate(kind=GateKind(kind), operands=tuple(operands),
                theta=float(theta) if kind == "cp" else None)


def parse_circuit_json(text: str, max_qubits: int = DEFAULT_QUBIT_CAP) -> Circuit:
    """Parse and validate a circuit document in the JSON schema."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("top level must be an object")
    extra = set(doc) - {"qubits", "title", "blocks"}
    if extra:
        raise SchemaError(f"unknown top-level field(s): {sorted(extra)}")
    qubits = doc.get("qubits")
    if not isinstance(qubits, int) or isinstance(qubits, bool):
        raise SchemaError("'qubits' must be an integer")
    title = doc.get("title")
    if title is not None and not isinstance(title, str):
        raise SchemaError("'title' must be a string")
    raw_blocks = doc.get("blocks")
    if not isinstance(raw_blocks, list):
        raise SchemaError("'blocks' must be a list")
    blocks = []
    for raw in raw_blocks:
        if not isinstance(raw, dict):
            raise SchemaError("block must be an object")
        extra = set(raw) - {"name", "gates"}
        if extra:
            raise SchemaError(f"block has unknown field(s): {sorted(extra)}")
        name = raw.get("name")
        if not isinstance(name, str):
            raise SchemaError("block 'name' must be a string")
        gates = raw.get("gates")
        if not isinstance(gates, list):
            raise SchemaError("block 'gates' must be a list")
        blocks.append(Block(name=name, gates=tuple(_gate_from_dict(g) for g in gates)))
    if isinstance(qubits, int) and qubits > max_qubits:
        raise CapExceededError(f"{qubits} qubits exceeds the cap of {max_qubits}")
    return Circuit(num_qubits=qubits, blocks=tuple(blocks), title=title)


def circuit_to_dict(circuit: Circuit) -> dict:
    """Serialize back to the JSON schema shape."""
    doc: dict = {"qubits": circuit.num_qubits}
    if circuit.title is not None:
        doc["title"] = circuit.title
    doc["blocks"] = [
        {
            "name": block.name,
            "gates": [gate_to_dict(g) for g in block.gates],
        }
        for block in circuit.blocks
    ]
    return doc


def gate_to_dict(gate: Gate) -> dict:
    obj: dict = {"kind": gate.kind.value, "operands": list(gate.operands)}
    if gate.kind is GateKind.CP:
        obj["theta"] = gate.theta
    return obj


def canonical_circuit_json(circuit: Circuit) -> str:
    """Canonical byte form used for content-addressed bundle ids."""
    return json.dumps(circuit_to_dict(circuit), sort_keys=True,
                      separators=(",", ":"), allow_nan=False)


# ---------------------------------------------------------------------------
# text format

_QREG_RE = re.compile(r"^qreg\s+q\[(\d+)\]$")
_ONEQ_RE = re.compile(r"^(h|x)\s+q\[(\d+)\]$")
_TWOQ_RE = re.compile(r"^(cx|swap)\s+q\[(\d+)\]\s*,\s*q\[(\d+)\]$")
_CP_RE = re.compile(r"^cp\(\s*([^)]*?)\s*\)\s+q\[(\d+)\]\s*,\s*q\[(\d+)\]$")
_FLOAT_RE = re.compile(r"^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$")
_PI_FRAC_RE = re.compile(r"^pi\s*/\s*(\d+)$")
_MNEMONIC_RE = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)\b")


def _parse_theta(text: str, line: int, column: int) -> float:
    if _FLOAT_RE.match(text):
        return float(text)
    frac = _PI_FRAC_RE.match(text)
    if frac:
        k = int(frac.group(1))
        if k == 0:
            raise ParseError("division by zero in cp angle", line, column)
        return math.pi / k
    raise ParseError(f"cp angle must be a decimal literal or pi/K, got {text!r}", line, column)


def parse_circuit_text(text: str, max_qubits: int = DEFAULT_QUBIT_CAP) -> Circuit:
    """Parse the line-based text format.

    Statements end at newlines or ';'. `qreg q[N]` must come first, `barrier`
    closes the current block, `//` starts a comment. Blocks are auto-named
    "Block 1", "Block 2", ...
    """
    num_qubits: int | None = None
    blocks: list[Block] = []
    pending: list[Gate] = []

    def close_block():
        if pending:
            blocks.append(Block(name=f"Block {len(blocks) + 1}", gates=tuple(pending)))
            pending.clear()

    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("//", 1)[0]
        cursor = 0
        for chunk in line.split(";"):
            column = cursor + len(chunk) - len(chunk.lstrip()) + 1
            cursor += len(chunk) + 1
            stmt = chunk.strip()
            if not stmt:
                continue
            if num_qubits is None:
                m = _QREG_RE.match(stmt)
                if not m:
                    raise ParseError("expected 'qreg q[N]' as the first statement",
                                     lineno, column)
                num_qubits = int(m.group(1))
                if num_qubits < 1:
                    raise SchemaError("'qreg' size must be a positive integer")
                if num_qubits > max_qubits:
                    raise CapExceededError(
                        f"{num_qubits} qubits exceeds the cap of {max_qubits}")
                continue
            if stmt == "barrier":
                close_block()
                continue
            if _QREG_RE.match(stmt):
                raise ParseError("duplicate 'qreg' declaration", lineno, column)
            gate = _parse_gate_statement(stmt, num_qubits, lineno, column)
            pending.append(gate)

    if num_qubits is None:
        raise ParseError("missing 'qreg q[N]' declaration", 1, 1)
    close_block()
    if not blocks:
        raise EmptyCircuitError("circuit has no gates")
    return Circuit(num_qubits=num_qubits, blocks=tuple(blocks))


def _parse_gate_statement(stmt: str, num_qubits: int, line: int, column: int) -> Gate:
    m = _ONEQ_RE.match(stmt)
    if m:
        return _bounded_gate(MNEMONICS[m.group(1)], (int(m.group(2)),), None,
                             num_qubits, line, column)
    m = _TWOQ_RE.match(stmt)
    if m:
        return _bounded_gate(MNEMONICS[m.group(1)], (int(m.group(2)), int(m.group(3))),
                             None, num_qubits, line, column)
    m = _CP_RE.match(stmt)
    if m:
        theta = _parse_theta(m.group(1), line, column)
        return _bounded_gate(GateKind.CP, (int(m.group(2)), int(m.group(3))), theta,
                             num_qubits, line, column)
    word = _MNEMONIC_RE.match(stmt)
    if word and word.group(1) not in MNEMONICS and word.group(1) not in ("qreg", "barrier"):
        raise UnsupportedGateError(word.group(1), line, column)
    raise ParseError(f"cannot parse statement {stmt!r}", line, column)


def _bounded_gate(kind: GateKind, operands: tuple[int, ...], theta: float | None,
                  num_qubits: int, line: int, column: int) -> Gate:
    for q in operands:
        if q >= num_qubits:
            raise BoundsError(
                f"qubit index {q} out of range for {num_qubits}-qubit circuit "
                f"(line {line}, column {column})"
            )
    try:
        return Gate(kind=kind, operands=operands, theta=theta)
    except SchemaError as exc:
        raise ParseError(str(exc), line, column) from exc


def serialize_text(circuit: Circuit) -> str:
    """Emit the text format; parsing it back reproduces the circuit structure.

    Block names are not representable in the grammar and come back auto-named.
    """
    lines = [f"qreg q[{circuit.num_qubits}];"]
    for b, block in enumerate(circuit.blocks):
        if b > 0:
            lines.append("barrier;")
        for gate in block.gates:
            mnemonic = _KIND_TO_MNEMONIC[gate.kind]
            args = ",".join(f"q[{q}]" for q in gate.operands)
            if gate.kind is GateKind.CP:
                lines.append(f"cp({gate.theta!r}) {args};")
            else:
                lines.append(f"{mnemonic} {args};")
    return "\n".join(lines) + "\n"


def structure_of(circuit: Circuit) -> tuple:
    """Structural fingerprint: qubit count plus per-block gate tuples (names ignored)."""
    return (
        circuit.num_qubits,
        tuple(tuple((g.kind, g.operands, g.theta) for g in block.gates)
              for block in circuit.blocks),
    )
