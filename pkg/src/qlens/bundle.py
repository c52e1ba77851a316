"""Analysis bundles: the full derived payload for one circuit, content-addressed
by the canonical circuit serialization, plus a file-backed immutable store.

A bundle is pure data (the exact JSON payload served over the API), so
bytes -> bundle -> bytes is the identity and two analyses of the same circuit
are byte-identical.
"""
from __future__ import annotations

import hashlib
import json
import os
import re
import tempfile
import threading
from dataclasses import dataclass
from pathlib import Path

_ID_RE = re.compile(r"[0-9a-f]{64}")

from . import analysis, dandelion
from .circuit import (
    DEFAULT_QUBIT_CAP,
    Circuit,
    canonical_circuit_json,
    circuit_to_dict,
    gate_to_dict,
)
from .errors import CapExceededError
from .statevec import StepTrace, simulate


def circuit_id(circuit: Circuit) -> str:
    return hashlib.sha256(canonical_circuit_json(circuit).encode("utf-8")).hexdigest()


# ---------------------------------------------------------------------------
# product serializers (wire schemas)


def summary_to_dict(summary: analysis.ProbabilitySummary) -> dict:
    return {
        "num_qubits": summary.num_qubits,
        "step_count": summary.step_count,
        "labels": list(summary.labels),
        "matrix": [[float(p) for p in row] for row in summary.matrix],
        "block_spans": [
            {"block": span.block_index, "name": span.name,
             "first_step": span.first_step, "last_step": span.last_step}
            for span in summary.block_spans
        ],
        "creations": dict(summary.creations),
    }


def _pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def evolution_to_dict(graph: analysis.EvolutionGraph) -> dict:
    n = graph.num_qubits
    fmt = f"0{n}b"
    return {
        "num_qubits": n,
        "from_step": graph.from_step,
        "to_step": graph.to_step,
        "nodes": [
            {"step": node.step, "label": node.label, "index": node.index,
             "amp": _pair(node.amp), "prob": node.prob, "sign": node.sign_class}
            for node in graph.nodes
        ],
        "edges": [
            {"from": {"step": edge.step, "label": format(edge.src, fmt)},
             "to": {"step": edge.step + 1, "label": format(edge.dst, fmt)},
             "contribution": _pair(edge.contribution)}
            for edge in graph.edges
        ],
        "hubs": [
            {"step": hub.step, "prob": hub.prob,
             "labels": [format(i, fmt) for i in hub.indices]}
            for hub in graph.hubs
        ],
    }


def explanation_to_dict(expl: analysis.GateExplanation) -> dict:
    return {
        "step": expl.step,
        "gate": gate_to_dict(expl.gate),
        "input_label": expl.input_label,
        "rows": [
            {"qubit": row.qubit, "initial": row.initial,
             "operation": row.operation, "finals": list(row.finals)}
            for row in expl.rows
        ],
        "output_labels": list(expl.output_labels),
    }


def steps_to_list(trace: StepTrace) -> list[dict]:
    return [
        {"step": step.step_index, "block": step.block_index,
         "gate": gate_to_dict(step.gate)}
        for step in trace.steps
    ]


def _dandelion_base(trace: StepTrace) -> list[dict]:
    """Per-state alive points and radii; the scale factor is applied at query time."""
    base = []
    for s, state in enumerate(trace.states):
        probs = trace.probs[s]
        labels, points, radii = [], [], []
        for i in range(probs.size):
            if probs[i] > analysis.EPS_ALIVE:
                amp = complex(state.amps[i])
                labels.append(state.label(i))
                points.append(_pair(amp))
                radii.append(abs(amp))
        base.append({"labels": labels, "points": points, "r0": radii})
    return base


# ---------------------------------------------------------------------------
# bundle


@dataclass(frozen=True)
class AnalysisBundle:
    payload: dict

    @property
    def bundle_id(self) -> str:
        return self.payload["id"]

    @property
    def circuit(self) -> dict:
        return self.payload["circuit"]

    @property
    def steps(self) -> list[dict]:
        return self.payload["steps"]

    @property
    def step_count(self) -> int:
        return len(self.payload["steps"])

    @property
    def num_qubits(self) -> int:
        return self.payload["circuit"]["qubits"]

    @property
    def summary(self) -> dict:
        return self.payload["summary"]

    @property
    def evolution(self) -> dict:
        return self.payload["evolution"]

    @property
    def dandelion_base(self) -> list[dict]:
        return self.payload["dandelion"]

    def to_bytes(self) -> bytes:
        return json.dumps(self.payload, sort_keys=True, separators=(",", ":"),
                          allow_nan=False).encode("utf-8")

    @classmethod
    def from_bytes(cls, data: bytes) -> "AnalysisBundle":
        return cls(payload=json.loads(data.decode("utf-8")))

    def figure_pair(self, step: int, k: float) -> tuple[dandelion.DandelionFigure,
                                                        dandelion.DandelionFigure]:
        """Dandelion figures around gate step `step` at scale k."""
        from .errors import StepRangeError

        if not 0 <= step < self.step_count:
            raise StepRangeError(f"step {step} outside [0, {self.step_count})")
        return (self._figure(step, k), self._figure(step + 1, k))

    def _figure(self, state_index: int, k: float) -> dandelion.DandelionFigure:
        base = self.dandelion_base[state_index]
        points = [
            (label, int(label, 2), complex(point[0], point[1]))
            for label, point in zip(base["labels"], base["points"])
        ]
        return dandelion.elements_from_points(points, k)

    def evolution_range(self, from_step: int, to_step: int) -> dict:
        """Filter the stored full-range evolution graph to [from_step, to_step]."""
        from .errors import StepRangeError

        if not 0 <= from_step <= to_step <= self.step_count:
            raise StepRangeError(
                f"evolution range [{from_step}, {to_step}] outside [0, {self.step_count}]")
        full = self.evolution
        return {
            "num_qubits": full["num_qubits"],
            "from_step": from_step,
            "to_step": to_step,
            "nodes": [n for n in full["nodes"] if from_step <= n["step"] <= to_step],
            "edges": [e for e in full["edges"]
                      if from_step <= e["from"]["step"] and e["to"]["step"] <= to_step],
            "hubs": [h for h in full["hubs"] if from_step <= h["step"] <= to_step],
        }


def analyze(circuit: Circuit, max_qubits: int = DEFAULT_QUBIT_CAP) -> AnalysisBundle:
    """Simulate and derive every product, returning the canonical bundle."""
    if circuit.num_qubits > max_qubits:
        raise CapExceededError(
            f"{circuit.num_qubits} qubits exceeds the cap of {max_qubits}")
    trace = simulate(circuit, max_qubits=max_qubits)
    summary = analysis.build_summary(trace)
    evolution = analysis.build_evolution(trace, 0, trace.step_count)
    payload = {
        "id": circuit_id(circuit),
        "circuit": circuit_to_dict(circuit),
        "steps": steps_to_list(trace),
        "summary": summary_to_dict(summary),
        "evolution": evolution_to_dict(evolution),
        "dandelion": _dandelion_base(trace),
    }
    return AnalysisBundle(payload=payload)


# ---------------------------------------------------------------------------
# store


class BundleStore:
    """Append-only directory of canonical bundle files, one per id.

    Writes go through a temp file + rename so a bundle is either absent or
    complete; insertion is synchronized, reads need no locking.
    """

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._lock = threading.Lock()

    @staticmethod
    def valid_id(bundle_id: str) -> bool:
        return bool(_ID_RE.fullmatch(bundle_id))

    def _path(self, bundle_id: str) -> Path:
        return self.root / f"{bundle_id}.json"

    def put(self, bundle: AnalysisBundle) -> str:
        bundle_id = bundle.bundle_id
        path = self._path(bundle_id)
        with self._lock:
            if not path.exists():
                fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
                try:
                    with os.fdopen(fd, "wb") as handle:
                        handle.write(bundle.to_bytes())
                    os.replace(tmp, path)
                except BaseException:
                    if os.path.exists(tmp):
                        os.unlink(tmp)
                    raise
        return bundle_id

    def get(self, bundle_id: str) -> AnalysisBundle | None:
        if not self.valid_id(bundle_id):
            return None
        path = self._path(bundle_id)
        if not path.is_file():
            return None
        return AnalysisBundle.from_bytes(path.read_bytes())

    def ids(self) -> list[str]:
        return sorted(p.stem for p in self.root.glob("*.json"))
