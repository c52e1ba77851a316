"""Bundled example circuits: a two-qubit Grover search and a three-qubit
Fourier transform of |101>."""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .circuit import Circuit, parse_circuit_json


@dataclass(frozen=True)
class ExampleEntry:
    name: str
    description: str
    resource: str


_EXAMPLES = (
    ExampleEntry(
        name="grover2",
        description="Two-qubit Grover search driving |11> to probability 1 "
                    "(initialization, sign-flip oracle, amplitude amplification)",
        resource="grover2.json",
    ),
    ExampleEntry(
        name="qft3",
        description="Three-qubit quantum Fourier transform of |101>, ending in a "
                    "uniform 1/8 distribution",
        resource="qft3.json",
    ),
)


def example_names() -> list[str]:
    return [entry.name for entry in _EXAMPLES]


def example_entry(name: str) -> ExampleEntry | None:
    for entry in _EXAMPLES:
        if entry.name == name:
            return entry
    return None


def example_source(name: str) -> str:
    entry = example_entry(name)
    if entry is None:
        raise KeyError(f"no example named {name!r}")
    return (resources.files("qlens") / "data" / entry.resource).read_text("utf-8")


def load_example(name: str) -> Circuit:
    return parse_circuit_json(example_source(name))
