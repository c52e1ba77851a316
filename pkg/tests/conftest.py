import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qlens import load_example, simulate


@pytest.fixture(scope="session")
def grover_circuit():
    return load_example("grover2")


@pytest.fixture(scope="session")
def qft_circuit():
    return load_example("qft3")


@pytest.fixture(scope="session")
def grover_trace(grover_circuit):
    return simulate(grover_circuit)


@pytest.fixture(scope="session")
def qft_trace(qft_circuit):
    return simulate(qft_circuit)
