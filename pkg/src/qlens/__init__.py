"""qlens: a step-by-step interpretability engine for small gate-model quantum
circuits.

Simulates the full state vector after every gate and derives four explanation
products: probability summaries, basis-state evolution graphs with trace-back,
per-qubit gate explanations, and dandelion-chart amplitude geometry. Served
over an HTTP/JSON API for the web explorer and exportable from the CLI.
"""

from .analysis import (
    EPS_ALIVE,
    EPS_EDGE,
    EPS_GROUP,
    EvolutionEdge,
    EvolutionGraph,
    EvolutionNode,
    GateExplanation,
    Hub,
    ProbabilitySummary,
    amplitude_pair,
    build_evolution,
    build_summary,
    explain_gate,
    trace_back,
)
from .bundle import AnalysisBundle, BundleStore, analyze, circuit_id
from .circuit import (
    DEFAULT_QUBIT_CAP,
    BasisLabel,
    Block,
    Circuit,
    Gate,
    GateKind,
    Step,
    flatten,
    gate_matrix,
    parse_circuit_json,
    parse_circuit_text,
    serialize_text,
)
from .dandelion import (
    DEFAULT_K,
    DandelionElement,
    DandelionFigure,
    area_of,
    build_figure,
    compare_pair,
)
from .errors import (
    BadScaleError,
    BindError,
    BoundsError,
    CapExceededError,
    DeadStateError,
    EmptyCircuitError,
    NodeNotFoundError,
    ParseError,
    QlensError,
    SchemaError,
    StepRangeError,
    UnsupportedGateError,
)
from .examples import example_names, load_example
from .server import ServerConfig, create_app, serve
from .statevec import (
    StateVector,
    StepTrace,
    apply_gate,
    apply_step,
    initial_state,
    probability_of,
    simulate,
)
from .svg import export_svg

__version__ = "0.1.0"
