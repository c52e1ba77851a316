"""HTTP/JSON API over the bundle store, plus optional static hosting for the
web explorer. All error bodies are {"error": code, "detail": text}.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from starlette.exceptions import HTTPException as StarletteHTTPException

from . import examples
from .bundle import AnalysisBundle, BundleStore, analyze, explanation_to_dict
from .circuit import DEFAULT_QUBIT_CAP, parse_circuit_json
from .errors import (
    BadScaleError,
    BindError,
    QlensError,
    StepRangeError,
)


def default_store_dir() -> Path:
    return Path.home() / ".qlens" / "store"


@dataclass(frozen=True)
class ServerConfig:
    host: str = "127.0.0.1"
    port: int = 8000
    max_qubits: int = DEFAULT_QUBIT_CAP
    store_dir: Path = field(default_factory=default_store_dir)
    assets_dir: Path | None = None

    def __post_init__(self):
        if not 1 <= self.port <= 65535:
            raise BindError(f"port must be in [1, 65535], got {self.port}")
        if self.max_qubits > DEFAULT_QUBIT_CAP:
            raise BindError(f"qubit cap must be at most {DEFAULT_QUBIT_CAP}")


def _error(status: int, code: str, detail: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": code, "detail": detail})


def _not_found() -> JSONResponse:
    return _error(404, "not_found", "no bundle with that id")


def _int_param(raw: str | None, name: str, default: int) -> int:
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise StepRangeError(f"query parameter '{name}' must be an integer")


def _float_param(raw: str | None, name: str, default: float) -> float:
    if raw is None:
        return default
    try:
        return float(raw)
    except ValueError:
        raise BadScaleError(f"query parameter '{name}' must be a number")


def create_app(config: ServerConfig | None = None) -> FastAPI:
    config = config or ServerConfig()
    store = BundleStore(config.store_dir)
    app = FastAPI(title="qlens", docs_url=None, redoc_url=None)

    @app.exception_handler(QlensError)
    async def handle_qlens_error(_request, exc: QlensError):
        return _error(400, exc.code, str(exc))

    @app.exception_handler(StarletteHTTPException)
    async def handle_http_error(_request, exc: StarletteHTTPException):
        if exc.status_code == 404:
            return _not_found()
        return _error(exc.status_code, "http_error", str(exc.detail))

    @app.post("/api/circuits", status_code=201)
    async def post_circuit(request: Request):
        body = await request.body()
        circuit = parse_circuit_json(body.decode("utf-8", errors="replace"),
                                     max_qubits=config.max_qubits)
        bundle = analyze(circuit, max_qubits=config.max_qubits)
        store.put(bundle)
        return JSONResponse(status_code=201, content={"id": bundle.bundle_id})

    def _load(bundle_id: str) -> AnalysisBundle | None:
        return store.get(bundle_id)

    @app.get("/api/circuits/{bundle_id}")
    async def get_circuit(bundle_id: str):
        bundle = _load(bundle_id)
        if bundle is None:
            return _not_found()
        return {"id": bundle.bundle_id, "circuit": bundle.circuit,
                "steps": bundle.steps}

    @app.get("/api/circuits/{bundle_id}/summary")
    async def get_summary(bundle_id: str):
        bundle = _load(bundle_id)
        if bundle is None:
            return _not_found()
        return bundle.summary

    @app.get("/api/circuits/{bundle_id}/evolution")
    async def get_evolution(bundle_id: str, request: Request):
        bundle = _load(bundle_id)
        if bundle is None:
            return _not_found()
        params = request.query_params
        from_step = _int_param(params.get("from"), "from", 0)
        to_step = _int_param(params.get("to"), "to", bundle.step_count)
        return bundle.evolution_range(from_step, to_step)

    @app.get("/api/circuits/{bundle_id}/steps/{step}/explanation")
    async def get_explanation(bundle_id: str, step: int, request: Request):
        bundle = _load(bundle_id)
        if bundle is None:
            return _not_found()
        label = request.query_params.get("label")
        return explain_from_bundle(bundle, step, label)

    @app.get("/api/circuits/{bundle_id}/steps/{step}/dandelion")
    async def get_dandelion(bundle_id: str, step: int, request: Request):
        bundle = _load(bundle_id)
        if bundle is None:
            return _not_found()
        k = _float_param(request.query_params.get("k"), "k", 0.25)
        pre, post = bundle.figure_pair(step, k)
        return {"step": step, "k": k, "pre": pre.to_dict(), "post": post.to_dict()}

    @app.get("/api/examples")
    async def get_examples():
        return [
            {"name": name, "description": examples.example_entry(name).description,
             "circuit": json.loads(examples.example_source(name))}
            for name in examples.example_names()
        ]

    if config.assets_dir is not None:
        app.mount("/", StaticFiles(directory=config.assets_dir, html=True), name="ui")

    return app


def explain_from_bundle(bundle: AnalysisBundle, step: int, label: str | None) -> dict:
    """Gate explanation computed from stored data (no re-simulation): the gate
    comes from the step list and aliveness from the summary matrix."""
    from . import analysis
    from .circuit import Gate, GateKind
    from .errors import DeadStateError, SchemaError

    if not 0 <= step < bundle.step_count:
        raise StepRangeError(f"step {step} outside [0, {bundle.step_count})")
    n = bundle.num_qubits
    if not label or len(label) != n or any(c not in "01" for c in label):
        raise SchemaError(f"query parameter 'label' must be a {n}-bit basis label")
    index = int(label, 2)
    if bundle.summary["matrix"][step][index] <= analysis.EPS_ALIVE:
        raise DeadStateError(f"basis state |{label}> has no probability at step {step}")
    raw = bundle.steps[step]["gate"]
    gate = Gate(kind=GateKind(raw["kind"]), operands=tuple(raw["operands"]),
                theta=raw.get("theta"))
    rows, outputs = analysis.explain_action(gate, n, label)
    expl = analysis.GateExplanation(step=step, gate=gate, input_label=label,
                                    rows=rows, output_labels=outputs)
    return explanation_to_dict(expl)


def serve(config: ServerConfig) -> None:
    """Run the API server until interrupted."""
    import uvicorn

    app = create_app(config)
    try:
        uvicorn.run(app, host=config.host, port=config.port, log_level="info")
    except OSError as exc:
        raise BindError(f"cannot bind {config.host}:{config.port}: {exc}") from exc
