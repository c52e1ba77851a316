"""Command-line interface.

Subcommands: analyze, serve, export-svg, examples. The bundle store directory
comes from --store, else the QLENS_STORE environment variable, else
~/.qlens/store. Exit codes: 0 success, 1 usage error, 2 analysis error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .bundle import AnalysisBundle, BundleStore, analyze
from .circuit import DEFAULT_QUBIT_CAP, Circuit, parse_circuit_json, parse_circuit_text
from .errors import QlensError
from .examples import example_entry, example_names, example_source
from .server import ServerConfig, default_store_dir, serve
from .svg import export_svg

USAGE_ERROR = 1
ANALYSIS_ERROR = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qlens",
                     description="Analyze small quantum circuits step by step.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="simulate a circuit file and emit its bundle")
    p_analyze.add_argument("file", help="circuit file (.json schema or text format)")
    p_analyze.add_argument("--out", help="write the bundle here instead of stdout")
    p_analyze.add_argument("--format", choices=["json"], default="json")
    p_analyze.add_argument("--max-qubits", type=int, default=DEFAULT_QUBIT_CAP)

    p_serve = sub.add_parser("serve", help="run the HTTP API server")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--assets", help="static directory for the web explorer")
    p_serve.add_argument("--store", help="bundle store directory")
    p_serve.add_argument("--max-qubits", type=int, default=DEFAULT_QUBIT_CAP)

    p_svg = sub.add_parser("export-svg", help="render one step's post-state geometry")
    p_svg.add_argument("source", help="circuit file or stored bundle id")
    p_svg.add_argument("--step", type=int, required=True,
                       help="gate step; the figure shows the state after it")
    p_svg.add_argument("--k", type=float, required=True, help="circle scale factor in (0, 1]")
    p_svg.add_argument("--out", required=True, help="output SVG path")
    p_svg.add_argument("--store", help="bundle store directory")

    p_examples = sub.add_parser("examples", help="bundled example circuits")
    p_examples.add_argument("action", choices=["list", "show"])
    p_examples.add_argument("name", nargs="?")

    return parser


def _store_dir(flag_value: str | None) -> Path:
    if flag_value:
        return Path(flag_value)
    env = os.environ.get("QLENS_STORE")
    if env:
        return Path(env)
    return default_store_dir()


def _read_circuit(path: str, max_qubits: int) -> Circuit:
    text = Path(path).read_text(encoding="utf-8")
    if path.endswith(".json") or text.lstrip().startswith("{"):
        return parse_circuit_json(text, max_qubits=max_qubits)
    return parse_circuit_text(text, max_qubits=max_qubits)


def _cmd_analyze(args) -> int:
    circuit = _read_circuit(args.file, args.max_qubits)
    bundle = analyze(circuit, max_qubits=args.max_qubits)
    data = bundle.to_bytes()
    if args.out:
        Path(args.out).write_bytes(data + b"\n")
        print(f"wrote bundle {bundle.bundle_id} to {args.out}")
    else:
        sys.stdout.write(data.decode("utf-8") + "\n")
    return 0


def _cmd_serve(args) -> int:
    if not 1 <= args.port <= 65535:
        print(f"qlens serve: error: --port must be in [1, 65535], got {args.port}",
              file=sys.stderr)
        return USAGE_ERROR
    config = ServerConfig(
        host=args.host,
        port=args.port,
        max_qubits=args.max_qubits,
        store_dir=_store_dir(args.store),
        assets_dir=Path(args.assets) if args.assets else None,
    )
    serve(config)
    return 0


def _cmd_export_svg(args) -> int:
    if Path(args.source).is_file():
        circuit = _read_circuit(args.source, DEFAULT_QUBIT_CAP)
        bundle = analyze(circuit)
    else:
        store = BundleStore(_store_dir(args.store))
        found: AnalysisBundle | None = store.get(args.source)
        if found is None:
            print(f"qlens export-svg: error: {args.source!r} is neither a file "
                  f"nor a stored bundle id", file=sys.stderr)
            return ANALYSIS_ERROR
        bundle = found
    export_svg(bundle, args.step, args.k, args.out)
    print(f"wrote {args.out}")
    return 0


def _cmd_examples(args) -> int:
    if args.action == "list":
        for name in example_names():
            print(name)
        return 0
    if not args.name or example_entry(args.name) is None:
        known = ", ".join(example_names())
        print(f"qlens examples: error: expected one of: {known}", file=sys.stderr)
        return USAGE_ERROR
    source = example_source(args.name)
    print(json.dumps(json.loads(source), indent=2))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR

    commands = {
        "analyze": _cmd_analyze,
        "serve": _cmd_serve,
        "export-svg": _cmd_export_svg,
        "examples": _cmd_examples,
    }
    try:
        return commands[args.command](args)
    except QlensError as exc:
        print(f"qlens {args.command}: error: {exc}", file=sys.stderr)
        return ANALYSIS_ERROR
    except OSError as exc:
        print(f"qlens {args.command}: error: {exc}", file=sys.stderr)
        return ANALYSIS_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
