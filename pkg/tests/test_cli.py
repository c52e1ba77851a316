import json

import pytest

from qlens import analyze, load_example
from qlens.bundle import BundleStore
from qlens.cli import main
from qlens.examples import example_source


@pytest.fixture()
def grover_file(tmp_path):
    path = tmp_path / "grover.json"
    path.write_text(example_source("grover2"))
    return path


def test_examples_list(capsys):
    assert main(["examples", "list"]) == 0
    assert capsys.readouterr().out.splitlines() == ["grover2", "qft3"]


def test_examples_show(capsys):
    assert main(["examples", "show", "qft3"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["qubits"] == 3


def test_examples_show_unknown(capsys):
    assert main(["examples", "show", "bogus"]) == 1
    assert "error" in capsys.readouterr().err


def test_analyze_to_file(tmp_path, grover_file, capsys):
    out = tmp_path / "bundle.json"
    assert main(["analyze", str(grover_file), "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["id"] == analyze(load_example("grover2")).bundle_id
    assert len(payload["steps"]) == 16


def test_analyze_to_stdout(grover_file, capsys):
    assert main(["analyze", str(grover_file)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["summary"]["step_count"] == 16


def test_analyze_text_format(tmp_path, capsys):
    path = tmp_path / "circuit.qasm"
    path.write_text("qreg q[2]; h q[0]; barrier; cx q[0],q[1];\n")
    assert main(["analyze", str(path)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert [b["name"] for b in payload["circuit"]["blocks"]] == ["Block 1", "Block 2"]


def test_analyze_missing_file(tmp_path, capsys):
    assert main(["analyze", str(tmp_path / "nope.json")]) == 2
    assert "error" in capsys.readouterr().err


def test_analyze_invalid_circuit(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"qubits": 2, "blocks": []}')
    assert main(["analyze", str(path)]) == 2


def test_analyze_cap_flag(tmp_path, capsys):
    path = tmp_path / "big.json"
    path.write_text(json.dumps({
        "qubits": 6,
        "blocks": [{"name": "b", "gates": [{"kind": "h", "operands": [0]}]}]}))
    assert main(["analyze", str(path), "--max-qubits", "4"]) == 2
    assert main(["analyze", str(path), "--max-qubits", "6"]) == 0


def test_export_svg_from_file(tmp_path, grover_file, capsys):
    out = tmp_path / "fig.svg"
    assert main(["export-svg", str(grover_file), "--step", "4", "--k", "0.25",
                 "--out", str(out)]) == 0
    assert out.read_text().count("<circle") == 4


def test_export_svg_from_store_id(tmp_path, monkeypatch, capsys):
    store_dir = tmp_path / "store"
    bundle = analyze(load_example("grover2"))
    BundleStore(store_dir).put(bundle)
    monkeypatch.setenv("QLENS_STORE", str(store_dir))
    out = tmp_path / "fig.svg"
    assert main(["export-svg", bundle.bundle_id, "--step", "15", "--k", "0.5",
                 "--out", str(out)]) == 0
    assert "<svg" in out.read_text()


def test_export_svg_unknown_source(tmp_path, capsys):
    assert main(["export-svg", "deadbeef" * 8, "--step", "0", "--k", "0.5",
                 "--out", str(tmp_path / "x.svg")]) == 2


def test_export_svg_bad_step(grover_file, tmp_path, capsys):
    assert main(["export-svg", str(grover_file), "--step", "99", "--k", "0.5",
                 "--out", str(tmp_path / "x.svg")]) == 2


def test_store_flag_wins_over_env(tmp_path, monkeypatch):
    env_store = tmp_path / "env-store"
    flag_store = tmp_path / "flag-store"
    bundle = analyze(load_example("qft3"))
    BundleStore(flag_store).put(bundle)
    monkeypatch.setenv("QLENS_STORE", str(env_store))
    out = tmp_path / "fig.svg"
    assert main(["export-svg", bundle.bundle_id, "--step", "0", "--k", "0.5",
                 "--out", str(out), "--store", str(flag_store)]) == 0


def test_serve_port_zero_usage_error(capsys):
    assert main(["serve", "--port", "0"]) == 1
    assert "--port" in capsys.readouterr().err


def test_unknown_subcommand():
    assert main(["frobnicate"]) == 1


def test_missing_required_flag(grover_file):
    assert main(["export-svg", str(grover_file), "--step", "1"]) == 1
