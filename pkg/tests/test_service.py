import json
import math
import threading

import pytest
from fastapi.testclient import TestClient

from qlens import (
    CapExceededError,
    ServerConfig,
    analyze,
    build_evolution,
    load_example,
    simulate,
)
from qlens.bundle import AnalysisBundle, BundleStore, evolution_to_dict
from qlens.examples import example_source

from schemas import (
    check_circuit_doc,
    check_evolution_doc,
    check_figure_doc,
    check_gate,
    check_summary_doc,
)


@pytest.fixture()
def client(tmp_path):
    config = ServerConfig(store_dir=tmp_path / "store")
    app = __import__("qlens.server", fromlist=["create_app"]).create_app(config)
    with TestClient(app) as c:
        yield c


def post_example(client, name):
    response = client.post("/api/circuits", content=example_source(name))
    assert response.status_code == 201
    return response.json()["id"]


# ---------------------------------------------------------------------------
# endpoints


def test_post_and_get_circuit(client):
    bundle_id = post_example(client, "grover2")
    doc = client.get(f"/api/circuits/{bundle_id}").json()
    assert doc["id"] == bundle_id
    check_circuit_doc(doc["circuit"])
    assert len(doc["steps"]) == 16
    for step in doc["steps"]:
        assert set(step) == {"step", "block", "gate"}
        check_gate(step["gate"])
    assert [s["step"] for s in doc["steps"]] == list(range(16))


def test_get_summary(client):
    bundle_id = post_example(client, "grover2")
    doc = client.get(f"/api/circuits/{bundle_id}/summary").json()
    check_summary_doc(doc, n=2, step_count=16)
    assert doc["matrix"][2] == pytest.approx([0.25] * 4)
    assert doc["matrix"][16][3] == pytest.approx(1.0)


def test_get_evolution_full_and_filtered(client):
    bundle_id = post_example(client, "qft3")
    full = client.get(f"/api/circuits/{bundle_id}/evolution").json()
    check_evolution_doc(full, n=3)
    assert full["from_step"] == 0 and full["to_step"] == 9

    part = client.get(f"/api/circuits/{bundle_id}/evolution?from=2&to=5").json()
    check_evolution_doc(part, n=3)
    trace = simulate(load_example("qft3"))
    expect = evolution_to_dict(build_evolution(trace, 2, 5))
    assert part == expect


def test_get_explanation(client):
    bundle_id = post_example(client, "grover2")
    doc = client.get(f"/api/circuits/{bundle_id}/steps/0/explanation?label=00").json()
    assert set(doc) == {"step", "gate", "input_label", "rows", "output_labels"}
    assert doc["output_labels"] == ["00", "10"]
    for row in doc["rows"]:
        assert set(row) == {"qubit", "initial", "operation", "finals"}
    # matches the library computation end to end
    from qlens import explain_gate
    from qlens.bundle import explanation_to_dict
    trace = simulate(load_example("grover2"))
    assert doc == explanation_to_dict(explain_gate(trace, 0, "00"))


def test_get_dandelion_pair(client):
    bundle_id = post_example(client, "grover2")
    doc = client.get(f"/api/circuits/{bundle_id}/steps/4/dandelion?k=0.25").json()
    assert set(doc) == {"step", "k", "pre", "post"}
    check_figure_doc(doc["pre"])
    check_figure_doc(doc["post"])
    post_labels = {el["label"]: el for el in doc["post"]["elements"]}
    assert len(post_labels) == 4
    assert post_labels["11"]["point"][0] == pytest.approx(-0.5)
    assert doc["pre"]["elements"][0]["k"] == 0.25


def test_get_examples(client):
    docs = client.get("/api/examples").json()
    assert [d["name"] for d in docs] == ["grover2", "qft3"]
    for doc in docs:
        assert set(doc) == {"name", "description", "circuit"}
        check_circuit_doc(doc["circuit"])


# ---------------------------------------------------------------------------
# idempotence / determinism


def test_duplicate_post_same_id_no_duplicate_storage(client, tmp_path):
    first = post_example(client, "grover2")
    second = post_example(client, "grover2")
    assert first == second
    store_files = list((tmp_path / "store").glob("*.json"))
    assert len(store_files) == 1


def test_analyze_is_deterministic():
    circuit = load_example("qft3")
    a, b = analyze(circuit), analyze(circuit)
    assert a.bundle_id == b.bundle_id
    assert a.to_bytes() == b.to_bytes()


def test_bundle_bytes_round_trip():
    bundle = analyze(load_example("grover2"))
    data = bundle.to_bytes()
    again = AnalysisBundle.from_bytes(data)
    assert again.to_bytes() == data
    assert again.bundle_id == bundle.bundle_id


def test_concurrent_gets_identical(client):
    bundle_id = post_example(client, "grover2")
    results = []

    def fetch():
        results.append(client.get(f"/api/circuits/{bundle_id}/summary").content)

    threads = [threading.Thread(target=fetch) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(set(results)) == 1


def test_store_survives_restart(tmp_path):
    store_dir = tmp_path / "store"
    bundle = analyze(load_example("grover2"))
    BundleStore(store_dir).put(bundle)
    again = BundleStore(store_dir).get(bundle.bundle_id)
    assert again is not None
    assert again.to_bytes() == bundle.to_bytes()
    assert BundleStore(store_dir).ids() == [bundle.bundle_id]


# ---------------------------------------------------------------------------
# error mapping


def test_unknown_id_404(client):
    for bad in ("0" * 64, "nope", "../../etc/passwd"):
        response = client.get(f"/api/circuits/{bad}")
        assert response.status_code == 404
        assert response.json() == {"error": "not_found", "detail": "no bundle with that id"}


def test_post_malformed_400(client):
    response = client.post("/api/circuits", content="{not json")
    assert response.status_code == 400
    body = response.json()
    assert body["error"] == "schema_error"
    assert "detail" in body

    response = client.post("/api/circuits", content='{"qubits":2,"blocks":[]}')
    assert response.status_code == 400
    assert response.json()["error"] == "empty_circuit"

    response = client.post(
        "/api/circuits",
        content='{"qubits":2,"blocks":[{"name":"b","gates":[{"kind":"cnot","operands":[0,5]}]}]}')
    assert response.status_code == 400
    assert response.json()["error"] == "bounds_error"


def test_post_cap_exceeded(client):
    doc = {"qubits": 13, "blocks": [{"name": "b", "gates": [{"kind": "h", "operands": [0]}]}]}
    response = client.post("/api/circuits", content=json.dumps(doc))
    assert response.status_code == 400
    assert response.json()["error"] == "cap_exceeded"
    with pytest.raises(CapExceededError):
        analyze(load_example("grover2"), max_qubits=1)


def test_bad_query_parameters(client):
    bundle_id = post_example(client, "grover2")
    assert client.get(f"/api/circuits/{bundle_id}/evolution?from=0&to=99").json()["error"] == "range_error"
    assert client.get(f"/api/circuits/{bundle_id}/evolution?from=x").json()["error"] == "range_error"
    assert client.get(f"/api/circuits/{bundle_id}/steps/3/dandelion?k=0").json()["error"] == "bad_scale"
    assert client.get(f"/api/circuits/{bundle_id}/steps/3/dandelion?k=2").json()["error"] == "bad_scale"
    assert client.get(f"/api/circuits/{bundle_id}/steps/99/dandelion?k=0.5").json()["error"] == "range_error"
    assert client.get(f"/api/circuits/{bundle_id}/steps/0/explanation?label=11").json()["error"] == "dead_state"
    assert client.get(f"/api/circuits/{bundle_id}/steps/0/explanation?label=abc").json()["error"] == "schema_error"
    assert client.get(f"/api/circuits/{bundle_id}/steps/0/explanation").json()["error"] == "schema_error"


def test_dandelion_default_k(client):
    bundle_id = post_example(client, "grover2")
    doc = client.get(f"/api/circuits/{bundle_id}/steps/3/dandelion").json()
    assert doc["k"] == 0.25


def test_server_config_validation(tmp_path):
    from qlens.errors import BindError
    with pytest.raises(BindError):
        ServerConfig(port=0, store_dir=tmp_path)
    with pytest.raises(BindError):
        ServerConfig(port=70000, store_dir=tmp_path)
    with pytest.raises(BindError):
        ServerConfig(max_qubits=99, store_dir=tmp_path)
