#!/usr/bin/env python3
"""Record real API payloads as frontend test fixtures.

Run from the repository root after changing any wire format:
    python3 frontend/scripts/make_fixtures.py
"""
import json
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from qlens import ServerConfig
from qlens.examples import example_source
from qlens.server import create_app

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def dump(name: str, payload) -> None:
    OUT.joinpath(name).write_text(json.dumps(payload, indent=2) + "\n")
    print(f"wrote {name}")


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    with tempfile.TemporaryDirectory() as tmp:
        client = TestClient(create_app(ServerConfig(store_dir=Path(tmp))))

        dump("examples.json", client.get("/api/examples").json())

        grover_id = client.post("/api/circuits",
                                content=example_source("grover2")).json()["id"]
        dump("grover_post.json", {"id": grover_id})
        dump("grover_circuit.json", client.get(f"/api/circuits/{grover_id}").json())
        dump("grover_summary.json",
             client.get(f"/api/circuits/{grover_id}/summary").json())
        dump("grover_evolution_full.json",
             client.get(f"/api/circuits/{grover_id}/evolution").json())
        dump("grover_evolution_2_5.json",
             client.get(f"/api/circuits/{grover_id}/evolution?from=2&to=5").json())
        dump("grover_explanation_s15.json",
             client.get(f"/api/circuits/{grover_id}/steps/15/explanation?label=11").json())
        dump("grover_explanation_s15_10.json",
             client.get(f"/api/circuits/{grover_id}/steps/15/explanation?label=10").json())
        dump("grover_explanation_s0.json",
             client.get(f"/api/circuits/{grover_id}/steps/0/explanation?label=00").json())
        dump("grover_dandelion_s15_k1.json",
             client.get(f"/api/circuits/{grover_id}/steps/15/dandelion?k=1").json())
        dump("grover_dandelion_s15_k025.json",
             client.get(f"/api/circuits/{grover_id}/steps/15/dandelion?k=0.25").json())

        qft_id = client.post("/api/circuits",
                             content=example_source("qft3")).json()["id"]
        dump("qft_post.json", {"id": qft_id})
        dump("qft_dandelion_s4_k025.json",
             client.get(f"/api/circuits/{qft_id}/steps/4/dandelion?k=0.25").json())


if __name__ == "__main__":
    main()
