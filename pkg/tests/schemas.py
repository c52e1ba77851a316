"""Hand-rolled validators for the published API response schemas."""


def check_number(value):
    assert isinstance(value, (int, float)) and not isinstance(value, bool)


def check_pair(value):
    assert isinstance(value, list) and len(value) == 2
    for v in value:
        check_number(v)


def check_label(value, n):
    assert isinstance(value, str) and len(value) == n
    assert all(c in "01" for c in value)


def check_gate(obj):
    assert set(obj) <= {"kind", "operands", "theta"}
    assert obj["kind"] in {"h", "x", "cnot", "swap", "cp"}
    assert ("theta" in obj) == (obj["kind"] == "cp")
    assert all(isinstance(q, int) for q in obj["operands"])


def check_circuit_doc(doc):
    assert set(doc) <= {"qubits", "title", "blocks"}
    assert isinstance(doc["qubits"], int)
    for block in doc["blocks"]:
        assert set(block) == {"name", "gates"}
        for gate in block["gates"]:
            check_gate(gate)


def check_steps_doc(steps):
    for position, step in enumerate(steps):
        assert set(step) == {"step", "block", "gate"}
        assert step["step"] == position
        check_gate(step["gate"])


def check_summary_doc(doc, n, step_count):
    assert set(doc) == {"num_qubits", "step_count", "labels", "matrix",
                        "block_spans", "creations"}
    assert doc["num_qubits"] == n and doc["step_count"] == step_count
    assert doc["labels"] == [format(i, f"0{n}b") for i in range(2**n)]
    assert len(doc["matrix"]) == step_count + 1
    for row in doc["matrix"]:
        assert len(row) == 2**n
        assert abs(sum(row) - 1.0) < 1e-9
    for span in doc["block_spans"]:
        assert set(span) == {"block", "name", "first_step", "last_step"}
    assert set(doc["creations"]) == set(doc["labels"])
    for value in doc["creations"].values():
        assert value is None or isinstance(value, int)


def check_evolution_doc(doc, n):
    assert set(doc) == {"num_qubits", "from_step", "to_step", "nodes", "edges", "hubs"}
    node_keys = set()
    for node in doc["nodes"]:
        assert set(node) == {"step", "label", "index", "amp", "prob", "sign"}
        check_label(node["label"], n)
        check_pair(node["amp"])
        check_number(node["prob"])
        assert node["sign"] in {"positive", "negative"}
        node_keys.add((node["step"], node["label"]))
    for edge in doc["edges"]:
        assert set(edge) == {"from", "to", "contribution"}
        assert edge["to"]["step"] == edge["from"]["step"] + 1
        check_pair(edge["contribution"])
        assert (edge["from"]["step"], edge["from"]["label"]) in node_keys
        assert (edge["to"]["step"], edge["to"]["label"]) in node_keys
    for hub in doc["hubs"]:
        assert set(hub) == {"step", "prob", "labels"}
        for label in hub["labels"]:
            check_label(label, n)


def check_explanation_doc(doc, n):
    assert set(doc) == {"step", "gate", "input_label", "rows", "output_labels"}
    check_gate(doc["gate"])
    check_label(doc["input_label"], n)
    assert len(doc["rows"]) == n
    for row in doc["rows"]:
        assert set(row) == {"qubit", "initial", "operation", "finals"}
        assert row["initial"] in "01"
        assert row["operation"] in {"hadamard", "not", "control", "target",
                                    "swap_pair", "phase", "none"}
    for label in doc["output_labels"]:
        check_label(label, n)


def check_figure_doc(doc):
    assert set(doc) == {"k", "axis_extent", "elements"}
    for el in doc["elements"]:
        assert set(el) == {"label", "point", "r0", "k", "center", "radius", "sticks"}
        check_pair(el["point"])
        check_pair(el["center"])
        check_number(el["r0"])
        check_number(el["radius"])
        assert set(el["sticks"]) == {"real", "imag"}
        x, y = el["point"]
        assert el["sticks"]["real"] == [[x, y], [0.0, y]]
        assert el["sticks"]["imag"] == [[x, y], [x, 0.0]]
