"""Exception hierarchy shared by all qlens modules.

Every error carries a stable ``code`` used verbatim in API error bodies
({"error": code, "detail": text}) and CLI diagnostics.
"""


class QlensError(Exception):
    code = "error"


class SchemaError(QlensError):
    """Circuit document violates the JSON schema (missing/extra/ill-typed fields)."""

    code = "schema_error"


class BoundsError(QlensError):
    """A qubit index is outside the circuit's register."""

    code = "bounds_error"


class EmptyCircuitError(QlensError):
    """Circuit or block contains no gates."""

    code = "empty_circuit"


class ParseError(QlensError):
    """Text-format syntax error; carries 1-based line/column of the offending statement."""

    code = "parse_error"

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"{message} (line {line}, column {column})" if line else message)
        self.line = line
        self.column = column


class UnsupportedGateError(ParseError):
    """Gate mnemonic outside the supported set {h, x, cx, swap, cp}."""

    code = "unsupported_gate"

    def __init__(self, mnemonic: str, line: int = 0, column: int = 0):
        super().__init__(f"unsupported gate '{mnemonic}'", line, column)
        self.mnemonic = mnemonic


class StepRangeError(QlensError):
    """Step or state index outside the simulated trace."""

    code = "range_error"


class NodeNotFoundError(QlensError):
    """Requested (step, label) node is not part of the evolution graph."""

    code = "node_not_found"


class DeadStateError(QlensError):
    """Requested basis state has no probability mass at the given step."""

    code = "dead_state"


class BadScaleError(QlensError):
    """Dandelion scale factor outside (0, 1]."""

    code = "bad_scale"


class CapExceededError(QlensError):
    """Circuit qubit count exceeds the configured cap."""

    code = "cap_exceeded"


class BindError(QlensError):
    """Server could not bind its listen address."""

    code = "bind_error"
