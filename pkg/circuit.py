"""
Circuit files: parsing and printing

    # comment
    qubits 3
    init plus
    H 1
    CCX 1 2 3
"""

from typing import List, Literal

from pydantic import BaseModel, Field

from gates import GATES, GateError, check_operands


class CircuitError(ValueError):
    """Malformed circuit text; line is 1-based"""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}" if line else message)


class GateOp(BaseModel):
    name: str
    qubits: List[int]

    def __str__(self) -> str:
        return " ".join([self.name] + [str(q) for q in self.qubits])


class Circuit(BaseModel):
    n: int = Field(ge=1)
    init: Literal["plus", "zero"] = "zero"
    gates: List[GateOp] = Field(default_factory=list)

    def counts(self) -> dict:
        clifford = sum(1 for g in self.gates if GATES[g.name].level == "clifford")
        return {"clifford": clifford, "c3": len(self.gates) - clifford}


def _parse_int(token: str, what: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise CircuitError(f"{what} must be an integer, got {token!r}", line) from None


def parse_circuit(text: str) -> Circuit:
    n = None
    init = None
    gates: List[GateOp] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        head = tokens[0].lower()
        if n is None:
            if head != "qubits":
                raise CircuitError("missing 'qubits N' directive before first statement", lineno)
            if len(tokens) != 2:
                raise CircuitError("expected 'qubits N'", lineno)
            n = _parse_int(tokens[1], "qubit count", lineno)
            if n < 1:
                raise CircuitError(f"qubit count must be positive, got {n}", lineno)
            continue
        if head == "qubits":
            raise CircuitError("duplicate 'qubits' directive", lineno)
        if head == "init":
            if init is not None:
                raise CircuitError("duplicate 'init' directive", lineno)
            if len(tokens) != 2 or tokens[1].lower() not in ("plus", "zero"):
                raise CircuitError("expected 'init plus' or 'init zero'", lineno)
            init = tokens[1].lower()
            continue
        name = tokens[0].upper()
        qubits = [_parse_int(t, "operand", lineno) for t in tokens[1:]]
        try:
            check_operands(name, qubits, n)
        except GateError as e:
            raise CircuitError(str(e), lineno) from None
        gates.append(GateOp(name=name, qubits=qubits))
    if n is None:
        # reported against the last line, or line 1 for empty text
        raise CircuitError("missing 'qubits N' directive", max(1, len(text.splitlines())))
    return Circuit(n=n, init=init or "zero", gates=gates)


def format_circuit(circuit: Circuit) -> str:
    lines = [f"qubits {circuit.n}", f"init {circuit.init}"]
    lines.extend(str(op) for op in circuit.gates)
    return "\n".join(lines) + "\n"
