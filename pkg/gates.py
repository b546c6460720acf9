"""
Gate catalogue shared by the parser, the simulators and the HTTP surface
"""

from typing import Dict, NamedTuple, Sequence, Type


class GateError(ValueError):
    """Unknown gate, wrong operand count or invalid operands"""


class GateSpec(NamedTuple):
    name: str
    arity: int
    level: str
    description: str


GATES: Dict[str, GateSpec] = {
    spec.name: spec
    for spec in (
        GateSpec("X", 1, "clifford", "Pauli X"),
        GateSpec("Y", 1, "clifford", "Pauli Y"),
        GateSpec("Z", 1, "clifford", "Pauli Z"),
        GateSpec("H", 1, "clifford", "Hadamard"),
        GateSpec("S", 1, "clifford", "Phase gate diag(1, i)"),
        GateSpec("SDG", 1, "clifford", "Inverse phase gate diag(1, -i)"),
        GateSpec("CZ", 2, "clifford", "Controlled Z"),
        GateSpec("CX", 2, "clifford", "Controlled X; control first"),
        GateSpec("SWAP", 2, "clifford", "Swap two qubits"),
        GateSpec("T", 1, "c3", "diag(1, e^{iπ/4})"),
        GateSpec("CS", 2, "c3", "Controlled S; control first"),
        GateSpec("CH", 2, "c3", "Controlled Hadamard; control first"),
        GateSpec("CCZ", 3, "c3", "Doubly controlled Z"),
        GateSpec("CCX", 3, "c3", "Toffoli; controls first"),
        GateSpec("CSWAP", 3, "c3", "Fredkin; control first"),
    )
}

CLIFFORD_GATES = frozenset(name for name, spec in GATES.items() if spec.level == "clifford")
C3_GATES = frozenset(name for name, spec in GATES.items() if spec.level == "c3")


def check_operands(
    name: str,
    operands: Sequence[int],
    n: int = None,
    allowed: frozenset = None,
    error_cls: Type[ValueError] = GateError,
):
    """Validate gate name, arity, range and distinctness"""
    spec = GATES.get(name)
    if spec is None or (allowed is not None and name not in allowed):
        raise error_cls(f"unknown gate {name!r}")
    if len(operands) != spec.arity:
        raise error_cls(f"{name} takes {spec.arity} operand(s), got {len(operands)}")
    if n is not None:
        for q in operands:
            if not 1 <= q <= n:
                raise error_cls(f"{name}: qubit {q} out of range 1..{n}")
    if len(set(operands)) != len(operands):
        raise error_cls(f"{name}: repeated operand in {list(operands)}")
