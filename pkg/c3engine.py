"""
Third-level gates as sums of projector products

Each gate splits into two branches, scalar · ∏(I + i^s P) · cliffords, so a
term becomes at most two terms before merging.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from cliffordsim import apply_clifford
from coeff import HALF, ONE, CycCoeff
from gates import C3_GATES, GateError, check_operands
from merge import normalize
from projector import apply_projector
from state import MergeCounts, PauliProduct, StabilizerTerm, StateSum

logger = logging.getLogger(__name__)

QUARTER = CycCoeff(1, 0, 0, 0, 2)


class C3Error(GateError):
    """Invalid third-level gate application"""


@dataclass
class Branch:
    """scalar · P_1 P_2 ... P_m · cliffords, with P_j = I + i^s_j p_j"""

    scalar: CycCoeff
    projectors: List[Tuple[int, PauliProduct]] = field(default_factory=list)
    cliffords: List[Tuple[str, Tuple[int, ...]]] = field(default_factory=list)

    def apply(self, term: StabilizerTerm) -> Optional[StabilizerTerm]:
        out = term.copy()
        for gate, operands in self.cliffords:
            apply_clifford(out, gate, operands)
        out.coeff = out.coeff * self.scalar
        for s, p in reversed(self.projectors):
            out = apply_projector(out, s, p)
            if out is None:
                return None
        if out.coeff.is_zero():
            return None
        return out


@dataclass
class C3Decomposition:
    gate: str
    operands: Tuple[int, ...]
    branches: List[Branch]


def _z(q: int) -> PauliProduct:
    return PauliProduct.single(q, "Z")


def _x(q: int) -> PauliProduct:
    return PauliProduct.single(q, "X")


def decompose_c3(gate: str, operands: Sequence[int]) -> C3Decomposition:
    check_operands(gate, operands, allowed=C3_GATES, error_cls=C3Error)
    ops = tuple(operands)
    plus, minus = 0, 2
    if gate == "T":
        (a,) = ops
        branches = [
            Branch(HALF, [(plus, _z(a))]),
            Branch(HALF.mul_omega(1), [(minus, _z(a))]),
        ]
    elif gate in ("CS", "CH"):
        a, b = ops
        target = "S" if gate == "CS" else "H"
        branches = [
            Branch(HALF, [(plus, _z(a))]),
            Branch(HALF, [(minus, _z(a))], [(target, (b,))]),
        ]
    elif gate == "CCZ":
        a, b, c = ops
        branches = [
            Branch(ONE),
            Branch(-QUARTER, [(minus, _z(a)), (minus, _z(b)), (minus, _z(c))]),
        ]
    elif gate == "CCX":
        a, b, c = ops
        branches = [
            Branch(ONE),
            Branch(-QUARTER, [(minus, _z(a)), (minus, _z(b)), (minus, _x(c))]),
        ]
    else:
        a, b, c = ops
        branches = [
            Branch(ONE),
            Branch(
                -QUARTER,
                [(minus, _z(a)), (minus, _z(b) * _z(c)), (minus, _x(b) * _x(c))],
            ),
        ]
    return C3Decomposition(gate, ops, branches)


def split_term(term: StabilizerTerm, decomposition: C3Decomposition) -> List[StabilizerTerm]:
    """Branch outputs for one term, never more than two"""
    outputs = []
    for branch in decomposition.branches:
        out = branch.apply(term)
        if out is not None:
            outputs.append(out)
    return outputs


def apply_c3(
    sum_: StateSum,
    gate: str,
    operands: Sequence[int],
    merge: bool = True,
    counts: Optional[MergeCounts] = None,
) -> StateSum:
    check_operands(gate, operands, sum_.n, allowed=C3_GATES, error_cls=C3Error)
    decomposition = decompose_c3(gate, operands)
    result = StateSum(sum_.n)
    for term in sum_:
        for out in split_term(term, decomposition):
            result.append(out)
    logger.debug(f"{gate} {list(operands)}: {len(sum_)} -> {len(result)} terms before merging")
    if merge:
        result = normalize(result, counts)
    return result
