"""
State representation: vop-decorated graph-state terms and their sums
"""

from dataclasses import dataclass
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

from clifford1q import IDENTITY_CLASS, MUL, WORDS, PhasedClass
from coeff import ONE, CycCoeff
from graph import Graph

LOCAL_PAULI_BITS: Dict[str, Tuple[int, int, int]] = {
    "I": (0, 0, 0),
    "X": (1, 0, 0),
    "Y": (1, 1, 1),
    "Z": (0, 1, 0),
}


class StabilizerTerm:
    """coeff · (⊗_q vops[q-1]) |graph⟩"""

    __slots__ = ("coeff", "vops", "graph")

    def __init__(self, coeff: CycCoeff, vops: List[int], graph: Graph):
        if len(vops) != graph.n:
            raise ValueError(f"{len(vops)} vops for a {graph.n}-vertex graph")
        self.coeff = coeff
        self.vops = list(vops)
        self.graph = graph

    @classmethod
    def plus(cls, n: int, coeff: CycCoeff = ONE) -> "StabilizerTerm":
        return cls(coeff, [IDENTITY_CLASS] * n, Graph(n))

    @property
    def n(self) -> int:
        return self.graph.n

    def copy(self) -> "StabilizerTerm":
        return StabilizerTerm(self.coeff, self.vops, self.graph.copy())

    def key(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return (tuple(self.vops), self.graph.key())

    def multiply_vop_left(self, v: int, pc: PhasedClass) -> "StabilizerTerm":
        """vops[v] := pc · vops[v]"""
        cls, phase = MUL[pc.class_id][self.vops[v - 1]]
        self.vops[v - 1] = cls
        self.coeff = self.coeff.mul_omega(phase + pc.phase_exp)
        return self

    def multiply_vop_right(self, v: int, pc: PhasedClass) -> "StabilizerTerm":
        """vops[v] := vops[v] · pc"""
        cls, phase = MUL[self.vops[v - 1]][pc.class_id]
        self.vops[v - 1] = cls
        self.coeff = self.coeff.mul_omega(phase + pc.phase_exp)
        return self

    def vop_words(self) -> List[str]:
        return [WORDS[c] for c in self.vops]

    def to_dict(self) -> dict:
        return {
            "coeff": self.coeff.to_dict(),
            "vops": self.vop_words(),
            "edges": [[a, b] for a, b in self.graph.edges()],
        }

    def __repr__(self) -> str:
        return f"StabilizerTerm({self.coeff.approx()}, {self.vop_words()}, {self.graph.edges()})"


class StateSum:
    """Linear combination of terms on a common qubit count"""

    def __init__(self, n: int, terms: Optional[List[StabilizerTerm]] = None):
        self.n = n
        self.terms: List[StabilizerTerm] = []
        for term in terms or []:
            self.append(term)

    def append(self, term: StabilizerTerm):
        if term.n != self.n:
            raise ValueError(f"term on {term.n} qubits added to a {self.n}-qubit sum")
        self.terms.append(term)

    def copy(self) -> "StateSum":
        return StateSum(self.n, [t.copy() for t in self.terms])

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[StabilizerTerm]:
        return iter(self.terms)

    def __getitem__(self, index: int) -> StabilizerTerm:
        return self.terms[index]

    def to_dicts(self) -> List[dict]:
        return [t.to_dict() for t in self.terms]


@dataclass(frozen=True)
class PauliProduct:
    """i^s · ∏ X^x · ∏ Z^z, X factors left of Z factors; bit q is qubit q"""

    x: int = 0
    z: int = 0
    s: int = 0

    @classmethod
    def single(cls, q: int, letter: str) -> "PauliProduct":
        xb, zb, t = LOCAL_PAULI_BITS[letter]
        return cls(xb << q, zb << q, t)

    @classmethod
    def from_letters(cls, letters: Dict[int, str], s: int = 0) -> "PauliProduct":
        product = cls(0, 0, s % 4)
        for q in sorted(letters):
            product = product * cls.single(q, letters[q])
        return product

    def __mul__(self, other: "PauliProduct") -> "PauliProduct":
        # Z^z1 X^x2 = (-1)^{|z1 & x2|} X^x2 Z^z1
        swaps = bin(self.z & other.x).count("1")
        return PauliProduct(self.x ^ other.x, self.z ^ other.z, (self.s + other.s + 2 * swaps) % 4)


class ZProjectorForm(NamedTuple):
    """I + i^k ∏_{j∈B} Z_j, with B a vertex bitmask"""

    k: int
    B: int


@dataclass
class MergeCounts:
    merges: int = 0
    cancellations: int = 0


def collect(sum_: StateSum, counts: Optional[MergeCounts] = None) -> StateSum:
    """Add coefficients of identical (vops, graph) terms and drop zeros"""
    combined: Dict[tuple, StabilizerTerm] = {}
    for term in sum_:
        if term.coeff.is_zero():
            continue
        key = term.key()
        existing = combined.get(key)
        if existing is None:
            combined[key] = term.copy()
            continue
        existing.coeff = existing.coeff + term.coeff
        if counts is not None:
            counts.merges += 1
    survivors = []
    for term in combined.values():
        if term.coeff.is_zero():
            if counts is not None:
                counts.cancellations += 1
            continue
        survivors.append(term)
    return StateSum(sum_.n, survivors)
