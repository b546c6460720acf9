"""
Merging pairs of terms on the same graph whose vops differ by a Pauli
"""

from typing import List, NamedTuple, Optional

from clifford1q import INV, MUL, PAULI_OF_CLASS
from coeff import i_power
from projector import apply_z_projector, pauli_to_z
from state import LOCAL_PAULI_BITS, MergeCounts, PauliProduct, StabilizerTerm, StateSum, collect


class MergeResult(NamedTuple):
    """Merged term, or None when the pair cancels exactly"""

    term: Optional[StabilizerTerm]

    @property
    def cancelled(self) -> bool:
        return self.term is None


def relative_pauli(t1: StabilizerTerm, t2: StabilizerTerm):
    """(φ, P) with ⊗vops2 = ω^φ · ⊗vops1 · P, or None if some ratio is not a Pauli"""
    phi = 0
    x = z = 0
    s = 0
    for q, (v1, v2) in enumerate(zip(t1.vops, t2.vops), start=1):
        inv_class, inv_phase = INV[v1]
        cls, mul_phase = MUL[inv_class][v2]
        pauli = PAULI_OF_CLASS.get(cls)
        if pauli is None:
            return None
        letter, pauli_phase = pauli
        phi += inv_phase + mul_phase + pauli_phase
        xb, zb, t = LOCAL_PAULI_BITS[letter]
        x |= xb << q
        z |= zb << q
        s += t
    return phi % 8, PauliProduct(x, z, s % 4)


def try_merge(t1: StabilizerTerm, t2: StabilizerTerm) -> Optional[MergeResult]:
    """Rewrite t1 + t2 as one term (or nothing) when they differ by a Pauli with ratio i^k"""
    if t1.graph != t2.graph or t1.coeff.is_zero() or t2.coeff.is_zero():
        return None
    relation = relative_pauli(t1, t2)
    if relation is None:
        return None
    phi, pauli = relation
    form = pauli_to_z(t1.graph, pauli)
    # t1 + t2 = (⊗vops1)(c1 + c2·ω^{φ+2k} Z_B)|G⟩
    scaled = t2.coeff.mul_omega(phi + 2 * form.k)
    if not form.B:
        total = t1.coeff + scaled
        if total.is_zero():
            return MergeResult(None)
        merged = t1.copy()
        merged.coeff = total
        return MergeResult(merged)
    for k in range(4):
        if scaled == t1.coeff * i_power(k):
            return MergeResult(apply_z_projector(t1.copy(), k, form.B))
    return None


def _first_merge(terms: List[StabilizerTerm], counts: MergeCounts) -> bool:
    keys = [t.graph.key() for t in terms]
    for i in range(len(terms)):
        for j in range(i + 1, len(terms)):
            if keys[i] != keys[j]:
                continue
            result = try_merge(terms[i], terms[j])
            if result is None:
                continue
            if result.cancelled:
                counts.cancellations += 1
                del terms[j]
                del terms[i]
            else:
                counts.merges += 1
                terms[i] = result.term
                del terms[j]
            return True
    return False


def normalize(sum_: StateSum, counts: Optional[MergeCounts] = None) -> StateSum:
    """collect, then greedy pairwise merging in index order until nothing changes"""
    counts = counts if counts is not None else MergeCounts()
    current = collect(sum_, counts)
    while True:
        terms = list(current.terms)
        if not _first_merge(terms, counts):
            return current
        current = collect(StateSum(sum_.n, terms), counts)
