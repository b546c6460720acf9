"""
Projector pipeline: (I + i^s P) applied to a single term

P is pulled back through the vops, rewritten as a Z-string on the bare graph
state using X_a|G⟩ = ∏_{b∈nbhd(a)} Z_b|G⟩, and the resulting Z-projector is
absorbed into new vops and edges.
"""

from typing import List, Optional, Tuple

from clifford1q import GATE_CLASS, PULLBACK, TABLES, PhasedClass
from coeff import ONE, SQRT2, i_power
from graph import Graph, iter_bits
from state import LOCAL_PAULI_BITS, PauliProduct, StabilizerTerm, ZProjectorForm

H_CLASS = GATE_CLASS["H"]
S_CLASS = GATE_CLASS["S"]
Z_CLASS = GATE_CLASS["Z"]
IDENTITY = GATE_CLASS["I"]


class ProjectorError(ValueError):
    """Z-projector requested with an empty support or a pivot outside it"""


def _local_product(
    left: Tuple[int, int, int], right: Tuple[int, int, int]
) -> Tuple[int, int, int]:
    x1, z1, t1 = left
    x2, z2, t2 = right
    return (x1 ^ x2, z1 ^ z2, t1 + t2 + 2 * (z1 & x2))


def _pulled_back(class_id: int, letter: str) -> Tuple[int, int, int]:
    image, sign = PULLBACK[class_id][letter]
    x, z, t = LOCAL_PAULI_BITS[image]
    return (x, z, t + (0 if sign > 0 else 2))


def push_pauli_through_vops(term: StabilizerTerm, p: PauliProduct) -> PauliProduct:
    """P′ with P · (⊗ vops) = (⊗ vops) · P′"""
    x_out = 0
    z_out = 0
    s = p.s
    for q in iter_bits(p.x | p.z):
        cls = term.vops[q - 1]
        local = (0, 0, 0)
        if p.x >> q & 1:
            local = _local_product(local, _pulled_back(cls, "X"))
        if p.z >> q & 1:
            local = _local_product(local, _pulled_back(cls, "Z"))
        x_out |= local[0] << q
        z_out |= local[1] << q
        s += local[2]
    return PauliProduct(x_out, z_out, s % 4)


def pauli_to_z(g: Graph, p: PauliProduct) -> ZProjectorForm:
    """Form (k, B) with p|G⟩ = i^k ∏_{j∈B} Z_j |G⟩; B is a vertex bitmask"""
    s = p.s
    z = p.z
    for a in iter_bits(p.x):
        # X_a moves right past the current Z-string, then becomes Z_{nbhd(a)}
        s += 2 * (z >> a & 1)
        z ^= g.adj[a]
    return ZProjectorForm(s % 4, z)


def _s_power(k: int) -> PhasedClass:
    return [IDENTITY, S_CLASS, Z_CLASS, GATE_CLASS["SDG"]][k % 4]


def z_projector_ops(
    g: Graph, k: int, B: int, pivot: Optional[int] = None
) -> Tuple[int, List[PhasedClass], List[int]]:
    """Pivot, per-vertex local factors and edge flips realising (I + i^k Z_B)|G⟩

    (I + i^k Z_B)|G⟩ = √2 · (⊗ locals)|G ⊕ flips⟩ with pivot v in B
    (default min(B)), A = nbhd(v) ∪ {v}. Off-diagonal CS^k pairs inside A toggle when k is odd,
    ordered CZ pairs A×B toggle by parity, and the diagonal parts become S^k,
    Z and the pivot's H·Z prefix.
    """
    if not B:
        raise ProjectorError("Z-projector support must be non-empty")
    if pivot is None:
        pivot = (B & -B).bit_length() - 1
    elif not (1 <= pivot <= g.n and B >> pivot & 1):
        raise ProjectorError(f"pivot {pivot} is not in the Z-projector support")
    k %= 4
    A = g.adj[pivot] | (1 << pivot)
    flips = [0] * (g.n + 1)
    if k & 1:
        for x in iter_bits(A):
            flips[x] ^= A & ~(1 << x)
    for x in iter_bits(A):
        flips[x] ^= B & ~(1 << x)
    for y in iter_bits(B):
        flips[y] ^= A & ~(1 << y)

    locals_: List[PhasedClass] = [IDENTITY] * (g.n + 1)
    s_k = _s_power(k)
    for x in iter_bits(A):
        if x == pivot:
            continue
        local = s_k
        if B >> x & 1:
            local = _compose(local, Z_CLASS)
        locals_[x] = local
    # H·Z·S^k·Z on the pivot, which lies in A ∩ B
    locals_[pivot] = _compose(H_CLASS, s_k)
    return pivot, locals_, flips


def _compose(left: PhasedClass, right: PhasedClass) -> PhasedClass:
    return TABLES.compose(left, right)


def apply_z_projector(
    term: StabilizerTerm, k: int, B: int, pivot: Optional[int] = None
) -> StabilizerTerm:
    """(I + i^k Z_B) applied inside the vops, i.e. to the bare graph state"""
    _, locals_, flips = z_projector_ops(term.graph, k, B, pivot)
    term.graph.apply_flips(flips)
    for q in range(1, term.n + 1):
        if locals_[q] != IDENTITY:
            term.multiply_vop_right(q, locals_[q])
    term.coeff = term.coeff * SQRT2
    return term


def apply_projector(term: StabilizerTerm, s: int, p: PauliProduct) -> Optional[StabilizerTerm]:
    """(I + i^s p) applied to the term in place; None when the result is zero"""
    pulled = push_pauli_through_vops(term, p)
    form = pauli_to_z(term.graph, pulled)
    k = (s + form.k) % 4
    if not form.B:
        if k == 2:
            return None
        term.coeff = term.coeff * (ONE + i_power(k))
        return term
    return apply_z_projector(term, k, form.B)
