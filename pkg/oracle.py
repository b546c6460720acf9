"""
Exact dense state-vector reference simulator

Amplitudes are CycCoeff values, so every comparison made against this module
is an exact equality. Basis index bit (n - q) holds qubit q, i.e. qubit 1 is
the leftmost tensor factor.
"""

import os
from typing import Dict, List, Sequence

from clifford1q import REPS, Matrix
from coeff import INV_SQRT2, ONE, ZERO, CycCoeff, I, i_power
from gates import GateError, check_operands
from graph import Graph, iter_bits
from state import PauliProduct, StabilizerTerm, StateSum

DEFAULT_CAP = int(os.environ.get("ORACLE_CAP", "16"))

Vector = List[CycCoeff]
DenseMatrix = List[List[CycCoeff]]


class OracleCapError(ValueError):
    """Dense expansion requested above the qubit cap"""


def _check_cap(n: int, cap: int = None):
    cap = DEFAULT_CAP if cap is None else cap
    if n > cap:
        raise OracleCapError(f"{n} qubits exceeds the dense oracle cap of {cap}")


def inverse_sqrt2_power(n: int) -> CycCoeff:
    """2^{-n/2}"""
    if n % 2 == 0:
        return CycCoeff(1, 0, 0, 0, n // 2)
    return CycCoeff(0, 1, 0, -1, (n + 1) // 2)


def _vertex_mask(index: int, n: int) -> int:
    mask = 0
    for q in range(1, n + 1):
        if index >> (n - q) & 1:
            mask |= 1 << q
    return mask


def graph_state_vector(g: Graph, cap: int = None) -> Vector:
    n = g.n
    _check_cap(n, cap)
    norm = inverse_sqrt2_power(n)
    vec = []
    for index in range(1 << n):
        support = _vertex_mask(index, n)
        inside = sum(bin(g.adj[v] & support).count("1") for v in iter_bits(support)) // 2
        vec.append(-norm if inside & 1 else norm)
    return vec


def apply_matrix(vec: Vector, matrix: DenseMatrix, qubits: Sequence[int]) -> Vector:
    """Apply a 2^k x 2^k matrix; qubits[0] is the most significant gate index bit"""
    n = len(vec).bit_length() - 1
    k = len(qubits)
    shifts = [n - q for q in qubits]
    gate_mask = 0
    for shift in shifts:
        gate_mask |= 1 << shift
    offsets = []
    for j in range(1 << k):
        offset = 0
        for i, shift in enumerate(shifts):
            if j >> (k - 1 - i) & 1:
                offset |= 1 << shift
        offsets.append(offset)
    out = list(vec)
    for base in range(1 << n):
        if base & gate_mask:
            continue
        sub = [vec[base | off] for off in offsets]
        for row, off in enumerate(offsets):
            acc = ZERO
            for col, amp in enumerate(sub):
                entry = matrix[row][col]
                if entry.is_zero() or amp.is_zero():
                    continue
                acc = acc + entry * amp
            out[base | off] = acc
    return out


def _as_dense(m: Matrix) -> DenseMatrix:
    return [[m[0], m[1]], [m[2], m[3]]]


def _identity(dim: int) -> DenseMatrix:
    return [[ONE if r == c else ZERO for c in range(dim)] for r in range(dim)]


def controlled(u: DenseMatrix, controls: int = 1) -> DenseMatrix:
    """Block diag(I, ..., I, U) with controls on the leading qubits"""
    dim = len(u)
    total = dim << controls
    out = _identity(total)
    start = total - dim
    for r in range(dim):
        for c in range(dim):
            out[start + r][start + c] = u[r][c]
    return out


def _permutation(dim: int, mapping: Dict[int, int]) -> DenseMatrix:
    out = [[ZERO] * dim for _ in range(dim)]
    for col in range(dim):
        out[mapping.get(col, col)][col] = ONE
    return out


_H = [[INV_SQRT2, INV_SQRT2], [INV_SQRT2, -INV_SQRT2]]
_X = [[ZERO, ONE], [ONE, ZERO]]
_Y = [[ZERO, -I], [I, ZERO]]
_Z = [[ONE, ZERO], [ZERO, -ONE]]
_S = [[ONE, ZERO], [ZERO, I]]
_SDG = [[ONE, ZERO], [ZERO, -I]]
_T = [[ONE, ZERO], [ZERO, CycCoeff(0, 1, 0, 0)]]
_SWAP = _permutation(4, {1: 2, 2: 1})

GATE_MATRICES: Dict[str, DenseMatrix] = {
    "X": _X,
    "Y": _Y,
    "Z": _Z,
    "H": _H,
    "S": _S,
    "SDG": _SDG,
    "T": _T,
    "CZ": controlled(_Z),
    "CX": controlled(_X),
    "SWAP": _SWAP,
    "CS": controlled(_S),
    "CH": controlled(_H),
    "CCZ": controlled(_Z, 2),
    "CCX": controlled(_X, 2),
    "CSWAP": controlled(_SWAP),
}


def local_matrix(class_id: int) -> DenseMatrix:
    return _as_dense(REPS[class_id])


def term_to_vector(term: StabilizerTerm, cap: int = None) -> Vector:
    vec = graph_state_vector(term.graph, cap)
    for q, cls in enumerate(term.vops, start=1):
        if cls != 0:
            vec = apply_matrix(vec, local_matrix(cls), [q])
    return [term.coeff * amp for amp in vec]


def add_vectors(u: Vector, v: Vector) -> Vector:
    return [a + b for a, b in zip(u, v)]


def scale_vector(v: Vector, c: CycCoeff) -> Vector:
    return [c * a for a in v]


def sum_to_vector(sum_: StateSum, cap: int = None) -> Vector:
    _check_cap(sum_.n, cap)
    total = [ZERO] * (1 << sum_.n)
    for term in sum_:
        total = add_vectors(total, term_to_vector(term, cap))
    return total


def sums_equal(s1: StateSum, s2: StateSum, cap: int = None) -> bool:
    if s1.n != s2.n:
        return False
    return sum_to_vector(s1, cap) == sum_to_vector(s2, cap)


def apply_gate_dense(vec: Vector, gate: str, operands: Sequence[int]) -> Vector:
    n = len(vec).bit_length() - 1
    check_operands(gate, operands, n, error_cls=GateError)
    return apply_matrix(vec, GATE_MATRICES[gate], operands)


def apply_pauli_dense(vec: Vector, p: PauliProduct) -> Vector:
    """i^s X^x Z^z applied to vec"""
    for q in iter_bits(p.z):
        vec = apply_matrix(vec, _Z, [q])
    for q in iter_bits(p.x):
        vec = apply_matrix(vec, _X, [q])
    if p.s % 4:
        vec = scale_vector(vec, i_power(p.s))
    return vec


def apply_projector_dense(vec: Vector, s: int, p: PauliProduct) -> Vector:
    """(I + i^s p) vec"""
    return add_vectors(vec, scale_vector(apply_pauli_dense(vec, p), i_power(s)))


def initial_vector(n: int, init: str, cap: int = None) -> Vector:
    _check_cap(n, cap)
    if init == "plus":
        return [inverse_sqrt2_power(n)] * (1 << n)
    vec = [ZERO] * (1 << n)
    vec[0] = ONE
    return vec


def simulate_dense(circuit, cap: int = None) -> Vector:
    """Replay a whole circuit on the dense vector"""
    vec = initial_vector(circuit.n, circuit.init, cap)
    for op in circuit.gates:
        vec = apply_gate_dense(vec, op.name, op.qubits)
    return vec


def vector_to_pairs(vec: Vector) -> List[List[str]]:
    pairs = []
    for amp in vec:
        value = amp.to_complex()
        re = 0.0 if abs(value.real) < 5e-7 else value.real
        im = 0.0 if abs(value.imag) < 5e-7 else value.imag
        pairs.append([f"{re:.6f}", f"{im:.6f}"])
    return pairs
