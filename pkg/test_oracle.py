import pytest

from circuit import parse_circuit
from clifford1q import GATE_CLASS
from coeff import HALF, INV_SQRT2, ONE, ZERO, CycCoeff
from graph import Graph
from oracle import (
    OracleCapError,
    apply_gate_dense,
    graph_state_vector,
    initial_vector,
    simulate_dense,
    sum_to_vector,
    sums_equal,
    term_to_vector,
)
from state import StabilizerTerm, StateSum

OMEGA = CycCoeff(0, 1, 0, 0)
H = GATE_CLASS["H"].class_id
S = GATE_CLASS["S"].class_id
EDGE = Graph.from_edges(2, [(1, 2)])


def test_single_plus_state():
    assert term_to_vector(StabilizerTerm.plus(1)) == [INV_SQRT2, INV_SQRT2]


def test_edge_graph_state():
    assert graph_state_vector(EDGE) == [HALF, HALF, HALF, -HALF]


def test_hadamard_vop_gives_zero_state():
    assert term_to_vector(StabilizerTerm(ONE, [H], Graph(1))) == [ONE, ZERO]


def test_qubit_one_is_leftmost():
    vec = apply_gate_dense(initial_vector(3, "zero"), "X", [1])
    assert vec[0b100] == ONE


def test_t_gate():
    assert apply_gate_dense([ONE, ZERO], "T", [1]) == [ONE, ZERO]
    assert apply_gate_dense([ZERO, ONE], "T", [1]) == [ZERO, OMEGA]


def test_ccx_on_basis_state():
    vec = [ZERO] * 8
    vec[0b110] = ONE
    out = apply_gate_dense(vec, "CCX", [1, 2, 3])
    assert out[0b111] == ONE and out[0b110] == ZERO


def test_cz_on_plus_plus_is_edge_state():
    vec = apply_gate_dense(initial_vector(2, "plus"), "CZ", [1, 2])
    assert vec == graph_state_vector(EDGE)


def test_t_on_plus():
    vec = apply_gate_dense(initial_vector(1, "plus"), "T", [1])
    assert vec == [INV_SQRT2, INV_SQRT2 * OMEGA]


def test_sums_equal():
    s = StateSum(2, [StabilizerTerm(HALF, [H, 0], EDGE.copy())])
    doubled = StateSum(2, [StabilizerTerm(ONE, [H, 0], EDGE.copy())])
    assert sums_equal(s, s)
    assert not sums_equal(s, doubled)


def test_worked_two_t_gate_decomposition():
    hz = StabilizerTerm(ONE, [H, 0], EDGE.copy())
    hz.multiply_vop_right(1, GATE_CLASS["Z"])
    terms = [
        StabilizerTerm(INV_SQRT2, [S, H], EDGE.copy()),
        StabilizerTerm(INV_SQRT2 * OMEGA * hz.coeff, hz.vops, EDGE.copy()),
    ]
    circuit = parse_circuit("qubits 2\ninit plus\nT 1\nT 2")
    assert sum_to_vector(StateSum(2, terms)) == simulate_dense(circuit)


def test_linearity(make_term):
    a, b = make_term(3), make_term(3)
    both = sum_to_vector(StateSum(3, [a, b]))
    assert both == [x + y for x, y in zip(term_to_vector(a), term_to_vector(b))]


def test_cap_is_enforced():
    with pytest.raises(OracleCapError):
        term_to_vector(StabilizerTerm.plus(5), cap=4)
    with pytest.raises(OracleCapError):
        sums_equal(StateSum(5), StateSum(5), cap=4)
