import random

import pytest

from clifford1q import GATE_CLASS
from coeff import HALF, ONE, CycCoeff
from graph import Graph
from oracle import apply_pauli_dense, graph_state_vector, sum_to_vector
from state import MergeCounts, PauliProduct, StabilizerTerm, StateSum, collect

H = GATE_CLASS["H"].class_id
S = GATE_CLASS["S"].class_id


def test_collect_cancels_opposite_terms():
    t = StabilizerTerm(HALF, [H, 0], Graph.from_edges(2, [(1, 2)]))
    u = t.copy()
    u.coeff = -HALF
    counts = MergeCounts()
    assert len(collect(StateSum(2, [t, u]), counts)) == 0
    assert counts.cancellations == 1


def test_collect_keeps_distinct_terms_in_order():
    t = StabilizerTerm(ONE, [H, 0], Graph(2))
    u = StabilizerTerm(HALF, [0, S], Graph(2))
    out = collect(StateSum(2, [t, u]))
    assert [x.key() for x in out] == [t.key(), u.key()]
    assert [x.coeff for x in out] == [ONE, HALF]


def test_collect_adds_duplicates_at_first_position():
    t = StabilizerTerm(ONE, [H, 0], Graph(2))
    u = StabilizerTerm(HALF, [0, S], Graph(2))
    out = collect(StateSum(2, [t, u, t.copy()]))
    assert len(out) == 2
    assert out[0].coeff == CycCoeff(2)
    assert out[1].key() == u.key()


def test_collect_is_dense_invariant(make_term):
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randint(1, 5)
        base = [make_term(n) for _ in range(4)]
        terms = [t.copy() for t in base] + [rng.choice(base).copy() for _ in range(4)]
        for t in terms:
            t.coeff = t.coeff * CycCoeff(rng.randint(-2, 2))
        sum_ = StateSum(n, terms)
        assert sum_to_vector(collect(sum_)) == sum_to_vector(sum_)


def test_state_sum_rejects_mismatched_qubits():
    with pytest.raises(ValueError):
        StateSum(3, [StabilizerTerm.plus(2)])


def test_term_json_schema():
    t = StabilizerTerm(HALF, [H, 0, S], Graph.from_edges(3, [(2, 3), (1, 2)]))
    d = t.to_dict()
    assert d["vops"] == ["H", "", "S"]
    assert d["edges"] == [[1, 2], [2, 3]]
    assert d["coeff"]["h"] == 1 and d["coeff"]["approx"] == "0.500000+0.000000i"


def test_pauli_product_matches_dense():
    rng = random.Random(3)
    n = 3
    g = Graph.from_edges(n, [(1, 2), (2, 3)])
    vec = graph_state_vector(g)
    letters = "IXYZ"
    for _ in range(30):
        p = PauliProduct.from_letters({q: rng.choice(letters) for q in range(1, n + 1)})
        r = PauliProduct.from_letters({q: rng.choice(letters) for q in range(1, n + 1)})
        assert apply_pauli_dense(vec, p * r) == apply_pauli_dense(apply_pauli_dense(vec, r), p)


def test_y_is_i_x_z():
    y = PauliProduct.single(1, "Y")
    assert (y.x, y.z, y.s) == (0b10, 0b10, 1)
    assert PauliProduct.single(1, "Z") * PauliProduct.single(1, "X") == PauliProduct(0b10, 0b10, 2)
