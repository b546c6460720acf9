import random

import pytest

from bench import random_graph
from clifford1q import GATE_CLASS, class_from_word
from coeff import ONE, SQRT2, ZERO
from graph import Graph, iter_bits, mask_of
from oracle import (
    apply_matrix,
    apply_pauli_dense,
    apply_projector_dense,
    graph_state_vector,
    local_matrix,
    term_to_vector,
)
from projector import (
    ProjectorError,
    apply_projector,
    apply_z_projector,
    pauli_to_z,
    push_pauli_through_vops,
    z_projector_ops,
)
from state import PauliProduct, StabilizerTerm, ZProjectorForm

H = GATE_CLASS["H"].class_id
EDGE = Graph.from_edges(2, [(1, 2)])


def random_pauli(n, rng):
    letters = {q: rng.choice("IXYZ") for q in range(1, n + 1)}
    return PauliProduct.from_letters(letters, rng.randint(0, 3))


def bare(g):
    return StabilizerTerm(ONE, [0] * g.n, g.copy())


def test_push_z_through_hadamard():
    t = StabilizerTerm(ONE, [H], Graph(1))
    assert push_pauli_through_vops(t, PauliProduct.single(1, "Z")) == PauliProduct.single(1, "X")


def test_push_through_random_vops(make_term):
    rng = random.Random(23)
    for _ in range(100):
        n = rng.randint(1, 5)
        t = make_term(n)
        t.coeff = ONE
        p = random_pauli(n, rng)
        pulled = push_pauli_through_vops(t, p)
        # P · V|G⟩ == V · P′|G⟩
        rhs = apply_pauli_dense(graph_state_vector(t.graph), pulled)
        for q, c in enumerate(t.vops, start=1):
            rhs = apply_matrix(rhs, local_matrix(c), [q])
        assert apply_pauli_dense(term_to_vector(t), p) == rhs


def test_pauli_to_z_examples():
    assert pauli_to_z(EDGE, PauliProduct.from_letters({1: "Z", 2: "Z"})) == (0, mask_of([1, 2]))
    assert pauli_to_z(EDGE, PauliProduct.single(1, "X")) == (0, mask_of([2]))
    assert pauli_to_z(EDGE, PauliProduct.single(1, "Y")) == (3, mask_of([1, 2]))
    assert pauli_to_z(Graph(1), PauliProduct.single(1, "X")) == (0, 0)


def test_pauli_to_z_returns_projector_form():
    form = pauli_to_z(EDGE, PauliProduct.single(1, "Y"))
    assert isinstance(form, ZProjectorForm)
    assert form.k == 3
    assert form.B == mask_of([1, 2])


def test_pauli_to_z_on_random_graphs():
    rng = random.Random(29)
    for _ in range(200):
        n = rng.randint(1, 6)
        g = random_graph(n, rng.uniform(0, n - 1), rng)
        p = random_pauli(n, rng)
        k, B = pauli_to_z(g, p)
        vec = graph_state_vector(g)
        assert apply_pauli_dense(vec, p) == apply_pauli_dense(vec, PauliProduct(0, B, k))


def test_z_projector_single_qubit():
    t = apply_z_projector(bare(Graph(1)), 0, mask_of([1]))
    assert t.vops == [H]
    assert t.coeff == SQRT2
    assert term_to_vector(t) == [SQRT2, ZERO]

    t = apply_z_projector(bare(Graph(1)), 2, mask_of([1]))
    assert term_to_vector(t) == [ZERO, SQRT2]


def test_z_projector_on_pair_adds_edge():
    pivot, locals_, flips = z_projector_ops(Graph(2), 1, mask_of([1, 2]))
    assert pivot == 1
    assert locals_[1].class_id == class_from_word("HS")
    assert locals_[2] == GATE_CLASS["I"]
    t = apply_z_projector(bare(Graph(2)), 1, mask_of([1, 2]))
    assert t.graph.edges() == [(1, 2)]
    vec = graph_state_vector(Graph(2))
    expected = apply_projector_dense(vec, 1, PauliProduct.from_letters({1: "Z", 2: "Z"}))
    assert term_to_vector(t) == expected


def test_z_projector_rejects_empty_support():
    with pytest.raises(ProjectorError):
        z_projector_ops(Graph(2), 0, 0)


def test_z_projector_on_random_graphs():
    rng = random.Random(31)
    for _ in range(500):
        n = rng.randint(1, 8)
        g = random_graph(n, rng.uniform(0, n - 1), rng)
        B = 0
        while not B:
            B = rng.getrandbits(n) << 1
        k = rng.randint(0, 3)
        expected = apply_projector_dense(graph_state_vector(g), 0, PauliProduct(0, B, k))
        t = apply_z_projector(bare(g), k, B)
        assert t.graph.is_symmetric()
        assert term_to_vector(t) == expected


def test_z_projector_any_pivot_in_support():
    rng = random.Random(41)
    for _ in range(300):
        n = rng.randint(1, 7)
        g = random_graph(n, rng.uniform(0, n - 1), rng)
        B = 0
        while not B:
            B = rng.getrandbits(n) << 1
        k = rng.randint(0, 3)
        expected = apply_projector_dense(graph_state_vector(g), 0, PauliProduct(0, B, k))
        for v in iter_bits(B):
            pivot, _, _ = z_projector_ops(g, k, B, pivot=v)
            assert pivot == v
            t = apply_z_projector(bare(g), k, B, pivot=v)
            assert t.graph.is_symmetric()
            assert term_to_vector(t) == expected


def test_z_projector_rejects_pivot_outside_support():
    g = Graph.from_edges(3, [(1, 2), (2, 3)])
    with pytest.raises(ProjectorError, match="pivot 3"):
        z_projector_ops(g, 0, mask_of([1, 2]), pivot=3)
    with pytest.raises(ProjectorError):
        z_projector_ops(g, 1, mask_of([1]), pivot=0)


def test_projector_annihilates_orthogonal_term():
    zero = StabilizerTerm(ONE, [H], Graph(1))
    assert apply_projector(zero, 2, PauliProduct.single(1, "Z")) is None
    doubled = apply_projector(zero.copy(), 0, PauliProduct.single(1, "Z"))
    assert term_to_vector(doubled) == [ONE + ONE, ZERO]


def test_projector_on_random_terms(make_term):
    rng = random.Random(37)
    for _ in range(200):
        n = rng.randint(1, 6)
        t = make_term(n)
        p = random_pauli(n, rng)
        s = rng.randint(0, 3)
        expected = apply_projector_dense(term_to_vector(t), s, p)
        out = apply_projector(t.copy(), s, p)
        if out is None:
            assert all(x.is_zero() for x in expected)
        else:
            assert term_to_vector(out) == expected
