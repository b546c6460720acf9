import cmath
import math

from hypothesis import given, settings
from hypothesis import strategies as st

from coeff import HALF, I, INV_SQRT2, OMEGA, ONE, SQRT2, ZERO, CycCoeff, add, canonicalize, mul
from oracle import GATE_MATRICES

small = st.integers(min_value=-20, max_value=20)
coeffs = st.builds(CycCoeff, small, small, small, small, st.integers(min_value=0, max_value=6))


def close(a: complex, b: complex, tol: float = 1e-12) -> bool:
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def test_add_examples():
    assert add(CycCoeff(1), CycCoeff(-1)) == ZERO
    assert add(CycCoeff(1), CycCoeff(0, 0, 1, 0)).as_tuple() == (1, 0, 1, 0, 0)
    assert add(HALF, HALF).as_tuple() == (1, 0, 0, 0, 0)


def test_mul_examples():
    assert mul(SQRT2, SQRT2).as_tuple() == (2, 0, 0, 0, 0)
    assert (OMEGA ** 8) == ONE
    assert mul(INV_SQRT2, INV_SQRT2).as_tuple() == (1, 0, 0, 0, 1)
    assert close(INV_SQRT2.to_complex(), 1 / math.sqrt(2))


def test_canonicalize_examples():
    assert canonicalize(2, 2, 0, 0, 1) == (1, 1, 0, 0, 0)
    assert canonicalize(0, 0, 0, 0, 5) == (0, 0, 0, 0, 0)
    assert canonicalize(4, 0, 0, 0, 1) == (2, 0, 0, 0, 0)
    assert CycCoeff(2, 2, 0, 0, 1).as_tuple() == (1, 1, 0, 0, 0)


def test_omega_squared_is_i():
    assert OMEGA * OMEGA == I
    assert I * I == CycCoeff(-1)
    assert SQRT2 == OMEGA - OMEGA.mul_omega(2)


def test_conjugate_and_rotation():
    assert OMEGA.conjugate() * OMEGA == ONE
    for k in range(16):
        assert ONE.mul_omega(k) == CycCoeff.omega_power(k)
        assert close(CycCoeff.omega_power(k).to_complex(), cmath.exp(1j * math.pi * k / 4))


def test_large_numerators_do_not_overflow():
    big = CycCoeff(3, 1, 0, 0) ** 200
    assert not big.is_zero()
    assert big * ZERO == ZERO


@given(coeffs, coeffs, coeffs)
def test_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x * y == y * x
    assert x - x == ZERO


@given(coeffs)
def test_canonical_form_is_unique(x):
    a, b, c, d, h = x.as_tuple()
    assert h == 0 or (a | b | c | d) & 1 or x.is_zero()
    assert CycCoeff(2 * a, 2 * b, 2 * c, 2 * d, h + 1) == x


@settings(max_examples=50)
@given(st.lists(coeffs, min_size=1, max_size=20))
def test_complex_embedding_is_homomorphism(factors):
    product = ONE
    expected = 1 + 0j
    # bounds every Galois conjugate, hence the size of the numerators
    bound = 1.0
    for f in factors:
        product = product * f
        expected *= f.to_complex()
        bound *= max(1.0, (abs(f.a) + abs(f.b) + abs(f.c) + abs(f.d)) / 2.0**f.h)
    assert abs(product.to_complex() - expected) <= 1e-12 * bound


def test_gate_entries_are_exact():
    for matrix in GATE_MATRICES.values():
        for row in matrix:
            for entry in row:
                assert isinstance(entry, CycCoeff)
    scale = 1 / math.sqrt(2)
    for r, row in enumerate([[1, 1], [1, -1]]):
        for c, value in enumerate(row):
            assert close(GATE_MATRICES["H"][r][c].to_complex(), value * scale)
    assert close(GATE_MATRICES["T"][1][1].to_complex(), cmath.exp(1j * math.pi / 4))
    assert GATE_MATRICES["T"][0][0] == ONE
    ch = GATE_MATRICES["CH"]
    assert ch[3][3] == -INV_SQRT2
    assert GATE_MATRICES["CS"][3][3] == I
    assert GATE_MATRICES["CCZ"][7][7] == CycCoeff(-1)
    assert GATE_MATRICES["CSWAP"][6][5] == ONE
    assert GATE_MATRICES["CCX"][7][6] == ONE


def test_to_dict_schema():
    d = INV_SQRT2.to_dict()
    assert d["a"] == 0 and d["b"] == 1 and d["d"] == -1 and d["h"] == 1
    assert d["approx"] == "0.707107+0.000000i"
