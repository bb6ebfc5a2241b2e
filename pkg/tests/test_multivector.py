from fractions import Fraction

import pytest
from hypothesis import given, settings

from stalg import (
    ComplexScalar,
    EXACT,
    FLOAT,
    ModeMismatchError,
    Multivector,
    basis_vector,
    combine,
    even_basis,
)
from stalg.multivector import EVEN_BASIS_BLADES, blade_from_key, blade_key

from conftest import exact_even_multivectors, exact_multivectors, make_rng, random_multivector

G = [basis_vector(mu) for mu in range(4)]
ONE = Multivector.scalar(1)
I = ComplexScalar.i(EXACT)


# Independent mini-oracle: plain-complex 4x4 Dirac matrices, multiplied with
# bare list arithmetic.  Shares nothing with the blade tables under test.
_SIGMA = {
    1: [[0, 1], [1, 0]],
    2: [[0, -1j], [1j, 0]],
    3: [[1, 0], [0, -1]],
}


def _plain_gamma(mu):
    if mu == 0:
        return [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]
    s = _SIGMA[mu]
    out = [[0] * 4 for _ in range(4)]
    for i in range(2):
        for j in range(2):
            out[i][2 + j] = s[i][j]
            out[2 + i][j] = -s[i][j]
    return out


def _matmul(a, b):
    return [
        [sum(a[i][k] * b[k][j] for k in range(4)) for j in range(4)] for i in range(4)
    ]


def _plain_blade(bits):
    mat = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    for mu in range(4):
        if bits >> mu & 1:
            mat = _matmul(mat, _plain_gamma(mu))
    return mat


def _blade_square_via_matrices(bits):
    sq = _matmul(_plain_blade(bits), _plain_blade(bits))
    diag = sq[0][0]
    assert all(sq[i][j] == (diag if i == j else 0) for i in range(4) for j in range(4))
    diag = complex(diag)
    assert diag.imag == 0 and diag.real in (1, -1)
    return int(diag.real)


def test_basis_vector_constructors():
    assert G[0].coefficient(0b0001) == ComplexScalar.exact(1)
    assert G[3].coefficient(0b1000) == ComplexScalar.exact(1)
    with pytest.raises(ValueError):
        basis_vector(4)
    with pytest.raises(ValueError):
        basis_vector(-1)


def test_metric_squares_match_matrix_oracle():
    # Oracle first: squares of represented blades, computed with plain complex.
    assert _blade_square_via_matrices(0b0001) == 1
    assert _blade_square_via_matrices(0b0010) == -1
    assert _blade_square_via_matrices(0b0011) == 1
    assert _blade_square_via_matrices(0b0110) == -1

    assert G[0] * G[0] == ONE
    assert G[1] * G[1] == -ONE
    g01 = G[0] * G[1]
    assert g01 * g01 == ONE
    g12 = G[1] * G[2]
    assert g12 * g12 == -ONE


def test_every_blade_square_matches_matrix_oracle():
    for bits in range(16):
        blade = Multivector.blade(bits)
        expected = _blade_square_via_matrices(bits)
        assert blade * blade == ONE.scale(expected), bits


def test_anticommutation_relations():
    eta = (1, -1, -1, -1)
    for mu in range(4):
        for nu in range(4):
            rhs = ONE.scale(2 * eta[mu]) if mu == nu else Multivector.zero()
            assert G[mu] * G[nu] + G[nu] * G[mu] == rhs


def test_combine():
    assert combine([(1, G[0]), (-1, G[0])]).is_zero()
    assert combine([]).is_zero()
    half = Fraction(1, 2)
    p = combine([(half, ONE), (half, G[0])])
    assert p * p == p  # the projector (1 + gamma_0)/2
    assert combine([(2, G[1]), (3, G[1])]) == G[1].scale(5)


def test_grade_project():
    m = ONE + G[0]
    assert m.grade_project(0) == ONE
    g01 = G[0] * G[1]
    assert g01.grade_project(2) == g01
    assert g01.grade_project(1).is_zero()
    with pytest.raises(ValueError):
        m.grade_project(5)


def test_even_odd_split():
    even, odd = G[0].even_odd_split()
    assert even.is_zero() and odd == G[0]
    m = ONE + G[1] * G[2]
    even, odd = m.even_odd_split()
    assert even == m and odd.is_zero()
    vol = G[0] * G[1] * G[2] * G[3]
    even, odd = (G[0] + vol).even_odd_split()
    assert even == vol and odd == G[0]


def test_reversion_signs():
    assert G[0].reversion() == G[0]
    g01 = G[0] * G[1]
    assert g01.reversion() == -g01
    vol = G[0] * G[1] * G[2] * G[3]
    assert vol.reversion() == vol
    g012 = G[0] * G[1] * G[2]
    assert g012.reversion() == -g012


def test_complex_conjugate():
    g12 = G[1] * G[2]
    m = g12.scale(I)
    assert m.conjugate() == g12.scale(-I)
    real = G[0].scale(Fraction(3, 4))
    assert real.conjugate() == real
    mixed = ONE.scale(ComplexScalar.exact(1, 2)) + g12.scale(I)
    assert mixed.conjugate().conjugate() == mixed


def test_adjoint_frozen_examples():
    # Derived from the matrix oracle: conjugate-transpose fixes gamma_0 and
    # negates the spatial gammas in the Dirac representation.
    assert G[0].adjoint() == G[0]
    assert G[1].adjoint() == -G[1]
    p = (ONE + G[0]).scale(Fraction(1, 2))
    assert p.adjoint() == p


def test_even_basis():
    basis = even_basis()
    assert len(basis) == 8
    assert all(b.is_even() for b in basis)
    assert [next(iter(b.coeffs)) for b in basis] == list(EVEN_BASIS_BLADES)
    rng = make_rng(11)
    for _ in range(5):
        m = random_multivector(rng, even=True)
        rebuilt = combine([(m.coefficient(bits), Multivector.blade(bits)) for bits in EVEN_BASIS_BLADES])
        assert rebuilt == m


def test_mode_mismatch_raises():
    f = Multivector.scalar(1.0, FLOAT)
    with pytest.raises(ModeMismatchError):
        ONE + f
    with pytest.raises(ModeMismatchError):
        ONE * f
    with pytest.raises(ModeMismatchError):
        ONE.scale(0.5)


def test_exact_zero_coefficients_are_dropped():
    m = G[0] - G[0]
    assert not list(m.items())
    assert m.is_zero()


def test_float_mode_reported_zero():
    big = Multivector.scalar(1.0, FLOAT)
    tiny = Multivector.scalar(1e-15, FLOAT)
    assert (big - big).is_zero()
    assert tiny.coefficient(0).re != 0.0
    assert (big + tiny - big).isclose(Multivector.zero(FLOAT))


@settings(max_examples=60)
@given(exact_multivectors, exact_multivectors, exact_multivectors)
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


@settings(max_examples=60)
@given(exact_multivectors, exact_multivectors)
def test_reversion_antiautomorphism(a, b):
    assert (a * b).reversion() == b.reversion() * a.reversion()


@settings(max_examples=60)
@given(exact_multivectors, exact_multivectors)
def test_conjugation_ring_automorphism(a, b):
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()
    assert a.conjugate().reversion() == a.reversion().conjugate()


@settings(max_examples=60)
@given(exact_multivectors, exact_multivectors)
def test_adjoint_antiautomorphism_and_involution(a, b):
    assert (a * b).adjoint() == b.adjoint() * a.adjoint()
    assert a.adjoint().adjoint() == a


@settings(max_examples=40)
@given(exact_multivectors)
def test_grade_projections_partition(a):
    total = Multivector.zero()
    for g in range(5):
        total = total + a.grade_project(g)
    assert total == a


@settings(max_examples=40)
@given(exact_even_multivectors, exact_even_multivectors)
def test_even_products_stay_even(a, b):
    assert (a * b).is_even()


@settings(max_examples=40)
@given(exact_multivectors, exact_multivectors)
def test_parity_of_products(a, b):
    ae, ao = a.even_odd_split()
    be, bo = b.even_odd_split()
    assert (ae * be).is_even() and (ao * bo).is_even()
    assert (ae * bo).is_odd() and (ao * be).is_odd()


def test_blade_keys():
    assert blade_key(0) == "s"
    assert blade_key(0b0001) == "e0"
    assert blade_key(0b0011) == "e01"
    assert blade_key(0b1111) == "e0123"
    assert blade_from_key("e13") == 0b1010
    with pytest.raises(ValueError):
        blade_from_key("e31")
    with pytest.raises(ValueError):
        blade_from_key("x1")


def test_json_round_trip():
    m = ONE.scale(ComplexScalar.exact(Fraction(1, 2), Fraction(-3, 7))) + (
        G[0] * G[1]
    ).scale(ComplexScalar.exact(2, 0))
    data = m.to_json_dict()
    assert data["mode"] == "exact"
    assert data["coeffs"]["s"] == ["1/2", "-3/7"]
    assert data["coeffs"]["e01"] == ["2/1", "0/1"]
    assert Multivector.from_json_dict(data) == m


def test_json_round_trip_float():
    m = Multivector.scalar(0.5, FLOAT) + basis_vector(2, FLOAT).scale(-1.25)
    data = m.to_json_dict()
    assert data["coeffs"]["s"] == [0.5, 0.0]
    assert data["coeffs"]["e2"] == [-1.25, 0.0]
    assert Multivector.from_json_dict(data) == m
