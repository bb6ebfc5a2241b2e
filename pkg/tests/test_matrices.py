import pytest

from stalg import (
    ColumnSpinor,
    ComplexScalar,
    EXACT,
    FLOAT,
    Matrix4C,
    Multivector,
    alpha_projector_matrix,
    apply_matrix,
    basis_vector,
    column_extract,
    gamma_matrix,
    represent,
    unrepresent,
)
from stalg.multivector import BLADE_SQUARE
from stalg.matrices import blade_matrix
from stalg.spinors import projector_gamma0

from conftest import make_rng, random_multivector


def test_gamma_matrix_frozen_entries():
    g0 = gamma_matrix(0)
    assert g0 == Matrix4C.from_values(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]
    )
    g2 = gamma_matrix(2)
    i = ComplexScalar.i(EXACT)
    assert g2.entries[0][3] == -i
    assert g2.entries[1][2] == i
    assert g2.entries[2][1] == i
    assert g2.entries[3][0] == -i
    with pytest.raises(ValueError):
        gamma_matrix(4)


def test_gamma_matrices_satisfy_clifford_relations():
    eta = (1, -1, -1, -1)
    identity = Matrix4C.identity()
    zero = Matrix4C.zero()
    for mu in range(4):
        for nu in range(4):
            anti = gamma_matrix(mu) * gamma_matrix(nu) + gamma_matrix(nu) * gamma_matrix(mu)
            expected = identity.scale(2 * eta[mu]) if mu == nu else zero
            assert anti == expected


def test_gamma0_is_hermitian_spatial_antihermitian():
    assert gamma_matrix(0).conjugate_transpose() == gamma_matrix(0)
    for mu in (1, 2, 3):
        assert gamma_matrix(mu).conjugate_transpose() == -gamma_matrix(mu)


def test_represent_unit_and_volume():
    assert represent(Multivector.scalar(1)) == Matrix4C.identity()
    vol = basis_vector(0) * basis_vector(1) * basis_vector(2) * basis_vector(3)
    product = gamma_matrix(0) * gamma_matrix(1) * gamma_matrix(2) * gamma_matrix(3)
    assert represent(vol) == product


def test_represent_projector_is_diagonal():
    expected = Matrix4C.from_values(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]
    )
    assert represent(projector_gamma0(1)) == expected


def test_homomorphism_all_blade_pairs():
    for a in range(16):
        for b in range(16):
            ma, mb = Multivector.blade(a), Multivector.blade(b)
            assert represent(ma * mb) == represent(ma) * represent(mb)


def test_homomorphism_random(rng):
    for _ in range(30):
        a = random_multivector(rng)
        b = random_multivector(rng)
        assert represent(a * b) == represent(a) * represent(b)
        assert represent(a + b) == represent(a) + represent(b)


def test_unrepresent_round_trip():
    assert unrepresent(Matrix4C.identity()) == Multivector.scalar(1)
    g01 = basis_vector(0) * basis_vector(1)
    assert unrepresent(represent(g01)) == g01
    rng = make_rng(5)
    for _ in range(100):
        m = random_multivector(rng)
        assert unrepresent(represent(m)) == m


def test_representation_is_faithful_on_blades():
    seen = []
    for bits in range(16):
        mat = represent(Multivector.blade(bits))
        assert mat not in seen
        seen.append(mat)


def test_trace_orthogonality_all_pairs():
    for a in range(16):
        inv = blade_matrix(a).scale(BLADE_SQUARE[a])
        for b in range(16):
            value = (inv * blade_matrix(b)).trace() / 4
            assert value == ComplexScalar.exact(1 if a == b else 0)


def test_adjoint_matches_conjugate_transpose(rng):
    for _ in range(30):
        m = random_multivector(rng)
        assert represent(m.adjoint()) == represent(m).conjugate_transpose()


def test_column_extract_identity():
    e2 = column_extract(Matrix4C.identity(), 2)
    assert e2 == ColumnSpinor(
        EXACT, [ComplexScalar.exact(1 if i == 2 else 0) for i in range(4)]
    )
    with pytest.raises(ValueError):
        column_extract(Matrix4C.identity(), 4)


def test_alpha_projector_masks_single_column(rng):
    m = represent(random_multivector(rng))
    for alpha in range(4):
        masked = m * alpha_projector_matrix(alpha)
        for j in range(4):
            col = column_extract(masked, j)
            if j == alpha:
                assert col == column_extract(m, alpha)
            else:
                assert col.is_zero()


def test_columns_of_dirac_solution_satisfy_spinor_equation():
    # On the plane wave the matrix equation reads -(gamma.k) psi = m psi.
    from stalg import dirac_planewave

    field = dirac_planewave(Multivector.scalar(1), 5, 4, 3)
    amplitude = field.terms[0].amplitude
    gk = gamma_matrix(0).scale(5) + gamma_matrix(1).scale(4)
    mat = represent(amplitude)
    for alpha in range(4):
        psi = column_extract(mat, alpha)
        assert apply_matrix(gk.scale(-1), psi) == psi.scale(3)
    # and at least one column is nonzero, so the check is not vacuous
    assert any(not column_extract(mat, alpha).is_zero() for alpha in range(4))


def test_matrix_json_round_trip():
    m = gamma_matrix(2)
    data = m.to_json_dict()
    assert data["mode"] == "exact"
    assert data["rows"][0][3] == ["0/1", "-1/1"]
    assert Matrix4C.from_json_dict(data) == m


def test_matrix_json_round_trip_float():
    m = gamma_matrix(1, FLOAT).scale(0.5)
    data = m.to_json_dict()
    assert data["rows"][0][3] == [0.5, 0.0]
    assert Matrix4C.from_json_dict(data) == m


def test_matrix_shape_validation():
    with pytest.raises(ValueError):
        Matrix4C.from_values([[0] * 4] * 3)
    with pytest.raises(ValueError):
        Matrix4C.from_values([[0] * 3] * 4)
