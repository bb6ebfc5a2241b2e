"""Named invariant suites behind the ``verify`` CLI command.

Each suite evaluates a list of algebraic identities and returns a
:class:`VerificationReport`.  In exact mode every check is an equality of
rational data; in float mode residual norms are compared against the
package-wide relative tolerance and solution families are built at
(m, k) = (1, 1), where omega = sqrt(2) is irrational.

Randomized checks draw rational coefficients with numerators and
denominators bounded by 9, which keeps exact arithmetic small and fast;
the seed is part of the report so every run is reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from . import linalg
from .fields import (
    Field,
    FourMomentum,
    PlaneWaveParams,
    commutant_split,
    degeneracy_conditions,
    dirac_planewave,
    dirac_residual,
    gradient,
    hestenes_residual,
    joyce_planewave,
    joyce_planewave_family,
    joyce_residual,
    on_shell_omega,
    planewave_condition,
    planewave_condition_kernel,
    rank,
    rest_solutions,
)
from .matrices import (
    alpha_projector_matrix,
    apply_matrix,
    blade_matrix,
    column_extract,
    gamma_matrix,
    represent,
    unrepresent,
)
from .multivector import (
    BLADE_COUNT,
    BLADE_SQUARE,
    Multivector,
    basis_vector,
    blade_grade,
    combine,
    even_basis,
)
from .scalars import EXACT, FLOAT_EPS, ComplexScalar, check_mode
from .spinors import (
    Rotor,
    current_density,
    gauge_transform,
    hestenes_quartet,
    projector_gamma0,
    projector_i12,
    real_even_pair,
    reconstruct_joyce,
    split_right,
)

DEFAULT_SEED = 101

SUITE_NAMES = ("core", "projectors", "splits", "planewave", "oracle")


@dataclass
class Check:
    id: str
    description: str
    status: str
    witness: Any = None

    def to_json_dict(self) -> dict:
        out = {"id": self.id, "description": self.description, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class VerificationReport:
    suite: str
    mode: str
    seed: int
    checks: list[Check] = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(1 for c in self.checks if c.status != "pass")

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "mode": self.mode,
            "seed": self.seed,
            "counts": {
                "total": len(self.checks),
                "pass": len(self.checks) - self.failures,
                "fail": self.failures,
            },
            "checks": [c.to_json_dict() for c in self.checks],
        }


class _Suite:
    """Collects checks; a failed comparison records a witness string."""

    def __init__(self, mode: str, seed: int):
        self.mode = check_mode(mode)
        self.rng = random.Random(seed)
        self.checks: list[Check] = []

    def add(self, cid: str, description: str, ok: bool, witness=None) -> None:
        self.checks.append(
            Check(cid, description, "pass" if ok else "fail", witness)
        )

    # mode-aware comparisons ------------------------------------------------

    def mv_eq(self, a: Multivector, b: Multivector) -> bool:
        return a == b if self.mode == EXACT else a.isclose(b)

    def field_zero(self, f: Field, reference: Field | None = None) -> bool:
        if self.mode == EXACT:
            return f.is_zero()
        ref = reference.norm() if reference is not None else 0.0
        return f.norm() <= FLOAT_EPS * (1.0 + ref)

    def field_eq(self, a: Field, b: Field) -> bool:
        return a == b if self.mode == EXACT else a.isclose(b)

    # random data ------------------------------------------------------------

    def random_rational(self) -> Fraction:
        return Fraction(self.rng.randint(-9, 9), self.rng.randint(1, 9))

    def random_scalar(self) -> ComplexScalar:
        re, im = self.random_rational(), self.random_rational()
        if self.mode == EXACT:
            return ComplexScalar.exact(re, im)
        return ComplexScalar.floating(float(re), float(im))

    def random_multivector(self, even: bool = False, density: float = 0.6) -> Multivector:
        coeffs = {}
        for bits in range(BLADE_COUNT):
            if even and blade_grade(bits) % 2:
                continue
            if self.rng.random() < density:
                coeffs[bits] = self.random_scalar()
        return Multivector(self.mode, coeffs)

    def random_params(self) -> PlaneWaveParams:
        return PlaneWaveParams(*(self.random_scalar() for _ in range(4)))

    def mass_and_k(self) -> tuple:
        # Pythagorean data in exact mode; irrational omega in float mode.
        return (3, 4) if self.mode == EXACT else (1.0, 1.0)

    def random_joyce_solution(self) -> Field:
        m, k = self.mass_and_k()
        sign = self.rng.choice((1, -1))
        return joyce_planewave(self.random_params(), sign, k, m)

    def random_field(self, nterms: int = 2) -> Field:
        m, k = self.mass_and_k()
        omega = on_shell_omega(m, k, 1, self.mode)
        f = Field.zero(self.mode)
        for j in range(nterms):
            mom = FourMomentum.along_x(omega * (j + 1), k, self.mode)
            f = f + Field.single(self.random_multivector(), mom)
        return f


def _commutant_of_gamma0(mode: str) -> list[Multivector]:
    g0 = basis_vector(0, mode)
    out = []
    for bits in range(BLADE_COUNT):
        b = Multivector.blade(bits, 1, mode)
        commutes = (b * g0) == (g0 * b) if mode == EXACT else (b * g0).isclose(g0 * b)
        if commutes:
            out.append(b)
    return out


# -- suites -------------------------------------------------------------------


def suite_core(s: _Suite) -> None:
    mode = s.mode
    g = [basis_vector(mu, mode) for mu in range(4)]
    one = Multivector.scalar(1, mode)

    ok = True
    for mu in range(4):
        for nu in range(4):
            eta = 1 if mu == nu == 0 else (-1 if mu == nu else 0)
            if not s.mv_eq(g[mu] * g[nu] + g[nu] * g[mu], one.scale(2 * eta)):
                ok = False
    s.add("core.anticommutation", "gamma_mu gamma_nu + gamma_nu gamma_mu = 2 eta_mu_nu, all 16 pairs", ok)

    s.add(
        "core.timelike_plane_square",
        "(gamma_0 gamma_1)**2 = +1 and (gamma_1 gamma_2)**2 = -1",
        s.mv_eq((g[0] * g[1]) * (g[0] * g[1]), one)
        and s.mv_eq((g[1] * g[2]) * (g[1] * g[2]), -one),
    )

    ok = True
    for a in range(BLADE_COUNT):
        for b in range(BLADE_COUNT):
            for c in range(BLADE_COUNT):
                ma = Multivector.blade(a, 1, mode)
                mb = Multivector.blade(b, 1, mode)
                mc = Multivector.blade(c, 1, mode)
                if not s.mv_eq((ma * mb) * mc, ma * (mb * mc)):
                    ok = False
    s.add("core.associativity", "(ab)c = a(bc) over all 16**3 blade triples", ok)

    ok = True
    for _ in range(10):
        a, b = s.random_multivector(), s.random_multivector()
        if not s.mv_eq((a * b).reversion(), b.reversion() * a.reversion()):
            ok = False
        if not s.mv_eq((a * b).conjugate(), a.conjugate() * b.conjugate()):
            ok = False
        if not s.mv_eq(a.conjugate().reversion(), a.reversion().conjugate()):
            ok = False
        if not s.mv_eq((a * b).adjoint(), b.adjoint() * a.adjoint()):
            ok = False
        if not s.mv_eq(a.adjoint().adjoint(), a):
            ok = False
    s.add(
        "core.involutions",
        "reversion and adjoint are anti-automorphisms, conjugation a ring automorphism commuting with reversion",
        ok,
    )

    ok = True
    for _ in range(10):
        ae = s.random_multivector(even=True)
        be = s.random_multivector(even=True)
        ao = s.random_multivector().even_odd_split()[1]
        bo = s.random_multivector().even_odd_split()[1]
        if not ((ae * be).is_even() and (ao * bo).is_even() and (ae * bo).is_odd()):
            ok = False
    s.add("core.parity_products", "even*even and odd*odd are even; even*odd is odd", ok)

    ok = True
    for _ in range(10):
        a = s.random_multivector()
        total = Multivector.zero(mode)
        for gd in range(5):
            total = total + a.grade_project(gd)
        if not s.mv_eq(total, a):
            ok = False
        e, o = a.even_odd_split()
        if not s.mv_eq(e + o, a):
            ok = False
    s.add("core.grade_partition", "grade projections over 0..4 sum to the identity", ok)

    basis = even_basis(mode)
    ok = len(basis) == 8 and all(b.is_even() for b in basis)
    for _ in range(5):
        a = s.random_multivector(even=True)
        recon = combine(
            [(a.coefficient(bits), Multivector.blade(bits, 1, mode)) for bits, _ in a.items()],
            mode=mode,
        )
        if not s.mv_eq(recon, a):
            ok = False
    s.add("core.even_basis", "8 even blades; even elements decompose uniquely over them", ok)

    s.add(
        "core.combine",
        "linear combinations cancel and sum in canonical form",
        combine([(1, g[0]), (-1, g[0])], mode=mode).is_zero()
        and combine([], mode=mode).is_zero()
        and s.mv_eq(
            combine([(Fraction(1, 2) if mode == EXACT else 0.5, one),
                     (Fraction(1, 2) if mode == EXACT else 0.5, g[0])], mode=mode),
            projector_gamma0(1, mode),
        ),
    )


def suite_projectors(s: _Suite) -> None:
    mode = s.mode
    one = Multivector.scalar(1, mode)
    zero = Multivector.zero(mode)
    g0 = basis_vector(0, mode)
    g12 = basis_vector(1, mode) * basis_vector(2, mode)
    i = ComplexScalar.i(mode)

    for name, plus, minus in (
        ("gamma0", projector_gamma0(1, mode), projector_gamma0(-1, mode)),
        ("i12", projector_i12(1, mode), projector_i12(-1, mode)),
    ):
        s.add(
            f"projectors.{name}.idempotent_hermitian",
            f"P_{name} families satisfy P**2 = P = adjoint(P)",
            s.mv_eq(plus * plus, plus)
            and s.mv_eq(minus * minus, minus)
            and s.mv_eq(plus.adjoint(), plus)
            and s.mv_eq(minus.adjoint(), minus),
        )
        s.add(
            f"projectors.{name}.complete_orthogonal",
            "P_plus + P_minus = 1 and P_plus P_minus = 0",
            s.mv_eq(plus + minus, one) and s.mv_eq(plus * minus, zero),
        )

    pg = projector_gamma0(1, mode), projector_gamma0(-1, mode)
    s.add(
        "projectors.gamma0.eigen",
        "gamma_0 P_{+/-}0 = +/- P_{+/-}0",
        s.mv_eq(g0 * pg[0], pg[0]) and s.mv_eq(g0 * pg[1], -pg[1]),
    )

    pi = projector_i12(1, mode), projector_i12(-1, mode)
    s.add(
        "projectors.i12.bivector_identity",
        "P_{+/-}12 = +/- i P_{+/-}12 gamma_1 gamma_2",
        s.mv_eq(pi[0], (pi[0] * g12).scale(i)) and s.mv_eq(pi[1], -((pi[1] * g12).scale(i))),
    )
    s.add("projectors.i12.even", "P_{+/-}12 are even", pi[0].is_even() and pi[1].is_even())

    ok = True
    for a in pg:
        for b in pi:
            if not s.mv_eq(a * b, b * a):
                ok = False
    s.add("projectors.families_commute", "the gamma_0 and i12 projector families commute", ok)


def suite_splits(s: _Suite) -> None:
    mode = s.mode
    m, k = s.mass_and_k()
    g12 = basis_vector(1, mode) * basis_vector(2, mode)

    ok_dirac = ok_hestenes = True
    for _ in range(20):
        f = s.random_joyce_solution()
        plus0, minus0 = split_right(f, "gamma0")
        if not (s.field_zero(dirac_residual(plus0, m), f) and s.field_zero(dirac_residual(minus0, -m), f)):
            ok_dirac = False
        plus12, minus12 = split_right(f, "i12")
        if not (s.field_zero(hestenes_residual(plus12, m), f) and s.field_zero(hestenes_residual(minus12, -m), f)):
            ok_hestenes = False
    s.add(
        "splits.gamma0_to_dirac",
        "solutions of the even-subalgebra equation split into Dirac solutions with masses +m and -m",
        ok_dirac,
    )
    s.add(
        "splits.i12_to_hestenes",
        "the same solutions split into Hestenes-form solutions with masses +m and -m",
        ok_hestenes,
    )

    ok = True
    for _ in range(10):
        f = s.random_joyce_solution()
        fp, fm = real_even_pair(f)
        pi_plus, pi_minus = projector_i12(1, mode), projector_i12(-1, mode)
        if not (fp.is_real() and fm.is_real() and fp.is_even() and fm.is_even()):
            ok = False
        if not (s.field_eq(f * pi_plus, fp * pi_plus) and s.field_eq(f * pi_minus, fm * pi_minus)):
            ok = False
        if not (s.field_zero(hestenes_residual(fp, m), f) and s.field_zero(hestenes_residual(fm, -m), f)):
            ok = False
        if not s.field_eq(reconstruct_joyce(fp, fm), f):
            ok = False
    s.add(
        "splits.real_even_pair",
        "real even representatives solve the Hestenes form at +/-m and reconstruct the field",
        ok,
    )

    ok = True
    omega = on_shell_omega(m, k, 1, mode)
    for _ in range(5):
        seed = s.random_multivector()
        f = dirac_planewave(seed, omega, k, m)
        if f.is_zero():
            continue
        quartet = hestenes_quartet(f, m)
        if not all(s.field_zero(hestenes_residual(h, m), f) for h in quartet):
            ok = False
        if not all(h.is_real() and h.is_even() for h in quartet):
            ok = False
        if not s.field_eq(quartet[1], quartet[0] * g12):
            ok = False
        if rank(list(quartet), "real") != 4:
            ok = False
    s.add(
        "splits.quartet",
        "each Dirac solution yields four real even Hestenes solutions of real rank 4",
        ok,
    )

    ok = True
    planes = []
    for mu, nu in ((1, 2), (2, 3), (3, 1)):
        planes.append(basis_vector(mu, mode) * basis_vector(nu, mode))
    cs = (Fraction(3, 5), Fraction(4, 5)) if mode == EXACT else (0.6, 0.8)
    for plane in planes:
        rotor = Rotor.from_circle_point(cs[0], cs[1], plane)
        rmv = rotor.multivector()
        if not s.mv_eq(rmv * rmv.reversion(), Multivector.scalar(1, mode)):
            ok = False
        f = s.random_joyce_solution()
        transformed_plane = rotor.conjugate_plane(g12)
        lhs = hestenes_residual(gauge_transform(f, rotor), m, transformed_plane)
        rhs = hestenes_residual(f, m) * rmv
        if not s.field_eq(lhs, rhs):
            ok = False
    s.add(
        "splits.gauge_covariance",
        "rotor gauge transformations move the Hestenes plane without changing residuals",
        ok,
    )

    ok = True
    commutant = _commutant_of_gamma0(mode)
    for _ in range(5):
        f = s.random_joyce_solution()
        df = dirac_planewave(s.random_multivector(), on_shell_omega(m, k, -1, mode), k, m)
        c_any = s.random_multivector()
        if not s.field_zero(dirac_residual(df * c_any, m), df):
            ok = False
        c_comm = Multivector.zero(mode)
        for b in commutant:
            c_comm = c_comm + b.scale(s.random_scalar())
        if not s.field_zero(joyce_residual(f * c_comm, m), f):
            ok = False
    s.add(
        "splits.right_invariance",
        "Dirac solutions survive any constant right factor; even-subalgebra solutions survive gamma_0-commuting ones",
        ok,
    )

    one = Multivector.scalar(1, mode)
    g0 = basis_vector(0, mode)
    ok = s.mv_eq(current_density(one), g0)
    rotor = Rotor.from_circle_point(cs[0], cs[1], planes[0])
    ok = ok and s.mv_eq(current_density(rotor.multivector()), g0)
    for _ in range(5):
        psi = s.random_multivector(even=True)
        real_psi = psi + psi.conjugate()
        if not current_density(real_psi).is_real():
            ok = False
    s.add(
        "splits.current_density",
        "vector part of psi gamma_0 ~psi: gamma_0 for units and rotors, real for real elements",
        ok,
    )


def suite_planewave(s: _Suite) -> None:
    mode = s.mode
    m, k = s.mass_and_k()
    one = Multivector.scalar(1, mode)
    g01 = basis_vector(0, mode) * basis_vector(1, mode)

    if mode == EXACT:
        f_plus = joyce_planewave(PlaneWaveParams.of(1), 1, 4, 3)
        f_minus = joyce_planewave(PlaneWaveParams.of(1), -1, 4, 3)
        s.add(
            "planewave.worked_amplitudes",
            "unit-parameter amplitudes at (m,k)=(3,4) are 1 - 2 g0g1 and 1 + (1/2) g0g1",
            f_plus.terms[0].amplitude == one - g01.scale(2)
            and f_minus.terms[0].amplitude == one + g01.scale(Fraction(1, 2)),
            witness={"plus": repr(f_plus.terms[0].amplitude), "minus": repr(f_minus.terms[0].amplitude)},
        )

    omega = on_shell_omega(m, k, 1, mode)
    ok = True
    for _ in range(10):
        f = s.random_joyce_solution()
        if not s.field_zero(joyce_residual(f, m), f):
            ok = False
        A = f.terms[0].amplitude
        w = f.terms[0].momentum.omega
        if mode == EXACT:
            if not planewave_condition(A, w, k, m).is_zero():
                ok = False
        else:
            res = planewave_condition(A, w, k, m)
            if res.max_magnitude() > FLOAT_EPS * (1.0 + A.max_magnitude()):
                ok = False
    s.add(
        "planewave.condition_matches_residual",
        "constructed plane waves satisfy both the residual operator and the amplitude condition",
        ok,
    )

    off = (6, 4, 3) if mode == EXACT else (1.5, 1.0, 1.0)
    kern_off = planewave_condition_kernel(*off, mode=mode)
    kern_plus = planewave_condition_kernel(omega, k, m, mode=mode)
    kern_minus = planewave_condition_kernel(-omega, k, m, mode=mode)
    s.add(
        "planewave.dispersion_forcing",
        "off shell the amplitude condition has trivial kernel; on shell 4 complex dimensions per omega sign",
        len(kern_off) == 0 and len(kern_plus) == 4 and len(kern_minus) == 4,
        witness={"off": len(kern_off), "on_plus": len(kern_plus), "on_minus": len(kern_minus)},
    )

    family = joyce_planewave_family(k, m, mode)
    s.add(
        "planewave.family_rank",
        "the eight unit-parameter solutions across both omega signs have complex rank 8",
        rank(family, "complex") == 8,
        witness={"rank": rank(family, "complex")},
    )

    ok = True
    witness = {}
    for sgn, mass in ((1, m), (-1, -m)):
        basis = degeneracy_conditions(omega, k, m, sgn)
        label = "plus" if sgn == 1 else "minus"
        rel = []
        for p in basis:
            f = joyce_planewave(p, 1, k, m)
            annihilator = projector_i12(-sgn, mode)
            if not s.field_zero(f * annihilator, f):
                ok = False
            if not s.field_zero(hestenes_residual(f, mass), f):
                ok = False
            rel.append([str(x) for x in p.as_tuple()])
        if len(basis) != 2:
            ok = False
        witness[label] = rel
    s.add(
        "planewave.degeneracy_subspaces",
        "each P_{+/-}12 degeneracy subspace has complex dimension 2 and solves the Hestenes form at +/-m",
        ok,
        witness=witness,
    )

    if mode == EXACT:
        rest_minus = rest_solutions(3, -1, mode)
        rest_plus = rest_solutions(3, 1, mode)
        rest_zero = rest_solutions(0, 1, mode)
        ok = (
            len(rest_minus.fields) == 4
            and len(rest_plus.fields) == 4
            and not rest_minus.degenerate
            and rest_zero.degenerate
            and len(rest_zero.fields) == 8
            and all(joyce_residual(f, 3).is_zero() for f in rest_minus.fields + rest_plus.fields)
            and all(joyce_residual(f, 0).is_zero() for f in rest_zero.fields)
        )
        s.add(
            "planewave.rest_solutions",
            "k = 0 solution bases have dimension (4, 4); the massless case is flagged degenerate",
            ok,
        )

    ok = True
    for _ in range(20):
        f = s.random_field()
        if not s.field_eq(joyce_residual(f, 0), dirac_residual(f, 0)):
            ok = False
    s.add(
        "planewave.massless_coincidence",
        "at m = 0 the even-subalgebra and Dirac residual operators agree on arbitrary fields",
        ok,
    )

    def dirac_condition(A: Multivector) -> Multivector:
        mom = FourMomentum.along_x(omega, k, mode)
        mval = m if mode == EXACT else float(m)
        return -(mom.vector() * A) - A.scale(mval)

    kernel_even = linalg.operator_kernel(dirac_condition, even_basis(mode))
    ok = len(kernel_even) == 0
    for _ in range(5):
        f = s.random_joyce_solution()
        if not f.is_zero() and s.field_zero(dirac_residual(f, m), f):
            ok = False
    s.add(
        "planewave.no_even_dirac_solution",
        "for m > 0 no nonzero even plane-wave field solves the Dirac equation",
        ok,
        witness={"even_kernel_dim": len(kernel_even)},
    )

    ok = True
    for _ in range(5):
        f = s.random_joyce_solution()
        twice = gradient(gradient(f))
        mval = m if mode == EXACT else float(m)
        if not s.field_eq(twice, f.scale(-(mval * mval))):
            ok = False
        if not s.field_eq(f.conjugate().conjugate(), f):
            ok = False
    s.add(
        "planewave.gradient_structure",
        "gradient twice scales on-shell terms by -(m**2); conjugation is an involution",
        ok,
    )

    ok = True
    for _ in range(5):
        A = s.random_multivector(even=True)
        a_plus, a_minus = commutant_split(A)
        g0 = basis_vector(0, mode)
        if not s.mv_eq(a_plus + a_minus, A):
            ok = False
        if not s.mv_eq(g0 * a_plus * g0, a_plus):
            ok = False
        if not s.mv_eq(g0 * a_minus * g0, -a_minus):
            ok = False
    s.add(
        "planewave.commutant_split",
        "even amplitudes split into gamma_0 commuting and anticommuting halves",
        ok,
    )


def suite_oracle(s: _Suite) -> None:
    mode = s.mode

    ok = True
    for a in range(BLADE_COUNT):
        for b in range(BLADE_COUNT):
            ma = Multivector.blade(a, 1, mode)
            mb = Multivector.blade(b, 1, mode)
            lhs = represent(ma * mb)
            rhs = represent(ma) * represent(mb)
            if not (lhs == rhs if mode == EXACT else lhs.isclose(rhs)):
                ok = False
    s.add("oracle.homomorphism_blades", "represent(ab) = represent(a) represent(b) on all 256 blade pairs", ok)

    ok = True
    for _ in range(100):
        a, b = s.random_multivector(), s.random_multivector()
        lhs = represent(a * b)
        rhs = represent(a) * represent(b)
        if not (lhs == rhs if mode == EXACT else lhs.isclose(rhs)):
            ok = False
    s.add("oracle.homomorphism_random", "representation homomorphism on 100 random pairs", ok)

    ok = True
    for bits in range(BLADE_COUNT):
        m = Multivector.blade(bits, 1, mode)
        if not s.mv_eq(unrepresent(represent(m)), m):
            ok = False
    for _ in range(100):
        m = s.random_multivector()
        if not s.mv_eq(unrepresent(represent(m)), m):
            ok = False
    s.add("oracle.roundtrip", "unrepresent inverts represent on blades and 100 random elements", ok)

    ok = True
    for _ in range(20):
        m = s.random_multivector()
        lhs = represent(m.adjoint())
        rhs = represent(m).conjugate_transpose()
        if not (lhs == rhs if mode == EXACT else lhs.isclose(rhs)):
            ok = False
    s.add("oracle.adjoint_bridge", "algebraic adjoint matches the matrix conjugate transpose", ok)

    ok = True
    for a in range(BLADE_COUNT):
        inv = blade_matrix(a, mode).scale(BLADE_SQUARE[a])
        for b in range(BLADE_COUNT):
            t = (inv * blade_matrix(b, mode)).trace() / 4
            want = ComplexScalar.of(1 if a == b else 0, mode)
            good = t == want if mode == EXACT else (t - want).magnitude() <= FLOAT_EPS
            if not good:
                ok = False
    s.add("oracle.trace_orthogonality", "trace(B_inv B')/4 is the blade delta on all 256 pairs", ok)

    m_val, k_val = s.mass_and_k()
    ok = True
    for _ in range(10):
        f = s.random_joyce_solution()
        kvec = f.terms[0].momentum
        A = f.terms[0].amplitude
        gkmat = (
            gamma_matrix(0, mode).scale(kvec.omega)
            + gamma_matrix(1, mode).scale(kvec.k1)
            + gamma_matrix(2, mode).scale(kvec.k2)
            + gamma_matrix(3, mode).scale(kvec.k3)
        )
        i = ComplexScalar.i(mode)
        rep_a = represent(A)
        rep_g0 = gamma_matrix(0, mode)
        rep_g12 = represent(basis_vector(1, mode) * basis_vector(2, mode))
        dirac_mat = (gkmat * rep_a).scale(-1) - rep_a.scale(m_val)
        joyce_mat = (gkmat * rep_a).scale(-1) - (rep_a * rep_g0).scale(m_val)
        hest_mat = ((gkmat * rep_a).scale(i) * rep_g12).scale(-1) - (rep_a * rep_g0).scale(m_val)
        for resid, matside in (
            (dirac_residual(f, m_val), dirac_mat),
            (joyce_residual(f, m_val), joyce_mat),
            (hestenes_residual(f, m_val), hest_mat),
        ):
            amp = Multivector.zero(mode)
            for term in resid.terms:
                if term.momentum.close_to(kvec):
                    amp = term.amplitude
            lhs = represent(amp)
            if not (lhs == matside if mode == EXACT else lhs.isclose(matside)):
                ok = False
    s.add(
        "oracle.residual_bridge",
        "residual amplitudes agree with the matrix expressions built from gamma matrices",
        ok,
    )

    identity = represent(Multivector.scalar(1, mode))
    e2 = column_extract(identity, 2)
    ok = [c.is_zero() for c in e2.entries] == [True, True, False, True] and e2.entries[2] == ComplexScalar.one(mode)
    for alpha in range(4):
        proj = alpha_projector_matrix(alpha, mode)
        mat = represent(s.random_multivector())
        masked = mat * proj
        for j in range(4):
            col = column_extract(masked, j)
            if j == alpha:
                if col != column_extract(mat, alpha):
                    ok = False
            elif not col.is_zero():
                ok = False
    omega = on_shell_omega(m_val, k_val, 1, mode)
    f = dirac_planewave(Multivector.scalar(1, mode), omega, k_val, m_val)
    A = f.terms[0].amplitude
    gk = gamma_matrix(0, mode).scale(omega) + gamma_matrix(1, mode).scale(
        k_val if mode == EXACT else float(k_val)
    )
    mat = represent(A)
    for alpha in range(4):
        psi = column_extract(mat, alpha)
        lhs = apply_matrix(gk.scale(-1), psi)
        rhs = psi.scale(m_val)
        diff = lhs - rhs
        good = diff.is_zero() if mode == EXACT else all(
            c.magnitude() <= FLOAT_EPS * (1 + max(x.magnitude() for x in psi.entries))
            for c in diff.entries
        )
        if not good:
            ok = False
    s.add(
        "oracle.column_extraction",
        "column projectors isolate single columns and extracted columns solve the column-spinor Dirac equation",
        ok,
    )


_SUITES: dict[str, Callable[[_Suite], None]] = {
    "core": suite_core,
    "projectors": suite_projectors,
    "splits": suite_splits,
    "planewave": suite_planewave,
    "oracle": suite_oracle,
}


def run_suite(name: str, mode: str = EXACT, seed: int = DEFAULT_SEED) -> VerificationReport:
    """Run one named suite (or ``"all"``) and return its report."""
    if name != "all" and name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {('all',) + SUITE_NAMES}")
    names = SUITE_NAMES if name == "all" else (name,)
    report = VerificationReport(suite=name, mode=check_mode(mode), seed=seed)
    for n in names:
        s = _Suite(mode, seed)
        _SUITES[n](s)
        report.checks.extend(s.checks)
    return report
