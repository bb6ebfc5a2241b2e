"""Plane-wave fields and the free-particle equations posed on them.

A field is a finite superposition of plane-wave terms ``A * exp(i k.x)``
with constant multivector amplitude ``A`` and real four-momentum ``k``;
the phase convention is ``k.x = omega*t - k1*x1 - k2*x2 - k3*x3``.  On this
ansatz the spacetime gradient acts termwise as multiplication by
``i*(gamma_0*omega + gamma_1*k1 + gamma_2*k2 + gamma_3*k3)`` from the left,
which keeps every computation in exact rational arithmetic when the momenta
are rational.

Three residual operators are provided, one per equation:

    dirac_residual:     i*grad(F) - m*F
    joyce_residual:     i*grad(F) - m*F*gamma_0        (even-subalgebra form)
    hestenes_residual:  -grad(F)*B - m*F*gamma_0       (B defaults gamma_1 gamma_2)

A field solves the corresponding equation iff its residual is zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import linalg
from .multivector import Multivector, basis_vector, even_basis
from .scalars import (
    EXACT,
    FLOAT,
    FLOAT_EPS,
    ComplexScalar,
    Real,
    as_real,
    check_mode,
    real_from_json,
    real_to_json,
    same_mode,
)

#: Absolute tolerance for identifying two float-mode momenta.
MOMENTUM_MERGE_TOL = 1e-12


@dataclass(frozen=True)
class FourMomentum:
    """Real four-momentum (omega, k1, k2, k3) in units with hbar = c = 1."""

    mode: str
    omega: Real
    k1: Real
    k2: Real
    k3: Real

    def __post_init__(self):
        check_mode(self.mode)
        want = Fraction if self.mode == EXACT else float
        for name in ("omega", "k1", "k2", "k3"):
            if not isinstance(getattr(self, name), want):
                raise TypeError(f"{name} must be {want.__name__} in {self.mode} mode")

    @classmethod
    def of(cls, omega, k1, k2, k3, mode: str = EXACT) -> "FourMomentum":
        return cls(
            mode,
            as_real(omega, mode),
            as_real(k1, mode),
            as_real(k2, mode),
            as_real(k3, mode),
        )

    @classmethod
    def along_x(cls, omega, k, mode: str = EXACT) -> "FourMomentum":
        return cls.of(omega, k, 0, 0, mode)

    def components(self) -> tuple:
        return (self.omega, self.k1, self.k2, self.k3)

    def __neg__(self) -> "FourMomentum":
        return FourMomentum(self.mode, -self.omega, -self.k1, -self.k2, -self.k3)

    def close_to(self, other: "FourMomentum", tol: float = MOMENTUM_MERGE_TOL) -> bool:
        same_mode(self.mode, other.mode)
        if self.mode == EXACT:
            return self == other
        return all(
            abs(a - b) <= tol for a, b in zip(self.components(), other.components())
        )

    def vector(self) -> Multivector:
        """The grade-1 element gamma_mu k^mu contracted against this momentum."""
        out = Multivector.zero(self.mode)
        for mu, comp in enumerate(self.components()):
            if comp != 0:
                out = out + basis_vector(mu, self.mode).scale(comp)
        return out


@dataclass(frozen=True)
class PlaneWaveTerm:
    amplitude: Multivector
    momentum: FourMomentum

    def __post_init__(self):
        same_mode(self.amplitude.mode, self.momentum.mode)


class Field:
    """Finite plane-wave superposition in canonical form.

    Terms are keyed by momentum: equal (exact) or near-equal (float) momenta
    are merged by amplitude addition, exact-zero amplitudes are dropped, and
    terms are ordered by momentum components so equal fields print and
    serialize identically.  The zero field has no terms.
    """

    __slots__ = ("mode", "terms")

    def __init__(self, mode: str, terms: Iterable[PlaneWaveTerm] = ()):
        check_mode(mode)
        merged: list[list] = []  # [momentum, amplitude]
        for term in terms:
            same_mode(mode, term.amplitude.mode)
            for slot in merged:
                if slot[0].close_to(term.momentum):
                    slot[1] = slot[1] + term.amplitude
                    break
            else:
                merged.append([term.momentum, term.amplitude])
        final = []
        for momentum, amplitude in merged:
            if mode == EXACT and amplitude.is_zero():
                continue
            final.append(PlaneWaveTerm(amplitude, momentum))
        final.sort(key=lambda t: t.momentum.components())
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "terms", tuple(final))

    def __setattr__(self, name, value):
        raise AttributeError("Field is immutable")

    @classmethod
    def zero(cls, mode: str = EXACT) -> "Field":
        return cls(mode, ())

    @classmethod
    def single(cls, amplitude: Multivector, momentum: FourMomentum) -> "Field":
        return cls(amplitude.mode, (PlaneWaveTerm(amplitude, momentum),))

    # -- linear structure -------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Field):
            return NotImplemented
        same_mode(self.mode, other.mode)
        return Field(self.mode, self.terms + other.terms)

    def __sub__(self, other):
        if not isinstance(other, Field):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return self.map_amplitudes(lambda a: -a)

    def __mul__(self, other):
        """Right multiplication by a constant multivector, or scaling."""
        if isinstance(other, Multivector):
            same_mode(self.mode, other.mode)
            return self.map_amplitudes(lambda a: a * other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, value) -> "Field":
        return self.map_amplitudes(lambda a: a.scale(value))

    def map_amplitudes(self, fn: Callable[[Multivector], Multivector]) -> "Field":
        return Field(
            self.mode,
            (PlaneWaveTerm(fn(t.amplitude), t.momentum) for t in self.terms),
        )

    # -- structure --------------------------------------------------------

    def conjugate(self) -> "Field":
        """Complex conjugation of the field: (A, k) -> (A*, -k); an involution."""
        return Field(
            self.mode,
            (PlaneWaveTerm(t.amplitude.conjugate(), -t.momentum) for t in self.terms),
        )

    def even_odd_split(self) -> tuple["Field", "Field"]:
        evens, odds = [], []
        for t in self.terms:
            e, o = t.amplitude.even_odd_split()
            evens.append(PlaneWaveTerm(e, t.momentum))
            odds.append(PlaneWaveTerm(o, t.momentum))
        return Field(self.mode, evens), Field(self.mode, odds)

    def is_zero(self) -> bool:
        if self.mode == EXACT:
            return not self.terms
        return all(t.amplitude.is_zero() for t in self.terms)

    def is_even(self) -> bool:
        return all(t.amplitude.is_even() for t in self.terms)

    def is_real(self) -> bool:
        return self == self.conjugate() if self.mode == EXACT else self.isclose(self.conjugate())

    def norm2(self):
        total = Fraction(0) if self.mode == EXACT else 0.0
        for t in self.terms:
            total += t.amplitude.norm2()
        return total

    def norm(self) -> float:
        return math.sqrt(float(self.norm2()))

    def __eq__(self, other):
        if not isinstance(other, Field):
            return NotImplemented
        return self.mode == other.mode and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def isclose(self, other: "Field", rel: float = FLOAT_EPS) -> bool:
        same_mode(self.mode, other.mode)
        if self.mode == EXACT:
            return self == other
        return (self - other).norm() <= rel * (1.0 + self.norm() + other.norm())

    def __repr__(self) -> str:
        if not self.terms:
            return "Field(0)"
        parts = [
            f"({t.amplitude!r}) @ {tuple(map(str, t.momentum.components()))}"
            for t in self.terms
        ]
        return "Field[" + " + ".join(parts) + "]"

    # -- JSON ---------------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "terms": [
                {
                    "momentum": [
                        real_to_json(x, self.mode) for x in t.momentum.components()
                    ],
                    "amplitude": t.amplitude.to_json_dict(),
                }
                for t in self.terms
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Field":
        if not isinstance(data, dict) or "mode" not in data or "terms" not in data:
            raise ValueError("field JSON needs 'mode' and 'terms'")
        mode = check_mode(data["mode"])
        terms = []
        for entry in data["terms"]:
            momentum = entry["momentum"]
            if not isinstance(momentum, list) or len(momentum) != 4:
                raise ValueError("momentum must be [omega, k1, k2, k3]")
            k = FourMomentum(mode, *(real_from_json(x, mode) for x in momentum))
            amplitude = Multivector.from_json_dict(entry["amplitude"])
            same_mode(mode, amplitude.mode)
            terms.append(PlaneWaveTerm(amplitude, k))
        return cls(mode, terms)


@dataclass(frozen=True)
class PlaneWaveParams:
    """Amplitude parameters (a, b, c, d) of the gamma_0-commuting part."""

    a: ComplexScalar
    b: ComplexScalar
    c: ComplexScalar
    d: ComplexScalar

    def __post_init__(self):
        mode = self.a.mode
        for c in (self.b, self.c, self.d):
            same_mode(mode, c.mode)

    @property
    def mode(self) -> str:
        return self.a.mode

    @classmethod
    def of(cls, a, b=0, c=0, d=0, mode: str = EXACT) -> "PlaneWaveParams":
        return cls(*(ComplexScalar.of(v, mode) for v in (a, b, c, d)))

    def as_tuple(self) -> tuple:
        return (self.a, self.b, self.c, self.d)


def commuting_part_basis(mode: str = EXACT) -> list[Multivector]:
    """The gamma_0-commuting even sector in (a, b, c, d) order."""
    g1, g2, g3 = (basis_vector(mu, mode) for mu in (1, 2, 3))
    one = Multivector.scalar(1, mode)
    return [one, g1 * g2, g2 * g3, g3 * g1]


def params_amplitude(p: PlaneWaveParams) -> Multivector:
    """A_plus = a + b*g1g2 + c*g2g3 + d*g3g1."""
    coeffs = zip(p.as_tuple(), commuting_part_basis(p.mode))
    out = Multivector.zero(p.mode)
    for coeff, blade in coeffs:
        out = out + blade.scale(coeff)
    return out


# -- differential and residual operators ------------------------------------


def gradient(field: Field) -> Field:
    """Spacetime gradient on the plane-wave ansatz.

    Each term (A, k) maps to (i*(gamma.k)*A, k): differentiating the phase
    pulls down i*k^mu, which contracts with the lower-index gammas.
    """
    i = ComplexScalar.i(field.mode)
    return Field(
        field.mode,
        (
            PlaneWaveTerm((t.momentum.vector() * t.amplitude).scale(i), t.momentum)
            for t in field.terms
        ),
    )


def conjugate_field(field: Field) -> Field:
    return field.conjugate()


def dirac_residual(field: Field, m) -> Field:
    """Residual of i*grad(Psi) = m*Psi."""
    mval = as_real(m, field.mode)
    return gradient(field).scale(ComplexScalar.i(field.mode)) - field.scale(mval)


def joyce_residual(field: Field, m) -> Field:
    """Residual of i*grad(Psi) = m*Psi*gamma_0."""
    mval = as_real(m, field.mode)
    g0 = basis_vector(0, field.mode)
    return gradient(field).scale(ComplexScalar.i(field.mode)) - (field * g0).scale(mval)


def _check_plane(B: Multivector) -> Multivector:
    if B != B.grade_project(2):
        raise ValueError("plane must be a pure grade-2 element")
    minus_one = Multivector.scalar(-1, B.mode)
    square = B * B
    ok = square == minus_one if B.mode == EXACT else square.isclose(minus_one)
    if not ok:
        raise ValueError("plane must square to -1")
    return B


def hestenes_residual(field: Field, m, B: Multivector | None = None) -> Field:
    """Residual of -grad(Psi)*B = m*Psi*gamma_0 with B defaulting to gamma_1 gamma_2.

    The plane argument exists for the gauge-covariance identity; it must be a
    grade-2 element squaring to -1.
    """
    mval = as_real(m, field.mode)
    if B is None:
        B = basis_vector(1, field.mode) * basis_vector(2, field.mode)
    else:
        same_mode(field.mode, B.mode)
        _check_plane(B)
    g0 = basis_vector(0, field.mode)
    return -(gradient(field) * B) - (field * g0).scale(mval)


# -- plane-wave solutions ----------------------------------------------------


def planewave_condition(A: Multivector, omega, k, m) -> Multivector:
    """-(omega + gamma_0 gamma_1 k)A - m gamma_0 A gamma_0 for momentum along x1.

    Zero exactly when A*exp(i(omega*t - k*x)) solves the even-subalgebra
    equation i*grad(Psi) = m*Psi*gamma_0.
    """
    mode = A.mode
    w, kk, mm = (as_real(v, mode) for v in (omega, k, m))
    g0 = basis_vector(0, mode)
    g01 = g0 * basis_vector(1, mode)
    lhs = -(Multivector.scalar(w, mode) + g01.scale(kk)) * A
    return lhs - (g0 * A * g0).scale(mm)


def commutant_split(A: Multivector) -> tuple[Multivector, Multivector]:
    """Split an even A into gamma_0-commuting and anticommuting parts.

    A_plus = (A + g0 A g0)/2 spans {1, g1g2, g2g3, g3g1}; A_minus spans
    g0g1 times the same set.
    """
    if not A.is_even():
        raise ValueError("commutant split is defined on even elements")
    g0 = basis_vector(0, A.mode)
    conj = g0 * A * g0
    half = Fraction(1, 2) if A.mode == EXACT else 0.5
    return (A + conj).scale(half), (A - conj).scale(half)


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def _parse_sign(sign) -> int:
    if sign in (1, -1):
        return sign
    if sign in ("+", "plus"):
        return 1
    if sign in ("-", "minus"):
        return -1
    raise ValueError(f"sign must be +1/-1 or '+'/'-', got {sign!r}")


def on_shell_omega(m, k, omega_sign, mode: str | None = None) -> Real:
    """omega = sign * sqrt(k**2 + m**2); exact mode requires a rational root.

    When ``mode`` is omitted it is float iff either input is a float.
    """
    sgn = _parse_sign(omega_sign)
    if mode is None:
        mode = FLOAT if any(isinstance(v, float) for v in (m, k)) else EXACT
    mval, kval = as_real(m, mode), as_real(k, mode)
    squared = kval * kval + mval * mval
    if mode == EXACT:
        root = _rational_sqrt(squared)
        if root is None:
            raise ValueError(
                f"omega**2 = {squared} has no rational square root; use float mode"
            )
        return sgn * root
    return sgn * math.sqrt(squared)


def _require_on_shell(omega: Real, k: Real, m: Real, mode: str) -> None:
    gap = omega * omega - k * k - m * m
    if mode == EXACT:
        if gap != 0:
            raise ValueError(f"momentum is off shell: omega**2 - k**2 - m**2 = {gap}")
    elif abs(gap) > FLOAT_EPS * (1.0 + abs(omega * omega)):
        raise ValueError(f"momentum is off shell: omega**2 - k**2 - m**2 = {gap}")


def joyce_amplitude(p: PlaneWaveParams, omega, k, m) -> Multivector:
    """Full amplitude A_plus + A_minus with A_minus = -((omega+m)/k) g0g1 A_plus."""
    mode = p.mode
    w, kk, mm = (as_real(v, mode) for v in (omega, k, m))
    if kk == 0:
        raise ValueError("k = 0 is degenerate; use rest_solutions")
    _require_on_shell(w, kk, mm, mode)
    a_plus = params_amplitude(p)
    g01 = basis_vector(0, mode) * basis_vector(1, mode)
    a_minus = (g01 * a_plus).scale(-(w + mm) / kk)
    return a_plus + a_minus


def joyce_planewave(p: PlaneWaveParams, omega_sign, k, m) -> Field:
    """On-shell plane-wave solution of i*grad(Psi) = m*Psi*gamma_0, momentum along x1."""
    mode = p.mode
    omega = on_shell_omega(m, k, omega_sign, mode)
    amplitude = joyce_amplitude(p, omega, k, m)
    return Field.single(amplitude, FourMomentum.along_x(omega, as_real(k, mode), mode))


def joyce_planewave_family(k, m, mode: str = EXACT) -> list[Field]:
    """The eight unit-parameter solutions: {a,b,c,d} basis times both omega signs."""
    fields = []
    for sign in (1, -1):
        for slot in range(4):
            values = [0, 0, 0, 0]
            values[slot] = 1
            p = PlaneWaveParams.of(*values, mode=mode)
            fields.append(joyce_planewave(p, sign, k, m))
    return fields


@dataclass(frozen=True)
class RestSolutions:
    """Basis of k = 0 solutions; ``degenerate`` marks the massless case."""

    fields: tuple
    degenerate: bool


def rest_solutions(m, omega_sign, mode: str = EXACT) -> RestSolutions:
    """Solve -omega*A = m*gamma_0 A gamma_0 directly at k = 0, omega = sign*m.

    For omega = -m the kernel is the gamma_0-commuting sector, for omega = +m
    the anticommuting one (4 complex dimensions each).  At m = 0 every even
    amplitude solves; the full even basis is returned with the degeneracy flag.
    """
    sgn = _parse_sign(omega_sign)
    mval = as_real(m, mode)
    if mval < 0:
        raise ValueError("mass must be nonnegative")
    omega = sgn * mval
    momentum = FourMomentum.of(omega, 0, 0, 0, mode)
    g0 = basis_vector(0, mode)

    def condition(A: Multivector) -> Multivector:
        return A.scale(-omega) - (g0 * A * g0).scale(mval)

    kernel = linalg.operator_kernel(condition, even_basis(mode))
    fields = tuple(Field.single(A, momentum) for A in kernel)
    return RestSolutions(fields, degenerate=(mval == 0))


def planewave_condition_kernel(omega, k, m, mode: str = EXACT) -> list[Multivector]:
    """Even amplitudes annihilated by the plane-wave condition at (omega, k, m)."""
    w, kk, mm = (as_real(v, mode) for v in (omega, k, m))
    return linalg.operator_kernel(
        lambda A: planewave_condition(A, w, kk, mm), even_basis(mode)
    )


def degeneracy_conditions(omega, k, m, p12_sign) -> list[PlaneWaveParams]:
    """Parameter subspace on which the P_{-/+}12 part of the solution vanishes.

    For p12_sign = +1 this returns the (a, b, c, d) combinations whose
    plane-wave solution has vanishing P_minus12 part, so the field is a pure
    P_plus12 solution: it satisfies the Hestenes-form equation with mass +m.
    The mirrored sign selects the reversed-mass family.  The constraint basis
    is computed by an exact kernel solve rather than hard-coded, because the
    closed-form relations between (a, b) and (c, d) are convention-sensitive.
    """
    sgn = _parse_sign(p12_sign)
    # Exact unless any argument is already a float.
    mode = FLOAT if any(isinstance(v, float) for v in (omega, k, m)) else EXACT
    w, kk, mm = (as_real(v, mode) for v in (omega, k, m))
    _require_on_shell(w, kk, mm, mode)
    from .spinors import projector_i12

    annihilator = projector_i12(-sgn, mode)
    unit_params = [
        PlaneWaveParams.of(*(1 if i == j else 0 for j in range(4)), mode=mode)
        for i in range(4)
    ]
    images = [
        (joyce_amplitude(p, w, kk, mm) * annihilator).coefficient_vector()
        for p in unit_params
    ]
    rows = [[images[j][i] for j in range(4)] for i in range(16)]
    combos = linalg.nullspace(rows, mode)
    return [PlaneWaveParams(*combo) for combo in combos]


def dirac_planewave(seed: Multivector, omega, k, m) -> Field:
    """On-shell solution of i*grad(Psi) = m*Psi via the factorized amplitude.

    A = (gamma_0*omega + gamma_1*k - m) * seed satisfies the on-shell Dirac
    condition because (gamma_0*omega + gamma_1*k)**2 = omega**2 - k**2 = m**2.
    """
    mode = seed.mode
    w, kk, mm = (as_real(v, mode) for v in (omega, k, m))
    _require_on_shell(w, kk, mm, mode)
    momentum = FourMomentum.along_x(w, kk, mode)
    amplitude = (momentum.vector() - Multivector.scalar(mm, mode)) * seed
    return Field.single(amplitude, momentum)


# -- rank over the two scalar fields ----------------------------------------


def field_coefficient_matrix(fields: Sequence[Field]) -> list[list[ComplexScalar]]:
    """Stack fields as coefficient rows over the union of their momenta."""
    if not fields:
        return []
    mode = fields[0].mode
    for f in fields:
        same_mode(mode, f.mode)
    momenta: list[FourMomentum] = []
    for f in fields:
        for t in f.terms:
            if not any(k.close_to(t.momentum) for k in momenta):
                momenta.append(t.momentum)
    momenta.sort(key=lambda k: k.components())
    zero_mv = Multivector.zero(mode)
    rows = []
    for f in fields:
        row: list[ComplexScalar] = []
        for k in momenta:
            amp = zero_mv
            for t in f.terms:
                if t.momentum.close_to(k):
                    amp = t.amplitude
                    break
            row.extend(amp.coefficient_vector())
        rows.append(row)
    return rows


def rank(fields: Sequence[Field], scalars: str = "complex") -> int:
    """Linear rank of the fields over the requested scalar field.

    ``"complex"`` ranks the raw coefficient vectors; ``"real"`` expands each
    complex coordinate into its real and imaginary parts first, so complex
    multiples count as independent.
    """
    if scalars not in ("complex", "real"):
        raise ValueError(f"scalars must be 'complex' or 'real', got {scalars!r}")
    rows = field_coefficient_matrix(fields)
    if not rows or not rows[0]:
        return 0
    if scalars == "real":
        rows = [linalg.real_expanded(row) for row in rows]
    return linalg.rank(rows)
