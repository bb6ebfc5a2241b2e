"""Projector calculus and spinor decompositions.

Two commuting families of hermitian idempotents drive everything here:

    P_{+/-}0  = (1 +/- gamma_0) / 2
    P_{+/-}12 = (1 +/- i gamma_1 gamma_2) / 2

Right-multiplying a solution of the even-subalgebra equation
``i grad(Psi) = m Psi gamma_0`` by P_{+/-}0 lands on the algebraic Dirac
equation with mass +/-m; right-multiplying by P_{+/-}12 lands on the
Hestenes form with mass +/-m.  The remaining operations translate between
the complex even solutions and their real even representatives, build the
four real Hestenes solutions attached to one Dirac solution, and implement
spatial-rotor gauge transformations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .fields import Field, dirac_residual
from .multivector import Multivector, basis_vector
from .scalars import EXACT, ComplexScalar, same_mode

SplitInput = Union[Multivector, Field]


def _half(mode: str):
    return Fraction(1, 2) if mode == EXACT else 0.5


def projector_gamma0(sign, mode: str = EXACT) -> Multivector:
    """P_{+/-}0 = (1 +/- gamma_0)/2; hermitian idempotent with gamma_0 P = +/- P."""
    from .fields import _parse_sign

    sgn = _parse_sign(sign)
    one = Multivector.scalar(1, mode)
    return (one + basis_vector(0, mode).scale(sgn)).scale(_half(mode))


def projector_i12(sign, mode: str = EXACT) -> Multivector:
    """P_{+/-}12 = (1 +/- i gamma_1 gamma_2)/2; even hermitian idempotent.

    Satisfies P_{+/-}12 = +/- i P_{+/-}12 gamma_1 gamma_2, the identity that
    lets the bivector factor of the Hestenes equation be traded for i.
    """
    from .fields import _parse_sign

    sgn = _parse_sign(sign)
    one = Multivector.scalar(1, mode)
    g12 = basis_vector(1, mode) * basis_vector(2, mode)
    return (one + g12.scale(ComplexScalar.i(mode) * sgn)).scale(_half(mode))


_PROJECTOR_FAMILIES = {
    "gamma0": projector_gamma0,
    "i12": projector_i12,
}


def split_right(x: SplitInput, family: str) -> tuple[SplitInput, SplitInput]:
    """Decompose x into (x*P_plus, x*P_minus) for the named projector family."""
    try:
        make = _PROJECTOR_FAMILIES[family]
    except KeyError:
        raise ValueError(
            f"unknown projector family {family!r}; use 'gamma0' or 'i12'"
        ) from None
    p_plus = make(1, x.mode)
    p_minus = make(-1, x.mode)
    return x * p_plus, x * p_minus


def real_even_pair(field: Field) -> tuple[Field, Field]:
    """Real even representatives F_{+/-} of an even field.

    F_{+/-} = (F + F*)/2 +/- (i/2)(F - F*) g1g2, with conjugation acting on
    fields as (A, k) -> (A*, -k).  Both outputs are real and even and satisfy
    F P_{+/-}12 = F_{+/-} P_{+/-}12; applied to a solution of the
    even-subalgebra equation they solve the Hestenes form with mass +/-m.
    """
    if not field.is_even():
        raise ValueError("real even pair is defined for even-valued fields")
    mode = field.mode
    conj = field.conjugate()
    g12 = basis_vector(1, mode) * basis_vector(2, mode)
    half = _half(mode)
    half_i = ComplexScalar.i(mode) * half
    sym = (field + conj).scale(half)
    skew = ((field - conj) * g12).scale(half_i)
    return sym + skew, sym - skew


def reconstruct_joyce(f_plus: Field, f_minus: Field) -> Field:
    """Rebuild the complex even field from its real even pair.

    F = (F_+ + F_-)/2 + (i/2)(F_+ - F_-) g1g2; the left inverse of
    real_even_pair on even fields.
    """
    same_mode(f_plus.mode, f_minus.mode)
    mode = f_plus.mode
    g12 = basis_vector(1, mode) * basis_vector(2, mode)
    half = _half(mode)
    half_i = ComplexScalar.i(mode) * half
    return (f_plus + f_minus).scale(half) + ((f_plus - f_minus) * g12).scale(half_i)


def hestenes_quartet(field: Field, m) -> tuple[Field, Field, Field, Field]:
    """Four real even Hestenes solutions attached to one Dirac solution.

    With Psi_plus / Psi_minus the even and odd parts of the input and * the
    field conjugation:

        H1 = (Psi_+ + Psi_+*)/2 * g1g2 - (i/2)(Psi_- - Psi_-*) * g0
        H2 = H1 * g1g2
        H3 = (i/2)(Psi_+ - Psi_+*) * g1g2 + (Psi_- + Psi_-*)/2 * g0
        H4 = H3 * g1g2

    Each output is real, even, and has zero Hestenes residual at mass +m.
    """
    residual = dirac_residual(field, m)
    if not residual.is_zero():
        raise ValueError("quartet input must solve the Dirac equation at this mass")
    mode = field.mode
    g0 = basis_vector(0, mode)
    g12 = basis_vector(1, mode) * basis_vector(2, mode)
    half = _half(mode)
    half_i = ComplexScalar.i(mode) * half
    even, odd = field.even_odd_split()
    even_c, odd_c = even.conjugate(), odd.conjugate()
    h1 = ((even + even_c).scale(half)) * g12 - ((odd - odd_c).scale(half_i)) * g0
    h2 = h1 * g12
    h3 = ((even - even_c).scale(half_i)) * g12 + ((odd + odd_c).scale(half)) * g0
    h4 = h3 * g12
    return h1, h2, h3, h4


def current_density(psi: Multivector) -> Multivector:
    """Vector part of psi gamma_0 reversion(psi); real for real algebra elements."""
    g0 = basis_vector(0, psi.mode)
    return (psi * g0 * psi.reversion()).grade_project(1)


# -- spatial rotors -----------------------------------------------------------


def _is_spatial_plane(B: Multivector) -> bool:
    g0 = basis_vector(0, B.mode)
    return B * g0 == g0 * B if B.mode == EXACT else (B * g0).isclose(g0 * B)


@dataclass(frozen=True)
class Rotor:
    """Unit-norm even element c + s*B with B a spatial plane (B**2 = -1).

    Exact rotors come from rational points on the circle (c**2 + s**2 = 1),
    e.g. (3/5, 4/5); angle-based construction is float-only.
    """

    c: ComplexScalar
    s: ComplexScalar
    plane: Multivector

    def __post_init__(self):
        mode = same_mode(same_mode(self.c.mode, self.s.mode), self.plane.mode)
        if not (self.c.is_real() and self.s.is_real()):
            raise ValueError("rotor components must be real")
        from .fields import _check_plane

        _check_plane(self.plane)
        if not _is_spatial_plane(self.plane):
            raise ValueError("rotor plane must be spatial (commute with gamma_0)")
        norm = self.c * self.c + self.s * self.s
        one = ComplexScalar.one(mode)
        if mode == EXACT:
            if norm != one:
                raise ValueError(f"rotor needs c**2 + s**2 = 1, got {norm}")
        elif (norm - one).magnitude() > 1e-12:
            raise ValueError(f"rotor needs c**2 + s**2 = 1, got {norm}")

    @property
    def mode(self) -> str:
        return self.c.mode

    @classmethod
    def from_circle_point(cls, c, s, plane: Multivector) -> "Rotor":
        mode = plane.mode
        return cls(ComplexScalar.of(c, mode), ComplexScalar.of(s, mode), plane)

    @classmethod
    def from_angle(cls, theta: float, plane: Multivector) -> "Rotor":
        """Half-angle rotor cos(theta/2) + sin(theta/2)*B; float mode only."""
        import math

        if plane.mode == EXACT:
            raise ValueError("angle-based rotors are float-mode only")
        return cls(
            ComplexScalar.floating(math.cos(theta / 2.0)),
            ComplexScalar.floating(math.sin(theta / 2.0)),
            plane,
        )

    def multivector(self) -> Multivector:
        return Multivector.scalar(self.c, self.mode) + self.plane.scale(self.s)

    def reversed(self) -> Multivector:
        return Multivector.scalar(self.c, self.mode) - self.plane.scale(self.s)

    def conjugate_plane(self, B: Multivector) -> Multivector:
        """reversion(R) * B * R: where the rotor carries a reference plane."""
        return self.reversed() * B * self.multivector()


def gauge_transform(field: Field, rotor: Rotor) -> Field:
    """Global gauge transformation: right-multiply every amplitude by the rotor.

    Together with replacing the Hestenes plane g1g2 by reversion(R) g1g2 R the
    residual transforms covariantly, so no spatial plane is distinguished.
    """
    same_mode(field.mode, rotor.mode)
    return field * rotor.multivector()
