"""Multivectors of the spacetime algebra Cl(1,3) over the complex field.

Basis blades are encoded as 4-bit masks: bit ``mu`` is set iff the basis
vector ``gamma_mu`` is a factor, with factors kept in ascending index order.
The metric is fixed to diag(+1, -1, -1, -1), so ``gamma_0**2 = +1`` and the
spatial generators square to ``-1``.

The geometric product of two blades is computed by counting the
transpositions needed to merge the two ascending factor lists (each swap of
adjacent anticommuting vectors flips the sign), contracting every repeated
factor to its metric square, and keeping the symmetric-difference blade.
"""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Tuple

from .scalars import (
    EXACT,
    FLOAT_EPS,
    ComplexScalar,
    check_mode,
    same_mode,
)

SIGNATURE = (1, -1, -1, -1)
BLADE_COUNT = 16
GRADES = tuple(bin(bits).count("1") for bits in range(BLADE_COUNT))


def blade_grade(bits: int) -> int:
    return GRADES[bits]


def _merge_sign(a: int, b: int) -> int:
    """Sign of the blade product a*b: transposition count plus contractions."""
    swaps = 0
    for mu in range(4):
        if b >> mu & 1:
            swaps += GRADES[(a >> (mu + 1)) << (mu + 1)]
    sign = -1 if swaps & 1 else 1
    for mu in range(4):
        if (a >> mu & 1) and (b >> mu & 1) and SIGNATURE[mu] < 0:
            sign = -sign
    return sign


# Precomputed product tables: result blade and sign for all 256 blade pairs.
MUL_BLADE = tuple(tuple(a ^ b for b in range(16)) for a in range(16))
MUL_SIGN = tuple(tuple(_merge_sign(a, b) for b in range(16)) for a in range(16))

#: Sign of the square of each blade (every blade squares to +1 or -1).
BLADE_SQUARE = tuple(MUL_SIGN[bits][bits] for bits in range(16))

#: Sign picked up by reversion on each grade: (-1)**(k*(k-1)//2).
REVERSION_SIGN = tuple(-1 if (g * (g - 1) // 2) % 2 else 1 for g in range(5))


def blade_key(bits: int) -> str:
    """JSON key of a blade: ``"s"`` for the scalar, else e.g. ``"e01"``."""
    if not 0 <= bits < BLADE_COUNT:
        raise ValueError(f"blade index {bits} out of range")
    if bits == 0:
        return "s"
    return "e" + "".join(str(mu) for mu in range(4) if bits >> mu & 1)


def blade_from_key(key: str) -> int:
    if key == "s":
        return 0
    if key.startswith("e") and len(key) > 1:
        bits = 0
        for ch in key[1:]:
            if ch not in "0123":
                raise ValueError(f"bad blade key {key!r}")
            bit = 1 << int(ch)
            if bits & bit or bits > bit:
                raise ValueError(f"blade key {key!r} not in ascending canonical order")
            bits |= bit
        return bits
    raise ValueError(f"bad blade key {key!r}")


class Multivector:
    """Immutable sparse element of Cl(1,3) tensor C.

    Coefficients are stored per blade; absent blades are zero.  In exact mode
    zero coefficients are dropped so equal values have equal storage; float
    mode keeps whatever arises and reports zeroness relative to the largest
    coefficient magnitude.
    """

    __slots__ = ("mode", "_coeffs")

    def __init__(self, mode: str, coeffs: Mapping[int, ComplexScalar]):
        check_mode(mode)
        clean: dict[int, ComplexScalar] = {}
        for bits in sorted(coeffs):
            c = coeffs[bits]
            if not 0 <= bits < BLADE_COUNT:
                raise ValueError(f"blade index {bits} out of range")
            same_mode(mode, c.mode)
            if mode == EXACT and c.is_zero():
                continue
            clean[bits] = c
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "_coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, mode: str = EXACT) -> "Multivector":
        return cls(mode, {})

    @classmethod
    def scalar(cls, value, mode: str = EXACT) -> "Multivector":
        return cls(mode, {0: ComplexScalar.of(value, mode)})

    @classmethod
    def blade(cls, bits: int, coeff=1, mode: str = EXACT) -> "Multivector":
        return cls(mode, {bits: ComplexScalar.of(coeff, mode)})

    # -- inspection -----------------------------------------------------

    @property
    def coeffs(self) -> Mapping[int, ComplexScalar]:
        return MappingProxyType(self._coeffs)

    def coefficient(self, bits: int) -> ComplexScalar:
        if not 0 <= bits < BLADE_COUNT:
            raise ValueError(f"blade index {bits} out of range")
        return self._coeffs.get(bits, ComplexScalar.zero(self.mode))

    def items(self) -> Iterator[Tuple[int, ComplexScalar]]:
        return iter(self._coeffs.items())

    def coefficient_vector(self) -> list:
        """All 16 coefficients in blade order, for linear-algebra stacking."""
        return [self.coefficient(bits) for bits in range(BLADE_COUNT)]

    def max_magnitude(self) -> float:
        return max((c.magnitude() for c in self._coeffs.values()), default=0.0)

    def norm2(self):
        """Sum of squared coefficient magnitudes (a Fraction in exact mode)."""
        total = Fraction(0) if self.mode == EXACT else 0.0
        for c in self._coeffs.values():
            total += c.abs2()
        return total

    def is_zero(self) -> bool:
        if self.mode == EXACT:
            return not self._coeffs
        top = self.max_magnitude()
        return all(c.magnitude() <= FLOAT_EPS * (1.0 + top) for c in self._coeffs.values())

    def is_even(self) -> bool:
        return all(blade_grade(b) % 2 == 0 for b in self._coeffs)

    def is_odd(self) -> bool:
        return all(blade_grade(b) % 2 == 1 for b in self._coeffs)

    def is_real(self) -> bool:
        """True when every coefficient is fixed by complex conjugation."""
        return all(c.is_real() for c in self._coeffs.values())

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        same_mode(self.mode, other.mode)
        out = dict(self._coeffs)
        for bits, c in other._coeffs.items():
            out[bits] = out[bits] + c if bits in out else c
        return Multivector(self.mode, out)

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Multivector(self.mode, {b: -c for b, c in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, Multivector):
            same_mode(self.mode, other.mode)
            out: dict[int, ComplexScalar] = {}
            for b1, c1 in self._coeffs.items():
                for b2, c2 in other._coeffs.items():
                    bits = MUL_BLADE[b1][b2]
                    term = (c1 * c2) * MUL_SIGN[b1][b2]
                    out[bits] = out[bits] + term if bits in out else term
            return Multivector(self.mode, out)
        return self.scale(other)

    def __rmul__(self, other):
        # Scalars commute, so right and left scaling agree.
        return self.scale(other)

    def __truediv__(self, other):
        return self.scale(ComplexScalar.of(other, self.mode).inverse())

    def scale(self, value) -> "Multivector":
        c = ComplexScalar.of(value, self.mode)
        return Multivector(self.mode, {b: x * c for b, x in self._coeffs.items()})

    # -- grade structure and involutions --------------------------------

    def grade_project(self, g: int) -> "Multivector":
        if not 0 <= g <= 4:
            raise ValueError(f"grade {g} out of range 0..4")
        return Multivector(
            self.mode, {b: c for b, c in self._coeffs.items() if blade_grade(b) == g}
        )

    def even_odd_split(self) -> Tuple["Multivector", "Multivector"]:
        even = {b: c for b, c in self._coeffs.items() if blade_grade(b) % 2 == 0}
        odd = {b: c for b, c in self._coeffs.items() if blade_grade(b) % 2 == 1}
        return Multivector(self.mode, even), Multivector(self.mode, odd)

    def reversion(self) -> "Multivector":
        return Multivector(
            self.mode,
            {b: c * REVERSION_SIGN[blade_grade(b)] for b, c in self._coeffs.items()},
        )

    def conjugate(self) -> "Multivector":
        """Complex-conjugate every coefficient, leaving the blades alone."""
        return Multivector(self.mode, {b: c.conjugate() for b, c in self._coeffs.items()})

    def adjoint(self) -> "Multivector":
        """Hermitian adjoint, realized algebraically as gamma0 * reversion(m*) * gamma0.

        Matches the conjugate transpose in the standard matrix representation.
        """
        g0 = basis_vector(0, self.mode)
        return g0 * self.conjugate().reversion() * g0

    # -- comparison and display ------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        if self.mode != other.mode:
            return False
        for bits in set(self._coeffs) | set(other._coeffs):
            if self.coefficient(bits) != other.coefficient(bits):
                return False
        return True

    __hash__ = None  # type: ignore[assignment]

    def isclose(self, other: "Multivector", rel: float = FLOAT_EPS) -> bool:
        same_mode(self.mode, other.mode)
        if self.mode == EXACT:
            return self == other
        top = max(self.max_magnitude(), other.max_magnitude())
        return all(
            (self.coefficient(b) - other.coefficient(b)).magnitude() <= rel * (1.0 + top)
            for b in set(self._coeffs) | set(other._coeffs)
        )

    def __repr__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for bits, c in self._coeffs.items():
            text = str(c)
            if ("+" in text[1:]) or ("-" in text[1:]):
                text = f"({text})"
            name = blade_key(bits)
            parts.append(text if bits == 0 else f"{text}*{name}")
        return " + ".join(parts)

    # -- JSON -------------------------------------------------------------

    def to_json_dict(self) -> dict:
        from .scalars import scalar_to_json

        return {
            "mode": self.mode,
            "coeffs": {blade_key(b): scalar_to_json(c) for b, c in self._coeffs.items()},
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Multivector":
        from .scalars import scalar_from_json

        if not isinstance(data, dict) or "mode" not in data or "coeffs" not in data:
            raise ValueError("multivector JSON needs 'mode' and 'coeffs'")
        mode = check_mode(data["mode"])
        coeffs = {
            blade_from_key(key): scalar_from_json(pair, mode)
            for key, pair in data["coeffs"].items()
        }
        return cls(mode, coeffs)


def basis_vector(mu: int, mode: str = EXACT) -> Multivector:
    """The grade-1 basis vector gamma_mu with unit coefficient."""
    if not isinstance(mu, int) or not 0 <= mu <= 3:
        raise ValueError(f"basis vector index {mu!r} out of range 0..3")
    return Multivector.blade(1 << mu, 1, mode)


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    return a * b


def combine(terms: Iterable[tuple], mode: str | None = None) -> Multivector:
    """Linear combination ``sum(scalar * multivector)`` in canonical form."""
    terms = list(terms)
    if not terms and mode is None:
        mode = EXACT
    total = None
    for coeff, mv in terms:
        part = mv.scale(coeff)
        total = part if total is None else total + part
    if total is None:
        return Multivector.zero(check_mode(mode))
    if mode is not None:
        same_mode(total.mode, check_mode(mode))
    return total


#: Even-subalgebra basis order: scalar, the six bivectors with ascending
#: factor indices, then the 4-volume element.
EVEN_BASIS_BLADES = (0b0000, 0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100, 0b1111)


def even_basis(mode: str = EXACT) -> list[Multivector]:
    """The 8 even blades {1, gamma_mu gamma_nu (mu < nu), gamma_0123}."""
    return [Multivector.blade(bits, 1, mode) for bits in EVEN_BASIS_BLADES]
