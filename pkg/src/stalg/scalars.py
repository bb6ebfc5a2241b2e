"""Dual-mode complex scalars: exact complex rationals or binary64 pairs.

Every value in this package is built over :class:`ComplexScalar`.  A scalar
carries a ``mode`` tag, either ``"exact"`` (real and imaginary parts are
:class:`fractions.Fraction`, arithmetic is lossless) or ``"float"`` (parts are
binary64).  The two modes never mix: combining an exact value with a float
value raises :class:`ModeMismatchError` instead of silently coercing.

Plain ``int`` (and, in exact mode, :class:`~fractions.Fraction`) inputs are
accepted by the coercion helpers because they embed losslessly in either mode.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

EXACT = "exact"
FLOAT = "float"

#: Relative tolerance for float-mode zero reporting and comparisons.
FLOAT_EPS = 1e-12


class ModeMismatchError(TypeError):
    """Exact and float values met in a single expression."""


Real = Union[Fraction, float]


def check_mode(mode: str) -> str:
    if mode not in (EXACT, FLOAT):
        raise ValueError(f"unknown scalar mode {mode!r}")
    return mode


def same_mode(a: str, b: str) -> str:
    if a != b:
        raise ModeMismatchError(f"cannot mix {a!r} and {b!r} values")
    return a


def as_real(value, mode: str) -> Real:
    """Coerce ``value`` to a real number of the given mode.

    Exact mode accepts int, Fraction and rational strings like ``"3/5"``;
    float mode accepts int and float.  Anything lossy is rejected.
    """
    check_mode(mode)
    if mode == EXACT:
        if isinstance(value, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise ModeMismatchError(f"cannot use {type(value).__name__} in exact mode")
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        return float(Fraction(value)) if "/" in value else float(value)
    raise ModeMismatchError(f"cannot use {type(value).__name__} in float mode")


@dataclass(frozen=True)
class ComplexScalar:
    """A complex number in one of the two arithmetic modes."""

    mode: str
    re: Real
    im: Real

    @classmethod
    def exact(cls, re=0, im=0) -> "ComplexScalar":
        return cls(EXACT, as_real(re, EXACT), as_real(im, EXACT))

    @classmethod
    def floating(cls, re=0.0, im=0.0) -> "ComplexScalar":
        return cls(FLOAT, as_real(re, FLOAT), as_real(im, FLOAT))

    @classmethod
    def of(cls, value, mode: str) -> "ComplexScalar":
        """Coerce a scalar-like value (ComplexScalar, real, complex) to ``mode``."""
        if isinstance(value, ComplexScalar):
            same_mode(value.mode, check_mode(mode))
            return value
        if isinstance(value, complex):
            if mode == EXACT:
                raise ModeMismatchError("cannot use complex literals in exact mode")
            return cls(FLOAT, float(value.real), float(value.imag))
        return cls(mode, as_real(value, mode), as_real(0, mode))

    @classmethod
    def zero(cls, mode: str) -> "ComplexScalar":
        return cls.of(0, mode)

    @classmethod
    def one(cls, mode: str) -> "ComplexScalar":
        return cls.of(1, mode)

    @classmethod
    def i(cls, mode: str) -> "ComplexScalar":
        return cls(mode, as_real(0, mode), as_real(1, mode))

    # -- arithmetic -----------------------------------------------------

    def _other(self, other) -> "ComplexScalar":
        if isinstance(other, ComplexScalar):
            same_mode(self.mode, other.mode)
            return other
        if isinstance(other, (int, Fraction, float, complex)) and not isinstance(
            other, bool
        ):
            # .of() rejects lossy combinations (e.g. a float in exact mode).
            return ComplexScalar.of(other, self.mode)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return ComplexScalar(self.mode, self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return ComplexScalar(self.mode, self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return ComplexScalar(self.mode, o.re - self.re, o.im - self.im)

    def __neg__(self):
        return ComplexScalar(self.mode, -self.re, -self.im)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return ComplexScalar(
            self.mode,
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def inverse(self) -> "ComplexScalar":
        d = self.re * self.re + self.im * self.im
        if d == 0:
            raise ZeroDivisionError("complex scalar is zero")
        return ComplexScalar(self.mode, self.re / d, -self.im / d)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    # -- structure ------------------------------------------------------

    def conjugate(self) -> "ComplexScalar":
        return ComplexScalar(self.mode, self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def abs2(self) -> Real:
        """Squared magnitude; exact (a Fraction) in exact mode."""
        return self.re * self.re + self.im * self.im

    def magnitude(self) -> float:
        return math.sqrt(float(self.abs2()))

    def __repr__(self) -> str:
        return f"ComplexScalar({self.mode}, {self})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


def scalar_to_json(c: ComplexScalar) -> list:
    """Render a scalar as the ``[re, im]`` pair used by all JSON schemas."""
    if c.mode == EXACT:
        return [_fraction_str(c.re), _fraction_str(c.im)]
    return [c.re, c.im]


def scalar_from_json(pair, mode: str) -> ComplexScalar:
    if not isinstance(pair, (list, tuple)) or len(pair) != 2:
        raise ValueError(f"expected [re, im] pair, got {pair!r}")
    re, im = pair
    if mode == EXACT:
        if not all(isinstance(x, str) for x in (re, im)):
            raise ValueError("exact-mode numbers must be rational strings")
        return ComplexScalar(EXACT, Fraction(re), Fraction(im))
    if not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in (re, im)):
        raise ValueError("float-mode numbers must be JSON numbers")
    return ComplexScalar(FLOAT, float(re), float(im))


def _fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def real_to_json(x: Real, mode: str):
    return _fraction_str(x) if mode == EXACT else x


def real_from_json(value, mode: str) -> Real:
    if mode == EXACT:
        if not isinstance(value, str):
            raise ValueError("exact-mode numbers must be rational strings")
        return Fraction(value)
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ValueError("float-mode numbers must be JSON numbers")
    return float(value)
