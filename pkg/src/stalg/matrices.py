"""Faithful 4x4 matrix representation of Cl(1,3) over C.

Used as an independent correctness oracle for the blade arithmetic and as
the bridge to conventional column-spinor language.  The representation is
the standard Dirac one, chosen because gamma_0 (and with it the projectors
built from it) is diagonal:

    gamma_0 = diag(1, 1, -1, -1)
    gamma_k = [[0, sigma_k], [-sigma_k, 0]]

Matrix arithmetic here is written out longhand on ComplexScalar entries, so
it shares no code path with the blade product tables it is checking.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from .multivector import BLADE_COUNT, BLADE_SQUARE, Multivector
from .scalars import (
    EXACT,
    ComplexScalar,
    check_mode,
    same_mode,
    scalar_from_json,
    scalar_to_json,
)

Entries = Tuple[Tuple[ComplexScalar, ...], ...]


class Matrix4C:
    """Immutable 4x4 complex matrix with the dual-mode scalar contract."""

    __slots__ = ("mode", "entries")

    def __init__(self, mode: str, entries):
        check_mode(mode)
        rows = tuple(tuple(row) for row in entries)
        if len(rows) != 4 or any(len(row) != 4 for row in rows):
            raise ValueError("Matrix4C needs 4x4 entries")
        for row in rows:
            for c in row:
                same_mode(mode, c.mode)
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix4C is immutable")

    @classmethod
    def from_values(cls, values, mode: str = EXACT) -> "Matrix4C":
        """Build from 4x4 scalar-like values (ints, Fractions, complex in float mode)."""
        return cls(
            mode, [[ComplexScalar.of(v, mode) for v in row] for row in values]
        )

    @classmethod
    def zero(cls, mode: str = EXACT) -> "Matrix4C":
        return cls.from_values([[0] * 4 for _ in range(4)], mode)

    @classmethod
    def identity(cls, mode: str = EXACT) -> "Matrix4C":
        return cls.from_values([[1 if i == j else 0 for j in range(4)] for i in range(4)], mode)

    def __add__(self, other):
        if not isinstance(other, Matrix4C):
            return NotImplemented
        same_mode(self.mode, other.mode)
        return Matrix4C(
            self.mode,
            [
                [self.entries[i][j] + other.entries[i][j] for j in range(4)]
                for i in range(4)
            ],
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix4C):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Matrix4C(self.mode, [[-c for c in row] for row in self.entries])

    def __mul__(self, other):
        if isinstance(other, Matrix4C):
            same_mode(self.mode, other.mode)
            zero = ComplexScalar.zero(self.mode)
            out = []
            for i in range(4):
                row = []
                for j in range(4):
                    acc = zero
                    for k in range(4):
                        acc = acc + self.entries[i][k] * other.entries[k][j]
                    row.append(acc)
                out.append(row)
            return Matrix4C(self.mode, out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, value) -> "Matrix4C":
        c = ComplexScalar.of(value, self.mode)
        return Matrix4C(self.mode, [[x * c for x in row] for row in self.entries])

    def conjugate_transpose(self) -> "Matrix4C":
        return Matrix4C(
            self.mode,
            [[self.entries[j][i].conjugate() for j in range(4)] for i in range(4)],
        )

    def trace(self) -> ComplexScalar:
        acc = ComplexScalar.zero(self.mode)
        for i in range(4):
            acc = acc + self.entries[i][i]
        return acc

    def column(self, alpha: int) -> "ColumnSpinor":
        if not isinstance(alpha, int) or not 0 <= alpha <= 3:
            raise ValueError(f"column index {alpha!r} out of range 0..3")
        return ColumnSpinor(self.mode, tuple(self.entries[i][alpha] for i in range(4)))

    def __eq__(self, other):
        if not isinstance(other, Matrix4C):
            return NotImplemented
        return self.mode == other.mode and self.entries == other.entries

    __hash__ = None  # type: ignore[assignment]

    def isclose(self, other: "Matrix4C", rel: float = 1e-12) -> bool:
        same_mode(self.mode, other.mode)
        if self.mode == EXACT:
            return self == other
        top = max(
            (c.magnitude() for m in (self, other) for row in m.entries for c in row),
            default=0.0,
        )
        return all(
            (self.entries[i][j] - other.entries[i][j]).magnitude() <= rel * (1.0 + top)
            for i in range(4)
            for j in range(4)
        )

    def max_discrepancy(self, other: "Matrix4C") -> float:
        same_mode(self.mode, other.mode)
        return max(
            (self.entries[i][j] - other.entries[i][j]).magnitude()
            for i in range(4)
            for j in range(4)
        )

    def __repr__(self) -> str:
        rows = "; ".join(
            "[" + ", ".join(str(c) for c in row) + "]" for row in self.entries
        )
        return f"Matrix4C({self.mode}, {rows})"

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "rows": [[scalar_to_json(c) for c in row] for row in self.entries],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Matrix4C":
        if not isinstance(data, dict) or "mode" not in data or "rows" not in data:
            raise ValueError("matrix JSON needs 'mode' and 'rows'")
        mode = check_mode(data["mode"])
        return cls(
            mode,
            [[scalar_from_json(pair, mode) for pair in row] for row in data["rows"]],
        )


class ColumnSpinor:
    """A four-component complex column, one column of an algebraic spinor."""

    __slots__ = ("mode", "entries")

    def __init__(self, mode: str, entries):
        check_mode(mode)
        items = tuple(entries)
        if len(items) != 4:
            raise ValueError("ColumnSpinor needs 4 entries")
        for c in items:
            same_mode(mode, c.mode)
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "entries", items)

    def __setattr__(self, name, value):
        raise AttributeError("ColumnSpinor is immutable")

    def scale(self, value) -> "ColumnSpinor":
        c = ComplexScalar.of(value, self.mode)
        return ColumnSpinor(self.mode, tuple(x * c for x in self.entries))

    def __add__(self, other):
        if not isinstance(other, ColumnSpinor):
            return NotImplemented
        same_mode(self.mode, other.mode)
        return ColumnSpinor(
            self.mode, tuple(a + b for a, b in zip(self.entries, other.entries))
        )

    def __sub__(self, other):
        if not isinstance(other, ColumnSpinor):
            return NotImplemented
        return self + other.scale(-1)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.entries)

    def __eq__(self, other):
        if not isinstance(other, ColumnSpinor):
            return NotImplemented
        return self.mode == other.mode and self.entries == other.entries

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return "ColumnSpinor(" + ", ".join(str(c) for c in self.entries) + ")"


def apply_matrix(mat: Matrix4C, psi: ColumnSpinor) -> ColumnSpinor:
    same_mode(mat.mode, psi.mode)
    out = []
    for i in range(4):
        acc = ComplexScalar.zero(mat.mode)
        for j in range(4):
            acc = acc + mat.entries[i][j] * psi.entries[j]
        out.append(acc)
    return ColumnSpinor(mat.mode, tuple(out))


# Dirac representation: entries as (re, im) integer pairs.
_GAMMA_VALUES = (
    # gamma_0 = diag(1, 1, -1, -1)
    (
        ((1, 0), (0, 0), (0, 0), (0, 0)),
        ((0, 0), (1, 0), (0, 0), (0, 0)),
        ((0, 0), (0, 0), (-1, 0), (0, 0)),
        ((0, 0), (0, 0), (0, 0), (-1, 0)),
    ),
    # gamma_1: sigma_1 upper right, -sigma_1 lower left
    (
        ((0, 0), (0, 0), (0, 0), (1, 0)),
        ((0, 0), (0, 0), (1, 0), (0, 0)),
        ((0, 0), (-1, 0), (0, 0), (0, 0)),
        ((-1, 0), (0, 0), (0, 0), (0, 0)),
    ),
    # gamma_2: sigma_2 upper right, -sigma_2 lower left
    (
        ((0, 0), (0, 0), (0, 0), (0, -1)),
        ((0, 0), (0, 0), (0, 1), (0, 0)),
        ((0, 0), (0, 1), (0, 0), (0, 0)),
        ((0, -1), (0, 0), (0, 0), (0, 0)),
    ),
    # gamma_3: sigma_3 upper right, -sigma_3 lower left
    (
        ((0, 0), (0, 0), (1, 0), (0, 0)),
        ((0, 0), (0, 0), (0, 0), (-1, 0)),
        ((-1, 0), (0, 0), (0, 0), (0, 0)),
        ((0, 0), (1, 0), (0, 0), (0, 0)),
    ),
)


@lru_cache(maxsize=None)
def gamma_matrix(mu: int, mode: str = EXACT) -> Matrix4C:
    """The Dirac-representation matrix of gamma_mu."""
    if not isinstance(mu, int) or not 0 <= mu <= 3:
        raise ValueError(f"gamma matrix index {mu!r} out of range 0..3")
    check_mode(mode)
    return Matrix4C(
        mode,
        [
            [ComplexScalar(mode, *(map(_caster(mode), pair))) for pair in row]
            for row in _GAMMA_VALUES[mu]
        ],
    )


def _caster(mode: str):
    from fractions import Fraction

    return Fraction if mode == EXACT else float


@lru_cache(maxsize=None)
def blade_matrix(bits: int, mode: str = EXACT) -> Matrix4C:
    """Matrix of a basis blade: the ordered product of its gamma factors."""
    if not 0 <= bits < BLADE_COUNT:
        raise ValueError(f"blade index {bits} out of range")
    mat = Matrix4C.identity(mode)
    for mu in range(4):
        if bits >> mu & 1:
            mat = mat * gamma_matrix(mu, mode)
    return mat


@lru_cache(maxsize=None)
def _blade_entries(bits: int, mode: str):
    """Nonzero entries (i, j, value) of a blade matrix; each has exactly 4."""
    mat = blade_matrix(bits, mode)
    return tuple(
        (i, j, mat.entries[i][j])
        for i in range(4)
        for j in range(4)
        if not mat.entries[i][j].is_zero()
    )


def represent(m: Multivector) -> Matrix4C:
    """Algebra homomorphism into 4x4 complex matrices."""
    zero = ComplexScalar.zero(m.mode)
    acc = [[zero] * 4 for _ in range(4)]
    for bits, c in m.items():
        for i, j, v in _blade_entries(bits, m.mode):
            acc[i][j] = acc[i][j] + v * c
    return Matrix4C(m.mode, acc)


def unrepresent(mat: Matrix4C) -> Multivector:
    """Invert the representation via trace projections.

    The coefficient of blade B is trace(B_inv_matrix * mat) / 4 where
    B_inv = B / B**2 = (+/-)B, since every blade squares to a unit scalar.
    """
    quarter = ComplexScalar.of(Fraction(1, 4) if mat.mode == EXACT else 0.25, mat.mode)
    coeffs = {}
    for bits in range(BLADE_COUNT):
        acc = ComplexScalar.zero(mat.mode)
        for i, j, v in _blade_entries(bits, mat.mode):
            acc = acc + v * mat.entries[j][i]
        coeffs[bits] = acc * quarter * BLADE_SQUARE[bits]
    return Multivector(mat.mode, coeffs)


def column_extract(mat: Matrix4C, alpha: int) -> ColumnSpinor:
    """Column ``alpha``; the nonzero column of mat * P(alpha)."""
    return mat.column(alpha)


def alpha_projector_matrix(alpha: int, mode: str = EXACT) -> Matrix4C:
    """The representation-dependent column projector (delta entries at alpha)."""
    if not isinstance(alpha, int) or not 0 <= alpha <= 3:
        raise ValueError(f"projector index {alpha!r} out of range 0..3")
    return Matrix4C.from_values(
        [[1 if (i == alpha and j == alpha) else 0 for j in range(4)] for i in range(4)],
        mode,
    )
