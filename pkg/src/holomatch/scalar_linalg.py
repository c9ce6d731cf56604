"""Exact Gaussian-rational scalars and the exact linear algebra built on them.

Matrices are numpy object arrays holding :class:`Scalar` entries, so ``@``,
``np.kron`` and ``np.tensordot`` work unchanged while every operation stays
exact.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from numbers import Rational

import numpy as np

from .errors import NotSkewSymmetric, ParseError, ShapeMismatch, SingularMatrix

__all__ = [
    "Scalar", "parse_scalar", "format_scalar", "as_scalar", "matrix", "zeros", "identity",
    "rank", "determinant", "inverse", "pfaffian", "kronecker_power", "solve", "nullspace",
    "is_zero_matrix", "matrices_equal", "to_plain",
]


class Scalar:
    """A Gaussian rational ``re + im*i`` with Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, Scalar):
            if im:
                raise TypeError("cannot combine a Scalar real part with an imaginary part")
            self.re, self.im = re.re, re.im
            return
        self.re = _fraction(re)
        self.im = _fraction(im)

    @classmethod
    def _raw(cls, re, im):
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return Scalar._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return Scalar._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        if not self.im and not other.im:
            return Scalar._raw(self.re * other.re, _ZERO)
        return Scalar._raw(self.re * other.re - self.im * other.im,
                           self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        if not other:
            raise ZeroDivisionError("division by zero Scalar")
        if not other.im:
            return Scalar._raw(self.re / other.re, self.im / other.re)
        norm = other.re * other.re + other.im * other.im
        return Scalar._raw((self.re * other.re + self.im * other.im) / norm,
                           (self.im * other.re - self.re * other.im) / norm)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __neg__(self):
        return Scalar._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return ONE / self ** (-exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self):
        return Scalar._raw(self.re, -self.im)

    # comparison -----------------------------------------------------------
    def __eq__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is NotImplemented:
                return NotImplemented
        return self.re == other.re and self.im == other.im

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self):
        return not self.im

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


_ZERO = Fraction(0)
ZERO = Scalar._raw(_ZERO, _ZERO)
ONE = Scalar._raw(Fraction(1), _ZERO)
I = Scalar._raw(_ZERO, Fraction(1))


def _fraction(value):
    if type(value) is Fraction:
        return value
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"inexact or unsupported value for a Scalar part: {value!r}")


def _coerce(value):
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Rational)):
        return Scalar._raw(Fraction(value), _ZERO)
    if isinstance(value, complex):
        raise TypeError("floating complex values are not exact; use Scalar(re, im)")
    return NotImplemented


def as_scalar(value) -> Scalar:
    """Convert ints, Fractions, Scalars and scalar strings to a Scalar."""
    if isinstance(value, Scalar):
        return value
    if isinstance(value, str):
        return parse_scalar(value)
    coerced = _coerce(value)
    if coerced is NotImplemented:
        raise TypeError(f"cannot convert {value!r} to an exact Scalar")
    return coerced


_RATIONAL = r"[+-]?\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^(?P<re>{_RATIONAL})(?:(?P<sign>[+-])(?P<im>\d+(?:/\d+)?)\*i)?$|^(?P<pure>{_RATIONAL})\*i$"
)


def parse_scalar(text: str) -> Scalar:
    """Parse ``a``, ``a/b``, ``a/b+c/d*i`` or ``a/b-c/d*i``."""
    match = _SCALAR_RE.match(text.strip())
    if not match:
        raise ParseError(f"not a scalar: {text!r}")
    try:
        if match.group("pure") is not None:
            return Scalar(0, Fraction(match.group("pure")))
        real = Fraction(match.group("re"))
        imag = Fraction(match.group("im")) if match.group("im") else _ZERO
    except ZeroDivisionError as exc:
        raise ParseError(f"zero denominator in {text!r}") from exc
    if match.group("sign") == "-":
        imag = -imag
    return Scalar(real, imag)


def _format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_scalar(value) -> str:
    """Canonical text form; integers use the shorthand."""
    value = as_scalar(value)
    text = _format_fraction(value.re)
    if value.im:
        sign = "-" if value.im < 0 else "+"
        text += f"{sign}{_format_fraction(abs(value.im))}*i"
    return text


def to_plain(values):
    """Return the cheapest exact Python numbers equal to ``values``.

    Real entries become Fractions (or ints when every denominator is 1);
    anything with an imaginary part stays a Scalar.  Hot loops such as the
    identity checker run much faster on plain numbers.
    """
    values = [as_scalar(v) for v in values]
    if any(v.im for v in values):
        return values
    reals = [v.re for v in values]
    if all(r.denominator == 1 for r in reals):
        return [r.numerator for r in reals]
    return reals


# matrices ----------------------------------------------------------------

def matrix(rows) -> np.ndarray:
    """Build an object array of Scalars from nested sequences or an array."""
    arr = np.array(rows, dtype=object)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1) if arr.size else arr.reshape(0, 0)
    out = np.empty(arr.shape, dtype=object)
    for index, value in np.ndenumerate(arr):
        out[index] = as_scalar(value)
    return out


def scalar_array(values, shape=None) -> np.ndarray:
    flat = [as_scalar(v) for v in np.asarray(values, dtype=object).ravel()]
    out = np.empty(len(flat), dtype=object)
    out[:] = flat
    return out.reshape(shape if shape is not None else np.shape(values))


def zeros(rows: int, cols: int) -> np.ndarray:
    out = np.empty((rows, cols), dtype=object)
    out.fill(ZERO)
    return out


def identity(size: int) -> np.ndarray:
    out = zeros(size, size)
    for i in range(size):
        out[i, i] = ONE
    return out


def is_zero_matrix(m) -> bool:
    return not any(bool(x) for x in np.asarray(m).ravel())


def matrices_equal(a, b) -> bool:
    a, b = np.asarray(a), np.asarray(b)
    return a.shape == b.shape and all(x == y for x, y in zip(a.ravel(), b.ravel()))


def _rows(m):
    m = np.asarray(m, dtype=object)
    if m.ndim != 2:
        raise ShapeMismatch(f"expected a matrix, got shape {m.shape}")
    return [[as_scalar(x) for x in row] for row in m]


def _bareiss(rows):
    """Fraction-free elimination in place; returns (rank, swap sign, pivot cols)."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    previous = ONE
    sign = 1
    pivot_row = 0
    pivots = []
    for col in range(n_cols):
        if pivot_row == n_rows:
            break
        found = next((r for r in range(pivot_row, n_rows) if rows[r][col]), None)
        if found is None:
            continue
        if found != pivot_row:
            rows[pivot_row], rows[found] = rows[found], rows[pivot_row]
            sign = -sign
        pivot = rows[pivot_row][col]
        for r in range(pivot_row + 1, n_rows):
            lead = rows[r][col]
            row = rows[r]
            top = rows[pivot_row]
            for c in range(col + 1, n_cols):
                row[c] = (pivot * row[c] - lead * top[c]) / previous
            row[col] = ZERO
        previous = pivot
        pivots.append(col)
        pivot_row += 1
    return pivot_row, sign, pivots


def rank(m) -> int:
    rows = _rows(m)
    if not rows or not rows[0]:
        return 0
    return _bareiss(rows)[0]


def determinant(m) -> Scalar:
    rows = _rows(m)
    size = len(rows)
    if any(len(r) != size for r in rows):
        raise ShapeMismatch("determinant needs a square matrix")
    if size == 0:
        return ONE
    found, sign, pivots = _bareiss(rows)
    if found < size or pivots != list(range(size)):
        return ZERO
    det = rows[-1][-1]
    return det if sign > 0 else -det


def inverse(m) -> np.ndarray:
    """Gauss-Jordan inverse; raises SingularMatrix when the rank is short."""
    rows = _rows(m)
    size = len(rows)
    if any(len(r) != size for r in rows):
        raise ShapeMismatch("inverse needs a square matrix")
    aug = [row + [ONE if i == j else ZERO for j in range(size)] for i, row in enumerate(rows)]
    for col in range(size):
        found = next((r for r in range(col, size) if aug[r][col]), None)
        if found is None:
            raise SingularMatrix(f"matrix of size {size} is singular")
        aug[col], aug[found] = aug[found], aug[col]
        pivot = aug[col][col]
        aug[col] = [x / pivot for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return matrix([row[size:] for row in aug])


def pfaffian(m) -> Scalar:
    """Pfaffian by skew-symmetric elimination with sign-tracked pivot swaps."""
    rows = _rows(m)
    size = len(rows)
    if any(len(r) != size for r in rows):
        raise ShapeMismatch("pfaffian needs a square matrix")
    for i in range(size):
        if rows[i][i]:
            raise NotSkewSymmetric(f"nonzero diagonal entry at {i}")
        for j in range(i + 1, size):
            if rows[i][j] != -rows[j][i]:
                raise NotSkewSymmetric(f"entries ({i},{j}) and ({j},{i}) are not negatives")
    if size % 2:
        return ZERO
    result = ONE
    for k in range(0, size - 1, 2):
        found = next((j for j in range(k + 1, size) if rows[k][j]), None)
        if found is None:
            return ZERO
        if found != k + 1:
            # swap index k+1 with index found in rows and columns
            rows[k + 1], rows[found] = rows[found], rows[k + 1]
            for row in rows:
                row[k + 1], row[found] = row[found], row[k + 1]
            result = -result
        pivot = rows[k][k + 1]
        result = result * pivot
        for i in range(k + 2, size):
            factor = rows[k][i] / pivot
            if not factor:
                continue
            # row_i -= factor * row_{k+1}, then the same for column i
            rows[i] = [x - factor * y for x, y in zip(rows[i], rows[k + 1])]
            for row in rows:
                row[i] = row[i] - factor * row[k + 1]
    return result


def kronecker_power(m, n: int) -> np.ndarray:
    """n-fold Kronecker product of ``m``; the zeroth power is the 1x1 identity."""
    if n < 0:
        raise ValueError("negative Kronecker power")
    m = np.asarray(m, dtype=object)
    if n == 0:
        return identity(1)
    return reduce(np.kron, [m] * n)


def kron_all(factors) -> np.ndarray:
    factors = list(factors)
    if not factors:
        return identity(1)
    return reduce(np.kron, [np.asarray(f, dtype=object) for f in factors])


def rref(m):
    """Reduced row echelon form over the Gaussian rationals: (rows, pivot columns)."""
    rows = _rows(m)
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for col in range(n_cols):
        found = next((i for i in range(r, n_rows) if rows[i][col]), None)
        if found is None:
            continue
        rows[r], rows[found] = rows[found], rows[r]
        pivot = rows[r][col]
        rows[r] = [x / pivot for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == n_rows:
            break
    return rows, pivots


def solve(a, b):
    """One exact solution x of a @ x = b (free variables set to 0), or None."""
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object).reshape(-1, 1)
    n_cols = a.shape[1]
    rows, pivots = rref(np.hstack([a, b]))
    if n_cols in pivots:
        return None
    x = [ZERO] * n_cols
    for r, col in enumerate(pivots):
        x[col] = rows[r][n_cols]
    return scalar_array(x, (n_cols,))


def nullspace(a):
    """A basis of {x : a @ x = 0} as a list of vectors."""
    a = np.asarray(a, dtype=object)
    n_cols = a.shape[1]
    rows, pivots = rref(a)
    basis = []
    for free in (c for c in range(n_cols) if c not in pivots):
        x = [ZERO] * n_cols
        x[free] = ONE
        for r, col in enumerate(pivots):
            x[col] = -rows[r][free]
        basis.append(scalar_array(x, (n_cols,)))
    return basis
