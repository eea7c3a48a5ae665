"""Exact arithmetic substrate: partitions, truncated power series, Bernoulli
numbers and a small exact linear solver.

Rationals are :class:`fractions.Fraction` throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Sequence

Partition = tuple[int, ...]

DEFAULT_MAX_DIM = 48


class NotInvertibleError(ArithmeticError):
    """Raised when a power series with zero constant term is inverted."""


def make_partition(parts: Iterable[int]) -> Partition:
    """Normalize ``parts`` to a weakly decreasing tuple of positive integers.

    Zero parts are dropped (the convention ``L_0 = p_0 = 1``); negative parts
    are an error.
    """
    parts = [int(x) for x in parts]
    if any(x < 0 for x in parts):
        raise ValueError(f"partition parts must be non-negative: {parts}")
    return tuple(sorted((x for x in parts if x > 0), reverse=True))


def weight(p: Partition) -> int:
    return sum(p)


def format_partition(p: Partition) -> str:
    return ".".join(str(x) for x in p) if p else "()"


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order.

    >>> enumerate_partitions(4)
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_partitions(n, n))


def partition_sort_key(p: Partition):
    """Sort key giving reverse-lexicographic order when used ascending."""
    return tuple(-x for x in p) + (0,)


@dataclass(frozen=True)
class PowerSeries:
    """Power series in one variable truncated at ``O(z**order)``.

    ``coefficients[d]`` is the coefficient of ``z**d``; every stored degree is
    below ``order``.
    """

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("truncation order must be positive")
        object.__setattr__(
            self, "coefficients", tuple(Fraction(c) for c in self.coefficients)
        )

    @classmethod
    def from_coefficients(cls, coefficients: Sequence, order: int | None = None):
        coefficients = list(coefficients)
        if order is None:
            order = len(coefficients)
        if order < 1:
            raise ValueError("truncation order must be positive")
        coefficients = coefficients[:order] + [0] * (order - len(coefficients))
        return cls(tuple(coefficients))

    @classmethod
    def constant(cls, value, order: int):
        return cls.from_coefficients([value], order)

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, degree: int) -> Fraction:
        if 0 <= degree < self.order:
            return self.coefficients[degree]
        raise IndexError(f"degree {degree} outside truncation order {self.order}")

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError("cannot extend precision of a truncated series")
        return PowerSeries(self.coefficients[:order])

    def _coerce(self, other):
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries.constant(other, self.order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return PowerSeries(tuple(self[d] + other[d] for d in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            c = Fraction(other)
            return PowerSeries(tuple(c * x for x in self.coefficients))
        n = min(self.order, other.order)
        return PowerSeries(
            tuple(
                sum((self[k] * other[d - k] for k in range(d + 1)), Fraction(0))
                for d in range(n)
            )
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return self * series_reciprocal(other)
        return self * (1 / Fraction(other))

    def __str__(self):
        terms = []
        for d, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mono = "" if d == 0 else ("z" if d == 1 else f"z^{d}")
            terms.append(f"{c}" if not mono else (mono if c == 1 else f"{c}*{mono}"))
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(z^{self.order})"


def series_reciprocal(s: PowerSeries) -> PowerSeries:
    """Multiplicative inverse of ``s`` to the same truncation order."""
    a0 = s[0]
    if a0 == 0:
        raise NotInvertibleError("power series with zero constant term is not invertible")
    inv0 = 1 / a0
    out = [inv0]
    for n in range(1, s.order):
        acc = sum((s[k] * out[n - k] for k in range(1, n + 1)), Fraction(0))
        out.append(-inv0 * acc)
    return PowerSeries(tuple(out))


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with the B_1 = -1/2 convention."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return Fraction(1)
    if n > 1 and n % 2 == 1:
        return Fraction(0)
    # sum_{k=0}^{n} C(n+1, k) B_k = 0
    acc = sum((comb(n + 1, k) * bernoulli(k) for k in range(n)), Fraction(0))
    return -acc / (n + 1)


@lru_cache(maxsize=None)
def l_characteristic_series(order: int) -> PowerSeries:
    """Coefficients of sqrt(z)/tanh(sqrt(z)) through ``z**order``.

    Uses x/tanh(x) = sum 2^(2n) B_(2n) x^(2n) / (2n)!, so the result has
    truncation order ``order + 1``.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    return PowerSeries(
        tuple(
            Fraction(2 ** (2 * n)) * bernoulli(2 * n) / factorial(2 * n)
            for n in range(order + 1)
        )
    )


def solve_linear(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve ``matrix @ x = rhs`` exactly by Gauss-Jordan elimination.

    Raises ``ValueError`` on a singular system.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise ValueError("square system required")
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n] for row in a]


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def rational_json(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)
