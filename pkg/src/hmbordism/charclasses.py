"""Multiplicative sequences, characteristic numbers and the truncated
bigraded algebra of a product ``X x Y``.

A characteristic series ``Q(z) = 1 + q1 z + q2 z^2 + ...`` determines the
sequence ``K_k(p1, ..., pk)`` by writing ``prod_i Q(t_i)`` in the elementary
symmetric functions ``p_j = e_j(t)``.  For the L-series this is Hirzebruch's
L-genus.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping

from .exact import (
    Partition,
    PowerSeries,
    enumerate_partitions,
    format_partition,
    format_rational,
    l_characteristic_series,
    make_partition,
    partition_sort_key,
    rational_json,
    solve_linear,
    weight,
)


class Basis(str, enum.Enum):
    P = "P"
    L = "L"


def _clean(terms: Mapping) -> dict:
    return {k: Fraction(v) for k, v in terms.items() if v != 0}


@dataclass(frozen=True)
class PPolynomial:
    """Homogeneous polynomial in graded generators ``symbol_1, symbol_2, ...``.

    Keys are partitions (the monomial ``p_{i1} p_{i2} ...``); ``degree`` is the
    common weight, so it is kept even for the zero polynomial.
    """

    degree: int
    terms: Mapping[Partition, Fraction] = field(default_factory=dict)
    symbol: str = "p"

    def __post_init__(self):
        terms = _clean({make_partition(k): v for k, v in self.terms.items()})
        for k in terms:
            if weight(k) != self.degree:
                raise ValueError(f"monomial {k} has weight != {self.degree}")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def generator(cls, k: int, symbol: str = "p"):
        return cls(k, {(k,): Fraction(1)}, symbol)

    @classmethod
    def one(cls, symbol: str = "p"):
        return cls(0, {(): Fraction(1)}, symbol)

    def __add__(self, other: "PPolynomial") -> "PPolynomial":
        if other.degree != self.degree:
            raise ValueError("cannot add polynomials of different degree")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return PPolynomial(self.degree, out, self.symbol)

    def __neg__(self):
        return self.scaled(-1)

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c) -> "PPolynomial":
        c = Fraction(c)
        return PPolynomial(self.degree, {k: c * v for k, v in self.terms.items()}, self.symbol)

    def __mul__(self, other):
        if not isinstance(other, PPolynomial):
            return self.scaled(other)
        out: dict[Partition, Fraction] = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                key = make_partition(a + b)
                out[key] = out.get(key, 0) + x * y
        return PPolynomial(self.degree + other.degree, out, self.symbol)

    __rmul__ = __mul__

    def coefficient(self, monomial) -> Fraction:
        return self.terms.get(make_partition(monomial), Fraction(0))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: partition_sort_key(kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for mono, c in self.sorted_terms():
            body = f"{self.symbol}[{format_partition(mono)}]" if mono else ""
            if not body:
                text = format_rational(abs(c))
            elif abs(c) == 1:
                text = body
            else:
                text = f"{format_rational(abs(c))}*{body}"
            sign = "-" if c < 0 else "+"
            chunks.append((sign, text))
        first_sign, first = chunks[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in chunks[1:]:
            out += f" {sign} {text}"
        return out

    def to_json(self):
        return {
            "degree": self.degree,
            "symbol": self.symbol,
            "terms": [[list(k), rational_json(v)] for k, v in self.sorted_terms()],
        }


def substitute(poly: PPolynomial, value_of: Callable[[int], object], one):
    """Evaluate ``poly`` after replacing generator ``k`` by ``value_of(k)``.

    Works for any values supporting ``*`` with each other and with rationals.
    """
    total = None
    for mono, c in poly.terms.items():
        term = one
        for part in mono:
            term = term * value_of(part)
        term = term * c
        total = term if total is None else total + term
    if total is None:
        return one * 0
    return total


# --- multiplicative sequences ------------------------------------------------


@lru_cache(maxsize=None)
def _zero_one_matrices(rows: Partition, cols: tuple[int, ...]) -> int:
    """Number of 0-1 matrices with the given row and column sums."""
    if not rows:
        return 1 if all(c == 0 for c in cols) else 0
    first, rest = rows[0], rows[1:]
    live = [i for i, c in enumerate(cols) if c > 0]
    if len(live) < first:
        return 0
    total = 0
    for chosen in itertools.combinations(live, first):
        remaining = list(cols)
        for i in chosen:
            remaining[i] -= 1
        total += _zero_one_matrices(rest, tuple(sorted(remaining, reverse=True)))
    return total


def _check_series(series: PowerSeries, k: int):
    if series[0] != 1:
        raise ValueError("characteristic series must have constant term 1")
    if series.order <= k:
        raise ValueError(f"series truncated at order {series.order} cannot give degree {k}")


@lru_cache(maxsize=None)
def _sequence_term(series: PowerSeries, k: int) -> PPolynomial:
    parts = enumerate_partitions(k)
    # degree-k part of prod_i Q(t_i) in the monomial symmetric basis m_lambda
    target = []
    for lam in parts:
        c = Fraction(1)
        for x in lam:
            c *= series[x]
        target.append(c)
    # coefficient of m_lambda in e_mu; rows of the system are indexed by lambda
    system = [[_zero_one_matrices(mu, lam) for mu in parts] for lam in parts]
    coeffs = solve_linear(system, target)
    return PPolynomial(k, dict(zip(parts, coeffs)))


def multiplicative_sequence_polynomial(series: PowerSeries, k: int) -> PPolynomial:
    """Degree ``k`` member of the multiplicative sequence with characteristic
    series ``series``, as a polynomial in Pontrjagin classes."""
    if k < 0:
        raise ValueError("k must be non-negative")
    _check_series(series, k)
    if k == 0:
        return PPolynomial.one()
    return _sequence_term(series, k)


def l_polynomial(k: int) -> PPolynomial:
    """Hirzebruch's ``L_k(p1, ..., pk)``."""
    return multiplicative_sequence_polynomial(l_characteristic_series(max(k, 1)), k)


@lru_cache(maxsize=None)
def sequence_monomial_matrix(series: PowerSeries, n: int):
    """Rows ``K_I = K_{i1} K_{i2} ...`` expanded in p-monomials, weight ``n``.

    Returns ``(partitions, matrix)`` with ``matrix[r][c]`` the coefficient of
    ``p_{partitions[c]}`` in ``K_{partitions[r]}``.
    """
    _check_series(series, n)
    parts = enumerate_partitions(n)
    rows = []
    for lam in parts:
        poly = PPolynomial.one()
        for x in lam:
            poly = poly * multiplicative_sequence_polynomial(series, x)
        rows.append([poly.coefficient(mu) for mu in parts])
    return parts, rows


def l_monomial_matrix(n: int):
    return sequence_monomial_matrix(l_characteristic_series(max(n, 1)), n)


@lru_cache(maxsize=None)
def _inverse_term(series: PowerSeries, k: int) -> PPolynomial:
    parts, rows = sequence_monomial_matrix(series, k)
    # p_k = sum_I c_I K_I  <=>  transpose(rows) c = unit vector at (k,)
    transposed = [[rows[r][c] for r in range(len(parts))] for c in range(len(parts))]
    rhs = [1 if mu == (k,) else 0 for mu in parts]
    return PPolynomial(k, dict(zip(parts, solve_linear(transposed, rhs))), symbol="K")


def genus_inverse_polynomial(series: PowerSeries, k: int) -> PPolynomial:
    """``p_k`` written as a polynomial in the sequence terms ``K_1 ... K_k``."""
    if k < 1:
        raise ValueError("k must be positive")
    _check_series(series, k)
    return _inverse_term(series, k)


# --- characteristic numbers ---------------------------------------------------


@dataclass(frozen=True)
class CharNumbers:
    """Characteristic numbers of an ``m``-dimensional class.

    ``values`` maps partitions of ``m/4`` to rationals, read either as
    Pontrjagin numbers ``<p_I, [M]>`` (basis P) or L-numbers ``<L_I, [M]>``
    (basis L).  Zero values are not stored.
    """

    dimension: int
    values: Mapping[Partition, Fraction] = field(default_factory=dict)
    basis: Basis = Basis.P

    def __post_init__(self):
        if self.dimension < 0:
            raise ValueError("dimension must be non-negative")
        values = _clean({make_partition(k): v for k, v in self.values.items()})
        if values and self.dimension % 4:
            raise ValueError(f"dimension {self.dimension} carries no characteristic numbers")
        for k in values:
            if 4 * weight(k) != self.dimension:
                raise ValueError(f"partition {k} does not match dimension {self.dimension}")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "basis", Basis(self.basis))

    def __getitem__(self, key) -> Fraction:
        return self.values.get(make_partition(key), Fraction(0))

    def index_set(self) -> list[Partition]:
        if self.dimension % 4:
            return []
        return enumerate_partitions(self.dimension // 4)

    def vector(self) -> list[Fraction]:
        return [self[p] for p in self.index_set()]

    def sorted_items(self):
        return sorted(self.values.items(), key=lambda kv: partition_sort_key(kv[0]))

    def __add__(self, other: "CharNumbers") -> "CharNumbers":
        if (self.dimension, self.basis) != (other.dimension, other.basis):
            other = convert_char_basis(other, self.basis)
            if other.dimension != self.dimension:
                raise ValueError("dimension mismatch")
        out = dict(self.values)
        for k, v in other.values.items():
            out[k] = out.get(k, 0) + v
        return CharNumbers(self.dimension, out, self.basis)

    def scaled(self, c) -> "CharNumbers":
        c = Fraction(c)
        return CharNumbers(self.dimension, {k: c * v for k, v in self.values.items()}, self.basis)

    def to_json(self):
        return {
            "dimension": self.dimension,
            "basis": self.basis.value,
            "numbers": [[list(k), rational_json(v)] for k, v in self.sorted_items()],
        }

    def __str__(self):
        sym = "p" if self.basis is Basis.P else "L"
        if not self.values:
            return "{}"
        body = ", ".join(
            f"{sym}[{format_partition(k)}]: {format_rational(v)}" for k, v in self.sorted_items()
        )
        return "{" + body + "}"


def convert_char_basis(c: CharNumbers, target: Basis | str) -> CharNumbers:
    """Re-express characteristic numbers in the Pontrjagin or L basis."""
    target = Basis(target)
    if c.basis is target:
        return c
    if c.dimension % 4:
        return CharNumbers(c.dimension, {}, target)
    n = c.dimension // 4
    parts, rows = l_monomial_matrix(n)
    vec = c.vector()
    if target is Basis.L:
        out = [sum((a * x for a, x in zip(row, vec)), Fraction(0)) for row in rows]
    else:
        out = solve_linear(rows, vec)
    return CharNumbers(c.dimension, dict(zip(parts, out)), target)


# --- bigraded algebra ---------------------------------------------------------

BiKey = tuple[Partition, Partition]


def _bikey_sort(key: BiKey):
    return (partition_sort_key(key[0]), partition_sort_key(key[1]))


@dataclass(frozen=True)
class BigradedClass:
    """Element of ``H^{4*}(X) (x) H^{4*}(Y)`` modelled as a polynomial in
    ``p_J(X) (x) p_K(Y)``, truncated above the dimensions of ``X`` and ``Y``."""

    left_dim: int
    right_dim: int
    terms: Mapping[BiKey, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        out = {}
        for (j, k), v in self.terms.items():
            j, k = make_partition(j), make_partition(k)
            if 4 * weight(j) > self.left_dim or 4 * weight(k) > self.right_dim:
                continue
            out[(j, k)] = out.get((j, k), 0) + Fraction(v)
        object.__setattr__(self, "terms", _clean(out))

    @classmethod
    def unit(cls, left_dim: int, right_dim: int, coefficient=1):
        return cls(left_dim, right_dim, {((), ()): coefficient})

    @classmethod
    def left(cls, left_dim: int, right_dim: int, poly: PPolynomial):
        return cls(left_dim, right_dim, {(k, ()): v for k, v in poly.terms.items()})

    @classmethod
    def right(cls, left_dim: int, right_dim: int, poly: PPolynomial):
        return cls(left_dim, right_dim, {((), k): v for k, v in poly.terms.items()})

    def _check(self, other: "BigradedClass"):
        if (self.left_dim, self.right_dim) != (other.left_dim, other.right_dim):
            raise ValueError(
                f"bidimension mismatch: ({self.left_dim}, {self.right_dim}) vs "
                f"({other.left_dim}, {other.right_dim})"
            )

    def __add__(self, other):
        if not isinstance(other, BigradedClass):
            other = BigradedClass.unit(self.left_dim, self.right_dim, other)
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BigradedClass(self.left_dim, self.right_dim, out)

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BigradedClass):
            c = Fraction(other)
            return BigradedClass(
                self.left_dim, self.right_dim, {k: c * v for k, v in self.terms.items()}
            )
        return bigraded_multiply(self, other)

    __rmul__ = __mul__

    def coefficient(self, j, k) -> Fraction:
        return self.terms.get((make_partition(j), make_partition(k)), Fraction(0))

    def component(self, degree: int) -> "BigradedClass":
        """Part of total degree ``4 * degree``."""
        return BigradedClass(
            self.left_dim,
            self.right_dim,
            {k: v for k, v in self.terms.items() if weight(k[0]) + weight(k[1]) == degree},
        )

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _bikey_sort(kv[0]))

    def to_json(self):
        return {
            "left_dimension": self.left_dim,
            "right_dimension": self.right_dim,
            "terms": [[list(j), list(k), rational_json(v)] for (j, k), v in self.sorted_terms()],
        }

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for n, ((j, k), c) in enumerate(self.sorted_terms()):
            factors = []
            if j:
                factors.append(f"p[{format_partition(j)}](X)")
            if k:
                factors.append(f"p[{format_partition(k)}](Y)")
            mono = " ".join(factors)
            mag = format_rational(abs(c))
            text = mag if not mono else (mono if abs(c) == 1 else f"{mag}*{mono}")
            if n == 0:
                out = ("-" if c < 0 else "") + text
            else:
                out += (" - " if c < 0 else " + ") + text
        return out


def bigraded_multiply(a: BigradedClass, b: BigradedClass) -> BigradedClass:
    a._check(b)
    out: dict[BiKey, Fraction] = {}
    lmax, rmax = a.left_dim // 4, a.right_dim // 4
    for (j1, k1), x in a.terms.items():
        for (j2, k2), y in b.terms.items():
            if weight(j1) + weight(j2) > lmax or weight(k1) + weight(k2) > rmax:
                continue
            key = (make_partition(j1 + j2), make_partition(k1 + k2))
            out[key] = out.get(key, 0) + x * y
    return BigradedClass(a.left_dim, a.right_dim, out)


def bigraded_pair(c: BigradedClass, left: CharNumbers, right: CharNumbers) -> Fraction:
    """Evaluate ``c`` on ``[X] (x) [Y]``; only top-bidegree terms contribute."""
    if (c.left_dim, c.right_dim) != (left.dimension, right.dimension):
        raise ValueError(
            f"cannot pair a ({c.left_dim}, {c.right_dim}) class with "
            f"classes of dimensions ({left.dimension}, {right.dimension})"
        )
    left = convert_char_basis(left, Basis.P)
    right = convert_char_basis(right, Basis.P)
    total = Fraction(0)
    for (j, k), v in c.terms.items():
        if 4 * weight(j) == c.left_dim and 4 * weight(k) == c.right_dim:
            total += v * left[j] * right[k]
    return total
