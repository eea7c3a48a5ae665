"""Rational topological bordism ``Omega^TOP_* (x) Q``.

A class is stored as its vector of Pontrjagin numbers.  Products are
computed on L-numbers, where the multiplicativity of the L-genus makes
``L_I(M x N)`` a convolution of the factors' L-numbers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Mapping, Optional

from .charclasses import Basis, CharNumbers, convert_char_basis
from .exact import DEFAULT_MAX_DIM, enumerate_partitions, make_partition


@dataclass(frozen=True)
class TopClass:
    """Element of ``Omega^TOP_m (x) Q``; ``numbers`` are kept in the P basis."""

    dimension: int
    numbers: CharNumbers = None
    label: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        numbers = self.numbers
        if numbers is None:
            numbers = CharNumbers(self.dimension)
        if numbers.dimension != self.dimension:
            raise ValueError("characteristic numbers have the wrong dimension")
        object.__setattr__(self, "numbers", convert_char_basis(numbers, Basis.P))

    @classmethod
    def from_numbers(cls, dimension: int, values: Mapping, basis=Basis.P, label=None):
        return cls(dimension, CharNumbers(dimension, values, basis), label)

    @classmethod
    def zero(cls, dimension: int):
        return cls(dimension)

    @classmethod
    def point(cls):
        return cp_generator(0)

    def l_numbers(self) -> CharNumbers:
        return convert_char_basis(self.numbers, Basis.L)

    def is_zero(self) -> bool:
        return not self.numbers.values

    def __add__(self, other: "TopClass") -> "TopClass":
        if other.dimension != self.dimension:
            raise ValueError(
                f"cannot add classes of dimensions {self.dimension} and {other.dimension}"
            )
        return TopClass(self.dimension, self.numbers + other.numbers)

    def scaled(self, c) -> "TopClass":
        return TopClass(self.dimension, self.numbers.scaled(c))

    def __neg__(self):
        return self.scaled(-1)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TopClass):
            return top_product(self, other)
        return self.scaled(other)

    def __rmul__(self, other):
        return self.scaled(other)

    def to_json(self):
        return {
            "dimension": self.dimension,
            "basis": Basis.P.value,
            "numbers": self.numbers.to_json()["numbers"],
            "label": self.label,
        }

    def __str__(self):
        name = f"{self.label} " if self.label else ""
        return f"{name}[dim {self.dimension}] {self.numbers}"


def cp_generator(k: int, max_dim: int = DEFAULT_MAX_DIM) -> TopClass:
    """Complex projective space ``CP^k`` for even ``k``.

    The total Pontrjagin class is ``(1 + x^2)^(k+1)`` with ``<x^k, [CP^k]> = 1``,
    so ``<p_I, [CP^k]> = prod_r C(k+1, i_r)``.
    """
    if k < 0 or k % 2:
        raise ValueError(f"CP^{k}: only even non-negative k is supported")
    dim = 2 * k
    if dim > max_dim:
        raise ValueError(f"CP^{k} has dimension {dim} > max dimension {max_dim}")
    values = {}
    for part in enumerate_partitions(k // 2):
        v = 1
        for x in part:
            v *= comb(k + 1, x)
        values[part] = Fraction(v)
    return TopClass(dim, CharNumbers(dim, values), label=f"CP{k}")


def convolve_numbers(a: CharNumbers, b: CharNumbers) -> CharNumbers:
    """Characteristic numbers of a product from those of the factors.

    Valid in either basis, because both the total Pontrjagin class and the
    L-genus are multiplicative: ``X_I(M x N) = sum_{J+K=I} X_J(M) X_K(N)`` over
    componentwise splittings, with ``X_J(M) = 0`` unless ``4|J| = dim M``.
    """
    if a.basis != b.basis:
        b = convert_char_basis(b, a.basis)
    dim = a.dimension + b.dimension
    if a.dimension % 4 or b.dimension % 4:
        return CharNumbers(dim, {}, a.basis)
    wa = a.dimension // 4
    out = {}
    for target in enumerate_partitions(dim // 4):
        total = Fraction(0)
        for split in itertools.product(*(range(x + 1) for x in target)):
            if sum(split) != wa:
                continue
            j = make_partition(split)
            k = make_partition(x - s for x, s in zip(target, split))
            total += a[j] * b[k]
        out[target] = total
    return CharNumbers(dim, out, a.basis)


def top_product(a: TopClass, b: TopClass, max_dim: int = DEFAULT_MAX_DIM) -> TopClass:
    if a.dimension + b.dimension > max_dim:
        raise ValueError(
            f"product dimension {a.dimension + b.dimension} exceeds max dimension {max_dim}"
        )
    product = convolve_numbers(a.l_numbers(), b.l_numbers())
    label = None
    if a.label and b.label:
        label = f"{a.label}x{b.label}"
    return TopClass(product.dimension, product, label)


def signature(a: TopClass) -> Fraction:
    """``<L_k, [M]>`` for ``dim M = 4k``; zero in other dimensions."""
    if a.dimension % 4:
        return Fraction(0)
    return a.l_numbers()[(a.dimension // 4,)]


def omega_coordinates(a: TopClass) -> list[Fraction]:
    """Coordinates of ``Omega^TOP_4`` and ``Omega^TOP_8 (x) Q``.

    Dimension 8 uses the basis dual to ``CP2 x CP2`` and ``CP4``.
    """
    n = a.numbers
    if a.dimension == 4:
        return [n[(1,)] / 3]
    if a.dimension == 8:
        p2, p11 = n[(2,)], n[(1, 1)]
        return [(5 * p2 - 2 * p11) / 9, (-2 * p2 + p11) / 5]
    raise ValueError(f"omega coordinates are only defined in dimensions 4 and 8, not {a.dimension}")
