"""Rational homology-manifold bordism as ``(Omega^TOP (x) Q)[L_0(Z)]``.

A homology manifold ``X`` has two coordinate descriptions:

* ``psi``: ``X -> X_TOP[i(X)]``, the topological manifold underlying the
  canonical TOP reduction, tagged by the resolution index.  Additive but not
  multiplicative.
* ``phi``: the same index, with the class rescaled so that its L-numbers are
  ``L_I(X) / (1 + 8 i)^len(I)``.  Products become the group-ring product over
  the monoid ``(Z, *)`` with ``i * j = i + j + 8ij``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .bordism import TopClass, top_product
from .charclasses import (
    Basis,
    BigradedClass,
    CharNumbers,
    PPolynomial,
    bigraded_pair,
    genus_inverse_polynomial,
    l_polynomial,
    substitute,
)
from .exact import DEFAULT_MAX_DIM, enumerate_partitions, l_characteristic_series


def star(i: int, j: int) -> int:
    """Composition of resolution indices: ``(1+8i)(1+8j) = 1 + 8(i*j)``."""
    return i + j + 8 * i * j


def unit_of(i: int) -> int:
    """The image ``1 + 8i`` of an index in the multiplicative monoid."""
    return 1 + 8 * i


class Coords(str, enum.Enum):
    PSI = "psi"
    PHI = "phi"


@dataclass(frozen=True)
class HClass:
    """Finite sum ``sum_i T_i[i]`` with ``T_i`` in ``Omega^TOP_m (x) Q``."""

    dimension: int
    coords: Coords = Coords.PSI
    terms: Mapping[int, TopClass] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coords", Coords(self.coords))
        terms = {}
        for i, t in self.terms.items():
            if t.dimension != self.dimension:
                raise ValueError(
                    f"term of dimension {t.dimension} in a {self.dimension}-dimensional class"
                )
            if not t.is_zero():
                terms[int(i)] = t
        object.__setattr__(self, "terms", dict(sorted(terms.items())))

    @classmethod
    def lift(cls, top: TopClass, index: int = 0) -> "HClass":
        """The homology manifold ``X`` with ``X_TOP = top`` and ``i(X) = index``."""
        return cls(top.dimension, Coords.PSI, {index: top})

    def to(self, coords: Coords | str) -> "HClass":
        coords = Coords(coords)
        if coords is self.coords:
            return self
        return psi_to_phi(self) if coords is Coords.PHI else phi_to_psi(self)

    def __add__(self, other: "HClass") -> "HClass":
        if other.dimension != self.dimension:
            raise ValueError("cannot add homology classes of different dimensions")
        other = other.to(self.coords)
        out = dict(self.terms)
        for i, t in other.terms.items():
            out[i] = out[i] + t if i in out else t
        return HClass(self.dimension, self.coords, out)

    def scaled(self, c) -> "HClass":
        return HClass(self.dimension, self.coords, {i: t.scaled(c) for i, t in self.terms.items()})

    def __neg__(self):
        return self.scaled(-1)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HClass):
            return h_product(self, other)
        return self.scaled(other)

    def __rmul__(self, other):
        return self.scaled(other)

    def to_json(self):
        return {
            "dimension": self.dimension,
            "coords": self.coords.value,
            "terms": [{"index": i, "class": t.to_json()} for i, t in self.terms.items()],
        }

    def __str__(self):
        if not self.terms:
            return f"0 [dim {self.dimension}, {self.coords.value}]"
        lines = [f"{self.coords.value}-coordinates, dim {self.dimension}:"]
        for i, t in self.terms.items():
            lines.append(f"  [{i}] {t.numbers}")
        return "\n".join(lines)


def _rescale(top: TopClass, factor: Fraction) -> TopClass:
    """Multiply each L-number ``L_I`` by ``factor ** len(I)``."""
    ln = top.l_numbers()
    values = {part: v * factor ** len(part) for part, v in ln.values.items()}
    return TopClass(top.dimension, CharNumbers(top.dimension, values, Basis.L), top.label)


def psi_to_phi(h: HClass) -> HClass:
    if h.coords is not Coords.PSI:
        raise ValueError("expected psi-coordinates")
    terms = {i: _rescale(t, Fraction(1, unit_of(i))) for i, t in h.terms.items()}
    return HClass(h.dimension, Coords.PHI, terms)


def phi_to_psi(h: HClass) -> HClass:
    if h.coords is not Coords.PHI:
        raise ValueError("expected phi-coordinates")
    terms = {i: _rescale(t, Fraction(unit_of(i))) for i, t in h.terms.items()}
    return HClass(h.dimension, Coords.PSI, terms)


def h_product(a: HClass, b: HClass, max_dim: int = DEFAULT_MAX_DIM) -> HClass:
    """Product of homology-manifold classes, returned in phi-coordinates."""
    a, b = a.to(Coords.PHI), b.to(Coords.PHI)
    dim = a.dimension + b.dimension
    out: dict[int, TopClass] = {}
    for i, s in a.terms.items():
        for j, t in b.terms.items():
            k = star(i, j)
            term = top_product(s, t, max_dim)
            out[k] = out[k] + term if k in out else term
    return HClass(dim, Coords.PHI, out)


def naive_psi_product(a: HClass, b: HClass, max_dim: int = DEFAULT_MAX_DIM) -> HClass:
    """``M[i] (x) N[j] -> (M x N)[i*j]`` applied to psi-coordinates.

    This is *not* the homology-manifold product; it is kept to exhibit the
    difference.
    """
    a, b = a.to(Coords.PSI), b.to(Coords.PSI)
    out: dict[int, TopClass] = {}
    for i, s in a.terms.items():
        for j, t in b.terms.items():
            k = star(i, j)
            term = top_product(s, t, max_dim)
            out[k] = out[k] + term if k in out else term
    return HClass(a.dimension + b.dimension, Coords.PSI, out)


# --- the L^H genus -------------------------------------------------------------


@dataclass(frozen=True)
class LHGenus:
    """``L^H(X) = 8 i(X) + L(X)``: degree-0 scalar plus the positive part."""

    dimension: int
    index: int
    scalar: int
    components: Mapping[int, PPolynomial]

    def on_left(self, right_dim: int) -> BigradedClass:
        out = BigradedClass.unit(self.dimension, right_dim, self.scalar)
        for poly in self.components.values():
            out = out + BigradedClass.left(self.dimension, right_dim, poly)
        return out

    def on_right(self, left_dim: int) -> BigradedClass:
        out = BigradedClass.unit(left_dim, self.dimension, self.scalar)
        for poly in self.components.values():
            out = out + BigradedClass.right(left_dim, self.dimension, poly)
        return out

    def __str__(self):
        parts = [str(self.scalar)] + [str(p) for p in self.components.values()]
        return " + ".join(parts)


def lh_total_class(dimension: int | CharNumbers | TopClass, index: int) -> LHGenus:
    """The ``L^H``-genus of a ``dimension``-dimensional homology manifold with
    resolution index ``index``, symbolically in its Pontrjagin classes."""
    if not isinstance(dimension, int):
        dimension = dimension.dimension
    comps = {k: l_polynomial(k) for k in range(1, dimension // 4 + 1)}
    return LHGenus(dimension, index, unit_of(index), comps)


def product_l_class(m_x: int, i_x: int, m_y: int, i_y: int) -> BigradedClass:
    """Total L-class of ``X x Y``: ``L^H(X) (x) L^H(Y)`` with the degree-0 term
    ``1 + 8(i_x * i_y)`` replaced by 1."""
    lh = lh_total_class(m_x, i_x).on_left(m_y) * lh_total_class(m_y, i_y).on_right(m_x)
    top = dict(lh.terms)
    top[((), ())] = Fraction(1)
    return BigradedClass(m_x, m_y, top)


def product_pontrjagin_class(m_x: int, i_x: int, m_y: int, i_y: int, k: int) -> BigradedClass:
    """``p_k(X x Y)`` in terms of ``p_*(X)``, ``p_*(Y)`` and the indices."""
    if k < 1:
        raise ValueError("k must be positive")
    if 4 * k > m_x + m_y:
        raise ValueError(f"p_{k} vanishes above dimension {m_x + m_y}")
    total = product_l_class(m_x, i_x, m_y, i_y)
    inverse = genus_inverse_polynomial(l_characteristic_series(k), k)
    return substitute(inverse, total.component, BigradedClass.unit(m_x, m_y))


def canonical_top_representative(
    left: TopClass, i: int, right: TopClass, j: int
) -> TopClass:
    """Pontrjagin numbers of ``(M_i x N_j)_TOP`` via the ``L^H`` product formula.

    ``left = M`` and ``right = N`` are the psi-representatives of the factors.
    """
    m, n = left.dimension, right.dimension
    dim = m + n
    if dim % 4:
        return TopClass.zero(dim)
    cache: dict[int, BigradedClass] = {}

    def p(k):
        if k not in cache:
            cache[k] = product_pontrjagin_class(m, i, n, j, k)
        return cache[k]

    values = {}
    for part in enumerate_partitions(dim // 4):
        cls = BigradedClass.unit(m, n)
        for x in part:
            cls = cls * p(x)
        values[part] = bigraded_pair(cls, left.numbers, right.numbers)
    label = f"({left.label}_{i}x{right.label}_{j})_TOP" if left.label and right.label else None
    return TopClass(dim, CharNumbers(dim, values), label)
