"""Coefficient tables of the L-spectra and bordism spectra, the
dual-transversality invariant, and the resolvability decision procedures.

Cases the theory leaves open are reported as ``UNKNOWN`` rather than guessed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping


class GroupDescriptor(str, enum.Enum):
    Z = "Z"
    Z2 = "Z2"
    ZERO = "0"
    Z_GROUP_RING_NONZERO_L0 = "Z[L0~(Z)]"
    TOP_BORDISM_OVER_L0 = "Omega^TOP_m[L0(Z)]"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


class Variant(str, enum.Enum):
    QUADRATIC = "quadratic"
    SYMMETRIC = "symmetric"


class Decision(str, enum.Enum):
    OBSTRUCTED_NEVER = "ObstructedNever"
    BORDANT_TO_TRANSVERSE = "BordantToTransverse"
    NECESSARY_CONDITION_HOLDS = "NecessaryConditionHolds"
    RESOLVABLE = "Resolvable"
    NOT_RESOLVABLE = "NotResolvable"

    def __str__(self):
        return self.value


_QUADRATIC = (GroupDescriptor.Z, GroupDescriptor.ZERO, GroupDescriptor.Z2, GroupDescriptor.ZERO)
_SYMMETRIC = (GroupDescriptor.Z, GroupDescriptor.Z2, GroupDescriptor.ZERO, GroupDescriptor.ZERO)


def _check_degree(m: int):
    if m < 0:
        raise ValueError("degree must be non-negative")


def l_group(m: int, variant: Variant | str = Variant.QUADRATIC) -> GroupDescriptor:
    """``L_m(Z)`` (quadratic) or ``L^m(Z)`` (symmetric)."""
    _check_degree(m)
    table = _QUADRATIC if Variant(variant) is Variant.QUADRATIC else _SYMMETRIC
    return table[m % 4]


def script_l_homotopy(m: int) -> GroupDescriptor:
    """Homotopy groups of the cofibre of ``Omega^H(pt) -> Omega^TOP(pt)[L_0(Z)]``."""
    _check_degree(m)
    if m == 0:
        return GroupDescriptor.Z_GROUP_RING_NONZERO_L0
    if m in (4, 5):
        return GroupDescriptor.UNKNOWN
    return GroupDescriptor.ZERO


def homology_bordism_coefficients(m: int) -> GroupDescriptor:
    """``Omega^H_m(pt)`` as far as it is determined."""
    _check_degree(m)
    if m == 0:
        return GroupDescriptor.Z
    if m in (1, 2):
        return GroupDescriptor.ZERO
    if m >= 6:
        return GroupDescriptor.TOP_BORDISM_OVER_L0
    return GroupDescriptor.UNKNOWN


def top_bordism_coefficients(m: int) -> GroupDescriptor:
    """``Omega^TOP_m(pt)`` in the low degrees used above; higher degrees are
    not tabulated here."""
    _check_degree(m)
    if m == 0:
        return GroupDescriptor.Z
    if m in (1, 2, 3):
        return GroupDescriptor.ZERO
    return GroupDescriptor.UNKNOWN


def script_l_from_exact_sequence(m: int) -> GroupDescriptor:
    """Recompute ``pi_m`` of the cofibre from the bordism tables alone.

    Uses ``Omega^H_m -> Omega^TOP_m[L_0] -> pi_m -> Omega^H_{m-1} -> Omega^TOP_{m-1}[L_0]``.
    Only the cases the tables pin down are answered.
    """
    _check_degree(m)
    if m == 0:
        # Z -> Z[L_0(Z)], t -> t[0], has cokernel Z[L0~(Z)]; Omega^H_{-1} = 0
        return GroupDescriptor.Z_GROUP_RING_NONZERO_L0
    if m == 1:
        # Omega^TOP_1 = 0, and Omega^H_0 -> Omega^TOP_0[L_0] is injective
        return GroupDescriptor.ZERO
    if m in (2, 3):
        if (
            top_bordism_coefficients(m) is GroupDescriptor.ZERO
            and homology_bordism_coefficients(m - 1) is GroupDescriptor.ZERO
        ):
            return GroupDescriptor.ZERO
        return GroupDescriptor.UNKNOWN
    if m >= 7:
        # both maps on either side are isomorphisms
        return GroupDescriptor.ZERO
    return GroupDescriptor.UNKNOWN


@dataclass(frozen=True)
class ObstructionElement:
    """Element of the group ring ``Z[L0~(Z)]`` on the nonzero indices."""

    terms: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        out = {}
        for index, mult in self.terms.items():
            index, mult = int(index), int(mult)
            if index == 0:
                raise ValueError("index 0 is not an element of L0~(Z)")
            if mult:
                out[index] = mult
        object.__setattr__(self, "terms", dict(sorted(out.items())))

    def __add__(self, other: "ObstructionElement") -> "ObstructionElement":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return ObstructionElement(out)

    def __neg__(self):
        return ObstructionElement({k: -v for k, v in self.terms.items()})

    def __bool__(self):
        return bool(self.terms)

    def to_json(self):
        return [{"index": k, "multiplicity": v} for k, v in self.terms.items()]

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for n, (k, v) in enumerate(self.terms.items()):
            mag = f"{abs(v)}*[{k}]"
            if n == 0:
                out = ("-" if v < 0 else "") + mag
            else:
                out += (" - " if v < 0 else " + ") + mag
        return out


def reduce_mod_index_zero(element: Mapping[int, int]) -> ObstructionElement:
    """Quotient ``Z[L_0(Z)] -> Z[L0~(Z)]`` killing the summand ``Z[0]``."""
    return ObstructionElement({k: v for k, v in element.items() if k != 0})


def transversality_invariant(components: Iterable[tuple[int, int]]) -> ObstructionElement:
    """``sum_a degree_a [i_a]`` reduced modulo the index-0 summand.

    Each component is ``(degree, index)``: the image of its fundamental class
    in ``H_m = Z`` of the target and its resolution index.
    """
    full: dict[int, int] = {}
    for degree, index in components:
        full[int(index)] = full.get(int(index), 0) + int(degree)
    return reduce_mod_index_zero(full)


def dual_transverse_decision(m: int, inv: ObstructionElement) -> Decision:
    if inv:
        return Decision.OBSTRUCTED_NEVER
    if m >= 6:
        return Decision.BORDANT_TO_TRANSVERSE
    return Decision.NECESSARY_CONDITION_HOLDS


def resolvability(i: int, m: int) -> Decision:
    if i != 0:
        return Decision.NOT_RESOLVABLE
    if m >= 6:
        return Decision.RESOLVABLE
    return Decision.NECESSARY_CONDITION_HOLDS
