"""Self-checks reproducing the reference computations, one per numbered
criterion, so each can be run from the command line as ``check(n)``."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .bordism import TopClass, cp_generator, omega_coordinates, signature, top_product
from .charclasses import (
    Basis,
    BigradedClass,
    CharNumbers,
    PPolynomial,
    convert_char_basis,
    genus_inverse_polynomial,
    l_polynomial,
    substitute,
)
from .exact import enumerate_partitions, l_characteristic_series
from .homology import (
    Coords,
    HClass,
    canonical_top_representative,
    h_product,
    naive_psi_product,
    product_pontrjagin_class,
    star,
)
from .tables import (
    Decision,
    GroupDescriptor,
    dual_transverse_decision,
    l_group,
    resolvability,
    script_l_homotopy,
    transversality_invariant,
)

INDICES = (-2, -1, 0, 1, 2)


@dataclass(frozen=True)
class CheckResult:
    number: int
    title: str
    passed: bool
    detail: str = ""

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        tail = f" ({self.detail})" if self.detail else ""
        return f"[{status}] {self.number}. {self.title}{tail}"


def _l_polynomials():
    expected = {
        1: PPolynomial(1, {(1,): Fraction(1, 3)}),
        2: PPolynomial(2, {(2,): Fraction(7, 45), (1, 1): Fraction(-1, 45)}),
        3: PPolynomial(
            3,
            {(3,): Fraction(62, 945), (2, 1): Fraction(-13, 945), (1, 1, 1): Fraction(2, 945)},
        ),
    }
    bad = [k for k, v in expected.items() if l_polynomial(k) != v]
    return not bad, f"mismatch at k={bad}" if bad else "L1, L2, L3 exact"


def _signatures():
    cps = [cp_generator(k) for k in (0, 2, 4)]
    ok = all(signature(cp_generator(k)) == 1 for k in (2, 4))
    ok &= signature(top_product(cps[1], cps[1])) == 1
    for a, b in itertools.product(cps, repeat=2):
        ok &= signature(top_product(a, b)) == signature(a) * signature(b)
    return ok, "sig = 1 on CP2, CP4, CP2xCP2; multiplicative on 9 pairs"


def _omega8():
    cp2, cp4 = cp_generator(2), cp_generator(4)
    a = omega_coordinates(top_product(cp2, cp2))
    b = omega_coordinates(cp4)
    return a == [1, 0] and b == [0, 1], f"CP2xCP2 -> {a}, CP4 -> {b}"


def _twisted_product():
    cp2 = cp_generator(2)
    for i, j in itertools.product(INDICES, repeat=2):
        s = star(i, j)
        canon = canonical_top_representative(cp2, i, cp2, j)
        via_phi = h_product(HClass.lift(cp2, i), HClass.lift(cp2, j)).to(Coords.PSI)
        if list(via_phi.terms) != [s] or via_phi.terms[s] != canon:
            return False, f"routes disagree at i={i}, j={j}"
        n = canon.numbers
        if n[(1, 1)] != 2 * (1 + 8 * s) * 9 or n[(2,)] != (1 + Fraction(16, 7) * s) * 9:
            return False, f"Pontrjagin numbers wrong at i={i}, j={j}"
        x = Fraction(144, 7) * s
        if omega_coordinates(canon) != [1 - x, x]:
            return False, f"omega8 wrong at i={i}, j={j}"
    return True, "25 index pairs, both routes"


def _star_monoid():
    rng = range(-10, 11)
    for i, j in itertools.product(rng, repeat=2):
        if star(i, j) != star(j, i) or star(0, i) != i:
            return False, f"fails at ({i}, {j})"
        if (1 + 8 * i) * (1 + 8 * j) != 1 + 8 * star(i, j):
            return False, f"unit map fails at ({i}, {j})"
    for i, j, k in itertools.product(rng, repeat=3):
        if star(star(i, j), k) != star(i, star(j, k)):
            return False, f"associativity fails at ({i}, {j}, {k})"
    return True, "21^3 triples"


def _phi_ring_morphism():
    cp2, cp4 = cp_generator(2), cp_generator(4)
    a = HClass(4, Coords.PSI, {1: cp2, -1: cp2.scaled(Fraction(1, 2))})
    b = HClass(4, Coords.PSI, {0: cp2.scaled(3), 2: cp2})
    c = HClass(8, Coords.PSI, {1: cp4, 3: top_product(cp2, cp2)})
    ok = h_product(h_product(a, b), c) == h_product(a, h_product(b, c))
    ok &= h_product(a, b) == h_product(b, a)
    ok &= h_product(a + b, c) == h_product(a, c) + h_product(b, c)
    h = HClass.lift(cp2, 1)
    real = h_product(h, h).to(Coords.PSI).terms[10]
    naive = naive_psi_product(h, h).terms[10]
    gap = real.numbers[(2,)] - naive.numbers[(2,)]
    ok &= gap == Fraction(16, 7) * 10 * 9
    return ok, f"p2 gap between product and naive psi product = {gap}"


def _product_pontrjagin():
    for i, j in itertools.product(INDICES, repeat=2):
        p1 = product_pontrjagin_class(4, i, 4, j, 1)
        expect1 = BigradedClass(4, 4, {((1,), ()): 1 + 8 * j, ((), (1,)): 1 + 8 * i})
        p2 = product_pontrjagin_class(4, i, 4, j, 2)
        expect2 = BigradedClass(4, 4, {((1,), (1,)): 1 + Fraction(16, 7) * star(i, j)})
        if p1 != expect1 or p2 != expect2:
            return False, f"mismatch at i={i}, j={j}"
    return True, "p1 and p2 of X x Y for 25 index pairs"


def _basis_round_trips(seed: int = 0):
    rnd = random.Random(seed)
    for _ in range(100):
        dim = rnd.choice((4, 8, 12, 16))
        values = {
            p: Fraction(rnd.randint(-50, 50), rnd.randint(1, 20))
            for p in enumerate_partitions(dim // 4)
        }
        c = CharNumbers(dim, values, rnd.choice((Basis.P, Basis.L)))
        other = Basis.L if c.basis is Basis.P else Basis.P
        if convert_char_basis(convert_char_basis(c, other), c.basis) != c:
            return False, f"round trip fails in dimension {dim}"
    for k in range(1, 6):
        series = l_characteristic_series(k)
        inverse = genus_inverse_polynomial(series, k)
        if substitute(inverse, l_polynomial, PPolynomial.one()) != PPolynomial.generator(k):
            return False, f"genus inversion fails at k={k}"
    return True, "100 random classes, genus inversion k <= 5"


def _obstruction_tables():
    ok = [l_group(m) for m in range(4)] == [
        GroupDescriptor.Z, GroupDescriptor.ZERO, GroupDescriptor.Z2, GroupDescriptor.ZERO
    ]
    ok &= [l_group(m, "symmetric") for m in range(4)] == [
        GroupDescriptor.Z, GroupDescriptor.Z2, GroupDescriptor.ZERO, GroupDescriptor.ZERO
    ]
    ok &= script_l_homotopy(0) is GroupDescriptor.Z_GROUP_RING_NONZERO_L0
    ok &= all(script_l_homotopy(m) is GroupDescriptor.UNKNOWN for m in (4, 5))
    ok &= all(script_l_homotopy(m) is GroupDescriptor.ZERO for m in (1, 2, 3, 6, 7, 20))
    sigma = transversality_invariant([(1, 2)])
    ok &= dual_transverse_decision(9, sigma) is Decision.OBSTRUCTED_NEVER
    ok &= not transversality_invariant([(5, 0)])
    ok &= not transversality_invariant([(0, 3)])
    ok &= dual_transverse_decision(9, transversality_invariant([(5, 0)])) is (
        Decision.BORDANT_TO_TRANSVERSE
    )
    ok &= resolvability(0, 7) is Decision.RESOLVABLE
    ok &= resolvability(3, 7) is Decision.NOT_RESOLVABLE
    return ok, "L-groups, pi_m of the cofibre spectrum, sphere invariant"


def _cli_stable():
    from .cli.main import run

    exprs = ["omega(CP4)", "sig(CP2 * CP2)", "omega(H(CP2, i=1) * H(CP2, i=1))"]
    for e in exprs:
        first = run(e, fmt="json")
        if first != run(e, fmt="json") or first[0] != 0:
            return False, f"unstable output for {e}"
    return True, "JSON output byte-stable"


CHECKS = {
    1: ("L-polynomial golden values", _l_polynomials),
    2: ("signature theorem and multiplicativity", _signatures),
    3: ("omega8 coordinates", _omega8),
    4: ("twisted product of CP2 lifts", _twisted_product),
    5: ("star monoid", _star_monoid),
    6: ("phi is a ring morphism, psi is not", _phi_ring_morphism),
    7: ("product Pontrjagin classes", _product_pontrjagin),
    8: ("basis round trips", _basis_round_trips),
    9: ("obstruction tables", _obstruction_tables),
    10: ("CLI output stability", _cli_stable),
}


def run_check(number: int) -> CheckResult:
    if number not in CHECKS:
        raise ValueError(f"no check numbered {number}; choose from 1-{len(CHECKS)}")
    title, fn = CHECKS[number]
    passed, detail = fn()
    return CheckResult(number, title, bool(passed), detail)


def run_all() -> list[CheckResult]:
    return [run_check(n) for n in CHECKS]
