from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from hmbordism.bordism import TopClass, cp_generator, omega_coordinates, signature, top_product
from hmbordism.charclasses import Basis, BigradedClass, CharNumbers
from hmbordism.exact import enumerate_partitions
from hmbordism.homology import (
    Coords,
    HClass,
    canonical_top_representative,
    h_product,
    lh_total_class,
    naive_psi_product,
    phi_to_psi,
    product_pontrjagin_class,
    psi_to_phi,
    star,
)

F = Fraction
CP0, CP2, CP4 = cp_generator(0), cp_generator(2), cp_generator(4)


def test_star_examples():
    assert [star(0, j) for j in (-3, 0, 5)] == [-3, 0, 5]
    assert star(1, 1) == 10
    assert star(-1, 1) == -8


def test_star_monoid_exhaustive():
    r = range(-10, 11)
    for i, j in product(r, repeat=2):
        assert star(i, j) == star(j, i)
        assert (1 + 8 * i) * (1 + 8 * j) == 1 + 8 * star(i, j)
    for i, j, k in product(r, repeat=3):
        assert star(star(i, j), k) == star(i, star(j, k))
    images = {1 + 8 * i for i in r}
    assert len(images) == len(r)


def _l(h, index):
    return h.terms[index].l_numbers()


def test_psi_to_phi_examples():
    assert psi_to_phi(HClass.lift(CP4, 0)).terms[0] == CP4
    assert _l(psi_to_phi(HClass.lift(CP4, 1)), 1) == CharNumbers(
        8, {(2,): F(1, 9), (1, 1): F(25, 729)}, Basis.L
    )
    assert _l(psi_to_phi(HClass.lift(CP2, -1)), -1) == CharNumbers(4, {(1,): F(-1, 7)}, Basis.L)


def test_phi_to_psi_examples():
    h = HClass.lift(CP4, 3)
    assert phi_to_psi(psi_to_phi(h)) == h
    assert _l(phi_to_psi(HClass(4, Coords.PHI, {1: CP2})), 1) == CharNumbers(4, {(1,): 9}, Basis.L)
    assert phi_to_psi(HClass(8, Coords.PHI, {0: CP4})).terms[0] == CP4


small = st.fractions(min_value=-10, max_value=10, max_denominator=8)
indices = st.integers(min_value=-3, max_value=3)


@st.composite
def top_classes(draw, dim):
    values = {p: draw(small) for p in enumerate_partitions(dim // 4)}
    return TopClass.from_numbers(dim, values)


@st.composite
def h_classes(draw, dims=(0, 4, 8), coords=None):
    dim = draw(st.sampled_from(dims))
    terms = draw(st.dictionaries(indices, top_classes(dim), min_size=1, max_size=3))
    return HClass(dim, draw(st.sampled_from(list(Coords))) if coords is None else coords, terms)


@settings(max_examples=40, deadline=None)
@given(h_classes())
def test_psi_phi_mutually_inverse(h):
    assert h.to(Coords.PHI).to(Coords.PSI).to(h.coords) == h
    other = Coords.PHI if h.coords is Coords.PSI else Coords.PSI
    assert h.to(other).to(h.coords) == h


@settings(max_examples=30, deadline=None)
@given(h_classes(), h_classes(), h_classes())
def test_h_product_commutative_associative(a, b, c):
    assert h_product(a, b) == h_product(b, a)
    assert h_product(h_product(a, b), c) == h_product(a, h_product(b, c))


@settings(max_examples=30, deadline=None)
@given(h_classes(dims=(4,)), h_classes(dims=(4,)), h_classes(), small)
def test_h_product_bilinear(a, b, c, t):
    assert h_product(a + b.scaled(t), c) == h_product(a, c) + h_product(b, c).scaled(t)


@settings(max_examples=30, deadline=None)
@given(h_classes(), h_classes())
def test_product_indices_follow_quinn_formula(a, b):
    expected = {star(i, j) for i in a.terms for j in b.terms}
    assert set(h_product(a, b).terms) <= expected


def test_h_product_examples():
    plain = h_product(HClass.lift(CP2), HClass.lift(CP2))
    assert plain.to(Coords.PSI).terms == {0: top_product(CP2, CP2)}
    twisted = h_product(HClass.lift(CP2, 1), HClass.lift(CP2, 1)).to(Coords.PSI)
    assert list(twisted.terms) == [10]
    assert omega_coordinates(twisted.terms[10]) == [F(-1433, 7), F(1440, 7)]
    h = HClass(4, Coords.PSI, {2: CP2, -1: CP2.scaled(3)})
    assert h_product(h, HClass.lift(CP0)).to(Coords.PSI) == h


def test_phi_is_ring_morphism_psi_is_not():
    h = HClass.lift(CP2, 1)
    real = h_product(h, h).to(Coords.PSI).terms[10]
    naive = naive_psi_product(h, h).terms[10]
    assert real != naive
    assert real == canonical_top_representative(CP2, 1, CP2, 1)
    assert real.numbers[(2,)] - naive.numbers[(2,)] == F(16, 7) * 10 * 9


def test_canonical_representative_examples():
    assert canonical_top_representative(CP2, 0, CP2, 0).numbers.values == {(1, 1): 18, (2,): 9}
    assert canonical_top_representative(CP2, 1, CP2, 0).numbers.values == {
        (1, 1): 162, (2,): F(207, 7)
    }
    for i, j in product(range(-2, 3), repeat=2):
        assert signature(canonical_top_representative(CP2, i, CP2, j)) == 1


@pytest.mark.parametrize(
    "left, right",
    [(CP2, CP4), (CP4, CP4), (CP0, CP4), (top_product(CP2, CP2), CP2)],
)
@pytest.mark.parametrize("i, j", [(0, 0), (1, -1), (2, 1), (-1, -2)])
def test_canonical_representative_agrees_with_phi_route_in_other_dimensions(left, right, i, j):
    via_phi = h_product(HClass.lift(left, i), HClass.lift(right, j)).to(Coords.PSI)
    assert via_phi.terms[star(i, j)] == canonical_top_representative(left, i, right, j)


def test_lh_total_class():
    assert lh_total_class(0, 2).scalar == 17 and not lh_total_class(0, 2).components
    g = lh_total_class(4, 3)
    assert g.scalar == 25 and g.components[1].terms == {(1,): F(1, 3)}
    assert lh_total_class(CP2.numbers, 0).scalar == 1


@pytest.mark.parametrize("i, j", list(product(range(-2, 3), repeat=2)))
def test_degree_zero_coherence(i, j):
    prod = lh_total_class(4, i).on_left(4) * lh_total_class(4, j).on_right(4)
    assert prod.coefficient((), ()) == 1 + 8 * star(i, j)


@pytest.mark.parametrize("i, j", [(0, 0), (1, 2), (-1, 3), (2, -2)])
def test_product_pontrjagin_class_formulas(i, j):
    assert product_pontrjagin_class(4, i, 4, j, 1) == BigradedClass(
        4, 4, {((1,), ()): 1 + 8 * j, ((), (1,)): 1 + 8 * i}
    )
    assert product_pontrjagin_class(4, i, 4, j, 2) == BigradedClass(
        4, 4, {((1,), (1,)): 1 + F(16, 7) * star(i, j)}
    )


def test_product_pontrjagin_class_untwisted_is_whitney_sum():
    assert product_pontrjagin_class(4, 0, 4, 0, 1) == BigradedClass(
        4, 4, {((1,), ()): 1, ((), (1,)): 1}
    )
    with pytest.raises(ValueError):
        product_pontrjagin_class(4, 0, 4, 0, 3)


def test_hclass_drops_zero_terms_and_json():
    h = HClass(4, Coords.PSI, {0: TopClass.zero(4), 1: CP2})
    assert list(h.terms) == [1]
    assert h.to_json()["terms"][0]["index"] == 1
    assert h.to_json()["coords"] == "psi"
    with pytest.raises(ValueError):
        HClass(8, Coords.PSI, {0: CP2})
