import pytest
from hypothesis import given, strategies as st

from hmbordism.tables import (
    Decision,
    GroupDescriptor as G,
    ObstructionElement,
    dual_transverse_decision,
    homology_bordism_coefficients,
    l_group,
    reduce_mod_index_zero,
    resolvability,
    script_l_from_exact_sequence,
    script_l_homotopy,
    transversality_invariant,
)


@pytest.mark.parametrize(
    "m, variant, expected",
    [(4, "quadratic", G.Z), (2, "quadratic", G.Z2), (5, "symmetric", G.Z2),
     (1, "quadratic", G.ZERO), (7, "symmetric", G.ZERO), (0, "symmetric", G.Z)],
)
def test_l_group(m, variant, expected):
    assert l_group(m, variant) is expected


def test_l_group_periodic():
    for m in range(40):
        assert l_group(m) is l_group(m + 4)
        assert l_group(m, "symmetric") is l_group(m + 4, "symmetric")


def test_script_l_homotopy():
    assert script_l_homotopy(0) is G.Z_GROUP_RING_NONZERO_L0
    assert script_l_homotopy(7) is G.ZERO
    assert script_l_homotopy(4) is G.UNKNOWN
    assert script_l_homotopy(5) is G.UNKNOWN
    with pytest.raises(ValueError):
        script_l_homotopy(-1)


def test_bordism_table():
    assert homology_bordism_coefficients(0) is G.Z
    assert homology_bordism_coefficients(1) is G.ZERO
    assert homology_bordism_coefficients(2) is G.ZERO
    assert all(homology_bordism_coefficients(m) is G.UNKNOWN for m in (3, 4, 5))
    assert homology_bordism_coefficients(9) is G.TOP_BORDISM_OVER_L0


@pytest.mark.parametrize("m", [0, 1, 2, 3, 7, 8, 12])
def test_exact_sequence_agrees_with_table(m):
    assert script_l_from_exact_sequence(m) is script_l_homotopy(m)


@pytest.mark.parametrize("m", [4, 5, 6])
def test_exact_sequence_never_contradicts_table(m):
    derived = script_l_from_exact_sequence(m)
    assert derived is G.UNKNOWN or derived is script_l_homotopy(m)


def test_invariant_examples():
    assert transversality_invariant([(1, 2)]) == ObstructionElement({2: 1})
    assert not transversality_invariant([(5, 0)])
    assert not transversality_invariant([(1, 3), (-1, 3)])


def test_obstruction_element_rejects_index_zero():
    with pytest.raises(ValueError):
        ObstructionElement({0: 1})


components = st.lists(
    st.tuples(st.integers(-5, 5), st.integers(-4, 4)), max_size=6
)


@given(components, components)
def test_invariant_additive(a, b):
    assert transversality_invariant(a + b) == transversality_invariant(a) + transversality_invariant(b)


@given(st.lists(st.integers(-5, 5), max_size=6))
def test_invariant_vanishes_on_resolvable_components(degrees):
    assert not transversality_invariant([(d, 0) for d in degrees])


@given(components, st.integers(-5, 5), st.integers(0, 12))
def test_decision_unchanged_by_index_zero_component(cs, degree, m):
    before = dual_transverse_decision(m, transversality_invariant(cs))
    after = dual_transverse_decision(m, transversality_invariant(cs + [(degree, 0)]))
    assert before is after


def test_quotient_kernel_is_image_of_index_zero_inclusion():
    # t -> t[0] lands in the kernel, and every generator [k], k != 0, survives
    for t in range(-3, 4):
        assert not reduce_mod_index_zero({0: t})
    for k in (-2, -1, 1, 2):
        assert reduce_mod_index_zero({k: 1}) == ObstructionElement({k: 1})
    x = {0: 4, 3: -2, -1: 5}
    assert reduce_mod_index_zero(x) == ObstructionElement({3: -2, -1: 5})


def test_decisions():
    sigma = transversality_invariant([(1, 2)])
    assert dual_transverse_decision(9, sigma) is Decision.OBSTRUCTED_NEVER
    assert dual_transverse_decision(3, sigma) is Decision.OBSTRUCTED_NEVER
    assert dual_transverse_decision(9, ObstructionElement()) is Decision.BORDANT_TO_TRANSVERSE
    assert dual_transverse_decision(4, ObstructionElement()) is Decision.NECESSARY_CONDITION_HOLDS
    assert resolvability(0, 7) is Decision.RESOLVABLE
    assert resolvability(3, 7) is Decision.NOT_RESOLVABLE
    assert resolvability(0, 4) is Decision.NECESSARY_CONDITION_HOLDS


def test_json_sorted_by_index():
    e = transversality_invariant([(2, 5), (1, -3), (1, 1)])
    assert e.to_json() == [
        {"index": -3, "multiplicity": 1},
        {"index": 1, "multiplicity": 1},
        {"index": 5, "multiplicity": 2},
    ]
