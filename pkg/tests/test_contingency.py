import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rulemeasures.contingency import (
    ContingencyTable,
    EnumerationConfig,
    TransformKind,
    both_negated,
    classify_state,
    col_scale,
    contrapositive,
    enumerate_tables,
    negate_conclusion,
    negate_premise,
    row_scale,
    swap,
    transform,
    uniform_scale,
)

tables = st.builds(
    ContingencyTable,
    st.integers(0, 50), st.integers(0, 50), st.integers(0, 50), st.integers(0, 50),
)


def test_counts_and_margins():
    t = ContingencyTable(3, 1, 4, 2)
    assert t.n == 10
    assert t.n_x == 4 and t.n_y == 7
    assert t.n_nx == 6 and t.n_ny == 3
    assert t.p_xy == 0.3 and t.p_x == 0.4 and t.p_y == 0.7


def test_rejects_bad_cells():
    with pytest.raises(ValueError):
        ContingencyTable(-1, 0, 0, 0)
    with pytest.raises(TypeError):
        ContingencyTable(1.5, 0, 0, 0)


def test_probabilities_need_nonempty_table():
    with pytest.raises(ValueError):
        ContingencyTable(0, 0, 0, 0).p_xy


def test_text_round_trip():
    t = ContingencyTable.from_text("40, 10,20,30")
    assert t == ContingencyTable(40, 10, 20, 30)
    assert ContingencyTable.from_text(t.to_text()) == t
    with pytest.raises(ValueError):
        ContingencyTable.from_text("1,2,3")


@given(tables)
def test_swap_and_negations_are_involutions(t):
    assert swap(swap(t)) == t
    assert negate_conclusion(negate_conclusion(t)) == t
    assert negate_premise(negate_premise(t)) == t
    assert both_negated(both_negated(t)) == t
    assert contrapositive(contrapositive(t)) == t


@given(tables)
def test_transform_compositions(t):
    assert both_negated(t) == negate_premise(negate_conclusion(t))
    assert contrapositive(t) == swap(both_negated(t))
    assert transform(t, TransformKind.SWAP) == swap(t)
    assert transform(t, TransformKind.ROW_SCALE, 2, 3) == row_scale(t, 2, 3)


@given(tables, st.integers(1, 4))
def test_uniform_scale_preserves_proportions(t, k):
    s = uniform_scale(t, k)
    assert s.n == k * t.n
    if t.n:
        assert math.isclose(s.p_xy, t.p_xy)
        assert classify_state(s).independence == classify_state(t).independence


def test_scale_factor_validation():
    t = ContingencyTable(1, 1, 1, 1)
    with pytest.raises(ValueError):
        uniform_scale(t, 0)
    with pytest.raises(ValueError):
        row_scale(t, 1, -2)


def test_row_col_scale_cells():
    t = ContingencyTable(1, 2, 3, 4)
    assert row_scale(t, 2, 3).cells() == (2, 4, 9, 12)
    assert col_scale(t, 2, 3).cells() == (2, 6, 6, 12)


def test_state_classification_exact():
    # Independence by exact integer cross product: 4*12 == 8*6.
    s = classify_state(ContingencyTable(4, 4, 2, 2))
    assert s.independence and not s.attraction and not s.repulsion

    s = classify_state(ContingencyTable(5, 3, 1, 3))
    assert s.attraction and not s.independence and not s.repulsion

    s = classify_state(ContingencyTable(1, 3, 5, 3))
    assert s.repulsion

    s = classify_state(ContingencyTable(2, 2, 1, 5))
    assert s.equilibrium

    s = classify_state(ContingencyTable(0, 3, 1, 1))
    assert s.incompatibility and not s.logical_implication

    s = classify_state(ContingencyTable(3, 0, 1, 1))
    assert s.logical_implication and not s.incompatibility


def test_degenerate_premise_states():
    # Empty premise: neither implication nor equilibrium applies.
    s = classify_state(ContingencyTable(0, 0, 2, 2))
    assert not s.logical_implication and not s.equilibrium
    assert s.incompatibility and s.independence


@given(tables)
def test_attraction_and_repulsion_exclusive(t):
    s = classify_state(t)
    assert not (s.attraction and s.repulsion)
    if s.independence:
        assert not s.attraction and not s.repulsion


def test_enumeration_count_and_order():
    config = EnumerationConfig(n_max=6)
    seen = list(enumerate_tables(config))
    expected = sum(math.comb(n + 3, 3) for n in range(1, 7))
    assert len(seen) == expected
    assert len(set(seen)) == expected
    # ascending n, lexicographic cells within each n
    keys = [(t.n, t.cells()) for t in seen]
    assert keys == sorted(keys)
    assert all(1 <= t.n <= 6 for t in seen)


def test_enumeration_rejects_bad_bound():
    with pytest.raises(ValueError):
        EnumerationConfig(n_max=0)
