from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from src.instance import (
    AdditiveProfile,
    Agents,
    Items,
    ItemSet,
    OrdinalProfile,
    as_rational,
    validate_additive_profile,
    validate_ordinal_profile,
)


def test_item_set_is_sorted_and_deduplicated():
    items = ItemSet(5, [4, 2, 4, 1])
    assert items.members == (1, 2, 4)
    assert len(items) == 3
    assert 4 in items and 3 not in items


def test_item_set_rejects_out_of_range_members():
    with pytest.raises(ValueError):
        ItemSet(3, [0, 1])
    with pytest.raises(ValueError):
        ItemSet(3, [4])


def test_item_set_algebra():
    items = ItemSet.of(6, [1, 3])
    assert items.complement() == ItemSet(6, [2, 4, 5, 6])
    assert items.union([5]) == ItemSet(6, [1, 3, 5])
    assert items.difference([3]) == ItemSet(6, [1])
    assert items.issubset(ItemSet.full(6))
    assert not ItemSet.full(6).issubset(items)
    assert ItemSet.empty(6).render() == ""
    assert items.render() == "1 3"


def test_items_and_agents_must_be_positive():
    with pytest.raises(ValueError):
        Items(0)
    with pytest.raises(ValueError):
        Agents(0)


@pytest.mark.parametrize(
    "rankings, valid",
    [
        ([[1, 2, 3]], True),
        ([[1, 1, 3]], False),
        ([[2, 1], [1, 2]], True),
        ([[1, 2], [1, 3]], False),
    ],
)
def test_validate_ordinal_profile(rankings, valid):
    report = validate_ordinal_profile(OrdinalProfile.from_rankings(rankings))
    assert report.is_valid == valid


def test_duplicate_index_is_flagged():
    report = validate_ordinal_profile(OrdinalProfile.from_rankings([[1, 1, 3]]))
    assert report.agents == (1,)
    assert any(issue.item == 1 and "duplicate" in issue.message for issue in report.issues)


def test_positions_invert_the_ranking():
    profile = OrdinalProfile.from_rankings([[3, 1, 2]])
    assert profile.positions(1) == {3: 1, 1: 2, 2: 3}


def test_additive_totals():
    profile = AdditiveProfile.from_matrix([[1, 2]])
    assert validate_additive_profile(profile).is_valid
    assert profile.total(1) == 3
    assert AdditiveProfile.from_matrix([[0, 0]]).total(1) == 0


def test_negative_utility_is_flagged():
    report = validate_additive_profile(AdditiveProfile.from_matrix([[-1, 2]]))
    assert not report.is_valid
    (issue,) = report.issues
    assert (issue.agent, issue.item) == (1, 1)


def test_stale_totals_are_flagged():
    profile = AdditiveProfile(Items(2), Agents(1), [[1, 2]], totals=[4])
    report = validate_additive_profile(profile)
    assert not report.is_valid
    assert "cached total" in report.summary()


def test_ragged_rows_are_flagged():
    profile = AdditiveProfile(Items(2), Agents(2), [[1, 2], [1]])
    assert validate_additive_profile(profile).agents == (2,)


@pytest.mark.parametrize(
    "raw, expected",
    [(3, Fraction(3)), ("3/2", Fraction(3, 2)), (Fraction(1, 3), Fraction(1, 3)), (" 7 ", Fraction(7))],
)
def test_as_rational(raw, expected):
    assert as_rational(raw) == expected


@pytest.mark.parametrize("raw", [0.5, True, "abc", None])
def test_as_rational_refuses(raw):
    with pytest.raises(ValueError):
        as_rational(raw)


def test_scaled_rows_clear_denominators():
    profile = AdditiveProfile.from_matrix([["1/2", "1/3", 1], [2, 0, 4]])
    assert profile.scaled_rows() == ((3, 2, 6), (2, 0, 4))
    assert not profile.integral
    assert AdditiveProfile.from_matrix([[2, 0, 4]]).integral


def test_value_sums_the_chosen_items():
    profile = AdditiveProfile.from_matrix([[1, 2, 3], [3, 0, "1/2"]])
    assert profile.value(1, ItemSet(3, [1, 3])) == 4
    assert profile.value(2, ItemSet(3, [3])) == Fraction(1, 2)


@pytest.mark.parametrize("members", [[1.7], [2.0], ["3"], [True]])
def test_item_set_rejects_non_integer_members(members):
    with pytest.raises(ValueError):
        ItemSet(5, members)


def test_item_set_accepts_numpy_integers():
    assert ItemSet(5, np.array([4, 2])) == ItemSet(5, [2, 4])


@settings(max_examples=200, deadline=None)
@given(
    st.integers(min_value=1, max_value=12).flatmap(
        lambda m: st.tuples(
            st.lists(
                st.lists(st.fractions(min_value=0, max_value=10, max_denominator=7), min_size=m, max_size=m),
                min_size=1,
                max_size=3,
            ),
            st.lists(st.booleans(), min_size=m, max_size=m),
        )
    )
)
def test_complement_splits_every_total_exactly(case):
    rows, mask = case
    m = len(mask)
    profile = AdditiveProfile.from_matrix(rows)
    items = ItemSet(m, [j + 1 for j in range(m) if mask[j]])
    rest = items.complement()
    assert rest.complement() == items
    assert len(items) + len(rest) == m
    for agent in profile.agents.indices:
        assert profile.value(agent, items) + profile.value(agent, rest) == profile.total(agent)
