"""Instance model: items, agents, item sets and the ordinal/additive profiles.

Items and agents are 1-based everywhere in the public API. All types are
immutable; a profile may hold an invalid payload so that the validators can
report on it, and solvers refuse invalid profiles.
"""

import math
import numbers
from collections import Counter
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import attrs


def _positive(instance, attribute, value):
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ValueError(f"{attribute.name} must be a positive integer, got {value!r}")


@attrs.frozen
class Items:
    m: int = attrs.field(validator=_positive)

    @property
    def indices(self) -> range:
        return range(1, self.m + 1)


@attrs.frozen
class Agents:
    n: int = attrs.field(validator=_positive)

    @property
    def indices(self) -> range:
        return range(1, self.n + 1)


def _sorted_unique(members) -> tuple:
    unique = set()
    for x in members:
        if isinstance(x, bool) or not isinstance(x, numbers.Integral):
            raise ValueError(f"item indices must be integers, got {x!r}")
        unique.add(int(x))
    return tuple(sorted(unique))


@attrs.frozen
class ItemSet:
    """A subset of the items 1..m, kept sorted and duplicate-free."""

    m: int = attrs.field(validator=_positive)
    members: tuple = attrs.field(default=(), converter=_sorted_unique)
    _lookup: frozenset = attrs.field(init=False, eq=False, repr=False)

    @members.validator
    def _check_members(self, attribute, value):
        if value and (value[0] < 1 or value[-1] > self.m):
            raise ValueError(f"item indices must lie in 1..{self.m}, got {list(value)}")

    def __attrs_post_init__(self):
        object.__setattr__(self, "_lookup", frozenset(self.members))

    @classmethod
    def of(cls, m: int, members: Iterable[int] = ()) -> "ItemSet":
        return cls(m, members)

    @classmethod
    def empty(cls, m: int) -> "ItemSet":
        return cls(m, ())

    @classmethod
    def full(cls, m: int) -> "ItemSet":
        return cls(m, range(1, m + 1))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, item) -> bool:
        return item in self._lookup

    def complement(self) -> "ItemSet":
        return ItemSet(self.m, (x for x in range(1, self.m + 1) if x not in self._lookup))

    def union(self, other: Iterable[int]) -> "ItemSet":
        return ItemSet(self.m, (*self.members, *other))

    def difference(self, other: Iterable[int]) -> "ItemSet":
        drop = set(other)
        return ItemSet(self.m, (x for x in self.members if x not in drop))

    def issubset(self, other: "ItemSet") -> bool:
        return self._lookup <= other._lookup

    def render(self) -> str:
        """Space-separated member indices."""
        return " ".join(str(x) for x in self.members)


def _ranking_rows(rows) -> tuple:
    return tuple(tuple(int(x) for x in row) for row in rows)


@attrs.frozen
class OrdinalProfile:
    """Per-agent rankings of the items; ``rankings[j][0]`` is agent j+1's favourite."""

    items: Items
    rankings: tuple = attrs.field(converter=_ranking_rows)

    @classmethod
    def from_rankings(cls, rankings: Sequence[Sequence[int]], m: Optional[int] = None) -> "OrdinalProfile":
        rows = _ranking_rows(rankings)
        if m is None:
            if not rows:
                raise ValueError("at least one ranking is required to infer m")
            m = len(rows[0])
        return cls(Items(m), rows)

    @property
    def m(self) -> int:
        return self.items.m

    @property
    def n(self) -> int:
        return len(self.rankings)

    @property
    def agents(self) -> Agents:
        return Agents(self.n)

    def ranking(self, agent: int) -> tuple:
        return self.rankings[agent - 1]

    def positions(self, agent: int) -> dict:
        """Maps item -> rank position (1 = most preferred) for ``agent``."""
        return {item: pos for pos, item in enumerate(self.ranking(agent), start=1)}


def as_rational(value) -> Fraction:
    """
    Converts a utility entry to an exact rational.

    Integers, ``Fraction`` objects and strings such as ``"3/2"`` are accepted.
    Binary floating point is refused so that weak inequalities stay exact.
    """
    if isinstance(value, bool):
        raise ValueError(f"utility must be a rational number, got {value!r}")
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError:
            raise ValueError(f"cannot read utility {value!r} as a rational") from None
    raise ValueError(f"utility must be an integer, Fraction or 'p/q' string, got {value!r}")


def _utility_rows(rows) -> tuple:
    return tuple(tuple(as_rational(x) for x in row) for row in rows)


def _rational_tuple(values) -> tuple:
    return tuple(as_rational(x) for x in values)


def _row_totals(rows) -> tuple:
    return tuple(sum(row, Fraction(0)) for row in rows)


@attrs.frozen
class AdditiveProfile:
    """n x m matrix of exact nonnegative utilities with cached row totals."""

    items: Items
    agents: Agents
    utilities: tuple = attrs.field(converter=_utility_rows)
    totals: tuple = attrs.field(converter=_rational_tuple)

    @totals.default
    def _default_totals(self):
        return _row_totals(self.utilities)

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence]) -> "AdditiveProfile":
        rows = _utility_rows(rows)
        if not rows or not rows[0]:
            raise ValueError("utility matrix needs at least one agent and one item")
        return cls(Items(len(rows[0])), Agents(len(rows)), rows)

    @property
    def m(self) -> int:
        return self.items.m

    @property
    def n(self) -> int:
        return self.agents.n

    @property
    def integral(self) -> bool:
        return all(x.denominator == 1 for row in self.utilities for x in row)

    def utility(self, agent: int, item: int) -> Fraction:
        return self.utilities[agent - 1][item - 1]

    def total(self, agent: int) -> Fraction:
        return self.totals[agent - 1]

    def value(self, agent: int, items: Iterable[int]) -> Fraction:
        row = self.utilities[agent - 1]
        return sum((row[x - 1] for x in items), Fraction(0))

    def scaled_rows(self) -> tuple:
        """Rows multiplied by the LCM of their denominators, as Python ints.

        Agreeability of a set is unchanged by scaling a row with a positive
        factor, so the integer rows decide exactly what the rational ones do.
        """
        scaled = []
        for row in self.utilities:
            factor = math.lcm(*(x.denominator for x in row)) if row else 1
            scaled.append(tuple(int(x * factor) for x in row))
        return tuple(scaled)


@attrs.frozen
class Issue:
    message: str
    agent: Optional[int] = None
    item: Optional[int] = None

    def describe(self) -> str:
        where = []
        if self.agent is not None:
            where.append(f"agent {self.agent}")
        if self.item is not None:
            where.append(f"item {self.item}")
        return f"{', '.join(where)}: {self.message}" if where else self.message


@attrs.frozen
class ValidationReport:
    issues: tuple = attrs.field(default=(), converter=tuple)

    @property
    def is_valid(self) -> bool:
        return not self.issues

    @property
    def agents(self) -> tuple:
        """Agents named by at least one issue, in first-seen order."""
        return tuple(dict.fromkeys(i.agent for i in self.issues if i.agent is not None))

    def summary(self) -> str:
        if self.is_valid:
            return "valid"
        return "; ".join(issue.describe() for issue in self.issues)


def validate_ordinal_profile(profile: OrdinalProfile) -> ValidationReport:
    """
    Lists every agent whose ranking is not a permutation of 1..m.

    Args:
        profile (OrdinalProfile): Profile to inspect.

    Returns:
        ValidationReport: Empty when every ranking is a strict ranking of all items.
    """
    m = profile.m
    issues = []
    if profile.n == 0:
        issues.append(Issue("profile has no agents"))
    for agent, ranking in enumerate(profile.rankings, start=1):
        if len(ranking) != m:
            issues.append(Issue(f"ranking has length {len(ranking)}, expected {m}", agent=agent))
        counts = Counter(ranking)
        for item in sorted(counts):
            if not 1 <= item <= m:
                issues.append(Issue(f"index {item} outside 1..{m}", agent=agent, item=item))
            elif counts[item] > 1:
                issues.append(Issue(f"duplicate index {item}", agent=agent, item=item))
    return ValidationReport(issues)


def validate_additive_profile(profile: AdditiveProfile) -> ValidationReport:
    """Flags ragged rows, negative utilities and cached totals that disagree with the rows."""
    m = profile.m
    issues = []
    if len(profile.utilities) != profile.n:
        issues.append(Issue(f"{len(profile.utilities)} utility rows for {profile.n} agents"))
    if len(profile.totals) != len(profile.utilities):
        issues.append(Issue(f"{len(profile.totals)} cached totals for {len(profile.utilities)} rows"))
    for agent, row in enumerate(profile.utilities, start=1):
        if len(row) != m:
            issues.append(Issue(f"row has {len(row)} entries, expected {m}", agent=agent))
        for item, value in enumerate(row, start=1):
            if value < 0:
                issues.append(Issue(f"negative utility {value}", agent=agent, item=item))
    for agent, (row, cached) in enumerate(zip(profile.utilities, profile.totals), start=1):
        actual = sum(row, Fraction(0))
        if cached != actual:
            issues.append(Issue(f"cached total {cached} differs from row sum {actual}", agent=agent))
    return ValidationReport(issues)
