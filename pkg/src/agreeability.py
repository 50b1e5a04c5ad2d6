from fractions import Fraction
from typing import List, Sequence, Tuple

from .instance import AdditiveProfile, ItemSet, OrdinalProfile
from .oracles.value_oracle import ValueOracle


def _check_universe(m: int, items: ItemSet):
    if items.m != m:
        raise ValueError(f"set is over {items.m} items but the instance has {m}")


def is_agreeable_additive(profile: AdditiveProfile, items: ItemSet) -> bool:
    """
    Whether every agent weakly prefers ``items`` to its complement.

    Under additive utilities this is 2 * u_i(T) >= sigma_i for every agent,
    evaluated in exact rational arithmetic.

    Args:
        profile (AdditiveProfile): The utilities.
        items (ItemSet): Candidate set over the same items.

    Returns:
        bool: True when the set is agreeable to all agents.
    """
    _check_universe(profile.m, items)
    return all(2 * profile.value(agent, items) >= profile.total(agent) for agent in profile.agents.indices)


def unsatisfied_agents(profile: AdditiveProfile, items: ItemSet) -> List[int]:
    """Agents (1-based) who strictly prefer the complement of ``items``."""
    _check_universe(profile.m, items)
    return [
        agent
        for agent in profile.agents.indices
        if 2 * profile.value(agent, items) < profile.total(agent)
    ]


def is_agreeable_oracle(oracle: ValueOracle, items: ItemSet) -> bool:
    """
    Whether u_i(T) >= u_i(S \\ T) for every agent of a value oracle.

    Queries T and its complement for every agent, 2n queries in all, before
    deciding; the oracle's accountant sees each of them.
    """
    _check_universe(oracle.m, items)
    rest = items.complement()
    verdicts = []
    for agent in oracle.agents.indices:
        verdicts.append(oracle.query(agent, items) >= oracle.query(agent, rest))
    return all(verdicts)


def prefix_counts(ranking: Sequence[int], items: ItemSet) -> List[int]:
    """c_k = number of the top-k ranked items that lie in ``items``, for k = 1..m."""
    counts = []
    running = 0
    for item in ranking:
        if item in items:
            running += 1
        counts.append(running)
    return counts


def is_necessarily_agreeable(ranking: Sequence[int], items: ItemSet) -> bool:
    """
    Whether ``items`` beats its complement under every responsive preference
    consistent with the strict ``ranking``.

    This holds exactly when every top-k prefix of the ranking has at least
    k/2 members in the set, compared as 2 * c_k >= k.
    """
    _check_universe(len(ranking), items)
    return all(2 * c >= k for k, c in enumerate(prefix_counts(ranking, items), start=1))


def necessary_agreeability_deficits(ranking: Sequence[int], items: ItemSet) -> List[Tuple[int, Fraction]]:
    """
    Prefixes that violate the necessary-agreeability condition.

    Args:
        ranking (Sequence[int]): Strict ranking, most preferred first.
        items (ItemSet): Candidate set.

    Returns:
        list: (k, k/2 - c_k) for every k with c_k < k/2; empty iff the set is necessarily agreeable.
    """
    _check_universe(len(ranking), items)
    return [
        (k, Fraction(k, 2) - c)
        for k, c in enumerate(prefix_counts(ranking, items), start=1)
        if 2 * c < k
    ]


def is_necessarily_agreeable_for_all(profile: OrdinalProfile, items: ItemSet) -> bool:
    return all(is_necessarily_agreeable(ranking, items) for ranking in profile.rankings)
