"""Necessarily agreeable sets from rankings alone.

Two strategies: a seeded random sign assignment repaired per agent
(Las Vegas, resampled until its prefix sums stay small), and a deterministic
decomposition of the items into chunks that every agent ranks monotonically,
each chunk contributing an alternating selection.
"""

import logging
from bisect import bisect_left
from enum import Enum
from typing import List, Sequence, Tuple

import attrs
import numpy as np

from ..agreeability import is_necessarily_agreeable_for_all
from ..config import ORDINAL_DET_MAX_AGENTS_ENV, get_caps
from ..errors import CapExceededError, ResampleBudgetError
from ..instance import ItemSet, OrdinalProfile
from ..utils import ceil_root, deviation_budget, deviation_threshold
from .solver import ORDINAL, Solver, require_valid_ordinal


class Orientation(Enum):
    FORWARD = "forward"
    REVERSE = "reverse"


@attrs.frozen
class MonotoneChunk:
    """Items listed in agent 1's order; each agent ranks them in that order or exactly reversed."""

    items: tuple = attrs.field(converter=tuple)
    orientations: tuple = attrs.field(converter=tuple)

    def __len__(self) -> int:
        return len(self.items)


@attrs.frozen
class SignAssignment:
    """+1 (included) / -1 (excluded) per item, item j at index j-1.

    Every agent's last prefix sum is the plain sum of the signs, whatever
    its ranking.
    """

    signs: tuple = attrs.field(converter=lambda s: tuple(int(x) for x in s))

    @classmethod
    def draw(cls, m: int, rng: np.random.Generator) -> "SignAssignment":
        """Independent uniform signs for ``m`` items from ``rng``."""
        return cls(rng.choice(np.array([-1, 1]), size=m))

    def prefix_sums(self, ranking: Sequence[int]) -> np.ndarray:
        signs = np.asarray(self.signs)
        return np.cumsum(signs[np.asarray(ranking) - 1])

    def max_deviation(self, rankings: Sequence[Sequence[int]]) -> int:
        """Largest |prefix sum| over all rankings, computed in one batch."""
        signs = np.asarray(self.signs)
        return int(np.abs(np.cumsum(signs[np.asarray(rankings) - 1], axis=1)).max())

    def included(self) -> List[int]:
        return [j for j, s in enumerate(self.signs, start=1) if s > 0]


def _increasing_positions(sequence: Sequence[int]) -> List[int]:
    """Positions of one longest strictly increasing subsequence (patience sorting)."""
    tails = []
    tail_positions = []
    back = [None] * len(sequence)
    for pos, value in enumerate(sequence):
        pile = bisect_left(tails, value)
        if pile:
            back[pos] = tail_positions[pile - 1]
        if pile == len(tails):
            tails.append(value)
            tail_positions.append(pos)
        else:
            tails[pile] = value
            tail_positions[pile] = pos
    if not tails:
        return []
    result = []
    cursor = tail_positions[-1]
    while cursor is not None:
        result.append(cursor)
        cursor = back[cursor]
    result.reverse()
    return result


def _monotone_positions(sequence: Sequence[int]) -> Tuple[List[int], List[int]]:
    increasing = _increasing_positions(sequence)
    decreasing = _increasing_positions([-x for x in sequence])
    return increasing, decreasing


def longest_monotone_subsequence(sequence: Sequence[int]) -> Tuple[List[int], List[int]]:
    """
    A longest increasing and a longest decreasing subsequence of distinct values.

    The longer of the two always has length at least ceil(sqrt(L)).

    Args:
        sequence (Sequence[int]): Distinct values.

    Returns:
        tuple: (increasing subsequence, decreasing subsequence), as lists of values.
    """
    if len(set(sequence)) != len(sequence):
        raise ValueError("longest_monotone_subsequence needs distinct values")
    increasing, decreasing = _monotone_positions(sequence)
    return [sequence[p] for p in increasing], [sequence[p] for p in decreasing]


def common_monotone_subsequence(
    profile: OrdinalProfile, alive: ItemSet, positions: Sequence[dict] = None
) -> MonotoneChunk:
    """
    Refines agent 1's order of ``alive`` agent by agent, keeping the longer of
    the increasing and decreasing runs under each next agent's ranking.

    The resulting chunk has length at least ceil(|alive| ** (1 / 2**(n-1))).
    Ties between the two runs go to the increasing one. ``positions`` may
    carry the precomputed item -> rank maps of all agents.
    """
    if not len(alive):
        raise ValueError("common_monotone_subsequence needs a nonempty set of items")
    if positions is None:
        positions = [profile.positions(agent) for agent in profile.agents.indices]
    chunk = sorted(alive, key=positions[0].__getitem__)
    orientations = [Orientation.FORWARD]
    for rank in positions[1:]:
        increasing, decreasing = _monotone_positions([rank[x] for x in chunk])
        if len(increasing) >= len(decreasing):
            chunk = [chunk[p] for p in increasing]
            orientations.append(Orientation.FORWARD)
        else:
            chunk = [chunk[p] for p in decreasing]
            orientations.append(Orientation.REVERSE)
    return MonotoneChunk(chunk, orientations)


def alternating_selection(k: int) -> List[int]:
    """
    Positions (1-based) to keep from a chunk of length ``k``.

    Odd positions, plus position ``k`` when ``k`` is even. The selection
    passes the prefix test both in listed and in reversed order.
    """
    if k < 1:
        raise ValueError(f"chunk length must be positive, got {k}")
    positions = list(range(1, k + 1, 2))
    if k % 2 == 0:
        positions.append(k)
    return positions


def monotone_decomposition(profile: OrdinalProfile) -> List[MonotoneChunk]:
    """Peels common monotone chunks off the item set until no items remain."""
    alive = ItemSet.full(profile.m)
    t = 2 ** (profile.n - 1)
    positions = [profile.positions(agent) for agent in profile.agents.indices]
    chunks = []
    while len(alive):
        chunk = common_monotone_subsequence(profile, alive, positions)
        target = ceil_root(len(alive), t)
        if len(chunk) < target:
            logging.warning(f"chunk of length {len(chunk)} below the expected {target}")
        logging.debug(f"chunk {len(chunks) + 1}: {len(chunk)} of {len(alive)} remaining items")
        chunks.append(chunk)
        alive = alive.difference(chunk.items)
    return chunks


def solve_deterministic(profile: OrdinalProfile, max_agents: int = None) -> ItemSet:
    """
    Deterministic necessarily agreeable set for every agent.

    Args:
        profile (OrdinalProfile): Strict rankings.
        max_agents (int, optional): Agent cap; chunk length shrinks like
            k ** (1 / 2**(n-1)), so large n degenerates to single-item chunks.

    Returns:
        ItemSet: Union of the alternating selections of all chunks.
    """
    return _deterministic_selection(profile, max_agents)[0]


def _deterministic_selection(profile: OrdinalProfile, max_agents: int = None) -> Tuple[ItemSet, int]:
    require_valid_ordinal(profile)
    cap = get_caps().ordinal_det_max_agents if max_agents is None else max_agents
    if profile.n > cap:
        raise CapExceededError("deterministic ordinal agents", cap, profile.n, ORDINAL_DET_MAX_AGENTS_ENV)
    chosen = []
    chunks = monotone_decomposition(profile)
    for chunk in chunks:
        chosen.extend(chunk.items[p - 1] for p in alternating_selection(len(chunk)))
    return ItemSet(profile.m, chosen), len(chunks)


def randomized_selection(profile: OrdinalProfile, seed: int, resample_cap: int = None) -> Tuple[ItemSet, int]:
    """
    Random signs, rejected while any prefix sum strays beyond 2 sqrt(m lnln m),
    then each agent re-includes its ceil(sqrt(m lnln m)) favourite excluded items.

    Args:
        profile (OrdinalProfile): Strict rankings.
        seed (int): Seed of the random stream; equal seeds give equal outputs.
        resample_cap (int, optional): Maximum number of draws.

    Returns:
        tuple: (selected items, number of discarded draws).
    """
    require_valid_ordinal(profile)
    m = profile.m
    if m == 1:
        return ItemSet.full(1), 0
    cap = get_caps().resample_cap if resample_cap is None else resample_cap
    threshold = deviation_threshold(m)
    budget = deviation_budget(m)
    order = np.asarray(profile.rankings) - 1
    rng = np.random.default_rng(seed)

    for attempt in range(cap):
        assignment = SignAssignment.draw(m, rng)
        deviation = assignment.max_deviation(profile.rankings)
        if deviation > threshold:
            logging.debug(f"draw {attempt + 1}: prefix deviation {deviation} > {threshold:.3f}")
            continue
        included = np.zeros(m, dtype=bool)
        included[np.asarray(assignment.included(), dtype=np.intp) - 1] = True
        for row in order:
            excluded = row[~included[row]][:budget]
            included[excluded] = True
        selection = ItemSet(m, (np.flatnonzero(included) + 1).tolist())
        if is_necessarily_agreeable_for_all(profile, selection):
            if attempt:
                logging.info(f"randomized ordinal selection needed {attempt} resamples")
            return selection, attempt
        logging.info(f"draw {attempt + 1} failed the prefix check after repair; resampling")
    raise ResampleBudgetError(cap)


def solve_randomized(profile: OrdinalProfile, seed: int, resample_cap: int = None) -> ItemSet:
    return randomized_selection(profile, seed, resample_cap)[0]


class RandomizedOrdinalSolver(Solver):
    name = "ordinal-rand"
    kinds = (ORDINAL,)

    def __init__(self, seed: int = 0, resample_cap: int = None):
        super().__init__()
        self.seed = seed
        self.resample_cap = resample_cap

    def solve(self, instance) -> ItemSet:
        self.check_kind(instance)
        selection, resamples = randomized_selection(instance, self.seed, self.resample_cap)
        self.stats = {"resamples": resamples}
        return selection


class DeterministicOrdinalSolver(Solver):
    name = "ordinal-det"
    kinds = (ORDINAL,)

    def __init__(self, max_agents: int = None):
        super().__init__()
        self.max_agents = max_agents

    def solve(self, instance) -> ItemSet:
        self.check_kind(instance)
        selection, chunks = _deterministic_selection(instance, self.max_agents)
        self.stats = {"chunks": chunks}
        return selection
