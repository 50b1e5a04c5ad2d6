import logging
from fractions import Fraction
from typing import Tuple

import attrs
import numpy as np

from ..agreeability import is_agreeable_additive
from ..config import DP_MAX_AGENTS_ENV, DP_MAX_CELLS_ENV, get_caps
from ..errors import CapExceededError
from ..instance import AdditiveProfile, ItemSet
from .solver import ADDITIVE, Solver, require_valid_additive


def dp_cell_count(profile: AdditiveProfile) -> int:
    """(m + 1) * prod(sigma_i + 1), the size of the dense table."""
    cells = profile.m + 1
    for total in profile.totals:
        cells *= int(total) + 1
    return cells


def solve_dp(profile: AdditiveProfile, max_agents: int = None, max_cells: int = None) -> ItemSet:
    """
    Minimum agreeable set for integer utilities by dynamic programming.

    States are the utility vectors (y_1..y_n) reachable with the first m'
    items; each keeps the fewest items reaching it, ties going to the
    lexicographically smallest item list. Only reachable states are stored.
    The answer is the best state with 2 y_i >= sigma_i for every agent, which
    coincides with the exhaustive search's answer.

    Args:
        profile (AdditiveProfile): Integer utilities.
        max_agents (int, optional): Agent cap.
        max_cells (int, optional): Cap on the dense table size (m+1) * prod(sigma_i + 1).

    Returns:
        ItemSet: A minimum agreeable set.

    Raises:
        ValueError: Utilities are not all integers.
        CapExceededError: Too many agents or too large a table.
    """
    require_valid_additive(profile)
    if not profile.integral:
        raise ValueError("the dynamic program needs integer utilities")
    caps = get_caps()
    max_agents = caps.dp_max_agents if max_agents is None else max_agents
    max_cells = caps.dp_max_cells if max_cells is None else max_cells
    if profile.n > max_agents:
        raise CapExceededError("dynamic program agents", max_agents, profile.n, DP_MAX_AGENTS_ENV)
    cells = dp_cell_count(profile)
    if cells > max_cells:
        raise CapExceededError("dynamic program cells", max_cells, cells, DP_MAX_CELLS_ENV)

    columns = [tuple(int(row[j]) for row in profile.utilities) for j in range(profile.m)]
    totals = [int(t) for t in profile.totals]
    best = {tuple(0 for _ in totals): ()}
    for item, column in enumerate(columns, start=1):
        layer = dict(best)
        for reached, chosen in best.items():
            target = tuple(y + u for y, u in zip(reached, column))
            candidate = chosen + (item,)
            current = layer.get(target)
            if current is None or (len(candidate), candidate) < (len(current), current):
                layer[target] = candidate
        best = layer
        logging.debug(f"dp after item {item}: {len(best)} reachable states")

    feasible = [
        chosen for reached, chosen in best.items() if all(2 * y >= t for y, t in zip(reached, totals))
    ]
    answer = min(feasible, key=lambda chosen: (len(chosen), chosen))
    return ItemSet(profile.m, answer)


@attrs.frozen
class CoverMatrix:
    """Row-normalized covering constraints A x >= 1 with A[i][s] = 2 u_i(s) / sigma_i.

    Agents with sigma_i = 0 have no row; any set satisfies them.
    """

    m: int
    rows: tuple
    agents: tuple
    satisfied_agents: tuple

    def as_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=object).reshape(len(self.rows), self.m)

    def coverage(self, items: ItemSet) -> Tuple[Fraction, ...]:
        """(A x)_i for the indicator vector x of ``items``."""
        return tuple(sum((row[x - 1] for x in items), Fraction(0)) for row in self.rows)


def build_cover_matrix(profile: AdditiveProfile) -> CoverMatrix:
    rows, agents, satisfied = [], [], []
    for agent in profile.agents.indices:
        total = profile.total(agent)
        if total == 0:
            satisfied.append(agent)
            continue
        agents.append(agent)
        rows.append(tuple(2 * u / total for u in profile.utilities[agent - 1]))
    return CoverMatrix(m=profile.m, rows=tuple(rows), agents=tuple(agents), satisfied_agents=tuple(satisfied))


def solve_greedy_cip(profile: AdditiveProfile, prune: bool = False) -> ItemSet:
    """
    Greedy multi-cover on the normalized covering program.

    Repeatedly adds the item with the largest truncated coverage gain
    sum_i min(A[i][s], remaining deficit of row i), smallest index on ties,
    until every row reaches 1. A row reaching 1 is exactly 2 u_i(T) >= sigma_i.

    Args:
        profile (AdditiveProfile): The utilities.
        prune (bool): Afterwards drop picked items, latest first, whose removal
            keeps the set agreeable.

    Returns:
        ItemSet: An agreeable set.
    """
    require_valid_additive(profile)
    matrix = build_cover_matrix(profile)
    deficits = [Fraction(1)] * len(matrix.rows)
    picked = []
    remaining = set(range(1, profile.m + 1))
    while any(d > 0 for d in deficits):
        best_item, best_gain = None, Fraction(0)
        for item in sorted(remaining):
            gain = sum((min(row[item - 1], d) for row, d in zip(matrix.rows, deficits) if d > 0), Fraction(0))
            if gain > best_gain:
                best_item, best_gain = item, gain
        if best_item is None:
            raise AssertionError("an uncovered row with no remaining item; row sums are 2")
        picked.append(best_item)
        remaining.discard(best_item)
        deficits = [max(Fraction(0), d - row[best_item - 1]) for row, d in zip(matrix.rows, deficits)]
        logging.debug(f"greedy picked item {best_item} with gain {best_gain}")

    if prune:
        for item in reversed(list(picked)):
            trial = [x for x in picked if x != item]
            if is_agreeable_additive(profile, ItemSet(profile.m, trial)):
                picked = trial
    return ItemSet(profile.m, picked)


class DynamicProgramSolver(Solver):
    name = "additive-dp"
    kinds = (ADDITIVE,)

    def __init__(self, max_agents: int = None, max_cells: int = None):
        super().__init__()
        self.max_agents = max_agents
        self.max_cells = max_cells

    def solve(self, instance) -> ItemSet:
        self.check_kind(instance)
        return solve_dp(instance, self.max_agents, self.max_cells)


class GreedyCoverSolver(Solver):
    name = "additive-greedy"
    kinds = (ADDITIVE,)
    prune = False

    def solve(self, instance) -> ItemSet:
        self.check_kind(instance)
        return solve_greedy_cip(instance, prune=self.prune)


class PrunedGreedyCoverSolver(GreedyCoverSolver):
    name = "additive-greedy-pruned"
    prune = True
