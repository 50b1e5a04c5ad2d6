"""Exhaustive minimum agreeable sets, by increasing size then lexicographic order.

Only meant for desk-scale instances; every entry point enforces the
brute-force item cap.
"""

import logging
from itertools import combinations, islice

import numpy as np

from ..agreeability import is_agreeable_oracle, is_necessarily_agreeable_for_all
from ..config import BRUTE_MAX_ITEMS_ENV, get_caps
from ..errors import CapExceededError
from ..instance import AdditiveProfile, ItemSet, OrdinalProfile
from ..oracles.value_oracle import ValueOracle
from ..utils import half_up
from .solver import ADDITIVE, ORACLE, ORDINAL, Solver, instance_kind, require_valid_additive, require_valid_ordinal

_BATCH = 8192


def _check_cap(m: int, max_items: int):
    cap = get_caps().brute_max_items if max_items is None else max_items
    if m > cap:
        raise CapExceededError("brute-force items", cap, m, BRUTE_MAX_ITEMS_ENV)


def solve_bruteforce(profile: AdditiveProfile, max_items: int = None) -> ItemSet:
    """
    Minimum-cardinality agreeable set under additive utilities.

    Subsets are scanned size by size in lexicographic order, so among all
    minimum sets the lexicographically smallest member list is returned.
    Rows are scaled to integers and each size is checked in numpy batches.

    Args:
        profile (AdditiveProfile): The utilities.
        max_items (int, optional): Item cap, defaults to the configured one.

    Returns:
        ItemSet: A minimum agreeable set.
    """
    require_valid_additive(profile)
    m = profile.m
    _check_cap(m, max_items)
    rows = profile.scaled_rows()
    totals = [sum(row) for row in rows]
    dtype = np.int64 if max(totals) < 2**61 else object
    utilities = np.array(rows, dtype=dtype)
    row_totals = np.array(totals, dtype=dtype)[:, None]

    if all(t == 0 for t in totals):
        return ItemSet.empty(m)
    for size in range(1, m + 1):
        subsets = combinations(range(m), size)
        while True:
            chunk = np.array(list(islice(subsets, _BATCH)), dtype=np.intp)
            if chunk.size == 0:
                break
            sums = utilities[:, chunk].sum(axis=2)
            agreeable = (2 * sums >= row_totals).all(axis=0)
            if agreeable.any():
                best = chunk[int(np.argmax(agreeable))]
                return ItemSet(m, (best + 1).tolist())
    raise AssertionError("the full item set is always agreeable")


def solve_bruteforce_ordinal(profile: OrdinalProfile, max_items: int = None) -> ItemSet:
    """Minimum set that is necessarily agreeable for every agent; starts at size ceil(m/2)."""
    require_valid_ordinal(profile)
    m = profile.m
    _check_cap(m, max_items)
    for size in range(half_up(m), m + 1):
        for members in combinations(range(1, m + 1), size):
            candidate = ItemSet(m, members)
            if is_necessarily_agreeable_for_all(profile, candidate):
                return candidate
    raise AssertionError("the full item set is always necessarily agreeable")


def solve_bruteforce_oracle(oracle: ValueOracle, max_items: int = None) -> ItemSet:
    """Minimum agreeable set of a value oracle; every check is charged to its accountant."""
    m = oracle.m
    _check_cap(m, max_items)
    for size in range(0, m + 1):
        for members in combinations(range(1, m + 1), size):
            candidate = ItemSet(m, members)
            if is_agreeable_oracle(oracle, candidate):
                return candidate
    logging.warning("no agreeable set found; the oracle is not monotone")
    return ItemSet.full(m)


def minimum_size(instance, max_items: int = None) -> int:
    """Optimum size for any instance kind, by exhaustive search."""
    kind = instance_kind(instance)
    if kind == ADDITIVE:
        return len(solve_bruteforce(instance, max_items))
    if kind == ORDINAL:
        return len(solve_bruteforce_ordinal(instance, max_items))
    return len(solve_bruteforce_oracle(instance.fresh(), max_items))


class BruteForceSolver(Solver):
    name = "brute"
    kinds = (ADDITIVE, ORDINAL, ORACLE)

    def __init__(self, max_items: int = None):
        super().__init__()
        self.max_items = max_items

    def solve(self, instance) -> ItemSet:
        self.check_kind(instance)
        kind = instance_kind(instance)
        if kind == ADDITIVE:
            return solve_bruteforce(instance, self.max_items)
        if kind == ORDINAL:
            return solve_bruteforce_ordinal(instance, self.max_items)
        oracle = instance.fresh()
        selection = solve_bruteforce_oracle(oracle, self.max_items)
        self.stats = {"queries": oracle.accountant.total}
        return selection
