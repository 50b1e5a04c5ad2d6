import math
from fractions import Fraction

import numpy as np

from ..instance import ItemSet
from ..utils import half_up
from .value_oracle import ValueOracle


class PlantedOracle(ValueOracle):
    """Single-agent threshold utility with an optional planted small solution.

    f(T) = 1 when 2|T| >= m or when the planted set is nonempty and contained
    in T; otherwise 0. An empty planted set gives the bare threshold function,
    which has no agreeable set smaller than ceil(m/2).
    """

    def __init__(self, m: int, t_star: ItemSet = None):
        super().__init__(m, n=1)
        if t_star is None:
            t_star = ItemSet.empty(m)
        if t_star.m != m:
            raise ValueError(f"planted set is over {t_star.m} items, oracle over {m}")
        self.t_star = t_star

    def evaluate(self, agent: int, items: ItemSet) -> Fraction:
        if 2 * len(items) >= self.m:
            return Fraction(1)
        if len(self.t_star) and self.t_star.issubset(items):
            return Fraction(1)
        return Fraction(0)

    def fresh(self) -> "PlantedOracle":
        return PlantedOracle(self.m, self.t_star)

    @property
    def is_pure_threshold(self) -> bool:
        return len(self.t_star) == 0

    def optimum_size(self) -> int:
        """Size of a minimum agreeable set: the planted set or half the items, whichever is smaller."""
        if self.is_pure_threshold:
            return half_up(self.m)
        return min(len(self.t_star), half_up(self.m))

    def __eq__(self, other):
        if not isinstance(other, PlantedOracle):
            return NotImplemented
        return self.m == other.m and self.t_star == other.t_star

    def __hash__(self):
        return hash((self.m, self.t_star))

    def __repr__(self):
        return f"PlantedOracle(m={self.m}, t_star={list(self.t_star)})"


def make_planted_oracle(m: int, t_star: ItemSet) -> PlantedOracle:
    """
    Builds the planted threshold oracle over ``m`` items.

    Args:
        m (int): Number of items.
        t_star (ItemSet): Planted set; empty means the bare threshold function.

    Returns:
        PlantedOracle: A fresh oracle with a zeroed accountant.
    """
    return PlantedOracle(m, t_star)


def lower_bound_planted_size(m: int, c: float = 1.0) -> int:
    """Planted set size max(1, floor(c ln m / 4)) used by the query lower-bound family."""
    if m < 2:
        return 1
    return max(1, math.floor(c * math.log(m) / 4))


def random_planted_oracle(m: int, size: int, seed: int) -> PlantedOracle:
    """Planted oracle whose planted set is a uniform ``size``-subset drawn from the seeded stream."""
    if not 0 <= size <= m:
        raise ValueError(f"planted size must lie in 0..{m}, got {size}")
    rng = np.random.default_rng(seed)
    chosen = rng.choice(np.arange(1, m + 1), size=size, replace=False)
    return PlantedOracle(m, ItemSet(m, chosen.tolist()))
