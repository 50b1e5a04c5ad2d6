import math

import numpy as np


def clamped_lnln(m: int) -> float:
    """
    Natural ln ln m clamped below at 1.

    ln ln m is below 1 for every m < 16 and undefined for m = 1, so small
    instances share the constant 1.

    Args:
        m (int): Number of items, at least 1.

    Returns:
        float: max(1, ln ln m).
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if m < 3:
        return 1.0
    return max(1.0, float(np.log(np.log(m))))


def deviation_budget(m: int) -> int:
    """Number of top excluded items each agent re-includes: ceil(sqrt(m * lnln m))."""
    return math.ceil(math.sqrt(m * clamped_lnln(m)))


def deviation_threshold(m: int) -> float:
    """Largest tolerated |prefix sum| of a random sign assignment: 2 sqrt(m lnln m)."""
    return 2.0 * math.sqrt(m * clamped_lnln(m))


def ceil_root(k: int, t: int) -> int:
    """
    Smallest integer r with r**t >= k, computed exactly.

    Args:
        k (int): Radicand, at least 0.
        t (int): Root degree, at least 1.

    Returns:
        int: ceil(k ** (1 / t)).
    """
    if k < 0 or t < 1:
        raise ValueError(f"ceil_root needs k >= 0 and t >= 1, got k={k}, t={t}")
    if k <= 1:
        return k
    r = max(1, int(round(k ** (1.0 / t))))
    while r**t < k:
        r += 1
    while r > 1 and (r - 1) ** t >= k:
        r -= 1
    return r


def half_up(m: int) -> int:
    """ceil(m / 2)"""
    return (m + 1) // 2
