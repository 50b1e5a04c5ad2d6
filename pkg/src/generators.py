"""Seeded instance generators. Equal arguments and seed give equal instances."""

import numpy as np

from .instance import AdditiveProfile, OrdinalProfile
from .reductions import CnfFormula, SetCoverInstance


def gen_random_additive(m: int, n: int, max_u: int, seed: int) -> AdditiveProfile:
    """
    Utilities drawn i.i.d. uniformly from the integers 0..max_u.

    Args:
        m (int): Number of items.
        n (int): Number of agents.
        max_u (int): Largest utility, at least 0.
        seed (int): Seed of the random stream.

    Returns:
        AdditiveProfile: An n x m integer profile.
    """
    if max_u < 0:
        raise ValueError(f"max_u must be nonnegative, got {max_u}")
    rng = np.random.default_rng(seed)
    matrix = rng.integers(0, max_u + 1, size=(n, m))
    return AdditiveProfile.from_matrix(matrix.tolist())


def gen_random_ordinal(m: int, n: int, seed: int) -> OrdinalProfile:
    """Independent uniformly random strict rankings."""
    rng = np.random.default_rng(seed)
    return OrdinalProfile.from_rankings([(rng.permutation(m) + 1).tolist() for _ in range(n)], m=m)


def gen_opposite_ordinal(m: int) -> OrdinalProfile:
    """Two agents with exactly reversed rankings."""
    identity = list(range(1, m + 1))
    return OrdinalProfile.from_rankings([identity, identity[::-1]])


def gen_random_3sat(num_vars: int, num_clauses: int, seed: int, width: int = 3) -> CnfFormula:
    """Clauses of ``width`` distinct variables with uniformly random signs."""
    if width > num_vars:
        raise ValueError(f"clause width {width} exceeds the {num_vars} variables")
    rng = np.random.default_rng(seed)
    clauses = []
    for _ in range(num_clauses):
        variables = rng.choice(np.arange(1, num_vars + 1), size=width, replace=False)
        signs = rng.choice(np.array([-1, 1]), size=width)
        clauses.append(tuple((variables * signs).tolist()))
    return CnfFormula(num_vars, tuple(clauses))


def gen_random_setcover(universe_size: int, num_subsets: int, seed: int, density: float = 0.4) -> SetCoverInstance:
    """
    Random subsets of 1..universe_size where every element lies in at least two subsets.

    Each element joins each subset with probability ``density``; elements that
    end up with fewer than two subsets are added to random extra ones.
    """
    if num_subsets < 2:
        raise ValueError("at least two subsets are needed for every element to be covered twice")
    rng = np.random.default_rng(seed)
    membership = rng.random((num_subsets, universe_size)) < density
    for element in range(universe_size):
        while membership[:, element].sum() < 2:
            membership[rng.integers(num_subsets), element] = True
    subsets = [[int(e) + 1 for e in np.flatnonzero(row)] for row in membership]
    return SetCoverInstance(range(1, universe_size + 1), subsets)
