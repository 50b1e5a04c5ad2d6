import logging
import math
from fractions import Fraction
from itertools import combinations, islice
from typing import Optional, Tuple

import attrs
import numpy as np
from scipy.special import comb

from .config import COVER_MAX_BLOCKS_ENV, get_caps
from .errors import CapExceededError
from .instance import ItemSet
from .utils import clamped_lnln


def as_epsilon(value) -> Fraction:
    """Reads a positive rational epsilon from an int, Fraction, decimal string or float."""
    if isinstance(value, float):
        value = str(value)
    try:
        epsilon = Fraction(value)
    except (TypeError, ValueError):
        raise ValueError(f"epsilon must be a positive rational, got {value!r}") from None
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    return epsilon


@attrs.frozen
class CoverParams:
    m: int
    epsilon: Fraction
    q: int
    p: int
    ell: int

    @property
    def block_size(self) -> int:
        return self.p * self.q

    @property
    def part_count(self) -> int:
        return math.ceil(self.m / self.p)


@attrs.frozen
class CoveringDesign:
    """Blocks of exactly p*q items such that every q-subset of the items lies in one of them."""

    m: int
    p: int
    q: int
    parts: tuple
    blocks: tuple

    def __len__(self) -> int:
        return len(self.blocks)


def choose_parameters(m: int, epsilon=1, max_blocks: int = None) -> CoverParams:
    """
    Block parameters for an (epsilon m lnln m / ln m)-approximation.

    q = floor(ln m / (eps lnln m)) and p = floor(eps m lnln m / (q ln m)),
    both clamped to at least 1 and then shrunk so that p*q <= floor(m/2).
    That bound is tighter than p*q <= m: a block never holds more than half
    the items, so m = 2 and m = 3 both get q = p = 1.

    Args:
        m (int): Number of items, at least 2.
        epsilon: Positive rational trade-off between block size and block count.
        max_blocks (int, optional): Cap on ell = C(ceil(m/p), q).

    Returns:
        CoverParams: The chosen parameters.

    Raises:
        CapExceededError: When ell exceeds the cap, i.e. epsilon is too small for this m.
    """
    if m < 2:
        raise ValueError(f"choose_parameters needs m >= 2, got {m}")
    epsilon = as_epsilon(epsilon)
    cap = get_caps().cover_max_blocks if max_blocks is None else max_blocks
    eps = float(epsilon)
    ln_m = math.log(m)
    lnln_m = clamped_lnln(m)
    half = m // 2

    q = max(1, math.floor(ln_m / (eps * lnln_m)))
    q = min(q, half)
    p = max(1, math.floor(eps * m * lnln_m / (q * ln_m)))
    p = max(1, min(p, half // q))

    ell = int(comb(math.ceil(m / p), q, exact=True))
    if ell > cap:
        raise CapExceededError("covering block count", cap, ell, COVER_MAX_BLOCKS_ENV)
    logging.debug(f"cover parameters m={m} eps={epsilon}: q={q} p={p} ell={ell}")
    return CoverParams(m=m, epsilon=epsilon, q=q, p=p, ell=ell)


def build_covering_design(m: int, p: int, q: int, max_blocks: int = None) -> CoveringDesign:
    """
    Unions of q consecutive-range parts, padded to p*q items.

    The items are split into ceil(m/p) runs of at most p consecutive indices.
    Every choice of q runs, in lexicographic order, gives one block; short
    unions are padded with the smallest unused indices.

    Args:
        m (int): Number of items.
        p (int): Part size.
        q (int): Parts per block.
        max_blocks (int, optional): Cap on the number of blocks.

    Returns:
        CoveringDesign: The parts and blocks.
    """
    if p < 1 or q < 1 or p * q > m:
        raise ValueError(f"covering design needs p, q >= 1 and p*q <= m, got m={m}, p={p}, q={q}")
    cap = get_caps().cover_max_blocks if max_blocks is None else max_blocks
    part_count = math.ceil(m / p)
    ell = int(comb(part_count, q, exact=True))
    if ell > cap:
        raise CapExceededError("covering block count", cap, ell, COVER_MAX_BLOCKS_ENV)

    parts = tuple(tuple(range(j * p + 1, min((j + 1) * p, m) + 1)) for j in range(part_count))
    size = p * q
    blocks = []
    for chosen in combinations(range(part_count), q):
        members = [x for j in chosen for x in parts[j]]
        if len(members) < size:
            taken = set(members)
            padding = (x for x in range(1, m + 1) if x not in taken)
            members.extend(islice(padding, size - len(members)))
        blocks.append(ItemSet(m, members))
    return CoveringDesign(m=m, p=p, q=q, parts=parts, blocks=tuple(blocks))


def verify_coverage(design: CoveringDesign, batch: int = 4096) -> Optional[Tuple[int, ...]]:
    """
    Exhaustively looks for a q-subset of the items inside no block.

    Every smaller subset extends to a q-subset, so checking size q suffices.

    Returns:
        tuple or None: An uncovered subset, or None when the design covers all.
    """
    m, q = design.m, min(design.q, design.m)
    incidence = np.zeros((len(design.blocks), m), dtype=bool)
    for row, block in enumerate(design.blocks):
        incidence[row, np.asarray(block.members) - 1] = True
    subsets = combinations(range(m), q)
    while True:
        chunk = np.array(list(islice(subsets, batch)), dtype=np.intp)
        if chunk.size == 0:
            return None
        covered = incidence[:, chunk].all(axis=2).any(axis=0)
        if not covered.all():
            missing = chunk[np.argmin(covered)]
            return tuple(int(x) + 1 for x in missing)
