import logging

from ..agreeability import is_agreeable_oracle
from ..covering import build_covering_design, choose_parameters
from ..instance import ItemSet
from ..oracles.additive import AdditiveOracle
from ..oracles.value_oracle import ValueOracle, query_report
from .solver import ADDITIVE, ORACLE, Solver, instance_kind, require_valid_additive


def solve_oracle(oracle: ValueOracle, epsilon=1, max_blocks: int = None) -> ItemSet:
    """
    Returns the first agreeable block of a covering design, or all items.

    Each block costs 2n queries, so a run issues at most 2 n ell queries.
    The all-items fallback is agreeable for any monotone oracle and is not
    queried.

    Args:
        oracle (ValueOracle): Monotone set utilities.
        epsilon: Positive rational, see ``choose_parameters``.
        max_blocks (int, optional): Cap on the number of blocks.

    Returns:
        ItemSet: An agreeable set.
    """
    m = oracle.m
    if m == 1:
        for candidate in (ItemSet.empty(1), ItemSet.full(1)):
            if is_agreeable_oracle(oracle, candidate):
                return candidate
        logging.warning("no agreeable set over a single item; the oracle is not monotone")
        return ItemSet.full(1)

    params = choose_parameters(m, epsilon, max_blocks)
    design = build_covering_design(m, params.p, params.q, max_blocks)
    for index, block in enumerate(design.blocks, start=1):
        if is_agreeable_oracle(oracle, block):
            logging.debug(f"block {index}/{params.ell} is agreeable")
            return block
    logging.info(f"none of the {params.ell} blocks of size {params.block_size} is agreeable; returning all items")
    return ItemSet.full(m)


class OracleCoverSolver(Solver):
    name = "oracle-cover"
    kinds = (ORACLE, ADDITIVE)

    def __init__(self, epsilon=1, max_blocks: int = None):
        super().__init__()
        self.epsilon = epsilon
        self.max_blocks = max_blocks

    def solve(self, instance) -> ItemSet:
        self.check_kind(instance)
        if instance_kind(instance) == ADDITIVE:
            require_valid_additive(instance)
            oracle = AdditiveOracle(instance)
        else:
            oracle = instance.fresh()
        selection = solve_oracle(oracle, self.epsilon, self.max_blocks)
        report = query_report(oracle)
        self.stats = {"queries": report.total, "distinct_queries": report.distinct}
        return selection
