from .additive import DynamicProgramSolver, GreedyCoverSolver, PrunedGreedyCoverSolver
from .bruteforce import BruteForceSolver
from .oracle_cover import OracleCoverSolver
from .ordinal import DeterministicOrdinalSolver, RandomizedOrdinalSolver
from .solver import Solver

ALGORITHMS = {
    cls.name: cls
    for cls in (
        RandomizedOrdinalSolver,
        DeterministicOrdinalSolver,
        OracleCoverSolver,
        DynamicProgramSolver,
        GreedyCoverSolver,
        PrunedGreedyCoverSolver,
        BruteForceSolver,
    )
}


def make_solver(name: str, seed: int = 0, epsilon=1, resample_cap: int = None) -> Solver:
    """
    Instantiates the solver registered under an algorithm id.

    Args:
        name (str): Algorithm id, e.g. ``additive-dp``.
        seed (int): Seed for randomized solvers.
        epsilon: Block-size trade-off for the cover solver.
        resample_cap (int, optional): Draw budget for the randomized ordinal solver.

    Returns:
        Solver: A fresh solver, owned by one run.
    """
    if name not in ALGORITHMS:
        raise ValueError(f"unknown algorithm '{name}', expected one of {', '.join(ALGORITHMS)}")
    if name == RandomizedOrdinalSolver.name:
        return RandomizedOrdinalSolver(seed=seed, resample_cap=resample_cap)
    if name == OracleCoverSolver.name:
        return OracleCoverSolver(epsilon=epsilon)
    return ALGORITHMS[name]()
