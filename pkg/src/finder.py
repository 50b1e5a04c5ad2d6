import logging

from .agreeability import is_agreeable_additive, is_agreeable_oracle, is_necessarily_agreeable_for_all
from .instance import ItemSet
from .solvers.solver import ADDITIVE, ORDINAL, Solver, instance_kind


def audit(instance, items: ItemSet) -> bool:
    """
    Re-checks a solver's output through the agreeability module.

    Ordinal instances need necessary agreeability for every agent. Oracle
    instances are checked on a fresh copy so the run's query count is untouched.
    """
    kind = instance_kind(instance)
    if kind == ADDITIVE:
        return is_agreeable_additive(instance, items)
    if kind == ORDINAL:
        return is_necessarily_agreeable_for_all(instance, items)
    return is_agreeable_oracle(instance.fresh(), items)


class AgreeableSetFinder:
    def __init__(self, instance=None):
        self.instance = instance
        self.solver = None
        self.result = None
        self.agreeable = None

    def load_instance(self, instance):
        """Load an instance into the finder."""
        self.instance = instance
        self.result = None
        self.agreeable = None

    def set_solver(self, solver: Solver):
        """Set the solving strategy with a Solver object."""
        if self.instance is not None:
            solver.check_kind(self.instance)
        self.solver = solver

    def solve(self) -> ItemSet:
        """Run the selected solver and audit its output."""
        if not self.solver:
            raise ValueError("Solver not set.")
        if self.instance is None:
            raise ValueError("Instance not loaded.")

        self.result = self.solver.solve(self.instance)
        self.agreeable = audit(self.instance, self.result)
        if not self.agreeable:
            logging.error(f"{self.solver.name} returned a set that is not agreeable: {self.result.render()}")
        return self.result
