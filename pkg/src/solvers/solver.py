from abc import ABC, abstractmethod

from ..errors import InvalidInstanceError, KindMismatchError
from ..instance import (
    AdditiveProfile,
    ItemSet,
    OrdinalProfile,
    validate_additive_profile,
    validate_ordinal_profile,
)
from ..oracles.value_oracle import ValueOracle

ORDINAL = "ordinal"
ADDITIVE = "additive"
ORACLE = "oracle"


def instance_kind(instance) -> str:
    """Kind tag of an instance: ordinal, additive or oracle."""
    if isinstance(instance, OrdinalProfile):
        return ORDINAL
    if isinstance(instance, AdditiveProfile):
        return ADDITIVE
    if isinstance(instance, ValueOracle):
        return ORACLE
    raise TypeError(f"not an instance: {type(instance).__name__}")


def require_valid_ordinal(profile: OrdinalProfile):
    report = validate_ordinal_profile(profile)
    if not report.is_valid:
        raise InvalidInstanceError(report)


def require_valid_additive(profile: AdditiveProfile):
    report = validate_additive_profile(profile)
    if not report.is_valid:
        raise InvalidInstanceError(report)


class Solver(ABC):
    """A strategy that computes a small agreeable set for one kind of instance.

    Concrete solvers set ``name`` (the CLI algorithm id) and ``kinds`` (the
    instance kinds they accept), and may fill ``stats`` during ``solve``.
    """

    name: str = ""
    kinds: tuple = ()

    def __init__(self):
        self.stats = {}

    def check_kind(self, instance):
        kind = instance_kind(instance)
        if kind not in self.kinds:
            raise KindMismatchError(self.name, kind, self.kinds)

    @abstractmethod
    def solve(self, instance) -> ItemSet:
        """
        Computes an agreeable set for the instance.

        Args:
            instance: An OrdinalProfile, AdditiveProfile or ValueOracle accepted by this solver.

        Returns:
            ItemSet: The selected items.
        """
        pass
