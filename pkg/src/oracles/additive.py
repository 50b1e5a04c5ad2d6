from fractions import Fraction

from ..instance import AdditiveProfile, ItemSet
from .value_oracle import ValueOracle


class AdditiveOracle(ValueOracle):
    """Value oracle over an additive profile, each agent normalized to [0, 1] by its total."""

    def __init__(self, profile: AdditiveProfile):
        super().__init__(profile.m, profile.n)
        self.profile = profile

    def evaluate(self, agent: int, items: ItemSet) -> Fraction:
        total = self.profile.total(agent)
        if total == 0:
            return Fraction(0)
        return self.profile.value(agent, items) / total

    def fresh(self) -> "AdditiveOracle":
        return AdditiveOracle(self.profile)
