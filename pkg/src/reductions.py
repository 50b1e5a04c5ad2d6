"""Reduction maps from partition, 3SAT and set cover to agreeable-set instances.

Each map comes with a decoder for its soundness direction and a decider for
the source problem, so the equivalences can be checked exhaustively on small
sources.
"""

import logging
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import attrs
from sympy import And, Not, Or, symbols
from sympy.logic.inference import satisfiable

from .instance import AdditiveProfile, ItemSet


def _nonnegative_ints(values) -> tuple:
    out = []
    for v in values:
        if isinstance(v, bool) or int(v) != v:
            raise ValueError(f"partition elements must be integers, got {v!r}")
        if v < 0:
            raise ValueError(f"partition elements must be nonnegative, got {v}")
        out.append(int(v))
    return tuple(out)


@attrs.frozen
class PartitionInstance:
    values: tuple = attrs.field(converter=_nonnegative_ints)

    @property
    def total(self) -> int:
        return sum(self.values)

    def __len__(self) -> int:
        return len(self.values)


def has_equal_split(instance: PartitionInstance) -> bool:
    """2-Partition: is there a subset summing to half the total? Reachable-sum DP."""
    total = instance.total
    if total % 2:
        return False
    reachable = {0}
    for value in instance.values:
        reachable |= {s + value for s in reachable if s + value <= total // 2}
    return total // 2 in reachable


def has_balanced_split(instance: PartitionInstance) -> bool:
    """Balanced 2-Partition: a half-size subset summing to half the total. DP over (count, sum)."""
    size, total = len(instance), instance.total
    if size % 2 or total % 2:
        return False
    reachable = {(0, 0)}
    for value in instance.values:
        reachable |= {(c + 1, s + value) for c, s in reachable if c < size // 2 and s + value <= total // 2}
    return (size // 2, total // 2) in reachable


def from_partition(instance: PartitionInstance) -> AdditiveProfile:
    """
    Two agents valuing item i at a_i and M - a_i.

    An agreeable set with exactly |A|/2 items exists iff A splits into two
    halves of equal size and equal sum.

    Args:
        instance (PartitionInstance): Multiset A with an even number of elements.

    Returns:
        AdditiveProfile: Two agents, |A| items.
    """
    if len(instance) == 0 or len(instance) % 2:
        raise ValueError(f"balanced partition needs a nonempty even-size multiset, got {len(instance)} elements")
    total = instance.total
    return AdditiveProfile.from_matrix([list(instance.values), [total - a for a in instance.values]])


def split_from_agreeable(instance: PartitionInstance, items: ItemSet) -> Tuple[List[int], List[int]]:
    """
    Reads the balanced split off an agreeable set with |A|/2 items.

    Returns:
        tuple: (indices inside the set, indices outside), both 1-based.

    Raises:
        ValueError: The set does not induce an equal-size, equal-sum split.
    """
    inside = list(items)
    outside = list(items.complement())
    left = sum(instance.values[i - 1] for i in inside)
    right = sum(instance.values[i - 1] for i in outside)
    if len(inside) != len(outside) or left != right:
        raise ValueError(f"set {inside} does not split the multiset evenly ({left} vs {right})")
    return inside, outside


def balanced_from_2partition(instance: PartitionInstance) -> PartitionInstance:
    """Pads B with |B| zeros; B splits evenly iff the padded multiset splits into balanced halves."""
    if any(v <= 0 for v in instance.values):
        raise ValueError("2-Partition elements must be positive")
    return PartitionInstance(instance.values + (0,) * len(instance))


def _check_clause(clause, num_vars: int) -> tuple:
    literals = tuple(dict.fromkeys(int(lit) for lit in clause))
    if not literals:
        raise ValueError("malformed clause: empty")
    if len(literals) > 3:
        raise ValueError(f"malformed clause {list(literals)}: more than 3 literals")
    for lit in literals:
        if lit == 0 or abs(lit) > num_vars:
            raise ValueError(f"malformed clause {list(literals)}: literal {lit} outside 1..{num_vars}")
        if -lit in literals:
            raise ValueError(f"malformed clause {list(literals)}: contains variable {abs(lit)} and its negation")
    return literals


@attrs.frozen
class CnfFormula:
    """CNF over variables 1..num_vars; literals are DIMACS-style signed integers."""

    num_vars: int
    clauses: tuple

    def __attrs_post_init__(self):
        if self.num_vars < 1:
            raise ValueError(f"formula needs at least one variable, got {self.num_vars}")
        object.__setattr__(self, "clauses", tuple(_check_clause(c, self.num_vars) for c in self.clauses))

    @property
    def preprocessed(self) -> bool:
        return all(len(c) >= 2 for c in self.clauses)

    def preprocess(self) -> "CnfFormula":
        """
        Replaces every unit clause (l) by (l or z) and (l or not z) over a fresh
        variable z. Satisfiability is preserved.
        """
        if self.preprocessed:
            return self
        num_vars = self.num_vars
        clauses = []
        for clause in self.clauses:
            if len(clause) == 1:
                num_vars += 1
                clauses.append((clause[0], num_vars))
                clauses.append((clause[0], -num_vars))
            else:
                clauses.append(clause)
        logging.debug(f"preprocessing added {num_vars - self.num_vars} fresh variables")
        return CnfFormula(num_vars, tuple(clauses))

    def to_sympy(self):
        variables = symbols(f"y1:{self.num_vars + 1}")
        return And(*(Or(*(variables[l - 1] if l > 0 else Not(variables[-l - 1]) for l in c)) for c in self.clauses))

    def is_satisfiable(self) -> bool:
        return satisfiable(self.to_sympy()) is not False

    def evaluate(self, assignment: Dict[int, bool]) -> bool:
        return all(any(assignment[abs(l)] == (l > 0) for l in c) for c in self.clauses)


def literal_item(literal: int) -> int:
    """Item of a literal: y_i is item 2i-1 and not-y_i is item 2i."""
    v = abs(literal)
    return 2 * v - 1 if literal > 0 else 2 * v


def special_item(formula: CnfFormula) -> int:
    return 2 * formula.num_vars + 1


def from_3sat(formula: CnfFormula) -> AdditiveProfile:
    """
    Clause and variable agents over literal items plus one special item.

    Unit clauses are first eliminated with ``CnfFormula.preprocess``. Agents
    1..m' are the clauses, then one agent per variable. Every agent values the
    special item at 1; a clause agent values its literals at 1, a variable
    agent values both of its literals at 1. The formula is satisfiable iff an
    agreeable set of (m + 1) / 2 items exists.

    Args:
        formula (CnfFormula): Source formula.

    Returns:
        AdditiveProfile: m' + n' agents over 2n' + 1 items.
    """
    formula = formula.preprocess()
    n = formula.num_vars
    m = 2 * n + 1
    a = special_item(formula)
    rows = []
    for clause in formula.clauses:
        row = [0] * m
        row[a - 1] = 1
        for lit in clause:
            row[literal_item(lit) - 1] = 1
        rows.append(row)
    for v in range(1, n + 1):
        row = [0] * m
        row[a - 1] = 1
        row[literal_item(v) - 1] = 1
        row[literal_item(-v) - 1] = 1
        rows.append(row)
    return AdditiveProfile.from_matrix(rows)


def assignment_from_agreeable(formula: CnfFormula, items: ItemSet) -> Dict[int, bool]:
    """
    Satisfying assignment from an agreeable set of n' + 1 items of ``from_3sat(formula)``.

    The special item is swapped in if missing (it is every agent's top item),
    then each variable takes the value of its literal in the set.
    """
    formula = formula.preprocess()
    n = formula.num_vars
    a = special_item(formula)
    if len(items) != n + 1:
        raise ValueError(f"expected {n + 1} items, got {len(items)}")
    members = list(items)
    if a not in items:
        members = members[1:] + [a]
    chosen = set(members)
    assignment = {}
    for v in range(1, n + 1):
        positive, negative = literal_item(v) in chosen, literal_item(-v) in chosen
        if positive == negative:
            raise ValueError(f"set does not pick exactly one literal of variable {v}")
        assignment[v] = positive
    return assignment


@attrs.frozen
class SetCoverInstance:
    universe: tuple = attrs.field(converter=lambda u: tuple(sorted(set(u))))
    subsets: tuple = attrs.field(converter=lambda c: tuple(frozenset(s) for s in c))

    @subsets.validator
    def _within_universe(self, attribute, value):
        ground = set(self.universe)
        for index, subset in enumerate(value, start=1):
            if not subset <= ground:
                raise ValueError(f"subset {index} has elements outside the universe: {sorted(subset - ground)}")

    @classmethod
    def from_subsets(cls, subsets: Sequence) -> "SetCoverInstance":
        subsets = [frozenset(s) for s in subsets]
        return cls(frozenset().union(*subsets), subsets)

    def degree(self, element) -> int:
        return sum(1 for s in self.subsets if element in s)

    def is_cover(self, indices) -> bool:
        covered = set().union(*(self.subsets[i - 1] for i in indices))
        return covered >= set(self.universe)


def min_set_cover_size(instance: SetCoverInstance) -> Optional[int]:
    """Exhaustive minimum number of subsets covering the universe; None if there is none."""
    count = len(instance.subsets)
    for size in range(0, count + 1):
        for chosen in combinations(range(1, count + 1), size):
            if instance.is_cover(chosen):
                return size
    return None


def from_setcover(instance: SetCoverInstance) -> AdditiveProfile:
    """
    One agent per element, one item per subset plus a special item t (the last one).

    Agent a values t at deg(a) - 1 and each subset containing a at 1. The
    minimum agreeable set has exactly one more item than a minimum cover.

    Raises:
        ValueError: Some element lies in fewer than two subsets.
    """
    if not instance.universe:
        raise ValueError("set cover universe is empty")
    rows = []
    for element in instance.universe:
        degree = instance.degree(element)
        if degree < 2:
            raise ValueError(f"element {element} lies in {degree} subset(s); at least 2 are required")
        rows.append([1 if element in s else 0 for s in instance.subsets] + [degree - 1])
    return AdditiveProfile.from_matrix(rows)


def cover_from_agreeable(instance: SetCoverInstance, items: ItemSet) -> List[int]:
    """Subset indices of an agreeable set without t; raises if they do not cover the universe."""
    t = len(instance.subsets) + 1
    chosen = [x for x in items if x != t]
    if not instance.is_cover(chosen):
        raise ValueError(f"subsets {chosen} do not cover the universe")
    return chosen
