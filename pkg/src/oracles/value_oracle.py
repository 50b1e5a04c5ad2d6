import threading
from abc import ABC, abstractmethod
from concurrent.futures import Future
from fractions import Fraction
from typing import NamedTuple

from ..instance import Agents, Items, ItemSet


class QueryReport(NamedTuple):
    total: int
    distinct: int


class QueryAccountant:
    """Counts oracle queries for a single run.

    ``total`` counts every query issued, ``distinct`` counts cache misses,
    i.e. evaluator invocations. Both only ever grow until ``reset``.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self.total = 0
        self.distinct = 0

    def record(self, miss: bool):
        with self._lock:
            self.total += 1
            if miss:
                self.distinct += 1

    def reset(self):
        with self._lock:
            self.total = 0
            self.distinct = 0

    def report(self) -> QueryReport:
        with self._lock:
            return QueryReport(self.total, self.distinct)


class ValueOracle(ABC):
    """Black-box set utilities u_i: subsets -> [0, 1], queried through an accountant.

    Subclasses implement ``evaluate``; callers go through ``query``, which
    caches answers and counts every call. Concurrent queries of one key run
    ``evaluate`` once, so ``distinct`` always equals the number of evaluator
    calls. Monotonicity of the utilities is a caller contract that no method
    checks.
    """

    def __init__(self, m: int, n: int = 1):
        self.items = Items(m)
        self.agents = Agents(n)
        self.accountant = QueryAccountant()
        self._cache = {}
        self._cache_lock = threading.Lock()

    @property
    def m(self) -> int:
        return self.items.m

    @property
    def n(self) -> int:
        return self.agents.n

    @abstractmethod
    def evaluate(self, agent: int, items: ItemSet) -> Fraction:
        """
        Utility of ``agent`` for ``items``, uncached and uncounted.

        Args:
            agent (int): Agent index, 1-based.
            items (ItemSet): The queried set.

        Returns:
            Fraction: A utility in [0, 1].
        """
        pass

    @abstractmethod
    def fresh(self) -> "ValueOracle":
        """An equivalent oracle with an empty cache and a zeroed accountant."""
        pass

    def query(self, agent: int, items: ItemSet) -> Fraction:
        if items.m != self.m:
            raise ValueError(f"set over {items.m} items queried on an oracle over {self.m} items")
        if not 1 <= agent <= self.n:
            raise ValueError(f"agent {agent} outside 1..{self.n}")
        key = (agent, items.members)
        with self._cache_lock:
            pending = self._cache.get(key)
            miss = pending is None
            if miss:
                pending = Future()
                self._cache[key] = pending
        self.accountant.record(miss=miss)
        if not miss:
            return pending.result()
        # the first caller evaluates; concurrent callers wait on its future
        try:
            value = Fraction(self.evaluate(agent, items))
        except BaseException as err:
            with self._cache_lock:
                self._cache.pop(key, None)
            pending.set_exception(err)
            raise
        pending.set_result(value)
        return value

    def reset(self):
        """Clears the cache and zeroes the accountant."""
        with self._cache_lock:
            self._cache.clear()
        self.accountant.reset()


def query_report(oracle: ValueOracle) -> QueryReport:
    """(total queries, distinct queries) issued against ``oracle`` since its last reset."""
    return oracle.accountant.report()
