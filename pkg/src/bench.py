"""Benchmark runner: every (instance, algorithm) cell solved, audited and tabled.

A bench config is a JSON object::

    {
     "algorithms": ["additive-dp", "additive-greedy", "brute"],
     "instances": [
      {"path": "fixtures/two_agents.json"},
      {"id": "rand", "generator": "random-additive", "m": 8, "n": 2, "max_u": 9, "seed": 1},
      {"generator": "planted", "m": 32, "planted": [5]}
     ],
     "seed": 0,
     "epsilon": "1",
     "workers": 1,
     "optimum": true
    }

Relative paths are resolved against the config file's directory.
"""

import json
import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import attrs
import pandas as pd

from .covering import as_epsilon
from .errors import CapExceededError
from .finder import audit
from .generators import gen_opposite_ordinal, gen_random_additive, gen_random_ordinal
from .instance import ItemSet
from .instance_io import parse_instance_file
from .oracles.planted import PlantedOracle, lower_bound_planted_size, random_planted_oracle
from .solvers.bruteforce import minimum_size
from .solvers.registry import make_solver
from .solvers.solver import ORACLE, instance_kind

RESULT_COLUMNS = (
    "instance",
    "algorithm",
    "set",
    "size",
    "optimum",
    "ratio",
    "queries",
    "wall_time",
    "seed",
    "agreeable",
    "chunks",
    "resamples",
)


@attrs.frozen
class SolveResult:
    instance: str
    algorithm: str
    items: ItemSet
    optimum: Optional[int] = None
    queries: Optional[int] = None
    wall_time: float = 0.0
    seed: Optional[int] = None
    agreeable: Optional[bool] = None
    chunks: Optional[int] = None
    resamples: Optional[int] = None

    @property
    def size(self) -> int:
        return len(self.items)

    @property
    def ratio(self) -> Optional[float]:
        """size / optimum; None when the optimum is unknown."""
        if self.optimum is None:
            return None
        if self.optimum == 0:
            return 1.0 if self.size == 0 else math.inf
        return self.size / self.optimum

    def row(self) -> dict:
        """Cells in column order, already rendered; None marks an empty cell."""
        ratio = self.ratio
        return {
            "instance": self.instance,
            "algorithm": self.algorithm,
            "set": self.items.render(),
            "size": str(self.size),
            "optimum": None if self.optimum is None else str(self.optimum),
            "ratio": None if ratio is None else f"{ratio:.6g}",
            "queries": None if self.queries is None else str(self.queries),
            "wall_time": f"{self.wall_time:.6f}",
            "seed": None if self.seed is None else str(self.seed),
            "agreeable": None if self.agreeable is None else str(self.agreeable).lower(),
            "chunks": None if self.chunks is None else str(self.chunks),
            "resamples": None if self.resamples is None else str(self.resamples),
        }


def results_table(results: Sequence[SolveResult]) -> pd.DataFrame:
    return pd.DataFrame([r.row() for r in results], columns=list(RESULT_COLUMNS), dtype=object)


def table_csv(results: Sequence[SolveResult], header: bool = True) -> str:
    return results_table(results).to_csv(index=False, header=header, na_rep="", lineterminator="\n")


def emit_result(result: SolveResult) -> str:
    """One CSV line, no header, no trailing newline."""
    return table_csv([result], header=False).rstrip("\n")


def result_header() -> str:
    return ",".join(RESULT_COLUMNS)


@attrs.frozen
class BenchReport:
    results: tuple

    @property
    def all_agreeable(self) -> bool:
        return all(r.agreeable for r in self.results)

    @property
    def failures(self) -> List[SolveResult]:
        return [r for r in self.results if not r.agreeable]

    def table(self) -> pd.DataFrame:
        return results_table(self.results)

    def to_csv(self) -> str:
        return table_csv(self.results)


class BenchRunner:
    def __init__(self, **kwargs):
        """Runs algorithms over instances and audits every output.

        Keyword Args:
            seed (int): Seed handed to randomized solvers. Defaults to 0.
            epsilon: Block-size trade-off for oracle-cover. Defaults to 1.
            resample_cap (int): Draw budget for ordinal-rand; None uses the configured cap.
            workers (int): Cells solved concurrently. Defaults to 1.
            optimum (bool): Compute optimum sizes for the ratio column. Defaults to True.
            optimum_max_items (int): Largest m for which an exhaustive optimum is attempted. Defaults to 16.
        """
        self.seed = kwargs.get("seed", 0)
        self.epsilon = as_epsilon(kwargs.get("epsilon", 1))
        self.resample_cap = kwargs.get("resample_cap", None)
        self.workers = kwargs.get("workers", 1)
        self.optimum = kwargs.get("optimum", True)
        self.optimum_max_items = kwargs.get("optimum_max_items", 16)
        if self.workers < 1:
            raise ValueError(f"workers must be at least 1, got {self.workers}")

    def solver(self, algorithm: str):
        return make_solver(algorithm, seed=self.seed, epsilon=self.epsilon, resample_cap=self.resample_cap)

    def optimum_size(self, instance) -> Optional[int]:
        """Known optimum: planted oracles know theirs, small profiles are searched exhaustively."""
        if not self.optimum:
            return None
        if isinstance(instance, PlantedOracle):
            return instance.optimum_size()
        if instance_kind(instance) == ORACLE or instance.m > self.optimum_max_items:
            return None
        try:
            return minimum_size(instance)
        except CapExceededError as err:
            logging.warning(f"optimum skipped: {err}")
            return None

    def run_cell(self, instance_id: str, instance, algorithm: str, optimum: Optional[int] = None) -> SolveResult:
        """Solve one instance with one algorithm and audit the output."""
        solver = self.solver(algorithm)
        start = time.perf_counter()
        selection = solver.solve(instance)
        wall_time = time.perf_counter() - start
        agreeable = audit(instance, selection)
        if not agreeable:
            logging.error(f"{algorithm} on {instance_id} returned a set that is not agreeable: {selection.render()}")
        logging.info(f"{instance_id} x {algorithm}: {len(selection)} items in {wall_time:.3f}s")
        return SolveResult(
            instance=instance_id,
            algorithm=algorithm,
            items=selection,
            optimum=optimum,
            queries=solver.stats.get("queries"),
            wall_time=wall_time,
            seed=self.seed,
            agreeable=agreeable,
            chunks=solver.stats.get("chunks"),
            resamples=solver.stats.get("resamples"),
        )

    def run(self, instances: Sequence[Tuple[str, object]], algorithms: Sequence[str]) -> BenchReport:
        """
        Solves every (instance, algorithm) cell.

        Kinds are checked for every cell before anything runs. Rows come back
        ordered by instance, then algorithm, whatever the completion order.

        Args:
            instances (list): (instance id, instance) pairs.
            algorithms (list): Algorithm ids.

        Returns:
            BenchReport: One SolveResult per cell.

        Raises:
            ValueError: Unknown algorithm id.
            KindMismatchError: An algorithm does not accept one of the instances.
        """
        for _, instance in instances:
            for algorithm in algorithms:
                self.solver(algorithm).check_kind(instance)

        # ids may repeat, so optima are kept by position
        optima = [self.optimum_size(instance) for _, instance in instances]
        cells = [
            (position, instance_id, instance, algorithm)
            for position, (instance_id, instance) in enumerate(instances)
            for algorithm in algorithms
        ]

        def solve_cell(cell):
            position, instance_id, instance, algorithm = cell
            return self.run_cell(instance_id, instance, algorithm, optima[position])

        if self.workers == 1:
            results = [solve_cell(cell) for cell in cells]
        else:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                results = list(pool.map(solve_cell, cells))
        return BenchReport(tuple(results))


def _planted_from_entry(entry: dict) -> PlantedOracle:
    m = entry["m"]
    if "planted" in entry:
        return PlantedOracle(m, ItemSet(m, entry["planted"]))
    if "size" in entry:
        return random_planted_oracle(m, entry["size"], entry.get("seed", 0))
    return random_planted_oracle(m, lower_bound_planted_size(m, entry.get("c", 1.0)), entry.get("seed", 0))


_GENERATORS = {
    "random-additive": lambda e: gen_random_additive(e["m"], e["n"], e["max_u"], e.get("seed", 0)),
    "random-ordinal": lambda e: gen_random_ordinal(e["m"], e["n"], e.get("seed", 0)),
    "opposite-ordinal": lambda e: gen_opposite_ordinal(e["m"]),
    "planted": _planted_from_entry,
}


def instance_from_entry(entry: dict, index: int, base_dir: Path = None) -> Tuple[str, object]:
    """(instance id, instance) for one ``instances`` entry of a bench config."""
    if "path" in entry:
        path = Path(entry["path"])
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        loaded = parse_instance_file(path.read_bytes())
        return entry.get("id") or loaded.name or path.stem, loaded.instance
    generator = entry.get("generator")
    if generator not in _GENERATORS:
        raise ValueError(f"instance {index}: unknown generator {generator!r}, expected one of {', '.join(_GENERATORS)}")
    try:
        instance = _GENERATORS[generator](entry)
    except KeyError as err:
        raise ValueError(f"instance {index}: generator '{generator}' needs field {err}") from None
    return entry.get("id") or f"{generator}-{index}", instance


def run_bench(config: dict, base_dir: Path = None) -> BenchReport:
    """
    Runs a bench config.

    Args:
        config (dict): ``algorithms`` and ``instances`` plus optional runner settings.
        base_dir (Path, optional): Directory relative instance paths are resolved against.

    Returns:
        BenchReport: The audited results; ``all_agreeable`` is the exit verdict.
    """
    algorithms = config.get("algorithms")
    entries = config.get("instances")
    if not algorithms or not entries:
        raise ValueError("bench config needs nonempty 'algorithms' and 'instances'")
    instances = [instance_from_entry(entry, index, base_dir) for index, entry in enumerate(entries, start=1)]
    settings = {key: config[key] for key in ("seed", "epsilon", "resample_cap", "workers", "optimum") if key in config}
    runner = BenchRunner(**settings)
    report = runner.run(instances, algorithms)
    if not report.all_agreeable:
        logging.error(f"{len(report.failures)} of {len(report.results)} outputs failed the agreeability audit")
    return report


def load_bench_config(path) -> dict:
    path = Path(path)
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as err:
        raise ValueError(f"{path}: line {err.lineno}: {err.msg}") from None
