"""Command-line entry point: solve, check, gen and bench."""

import argparse
import logging
import sys
from pathlib import Path

from .agreeability import is_agreeable_oracle, necessary_agreeability_deficits, unsatisfied_agents
from .bench import BenchRunner, load_bench_config, result_header, emit_result, run_bench
from .errors import CapExceededError, KindMismatchError, ParseError, ResampleBudgetError
from .generators import (
    gen_opposite_ordinal,
    gen_random_3sat,
    gen_random_additive,
    gen_random_ordinal,
    gen_random_setcover,
)
from .instance import ItemSet
from .instance_io import parse_dimacs, parse_instance_file, parse_partition_text, parse_setcover_text, emit_instance
from .oracles.planted import PlantedOracle, lower_bound_planted_size, random_planted_oracle
from .reductions import balanced_from_2partition, from_3sat, from_partition, from_setcover
from .solvers.registry import ALGORITHMS
from .solvers.solver import ADDITIVE, ORDINAL, instance_kind

EXIT_OK = 0
EXIT_NOT_AGREEABLE = 1
EXIT_ERROR = 2


def _read_instance(path: str):
    return parse_instance_file(Path(path).read_bytes()).instance


def _write(text: str, out: str = None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def parse_set(text: str, m: int) -> ItemSet:
    try:
        members = [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise ValueError(f"--set must list item indices, got {text!r}") from None
    return ItemSet(m, members)


def cmd_solve(args) -> int:
    instance = _read_instance(args.input)
    runner = BenchRunner(seed=args.seed, epsilon=args.epsilon, optimum=args.optimum)
    result = runner.run_cell(Path(args.input).stem, instance, args.algo, runner.optimum_size(instance))
    _write(f"{result_header()}\n{emit_result(result)}\n", args.out)
    return EXIT_OK if result.agreeable else EXIT_NOT_AGREEABLE


def cmd_check(args) -> int:
    instance = _read_instance(args.input)
    kind = instance_kind(instance)
    items = parse_set(args.set, instance.m)
    lines = []
    if kind == ORDINAL:
        failing = 0
        for agent in instance.agents.indices:
            deficits = necessary_agreeability_deficits(instance.ranking(agent), items)
            failing += bool(deficits)
            lines.append(f"agent {agent}: {'ok' if not deficits else 'not necessarily agreeable'}")
            if args.necessary:
                lines.extend(f"  prefix {k}: short by {gap}" for k, gap in deficits)
        agreeable = failing == 0
    elif kind == ADDITIVE:
        unhappy = set(unsatisfied_agents(instance, items))
        for agent in instance.agents.indices:
            value, total = instance.value(agent, items), instance.total(agent)
            lines.append(f"agent {agent}: {value} of {total} {'ok' if agent not in unhappy else 'below half'}")
        agreeable = not unhappy
        if args.necessary:
            logging.warning("--necessary only applies to ordinal instances; ignored")
    else:
        oracle = instance.fresh()
        agreeable = is_agreeable_oracle(oracle, items)
        lines.append(f"agent 1: {'ok' if agreeable else 'prefers the complement'}")
    lines.append("agreeable" if agreeable else "not agreeable")
    print("\n".join(lines))
    return EXIT_OK if agreeable else EXIT_NOT_AGREEABLE


def _planted_oracle(args) -> PlantedOracle:
    if args.planted is not None:
        return PlantedOracle(args.m, parse_set(args.planted, args.m))
    size = args.size if args.size is not None else lower_bound_planted_size(args.m, args.c)
    return random_planted_oracle(args.m, size, args.seed)


def cmd_gen(args) -> int:
    which = args.generator
    if which == "random-additive":
        instance = gen_random_additive(args.m, args.n, args.max_u, args.seed)
        provenance = f"random-additive m={args.m} n={args.n} max_u={args.max_u} seed={args.seed}"
    elif which == "random-ordinal":
        instance = gen_random_ordinal(args.m, args.n, args.seed)
        provenance = f"random-ordinal m={args.m} n={args.n} seed={args.seed}"
    elif which == "opposite-ordinal":
        instance = gen_opposite_ordinal(args.m)
        provenance = f"opposite-ordinal m={args.m}"
    elif which == "planted":
        instance = _planted_oracle(args)
        provenance = f"planted m={args.m} seed={args.seed}"
    elif which == "from-partition":
        source = parse_partition_text(Path(args.input).read_text(encoding="utf-8"))
        if args.pad:
            source = balanced_from_2partition(source)
        instance = from_partition(source)
        provenance = f"from-partition {Path(args.input).name}{' padded' if args.pad else ''}"
    elif which == "from-3sat":
        if args.input:
            formula = parse_dimacs(Path(args.input).read_text(encoding="utf-8"))
            provenance = f"from-3sat {Path(args.input).name}"
        else:
            formula = gen_random_3sat(args.vars, args.clauses, args.seed)
            provenance = f"from-3sat random vars={args.vars} clauses={args.clauses} seed={args.seed}"
        instance = from_3sat(formula)
    else:
        if args.input:
            source = parse_setcover_text(Path(args.input).read_text(encoding="utf-8"))
            provenance = f"from-setcover {Path(args.input).name}"
        else:
            source = gen_random_setcover(args.universe, args.subsets, args.seed)
            provenance = f"from-setcover random universe={args.universe} subsets={args.subsets} seed={args.seed}"
        instance = from_setcover(source)
    _write(emit_instance(instance, name=args.name, provenance=provenance), args.out)
    return EXIT_OK


def cmd_bench(args) -> int:
    config = load_bench_config(args.config)
    report = run_bench(config, base_dir=Path(args.config).parent)
    _write(report.to_csv(), args.out)
    return EXIT_OK if report.all_agreeable else EXIT_NOT_AGREEABLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="agreeable", description="Small agreeable item sets.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="run one algorithm on one instance file")
    solve.add_argument("--algo", required=True, choices=list(ALGORITHMS))
    solve.add_argument("--input", required=True)
    solve.add_argument("--seed", type=int, default=0)
    solve.add_argument("--epsilon", default="1")
    solve.add_argument("--no-optimum", dest="optimum", action="store_false", help="skip the exhaustive optimum")
    solve.add_argument("--out")
    solve.set_defaults(handler=cmd_solve)

    check = commands.add_parser("check", help="check whether a set is agreeable")
    check.add_argument("--input", required=True)
    check.add_argument("--set", required=True, help='space-separated items, e.g. "1 3 4"')
    check.add_argument("--necessary", action="store_true", help="list violated prefixes (ordinal instances)")
    check.set_defaults(handler=cmd_check)

    gen = commands.add_parser("gen", help="write an instance file")
    generators = gen.add_subparsers(dest="generator", required=True)
    for name in ("random-additive", "random-ordinal", "opposite-ordinal", "planted",
                 "from-partition", "from-3sat", "from-setcover"):
        sub = generators.add_parser(name)
        sub.add_argument("--seed", type=int, default=0)
        sub.add_argument("--name")
        sub.add_argument("--out")
    generators.choices["random-additive"].add_argument("--m", type=int, required=True)
    generators.choices["random-additive"].add_argument("--n", type=int, required=True)
    generators.choices["random-additive"].add_argument("--max-u", dest="max_u", type=int, required=True)
    generators.choices["random-ordinal"].add_argument("--m", type=int, required=True)
    generators.choices["random-ordinal"].add_argument("--n", type=int, required=True)
    generators.choices["opposite-ordinal"].add_argument("--m", type=int, required=True)
    planted = generators.choices["planted"]
    planted.add_argument("--m", type=int, required=True)
    planted.add_argument("--planted", help='planted set, e.g. "3"; empty string for the bare threshold')
    planted.add_argument("--size", type=int, help="size of a random planted set")
    planted.add_argument("--c", type=float, default=1.0, help="constant of the default planted size")
    generators.choices["from-partition"].add_argument("--input", required=True)
    generators.choices["from-partition"].add_argument("--pad", action="store_true", help="pad a 2-Partition instance with zeros")
    sat = generators.choices["from-3sat"]
    sat.add_argument("--input", help="DIMACS CNF file")
    sat.add_argument("--vars", type=int, default=3)
    sat.add_argument("--clauses", type=int, default=4)
    cover = generators.choices["from-setcover"]
    cover.add_argument("--input", help="one subset per line")
    cover.add_argument("--universe", type=int, default=4)
    cover.add_argument("--subsets", type=int, default=5)
    gen.set_defaults(handler=cmd_gen)

    bench = commands.add_parser("bench", help="run a bench config and write the result table")
    bench.add_argument("--config", required=True)
    bench.add_argument("--out")
    bench.set_defaults(handler=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(message)s")
    try:
        return args.handler(args)
    except (ParseError, CapExceededError, KindMismatchError, ResampleBudgetError, ValueError, OSError) as err:
        logging.error(str(err))
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
