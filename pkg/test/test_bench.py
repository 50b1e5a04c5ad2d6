import math
from pathlib import Path

import pytest
from src.bench import (
    RESULT_COLUMNS,
    BenchRunner,
    SolveResult,
    emit_result,
    load_bench_config,
    result_header,
    results_table,
    run_bench,
)
from src.errors import KindMismatchError
from src.finder import AgreeableSetFinder, audit
from src.generators import gen_opposite_ordinal, gen_random_additive
from src.instance import AdditiveProfile, ItemSet
from src.instance_io import emit_instance
from src.oracles.planted import PlantedOracle
from src.oracles.value_oracle import query_report
from src.solvers.additive import GreedyCoverSolver
from src.solvers.registry import ALGORITHMS, make_solver

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def profile():
    return gen_random_additive(8, 2, 9, seed=1)


def test_registry_lists_every_algorithm():
    assert set(ALGORITHMS) == {
        "ordinal-rand",
        "ordinal-det",
        "oracle-cover",
        "additive-dp",
        "additive-greedy",
        "additive-greedy-pruned",
        "brute",
    }
    with pytest.raises(ValueError):
        make_solver("simplex")


def test_make_solver_passes_options():
    assert make_solver("ordinal-rand", seed=5, resample_cap=3).seed == 5
    assert make_solver("oracle-cover", epsilon=2).epsilon == 2


def test_finder_requires_solver_and_instance(profile):
    finder = AgreeableSetFinder()
    with pytest.raises(ValueError):
        finder.solve()
    finder.set_solver(GreedyCoverSolver())
    with pytest.raises(ValueError):
        finder.solve()
    finder.load_instance(profile)
    selection = finder.solve()
    assert finder.agreeable
    assert finder.result == selection


def test_finder_checks_kinds():
    finder = AgreeableSetFinder(gen_opposite_ordinal(4))
    with pytest.raises(KindMismatchError):
        finder.set_solver(GreedyCoverSolver())


def test_audit_uses_a_fresh_oracle():
    oracle = PlantedOracle(8, ItemSet(8, [3]))
    assert audit(oracle, ItemSet(8, [3]))
    assert not audit(oracle, ItemSet(8, [1]))
    assert tuple(query_report(oracle)) == (0, 0)


def test_audit_on_ordinal_profiles():
    profile = gen_opposite_ordinal(5)
    assert audit(profile, ItemSet(5, [1, 3, 5]))
    assert not audit(profile, ItemSet(5, [1, 2, 3]))


def test_three_algorithms_on_one_instance(profile):
    report = BenchRunner().run([("rand", profile)], ["additive-dp", "additive-greedy", "brute"])
    sizes = {r.algorithm: r.size for r in report.results}
    assert len(report.results) == 3
    assert report.all_agreeable
    assert sizes["brute"] == sizes["additive-dp"] <= sizes["additive-greedy"]
    assert all(r.optimum == sizes["brute"] for r in report.results)


def test_kind_mismatch_is_raised_before_running():
    with pytest.raises(KindMismatchError):
        BenchRunner().run([("opp", gen_opposite_ordinal(6))], ["ordinal-det", "oracle-cover"])


def test_unknown_algorithm():
    with pytest.raises(ValueError):
        BenchRunner().run([("opp", gen_opposite_ordinal(6))], ["simplex"])


def test_rows_keep_their_order_with_workers():
    instances = [(f"r{seed}", gen_random_additive(6, 2, 5, seed=seed)) for seed in range(4)]
    algorithms = ["additive-greedy", "additive-dp"]
    report = BenchRunner(workers=3).run(instances, algorithms)
    order = [(r.instance, r.algorithm) for r in report.results]
    assert order == [(i, a) for i, _ in instances for a in algorithms]


def test_planted_suite():
    instances = [(f"planted{m}", PlantedOracle(m, ItemSet(m, [m]))) for m in (16, 32, 64)]
    report = BenchRunner().run(instances, ["oracle-cover"])
    table = report.table()
    assert list(table["size"]) == ["4", "10", "20"]
    assert all(r.queries is not None and r.queries > 0 for r in report.results)
    assert all(r.optimum == 1 for r in report.results)


def test_randomized_rows_carry_resamples():
    report = BenchRunner(seed=3).run([("opp", gen_opposite_ordinal(30))], ["ordinal-rand", "ordinal-det"])
    rand, det = report.results
    assert rand.resamples is not None and rand.chunks is None
    assert det.chunks == 1 and det.resamples is None
    assert rand.seed == 3


def test_emit_empty_set():
    result = SolveResult(instance="zero", algorithm="brute", items=ItemSet.empty(3), optimum=0)
    fields = emit_result(result).split(",")
    assert len(fields) == len(RESULT_COLUMNS)
    assert fields[2] == ""
    assert fields[3] == "0"
    assert fields[5] == "1"


def test_emit_leaves_unknown_cells_empty():
    result = SolveResult(instance="x", algorithm="additive-greedy", items=ItemSet(4, [1, 4]))
    fields = dict(zip(RESULT_COLUMNS, emit_result(result).split(",")))
    assert fields["set"] == "1 4"
    assert fields["size"] == "2"
    assert fields["optimum"] == ""
    assert fields["ratio"] == ""
    assert fields["queries"] == ""


def test_ratio():
    assert SolveResult("x", "a", ItemSet(4, [1, 2]), optimum=1).ratio == 2
    assert SolveResult("x", "a", ItemSet(4, [1]), optimum=0).ratio == math.inf
    assert SolveResult("x", "a", ItemSet(4, [1])).ratio is None


def test_table_header():
    assert result_header() == ",".join(RESULT_COLUMNS)
    assert list(results_table([]).columns) == list(RESULT_COLUMNS)


def test_run_bench_from_fixture():
    config = load_bench_config(FIXTURES / "bench_additive.json")
    report = run_bench(config, base_dir=FIXTURES)
    csv = report.to_csv().splitlines()
    assert csv[0] == result_header()
    assert len(csv) == 1 + 2 * 3
    assert report.all_agreeable
    assert report.results[0].instance == "partition_1234"
    assert report.results[3].instance == "rand8"


def test_run_bench_generators():
    config = {
        "algorithms": ["oracle-cover", "brute"],
        "instances": [{"generator": "planted", "m": 12, "planted": [2]}, {"generator": "planted", "m": 10, "size": 1}],
    }
    report = run_bench(config)
    assert [r.instance for r in report.results] == ["planted-1", "planted-1", "planted-2", "planted-2"]
    assert report.all_agreeable


@pytest.mark.parametrize(
    "config",
    [
        {"algorithms": [], "instances": [{"generator": "opposite-ordinal", "m": 4}]},
        {"algorithms": ["brute"], "instances": [{"generator": "simplex"}]},
        {"algorithms": ["brute"], "instances": [{"generator": "random-additive", "m": 4}]},
    ],
)
def test_bad_configs(config):
    with pytest.raises(ValueError):
        run_bench(config)


def test_audit_failure_is_reported(monkeypatch, profile):
    monkeypatch.setattr(GreedyCoverSolver, "solve", lambda self, instance: ItemSet.empty(instance.m))
    report = BenchRunner(optimum=False).run([("rand", profile)], ["additive-greedy", "additive-dp"])
    assert not report.all_agreeable
    assert [r.algorithm for r in report.failures] == ["additive-greedy"]


def test_zero_profile_has_an_empty_answer():
    report = BenchRunner().run([("zero", AdditiveProfile.from_matrix([[0, 0, 0]]))], ["additive-greedy"])
    (result,) = report.results
    assert result.size == 0 and result.agreeable and result.ratio == 1.0


def test_instances_sharing_an_id_keep_their_own_optimum(tmp_path):
    for folder, row in (("a", [5, 1, 1, 1]), ("b", [1, 1, 1, 1])):
        (tmp_path / folder).mkdir()
        (tmp_path / folder / "x.json").write_text(emit_instance(AdditiveProfile.from_matrix([row])))
    config = {"algorithms": ["brute"], "instances": [{"path": "a/x.json"}, {"path": "b/x.json"}]}
    report = run_bench(config, base_dir=tmp_path)
    assert [(r.instance, r.size, r.optimum, r.ratio) for r in report.results] == [("x", 1, 1, 1.0), ("x", 2, 2, 1.0)]
