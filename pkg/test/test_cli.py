import json
from pathlib import Path

import pytest
from src.cli import EXIT_ERROR, EXIT_NOT_AGREEABLE, EXIT_OK, main
from src.instance_io import parse_instance

FIXTURES = Path(__file__).parent / "fixtures"


def test_solve_prints_header_and_row(capsys):
    assert main(["solve", "--algo", "additive-dp", "--input", str(FIXTURES / "partition_1234.json")]) == EXIT_OK
    header, row = capsys.readouterr().out.splitlines()
    assert header.startswith("instance,algorithm,set,size,optimum,ratio,queries")
    assert row.startswith("partition_1234,additive-dp,1 4,2,2,1,")


def test_solve_writes_to_file(tmp_path):
    out = tmp_path / "result.csv"
    code = main(["solve", "--algo", "oracle-cover", "--input", str(FIXTURES / "planted_sixteen.json"), "--out", str(out)])
    assert code == EXIT_OK
    row = out.read_text().splitlines()[1].split(",")
    assert row[2] == "1 2 3 4"
    assert row[6] == "2"


def test_solve_kind_mismatch_is_an_error():
    assert main(["solve", "--algo", "ordinal-det", "--input", str(FIXTURES / "partition_1234.json")]) == EXIT_ERROR


def test_solve_missing_file_is_an_error(tmp_path):
    assert main(["solve", "--algo", "brute", "--input", str(tmp_path / "nope.json")]) == EXIT_ERROR


def test_check_agreeable(capsys):
    code = main(["check", "--input", str(FIXTURES / "partition_1234.json"), "--set", "1 4"])
    assert code == EXIT_OK
    assert capsys.readouterr().out.splitlines()[-1] == "agreeable"


def test_check_not_agreeable(capsys):
    code = main(["check", "--input", str(FIXTURES / "partition_1234.json"), "--set", "1 2"])
    assert code == EXIT_NOT_AGREEABLE
    assert "agent 1: 3 of 10 below half" in capsys.readouterr().out


def test_check_necessary_lists_deficits(capsys):
    code = main(["check", "--input", str(FIXTURES / "opposite_five.json"), "--set", "1 2 3", "--necessary"])
    assert code == EXIT_NOT_AGREEABLE
    out = capsys.readouterr().out
    assert "prefix 1: short by 1/2" in out


def test_check_planted(capsys):
    assert main(["check", "--input", str(FIXTURES / "planted_sixteen.json"), "--set", "1"]) == EXIT_OK


def test_check_rejects_bad_items():
    assert main(["check", "--input", str(FIXTURES / "opposite_five.json"), "--set", "9"]) == EXIT_ERROR


@pytest.mark.parametrize(
    "args, kind",
    [
        (["random-additive", "--m", "5", "--n", "2", "--max-u", "4", "--seed", "3"], "additive"),
        (["random-ordinal", "--m", "6", "--n", "3"], "ordinal"),
        (["opposite-ordinal", "--m", "6"], "ordinal"),
        (["planted", "--m", "16", "--planted", "3"], "oracle-planted"),
        (["planted", "--m", "16", "--planted", ""], "oracle-planted"),
        (["planted", "--m", "64", "--seed", "2"], "oracle-planted"),
        (["from-partition", "--input", str(FIXTURES / "partition_small.txt"), "--pad"], "additive"),
        (["from-3sat", "--input", str(FIXTURES / "formula_small.cnf")], "additive"),
        (["from-3sat", "--vars", "3", "--clauses", "2", "--seed", "1"], "additive"),
        (["from-setcover", "--input", str(FIXTURES / "setcover_small.txt")], "additive"),
        (["from-setcover", "--universe", "3", "--subsets", "4"], "additive"),
    ],
)
def test_gen(tmp_path, args, kind):
    out = tmp_path / "instance.json"
    assert main(["gen", *args, "--out", str(out)]) == EXIT_OK
    assert json.loads(out.read_text())["kind"] == kind
    parse_instance(out.read_bytes())


def test_gen_from_partition_padding(tmp_path):
    out = tmp_path / "padded.json"
    main(["gen", "from-partition", "--input", str(FIXTURES / "partition_small.txt"), "--pad", "--out", str(out)])
    profile = parse_instance(out.read_bytes())
    assert profile.m == 6
    assert [int(u) for u in profile.utilities[0]] == [1, 1, 2, 0, 0, 0]


def test_gen_then_solve(tmp_path, capsys):
    out = tmp_path / "sat.json"
    main(["gen", "from-3sat", "--input", str(FIXTURES / "formula_small.cnf"), "--out", str(out)])
    assert main(["solve", "--algo", "brute", "--input", str(out)]) == EXIT_OK
    row = capsys.readouterr().out.splitlines()[1].split(",")
    assert row[3] == "3"


def test_bench(tmp_path):
    out = tmp_path / "bench.csv"
    assert main(["bench", "--config", str(FIXTURES / "bench_additive.json"), "--out", str(out)]) == EXIT_OK
    assert len(out.read_text().splitlines()) == 7


def test_bench_kind_mismatch(tmp_path):
    config = tmp_path / "bench.json"
    config.write_text(
        json.dumps(
            {"algorithms": ["oracle-cover"], "instances": [{"generator": "opposite-ordinal", "m": 4}]}
        )
    )
    assert main(["bench", "--config", str(config)]) == EXIT_ERROR


def test_verbosity_flag(capsys):
    assert main(["-vv", "check", "--input", str(FIXTURES / "partition_1234.json"), "--set", "2 3"]) == EXIT_OK
