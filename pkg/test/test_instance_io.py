import json
from fractions import Fraction
from pathlib import Path

import pytest
from src.errors import ParseError
from src.generators import (
    gen_opposite_ordinal,
    gen_random_3sat,
    gen_random_additive,
    gen_random_ordinal,
    gen_random_setcover,
)
from src.instance import AdditiveProfile, ItemSet, OrdinalProfile
from src.instance_io import (
    emit_dimacs,
    emit_instance,
    emit_partition_text,
    emit_setcover_text,
    parse_dimacs,
    parse_instance,
    parse_instance_file,
    parse_partition_text,
    parse_setcover_text,
)
from src.oracles.planted import PlantedOracle
from src.reductions import CnfFormula

FIXTURES = Path(__file__).parent / "fixtures"


def test_minimal_additive_file():
    profile = parse_instance('{"version": 1, "kind": "additive", "utilities": [[1, 2]]}')
    assert isinstance(profile, AdditiveProfile)
    assert (profile.n, profile.m) == (1, 2)
    assert profile.total(1) == 3


def test_planted_file():
    oracle = parse_instance(b'{"version": 1, "kind": "oracle-planted", "m": 4, "planted": [1]}')
    assert oracle == PlantedOracle(4, ItemSet(4, [1]))


def test_kind_mismatch_names_the_field():
    with pytest.raises(ParseError) as err:
        parse_instance('{"version": 1, "kind": "additive", "rankings": [[1, 2]]}')
    assert err.value.field == "rankings"


def test_syntax_error_names_the_line():
    with pytest.raises(ParseError) as err:
        parse_instance('{"version": 1,\n "kind": "ordinal",\n "rankings": [[1, 2]\n}')
    assert err.value.line == 4


@pytest.mark.parametrize(
    "document, field",
    [
        ({"version": 1, "kind": "ordinal", "rankings": [[1, 1, 3]]}, "rankings[0]"),
        ({"version": 1, "kind": "additive", "utilities": [[1, -2]]}, "utilities[0]"),
        ({"version": 1, "kind": "additive", "utilities": [[1, 0.5]]}, "utilities[0][1]"),
        ({"version": 1, "kind": "oracle-planted", "m": 4, "planted": [5]}, "planted"),
        ({"version": 1, "kind": "oracle-planted", "m": 0, "planted": []}, "m"),
        ({"version": 2, "kind": "ordinal", "rankings": [[1]]}, "version"),
        ({"version": 1, "kind": "cardinal"}, "kind"),
        ({"version": 1, "kind": "ordinal"}, "rankings"),
    ],
)
def test_validation_errors_name_the_field(document, field):
    with pytest.raises(ParseError) as err:
        parse_instance(json.dumps(document))
    assert err.value.field == field


def test_metadata_is_kept():
    loaded = parse_instance_file((FIXTURES / "partition_1234.json").read_bytes())
    assert loaded.kind == "additive"
    assert loaded.name == "partition_1234"
    assert loaded.provenance == "from-partition 1 2 3 4"


@pytest.mark.parametrize("path", sorted(FIXTURES.glob("*.json")), ids=lambda p: p.name)
def test_fixture_round_trip(path):
    if path.name.startswith("bench"):
        pytest.skip("bench config, not an instance file")
    loaded = parse_instance_file(path.read_bytes())
    again = parse_instance_file(emit_instance(loaded.instance, loaded.name, loaded.provenance))
    assert again == loaded


@pytest.mark.parametrize(
    "instance",
    [
        AdditiveProfile.from_matrix([["1/2", 3], [0, "7/3"]]),
        gen_random_additive(5, 3, 9, seed=2),
        gen_random_ordinal(7, 3, seed=2),
        gen_opposite_ordinal(4),
        PlantedOracle(9),
        PlantedOracle(9, ItemSet(9, [2, 7])),
    ],
)
def test_emit_then_parse(instance):
    assert parse_instance(emit_instance(instance)) == instance


def test_rationals_are_written_as_strings():
    document = json.loads(emit_instance(AdditiveProfile.from_matrix([["1/2", 3]])))
    assert document["utilities"] == [["1/2", 3]]
    assert parse_instance(json.dumps(document)).utility(1, 1) == Fraction(1, 2)


def test_partition_text():
    instance = parse_partition_text((FIXTURES / "partition_small.txt").read_text())
    assert instance.values == (1, 1, 2)
    assert parse_partition_text(emit_partition_text(instance)) == instance
    with pytest.raises(ParseError) as err:
        parse_partition_text("1\nx\n")
    assert err.value.line == 2


def test_setcover_text():
    instance = parse_setcover_text((FIXTURES / "setcover_small.txt").read_text())
    assert instance.universe == (1, 2)
    assert instance.subsets == (frozenset({1}), frozenset({2}), frozenset({1, 2}))
    assert parse_setcover_text(emit_setcover_text(instance)) == instance


def test_dimacs():
    formula = parse_dimacs((FIXTURES / "formula_small.cnf").read_text())
    assert formula == CnfFormula(2, ((1, 2), (-1, 2)))
    assert parse_dimacs(emit_dimacs(formula)) == formula


def test_dimacs_stops_at_percent_line():
    formula = parse_dimacs("p cnf 2 1\n1 -2 0\n%\n0\n")
    assert formula.clauses == ((1, -2),)


@pytest.mark.parametrize(
    "text",
    ["1 2 0\n", "p cnf 2 2\n1 2 0\n", "p cnf 2 1\n1 3 0\n", "p dnf 2 1\n1 0\n"],
)
def test_dimacs_errors(text):
    with pytest.raises(ParseError):
        parse_dimacs(text)


def test_random_additive_is_seeded():
    assert gen_random_additive(3, 1, 0, seed=7).utilities == ((0, 0, 0),)
    assert gen_random_additive(6, 3, 9, seed=4) == gen_random_additive(6, 3, 9, seed=4)
    with pytest.raises(ValueError):
        gen_random_additive(3, 1, -1, seed=0)


def test_random_ordinal_is_valid():
    profile = gen_random_ordinal(12, 4, seed=1)
    assert all(sorted(r) == list(range(1, 13)) for r in profile.rankings)
    assert profile == gen_random_ordinal(12, 4, seed=1)
    assert isinstance(profile, OrdinalProfile)


def test_random_3sat_shape():
    formula = gen_random_3sat(5, 8, seed=3)
    assert len(formula.clauses) == 8
    assert all(len({abs(l) for l in c}) == 3 for c in formula.clauses)


def test_random_setcover_covers_every_element_twice():
    instance = gen_random_setcover(6, 4, seed=5)
    assert all(instance.degree(e) >= 2 for e in instance.universe)
