"""Instance files and source formats.

Instance files are UTF-8 JSON objects::

    {"version": 1, "kind": "additive", "utilities": [[1, 2], ["3/2", 0]]}
    {"version": 1, "kind": "ordinal", "rankings": [[1, 2, 3], [3, 2, 1]]}
    {"version": 1, "kind": "oracle-planted", "m": 4, "planted": [1]}

with optional ``"name"`` and ``"provenance"`` metadata. Rational utilities
are written as ``"p/q"`` strings, integers as JSON integers.

Source formats for the generators are plain text: one integer per line for
partitions, one subset (space-separated elements) per line for set cover,
and DIMACS CNF for formulas. Blank lines and lines starting with ``#`` (or
``c`` in DIMACS) are ignored.
"""

import json
from typing import Optional, Union

import attrs

from .errors import ParseError
from .instance import (
    AdditiveProfile,
    Agents,
    Items,
    ItemSet,
    OrdinalProfile,
    as_rational,
    validate_additive_profile,
    validate_ordinal_profile,
)
from .oracles.planted import PlantedOracle
from .reductions import CnfFormula, PartitionInstance, SetCoverInstance

FORMAT_VERSION = 1
KIND_ORDINAL = "ordinal"
KIND_ADDITIVE = "additive"
KIND_PLANTED = "oracle-planted"
KINDS = (KIND_ORDINAL, KIND_ADDITIVE, KIND_PLANTED)

_PAYLOAD_FIELDS = {
    KIND_ORDINAL: ("rankings",),
    KIND_ADDITIVE: ("utilities",),
    KIND_PLANTED: ("m", "planted"),
}


@attrs.frozen
class InstanceFile:
    instance: object
    kind: str
    version: int = FORMAT_VERSION
    name: Optional[str] = None
    provenance: Optional[str] = None


def _kind_of(instance) -> str:
    if isinstance(instance, OrdinalProfile):
        return KIND_ORDINAL
    if isinstance(instance, AdditiveProfile):
        return KIND_ADDITIVE
    if isinstance(instance, PlantedOracle):
        return KIND_PLANTED
    raise TypeError(f"no file format for {type(instance).__name__}")


def _require(document: dict, field: str):
    if field not in document:
        raise ParseError("missing", field=field)
    return document[field]


def _int_matrix(value, field: str) -> list:
    if not isinstance(value, list) or not value or not all(isinstance(row, list) for row in value):
        raise ParseError("expected a nonempty list of lists", field=field)
    rows = []
    for i, row in enumerate(value):
        for j, x in enumerate(row):
            if isinstance(x, bool) or not isinstance(x, int):
                raise ParseError(f"entry {x!r} is not an integer", field=f"{field}[{i}][{j}]")
        rows.append(row)
    return rows


def _parse_ordinal(document: dict) -> OrdinalProfile:
    rows = _int_matrix(_require(document, "rankings"), "rankings")
    profile = OrdinalProfile.from_rankings(rows, m=len(rows[0]) if rows[0] else 1)
    report = validate_ordinal_profile(profile)
    if not report.is_valid:
        agent = report.agents[0] if report.agents else None
        field = f"rankings[{agent - 1}]" if agent else "rankings"
        raise ParseError(f"not a strict ranking ({report.summary()})", field=field)
    return profile


def _parse_additive(document: dict) -> AdditiveProfile:
    value = _require(document, "utilities")
    if not isinstance(value, list) or not value or not all(isinstance(row, list) and row for row in value):
        raise ParseError("expected a nonempty list of nonempty lists", field="utilities")
    rows = []
    for i, row in enumerate(value):
        parsed = []
        for j, x in enumerate(row):
            try:
                parsed.append(as_rational(x))
            except ValueError as err:
                raise ParseError(str(err), field=f"utilities[{i}][{j}]") from None
        rows.append(parsed)
    profile = AdditiveProfile(Items(len(rows[0])), Agents(len(rows)), rows)
    report = validate_additive_profile(profile)
    if not report.is_valid:
        agent = report.agents[0] if report.agents else None
        field = f"utilities[{agent - 1}]" if agent else "utilities"
        raise ParseError(report.summary(), field=field)
    return profile


def _parse_planted(document: dict) -> PlantedOracle:
    m = _require(document, "m")
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise ParseError(f"expected a positive integer, got {m!r}", field="m")
    planted = _require(document, "planted")
    if not isinstance(planted, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in planted):
        raise ParseError("expected a list of item indices", field="planted")
    try:
        t_star = ItemSet(m, planted)
    except ValueError as err:
        raise ParseError(str(err), field="planted") from None
    return PlantedOracle(m, t_star)


_PARSERS = {
    KIND_ORDINAL: _parse_ordinal,
    KIND_ADDITIVE: _parse_additive,
    KIND_PLANTED: _parse_planted,
}


def parse_instance_file(text: Union[bytes, str]) -> InstanceFile:
    """
    Parses an instance file.

    Args:
        text (bytes or str): UTF-8 JSON document.

    Returns:
        InstanceFile: The typed instance with its metadata.

    Raises:
        ParseError: Syntax errors name the line, payload errors name the field.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as err:
            raise ParseError(f"not UTF-8: {err}") from None
    try:
        document = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(err.msg, line=err.lineno) from None
    if not isinstance(document, dict):
        raise ParseError("top level must be a JSON object")

    version = document.get("version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported version {version!r}", field="version")
    kind = _require(document, "kind")
    if kind not in _PARSERS:
        raise ParseError(f"unknown kind {kind!r}, expected one of {', '.join(KINDS)}", field="kind")
    for other, fields in _PAYLOAD_FIELDS.items():
        if other == kind:
            continue
        stray = [f for f in fields if f in document and f not in _PAYLOAD_FIELDS[kind]]
        if stray:
            raise ParseError(f"{other} payload under kind '{kind}'", field=stray[0])

    instance = _PARSERS[kind](document)
    return InstanceFile(
        instance=instance,
        kind=kind,
        version=version,
        name=document.get("name"),
        provenance=document.get("provenance"),
    )


def parse_instance(text: Union[bytes, str]):
    """Typed instance (OrdinalProfile, AdditiveProfile or PlantedOracle) from an instance file."""
    return parse_instance_file(text).instance


def _render_rational(x):
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def emit_instance(instance, name: str = None, provenance: str = None) -> str:
    """Serializes an instance; ``parse_instance`` of the result gives back an equal instance."""
    kind = _kind_of(instance)
    document = {"version": FORMAT_VERSION, "kind": kind}
    if name is not None:
        document["name"] = name
    if provenance is not None:
        document["provenance"] = provenance
    if kind == KIND_ORDINAL:
        document["rankings"] = [list(r) for r in instance.rankings]
    elif kind == KIND_ADDITIVE:
        document["utilities"] = [[_render_rational(x) for x in row] for row in instance.utilities]
    else:
        document["m"] = instance.m
        document["planted"] = list(instance.t_star.members)
    return json.dumps(document, indent=1) + "\n"


def _content_lines(text: str, comment_prefixes=("#",)):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(comment_prefixes):
            continue
        yield number, line


def parse_partition_text(text: str) -> PartitionInstance:
    values = []
    for number, line in _content_lines(text):
        try:
            values.append(int(line))
        except ValueError:
            raise ParseError(f"expected one integer, got {line!r}", line=number) from None
    try:
        return PartitionInstance(values)
    except ValueError as err:
        raise ParseError(str(err)) from None


def emit_partition_text(instance: PartitionInstance) -> str:
    return "".join(f"{v}\n" for v in instance.values)


def parse_setcover_text(text: str) -> SetCoverInstance:
    """One subset per line; the universe is the union of all subsets."""
    subsets = []
    for number, line in _content_lines(text):
        try:
            subsets.append([int(tok) for tok in line.split()])
        except ValueError:
            raise ParseError(f"expected integers, got {line!r}", line=number) from None
    if not subsets:
        raise ParseError("no subsets")
    return SetCoverInstance.from_subsets(subsets)


def emit_setcover_text(instance: SetCoverInstance) -> str:
    return "".join(" ".join(str(e) for e in sorted(s)) + "\n" for s in instance.subsets)


def parse_dimacs(text: str) -> CnfFormula:
    """DIMACS CNF: a ``p cnf V C`` header, then clauses terminated by 0."""
    num_vars = num_clauses = None
    clauses, current = [], []
    for number, line in _content_lines(text, comment_prefixes=("c", "#")):
        if line.startswith("%"):
            break
        if line.startswith("p"):
            fields = line.split()
            if len(fields) != 4 or fields[1] != "cnf":
                raise ParseError(f"bad problem line {line!r}", line=number)
            try:
                num_vars, num_clauses = int(fields[2]), int(fields[3])
            except ValueError:
                raise ParseError(f"bad problem line {line!r}", line=number) from None
            continue
        if num_vars is None:
            raise ParseError("clause before the 'p cnf' header", line=number)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad literal {tok!r}", line=number) from None
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if num_vars is None:
        raise ParseError("missing 'p cnf' header")
    if current:
        clauses.append(tuple(current))
    if len(clauses) != num_clauses:
        raise ParseError(f"header declares {num_clauses} clauses, found {len(clauses)}")
    try:
        return CnfFormula(num_vars, tuple(clauses))
    except ValueError as err:
        raise ParseError(str(err)) from None


def emit_dimacs(formula: CnfFormula) -> str:
    lines = [f"p cnf {formula.num_vars} {len(formula.clauses)}"]
    lines.extend(" ".join(str(l) for l in clause) + " 0" for clause in formula.clauses)
    return "\n".join(lines) + "\n"
