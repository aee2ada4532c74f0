"""Canonical JSON wire formats for every object family.

Output is canonical: keys sorted, separators fixed, rationals in lowest
terms as "p/q" (or a bare integer string), edges and signs listed in
canonical pair order.  Parsing is strict about schema shape; shape
problems raise ParseError, while domain-invalid values inside a
well-formed document raise ValidationError from the object constructors.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .bijections import AlgorithmTrace, DownStep, Finalize, SourcePriorityVector, UpStep
from .cayley import LabeledTree, PollakCode
from .errors import ParseError
from .geometry import RationalPoint, RegionSignVector, Sign, Witness
from .graphs import EdgeKind, MixedGraph
from .pairs import canonical_pairs, pair_count
from .parking import ParkingFunction


def canonical_dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def parse_rational(text: Any) -> Fraction:
    """Accept integer strings, "p/q" strings, or plain integers.

    Decimal notation is rejected on purpose: the wire format for
    non-integers is a quotient in lowest terms.
    """
    if isinstance(text, bool):
        raise ParseError(f"rational must be a string or integer, got {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise ParseError(f"cannot parse rational {text!r}")
    return Fraction(text.strip())


def _require_keys(doc: Any, keys: set[str], what: str, optional: set[str] = frozenset()):
    if not isinstance(doc, dict):
        raise ParseError(f"{what} document must be a JSON object, got {type(doc).__name__}")
    missing = keys - set(doc)
    extra = set(doc) - keys - optional
    if missing or extra:
        raise ParseError(
            f"{what} document has wrong keys: missing {sorted(missing)}, "
            f"unexpected {sorted(extra)}"
        )


def _require_int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{what} must be an integer, got {value!r}")
    return value


# parking functions: {"n": 4, "pf": [3, 1, 1, 2]}

def pf_to_obj(x: ParkingFunction) -> dict:
    return {"n": x.n, "pf": list(x.entries)}


def pf_from_obj(doc: Any) -> ParkingFunction:
    _require_keys(doc, {"n", "pf"}, "parking function")
    n = _require_int(doc["n"], "n")
    entries = doc["pf"]
    if not isinstance(entries, list) or len(entries) != n:
        raise ParseError(f"pf must be a list of length n={n}")
    return ParkingFunction(tuple(_require_int(v, "entry") for v in entries))


# mixed graphs: {"n": 4, "edges": [{"j": 1, "k": 2, "kind": "downish"}, ...]}

def graph_to_obj(g: MixedGraph) -> dict:
    return {
        "n": g.n,
        "edges": [
            {"j": j, "k": k, "kind": kind.value}
            for (j, k), kind in zip(canonical_pairs(g.n), g.kinds)
        ],
    }


def graph_from_obj(doc: Any) -> MixedGraph:
    _require_keys(doc, {"n", "edges"}, "mixed graph")
    n = _require_int(doc["n"], "n")
    if n < 1:
        raise ParseError(f"n must be positive, got {n}")
    edges = doc["edges"]
    if not isinstance(edges, list) or len(edges) != pair_count(n):
        raise ParseError(f"edges must list all {pair_count(n)} pairs for n={n}")
    by_kind = {e.value: e for e in EdgeKind}
    seen: dict[tuple[int, int], EdgeKind] = {}
    for item in edges:
        _require_keys(item, {"j", "k", "kind"}, "edge")
        j = _require_int(item["j"], "j")
        k = _require_int(item["k"], "k")
        if not 1 <= j < k <= n:
            raise ParseError(f"edge pair ({j}, {k}) must satisfy 1 <= j < k <= n")
        if (j, k) in seen:
            raise ParseError(f"duplicate edge pair ({j}, {k})")
        kind = by_kind.get(item["kind"])
        if kind is None:
            raise ParseError(f"unknown edge kind {item['kind']!r}")
        seen[(j, k)] = kind
    return MixedGraph(n, tuple(seen[p] for p in canonical_pairs(n)))


# regions: {"n": 3, "signs": [{"j": 1, "k": 2, "s": "between"}, ...]}
# plus an optional verified witness on output

def region_to_obj(sv: RegionSignVector, witness: Witness | None = None) -> dict:
    doc: dict = {
        "n": sv.n,
        "signs": [
            {"j": j, "k": k, "s": s.value}
            for (j, k), s in zip(canonical_pairs(sv.n), sv.signs)
        ],
    }
    if witness is not None:
        doc["witness"] = point_to_obj(witness.point)
    return doc


def region_from_obj(doc: Any) -> RegionSignVector:
    _require_keys(doc, {"n", "signs"}, "region", optional={"witness"})
    n = _require_int(doc["n"], "n")
    if n < 1:
        raise ParseError(f"n must be positive, got {n}")
    signs = doc["signs"]
    if not isinstance(signs, list) or len(signs) != pair_count(n):
        raise ParseError(f"signs must list all {pair_count(n)} pairs for n={n}")
    by_name = {s.value: s for s in Sign}
    seen: dict[tuple[int, int], Sign] = {}
    for item in signs:
        _require_keys(item, {"j", "k", "s"}, "sign")
        j = _require_int(item["j"], "j")
        k = _require_int(item["k"], "k")
        if not 1 <= j < k <= n:
            raise ParseError(f"sign pair ({j}, {k}) must satisfy 1 <= j < k <= n")
        if (j, k) in seen:
            raise ParseError(f"duplicate sign pair ({j}, {k})")
        s = by_name.get(item["s"])
        if s is None:
            raise ParseError(f"unknown sign {item['s']!r}")
        seen[(j, k)] = s
    return RegionSignVector(n, tuple(seen[p] for p in canonical_pairs(n)))


# points: {"coords": ["6/5", "1/2", "0"]}

def point_to_obj(p: RationalPoint) -> dict:
    return {"coords": [format_rational(c) for c in p.coords]}


def point_from_obj(doc: Any) -> RationalPoint:
    _require_keys(doc, {"coords"}, "point")
    coords = doc["coords"]
    if not isinstance(coords, list) or not coords:
        raise ParseError("coords must be a nonempty list")
    return RationalPoint(tuple(parse_rational(c) for c in coords))


# trees: {"n_vertices": 4, "edges": [[1, 2], [2, 3], [3, 4]]}

def tree_to_obj(t: LabeledTree) -> dict:
    return {"n_vertices": t.n_vertices, "edges": [list(e) for e in t.edges]}


def tree_from_obj(doc: Any) -> LabeledTree:
    _require_keys(doc, {"n_vertices", "edges"}, "tree")
    m = _require_int(doc["n_vertices"], "n_vertices")
    edges = doc["edges"]
    if not isinstance(edges, list):
        raise ParseError("edges must be a list of pairs")
    pairs = []
    for item in edges:
        if not isinstance(item, list) or len(item) != 2:
            raise ParseError(f"edge must be a pair, got {item!r}")
        pairs.append((_require_int(item[0], "vertex"), _require_int(item[1], "vertex")))
    return LabeledTree(m, tuple(pairs))


# codes: {"code": [3, 0, 1]}, residues over {0, ..., n}

def code_to_obj(c: PollakCode) -> dict:
    return {"code": list(c.residues)}


def code_from_obj(doc: Any) -> PollakCode:
    _require_keys(doc, {"code"}, "code")
    code = doc["code"]
    if not isinstance(code, list):
        raise ParseError("code must be a list of residues")
    return PollakCode(tuple(_require_int(v, "residue") for v in code))


# traces: {"events": [...], "s": [-1, -2, -4, -3]}

def trace_to_obj(trace: AlgorithmTrace, priorities: SourcePriorityVector) -> dict:
    events = []
    for e in trace.events:
        if isinstance(e, UpStep):
            events.append(
                {"type": "up", "feeder": e.feeder, "targets": list(e.targets)}
            )
        elif isinstance(e, DownStep):
            events.append(
                {
                    "type": "down",
                    "feeder": e.feeder,
                    "targets": list(e.targets),
                    "skipped": list(e.skipped),
                }
            )
        elif isinstance(e, Finalize):
            events.append({"type": "finalize", "pairs": [list(p) for p in e.pairs]})
    return {"events": events, "s": list(priorities.values)}
