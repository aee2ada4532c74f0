"""Command line front end.

Exit codes: 0 on success, 1 on a domain-level failure (not a parking
function, infeasible region, violated graph, failed verification), 2 on
usage or parse errors.  All object I/O uses the canonical JSON formats
of the jsonio module; enumeration output is deterministic and does not
depend on the worker count.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import combinations, product

from . import bijections, cayley, geometry, graphs, jsonio, parking, render
from .errors import (
    CapExceeded,
    OnHyperplaneError,
    ParseError,
    ShiparkError,
    ValidationError,
)
from .pairs import canonical_pairs, pair_count

FAMILIES = ("pf", "graph", "region", "tree", "code")

# the object families sit on a chain; conversions walk it step by step
_CHAIN = ("region", "graph", "pf", "code", "tree")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shipark",
        description="Parking functions, parking graphs, and the regions "
        "of the Shi arrangement.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test a preference sequence")
    p.add_argument("input", nargs="?", help="inline '2,1,1' or a pf JSON document")
    p.add_argument("--in", dest="infile", help="read input from a file")

    p = sub.add_parser("convert", help="convert between object families")
    p.add_argument("--from", dest="src", required=True, choices=FAMILIES)
    p.add_argument("--to", dest="dst", required=True, choices=FAMILIES)
    p.add_argument("--in", dest="infile", help="read input from a file")
    p.add_argument(
        "--trace",
        action="store_true",
        help="attach the rebuild trace when the graph is rebuilt from a "
        "parking function",
    )

    p = sub.add_parser("enumerate", help="stream all objects of one size")
    p.add_argument("--kind", required=True, choices=("pf", "graph", "region"))
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--count-only", action="store_true")
    p.add_argument(
        "--bounded-only",
        action="store_true",
        help="regions only: keep relatively bounded regions",
    )
    p.add_argument(
        "--jobs",
        type=int,
        default=None,
        help="worker processes (default: PARK_JOBS or 1); output does "
        "not depend on this",
    )

    p = sub.add_parser("verify", help="run self-checks and report per line")
    p.add_argument("--n", required=True, type=int)
    p.add_argument(
        "--suite",
        default="all",
        choices=("all", "counts", "roundtrip", "lemmas", "oracle", "pakstanley"),
    )

    p = sub.add_parser("label", help="Pak-Stanley label of a point's region")
    p.add_argument("--point", required=True, help="comma-separated rationals")

    p = sub.add_parser("render", help="SVG figure of the arrangement")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--out", required=True)

    return parser


def _read_input(args, stdin) -> str:
    if getattr(args, "input", None) is not None:
        return args.input
    if args.infile is not None:
        with open(args.infile, "r", encoding="utf-8") as fh:
            return fh.read()
    return stdin.read()


# ---------------------------------------------------------------- check


def _parse_preferences(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        raise ParseError("empty input")
    if text.startswith("{"):
        return jsonio.pf_from_obj(jsonio.loads(text)).entries
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ParseError(f"cannot parse preference sequence {text!r}") from None


def cmd_check(args, stdin, stdout) -> int:
    seq = _parse_preferences(_read_input(args, stdin))
    outcome = parking.check_by_simulation(seq)
    sorted_ok = parking.check_by_sort(seq)
    if outcome.success:
        spots = ",".join(str(s) for s in outcome.assignment)
        print(f"simulation: parks; assignment {spots}", file=stdout)
    else:
        print(
            f"simulation: fails; car {outcome.first_failed_car} cannot park",
            file=stdout,
        )
    print(
        f"sorted criterion: {'satisfied' if sorted_ok else 'violated'}",
        file=stdout,
    )
    if outcome.success:
        spots = ",".join(str(s) for s in outcome.assignment)
        print(f"parking function; assignment {spots}", file=stdout)
        return 0
    print(f"not a parking function; car {outcome.first_failed_car} fails", file=stdout)
    return 1


# -------------------------------------------------------------- convert


def _parse_family(family: str, text: str):
    doc = jsonio.loads(text)
    if family == "pf":
        return jsonio.pf_from_obj(doc)
    if family == "graph":
        g = jsonio.graph_from_obj(doc)
        certified = graphs.check_source_sink(g)
        if isinstance(certified, graphs.Violation):
            raise ValidationError(
                f"not a parking graph: {certified.kind.value} on triangle "
                f"{certified.vertices}"
            )
        return certified
    if family == "region":
        sv = jsonio.region_from_obj(doc)
        outcome = geometry.feasible_interior(geometry.system_of_sign_vector(sv))
        if isinstance(outcome, geometry.Infeasible):
            cyc = "; ".join(
                f"x{c.j} - x{c.k} {c.relation} {jsonio.format_rational(c.bound)}"
                for c in outcome.cycle
            )
            raise ValidationError(f"sign vector is infeasible; cycle: {cyc}")
        return geometry.Region(sv, outcome)
    if family == "tree":
        return jsonio.tree_from_obj(doc)
    if family == "code":
        return jsonio.code_from_obj(doc)
    raise AssertionError(family)


def _serialize_family(family: str, value, trace_obj) -> dict:
    if family == "pf":
        doc = jsonio.pf_to_obj(value)
    elif family == "graph":
        doc = jsonio.graph_to_obj(value)
    elif family == "region":
        doc = jsonio.region_to_obj(value.sign_vector, value.witness)
    elif family == "tree":
        doc = jsonio.tree_to_obj(value)
    elif family == "code":
        doc = jsonio.code_to_obj(value)
    else:
        raise AssertionError(family)
    if trace_obj is not None:
        doc["trace"] = trace_obj
    return doc


def cmd_convert(args, stdin, stdout) -> int:
    value = _parse_family(args.src, _read_input(args, stdin))
    trace_obj = None
    src = _CHAIN.index(args.src)
    dst = _CHAIN.index(args.dst)
    step = 1 if dst > src else -1
    while src != dst:
        here = _CHAIN[src]
        if step == 1:
            if here == "region":
                value = bijections.psi_inverse(value.sign_vector)
            elif here == "graph":
                value = bijections.phi(value)
            elif here == "pf":
                value = cayley.pollak(value)
            elif here == "code":
                value = cayley.prufer_decode(cayley.prufer_code_of_pollak(value))
        else:
            if here == "tree":
                value = cayley.pollak_code_of_prufer(cayley.prufer_encode(value))
            elif here == "code":
                value = cayley.pollak_inverse(value)
            elif here == "pf":
                rebuilt = bijections.phi_inverse(value)
                value = rebuilt.graph
                if args.trace:
                    trace_obj = jsonio.trace_to_obj(rebuilt.trace, rebuilt.priorities)
            elif here == "graph":
                value = bijections.psi(value)
        src += step
    print(jsonio.canonical_dumps(_serialize_family(args.dst, value, trace_obj)), file=stdout)
    return 0


# ------------------------------------------------------------ enumerate


def _enum_chunk(task) -> list[str] | int:
    """Worker: serialize (or count) the objects in one index range."""
    kind, n, lo, hi, count_only, bounded_only = task
    lines: list[str] = []
    count = 0
    if kind == "pf":
        for seq in parking.parking_tuples_in_range(n, lo, hi):
            if count_only:
                count += 1
            else:
                lines.append(
                    jsonio.canonical_dumps(jsonio.pf_to_obj(parking.ParkingFunction(seq)))
                )
    elif kind == "graph":
        for kinds in graphs.parking_graph_kinds_in_range(n, lo, hi):
            if count_only:
                count += 1
            else:
                lines.append(
                    jsonio.canonical_dumps(
                        jsonio.graph_to_obj(graphs.MixedGraph(n, kinds))
                    )
                )
    else:
        for sv, witness in geometry.regions_in_range(n, lo, hi):
            if bounded_only and not geometry.is_relatively_bounded(sv):
                continue
            if count_only:
                count += 1
            else:
                lines.append(
                    jsonio.canonical_dumps(jsonio.region_to_obj(sv, witness))
                )
    return count if count_only else lines


def _candidate_total(kind: str, n: int) -> int:
    if kind == "pf":
        return n**n
    return 3 ** pair_count(n)


def cmd_enumerate(args, stdin, stdout) -> int:
    if args.bounded_only and args.kind != "region":
        raise ParseError("--bounded-only applies to regions only")
    jobs = args.jobs
    if jobs is None:
        jobs = int(os.environ.get("PARK_JOBS", "1"))
    if jobs < 1:
        raise ParseError(f"--jobs must be at least 1, got {jobs}")
    caps = {
        "pf": parking.ENUMERATION_CAP,
        "graph": graphs.ENUMERATION_CAP,
        "region": geometry.ENUMERATION_CAP,
    }
    if args.n < 1:
        raise ValidationError(f"--n must be positive, got {args.n}")
    if args.n > caps[args.kind]:
        raise CapExceeded(
            f"enumeration for n={args.n} exceeds the {args.kind} cap {caps[args.kind]}"
        )

    total = _candidate_total(args.kind, args.n)
    chunks = min(max(jobs * 4, 1), total) or 1
    bounds = [
        (total * i // chunks, total * (i + 1) // chunks) for i in range(chunks)
    ]
    tasks = [
        (args.kind, args.n, lo, hi, args.count_only, args.bounded_only)
        for lo, hi in bounds
        if lo < hi
    ]

    if jobs == 1:
        results = [_enum_chunk(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_enum_chunk, tasks))

    if args.count_only:
        print(sum(results), file=stdout)
    else:
        for lines in results:
            for line in lines:
                print(line, file=stdout)
    return 0


# --------------------------------------------------------------- verify

_REGION_CAP = geometry.ENUMERATION_CAP
_GRAPH_CAP = graphs.ENUMERATION_CAP
_PF_CAP = parking.ENUMERATION_CAP
_TREE_CAP = 6
_PROBE_CAP = 4


class _Report:
    def __init__(self, n: int):
        self.n = n
        self.rows: list[tuple[str, str, str]] = []

    def add(self, status: str, name: str, **kv):
        detail = " ".join(f"{k}={v}" for k, v in kv.items())
        self.rows.append((status, name, detail))

    def check(self, name: str, ok: bool, **kv):
        self.add("PASS" if ok else "FAIL", name, **kv)

    def skip(self, name: str, reason: str):
        self.add("SKIP", name, reason=reason)

    @property
    def failed(self) -> bool:
        return any(status == "FAIL" for status, _, _ in self.rows)

    @property
    def passed_any(self) -> bool:
        return any(status == "PASS" for status, _, _ in self.rows)


def _verify_counts(rep: _Report) -> None:
    n = rep.n
    expected = parking.count_parking_functions(n)
    if n <= _PF_CAP:
        got = sum(1 for _ in parking.enumerate_parking_functions(n))
        rep.check("counts.pf", got == expected, value=got, expected=expected)
    else:
        rep.skip("counts.pf", "cap")
    if n <= _GRAPH_CAP:
        got = sum(1 for _ in graphs.enumerate_parking_graphs(n))
        rep.check("counts.graphs", got == expected, value=got, expected=expected)
    else:
        rep.skip("counts.graphs", "cap")
    if n <= _REGION_CAP:
        regions = list(geometry.enumerate_regions(n))
        rep.check(
            "counts.regions", len(regions) == expected, value=len(regions), expected=expected
        )
        bounded = sum(
            1 for sv, _ in regions if geometry.is_relatively_bounded(sv)
        )
        expected_bounded = 1 if n == 1 else (n - 1) ** (n - 1)
        rep.check(
            "counts.bounded",
            bounded == expected_bounded,
            value=bounded,
            expected=expected_bounded,
        )
    else:
        rep.skip("counts.regions", "cap")
        rep.skip("counts.bounded", "cap")
    if n <= _TREE_CAP:
        trees = set()
        for residues in product(range(n + 1), repeat=n - 1):
            trees.add(
                cayley.prufer_decode(
                    cayley.prufer_code_of_pollak(cayley.PollakCode(residues))
                )
            )
        rep.check("counts.trees", len(trees) == expected, value=len(trees), expected=expected)
    else:
        rep.skip("counts.trees", "cap")


def _verify_roundtrip(rep: _Report) -> None:
    n = rep.n
    if n <= _PF_CAP:
        bad = 0
        total = 0
        for x in parking.enumerate_parking_functions(n):
            total += 1
            if bijections.phi(bijections.phi_inverse(x).graph) != x:
                bad += 1
        rep.check("roundtrip.pf_graph_pf", bad == 0, total=total, bad=bad)
        bad = sum(
            1
            for x in parking.enumerate_parking_functions(n)
            if cayley.pollak_inverse(cayley.pollak(x)) != x
        )
        rep.check("roundtrip.pf_code_pf", bad == 0, bad=bad)
        bad = sum(
            1
            for x in parking.enumerate_parking_functions(n)
            if cayley.parking_function_of_tree(cayley.tree_of_parking_function(x)) != x
        )
        rep.check("roundtrip.pf_tree_pf", bad == 0, bad=bad)
    else:
        rep.skip("roundtrip.pf_graph_pf", "cap")
        rep.skip("roundtrip.pf_code_pf", "cap")
        rep.skip("roundtrip.pf_tree_pf", "cap")
    if n <= _GRAPH_CAP:
        bad = 0
        total = 0
        for g in graphs.enumerate_parking_graphs(n):
            total += 1
            if bijections.phi_inverse(bijections.phi(g)).graph != g:
                bad += 1
        rep.check("roundtrip.graph_pf_graph", bad == 0, total=total, bad=bad)
    else:
        rep.skip("roundtrip.graph_pf_graph", "cap")
    if n <= _REGION_CAP:
        bad = 0
        total = 0
        for g in graphs.enumerate_parking_graphs(n):
            total += 1
            region = bijections.psi(g)
            if bijections.psi_inverse(region.sign_vector) != g:
                bad += 1
        rep.check("roundtrip.graph_region_graph", bad == 0, total=total, bad=bad)
        bad = 0
        for sv, _ in geometry.enumerate_regions(n):
            if bijections.psi(bijections.psi_inverse(sv)).sign_vector != sv:
                bad += 1
        rep.check("roundtrip.region_graph_region", bad == 0, bad=bad)
    else:
        rep.skip("roundtrip.graph_region_graph", "cap")
        rep.skip("roundtrip.region_graph_region", "cap")
    if n <= _TREE_CAP:
        bad = 0
        for residues in product(range(n + 1), repeat=n - 1):
            code = cayley.PollakCode(residues)
            tree = cayley.prufer_decode(cayley.prufer_code_of_pollak(code))
            if cayley.pollak_code_of_prufer(cayley.prufer_encode(tree)) != code:
                bad += 1
        rep.check("roundtrip.code_tree_code", bad == 0, bad=bad)
    else:
        rep.skip("roundtrip.code_tree_code", "cap")


def _verify_lemmas(rep: _Report) -> None:
    n = rep.n
    if n > _PF_CAP:
        for name in (
            "lemmas.priority_permutation",
            "lemmas.reverse_feeder_order",
            "lemmas.up_edge_law",
            "lemmas.down_feeder_law",
            "lemmas.down_feeder_negative",
        ):
            rep.skip(name, "cap")
        return
    bad_perm = bad_order = bad_up = bad_law = bad_neg = 0
    guard = 0
    total = 0
    for x in parking.enumerate_parking_functions(n):
        total += 1
        graph, priorities, trace = bijections.phi_inverse(x)
        s = priorities.values
        if sorted(s) != list(range(-n, 0)):
            bad_perm += 1
        by_priority = tuple(
            sorted(range(1, n + 1), key=lambda v: -abs(s[v - 1]))
        )
        if trace.up_feeders != by_priority:
            bad_order += 1
        for j, k in canonical_pairs(n):
            is_up = graph.kind(j, k) is graphs.EdgeKind.UP
            if is_up != (abs(s[j - 1]) > abs(s[k - 1])):
                bad_up += 1
        guard += trace.guard_fires
        for e in trace.events:
            if isinstance(e, bijections.DownStep):
                best = max(abs(s[j - 1]) for j in e.candidates)
                if abs(s[e.feeder - 1]) != best:
                    bad_law += 1
                if e.feeder_value >= 0:
                    bad_neg += 1
    rep.check("lemmas.priority_permutation", bad_perm == 0, total=total, bad=bad_perm)
    rep.check("lemmas.reverse_feeder_order", bad_order == 0, bad=bad_order)
    rep.check("lemmas.up_edge_law", bad_up == 0, bad=bad_up)
    rep.check("lemmas.down_feeder_law", bad_law == 0, bad=bad_law)
    rep.check("lemmas.down_feeder_negative", bad_neg == 0, bad=bad_neg)
    rep.add("INFO", "lemmas.down_guard_fires", value=guard)


def _verify_oracle(rep: _Report) -> None:
    n = rep.n
    if n > _REGION_CAP:
        rep.skip("oracle.feasible_vs_source_sink", "cap")
    else:
        disagreements = 0
        total = 0
        for signs in product(geometry.SIGN_ENUM_ORDER, repeat=pair_count(n)):
            total += 1
            sv = geometry.RegionSignVector(n, signs)
            feasible = isinstance(
                geometry.feasible_interior(geometry.system_of_sign_vector(sv)),
                geometry.Witness,
            )
            g = graphs.MixedGraph(
                n, tuple(bijections.KIND_OF_SIGN[s] for s in signs)
            )
            accepted = isinstance(
                graphs.check_source_sink(g), graphs.ParkingGraph
            )
            if feasible != accepted:
                disagreements += 1
        rep.check(
            "oracle.feasible_vs_source_sink",
            disagreements == 0,
            total=total,
            disagreements=disagreements,
        )
    if n > _PROBE_CAP:
        rep.skip("oracle.bounded_vs_probe", "cap")
        return
    disagreements = 0
    total = 0
    margin = 10 * n
    for sv, _ in geometry.enumerate_regions(n):
        total += 1
        system = geometry.system_of_sign_vector(sv)
        probe_unbounded = False
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                if a == b:
                    continue
                widened = geometry.DifferenceSystem(
                    n,
                    system.constraints
                    + (geometry.Constraint(a, b, ">", Fraction(margin)),),
                )
                if isinstance(
                    geometry.feasible_interior(widened), geometry.Witness
                ):
                    probe_unbounded = True
                    break
            if probe_unbounded:
                break
        if geometry.is_relatively_bounded(sv) != (not probe_unbounded):
            disagreements += 1
    rep.check(
        "oracle.bounded_vs_probe",
        disagreements == 0,
        total=total,
        disagreements=disagreements,
    )


def _verify_pakstanley(rep: _Report) -> None:
    n = rep.n
    if n > _REGION_CAP:
        rep.skip("pakstanley.bijection", "cap")
        rep.skip("pakstanley.central_label", "cap")
        rep.skip("pakstanley.wall_crossing", "cap")
        return
    labels: dict[tuple[geometry.Sign, ...], tuple[int, ...]] = {}
    for sv, _ in geometry.enumerate_regions(n):
        labels[sv.signs] = bijections.pak_stanley_label(sv).entries
    everything = {
        x.entries for x in parking.enumerate_parking_functions(n)
    }
    rep.check(
        "pakstanley.bijection",
        set(labels.values()) == everything and len(labels) == len(everything),
        regions=len(labels),
        distinct=len(set(labels.values())),
    )
    central = tuple([geometry.Sign.BETWEEN] * pair_count(n))
    rep.check(
        "pakstanley.central_label",
        labels.get(central) == (1,) * n,
        value=labels.get(central),
    )
    if n > _PROBE_CAP:
        rep.skip("pakstanley.wall_crossing", "cap")
        return
    neighbors = {
        geometry.Sign.BELOW: (geometry.Sign.BETWEEN,),
        geometry.Sign.BETWEEN: (geometry.Sign.BELOW, geometry.Sign.ABOVE),
        geometry.Sign.ABOVE: (geometry.Sign.BETWEEN,),
    }
    crossings = 0
    bad = 0
    for signs, label in labels.items():
        for i in range(len(signs)):
            for replacement in neighbors[signs[i]]:
                other = signs[:i] + (replacement,) + signs[i + 1 :]
                if other not in labels:
                    continue
                crossings += 1
                deltas = [
                    abs(a - b) for a, b in zip(label, labels[other]) if a != b
                ]
                if deltas != [1]:
                    bad += 1
    rep.check("pakstanley.wall_crossing", bad == 0, crossings=crossings, bad=bad)


def run_verify(n: int, suite: str) -> _Report:
    if n < 1:
        raise ValidationError(f"--n must be positive, got {n}")
    rep = _Report(n)
    if suite in ("all", "counts"):
        _verify_counts(rep)
    if suite in ("all", "roundtrip"):
        _verify_roundtrip(rep)
    if suite in ("all", "lemmas"):
        _verify_lemmas(rep)
    if suite in ("all", "oracle"):
        _verify_oracle(rep)
    if suite in ("all", "pakstanley"):
        _verify_pakstanley(rep)
    return rep


def cmd_verify(args, stdin, stdout) -> int:
    rep = run_verify(args.n, args.suite)
    for status, name, detail in rep.rows:
        line = f"{status} {name} n={rep.n}"
        if detail:
            line += f" {detail}"
        print(line, file=stdout)
    if rep.failed or not rep.passed_any:
        return 1
    return 0


# ---------------------------------------------------------------- label


def cmd_label(args, stdin, stdout) -> int:
    parts = [p.strip() for p in args.point.split(",")]
    if not parts or any(not p for p in parts):
        raise ParseError(f"cannot parse point {args.point!r}")
    coords = tuple(jsonio.parse_rational(p) for p in parts)
    label = bijections.pak_stanley_label(geometry.RationalPoint(coords))
    print("(" + ",".join(str(v) for v in label.entries) + ")", file=stdout)
    return 0


# --------------------------------------------------------------- render


def cmd_render(args, stdin, stdout) -> int:
    svg = render.render_arrangement_svg(args.n)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    print(f"wrote {args.out}", file=stdout)
    return 0


_COMMANDS = {
    "check": cmd_check,
    "convert": cmd_convert,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "label": cmd_label,
    "render": cmd_render,
}


def main(argv=None, *, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args, stdin, stdout)
    except ParseError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except (ValidationError, CapExceeded, OnHyperplaneError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except ShiparkError as exc:  # internal invariants included
        print(f"internal error: {exc}", file=stderr)
        raise


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
