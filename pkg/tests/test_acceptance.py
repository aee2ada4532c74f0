"""Acceptance suite: every headline guarantee of the package, one line each.

Run with output passthrough to see the per-criterion report:

    pytest tests/test_acceptance.py -v -s

Each test prints exactly one "ACCEPTANCE NN PASS/FAIL" line and asserts.
The checks lean on each other as little as possible: counts come from
fresh enumerations, region geometry is swept through the exact
feasibility solver, and the combinatorial filter is only trusted after
it has been compared against that solver on every sign vector.
"""

import time
from itertools import product

import pytest

from shipark import bijections, cayley, geometry, graphs, jsonio, parking
from shipark.cli import main as cli_main
from shipark.graphs import EdgeKind
from shipark.pairs import canonical_pairs, pair_count

import io


def report(num: int, ok: bool, detail: str):
    print(f"ACCEPTANCE {num:02d} {'PASS' if ok else 'FAIL'} {detail}")
    assert ok, f"acceptance {num:02d}: {detail}"


def cli(argv):
    out = io.StringIO()
    code = cli_main(argv, stdin=io.StringIO(""), stdout=out, stderr=io.StringIO())
    return code, out.getvalue()


COUNTS = {n: (n + 1) ** (n - 1) for n in range(1, 7)}


@pytest.fixture(scope="module")
def pf_sets():
    return {n: list(parking.enumerate_parking_functions(n)) for n in range(1, 7)}


@pytest.fixture(scope="module")
def graph_sets():
    return {n: list(graphs.enumerate_parking_graphs(n)) for n in range(1, 6)}


@pytest.fixture(scope="module")
def feasibility():
    """For each n up to 5: every sign vector, solved exactly."""
    table = {}
    for n in range(1, 6):
        rows = {}
        for signs in product(geometry.SIGN_ENUM_ORDER, repeat=pair_count(n)):
            sv = geometry.RegionSignVector(n, signs)
            outcome = geometry.feasible_interior(geometry.system_of_sign_vector(sv))
            rows[signs] = isinstance(outcome, geometry.Witness)
        table[n] = rows
    return table


@pytest.fixture(scope="module")
def label_maps(feasibility):
    """Pak-Stanley labels of every region, keyed by sign vector."""
    table = {}
    for n, rows in feasibility.items():
        table[n] = {
            signs: bijections.pak_stanley_label(
                geometry.RegionSignVector(n, signs)
            ).entries
            for signs, ok in rows.items()
            if ok
        }
    return table


def test_01_parking_function_counts():
    t0 = time.monotonic()
    got = [
        sum(1 for _ in parking.enumerate_parking_functions(n)) for n in range(1, 7)
    ]
    elapsed = time.monotonic() - t0
    expected = [COUNTS[n] for n in range(1, 7)]
    report(
        1,
        got == expected and elapsed < 10.0,
        f"parking function counts n=1..6 {got} in {elapsed:.1f}s",
    )


def test_02_parking_graph_counts():
    t0 = time.monotonic()
    got = [
        sum(1 for _ in graphs.enumerate_parking_graphs(n)) for n in range(1, 6)
    ]
    elapsed = time.monotonic() - t0
    expected = [COUNTS[n] for n in range(1, 6)]
    report(
        2,
        got == expected and elapsed < 60.0,
        f"graph filter counts n=1..5 {got} in {elapsed:.1f}s",
    )


def test_03_region_counts_by_exact_solver(feasibility):
    got = [sum(feasibility[n].values()) for n in range(1, 6)]
    expected = [COUNTS[n] for n in range(1, 6)]
    report(3, got == expected, f"feasible sign vectors n=1..5 {got}")


def test_04_solver_agrees_with_edge_filter_everywhere(feasibility):
    total = disagreements = 0
    for n, rows in feasibility.items():
        for signs, feasible in rows.items():
            total += 1
            g = graphs.MixedGraph(
                n, tuple(bijections.KIND_OF_SIGN[s] for s in signs)
            )
            accepted = isinstance(
                graphs.check_source_sink(g), graphs.ParkingGraph
            )
            if accepted != feasible:
                disagreements += 1
    report(
        4,
        disagreements == 0,
        f"geometry vs combinatorial filter on {total} sign vectors, "
        f"{disagreements} disagreements",
    )


def test_05_relatively_bounded_region_counts(feasibility):
    got = []
    for n in range(2, 6):
        got.append(
            sum(
                1
                for signs, ok in feasibility[n].items()
                if ok
                and geometry.is_relatively_bounded(
                    geometry.RegionSignVector(n, signs)
                )
            )
        )
    expected = [(n - 1) ** (n - 1) for n in range(2, 6)]
    probe_bad = 0
    for n in range(2, 5):
        margin = 10 * n
        for signs, ok in feasibility[n].items():
            if not ok:
                continue
            sv = geometry.RegionSignVector(n, signs)
            system = geometry.system_of_sign_vector(sv)
            unbounded = any(
                isinstance(
                    geometry.feasible_interior(
                        geometry.DifferenceSystem(
                            n,
                            system.constraints
                            + (geometry.Constraint(a, b, ">", margin),),
                        )
                    ),
                    geometry.Witness,
                )
                for a in range(1, n + 1)
                for b in range(1, n + 1)
                if a != b
            )
            if geometry.is_relatively_bounded(sv) != (not unbounded):
                probe_bad += 1
    report(
        5,
        got == expected and probe_bad == 0,
        f"bounded counts n=2..5 {got}, probe disagreements {probe_bad}",
    )


def test_06_bijections_round_trip_and_labels_cover(pf_sets, graph_sets, label_maps):
    bad = 0
    for n in range(1, 6):
        for x in pf_sets[n]:
            if bijections.phi(bijections.phi_inverse(x).graph) != x:
                bad += 1
        for g in graph_sets[n]:
            if bijections.phi_inverse(bijections.phi(g)).graph != g:
                bad += 1
            region = bijections.psi(g)
            if bijections.psi_inverse(region.sign_vector) != g:
                bad += 1
    sizes = []
    onto = True
    for n in range(3, 6):
        labels = set(label_maps[n].values())
        sizes.append(len(label_maps[n]))
        if labels != {x.entries for x in pf_sets[n]}:
            onto = False
        if len(labels) != len(label_maps[n]):
            onto = False
    report(
        6,
        bad == 0 and onto and sizes == [16, 125, 1296],
        f"round trips n<=5 with {bad} failures; labels biject on {sizes} regions",
    )


def test_07_worked_rebuild_and_central_region():
    graph, priorities, trace = bijections.phi_inverse((3, 1, 1, 2))
    ok = graphs.in_degrees_mixed(graph) == (2, 0, 0, 1)
    ok = ok and graph.kind(3, 4) is EdgeKind.UP
    ok = ok and graph.kind(1, 3) is EdgeKind.DOWN
    ok = ok and graph.kind(1, 4) is EdgeKind.DOWN
    ok = ok and all(
        graph.kind(j, k) is EdgeKind.DOWNISH for j, k in ((1, 2), (2, 3), (2, 4))
    )
    ok = ok and priorities.values == (-1, -2, -4, -3)
    ok = ok and bijections.phi(graph).entries == (3, 1, 1, 2)
    central_ok = all(
        bijections.pak_stanley_label(
            geometry.RegionSignVector(n, (geometry.Sign.BETWEEN,) * pair_count(n))
        ).entries
        == (1,) * n
        for n in range(1, 6)
    )
    report(
        7,
        ok and central_ok,
        "rebuild of (3,1,1,2) and all-ones central labels n<=5",
    )


def test_08_trace_laws_hold_with_zero_violations(pf_sets):
    bad_perm = bad_order = bad_up = bad_law = bad_neg = 0
    guard = 0
    total = 0
    for n in range(1, 7):
        for x in pf_sets[n]:
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
                is_up = graph.kind(j, k) is EdgeKind.UP
                if is_up != (abs(s[j - 1]) > abs(s[k - 1])):
                    bad_up += 1
            for e in trace.events:
                if isinstance(e, bijections.DownStep):
                    if abs(s[e.feeder - 1]) != max(
                        abs(s[j - 1]) for j in e.candidates
                    ):
                        bad_law += 1
                    if e.feeder_value >= 0:
                        bad_neg += 1
            guard += trace.guard_fires
    violations = bad_perm + bad_order + bad_up + bad_law + bad_neg
    report(
        8,
        violations == 0,
        f"priority totality, feeder order, up-edge, down-feeder, negativity "
        f"over {total} rebuilds: {violations} violations, duplicate-edge "
        f"guard fired {guard} times",
    )


def test_09_tree_correspondences(pf_sets):
    bad = 0
    tree_counts = []
    for n in range(1, 7):
        trees = set()
        for residues in product(range(n + 1), repeat=n - 1):
            code = cayley.PollakCode(residues)
            tree = cayley.prufer_decode(cayley.prufer_code_of_pollak(code))
            trees.add(tree.edges)
            if cayley.pollak_code_of_prufer(cayley.prufer_encode(tree)) != code:
                bad += 1
            if cayley.pollak(cayley.pollak_inverse(code)) != code:
                bad += 1
        tree_counts.append(len(trees))
        for x in pf_sets[n]:
            if cayley.parking_function_of_tree(cayley.tree_of_parking_function(x)) != x:
                bad += 1
    expected = [COUNTS[n] for n in range(1, 7)]
    report(
        9,
        bad == 0 and tree_counts == expected,
        f"code/tree round trips n<=6 with {bad} failures; tree counts {tree_counts}",
    )


def test_10_wall_crossing_and_deterministic_streams(label_maps):
    neighbors = {
        geometry.Sign.BELOW: (geometry.Sign.BETWEEN,),
        geometry.Sign.BETWEEN: (geometry.Sign.BELOW, geometry.Sign.ABOVE),
        geometry.Sign.ABOVE: (geometry.Sign.BETWEEN,),
    }
    crossings = bad = 0
    for n in range(2, 5):
        labels = label_maps[n]
        for signs, label in labels.items():
            for i in range(len(signs)):
                for replacement in neighbors[signs[i]]:
                    other = signs[:i] + (replacement,) + signs[i + 1 :]
                    if other not in labels:
                        continue
                    crossings += 1
                    deltas = [
                        abs(a - b)
                        for a, b in zip(label, labels[other])
                        if a != b
                    ]
                    if deltas != [1]:
                        bad += 1
    streams_equal = True
    for argv in (
        ["enumerate", "--kind", "pf", "--n", "4"],
        ["enumerate", "--kind", "region", "--n", "3"],
    ):
        code1, one = cli(argv + ["--jobs", "1"])
        code4, four = cli(argv + ["--jobs", "4"])
        if code1 != 0 or code4 != 0 or one != four:
            streams_equal = False
    report(
        10,
        bad == 0 and streams_equal,
        f"{crossings} wall crossings all unit steps, {bad} bad; "
        f"enumeration bytes identical across worker counts",
    )
