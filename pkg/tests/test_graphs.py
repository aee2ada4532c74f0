from itertools import product

import pytest

from shipark.errors import CapExceeded, ValidationError
from shipark.graphs import (
    EdgeKind,
    KIND_ENUM_ORDER,
    MixedGraph,
    ParkingGraph,
    Violation,
    ViolationKind,
    check_source_sink,
    enumerate_parking_graphs,
    in_degrees_mixed,
    in_degrees_oriented,
    is_acyclic_by_triangles,
    orient,
    parking_graph_kinds_in_range,
)
from shipark.pairs import canonical_pairs, pair_count

UP, DOWN, DOWNISH = EdgeKind.UP, EdgeKind.DOWN, EdgeKind.DOWNISH


def graph(n, *kinds):
    return MixedGraph(n, tuple(kinds))


def kahn_is_acyclic(dg):
    # independent oracle: plain topological sort on the full digraph
    indeg = {v: 0 for v in range(1, dg.n + 1)}
    out = {v: [] for v in range(1, dg.n + 1)}
    for t, h in dg.arcs:
        indeg[h] += 1
        out[t].append(h)
    queue = [v for v in indeg if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == dg.n


def test_orientation_sends_downish_toward_the_smaller_vertex():
    g = graph(3, DOWNISH, DOWNISH, DOWNISH)
    assert orient(g).arcs == {(2, 1), (3, 1), (3, 2)}


def test_orientation_keeps_directed_edges():
    g = graph(3, UP, DOWN, DOWNISH)
    # pairs (1,2), (1,3), (2,3)
    assert orient(g).arcs == {(1, 2), (3, 1), (3, 2)}


def test_mixed_in_degrees_count_directed_edges_only():
    assert in_degrees_mixed(graph(3, DOWN, DOWN, DOWN)) == (2, 1, 0)
    assert in_degrees_mixed(graph(3, DOWNISH, DOWNISH, DOWNISH)) == (0, 0, 0)
    assert in_degrees_oriented(graph(3, DOWNISH, DOWNISH, DOWNISH)) == (2, 1, 0)


def test_mixed_in_degrees_of_worked_example():
    # pairs (1,2) (1,3) (1,4) (2,3) (2,4) (3,4)
    g = graph(4, DOWNISH, DOWN, DOWN, DOWNISH, DOWNISH, UP)
    assert in_degrees_mixed(g) == (2, 0, 0, 1)


def test_coherent_triangle_cycle_is_detected():
    # down 1<-2, up 1->3, downish 23 orient to the cycle 1->3->2->1
    g = graph(3, DOWN, UP, DOWNISH)
    assert not is_acyclic_by_triangles(g)
    result = check_source_sink(g)
    assert result == Violation(ViolationKind.CYCLE, (1, 2, 3))


def test_triangle_check_equals_full_toposort_up_to_five():
    for n in range(1, 6):
        for kinds in product(KIND_ENUM_ORDER, repeat=pair_count(n)):
            g = MixedGraph(n, kinds)
            assert is_acyclic_by_triangles(g) == kahn_is_acyclic(orient(g))


def test_source_sink_violation_on_downish_joined_extremes():
    # pairs (1,2) (1,3) (1,4) (2,3) (2,4) (3,4):
    # downish, down, down, downish, up, downish.
    # triangle {1,2,4} has source 2 and sink 1 joined by a downish edge,
    # and triangle {2,3,4} is a coherent cycle; the report points at the
    # lexicographically least offender.
    g = graph(4, DOWNISH, DOWN, DOWN, DOWNISH, UP, DOWNISH)
    result = check_source_sink(g)
    assert result == Violation(ViolationKind.DOWNISH_SOURCE_SINK, (1, 2, 4))
    # the cycle in {2,3,4} really is there
    arcs = orient(g).arcs
    assert {(2, 4), (4, 3), (3, 2)} <= arcs


def test_certification_returns_a_parking_graph_instance():
    g = graph(3, DOWNISH, DOWN, DOWNISH)
    certified = check_source_sink(g)
    assert isinstance(certified, ParkingGraph)
    assert certified.kinds == g.kinds


def test_parking_graph_constructor_rejects_violations():
    with pytest.raises(ValidationError):
        ParkingGraph(3, (DOWN, UP, DOWNISH))


def test_single_vertex_graph_is_accepted():
    g = graph(1)
    assert in_degrees_mixed(g) == (0,)
    assert isinstance(check_source_sink(g), ParkingGraph)
    assert [pg.kinds for pg in enumerate_parking_graphs(1)] == [()]


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 3), (3, 16), (4, 125)])
def test_parking_graph_count_matches_closed_form(n, expected):
    assert sum(1 for _ in enumerate_parking_graphs(n)) == expected


def test_enumeration_starts_at_the_all_up_graph():
    first = next(iter(enumerate_parking_graphs(3)))
    assert first.kinds == (UP, UP, UP)


def test_mixed_in_degree_never_exceeds_oriented_in_degree():
    for n in range(1, 5):
        for kinds in product(KIND_ENUM_ORDER, repeat=pair_count(n)):
            g = MixedGraph(n, kinds)
            mixed = in_degrees_mixed(g)
            oriented = in_degrees_oriented(g)
            assert all(m <= o for m, o in zip(mixed, oriented))


def test_oriented_in_degrees_of_parking_graphs_are_permutations():
    for n in range(1, 6):
        for pg in enumerate_parking_graphs(n):
            assert sorted(in_degrees_oriented(pg)) == list(range(n))


def test_kind_accessor_and_validation():
    g = graph(3, UP, DOWN, DOWNISH)
    assert g.kind(1, 2) is UP
    assert g.kind(2, 3) is DOWNISH
    with pytest.raises(ValidationError):
        g.kind(2, 1)
    with pytest.raises(ValidationError):
        MixedGraph(3, (UP, DOWN))  # wrong arity
    with pytest.raises(ValidationError):
        MixedGraph(0, ())
    with pytest.raises(CapExceeded):
        list(enumerate_parking_graphs(7))


def test_range_partition_reproduces_full_enumeration():
    n = 3
    total = 3 ** pair_count(n)
    whole = [pg.kinds for pg in enumerate_parking_graphs(n)]
    for split in (1, 3, 8):
        got = []
        for i in range(split):
            got.extend(
                parking_graph_kinds_in_range(
                    n, total * i // split, total * (i + 1) // split
                )
            )
        assert got == whole


def test_canonical_pairs_shape():
    assert canonical_pairs(4) == ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))
    assert pair_count(5) == 10
