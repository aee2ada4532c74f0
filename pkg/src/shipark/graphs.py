"""Mixed graphs on the complete graph K_n and the source-sink condition.

Each vertex pair (j, k) with j < k carries exactly one edge, which is
either directed j -> k (an "up" edge), directed j <- k (a "down" edge),
or undirected (a "downish" edge).  Orienting every downish edge jk as
k -> j yields the associated digraph; a mixed graph is a parking graph
when that digraph is acyclic and no triangle containing both a down and
a downish edge joins its source and sink by a downish edge.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Mapping

from .errors import CapExceeded, ValidationError
from .pairs import canonical_pairs, pair_count, pair_index

ENUMERATION_CAP = 6


class EdgeKind(enum.Enum):
    UP = "up"
    DOWN = "down"
    DOWNISH = "downish"


# Enumeration order for edge kinds; deliberately not the enum definition
# order, so it is spelled out once here.
KIND_ENUM_ORDER = (EdgeKind.UP, EdgeKind.DOWNISH, EdgeKind.DOWN)


class ViolationKind(enum.Enum):
    CYCLE = "cycle"
    DOWNISH_SOURCE_SINK = "downish-source-sink"


@dataclass(frozen=True)
class Violation:
    """Why a mixed graph fails the source-sink condition.

    vertices is the lexicographically least offending triangle.
    """

    kind: ViolationKind
    vertices: tuple[int, int, int]


@dataclass(frozen=True, eq=False)
class MixedGraph:
    """A total assignment of edge kinds to the pairs of K_n.

    kinds is aligned with canonical_pairs(n).  n = 1 gives the edgeless
    graph on one vertex.  Equality compares (n, kinds) so a certified
    subclass instance still equals its plain counterpart.
    """

    n: int
    kinds: tuple[EdgeKind, ...]

    def __eq__(self, other):
        if isinstance(other, MixedGraph):
            return (self.n, self.kinds) == (other.n, other.kinds)
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.kinds))

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValidationError(f"vertex count must be positive, got {self.n!r}")
        object.__setattr__(self, "kinds", tuple(self.kinds))
        if len(self.kinds) != pair_count(self.n):
            raise ValidationError(
                f"expected {pair_count(self.n)} edge kinds for n={self.n}, "
                f"got {len(self.kinds)}"
            )
        for kind in self.kinds:
            if not isinstance(kind, EdgeKind):
                raise ValidationError(f"not an edge kind: {kind!r}")

    def kind(self, j: int, k: int) -> EdgeKind:
        """Kind of the edge on the pair (j, k), j < k."""
        return self.kinds[pair_index(self.n, j, k)]

    @classmethod
    def from_mapping(
        cls, n: int, kinds: Mapping[tuple[int, int], EdgeKind]
    ) -> "MixedGraph":
        pairs = canonical_pairs(n)
        if set(kinds) != set(pairs):
            raise ValidationError("edge kinds must cover exactly the pairs j < k")
        return cls(n, tuple(kinds[p] for p in pairs))


@dataclass(frozen=True)
class Digraph:
    """A simple digraph on vertices 1..n, at most one arc per pair."""

    n: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "arcs", frozenset(self.arcs))
        for t, h in self.arcs:
            if not (1 <= t <= self.n and 1 <= h <= self.n) or t == h:
                raise ValidationError(f"bad arc ({t}, {h}) for n={self.n}")


def _oriented_arc(j: int, k: int, kind: EdgeKind) -> tuple[int, int]:
    # up j->k keeps its direction; down and downish both point k->j
    return (j, k) if kind is EdgeKind.UP else (k, j)


def orient(g: MixedGraph) -> Digraph:
    """The associated digraph: downish jk becomes the arc k -> j."""
    arcs = frozenset(
        _oriented_arc(j, k, kind)
        for (j, k), kind in zip(canonical_pairs(g.n), g.kinds)
    )
    return Digraph(g.n, arcs)


def in_degrees_mixed(g: MixedGraph) -> tuple[int, ...]:
    """In-degree per vertex counting directed edges only.

    Downish edges contribute nothing here, in contrast to the oriented
    count below.
    """
    deg = [0] * g.n
    for (j, k), kind in zip(canonical_pairs(g.n), g.kinds):
        if kind is EdgeKind.UP:
            deg[k - 1] += 1
        elif kind is EdgeKind.DOWN:
            deg[j - 1] += 1
    return tuple(deg)


def in_degrees_oriented(g: MixedGraph) -> tuple[int, ...]:
    """In-degree per vertex in the associated digraph orient(g)."""
    deg = [0] * g.n
    for (j, k), kind in zip(canonical_pairs(g.n), g.kinds):
        _, h = _oriented_arc(j, k, kind)
        deg[h - 1] += 1
    return tuple(deg)


def _triangle_in_degrees(
    g: MixedGraph, tri: tuple[int, int, int]
) -> dict[int, int]:
    deg = {v: 0 for v in tri}
    for a, b in combinations(tri, 2):
        _, h = _oriented_arc(a, b, g.kind(a, b))
        deg[h] += 1
    return deg


def is_acyclic_by_triangles(g: MixedGraph) -> bool:
    """No 3-vertex subset induces a directed cycle in orient(g).

    On tournaments this is equivalent to full acyclicity, so checking
    triangles suffices for the associated digraph.
    """
    for tri in combinations(range(1, g.n + 1), 3):
        if sorted(_triangle_in_degrees(g, tri).values()) == [1, 1, 1]:
            return False
    return True


@dataclass(frozen=True)
class ParkingGraph(MixedGraph):
    """A mixed graph certified to satisfy the source-sink condition.

    Construction re-runs the check, so an instance can always be trusted.
    """

    def __post_init__(self):
        super().__post_init__()
        v = _source_sink_violation(self.n, self.kinds)
        if v is not None:
            raise ValidationError(
                f"not a parking graph: {v.kind.value} on triangle {v.vertices}"
            )


def _source_sink_violation(
    n: int, kinds: tuple[EdgeKind, ...]
) -> Violation | None:
    """First violation over triangles in lexicographic order, else None."""
    kind_of = {}
    for p, kind in zip(canonical_pairs(n), kinds):
        kind_of[p] = kind
    for tri in combinations(range(1, n + 1), 3):
        deg = {v: 0 for v in tri}
        tri_kinds = []
        for a, b in combinations(tri, 2):
            kind = kind_of[(a, b)]
            tri_kinds.append(kind)
            _, h = _oriented_arc(a, b, kind)
            deg[h] += 1
        if sorted(deg.values()) == [1, 1, 1]:
            return Violation(ViolationKind.CYCLE, tri)
        if EdgeKind.DOWN in tri_kinds and EdgeKind.DOWNISH in tri_kinds:
            source = next(v for v in tri if deg[v] == 0)
            sink = next(v for v in tri if deg[v] == 2)
            joining = (min(source, sink), max(source, sink))
            if kind_of[joining] is EdgeKind.DOWNISH:
                return Violation(ViolationKind.DOWNISH_SOURCE_SINK, tri)
    return None


def check_source_sink(g: MixedGraph) -> ParkingGraph | Violation:
    """Certify g as a parking graph or report the least offending triangle."""
    v = _source_sink_violation(g.n, g.kinds)
    if v is not None:
        return v
    return ParkingGraph(g.n, g.kinds)


def enumerate_parking_graphs(
    n: int, cap: int = ENUMERATION_CAP
) -> Iterator[ParkingGraph]:
    """All parking graphs on K_n, lexicographic over the canonical pair
    list with kind order up < downish < down."""
    if not isinstance(n, int) or n < 1:
        raise ValidationError(f"vertex count must be positive, got {n!r}")
    if n > cap:
        raise CapExceeded(f"enumeration for n={n} exceeds the cap {cap}")
    for kinds in product(KIND_ENUM_ORDER, repeat=pair_count(n)):
        if _source_sink_violation(n, kinds) is None:
            yield ParkingGraph(n, kinds)


def parking_graph_kinds_in_range(
    n: int, lo: int, hi: int
) -> list[tuple[EdgeKind, ...]]:
    """Accepted kind tuples among candidates with index in [lo, hi).

    Candidates are indexed as base-3 numerals over KIND_ENUM_ORDER, most
    significant digit first, matching enumerate_parking_graphs.
    """
    m = pair_count(n)
    out = []
    for idx in range(lo, hi):
        digits = []
        rest = idx
        for _ in range(m):
            rest, d = divmod(rest, 3)
            digits.append(KIND_ENUM_ORDER[d])
        kinds = tuple(reversed(digits))
        if _source_sink_violation(n, kinds) is None:
            out.append(kinds)
    return out
