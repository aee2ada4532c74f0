"""Labeled trees, Prufer codes, and the Pollak correspondence.

Labeled trees on n+1 vertices, parking functions of length n, and codes
of length n-1 all have (n+1)^(n-1) members.  The Prufer code walks
between trees and codes over the label alphabet {1, ..., n+1}; the
Pollak map sends a parking function to its consecutive differences
modulo n+1, a code over the residues {0, ..., n}.  Residue r and label
r+1 are identified throughout.

The Pollak inverse relies on a uniqueness fact: of the n+1 cyclic
shifts that share a given difference code, exactly one is a parking
function, so brute force over the first entry recovers it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import AlgorithmInvariantError, ValidationError
from .parking import ParkingFunction, check_by_sort


@dataclass(frozen=True)
class LabeledTree:
    """A tree on vertices 1..n_vertices; edges stored sorted."""

    n_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not isinstance(self.n_vertices, int) or self.n_vertices < 2:
            raise ValidationError(
                f"a tree here has at least 2 vertices, got {self.n_vertices!r}"
            )
        canon = tuple(
            sorted(tuple(sorted((a, b))) for a, b in tuple(self.edges))
        )
        object.__setattr__(self, "edges", canon)
        m = self.n_vertices
        seen = set()
        adjacency: dict[int, list[int]] = {v: [] for v in range(1, m + 1)}
        for a, b in canon:
            if not (1 <= a <= m and 1 <= b <= m) or a == b:
                raise ValidationError(f"bad edge ({a}, {b}) for {m} vertices")
            if (a, b) in seen:
                raise ValidationError(f"duplicate edge ({a}, {b})")
            seen.add((a, b))
            adjacency[a].append(b)
            adjacency[b].append(a)
        if len(canon) != m - 1:
            raise ValidationError(
                f"a tree on {m} vertices has {m - 1} edges, got {len(canon)}"
            )
        reached = {1}
        stack = [1]
        while stack:
            v = stack.pop()
            for w in adjacency[v]:
                if w not in reached:
                    reached.add(w)
                    stack.append(w)
        if len(reached) != m:
            raise ValidationError("edge set is not connected")


@dataclass(frozen=True)
class PruferCode:
    """Length n-1 sequence over the labels {1, ..., n+1}."""

    labels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        hi = self.n + 1
        for v in self.labels:
            if not isinstance(v, int) or not 1 <= v <= hi:
                raise ValidationError(f"label {v!r} outside 1..{hi}")

    @property
    def n(self) -> int:
        return len(self.labels) + 1


@dataclass(frozen=True)
class PollakCode:
    """Length n-1 sequence over the residues {0, ..., n}."""

    residues: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "residues", tuple(self.residues))
        hi = self.n
        for v in self.residues:
            if not isinstance(v, int) or not 0 <= v <= hi:
                raise ValidationError(f"residue {v!r} outside 0..{hi}")

    @property
    def n(self) -> int:
        return len(self.residues) + 1


def prufer_code_of_pollak(code: PollakCode) -> PruferCode:
    return PruferCode(tuple(r + 1 for r in code.residues))


def pollak_code_of_prufer(code: PruferCode) -> PollakCode:
    return PollakCode(tuple(v - 1 for v in code.labels))


def prufer_encode(tree: LabeledTree) -> PruferCode:
    """Record the neighbor of the lowest leaf, remove it, repeat until a
    single edge remains.

    >>> prufer_encode(LabeledTree(4, ((1, 2), (2, 3), (3, 4)))).labels
    (2, 3)
    >>> prufer_encode(LabeledTree(4, ((1, 4), (2, 4), (3, 4)))).labels
    (4, 4)
    """
    adjacency: dict[int, set[int]] = {
        v: set() for v in range(1, tree.n_vertices + 1)
    }
    for a, b in tree.edges:
        adjacency[a].add(b)
        adjacency[b].add(a)
    labels = []
    alive = set(adjacency)
    while len(alive) > 2:
        leaf = min(v for v in alive if len(adjacency[v]) == 1)
        neighbor = next(iter(adjacency[leaf]))
        labels.append(neighbor)
        adjacency[neighbor].discard(leaf)
        del adjacency[leaf]
        alive.discard(leaf)
    return PruferCode(tuple(labels))


def prufer_decode(code: PruferCode) -> LabeledTree:
    """Inverse of prufer_encode, building a tree on n+1 vertices.

    >>> prufer_decode(PruferCode((2, 3))).edges
    ((1, 2), (2, 3), (3, 4))
    """
    m = len(code.labels) + 2
    degree = [1] * (m + 1)
    for v in code.labels:
        degree[v] += 1
    edges = []
    for v in code.labels:
        leaf = next(u for u in range(1, m + 1) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    last = [u for u in range(1, m + 1) if degree[u] == 1]
    edges.append((last[0], last[1]))
    return LabeledTree(m, tuple(edges))


def pollak(x: ParkingFunction) -> PollakCode:
    """Consecutive differences modulo n+1.

    >>> pollak(ParkingFunction((3, 1, 1, 2))).residues
    (3, 0, 1)
    """
    mod = x.n + 1
    e = x.entries
    return PollakCode(tuple((e[i + 1] - e[i]) % mod for i in range(x.n - 1)))


def pollak_inverse(code: PollakCode) -> ParkingFunction:
    """The unique parking function with the given difference code.

    Tries every first entry in {1, ..., n+1}; exactly one reconstruction
    parks, anything else indicates a bug.

    >>> pollak_inverse(PollakCode((3, 0))).entries
    (2, 1, 1)
    """
    n = code.n
    mod = n + 1
    found = []
    for first in range(1, mod + 1):
        entries = [first]
        acc = first - 1
        for r in code.residues:
            acc = (acc + r) % mod
            entries.append(acc + 1)
        if check_by_sort(entries):
            found.append(tuple(entries))
    if len(found) != 1:
        raise AlgorithmInvariantError(
            f"expected exactly one parking shift, found {len(found)}"
        )
    return ParkingFunction(found[0])


def tree_of_parking_function(x: ParkingFunction) -> LabeledTree:
    return prufer_decode(prufer_code_of_pollak(pollak(x)))


def parking_function_of_tree(tree: LabeledTree) -> ParkingFunction:
    return pollak_inverse(pollak_code_of_prufer(prufer_encode(tree)))
