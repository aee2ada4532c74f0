"""Regions of the Shi arrangement, handled with exact arithmetic.

The arrangement in R^n consists of the hyperplanes x_j - x_k = 0 and
x_j - x_k = 1 for j < k.  A region is recorded as a sign vector giving,
per pair, which side of both hyperplanes the region lies on: below
(x_j - x_k < 0), between (0 < x_j - x_k < 1), or above (x_j - x_k > 1).

Feasibility of a sign vector is decided by an exact oracle.  Strict
difference constraints are closed up with a symbolic infinitesimal:
every quantity is a pair (a, b) standing for a + b*eps with eps
positive and arbitrarily small, compared lexicographically.  A system
is feasible iff its constraint graph has no negative cycle, which
Bellman-Ford detects; the shortest-path potentials are a symbolic
interior point.  A concrete rational eps is then substituted, starting
at 1/(2n) and halving until exact re-verification passes, so the
returned witness is checked by substitution, never by floating point.
No floats appear anywhere in this module.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterator, NamedTuple, Sequence, Union

from .errors import (
    AlgorithmInvariantError,
    CapExceeded,
    OnHyperplaneError,
    ValidationError,
)
from .pairs import canonical_pairs, pair_count

ENUMERATION_CAP = 5

Rational = Union[int, Fraction]


class Sign(enum.Enum):
    BELOW = "below"
    BETWEEN = "between"
    ABOVE = "above"


# Enumeration order for signs; mirrors the edge-kind order up < downish
# < down of the graph module so the k-th region candidate and the k-th
# graph candidate correspond under the edge/sign translation.
SIGN_ENUM_ORDER = (Sign.BELOW, Sign.BETWEEN, Sign.ABOVE)


def _as_fraction(value, what: str) -> Fraction:
    # floats are banned: exactness is the whole point of this module
    if isinstance(value, bool) or isinstance(value, float):
        raise ValidationError(f"{what} must be an exact rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    raise ValidationError(f"{what} must be an exact rational, got {value!r}")


@dataclass(frozen=True)
class RegionSignVector:
    """Per-pair position of a region, aligned with canonical_pairs(n)."""

    n: int
    signs: tuple[Sign, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValidationError(f"dimension must be positive, got {self.n!r}")
        object.__setattr__(self, "signs", tuple(self.signs))
        if len(self.signs) != pair_count(self.n):
            raise ValidationError(
                f"expected {pair_count(self.n)} signs for n={self.n}, "
                f"got {len(self.signs)}"
            )
        for s in self.signs:
            if not isinstance(s, Sign):
                raise ValidationError(f"not a sign: {s!r}")

    def sign(self, j: int, k: int) -> Sign:
        from .pairs import pair_index

        return self.signs[pair_index(self.n, j, k)]


@dataclass(frozen=True)
class RationalPoint:
    """A point of Q^n; coordinates are exact rationals."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(
            _as_fraction(c, "coordinate") for c in tuple(self.coords)
        )
        if not coords:
            raise ValidationError("a point needs at least one coordinate")
        object.__setattr__(self, "coords", coords)

    @property
    def n(self) -> int:
        return len(self.coords)


@dataclass(frozen=True)
class Constraint:
    """A strict difference constraint x_j - x_k REL bound, REL in {<, >}."""

    j: int
    k: int
    relation: str
    bound: Fraction

    def __post_init__(self):
        if self.relation not in ("<", ">"):
            raise ValidationError(f"relation must be '<' or '>', got {self.relation!r}")
        object.__setattr__(self, "bound", _as_fraction(self.bound, "bound"))

    def holds_at(self, coords: Sequence[Fraction]) -> bool:
        diff = coords[self.j - 1] - coords[self.k - 1]
        return diff < self.bound if self.relation == "<" else diff > self.bound


@dataclass(frozen=True)
class DifferenceSystem:
    """A conjunction of strict difference constraints on x_1..x_n."""

    n: int
    constraints: tuple[Constraint, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValidationError(f"dimension must be positive, got {self.n!r}")
        object.__setattr__(self, "constraints", tuple(self.constraints))
        for c in self.constraints:
            if not (1 <= c.j <= self.n and 1 <= c.k <= self.n) or c.j == c.k:
                raise ValidationError(f"constraint indices out of range: {c}")


@dataclass(frozen=True)
class Witness:
    """An interior point, verified=True only after exact re-substitution."""

    point: RationalPoint
    verified: bool = False


@dataclass(frozen=True)
class Infeasible:
    """Certificate of infeasibility: a cycle of constraints whose bounds
    sum to a contradiction.  A normal outcome, not an error."""

    cycle: tuple[Constraint, ...] = field(default_factory=tuple)


def system_of_sign_vector(sv: RegionSignVector) -> DifferenceSystem:
    """Open-condition constraint system of a sign vector.

    above: x_j - x_k > 1; between: 0 < x_j - x_k < 1; below: x_j - x_k < 0.
    """
    cons: list[Constraint] = []
    for (j, k), s in zip(canonical_pairs(sv.n), sv.signs):
        if s is Sign.ABOVE:
            cons.append(Constraint(j, k, ">", Fraction(1)))
        elif s is Sign.BETWEEN:
            cons.append(Constraint(j, k, ">", Fraction(0)))
            cons.append(Constraint(j, k, "<", Fraction(1)))
        else:
            cons.append(Constraint(j, k, "<", Fraction(0)))
    return DifferenceSystem(sv.n, tuple(cons))


_MAX_EPS_HALVINGS = 64


def feasible_interior(system: DifferenceSystem) -> Witness | Infeasible:
    """Decide the system exactly; return a verified witness or a cycle.

    Each strict constraint becomes an edge of a difference-constraint
    graph with weight (bound, -1), the -1 being the eps coefficient.
    Bellman-Ford from a virtual source (all distances start at (0, 0))
    either converges, giving potentials that satisfy every constraint
    with at least eps of slack, or keeps relaxing, in which case the
    predecessor chain contains a negative cycle and that cycle's
    constraints are returned as the certificate.
    """
    n = system.n
    # edge (tail, head, weight): x_head <= x_tail + weight
    edges: list[tuple[int, int, tuple[Fraction, int], Constraint]] = []
    for c in system.constraints:
        if c.relation == "<":
            edges.append((c.k, c.j, (c.bound, -1), c))
        else:
            edges.append((c.j, c.k, (-c.bound, -1), c))

    dist: list[tuple[Rational, int]] = [(0, 0)] * (n + 1)  # 1-based
    pred: list[tuple[int, Constraint] | None] = [None] * (n + 1)
    changed = True
    for _ in range(n):
        changed = False
        for tail, head, (wa, wb), c in edges:
            da, db = dist[tail]
            cand = (da + wa, db + wb)
            if cand < dist[head]:
                dist[head] = cand
                pred[head] = (tail, c)
                changed = True
        if not changed:
            break
    if changed:
        for tail, head, (wa, wb), c in edges:
            da, db = dist[tail]
            if (da + wa, db + wb) < dist[head]:
                pred[head] = (tail, c)
                return Infeasible(_extract_cycle(pred, head, n))

    eps = Fraction(1, 2 * n)
    for _ in range(_MAX_EPS_HALVINGS):
        coords = tuple(Fraction(a) + b * eps for a, b in dist[1:])
        if all(c.holds_at(coords) for c in system.constraints):
            return Witness(RationalPoint(coords), verified=True)
        eps /= 2
    raise AlgorithmInvariantError(
        "no concrete eps verified a symbolically feasible system"
    )


def _extract_cycle(
    pred: list[tuple[int, Constraint] | None], start: int, n: int
) -> tuple[Constraint, ...]:
    # walk predecessors far enough to be inside the cycle, then collect it
    v = start
    for _ in range(n + 1):
        entry = pred[v]
        assert entry is not None
        v = entry[0]
    cycle = []
    u = v
    while True:
        entry = pred[u]
        assert entry is not None
        tail, c = entry
        cycle.append(c)
        u = tail
        if u == v:
            break
    cycle.reverse()
    return tuple(cycle)


def sign_vector_of_point(point: RationalPoint) -> RegionSignVector:
    """Sign vector of the region containing an interior point.

    Raises OnHyperplaneError naming the first pair, in canonical order,
    with x_j - x_k equal to 0 or 1.
    """
    coords = point.coords
    signs = []
    for j, k in canonical_pairs(point.n):
        diff = coords[j - 1] - coords[k - 1]
        if diff == 0 or diff == 1:
            raise OnHyperplaneError((j, k), diff)
        if diff < 0:
            signs.append(Sign.BELOW)
        elif diff < 1:
            signs.append(Sign.BETWEEN)
        else:
            signs.append(Sign.ABOVE)
    return RegionSignVector(point.n, tuple(signs))


def _order_arcs(sv: RegionSignVector) -> list[set[int]]:
    """Arcs u -> v encoding y_u <= y_v for the recession directions.

    above forces y_j >= y_k in any unbounded direction, below forces
    y_j <= y_k, between forces equality (arcs both ways).
    """
    adj: list[set[int]] = [set() for _ in range(sv.n + 1)]
    for (j, k), s in zip(canonical_pairs(sv.n), sv.signs):
        if s is Sign.ABOVE:
            adj[k].add(j)
        elif s is Sign.BELOW:
            adj[j].add(k)
        else:
            adj[j].add(k)
            adj[k].add(j)
    return adj


def _reaches_all(adj: list[set[int]], n: int) -> bool:
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def is_relatively_bounded(sv: RegionSignVector) -> bool:
    """Whether the region is bounded once the all-ones line is quotiented
    out.

    A direction y lies in the recession cone iff it respects the arcs of
    _order_arcs; the cone degenerates to the all-ones line exactly when
    that digraph is strongly connected.  n = 1 is bounded by convention.

    Precondition: sv is feasible; checked, ValidationError otherwise.
    """
    outcome = feasible_interior(system_of_sign_vector(sv))
    if isinstance(outcome, Infeasible):
        raise ValidationError("sign vector is infeasible, no region to test")
    adj = _order_arcs(sv)
    rev: list[set[int]] = [set() for _ in range(sv.n + 1)]
    for u in range(1, sv.n + 1):
        for v in adj[u]:
            rev[v].add(u)
    return _reaches_all(adj, sv.n) and _reaches_all(rev, sv.n)


class Region(NamedTuple):
    sign_vector: RegionSignVector
    witness: Witness


def enumerate_regions(n: int, cap: int = ENUMERATION_CAP) -> Iterator[Region]:
    """All regions with a verified witness each, in lexicographic order
    over the canonical pair list with sign order below < between < above."""
    if not isinstance(n, int) or n < 1:
        raise ValidationError(f"dimension must be positive, got {n!r}")
    if n > cap:
        raise CapExceeded(f"enumeration for n={n} exceeds the cap {cap}")
    for signs in product(SIGN_ENUM_ORDER, repeat=pair_count(n)):
        sv = RegionSignVector(n, signs)
        outcome = feasible_interior(system_of_sign_vector(sv))
        if isinstance(outcome, Witness):
            yield Region(sv, outcome)


def regions_in_range(n: int, lo: int, hi: int) -> list[Region]:
    """Feasible regions among sign-vector candidates with index in
    [lo, hi), indexed as base-3 numerals over SIGN_ENUM_ORDER, most
    significant digit first.  Matches enumerate_regions order."""
    m = pair_count(n)
    out = []
    for idx in range(lo, hi):
        digits = []
        rest = idx
        for _ in range(m):
            rest, d = divmod(rest, 3)
            digits.append(SIGN_ENUM_ORDER[d])
        sv = RegionSignVector(n, tuple(reversed(digits)))
        outcome = feasible_interior(system_of_sign_vector(sv))
        if isinstance(outcome, Witness):
            out.append(Region(sv, outcome))
    return out


def braid_cell_of_point(point: RationalPoint) -> tuple[int, ...]:
    """The permutation pi with x_pi(1) > x_pi(2) > ... > x_pi(n).

    >>> braid_cell_of_point(RationalPoint((5, 2, 9)))
    (3, 1, 2)
    """
    coords = point.coords
    for j, k in canonical_pairs(point.n):
        if coords[j - 1] == coords[k - 1]:
            raise OnHyperplaneError((j, k), Fraction(0))
    order = sorted(range(1, point.n + 1), key=lambda v: coords[v - 1], reverse=True)
    return tuple(order)


def project_to_sum_zero(point: RationalPoint) -> RationalPoint:
    """Subtract the coordinate mean; differences are unchanged."""
    mean = sum(point.coords, Fraction(0)) / point.n
    return RationalPoint(tuple(c - mean for c in point.coords))
