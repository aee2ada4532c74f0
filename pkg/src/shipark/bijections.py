"""The bijections tying parking functions, parking graphs, and regions.

phi reads a parking function straight off a parking graph's directed
in-degrees.  Its inverse rebuilds the graph from the preference vector
by an explicit feeding procedure whose full event log (the algorithm
trace) and final bookkeeping vector (the source priority vector) are
returned alongside the graph, because several structural laws are
stated, and tested, in terms of them.

psi translates edge kinds into region signs (down -> above, downish ->
between, up -> below) and certifies the region nonempty with an exact
witness.  The Pak-Stanley label of a region is then phi after psi
inverse, and the central region 0 < x_n < ... < x_1 < 1 gets the
all-ones label.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence, Union

from .errors import AlgorithmInvariantError, ValidationError
from .geometry import (
    RationalPoint,
    Region,
    RegionSignVector,
    Sign,
    Witness,
    feasible_interior,
    sign_vector_of_point,
    system_of_sign_vector,
)
from .graphs import (
    EdgeKind,
    MixedGraph,
    ParkingGraph,
    Violation,
    check_source_sink,
    in_degrees_mixed,
)
from .pairs import canonical_pairs
from .parking import ParkingFunction

SIGN_OF_KIND = {
    EdgeKind.DOWN: Sign.ABOVE,
    EdgeKind.DOWNISH: Sign.BETWEEN,
    EdgeKind.UP: Sign.BELOW,
}
KIND_OF_SIGN = {s: k for k, s in SIGN_OF_KIND.items()}


@dataclass(frozen=True)
class SourcePriorityVector:
    """Final bookkeeping vector of the graph-rebuilding procedure.

    Always a permutation of {-1, ..., -n}; |values[i]| sorts vertex i+1
    into the reverse of the order in which vertices fed an up step.
    """

    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        n = len(self.values)
        if sorted(self.values) != list(range(-n, 0)):
            raise ValidationError(
                f"expected a permutation of -1..-{n}, got {self.values}"
            )

    @property
    def n(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class UpStep:
    feeder: int
    targets: tuple[int, ...]


@dataclass(frozen=True)
class DownStep:
    feeder: int
    targets: tuple[int, ...]
    # instrumentation: candidate feeders at selection time, the feeder's
    # y value (negative on every parking input), and targets skipped
    # because the pair already carried an edge
    candidates: tuple[int, ...]
    feeder_value: int
    skipped: tuple[int, ...]


@dataclass(frozen=True)
class Finalize:
    pairs: tuple[tuple[int, int], ...]


TraceEvent = Union[UpStep, DownStep, Finalize]


@dataclass(frozen=True)
class AlgorithmTrace:
    events: tuple[TraceEvent, ...]

    @property
    def up_feeders(self) -> tuple[int, ...]:
        return tuple(e.feeder for e in self.events if isinstance(e, UpStep))

    @property
    def guard_fires(self) -> int:
        return sum(len(e.skipped) for e in self.events if isinstance(e, DownStep))


class PhiInverse(NamedTuple):
    graph: ParkingGraph
    priorities: SourcePriorityVector
    trace: AlgorithmTrace


def phi(graph: ParkingGraph) -> ParkingFunction:
    """Directed in-degrees plus one.  Requires a certified graph."""
    if not isinstance(graph, ParkingGraph):
        raise ValidationError("phi requires a certified ParkingGraph")
    return ParkingFunction(tuple(d + 1 for d in in_degrees_mixed(graph)))


def phi_inverse(x: ParkingFunction | Sequence[int]) -> PhiInverse:
    """Rebuild the parking graph whose directed in-degrees are x - 1.

    Working vector y starts at x - 1.  While some y_k is zero, the
    largest such k feeds an up step: it sends an up edge to every later
    vertex with positive y (decrementing each), then its own entry drops
    to -1, then every entry that was already negative at the start of
    the step drops by one.  Otherwise, while some y_k is positive, a
    down step runs: among vertices j for which some earlier k has
    y_k > 0 and no edge joins k and j yet, the unique one with minimal
    y_j feeds a down edge to every such k (decrementing each).  When no
    entry is nonnegative the remaining pairs become downish edges.

    Ties in the down-feeder minimum, a nonnegative down feeder, or a
    duplicate edge introduction are impossible on parking input; any of
    them raises AlgorithmInvariantError rather than recovering silently.
    """
    if not isinstance(x, ParkingFunction):
        x = ParkingFunction(tuple(x))
    n = x.n
    y = [v - 1 for v in x.entries]
    edges: dict[tuple[int, int], EdgeKind] = {}
    events: list[TraceEvent] = []

    def introduce(j: int, k: int, kind: EdgeKind) -> None:
        if (j, k) in edges:
            raise AlgorithmInvariantError(
                f"duplicate edge introduction on ({j}, {k})"
            )
        edges[(j, k)] = kind

    for _ in range(2 + n + n * n):
        zeros = [k for k in range(1, n + 1) if y[k - 1] == 0]
        if zeros:
            feeder = max(zeros)
            targets = tuple(
                k for k in range(feeder + 1, n + 1) if y[k - 1] > 0
            )
            was_negative = [k for k in range(1, n + 1) if y[k - 1] < 0]
            for k in targets:
                introduce(feeder, k, EdgeKind.UP)
                y[k - 1] -= 1
            y[feeder - 1] -= 1
            for k in was_negative:
                y[k - 1] -= 1
            events.append(UpStep(feeder, targets))
            continue

        positives = [k for k in range(1, n + 1) if y[k - 1] > 0]
        if positives:
            candidates = tuple(
                j
                for j in range(2, n + 1)
                if any(k < j and (k, j) not in edges for k in positives)
            )
            if not candidates:
                raise AlgorithmInvariantError("no down feeder candidate")
            least = min(y[j - 1] for j in candidates)
            argmin = [j for j in candidates if y[j - 1] == least]
            if len(argmin) != 1:
                raise AlgorithmInvariantError(
                    f"down-feeder minimum tied between {argmin}"
                )
            feeder = argmin[0]
            if least >= 0:
                raise AlgorithmInvariantError(
                    f"down feeder {feeder} selected with y = {least} >= 0"
                )
            fed = []
            skipped = []
            for k in positives:
                if k >= feeder:
                    continue
                if (k, feeder) in edges:
                    skipped.append(k)
                    continue
                introduce(k, feeder, EdgeKind.DOWN)
                y[k - 1] -= 1
                fed.append(k)
            events.append(
                DownStep(feeder, tuple(fed), candidates, least, tuple(skipped))
            )
            continue

        remaining = tuple(
            p for p in canonical_pairs(n) if p not in edges
        )
        for p in remaining:
            edges[p] = EdgeKind.DOWNISH
        events.append(Finalize(remaining))
        break
    else:
        raise AlgorithmInvariantError("feeding procedure failed to terminate")

    graph = MixedGraph(n, tuple(edges[p] for p in canonical_pairs(n)))
    certified = check_source_sink(graph)
    if isinstance(certified, Violation):
        raise AlgorithmInvariantError(
            f"rebuilt graph fails the source-sink condition: {certified}"
        )
    return PhiInverse(
        certified, SourcePriorityVector(tuple(y)), AlgorithmTrace(tuple(events))
    )


def psi(graph: ParkingGraph) -> Region:
    """Sign vector of the graph's region plus a verified interior point."""
    if not isinstance(graph, ParkingGraph):
        raise ValidationError("psi requires a certified ParkingGraph")
    sv = RegionSignVector(graph.n, tuple(SIGN_OF_KIND[k] for k in graph.kinds))
    outcome = feasible_interior(system_of_sign_vector(sv))
    if not isinstance(outcome, Witness):
        raise AlgorithmInvariantError(
            "region of a certified parking graph came back infeasible"
        )
    return Region(sv, outcome)


def psi_inverse(region: RegionSignVector | RationalPoint) -> ParkingGraph:
    """Parking graph of a region, given its sign vector or an interior
    point.

    A sign vector must be feasible (checked; ValidationError otherwise).
    A point must avoid the hyperplanes (OnHyperplaneError otherwise).
    """
    if isinstance(region, RationalPoint):
        sv = sign_vector_of_point(region)
    elif isinstance(region, RegionSignVector):
        outcome = feasible_interior(system_of_sign_vector(region))
        if not isinstance(outcome, Witness):
            raise ValidationError(
                "sign vector is infeasible, it names no region"
            )
        sv = region
    else:
        raise ValidationError(f"cannot take a region from {region!r}")
    g = MixedGraph(sv.n, tuple(KIND_OF_SIGN[s] for s in sv.signs))
    certified = check_source_sink(g)
    if isinstance(certified, Violation):
        raise AlgorithmInvariantError(
            f"graph of a nonempty region fails the source-sink condition: "
            f"{certified}"
        )
    return certified


def pak_stanley_label(
    region: RegionSignVector | RationalPoint,
) -> ParkingFunction:
    """Label of a region: phi of its parking graph."""
    return phi(psi_inverse(region))
