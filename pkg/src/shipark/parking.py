"""Parking functions: recognizers, enumeration, counting.

A preference sequence (x_1, ..., x_n) of positive integers is a parking
function when n cars, arriving in order with car i preferring spot x_i,
all manage to park on a one-way street with spots 1..n: each car takes
the first free spot at or after its preference.  Equivalently, the
sorted sequence z satisfies z_k <= k for every k.

Two independent recognizers are provided on purpose; tests compare them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .errors import CapExceeded, ValidationError

ENUMERATION_CAP = 7


def _validate_preferences(entries: Sequence[int]) -> tuple[int, ...]:
    seq = tuple(entries)
    if not seq:
        raise ValidationError("preference sequence must be nonempty")
    for i, v in enumerate(seq, start=1):
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ValidationError(
                f"preference of car {i} must be a positive integer, got {v!r}"
            )
    return seq


@dataclass(frozen=True)
class ParkingOutcome:
    """Result of the parking simulation.

    On success, assignment[i] is the 1-based spot taken by car i+1 and
    satisfies assignment[i] >= entries[i].  On failure, first_failed_car
    is the 1-based index of the first car that found no spot.
    """

    success: bool
    assignment: tuple[int, ...] | None
    first_failed_car: int | None


@dataclass(frozen=True)
class ParkingFunction:
    """A certified parking function.

    Construction validates the parking condition, so every instance in
    circulation is genuine.  Entries beyond n are rejected here even
    though the simulation accepts them as (failing) input.

    >>> ParkingFunction((2, 1, 1)).n
    3
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", _validate_preferences(self.entries))
        n = len(self.entries)
        for v in self.entries:
            if v > n:
                raise ValidationError(f"entry {v} exceeds the number of cars {n}")
        if not check_by_sort(self.entries):
            raise ValidationError(f"{self.entries} violates the parking condition")

    @property
    def n(self) -> int:
        return len(self.entries)


def check_by_simulation(entries: Sequence[int]) -> ParkingOutcome:
    """Drive the cars one by one and report what happened.

    Entries larger than n are permitted; such a car simply fails to park.

    >>> check_by_simulation((2, 1, 1)).assignment
    (2, 1, 3)
    >>> check_by_simulation((1, 3, 3, 4)).first_failed_car
    4
    """
    seq = _validate_preferences(entries)
    n = len(seq)
    taken = [False] * (n + 1)  # 1-based spots
    assignment = []
    for car, pref in enumerate(seq, start=1):
        spot = pref
        while spot <= n and taken[spot]:
            spot += 1
        if spot > n:
            return ParkingOutcome(False, None, car)
        taken[spot] = True
        assignment.append(spot)
    return ParkingOutcome(True, tuple(assignment), None)


def check_by_sort(entries: Sequence[int]) -> bool:
    """Sorted-criterion recognizer: z_k <= k for the sorted sequence z.

    >>> check_by_sort((2, 1, 1))
    True
    >>> check_by_sort((3, 1, 3))
    False
    """
    seq = _validate_preferences(entries)
    return all(z <= k for k, z in enumerate(sorted(seq), start=1))


def enumerate_parking_functions(
    n: int, cap: int = ENUMERATION_CAP
) -> Iterator[ParkingFunction]:
    """All parking functions of length n in lexicographic order."""
    if not isinstance(n, int) or n < 1:
        raise ValidationError(f"length must be a positive integer, got {n!r}")
    if n > cap:
        raise CapExceeded(f"enumeration for n={n} exceeds the cap {cap}")
    for seq in product(range(1, n + 1), repeat=n):
        if check_by_sort(seq):
            yield ParkingFunction(seq)


def parking_tuples_in_range(n: int, lo: int, hi: int) -> list[tuple[int, ...]]:
    """Parking functions among the candidates with index in [lo, hi).

    Candidates are the n^n preference sequences in lexicographic order,
    indexed as base-n numerals (index 0 is (1, ..., 1)).  Partitioning
    the index space and concatenating the parts reproduces the order of
    enumerate_parking_functions exactly, which is what the parallel
    enumeration relies on.
    """
    out = []
    for idx in range(lo, hi):
        digits = []
        rest = idx
        for _ in range(n):
            rest, d = divmod(rest, n)
            digits.append(d + 1)
        seq = tuple(reversed(digits))
        if check_by_sort(seq):
            out.append(seq)
    return out


def count_parking_functions(n: int) -> int:
    """Closed form (n+1)^(n-1), exact at any size.

    >>> count_parking_functions(6)
    16807
    >>> count_parking_functions(100) == 101 ** 99
    True
    """
    if not isinstance(n, int) or n < 1:
        raise ValidationError(f"length must be a positive integer, got {n!r}")
    return (n + 1) ** (n - 1)
