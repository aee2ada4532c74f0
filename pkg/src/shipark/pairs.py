"""Canonical ordering of vertex pairs (j, k) with 1 <= j < k <= n.

Every per-pair structure in the package (edge kinds, region signs, JSON
edge lists) is aligned with this order, so it lives in one place:

>>> canonical_pairs(4)
((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))
"""

from __future__ import annotations

from functools import lru_cache

from .errors import ValidationError


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


@lru_cache(maxsize=None)
def canonical_pairs(n: int) -> tuple[tuple[int, int], ...]:
    if not isinstance(n, int) or n < 1:
        raise ValidationError(f"vertex count must be a positive integer, got {n!r}")
    return tuple((j, k) for j in range(1, n + 1) for k in range(j + 1, n + 1))


@lru_cache(maxsize=None)
def _index_map(n: int) -> dict[tuple[int, int], int]:
    return {p: i for i, p in enumerate(canonical_pairs(n))}


def pair_index(n: int, j: int, k: int) -> int:
    """Position of the pair (j, k) in canonical_pairs(n)."""
    idx = _index_map(n).get((j, k))
    if idx is None:
        raise ValidationError(f"({j}, {k}) is not a pair with 1 <= j < k <= {n}")
    return idx
