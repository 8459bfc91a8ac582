"""Bit-encoded subsets of a ground set.

A subset is a plain ``int`` whose bit ``i`` is set when element ``i`` belongs
to it. Everything in the package passes subsets around in this form.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

Subset = int


def popcount(s: Subset) -> int:
    return s.bit_count()


def full(n: int) -> Subset:
    return (1 << n) - 1


def bit(i: int) -> Subset:
    return 1 << i


def elements(s: Subset) -> list[int]:
    """Indices of the set bits, ascending."""
    out = []
    while s:
        low = s & -s
        out.append(low.bit_length() - 1)
        s ^= low
    return out


def iter_elements(s: Subset) -> Iterator[int]:
    while s:
        low = s & -s
        yield low.bit_length() - 1
        s ^= low


def from_indices(indices: Iterable[int]) -> Subset:
    s = 0
    for i in indices:
        s |= 1 << i
    return s


def submasks(s: Subset) -> Iterator[Subset]:
    """All subsets of ``s`` (including 0 and ``s``), in no particular order."""
    sub = s
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & s


def of_size(universe: Subset, k: int) -> Iterator[Subset]:
    """Subsets of ``universe`` with exactly ``k`` elements, lexicographic in index order."""
    for combo in combinations(elements(universe), k):
        yield from_indices(combo)


def by_popcount(universe: Subset) -> Iterator[Subset]:
    """Every subset of ``universe`` ordered by size, then by bits."""
    members = elements(universe)
    for k in range(len(members) + 1):
        chunk = [from_indices(c) for c in combinations(members, k)]
        chunk.sort()
        yield from chunk


def is_subset(a: Subset, b: Subset) -> bool:
    return a & ~b == 0


def canonical_key(s: Subset) -> tuple[int, int]:
    """Sort key: ascending size, then ascending bits."""
    return (s.bit_count(), s)
