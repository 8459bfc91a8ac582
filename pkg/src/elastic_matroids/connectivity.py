"""Connectivity function, separations, and vertical/cyclic 3-separation triples."""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations
from typing import Iterator, Sequence

from .core import Matroid, check_size, closure, dual
from .errors import DomainError, PreconditionError
from .subsets import Subset, bit, canonical_key, elements, from_indices, popcount, submasks


def lambda_(m: Matroid, s: Subset) -> int:
    """Connectivity function r(S) + r(E-S) - r(E)."""
    return m.rank(s) + m.rank(m.ground & ~s) - m.rank()


def local_connectivity(m: Matroid, x: Subset, y: Subset) -> int:
    return m.rank(x) + m.rank(y) - m.rank(x | y)


def is_k_separating(m: Matroid, s: Subset, k: int) -> bool:
    return lambda_(m, s) <= k - 1


def is_exactly_k_separating(m: Matroid, s: Subset, k: int) -> bool:
    return lambda_(m, s) == k - 1


def _partitions(m: Matroid) -> Iterator[Subset]:
    # one side of every unordered partition: the side holding element 0, ordered by size then bits
    if m.size == 0:
        return
    rest = m.ground & ~1
    sides = sorted((s | 1 for s in submasks(rest)), key=canonical_key)
    yield from sides


def k_separations(m: Matroid, k: int) -> list[tuple[Subset, Subset]]:
    """Every partition (X, E-X) with lambda(X) <= k-1 and both sides of size >= k.

    X is the side containing element 0.
    """
    if k < 1:
        raise DomainError("k must be at least 1")
    check_size(m.size)
    out = []
    for x in _partitions(m):
        y = m.ground & ~x
        if min(popcount(x), popcount(y)) >= k and lambda_(m, x) <= k - 1:
            out.append((x, y))
    return out


def is_connected_up_to(m: Matroid, n: int) -> bool:
    """True iff ``m`` has no k-separation for any k < n."""
    check_size(m.size)
    for x in _partitions(m):
        small = min(popcount(x), popcount(m.ground & ~x))
        if small == 0:
            continue
        lam = lambda_(m, x)
        if lam < n - 1 and small >= lam + 1:
            return False
    return True


def is_three_connected(m: Matroid) -> bool:
    return is_connected_up_to(m, 3)


@dataclass(frozen=True)
class SeparationTriple:
    x: Subset
    e: int
    y: Subset
    kind: str = "vertical"
    y_maximal: bool = False

    def flipped(self) -> "SeparationTriple":
        return SeparationTriple(self.y, self.e, self.x, self.kind, False)

    @property
    def big_side(self) -> Subset:
        """Y together with e."""
        return self.y | bit(self.e)


def is_vertical_separation(m: Matroid, a: Subset) -> bool:
    """(A, E-A) is a vertical 3-separation."""
    b = m.ground & ~a
    return (
        popcount(a) >= 3
        and popcount(b) >= 3
        and lambda_(m, a) <= 2
        and m.rank(a) >= 3
        and m.rank(b) >= 3
    )


def is_vertical_triple(m: Matroid, x: Subset, e: int, y: Subset) -> bool:
    eb = bit(e)
    if x & y or (x | y | eb) != m.ground or (x | y) & eb:
        return False
    rx, ry = m.rank(x), m.rank(y)
    if m.rank(x | eb) != rx or m.rank(y | eb) != ry:
        return False
    return is_vertical_separation(m, x | eb) and is_vertical_separation(m, x)


def _require_3c(m: Matroid) -> None:
    if not is_three_connected(m):
        raise PreconditionError("the matroid is not 3-connected")


def _triples_at(m: Matroid, e: int, oriented: bool) -> Iterator[tuple[Subset, Subset]]:
    rest = m.ground & ~bit(e)
    idx = elements(rest)
    n = len(idx)
    for k in range(3, n - 2):
        if not oriented and k > n - k:
            break
        for combo in combinations(idx, k):
            x = from_indices(combo)
            y = rest & ~x
            if not oriented and k == n - k and x > y:
                continue
            if is_vertical_triple(m, x, e, y):
                yield x, y


def has_vertical_triple_at(m: Matroid, e: int) -> bool:
    return next(_triples_at(m, e, oriented=False), None) is not None


def vertical_3_separations(m: Matroid, oriented: bool = False, check: bool = True) -> list[SeparationTriple]:
    """All vertical 3-separations (X, {e}, Y).

    By default each unordered {X, Y} appears once per e, with X the smaller
    side (ties broken by bits). ``oriented=True`` lists both orientations.
    """
    if check:
        _require_3c(m)
    out = []
    for e in range(m.size):
        for x, y in _triples_at(m, e, oriented):
            out.append(SeparationTriple(x, e, y, "vertical"))
    return out


def cyclic_3_separations(m: Matroid, oriented: bool = False, check: bool = True) -> list[SeparationTriple]:
    """Triples that are vertical 3-separations of the dual."""
    if check:
        _require_3c(m)
    return [replace(t, kind="cyclic") for t in vertical_3_separations(dual(m), oriented, check=False)]


def mark_maximal(triples: Sequence[SeparationTriple]) -> list[SeparationTriple]:
    """Set ``y_maximal`` when no triple has an augmented side strictly containing Y+e.

    Triples are symmetric in X and Y, so both orientations of every input
    triple are candidates for the containing side.
    """
    sides = set()
    for t in triples:
        sides.add(t.y | bit(t.e))
        sides.add(t.x | bit(t.e))
    by_size = sorted(sides, key=popcount, reverse=True)
    out = []
    for t in triples:
        mine = t.big_side
        k = popcount(mine)
        maximal = True
        for s in by_size:
            if popcount(s) <= k:
                break
            if mine & ~s == 0:
                maximal = False
                break
        out.append(replace(t, y_maximal=maximal))
    return out


@dataclass(frozen=True)
class Flower:
    petals: tuple[Subset, ...]
    swirl_like: bool


def _check_petals(m: Matroid, petals: Sequence[Subset]) -> None:
    union = 0
    for p in petals:
        if popcount(p) < 2:
            raise DomainError("every petal needs at least two elements")
        if union & p:
            raise DomainError("petals overlap")
        union |= p
    if union != m.ground:
        raise DomainError("petals do not cover the ground set")


def is_flower(m: Matroid, petals: Sequence[Subset]) -> bool:
    _check_petals(m, petals)
    k = len(petals)
    return all(lambda_(m, p) <= 2 for p in petals) and all(
        lambda_(m, petals[i] | petals[(i + 1) % k]) <= 2 for i in range(k)
    )


def is_swirl_like(m: Matroid, petals: Sequence[Subset]) -> bool:
    """Consecutive unions exactly 3-separating; local connectivity 1 between
    neighbouring petals and 0 otherwise."""
    _check_petals(m, petals)
    k = len(petals)
    if k < 4:
        raise DomainError("a swirl-like flower needs at least four petals")
    for start in range(k):
        acc = 0
        for length in range(1, k):
            acc |= petals[(start + length - 1) % k]
            if lambda_(m, acc) != 2:
                return False
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = j - i == 1 or (i == 0 and j == k - 1)
            if local_connectivity(m, petals[i], petals[j]) != (1 if adjacent else 0):
                return False
    return True


def shrink_by_closure(m: Matroid, t: SeparationTriple) -> SeparationTriple:
    """(X - cl(Y), e, cl(Y) - e); again a vertical triple when ``t`` is one."""
    cy = closure(m, t.y)
    return SeparationTriple(t.x & ~cy, t.e, cy & ~bit(t.e), t.kind)
