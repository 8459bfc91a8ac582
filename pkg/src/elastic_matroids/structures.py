"""Triangles, triads, segments, fans, and Theta-separators."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Sequence

from .connectivity import _require_3c
from .core import Matroid, circuits, closure, corank, dual, is_circuit, restrict
from .subsets import Subset, bit, canonical_key, elements, from_indices, of_size, popcount

TRIANGLE = "triangle"
TRIAD = "triad"


def triangles(m: Matroid) -> list[Subset]:
    return [s for s in of_size(m.ground, 3) if is_circuit(m, s)]


def triads(m: Matroid) -> list[Subset]:
    return triangles(dual(m))


# ---------------------------------------------------------------------------
# segments


@dataclass(frozen=True)
class Segment:
    elements: Subset
    closed: bool


def _rank_two_flats(m: Matroid) -> list[Subset]:
    flats = set()
    nonloops = [i for i in range(m.size) if m.rank(bit(i)) == 1]
    for a, b in combinations(nonloops, 2):
        pair = bit(a) | bit(b)
        if m.rank(pair) == 2:
            flats.add(closure(m, pair))
    return sorted(flats, key=canonical_key)


def segments(m: Matroid) -> list[Segment]:
    """Maximal sets of size >= 3 on which ``m`` restricts to a rank-2 uniform matroid."""
    out = set()
    for flat in _rank_two_flats(m):
        classes = []
        for i in elements(flat):
            if m.rank(bit(i)) == 0:
                continue
            for cls in classes:
                if m.rank(bit(cls[0]) | bit(i)) == 1:
                    cls.append(i)
                    break
            else:
                classes.append([i])
        if len(classes) < 3:
            continue
        for pick in product(*classes):
            out.add(from_indices(pick))
    return [Segment(s, closure(m, s) == s) for s in sorted(out, key=canonical_key)]


def cosegments(m: Matroid) -> list[Segment]:
    d = dual(m)
    return [Segment(s.elements, closure(d, s.elements) == s.elements) for s in segments(d)]


# ---------------------------------------------------------------------------
# fans


@dataclass(frozen=True)
class Fan:
    order: tuple[int, ...]
    witness_types: tuple[str, ...]
    maximal: bool = True

    @property
    def elements(self) -> Subset:
        return from_indices(self.order)

    def __len__(self) -> int:
        return len(self.order)

    @property
    def spoke_end(self) -> int | None:
        if len(self.order) < 4:
            return None
        if self.witness_types[0] == TRIANGLE:
            return self.order[0]
        if self.witness_types[-1] == TRIANGLE:
            return self.order[-1]
        return None

    @property
    def rim_end(self) -> int | None:
        if len(self.order) < 4:
            return None
        if self.witness_types[0] == TRIAD:
            return self.order[0]
        if self.witness_types[-1] == TRIAD:
            return self.order[-1]
        return None


class _TripleTypes:
    def __init__(self, m: Matroid):
        self.tri = set(triangles(m))
        self.tad = set(triads(m))

    def types(self, s: Subset) -> list[str]:
        out = []
        if s in self.tri:
            out.append(TRIANGLE)
        if s in self.tad:
            out.append(TRIAD)
        return out


def _opposite(t: str) -> str:
    return TRIAD if t == TRIANGLE else TRIANGLE


def fan_witnesses(m: Matroid, order: Sequence[int], _types: _TripleTypes | None = None) -> tuple[str, ...] | None:
    """Alternating triangle/triad labels for ``order`` if it is a fan ordering, else None."""
    if len(order) < 3 or len(set(order)) != len(order):
        return None
    tt = _types or _TripleTypes(m)
    # a 3-set can be both a triangle and a triad, so try each start
    triples = [from_indices(order[i : i + 3]) for i in range(len(order) - 2)]
    for first in tt.types(triples[0]):
        labels = [first]
        for s in triples[1:]:
            want = _opposite(labels[-1])
            if want not in tt.types(s):
                break
            labels.append(want)
        else:
            return tuple(labels)
    return None


def is_fan_ordering(m: Matroid, order: Sequence[int]) -> bool:
    return fan_witnesses(m, order) is not None


def has_fan_ordering(m: Matroid, s: Subset) -> bool:
    """Some ordering of ``s`` is a fan."""
    tt = _TripleTypes(m)
    return any(fan_witnesses(m, p, tt) for p in permutations(elements(s)))


def _all_fan_orderings(m: Matroid) -> dict[Subset, tuple[tuple[int, ...], tuple[str, ...]]]:
    tt = _TripleTypes(m)
    best: dict[Subset, tuple[tuple[int, ...], tuple[str, ...]]] = {}

    def record(order, types):
        key = from_indices(order)
        cand = (tuple(order), tuple(types))
        rev = (tuple(reversed(order)), tuple(reversed(types)))
        cand = min(cand, rev)
        if key not in best or cand < best[key]:
            best[key] = cand

    def grow(order, types, used):
        record(order, types)
        want = _opposite(types[-1])
        a, b = order[-2], order[-1]
        for f in range(m.size):
            if used >> f & 1:
                continue
            if want in tt.types(bit(a) | bit(b) | bit(f)):
                order.append(f)
                types.append(want)
                grow(order, types, used | bit(f))
                order.pop()
                types.pop()

    for seed in sorted(tt.tri | tt.tad):
        for t in tt.types(seed):
            for p in permutations(elements(seed)):
                grow(list(p), [t], seed)
    return best


def fans(m: Matroid, check: bool = True) -> list[Fan]:
    """Maximal fans, one canonical ordering per element set.

    The canonical ordering is the lexicographically least fan ordering of the
    set, so its first element is never larger than its last.
    """
    if check:
        _require_3c(m)
    found = _all_fan_orderings(m)
    sets = sorted(found, key=popcount, reverse=True)
    out = []
    for s in sets:
        if any(popcount(t) > popcount(s) and s & ~t == 0 for t in sets):
            continue
        order, types = found[s]
        out.append(Fan(order, types, True))
    out.sort(key=lambda f: (-len(f), f.order))
    return out


def has_four_element_fan(m: Matroid) -> bool:
    return any(len(f) >= 4 for f in fans(m, check=False))


# ---------------------------------------------------------------------------
# Theta_n


@dataclass(frozen=True)
class ThetaWitness:
    w: Subset
    z: Subset
    n: int
    kind: str  # "theta" or "theta-minus"
    side: str = "primal"
    partners: tuple[tuple[int, int], ...] = field(default=())  # (w, z) pairs
    unpartnered: int | None = None

    @property
    def elements(self) -> Subset:
        return self.w | self.z


def theta_circuit_family(ws: Sequence[int | None], zs: Sequence[int]) -> set[Subset]:
    """Circuits of Theta_n on ``ws`` and ``zs`` where ``ws[i]`` partners ``zs[i]``.

    A ``None`` entry in ``ws`` marks a deleted segment element; circuits that
    would use it are dropped.
    """
    n = len(zs)
    zall = from_indices(zs)
    out = set()
    present = [i for i in range(n) if ws[i] is not None]
    for combo in combinations(present, 3):
        out.add(from_indices(ws[i] for i in combo))
    for i in present:
        out.add((zall & ~bit(zs[i])) | bit(ws[i]))
    for i in range(n):
        for j, k in combinations(present, 2):
            if i not in (j, k):
                out.add((zall & ~bit(zs[i])) | bit(ws[j]) | bit(ws[k]))
    return out


def is_theta_restriction(m: Matroid, w: Subset, z: Subset) -> ThetaWitness | None:
    """Witness that the restriction to W u Z is Theta_n (|W| = n) or its
    single-segment-element deletion (|W| = n-1), with |Z| = n >= 3."""
    n = popcount(z)
    if w & z or n < 3 or popcount(w) not in (n, n - 1):
        return None
    zs = elements(z)
    partner_of: dict[int, int] = {}
    for wi in elements(w):
        hits = [zi for zi in zs if is_circuit(m, (z & ~bit(zi)) | bit(wi))]
        if len(hits) != 1:
            return None
        partner_of[wi] = hits[0]
    if len(set(partner_of.values())) != len(partner_of):
        return None
    by_z = {zi: wi for wi, zi in partner_of.items()}
    ws = [by_z.get(zi) for zi in zs]
    expected = theta_circuit_family(ws, zs)
    s = w | z
    actual = {c for c in circuits_within(m, s)}
    if actual != expected:
        return None
    missing = [zi for zi in zs if zi not in by_z]
    kind = "theta" if not missing else "theta-minus"
    return ThetaWitness(
        w=w,
        z=z,
        n=n,
        kind=kind,
        partners=tuple(sorted(partner_of.items())),
        unpartnered=missing[0] if missing else None,
    )


def circuits_within(m: Matroid, s: Subset) -> list[Subset]:
    """Circuits of ``m`` contained in ``s`` (the circuits of the restriction)."""
    sub = restrict(m, s)
    return [sub.lift(c) for c in circuits(sub)]


def _theta_scan(m: Matroid) -> list[ThetaWitness]:
    found = []
    zs_seen = set()
    for coseg in cosegments(m):
        for k in range(3, popcount(coseg.elements) + 1):
            for z in of_size(coseg.elements, k):
                if z in zs_seen or m.rank(z) != k:
                    continue
                zs_seen.add(z)
                found.extend(_thetas_on(m, z))
    return found


def _thetas_on(m: Matroid, z: Subset) -> list[ThetaWitness]:
    zs = elements(z)
    outside = elements(m.ground & ~z)
    cands = [[w for w in outside if is_circuit(m, (z & ~bit(zi)) | bit(w))] for zi in zs]
    out = []
    for skip in [None] + list(range(len(zs))):
        choices = [([None] if i == skip else c) for i, c in enumerate(cands)]
        if any(not c for c in choices):
            continue
        for pick in product(*choices):
            chosen = [p for p in pick if p is not None]
            if len(set(chosen)) != len(chosen):
                continue
            w = from_indices(chosen)
            if m.rank(w) != 2:
                continue
            wit = is_theta_restriction(m, w, z)
            if wit is not None:
                out.append(wit)
    return out


def theta_separators(m: Matroid, check: bool = True) -> list[ThetaWitness]:
    """Theta-separators of a 3-connected matroid, in either ``m`` or its dual.

    Requires r(M) >= 4 and r*(M) >= 4, otherwise returns nothing. Each
    ``(W u Z, side)`` is reported once.
    """
    if check:
        _require_3c(m)
    if m.rank() < 4 or corank(m, m.ground) < 4:
        return []
    out = []
    seen = set()
    for side, n in (("primal", m), ("dual", dual(m))):
        for wit in _theta_scan(n):
            key = (wit.elements, side)
            if key in seen:
                continue
            seen.add(key)
            out.append(ThetaWitness(wit.w, wit.z, wit.n, wit.kind, side, wit.partners, wit.unpartnered))
    out.sort(key=lambda t: (t.side != "primal", canonical_key(t.elements), t.w))
    return out
