"""Rank oracles, concrete backends, and the basic derived operators."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import ConstructionError, DomainError, ResourceError
from .subsets import Subset, bit, by_popcount, elements, from_indices, full, iter_elements, popcount


@dataclass
class Settings:
    max_elements: int = 20
    cache_capacity: int = 1 << 20


settings = Settings()


def check_size(n: int) -> None:
    if n > settings.max_elements:
        raise ResourceError(f"ground set has {n} elements; the guard allows {settings.max_elements}")


class Matroid:
    """A matroid given by its rank function on bit-encoded subsets.

    Subclasses implement ``_rank``; ``rank`` adds validation and a bounded
    per-instance cache. Instances are never mutated after construction.
    """

    kind = "abstract"

    def __init__(self, labels: Iterable[str]):
        labels = tuple(str(x) for x in labels)
        if len(set(labels)) != len(labels):
            raise DomainError(f"element labels must be distinct: {labels}")
        check_size(len(labels))
        self.labels = labels
        self.size = len(labels)
        self.ground: Subset = full(self.size)
        self._index = {lab: i for i, lab in enumerate(labels)}
        self._cache: dict[int, int] = {}
        self._lock = threading.Lock()
        self._full_rank: int | None = None

    def __repr__(self) -> str:
        return f"<{type(self).__name__} |E|={self.size} r={self.rank()}>"

    def __len__(self) -> int:
        return self.size

    def _rank(self, s: Subset) -> int:
        raise NotImplementedError

    def rank(self, s: Subset | None = None) -> int:
        if s is None:
            if self._full_rank is None:
                self._full_rank = self.rank(self.ground)
            return self._full_rank
        if s < 0 or s >> self.size:
            raise DomainError(f"subset {s:#b} has bits outside a ground set of size {self.size}")
        r = self._cache.get(s)
        if r is None:
            r = self._rank(s)
            with self._lock:
                if len(self._cache) >= settings.cache_capacity:
                    self._cache.clear()
                self._cache[s] = r
        return r

    # label helpers
    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise DomainError(f"unknown element {label!r}") from None

    def subset(self, labels: Iterable[str]) -> Subset:
        return from_indices(self.index(lab) for lab in labels)

    def names(self, s: Subset) -> list[str]:
        return [self.labels[i] for i in iter_elements(s)]


class UniformMatroid(Matroid):
    kind = "uniform"

    def __init__(self, r: int, n: int, labels: Sequence[str] | None = None):
        if not 0 <= r <= n:
            raise DomainError(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
        super().__init__(labels if labels is not None else [f"e{i + 1}" for i in range(n)])
        if self.size != n:
            raise DomainError("label count does not match n")
        self.r = r

    def _rank(self, s):
        return min(popcount(s), self.r)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def rank_mod_p(vectors: Iterable[Sequence[int]], p: int) -> int:
    """Rank over GF(p) of a collection of vectors (row reduction)."""
    pivots: dict[int, list[int]] = {}  # pivot position -> normalised row
    rank = 0
    for v in vectors:
        row = [x % p for x in v]
        for pos, prow in pivots.items():
            c = row[pos]
            if c:
                row = [(a - c * b) % p for a, b in zip(row, prow)]
        lead = next((i for i, x in enumerate(row) if x), None)
        if lead is None:
            continue
        inv = pow(row[lead], -1, p)
        row = [(x * inv) % p for x in row]
        for pos in list(pivots):
            prow = pivots[pos]
            c = prow[lead]
            if c:
                pivots[pos] = [(a - c * b) % p for a, b in zip(prow, row)]
        pivots[lead] = row
        rank += 1
    return rank


class LinearMatroid(Matroid):
    """Column matroid of a matrix over the prime field GF(p)."""

    kind = "linear"

    def __init__(self, p: int, columns: Sequence[Sequence[int]], labels: Sequence[str] | None = None):
        if not is_prime(p) or p > 1 << 16:
            raise DomainError(f"field characteristic must be a prime <= 65536, got {p}")
        columns = [tuple(int(x) % p for x in c) for c in columns]
        heights = {len(c) for c in columns}
        if len(heights) > 1:
            raise DomainError("all columns must have the same length")
        super().__init__(labels if labels is not None else [f"e{i + 1}" for i in range(len(columns))])
        if self.size != len(columns):
            raise DomainError("label count does not match the number of columns")
        self.p = p
        self.columns = columns

    def _rank(self, s):
        return rank_mod_p((self.columns[i] for i in iter_elements(s)), self.p)


class BasesMatroid(Matroid):
    """Matroid given by an explicit list of bases.

    Independence is "contained in some basis"; the whole independent family is
    materialised once so that rank is a greedy scan.
    """

    kind = "bases"

    def __init__(self, labels: Sequence[str], bases: Iterable[Subset], check_exchange: bool = True):
        super().__init__(labels)
        bases = sorted(set(bases))
        if not bases:
            raise ConstructionError("a matroid needs at least one basis")
        k = popcount(bases[0])
        for b in bases:
            if b >> self.size:
                raise DomainError(f"basis {self.names(b & self.ground)} uses elements outside the ground set")
            if popcount(b) != k:
                raise ConstructionError(
                    f"basis {self.names(b)} has {popcount(b)} elements, expected {k} like {self.names(bases[0])}"
                )
        self.bases = tuple(bases)
        self._basis_set = frozenset(bases)
        if check_exchange and len(bases) <= 400:
            self._check_exchange()
        indep = set(bases)
        layer = set(bases)
        while layer:
            nxt = set()
            for s in layer:
                for i in iter_elements(s):
                    t = s & ~(1 << i)
                    if t not in indep:
                        indep.add(t)
                        nxt.add(t)
            layer = nxt
        self._independent = frozenset(indep)

    def _check_exchange(self):
        for b1 in self.bases:
            for b2 in self.bases:
                for x in iter_elements(b1 & ~b2):
                    if not any(((b1 & ~(1 << x)) | (1 << y)) in self._basis_set for y in iter_elements(b2 & ~b1)):
                        raise ConstructionError(
                            f"basis exchange fails for {self.names(b1)}, {self.names(b2)} at {self.labels[x]}"
                        )

    def is_independent(self, s: Subset) -> bool:
        return s in self._independent

    def _rank(self, s):
        ind = 0
        for i in iter_elements(s):
            t = ind | (1 << i)
            if t in self._independent:
                ind = t
        return popcount(ind)


class GraphicMatroid(Matroid):
    """Cycle matroid of a multigraph; rank is |V(S)| minus the number of components."""

    kind = "graphic"

    def __init__(self, edges: Sequence[tuple], labels: Sequence[str] | None = None):
        super().__init__(labels if labels is not None else [f"e{i + 1}" for i in range(len(edges))])
        if self.size != len(edges):
            raise DomainError("label count does not match the number of edges")
        self.edges = [tuple(e) for e in edges]
        if any(len(e) != 2 for e in self.edges):
            raise DomainError("each edge needs exactly two endpoints")

    def _rank(self, s):
        parent: dict = {}

        def find(x):
            while parent.setdefault(x, x) != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        r = 0
        for i in iter_elements(s):
            u, v = self.edges[i]
            a, b = find(u), find(v)
            if a != b:
                parent[a] = b
                r += 1
        return r


class DualMatroid(Matroid):
    kind = "dual"

    def __init__(self, inner: Matroid):
        super().__init__(inner.labels)
        self.inner = inner

    def _rank(self, s):
        m = self.inner
        return popcount(s) + m.rank(m.ground & ~s) - m.rank()


class MinorMatroid(Matroid):
    """``inner / contracted \\ deleted`` on the surviving elements, original order kept."""

    kind = "minor"

    def __init__(self, inner: Matroid, deleted: Subset = 0, contracted: Subset = 0):
        if deleted & contracted:
            raise DomainError("deleted and contracted sets must be disjoint")
        if (deleted | contracted) >> inner.size:
            raise DomainError("minor sets must lie in the ground set")
        keep = inner.ground & ~(deleted | contracted)
        self.original = elements(keep)
        super().__init__([inner.labels[i] for i in self.original])
        self.inner = inner
        self.deleted = deleted
        self.contracted = contracted
        self._base = inner.rank(contracted)

    def lift(self, s: Subset) -> Subset:
        """Translate a subset of the minor to the inner ground set."""
        out = 0
        for i in iter_elements(s):
            out |= 1 << self.original[i]
        return out

    def _rank(self, s):
        return self.inner.rank(self.lift(s) | self.contracted) - self._base


class RelaxedMatroid(Matroid):
    """Relaxation of a circuit-hyperplane: that one set becomes a basis."""

    kind = "relaxed"

    def __init__(self, inner: Matroid, relaxed: Subset):
        super().__init__(inner.labels)
        r = inner.rank()
        if inner.rank(relaxed) != r - 1 or popcount(relaxed) != r:
            raise ConstructionError(f"{inner.names(relaxed)} is not a circuit-hyperplane")
        if closure(inner, relaxed) != relaxed or not is_circuit(inner, relaxed):
            raise ConstructionError(f"{inner.names(relaxed)} is not a circuit-hyperplane")
        self.inner = inner
        self.relaxed = relaxed

    def _rank(self, s):
        if s == self.relaxed:
            return self.inner.rank()
        return self.inner.rank(s)


class GluedMatroid(Matroid):
    """Generalized parallel connection of two matroids across a shared line.

    The ground set is ``left``'s elements followed by ``right``'s elements not
    identified with one of ``left``'s. ``pairs`` lists the identified
    ``(left_index, right_index)`` elements. A set is closed iff its traces on
    both sides are flats, so closure is the fixpoint of the two side closures
    and rank is built up greedily from it.
    """

    kind = "glued"

    def __init__(self, left: Matroid, right: Matroid, pairs: Sequence[tuple[int, int]]):
        pairs = [(int(a), int(b)) for a, b in pairs]
        right_to_glued = {}
        for a, b in pairs:
            right_to_glued[b] = a
        if len(right_to_glued) != len(pairs) or len({a for a, _ in pairs}) != len(pairs):
            raise ConstructionError("identification must be injective")
        extra = [j for j in range(right.size) if j not in right_to_glued]
        for k, j in enumerate(extra):
            right_to_glued[j] = left.size + k
        labels = list(left.labels) + [right.labels[j] for j in extra]
        super().__init__(labels)
        self.left = left
        self.right = right
        self.pairs = pairs
        self.left_part = left.ground
        self._right_index = [0] * right.size  # right index -> glued index
        for j, g in right_to_glued.items():
            self._right_index[j] = g
        self._glued_to_right = {g: j for j, g in right_to_glued.items()}
        self.right_part = from_indices(right_to_glued.values())
        self.shared = from_indices(a for a, _ in pairs)

    def _to_right(self, s: Subset) -> Subset:
        out = 0
        for g in iter_elements(s & self.right_part):
            out |= 1 << self._glued_to_right[g]
        return out

    def _from_right(self, s: Subset) -> Subset:
        out = 0
        for j in iter_elements(s):
            out |= 1 << self._right_index[j]
        return out

    def glued_closure(self, s: Subset) -> Subset:
        while True:
            left_cl = closure(self.left, s & self.left_part)
            right_cl = self._from_right(closure(self.right, self._to_right(s)))
            nxt = s | left_cl | right_cl
            if nxt == s:
                return s
            s = nxt

    def _rank(self, s):
        ind = 0
        cl = 0
        for i in iter_elements(s):
            if not cl >> i & 1:
                ind |= 1 << i
                cl = self.glued_closure(ind)
        return popcount(ind)


# ---------------------------------------------------------------------------
# derived operators


def rank(m: Matroid, s: Subset | None = None) -> int:
    return m.rank(s)


def corank(m: Matroid, s: Subset) -> int:
    return popcount(s) + m.rank(m.ground & ~s) - m.rank()


def closure(m: Matroid, s: Subset) -> Subset:
    r = m.rank(s)
    out = s
    for i in iter_elements(m.ground & ~s):
        if m.rank(s | (1 << i)) == r:
            out |= 1 << i
    return out


def coclosure(m: Matroid, s: Subset) -> Subset:
    r = corank(m, s)
    out = s
    for i in iter_elements(m.ground & ~s):
        if corank(m, s | (1 << i)) == r:
            out |= 1 << i
    return out


def is_independent(m: Matroid, s: Subset) -> bool:
    return m.rank(s) == popcount(s)


def is_circuit(m: Matroid, s: Subset) -> bool:
    k = popcount(s)
    if k == 0 or m.rank(s) != k - 1:
        return False
    return all(m.rank(s & ~(1 << i)) == k - 1 for i in iter_elements(s))


def circuits(m: Matroid, max_size: int | None = None) -> list[Subset]:
    """All circuits, ascending by size then by bits."""
    check_size(m.size)
    out = []
    for s in by_popcount(m.ground):
        k = popcount(s)
        if max_size is not None and k > max_size:
            break
        if k and is_circuit(m, s):
            out.append(s)
    return out


def cocircuits(m: Matroid, max_size: int | None = None) -> list[Subset]:
    return circuits(dual(m), max_size)


def dual(m: Matroid) -> Matroid:
    if isinstance(m, DualMatroid):
        return m.inner
    return DualMatroid(m)


def delete(m: Matroid, s: Subset) -> Matroid:
    return MinorMatroid(m, deleted=s)


def contract(m: Matroid, s: Subset) -> Matroid:
    return MinorMatroid(m, contracted=s)


def restrict(m: Matroid, s: Subset) -> Matroid:
    return MinorMatroid(m, deleted=m.ground & ~s)


def loops(m: Matroid) -> Subset:
    return from_indices(i for i in range(m.size) if m.rank(bit(i)) == 0)


def coloops(m: Matroid) -> Subset:
    return from_indices(i for i in range(m.size) if corank(m, bit(i)) == 0)


def parallel_classes(m: Matroid) -> list[Subset]:
    """Parallel classes of the non-loop elements, each listed from its lowest index."""
    seen = loops(m)
    classes = []
    for i in range(m.size):
        if seen >> i & 1:
            continue
        cls = bit(i)
        for j in range(i + 1, m.size):
            if not seen >> j & 1 and m.rank(bit(i) | bit(j)) == 1:
                cls |= bit(j)
        seen |= cls
        classes.append(cls)
    return classes


def _class_map(m: Matroid, classes: list[Subset]) -> dict[str, tuple[str, ...]]:
    return {m.labels[elements(c)[0]]: tuple(m.names(c)) for c in classes}


def simplify(m: Matroid) -> tuple[Matroid, dict[str, tuple[str, ...]]]:
    """Delete loops and all but the lowest-index member of each parallel class."""
    classes = parallel_classes(m)
    keep = from_indices(elements(c)[0] for c in classes)
    return delete(m, m.ground & ~keep), _class_map(m, classes)


def cosimplify(m: Matroid) -> tuple[Matroid, dict[str, tuple[str, ...]]]:
    """Contract coloops and all but the lowest-index member of each series class."""
    classes = parallel_classes(dual(m))
    keep = from_indices(elements(c)[0] for c in classes)
    return contract(m, m.ground & ~keep), _class_map(m, classes)


def rank_table(m: Matroid) -> list[int]:
    """Rank of every subset, indexed by its bits."""
    return [m.rank(s) for s in range(1 << m.size)]


def rank_function_equal(m: Matroid, n: Matroid, mapping: Mapping[str, str] | None = None) -> bool:
    """True when ``n`` has the rank function of ``m`` after renaming labels via ``mapping``."""
    if m.size != n.size:
        return False
    target = [n.index(mapping[lab] if mapping else lab) for lab in m.labels]
    for s in range(1 << m.size):
        t = 0
        for i in iter_elements(s):
            t |= 1 << target[i]
        if m.rank(s) != n.rank(t):
            return False
    return True


def rank_axiom_violations(m: Matroid, limit: int = 10) -> list[str]:
    """Exhaustive check of the rank axioms in their local form.

    r(empty)=0, unit increase, and r(S+a)+r(S+b) >= r(S+a+b)+r(S) for all S
    and a, b outside S; together these are equivalent to the usual axioms.
    """
    bad = []
    if m.rank(0) != 0:
        bad.append("rank of the empty set is not 0")
    for s in range(1 << m.size):
        rs = m.rank(s)
        outside = elements(m.ground & ~s)
        for a in outside:
            ra = m.rank(s | bit(a))
            if ra - rs not in (0, 1):
                bad.append(f"adding {m.labels[a]} to {m.names(s)} changes rank by {ra - rs}")
            for b in outside:
                if b <= a:
                    continue
                if ra + m.rank(s | bit(b)) < m.rank(s | bit(a) | bit(b)) + rs:
                    bad.append(f"submodularity fails at {m.names(s)} with {m.labels[a]}, {m.labels[b]}")
            if len(bad) >= limit:
                return bad
    return bad
