"""Constructors for the matroid families used as the verification corpus."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping

from .connectivity import is_three_connected
from .core import (
    BasesMatroid,
    GluedMatroid,
    GraphicMatroid,
    LinearMatroid,
    Matroid,
    RelaxedMatroid,
    UniformMatroid,
    closure,
    is_prime,
    rank_axiom_violations,
    rank_function_equal,
    restrict,
)
from .errors import ConstructionError, DomainError
from .structures import theta_circuit_family
from .subsets import Subset, bit, from_indices, popcount


def theta_labels(n: int) -> list[str]:
    return [f"w{i + 1}" for i in range(n)] + [f"z{i + 1}" for i in range(n)]


def _bases_from_circuits(size: int, circuits: set[Subset], rank: int) -> list[Subset]:
    circ = list(circuits)
    return [
        b
        for b in map(from_indices, combinations(range(size), rank))
        if not any(c & ~b == 0 for c in circ)
    ]


def _theta_from_family(n: int, ws: list[int | None]) -> Matroid:
    zs = [n + i for i in range(n)]
    fam = theta_circuit_family(ws, zs)
    labels = theta_labels(n)
    present = [i for i, w in enumerate(ws) if w is not None]
    keep = present + zs
    # re-index onto the surviving elements
    pos = {old: new for new, old in enumerate(keep)}
    fam = {from_indices(pos[i] for i in range(2 * n) if c >> i & 1) for c in fam}
    bases = _bases_from_circuits(len(keep), fam, n)
    return BasesMatroid([labels[i] for i in keep], bases, check_exchange=False)


def theta(n: int) -> Matroid:
    """Theta_n on w1..wn, z1..zn, built from its three circuit families."""
    if n < 2:
        raise DomainError("theta needs n >= 2")
    return _theta_from_family(n, list(range(n)))


def theta_minus(n: int) -> Matroid:
    """Theta_n with w_n deleted."""
    if n < 3:
        raise DomainError("theta_minus needs n >= 3")
    return _theta_from_family(n, list(range(n - 1)) + [None])


def wheel(r: int) -> Matroid:
    """Cycle matroid of the r-spoke wheel, elements ordered s1, r1, s2, r2, ...

    Spoke s_i joins the hub to rim vertex i; rim edge r_i joins rim vertices
    i and i+1, so {s_i, r_i, s_(i+1)} are the triangles.
    """
    if r < 2:
        raise DomainError("wheel needs r >= 2")
    edges, labels = [], []
    for i in range(r):
        edges.append(("hub", i))
        labels.append(f"s{i + 1}")
        edges.append((i, (i + 1) % r))
        labels.append(f"r{i + 1}")
    return GraphicMatroid(edges, labels)


def rim(m: Matroid) -> Subset:
    return m.subset(lab for lab in m.labels if lab.startswith("r"))


def whirl(r: int) -> Matroid:
    """The wheel with its rim circuit-hyperplane relaxed."""
    w = wheel(r)
    return RelaxedMatroid(w, rim(w))


def uniform(r: int, n: int) -> Matroid:
    return UniformMatroid(r, n)


def mk4() -> Matroid:
    edges = list(combinations(range(1, 5), 2))
    return GraphicMatroid(edges, [f"{a}{b}" for a, b in edges])


def direct_sum(a: Matroid, b: Matroid) -> Matroid:
    labels = list(a.labels) + list(b.labels)
    bases = [x | (y << a.size) for x in _bases_of(a) for y in _bases_of(b)]
    return BasesMatroid(labels, bases, check_exchange=False)


def _bases_of(m: Matroid) -> list[Subset]:
    r = m.rank()
    return [b for b in map(from_indices, combinations(range(m.size), r)) if m.rank(b) == r]


def glue(theta_part: Matroid, host: Matroid, line_map: Mapping[str, str]) -> Matroid:
    """Generalized parallel connection across a line.

    ``line_map`` sends the labels of a rank-2 flat of ``theta_part`` (its
    segment W) injectively onto a segment of ``host``.
    """
    src = theta_part.subset(line_map)
    dst_labels = list(line_map.values())
    if len(set(dst_labels)) != len(dst_labels):
        raise ConstructionError("line map is not injective")
    dst = host.subset(dst_labels)
    n = popcount(src)
    if theta_part.rank(src) != 2 or closure(theta_part, src) != src:
        raise ConstructionError("the glued set must be a rank-2 flat of the first matroid")
    for part, s in ((theta_part, src), (host, dst)):
        if any(part.rank(bit(a) | bit(b)) != 2 for a, b in combinations(range(part.size), 2) if (s >> a & 1 and s >> b & 1)):
            raise ConstructionError("identified sets are not rank-2 uniform")
    if host.rank(dst) != 2:
        raise ConstructionError("host segment does not have rank 2")
    if n > 2 and popcount(dst) < n:
        raise ConstructionError("host segment is too small")
    if not is_three_connected(host):
        raise ConstructionError("host matroid must be 3-connected")
    clash = (set(theta_part.labels) & set(host.labels)) - set(dst_labels)
    if clash:
        raise ConstructionError(f"labels used by both matroids: {sorted(clash)}")
    pairs = [(theta_part.index(a), host.index(b)) for a, b in line_map.items()]
    m = GluedMatroid(theta_part, host, pairs)
    _validate_glue(m, theta_part, host, line_map)
    return m


def _validate_glue(m: GluedMatroid, left: Matroid, right: Matroid, line_map: Mapping[str, str]) -> None:
    if m.size <= 12:
        bad = rank_axiom_violations(m, limit=1)
        if bad:
            raise ConstructionError(f"glued rank function is not a matroid: {bad[0]}")
    if not rank_function_equal(left, restrict(m, m.subset(left.labels))):
        raise ConstructionError("gluing changed the first matroid")
    back = {v: k for k, v in line_map.items()}
    host_side = restrict(m, m.subset(back.get(lab, lab) for lab in right.labels))
    mapping = {lab: back.get(lab, lab) for lab in right.labels}
    if not rank_function_equal(right, host_side, mapping):
        raise ConstructionError("gluing changed the host matroid")


def glued_theta(n: int = 4, host_size: int = 5) -> Matroid:
    """theta(n) glued along W onto the first n points of U_{2, host_size}."""
    return glue(theta(n), uniform(2, host_size), {f"w{i + 1}": f"e{i + 1}" for i in range(n)})


def random_linear(p: int, r: int, n: int, seed: int, retries: int = 500) -> Matroid:
    """Deterministic random 3-connected GF(p)-representable matroid of rank r on n elements."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if not 0 <= r <= n:
        raise DomainError("need 0 <= r <= n")
    rng = random.Random(seed)
    for _ in range(retries):
        cols = [tuple(rng.randrange(p) for _ in range(r)) for _ in range(n)]
        m = LinearMatroid(p, cols)
        if m.rank() == r and is_three_connected(m):
            return m
    raise ConstructionError(f"no 3-connected instance after {retries} tries (p={p}, r={r}, n={n}, seed={seed})")


@dataclass(frozen=True)
class CatalogSpec:
    family: str
    params: dict = field(default_factory=dict)


FAMILIES = {
    "theta": (theta, ("n",)),
    "thetaMinus": (theta_minus, ("n",)),
    "wheel": (wheel, ("r",)),
    "whirl": (whirl, ("r",)),
    "uniform": (uniform, ("r", "n")),
    "mk4": (mk4, ()),
    "glued": (glued_theta, ("n", "hostSize")),
    "randomLinear": (random_linear, ("p", "r", "n", "seed")),
}


def build(spec: CatalogSpec) -> Matroid:
    if spec.family not in FAMILIES:
        raise DomainError(f"unknown family {spec.family!r}; known: {sorted(FAMILIES)}")
    fn, names = FAMILIES[spec.family]
    missing = [k for k in names if k not in spec.params and not (spec.family == "glued")]
    if missing:
        raise DomainError(f"family {spec.family!r} needs parameters {missing}")
    if spec.family == "glued":
        return glued_theta(int(spec.params.get("n", 4)), int(spec.params.get("hostSize", 5)))
    return fn(*(int(spec.params[k]) for k in names))
