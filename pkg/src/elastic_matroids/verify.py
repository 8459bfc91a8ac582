"""Theorem-level checks and an independent brute-force oracle.

The oracle works on plain rank tables (one entry per subset) derived from
circuits found with the backend's uncached rank, and re-implements minors,
duality, simplification, and 3-connectivity on those tables. It shares no
code path with the optimized modules beyond the backend primitive.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .connectivity import (
    is_three_connected,
    k_separations,
    lambda_,
    mark_maximal,
    vertical_3_separations,
)
from .core import Matroid
from .documents import to_document
from .elasticity import elasticity_report
from .errors import PreconditionError, ResourceError
from .structures import fans, has_fan_ordering, theta_separators
from .subsets import bit, popcount


@dataclass
class VerificationOutcome:
    claim: str
    instances: int = 0
    violations: list[dict] = field(default_factory=list)
    applicable: bool = True
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "instances": self.instances,
            "applicable": self.applicable,
            "passed": self.passed,
            "violations": self.violations,
            "details": self.details,
        }


def _counterexample(m: Matroid, **sets) -> dict:
    out = {"matroid": to_document(m)}
    for k, v in sets.items():
        out[k] = m.names(v) if isinstance(v, int) and k != "e" else v
    return out


def _require(m: Matroid, min_size: int = 0) -> None:
    if m.size < min_size:
        raise PreconditionError(f"needs at least {min_size} elements")
    if not is_three_connected(m):
        raise PreconditionError("the matroid is not 3-connected")


def verify_bixby(m: Matroid) -> VerificationOutcome:
    """Every element is deletable or contractible."""
    _require(m, 4)
    rep = elasticity_report(m)
    out = VerificationOutcome("bixby", instances=m.size)
    for v in rep.verdicts:
        if not (v.deletable or v.contractible):
            out.violations.append(_counterexample(m, e=m.labels[v.element]))
    return out


def triple_disjuncts(m: Matroid, x: int, e: int, elastic: int, separators: list) -> list[str]:
    fired = []
    if popcount(x & elastic) >= 2:
        fired.append("i")
    if popcount(x) == 3 and has_fan_ordering(m, x | bit(e)):
        fired.append("ii")
    if any(x & ~s.elements == 0 for s in separators):
        fired.append("iii")
    return fired


def verify_theorem1(m: Matroid) -> VerificationOutcome:
    """For every vertical 3-separation (X, e, Y) with Y+e maximal: X holds two
    elastic elements, X+e is a 4-element fan, or X lies in a Theta-separator."""
    _require(m)
    out = VerificationOutcome("theorem1")
    triples = [t for t in mark_maximal(vertical_3_separations(m, oriented=True, check=False)) if t.y_maximal]
    if not triples:
        out.details = {"maximalTriples": 0, "fired": {"i": 0, "ii": 0, "iii": 0}, "triples": []}
        return out
    elastic = 0
    for e in elasticity_report(m).elastic:
        elastic |= bit(e)
    seps = theta_separators(m, check=False)
    stats = {"i": 0, "ii": 0, "iii": 0}
    rows = []
    for t in triples:
        fired = triple_disjuncts(m, t.x, t.e, elastic, seps)
        for d in fired:
            stats[d] += 1
        rows.append({"X": m.names(t.x), "e": m.labels[t.e], "Y": m.names(t.y), "fired": fired})
        if not fired:
            out.violations.append(_counterexample(m, X=t.x, e=m.labels[t.e], Y=t.y))
    out.instances = len(triples)
    out.details = {"maximalTriples": len(triples), "fired": stats, "triples": rows}
    return out


def verify_corollary2(m: Matroid) -> VerificationOutcome:
    """Small matroids are entirely elastic; larger ones with no 4-element fans
    and no Theta-separators have at least four elastic elements."""
    _require(m)
    out = VerificationOutcome("corollary2", instances=1)
    if m.size < 4:
        out.applicable = False
        out.details = {"reason": "fewer than four elements"}
        return out
    rep = elasticity_report(m)
    if m.size <= 6:
        out.details = {"case": "small", "numElastic": rep.num_elastic}
        if rep.num_elastic != m.size:
            out.violations.append(_counterexample(m, notElastic=[m.labels[v.element] for v in rep.verdicts if not v.elastic]))
        return out
    four_fans = [f for f in fans(m, check=False) if len(f) >= 4]
    seps = theta_separators(m, check=False)
    if four_fans or seps:
        out.applicable = False
        out.details = {"case": "hypothesis fails", "fourElementFans": len(four_fans), "thetaSeparators": len(seps)}
        return out
    out.details = {"case": "large", "numElastic": rep.num_elastic}
    if rep.num_elastic < 4:
        out.violations.append(_counterexample(m, elastic=[m.labels[e] for e in rep.elastic]))
    return out


# ---------------------------------------------------------------------------
# brute-force oracle on rank tables


def oracle_rank_table(m: Matroid) -> list[int]:
    """Rank of every subset from circuits found with the uncached backend rank."""
    n = m.size
    size = 1 << n
    raw = m._rank
    circuits = []
    dependent = [False] * size
    for s in sorted(range(size), key=lambda s: (popcount(s), s)):
        k = popcount(s)
        if k == 0:
            continue
        if any(dependent[s & ~(1 << i)] for i in range(n) if s >> i & 1):
            dependent[s] = True
            continue
        if raw(s) < k:
            dependent[s] = True
            circuits.append(s)
    indep = [not any(c & ~s == 0 for c in circuits) for s in range(size)]
    table = [0] * size
    for s in sorted(range(size), key=popcount):
        if indep[s]:
            table[s] = popcount(s)
        else:
            table[s] = max(table[s & ~(1 << i)] for i in range(n) if s >> i & 1)
    return table


def _t_dual(t: list[int], n: int) -> list[int]:
    full = (1 << n) - 1
    return [popcount(s) + t[full ^ s] - t[full] for s in range(1 << n)]


def _t_minor(t: list[int], n: int, keep: list[int], contracted: int) -> list[int]:
    base = t[contracted]
    out = []
    for s in range(1 << len(keep)):
        orig = contracted
        for j, i in enumerate(keep):
            if s >> j & 1:
                orig |= 1 << i
        out.append(t[orig] - base)
    return out


def _t_simplify(t: list[int], n: int) -> tuple[list[int], int]:
    keep = []
    for i in range(n):
        if t[1 << i] == 0:
            continue
        if any(t[(1 << i) | (1 << j)] == 1 for j in keep):
            continue
        keep.append(i)
    return _t_minor(t, n, keep, 0), len(keep)


def _t_three_connected(t: list[int], n: int) -> bool:
    full = (1 << n) - 1
    for s in range(1 << n):
        a, b = popcount(s), n - popcount(s)
        lam = t[s] + t[full ^ s] - t[full]
        if lam <= 1 and min(a, b) >= lam + 1:
            return False
    return True


def _t_lambda(t: list[int], n: int, s: int) -> int:
    full = (1 << n) - 1
    return t[s] + t[full ^ s] - t[full]


def oracle_elasticity(t: list[int], n: int) -> list[tuple[bool, bool]]:
    """(deletable, contractible) per element, straight from the definitions."""
    out = []
    for e in range(n):
        keep = [i for i in range(n) if i != e]
        dele = _t_minor(t, n, keep, 0)
        d_dual, k = _t_simplify(_t_dual(dele, n - 1), n - 1)
        co = _t_dual(d_dual, k)
        con = _t_minor(t, n, keep, 1 << e)
        si, k2 = _t_simplify(con, n - 1)
        out.append((_t_three_connected(co, k), _t_three_connected(si, k2)))
    return out


def oracle_crosscheck(m: Matroid, max_elements: int = 12) -> VerificationOutcome:
    """Diff the optimized modules against the brute-force oracle."""
    if m.size > max_elements:
        raise ResourceError(f"the oracle is limited to {max_elements} elements")
    out = VerificationOutcome("crosscheck", instances=1)
    n = m.size
    t = oracle_rank_table(m)
    full = (1 << n) - 1

    def diff(what, **kw):
        if len(out.violations) < 20:
            out.violations.append({"what": what, **kw})

    for s in range(1 << n):
        if m.rank(s) != t[s]:
            diff("rank", set=m.names(s), optimized=m.rank(s), oracle=t[s])
    for s in range(1 << n):
        if lambda_(m, s) != _t_lambda(t, n, s):
            diff("lambda", set=m.names(s))
        if _t_lambda(t, n, s) != _t_lambda(t, n, full ^ s):
            diff("lambda-symmetry", set=m.names(s))
    for k in (1, 2, 3):
        mine = {x for x, _ in k_separations(m, k)}
        theirs = {
            s
            for s in range(1 << n)
            if s & 1 and min(popcount(s), n - popcount(s)) >= k and _t_lambda(t, n, s) <= k - 1
        }
        if mine != theirs:
            diff(f"{k}-separations", optimized=len(mine), oracle=len(theirs))
    tc = _t_three_connected(t, n)
    if tc != is_three_connected(m):
        diff("3-connectivity", optimized=is_three_connected(m), oracle=tc)
    if tc and n >= 4:
        rep = elasticity_report(m)
        for v, (d, c) in zip(rep.verdicts, oracle_elasticity(t, n)):
            if (v.deletable, v.contractible) != (d, c):
                diff(
                    "elasticity",
                    element=m.labels[v.element],
                    optimized=[v.deletable, v.contractible],
                    oracle=[d, c],
                )
    if out.violations:
        out.details = {"matroid": to_document(m)}
    return out


CLAIMS = {
    "bixby": verify_bixby,
    "theorem1": verify_theorem1,
    "corollary2": verify_corollary2,
    "crosscheck": oracle_crosscheck,
}
