"""Deletable, contractible, and elastic elements.

Every verdict is computed twice: once from the definition (co(M\\e) or
si(M/e) tested for 3-connectivity) and once by searching for a cyclic or
vertical 3-separation triple at the element. The two must agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .connectivity import SeparationTriple, _require_3c, _triples_at, is_three_connected
from .core import Matroid, contract, cosimplify, delete, dual, simplify
from .errors import ConsistencyError, PreconditionError
from .subsets import bit


def _check(m: Matroid) -> None:
    if m.size < 4:
        raise PreconditionError("classification needs at least four elements")
    _require_3c(m)


def _first_triple(m: Matroid, e: int, kind: str) -> SeparationTriple | None:
    target = m if kind == "vertical" else dual(m)
    hit = next(_triples_at(target, e, oriented=False), None)
    if hit is None:
        return None
    return SeparationTriple(hit[0], e, hit[1], kind)


def contractible_by_definition(m: Matroid, e: int) -> bool:
    si, _ = simplify(contract(m, bit(e)))
    return is_three_connected(si)


def deletable_by_definition(m: Matroid, e: int) -> bool:
    co, _ = cosimplify(delete(m, bit(e)))
    return is_three_connected(co)


def _agree(m: Matroid, e: int, kind: str) -> tuple[bool, SeparationTriple | None]:
    if kind == "vertical":
        route_a = contractible_by_definition(m, e)
    else:
        route_a = deletable_by_definition(m, e)
    witness = _first_triple(m, e, kind)
    route_b = witness is None
    if route_a != route_b:
        what = "contractible" if kind == "vertical" else "deletable"
        raise ConsistencyError(
            f"{m.labels[e]}: {what} is {route_a} from the definition but "
            f"{route_b} from the {kind} 3-separation search"
        )
    return route_a, witness


def is_deletable(m: Matroid, e: int, check: bool = True) -> bool:
    if check:
        _check(m)
    return _agree(m, e, "cyclic")[0]


def is_contractible(m: Matroid, e: int, check: bool = True) -> bool:
    if check:
        _check(m)
    return _agree(m, e, "vertical")[0]


def is_elastic(m: Matroid, e: int, check: bool = True) -> bool:
    return is_deletable(m, e, check) and is_contractible(m, e, check=False)


@dataclass(frozen=True)
class ElementVerdict:
    element: int
    deletable: bool
    contractible: bool
    witness_cyclic: SeparationTriple | None = None
    witness_vertical: SeparationTriple | None = None

    @property
    def elastic(self) -> bool:
        return self.deletable and self.contractible


@dataclass(frozen=True)
class ElasticityReport:
    labels: tuple[str, ...]
    verdicts: tuple[ElementVerdict, ...]
    applicable: bool = True

    @property
    def num_deletable(self) -> int:
        return sum(v.deletable for v in self.verdicts)

    @property
    def num_contractible(self) -> int:
        return sum(v.contractible for v in self.verdicts)

    @property
    def num_elastic(self) -> int:
        return sum(v.elastic for v in self.verdicts)

    @property
    def elastic(self) -> list[int]:
        return [v.element for v in self.verdicts if v.elastic]

    def counts(self) -> tuple[int, int, int]:
        return self.num_deletable, self.num_contractible, self.num_elastic


def elasticity_report(m: Matroid) -> ElasticityReport:
    """Classify every element of a 3-connected matroid.

    Matroids with fewer than four elements get an empty, non-applicable report.
    """
    if m.size < 4:
        if not is_three_connected(m):
            raise PreconditionError("the matroid is not 3-connected")
        return ElasticityReport(m.labels, (), applicable=False)
    _check(m)
    verdicts = []
    for e in range(m.size):
        dele, wc = _agree(m, e, "cyclic")
        cont, wv = _agree(m, e, "vertical")
        verdicts.append(ElementVerdict(e, dele, cont, wc, wv))
    return ElasticityReport(m.labels, tuple(verdicts))
