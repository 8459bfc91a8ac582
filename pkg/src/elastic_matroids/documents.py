"""JSON matroid documents: parsing, construction, and canonical serialization.

A document is an object with a ``"type"`` discriminator:

    {"type": "uniform", "rank": 2, "size": 4}
    {"type": "linear", "prime": 3, "elements": [...], "columns": {"a": [1, 0], ...}}
    {"type": "graphic", "edges": [[u, v, "label"], ...]}
    {"type": "bases", "elements": [...], "bases": [["a", "b"], ...]}
    {"type": "construction", "family": "theta", "n": 4}
    {"type": "derived", "op": "dual", "operand": {...}}
    {"type": "derived", "op": "delete" | "contract" | "relax", "operand": {...}, "elements": [...]}
    {"type": "derived", "op": "glue", "left": {...}, "right": {...}, "lineMap": {"w1": "e1", ...}}
"""

from __future__ import annotations

import json
from typing import Any

from . import catalog
from .core import (
    BasesMatroid,
    DualMatroid,
    GluedMatroid,
    GraphicMatroid,
    LinearMatroid,
    Matroid,
    MinorMatroid,
    RelaxedMatroid,
    UniformMatroid,
    check_size,
    contract,
    delete,
    dual,
    rank_axiom_violations,
)
from .errors import ConstructionError, DomainError, MatroidError

SCHEMA_VERSION = 1


class DocumentError(DomainError):
    """A document does not follow the schema; the message starts with a JSON path."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def _need(doc: dict, key: str, path: str, kind: type | tuple = object) -> Any:
    if key not in doc:
        raise DocumentError(path, f"missing required key {key!r}")
    val = doc[key]
    if kind is int and (isinstance(val, bool) or not isinstance(val, int)):
        raise DocumentError(f"{path}.{key}", "expected an integer")
    if kind is not object and kind is not int and not isinstance(val, kind):
        raise DocumentError(f"{path}.{key}", f"expected {getattr(kind, '__name__', kind)}")
    return val


def _labels(doc: dict, path: str, key: str = "elements") -> list[str]:
    labels = _need(doc, key, path, list)
    for i, lab in enumerate(labels):
        if not isinstance(lab, str):
            raise DocumentError(f"{path}.{key}[{i}]", "element labels must be strings")
    if len(set(labels)) != len(labels):
        raise DocumentError(f"{path}.{key}", "element labels must be distinct")
    check_size(len(labels))
    return labels


def _subset(m: Matroid, labels: Any, path: str) -> int:
    if not isinstance(labels, list):
        raise DocumentError(path, "expected a list of element labels")
    out = 0
    for i, lab in enumerate(labels):
        if lab not in m.labels:
            raise DocumentError(f"{path}[{i}]", f"unknown element {lab!r}")
        out |= 1 << m.index(lab)
    return out


def _validate(m: Matroid, path: str) -> Matroid:
    if m.size <= 12:
        bad = rank_axiom_violations(m, limit=1)
        if bad:
            raise DocumentError(path, f"not a matroid: {bad[0]}")
    return m


def from_document(doc: Any, path: str = "$") -> Matroid:
    if not isinstance(doc, dict):
        raise DocumentError(path, "expected an object")
    kind = _need(doc, "type", path, str)
    try:
        if kind == "uniform":
            r = _need(doc, "rank", path, int)
            n = _need(doc, "size", path, int)
            check_size(n)
            labels = _labels(doc, path, "labels") if "labels" in doc else None
            return UniformMatroid(r, n, labels)
        if kind == "linear":
            p = _need(doc, "prime", path, int)
            cols = _need(doc, "columns", path, dict)
            labels = _labels(doc, path) if "elements" in doc else list(cols)
            check_size(len(labels))
            vectors = []
            for lab in labels:
                if lab not in cols:
                    raise DocumentError(f"{path}.columns", f"no column for element {lab!r}")
                vec = cols[lab]
                if not isinstance(vec, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in vec):
                    raise DocumentError(f"{path}.columns.{lab}", "expected a list of integers")
                vectors.append(vec)
            extra = set(cols) - set(labels)
            if extra:
                raise DocumentError(f"{path}.columns", f"columns for unlisted elements {sorted(extra)}")
            return _validate(LinearMatroid(p, vectors, labels), path)
        if kind == "graphic":
            edges = _need(doc, "edges", path, list)
            check_size(len(edges))
            ends, labels = [], []
            for i, e in enumerate(edges):
                if not isinstance(e, list) or len(e) != 3 or not isinstance(e[2], str):
                    raise DocumentError(f"{path}.edges[{i}]", "expected [endpoint, endpoint, label]")
                ends.append((e[0], e[1]))
                labels.append(e[2])
            return GraphicMatroid(ends, labels)
        if kind == "bases":
            labels = _labels(doc, path)
            raw = _need(doc, "bases", path, list)
            index = {lab: i for i, lab in enumerate(labels)}
            bases = []
            for i, b in enumerate(raw):
                if not isinstance(b, list):
                    raise DocumentError(f"{path}.bases[{i}]", "expected a list of labels")
                mask = 0
                for j, lab in enumerate(b):
                    if lab not in index:
                        raise DocumentError(f"{path}.bases[{i}][{j}]", f"unknown element {lab!r}")
                    mask |= 1 << index[lab]
                if b and len(b) != len(raw[0]):
                    raise DocumentError(
                        f"{path}.bases[{i}]", f"basis {b} has {len(b)} elements but bases[0] has {len(raw[0])}"
                    )
                bases.append(mask)
            try:
                m = BasesMatroid(labels, bases)
            except ConstructionError as exc:
                raise DocumentError(f"{path}.bases", str(exc)) from None
            return _validate(m, path)
        if kind == "construction":
            family = _need(doc, "family", path, str)
            params = {k: v for k, v in doc.items() if k not in ("type", "family", "schemaVersion")}
            for k, v in params.items():
                if isinstance(v, bool) or not isinstance(v, int):
                    raise DocumentError(f"{path}.{k}", "construction parameters must be integers")
            return catalog.build(catalog.CatalogSpec(family, params))
        if kind == "derived":
            return _derived(doc, path)
    except DocumentError:
        raise
    except MatroidError as exc:
        if isinstance(exc, (DomainError, ConstructionError)):
            raise DocumentError(path, str(exc)) from None
        raise
    raise DocumentError(f"{path}.type", f"unknown document type {kind!r}")


def _derived(doc: dict, path: str) -> Matroid:
    op = _need(doc, "op", path, str)
    if op == "glue":
        left = from_document(_need(doc, "left", path), f"{path}.left")
        right = from_document(_need(doc, "right", path), f"{path}.right")
        line = _need(doc, "lineMap", path, dict)
        return catalog.glue(left, right, line)
    inner = from_document(_need(doc, "operand", path), f"{path}.operand")
    if op == "dual":
        return dual(inner)
    sel = _subset(inner, _need(doc, "elements", path), f"{path}.elements")
    if op == "delete":
        return delete(inner, sel)
    if op == "contract":
        return contract(inner, sel)
    if op == "relax":
        return RelaxedMatroid(inner, sel)
    raise DocumentError(f"{path}.op", f"unknown operation {op!r}")


def parse(text: str) -> Matroid:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("$", f"invalid JSON: {exc}") from None
    return from_document(doc)


def to_document(m: Matroid) -> dict:
    """Canonical document describing ``m`` (labels only, never indices)."""
    if isinstance(m, UniformMatroid):
        return {"type": "uniform", "rank": m.r, "size": m.size, "labels": list(m.labels)}
    if isinstance(m, LinearMatroid):
        return {
            "type": "linear",
            "prime": m.p,
            "elements": list(m.labels),
            "columns": {lab: list(c) for lab, c in zip(m.labels, m.columns)},
        }
    if isinstance(m, GraphicMatroid):
        return {"type": "graphic", "edges": [[u, v, lab] for (u, v), lab in zip(m.edges, m.labels)]}
    if isinstance(m, BasesMatroid):
        return {"type": "bases", "elements": list(m.labels), "bases": [m.names(b) for b in m.bases]}
    if isinstance(m, DualMatroid):
        return {"type": "derived", "op": "dual", "operand": to_document(m.inner)}
    if isinstance(m, MinorMatroid):
        doc = to_document(m.inner)
        if m.contracted:
            doc = {"type": "derived", "op": "contract", "operand": doc, "elements": m.inner.names(m.contracted)}
        if m.deleted:
            doc = {"type": "derived", "op": "delete", "operand": doc, "elements": m.inner.names(m.deleted)}
        return doc
    if isinstance(m, RelaxedMatroid):
        return {"type": "derived", "op": "relax", "operand": to_document(m.inner), "elements": m.names(m.relaxed)}
    if isinstance(m, GluedMatroid):
        return {
            "type": "derived",
            "op": "glue",
            "left": to_document(m.left),
            "right": to_document(m.right),
            "lineMap": {m.left.labels[a]: m.right.labels[b] for a, b in m.pairs},
        }
    raise DomainError(f"cannot serialize {type(m).__name__}")


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
