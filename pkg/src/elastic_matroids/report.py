"""Analysis reports and their JSON / text renderings."""

from __future__ import annotations

import json

from .connectivity import SeparationTriple, cyclic_3_separations, is_three_connected, mark_maximal, vertical_3_separations
from .core import Matroid, corank
from .documents import SCHEMA_VERSION
from .elasticity import ElasticityReport, elasticity_report
from .structures import Fan, ThetaWitness, cosegments, fans, segments, theta_separators
from .verify import CLAIMS, VerificationOutcome


def triple_json(m: Matroid, t: SeparationTriple) -> dict:
    return {"X": m.names(t.x), "e": m.labels[t.e], "Y": m.names(t.y), "kind": t.kind, "yMaximal": t.y_maximal}


def fan_json(m: Matroid, f: Fan) -> dict:
    return {
        "order": [m.labels[i] for i in f.order],
        "witnessTypes": list(f.witness_types),
        "maximal": f.maximal,
        "spokeEnd": None if f.spoke_end is None else m.labels[f.spoke_end],
        "rimEnd": None if f.rim_end is None else m.labels[f.rim_end],
    }


def theta_json(m: Matroid, t: ThetaWitness) -> dict:
    return {
        "W": m.names(t.w),
        "Z": m.names(t.z),
        "n": t.n,
        "kind": t.kind,
        "side": t.side,
        "partners": {m.labels[w]: m.labels[z] for w, z in t.partners},
        "unpartnered": None if t.unpartnered is None else m.labels[t.unpartnered],
    }


def elasticity_json(m: Matroid, rep: ElasticityReport) -> dict:
    rows = []
    for v in rep.verdicts:
        rows.append(
            {
                "element": m.labels[v.element],
                "deletable": v.deletable,
                "contractible": v.contractible,
                "elastic": v.elastic,
                "witnessCyclic": None if v.witness_cyclic is None else triple_json(m, v.witness_cyclic),
                "witnessVertical": None if v.witness_vertical is None else triple_json(m, v.witness_vertical),
            }
        )
    return {
        "applicable": rep.applicable,
        "numDeletable": rep.num_deletable,
        "numContractible": rep.num_contractible,
        "numElastic": rep.num_elastic,
        "elements": rows,
    }


def summary(m: Matroid) -> dict:
    return {
        "size": m.size,
        "rank": m.rank(),
        "corank": corank(m, m.ground),
        "threeConnected": is_three_connected(m),
        "elements": list(m.labels),
    }


def separations_json(m: Matroid, vertical: bool = True, cyclic: bool = True, maximal_only: bool = False) -> dict:
    out = {}
    for name, enabled, fn in (("vertical", vertical, vertical_3_separations), ("cyclic", cyclic, cyclic_3_separations)):
        if not enabled:
            continue
        ts = mark_maximal(fn(m, check=False))
        if maximal_only:
            ts = [t for t in ts if t.y_maximal]
        out[name] = [triple_json(m, t) for t in ts]
    return out


def analyze(m: Matroid, claims: tuple[str, ...] = ("bixby", "theorem1", "corollary2")) -> dict:
    """Full analysis of ``m``; only the summary is filled in when ``m`` is not 3-connected."""
    report: dict = {"schemaVersion": SCHEMA_VERSION, "matroid": summary(m)}
    if not report["matroid"]["threeConnected"]:
        report["note"] = "not 3-connected; structural analysis skipped"
        return report
    rep = elasticity_report(m)
    report["elasticity"] = elasticity_json(m, rep)
    report["fans"] = [fan_json(m, f) for f in fans(m, check=False)]
    report["segments"] = [{"elements": m.names(s.elements), "closed": s.closed} for s in segments(m)]
    report["cosegments"] = [{"elements": m.names(s.elements), "closed": s.closed} for s in cosegments(m)]
    report["thetaSeparators"] = [theta_json(m, t) for t in theta_separators(m, check=False)]
    report["separations"] = separations_json(m)
    verification = {}
    for c in claims:
        if c == "bixby" and m.size < 4:
            continue
        verification[c] = outcome_json(CLAIMS[c](m))
    report["verification"] = verification
    return report


def outcome_json(o: VerificationOutcome) -> dict:
    return o.to_dict()


def emit(report: dict, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    return render_text(report)


def _fmt_set(xs) -> str:
    return "{" + ", ".join(xs) + "}"


def _fmt_triple(t: dict) -> str:
    flag = " maximal" if t.get("yMaximal") else ""
    return f"({_fmt_set(t['X'])}, {t['e']}, {_fmt_set(t['Y'])}){flag}"


def render_text(report: dict) -> str:
    lines = []
    if "matroid" in report:
        s = report["matroid"]
        lines.append(
            f"matroid: |E|={s['size']} r={s['rank']} r*={s['corank']} "
            f"3-connected={'yes' if s['threeConnected'] else 'no'}"
        )
    if "note" in report:
        lines.append(report["note"])
    el = report.get("elasticity")
    if el is not None:
        if not el["applicable"]:
            lines.append("elasticity: not applicable (fewer than four elements)")
        else:
            lines.append(
                f"elasticity: {el['numElastic']} elastic, {el['numDeletable']} deletable, "
                f"{el['numContractible']} contractible"
            )
            for row in el["elements"]:
                tags = [t for t in ("deletable", "contractible") if row[t]]
                mark = "elastic" if row["elastic"] else ", ".join(tags) or "neither"
                lines.append(f"  {row['element']:>6}  {mark}")
    if "fans" in report:
        lines.append(f"maximal fans: {len(report['fans'])}")
        for f in report["fans"]:
            lines.append(f"  ({', '.join(f['order'])})")
    for key in ("segments", "cosegments"):
        if key in report:
            lines.append(f"{key}: " + ("; ".join(_fmt_set(s["elements"]) for s in report[key]) or "none"))
    if "thetaSeparators" in report:
        lines.append(f"theta-separators: {len(report['thetaSeparators'])}")
        for t in report["thetaSeparators"]:
            lines.append(f"  {t['kind']} n={t['n']} ({t['side']}) W={_fmt_set(t['W'])} Z={_fmt_set(t['Z'])}")
    if "separations" in report:
        for kind, ts in report["separations"].items():
            lines.append(f"{kind} 3-separations: {len(ts)} ({sum(t['yMaximal'] for t in ts)} maximal)")
            for t in ts:
                lines.append("  " + _fmt_triple(t))
    for name, o in report.get("verification", {}).items():
        status = "pass" if o["passed"] else "FAIL"
        if not o["applicable"]:
            status = "not applicable"
        lines.append(f"verify {name}: {status}")
    return "\n".join(lines) + "\n"
