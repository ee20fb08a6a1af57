"""Report assembly and rendering (text, JSON, DOT)."""

from __future__ import annotations

import json
from fractions import Fraction

from .checks import Analysis, run_all
from .dualgraph import build_graph, to_dot
from .monodromy import acampo_zeta_origin, char_polys_at, eigenvalue_witness
from .resolution import ResolutionModel
from .zeta import (
    MODES_BETA,
    MODES_TOP,
    SIGN_OF_MODE,
    DLDatum,
    ZetaBundle,
    ZetaError,
    candidate_poles,
    contribution,
    pole_set,
    poles_beta,
    poles_top,
    predicted_poles,
)

SCHEMA_VERSION = 1


def _q(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _qs(values) -> list[str]:
    return [_q(v) for v in sorted(values)]


def _resolution_section(m: ResolutionModel) -> dict:
    return {
        "identity": m.identity,
        "blowups": len(m.blowups),
        "components": [
            {"id": c.id, "label": c.label, "kind": c.kind, "nu": c.nu, "N": c.N,
             "real": c.real, "copies": c.copies, "field": c.field}
            for c in m.components
        ],
        "crossings": [
            {"id": x.id, "a": m.components[x.a].label, "b": m.components[x.b].label,
             "real": x.real, "copies": x.copies, "unitSign": x.unit_sign}
            for x in m.crossings
        ],
    }


def _covering_section(a: Analysis) -> dict:
    m, s = a.model, a.summary
    comps = []
    for c in m.components:
        if not c.real:
            continue
        row = {"label": c.label, "inJPlus": s.in_j[(c.id, 1)], "inJMinus": s.in_j[(c.id, -1)]}
        if c.exceptional:
            row["betaTildePlus"] = s.beta_tilde[(c.id, 1)].to_str()
            row["betaTildeMinus"] = s.beta_tilde[(c.id, -1)].to_str()
            if c.N % 2 == 0:
                row["cPlus"] = s.components_count[(c.id, 1)]
                row["cMinus"] = s.components_count[(c.id, -1)]
        comps.append(row)
    points = [
        {"a": m.components[x.a].label, "b": m.components[x.b].label,
         "pointsPlus": s.points[(x.id, 1)], "pointsMinus": s.points[(x.id, -1)]}
        for x in m.crossings if x.real
    ]
    return {"components": comps, "crossings": points}


def _zeta_section(bundle: ZetaBundle, modes, levels, series: int) -> dict:
    out: dict = {}
    if "top" in levels:
        out["top"] = {m: bundle.top[m].display() for m in modes if m in MODES_TOP}
    if "beta" in levels:
        out["beta"] = {
            m: {"terms": bundle.beta[m].terms_str(), "numerator": bundle.beta[m].numerator_str(),
                "denominator": bundle.beta[m].denominator_str()}
            for m in modes if m in MODES_BETA
        }
        if series:
            out["series"] = {
                m: [c.to_str() for c in bundle.beta[m].series_coefficients(series)]
                for m in modes if m in MODES_BETA
            }
    return out


def _pole_rows(records, level: str) -> list[dict]:
    rows = []
    for p in records:
        row = {"location": _q(p.location), "order": p.order}
        if level == "top":
            row["residue"] = _q(p.residue_top)
        else:
            row["residue"] = p.residue_beta.to_str()
        rows.append(row)
    return rows


def _poles_section(bundle: ZetaBundle, model: ResolutionModel | None, modes, levels,
                   top_poles: dict, beta_poles: dict) -> dict:
    out: dict = {"candidates": {}, "top": {}, "beta": {}, "predicted": {}}
    for m in modes:
        out["candidates"][m] = _qs(candidate_poles(bundle.datum, model, m))
        if "top" in levels and m in MODES_TOP:
            out["top"][m] = _pole_rows(top_poles[m], "top")
        if "beta" in levels and m in MODES_BETA:
            out["beta"][m] = _pole_rows(beta_poles[m], "beta")
        if model is not None and m != "complexified":
            out["predicted"][m] = {_q(k): v for k, v in sorted(predicted_poles(model, m).items())}
    return out


def _contributions(a: Analysis, modes) -> list[dict]:
    m = a.model
    rows = []
    for mode in (x for x in modes if x in MODES_BETA):
        members = (
            {c.id for c in m.components if c.real} if mode == "naive"
            else a.summary.jr(SIGN_OF_MODE[mode])
        )
        for c in m.components:
            if c.id not in members:
                continue
            row = {"component": c.label, "mode": mode, "pole": _q(-c.ratio),
                   "intersectionTotal": m.intersection_total(c.id) if c.exceptional else None}
            try:
                con = contribution(a.bundle.datum, c.id, mode, model=m)
                row["rTop"] = _q(con.r_top)
                row["rBeta"] = con.r_beta.to_str()
            except ZetaError as exc:
                row["rTop"] = row["rBeta"] = str(exc)
            rows.append(row)
    return rows


def _monodromy_section(a: Analysis, modes) -> dict:
    m = a.model
    p0, p1 = char_polys_at(m, "origin", a.bundle.datum)
    witnesses = []
    for mode in (x for x in modes if x in MODES_TOP):
        poles = a.top_set(mode)
        for s0 in sorted(poles):
            w = eigenvalue_witness(m, s0, mode, a.bundle.datum, poles)
            witnesses.append({
                "mode": mode, "pole": _q(s0),
                "kind": w.kind if w else "NOT_FOUND",
                "branch": m.components[w.branch].label if w and w.branch is not None else None,
                "region": w.region if w else None,
            })
    return {
        "zeta0": acampo_zeta_origin(m, a.bundle.datum).to_str(),
        "P0": p0.expand().to_str("t"),
        "P1": p1.expand().to_str("t"),
        "branches": {
            m.components[b].label: char_polys_at(m, b)[0].expand().to_str("t") for b in m.branches
        },
        "witnesses": witnesses,
    }


def _notes(m: ResolutionModel) -> list[str]:
    notes = []
    if m.identity and len(m.branches) == 2:
        n1, n2 = (m.components[b].N for b in m.branches)
        if n1 % 2 == 0 and n2 % 2 == 0:
            notes.append(
                "normal crossing germ with both multiplicities even: the signed function uses the "
                "pair stratum 2/((1+sN)(1+sM)), not the shortcut 2/(1+sN)"
            )
    return notes


def build_report(model: ResolutionModel, source=None, echo: dict | None = None,
                 modes=MODES_TOP, levels=("top", "beta"), series: int = 0, checks: bool = True) -> dict:
    a = Analysis.of(model)
    report = {
        "schemaVersion": SCHEMA_VERSION,
        "input": echo or {},
        "resolution": _resolution_section(model),
        "dualGraph": _graph_section(model),
        "covering": _covering_section(a),
        "zeta": _zeta_section(a.bundle, modes, levels, series),
        "poles": _poles_section(a.bundle, model, modes, levels, a.top_poles, a.beta_poles),
        "contributions": _contributions(a, modes),
        "monodromy": _monodromy_section(a, modes),
        "notes": _notes(model),
    }
    if checks:
        report["checks"] = [
            {"name": r.name, "status": "PASS" if r.passed else "FAIL", "detail": r.detail}
            for r in run_all(a, source)
        ]
    return report


def _graph_section(model: ResolutionModel) -> dict:
    g = build_graph(model)
    return {
        "vertices": [
            {"label": v.label, "ratio": _q(v.ratio), "strict": v.strict} for _, v in sorted(g.vertices.items())
        ],
        "edges": [[g.vertices[a].label, g.vertices[b].label] for a, b in g.edges],
        "minimal": sorted(g.vertices[v].label for v in g.minimal),
        "dot": to_dot(g),
    }


def build_datum_report(datum: DLDatum, echo: dict | None = None, modes=MODES_TOP,
                       levels=("top", "beta"), series: int = 0) -> dict:
    bundle = ZetaBundle.build(datum)
    top = {m: poles_top(bundle.top[m]) for m in MODES_TOP}
    beta = {m: poles_beta(bundle.beta[m], mode=m) for m in MODES_BETA}
    checks = []
    for m in MODES_BETA:
        ok = pole_set(top[m]) <= pole_set(beta[m])
        checks.append({"name": f"{m} top poles are beta poles", "status": "PASS" if ok else "FAIL", "detail": ""})
    return {
        "schemaVersion": SCHEMA_VERSION,
        "input": echo or {},
        "datum": datum.to_json(),
        "zeta": _zeta_section(bundle, modes, levels, series),
        "poles": _poles_section(bundle, None, modes, levels, top, beta),
        "checks": checks,
    }


def failed_checks(report: dict) -> list[dict]:
    return [c for c in report.get("checks", []) if c["status"] != "PASS"]


# ---------------------------------------------------------------------------
# rendering


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def from_json(text: str) -> dict:
    return json.loads(text)


def to_text(report: dict) -> str:
    lines: list[str] = []
    add = lines.append
    inp = report.get("input", {})
    if inp:
        add(f"input: {inp.get('kind', '')} {inp.get('text', '')}".rstrip())
    if "resolution" in report:
        res = report["resolution"]
        add("")
        add(f"resolution: {res['blowups']} blowups" + (" (already normal crossing)" if res["identity"] else ""))
        for c in res["components"]:
            where = "real" if c["real"] else f"complex x{c['copies']}"
            add(f"  {c['label']:<4} {c['kind']:<11} (nu,N)=({c['nu']},{c['N']})  {where}  over {c['field']}")
        for x in res["crossings"]:
            where = "real" if x["real"] else f"complex x{x['copies']}"
            sign = "" if x["unitSign"] is None else f"  unit sign {x['unitSign']:+d}"
            add(f"  {x['a']} meets {x['b']}  {where}{sign}")
    if "dualGraph" in report:
        g = report["dualGraph"]
        add("")
        add("real dual graph: " + ", ".join(f"{v['label']}[{v['ratio']}]" for v in g["vertices"]))
        add("  edges: " + (", ".join(f"{a}-{b}" for a, b in g["edges"]) or "none"))
        add("  minimal part: " + ", ".join(g["minimal"]))
    if "covering" in report:
        add("")
        add("sign covering:")
        for c in report["covering"]["components"]:
            parts = [f"J+={'y' if c['inJPlus'] else 'n'}", f"J-={'y' if c['inJMinus'] else 'n'}"]
            if "betaTildePlus" in c:
                parts.append(f"beta+={c['betaTildePlus']}  beta-={c['betaTildeMinus']}")
            if "cPlus" in c:
                parts.append(f"c+={c['cPlus']} c-={c['cMinus']}")
            add(f"  {c['label']:<4} " + "  ".join(parts))
    z = report.get("zeta", {})
    if "top" in z:
        add("")
        add("topological zeta functions:")
        for m, v in z["top"].items():
            add(f"  {m:<13} {v}")
    if "beta" in z:
        add("")
        add("virtual Poincare zeta functions:")
        for m, v in z["beta"].items():
            add(f"  {m:<13} {v['terms']}")
    if "series" in z:
        add("")
        add("series coefficients (T^0, T^1, ...):")
        for m, v in z["series"].items():
            add(f"  {m:<13} " + "; ".join(v))
    if "poles" in report:
        p = report["poles"]
        add("")
        add("poles:")
        for m, v in p["candidates"].items():
            add(f"  {m:<13} candidates {{{', '.join(v)}}}")
            if m in p["top"]:
                add(f"  {'':<13} top  " + (", ".join(
                    f"{r['location']} (order {r['order']}, residue {r['residue']})" for r in p["top"][m]) or "none"))
            if m in p["beta"]:
                add(f"  {'':<13} beta " + (", ".join(
                    f"{r['location']} (order {r['order']})" for r in p["beta"][m]) or "none"))
            if m in p["predicted"]:
                add(f"  {'':<13} predicted " + (", ".join(
                    f"{k} {v}" for k, v in p["predicted"][m].items()) or "none"))
    if report.get("contributions"):
        add("")
        add("contributions:")
        for r in report["contributions"]:
            total = "" if r["intersectionTotal"] is None else f"  k+2r={r['intersectionTotal']}"
            add(f"  {r['mode']:<6} {r['component']:<4} at {r['pole']:<6} R_top={r['rTop']}{total}")
            add(f"  {'':<6} {'':<4}    R_beta={r['rBeta']}")
    if "monodromy" in report:
        mo = report["monodromy"]
        add("")
        add(f"monodromy zeta at origin: {mo['zeta0']}")
        add(f"  P0 = {mo['P0']}    P1 = {mo['P1']}")
        for b, p0 in mo["branches"].items():
            add(f"  generic point of {b}: P0 = {p0}")
        for w in mo["witnesses"]:
            extra = f" on {w['branch']}" if w["branch"] else ""
            add(f"  {w['mode']:<13} {w['pole']:<6} {w['kind']}{extra}")
    for note in report.get("notes", []):
        add("")
        add(f"note: {note}")
    if report.get("checks"):
        add("")
        add("checks:")
        for c in report["checks"]:
            detail = f"  ({c['detail']})" if c["detail"] and c["status"] != "PASS" else ""
            add(f"  {c['status']}  {c['name']}{detail}")
    return "\n".join(lines).lstrip("\n") + "\n"
