"""Consistency checks run on every computed model.

Each check returns a CheckResult; nothing here raises on a failed check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .covering import CoverSummary, cover_summary
from .dualgraph import build_graph, is_tree, local_ordering_check, minimal_connected, monotonicity_check
from .monodromy import MonodromyError, char_polys_at, eigenvalue_witness
from .ratfunc import LaurentFraction, limit_u_to_1
from .resolution import ResolutionError, ResolutionModel, count_good_real_points, resolve
from .zeta import (
    MODES_BETA,
    MODES_TOP,
    SIGN_OF_MODE,
    ZetaBundle,
    ZetaError,
    candidate_poles,
    contribution,
    dl_datum,
    order_two_expected,
    pole_set,
    poles_beta,
    poles_top,
    predicted_poles,
    PREDICTED_CERTAIN,
    is_single_blowup_shape,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _fmt_set(s) -> str:
    return "{" + ", ".join(str(x) for x in sorted(s)) + "}"


@dataclass
class Analysis:
    """Model plus everything derived from it, computed once."""

    model: ResolutionModel
    summary: CoverSummary
    bundle: ZetaBundle
    top_poles: dict
    beta_poles: dict

    @classmethod
    def of(cls, model: ResolutionModel) -> "Analysis":
        summary = cover_summary(model)
        bundle = ZetaBundle.build(dl_datum(model, summary))
        top = {m: poles_top(bundle.top[m]) for m in MODES_TOP}
        beta = {m: poles_beta(bundle.beta[m], mode=m) for m in MODES_BETA}
        return cls(model, summary, bundle, top, beta)

    def top_set(self, mode: str) -> set[Fraction]:
        return pole_set(self.top_poles[mode])

    def beta_set(self, mode: str) -> set[Fraction]:
        return pole_set(self.beta_poles[mode])


def _alphas(model: ResolutionModel, cid: int) -> list[tuple[Fraction, int, bool]]:
    """(alpha_j, weight, real) for the neighbours of cid, weight = copies per copy of cid."""
    comp = model.components[cid]
    out = []
    for x in model.crossings_of(cid):
        other = model.components[x.other(cid)]
        alpha = other.nu - comp.ratio * other.N
        out.append((alpha, x.copies // comp.copies, x.real))
    return out


def check_graph(a: Analysis) -> list[CheckResult]:
    g = build_graph(a.model)
    mono, path = monotonicity_check(g)
    local, bad = local_ordering_check(g)
    return [
        CheckResult("dual graph is a tree", is_tree(g), f"{len(g.vertices)} vertices, {len(g.edges)} edges"),
        CheckResult("minimal part connected", minimal_connected(g), _fmt_set(g.minimal)),
        CheckResult("ratios increase leaving the minimal part", mono, "" if mono else f"path {path}"),
        CheckResult("local ordering at each vertex", local, "" if local else f"vertex {bad}"),
    ]


def check_numerics(a: Analysis) -> list[CheckResult]:
    m = a.model
    sum_ok, range_ok, notes = True, True, []
    for comp in m.exceptional():
        al = _alphas(m, comp.id)
        total = sum(alpha * w for alpha, w, _ in al)
        k2r = m.intersection_total(comp.id)
        if total != k2r - 2:
            sum_ok = False
            notes.append(f"{comp.label}: sum {total} != {k2r - 2}")
        if not m.forced_extra:
            for alpha, _, _ in al:
                if not (-1 <= alpha < 1):
                    range_ok = False
                    notes.append(f"{comp.label}: alpha {alpha}")
                if alpha == -1 and k2r != 1:
                    range_ok = False
                    notes.append(f"{comp.label}: alpha -1 with k+2r={k2r}")
    return [
        CheckResult("alpha sum identity", sum_ok, "; ".join(n for n in notes if "sum" in n)),
        CheckResult("alpha range", range_ok, "; ".join(n for n in notes if "alpha" in n)),
    ]


def check_arc_parity(a: Analysis) -> list[CheckResult]:
    ok, notes = True, []
    for cid, circle in a.model.circles.items():
        comp = a.model.components[cid]
        n = len(circle.points)
        for i, p in enumerate(circle.points):
            change = circle.arcs[i] != circle.arcs[(i + 1) % n]
            expect = p.order % 2 == 1
            if p.where == "infinity" and comp.N % 2:
                expect = not expect
            if change != expect:
                ok = False
                notes.append(f"{comp.label} point {i}")
    return [CheckResult("arc sign parity", ok, "; ".join(notes))]


def check_covering(a: Analysis) -> list[CheckResult]:
    m, s = a.model, a.summary
    ok_points, ok_odd, ok_chi, ok_euler = True, True, True, True
    for x in m.crossings:
        if not x.real:
            continue
        plus, minus = s.points[(x.id, 1)], s.points[(x.id, -1)]
        if gcd(m.components[x.a].N, m.components[x.b].N) % 2:
            ok_points &= plus == minus == 1
        else:
            ok_points &= plus + minus == 2 and plus in (0, 2)
    for comp in m.exceptional():
        if not comp.real:
            continue
        bp, bm = s.beta_tilde[(comp.id, 1)], s.beta_tilde[(comp.id, -1)]
        k = m.real_crossing_count(comp.id)
        if comp.N % 2:
            ok_odd &= bp == bm and bp.at_one() == 2 - k and bp.at_minus_one() == -k
            continue
        for sign, b in ((1, bp), (-1, bm)):
            pts = sum(s.points[(x.id, sign)] for x in m.crossings_of(comp.id) if x.real)
            if s.in_j[(comp.id, sign)]:
                ok_chi &= b.at_minus_one() == -pts
        # an unramified double cover over the arcs: Euler characteristics add up
        ok_euler &= bp.at_minus_one() + bm.at_minus_one() == 2 * (-k)
    return [
        CheckResult("cover point counts at crossings", ok_points),
        CheckResult("odd multiplicity covers equal the naive stratum", ok_odd),
        CheckResult("boundary count of the compactified cover", ok_chi),
        CheckResult("double cover Euler characteristic", ok_euler),
    ]


def check_poles(a: Analysis) -> list[CheckResult]:
    m = a.model
    out = []
    naive_top = a.top_set("naive")
    out.append(CheckResult(
        "naive poles equal at top and beta level", naive_top == a.beta_set("naive"),
        f"top {_fmt_set(naive_top)} beta {_fmt_set(a.beta_set('naive'))}"))
    for mode in MODES_BETA:
        out.append(CheckResult(f"{mode} top poles are beta poles", a.top_set(mode) <= a.beta_set(mode)))
    cands = candidate_poles(a.bundle.datum, m, "naive")
    cx = a.top_set("complexified")
    out.append(CheckResult(
        "naive poles are complexified poles on real candidates",
        naive_top == cx & cands, f"extra {_fmt_set((cx & cands) - naive_top)}"))
    # the same comparison with each complexified pole attributed to the components producing it
    attributed = {
        s0 for s0 in cx
        if any(-c.ratio == s0 and c.real and m.intersection_total(c.id) >= 3 for c in m.exceptional())
        or any(s0 == Fraction(-1, c.N) and c.real for c in m.strict())
        or (is_single_blowup_shape(m) and s0 == -m.exceptional()[0].ratio)
    }
    out.append(CheckResult(
        "naive poles are complexified poles produced by real components", naive_top == attributed))
    pred = predicted_poles(m, "naive")
    out.append(CheckResult(
        "predicted naive poles", set(pred) == naive_top, f"predicted {_fmt_set(pred)}"))
    for mode in ("plus", "minus"):
        bound = naive_top & candidate_poles(a.bundle.datum, m, mode)
        out.append(CheckResult(f"{mode} top poles within the signed bound", a.top_set(mode) <= bound))
        out.append(CheckResult(f"{mode} beta poles within the signed bound", a.beta_set(mode) <= bound))
        sp = predicted_poles(m, mode)
        certain = {s0 for s0, tag in sp.items() if tag == PREDICTED_CERTAIN}
        out.append(CheckResult(
            f"{mode} certain predictions are beta poles", certain <= a.beta_set(mode),
            f"certain {_fmt_set(certain)}"))
    twos = {p.location for p in a.top_poles["naive"] if p.order == 2}
    out.append(CheckResult("order-2 poles exactly at real equal-ratio crossings",
                           twos == order_two_expected(m), _fmt_set(twos)))
    return out


def check_contributions(a: Analysis) -> list[CheckResult]:
    m, datum = a.model, a.bundle.datum
    limit_ok, sum_ok, beta_sum_ok, nonzero_ok = True, True, True, True
    notes = []
    for mode in MODES_BETA:
        members = (
            {c.id for c in m.components if c.real} if mode == "naive"
            else a.summary.jr(SIGN_OF_MODE[mode])
        )
        by_pole: dict[Fraction, list] = {}
        for comp in m.components:
            if not comp.real or comp.id not in members:
                continue
            try:
                c = contribution(datum, comp.id, mode, model=m)
            except ZetaError:
                continue  # order-2 collision
            if limit_u_to_1(c.r_beta) != c.r_top:
                limit_ok = False
                notes.append(f"{mode} {comp.label} limit")
            by_pole.setdefault(c.s0, []).append(c)
            if comp.exceptional and not m.forced_extra and not m.identity:
                k2r = m.intersection_total(comp.id)
                special = m.real_crossing_count(comp.id) == 0
                if not special:
                    expect = k2r >= 3
                    if bool(c.r_beta) != expect or (mode == "naive" and bool(c.r_top) != expect):
                        nonzero_ok = False
                        notes.append(f"{mode} {comp.label} nonzero")
        tops = {p.location: p for p in a.top_poles[mode]}
        betas = {p.location: p for p in a.beta_poles[mode]}
        for s0, cs in by_pole.items():
            if (s0 in tops and tops[s0].order == 2) or (s0 in betas and betas[s0].order == 2):
                continue
            total = sum((c.r_top for c in cs), Fraction(0))
            res = tops[s0].residue_top if s0 in tops else Fraction(0)
            if total != res:
                sum_ok = False
                notes.append(f"{mode} residue at {s0}")
            btotal = sum((c.r_beta for c in cs), LaurentFraction.const(0))
            bres = betas[s0].residue_beta if s0 in betas else LaurentFraction.const(0)
            if btotal != bres:
                beta_sum_ok = False
                notes.append(f"{mode} beta residue at {s0}")
    return [
        CheckResult("beta contributions specialize to top contributions", limit_ok),
        CheckResult("top residue is the sum of contributions", sum_ok),
        CheckResult("beta residue is the sum of contributions", beta_sum_ok),
        CheckResult("contribution vanishes iff fewer than three intersections", nonzero_ok,
                    "; ".join(n for n in notes if "nonzero" in n)),
    ]


def check_monodromy(a: Analysis) -> list[CheckResult]:
    m, datum = a.model, a.bundle.datum
    try:
        char_polys_at(m, "origin", datum)
        poly_ok = True
    except MonodromyError:
        poly_ok = False
    missing = []
    for mode in MODES_TOP:
        poles = a.top_set(mode)
        for s0 in sorted(poles):
            if eigenvalue_witness(m, s0, mode, datum, poles) is None:
                missing.append(f"{mode} {s0}")
    return [
        CheckResult("origin characteristic polynomial is a polynomial", poly_ok),
        CheckResult("every pole has an eigenvalue witness", not missing, ", ".join(missing)),
    ]


def check_resolution_independence(a: Analysis, source, limit: int = 2) -> list[CheckResult]:
    """Blow up extra good points and compare every zeta function and deg P1."""
    total = count_good_real_points(a.model)
    indices = sorted({0, total - 1})[:limit] if total else []
    ok, notes = True, []
    p1_deg = char_polys_at(a.model, "origin", a.bundle.datum)[1].degree()
    for idx in indices:
        try:
            other = Analysis.of(resolve(source, force_index=idx))
        except ResolutionError as exc:
            ok = False
            notes.append(f"index {idx}: {exc}")
            continue
        for mode in MODES_TOP:
            if other.bundle.top[mode] != a.bundle.top[mode]:
                ok = False
                notes.append(f"index {idx} top {mode}")
        for mode in MODES_BETA:
            if other.bundle.beta[mode] != a.bundle.beta[mode]:
                ok = False
                notes.append(f"index {idx} beta {mode}")
        if char_polys_at(other.model, "origin")[1].degree() != p1_deg:
            ok = False
            notes.append(f"index {idx} monodromy")
    return [CheckResult("extra blowup leaves all zeta functions unchanged", ok,
                        "; ".join(notes) or f"{len(indices)} extra models")]


def run_all(a: Analysis, source=None) -> list[CheckResult]:
    out = []
    for fn in (check_graph, check_numerics, check_arc_parity, check_covering, check_poles,
               check_contributions, check_monodromy):
        out.extend(fn(a))
    if source is not None:
        out.extend(check_resolution_independence(a, source))
    return out
