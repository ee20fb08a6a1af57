"""Minimal embedded resolution of a plane curve germ at the origin.

The germ is followed chart by chart.  A local state sits at one point of
the current total transform and knows the (at most two) components through
it that are coordinate axes, the strict factors vanishing there, and the
value of the residual unit.  Bad points are blown up; good ones become
crossings of the final model.

Real points are followed one by one in real-embedded number fields.  All
non-real roots of one irreducible factor are followed together as a single
abstract state whose ``copies`` counts the geometric points it stands for.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .algebraic import (
    AlgebraicNumber,
    NumberField,
    RealRoot,
    _isolate_rootfree,
    extend_field,
    factor_over_field,
    separate_roots,
    sample_between,
    sign_of,
)
from .polys import QQ, BiPoly, UniPoly, coprime_base, leading_constant, squarefree_decomposition

MAX_DEPTH = 64


class ResolutionError(ValueError):
    pass


@dataclass
class Component:
    id: int
    kind: str  # "exceptional" or "strict"
    N: int
    nu: int
    real: bool
    copies: int = 1  # geometric components over C represented by this record
    label: str = ""
    step: int | None = None  # blowup index for exceptional curves
    field: str = "QQ"

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.nu, self.N)

    @property
    def exceptional(self) -> bool:
        return self.kind == "exceptional"


@dataclass
class Crossing:
    id: int
    a: int
    b: int
    real: bool
    copies: int = 1  # geometric points over C
    unit_sign: int | None = None
    location: str = ""

    def other(self, cid: int) -> int:
        return self.b if cid == self.a else self.a


@dataclass
class MarkedPoint:
    crossing: int | None  # None only for an unmarked point at infinity
    order: int  # vanishing order of the restricted unit there
    where: str  # "finite" or "infinity"
    value: float | None = None


@dataclass
class RealCircle:
    """Real projective line of an exceptional curve with its marked points.

    ``points`` lists the finite marked points in increasing order followed by
    the point at infinity of the creation chart (marked or not).  ``arcs[i]``
    is the sign of the restricted unit on the open arc that ends at
    ``points[i]``; the arc after the last finite point wraps to infinity, so
    ``arcs`` has one entry per point and arc i runs from point i-1 (cyclically)
    to point i.
    """

    component: int
    points: list[MarkedPoint]
    arcs: list[int]
    infinity_order: int


@dataclass
class BlowupNode:
    index: int
    parent: int | None
    depth: int
    component: int
    real: bool
    copies: int
    field: str
    reason: str


@dataclass
class ResolutionModel:
    components: list[Component]
    crossings: list[Crossing]
    circles: dict[int, RealCircle]
    branches: list[int]
    identity: bool
    blowups: list[BlowupNode]
    unit_sign_origin: int | None = None
    forced_extra: bool = False

    def component(self, cid: int) -> Component:
        return self.components[cid]

    def exceptional(self) -> list[Component]:
        return [c for c in self.components if c.exceptional]

    def strict(self) -> list[Component]:
        return [c for c in self.components if not c.exceptional]

    def crossings_of(self, cid: int) -> list[Crossing]:
        return [x for x in self.crossings if cid in (x.a, x.b)]

    def intersection_total(self, cid: int) -> int:
        """k + 2r for one geometric copy of the component."""
        comp = self.components[cid]
        return sum(x.copies for x in self.crossings_of(cid)) // comp.copies

    def real_crossing_count(self, cid: int) -> int:
        return sum(1 for x in self.crossings_of(cid) if x.real)


@dataclass
class Verdict:
    good: bool
    reason: str
    multiplicity: int


@dataclass
class _State:
    dom: object
    real: bool
    copies: int
    const: object  # value of the residual unit (None when not real)
    strict: list  # [(BiPoly over dom, exponent)]
    axis_x: int | None
    axis_y: int | None
    depth: int
    parent: int | None
    where: str = "origin"


def _field_name(dom) -> str:
    if dom is QQ:
        return "QQ"
    return f"QQ[t]/({dom.minpoly.to_str('t')})" + ("" if dom.real else " (non-real)")


def blowup_numerics(through: list[tuple[int, int, int]]) -> tuple[int, int]:
    """(nu, N) of a new exceptional curve from (N_j, nu_j, multiplicity_j) at the center.

    Strict factors enter with nu = 1, so only their multiplicity counts towards N.
    """
    big = sum(n * m for n, _, m in through)
    nu = 2 + sum((v - 1) * m for _, v, m in through)
    return nu, big


def is_normal_crossing_at(axes: int, strict: list[BiPoly], real: bool) -> Verdict:
    """Normal-crossing test for the reduced local equation at the origin.

    ``axes`` is a bitmask: 1 for {x = 0}, 2 for {y = 0}.  At real points a
    multiplicity-two branch must have two real tangents.
    """
    mult = bin(axes).count("1") + sum(g.order() for g in strict)
    if mult <= 1:
        return Verdict(True, "smooth", mult)
    if mult >= 3:
        return Verdict(False, "tripleOrWorse", mult)
    form = BiPoly.const(1, strict[0].dom if strict else QQ)
    if axes & 1:
        form = form * BiPoly.x(form.dom)
    if axes & 2:
        form = form * BiPoly.y(form.dom)
    for g in strict:
        form = form * BiPoly._raw(g.lowest_form(), g.dom)
    a = form.terms.get((2, 0), form.dom.zero)
    b = form.terms.get((1, 1), form.dom.zero)
    c = form.terms.get((0, 2), form.dom.zero)
    disc = b * b - a * c * 4
    pieces = bin(axes).count("1") + len(strict)
    if not disc:
        return Verdict(False, "tangency" if pieces >= 2 else "singularBranch", mult)
    if real and sign_of(disc) < 0:
        return Verdict(False, "singularBranch", mult)
    return Verdict(True, "node", mult)


def prepare_factors(f: BiPoly | list[tuple[BiPoly, int]]) -> tuple[Fraction, list[tuple[BiPoly, int]]]:
    """Constant and pairwise coprime squarefree factors with exponents."""
    if isinstance(f, BiPoly):
        if not f:
            raise ResolutionError("zero input")
        pieces = squarefree_decomposition(f)
        return leading_constant(f, pieces), pieces
    total = BiPoly.const(1)
    pieces = []
    for g, e in f:
        if not g:
            raise ResolutionError("zero input")
        total = total * g ** e
        pieces.extend((h, k * e) for h, k in squarefree_decomposition(g))
    pieces = coprime_base(pieces)
    return leading_constant(total, pieces), pieces


class _Resolver:
    def __init__(self, force_index: int | None = None):
        self.components: list[Component] = []
        self.crossings: list[Crossing] = []
        self.blowups: list[BlowupNode] = []
        self.circle_data: dict[int, dict] = {}
        self.force_index = force_index
        self.good_seen = 0
        self.forced = False
        self.branch_count = 0

    # -- records -------------------------------------------------------------

    def _new_component(self, kind: str, big: int, nu: int, st: _State) -> int:
        cid = len(self.components)
        if kind == "exceptional":
            label = f"E{len(self.blowups) + 1}"
        else:
            self.branch_count += 1
            label = f"S{self.branch_count}"
        self.components.append(
            Component(cid, kind, big, nu, st.real, st.copies, label,
                      len(self.blowups) + 1 if kind == "exceptional" else None, _field_name(st.dom))
        )
        return cid

    def _new_crossing(self, a: int, b: int, st: _State) -> int:
        xid = len(self.crossings)
        sign = sign_of(st.const) if st.real else None
        self.crossings.append(Crossing(xid, a, b, st.real, st.copies, sign, st.where))
        return xid

    # -- main recursion ------------------------------------------------------

    def visit(self, st: _State) -> tuple[int | None, int | None]:
        if st.depth > MAX_DEPTH:
            raise ResolutionError("resolution did not terminate")
        axes = (1 if st.axis_x is not None else 0) | (2 if st.axis_y is not None else 0)
        verdict = is_normal_crossing_at(axes, [g for g, _ in st.strict], st.real)
        if verdict.good and st.real and (verdict.multiplicity >= 2 or st.depth == 0):
            idx = self.good_seen
            self.good_seen += 1
            if idx == self.force_index:
                self.forced = True
                return self.blowup(st, "forced")
        if verdict.good:
            return self.finalize(st)
        return self.blowup(st, verdict.reason)

    def finalize(self, st: _State) -> tuple[int | None, int | None]:
        strict = st.strict
        if st.axis_x is not None and st.axis_y is not None:
            xid = self._new_crossing(st.axis_x, st.axis_y, st)
            return xid, xid
        if st.axis_x is not None or st.axis_y is not None:
            axis = st.axis_x if st.axis_x is not None else st.axis_y
            if not strict:
                return None, None
            (g, e), = strict
            sid = self._new_component("strict", e, 1, st)
            xid = self._new_crossing(axis, sid, st)
            return (xid, None) if st.axis_x is not None else (None, xid)
        # no axes: the germ itself is already normal crossing
        if len(strict) == 1 and strict[0][0].order() == 1:
            self._new_component("strict", strict[0][1], 1, st)
        elif len(strict) == 2:
            s1 = self._new_component("strict", strict[0][1], 1, st)
            s2 = self._new_component("strict", strict[1][1], 1, st)
            self._new_crossing(s1, s2, st)
        else:
            (g, e), = strict
            s1 = self._new_component("strict", e, 1, st)
            s2 = self._new_component("strict", e, 1, st)
            self._new_crossing(s1, s2, st)
        return None, None

    def blowup(self, st: _State, reason: str) -> tuple[int | None, int | None]:
        dom = st.dom
        through = []
        if st.axis_x is not None:
            c = self.components[st.axis_x]
            through.append((c.N, c.nu, 1))
        if st.axis_y is not None:
            c = self.components[st.axis_y]
            through.append((c.N, c.nu, 1))
        for g, e in st.strict:
            through.append((e, 1, g.order()))
        nu, big = blowup_numerics(through)
        eid = self._new_component("exceptional", big, nu, st)
        node = len(self.blowups)
        self.blowups.append(BlowupNode(node, st.parent, st.depth, eid, st.real, st.copies, _field_name(dom), reason))
        n_y = self.components[st.axis_y].N if st.axis_y is not None else 0

        # chart 1: x = x1, y = x1*y1, E = {x1 = 0}
        chart1 = [(g.chart_x()[0], e) for g, e in st.strict]
        restricted = [(g.restrict_x0(), e) for g, e in chart1]
        orbits: dict = {}
        if st.axis_y is not None:
            orbits[UniPoly.var(dom)] = None
        for r, _ in restricted:
            if r.degree() >= 1:
                for q, _m in factor_over_field(r):
                    orbits.setdefault(q, None)
        g_unit = None
        if st.real:
            g_unit = UniPoly([st.const], dom) * UniPoly.monomial(n_y, 1, dom)
            for r, e in restricted:
                g_unit = g_unit * r ** e
        marked = []
        nbr_y = None
        for q in sorted(orbits, key=lambda p: (p.degree(), str(p.coeffs))):
            order = 0
            for r, e in restricted:
                order += e * _multiplicity(q, r)
            if st.axis_y is not None and q == UniPoly.var(dom):
                order += n_y
            if st.real:
                roots = _real_roots(q)
                for root in roots:
                    ext = extend_field(q, root, name=f"a{node + 1}")
                    child = self._child_chart1(st, chart1, ext, q, eid, st.copies, node, real=True)
                    res = self.visit(child)
                    marked.append((root, res[0], order))
                    if child.axis_y is not None:
                        nbr_y = res[1]
                nonreal = q.degree() - len(roots)
                if nonreal:
                    ext = extend_field(q, None, name=f"c{node + 1}")
                    child = self._child_chart1(st, chart1, ext, q, eid, st.copies * nonreal, node, real=False)
                    self.visit(child)
            else:
                ext = extend_field(q, None, name=f"c{node + 1}")
                child = self._child_chart1(st, chart1, ext, q, eid, st.copies * q.degree(), node, real=False)
                res = self.visit(child)
                if child.axis_y is not None:
                    nbr_y = res[1]

        # chart 2: x = x2*y2, y = y2, E = {y2 = 0}; only its origin is new
        chart2 = [(g.chart_y()[0], e) for g, e in st.strict]
        stay = [(g, e) for g, e in chart2 if not g.constant_term()]
        const = st.const
        if st.real:
            for g, e in chart2:
                if g.constant_term():
                    const = const * g.constant_term() ** e
        big_deg = g_unit.degree() if g_unit is not None else None
        nbr_x = None
        inf_crossing = None
        if st.axis_x is not None or stay:
            child = _State(dom, st.real, st.copies, const if st.real else None, stay,
                           st.axis_x, eid, st.depth + 1, node, where=f"E{node + 1} at infinity")
            res = self.visit(child)
            nbr_x = res[0]
            inf_crossing = res[1]
        if st.real:
            self.circle_data[eid] = {
                "unit": g_unit,
                "marked": marked,
                "infinity": inf_crossing,
                "infinity_order": big - big_deg,
            }
        return nbr_x, nbr_y

    def _child_chart1(self, st: _State, chart1, ext, q, eid, copies, node, real) -> _State:
        L, alpha, embed = ext.field, ext.root, ext.embed
        const = None
        if real:
            const = embed(st.const)
            if st.axis_y is not None and not _is_var(q):
                n_y = self.components[st.axis_y].N
                const = const * alpha ** n_y
        strict = []
        for g, e in chart1:
            gl = g.map_coeffs(embed, L) if L is not st.dom else g
            moved = gl.translate_y(alpha)
            value = moved.constant_term()
            if value:
                if real:
                    const = const * value ** e
            else:
                strict.append((moved, e))
        axis_y = st.axis_y if _is_var(q) else None
        where = f"E{node + 1} at {('y1 = 0' if _is_var(q) else 'a root of ' + q.to_str('y1'))}"
        return _State(L, real, copies, const, strict, eid, axis_y, st.depth + 1, node, where)


def _is_var(q: UniPoly) -> bool:
    return q.degree() == 1 and not q.coeff(0)


def _multiplicity(q: UniPoly, r: UniPoly) -> int:
    m = 0
    while r.degree() >= q.degree() >= 1:
        quo, rem = divmod(r, q)
        if rem:
            break
        r = quo
        m += 1
    return m


def _real_roots(q: UniPoly) -> list[RealRoot]:
    if q.degree() == 1:
        value = -q.coeff(0) / q.coeff(1)
        if isinstance(value, AlgebraicNumber):
            lo, hi = value.enclosure()
        else:
            lo = hi = value
        return [RealRoot(q, lo, hi, value)]
    return _isolate_rootfree(q)


def _build_circle(eid: int, data: dict) -> RealCircle:
    g: UniPoly = data["unit"]
    items = separate_roots([r for r, _, _ in data["marked"]], [(x, d) for _, x, d in data["marked"]])
    roots = [r for r, _ in items]
    samples = sample_between(roots, include_ends=True)
    signs = [sign_of(g(s)) for s in samples]
    points = [MarkedPoint(x, d, "finite", r.approx()) for r, (x, d) in items]
    points.append(MarkedPoint(data["infinity"], data["infinity_order"], "infinity"))
    # one sample per arc: arc i ends at points[i], the last one at infinity
    return RealCircle(eid, points, signs, data["infinity_order"])


def resolve(f: BiPoly | list[tuple[BiPoly, int]], force_index: int | None = None) -> ResolutionModel:
    """Minimal embedded resolution of the germ of f at the origin.

    ``force_index`` makes the engine also blow up the given good real point
    (numbered in traversal order), which yields a non-minimal model of the
    same germ.
    """
    const, pieces = prepare_factors(f)
    if not pieces:
        raise ResolutionError("constant input")
    strict = []
    for g, e in pieces:
        value = g.constant_term()
        if value:
            const = const * value ** e
        else:
            strict.append((g, e))
    if not strict:
        raise ResolutionError("not a germ at origin")
    solver = _Resolver(force_index)
    st = _State(QQ, True, 1, const, strict, None, None, 0, None)
    solver.visit(st)
    if force_index is not None and not solver.forced:
        raise ResolutionError("no good point with that index")
    circles = {eid: _build_circle(eid, data) for eid, data in solver.circle_data.items()}
    branches = [c.id for c in solver.components if not c.exceptional]
    identity = not solver.blowups
    return ResolutionModel(
        solver.components, solver.crossings, circles, branches, identity, solver.blowups,
        unit_sign_origin=sign_of(const), forced_extra=solver.forced,
    )


def count_good_real_points(model: ResolutionModel) -> int:
    """Number of real crossings, i.e. indices accepted by ``force_index``."""
    return sum(1 for x in model.crossings if x.real) + (1 if model.identity and len(model.branches) == 1 else 0)
