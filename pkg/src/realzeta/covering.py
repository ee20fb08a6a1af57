"""Signed double-cover data over the real exceptional curves.

For an exceptional curve E with even N the cover {t^N g = +-1} over the
open arcs where g has the requested sign is glued at the marked points and
at the chart change at infinity.  Each matching arc carries two sheets,
labelled by the sign of t; the gluing is decided locally from the vanishing
order d of g at the point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .ratfunc import LaurentPoly
from .resolution import Crossing, RealCircle, ResolutionModel


class CoverError(ValueError):
    pass


def cover_points_at_crossing(crossing: Crossing, n_a: int, n_b: int, sign: int) -> int:
    """Number of real points of the cover over a real crossing."""
    if not crossing.real:
        raise CoverError("complex crossing has no real cover points")
    if gcd(n_a, n_b) % 2:
        return 1
    return 2 if crossing.unit_sign == sign else 0


class _Sheets:
    def __init__(self):
        self.parent: dict = {}

    def add(self, node) -> None:
        self.parent.setdefault(node, node)

    def find(self, node):
        while self.parent[node] != node:
            self.parent[node] = self.parent[self.parent[node]]
            node = self.parent[node]
        return node

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb

    def classes(self) -> int:
        return len({self.find(n) for n in self.parent})


def glue_sheets(arcs: list[int], orders: list[int], big_n: int, sign: int, infinity_last: bool = True) -> int:
    """Connected components of the glued cover over a cyclic arc pattern.

    ``arcs[i]`` is the sign of g on the arc ending at point i and ``orders[i]``
    the vanishing order of g at point i.  The last point is the chart change
    at infinity when ``infinity_last``.
    """
    if big_n % 2:
        raise CoverError("cover trivial, use odd-case formula")
    n = len(arcs)
    sheets = _Sheets()
    for i, s in enumerate(arcs):
        if s == sign:
            sheets.add((i, 1))
            sheets.add((i, -1))
    for i in range(n):
        left, right = i, (i + 1) % n
        d = orders[i]
        at_infinity = infinity_last and i == n - 1
        lm, rm = arcs[left] == sign, arcs[right] == sign
        if d % 2:
            if lm == rm:
                raise CoverError("sign does not change across an odd-order point")
            side = left if lm else right
            sheets.union((side, 1), (side, -1))
            continue
        if lm != rm:
            raise CoverError("sign changes across an even-order point")
        if not lm:
            continue
        g = gcd(big_n, d) if d else big_n
        if (big_n // g) % 2 == 0:
            sheets.union((left, 1), (left, -1))
            sheets.union((right, 1), (right, -1))
            continue
        flip = (d // g) % 2
        if at_infinity:
            flip ^= 1
        for s in (1, -1):
            sheets.union((left, s), (right, -s if flip else s))
    return sheets.classes()


def cover_component_count(circle: RealCircle, big_n: int, sign: int) -> int:
    return glue_sheets(circle.arcs, [p.order for p in circle.points], big_n, sign)


@dataclass
class CoverSummary:
    beta_tilde: dict = field(default_factory=dict)  # (component id, sign) -> LaurentPoly
    components_count: dict = field(default_factory=dict)  # (component id, sign) -> c
    points: dict = field(default_factory=dict)  # (crossing id, sign) -> 0, 1 or 2
    in_j: dict = field(default_factory=dict)  # (component id, sign) -> bool

    def jr(self, sign: int) -> set[int]:
        return {cid for (cid, s), v in self.in_j.items() if s == sign and v}


def _strict_membership(model: ResolutionModel, cid: int, sign: int) -> bool:
    comp = model.components[cid]
    if not comp.real:
        return False
    if comp.N % 2:
        return True
    xs = [x for x in model.crossings_of(cid) if x.real]
    if not xs:
        # lone smooth branch through the origin: f = unit * l^N
        return model.unit_sign_origin == sign
    x = xs[0]
    other = model.components[x.other(cid)]
    if other.N % 2:
        return True
    return x.unit_sign == sign


def beta_tilde_component(model: ResolutionModel, cid: int, sign: int, summary: CoverSummary | None = None) -> LaurentPoly:
    """beta of the open signed cover over an exceptional curve (0 for strict branches)."""
    comp = model.components[cid]
    if not comp.exceptional or not comp.real:
        return LaurentPoly()
    circle = model.circles[cid]
    k = model.real_crossing_count(cid)
    if comp.N % 2:
        return LaurentPoly({1: 1, 0: 1 - k})
    if sign not in circle.arcs:
        return LaurentPoly()
    c = cover_component_count(circle, comp.N, sign)
    total_points = 0
    for x in model.crossings_of(cid):
        if x.real:
            other = model.components[x.other(cid)]
            total_points += cover_points_at_crossing(x, comp.N, other.N, sign)
    return LaurentPoly({1: c, 0: c - total_points})


def signed_membership(model: ResolutionModel) -> dict[int, set[int]]:
    summary = cover_summary(model)
    return {1: summary.jr(1), -1: summary.jr(-1)}


def cover_summary(model: ResolutionModel) -> CoverSummary:
    out = CoverSummary()
    for x in model.crossings:
        if not x.real:
            continue
        na, nb = model.components[x.a].N, model.components[x.b].N
        for sign in (1, -1):
            out.points[(x.id, sign)] = cover_points_at_crossing(x, na, nb, sign)
    for comp in model.components:
        for sign in (1, -1):
            if not comp.real:
                out.in_j[(comp.id, sign)] = False
                continue
            if comp.exceptional:
                circle = model.circles[comp.id]
                member = comp.N % 2 == 1 or sign in circle.arcs
                out.in_j[(comp.id, sign)] = member
                out.beta_tilde[(comp.id, sign)] = beta_tilde_component(model, comp.id, sign)
                if comp.N % 2 == 0:
                    out.components_count[(comp.id, sign)] = (
                        cover_component_count(circle, comp.N, sign) if member else 0
                    )
            else:
                out.in_j[(comp.id, sign)] = _strict_membership(model, comp.id, sign)
                out.beta_tilde[(comp.id, sign)] = LaurentPoly()
    return out
