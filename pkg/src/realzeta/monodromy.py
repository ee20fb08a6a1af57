"""Monodromy zeta function at the origin (A'Campo) and eigenvalue witnesses.

Everything is exponent arithmetic on products of (t^m - 1): the primitive
q-th roots of unity occur in prod (t^m - 1)^e_m with multiplicity
sum over q | m of e_m.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .covering import cover_summary
from .polys import QQ, UniPoly
from .resolution import ResolutionModel
from .zeta import DLDatum, SIGN_OF_MODE, ZetaError, dl_datum, pole_set, poles_top, z_top


class MonodromyError(RuntimeError):
    pass


@dataclass
class CycloProduct:
    exps: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        self.exps = {m: e for m, e in sorted(self.exps.items()) if e}

    def __mul__(self, other: "CycloProduct") -> "CycloProduct":
        out = dict(self.exps)
        for m, e in other.exps.items():
            out[m] = out.get(m, 0) + e
        return CycloProduct(out)

    def __truediv__(self, other: "CycloProduct") -> "CycloProduct":
        return self * CycloProduct({m: -e for m, e in other.exps.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, CycloProduct) and self.exps == other.exps

    def root_multiplicity(self, q: int) -> int:
        """Multiplicity of a primitive q-th root of unity."""
        return sum(e for m, e in self.exps.items() if m % q == 0)

    def is_polynomial(self) -> bool:
        return all(self.root_multiplicity(q) >= 0 for m in self.exps for q in _divisors(m))

    def degree(self) -> int:
        return sum(m * e for m, e in self.exps.items())

    def expand(self) -> UniPoly:
        if not self.is_polynomial():
            raise MonodromyError("not a polynomial")
        num, den = UniPoly.const(1, QQ), UniPoly.const(1, QQ)
        for m, e in self.exps.items():
            factor = UniPoly.monomial(m) - UniPoly.const(1, QQ)
            if e > 0:
                num = num * factor ** e
            else:
                den = den * factor ** (-e)
        return num.exact_div(den)

    def to_str(self) -> str:
        if not self.exps:
            return "1"
        parts = []
        for m, e in self.exps.items():
            base = "(t-1)" if m == 1 else f"(t^{m}-1)"
            parts.append(base if e == 1 else f"{base}^{e}" if e > 0 else f"{base}^({e})")
        return "*".join(parts)

    def to_json(self) -> dict:
        return {str(m): e for m, e in self.exps.items()}


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def acampo_zeta_origin(model: ResolutionModel, datum: DLDatum | None = None) -> CycloProduct:
    """prod over open strata E_j^0 over the origin of (t^N_j - 1)^(-chi)."""
    datum = datum or dl_datum(model)
    exps: dict[int, int] = {}
    for s in datum.strata:
        if len(s.components) == 1 and s.chi_complex:
            big = s.factors[0][1]
            exps[big] = exps.get(big, 0) - s.chi_complex
    return CycloProduct(exps)


def branch_gcd(model: ResolutionModel) -> int:
    g = 0
    for cid in model.branches:
        g = gcd(g, model.components[cid].N)
    return g


def char_polys_at(model: ResolutionModel, point: str | int = "origin",
                  datum: DLDatum | None = None) -> tuple[CycloProduct, CycloProduct]:
    """(P0, P1) at the origin or at a generic point of branch ``point``."""
    if point == "origin":
        p0 = CycloProduct({branch_gcd(model): 1})
        p1 = acampo_zeta_origin(model, datum) * p0
        if not p1.is_polynomial():
            raise MonodromyError("A'Campo inconsistency")
        return p0, p1
    cid = int(point)
    if cid not in model.branches:
        raise MonodromyError(f"component {cid} is not a branch")
    return CycloProduct({model.components[cid].N: 1}), CycloProduct()


@dataclass
class EigenvalueWitness:
    pole: Fraction
    kind: str  # OriginH0, OriginH1 or BranchPoint
    branch: int | None
    region: str  # none, PlusClosure, MinusClosure
    q: int
    multiplicity: int


REGION = {"naive": "none", "complexified": "none", "plus": "PlusClosure", "minus": "MinusClosure"}


def eigenvalue_witness(model: ResolutionModel, s0: Fraction, mode: str = "naive",
                       datum: DLDatum | None = None, poles: set[Fraction] | None = None) -> EigenvalueWitness | None:
    """Certify exp(2 pi i s0) as a monodromy eigenvalue near the origin; None if that fails."""
    datum = datum or dl_datum(model)
    s0 = Fraction(s0)
    if poles is None:
        poles = pole_set(poles_top(z_top(datum, mode)))
    if s0 not in poles:
        raise ZetaError("not a pole")
    q = s0.denominator
    if mode in SIGN_OF_MODE:
        allowed = cover_summary(model).jr(SIGN_OF_MODE[mode])
    else:
        allowed = {c.id for c in model.components if c.real or mode == "complexified"}
    region = REGION[mode]

    def at_origin():
        p0, p1 = char_polys_at(model, "origin", datum)
        if p0.root_multiplicity(q) > 0:
            return EigenvalueWitness(s0, "OriginH0", None, region, q, p0.root_multiplicity(q))
        if p1.root_multiplicity(q) > 0:
            return EigenvalueWitness(s0, "OriginH1", None, region, q, p1.root_multiplicity(q))
        return None

    def on_branch():
        for cid in model.branches:
            comp = model.components[cid]
            if cid in allowed and Fraction(-1, comp.N) == s0:
                p0, _ = char_polys_at(model, cid)
                mult = p0.root_multiplicity(q)
                if mult > 0:
                    return EigenvalueWitness(s0, "BranchPoint", cid, region, q, mult)
        return None

    from_exceptional = any(
        c.exceptional and c.id in allowed and -c.ratio == s0 for c in model.components
    )
    order = (at_origin, on_branch) if from_exceptional else (on_branch, at_origin)
    for attempt in order:
        w = attempt()
        if w is not None:
            return w
    return None
