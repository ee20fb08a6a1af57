"""Zeta functions from resolution data: assembly, poles, contributions, predictions."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .covering import CoverSummary, cover_summary
from .polys import UniPoly
from .ratfunc import (
    U_MINUS_ONE,
    LaurentFraction,
    LaurentPoly,
    RationalFunctionS,
    ZetaBetaFunction,
    normalize_ratfunc_s,
    ratio_factor,
)
from .resolution import ResolutionModel

MODES_TOP = ("naive", "plus", "minus", "complexified")
MODES_BETA = ("naive", "plus", "minus")
SIGN_OF_MODE = {"plus": 1, "minus": -1}

PREDICTED_EXACT = "PREDICTED_EXACT"
PREDICTED_UPPER = "PREDICTED_UPPER"
PREDICTED_CERTAIN = "PREDICTED_CERTAIN"


class ZetaError(ValueError):
    pass


@dataclass
class Stratum:
    components: tuple[int, ...]
    factors: list[tuple[int, int]]  # (nu, N) per component
    beta_real: LaurentPoly = field(default_factory=LaurentPoly)
    beta_plus: LaurentPoly = field(default_factory=LaurentPoly)
    beta_minus: LaurentPoly = field(default_factory=LaurentPoly)
    chi_complex: int = 0

    def beta(self, mode: str) -> LaurentPoly:
        return {"naive": self.beta_real, "plus": self.beta_plus, "minus": self.beta_minus}[mode]

    def mu(self, mode: str) -> Fraction:
        if mode == "complexified":
            return Fraction(self.chi_complex)
        return self.beta(mode).at_one()


@dataclass
class DLDatum:
    dimension: int
    strata: list[Stratum]

    def to_json(self) -> dict:
        def coeffs(p: LaurentPoly) -> list:
            if not p.terms:
                return []
            if min(p.terms) < 0:
                raise ZetaError("negative powers of u in a stratum")
            return [_json_number(c) for c in p.coeff_list()]

        return {
            "dimension": self.dimension,
            "strata": [
                {
                    "components": list(s.components),
                    "betaReal": coeffs(s.beta_real),
                    "betaPlus": coeffs(s.beta_plus),
                    "betaMinus": coeffs(s.beta_minus),
                    "chiComplex": s.chi_complex,
                    "factors": [[nu, big] for nu, big in s.factors],
                }
                for s in self.strata
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "DLDatum":
        try:
            strata = []
            for item in data["strata"]:
                factors = [(int(a), int(b)) for a, b in item["factors"]]
                if not factors:
                    raise ZetaError("stratum without factors")
                if any(nu <= 0 or big <= 0 for nu, big in factors):
                    raise ZetaError("(nu, N) must be positive")
                comps = tuple(int(c) for c in item.get("components", range(len(factors))))
                if len(comps) != len(factors):
                    raise ZetaError("one factor per component")

                def poly(key):
                    raw = item.get(key, [])
                    if not isinstance(raw, list):
                        raise ZetaError(f"{key} must be a list of coefficients of u^0, u^1, ...")
                    return LaurentPoly.from_coeffs([Fraction(c) for c in raw])

                strata.append(Stratum(
                    comps, factors, poly("betaReal"), poly("betaPlus"), poly("betaMinus"),
                    int(item.get("chiComplex", 0)),
                ))
            return cls(int(data.get("dimension", 2)), strata)
        except ZetaError:
            raise
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ZetaError(f"malformed datum: {exc}") from exc

    def components(self) -> dict[int, tuple[int, int]]:
        out = {}
        for s in self.strata:
            for cid, fac in zip(s.components, s.factors):
                out[cid] = fac
        return out


def _json_number(c):
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else str(c)


# ---------------------------------------------------------------------------
# datum assembly


def dl_datum(model: ResolutionModel, summary: CoverSummary | None = None) -> DLDatum:
    summary = summary or cover_summary(model)
    comps = model.components
    strata: list[Stratum] = []

    def fac(cid: int) -> tuple[int, int]:
        return (comps[cid].nu, comps[cid].N)

    if model.identity:
        # sigma is the identity: the only stratum over the origin is the origin itself
        ids = tuple(sorted(model.branches))
        st = Stratum(ids, [fac(c) for c in ids], LaurentPoly.const(1), chi_complex=1)
        if len(ids) == 1:
            big = comps[ids[0]].N
            counts = {s: (1 if big % 2 else (2 if model.unit_sign_origin == s else 0)) for s in (1, -1)}
        else:
            x = model.crossings[0]
            counts = {s: summary.points[(x.id, s)] for s in (1, -1)}
        st.beta_plus = LaurentPoly.const(counts[1])
        st.beta_minus = LaurentPoly.const(counts[-1])
        strata.append(st)
        return DLDatum(2, strata)

    for comp in comps:
        if not comp.exceptional:
            continue
        per_copy = model.intersection_total(comp.id)
        st = Stratum((comp.id,), [fac(comp.id)], chi_complex=comp.copies * (2 - per_copy))
        if comp.real:
            k = model.real_crossing_count(comp.id)
            st.beta_real = LaurentPoly({1: 1, 0: 1 - k})
            st.beta_plus = summary.beta_tilde.get((comp.id, 1), LaurentPoly())
            st.beta_minus = summary.beta_tilde.get((comp.id, -1), LaurentPoly())
        strata.append(st)
    for x in model.crossings:
        a, b = sorted((x.a, x.b))
        st = Stratum((a, b), [fac(a), fac(b)], chi_complex=x.copies)
        if x.real:
            st.beta_real = LaurentPoly.const(1)
            st.beta_plus = LaurentPoly.const(summary.points[(x.id, 1)])
            st.beta_minus = LaurentPoly.const(summary.points[(x.id, -1)])
        strata.append(st)
    return DLDatum(2, strata)


# ---------------------------------------------------------------------------
# zeta functions


def z_top(datum: DLDatum, mode: str = "naive") -> RationalFunctionS:
    if mode not in MODES_TOP:
        raise ZetaError(f"unknown mode {mode!r}")
    terms = []
    for s in datum.strata:
        mu = s.mu(mode)
        if mu:
            terms.append((mu, s.factors))
    return normalize_ratfunc_s(terms)


def z_beta(datum: DLDatum, mode: str = "naive") -> ZetaBetaFunction:
    if mode not in MODES_BETA:
        raise ZetaError(f"unknown mode {mode!r}")
    drop = 0 if mode == "naive" else 1
    terms = []
    for s in datum.strata:
        b = s.beta(mode)
        if b:
            terms.append((U_MINUS_ONE ** (len(s.components) - drop) * b, s.factors))
    return ZetaBetaFunction(terms)


def candidate_poles(datum: DLDatum, model: ResolutionModel | None = None, mode: str = "naive") -> set[Fraction]:
    """-nu/N over components with real points (naive), over J^+- (signed), or all."""
    comps = datum.components()
    if mode == "complexified":
        return {-Fraction(nu, big) for nu, big in comps.values()}
    if model is None:
        # without geometry, a component counts when some stratum through it is nonempty
        live = set()
        for s in datum.strata:
            if s.beta(mode):
                live.update(s.components)
        return {-Fraction(*comps[c]) for c in live}
    if mode == "naive":
        ids = [c.id for c in model.components if c.real]
    else:
        summary = cover_summary(model)
        ids = summary.jr(SIGN_OF_MODE[mode])
    return {-model.components[c].ratio for c in ids}


# ---------------------------------------------------------------------------
# poles


@dataclass
class PoleRecord:
    location: Fraction
    order: int
    residue_top: Fraction | None = None
    residue_beta: LaurentFraction | None = None


def poles_top(z: RationalFunctionS) -> list[PoleRecord]:
    if z.is_zero():
        return []
    roots = z.linear_denominator_factors()
    if roots is None:
        raise ZetaError("denominator does not split into linear factors")
    out = []
    for r, k in roots:
        rest = z.den
        lin = UniPoly([-r, 1])
        for _ in range(k):
            rest = rest.exact_div(lin)
        out.append(PoleRecord(r, k, residue_top=z.num(r) / rest(r)))
    return out


def _series_mul(a: list, b: list, order: int) -> list:
    out = [LaurentFraction.const(0) for _ in range(order)]
    for i, x in enumerate(a[:order]):
        if not x:
            continue
        for j, y in enumerate(b[: order - i]):
            if y:
                out[i + j] = out[i + j] + x * y
    return out


def _series_inverse(a: list, order: int) -> list:
    inv0 = 1 / a[0]
    out = [inv0]
    for n in range(1, order):
        acc = LaurentFraction.const(0)
        for k in range(1, n + 1):
            if k < len(a) and a[k]:
                acc = acc + a[k] * out[n - k]
        out.append(-(acc * inv0))
    return out


def _binomial_series(big: int, order: int) -> list:
    return [LaurentFraction.const(comb(big, j)) for j in range(order)]


def _matching_series(big: int, order: int) -> list:
    """(1+e)^N / (1 - (1+e)^N) times e, as a power series in e."""
    # 1 - (1+e)^N = -e * h(e),  h(e) = sum_{j>=1} C(N, j) e^(j-1)
    h = [LaurentFraction.const(comb(big, j + 1)) for j in range(order)]
    return [-c for c in _series_mul(_binomial_series(big, order), _series_inverse(h, order), order)]


def _generic_series(alpha: Fraction, big: int, order: int) -> list:
    """A / (1 - A) with A = u^(-alpha) (1+e)^N."""
    a = [LaurentFraction.u_power(-alpha) * c for c in _binomial_series(big, order)]
    one_minus = [LaurentFraction.const(1) - a[0]] + [-c for c in a[1:]]
    return _series_mul(a, _series_inverse(one_minus, order), order)


def beta_laurent_at(z: ZetaBetaFunction, s0: Fraction) -> dict[int, LaurentFraction]:
    """Principal part of Z_beta at T = u^(-s0): {k: coefficient of e^(-k)}, T = u^(-s0)(1+e)."""
    ratio = -Fraction(s0)
    depth = max((sum(1 for nu, big in f if Fraction(nu, big) == ratio) for _, f in z.terms), default=0)
    if depth == 0:
        return {}
    total = [LaurentFraction.const(0) for _ in range(depth)]  # index j -> e^(j - depth)
    cache: dict = {}
    for coeff, factors in z.terms:
        hits = [big for nu, big in factors if Fraction(nu, big) == ratio]
        if not hits:
            continue
        order = len(hits)
        series = [LaurentFraction.from_laurent(coeff)]
        for nu, big in factors:
            key = (nu, big, order)
            if key not in cache:
                if Fraction(nu, big) == ratio:
                    cache[key] = _matching_series(big, order)
                else:
                    cache[key] = _generic_series(nu - ratio * big, big, order)
            series = _series_mul(series, cache[key], order)
        # series times e^(-order); shift into the depth-long accumulator
        for j, c in enumerate(series):
            total[j + depth - order] = total[j + depth - order] + c
    return {depth - j: c for j, c in enumerate(total) if depth - j > 0 and c}


def poles_beta(z: ZetaBetaFunction, candidates: set[Fraction] | None = None, mode: str = "naive") -> list[PoleRecord]:
    """Poles u^(-s0) of Z_beta among the candidates (default: every ratio in a denominator)."""
    if candidates is None:
        candidates = {-Fraction(nu, big) for nu, big in z.denominator_factors}
    drop = 0 if mode == "naive" else 1
    out = []
    for s0 in sorted(candidates):
        principal = beta_laurent_at(z, s0)
        if not principal:
            continue
        k = max(principal)
        res = principal[k] * (-1) ** k * LaurentFraction.from_laurent(U_MINUS_ONE ** drop)
        res = res / LaurentFraction.from_laurent(U_MINUS_ONE ** k)
        out.append(PoleRecord(Fraction(s0), k, residue_beta=res))
    return out


def pole_set(records: list[PoleRecord]) -> set[Fraction]:
    return {p.location for p in records}


# ---------------------------------------------------------------------------
# per-component contributions


@dataclass
class Contribution:
    component: int
    s0: Fraction
    r_top: Fraction
    r_beta: LaurentFraction | None
    intersection_total: int | None = None


def contribution(datum: DLDatum, cid: int, mode: str = "naive", level: str = "both",
                 model: ResolutionModel | None = None) -> Contribution:
    """Share of component cid in the residue at its own candidate pole."""
    comps = datum.components()
    if cid not in comps:
        raise ZetaError(f"no component {cid}")
    nu_i, n_i = comps[cid]
    ratio = Fraction(nu_i, n_i)
    single = [s for s in datum.strata if s.components == (cid,)]
    pairs = [s for s in datum.strata if len(s.components) == 2 and cid in s.components]
    beta_mode = mode if mode in MODES_BETA else None
    mu_total = sum((s.mu(mode) for s in single), Fraction(0))
    beta_total = LaurentFraction.const(0)
    if beta_mode:
        for s in single:
            beta_total = beta_total + LaurentFraction.from_laurent(s.beta(beta_mode))
    for s in pairs:
        j = 1 - s.components.index(cid)
        nu_j, n_j = s.factors[j]
        alpha = nu_j - ratio * n_j
        mu = s.mu(mode)
        b = s.beta(beta_mode) if beta_mode else LaurentPoly()
        if alpha == 0:
            if mu or b:
                raise ZetaError("order-2 case")
            continue
        mu_total += mu / alpha
        if b:
            beta_total = beta_total + LaurentFraction.from_laurent(b) * ratio_factor(alpha)
    if any(len(s.components) > 2 and cid in s.components and s.mu(mode) for s in datum.strata):
        raise ZetaError("contributions are defined for curves only")
    r_top = mu_total / n_i
    r_beta = beta_total / n_i if beta_mode else None
    total = model.intersection_total(cid) if model is not None and model.components[cid].exceptional else None
    return Contribution(cid, -ratio, r_top, r_beta, total)


def contributions_at(datum: DLDatum, s0: Fraction, mode: str, model: ResolutionModel | None = None) -> list[Contribution]:
    out = []
    for cid, (nu, big) in sorted(datum.components().items()):
        if -Fraction(nu, big) == s0:
            out.append(contribution(datum, cid, mode, model=model))
    return out


# ---------------------------------------------------------------------------
# predictions from the geometry of the resolution


def is_single_blowup_shape(model: ResolutionModel) -> bool:
    exc = model.exceptional()
    if len(exc) != 1 or not exc[0].real:
        return False
    e = exc[0]
    return model.intersection_total(e.id) == 2 and model.real_crossing_count(e.id) == 0


def _qualifying(model: ResolutionModel) -> list[tuple[int, Fraction]]:
    """Components that force a naive pole, with the pole they force."""
    out = []
    for comp in model.components:
        if not comp.real:
            continue
        if comp.exceptional:
            if model.intersection_total(comp.id) >= 3:
                out.append((comp.id, -comp.ratio))
        else:
            out.append((comp.id, Fraction(-1, comp.N)))
    if is_single_blowup_shape(model):
        out.append((model.exceptional()[0].id, -model.exceptional()[0].ratio))
    return out


def predicted_poles(model: ResolutionModel, mode: str = "naive") -> dict[Fraction, str]:
    naive = {s0 for _, s0 in _qualifying(model)}
    if mode == "naive":
        return {s0: PREDICTED_EXACT for s0 in naive}
    if mode == "complexified":
        raise ZetaError("no prediction for the complexified function")
    members = cover_summary(model).jr(SIGN_OF_MODE[mode])
    allowed = {-model.components[c].ratio for c in members}
    out = {}
    for s0 in sorted(naive & allowed):
        hits = [cid for cid, t in _qualifying(model) if t == s0 and cid in members]
        out[s0] = PREDICTED_CERTAIN if len(set(hits)) == 1 else PREDICTED_UPPER
    return out


@dataclass
class ZetaBundle:
    """All zeta functions of one model, computed once."""

    datum: DLDatum
    top: dict[str, RationalFunctionS]
    beta: dict[str, ZetaBetaFunction]

    @classmethod
    def build(cls, datum: DLDatum) -> "ZetaBundle":
        return cls(
            datum,
            {m: z_top(datum, m) for m in MODES_TOP},
            {m: z_beta(datum, m) for m in MODES_BETA},
        )


def order_two_expected(model: ResolutionModel, mode: str = "naive") -> set[Fraction]:
    """Ratios shared by two components meeting at a real point with a live pair stratum."""
    datum = dl_datum(model)
    out = set()
    for s in datum.strata:
        if len(s.components) != 2 or not s.mu(mode):
            continue
        (a, b) = s.factors
        if Fraction(*a) == Fraction(*b):
            out.add(-Fraction(*a))
    return out


def ratio_multiset(datum: DLDatum) -> Counter:
    return Counter(Fraction(nu, big) for nu, big in datum.components().values())
