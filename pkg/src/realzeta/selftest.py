"""Built-in verification suite over the worked examples and randomized inputs."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .checks import Analysis, run_all
from .covering import cover_summary, glue_sheets
from .monodromy import CycloProduct, char_polys_at, eigenvalue_witness
from .parser import parse_factored, parse_polynomial
from .polys import BiPoly, UniPoly
from .ratfunc import LaurentPoly, RationalFunctionS, ZetaBetaFunction
from .resolution import resolve
from .zeta import (
    MODES_TOP,
    ZetaBundle,
    contribution,
    dl_datum,
    pole_set,
    poles_beta,
    poles_top,
    predicted_poles,
    z_beta,
    z_top,
)

F = Fraction
CUSP = "y^2 - x^3"
LITERAL_COMPLEX_CHECK = "naive poles are complexified poles on real candidates"


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0


def rf(num: list, den: list[tuple[int, int]]) -> RationalFunctionS:
    """num coefficients in s over prod (nu + N s)."""
    d = UniPoly([1])
    for nu, big in den:
        d = d * UniPoly([nu, big])
    return RationalFunctionS(UniPoly(num), d)


def model_of(text: str):
    if ";" in text or ":" in text:
        return resolve(parse_factored(text))
    return resolve(parse_polynomial(text))


def source_of(text: str):
    if ";" in text or ":" in text:
        return parse_factored(text)
    return parse_polynomial(text)


def _fs(values) -> str:
    return "{" + ", ".join(str(v) for v in sorted(values)) + "}"


class _Collector:
    def __init__(self):
        self.failures: list[str] = []

    def expect(self, ok: bool, what: str) -> None:
        if not ok:
            self.failures.append(what)

    def detail(self) -> str:
        return "; ".join(self.failures)


def criterion_cusp() -> str:
    c = _Collector()
    datum = dl_datum(model_of(CUSP))
    den = [(1, 1), (5, 6)]
    expected = {"naive": rf([5, 4], den), "plus": rf([7, 6], den), "minus": rf([3, 2], den)}
    for mode, want in expected.items():
        got = z_top(datum, mode)
        c.expect(got == want, f"{mode}: got {got.display()}")
        poles = pole_set(poles_top(got))
        c.expect(poles == {F(-1), F(-5, 6)}, f"{mode} poles {_fs(poles)}")
    return c.detail()


def criterion_two_term_beta() -> str:
    c = _Collector()
    datum = dl_datum(model_of("x^3 + y^3"))
    u = LaurentPoly.u_power
    want = ZetaBetaFunction([
        (u(2) - u(1), [(2, 3)]),
        (u(2) - u(1, 2) + LaurentPoly.const(1), [(2, 3), (1, 1)]),
    ])
    got = z_beta(datum, "naive")
    c.expect(got == want, f"got {got.numerator_str()} / {got.denominator_str()}")
    poles = pole_set(poles_beta(got))
    c.expect(poles == {F(-1), F(-2, 3)}, f"beta poles {_fs(poles)}")
    return c.detail()


def criterion_even_powers() -> str:
    c = _Collector()
    for k in (1, 2, 3):
        datum = dl_datum(model_of(f"x^{2 * k} + y^{2 * k}"))
        naive = z_top(datum, "naive")
        want = rf([1], [(1, 1)]) if k == 1 else rf([2], [(2, 2 * k)])
        c.expect(naive == want, f"k={k} naive {naive.display()}")
        cx = z_top(datum, "complexified")
        want_cx = rf([2, 2 - 2 * k], [(1, 1), (2, 2 * k)])
        c.expect(cx == want_cx, f"k={k} complexified {cx.display()}")
        if k == 1:
            c.expect(cx == rf([1], [(1, 1), (1, 1)]), "k=1 complexified is not 1/(1+s)^2")
        else:
            poles = pole_set(poles_top(cx))
            c.expect(poles == {F(-1), F(-1, k)}, f"k={k} complexified poles {_fs(poles)}")
    return c.detail()


def criterion_composite() -> str:
    c = _Collector()
    model = model_of("x^2+y^6:2; x^2-y^3:3")
    datum = dl_datum(model)
    z = z_top(datum, "naive")
    c.expect(z == rf([20, 141, 216], [(5, 30), (4, 21), (1, 3)]), f"got {z.display()}")
    records = sorted(poles_top(z), key=lambda p: -p.location)
    locations = [p.location for p in records]
    c.expect(locations == [F(-1, 6), F(-4, 21), F(-1, 3)], f"poles {locations}")
    signs = ["+" if p.residue_top > 0 else "-" for p in records]
    c.expect(signs == ["+", "-", "-"], f"residue signs {signs}")
    pred = set(predicted_poles(model, "naive"))
    c.expect(pred == set(locations), f"predicted {_fs(pred)}")
    cx = pole_set(poles_top(z_top(datum, "complexified")))
    c.expect(cx == set(locations) | {F(-1, 2)}, f"complexified poles {_fs(cx)}")
    return c.detail()


def criterion_signed_square_plus_sixth() -> str:
    c = _Collector()
    datum = dl_datum(model_of("x^2 + y^6"))
    for mode, want in (("naive", rf([3], [(3, 4)])), ("plus", rf([4], [(3, 4)])), ("minus", rf([0], []))):
        got = z_top(datum, mode)
        c.expect(got == want, f"{mode} got {got.display()} expected {want.display()}")
    return c.detail()


def _first_exceptional(model):
    return min(model.exceptional(), key=lambda comp: comp.step).id


def criterion_sign_cancellation() -> str:
    c = _Collector()
    for text, sign in (("x*y*(x-y)^3*(x-2*y)^7", -1), ("x*y*(x-y)^3*(x-2*y)^9", 1), ("x*y*(x-y)*(x-2*y)^5", 0)):
        model = model_of(text)
        datum = dl_datum(model)
        con = contribution(datum, _first_exceptional(model), "plus", model=model)
        got = (con.r_top > 0) - (con.r_top < 0)
        c.expect(got == sign, f"{text}: R+_top = {con.r_top}")
        if sign == 0:
            c.expect(not con.r_beta.is_zero(), f"{text}: R+_beta vanishes")
    model = model_of("x*y*(x-y)*(x-2*y)^5")
    bundle = ZetaBundle.build(dl_datum(model))
    plus = pole_set(poles_top(bundle.top["plus"]))
    naive = pole_set(poles_top(bundle.top["naive"]))
    beta_plus = pole_set(poles_beta(bundle.beta["plus"], mode="plus"))
    c.expect(plus == {F(-1), F(-1, 5)}, f"plus poles {_fs(plus)}")
    c.expect(naive == {F(-1), F(-1, 4), F(-1, 5)}, f"naive poles {_fs(naive)}")
    c.expect(F(-1, 4) in beta_plus, f"beta plus poles {_fs(beta_plus)}")
    return c.detail()


def criterion_series() -> str:
    datum = dl_datum(model_of("x^2 + y^2"))
    coeffs = z_beta(datum, "naive").series_coefficients(2)
    want = LaurentPoly.u_power(0) - LaurentPoly.u_power(-2)
    return "" if coeffs[2] == want else f"T^2 coefficient {coeffs[2].to_str()}"


def criterion_covering() -> str:
    c = _Collector()
    model = model_of("x^2 + y^2")
    summary = cover_summary(model)
    e1 = _first_exceptional(model)
    got = summary.beta_tilde[(e1, 1)]
    c.expect(got == LaurentPoly.u_power(1) + LaurentPoly.const(1), f"beta(E+) = {got.to_str()}")
    c.expect(summary.components_count[(e1, 1)] == 1, f"c = {summary.components_count[(e1, 1)]}")
    for m in range(1, 5):
        for p in range(1, 5):
            count = glue_sheets([1, 1], [2 * m, 2 * m], 2 * p, 1, infinity_last=False)
            beta = LaurentPoly.const(count) * (LaurentPoly.u_power(1) + LaurentPoly.const(1)) - LaurentPoly.const(4)
            want = LaurentPoly.const(2) * (LaurentPoly.u_power(1) - LaurentPoly.const(1))
            c.expect(beta == want, f"m={m} p={p}: c={count}")
    count = glue_sheets([1, -1, 1, -1, 1, -1, 1], [1] * 6 + [0], 8, 1)
    c.expect(count == 3, f"hyperelliptic c = {count}")
    return c.detail()


def criterion_monodromy() -> str:
    c = _Collector()
    t1 = CycloProduct({1: 1})
    model = model_of("x^3*y^4")
    p0, p1 = char_polys_at(model, "origin")
    c.expect(p0 == t1 and p1 == t1, f"x^3y^4 origin P0={p0.to_str()} P1={p1.to_str()}")
    branch_p0 = sorted(char_polys_at(model, b)[0].to_str() for b in model.branches)
    c.expect(branch_p0 == ["(t^3-1)", "(t^4-1)"], f"branch P0 {branch_p0}")
    _, p1 = char_polys_at(model_of(CUSP), "origin")
    want = UniPoly([1, -1, 1])
    c.expect(p1.expand() == want, f"cusp P1 = {p1.expand().to_str('t')}")
    for text in SUITE_INPUTS:
        model = model_of(text)
        datum = dl_datum(model)
        for mode in MODES_TOP:
            poles = pole_set(poles_top(z_top(datum, mode)))
            for s0 in poles:
                if eigenvalue_witness(model, s0, mode, datum, poles) is None:
                    c.expect(False, f"{text} {mode} {s0} has no witness")
    return c.detail()


def random_polynomials(count: int = 20, seed: int = 20240) -> list[BiPoly]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        terms = {}
        for _ in range(rng.randint(2, 4)):
            d = rng.randint(1, 6)
            i = rng.randint(0, d)
            terms[(i, d - i)] = rng.choice([-3, -2, -1, 1, 2, 3])
        f = BiPoly(terms)
        if not f.is_zero():
            out.append(f)
    return out


def property_failures(source) -> list[str]:
    model = resolve(source)
    return [r.name for r in run_all(Analysis.of(model), source) if not r.passed]


def criterion_properties() -> str:
    c = _Collector()
    sources = [(text, source_of(text)) for text in SUITE_INPUTS]
    sources += [(f.to_str(), f) for f in random_polynomials()]
    for label, source in sources:
        for name in property_failures(source):
            c.expect(False, f"{label}: {name}")
    return c.detail()


SUITE_INPUTS = [
    CUSP,
    "x^3 + y^3",
    "x^2 + y^2",
    "x^4 + y^4",
    "x^6 + y^6",
    "x^2+y^6:2; x^2-y^3:3",
    "x^2 + y^6",
    "x*y*(x-y)^3*(x-2*y)^7",
    "x*y*(x-y)^3*(x-2*y)^9",
    "x*y*(x-y)*(x-2*y)^5",
    "x^3 + y^4",
    "x^3 - y^4",
    "x^3*y^4",
]

CRITERIA = [
    (1, "cusp top zeta functions and poles", criterion_cusp),
    (2, "x^3+y^3 beta-level presentation and poles", criterion_two_term_beta),
    (3, "x^2k+y^2k naive and complexified", criterion_even_powers),
    (4, "(x^2+y^6)^2(x^2-y^3)^3 zeta function, residues, predictions", criterion_composite),
    (5, "x^2+y^6 signed zeta functions", criterion_signed_square_plus_sixth),
    (6, "signed cancellation family", criterion_sign_cancellation),
    (7, "x^2+y^2 series coefficient", criterion_series),
    (8, "sign covering component counts", criterion_covering),
    (9, "monodromy polynomials and eigenvalue witnesses", criterion_monodromy),
    (10, "property suites on examples and random inputs", criterion_properties),
]


def run_criterion(number: int) -> CriterionResult:
    for n, title, fn in CRITERIA:
        if n == number:
            start = time.perf_counter()
            try:
                detail = fn()
            except Exception as exc:  # reported as a failure, never swallowed silently
                detail = f"raised {type(exc).__name__}: {exc}"
            return CriterionResult(n, title, not detail, detail, time.perf_counter() - start)
    raise KeyError(number)


def self_test() -> list[CriterionResult]:
    return [run_criterion(n) for n, _, _ in CRITERIA]


def format_table(results: list[CriterionResult]) -> str:
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{status}  [{r.number:>2}] {r.title} ({r.seconds:.2f}s)"
        if r.detail:
            line += f"\n        {r.detail}"
        lines.append(line)
    return "\n".join(lines) + "\n"
