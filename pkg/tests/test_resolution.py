from fractions import Fraction

import pytest

from realzeta.parser import parse_factored, parse_polynomial
from realzeta.resolution import ResolutionError, count_good_real_points, resolve


def data(model, kind=None):
    return sorted((c.nu, c.N) for c in model.components if kind is None or c.kind == kind)


def test_cusp_numerical_data():
    m = resolve(parse_polynomial("y^2 - x^3"))
    assert data(m, "exceptional") == [(2, 2), (3, 3), (5, 6)]
    assert data(m, "strict") == [(1, 1)]
    assert len(m.blowups) == 3


def test_conjugate_lines_are_one_complex_record():
    m = resolve(parse_polynomial("x^2 + y^2"))
    assert data(m, "exceptional") == [(2, 2)]
    strict = m.strict()
    assert [c.real for c in strict] == [False] and strict[0].copies == 2
    assert not any(x.real for x in m.crossings)


def test_already_normal_crossing():
    m = resolve(parse_polynomial("x^3*y^4"))
    assert m.identity and not m.blowups
    assert data(m) == [(1, 3), (1, 4)]


def test_smooth_germ():
    m = resolve(parse_polynomial("x + y^2"))
    assert m.identity and data(m) == [(1, 1)]


def test_factored_input_matches_expanded():
    factored = resolve(parse_factored("x^2+y^6:2; x^2-y^3:3"))
    expanded = resolve(parse_polynomial("(x^2+y^6)^2*(x^2-y^3)^3"))
    assert data(factored) == data(expanded)
    assert sorted(c.ratio for c in factored.exceptional()) == sorted(c.ratio for c in expanded.exceptional())


@pytest.mark.parametrize("p,q", [(2, 3), (2, 5), (3, 4), (3, 5), (2, 6), (4, 6), (3, 3), (5, 7)])
def test_minimal_ratio_is_the_log_canonical_threshold(p, q):
    m = resolve(parse_polynomial(f"x^{p} + y^{q}"))
    assert min(c.ratio for c in m.components) == min(Fraction(1), Fraction(1, p) + Fraction(1, q))


def test_strict_transforms_meet_the_last_divisor_transversally():
    m = resolve(parse_polynomial("x*y*(x-y)*(x-2*y)^5"))
    (e,) = m.exceptional()
    assert (e.nu, e.N) == (2, 8)
    assert m.intersection_total(e.id) == 4


@pytest.mark.parametrize("text,message", [
    ("x^2 + y^2 + 1", "not a germ"),
    ("0", "zero input"),
    ("3", "constant input|zero input|not a germ"),
])
def test_input_errors(text, message):
    with pytest.raises(ResolutionError, match=message):
        resolve(parse_polynomial(text))


def test_extra_blowup_data():
    source = parse_polynomial("y^2 - x^3")
    base = resolve(source)
    total = count_good_real_points(base)
    assert total > 0
    for index in (0, total - 1):
        forced = resolve(source, force_index=index)
        assert forced.forced_extra
        assert len(forced.components) == len(base.components) + 1
