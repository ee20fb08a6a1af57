import pytest

from realzeta.covering import CoverError, cover_summary, glue_sheets
from realzeta.parser import parse_polynomial
from realzeta.ratfunc import LaurentPoly
from realzeta.resolution import resolve

U = LaurentPoly.u_power(1)
ONE = LaurentPoly.const(1)


@pytest.mark.parametrize("m", range(1, 5))
@pytest.mark.parametrize("p", range(1, 5))
def test_two_even_points_give_two_sheets(m, p):
    count = glue_sheets([1, 1], [2 * m, 2 * m], 2 * p, 1, infinity_last=False)
    assert count == 2
    assert LaurentPoly.const(count) * (U + ONE) - LaurentPoly.const(4) == LaurentPoly.const(2) * (U - ONE)


def test_hyperelliptic_model_has_three_components():
    assert glue_sheets([1, -1, 1, -1, 1, -1, 1], [1] * 6 + [0], 8, 1) == 3


def test_odd_multiplicity_is_rejected():
    with pytest.raises(CoverError, match="odd-case"):
        glue_sheets([1, -1], [1, 1], 3, 1)


def test_empty_side_has_no_sheets():
    assert glue_sheets([1, 1], [2, 2], 2, -1, infinity_last=False) == 0


def test_circle_without_points():
    m = resolve(parse_polynomial("x^2 + y^2"))
    s = cover_summary(m)
    (e,) = m.exceptional()
    assert s.beta_tilde[(e.id, 1)] == U + ONE
    assert s.components_count[(e.id, 1)] == 1
    assert s.beta_tilde[(e.id, -1)] == LaurentPoly()
    assert s.jr(-1) == set()


def test_cusp_sheet_data():
    m = resolve(parse_polynomial("y^2 - x^3"))
    s = cover_summary(m)
    by_data = {(c.nu, c.N): c.id for c in m.exceptional()}
    assert s.beta_tilde[(by_data[(2, 2)], 1)] == LaurentPoly.const(2) * U
    assert s.beta_tilde[(by_data[(2, 2)], -1)] == LaurentPoly()
    assert s.beta_tilde[(by_data[(3, 3)], 1)] == U
    assert s.beta_tilde[(by_data[(5, 6)], 1)] == U - LaurentPoly.const(3)
    assert s.beta_tilde[(by_data[(5, 6)], -1)] == U - ONE


def test_sum_of_signed_covers_at_minus_one():
    # compactly supported Euler characteristics of the two covers add to twice the base
    for text in ("y^2 - x^3", "x^2 - y^4", "x^4 - y^6", "x*y*(x-y)*(x-2*y)^5", "x^2*y^2 + x^5 + y^5"):
        m = resolve(parse_polynomial(text))
        s = cover_summary(m)
        for c in m.exceptional():
            if not c.real:
                continue
            total = s.beta_tilde[(c.id, 1)].at_minus_one() + s.beta_tilde[(c.id, -1)].at_minus_one()
            # a real projective line has Euler characteristic 0
            base = -len([x for x in m.crossings_of(c.id) if x.real])
            assert total == 2 * base, text
