from fractions import Fraction

import pytest

from oracles import even_sum_arc_series
from realzeta.parser import parse_polynomial
from realzeta.ratfunc import LaurentPoly, limit_u_to_1
from realzeta.resolution import resolve
from realzeta.selftest import rf
from realzeta.zeta import (
    DLDatum,
    ZetaError,
    candidate_poles,
    contribution,
    contributions_at,
    dl_datum,
    pole_set,
    poles_beta,
    poles_top,
    predicted_poles,
    z_beta,
    z_top,
)

F = Fraction


def datum_of(text):
    return dl_datum(resolve(parse_polynomial(text)))


@pytest.mark.parametrize("p,q", [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3), (1, 4)])
@pytest.mark.parametrize("mode", ["naive", "plus"])
def test_series_matches_arc_count(p, q, mode):
    n_max = 16
    z = z_beta(datum_of(f"x^{2 * p} + y^{2 * q}"), mode)
    assert z.series_coefficients(n_max) == even_sum_arc_series(p, q, n_max, signed=mode == "plus")


def test_sum_of_squares_is_never_negative():
    for text in ("x^2 + y^2", "x^2 + y^6", "x^4 + y^6"):
        assert z_top(datum_of(text), "minus").is_zero()
        assert z_beta(datum_of(text), "minus").is_zero()


def test_square_plus_sixth_power_values():
    # confirmed independently by the arc count above
    d = datum_of("x^2 + y^6")
    assert z_top(d, "naive") == rf([2], [(2, 3)])
    assert z_top(d, "plus") == rf([3], [(2, 3)])


def test_square_plus_fourth_power_values():
    d = datum_of("x^2 + y^4")
    assert z_top(d, "naive") == rf([3], [(3, 4)])
    assert z_top(d, "plus") == rf([4], [(3, 4)])


def test_single_stratum_datum():
    datum = DLDatum.from_json({"dimension": 3, "strata": [{"components": [1], "factors": [[1, 2]], "betaReal": [1]}]})
    assert z_top(datum, "naive") == rf([1], [(1, 2)])


def test_datum_json_round_trip():
    d = datum_of("y^2 - x^3")
    again = DLDatum.from_json(d.to_json())
    for mode in ("naive", "plus", "minus", "complexified"):
        assert z_top(again, mode) == z_top(d, mode)
    assert z_beta(again, "plus") == z_beta(d, "plus")


@pytest.mark.parametrize("bad", [[0, 2], [1, 0], [-1, 2]])
def test_datum_rejects_nonpositive_data(bad):
    with pytest.raises(ZetaError):
        DLDatum.from_json({"dimension": 2, "strata": [{"components": [1], "factors": [bad], "betaReal": [1]}]})


def test_candidates_and_poles_of_the_cusp():
    model = resolve(parse_polynomial("y^2 - x^3"))
    d = dl_datum(model)
    assert candidate_poles(d, model, "naive") == {F(-1), F(-5, 6)}
    for mode in ("naive", "plus", "minus"):
        assert pole_set(poles_beta(z_beta(d, mode), mode=mode)) == {F(-1), F(-5, 6)}


def test_order_two_pole_at_equal_ratio_crossing():
    d = datum_of("x^2*y^2")
    (record,) = poles_top(z_top(d, "naive"))
    assert record.location == F(-1, 2) and record.order == 2
    (brecord,) = poles_beta(z_beta(d, "naive"))
    assert brecord.order == 2


def test_order_two_contribution_is_refused():
    model = resolve(parse_polynomial("x^2*y^2"))
    with pytest.raises(ZetaError, match="order-2"):
        contribution(dl_datum(model), model.strict()[0].id, "naive", model=model)


def test_contributions_sum_to_residues():
    for text in ("x*y*(x-y)^3*(x-2*y)^7", "y^2 - x^3", "x^2 - y^4"):
        model = resolve(parse_polynomial(text))
        d = dl_datum(model)
        for mode in ("naive", "plus", "minus"):
            for record in poles_top(z_top(d, mode)):
                assert record.order == 1
                parts = contributions_at(d, record.location, mode, model)
                assert sum(c.r_top for c in parts) == record.residue_top, (text, mode)
            for record in poles_beta(z_beta(d, mode), mode=mode):
                parts = contributions_at(d, record.location, mode, model)
                total = parts[0].r_beta
                for c in parts[1:]:
                    total = total + c.r_beta
                assert total == record.residue_beta, (text, mode)


def test_beta_contribution_specializes():
    model = resolve(parse_polynomial("y^2 - x^3"))
    d = dl_datum(model)
    for c in model.components:
        con = contribution(d, c.id, "naive", model=model)
        assert limit_u_to_1(con.r_beta) == con.r_top


def test_series_coefficient_of_two_squares():
    coeffs = z_beta(datum_of("x^2 + y^2"), "naive").series_coefficients(3)
    assert coeffs[0] == LaurentPoly()
    assert coeffs[2] == LaurentPoly.u_power(-4) * LaurentPoly.u_power(2) * (LaurentPoly.u_power(2) - LaurentPoly.const(1))


def test_predicted_tags():
    model = resolve(parse_polynomial("x*y*(x-y)*(x-2*y)^5"))
    naive = predicted_poles(model, "naive")
    assert set(naive) == {F(-1), F(-1, 4), F(-1, 5)}
    plus = predicted_poles(model, "plus")
    assert F(-1, 4) in plus


@pytest.mark.parametrize("stratum", [
    {"factors": [[1, 2]], "betaReal": "12"},
    {"factors": [[1, 2]], "betaReal": ["abc"]},
    {"components": [1]},
])
def test_datum_rejects_malformed_strata(stratum):
    with pytest.raises(ZetaError):
        DLDatum.from_json({"dimension": 2, "strata": [stratum]})
