from fractions import Fraction

import pytest

from oracles import cyclotomic_exponent_polynomial
from realzeta.monodromy import CycloProduct, MonodromyError, acampo_zeta_origin, char_polys_at, eigenvalue_witness
from realzeta.parser import parse_polynomial
from realzeta.polys import UniPoly
from realzeta.resolution import resolve
from realzeta.zeta import ZetaError, dl_datum, pole_set, poles_top, z_top


def model_of(text):
    return resolve(parse_polynomial(text))


@pytest.mark.parametrize("text,milnor", [
    ("y^2 - x^3", 2),
    ("x^3 + y^4", 6),
    ("x^2 + y^6", 5),
    ("x^5 + y^7", 24),
    ("x*y*(x-y)*(x-2*y)", 9),
    ("x^2 + y^2", 1),
    ("x + y^3", 0),
])
def test_milnor_number_from_acampo(text, milnor):
    # Euler characteristic of the Milnor fibre is minus the degree of the zeta function
    assert 1 + acampo_zeta_origin(model_of(text)).degree() == milnor


def test_cusp_origin_polynomials():
    zeta = acampo_zeta_origin(model_of("y^2 - x^3"))
    assert zeta == CycloProduct({2: -1, 3: -1, 6: 1})
    p0, p1 = char_polys_at(model_of("y^2 - x^3"), "origin")
    assert p0.expand() == UniPoly([-1, 1])
    assert p1.expand() == UniPoly([1, -1, 1])


def test_normal_crossing_monomial():
    m = model_of("x^3*y^4")
    p0, p1 = char_polys_at(m, "origin")
    assert p0.expand() == p1.expand() == UniPoly([-1, 1])
    assert sorted(char_polys_at(m, b)[0].degree() for b in m.branches) == [3, 4]


def test_smooth_germ_has_trivial_first_cohomology():
    _, p1 = char_polys_at(model_of("x"), "origin")
    assert p1.expand() == UniPoly([1])


@pytest.mark.parametrize("exps", [{1: 1}, {2: -1, 3: -1, 6: 1, 1: 1}, {4: 2, 2: -1}, {12: 1, 6: -1, 4: -1, 2: 1}])
def test_expansion_matches_dense_oracle(exps):
    assert list(CycloProduct(exps).expand().coeffs) == cyclotomic_exponent_polynomial(exps)


def test_root_multiplicities():
    cusp_p1 = CycloProduct({2: -1, 3: -1, 6: 1, 1: 1})
    assert cusp_p1.root_multiplicity(6) == 1
    assert cusp_p1.root_multiplicity(1) == 0 and cusp_p1.root_multiplicity(2) == 0


def test_negative_exponent_is_not_a_polynomial():
    with pytest.raises(MonodromyError):
        CycloProduct({2: -1}).expand()


def test_witness_kinds():
    m = model_of("y^2 - x^3")
    w = eigenvalue_witness(m, Fraction(-5, 6))
    assert w.kind == "OriginH1" and w.q == 6
    assert eigenvalue_witness(m, Fraction(-1)).kind == "OriginH0"
    with pytest.raises(ZetaError, match="not a pole"):
        eigenvalue_witness(m, Fraction(-1, 2))


def test_branch_witness_on_normal_crossing():
    m = model_of("x^3*y^4")
    w = eigenvalue_witness(m, Fraction(-1, 4))
    assert w.kind == "BranchPoint" and m.components[w.branch].N == 4


def test_every_signed_pole_has_a_witness():
    for text in ("x^2 + y^6", "x^2 - y^4", "x*y*(x-y)*(x-2*y)^5"):
        m = model_of(text)
        d = dl_datum(m)
        for mode, region in (("plus", "PlusClosure"), ("minus", "MinusClosure")):
            poles = pole_set(poles_top(z_top(d, mode)))
            for s0 in poles:
                w = eigenvalue_witness(m, s0, mode, d, poles)
                assert w is not None and w.region == region
