from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import cyclotomic_exponent_polynomial
from realzeta.monodromy import CycloProduct
from realzeta.parser import parse_polynomial
from realzeta.polys import BiPoly

coefficients = st.fractions(min_value=-20, max_value=20, max_denominator=6).filter(bool)
monomials = st.tuples(st.integers(0, 5), st.integers(0, 5))


@settings(max_examples=60, deadline=None)
@given(st.dictionaries(monomials, coefficients, max_size=6))
def test_printed_polynomials_parse_back(terms):
    p = BiPoly({m: Fraction(c) for m, c in terms.items()})
    assert parse_polynomial(p.to_str()) == p


@settings(max_examples=60, deadline=None)
@given(st.dictionaries(st.integers(1, 12), st.integers(0, 2), max_size=4))
def test_cyclotomic_products_expand_exactly(positive):
    # dividing by a factor that is already present keeps a polynomial
    exps = dict(positive)
    for m, e in positive.items():
        if e and m % 2 == 0:
            exps[m // 2] = exps.get(m // 2, 0) - 1
            break
    product = CycloProduct(exps)
    if product.is_polynomial():
        assert list(product.expand().coeffs) == cyclotomic_exponent_polynomial(product.exps)
        assert product.expand().degree() == product.degree()
