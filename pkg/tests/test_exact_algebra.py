import random
from fractions import Fraction

import pytest
import sympy
from sympy.polys.subresultants_qq_zz import sylvester

from realzeta.factor import factor_univariate, is_irreducible
from realzeta.polys import BiPoly, UniPoly, bi_gcd, poly_gcd, resultant, squarefree_parts

X = sympy.Symbol("X")


def to_sympy(p: UniPoly):
    return sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in map(Fraction, p.coeffs)])), X)


def from_sympy(poly) -> UniPoly:
    return UniPoly([Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())])


def random_product(rng: random.Random) -> UniPoly:
    out = UniPoly([rng.choice([1, -2, 3])])
    for _ in range(rng.randint(1, 4)):
        deg = rng.randint(1, 4)
        factor = UniPoly([rng.randint(-5, 5) for _ in range(deg)] + [rng.choice([1, 2, -1])])
        out = out * factor ** rng.randint(1, 2)
    return out


@pytest.mark.parametrize("seed", range(25))
def test_factorization_matches_sympy(seed):
    p = random_product(random.Random(seed))
    ours = sorted((f.coeffs, e) for f, e in factor_univariate(p))
    _, theirs = sympy.factor_list(to_sympy(p).as_expr(), X)
    expected = sorted((from_sympy(sympy.Poly(f, X)).monic().coeffs, e) for f, e in theirs if sympy.Poly(f, X).degree() > 0)
    assert ours == expected


def test_swinnerton_dyer_style_polynomial_is_irreducible():
    # x^4 - 10x^2 + 1 splits modulo every prime
    assert is_irreducible(UniPoly([1, 0, -10, 0, 1]))
    assert not is_irreducible(UniPoly([-1, 0, 0, 0, 1]))


def test_gcd_and_resultant_against_sympy():
    rng = random.Random(7)
    for _ in range(10):
        a, b, c = (random_product(rng) for _ in range(3))
        g = poly_gcd(a * c, b * c)
        assert to_sympy(g).monic() == sympy.gcd(to_sympy(a * c), to_sympy(b * c)).monic()
        # Sylvester determinant: sympy.resultant flips the sign for some negative leading coefficients
        expected = sylvester(to_sympy(a).as_expr(), to_sympy(b).as_expr(), X).det()
        assert resultant(a, b) == Fraction(str(expected))


def test_squarefree_parts_reassemble():
    p = UniPoly([1, 1]) ** 3 * UniPoly([-2, 0, 1]) ** 2 * UniPoly([5, 1])
    parts = squarefree_parts(p)
    rebuilt = UniPoly([1])
    for q, e in parts:
        rebuilt = rebuilt * q ** e
    assert rebuilt == p.monic()
    assert sorted(e for _, e in parts) == [1, 2, 3]


def test_bivariate_gcd():
    x, y = BiPoly.x(), BiPoly.y()
    common = x * x - y ** 3
    a = common * (x + y)
    b = common * (x - 2 * y) ** 2
    g = bi_gcd(a, b)
    assert bi_gcd(g, common) == g and g.total_degree() == 3
