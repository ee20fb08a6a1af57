import random
from fractions import Fraction

import pytest
import sympy

from realzeta.algebraic import (
    NumberField,
    extend_field,
    factor_over_field,
    isolate_roots,
    sign_of,
)
from realzeta.polys import UniPoly

X = sympy.Symbol("X")


def sqrt2_field() -> NumberField:
    return NumberField(UniPoly([-2, 0, 1]), (Fraction(1), Fraction(2)), "r2")


@pytest.mark.parametrize("seed", range(15))
def test_real_root_count_matches_sympy(seed):
    rng = random.Random(seed)
    coeffs = [rng.randint(-6, 6) for _ in range(rng.randint(2, 7))] + [1]
    p = UniPoly(coeffs)
    inv = isolate_roots(p)
    expr = sum(c * X ** i for i, c in enumerate(coeffs))
    real = sympy.real_roots(sympy.Poly(expr, X))
    assert len(inv.real_roots) == len(set(real))
    assert sum(m for _, m in inv.real_roots) + inv.complex_root_count == p.degree()
    for root, _ in inv.real_roots:
        assert any(root.lo <= r <= root.hi for r in real)


def test_signs_in_a_real_quadratic_field():
    K = sqrt2_field()
    r = K.gen()
    assert sign_of(r) == 1
    assert sign_of(r * r - 2) == 0
    assert sign_of(r - Fraction(141421, 100000)) == 1
    assert sign_of(r - Fraction(141422, 100000)) == -1
    assert sign_of(3 - 2 * r) == 1  # 3 - 2.828...


def test_abstract_field_has_no_sign():
    K = NumberField(UniPoly([1, 0, 1]), None, "i")
    with pytest.raises(ValueError, match="sign undefined"):
        sign_of(K.gen())


def test_trager_splits_over_extension():
    K = sqrt2_field()
    p = UniPoly([K.convert(-2), K.zero, K.zero, K.zero, K.one], K)  # X^4 - 2
    factors = factor_over_field(p)
    assert sorted(f.degree() for f, _ in factors) == [2, 2]
    constants = sorted(sign_of(f.coeff(0)) for f, _ in factors)
    assert constants == [-1, 1]
    product = UniPoly([K.one], K)
    for f, e in factors:
        product = product * f ** e
    assert product == p


def test_extend_field_embeds_the_chosen_root():
    p = UniPoly([-3, 0, 1])
    roots = isolate_roots(p).real_roots
    negative = min((r for r, _ in roots), key=lambda r: r.lo)
    ext = extend_field(p, negative)
    assert sign_of(ext.root) == -1
    assert sign_of(ext.root * ext.root - 3) == 0
