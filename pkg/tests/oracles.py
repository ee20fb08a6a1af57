"""Independent reference computations used by the tests.

Nothing here touches the resolution engine.
"""

from __future__ import annotations

from fractions import Fraction

from realzeta.ratfunc import LaurentPoly

U = LaurentPoly.u_power(1)
ONE = LaurentPoly.const(1)


def _up(k: int) -> LaurentPoly:
    return LaurentPoly.u_power(k)


def even_sum_arc_series(p: int, q: int, n_max: int, signed: bool = False) -> list[LaurentPoly]:
    """Coefficients of Z_beta for x^(2p) + y^(2q) by counting truncated arcs.

    An arc through the origin is (x(t), y(t)) truncated after t^n; with
    a = ord x and b = ord y the order of f is min(2pa, 2qb) because a sum of
    even powers cannot cancel.  ``signed`` asks for leading coefficient +1.
    """
    out = [LaurentPoly() for _ in range(n_max + 1)]
    for n in range(1, n_max + 1):
        total = LaurentPoly()
        # exactly one coordinate reaches order n first
        for (deg_x, deg_y) in ((2 * p, 2 * q), (2 * q, 2 * p)):
            if n % deg_x:
                continue
            a = n // deg_x
            first_b = n // deg_y + 1  # other coordinate has order >= first_b
            lead = LaurentPoly.const(2) if signed else U - ONE
            total = total + lead * _up(n - a) * _up(n - first_b + 1)
        if n % (2 * p) == 0 and n % (2 * q) == 0:
            a, b = n // (2 * p), n // (2 * q)
            # both leading coefficients nonzero; signed: the oval X^2p + Y^2q = 1 minus 4 points
            lead = (U - LaurentPoly.const(3)) if signed else (U - ONE) * (U - ONE)
            total = total + lead * _up(2 * n - a - b)
        out[n] = total * _up(-2 * n)
    return out


def cyclotomic_exponent_polynomial(exps: dict[int, int]) -> list[Fraction]:
    """Expand prod (t^m - 1)^e_m as a dense polynomial; raises when not polynomial."""
    num = [Fraction(1)]
    den = [Fraction(1)]

    def mul(a, b):
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    for m, e in exps.items():
        factor = [Fraction(-1)] + [Fraction(0)] * (m - 1) + [Fraction(1)]
        for _ in range(abs(e)):
            if e > 0:
                num = mul(num, factor)
            else:
                den = mul(den, factor)
    # long division num / den
    num = list(num)
    q = [Fraction(0)] * max(1, len(num) - len(den) + 1)
    while len(num) >= len(den) and any(num):
        k = len(num) - len(den)
        c = num[-1] / den[-1]
        q[k] = c
        for i, d in enumerate(den):
            num[i + k] -= c * d
        num.pop()
    if any(num):
        raise ValueError("not a polynomial")
    while len(q) > 1 and q[-1] == 0:
        q.pop()
    return q
