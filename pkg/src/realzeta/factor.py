"""Factorization of univariate rational polynomials (Zassenhaus).

Squarefree split, factorization modulo a good prime (distinct-degree plus
Cantor-Zassenhaus), multifactor Hensel lifting and subset recombination.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from math import isqrt

from .polys import QQ, UniPoly, rational_content, squarefree_parts

# Integer polynomials are lists of ints, lowest degree first.
IntPoly = list[int]

_PRIMES = [p for p in range(3, 2000) if all(p % d for d in range(2, isqrt(p) + 1))]


def _trim(a: IntPoly) -> IntPoly:
    while a and a[-1] == 0:
        a.pop()
    return a


def _mod(a: IntPoly, m: int) -> IntPoly:
    return _trim([c % m for c in a])


def _sym(a: IntPoly, m: int) -> IntPoly:
    half = m // 2
    return _trim([(c % m) - m if (c % m) > half else c % m for c in a])


def _add(a: IntPoly, b: IntPoly, m: int) -> IntPoly:
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % m for i in range(n)])


def _sub(a: IntPoly, b: IntPoly, m: int) -> IntPoly:
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % m for i in range(n)])


def _mul(a: IntPoly, b: IntPoly, m: int) -> IntPoly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _mod(out, m)


def _divmod(a: IntPoly, b: IntPoly, m: int) -> tuple[IntPoly, IntPoly]:
    """Division modulo m; the leading coefficient of b must be a unit."""
    a = _mod(list(a), m)
    b = _mod(list(b), m)
    if not b:
        raise ZeroDivisionError
    inv = pow(b[-1], -1, m)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], a
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] % m
        if c:
            t = c * inv % m
            q[k - db] = t
            for j in range(db + 1):
                a[k - db + j] = (a[k - db + j] - t * b[j]) % m
    return _trim(q), _trim(a[:db])


def _monic(a: IntPoly, p: int) -> IntPoly:
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _gcd(a: IntPoly, b: IntPoly, p: int) -> IntPoly:
    a, b = _mod(list(a), p), _mod(list(b), p)
    while b:
        a, b = b, _divmod(a, b, p)[1]
    return _monic(a, p) if a else a


def _ext_gcd(a: IntPoly, b: IntPoly, p: int) -> tuple[IntPoly, IntPoly, IntPoly]:
    r0, r1 = _mod(list(a), p), _mod(list(b), p)
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        q, r = _divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _sub(s0, _mul(q, s1, p), p)
        t0, t1 = t1, _sub(t0, _mul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    return [c * inv % p for c in r0], [c * inv % p for c in s0], [c * inv % p for c in t0]


def _powmod(base: IntPoly, e: int, f: IntPoly, p: int) -> IntPoly:
    result = [1]
    base = _divmod(base, f, p)[1]
    while e:
        if e & 1:
            result = _divmod(_mul(result, base, p), f, p)[1]
        e >>= 1
        if e:
            base = _divmod(_mul(base, base, p), f, p)[1]
    return result


def _deriv(a: IntPoly, m: int) -> IntPoly:
    return _mod([i * c for i, c in enumerate(a)][1:], m)


def _distinct_degree(f: IntPoly, p: int) -> list[tuple[IntPoly, int]]:
    out = []
    h = [0, 1]
    d = 0
    f = list(f)
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = _powmod(h, p, f, p)
        g = _gcd(f, _sub(h, [0, 1], p), p)
        if len(g) > 1:
            out.append((g, d))
            f = _divmod(f, g, p)[0]
            h = _divmod(h, f, p)[1]
    if len(f) > 1:
        out.append((_monic(f, p), len(f) - 1))
    return out


def _equal_degree(f: IntPoly, d: int, p: int, rng: random.Random) -> list[IntPoly]:
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = _trim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        g = _gcd(a, f, p)
        if len(g) > 1:
            break
        b = _sub(_powmod(a, (p ** d - 1) // 2, f, p), [1], p)
        g = _gcd(b, f, p)
        if 1 < len(g) < len(f):
            break
    return _equal_degree(g, d, p, rng) + _equal_degree(_divmod(f, g, p)[0], d, p, rng)


def factor_mod_p(f: IntPoly, p: int, seed: int = 1) -> list[IntPoly]:
    """Monic irreducible factors of a squarefree f modulo an odd prime p."""
    rng = random.Random(seed)
    f = _monic(_mod(list(f), p), p)
    out = []
    for g, d in _distinct_degree(f, p):
        out.extend(_equal_degree(g, d, p, rng))
    return sorted(out)


def _hensel_step(m: int, f, g, h, s, t):
    """One quadratic Hensel step modulo m -> m^2 (h monic)."""
    m2 = m * m
    e = _sub(f, _mul(g, h, m2), m2)
    q, r = _divmod(_mul(s, e, m2), h, m2)
    g2 = _add(_add(g, _mul(t, e, m2), m2), _mul(q, g, m2), m2)
    h2 = _add(h, r, m2)
    b = _sub(_add(_mul(s, g2, m2), _mul(t, h2, m2), m2), [1], m2)
    c, d = _divmod(_mul(s, b, m2), h2, m2)
    s2 = _sub(s, d, m2)
    t2 = _sub(_sub(t, _mul(t, b, m2), m2), _mul(c, g2, m2), m2)
    return g2, h2, s2, t2


def _multifactor_lift(f: IntPoly, factors: list[IntPoly], p: int, k: int) -> list[IntPoly]:
    """Lift f = lc * prod(factors) mod p to modulus p^(2^k)."""
    if len(factors) == 1:
        mod = p ** (2 ** k)
        inv = pow(f[-1], -1, mod)
        return [_mod([c * inv for c in f], mod)]
    half = len(factors) // 2
    left, right = factors[:half], factors[half:]
    g = [f[-1] % p]
    for a in left:
        g = _mul(g, a, p)
    h = [1]
    for a in right:
        h = _mul(h, a, p)
    _, s, t = _ext_gcd(g, h, p)
    m = p
    for _ in range(k):
        g, h, s, t = _hensel_step(m, _mod(f, m * m), g, h, s, t)
        m = m * m
    return _multifactor_lift(g, left, p, k) + _multifactor_lift(h, right, p, k)


def _int_divides(a: IntPoly, b: IntPoly) -> IntPoly | None:
    """Exact quotient b / a over the integers, or None."""
    a, b = list(a), list(b)
    if len(a) > len(b):
        return None
    q = [0] * (len(b) - len(a) + 1)
    for k in range(len(b) - 1, len(a) - 2, -1):
        c = b[k]
        if c % a[-1]:
            return None
        t = c // a[-1]
        q[k - len(a) + 1] = t
        for j in range(len(a)):
            b[k - len(a) + 1 + j] -= t * a[j]
    if any(b):
        return None
    return _trim(q)


def _primitive(a: IntPoly) -> IntPoly:
    from math import gcd

    g = 0
    for c in a:
        g = gcd(g, c)
    a = [c // g for c in a]
    return [-c for c in a] if a[-1] < 0 else a


def _zassenhaus(f: IntPoly) -> list[IntPoly]:
    """Irreducible factors of a primitive squarefree integer polynomial."""
    n = len(f) - 1
    if n <= 1:
        return [f]
    lc = f[-1]
    best = None
    tried = 0
    for p in _PRIMES:
        if lc % p == 0:
            continue
        fp = _mod(f, p)
        if len(_gcd(fp, _deriv(fp, p), p)) > 1:
            continue
        facs = factor_mod_p(fp, p)
        if best is None or len(facs) < len(best[1]):
            best = (p, facs)
        tried += 1
        if len(facs) == 1 or tried >= 5:
            break
    p, facs = best
    if len(facs) == 1:
        return [f]
    norm2 = isqrt(sum(c * c for c in f)) + 1
    bound = 2 * abs(lc) * (2 ** n) * norm2 + 1
    k = 0
    while p ** (2 ** k) <= bound:
        k += 1
    mod = p ** (2 ** k)
    lifted = _multifactor_lift(f, facs, p, k)
    found = []
    remaining = list(range(len(lifted)))
    current = list(f)
    size = 1
    while 2 * size <= len(remaining):
        hit = False
        for subset in combinations(remaining, size):
            lcc = current[-1]
            cand = [lcc % mod]
            for i in subset:
                cand = _mul(cand, lifted[i], mod)
            cand = _primitive(_sym(cand, mod))
            quo = _int_divides(cand, current)
            if quo is not None:
                found.append(cand)
                current = _primitive(quo)
                remaining = [i for i in remaining if i not in subset]
                hit = True
                break
        if not hit:
            size += 1
    found.append(_primitive(current))
    return found


def factor_univariate(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Monic irreducible factors over QQ with multiplicities.

    The input equals lc(p) times the product of the returned powers.
    """
    if p.dom is not QQ:
        raise TypeError("factor_univariate works over QQ")
    if p.degree() < 1:
        raise ValueError("constant input has no factorization")
    out = []
    for part, mult in squarefree_parts(p):
        _, ints = rational_content(part)
        # pull out powers of t first; they are cheap and common
        shift = 0
        while ints[shift] == 0:
            shift += 1
        if shift:
            out.append((UniPoly.var(), mult))
            ints = ints[shift:]
        if len(ints) > 1:
            for fac in _zassenhaus(ints):
                out.append((UniPoly([Fraction(c) for c in fac]).monic(), mult))
    out.sort(key=lambda fm: (fm[0].degree(), fm[0].coeffs, fm[1]))
    return out


def is_irreducible(p: UniPoly) -> bool:
    facs = factor_univariate(p)
    return len(facs) == 1 and facs[0][1] == 1
