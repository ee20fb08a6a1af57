"""Exact algebraic numbers: number fields, real embeddings, root isolation.

A number field is QQ(theta) for a monic irreducible minimal polynomial.  A
real field carries a rational isolating interval for theta; a complex field
is kept abstract (no embedding) because nothing downstream needs to compare
or sign its elements.
"""

from __future__ import annotations

from fractions import Fraction
from dataclasses import dataclass
from math import ceil

from .factor import factor_univariate
from .polys import QQ, UniPoly, poly_gcd, resultant, squarefree_parts


class NumberField:
    __slots__ = ("minpoly", "degree", "real", "_lo", "_hi", "name", "zero", "one")

    def __init__(self, minpoly: UniPoly, interval: tuple[Fraction, Fraction] | None = None, name: str = "θ"):
        if minpoly.dom is not QQ or minpoly.degree() < 2:
            raise ValueError("a number field needs a rational minimal polynomial of degree >= 2")
        self.minpoly = minpoly.monic()
        self.degree = self.minpoly.degree()
        self.real = interval is not None
        self._lo, self._hi = interval if interval else (None, None)
        self.name = name
        self.zero = AlgebraicNumber(self, UniPoly())
        self.one = AlgebraicNumber(self, UniPoly([1]))

    def convert(self, value) -> "AlgebraicNumber":
        if isinstance(value, AlgebraicNumber):
            if value.field is not self:
                raise TypeError("element of a different number field")
            return value
        return AlgebraicNumber(self, UniPoly([Fraction(value)]))

    def gen(self) -> "AlgebraicNumber":
        return AlgebraicNumber(self, UniPoly.var())

    def element(self, coeffs) -> "AlgebraicNumber":
        return AlgebraicNumber(self, UniPoly(coeffs) % self.minpoly)

    def interval(self) -> tuple[Fraction, Fraction]:
        if not self.real:
            raise ValueError("sign undefined: field has no real embedding")
        return self._lo, self._hi

    def refine(self) -> None:
        """Halve the isolating interval of the generator (cached on the field)."""
        lo, hi = self.interval()
        mid = (lo + hi) / 2
        if _sign_q(self.minpoly(lo)) * _sign_q(self.minpoly(mid)) < 0:
            self._hi = mid
        else:
            self._lo = mid

    def approx(self) -> float:
        lo, hi = self.interval()
        while hi - lo > Fraction(1, 10 ** 12):
            self.refine()
            lo, hi = self.interval()
        return float((lo + hi) / 2)

    def __repr__(self) -> str:
        kind = "real" if self.real else "abstract"
        return f"QQ({self.name}: {self.minpoly.to_str('t')} = 0, {kind})"


def _sign_q(c: Fraction) -> int:
    return (c > 0) - (c < 0)


class AlgebraicNumber:
    __slots__ = ("field", "poly")

    def __init__(self, field: NumberField, poly: UniPoly):
        self.field = field
        self.poly = poly

    def _other(self, other) -> UniPoly:
        if isinstance(other, AlgebraicNumber):
            if other.field is not self.field:
                raise TypeError("mixed number fields")
            return other.poly
        return UniPoly([Fraction(other)])

    def __add__(self, other):
        return AlgebraicNumber(self.field, self.poly + self._other(other))

    __radd__ = __add__

    def __sub__(self, other):
        return AlgebraicNumber(self.field, self.poly - self._other(other))

    def __rsub__(self, other):
        return AlgebraicNumber(self.field, self._other(other) - self.poly)

    def __neg__(self):
        return AlgebraicNumber(self.field, -self.poly)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgebraicNumber(self.field, self.poly * Fraction(other))
        return AlgebraicNumber(self.field, (self.poly * self._other(other)) % self.field.minpoly)

    __rmul__ = __mul__

    def inverse(self) -> "AlgebraicNumber":
        if not self.poly:
            raise ZeroDivisionError("inverse of zero")
        # s*a + t*m = 1
        from .polys import ext_gcd

        g, s, _ = ext_gcd(self.poly, self.field.minpoly)
        if g.degree() != 0:
            raise ArithmeticError("minimal polynomial is not irreducible")
        return AlgebraicNumber(self.field, s % self.field.minpoly)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgebraicNumber(self.field, self.poly * (1 / Fraction(other)))
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __bool__(self) -> bool:
        return bool(self.poly)

    def __eq__(self, other) -> bool:
        if isinstance(other, AlgebraicNumber):
            return other.field is self.field and self.poly == other.poly
        if isinstance(other, (int, Fraction)):
            return self.poly == UniPoly([Fraction(other)])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.poly)

    def rational_value(self) -> Fraction | None:
        if self.poly.degree() <= 0:
            return self.poly.coeff(0)
        return None

    def enclosure(self) -> tuple[Fraction, Fraction]:
        """Rational interval containing the value under the real embedding."""
        lo, hi = self.field.interval()
        return _interval_horner(self.poly, lo, hi)

    def sign(self) -> int:
        if not self.poly:
            return 0
        while True:
            a, b = self.enclosure()
            if a > 0:
                return 1
            if b < 0:
                return -1
            self.field.refine()

    def __repr__(self) -> str:
        return self.poly.to_str(self.field.name)

    __str__ = __repr__


def _interval_mul(a: Fraction, b: Fraction, c: Fraction, d: Fraction):
    ps = (a * c, a * d, b * c, b * d)
    return min(ps), max(ps)


def _interval_horner(p: UniPoly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    # centred form around the midpoint keeps enclosures tight
    mid = (lo + hi) / 2
    rad = (hi - lo) / 2
    q = p.shift(mid)
    a = b = Fraction(0)
    for c in reversed(q.coeffs):
        a, b = _interval_mul(a, b, -rad, rad)
        a, b = a + c, b + c
    return a, b


Domain = object  # QQ or a NumberField


def sign_of(value) -> int:
    if isinstance(value, AlgebraicNumber):
        return value.sign()
    value = Fraction(value)
    return (value > 0) - (value < 0)


def sign_at(a, g: UniPoly) -> int:
    """Exact sign of g(a) for a real algebraic a."""
    if isinstance(a, AlgebraicNumber) and not a.field.real:
        raise ValueError("sign undefined")
    return sign_of(g(a))


def enclosure_of(value) -> tuple[Fraction, Fraction]:
    if isinstance(value, AlgebraicNumber):
        return value.enclosure()
    value = Fraction(value)
    return value, value


def refine_domain(dom) -> None:
    if isinstance(dom, NumberField):
        dom.refine()


# ---------------------------------------------------------------------------
# Sturm sequences and real roots


def sturm_sequence(p: UniPoly) -> list[UniPoly]:
    seq = [p, p.derivative()]
    while seq[-1].degree() > 0:
        r = seq[-2] % seq[-1]
        if not r:
            break
        seq.append(-r)
    return seq


def _variations(signs: list[int]) -> int:
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _variations_at(seq: list[UniPoly], x: Fraction) -> int:
    return _variations([sign_of(q(x)) for q in seq])


def _variations_at_infinity(seq: list[UniPoly], positive: bool) -> int:
    signs = []
    for q in seq:
        s = sign_of(q.lc())
        if not positive and q.degree() % 2:
            s = -s
        signs.append(s)
    return _variations(signs)


def root_bound(p: UniPoly) -> Fraction:
    """Cauchy bound: every root has absolute value below the result."""
    dom = p.dom
    while True:
        lo, hi = enclosure_of(p.lc())
        if lo > 0 or hi < 0:
            break
        refine_domain(dom)
    lcmin = min(abs(lo), abs(hi))
    big = Fraction(0)
    for c in p.coeffs[:-1]:
        a, b = enclosure_of(c)
        big = max(big, abs(a), abs(b))
    return Fraction(ceil(1 + big / lcmin))


@dataclass(frozen=True)
class RealRoot:
    """A real root of poly isolated in the closed interval [lo, hi].

    ``exact`` holds the value when the root lies in the coefficient field.
    Open-interval roots satisfy poly(lo) * poly(hi) < 0.
    """

    poly: UniPoly
    lo: Fraction
    hi: Fraction
    exact: object = None

    def refine(self) -> "RealRoot":
        if self.exact is not None:
            if isinstance(self.exact, AlgebraicNumber):
                self.exact.field.refine()
                lo, hi = self.exact.enclosure()
                return RealRoot(self.poly, lo, hi, self.exact)
            return self
        mid = (self.lo + self.hi) / 2
        if sign_of(self.poly(self.lo)) * sign_of(self.poly(mid)) < 0:
            return RealRoot(self.poly, self.lo, mid)
        return RealRoot(self.poly, mid, self.hi)

    def width(self) -> Fraction:
        return self.hi - self.lo

    def approx(self) -> float:
        r = self
        while r.width() > Fraction(1, 10 ** 9):
            r = r.refine()
        return float((r.lo + r.hi) / 2)


@dataclass(frozen=True)
class RootInventory:
    real_roots: list  # list of (RealRoot, multiplicity)
    complex_pair_count: int
    complex_root_count: int


def _isolate_rootfree(p: UniPoly) -> list[RealRoot]:
    """Isolate real roots of a squarefree p having no root in its coefficient field."""
    if p.degree() < 1:
        return []
    seq = sturm_sequence(p)
    b = root_bound(p)
    total = _variations_at_infinity(seq, False) - _variations_at_infinity(seq, True)
    out = []
    stack = [(-b, b, total)]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append(RealRoot(p, lo, hi))
            continue
        mid = (lo + hi) / 2
        vm = _variations_at(seq, mid)
        left = _variations_at(seq, lo) - vm
        stack.append((lo, mid, left))
        stack.append((mid, hi, n - left))
    out.sort(key=lambda r: r.lo)
    return out


def isolate_roots(p: UniPoly) -> RootInventory:
    """Real roots of p (w.r.t. the real embedding of its field) and complex count."""
    if not p:
        raise ValueError("zero polynomial")
    dom = p.dom
    if isinstance(dom, NumberField) and not dom.real:
        raise ValueError("sign undefined: field has no real embedding")
    reals = []
    nonreal = 0
    for q, mult in factor_over_field(p):
        if q.degree() == 1:
            value = -q.coeff(0) / q.coeff(1)
            lo, hi = enclosure_of(value)
            reals.append((RealRoot(q, lo, hi, value), mult))
            continue
        roots = _isolate_rootfree(q)
        reals.extend((r, mult) for r in roots)
        nonreal += (q.degree() - len(roots)) * mult
    reals = separate_roots([r for r, _ in reals], [m for _, m in reals])
    return RootInventory(reals, nonreal // 2, nonreal)


def separate_roots(roots: list[RealRoot], tags: list | None = None) -> list:
    """Refine intervals until pairwise disjoint; return sorted (root, tag) pairs."""
    tags = tags if tags is not None else [None] * len(roots)
    items = list(zip(roots, tags))
    while True:
        items.sort(key=lambda rt: (rt[0].lo, rt[0].hi))
        clash = None
        for i in range(len(items) - 1):
            if items[i][0].hi >= items[i + 1][0].lo:
                clash = i
                break
        if clash is None:
            return items
        a, b = items[clash], items[clash + 1]
        if a[0].width() >= b[0].width() and a[0].width() > 0:
            items[clash] = (a[0].refine(), a[1])
        elif b[0].width() > 0:
            items[clash + 1] = (b[0].refine(), b[1])
        else:
            items[clash] = (a[0].refine(), a[1])


def sample_between(sorted_roots: list[RealRoot], include_ends: bool = True) -> list[Fraction]:
    """Rationals strictly separating consecutive disjointly isolated roots."""
    if not sorted_roots:
        return [Fraction(0)] if include_ends else []
    out = []
    if include_ends:
        out.append(Fraction(ceil(sorted_roots[0].lo) - 1))
    for a, b in zip(sorted_roots, sorted_roots[1:]):
        if not a.hi < b.lo:
            raise ValueError("roots are not separated")
        out.append((a.hi + b.lo) / 2)
    if include_ends:
        out.append(Fraction(ceil(sorted_roots[-1].hi) + 1))
    return out


# ---------------------------------------------------------------------------
# norms, primitive elements, factorization over number fields


def _interpolate(xs: list[Fraction], ys: list[Fraction]) -> UniPoly:
    """Newton interpolation over QQ."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = UniPoly([coef[-1]])
    for i in range(n - 2, -1, -1):
        p = p * UniPoly([-xs[i], 1]) + UniPoly([coef[i]])
    return p


def _lift_coeffs(p: UniPoly) -> list[UniPoly]:
    """Coefficients of p over a number field as rational polynomials in theta."""
    return [c.poly if isinstance(c, AlgebraicNumber) else UniPoly([c]) for c in p.coeffs]


def norm_shifted(p: UniPoly, k: int) -> UniPoly:
    """Norm over QQ of p(t - k*theta) for p over a number field."""
    field = p.dom
    m = field.minpoly
    rows = _lift_coeffs(p)
    deg = field.degree * p.degree()
    xs = [Fraction(i) for i in range(deg + 1)]
    ys = []
    for t0 in xs:
        lin = UniPoly([t0, -k])  # t0 - k X
        acc = UniPoly()
        power = UniPoly([1])
        for row in rows:
            acc = acc + row * power
            power = power * lin
        ys.append(resultant(m, acc) if acc else Fraction(0))
    return _interpolate(xs, ys)


def _shift_by_theta(p: UniPoly, k: int) -> UniPoly:
    """p(t - k*theta) over the same field."""
    field = p.dom
    if k == 0:
        return p
    return p.shift(-k * field.gen())


def _k_sequence():
    yield 0
    i = 1
    while True:
        yield i
        yield -i
        i += 1


def factor_over_field(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Monic irreducible factors with multiplicities (Trager's norm method over number fields)."""
    dom = p.dom
    if p.degree() < 1:
        raise ValueError("constant input has no factorization")
    if dom is QQ:
        return factor_univariate(p)
    out = []
    for part, mult in squarefree_parts(p):
        for fac in _trager_squarefree(part):
            out.append((fac, mult))
    return out


def _trager_squarefree(p: UniPoly) -> list[UniPoly]:
    field = p.dom
    if p.degree() == 1:
        return [p.monic()]
    for k in _k_sequence():
        n = norm_shifted(p, k)
        if poly_gcd(n, n.derivative()).degree() == 0:
            break
    shifted = _shift_by_theta(p, k)
    facs = factor_univariate(n)
    if len(facs) == 1:
        return [p.monic()]
    out = []
    rest = shifted
    for r, _ in facs:
        rK = r.map_coeffs(field.convert, field)
        g = poly_gcd(rest, rK)
        if g.degree() > 0:
            rest = rest.exact_div(g)
            out.append(g.shift(k * field.gen()).monic())
    return out


@dataclass
class Extension:
    """Result of adjoining one root of q to a field K."""

    field: object  # QQ or NumberField
    root: object  # the adjoined root as an element of ``field``
    embed: object  # callable mapping elements of K into ``field``


def _identity(v):
    return v


def extend_field(q: UniPoly, root: RealRoot | None = None, name: str = "θ") -> Extension:
    """Adjoin a root of the irreducible q over its field.

    With ``root`` (an isolating interval over a real field) the new field is
    real and embedded so that the adjoined element is that root.  Without it
    the new field is abstract.
    """
    K = q.dom
    if q.degree() < 1:
        raise ValueError("factor first")
    if q.degree() == 1:
        value = -q.coeff(0) / q.coeff(1)
        return Extension(K, value, _identity)
    if K is QQ:
        facs = factor_univariate(q)
        if len(facs) != 1 or facs[0][1] != 1:
            raise ValueError("factor first")
        interval = None
        if root is not None:
            interval = (root.lo, root.hi)
        L = NumberField(q, interval, name)
        return Extension(L, L.gen(), lambda v: L.convert(v))
    if len(_trager_squarefree(q)) != 1:
        raise ValueError("factor first")
    for k in _k_sequence():
        n = norm_shifted(q, k)
        if poly_gcd(n, n.derivative()).degree() == 0:
            break
    n = n.monic()
    interval = None
    if root is not None:
        interval = _embed_primitive(n, root, K, k)
    L = NumberField(n, interval, name)
    gamma = L.gen()
    # theta_L is the common root of m(X) and q(gamma - k X) over L
    m_L = K.minpoly.map_coeffs(L.convert, L)
    rows = _lift_coeffs(q)
    lin = UniPoly([gamma, L.convert(-k)], L)
    acc = UniPoly([], L)
    power = UniPoly([L.one], L)
    for row in rows:
        acc = acc + row.map_coeffs(L.convert, L) * power
        power = power * lin
    g = poly_gcd(m_L, acc)
    if g.degree() != 1:
        raise ArithmeticError("primitive element recovery failed")
    theta_L = -g.coeff(0)
    alpha = gamma - theta_L * k

    def embed(v, _K=K, _L=L, _t=theta_L):
        if isinstance(v, AlgebraicNumber):
            if v.field is not _K:
                raise TypeError("element of a different field")
            return v.poly(_t) if v.poly else _L.zero
        return _L.convert(v)

    return Extension(L, alpha, embed)


def _embed_primitive(n: UniPoly, root: RealRoot, K: NumberField, k: int) -> tuple[Fraction, Fraction]:
    """Isolating interval of gamma = root + k*theta among the real roots of n."""
    seq = sturm_sequence(n)
    r = root
    while True:
        tlo, thi = K.interval()
        a = r.lo + min(k * tlo, k * thi)
        b = r.hi + max(k * tlo, k * thi)
        if n(a) and n(b):
            count = _variations_at(seq, a) - _variations_at(seq, b)
            if count == 1:
                return a, b
        r = r.refine()
        K.refine()
