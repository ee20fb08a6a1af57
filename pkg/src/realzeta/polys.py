"""Dense univariate and sparse bivariate polynomials over exact fields.

Coefficients live in a field object exposing ``zero``, ``one`` and ``convert``.
The rationals are provided here as :data:`QQ`; number fields come from
:mod:`realzeta.algebraic` and plug into the same classes.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable


class RationalField:
    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)
    degree = 1

    def convert(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if hasattr(value, "field"):
            raise TypeError("cannot convert a number field element to QQ")
        return Fraction(value)

    def __repr__(self) -> str:
        return "QQ"


QQ = RationalField()


def _fmt_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class UniPoly:
    """Dense polynomial, coefficients lowest degree first."""

    __slots__ = ("coeffs", "dom")

    def __init__(self, coeffs: Iterable = (), dom=QQ):
        conv = dom.convert
        cs = [conv(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.dom = dom

    @classmethod
    def _raw(cls, coeffs: list, dom) -> "UniPoly":
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        p = cls.__new__(cls)
        p.coeffs = tuple(coeffs)
        p.dom = dom
        return p

    @classmethod
    def const(cls, c, dom=QQ) -> "UniPoly":
        return cls([c], dom)

    @classmethod
    def var(cls, dom=QQ) -> "UniPoly":
        return cls([dom.zero, dom.one], dom)

    @classmethod
    def monomial(cls, n: int, c=1, dom=QQ) -> "UniPoly":
        return cls([dom.zero] * n + [dom.convert(c)], dom)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.dom.zero

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.dom.zero

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other], self.dom)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return self.coeffs == UniPoly([other], self.dom).coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> "UniPoly":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly._raw(out, self.dom)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly._raw([-c for c in self.coeffs], self.dom)

    def __sub__(self, other) -> "UniPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "UniPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            c = self.dom.convert(other)
            return UniPoly._raw([a * c for a in self.coeffs], self.dom)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly._raw([], self.dom)
        out = [self.dom.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return UniPoly._raw(out, self.dom)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly([self.dom.one], self.dom)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other) -> tuple["UniPoly", "UniPoly"]:
        other = self._coerce(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree()
        inv = self.dom.one / other.lc()
        if len(rem) - 1 < db:
            return UniPoly._raw([], self.dom), self
        quo = [self.dom.zero] * (len(rem) - db)
        bco = other.coeffs
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            q = c * inv
            quo[k - db] = q
            for j in range(db + 1):
                rem[k - db + j] = rem[k - db + j] - q * bco[j]
        return UniPoly._raw(quo, self.dom), UniPoly._raw(rem[:db], self.dom)

    def __floordiv__(self, other) -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "UniPoly":
        return divmod(self, other)[1]

    def exact_div(self, other) -> "UniPoly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        return self * (self.dom.one / self.lc())

    def derivative(self) -> "UniPoly":
        return UniPoly._raw([c * i for i, c in enumerate(self.coeffs)][1:], self.dom)

    def __call__(self, x):
        acc = self.dom.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other: "UniPoly") -> "UniPoly":
        acc = UniPoly._raw([], other.dom)
        for c in reversed(self.coeffs):
            acc = acc * other + UniPoly([c], other.dom)
        return acc

    def shift(self, r) -> "UniPoly":
        """Return p(t + r)."""
        cs = list(self.coeffs)
        n = len(cs)
        r = self.dom.convert(r)
        for i in range(n):
            for k in range(n - 2, i - 1, -1):
                cs[k] = cs[k] + r * cs[k + 1]
        return UniPoly._raw(cs, self.dom)

    def scale_var(self, c) -> "UniPoly":
        """Return p(c t)."""
        c = self.dom.convert(c)
        out, power = [], self.dom.one
        for a in self.coeffs:
            out.append(a * power)
            power = power * c
        return UniPoly._raw(out, self.dom)

    def reverse(self) -> "UniPoly":
        return UniPoly(list(reversed(self.coeffs)), self.dom)

    def map_coeffs(self, fn, dom) -> "UniPoly":
        return UniPoly([fn(c) for c in self.coeffs], dom)

    def trailing_order(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise ValueError("zero polynomial has no order")

    def to_str(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = _fmt_rational(c) if isinstance(c, Fraction) else f"({c})"
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if mono:
                if cs == "1":
                    term = mono
                elif cs == "-1":
                    term = "-" + mono
                else:
                    term = f"{cs}*{mono}"
            else:
                term = cs
            parts.append(term)
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"UniPoly({self.to_str()})"


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over a field (zero if both are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


def ext_gcd(a: UniPoly, b: UniPoly) -> tuple[UniPoly, UniPoly, UniPoly]:
    """Return (g, s, t) with s*a + t*b = g and g monic."""
    dom = a.dom
    r0, r1 = a, b
    s0, s1 = UniPoly([dom.one], dom), UniPoly([], dom)
    t0, t1 = UniPoly([], dom), UniPoly([dom.one], dom)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    inv = dom.one / r0.lc()
    return r0 * inv, s0 * inv, t0 * inv


def squarefree_parts(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: monic squarefree factors with multiplicities."""
    if p.degree() < 1:
        return []
    out = []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    i = 1
    while b.degree() > 0:
        a = poly_gcd(b, d)
        b = b.exact_div(a)
        c = d.exact_div(a)
        if a.degree() > 0:
            out.append((a.monic(), i))
        i += 1
        d = c - b.derivative()
    return out


def squarefree_part(p: UniPoly) -> UniPoly:
    return p.exact_div(poly_gcd(p, p.derivative())).monic()


def resultant(a: UniPoly, b: UniPoly):
    """Resultant over a field via the Euclidean remainder sequence."""
    dom = a.dom
    if not a or not b:
        return dom.zero
    res = dom.one
    while True:
        da, db = a.degree(), b.degree()
        if db == 0:
            return res * b.lc() ** da
        r = a % b
        if not r:
            return dom.zero
        dr = r.degree()
        if (da * db) % 2:
            res = -res
        res = res * b.lc() ** (da - dr)
        a, b = b, r


def rational_content(p: UniPoly) -> tuple[Fraction, list[int]]:
    """Split p over QQ as c * (primitive integer polynomial with positive lc)."""
    den = 1
    for c in p.coeffs:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if ints[-1] < 0:
        g = -g
    return Fraction(g, den), [v // g for v in ints]


# ---------------------------------------------------------------------------
# bivariate


Monomial = tuple[int, int]


class BiPoly:
    """Sparse polynomial in x, y; keys are exponent pairs (i, j) of x^i y^j."""

    __slots__ = ("terms", "dom")

    def __init__(self, terms: dict | None = None, dom=QQ):
        conv = dom.convert
        converted = {k: conv(v) for k, v in (terms or {}).items()}
        self.terms = {k: v for k, v in converted.items() if v}
        self.dom = dom

    @classmethod
    def _raw(cls, terms: dict, dom) -> "BiPoly":
        p = cls.__new__(cls)
        p.terms = {k: v for k, v in terms.items() if v}
        p.dom = dom
        return p

    @classmethod
    def x(cls, dom=QQ) -> "BiPoly":
        return cls({(1, 0): 1}, dom)

    @classmethod
    def y(cls, dom=QQ) -> "BiPoly":
        return cls({(0, 1): 1}, dom)

    @classmethod
    def const(cls, c, dom=QQ) -> "BiPoly":
        return cls({(0, 0): c}, dom)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiPoly):
            other = BiPoly.const(other, self.dom)
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def _coerce(self, other) -> "BiPoly":
        return other if isinstance(other, BiPoly) else BiPoly.const(other, self.dom)

    def __add__(self, other) -> "BiPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, self.dom.zero) + v
        return BiPoly._raw(out, self.dom)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly._raw({k: -v for k, v in self.terms.items()}, self.dom)

    def __sub__(self, other) -> "BiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "BiPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "BiPoly":
        if not isinstance(other, BiPoly):
            c = self.dom.convert(other)
            return BiPoly._raw({k: v * c for k, v in self.terms.items()}, self.dom)
        out: dict = {}
        zero = self.dom.zero
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, zero) + a * b
        return BiPoly._raw(out, self.dom)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = BiPoly.const(self.dom.one, self.dom)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def degree_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def degree_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def order(self) -> int:
        """Multiplicity at the origin."""
        if not self.terms:
            raise ValueError("zero polynomial has no order")
        return min(i + j for i, j in self.terms)

    def lowest_form(self) -> dict:
        m = self.order()
        return {k: v for k, v in self.terms.items() if k[0] + k[1] == m}

    def constant_term(self):
        return self.terms.get((0, 0), self.dom.zero)

    def leading_term(self) -> tuple[Monomial, object]:
        """Leading term in the order comparing the y-degree first."""
        k = max(self.terms, key=lambda m: (m[1], m[0]))
        return k, self.terms[k]

    def map_coeffs(self, fn, dom) -> "BiPoly":
        return BiPoly({k: fn(v) for k, v in self.terms.items()}, dom)

    def evaluate(self, x, y):
        acc = self.dom.zero
        for (i, j), c in self.terms.items():
            acc = acc + c * (x ** i) * (y ** j)
        return acc

    def diff_x(self) -> "BiPoly":
        return BiPoly._raw({(i - 1, j): c * i for (i, j), c in self.terms.items() if i}, self.dom)

    def diff_y(self) -> "BiPoly":
        return BiPoly._raw({(i, j - 1): c * j for (i, j), c in self.terms.items() if j}, self.dom)

    def restrict_x0(self) -> UniPoly:
        """The univariate polynomial f(0, y)."""
        n = self.degree_y()
        cs = [self.dom.zero] * (n + 1)
        for (i, j), c in self.terms.items():
            if i == 0:
                cs[j] = c
        return UniPoly(cs, self.dom)

    def restrict_y0(self) -> UniPoly:
        n = self.degree_x()
        cs = [self.dom.zero] * (n + 1)
        for (i, j), c in self.terms.items():
            if j == 0:
                cs[i] = c
        return UniPoly(cs, self.dom)

    def chart_x(self) -> tuple["BiPoly", int]:
        """Substitute y -> x*y and divide out the largest power of x.

        Returns the strict transform and the exponent removed.
        """
        moved = {(i + j, j): c for (i, j), c in self.terms.items()}
        m = min(i for i, _ in moved)
        return BiPoly._raw({(i - m, j): c for (i, j), c in moved.items()}, self.dom), m

    def chart_y(self) -> tuple["BiPoly", int]:
        """Substitute x -> x*y and divide out the largest power of y."""
        moved = {(i, i + j): c for (i, j), c in self.terms.items()}
        m = min(j for _, j in moved)
        return BiPoly._raw({(i, j - m): c for (i, j), c in moved.items()}, self.dom), m

    def translate_y(self, r) -> "BiPoly":
        """Return f(x, y + r)."""
        r = self.dom.convert(r)
        zero = self.dom.zero
        out: dict = {}
        for (i, j), c in self.terms.items():
            # binomial expansion of (y + r)^j
            binom = 1
            rpow = [self.dom.one]
            for _ in range(j):
                rpow.append(rpow[-1] * r)
            for k in range(j + 1):
                v = c * binom * rpow[j - k]
                out[(i, k)] = out.get((i, k), zero) + v
                binom = binom * (j - k) // (k + 1)
        return BiPoly._raw(out, self.dom)

    def as_poly_in_y(self) -> list[UniPoly]:
        """Coefficients in y, each a polynomial in x (lowest y-degree first)."""
        n = self.degree_y()
        rows: list[list] = [[] for _ in range(n + 1)]
        for (i, j), c in self.terms.items():
            row = rows[j]
            if len(row) <= i:
                row.extend([self.dom.zero] * (i + 1 - len(row)))
            row[i] = c
        return [UniPoly(r, self.dom) for r in rows]

    @classmethod
    def from_poly_in_y(cls, rows: list[UniPoly], dom=QQ) -> "BiPoly":
        terms = {}
        for j, r in enumerate(rows):
            for i, c in enumerate(r.coeffs):
                if c:
                    terms[(i, j)] = c
        return cls._raw(terms, dom)

    def sorted_terms(self) -> list[tuple[Monomial, object]]:
        return sorted(self.terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0]))

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in self.sorted_terms():
            mono = []
            if i:
                mono.append("x" if i == 1 else f"x^{i}")
            if j:
                mono.append("y" if j == 1 else f"y^{j}")
            m = "*".join(mono)
            cs = _fmt_rational(c) if isinstance(c, Fraction) else f"({c})"
            if not m:
                parts.append(cs)
            elif cs == "1":
                parts.append(m)
            elif cs == "-1":
                parts.append("-" + m)
            else:
                parts.append(f"{cs}*{m}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"BiPoly({self.to_str()})"


def bi_exact_div(a: BiPoly, b: BiPoly) -> BiPoly:
    """Exact division in a polynomial ring over a field; raises if inexact."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    (bi, bj), bc = b.leading_term()
    inv = a.dom.one / bc
    rem = BiPoly._raw(dict(a.terms), a.dom)
    quo: dict = {}
    while rem:
        (ri, rj), rc = rem.leading_term()
        if ri < bi or rj < bj:
            raise ArithmeticError("inexact bivariate division")
        k = (ri - bi, rj - bj)
        q = rc * inv
        quo[k] = q
        rem = rem - BiPoly._raw({(i + k[0], j + k[1]): v * q for (i, j), v in b.terms.items()}, a.dom)
    return BiPoly._raw(quo, a.dom)


def _rows_content(rows: list[UniPoly]) -> UniPoly:
    g = UniPoly([], rows[0].dom)
    for r in rows:
        g = poly_gcd(g, r) if g else r.monic()
        if g.degree() == 0:
            break
    return g


def _rows_trim(rows: list[UniPoly]) -> list[UniPoly]:
    while rows and not rows[-1]:
        rows.pop()
    return rows


def _rows_prem(a: list[UniPoly], b: list[UniPoly]) -> list[UniPoly]:
    """Pseudo-remainder of a by b as polynomials in y over Q[x]."""
    a = list(a)
    db = len(b) - 1
    lcb = b[-1]
    while len(a) - 1 >= db and a:
        lca = a[-1]
        shift = len(a) - 1 - db
        a = [c * lcb for c in a]
        for j in range(db + 1):
            a[shift + j] = a[shift + j] - lca * b[j]
        a = _rows_trim(a)
    return a


def bi_gcd(a: BiPoly, b: BiPoly) -> BiPoly:
    """Gcd over QQ[x, y] by primitive remainder sequences in y.

    The result is normalized to leading coefficient 1 in the y-first order.
    """
    if not a:
        return _bi_normalize(b)
    if not b:
        return _bi_normalize(a)
    ra, rb = _rows_trim(a.as_poly_in_y()), _rows_trim(b.as_poly_in_y())
    ca, cb = _rows_content(ra), _rows_content(rb)
    cont = poly_gcd(ca, cb)
    ra = [r.exact_div(ca) for r in ra]
    rb = [r.exact_div(cb) for r in rb]
    if len(ra) < len(rb):
        ra, rb = rb, ra
    while len(rb) > 1:
        r = _rows_prem(ra, rb)
        if not r:
            break
        cr = _rows_content(r)
        ra, rb = rb, [c.exact_div(cr) for c in r]
    if len(rb) == 1:
        g_rows = [UniPoly([1])]
    else:
        g_rows = rb
        cg = _rows_content(g_rows)
        g_rows = [c.exact_div(cg) for c in g_rows]
    g_rows = [c * cont for c in g_rows]
    return _bi_normalize(BiPoly.from_poly_in_y(g_rows))


def _bi_normalize(p: BiPoly) -> BiPoly:
    if not p:
        return p
    _, c = p.leading_term()
    return p * (p.dom.one / c)


def squarefree_decomposition(p: BiPoly) -> list[tuple[BiPoly, int]]:
    """Pairwise coprime squarefree factors with multiplicities.

    Factors are normalized to leading coefficient 1; the product of the
    powers equals p up to a nonzero rational constant.
    """
    if not p:
        raise ValueError("zero input")
    if p.total_degree() == 0:
        return []
    g = bi_gcd(bi_gcd(p, p.diff_x()), p.diff_y())
    w = bi_exact_div(p, g)
    out = []
    i = 1
    while w.total_degree() > 0:
        y = bi_gcd(w, g)
        z = bi_exact_div(w, y)
        if z.total_degree() > 0:
            out.append((_bi_normalize(z), i))
        i += 1
        w = y
        g = bi_exact_div(g, y)
    return out


def leading_constant(p: BiPoly, factors: list[tuple[BiPoly, int]]) -> Fraction:
    """The constant c with p = c * prod(f^e), using leading terms."""
    _, c = p.leading_term()
    for f, e in factors:
        c = c / f.leading_term()[1] ** e
    return c


def coprime_base(pieces: list[tuple[BiPoly, int]]) -> list[tuple[BiPoly, int]]:
    """Refine squarefree pieces into a pairwise coprime list, merging exponents."""
    items = [(_bi_normalize(f), e) for f, e in pieces if f.total_degree() > 0]
    changed = True
    while changed:
        changed = False
        for a in range(len(items)):
            for b in range(a + 1, len(items)):
                fa, ea = items[a]
                fb, eb = items[b]
                g = bi_gcd(fa, fb)
                if g.total_degree() > 0:
                    rest = [items[k] for k in range(len(items)) if k not in (a, b)]
                    new = [(bi_exact_div(fa, g), ea), (bi_exact_div(fb, g), eb), (g, ea + eb)]
                    items = rest + [(_bi_normalize(f), e) for f, e in new if f.total_degree() > 0]
                    changed = True
                    break
            if changed:
                break
    merged: dict[BiPoly, int] = {}
    for f, e in items:
        merged[f] = merged.get(f, 0) + e
    return sorted(merged.items(), key=lambda fe: (fe[1], fe[0].to_str()))
