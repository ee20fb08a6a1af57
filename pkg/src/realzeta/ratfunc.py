"""Rational functions in s, Laurent polynomials in u and fractions in u^(1/D).

Also the T-presentation of beta-level zeta functions, which keeps its
denominator as a multiset of (nu, N) factors 1 - u^(-nu) T^N.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import lcm

from .factor import factor_univariate
from .polys import QQ, UniPoly, poly_gcd


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


# ---------------------------------------------------------------------------
# Laurent polynomials in u with integer exponents


class LaurentPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {int(k): Fraction(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def u_power(cls, k: int, c=1) -> "LaurentPoly":
        return cls({k: c})

    @classmethod
    def from_coeffs(cls, coeffs: list) -> "LaurentPoly":
        return cls({i: c for i, c in enumerate(coeffs)})

    def coeff_list(self) -> list[int | Fraction]:
        """Coefficients from u^0 upward (requires no negative exponents)."""
        if not self.terms:
            return []
        if min(self.terms) < 0:
            raise ValueError("negative exponent in coefficient list")
        top = max(self.terms)
        out = []
        for i in range(top + 1):
            c = self.terms.get(i, Fraction(0))
            out.append(int(c) if c.denominator == 1 else c)
        return out

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def _co(self, other) -> "LaurentPoly":
        return other if isinstance(other, LaurentPoly) else LaurentPoly.const(other)

    def __add__(self, other) -> "LaurentPoly":
        other = self._co(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._co(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return self._co(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        other = self._co(other)
        out: dict = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (k, c), = self.terms.items()
            return LaurentPoly({k * n: Fraction(1) / c ** (-n)})
        out = LaurentPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def evaluate(self, u) -> Fraction:
        return sum((c * Fraction(u) ** k for k, c in self.terms.items()), Fraction(0))

    def at_one(self) -> Fraction:
        return sum(self.terms.values(), Fraction(0))

    def at_minus_one(self) -> Fraction:
        return sum((c * (-1) ** (k % 2) for k, c in self.terms.items()), Fraction(0))

    def to_str(self, var: str = "u") -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}" if k > 0 else f"{var}^({k})")
            if not mono:
                parts.append(_fmt(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{_fmt(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_str()})"


U = LaurentPoly.u_power(1)
U_MINUS_ONE = LaurentPoly({1: 1, 0: -1})


# ---------------------------------------------------------------------------
# fractions in w = u^(1/D)


class LaurentFraction:
    """w^shift * num(w) / den(w) with w = u^(1/scale), in lowest terms.

    num(0) != 0 (unless num is zero), den(0) != 0, den monic, gcd(num, den) = 1.
    """

    __slots__ = ("scale", "shift", "num", "den")

    def __init__(self, num: UniPoly, den: UniPoly | None = None, shift: int = 0, scale: int = 1):
        den = den if den is not None else UniPoly([1])
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.scale, self.shift, self.num, self.den = scale, 0, UniPoly(), UniPoly([1])
            return
        a = num.trailing_order()
        b = den.trailing_order()
        num = UniPoly(num.coeffs[a:])
        den = UniPoly(den.coeffs[b:])
        g = poly_gcd(num, den)
        if g.degree() > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        c = den.lc()
        self.scale = scale
        self.shift = shift + a - b
        self.num = num * (1 / c)
        self.den = den * (1 / c)

    @classmethod
    def const(cls, c, scale: int = 1) -> "LaurentFraction":
        return cls(UniPoly([c]), scale=scale)

    @classmethod
    def u_power(cls, alpha: Fraction, coeff=1) -> "LaurentFraction":
        """coeff * u^alpha."""
        alpha = Fraction(alpha)
        return cls(UniPoly([coeff]), shift=alpha.numerator, scale=alpha.denominator)

    @classmethod
    def from_laurent(cls, p: LaurentPoly, scale: int = 1) -> "LaurentFraction":
        if not p.terms:
            return cls(UniPoly(), scale=scale)
        low = min(p.terms)
        cs = [Fraction(0)] * ((max(p.terms) - low) * scale + 1)
        for k, c in p.terms.items():
            cs[(k - low) * scale] = c
        return cls(UniPoly(cs), shift=low * scale, scale=scale)

    def rescale(self, scale: int) -> "LaurentFraction":
        if scale % self.scale:
            raise ValueError("new scale must be a multiple of the old one")
        r = scale // self.scale
        if r == 1:
            return self

        def spread(p: UniPoly) -> UniPoly:
            cs = [Fraction(0)] * (p.degree() * r + 1)
            for i, c in enumerate(p.coeffs):
                cs[i * r] = c
            return UniPoly(cs)

        out = LaurentFraction.__new__(LaurentFraction)
        out.scale, out.shift = scale, self.shift * r
        out.num, out.den = spread(self.num), spread(self.den)
        return out

    def _common(self, other) -> tuple["LaurentFraction", "LaurentFraction"]:
        if not isinstance(other, LaurentFraction):
            other = LaurentFraction.const(other)
        s = lcm(self.scale, other.scale)
        return self.rescale(s), other.rescale(s)

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        a, b = self._common(other)
        return a.shift == b.shift and a.num == b.num and a.den == b.den

    def __hash__(self) -> int:
        return hash((self.num.coeffs, self.den.coeffs))

    def __add__(self, other) -> "LaurentFraction":
        a, b = self._common(other)
        if not a.num:
            return b
        if not b.num:
            return a
        e = min(a.shift, b.shift)
        na = a.num * UniPoly.monomial(a.shift - e) * b.den
        nb = b.num * UniPoly.monomial(b.shift - e) * a.den
        return LaurentFraction(na + nb, a.den * b.den, e, a.scale)

    __radd__ = __add__

    def __neg__(self) -> "LaurentFraction":
        out = LaurentFraction.__new__(LaurentFraction)
        out.scale, out.shift, out.num, out.den = self.scale, self.shift, -self.num, self.den
        return out

    def __sub__(self, other) -> "LaurentFraction":
        a, b = self._common(other)
        return a + (-b)

    def __rsub__(self, other) -> "LaurentFraction":
        a, b = self._common(other)
        return b + (-a)

    def __mul__(self, other) -> "LaurentFraction":
        a, b = self._common(other)
        if not a.num or not b.num:
            return LaurentFraction(UniPoly(), scale=a.scale)
        return LaurentFraction(a.num * b.num, a.den * b.den, a.shift + b.shift, a.scale)

    __rmul__ = __mul__

    def inverse(self) -> "LaurentFraction":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return LaurentFraction(self.den, self.num, -self.shift, self.scale)

    def __truediv__(self, other) -> "LaurentFraction":
        a, b = self._common(other)
        return a * b.inverse()

    def __rtruediv__(self, other) -> "LaurentFraction":
        a, b = self._common(other)
        return b * a.inverse()

    def evaluate(self, u_root: Fraction) -> Fraction:
        """Value at w = u_root (so u = u_root^scale)."""
        w = Fraction(u_root)
        return w ** self.shift * self.num(w) / self.den(w)

    def _sum_str(self, p: UniPoly, shift: int) -> str:
        parts = []
        for i in range(p.degree(), -1, -1):
            c = p.coeff(i)
            if not c:
                continue
            e = Fraction(i + shift, self.scale)
            if e == 0:
                mono = ""
            elif e == 1:
                mono = "u"
            elif e.denominator == 1:
                mono = f"u^{e.numerator}" if e > 0 else f"u^({e.numerator})"
            else:
                mono = f"u^({e})"
            cs = _fmt(c)
            if mono and cs in ("1", "-1"):
                term = ("-" if cs == "-1" else "") + mono
            elif mono:
                term = f"{cs}*{mono}"
            else:
                term = cs
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ") or "0"

    def to_str(self) -> str:
        num = self._sum_str(self.num, self.shift)
        if self.den == UniPoly([1]):
            return num
        return f"({num})/({self._sum_str(self.den, 0)})"

    def __repr__(self) -> str:
        return f"LaurentFraction({self.to_str()})"


def limit_u_to_1(expr: LaurentFraction) -> Fraction:
    """Value at u = 1 of an expression with a removable singularity there."""
    d1 = expr.den(Fraction(1))
    if d1 == 0:
        raise ValueError("not removable")
    return expr.num(Fraction(1)) / d1


def ratio_factor(alpha: Fraction) -> LaurentFraction:
    """(u - 1) / (u^alpha - 1) for nonzero rational alpha."""
    alpha = Fraction(alpha)
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    top = LaurentFraction.from_laurent(U_MINUS_ONE)
    bottom = LaurentFraction.u_power(alpha) - 1
    return top / bottom


# ---------------------------------------------------------------------------
# rational functions in s


class RationalFunctionS:
    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly | None = None):
        den = den if den is not None else UniPoly([1])
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = UniPoly(), UniPoly([1])
            return
        g = poly_gcd(num, den)
        num, den = num.exact_div(g), den.exact_div(g)
        c = den.lc()
        self.num, self.den = num * (1 / c), den * (1 / c)

    @classmethod
    def const(cls, c) -> "RationalFunctionS":
        return cls(UniPoly([c]))

    def is_zero(self) -> bool:
        return not self.num

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunctionS):
            other = RationalFunctionS.const(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def _co(self, other) -> "RationalFunctionS":
        return other if isinstance(other, RationalFunctionS) else RationalFunctionS.const(other)

    def __add__(self, other) -> "RationalFunctionS":
        other = self._co(other)
        if self.den == other.den:
            return RationalFunctionS(self.num + other.num, self.den)
        return RationalFunctionS(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunctionS":
        return RationalFunctionS(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunctionS":
        return self + (-self._co(other))

    def __mul__(self, other) -> "RationalFunctionS":
        other = self._co(other)
        return RationalFunctionS(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunctionS":
        other = self._co(other)
        return RationalFunctionS(self.num * other.den, self.den * other.num)

    def __call__(self, s) -> Fraction:
        return self.num(Fraction(s)) / self.den(Fraction(s))

    def linear_denominator_factors(self) -> list[tuple[Fraction, int]] | None:
        """Roots r (den = prod (s - r)^k) when den splits over QQ, else None."""
        if self.den.degree() < 1:
            return []
        out = []
        for f, k in factor_univariate(self.den):
            if f.degree() != 1:
                return None
            out.append((-f.coeff(0) / f.coeff(1), k))
        out.sort()
        return out

    def display(self) -> str:
        """Expanded numerator over a product of (nu + N s) factors with integer data."""
        if not self.num:
            return "0"
        roots = self.linear_denominator_factors()
        if roots is None:
            return f"({self.num.to_str('s')})/({self.den.to_str('s')})"
        scale = Fraction(1)
        linear = []
        for r, k in roots:
            nu, big = -r.numerator, r.denominator  # s - r = (nu + big s) / big
            scale *= Fraction(big) ** k
            linear.append([nu, big, k])
        num = self.num * scale
        # absorb a common denominator of the numerator into a simple factor
        common = lcm(*(Fraction(c).denominator for c in num.coeffs))
        if common > 1 and linear:
            simple = [f for f in linear if f[2] == 1] or linear
            target = min(simple, key=lambda f: (f[0], -f[1]))
            if target[2] == 1:
                target[0], target[1] = target[0] * common, target[1] * common
                num = num * common
        factors = []
        for nu, big, k in linear:
            lin = f"{nu}+s" if big == 1 else f"{nu}+{big}s"
            factors.append(f"({lin})" + (f"^{k}" if k > 1 else ""))
        terms = []
        for i, c in enumerate(num.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("s" if i == 1 else f"s^{i}")
            cs = _fmt(c)
            if mono and cs in ("1", "-1"):
                cs = cs[:-1]
            terms.append(cs + mono)
        numtext = "+".join(terms).replace("+-", "-") or "0"
        if not factors:
            return numtext
        if len(terms) > 1:
            numtext = f"({numtext})"
        return f"{numtext}/({''.join(factors)})" if len(factors) > 1 else f"{numtext}/{factors[0]}"

    def to_str(self) -> str:
        if self.den.degree() == 0:
            return self.num.to_str("s")
        return f"({self.num.to_str('s')})/({self.den.to_str('s')})"

    def __repr__(self) -> str:
        return f"RationalFunctionS({self.display()})"


def linear_factor(nu: int, big_n: int) -> RationalFunctionS:
    """1 / (nu + big_n s)."""
    if nu == 0 and big_n == 0:
        raise ValueError("(0, 0) is not a factor")
    return RationalFunctionS(UniPoly([1]), UniPoly([nu, big_n]))


def normalize_ratfunc_s(terms: list[tuple[Fraction, list[tuple[int, int]]]]) -> RationalFunctionS:
    """Sum of c * prod 1/(nu + N s) in lowest terms."""
    # group over a common denominator to keep the gcd work small
    total_mult: Counter = Counter()
    for _, factors in terms:
        for key, k in Counter(factors).items():
            total_mult[key] = max(total_mult[key], k)
    den = UniPoly([1])
    for (nu, big), k in total_mult.items():
        den = den * UniPoly([nu, big]) ** k
    num = UniPoly()
    for c, factors in terms:
        if not c:
            continue
        part = UniPoly([c])
        mine = Counter(factors)
        for (nu, big), k in total_mult.items():
            part = part * UniPoly([nu, big]) ** (k - mine.get((nu, big), 0))
        num = num + part
    return RationalFunctionS(num, den)


# ---------------------------------------------------------------------------
# beta-level zeta functions as rational functions of T


TPoly = dict  # degree in T -> LaurentPoly


def _tpoly_add(a: TPoly, b: TPoly) -> TPoly:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, LaurentPoly()) + v
    return {k: v for k, v in out.items() if v}


def _tpoly_mul(a: TPoly, b: TPoly, cap: int | None = None) -> TPoly:
    out: TPoly = {}
    for i, x in a.items():
        for j, y in b.items():
            if cap is not None and i + j > cap:
                continue
            out[i + j] = out.get(i + j, LaurentPoly()) + x * y
    return {k: v for k, v in out.items() if v}


def _factor_poly(nu: int, big_n: int) -> TPoly:
    return {0: LaurentPoly.const(1), big_n: LaurentPoly.u_power(-nu, -1)}


class ZetaBetaFunction:
    """Sum over strata of A(u) * prod_i a_i / (1 - a_i), a_i = u^(-nu_i) T^(N_i).

    Stored both as the list of stratum terms and as numerator over the
    factored denominator prod (1 - u^(-nu) T^N)^mult.
    """

    def __init__(self, terms: list[tuple[LaurentPoly, list[tuple[int, int]]]]):
        self.terms = [(a, list(f)) for a, f in terms if a]
        mult: Counter = Counter()
        for _, factors in self.terms:
            for key, k in Counter(factors).items():
                mult[key] = max(mult[key], k)
        self.denominator_factors = Counter({k: v for k, v in mult.items() if v})
        num: TPoly = {}
        for a, factors in self.terms:
            part: TPoly = {0: a}
            mine = Counter(factors)
            for nu, big in factors:
                part = _tpoly_mul(part, {big: LaurentPoly.u_power(-nu)})
            for key, k in self.denominator_factors.items():
                for _ in range(k - mine.get(key, 0)):
                    part = _tpoly_mul(part, _factor_poly(*key))
            num = _tpoly_add(num, part)
        self.numerator = num

    def is_zero(self) -> bool:
        return not self.numerator

    def _expanded_denominator(self) -> TPoly:
        den: TPoly = {0: LaurentPoly.const(1)}
        for key, k in self.denominator_factors.items():
            for _ in range(k):
                den = _tpoly_mul(den, _factor_poly(*key))
        return den

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZetaBetaFunction):
            return NotImplemented
        lhs = _tpoly_mul(self.numerator, other._expanded_denominator())
        rhs = _tpoly_mul(other.numerator, self._expanded_denominator())
        return lhs == rhs

    def __hash__(self) -> int:
        return id(self)

    def series_coefficients(self, n_max: int) -> list[LaurentPoly]:
        """Coefficients of T^0 .. T^n_max of the power series expansion."""
        acc: TPoly = {k: v for k, v in self.numerator.items() if k <= n_max}
        for (nu, big), k in self.denominator_factors.items():
            geo: TPoly = {}
            j = 0
            while j * big <= n_max:
                geo[j * big] = LaurentPoly.u_power(-nu * j)
                j += 1
            for _ in range(k):
                acc = _tpoly_mul(acc, geo, cap=n_max)
        return [acc.get(n, LaurentPoly()) for n in range(n_max + 1)]

    def numerator_str(self) -> str:
        if not self.numerator:
            return "0"
        parts = []
        for n in sorted(self.numerator):
            c = self.numerator[n].to_str()
            mono = "" if n == 0 else ("T" if n == 1 else f"T^{n}")
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def denominator_str(self) -> str:
        parts = []
        for (nu, big), k in sorted(self.denominator_factors.items()):
            tpart = "T" if big == 1 else f"T^{big}"
            f = f"(1 - u^(-{nu})*{tpart})"
            parts.append(f + (f"^{k}" if k > 1 else ""))
        return "*".join(parts) or "1"

    def terms_str(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for a, factors in self.terms:
            fs = "*".join(
                f"[u^(-{nu}){_t_power(big)}/(1-u^(-{nu}){_t_power(big)})]" for nu, big in factors
            )
            out.append(f"({a.to_str()})*{fs}")
        return " + ".join(out)

    def __repr__(self) -> str:
        return f"ZetaBetaFunction({self.numerator_str()} / {self.denominator_str()})"


def _t_power(n: int) -> str:
    return "T" if n == 1 else f"T^{n}"


def series_coefficients(z: ZetaBetaFunction, n_max: int) -> list[LaurentPoly]:
    return z.series_coefficients(n_max)
