"""Exact arithmetic in Q and in the rational function field Q(t).

Elements of Q(t) carry the t-adic valuation: the order of vanishing at
t = 0.  All arithmetic is exact; the valuation of zero is an error, never
an encoded infinity.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

Rational = Fraction


# ---------------------------------------------------------------------------
# dense polynomials over Q, represented as tuples of Fractions, no trailing 0
# ---------------------------------------------------------------------------

def _trim(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def poly_add(a, b):
    n = max(len(a), len(b))
    return _trim([ (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                   for i in range(n) ])


def poly_neg(a):
    return tuple(-x for x in a)


def poly_mul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _trim(out)


def poly_divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(r) >= len(b) and any(r):
        r = _trim(r)
        if len(r) < len(b):
            break
        k = len(r) - 1 - db
        c = r[-1] / lb
        q[k] = c
        r = list(r)
        for i in range(len(b)):
            r[k + i] -= c * b[i]
        r = list(_trim(r))
    return _trim(q), _trim(r)


def poly_gcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a:
        lc = a[-1]
        a = tuple(x / lc for x in a)
    return a


def poly_trailing(a):
    for i, x in enumerate(a):
        if x:
            return i
    raise ValueError("zero polynomial has no trailing term")


class RatFn:
    """An element of Q(t) in reduced form with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num=(), den=(Fraction(1),), _reduced=False):
        if isinstance(num, (int, Fraction)):
            num = (Fraction(num),) if num else ()
        if isinstance(den, (int, Fraction)):
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            den = (Fraction(den),)
        num = _trim(tuple(Fraction(x) for x in num))
        den = _trim(tuple(Fraction(x) for x in den))
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            if num:
                g = poly_gcd(num, den)
                if len(g) > 1:
                    num, _ = poly_divmod(num, g)
                    den, _ = poly_divmod(den, g)
            else:
                den = (Fraction(1),)
            lc = den[-1]
            if lc != 1:
                num = tuple(x / lc for x in num)
                den = tuple(x / lc for x in den)
        self.num = num
        self.den = den

    # -- constructors -------------------------------------------------------

    @staticmethod
    def t_power(k: int) -> "RatFn":
        """t**k for any integer k."""
        if k >= 0:
            return RatFn((Fraction(0),) * k + (Fraction(1),), (Fraction(1),), _reduced=True)
        return RatFn((Fraction(1),), (Fraction(0),) * (-k) + (Fraction(1),), _reduced=True)

    @staticmethod
    def const(q) -> "RatFn":
        return RatFn(Fraction(q), 1)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFn(other, 1)
        return isinstance(other, RatFn) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFn(other, 1)
        return RatFn(poly_add(poly_mul(self.num, other.den), poly_mul(other.num, self.den)),
                     poly_mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFn(poly_neg(self.num), self.den, _reduced=True)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFn(other, 1)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFn(other, 1)
        return RatFn(poly_mul(self.num, other.num), poly_mul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFn(other, 1)
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(t)")
        return RatFn(poly_mul(self.num, other.den), poly_mul(self.den, other.num))

    def __rtruediv__(self, other):
        return RatFn(other, 1) / self

    # -- valuation ----------------------------------------------------------

    def valuation(self) -> int:
        """Order of vanishing at t = 0; rejects the zero element."""
        if not self.num:
            raise ValueError("valuation of 0 is undefined")
        return poly_trailing(self.num) - poly_trailing(self.den)

    def leading_coefficient(self) -> Fraction:
        """Value of t**(-valuation) * self at t = 0."""
        if not self.num:
            raise ValueError("leading coefficient of 0 is undefined")
        return self.num[poly_trailing(self.num)] / self.den[poly_trailing(self.den)]

    def truncated(self, order: int):
        """Coefficients of t^v, ..., t^(order) in the Laurent expansion at 0,
        returned as a dict {exponent: Fraction}.  Used by witness tuning."""
        if not self.num:
            return {}
        v = self.valuation()
        out = {}
        # series division num/den around t=0 after shifting out valuations
        tn, td = poly_trailing(self.num), poly_trailing(self.den)
        num = self.num[tn:]
        den = self.den[td:]
        k = order - v + 1
        if k <= 0:
            return {}
        inv = [Fraction(0)] * k
        inv[0] = 1 / den[0]
        for i in range(1, k):
            s = Fraction(0)
            for j in range(1, min(i, len(den) - 1) + 1):
                s += den[j] * inv[i - j]
            inv[i] = -s / den[0]
        for i in range(k):
            s = Fraction(0)
            for j in range(0, min(i, len(num) - 1) + 1):
                s += num[j] * inv[i - j]
            if s:
                out[v + i] = s
        return out

    # -- text format ---------------------------------------------------------

    def __repr__(self):
        return "RatFn(%s)" % format_ratfn(self)

    def __str__(self):
        return format_ratfn(self)


def valuation(f: RatFn) -> int:
    return f.valuation()


def leading_coefficient(f: RatFn) -> Fraction:
    return f.leading_coefficient()


def field_arithmetic(f: RatFn, g: RatFn, op: str) -> RatFn:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "div":
        return f / g
    raise ValueError("unknown operation %r" % op)


# ---------------------------------------------------------------------------
# text format: integer-coefficient fraction strings like
#   (3*t^2 + t^3)/(1 + 2*t)
# Grammar:  ratfn := poly | '(' poly ')' '/' '(' poly ')'
#           poly  := [+-]? term ([+-] term)*
#           term  := int | int '*' tpow | tpow ;  tpow := 't' ('^' int)?
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-]?)\s*(?:"
    r"(?P<coef>\d+)\s*(?:\*\s*t(?:\^(?P<exp1>\d+))?)?"
    r"|t(?:\^(?P<exp2>\d+))?"
    r")\s*")


def _parse_poly(s: str):
    coeffs = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError("cannot parse polynomial at %r" % s[pos:])
        sign = -1 if m.group("sign") == "-" else 1
        if not first and m.group("sign") == "":
            raise ValueError("missing sign between terms in %r" % s)
        if m.group("coef") is not None:
            c = int(m.group("coef"))
            e = 0 if m.group("exp1") is None and "t" not in s[m.start():m.end()] else \
                int(m.group("exp1") or (1 if "t" in s[m.start():m.end()] else 0))
            if "t" in s[m.start():m.end()] and m.group("exp1") is None:
                e = 1
        else:
            c = 1
            e = int(m.group("exp2") or 1)
        coeffs[e] = coeffs.get(e, 0) + sign * c
        pos = m.end()
        first = False
    if not coeffs:
        return ()
    deg = max(coeffs)
    return _trim([Fraction(coeffs.get(i, 0)) for i in range(deg + 1)])


def parse_ratfn(s: str) -> RatFn:
    s = s.strip()
    if s.startswith("(") and ")/(" in s and s.endswith(")"):
        numtxt, dentxt = s[1:-1].split(")/(", 1)
        return RatFn(_parse_poly(numtxt), _parse_poly(dentxt))
    return RatFn(_parse_poly(s), (Fraction(1),))


def _format_poly(c) -> str:
    if not c:
        return "0"
    parts = []
    for e, x in enumerate(c):
        if not x:
            continue
        ax = abs(x)
        if e == 0:
            body = str(ax)
        elif e == 1:
            body = "t" if ax == 1 else "%s*t" % ax
        else:
            body = "t^%d" % e if ax == 1 else "%s*t^%d" % (ax, e)
        parts.append(("- " if x < 0 else "+ ") + body)
    out = " ".join(parts)
    return out[2:] if out.startswith("+ ") else "-" + out[2:]


def format_ratfn(f: RatFn) -> str:
    """Canonical text form with integer coefficients."""
    num, den = f.num, f.den
    # scale to integer coefficients
    mult = 1
    for x in list(num) + list(den):
        mult = mult * x.denominator // gcd(mult, x.denominator)
    num = tuple(x * mult for x in num)
    den = tuple(x * mult for x in den)
    g = gcd_int_list([int(x) for x in num] + [int(x) for x in den])
    if g > 1:
        num = tuple(x / g for x in num)
        den = tuple(x / g for x in den)
    if den == (1,) or den == (Fraction(1),):
        return _format_poly(num)
    return "(%s)/(%s)" % (_format_poly(num), _format_poly(den))


def gcd_int_list(v):
    g = 0
    for x in v:
        g = gcd(g, abs(x))
        if g == 1:
            break
    return max(g, 1)
