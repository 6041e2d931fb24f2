"""Exact coefficient arithmetic: ratios of integer polynomials in v, with v^2 = q.

A polynomial is a tuple of ints, index = degree, no trailing zeros; () is zero.
VRat is the fraction field, kept in a canonical form so that equality of
coefficients is plain structural equality.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Tuple

Poly = Tuple[int, ...]

PZERO: Poly = ()
PONE: Poly = (1,)


def pnorm(coeffs: Iterable[int]) -> Poly:
    """Strip trailing zero coefficients."""
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def pdeg(p: Poly) -> int:
    # degree of the zero polynomial is -1 by convention
    return len(p) - 1


def padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    c = list(a)
    for i, x in enumerate(b):
        c[i] += x
    return pnorm(c)


def pneg(a: Poly) -> Poly:
    return tuple(-x for x in a)


def psub(a: Poly, b: Poly) -> Poly:
    return padd(a, pneg(b))


def pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return PZERO
    c = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                c[i + j] += x * y
    return pnorm(c)


def pscale(a: Poly, k: int) -> Poly:
    if k == 0:
        return PZERO
    return tuple(x * k for x in a)


def pshift(a: Poly, k: int) -> Poly:
    """Multiply by v^k, k >= 0."""
    if not a:
        return PZERO
    return (0,) * k + a


def pcontent(a: Poly) -> int:
    c = 0
    for x in a:
        c = gcd(c, x)
    return c


def pprimitive(a: Poly) -> Poly:
    """Primitive part with positive leading coefficient; () stays ()."""
    if not a:
        return PZERO
    c = pcontent(a)
    if a[-1] < 0:
        c = -c
    return tuple(x // c for x in a)


def pdivmod_q(a: Poly, b: Poly) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Long division over Q; returns (quotient, remainder) as Fraction tuples."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(x) for x in a]
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(rem) >= len(b):
        if rem[-1] == 0:
            rem.pop()
            continue
        k = len(rem) - len(b)
        f = rem[-1] / lead
        quo[k] = f
        for i, x in enumerate(b):
            rem[i + k] -= f * x
        assert rem[-1] == 0
        rem.pop()
    while rem and rem[-1] == 0:
        rem.pop()
    return tuple(quo), tuple(rem)


def pdiv_exact(a: Poly, b: Poly) -> Poly:
    """Exact division in Z[v]; raises if b does not divide a over Z."""
    quo, rem = pdivmod_q(a, b)
    if rem:
        raise ArithmeticError("inexact polynomial division")
    if any(f.denominator != 1 for f in quo):
        raise ArithmeticError("quotient not integral")
    return pnorm(int(f) for f in quo)


def pgcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd in Z[v] (positive leading coefficient)."""
    a, b = pprimitive(a), pprimitive(b)
    while b:
        if len(a) < len(b):
            a, b = b, a
            continue
        # fraction-free remainder: scale only as much as integrality needs
        rem = list(a)
        while len(rem) >= len(b):
            if rem[-1] == 0:
                rem.pop()
                continue
            g = gcd(rem[-1], b[-1])
            mult, q = b[-1] // g, rem[-1] // g
            if mult != 1:
                rem = [x * mult for x in rem]
            k = len(rem) - len(b)
            for i, x in enumerate(b):
                rem[i + k] -= q * x
            rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
        a, b = b, pprimitive(tuple(rem))
    return a


def _valuation(p: Poly) -> int:
    i = 0
    while not p[i]:
        i += 1
    return i


def peval(a: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def pstr(a: Poly) -> str:
    """Print like 'v^2-1', '2*v', '-v^3+v-4', '0'."""
    if not a:
        return "0"
    parts = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            var = "v" if k == 1 else f"v^{k}"
            body = var if mag == 1 else f"{mag}*{var}"
        parts.append(sign + body)
    return "".join(parts)


def pparse(s: str) -> Poly:
    """Inverse of pstr."""
    s = s.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    if s == "0":
        return PZERO
    # split into signed terms
    terms = []
    buf = ""
    for i, ch in enumerate(s):
        if ch in "+-" and i > 0 and s[i - 1] not in "+-^*":
            terms.append(buf)
            buf = ch
        else:
            buf += ch
    terms.append(buf)
    coeffs: dict[int, int] = {}
    for t in terms:
        sign = 1
        while t and t[0] in "+-":
            if t[0] == "-":
                sign = -sign
            t = t[1:]
        if not t:
            raise ValueError(f"malformed term in polynomial: {s!r}")
        if "v" not in t:
            c, k = int(t), 0
        else:
            head, _, tail = t.partition("v")
            c = int(head.rstrip("*")) if head.rstrip("*") else 1
            if tail.startswith("^"):
                k = int(tail[1:])
            elif tail:
                raise ValueError(f"malformed term in polynomial: {s!r}")
            else:
                k = 1
        if k < 0:
            raise ValueError("negative exponent in polynomial")
        coeffs[k] = coeffs.get(k, 0) + sign * c
    out = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return pnorm(out)


class VRat:
    """Element of the coefficient field: num/den with num, den in Z[v], canonical.

    Canonical form: polynomial gcd cancelled, joint integer content 1,
    denominator has positive leading coefficient.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=PONE):
        if isinstance(num, int):
            num = (num,) if num else PZERO
        if isinstance(den, int):
            den = (den,) if den else PZERO
        num, den = pnorm(num), pnorm(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            den = PONE
        else:
            # shared power of v cancels cheaply, and most denominators here
            # are plain v-powers, so the polynomial gcd is usually avoidable
            va, vb = _valuation(num), _valuation(den)
            m = va if va < vb else vb
            if m:
                num, den = num[m:], den[m:]
            if len(num) > 1 and len(den) > 1:
                g = pgcd(num, den)
                if len(g) > 1:
                    num, den = pdiv_exact(num, g), pdiv_exact(den, g)
            c = gcd(pcontent(num), pcontent(den))
            if c > 1:
                num = tuple(x // c for x in num)
                den = tuple(x // c for x in den)
        if den[-1] < 0:
            num, den = pneg(num), pneg(den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("VRat is immutable")

    @staticmethod
    def v_pow(k: int) -> "VRat":
        """v^k for any integer k."""
        if k >= 0:
            return VRat(pshift(PONE, k))
        return VRat(PONE, pshift(PONE, -k))

    @staticmethod
    def from_fraction(f: Fraction) -> "VRat":
        return VRat(f.numerator, f.denominator)

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == PONE and self.den == PONE

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = VRat(other)
        if not isinstance(other, VRat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if isinstance(other, int):
            other = VRat(other)
        if not isinstance(other, VRat):
            return NotImplemented
        return VRat(padd(pmul(self.num, other.den), pmul(other.num, self.den)),
                    pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self) -> "VRat":
        return VRat(pneg(self.num), self.den)

    def __sub__(self, other):
        if isinstance(other, int):
            other = VRat(other)
        if not isinstance(other, VRat):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "VRat":
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = VRat(other)
        if not isinstance(other, VRat):
            return NotImplemented
        return VRat(pmul(self.num, other.num), pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            other = VRat(other)
        if not isinstance(other, VRat):
            return NotImplemented
        return VRat(pmul(self.num, other.den), pmul(self.den, other.num))

    def __rtruediv__(self, other) -> "VRat":
        if isinstance(other, int):
            other = VRat(other)
        return other / self

    def __pow__(self, k: int) -> "VRat":
        if k < 0:
            return VRat(self.den, self.num) ** (-k)
        out = VRat(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def eval(self, v: Fraction) -> Fraction:
        d = peval(self.den, v)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at v={v}")
        return peval(self.num, v) / d

    def is_constant(self) -> bool:
        return pdeg(self.num) <= 0 and pdeg(self.den) <= 0

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        return Fraction(self.num[0] if self.num else 0, self.den[0])

    def __str__(self) -> str:
        return f"({pstr(self.num)})/({pstr(self.den)})"

    __repr__ = __str__

    @staticmethod
    def parse(s: str) -> "VRat":
        """Inverse of str: '(v^2-1)/(1)'; also accepts a bare polynomial."""
        s = s.replace(" ", "")
        if s.startswith("(") and ")/(" in s and s.endswith(")"):
            num_s, den_s = s[1:-1].split(")/(")
            return VRat(pparse(num_s), pparse(den_s))
        return VRat(pparse(s))


VR_ZERO = VRat(0)
VR_ONE = VRat(1)
