"""Laurent polynomials and rational functions in one symbol over the v-field.

Used for the lattice direction X_alpha in cross relations and mu-factors, and
for the variable z in rank-one intertwiners.  Coefficients are VRat.
"""
from __future__ import annotations

from .qfield import VRat, VR_ONE


class Laurent:
    """Finite sum of c_e * X^e with e in Z and c_e in the v-field."""

    __slots__ = ("c",)

    def __init__(self, coeffs: dict[int, VRat] | None = None):
        c = {}
        for e, x in (coeffs or {}).items():
            if isinstance(x, int):
                x = VRat(x)
            if not x.is_zero():
                c[e] = x
        object.__setattr__(self, "c", c)

    def __setattr__(self, *a):
        raise AttributeError("Laurent is immutable")

    @staticmethod
    def x_pow(e: int, coeff: VRat | int = 1) -> "Laurent":
        return Laurent({e: coeff})

    @staticmethod
    def const(x: VRat | int) -> "Laurent":
        return Laurent({0: x})

    def is_zero(self) -> bool:
        return not self.c

    def __eq__(self, other) -> bool:
        if not isinstance(other, Laurent):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(tuple(sorted(self.c.items(), key=lambda t: t[0])))

    def __add__(self, other: "Laurent") -> "Laurent":
        c = dict(self.c)
        for e, x in other.c.items():
            c[e] = c.get(e, VRat(0)) + x
        return Laurent(c)

    def __neg__(self) -> "Laurent":
        return Laurent({e: -x for e, x in self.c.items()})

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __mul__(self, other) -> "Laurent":
        if isinstance(other, (VRat, int)):
            return Laurent({e: x * other for e, x in self.c.items()})
        c: dict[int, VRat] = {}
        for e1, x1 in self.c.items():
            for e2, x2 in other.c.items():
                e = e1 + e2
                c[e] = c.get(e, VRat(0)) + x1 * x2
        return Laurent(c)

    __rmul__ = __mul__

    def shift(self, k: int) -> "Laurent":
        """Multiply by X^k."""
        return Laurent({e + k: x for e, x in self.c.items()})

    def inv_x(self) -> "Laurent":
        """Substitute X -> X^{-1}."""
        return Laurent({-e: x for e, x in self.c.items()})

    def min_exp(self) -> int:
        return min(self.c) if self.c else 0

    def max_exp(self) -> int:
        return max(self.c) if self.c else 0

    def subst(self, val: VRat) -> VRat:
        """Evaluate at X = val (val must be invertible if negative exponents occur)."""
        out = VRat(0)
        for e, x in self.c.items():
            out = out + x * val ** e
        return out

    def terms(self):
        return sorted(self.c.items(), key=lambda t: t[0])

    def to_str(self, symbol: str = "X") -> str:
        if not self.c:
            return "0"
        parts = []
        for e, x in sorted(self.c.items(), key=lambda t: -t[0]):
            cs = _coeff_str(x)
            if e == 0:
                body = cs
            else:
                xs = symbol if e == 1 else f"{symbol}^{e}"
                body = xs if cs == "1" else (f"-{xs}" if cs == "-1" else f"{cs}*{xs}")
            if parts and not body.startswith("-"):
                parts.append("+" + body)
            else:
                parts.append(body)
        return "".join(parts)

    __repr__ = to_str


def _coeff_str(x: VRat) -> str:
    from .qfield import pstr, PONE
    if x.den == PONE:
        s = pstr(x.num)
        # parenthesize sums so the printed term is unambiguous
        if any(ch in s[1:] for ch in "+-"):
            return f"({s})"
        return s
    return str(x)


L_ZERO = Laurent()
L_ONE = Laurent.const(1)


def div_exact(f: Laurent, g: Laurent) -> Laurent:
    """Exact Laurent division f/g; raises ArithmeticError on nonzero remainder."""
    if g.is_zero():
        raise ZeroDivisionError("Laurent division by zero")
    if f.is_zero():
        return L_ZERO
    mf, mg = f.min_exp(), g.min_exp()
    # reduce to ordinary polynomial division in X
    fp = {e - mf: x for e, x in f.c.items()}
    gp = {e - mg: x for e, x in g.c.items()}
    dg = max(gp)
    lead = gp[dg]
    quo: dict[int, VRat] = {}
    rem = dict(fp)
    while rem:
        dr = max(rem)
        if dr < dg:
            raise ArithmeticError("inexact Laurent division")
        q = rem[dr] / lead
        quo[dr - dg] = q
        for e, x in gp.items():
            k = e + dr - dg
            val = rem.get(k, VRat(0)) - q * x
            if val.is_zero():
                rem.pop(k, None)
            else:
                rem[k] = val
    return Laurent(quo).shift(mf - mg)


def synth_div(f: Laurent, root: VRat) -> tuple["Laurent", VRat]:
    """Divide f by (X - root); returns (quotient, rem) with f = (X-root)*quotient + rem*X^min.

    rem is zero iff root is a root of f (roots must be invertible values).
    """
    if f.is_zero():
        return L_ZERO, VRat(0)
    m = f.min_exp()
    n = f.max_exp() - m
    a = [f.c.get(m + i, VRat(0)) for i in range(n + 1)]
    b = [VRat(0)] * n
    acc = a[n]
    for i in range(n - 1, -1, -1):
        b[i] = acc
        acc = a[i] + acc * root
    return Laurent({m + i: b[i] for i in range(n)}), acc


def shaped_roots(f: Laurent, max_vexp: int | None = None):
    """Extract all roots of the shape sign * v^k with multiplicity.

    Returns ({(sign, k): multiplicity}, leftover) where leftover has no roots of
    that shape in the searched range.  The search range for k defaults to the
    v-degree span of the coefficients, which bounds any such root.
    """
    if f.is_zero():
        raise ZeroDivisionError("zero polynomial has no root profile")
    if max_vexp is None:
        degs = []
        for _, x in f.terms():
            degs.append(len(x.num) - 1)
            degs.append(-(len(x.den) - 1))
        max_vexp = max(degs) - min(degs) + 1
    roots: dict[tuple[int, int], int] = {}
    for sign in (1, -1):
        for k in range(-max_vexp, max_vexp + 1):
            val = VRat.v_pow(k) * sign
            while f.subst(val).is_zero():
                f, rem = synth_div(f, val)
                assert rem.is_zero()
                roots[(sign, k)] = roots.get((sign, k), 0) + 1
    return roots, f


class LaurentRatio:
    """Ratio of two Laurent polynomials; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: Laurent, den: Laurent = L_ONE):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("LaurentRatio is immutable")

    @staticmethod
    def const(x: VRat | int) -> "LaurentRatio":
        return LaurentRatio(Laurent.const(x))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentRatio):
            return NotImplemented
        return (self.num * other.den) == (other.num * self.den)

    def __add__(self, other: "LaurentRatio") -> "LaurentRatio":
        return LaurentRatio(self.num * other.den + other.num * self.den,
                            self.den * other.den)

    def __neg__(self) -> "LaurentRatio":
        return LaurentRatio(-self.num, self.den)

    def __sub__(self, other: "LaurentRatio") -> "LaurentRatio":
        return self + (-other)

    def __mul__(self, other) -> "LaurentRatio":
        if isinstance(other, (VRat, int)):
            return LaurentRatio(self.num * other, self.den)
        return LaurentRatio(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: "LaurentRatio") -> "LaurentRatio":
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero ratio")
        return LaurentRatio(self.num * other.den, self.den * other.num)

    def inv_x(self) -> "LaurentRatio":
        return LaurentRatio(self.num.inv_x(), self.den.inv_x())

    def to_str(self, symbol: str = "X") -> str:
        return f"({self.num.to_str(symbol)})/({self.den.to_str(symbol)})"

    __repr__ = to_str
