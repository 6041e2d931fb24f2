"""Rank-one intertwiner calculus and the finite character-sum mechanism.

The 2x2 J-matrices between the two Borel directions, their composite scalar

    q^{-1} + (1 - q^{-1})^2 / ((1 - z)(1 - z^{-1})),       q = v^2,

the reducibility points it forces, and exact character sums over the unit
group of Z/p^k (the residue-field stand-in for the unit-integral vanishing).
"""
from __future__ import annotations

import math

from .label_params import ParamPair
from .mu_function import PoleZeroProfile, q_from_poles
from .qfield import VRat
from .root_data import SizeLimitError
from .xlaurent import L_ONE, Laurent, LaurentRatio, shaped_roots

Q_INV = VRat.v_pow(-2)

DIRECTIONS = ("P->Pop", "Pop->P")

MODULUS_CAP = 10 ** 4


class JMatrix:
    """2x2 intertwiner matrix; entries are rational functions of z over Q(v)."""

    __slots__ = ("direction", "entries")

    def __init__(self, direction: str, entries):
        if direction not in DIRECTIONS:
            raise ValueError(f"direction must be one of {DIRECTIONS}")
        object.__setattr__(self, "direction", direction)
        object.__setattr__(self, "entries", tuple(tuple(row) for row in entries))

    def __setattr__(self, *a):
        raise AttributeError("JMatrix is immutable")

    def entry(self, i: int, j: int) -> LaurentRatio:
        return self.entries[i][j]

    def to_json(self) -> dict:
        return {"direction": self.direction,
                "entries": [[e.to_str("z") for e in row] for row in self.entries]}

    def __repr__(self):
        rows = "; ".join(", ".join(e.to_str("z") for e in row) for row in self.entries)
        return f"JMatrix({self.direction}: {rows})"


def j_matrix(direction: str) -> JMatrix:
    """The two displayed rank-one intertwiner matrices (unramified case)."""
    one = LaurentRatio.const(1)
    qi = LaurentRatio.const(Q_INV)
    b = Laurent.const(VRat(1) - Q_INV)
    z, zi = Laurent.x_pow(1), Laurent.x_pow(-1)
    if direction == "P->Pop":
        rows = ((qi, LaurentRatio(b, L_ONE - z)),
                (LaurentRatio(b, zi - L_ONE), one))
    elif direction == "Pop->P":
        rows = ((one, LaurentRatio(b, z - L_ONE)),
                (LaurentRatio(b, L_ONE - zi), qi))
    else:
        raise ValueError(f"direction must be one of {DIRECTIONS}")
    return JMatrix(direction, rows)


def compose(a: JMatrix, b: JMatrix):
    """Matrix product a*b as a plain 2x2 tuple of rational functions."""
    return tuple(
        tuple(sum((a.entries[i][k] * b.entries[k][j] for k in (0, 1)),
                  LaurentRatio.const(0))
              for j in (0, 1))
        for i in (0, 1))


def composite_scalar() -> LaurentRatio:
    """q^{-1} + (1-q^{-1})^2 / ((1-z)(1-z^{-1})), as written."""
    z, zi = Laurent.x_pow(1), Laurent.x_pow(-1)
    b = VRat(1) - Q_INV
    return (LaurentRatio.const(Q_INV)
            + LaurentRatio(Laurent.const(b * b), (L_ONE - z) * (L_ONE - zi)))


def is_scalar_identity(mat, s: LaurentRatio) -> bool:
    return (mat[0][0] == s and mat[1][1] == s
            and mat[0][1].is_zero() and mat[1][0].is_zero())


def reciprocal_scalar_profile() -> PoleZeroProfile:
    """Pole/zero profile of 1/composite_scalar in the z coordinate."""
    s = composite_scalar()
    zn, ln = shaped_roots(s.num)
    zd, ld = shaped_roots(s.den)
    assert len(ln.terms()) == 1 and len(ld.terms()) == 1
    net: dict = dict(zd)
    for key, o in zn.items():
        net[key] = net.get(key, 0) - o
    zeros, poles = {}, {}
    from fractions import Fraction
    for (sg, k), o in net.items():
        if o > 0:
            zeros[(sg, Fraction(k, 2))] = o
        elif o < 0:
            poles[(sg, Fraction(k, 2))] = -o
    return PoleZeroProfile(zeros, poles)


def reducibility_points() -> ParamPair:
    """Parameters forced by the composite scalar: computed, not quoted."""
    return q_from_poles(reciprocal_scalar_profile())


def _factor_prime_power(m: int):
    for p in range(2, m + 1):
        if p * p > m:
            p = m
        if m % p == 0:
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            if m != 1:
                raise ValueError("modulus must be a prime power")
            return p, k
    raise ValueError("modulus must be a prime power")


def _units(m: int):
    return [u for u in range(1, m) if math.gcd(u, m) == 1]


def _mult_order(g: int, m: int, phi: int) -> int:
    order = phi
    n = phi
    for p in range(2, n + 1):
        while n % p == 0:
            n //= p
            while order % p == 0 and pow(g, order // p, m) == 1:
                order //= p
    return order


class FiniteCharacter:
    """Character of (Z/p^k)^x with values recorded as exponents of zeta_phi."""

    __slots__ = ("modulus", "phi", "generator", "index", "exps")

    def __init__(self, modulus: int, index: int = 0):
        if modulus > MODULUS_CAP:
            raise SizeLimitError(f"modulus {modulus} exceeds {MODULUS_CAP}")
        p, k = _factor_prime_power(modulus)
        if p == 2 and k > 2:
            raise ValueError(f"unit group mod {modulus} is not cyclic")
        units = _units(modulus)
        phi = len(units)
        gen = next(g for g in units if _mult_order(g, modulus, phi) == phi)
        index %= phi if phi else 1
        exps = {}
        u, e = 1, 0
        for _ in range(phi):
            exps[u] = e
            u = u * gen % modulus
            e = (e + index) % phi
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "generator", gen)
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "exps", exps)

    def __setattr__(self, *a):
        raise AttributeError("FiniteCharacter is immutable")

    @classmethod
    def from_table(cls, modulus: int, table: dict) -> "FiniteCharacter":
        """Build from an explicit unit -> exponent table; must be a homomorphism."""
        probe = cls(modulus, 0)
        if set(table) != set(probe.exps):
            raise ValueError("table keys must be exactly the units")
        phi = probe.phi
        index = table[probe.generator] % phi if phi else 0
        chi = cls(modulus, index)
        for u, e in table.items():
            if e % phi != chi.exps[u]:
                raise ValueError(f"table is not multiplicative at {u}")
        return chi

    def exponent(self, u: int) -> int:
        """chi(u) = zeta_phi^exponent(u)."""
        return self.exps[u % self.modulus]

    def is_trivial(self) -> bool:
        return self.index == 0

    def __repr__(self):
        return f"FiniteCharacter(mod {self.modulus}, index {self.index}/{self.phi})"


def _poly_divmod_monic(num: list, den: list):
    num = list(num)
    dd = len(den) - 1
    quo = [0] * max(len(num) - dd, 0)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if not c:
            continue
        quo[i - dd] = c
        for j, d in enumerate(den):
            num[i - dd + j] -= c * d
    while num and num[-1] == 0:
        num.pop()
    return quo, num


_cyclo_cache: dict = {1: [-1, 1]}


def cyclotomic(n: int) -> list:
    """Coefficients of the n-th cyclotomic polynomial, low degree first."""
    if n in _cyclo_cache:
        return _cyclo_cache[n]
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod_monic(num, cyclotomic(d))
            assert not rem
    _cyclo_cache[n] = num
    return num


def char_sum(chi: FiniteCharacter) -> int:
    """Exact sum of chi over the units, reduced in Z[zeta_phi]."""
    counts = [0] * chi.phi
    for e in chi.exps.values():
        counts[e] += 1
    _, rem = _poly_divmod_monic(counts, cyclotomic(chi.phi))
    if len(rem) > 1:
        raise ArithmeticError("character sum is not a rational integer")
    return rem[0] if rem else 0


def ramified_rule(chi: FiniteCharacter) -> str:
    """Which side of the mu-support dichotomy a ramified character lands on."""
    if chi.is_trivial():
        return "alpha in Sigma_{O,mu}"
    return "alpha not in Sigma_{O,mu}"
