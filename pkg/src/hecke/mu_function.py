"""Rank-one mu-factors: factored form, pole/zero profiles, parameter recovery.

The rank-one factor attached to parameters (q_a, q_{a*}) = (q_F^e, q_F^{e*}),
as a rational function of the coordinate X on the unramified line:

    mu(X) = c' (1-X)(1-X^{-1})(1+X)(1+X^{-1})
            / ((1-q_a^{-1}X)(1-q_a^{-1}X^{-1})(1+q_{a*}^{-1}X)(1+q_{a*}^{-1}X^{-1}))

Zeros and poles all have the shape (+-1) * q_F^(half-integer); they are pulled
out by exact synthetic division, never numerically.
"""
from __future__ import annotations

from fractions import Fraction

from .label_params import ParamPair
from .qfield import VR_ONE, VRat
from .root_data import RootSystem
from .xlaurent import L_ONE, Laurent, shaped_roots


def _half_vexp(e: Fraction) -> int:
    two_e = 2 * e
    if two_e.denominator != 1:
        raise ValueError(f"exponent {e} is not a half-integer")
    return int(two_e)


class MuFactor:
    """One rank-one factor in factored (numerator, denominator) form."""

    __slots__ = ("pair", "c_prime", "symbol", "num", "den")

    def __init__(self, e_alpha, e_star=0, c_prime=1, symbol="X"):
        pair = ParamPair(e_alpha, e_star)
        c_prime = Fraction(c_prime)
        if c_prime <= 0:
            raise ValueError(f"c' must be positive, got {c_prime}")
        qa_inv = VRat.v_pow(-_half_vexp(pair.e_alpha))
        qs_inv = VRat.v_pow(-_half_vexp(pair.e_star))
        x, xi = Laurent.x_pow(1), Laurent.x_pow(-1)
        num = Laurent.const(VRat.from_fraction(c_prime))
        den = L_ONE
        # q = 1 on a block cancels it exactly; keep the reduced form so that
        # evaluation is defined away from the true poles only
        if pair.e_alpha > 0:
            num = num * (L_ONE - x) * (L_ONE - xi)
            den = den * (L_ONE - Laurent.x_pow(1, qa_inv)) * (L_ONE - Laurent.x_pow(-1, qa_inv))
        if pair.e_star > 0:
            num = num * (L_ONE + x) * (L_ONE + xi)
            den = den * (L_ONE + Laurent.x_pow(1, qs_inv)) * (L_ONE + Laurent.x_pow(-1, qs_inv))
        object.__setattr__(self, "pair", pair)
        object.__setattr__(self, "c_prime", c_prime)
        object.__setattr__(self, "symbol", symbol)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("MuFactor is immutable")

    def is_constant(self) -> bool:
        return self.pair == ParamPair(0, 0)

    def value_at(self, x: VRat) -> VRat:
        return self.num.subst(x) / self.den.subst(x)

    def inversion_invariant(self) -> bool:
        left = self.num * self.den.inv_x()
        right = self.num.inv_x() * self.den
        return left == right

    def __eq__(self, other) -> bool:
        """Equality up to a positive constant (c' is not canonical)."""
        if not isinstance(other, MuFactor):
            return NotImplemented
        a = self.num * other.den
        b = other.num * self.den
        if a.is_zero() or b.is_zero():
            return a.is_zero() and b.is_zero()
        ka = dict(a.terms())
        kb = dict(b.terms())
        if set(ka) != set(kb):
            return False
        e0 = next(iter(ka))
        ratio = ka[e0] / kb[e0]
        if not (ratio.is_constant() and ratio.as_fraction() > 0):
            return False
        return all(ka[e] == ratio * kb[e] for e in ka)

    def __repr__(self):
        s = self.symbol
        return (f"MuFactor(q_a=q^{self.pair.e_alpha}, q_a*=q^{self.pair.e_star}, "
                f"c'={self.c_prime}, var {s})")


def mu_factor(e_alpha, e_star=0, c_prime=1) -> MuFactor:
    """Factor for q_a = q_F^{e_alpha}, q_{a*} = q_F^{e_star} (exponent arguments)."""
    return MuFactor(e_alpha, e_star, c_prime)


class PoleZeroProfile:
    """Zeros and poles of the shape sign * q_F^exp with integer orders.

    Both maps are keyed by (sign, exp); exp is the q_F-exponent (a Fraction
    with denominator <= 2).  Profiles of mu-factors are inversion-closed and
    balanced (total zero order = total pole order); both are enforced here.
    """

    __slots__ = ("zeros", "poles")

    def __init__(self, zeros: dict, poles: dict):
        zeros = {(int(s), Fraction(e)): int(o) for (s, e), o in zeros.items() if o}
        poles = {(int(s), Fraction(e)): int(o) for (s, e), o in poles.items() if o}
        for name, side in (("zeros", zeros), ("poles", poles)):
            for (s, e), o in side.items():
                if s not in (1, -1) or o < 0:
                    raise ValueError(f"bad {name} entry {(s, e, o)}")
                if side.get((s, -e)) != o:
                    raise ValueError(f"{name} not closed under inversion at {(s, e)}")
        if sum(zeros.values()) != sum(poles.values()):
            raise ValueError("total zero order differs from total pole order")
        object.__setattr__(self, "zeros", zeros)
        object.__setattr__(self, "poles", poles)

    def __setattr__(self, *a):
        raise AttributeError("PoleZeroProfile is immutable")

    def is_empty(self) -> bool:
        return not self.zeros and not self.poles

    def __eq__(self, other) -> bool:
        return (isinstance(other, PoleZeroProfile)
                and self.zeros == other.zeros and self.poles == other.poles)

    @staticmethod
    def _side_json(side: dict) -> list:
        rows = sorted(side.items())
        return [{"sign": s, "exp": int(e) if e.denominator == 1 else str(e), "ord": o}
                for (s, e), o in rows]

    def to_json(self) -> dict:
        return {"zeros": self._side_json(self.zeros),
                "poles": self._side_json(self.poles)}

    @classmethod
    def from_json(cls, data: dict) -> "PoleZeroProfile":
        def side(rows):
            return {(r["sign"], Fraction(str(r["exp"]))): r["ord"] for r in rows}
        return cls(side(data["zeros"]), side(data["poles"]))

    def __repr__(self):
        def show(side):
            return ", ".join(f"{'-' if s < 0 else ''}q^{e}:{o}"
                             for (s, e), o in sorted(side.items()))
        return f"PoleZeroProfile(zeros [{show(self.zeros)}], poles [{show(self.poles)}])"


def poles_zeros(f: MuFactor) -> PoleZeroProfile:
    """Exact pole/zero locations of a mu-factor, after cancellation."""
    zn, rn = shaped_roots(f.num)
    zd, rd = shaped_roots(f.den)
    assert len(rn.terms()) == 1 and len(rd.terms()) == 1, "non-shaped roots left over"
    net: dict = dict(zn)
    for key, o in zd.items():
        net[key] = net.get(key, 0) - o
    zeros, poles = {}, {}
    for (s, k), o in net.items():
        if o > 0:
            zeros[(s, Fraction(k, 2))] = o
        elif o < 0:
            poles[(s, Fraction(k, 2))] = -o
    return PoleZeroProfile(zeros, poles)


def q_from_poles(p: PoleZeroProfile) -> ParamPair:
    """Recover (q_a, q_{a*}) exponents; rejects profiles that no factor produces."""
    if p.is_empty():
        return ParamPair(0, 0)
    pos = [e for (s, e) in p.poles if s == 1]
    neg = [-e for (s, e) in p.poles if s == -1 and e < 0]
    if not pos:
        raise ValueError("no positive-real pole: not a mu-factor profile")
    try:
        pair = ParamPair(max(pos), max(neg) if neg else 0)
    except ValueError as err:
        raise ValueError(f"pole positions violate q_a >= q_a* >= 1: {err}") from None
    if poles_zeros(MuFactor(pair.e_alpha, pair.e_star)) != p:
        raise ValueError(
            f"profile is not of mu-factor shape (best candidate {pair!r})")
    return pair


class SubsystemComponent:
    """Irreducible component of a sub-root-system, with ambient length tag."""

    __slots__ = ("label", "ambient_class", "roots")

    def __init__(self, label: str, ambient_class: str, roots):
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "ambient_class", ambient_class)
        object.__setattr__(self, "roots", tuple(roots))

    def __setattr__(self, *a):
        raise AttributeError("SubsystemComponent is immutable")

    def __eq__(self, other):
        return (isinstance(other, SubsystemComponent)
                and (self.label, self.ambient_class, self.roots)
                == (other.label, other.ambient_class, other.roots))

    def to_json(self) -> dict:
        return {"type": self.label, "ambient_class": self.ambient_class,
                "roots": [list(r) for r in self.roots]}

    def __repr__(self):
        return f"SubsystemComponent({self.label}, {self.ambient_class}, {len(self.roots)} roots)"


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _span_rank(vectors) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        lead = rows[rank][c]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c] / lead
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _classify(roots) -> str:
    """Cartan label of one irreducible root set (canonical name, A before D)."""
    count = len(roots)
    rank = _span_rank(roots)
    norms = sorted({_dot(r, r) for r in roots})
    if len(norms) == 1:
        if count == rank * (rank + 1):
            return f"A{rank}"
        if count == 2 * rank * (rank - 1):
            return f"D{rank}"
        if (rank, count) in ((6, 72), (7, 126), (8, 240)):
            return f"E{rank}"
    elif norms[1] == 3 * norms[0]:
        return "G2"
    else:
        n_short = sum(1 for r in roots if _dot(r, r) == norms[0])
        n_long = count - n_short
        if rank == 4 and count == 48:
            return "F4"
        if rank == 2:
            return "B2"
        if n_short == 2 * rank:
            return f"B{rank}"
        if n_long == 2 * rank:
            return f"C{rank}"
    raise ValueError(f"unrecognized component: rank {rank}, {count} roots")


def sigma_O_mu(rs: RootSystem, factors: dict) -> tuple:
    """Sub-root-system spanned by the orbits whose factor is non-constant.

    factors maps simple-orbit index (the order of rs.simple_orbits()) to a
    MuFactor or None; None and constant factors drop the orbit.  Returns the
    irreducible components with ambient length tags.
    """
    orbits = rs.simple_orbits()
    keep = []
    for k, orbit in enumerate(orbits):
        f = factors.get(k)
        if f is not None and not f.is_constant():
            keep.append(orbit)
    if not keep:
        return ()
    comp_of_simple = {}
    for ci, comp in enumerate(rs.components()):
        for i in comp:
            comp_of_simple[i] = ci
    chosen = set()
    for orbit in keep:
        i = orbit[0]
        cls = rs.length_class(rs.index[rs.simple_roots[i]])
        amb = comp_of_simple[i]
        for idx, r in enumerate(rs.all_roots):
            touched = [j for j, c in enumerate(rs.coeffs[idx]) if c]
            if rs.length_class(idx) == cls and comp_of_simple[touched[0]] == amb:
                chosen.add(r)
    positives = [r for r in rs.all_roots[:rs.n_positive] if r in chosen]
    pos_set = set(positives)
    simples = [p for p in positives
               if not any(tuple(a - b for a, b in zip(p, q)) in pos_set
                          for q in positives if q != p)]
    # orthogonal component split on the subsystem's own simple roots
    comp_ids = list(range(len(simples)))

    def find(i):
        while comp_ids[i] != i:
            comp_ids[i] = comp_ids[comp_ids[i]]
            i = comp_ids[i]
        return i

    for i in range(len(simples)):
        for j in range(i + 1, len(simples)):
            if _dot(simples[i], simples[j]) != 0:
                comp_ids[find(i)] = find(j)
    groups: dict = {}
    for i in range(len(simples)):
        groups.setdefault(find(i), []).append(simples[i])
    out = []
    for group in groups.values():
        roots = [r for r in chosen
                 if any(_dot(r, s) != 0 for s in group)]
        roots.sort()
        if rs.simply_laced():
            tag = "all"
        else:
            tags = {rs.length_class(rs.index[r]) for r in roots}
            tag = tags.pop() if len(tags) == 1 else "mixed"
        out.append(SubsystemComponent(_classify(roots), tag, roots))
    out.sort(key=lambda c: (c.label, c.roots))
    return tuple(out)
