"""Exact arithmetic in affine Hecke algebras with unequal parameters.

Elements are kept in the basis theta_x T_w (x in the lattice, w Weyl).  The
defining relations, for a simple reflection s = s_a with orbit labels
(lambda, lambda*) relative to the base (v^2 = base):

    (T_s + 1)(T_s - qq_s) = 0,            qq_s = q_a q_{a*} = v^{2 lambda}
    T_s theta_y = theta_{s(y)} T_s + D_s(y)

    D_s(y) = (A + B X_a^{-1}) (theta_y - theta_{s y}) / (1 - X_a^{-2})
    A = q_a q_{a*} - 1,   B = q_a - q_{a*}

with q_a = v^{lambda+lambda*}, q_{a*} = v^{lambda-lambda*}, X_a the lattice
point attached to a.  The divided difference is computed by exact Laurent
division; a nonzero remainder is impossible for admissible data (the pairing
<y, a#> is even whenever q_{a*} != 1) and raises immediately otherwise.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .label_params import LabelFunction, validate
from .qfield import VR_ONE, VR_ZERO, VRat
from .root_data import BasedRootDatum, WeylElement, weyl_group
from .xlaurent import L_ONE, Laurent, div_exact

X_CONVENTIONS = ("h-point", "coroot-uniformizer")


class AHA:
    """Handle for one affine Hecke algebra; caches all Weyl/relation data."""

    def __init__(self, datum: BasedRootDatum, lf: LabelFunction,
                 x_convention: str = "h-point", x_points=None):
        if x_convention not in X_CONVENTIONS:
            raise ValueError(f"unknown X_a convention {x_convention!r}")
        self.datum = datum
        self.lf = lf
        self.x_convention = x_convention
        rs = datum.root_system
        self.rank = rs.rank if rs is not None else 0
        self.d = datum.lattice_rank
        if rs is not None:
            report = validate(lf, rs)
            if report:
                raise ValueError("inadmissible labels: " + "; ".join(report))
            self.W = weyl_group(rs)
            self.windex = rs._cache["weyl_index"]
        else:
            self.W = [WeylElement((), ())]
            self.windex = {(): 0}
        self.lengths = tuple(len(w.word) for w in self.W)
        # w*s composition table
        if rs is not None:
            sperms = [rs.simple_reflection_perm(j) for j in range(self.rank)]
            n = len(rs.all_roots)
            self.ws_table = tuple(
                tuple(self.windex[tuple(w.perm[sp[r]] for r in range(n))]
                      for sp in sperms)
                for w in self.W)
        else:
            self.ws_table = ((),)
        # per-simple constants; labels must give integral v-exponents
        self.qq, self.A, self.B, self.x_points = [], [], [], []
        for j in range(self.rank):
            lam, ls = lf.values(j)
            ea, es = lam + ls, lam - ls
            if ea.denominator != 1 or es.denominator != 1:
                raise ValueError(
                    f"simple {j}: q-parameters v^{ea}, v^{es} are not v-powers")
            self.qq.append(VRat.v_pow(int(ea)) * VRat.v_pow(int(es)))
            self.A.append(self.qq[j] - 1)
            self.B.append(VRat.v_pow(int(ea)) - VRat.v_pow(int(es)))
            root = datum.roots[datum.basis[j]]
            if x_points is not None and j in x_points:
                pt = tuple(x_points[j])
                if datum.reflect(j, pt) != tuple(-c for c in pt) or pt[j] == 0:
                    raise ValueError(f"x_points[{j}] is not anti-invariant under s_{j}")
                self.x_points.append(pt)
            else:
                self.x_points.append(root)
        self._tt_cache: dict = {}
        self._d_cache: dict = {}

    # -- element constructors --------------------------------------------

    def element(self, terms) -> "AHAElement":
        return AHAElement(self, terms)

    def one(self) -> "AHAElement":
        return self.element({((0,) * self.d, 0): VR_ONE})

    def theta(self, x) -> "AHAElement":
        x = tuple(x)
        if len(x) != self.d:
            raise ValueError(f"lattice point must have {self.d} coordinates")
        return self.element({(x, 0): VR_ONE})

    def t_simple(self, j: int) -> "AHAElement":
        perm = self.datum.root_system.simple_reflection_perm(j)
        return self.element({((0,) * self.d, self.windex[perm]): VR_ONE})

    def t(self, word) -> "AHAElement":
        """T_w for the element with the given reduced word (lengths must add)."""
        out = self.one()
        for j in word:
            out = self.multiply(out, self.t_simple(j))
        return out

    def from_json(self, data: dict) -> "AHAElement":
        terms = {}
        for t in data["terms"]:
            x = tuple(int(c) for c in t["x"])
            wi = self._word_index(tuple(int(j) for j in t["w"]))
            coeff = VRat.parse(t["coeff"])
            terms[(x, wi)] = terms.get((x, wi), VR_ZERO) + coeff
        return self.element(terms)

    def _word_index(self, word) -> int:
        i = 0
        for j in word:
            i = self.ws_table[i][j]
        return i

    # -- multiplication ----------------------------------------------------

    def multiply(self, a: "AHAElement", b: "AHAElement") -> "AHAElement":
        if a.algebra is not self or b.algebra is not self:
            raise ValueError("elements belong to different algebra handles")
        out: dict = {}
        parts: dict = {}
        for (x, wi), c in a.terms.items():
            part = parts.get(wi)
            if part is None:
                part = parts.setdefault(wi, self._t_times_elem(wi, b.terms))
            for (z, ui), c2 in part.items():
                key = (tuple(p + q for p, q in zip(x, z)), ui)
                s = out.get(key, VR_ZERO) + c * c2
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        return self.element(out)

    def _t_times_elem(self, wi: int, terms: dict) -> dict:
        out: dict = {}
        for (y, vi), c in terms.items():
            part = self._t_times_theta(wi, y)
            for j in self.W[vi].word:
                part = self._right_mult_ts(part, j)
            for key, c2 in part.items():
                s = out.get(key, VR_ZERO) + c * c2
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        return out

    def _t_times_theta(self, wi: int, y: tuple) -> dict:
        """T_w theta_y in normal form, by peeling the last letter of w."""
        if wi == 0:
            return {(y, 0): VR_ONE}
        key = (wi, y)
        hit = self._tt_cache.get(key)
        if hit is not None:
            return hit
        s = self.W[wi].word[-1]
        wpi = self.ws_table[wi][s]
        sy = self.datum.reflect(s, y)
        out = dict(self._right_mult_ts(self._t_times_theta(wpi, sy), s))
        for k, dk in self._dcoeffs(s, self._pair(y, s)):
            xs = self.x_points[s]
            shifted = tuple(a + k * b for a, b in zip(y, xs))
            for key2, c in self._t_times_theta(wpi, shifted).items():
                val = out.get(key2, VR_ZERO) + dk * c
                if val:
                    out[key2] = val
                elif key2 in out:
                    del out[key2]
        self._tt_cache[key] = out
        return out

    def _pair(self, y: tuple, j: int) -> int:
        coroot = self.datum.coroots[self.datum.basis[j]]
        return sum(a * b for a, b in zip(y, coroot))

    def _dcoeffs(self, j: int, n: int):
        """Coefficients d_k with D_j(y) = sum_k d_k theta_{y + k X_j}, <y,a#> = n.

        s(y) = y - n a; with X_j = m a the shift is in X_j-units n' = n/m, and
        D_j(y) = (A + B u^{-1}) (1 - u^{-n'}) / (1 - u^{-2}) evaluated at
        u = theta_{X_j}, applied to theta_y.
        """
        m = self.x_points[j][j]
        if n % m:
            raise ArithmeticError(
                f"pairing {n} not divisible by the X-point multiplier {m}")
        n = n // m
        key = (j, n)
        hit = self._d_cache.get(key)
        if hit is None:
            if n == 0:
                hit = ()
            else:
                ab = Laurent({0: self.A[j], -1: self.B[j]})
                f = ab * (L_ONE - Laurent.x_pow(-n))
                g = div_exact(f, L_ONE - Laurent.x_pow(-2))
                hit = tuple(g.terms())
            self._d_cache[key] = hit
        return hit

    def _right_mult_ts(self, terms: dict, j: int) -> dict:
        out: dict = {}

        def bump(key, val):
            s = out.get(key, VR_ZERO) + val
            if s:
                out[key] = s
            elif key in out:
                del out[key]

        for (x, ui), c in terms.items():
            usi = self.ws_table[ui][j]
            if self.lengths[usi] > self.lengths[ui]:
                bump((x, usi), c)
            else:
                bump((x, ui), c * (self.qq[j] - 1))
                bump((x, usi), c * self.qq[j])
        return out

    def __repr__(self):
        rs = self.datum.root_system
        tag = f"{rs.cartan_type}{rs.rank}" if rs else "empty"
        return f"AHA({tag}, lattice Z^{self.d})"


class AHAElement:
    """Finite sum of theta_x T_w with coefficients in the v-field."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: AHA, terms: dict):
        clean = {}
        for (x, wi), c in terms.items():
            if not isinstance(c, VRat):
                c = VRat.from_fraction(Fraction(c))
            if c:
                clean[(tuple(x), wi)] = c
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("AHAElement is immutable")

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (isinstance(other, AHAElement) and self.algebra is other.algebra
                and self.terms == other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "AHAElement") -> "AHAElement":
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, VR_ZERO) + c
            if s:
                out[key] = s
            elif key in out:
                del out[key]
        return AHAElement(self.algebra, out)

    def __neg__(self) -> "AHAElement":
        return AHAElement(self.algebra, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "AHAElement") -> "AHAElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AHAElement):
            return self.algebra.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "AHAElement":
        if not isinstance(c, VRat):
            c = VRat.from_fraction(Fraction(c))
        return AHAElement(self.algebra, {k: c * v for k, v in self.terms.items()})

    def specialize(self, v: Fraction) -> dict:
        """Evaluate all coefficients at a numeric v; map (x, w-index) -> Fraction.

        Terms whose coefficient vanishes at v are dropped, so the result is a
        normalized element of the specialized algebra.
        """
        out = {k: c.eval(v) for k, c in self.terms.items()}
        return {k: f for k, f in out.items() if f}

    def to_json(self) -> dict:
        rows = sorted(self.terms.items(),
                      key=lambda kv: (self.algebra.W[kv[0][1]].word, kv[0][0]))
        return {"terms": [{"x": list(x), "w": list(self.algebra.W[wi].word),
                           "coeff": str(c)} for (x, wi), c in rows]}

    def __repr__(self):
        if not self.terms:
            return "AHAElement(0)"
        bits = []
        for (x, wi), c in sorted(self.terms.items(),
                                 key=lambda kv: (self.algebra.W[kv[0][1]].word, kv[0][0])):
            w = self.algebra.W[wi].word
            body = []
            if any(x):
                body.append(f"th{list(x)}")
            if w:
                body.append("T" + "".join(str(j) for j in w))
            body = " ".join(body) or "1"
            bits.append(f"({c})*{body}")
        return " + ".join(bits)


def algebra(datum: BasedRootDatum, lf: LabelFunction, **kw) -> AHA:
    """Build an algebra handle; labels must be admissible on the datum."""
    return AHA(datum, lf, **kw)


def multiply(a: AHAElement, b: AHAElement) -> AHAElement:
    return a.algebra.multiply(a, b)


def normal_form(alg: AHA, word) -> AHAElement:
    """Fold a formal generator word into the theta/T basis.

    Tokens: ("theta", lattice point) or ("T", simple index).  The result is
    already normal; feeding its own terms back in reproduces it.
    """
    out = alg.one()
    for tok in word:
        kind, arg = tok
        if kind == "theta":
            out = multiply(out, alg.theta(arg))
        elif kind == "T":
            out = multiply(out, alg.t_simple(int(arg)))
        else:
            raise ValueError(f"unknown generator kind {kind!r}")
    return out


def _act(alg: AHA, wi: int, y: tuple) -> tuple:
    for j in reversed(alg.W[wi].word):
        y = alg.datum.reflect(j, y)
    return y


def _group_algebra_mult(alg: AHA, a: dict, b: dict) -> dict:
    """Multiplication in the group algebra of X x| W (the v = 1 shadow)."""
    out: dict = {}
    for (x, wi), c in a.items():
        for (y, vi), c2 in b.items():
            wy = _act(alg, wi, y)
            key = (tuple(p + q for p, q in zip(x, wy)), alg._word_index(
                alg.W[wi].word + alg.W[vi].word))
            out[key] = out.get(key, Fraction(0)) + c * c2
    return {k: v for k, v in out.items() if v}


def _braid_order(rs, i: int, j: int) -> int:
    return {0: 2, 1: 3, 2: 4, 3: 6}[rs.cartan[i][j] * rs.cartan[j][i]]


def _random_element(alg: AHA, rng: random.Random, max_len=3, box=2) -> AHAElement:
    terms = {}
    short = [i for i, L in enumerate(alg.lengths) if L <= max_len]
    for _ in range(rng.randint(1, 3)):
        x = tuple(rng.randint(-box, box) for _ in range(alg.d))
        wi = rng.choice(short)
        terms[(x, wi)] = VRat.v_pow(rng.randint(-2, 2)) * (rng.randint(1, 3))
    return alg.element(terms)


def check_relations(alg: AHA, sample_count: int = 50, seed: int = 0) -> dict:
    """Exact verification of the presentation; returns a pass/fail report."""
    report = {"quadratic": True, "braid": True, "cross": True,
              "finite_rank": len(alg.W), "associativity": 0,
              "group_algebra_spec": True, "failures": []}
    one = alg.one()
    for j in range(alg.rank):
        ts = alg.t_simple(j)
        lhs = ts * ts
        rhs = (alg.qq[j] - 1) * ts + alg.qq[j] * one
        if lhs != rhs:
            report["quadratic"] = False
            report["failures"].append(f"quadratic at simple {j}")
    rs = alg.datum.root_system
    for i in range(alg.rank):
        for j in range(i + 1, alg.rank):
            m = _braid_order(rs, i, j)
            left = normal_form(alg, [("T", (i, j)[k % 2]) for k in range(m)])
            right = normal_form(alg, [("T", (j, i)[k % 2]) for k in range(m)])
            if left != right:
                report["braid"] = False
                report["failures"].append(f"braid at pair ({i},{j})")
    rng = random.Random(seed)
    for j in range(alg.rank):
        for _ in range(3):
            x = tuple(rng.randint(-2, 2) for _ in range(alg.d))
            sx = alg.datum.reflect(j, x)
            lhs = alg.theta(x) * alg.t_simple(j) - alg.t_simple(j) * alg.theta(sx)
            rhs_terms: dict = {}
            for k, dk in alg._dcoeffs(j, alg._pair(x, j)):
                pt = tuple(a + k * b for a, b in zip(x, alg.x_points[j]))
                rhs_terms[(pt, 0)] = rhs_terms.get((pt, 0), VR_ZERO) + dk
            if lhs != alg.element(rhs_terms):
                report["cross"] = False
                report["failures"].append(f"cross relation at simple {j}, x={x}")
    for _ in range(sample_count):
        a = _random_element(alg, rng)
        b = _random_element(alg, rng)
        c = _random_element(alg, rng)
        if (a * b) * c != a * (b * c):
            report["failures"].append("associativity")
        else:
            report["associativity"] += 1
        ab = a * b
        spec = _group_algebra_mult(alg, a.specialize(Fraction(1)),
                                   b.specialize(Fraction(1)))
        if spec != ab.specialize(Fraction(1)):
            report["group_algebra_spec"] = False
            report["failures"].append("v=1 specialization")
    report["ok"] = not report["failures"]
    return report
