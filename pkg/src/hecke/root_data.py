"""Finite root systems, based root data, Weyl groups, reduced words.

Roots are kept as integer vectors in fixed orthonormal-coordinate realizations
(the F4/E realizations are doubled so that no half-integer entries appear;
reflection arithmetic only ever uses Cartan integers, which are scale-free).
"""
from __future__ import annotations

from collections import deque
from fractions import Fraction

WEYL_RANK_CAP = 4
BUILD_RANK_CAP = 8

ROOT_COUNTS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": {6: 72, 7: 126, 8: 240},
    "F": {4: 48},
    "G": {2: 12},
}


class SizeLimitError(ValueError):
    """Requested enumeration exceeds the supported rank cap."""


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _simple_data(cartan_type: str, rank: int):
    """Simple roots for the standard integer realization; returns (simples, dim)."""
    t, n = cartan_type, rank
    if t == "A" and n >= 1:
        dim = n + 1
        simples = [_e_diff(dim, i, i + 1) for i in range(n)]
    elif t == "B" and n >= 1:
        dim = n
        simples = [_e_diff(dim, i, i + 1) for i in range(n - 1)]
        simples.append(_unit(dim, n - 1))
    elif t == "C" and n >= 1:
        dim = n
        simples = [_e_diff(dim, i, i + 1) for i in range(n - 1)]
        simples.append(tuple(2 * x for x in _unit(dim, n - 1)))
    elif t == "D" and n >= 2:
        dim = n
        simples = [_e_diff(dim, i, i + 1) for i in range(n - 1)]
        simples.append(_vadd(_unit(dim, n - 2), _unit(dim, n - 1)))
    elif t == "G" and n == 2:
        dim = 3
        simples = [(1, -1, 0), (-2, 1, 1)]
    elif t == "F" and n == 4:
        dim = 4
        simples = [(0, 2, -2, 0), (0, 0, 2, -2), (0, 0, 0, 2), (1, -1, -1, -1)]
    elif t == "E" and n in (6, 7, 8):
        dim = 8
        simples = [
            (1, -1, -1, -1, -1, -1, -1, 1),
            (2, 2, 0, 0, 0, 0, 0, 0),
            (-2, 2, 0, 0, 0, 0, 0, 0),
            (0, -2, 2, 0, 0, 0, 0, 0),
            (0, 0, -2, 2, 0, 0, 0, 0),
            (0, 0, 0, -2, 2, 0, 0, 0),
            (0, 0, 0, 0, -2, 2, 0, 0),
            (0, 0, 0, 0, 0, -2, 2, 0),
        ][:n]
    else:
        raise ValueError(f"invalid Cartan type {t}{n}")
    return [tuple(s) for s in simples], dim


def _unit(dim, i):
    return tuple(1 if j == i else 0 for j in range(dim))


def _e_diff(dim, i, j):
    return tuple(1 if k == i else (-1 if k == j else 0) for k in range(dim))


def _vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


class RootSystem:
    """An irreducible root system with a fixed simple basis and root order.

    all_roots lists the positive roots (sorted by height, then coefficient
    vector) followed by their negatives in the same order.
    """

    def __init__(self, cartan_type, rank, simples, dim):
        self.cartan_type = cartan_type
        self.rank = rank
        self.dim = dim
        self.simple_roots = tuple(simples)
        pos = _close_positive(simples)
        self.n_positive = len(pos)
        coeffs = [_expand(r, simples) for r in pos]
        order = sorted(range(len(pos)), key=lambda i: (sum(coeffs[i]), coeffs[i]))
        pos = [pos[i] for i in order]
        coeffs = [coeffs[i] for i in order]
        self.all_roots = tuple(pos) + tuple(tuple(-x for x in r) for r in pos)
        self.coeffs = tuple(coeffs) + tuple(tuple(-x for x in c) for c in coeffs)
        self.index = {r: i for i, r in enumerate(self.all_roots)}
        self.cartan = tuple(
            tuple(2 * _dot(a, b) // _dot(b, b) for b in simples) for a in simples
        )
        norms = {_dot(r, r) for r in self.all_roots}
        self.short_norm = min(norms)
        self.long_norm = max(norms)
        self._cache: dict = {}
        expected = ROOT_COUNTS[cartan_type]
        expected = expected(rank) if callable(expected) else expected[rank]
        if len(self.all_roots) != expected:
            raise AssertionError(
                f"{cartan_type}{rank}: got {len(self.all_roots)} roots, expected {expected}")

    # -- length classes ------------------------------------------------

    def simply_laced(self) -> bool:
        return self.short_norm == self.long_norm

    def length_class(self, root_index: int) -> str:
        """'all' for simply laced; else 'short'/'long' by norm (B1 is short, C1 long)."""
        t = self.cartan_type
        if t in ("A", "D", "E"):
            return "all"
        # one-norm edge cases keep their family's tagging
        ref_short = {"B": 1, "C": 2, "F": 4, "G": 2}[t]
        r = self.all_roots[root_index]
        return "short" if _dot(r, r) == ref_short else "long"

    def simple_classes(self) -> dict[str, tuple[int, ...]]:
        """Map length-class name -> indices of simple roots in that class."""
        out: dict[str, list[int]] = {}
        for i, s in enumerate(self.simple_roots):
            cls = self.length_class(self.index[s])
            out.setdefault(cls, []).append(i)
        return {k: tuple(v) for k, v in out.items()}

    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components of the Dynkin diagram, as simple-index tuples."""
        n = self.rank
        seen = [False] * n
        comps = []
        for start in range(n):
            if seen[start]:
                continue
            comp, stack = [], [start]
            seen[start] = True
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in range(n):
                    if not seen[j] and self.cartan[i][j] != 0:
                        seen[j] = True
                        stack.append(j)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def simple_orbits(self) -> tuple[tuple[int, ...], ...]:
        """W-orbits of the simple roots: same component, same length.

        Within a component the long orbit comes first; components are ordered
        by least simple index.  (D2 is the one buildable reducible case.)
        """
        orbits = []
        for comp in self.components():
            by_cls: dict[str, list[int]] = {}
            for i in comp:
                by_cls.setdefault(self.length_class(self.index[self.simple_roots[i]]),
                                  []).append(i)
            for cls in ("all", "long", "short"):
                if cls in by_cls:
                    orbits.append(tuple(by_cls[cls]))
        return tuple(orbits)

    def simple_reflection_perm(self, i: int) -> tuple[int, ...]:
        key = ("sperm", i)
        if key not in self._cache:
            a = self.simple_roots[i]
            na = _dot(a, a)
            perm = []
            for r in self.all_roots:
                num = 2 * _dot(r, a)
                assert num % na == 0
                img = tuple(x - (num // na) * y for x, y in zip(r, a))
                perm.append(self.index[img])
            self._cache[key] = tuple(perm)
        return self._cache[key]

    def reflect_vector(self, i: int, x: tuple[int, ...]) -> tuple[int, ...]:
        """Simple reflection on lattice coordinates (simple-root basis)."""
        pairing = sum(x[k] * self.cartan[k][i] for k in range(self.rank))
        y = list(x)
        y[i] -= pairing
        return tuple(y)

    def pair_with_simple_coroot(self, x: tuple[int, ...], i: int) -> int:
        return sum(x[k] * self.cartan[k][i] for k in range(self.rank))

    def to_json(self) -> dict:
        return {"type": self.cartan_type, "rank": self.rank,
                "roots": [list(r) for r in self.all_roots]}

    def __repr__(self):
        return f"RootSystem({self.cartan_type}{self.rank}, {len(self.all_roots)} roots)"


def _close_positive(simples):
    """All positive roots by reflection closure from the simple basis."""
    roots = set(simples)
    queue = deque(simples)
    while queue:
        r = queue.popleft()
        for a in simples:
            na = _dot(a, a)
            num = 2 * _dot(r, a)
            assert num % na == 0, "non-integral Cartan pairing"
            img = tuple(x - (num // na) * y for x, y in zip(r, a))
            if img not in roots and tuple(-x for x in img) not in roots:
                # keep the representative whose simple expansion is non-negative
                pos = img if _is_nonneg(_expand(img, simples)) else tuple(-x for x in img)
                roots.add(pos)
                queue.append(pos)
    return sorted(roots)


def _is_nonneg(coeffs):
    return all(c >= 0 for c in coeffs)


def _expand(root, simples):
    """Integer coefficients of a root in the simple basis (Gram system solve)."""
    n = len(simples)
    gram = [[Fraction(_dot(simples[i], simples[j])) for j in range(n)] for i in range(n)]
    rhs = [Fraction(_dot(root, simples[i])) for i in range(n)]
    sol = _solve(gram, rhs)
    out = []
    for f in sol:
        assert f.denominator == 1, "root not in the simple-root lattice"
        out.append(int(f))
    return tuple(out)


def _solve(mat, rhs):
    n = len(mat)
    m = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def build_root_system(cartan_type: str, rank: int) -> RootSystem:
    """Construct the full root system for an irreducible Cartan type, rank <= 8."""
    if not isinstance(rank, int) or rank < 1:
        raise ValueError(f"rank must be a positive integer, got {rank!r}")
    if rank > BUILD_RANK_CAP:
        raise SizeLimitError(f"rank {rank} exceeds the construction cap {BUILD_RANK_CAP}")
    simples, dim = _simple_data(cartan_type, rank)
    return RootSystem(cartan_type, rank, simples, dim)


class WeylElement:
    """Group element stored as (canonical reduced word, permutation of all_roots)."""

    __slots__ = ("word", "perm")

    def __init__(self, word, perm):
        self.word = tuple(word)
        self.perm = tuple(perm)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.perm == other.perm

    def __hash__(self):
        return hash(self.perm)

    def apply_index(self, root_index: int) -> int:
        return self.perm[root_index]

    def to_json(self) -> dict:
        return {"word": list(self.word)}

    def __repr__(self):
        return f"W{list(self.word)}"


def weyl_group(rs: RootSystem) -> list[WeylElement]:
    """All Weyl group elements, each with the lexicographically least reduced word.

    Elements are listed by increasing length, ties in word-lex order; the
    identity comes first.  Rank is capped to keep full enumeration desk-scale.
    """
    if rs.rank > WEYL_RANK_CAP:
        raise SizeLimitError(
            f"full Weyl enumeration capped at rank {WEYL_RANK_CAP}, got rank {rs.rank}")
    if "weyl" in rs._cache:
        return rs._cache["weyl"]
    n = len(rs.all_roots)
    sperms = [rs.simple_reflection_perm(i) for i in range(rs.rank)]
    ident = tuple(range(n))
    elements = [WeylElement((), ident)]
    seen = {ident: 0}
    queue = deque([elements[0]])
    while queue:
        w = queue.popleft()
        for j in range(rs.rank):
            sp = sperms[j]
            new = tuple(w.perm[sp[r]] for r in range(n))
            if new not in seen:
                el = WeylElement(w.word + (j,), new)
                seen[new] = len(elements)
                elements.append(el)
                queue.append(el)
    rs._cache["weyl"] = elements
    rs._cache["weyl_index"] = {el.perm: i for i, el in enumerate(elements)}
    return elements


def length(w: WeylElement, rs: RootSystem) -> int:
    """Number of positive roots sent to negative ones."""
    np = rs.n_positive
    return sum(1 for i in range(np) if w.perm[i] >= np)


def element_from_word(rs: RootSystem, word) -> WeylElement:
    """Fold a word of simple-reflection letters into a Weyl element (canonical form)."""
    n = len(rs.all_roots)
    perm = list(range(n))
    for j in word:
        sp = rs.simple_reflection_perm(j)
        perm = [perm[sp[r]] for r in range(n)]
    perm = tuple(perm)
    weyl_group(rs)
    idx = rs._cache["weyl_index"][perm]
    return rs._cache["weyl"][idx]


class DatumAutomorphism:
    """Automorphism of the based datum fixing the positive system (length zero)."""

    __slots__ = ("perm", "simple_images")

    def __init__(self, perm, simple_images):
        self.perm = tuple(perm)
        self.simple_images = tuple(simple_images)

    def is_identity(self) -> bool:
        return self.simple_images == tuple(range(len(self.simple_images)))

    def to_json(self) -> dict:
        return {"simple_images": list(self.simple_images)}

    def __repr__(self):
        return f"R{list(self.simple_images)}"


def _perm_from_matrix(matrix, rs: RootSystem):
    perm = []
    for r in rs.all_roots:
        img = tuple(sum(row[k] * r[k] for k in range(rs.dim)) for row in matrix)
        if img not in rs.index:
            raise ValueError(f"matrix does not preserve the root set (image {img})")
        perm.append(rs.index[img])
    return tuple(perm)


def decompose_extended(matrix, rs: RootSystem) -> tuple[DatumAutomorphism, WeylElement]:
    """Factor a root-set symmetry as r * w, with r basis-preserving and w in W.

    The input is an integer matrix on the ambient coordinates.  The r-part has
    zero length (it fixes the positive system); the factorization is unique.
    """
    perm = _perm_from_matrix(matrix, rs)
    np = rs.n_positive
    simple_idx = [rs.index[s] for s in rs.simple_roots]
    letters = []
    cur = list(perm)
    while True:
        desc = next((i for i in range(rs.rank) if cur[simple_idx[i]] >= np), None)
        if desc is None:
            break
        sp = rs.simple_reflection_perm(desc)
        cur = [cur[sp[r]] for r in range(len(cur))]
        letters.append(desc)
    r_simple_images = []
    for i in range(rs.rank):
        img_root = rs.all_roots[cur[simple_idx[i]]]
        r_simple_images.append(rs.simple_roots.index(img_root))
    r = DatumAutomorphism(cur, r_simple_images)
    # g = r * s_{i_k} ... s_{i_1}
    rev = tuple(reversed(letters))
    w = element_from_word(rs, rev) if rs.rank <= WEYL_RANK_CAP \
        else WeylElement(rev, _compose_word(rs, rev))
    # exact recomposition check
    assert tuple(r.perm[w.perm[i]] for i in range(len(perm))) == perm
    return r, w


def _compose_word(rs, word):
    n = len(rs.all_roots)
    perm = list(range(n))
    for j in word:
        sp = rs.simple_reflection_perm(j)
        perm = [perm[sp[r]] for r in range(n)]
    return tuple(perm)


class BasedRootDatum:
    """Root datum on the lattice Z^d in simple-root coordinates.

    The roots are coefficient vectors of the system's roots; the coroot of a
    simple root is the matching column of the Cartan matrix, extended to the
    other roots by the dual reflection action.  <root_i, coroot_i> = 2 always.
    """

    def __init__(self, rs: RootSystem | None, lattice_rank: int | None = None):
        self.root_system = rs
        base_rank = rs.rank if rs is not None else 0
        self.lattice_rank = lattice_rank if lattice_rank is not None else base_rank
        if self.lattice_rank < base_rank:
            raise ValueError("lattice rank smaller than the root lattice rank")
        pad = self.lattice_rank - base_rank
        if rs is None:
            self.roots = ()
            self.coroots = ()
            self.basis = ()
            return
        roots = [c + (0,) * pad for c in rs.coeffs]
        coroots = []
        # simple coroots first, then close under dual reflections alongside roots
        simple_cor = [tuple(rs.cartan[k][j] for k in range(rs.rank)) + (0,) * pad
                      for j in range(rs.rank)]
        cor_by_root: dict[tuple, tuple] = {}
        for j, s in enumerate(rs.simple_roots):
            cor_by_root[rs.coeffs[rs.index[s]]] = simple_cor[j]
        changed = True
        while changed:
            changed = False
            for c, cor in list(cor_by_root.items()):
                for j in range(rs.rank):
                    c2 = _reflect_coords(rs, j, c)
                    if c2 not in cor_by_root:
                        cor_by_root[c2] = _reflect_functional(rs, j, cor)
                        changed = True
                neg = tuple(-x for x in c)
                if neg not in cor_by_root:
                    cor_by_root[neg] = tuple(-x for x in cor)
                    changed = True
        for c in roots:
            coroots.append(cor_by_root[c[:rs.rank] if pad else c])
        self.roots = tuple(roots)
        self.coroots = tuple(coroots)
        self.basis = tuple(rs.index[s] for s in rs.simple_roots)
        for r, c in zip(self.roots, self.coroots):
            assert _dot(r, c) == 2

    def pairing(self, x, coroot) -> int:
        return _dot(x, coroot)

    def reflect(self, i: int, x) -> tuple[int, ...]:
        """Reflection in the i-th simple root, on lattice coordinates."""
        rs = self.root_system
        root = self.roots[self.basis[i]]
        coroot = self.coroots[self.basis[i]]
        k = _dot(x, coroot)
        return tuple(a - k * b for a, b in zip(x, root))


def _reflect_coords(rs, j, c):
    pairing = sum(c[k] * rs.cartan[k][j] for k in range(rs.rank))
    out = list(c)
    out[j] -= pairing
    return tuple(out)


def _reflect_functional(rs, j, cor):
    # (s_j f)(x) = f(s_j x) = f(x) - f_j * <x, j-coroot>
    col = [rs.cartan[k][j] for k in range(rs.rank)] + [0] * (len(cor) - rs.rank)
    fj = cor[j]
    return tuple(a - fj * b for a, b in zip(cor, col))
