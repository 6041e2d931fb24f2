"""Root systems, Weyl enumeration, extended-symmetry factorization, root data."""
import pytest

from hecke.root_data import (BasedRootDatum, SizeLimitError, WeylElement,
                             build_root_system, decompose_extended,
                             element_from_word, length, weyl_group)

ROOT_TABLE = [
    ("A", 1, 2), ("A", 2, 6), ("A", 4, 20),
    ("B", 1, 2), ("B", 2, 8), ("B", 3, 18), ("B", 4, 32),
    ("C", 1, 2), ("C", 2, 8), ("C", 3, 18),
    ("D", 2, 4), ("D", 3, 12), ("D", 4, 24),
    ("G", 2, 12), ("F", 4, 48),
    ("E", 6, 72), ("E", 7, 126), ("E", 8, 240),
]

WEYL_TABLE = [
    ("A", 2, 6), ("B", 2, 8), ("G", 2, 12), ("B", 3, 48), ("C", 3, 48),
    ("D", 4, 192), ("A", 4, 120), ("B", 4, 384), ("F", 4, 1152),
]


def test_root_counts():
    for t, n, count in ROOT_TABLE:
        rs = build_root_system(t, n)
        assert len(rs.all_roots) == count, (t, n)
        assert rs.n_positive * 2 == count


def test_cartan_matrices():
    assert build_root_system("A", 2).cartan == ((2, -1), (-1, 2))
    assert build_root_system("B", 2).cartan == ((2, -2), (-1, 2))
    assert build_root_system("G", 2).cartan == ((2, -1), (-3, 2))
    c3 = build_root_system("C", 3).cartan
    assert c3 == ((2, -1, 0), (-1, 2, -1), (0, -2, 2))


def test_weyl_sizes_and_lengths():
    for t, n, size in WEYL_TABLE:
        rs = build_root_system(t, n)
        W = weyl_group(rs)
        assert len(W) == size, (t, n)
        for w in W:
            assert length(w, rs) == len(w.word)
    assert length(W[-1], rs) == rs.n_positive  # longest element comes last


def test_weyl_rank_cap():
    rs = build_root_system("B", 5)
    with pytest.raises(SizeLimitError):
        weyl_group(rs)
    with pytest.raises(SizeLimitError):
        build_root_system("A", 9)


def test_canonical_words_a2():
    rs = build_root_system("A", 2)
    assert [w.word for w in weyl_group(rs)] == [
        (), (0,), (1,), (0, 1), (1, 0), (0, 1, 0)]
    assert element_from_word(rs, (1, 0, 1)) == element_from_word(rs, (0, 1, 0))
    assert element_from_word(rs, (0, 0)).word == ()


def test_length_changes_by_one_under_simple_mult():
    for t, n in [("A", 2), ("B", 2), ("G", 2)]:
        rs = build_root_system(t, n)
        for w in weyl_group(rs):
            for j in range(rs.rank):
                ws = element_from_word(rs, w.word + (j,))
                assert abs(length(ws, rs) - length(w, rs)) == 1


def test_decompose_extended_a2():
    rs = build_root_system("A", 2)
    flip = [[0, 0, -1], [0, -1, 0], [-1, 0, 0]]  # -w0: the diagram flip
    r, w = decompose_extended(flip, rs)
    assert not r.is_identity() and w.word == ()
    assert r.simple_images == (1, 0)
    s0 = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
    r2, w2 = decompose_extended(s0, rs)
    assert r2.is_identity() and w2.word == (0,)
    prod = [[sum(flip[i][k] * s0[k][j] for k in range(3)) for j in range(3)]
            for i in range(3)]
    r3, w3 = decompose_extended(prod, rs)
    assert not r3.is_identity() and len(w3.word) == 1
    with pytest.raises(ValueError):
        decompose_extended([[1, 0, 0], [0, 1, 0], [0, 0, 2]], rs)


def test_components_and_simple_orbits():
    assert build_root_system("A", 3).simple_orbits() == ((0, 1, 2),)
    assert build_root_system("B", 2).simple_orbits() == ((0,), (1,))
    assert build_root_system("G", 2).simple_orbits() == ((1,), (0,))
    assert build_root_system("F", 4).simple_orbits() == ((0, 1), (2, 3))
    d2 = build_root_system("D", 2)
    assert d2.components() == ((0,), (1,))
    assert d2.simple_orbits() == ((0,), (1,))
    assert build_root_system("B", 1).simple_orbits() == ((0,),)
    assert build_root_system("B", 1).length_class(0) == "short"
    assert build_root_system("C", 1).length_class(0) == "long"


def test_based_root_datum_pairings():
    for t, n in [("A", 2), ("B", 2), ("G", 2), ("C", 3)]:
        rs = build_root_system(t, n)
        datum = BasedRootDatum(rs)
        for i in range(rs.rank):
            for j in range(rs.rank):
                ri = datum.roots[datum.basis[i]]
                cj = datum.coroots[datum.basis[j]]
                assert datum.pairing(ri, cj) == rs.cartan[i][j]
        for i in range(rs.rank):
            e_i = datum.roots[datum.basis[i]]
            assert datum.reflect(i, e_i) == tuple(-x for x in e_i)


def test_based_root_datum_padded_lattice():
    rs = build_root_system("A", 2)
    datum = BasedRootDatum(rs, lattice_rank=4)
    assert all(len(r) == 4 for r in datum.roots)
    assert all(len(c) == 4 for c in datum.coroots)
    x = (1, 0, 5, -2)
    y = datum.reflect(0, x)
    assert y[2:] == (5, -2)  # extra coordinates are W-fixed
    empty = BasedRootDatum(None, lattice_rank=2)
    assert empty.roots == ()
