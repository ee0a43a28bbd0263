from itertools import combinations

import pytest

from wschub.exactpoly import dot
from wschub.rootdata import (
    ParabolicCosets,
    RootDatumError,
    WeylGroup,
    WeylGroupTooLarge,
    build_root_datum,
)

PRESETS = ["gl(2)", "gl(3)", "gl(4)", "cstar_gl(4)", "cstar_sp4"]
ORDERS = {"gl(2)": 2, "gl(3)": 6, "gl(4)": 24, "cstar_gl(4)": 24, "cstar_sp4": 8, "gl(5)": 120}


@pytest.fixture(scope="module", params=PRESETS)
def group(request):
    return WeylGroup(build_root_datum(request.param))


def test_presets():
    d = build_root_datum("cstar_sp4")
    assert d.simple_roots == ((0, 1, -1), (0, 0, 2))
    assert d.simple_coroots == ((0, 1, -1), (0, 0, 1))
    assert d.cartan_matrix == [[2, -1], [-2, 2]]
    g2 = build_root_datum("gl(2)")
    assert g2.simple_roots == ((1, -1),) and g2.simple_coroots == ((1, -1),)
    c4 = build_root_datum("cstar_gl(4)")
    pos = sorted(a for a, _ in c4.positive_roots)
    want = sorted(tuple(int(k == i) - int(k == j) for k in range(5))
                  for i in range(1, 5) for j in range(i + 1, 5))
    assert pos == want


def test_bad_data():
    with pytest.raises(RootDatumError):
        build_root_datum({"simple_roots": [[1, -1]], "simple_coroots": [[1, 0]]})
    with pytest.raises(RootDatumError):
        build_root_datum("e8")
    with pytest.raises(WeylGroupTooLarge):
        WeylGroup(build_root_datum("gl(5)"), limit=50)


@pytest.mark.parametrize("name", sorted(ORDERS))
def test_group_order(name):
    G = WeylGroup(build_root_datum(name))
    assert len(G) == ORDERS[name]
    assert G.longest.length == len(G.datum.positive_roots)


def test_positive_roots_are_nonnegative_combinations(group):
    d = group.datum
    for a, c in d.positive_roots:
        coords = d.simple_coords(a)
        assert all(x >= 0 and int(x) == x for x in coords)
        assert dot(a, c) == 2
        assert all(x <= 0 for x in d.root_coeffs(a))


def test_length_equals_inversions(group):
    for w in group:
        assert len(group.inversions(w)) == w.length


def test_word_gives_matrix_and_action(group):
    d = group.datum
    for w in group:
        assert group.from_word(w.word) == w
        # act fixes the orthogonal complement of the coroots
        for k in range(d.rank):
            e = tuple(int(i == k) for i in range(d.rank))
            if all(c[k] == 0 for c in d.simple_coroots):
                assert w.act(e) == e
        assert group.mul(w, group.inverse(w)) == group.identity


def test_canonical_word_is_lex_least(group):
    """Brute force over all words of the right length."""
    from itertools import product

    n = group.datum.n
    for w in group:
        if w.length > 4:
            continue
        words = [wd for wd in product(range(n), repeat=w.length) if group.from_word(wd) == w]
        assert w.word == min(words)


def _subword_leq(group, u, v):
    for k in range(v.length + 1):
        for idx in combinations(range(v.length), k):
            if group.from_word([v.word[i] for i in idx]) == u:
                return True
    return False


@pytest.mark.parametrize("name", ["gl(3)", "gl(4)", "cstar_sp4"])
def test_bruhat_matches_subword_property(name):
    G = WeylGroup(build_root_datum(name))
    for u in G:
        for v in G:
            assert G.bruhat_leq(u, v) == _subword_leq(G, u, v)


def test_action_examples():
    G = WeylGroup(build_root_datum("cstar_sp4"))
    lam = (1, 1, 1)
    assert G.longest.act(lam) == (1, -1, -1)
    assert G.identity.act((3, 4, 5)) == (3, 4, 5)
    assert G.from_word([1, 0]).act(lam) == (1, 1, -1)


# parabolic quotients -------------------------------------------------------
def subsets(n):
    for k in range(n + 1):
        yield from combinations(range(n), k)


@pytest.mark.parametrize("name", ["gl(3)", "gl(4)", "cstar_sp4"])
def test_cosets_structure(name):
    G = WeylGroup(build_root_datum(name))
    d = G.datum
    for J in subsets(d.n):
        P = ParabolicCosets(G, J)
        WJ = [w for w in G if all(i in J for i in w.word)]
        assert len(P.reps) * len(WJ) == len(G)
        assert P.top == G.longest
        assert all(P.leq(P.bottom, w) and P.leq(w, P.top) for w in P.reps)
        for w in G:
            r = P.rep(w)
            assert r in P
            # same coset: r = w x with x in W_J
            x = G.mul(G.inverse(w), r)
            assert x in WJ
        for v in P.reps:
            if v != P.bottom:
                assert P.covers[v], "W^P must be connected by covers"
            for w, g in P.covers[v]:
                assert w.length == v.length - 1
                left = v.act(g)
                left = left if d.is_positive(left) else tuple(-x for x in left)
                assert left in P.inversion_set(v)
                assert G.mul(v, G.reflection(g)) == w
            # inversion set size is the dimension of the Schubert cell
            assert len(P.inversion_set(v)) == v.length - G.longest.length + len(P.u_minus)
        if not J:
            assert set(P.reps) == set(G)


def test_wps_chain_and_inversions():
    G = WeylGroup(build_root_datum("gl(5)"))
    P = ParabolicCosets(G, [1, 2, 3])
    lam = (1, 0, 0, 0, 0)
    v = {w.act(lam).index(1): w for w in P.reps}
    assert [P.position(v[k]) for k in range(5)] == [4, 3, 2, 1, 0]
    for i in range(5):
        for j in range(5):
            assert P.leq(v[i], v[j]) == (i <= j)
    for k in range(5):
        want = {tuple(int(t == i) - int(t == k) for t in range(5)) for i in range(k)}
        assert set(P.inversion_set(v[k])) == want
    assert P.interval_intersection(v[2], v[2], v[1]) == [v[2], v[1]]
    assert P.interval_intersection(v[2], v[2], v[2]) == [v[2]]
    assert P.interval_intersection(v[1], v[2], v[3]) == []


def test_gr24_poset():
    G = WeylGroup(build_root_datum("cstar_gl(4)"))
    P = ParabolicCosets(G, [0, 2])
    lam = (1, 1, 1, 0, 0)
    by = {frozenset(i for i in range(1, 5) if w.act(lam)[i]): w for w in P.reps}
    a, b = by[frozenset({1, 4})], by[frozenset({2, 3})]
    assert not P.leq(a, b) and not P.leq(b, a)
    assert {w for w, _ in P.covers[by[frozenset({2, 4})]]} == {a, b}
    assert len(P.reps) == 6


def test_lg_reps_and_root_coeffs():
    G = WeylGroup(build_root_datum("cstar_sp4"))
    P = ParabolicCosets(G, [0])
    lam = (1, 1, 1)
    assert [w.act(lam) for w in P.reps] == [(1, -1, -1), (1, -1, 1), (1, 1, -1), (1, 1, 1)]
    assert set(P.inversion_set(P.top)) == {(0, 0, 2), (0, 1, 1), (0, 2, 0)}
    assert P.inversion_set(P.bottom) == []
    d = G.datum
    assert d.root_coeffs((0, 0, -2)) == (0, 1)
    assert d.root_coeffs((0, 0, 0)) == (0, 0)
    assert d.root_coeffs(lam) is None
