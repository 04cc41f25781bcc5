import pytest

from zipcone.bruhat import (
    PairClass,
    admissible_pairs,
    bruhat_leq,
    enum_IW,
    gamma,
    is_min_rep,
    is_separating,
    lower_neighbors,
    lower_neighbors_oracle,
    preceq,
    rank_matrix,
    stratum_dim,
)
from zipcone.weylroot import (
    Root,
    WeylElem,
    canonical_elements,
    compose,
    levi_elements,
    reflection,
    weyl_elements,
)


def classes(w):
    return {(p.i, p.j): p.cls for p in admissible_pairs(w)}


def test_rank_matrix_identity():
    ident = WeylElem.identity(3)
    for i in range(1, 7):
        for j in range(1, 7):
            assert rank_matrix(ident, i, j) == min(i, j)


def test_rank_matrix_w0_rank2():
    w0 = WeylElem.parse("4 3 2 1")
    assert rank_matrix(w0, 1, 1) == 0
    assert rank_matrix(w0, 2, 3) == 1


def test_rank_matrix_bounds():
    with pytest.raises(ValueError):
        rank_matrix(WeylElem.identity(2), 0, 1)
    with pytest.raises(ValueError):
        rank_matrix(WeylElem.identity(2), 1, 5)


def test_bruhat_examples():
    assert bruhat_leq(WeylElem.parse("3 4 1 2"), WeylElem.parse("4 3 2 1"))
    assert not bruhat_leq(WeylElem.parse("4 3 2 1"), WeylElem.parse("3 4 1 2"))
    with pytest.raises(ValueError):
        bruhat_leq(WeylElem.identity(2), WeylElem.identity(3))


@pytest.mark.parametrize("n", [2, 3])
def test_bruhat_partial_order_axioms(n):
    elems = list(weyl_elements(n))
    ident = WeylElem.identity(n)
    for w in elems:
        assert bruhat_leq(ident, w)
        assert bruhat_leq(w, w)
    for w1 in elems:
        for w2 in elems:
            if w1 != w2:
                assert not (bruhat_leq(w1, w2) and bruhat_leq(w2, w1))


def test_admissible_pairs_identity_empty():
    assert admissible_pairs(WeylElem.identity(3)) == []


def test_admissible_pairs_w0_rank2():
    got = classes(WeylElem.parse("4 3 2 1"))
    assert got == {
        (1, 2): PairClass.E1,
        (2, 3): PairClass.E3,
        (3, 4): PairClass.OTHER,
    }


def test_admissible_pairs_wmax_rank2():
    got = classes(WeylElem.parse("3 4 1 2"))
    assert got == {
        (1, 3): PairClass.OTHER,
        (1, 4): PairClass.E3,
        (2, 3): PairClass.E3,
        (2, 4): PairClass.OTHER,
    }


@pytest.mark.parametrize("n", [2, 3])
def test_e_classes_partition(n):
    # each admissible pair gets exactly one label; the three E conditions
    # never overlap
    for w in weyl_elements(n):
        for p in admissible_pairs(w):
            hits = 0
            if p.j <= n:
                hits += 1
            if p.i <= n < p.j and w(p.i) <= n and w(p.j) <= n:
                hits += 1
            if p.i <= n and p.j == 2 * n + 1 - p.i:
                hits += 1
            assert hits == (0 if p.cls is PairClass.OTHER else 1)


def test_gamma_examples():
    w0 = WeylElem.parse("4 3 2 1")
    by_pos = {(p.i, p.j): p for p in admissible_pairs(w0)}
    assert gamma(by_pos[(1, 2)], w0) == Root.diff(1, 2)
    assert gamma(by_pos[(2, 3)], w0) == Root.long(2)
    wmax = WeylElem.parse("3 4 1 2")
    by_pos = {(p.i, p.j): p for p in admissible_pairs(wmax)}
    assert gamma(by_pos[(1, 4)], wmax) == Root.long(1)
    with pytest.raises(ValueError):
        gamma(by_pos[(1, 3)], wmax)  # OTHER class carries no root


def test_lower_neighbors_examples():
    assert lower_neighbors(WeylElem.identity(2)).roots == frozenset()
    assert lower_neighbors(WeylElem.parse("4 3 2 1")).roots == {
        Root.diff(1, 2),
        Root.long(2),
    }
    assert lower_neighbors(WeylElem.parse("3 4 1 2")).roots == {
        Root.long(1),
        Root.long(2),
    }


@pytest.mark.parametrize("n", [2, 3])
def test_gamma_bijection_exhaustive(n):
    for w in weyl_elements(n):
        pairs = [p for p in admissible_pairs(w) if p.cls is not PairClass.OTHER]
        roots = [gamma(p, w) for p in pairs]
        assert len(set(roots)) == len(roots)  # injective on the E-classes
        assert frozenset(roots) == lower_neighbors_oracle(w).roots


@pytest.mark.parametrize("n", [2, 3])
def test_covers_drop_length_by_exactly_one(n):
    for w in weyl_elements(n):
        lw = w.length()
        for alpha in lower_neighbors(w).roots:
            ws = compose(w, reflection(alpha, n))
            assert ws.length() == lw - 1
            assert bruhat_leq(ws, w)


def test_is_separating_examples():
    assert is_separating(WeylElem.identity(3))
    assert is_separating(WeylElem.parse("4 3 2 1"))


def test_non_separating_elements_exist():
    # any element with more lower neighbors than the rank is dependent
    found = False
    for w in weyl_elements(3):
        roots = lower_neighbors(w).roots
        if len(roots) > 3:
            assert not is_separating(w)
            found = True
    assert found


def test_enum_IW_rank1():
    assert enum_IW(1) == [WeylElem.identity(1), WeylElem.parse("2 1")]


def test_enum_IW_rank2():
    got = [str(w) for w in enum_IW(2)]
    assert got == ["1 2 3 4", "1 3 2 4", "3 1 4 2", "3 4 1 2"]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enum_IW_matches_length_criterion(n):
    reps = enum_IW(n)
    assert len(reps) == 2**n
    assert reps[-1] == canonical_elements(n).wmax
    filtered = sorted(
        (w for w in weyl_elements(n) if is_min_rep(w)),
        key=lambda w: (w.length(), w.window),
    )
    assert reps == filtered


@pytest.mark.parametrize("n", [2, 3, 4])
def test_unique_levi_factorization(n):
    reps = set(enum_IW(n))
    levi = levi_elements(n)
    for w in weyl_elements(n):
        coset = [compose(u, w) for u in levi]
        in_reps = [v for v in coset if v in reps]
        assert len(in_reps) == 1  # exactly one minimal representative per coset
        v = in_reps[0]
        u = compose(w, v.inverse())
        assert u in set(levi)
        assert u.length() + v.length() == w.length()


def test_preceq_examples():
    for n in (2, 3, 4):
        reps = enum_IW(n)
        top = canonical_elements(n).wmax
        for w in reps:
            assert preceq(reps[0], w)
            assert preceq(w, top)
            assert preceq(w, w)


def test_preceq_requires_min_reps():
    with pytest.raises(ValueError):
        preceq(WeylElem.parse("4 3 2 1"), WeylElem.parse("3 4 1 2"))


@pytest.mark.parametrize("n", [2, 3])
def test_preceq_order_axioms(n):
    reps = enum_IW(n)
    rel = {(a, b): preceq(a, b) for a in reps for b in reps}
    for a in reps:
        for b in reps:
            if a != b:
                assert not (rel[(a, b)] and rel[(b, a)])
            if bruhat_leq(a, b):
                assert rel[(a, b)]  # preceq refines Bruhat on the reps
            for c in reps:
                if rel[(a, b)] and rel[(b, c)]:
                    assert rel[(a, c)]


def test_stratum_dim():
    for n in (1, 2, 3, 4):
        reps = enum_IW(n)
        ident = reps[0]
        top = canonical_elements(n).wmax
        dim_p = stratum_dim(ident)
        # the top stratum is open dense: its dimension is the full group's
        assert stratum_dim(top) == n * (2 * n + 1) + 1
        assert stratum_dim(top) - dim_p == n * (n + 1) // 2
    with pytest.raises(ValueError):
        stratum_dim(WeylElem.parse("4 3 2 1"))
