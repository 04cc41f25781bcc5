import random

import pytest

from zipcone.bruhat import is_separating, lower_neighbors
from zipcone.cones import lmin_member
from zipcone.hasse import (
    anchor_element,
    chi_is_valid,
    compare_step_weights,
    descent_path,
    eset_reference,
    eset_verified,
    ha_closed_form,
    hasse_map,
    pha_multiplicities,
    solve_chi,
    verify_path_lemmas,
)
from zipcone.weylroot import (
    Character,
    Root,
    WeylElem,
    act,
    canonical_elements,
    pairing,
    weyl_elements,
)


def test_hasse_map_rejects_small_p():
    with pytest.raises(ValueError):
        hasse_map(WeylElem.identity(2), 1)


def test_hasse_map_zero_and_linearity():
    hm = hasse_map(canonical_elements(2).w0, 3)
    zero = Character.zero(2)
    assert hm.apply(zero) == zero
    x = Character((2, -1), 1)
    y = Character((0, 4), 1)
    assert hm.apply(x + y) == hm.apply(x) + hm.apply(y)


def test_hasse_map_example():
    hm = hasse_map(canonical_elements(2).w0, 3)
    assert hm.apply(Character.unit(2, 1)) == Character((1, -3), 0)


def test_hasse_map_at_wmax_is_scaled_action():
    for n, p in [(2, 3), (3, 5)]:
        wmax = canonical_elements(n).wmax
        hm = hasse_map(wmax, p)
        for k in range(1, n + 1):
            e = Character.unit(n, k)
            assert hm.apply(e) == (p - 1) * act(wmax, e)


def test_hasse_map_preserves_parity():
    rng = random.Random(2)
    for n, p in [(2, 2), (3, 3), (4, 5)]:
        for w in [canonical_elements(n).w0, canonical_elements(n).wmax]:
            hm = hasse_map(w, p)
            for _ in range(25):
                a = [rng.randint(-9, 9) for _ in range(n)]
                b = sum(a) % 2 + 2 * rng.randint(-2, 2)
                chi = Character(tuple(a), b)
                assert chi.satisfies_parity
                assert hm.apply(chi).satisfies_parity


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("n", [2, 3])
def test_hasse_map_injective(n, p):
    for w in weyl_elements(n):
        assert hasse_map(w, p).determinant() != 0


def test_hasse_map_b_coordinate():
    hm = hasse_map(canonical_elements(3).w0, 5)
    assert hm.apply(Character((0, 0, 0), 1)) == Character((0, 0, 0), 4)


def test_inverse_apply_round_trip():
    rng = random.Random(9)
    hm = hasse_map(canonical_elements(3).w0, 3)
    for _ in range(20):
        chi = Character(tuple(rng.randint(-9, 9) for _ in range(3)), rng.randint(-4, 4))
        lam = hm.apply(chi)
        back = hm.inverse_apply(lam)
        assert back.to_integral() == chi


def test_pha_multiplicities_examples():
    w0 = canonical_elements(2).w0
    assert pha_multiplicities(w0, Character.zero(2)) == {
        Root.diff(1, 2): 0,
        Root.long(2): 0,
    }
    assert pha_multiplicities(w0, Character.unit(2, 1)) == {
        Root.diff(1, 2): 1,
        Root.long(2): 0,
    }


def test_pha_multiplicities_on_path_steps():
    # the step character vanishes to order 1 on its own boundary stratum and
    # to order 0 on every other one
    for step in descent_path(4, 3):
        mults = pha_multiplicities(step.w, step.chi)
        assert mults[step.beta] == 1
        assert all(m == 0 for a, m in mults.items() if a != step.beta)


def test_solve_chi_examples():
    w0 = canonical_elements(2).w0
    chi_diff = solve_chi(w0, Root.diff(1, 2))
    assert chi_diff.a == (1, 0)
    assert chi_diff.satisfies_parity
    chi_long = solve_chi(w0, Root.long(2))
    assert chi_long.a == (1, 1) and chi_long.b == 0
    assert chi_is_valid(w0, Root.diff(1, 2), Character.unit(2, 1))


def test_solve_chi_rejects_bad_input():
    w0 = canonical_elements(2).w0
    with pytest.raises(ValueError):
        solve_chi(w0, Root.long(1))  # not a lower neighbor of w0
    nonsep = next(
        w for w in weyl_elements(3) if len(lower_neighbors(w).roots) > 3
    )
    beta = next(iter(lower_neighbors(nonsep).roots))
    with pytest.raises(ValueError):
        solve_chi(nonsep, beta)


def test_solve_chi_on_path_steps():
    # unique solution on the fully determined steps; validator elsewhere
    for n, p in [(3, 3), (4, 3), (5, 2)]:
        for step in descent_path(n, p):
            assert chi_is_valid(step.w, step.beta, step.chi)
            if step.d <= n - 2:
                assert solve_chi(step.w, step.beta).a == step.chi.a


def test_anchor_elements():
    assert anchor_element(3, 1) == WeylElem.longest(3)
    assert anchor_element(3, 2) == WeylElem.parse("5 6 4 3 1 2")
    assert anchor_element(3, 3) == canonical_elements(3).wmax
    assert anchor_element(4, 3) == WeylElem.parse("6 7 8 5 4 1 2 3")
    with pytest.raises(ValueError):
        anchor_element(3, 4)


def test_descent_path_rank2():
    steps = descent_path(2, 3)
    assert len(steps) == 1
    (step,) = steps
    assert step.w == WeylElem.parse("4 3 2 1")
    assert step.beta == Root.diff(1, 2)
    assert step.chi == Character.unit(2, 1)
    assert step.ha == Character((1, -3), 0)


def test_descent_path_rank3_lengths():
    steps = descent_path(3, 5)
    assert [s.w.length() for s in steps] == [9, 8, 7]
    assert [str(s.w) for s in steps] == ["6 5 4 3 2 1", "5 6 4 3 1 2", "4 6 5 2 1 3"]


def test_descent_path_edge_cases():
    assert descent_path(1, 3) == []
    with pytest.raises(ValueError):
        descent_path(2, 1)
    with pytest.raises(ValueError):
        descent_path(0, 3)


@pytest.mark.parametrize("n", range(2, 9))
def test_descent_path_step_count(n):
    assert len(descent_path(n, 2)) == n * (n - 1) // 2


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_descent_path_separating(n):
    for step in descent_path(n, 2):
        assert is_separating(step.w)


def test_ha_closed_form_examples():
    p = 11
    assert ha_closed_form(3, p, 1, 0) == Character((0, 1, -p), 0)
    assert ha_closed_form(3, p, 2, 1) == Character((0, 1 - p, 0), 0)
    with pytest.raises(ValueError):
        ha_closed_form(3, 2, 3, 0)
    with pytest.raises(ValueError):
        ha_closed_form(3, 2, 2, 2)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_weights_land_in_orbit_cone(n, p):
    for step in descent_path(n, p):
        assert lmin_member(step.ha, p)
        assert lmin_member(ha_closed_form(n, p, step.d, step.i), p)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_first_index_shift_everywhere(n):
    # computed first term e_{d-i} vs closed-form e_{d-i+1}; the -p e_{n-i}
    # terms always agree
    for p in (2, 3):
        for step in descent_path(n, p):
            rel = compare_step_weights(n, p, step.d, step.i, step.ha)
            assert rel == "first_index_shift"
            assert step.ha.a[n - step.i - 1] == -p


def test_chi_orthogonality_on_computed_esets():
    # pairing(chi, beta) = 1 and 0 on the rest of the computed neighbor set;
    # holds for the actual sets, including the long roots the closed form
    # misses at d = n-1
    for n in (2, 3, 4, 5):
        for step in descent_path(n, 2):
            roots = lower_neighbors(step.w).roots
            assert step.beta in roots
            assert pairing(step.chi, step.beta) == 1
            for alpha in roots:
                if alpha != step.beta:
                    assert pairing(step.chi, alpha) == 0


def test_eset_reference_rank2():
    assert eset_reference(2, 1, 0) == {Root.diff(1, 2), Root.long(2)}
    assert eset_verified(2, 1, 0) == eset_reference(2, 1, 0)


def test_eset_closed_forms_rank3():
    assert eset_reference(3, 1, 0) == {Root.diff(1, 2), Root.diff(2, 3), Root.long(3)}
    assert eset_reference(3, 2, 0) == {Root.diff(1, 3), Root.diff(2, 3), Root.long(3)}
    assert eset_reference(3, 2, 1) == {Root.diff(2, 3), Root.long(3)}
    assert eset_verified(3, 2, 1) == {Root.diff(2, 3), Root.long(1), Root.long(3)}


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_every_path_element_has_n_lower_neighbors(n):
    for step in descent_path(n, 2):
        assert len(lower_neighbors(step.w).roots) == n


def test_verify_path_lemmas_rank2():
    report = verify_path_lemmas(2, 3)
    assert report.all_passed
    assert report.reference_mismatches == ()
    (step,) = report.steps
    assert step.computed_eset == ("e1-e2", "2e2")
    assert step.matches_reference


def test_verify_path_lemmas_rank3():
    report = verify_path_lemmas(3, 5)
    assert report.all_passed
    # the closed-form reference misses long roots exactly at d=n-1, i>=1
    assert report.reference_mismatches == ((2, 1),)
    by_index = {(s.d, s.i): s for s in report.steps}
    assert by_index[(2, 1)].extra_vs_reference == ("2e1",)
    assert by_index[(2, 1)].matches_verified


@pytest.mark.parametrize("n", [4, 5])
def test_verify_path_lemmas_reference_gap_pattern(n):
    report = verify_path_lemmas(n, 3)
    assert report.all_passed
    expected = tuple((n - 1, i) for i in range(1, n - 1))
    assert report.reference_mismatches == expected
    for s in report.steps:
        if s.d == n - 1 and s.i >= 1:
            assert s.extra_vs_reference == tuple(f"2e{k}" for k in range(1, s.i + 1))
