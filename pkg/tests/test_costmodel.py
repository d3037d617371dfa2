from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hybridmul.costmodel import (
    REFERENCE_TABLE, as_weight, diff_reference, fmt1, hybrid_model_counts, karatsuba_model_counts, optimal_L,
    pure_toom_depth, reproduce_table1, total_breakdown, total_cost, weighted_subproblem_cost,
)

W = Fraction(1, 5)


@pytest.mark.parametrize("d,want", [(1, (1, 0)), (128, (2187, 16472)), (256, (6561, 50440))])
def test_karatsuba_counts(d, want):
    assert karatsuba_model_counts(d) == want


def test_karatsuba_counts_reject():
    with pytest.raises(ValueError):
        karatsuba_model_counts(12)


def test_hybrid_counts():
    assert hybrid_model_counts(256, 1) == (5614, 51064)
    assert hybrid_model_counts(512, 4) == (8226, 328088)
    for d in (4, 64, 1024):
        assert hybrid_model_counts(d, 0) == karatsuba_model_counts(d)
    with pytest.raises(ValueError):
        hybrid_model_counts(16, 3)


def test_hybrid_counts_are_exact_rationals():
    t_m, t_a = hybrid_model_counts(64, 1)
    assert isinstance(t_a, Fraction)
    assert t_m == 7 * 81 + 127
    assert t_a == 7 * 8 * (81 - 16) + 72 * 64 * Fraction(3, 4)


def test_weighted_subproblem_cost():
    assert weighted_subproblem_cost(128, 0, 0.2) == Fraction(54814, 10)
    assert weighted_subproblem_cost(256, 1, W) == Fraction(158268, 10)
    assert weighted_subproblem_cost(256, 2, 0) == hybrid_model_counts(256, 2)[0]


@pytest.mark.parametrize("args,want", [((256, 0, 1), "15877.8"), ((256, 1, 0), "12061.2"), ((1024, 2, 1), "69856.0")])
def test_total_cost(args, want):
    assert fmt1(total_cost(*args, w=W)) == want


def test_breakdown_agrees_with_total():
    for n, ell in [(256, 0), (256, 3), (1024, 2)]:
        for L in range(pure_toom_depth(n >> ell) + 1):
            assert total_breakdown(n, ell, L, W).weighted == total_cost(n, ell, L, W)


@pytest.mark.parametrize("d,L", [(256, 1), (128, 0), (1024, 2), (512, 2), (64, 0)])
def test_optimal_L(d, L):
    assert optimal_L(d, W)[0] == L


def test_optimal_L_is_argmin():
    for n in (256, 512, 1024, 2048):
        for ell in range(4):
            d = n >> ell
            L_opt, _ = optimal_L(d, W)
            best = total_cost(n, ell, L_opt, W)
            assert all(best <= total_cost(n, ell, L, W) for L in range(pure_toom_depth(d) + 1))


def test_small_d_reduces_to_karatsuba():
    for d in (1, 2, 4, 8, 16, 32, 64, 128):
        assert optimal_L(d, W)[0] == 0


def test_tie_breaks_to_smaller_depth():
    # the weight at which L=1 and L=2 cost the same for d=256, and both beat every other depth
    m1, a1 = hybrid_model_counts(256, 1)
    m2, a2 = hybrid_model_counts(256, 2)
    w = (m1 - m2) / (a2 - a1)
    assert w == Fraction(27, 296)
    assert weighted_subproblem_cost(256, 1, w) == weighted_subproblem_cost(256, 2, w)
    assert optimal_L(256, w)[0] == 1
    assert optimal_L(256, w * Fraction(99, 100))[0] == 2


@pytest.mark.parametrize("d,L", [(128, 3), (256, 4), (4, 1), (2, 0), (1, 0)])
def test_pure_depth(d, L):
    assert pure_toom_depth(d) == L


def test_table_reproduces_exactly():
    rows = reproduce_table1(W)
    assert len(rows) == 9
    assert diff_reference(rows) == []
    got = {(r.n, r.ell): r.formatted() for r in rows}
    for n, ref in REFERENCE_TABLE.items():
        for ell, kar, toom, hyb, lopt in ref:
            row = got[(n, ell)]
            assert (row["karatsuba"], row["toom4"], row["hybrid"], row["L_opt"]) == (kar, toom, hyb, lopt)
    assert reproduce_table1(0.2) == rows


def test_diff_flags_mismatch():
    rows = reproduce_table1(Fraction(1, 4))
    assert diff_reference(rows)
    assert any("missing" in p for p in diff_reference(rows[:1]))


def test_extrapolated_rows():
    rows = reproduce_table1(W, ns=(2048,))
    assert [r.ell for r in rows] == [0, 1, 2, 3, 4]
    assert diff_reference(rows) == []


def test_w_zero_ranks_by_multiplications():
    for r in reproduce_table1(0):
        assert r.L_opt == r.L_max or r.d < 4


@pytest.mark.parametrize("x,s", [(Fraction(1, 20), "0.1"), (Fraction(-1, 20), "0.0"), (Fraction(-3, 20), "-0.1"), (Fraction(158268, 10), "15826.8"),
                                 (Fraction(123), "123.0"), (Fraction(1, 3), "0.3")])
def test_fmt1(x, s):
    assert fmt1(x) == s


@given(st.fractions(min_value=0, max_value=10**6))
def test_fmt1_close(x):
    assert abs(Fraction(fmt1(x)) - x) <= Fraction(1, 20)


def test_weights():
    assert as_weight(0.2) == W and as_weight("1/5") == W
    with pytest.raises(ValueError):
        as_weight(-1)
