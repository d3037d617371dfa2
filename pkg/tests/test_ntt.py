import random

import pytest
from hypothesis import given, settings, strategies as st

from hybridmul.field import FieldCtx, FieldError, OpCount, max_ntt_depth
from hybridmul.ntt import Inner, build_plan, incomplete_ntt_mul, ntt_forward, ntt_inverse, pointwise_mul
from hybridmul.opcounter import pipeline_exact_counts, verify_transform_cost
from hybridmul.poly import Poly, negacyclic_schoolbook, poly_add_sub

F5 = FieldCtx(5)
K = FieldCtx(3329)


def rand_poly(rng, ctx, n):
    return Poly(ctx, tuple(rng.randrange(ctx.q) for _ in range(n)))


def remainder(q, coeffs, d, omega):
    c = list(coeffs)
    for k in range(len(c) - 1, d - 1, -1):
        t, c[k] = c[k], 0
        c[k - d] = (c[k - d] + t * omega) % q
    return c[:d]


def test_trivial_plan():
    ctx = FieldCtx(8380403)
    plan = build_plan(ctx, 256, 0)
    assert plan.components == 1 and plan.d == 256
    f = rand_poly(random.Random(0), ctx, 256)
    assert ntt_forward(f, plan) == [f]
    assert ntt_inverse([f], plan) == f
    with pytest.raises(FieldError):
        build_plan(ctx, 256, 1)


def test_q5_plan():
    plan = build_plan(F5, 2, 1)
    assert plan.zeta == 2 and set(plan.omegas) == {2, 3}
    for a in range(5):
        for b in range(5):
            comps = ntt_forward(Poly(F5, (a, b)), plan)
            want = {2: (a + 2 * b) % 5, 3: (a - 2 * b) % 5}
            assert [c.coeffs[0] for c in comps] == [want[w] for w in plan.omegas]
    assert ntt_inverse([Poly(F5, (1,)), Poly(F5, (1,))], plan).coeffs == (1, 0)


def test_constant_is_crt_invariant():
    plan = build_plan(K, 64, 4)
    one = Poly(K, (1,) + (0,) * 63)
    assert all(c.coeffs == (1,) + (0,) * 3 for c in ntt_forward(one, plan))


def test_size_errors():
    plan = build_plan(K, 16, 2)
    with pytest.raises(ValueError):
        ntt_forward(Poly(K, (1,) * 8), plan)
    with pytest.raises(ValueError):
        ntt_inverse([Poly(K, (1,) * 4)] * 3, plan)
    with pytest.raises(ValueError):
        build_plan(K, 24, 1)


@pytest.mark.parametrize("ell", range(1, 8))
def test_roundtrip_kyber_prime(ell):
    plan = build_plan(K, 256, ell)
    rng = random.Random(ell)
    for _ in range(5):
        f = rand_poly(rng, K, 256)
        assert ntt_inverse(ntt_forward(f, plan), plan) == f


@pytest.mark.parametrize("q,n", [(3329, 16), (3329, 64), (8380417, 64), (8380369, 32), (8380249, 16)])
def test_crt_agreement(q, n):
    ctx = FieldCtx(q)
    rng = random.Random(q)
    for ell in range(max_ntt_depth(ctx, n) + 1):
        plan = build_plan(ctx, n, ell)
        f = rand_poly(rng, ctx, n)
        for comp, w in zip(ntt_forward(f, plan), plan.omegas):
            assert list(comp.coeffs) == remainder(q, f.coeffs, plan.d, w)
        # omega_j are distinct roots of t^(2^ell) + 1
        assert len(set(plan.omegas)) == plan.components
        assert all(pow(w, plan.components, q) == q - 1 for w in plan.omegas)


@settings(max_examples=30)
@given(st.data())
def test_forward_is_additive(data):
    plan = build_plan(K, 32, 4)
    a = Poly(K, tuple(data.draw(st.lists(st.integers(0, 3328), min_size=32, max_size=32))))
    b = Poly(K, tuple(data.draw(st.lists(st.integers(0, 3328), min_size=32, max_size=32))))
    lhs = ntt_forward(poly_add_sub(a, b), plan)
    rhs = [poly_add_sub(x, y) for x, y in zip(ntt_forward(a, plan), ntt_forward(b, plan))]
    assert lhs == rhs


def test_full_ntt_pointwise_is_scalar():
    ctx = FieldCtx(8380417)
    plan = build_plan(ctx, 16, 4)
    rng = random.Random(3)
    f, g = rand_poly(rng, ctx, 16), rand_poly(rng, ctx, 16)
    u, v = ntt_forward(f, plan), ntt_forward(g, plan)
    w = pointwise_mul(u, v, plan, Inner("schoolbook"))
    assert [c.coeffs[0] for c in w] == [x.coeffs[0] * y.coeffs[0] % ctx.q for x, y in zip(u, v)]


def test_pointwise_identity():
    plan = build_plan(K, 64, 3)
    rng = random.Random(4)
    f = rand_poly(rng, K, 64)
    one = Poly(K, (1,) + (0,) * 63)
    u = ntt_forward(f, plan)
    for inner in (Inner("schoolbook"), Inner("karatsuba"), Inner("toom4", 1)):
        assert pointwise_mul(u, ntt_forward(one, plan), plan, inner) == u


def test_karatsuba_pipeline_matches_oracle():
    plan = build_plan(K, 256, 4)
    rng = random.Random(5)
    for _ in range(3):
        f, g = rand_poly(rng, K, 256), rand_poly(rng, K, 256)
        assert incomplete_ntt_mul(f, g, plan, Inner("karatsuba")) == negacyclic_schoolbook(f, g)


def test_parallel_gives_same_result_and_counts():
    ctx = FieldCtx(8380417)
    plan = build_plan(ctx, 256, 2)
    rng = random.Random(6)
    f, g = rand_poly(rng, ctx, 256), rand_poly(rng, ctx, 256)
    inner = Inner("toom4", 1)
    c1, c2 = OpCount(), OpCount()
    r1 = incomplete_ntt_mul(f, g, plan, inner, c1)
    r2 = incomplete_ntt_mul(f, g, plan, inner, c2, parallel=True)
    assert r1 == r2 == negacyclic_schoolbook(f, g)
    assert c1 == c2 == pipeline_exact_counts(256, 2, inner)


def test_inner_validation():
    with pytest.raises(ValueError):
        Inner("fft")
    with pytest.raises(ValueError):
        Inner("karatsuba", 2)
    with pytest.raises(ValueError, match="characteristic"):
        Inner("toom4", 1).check(5, 4)


@pytest.mark.parametrize("n,ell,q,A,M", [(256, 7, 3329, 5376, 2944), (2, 1, 5, 6, 5), (64, 0, 3329, 0, 0),
                                         (256, 8, 8380417, 6144, 3328)])
def test_transform_cost(n, ell, q, A, M):
    r = verify_transform_cost(n, ell, q)
    assert r["ok"] and r["measured"] == {"adds": A, "muls": M}
