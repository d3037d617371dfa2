import pytest
from hypothesis import given, strategies as st

from hybridmul.field import (
    CountingField, FieldCtx, FieldError, OpCount, field_arith, find_primitive_root_of_unity,
    is_prime, log2_exact, max_ntt_depth, two_adic_valuation,
)

Q = 8380417
F = FieldCtx(Q)
elems = st.integers(0, Q - 1)


def test_wraparound():
    assert FieldCtx(3329).add(3328, 1) == 0


def test_small_examples():
    F5 = FieldCtx(5)
    assert F5.mul(2, 2) == 4
    assert F5.pow(2, 2) == 4 == 5 - 1
    assert FieldCtx(7).inv(120 % 7) == 1


def test_field_arith_dispatch():
    F5 = FieldCtx(5)
    assert field_arith(F5, "add", 3, 4) == 2
    assert field_arith(F5, "sub", 1, 3) == 3
    assert field_arith(F5, "neg", 2) == 3
    assert field_arith(F5, "inv", 2) == 3
    assert field_arith(F5, "pow", 3, 4) == 1
    with pytest.raises(ValueError):
        field_arith(F5, "div", 1, 2)


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


@pytest.mark.parametrize("q", [1, 2, 4, 9, 15, 8380418, 561, 1 << 62 | 1])
def test_bad_moduli(q):
    with pytest.raises(FieldError):
        FieldCtx(q)


def test_elem_reduces():
    assert FieldCtx(5).elem(7) == 2 and FieldCtx(5).elem(-1) == 4


def test_is_prime_against_sieve():
    N = 5000
    sieve = [True] * N
    sieve[0] = sieve[1] = False
    for i in range(2, N):
        if sieve[i]:
            for j in range(i * i, N, i):
                sieve[j] = False
    assert [i for i in range(N) if is_prime(i)] == [i for i in range(N) if sieve[i]]
    for q in (3329, 8380417, 8380403, 8380381, 8380249, 8380369):
        assert is_prime(q)


@pytest.mark.parametrize("m,v", [(8380368, 4), (8380402, 1), (1, 0), (8380416, 13), (3328, 8)])
def test_two_adic_valuation(m, v):
    assert two_adic_valuation(m) == v


def test_two_adic_valuation_rejects_nonpositive():
    with pytest.raises(ValueError):
        two_adic_valuation(0)


def test_log2_exact():
    assert log2_exact(1) == 0 and log2_exact(1024) == 10
    for bad in (0, 3, 12, -4):
        with pytest.raises(ValueError):
            log2_exact(bad)


@pytest.mark.parametrize("q,n,ell", [(8380249, 512, 2), (3329, 256, 7), (8380417, 256, 8),
                                     (8380403, 1024, 0), (8380381, 512, 1), (8380369, 256, 3),
                                     (8380417, 16, 4)])
def test_max_ntt_depth(q, n, ell):
    assert max_ntt_depth(FieldCtx(q), n) == ell


def test_roots():
    assert find_primitive_root_of_unity(FieldCtx(5), 4) == 2
    z = find_primitive_root_of_unity(FieldCtx(3329), 256)
    assert pow(z, 128, 3329) == 3328
    with pytest.raises(FieldError):
        find_primitive_root_of_unity(FieldCtx(8380403), 4)


@pytest.mark.parametrize("q", [3329, 8380417, 8380381, 8380249, 8380369])
def test_root_order_and_depth_consistency(q):
    ctx = FieldCtx(q)
    for n in (16, 256, 1024):
        lmax = max_ntt_depth(ctx, n)
        for ell in range(lmax + 1):
            z = find_primitive_root_of_unity(ctx, 2 ** (ell + 1))
            assert (pow(z, 2 ** ell, q) + 1) % q == 0
            assert all(pow(z, 2 ** j, q) != 1 for j in range(ell + 1))
        if lmax < n.bit_length() - 1:
            with pytest.raises(FieldError):
                find_primitive_root_of_unity(ctx, 2 ** (lmax + 2))


@given(elems, elems)
def test_field_laws(a, b):
    assert F.add(a, b) == F.add(b, a)
    assert F.sub(a, a) == 0
    assert F.add(F.sub(a, b), b) == a
    if a:
        assert F.mul(a, F.inv(a)) == 1


@given(st.lists(elems, min_size=1, max_size=20), elems)
def test_vector_ops_match_scalars(xs, c):
    ys = [(x * 7 + 3) % Q for x in xs]
    assert F.vadd(xs, ys) == [F.add(x, y) for x, y in zip(xs, ys)]
    assert F.vsub(xs, ys) == [F.sub(x, y) for x, y in zip(xs, ys)]
    assert F.vscale(c, xs) == [F.mul(c, x) for x in xs]


def test_counting_seam():
    c = OpCount()
    G = F.counting(c)
    assert isinstance(G, CountingField) and G.counter is c
    G.add(1, 2); G.sub(1, 2); G.mul(3, 4)
    G.neg(5); G.pow(3, 10); G.inv(3)
    assert (c.adds, c.muls) == (2, 1)
    G.vadd([1, 2, 3], [4, 5, 6])
    G.vscale(2, [1, 2])
    dst = [0] * 5
    G.add_into(dst, [1, 1], 2)
    assert dst == [0, 0, 1, 1, 0]
    assert (c.adds, c.muls) == (7, 3)
    assert F.counter is None


def test_opcount_arithmetic():
    a, b = OpCount(3, 4), OpCount(1, 1)
    assert a + b == OpCount(4, 5) and a - b == OpCount(2, 3)
    a.merge(b)
    assert a.as_dict() == {"adds": 4, "muls": 5}
