"""Instrumented operation counts and their comparison with the closed forms.

Counts come from running the real multipliers through a ``CountingField``.
None of the algorithms branch on data, so one run per configuration is
enough; extra trials only confirm that.
"""

from __future__ import annotations

import random

from .field import FieldCtx, OpCount, log2_exact
from .karatsuba import karatsuba, karatsuba_exact_counts
from .ntt import Inner, build_plan, forward, inverse, multiply_lists
from .poly import schoolbook
from .toom4 import rescale, toom4

__all__ = [
    "OpCount", "measure", "measure_product", "measure_pipeline", "toom4_exact_counts",
    "pipeline_exact_counts", "verify_prop31", "verify_transform_cost",
]

DEFAULT_Q = 8380417


def _random_pair(q: int, d: int, rng: random.Random):
    return [rng.randrange(q) for _ in range(d)], [rng.randrange(q) for _ in range(d)]


def measure_product(strategy: str, d: int, L: int = 0, q: int = DEFAULT_Q, trials: int = 1, seed: int = 0) -> OpCount:
    """A/M for one size-d product. ``toom4`` includes the final 120^-L pass."""
    ctx = FieldCtx(q)
    rng = random.Random(seed)
    result = None
    for _ in range(max(1, trials)):
        a, b = _random_pair(q, d, rng)
        c = OpCount()
        F = ctx.counting(c)
        if strategy == "schoolbook":
            schoolbook(F, a, b)
        elif strategy == "karatsuba":
            log2_exact(d)
            karatsuba(F, a, b)
        elif strategy == "toom4":
            rescale(F, toom4(F, a, b, L), L)
        elif strategy == "toom4-recursive":
            toom4(F, a, b, L)
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
        if result is not None and c != result:
            raise AssertionError(f"counts changed between trials: {result} vs {c}")
        result = c
    return result


def measure_pipeline(q: int, n: int, ell: int, inner: Inner, trials: int = 1, seed: int = 0) -> OpCount:
    """A/M for one full negacyclic multiplication."""
    ctx = FieldCtx(q)
    plan = build_plan(ctx, n, ell)
    inner.check(q, plan.d)
    rng = random.Random(seed)
    result = None
    for _ in range(max(1, trials)):
        a, b = _random_pair(q, n, rng)
        c = OpCount()
        multiply_lists(ctx.counting(c), plan, inner, a, b)
        if result is not None and c != result:
            raise AssertionError(f"counts changed between trials: {result} vs {c}")
        result = c
    return result


def measure(strategy: str, size, trials: int = 1, q: int = DEFAULT_Q, seed: int = 0) -> OpCount:
    """``size`` is d for a plain product, or (n, ell, L) for a pipeline
    whose inner multiplier is ``strategy``."""
    if isinstance(size, tuple):
        n, ell, L = size
        inner = Inner(strategy, L) if strategy == "toom4" else Inner(strategy)
        return measure_pipeline(q, n, ell, inner, trials, seed)
    name, _, L = strategy.partition(":")
    return measure_product(name, size, int(L or 0), q, trials, seed)


def toom4_exact_counts(d: int, L: int) -> OpCount:
    """What ``toom4`` (without the final rescale) performs."""
    if L == 0:
        return karatsuba_exact_counts(d)
    sub = toom4_exact_counts(d // 4, L - 1)
    return OpCount(7 * sub.adds + 54 * d - 92, 7 * sub.muls)


def pipeline_exact_counts(n: int, ell: int, inner: Inner) -> OpCount:
    """What ``multiply_lists`` performs for a plan at depth ell (omega_j != +-1 when ell > 0)."""
    d = n >> ell
    comps = 1 << ell
    if inner.name == "schoolbook":
        prod = OpCount((d - 1) ** 2, d * d)
    elif inner.name == "karatsuba":
        prod = karatsuba_exact_counts(d)
    else:
        prod = toom4_exact_counts(d, inner.L)
        if inner.L:
            prod = prod + OpCount(0, 2 * d - 1)
    reduction = OpCount(d - 1, d - 1 if ell else 0)
    transforms = OpCount(3 * ell * n, 3 * ell * n // 2 + (n if ell else 0))
    return OpCount(comps * (prod.adds + reduction.adds), comps * (prod.muls + reduction.muls)) + transforms


def verify_prop31(d_set=(16, 64, 256, 1024), q: int = DEFAULT_Q) -> list[dict]:
    """Check M(d,L) = 7 M(d/4,L-1) and that A(d,L) - 7 A(d/4,L-1) depends on d only."""
    rows = []
    for d in d_set:
        k = log2_exact(d)
        increments = set()
        for L in range(1, k // 2 + 1):
            top = measure_product("toom4-recursive", d, L, q)
            sub = measure_product("toom4-recursive", d // 4, L - 1, q)
            inc = top.adds - 7 * sub.adds
            increments.add(inc)
            rows.append({
                "d": d, "L": L,
                "M": top.muls, "7*M_sub": 7 * sub.muls, "M_ok": top.muls == 7 * sub.muls,
                "A": top.adds, "A_increment": inc, "expected_increment": 54 * d - 92, "bound_54d": 54 * d,
                "A_ok": inc == 54 * d - 92 and inc <= 54 * d,
            })
        if len(increments) > 1:
            for r in rows:
                if r["d"] == d:
                    r["A_ok"] = False
    return rows


def verify_transform_cost(n: int, ell: int, q: int) -> dict:
    """Two forward transforms and one inverse against 3 l n A and 3 l n/2 + n[l>0] M."""
    ctx = FieldCtx(q)
    plan = build_plan(ctx, n, ell)
    rng = random.Random(n * 1000 + ell)
    a, b = _random_pair(q, n, rng)
    c = OpCount()
    F = ctx.counting(c)
    forward(F, plan, a)
    comps = forward(F, plan, b)
    inverse(F, plan, comps)
    expected = OpCount(3 * ell * n, 3 * ell * n // 2 + (n if ell > 0 else 0))
    return {"q": q, "n": n, "ell": ell, "measured": c.as_dict(), "expected": expected.as_dict(), "ok": c == expected}
