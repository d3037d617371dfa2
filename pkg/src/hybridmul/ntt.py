"""Depth-l incomplete NTT over F_q[x]/(x^n + 1).

The forward transform repeatedly splits x^m - c into
(x^(m/2) - sqrt c)(x^(m/2) + sqrt c) with in-place Cooley-Tukey butterflies;
after l levels there are 2^l components, component j holding
f mod (x^d - omega_j) with d = n / 2^l. The inverse runs Gentleman-Sande
butterflies with every halving deferred to one final scaling by 2^-l.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .field import FieldCtx, FieldError, OpCount, find_primitive_root_of_unity, log2_exact, max_ntt_depth
from .karatsuba import karatsuba
from .poly import Poly, reduce_mod_binomial, schoolbook
from .toom4 import check_params as check_toom4_params
from .toom4 import rescale, toom4

INNER_NAMES = ("schoolbook", "karatsuba", "toom4")


@dataclass(frozen=True)
class Inner:
    """Multiplier used inside each CRT component."""

    name: str
    L: int = 0

    def __post_init__(self):
        if self.name not in INNER_NAMES:
            raise ValueError(f"unknown inner multiplier {self.name!r}; choose from {INNER_NAMES}")
        if self.name != "toom4" and self.L:
            raise ValueError(f"Toom depth L only applies to toom4, got L={self.L} with {self.name}")

    def check(self, q: int, d: int) -> None:
        if self.name == "toom4":
            check_toom4_params(q, d, self.L)
        elif self.name == "karatsuba":
            log2_exact(d)

    def scaled_product(self, F: FieldCtx, a: list[int], b: list[int]) -> tuple[list[int], int]:
        """(product * 120^s, s): only toom4 leaves a pending scale."""
        if self.name == "schoolbook":
            return schoolbook(F, a, b), 0
        if self.name == "karatsuba":
            return karatsuba(F, a, b), 0
        return toom4(F, a, b, self.L), self.L

    def __str__(self) -> str:
        return f"toom4(L={self.L})" if self.name == "toom4" else self.name


@dataclass(frozen=True)
class NttPlan:
    ctx: FieldCtx
    n: int
    ell: int
    zeta: int
    twiddles: tuple[tuple[int, ...], ...]  # per level, one per block, in loop order
    inv_twiddles: tuple[tuple[int, ...], ...]
    omegas: tuple[int, ...]
    inv_scale: int

    @property
    def d(self) -> int:
        return self.n >> self.ell

    @property
    def components(self) -> int:
        return 1 << self.ell


def _splitting_tree(ell: int) -> tuple[list[list[int]], list[int]]:
    """Exponents of zeta (a primitive 2^(ell+1)-th root) for every level's
    twiddles and for the final component moduli."""
    half_turn = 1 << ell  # zeta^half_turn = -1
    exps = [half_turn]
    levels = []
    for _ in range(ell):
        levels.append([e // 2 for e in exps])
        exps = [x for e in exps for x in (e // 2, e // 2 + half_turn)]
    return levels, exps


def _poly_mul_mod(q, a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % q
    return out


def _check_factorisation(q: int, omegas: tuple[int, ...]) -> None:
    # prod (t - omega_j) == t^(2^ell) + 1; substituting t = x^d gives x^n + 1
    acc = [1]
    for w in omegas:
        acc = _poly_mul_mod(q, acc, [-w % q, 1])
    want = [1] + [0] * (len(omegas) - 1) + [1]
    if acc != want:
        raise AssertionError("component moduli do not multiply to x^n + 1")


def build_plan(ctx: FieldCtx, n: int, ell: int) -> NttPlan:
    k = log2_exact(n)
    if not 0 <= ell <= k:
        raise FieldError(f"depth {ell} outside [0, log2 n = {k}]")
    lmax = max_ntt_depth(ctx, n)
    if ell > lmax:
        raise FieldError(
            f"depth {ell} needs 2^{ell + 1} | q-1, but q={ctx.q} only admits depth {lmax} at n={n}"
        )
    q = ctx.q
    order = 1 << (ell + 1)
    zeta = find_primitive_root_of_unity(ctx, order)
    level_exps, comp_exps = _splitting_tree(ell)
    twiddles = tuple(tuple(pow(zeta, e, q) for e in lvl) for lvl in level_exps)
    inv_twiddles = tuple(tuple(pow(zeta, order - e, q) for e in lvl) for lvl in level_exps)
    omegas = tuple(pow(zeta, e, q) for e in comp_exps)
    if len(omegas) <= 256:
        _check_factorisation(q, omegas)
    inv_scale = pow(2, -ell, q)
    return NttPlan(ctx, n, ell, zeta, twiddles, inv_twiddles, omegas, inv_scale)


# -- raw transforms -----------------------------------------------------------------


def forward(F: FieldCtx, plan: NttPlan, a: list[int]) -> list[list[int]]:
    a = list(a)
    m = plan.n
    for level in plan.twiddles:
        half = m // 2
        for blk, z in enumerate(level):
            s = blk * m
            lo = a[s:s + half]
            t = F.vscale(z, a[s + half:s + m])
            a[s:s + half] = F.vadd(lo, t)
            a[s + half:s + m] = F.vsub(lo, t)
        m = half
    d = plan.d
    return [a[i:i + d] for i in range(0, plan.n, d)]


def inverse(F: FieldCtx, plan: NttPlan, comps: list[list[int]]) -> list[int]:
    a = [c for comp in comps for c in comp]
    m = plan.d * 2
    for level in reversed(plan.inv_twiddles):
        half = m // 2
        for blk, zi in enumerate(level):
            s = blk * m
            lo = a[s:s + half]
            hi = a[s + half:s + m]
            a[s:s + half] = F.vadd(lo, hi)
            a[s + half:s + m] = F.vscale(zi, F.vsub(lo, hi))
        m *= 2
    if plan.ell:
        a = F.vscale(plan.inv_scale, a)
    return a


def component_product(F: FieldCtx, a: list[int], b: list[int], omega: int, inner: Inner) -> list[int]:
    prod, scale_levels = inner.scaled_product(F, a, b)
    if scale_levels:
        prod = rescale(F, prod, scale_levels)
    return reduce_mod_binomial(F, prod, len(a), omega)


def pointwise(F: FieldCtx, plan: NttPlan, u, v, inner: Inner, parallel: bool = False) -> list[list[int]]:
    if not parallel or plan.components == 1:
        return [component_product(F, a, b, w, inner) for a, b, w in zip(u, v, plan.omegas)]
    # per-branch counters, summed on join
    parent = F.counter
    branch_counts = [OpCount() for _ in plan.omegas]
    fields = [F.counting(c) if parent is not None else F for c in branch_counts]
    with ThreadPoolExecutor() as pool:
        out = list(pool.map(component_product, fields, u, v, plan.omegas, [inner] * len(u)))
    if parent is not None:
        for c in branch_counts:
            parent.merge(c)
    return out


# -- Poly-level API --------------------------------------------------------------------


def _ops(ctx: FieldCtx, counter: OpCount | None) -> FieldCtx:
    return ctx if counter is None else ctx.counting(counter)


def _check_size(plan: NttPlan, f: Poly) -> None:
    if len(f) != plan.n or f.q != plan.ctx.q:
        raise ValueError(f"expected a length-{plan.n} polynomial over F_{plan.ctx.q}")


def ntt_forward(f: Poly, plan: NttPlan, counter: OpCount | None = None) -> list[Poly]:
    _check_size(plan, f)
    comps = forward(_ops(f.ctx, counter), plan, list(f.coeffs))
    return [Poly(f.ctx, tuple(c)) for c in comps]


def _check_components(plan: NttPlan, comps) -> None:
    if len(comps) != plan.components or any(len(c) != plan.d for c in comps):
        raise ValueError(f"expected {plan.components} components of length {plan.d}")


def ntt_inverse(comps: list[Poly], plan: NttPlan, counter: OpCount | None = None) -> Poly:
    _check_components(plan, comps)
    coeffs = inverse(_ops(plan.ctx, counter), plan, [list(c.coeffs) for c in comps])
    return Poly(plan.ctx, tuple(coeffs))


def pointwise_mul(u: list[Poly], v: list[Poly], plan: NttPlan, inner: Inner,
                  counter: OpCount | None = None, parallel: bool = False) -> list[Poly]:
    _check_components(plan, u)
    _check_components(plan, v)
    inner.check(plan.ctx.q, plan.d)
    F = _ops(plan.ctx, counter)
    out = pointwise(F, plan, [list(c.coeffs) for c in u], [list(c.coeffs) for c in v], inner, parallel)
    return [Poly(plan.ctx, tuple(c)) for c in out]


def multiply_lists(F: FieldCtx, plan: NttPlan, inner: Inner, a: list[int], b: list[int],
                   parallel: bool = False) -> list[int]:
    """Forward both operands, multiply componentwise, transform back."""
    return inverse(F, plan, pointwise(F, plan, forward(F, plan, a), forward(F, plan, b), inner, parallel))


def incomplete_ntt_mul(f: Poly, g: Poly, plan: NttPlan, inner: Inner,
                       counter: OpCount | None = None, parallel: bool = False) -> Poly:
    """f * g in F_q[x]/(x^n + 1)."""
    _check_size(plan, f)
    _check_size(plan, g)
    inner.check(plan.ctx.q, plan.d)
    F = _ops(plan.ctx, counter)
    return Poly(plan.ctx, tuple(multiply_lists(F, plan, inner, list(f.coeffs), list(g.coeffs), parallel)))
