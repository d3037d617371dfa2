"""Strategy descriptors: turn (l, inner multiplier, L) choices into a ready
multiplication pipeline over F_q[x]/(x^n + 1)."""

from __future__ import annotations

from dataclasses import dataclass

from .costmodel import DEFAULT_W, optimal_L, pure_toom_depth
from .field import FieldCtx, OpCount, log2_exact, max_ntt_depth
from .ntt import Inner, NttPlan, build_plan, multiply_lists
from .poly import Poly

# named strategies; "pure" and "hybrid" are Toom-4 with L fixed by rule
STRATEGIES = ("schoolbook", "karatsuba", "toom4", "pure", "hybrid")


class ParamsError(ValueError):
    pass


@dataclass(frozen=True)
class HybridParams:
    """Requested pipeline.

    ``ell=None`` picks the deepest admissible NTT. For toom4, ``L`` is an
    integer depth, ``"opt"`` (or None) for the cost-optimal depth, or
    ``"pure"`` for Toom-4 as deep as the size allows. ``auto`` forces both
    ell = l_max and L = "opt".
    """

    n: int
    ell: int | None = None
    inner: str = "toom4"
    L: int | str | None = None
    auto: bool = False

    @classmethod
    def for_strategy(cls, strategy: str, n: int, ell: int | None = None, L: int | None = None) -> HybridParams:
        if strategy not in STRATEGIES:
            raise ParamsError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
        if strategy in ("schoolbook", "karatsuba"):
            return cls(n, ell, strategy, None)
        if strategy == "toom4":
            if L is None:
                raise ParamsError("strategy toom4 needs an explicit L (or use 'pure' / 'hybrid')")
            return cls(n, ell, "toom4", L)
        return cls(n, ell, "toom4", "pure" if strategy == "pure" else "opt")


@dataclass(frozen=True)
class Pipeline:
    ctx: FieldCtx
    plan: NttPlan
    inner: Inner

    @property
    def n(self) -> int:
        return self.plan.n

    @property
    def ell(self) -> int:
        return self.plan.ell

    @property
    def d(self) -> int:
        return self.plan.d

    @property
    def L(self) -> int:
        return self.inner.L

    def describe(self) -> dict:
        return {"q": self.ctx.q, "n": self.n, "ell": self.ell, "d": self.d, "inner": self.inner.name, "L": self.L}

    def multiply_lists(self, a: list[int], b: list[int], counter: OpCount | None = None,
                       parallel: bool = False) -> list[int]:
        F = self.ctx if counter is None else self.ctx.counting(counter)
        return multiply_lists(F, self.plan, self.inner, a, b, parallel)

    def multiply(self, f: Poly, g: Poly, counter: OpCount | None = None, parallel: bool = False) -> Poly:
        for p in (f, g):
            if p.q != self.ctx.q or len(p) != self.n:
                raise ValueError(f"operands must be length-{self.n} polynomials over F_{self.ctx.q}")
        return Poly(self.ctx, tuple(self.multiply_lists(list(f.coeffs), list(g.coeffs), counter, parallel)))


def resolve(params: HybridParams, ctx: FieldCtx, w=DEFAULT_W) -> Pipeline:
    n = params.n
    try:
        k = log2_exact(n)
    except ValueError:
        raise ParamsError(f"ring size n={n} must be a power of two") from None
    lmax = max_ntt_depth(ctx, n)
    ell = lmax if params.auto or params.ell is None else params.ell
    if not 0 <= ell <= k:
        raise ParamsError(f"NTT depth ell={ell} outside [0, log2 n = {k}]")
    if ell > lmax:
        raise ParamsError(
            f"NTT depth ell={ell} not admissible: it needs 2^{ell + 1} | q-1, "
            f"and q={ctx.q} allows at most ell={lmax} at n={n}"
        )
    d = n >> ell
    if params.inner == "toom4":
        if params.auto or params.L in (None, "opt"):
            L = optimal_L(d, w)[0]
        elif params.L == "pure":
            L = pure_toom_depth(d)
        elif isinstance(params.L, int):
            L = params.L
        else:
            raise ParamsError(f"L must be an integer, 'opt' or 'pure'; got {params.L!r}")
        if not 0 <= L <= pure_toom_depth(d):
            raise ParamsError(f"Toom-4 depth L={L} not admissible for subproblem size d={d}; "
                              f"need 0 <= L <= {pure_toom_depth(d)}")
        inner = Inner("toom4", L)
    else:
        if params.L:
            raise ParamsError(f"L={params.L} given but inner multiplier is {params.inner}")
        inner = Inner(params.inner)
    inner.check(ctx.q, d)
    return Pipeline(ctx, build_plan(ctx, n, ell), inner)


def negacyclic_mul(f: Poly, g: Poly, params: HybridParams, w=DEFAULT_W,
                   counter: OpCount | None = None, parallel: bool = False) -> Poly:
    """f * g in F_q[x]/(x^n + 1) through the resolved pipeline."""
    return resolve(params, f.ctx, w).multiply(f, g, counter, parallel)
