"""Grouped consistency checks shared by ``selftest`` and the test suite."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .addchain import verify_chains
from .costmodel import diff_reference, optimal_L, pure_toom_depth, reproduce_table1
from .field import FieldCtx, log2_exact, max_ntt_depth
from .hybrid import HybridParams, resolve
from .ntt import build_plan, forward, inverse
from .opcounter import measure_product, verify_prop31, verify_transform_cost
from .poly import Poly, negacyclic_schoolbook

GRID_PRIMES = (3329, 8380417, 8380403, 8380381, 8380249, 8380369)
GRID_SIZES = (16, 64, 256)
TRANSFORM_AUDIT = ((256, 7, 3329), (256, 8, 8380417), (2, 1, 5))


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""
    data: list = field(default_factory=list)


def grid_depths(ctx: FieldCtx, n: int) -> list[int]:
    lmax = max_ntt_depth(ctx, n)
    return sorted({e for e in (0, 1, lmax) if e <= lmax})


def grid_strategies(d: int, w=0.2) -> list:
    """schoolbook, karatsuba and toom4 at L in {0, 1, L_opt, pure} (deduplicated)."""
    Ls = sorted({L for L in (0, 1, optimal_L(d, w)[0], pure_toom_depth(d)) if L <= pure_toom_depth(d)})
    return ["schoolbook", "karatsuba"] + [("toom4", L) for L in Ls]


def oracle_grid(qs=GRID_PRIMES, ns=GRID_SIZES, pairs: int = 25, seed: int = 0) -> CheckResult:
    rng = random.Random(seed)
    cases = mismatches = 0
    bad = []
    for q in qs:
        ctx = FieldCtx(q)
        for n in ns:
            for ell in grid_depths(ctx, n):
                d = n >> ell
                pipes = []
                for s in grid_strategies(d):
                    name, L = (s, None) if isinstance(s, str) else s
                    pipes.append(resolve(HybridParams(n, ell, name, L), ctx))
                for _ in range(pairs):
                    f = Poly(ctx, tuple(rng.randrange(q) for _ in range(n)))
                    g = Poly(ctx, tuple(rng.randrange(q) for _ in range(n)))
                    want = negacyclic_schoolbook(f, g)
                    for p in pipes:
                        cases += 1
                        if p.multiply(f, g) != want:
                            mismatches += 1
                            bad.append(p.describe())
    return CheckResult("oracle equivalence", mismatches == 0, f"{cases} products, {mismatches} mismatches", bad[:10])


def ntt_roundtrips(qs=GRID_PRIMES, ns=GRID_SIZES, inputs: int = 100, seed: int = 1) -> CheckResult:
    rng = random.Random(seed)
    total = failures = 0
    for q in qs:
        ctx = FieldCtx(q)
        for n in ns:
            for ell in grid_depths(ctx, n):
                plan = build_plan(ctx, n, ell)
                for _ in range(inputs):
                    a = [rng.randrange(q) for _ in range(n)]
                    total += 1
                    if inverse(ctx, plan, forward(ctx, plan, a)) != a:
                        failures += 1
    return CheckResult("NTT round-trip", failures == 0, f"{total} inputs, {failures} failures")


def prop31(d_set=(16, 64, 256, 1024)) -> CheckResult:
    rows = verify_prop31(d_set)
    ok = all(r["M_ok"] and r["A_ok"] for r in rows)
    consts = sorted({(r["d"], r["A_increment"]) for r in rows})
    return CheckResult("Toom-4 count recursion", ok, "per-level A increments " + ", ".join(f"d={d}: {c}" for d, c in consts), rows)


def transform_audit(cases=TRANSFORM_AUDIT) -> CheckResult:
    rows = [verify_transform_cost(n, ell, q) for n, ell, q in cases]
    return CheckResult("transform cost audit", all(r["ok"] for r in rows), f"{len(rows)} configurations", rows)


def table1() -> CheckResult:
    problems = diff_reference(reproduce_table1())
    return CheckResult("cost table reproduction", not problems, "; ".join(problems) or "9 rows identical")


def chains(budget_s: float = 60.0, skip_search=()) -> CheckResult:
    rows = verify_chains(budget_s, tuple(skip_search))
    total = sum(r["length"] for r in rows)
    ok = all(r["pass"] for r in rows) and total == 58
    return CheckResult("addition chains", ok, f"total length {total}", rows)


def count_report(sizes=(4, 16, 64, 256)) -> list[dict]:
    out = []
    for d in sizes:
        k = log2_exact(d)
        for strat, L in [("schoolbook", 0), ("karatsuba", 0)] + [("toom4", L) for L in range(1, k // 2 + 1)]:
            c = measure_product(strat, d, L)
            out.append({"strategy": strat, "d": d, "L": L, **c.as_dict()})
    return out


def run_all(quick: bool = False, chain_budget: float = 60.0) -> list[CheckResult]:
    if quick:
        return [
            oracle_grid(ns=(16, 64), pairs=3),
            ntt_roundtrips(ns=(16, 64), inputs=10),
            prop31((16, 64, 256)),
            transform_audit(),
            table1(),
            chains(chain_budget, skip_search=("H(inf)",)),
        ]
    return [oracle_grid(), ntt_roundtrips(), prop31(), transform_audit(), table1(), chains(chain_budget)]
