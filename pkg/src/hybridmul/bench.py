"""Wall-clock comparison of Karatsuba, pure Toom-4 and the hybrid at l = l_max."""

from __future__ import annotations

import gc
import random
import statistics
import time
from dataclasses import asdict, dataclass

from .costmodel import DEFAULT_W
from .field import FieldCtx
from .hybrid import HybridParams, resolve

BENCH_STRATEGIES = ("karatsuba", "pure", "hybrid")
WARMUP = 2


@dataclass
class BenchRecord:
    n: int
    q: int
    ell: int
    strategy: str
    L: int
    median_ms: float
    trials: int

    def as_dict(self) -> dict:
        return asdict(self)


def random_poly(rng: random.Random, q: int, n: int) -> list[int]:
    return [rng.randrange(q) for _ in range(n)]


def run_bench(n: int, q: int, strategies=BENCH_STRATEGIES, trials: int = 100, seed: int = 0,
              w=DEFAULT_W, ell: int | None = None) -> list[BenchRecord]:
    """Median time of one full multiplication per strategy.

    Strategies are timed round-robin on the same random pair, so slow drift
    in machine speed hits all of them alike.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    ctx = FieldCtx(q)
    pipes = {s: resolve(HybridParams.for_strategy(s, n, ell), ctx, w) for s in strategies}
    rng = random.Random(seed)
    times = {s: [] for s in strategies}
    for _ in range(WARMUP):
        a, b = random_poly(rng, q, n), random_poly(rng, q, n)
        for p in pipes.values():
            p.multiply_lists(a, b)
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(trials):
            a, b = random_poly(rng, q, n), random_poly(rng, q, n)
            for s, p in pipes.items():
                t0 = time.perf_counter()
                p.multiply_lists(a, b)
                times[s].append(time.perf_counter() - t0)
    finally:
        if gc_was_enabled:
            gc.enable()
    records = []
    for s, p in pipes.items():
        ts = times[s]
        med = ts[0] if len(ts) == 1 else statistics.median(ts)
        records.append(BenchRecord(n, q, p.ell, s, p.L, med * 1000.0, trials))
    return records


def check_ordering(records: list[BenchRecord], tie_tolerance: float = 0.10) -> list[str]:
    """Violations of: hybrid <= pure Toom-4; hybrid < Karatsuba when L_opt > 0;
    hybrid within ``tie_tolerance`` of Karatsuba when L_opt = 0."""
    by = {r.strategy: r for r in records}
    problems = []
    hyb = by.get("hybrid")
    if hyb is None:
        return ["no hybrid record"]
    pure = by.get("pure")
    kar = by.get("karatsuba")
    if pure is not None and pure.L != hyb.L and not hyb.median_ms < pure.median_ms:
        problems.append(f"hybrid {hyb.median_ms:.3f} ms not faster than pure Toom-4 {pure.median_ms:.3f} ms")
    if kar is not None:
        if hyb.L > 0 and not hyb.median_ms < kar.median_ms:
            problems.append(f"hybrid {hyb.median_ms:.3f} ms not faster than Karatsuba {kar.median_ms:.3f} ms")
        if hyb.L == 0 and abs(hyb.median_ms - kar.median_ms) > tie_tolerance * kar.median_ms:
            problems.append(f"hybrid and Karatsuba differ by more than {tie_tolerance:.0%} with L_opt = 0")
    return problems
