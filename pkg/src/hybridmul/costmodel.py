"""Closed-form operation counts and the weighted cost model for the
Toom-4/Karatsuba hybrid inside an incomplete NTT.

Everything is evaluated with ``fractions.Fraction`` so reference values
such as 15877.8 come out exact; rounding happens only when formatting.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .field import log2_exact

DEFAULT_W = Fraction(1, 5)


def as_weight(w) -> Fraction:
    """Weight of one addition relative to one multiplication."""
    w = Fraction(str(w)) if isinstance(w, float) else Fraction(w)
    if w < 0:
        raise ValueError(f"weight must be nonnegative, got {w}")
    return w


@dataclass(frozen=True)
class CostBreakdown:
    T_M: Fraction
    T_A: Fraction
    w: Fraction
    components: dict = field(default_factory=dict)

    @property
    def weighted(self) -> Fraction:
        return self.T_M + self.w * self.T_A


def karatsuba_model_counts(d: int) -> tuple[int, int]:
    """(3^k, 8(3^k - d)) for d = 2^k."""
    k = log2_exact(d)
    return 3**k, 8 * (3**k - d)


def pure_toom_depth(d: int) -> int:
    """Toom-4 levels while the size stays divisible by 4."""
    if d < 4:
        return 0
    return log2_exact(d) // 2


def _check_depth(d: int, L: int) -> None:
    if L < 0 or L > pure_toom_depth(d):
        raise ValueError(f"L={L} not admissible for d={d} (0 <= L <= {pure_toom_depth(d)})")


def hybrid_model_counts(d: int, L: int) -> tuple[Fraction, Fraction]:
    """T_M(d;L), T_A(d;L): L Toom-4 levels over a Karatsuba base, rescale included."""
    log2_exact(d)
    _check_depth(d, L)
    base = d // 4**L
    kar_m, kar_a = karatsuba_model_counts(base)
    t_m = Fraction(7**L * kar_m + (2 * d - 1 if L > 0 else 0))
    t_a = Fraction(7**L * kar_a) + 72 * d * (Fraction(7, 4) ** L - 1)
    return t_m, t_a


def weighted_subproblem_cost(d: int, L: int, w=DEFAULT_W) -> Fraction:
    t_m, t_a = hybrid_model_counts(d, L)
    return t_m + as_weight(w) * t_a


def total_breakdown(n: int, ell: int, L: int, w=DEFAULT_W) -> CostBreakdown:
    k = log2_exact(n)
    if not 0 <= ell <= k:
        raise ValueError(f"ell={ell} outside [0, {k}]")
    w = as_weight(w)
    d = n >> ell
    comps = 1 << ell
    t_m, t_a = hybrid_model_counts(d, L)
    parts = {
        "transform": (Fraction(3 * ell * n, 2), Fraction(3 * ell * n)),
        "pointwise": (comps * t_m, comps * t_a),
        "scaling": (Fraction(n if ell else 0), Fraction(0)),
        "reduction": (Fraction(n - comps if ell else 0), Fraction(n - comps)),
    }
    total_m = sum(m for m, _ in parts.values())
    total_a = sum(a for _, a in parts.values())
    return CostBreakdown(total_m, total_a, w, parts)


def total_cost(n: int, ell: int, L: int, w=DEFAULT_W) -> Fraction:
    """2^l C_w(n/2^l; L) + (3 l n / 2)(1 + 2w) + (2n - 2^l)[l > 0] + w(n - 2^l)."""
    w = as_weight(w)
    d = n >> ell
    comps = 1 << ell
    return (comps * weighted_subproblem_cost(d, L, w)
            + Fraction(3 * ell * n, 2) * (1 + 2 * w)
            + ((2 * n - comps) if ell > 0 else 0)
            + w * (n - comps))


def optimal_L(d: int, w=DEFAULT_W) -> tuple[int, Fraction]:
    """Depth minimising the subproblem cost; ties go to the smaller depth."""
    best = None
    for L in range(pure_toom_depth(d) + 1):
        c = weighted_subproblem_cost(d, L, w)
        if best is None or c < best[1]:
            best = (L, c)
    return best


@dataclass(frozen=True)
class TableRow:
    n: int
    ell: int
    d: int
    karatsuba: Fraction
    toom4: Fraction
    hybrid: Fraction
    L_opt: int
    L_max: int

    def formatted(self) -> dict:
        return {
            "n": self.n, "ell": self.ell, "d": self.d,
            "karatsuba": fmt1(self.karatsuba), "toom4": fmt1(self.toom4), "hybrid": fmt1(self.hybrid),
            "L_opt": self.L_opt,
        }


def fmt1(x: Fraction) -> str:
    """One-decimal rendering with round-half-up on the exact rational."""
    tenths = (x * 10 * 2 + 1) // 2
    sign = "-" if tenths < 0 else ""
    tenths = abs(tenths)
    return f"{sign}{tenths // 10}.{tenths % 10}"


# Reference rows: n -> [(ell, karatsuba, toom4, hybrid, L_opt)]
REFERENCE_TABLE = {
    256: [(0, "16700.0", "33851.0", "15877.8", 1), (1, "12061.2", "20834.4", "12061.2", 0)],
    512: [(0, "50458.8", "73945.8", "44781.0", 2), (1, "35497.2", "69799.2", "33852.8", 1),
          (2, "25197.6", "42744.0", "25197.6", 0)],
    1024: [(0, "152093.6", "246333.8", "120521.4", 2), (1, "105114.0", "152088.0", "93758.4", 2),
           (2, "73144.8", "141748.8", "69856.0", 1), (3, "52545.6", "87638.4", "52545.6", 0)],
}


def table_row(n: int, ell: int, w=DEFAULT_W) -> TableRow:
    d = n >> ell
    L_max = pure_toom_depth(d)
    L_opt, _ = optimal_L(d, w)
    return TableRow(n, ell, d, total_cost(n, ell, 0, w), total_cost(n, ell, L_max, w),
                    total_cost(n, ell, L_opt, w), L_opt, L_max)


def reproduce_table1(w=DEFAULT_W, ns=(256, 512, 1024), ells: dict | None = None) -> list[TableRow]:
    """Rows for each n; l runs over the reference rows where known, else
    over every depth with subproblem size at least 128."""
    rows = []
    for n in ns:
        if ells and n in ells:
            depths = ells[n]
        elif n in REFERENCE_TABLE:
            depths = [r[0] for r in REFERENCE_TABLE[n]]
        else:
            depths = [e for e in range(log2_exact(n) + 1) if n >> e >= 128]
        rows.extend(table_row(n, e, w) for e in depths)
    return rows


def diff_reference(rows: list[TableRow]) -> list[str]:
    """Mismatches against the reference table (empty list means identical)."""
    ref = {(n, r[0]): r for n, rs in REFERENCE_TABLE.items() for r in rs}
    seen = set()
    problems = []
    for row in rows:
        key = (row.n, row.ell)
        if key not in ref:
            continue
        seen.add(key)
        _, kar, toom, hyb, lopt = ref[key]
        got = row.formatted()
        want = {"karatsuba": kar, "toom4": toom, "hybrid": hyb, "L_opt": lopt}
        for col, val in want.items():
            if got[col] != val:
                problems.append(f"n={row.n} ell={row.ell} {col}: got {got[col]}, reference {val}")
    ns = {row.n for row in rows}
    for key in sorted(k for k in set(ref) - seen if k[0] in ns):
        problems.append(f"n={key[0]} ell={key[1]}: row missing")
    return problems
