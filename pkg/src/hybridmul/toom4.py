"""Toom-4 multiplication with integer evaluation points and 120-scaled
interpolation.

Every scalar multiple needed during interpolation is built from the stored
addition chains, so a Toom-4 level performs no field multiplications at
all. Each level multiplies the result by 120; after L levels a single pass
with 120^-L undoes it (``toom4_rescale``).

Per level on inputs of size d (block size m = d/4), the operation counts are

    evaluation      2 x 19 block adds on length m        = 38m
    chains          58 block adds on length 2m - 1
    recovery        28 block adds/subs on length 2m - 1  -> 86(2m - 1)
    recomposition   6 overlaps of length m - 1           = 6(m - 1)

for a total of 54d - 92 additions/subtractions.
"""

from __future__ import annotations

from math import gcd

from .addchain import INTERPOLATION_CHAINS, chain_steps
from .field import FieldCtx, OpCount, log2_exact
from .karatsuba import karatsuba, overlap_add
from .poly import Poly

INF = "inf"
EVAL_POINTS = (0, 1, -1, 2, -2, 3, INF)
CHAIN_NAMES = ("H(0)", "H(1)", "H(-1)", "H(2)", "H(-2)", "H(3)", "H(inf)")

# 120 * inverse of the evaluation matrix; rows h_0..h_6, columns ordered as EVAL_POINTS
INTERPOLATION_MATRIX = (
    (120, 0, 0, 0, 0, 0, 0),
    (-40, 120, -60, -30, 6, 4, -1440),
    (-150, 80, 80, -5, -5, 0, 480),
    (50, -70, -5, 35, -5, -5, 1800),
    (30, -20, -20, 5, 5, 0, -600),
    (-10, 10, 5, -5, -1, 1, -360),
    (0, 0, 0, 0, 0, 0, 120),
)
SCALE = 120


def vandermonde() -> list[list[int]]:
    rows = []
    for a in EVAL_POINTS:
        rows.append([0] * 6 + [1] if a == INF else [a**k for k in range(7)])
    return rows


def check_interpolation_matrix() -> bool:
    """INTERPOLATION_MATRIX x Vandermonde == 120 I over the integers."""
    V = vandermonde()
    for i in range(7):
        for j in range(7):
            s = sum(INTERPOLATION_MATRIX[i][k] * V[k][j] for k in range(7))
            if s != (SCALE if i == j else 0):
                return False
    return True


def _recovery_schedule():
    """Per h'_1..h'_5: list of (sign, column, multiple), positive term first."""
    sched = []
    for row in INTERPOLATION_MATRIX[1:6]:
        terms = [(1 if c > 0 else -1, col, abs(c)) for col, c in enumerate(row) if c]
        terms.sort(key=lambda t: t[0] < 0)
        sched.append(terms)
    return sched


_CHAIN_PLAN = [(INTERPOLATION_CHAINS[name].elements, chain_steps(INTERPOLATION_CHAINS[name].elements)) for name in CHAIN_NAMES]
_RECOVERY = _recovery_schedule()

assert check_interpolation_matrix()
assert [len(t) - 1 for t in _RECOVERY] == [6, 5, 6, 5, 6]
for _terms in _RECOVERY:
    for _s, _col, _mag in _terms:
        assert _mag == 1 or _mag in INTERPOLATION_CHAINS[CHAIN_NAMES[_col]].targets
assert SCALE in INTERPOLATION_CHAINS["H(0)"].targets and SCALE in INTERPOLATION_CHAINS["H(inf)"].targets


class Toom4Error(ValueError):
    pass


def check_params(q: int, d: int, L: int) -> None:
    if gcd(q, 30) != 1:
        raise Toom4Error(
            f"Toom-4 needs a field of characteristic other than 2, 3 and 5 "
            f"(the evaluation points 0, +-1, +-2, 3 and the 1/120 scale); got q={q}"
        )
    k = log2_exact(d)
    if L < 0 or L > k // 2:
        raise Toom4Error(f"Toom-4 depth L={L} not admissible for d={d}; need 0 <= L <= {k // 2}")


# -- stages on raw blocks -----------------------------------------------------


def split(a: list[int]) -> list[list[int]]:
    m = len(a) // 4
    return [a[i * m:(i + 1) * m] for i in range(4)]


def evaluate(F: FieldCtx, f0, f1, f2, f3) -> list[list[int]]:
    """Values at 0, 1, -1, 2, -2, 3, inf using 19 block additions."""
    add, sub = F.vadd, F.vsub
    a1 = add(f0, f2)
    a2 = add(f1, f3)
    a3p = add(a1, a2)  # F(1)
    a3m = sub(a1, a2)  # F(-1)
    a4 = add(f3, f3)
    a5 = add(a4, f3)  # 3 f3
    a6p = add(a3p, a5)
    a6m = sub(a3m, a5)
    a7p = add(a6p, f2)
    a7m = add(a6m, f2)
    a8p = add(a7p, a7p)
    a8m = add(a7m, a7m)
    a9p = sub(a8p, f0)  # F(2)
    a9m = sub(a8m, f0)  # F(-2)
    a10 = add(a5, a5)  # 6 f3
    a11 = add(sub(a9p, f0), a10)
    a12 = add(a11, a11)
    a13 = add(a12, a3m)  # F(3)
    return [f0, a3p, a3m, a9p, a9m, a13, f3]


def chain_multiples(F: FieldCtx, block: list[int], col: int) -> dict[int, list[int]]:
    elements, steps = _CHAIN_PLAN[col]
    vals = [block]
    for i, j in steps:
        vals.append(F.vadd(vals[i], vals[j]))
    return dict(zip(elements, vals))


def interpolate_scaled(F: FieldCtx, products: list[list[int]]) -> list[list[int]]:
    """h'_0..h'_6 (= 120 h_i) from the seven point products."""
    mult = [chain_multiples(F, p, col) for col, p in enumerate(products)]
    out = [mult[0][SCALE]]
    for terms in _RECOVERY:
        _, col, mag = terms[0]
        acc = mult[col][mag]
        for sign, col, mag in terms[1:]:
            acc = F.vadd(acc, mult[col][mag]) if sign > 0 else F.vsub(acc, mult[col][mag])
        out.append(acc)
    out.append(mult[6][SCALE])
    return out


def recompose(F: FieldCtx, hs: list[list[int]]) -> list[int]:
    """sum h'_i X^i with X = x^m; only neighbouring blocks overlap."""
    out = []
    for i in (0, 2, 4):
        out += hs[i]
        out.append(0)
    out += hs[6]
    m = (len(hs[0]) + 1) // 2
    for i in (1, 3, 5):
        overlap_add(F, out, hs[i], i * m)
    return out


def toom4(F: FieldCtx, a: list[int], b: list[int], L: int) -> list[int]:
    """120^L * a * b; Karatsuba once the recursion depth is used up."""
    if L == 0:
        return karatsuba(F, a, b)
    ea = evaluate(F, *split(a))
    eb = evaluate(F, *split(b))
    products = [toom4(F, x, y, L - 1) for x, y in zip(ea, eb)]
    return recompose(F, interpolate_scaled(F, products))


def rescale(F: FieldCtx, c: list[int], L: int) -> list[int]:
    if L == 0:
        return list(c)
    return F.vscale(pow(SCALE, -L, F.q), c)


# -- Poly-level API -------------------------------------------------------------


def _ops(ctx: FieldCtx, counter: OpCount | None) -> FieldCtx:
    return ctx if counter is None else ctx.counting(counter)


def toom4_split(f: Poly, d: int | None = None) -> tuple[Poly, Poly, Poly, Poly]:
    d = len(f) if d is None else d
    if d % 4 or len(f) != d:
        raise ValueError(f"need a length divisible by 4 equal to d={d}; zero-pad first")
    return tuple(Poly(f.ctx, tuple(b)) for b in split(list(f.coeffs)))


def toom4_evaluate(blocks, counter: OpCount | None = None) -> tuple[Poly, ...]:
    blocks = list(blocks)
    if len(blocks) != 4 or len({len(b) for b in blocks}) != 1:
        raise ValueError("need four blocks of equal length")
    ctx = blocks[0].ctx
    vals = evaluate(_ops(ctx, counter), *(list(b.coeffs) for b in blocks))
    return tuple(Poly(ctx, tuple(v)) for v in vals)


def toom4_interpolate_scaled(products, counter: OpCount | None = None) -> tuple[Poly, ...]:
    products = list(products)
    if len(products) != 7 or len({len(p) for p in products}) != 1:
        raise ValueError("need seven products of equal length")
    ctx = products[0].ctx
    hs = interpolate_scaled(_ops(ctx, counter), [list(p.coeffs) for p in products])
    return tuple(Poly(ctx, tuple(h)) for h in hs)


def toom4_recompose(hs, d: int, counter: OpCount | None = None) -> Poly:
    hs = list(hs)
    m = d // 4
    if len(hs) != 7 or any(len(h) != 2 * m - 1 for h in hs):
        raise ValueError(f"need seven blocks of length {2 * m - 1}")
    ctx = hs[0].ctx
    return Poly(ctx, tuple(recompose(_ops(ctx, counter), [list(h.coeffs) for h in hs])))


def toom4_mul_scaled(f: Poly, g: Poly, d: int | None = None, L: int = 1, counter: OpCount | None = None) -> Poly:
    """120^L * f * g with L uniform Toom-4 levels over a Karatsuba base."""
    d = len(f) if d is None else d
    if len(f) != d or len(g) != d or f.q != g.q:
        raise ValueError(f"both operands must have length {d} over the same field")
    check_params(f.q, d, L)
    return Poly(f.ctx, tuple(toom4(_ops(f.ctx, counter), list(f.coeffs), list(g.coeffs), L)))


def toom4_rescale(p: Poly, L: int, counter: OpCount | None = None) -> Poly:
    if gcd(p.q, SCALE) != 1:
        raise Toom4Error(f"120 is not invertible modulo {p.q}")
    return Poly(p.ctx, tuple(rescale(_ops(p.ctx, counter), list(p.coeffs), L)))


def toom4_mul(f: Poly, g: Poly, L: int = 1, counter: OpCount | None = None) -> Poly:
    return toom4_rescale(toom4_mul_scaled(f, g, L=L, counter=counter), L, counter)


def level_additions(d: int) -> int:
    """Additions one Toom-4 level adds on top of its seven sub-products."""
    m = d // 4
    return 38 * m + 86 * (2 * m - 1) + 6 * (m - 1)

