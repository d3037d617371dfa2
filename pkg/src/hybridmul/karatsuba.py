"""Recursive Karatsuba multiplication on power-of-two sizes.

For inputs of size d = 2^k the schedule below uses exactly 3^k field
multiplications and 6*3^k - 8d + 2 additions/subtractions (one level costs
d additions for the operand sums, 2(d-1) for the middle term and d-2 for
the overlap-add).
"""

from __future__ import annotations

from .field import FieldCtx, OpCount, log2_exact
from .poly import Poly


def overlap_add(F: FieldCtx, out: list[int], block: list[int], offset: int) -> None:
    """Add a length-(2h-1) block at ``offset`` into a buffer laid out as
    [lower block | one zero gap | upper block], where only h-1 positions on
    each side actually overlap. Costs 2(h-1) A.
    """
    h = (len(block) + 1) // 2
    F.add_into(out, block[: h - 1], offset)
    out[offset + h - 1] = block[h - 1]
    F.add_into(out, block[h:], offset + h)


def karatsuba(F: FieldCtx, a: list[int], b: list[int]) -> list[int]:
    d = len(a)
    q = F.q
    if d == 1:
        F.tally(0, 1)
        return [a[0] * b[0] % q]
    if d == 2:
        a0, a1 = a
        b0, b1 = b
        p0 = a0 * b0
        p2 = a1 * b1
        F.tally(4, 3)
        return [p0 % q, ((a0 + a1) * (b0 + b1) - p0 - p2) % q, p2 % q]
    h = d // 2
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    p0 = karatsuba(F, a0, b0)
    p2 = karatsuba(F, a1, b1)
    pm = karatsuba(F, F.vadd(a0, a1), F.vadd(b0, b1))
    mid = F.vsub(F.vsub(pm, p0), p2)
    out = p0 + [0] + p2
    overlap_add(F, out, mid, h)
    return out


def karatsuba_mul(f: Poly, g: Poly, d: int | None = None, counter: OpCount | None = None) -> Poly:
    """Exact product of two size-d polynomials (length 2d - 1)."""
    if f.ctx.q != g.ctx.q:
        raise ValueError("operands live in different fields")
    d = len(f) if d is None else d
    if len(f) != d or len(g) != d:
        raise ValueError(f"both operands must have length {d}")
    log2_exact(d)
    F = f.ctx if counter is None else f.ctx.counting(counter)
    return Poly(f.ctx, tuple(karatsuba(F, list(f.coeffs), list(g.coeffs))))


def karatsuba_exact_counts(d: int) -> OpCount:
    """Closed form of what ``karatsuba`` performs at size d."""
    k = log2_exact(d)
    return OpCount(adds=6 * 3**k - 8 * d + 2, muls=3**k)
