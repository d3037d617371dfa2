"""Dense polynomials over F_q, schoolbook multiplication and binomial reduction."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .field import FieldCtx, OpCount


@dataclass(frozen=True)
class Poly:
    """Coefficient ``i`` is the coefficient of x^i; trailing zeros are kept."""

    ctx: FieldCtx
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a polynomial needs at least one coefficient")
        q = self.ctx.q
        for c in self.coeffs:
            if not 0 <= c < q:
                raise ValueError(f"coefficient {c} outside [0, {q - 1}]")

    @classmethod
    def from_ints(cls, ctx: FieldCtx, values) -> Poly:
        return cls(ctx, tuple(v % ctx.q for v in values))

    @property
    def q(self) -> int:
        return self.ctx.q

    def __len__(self) -> int:
        return len(self.coeffs)

    def degree(self) -> float:
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return float("-inf")

    def padded(self, length: int) -> Poly:
        if length < len(self.coeffs):
            raise ValueError("cannot pad to a shorter length")
        return Poly(self.ctx, self.coeffs + (0,) * (length - len(self.coeffs)))

    def __add__(self, other: Poly) -> Poly:
        return poly_add_sub(self, other, "+")

    def __sub__(self, other: Poly) -> Poly:
        return poly_add_sub(self, other, "-")


def _ops(ctx: FieldCtx, counter: OpCount | None) -> FieldCtx:
    return ctx if counter is None else ctx.counting(counter)


def _same_field(f: Poly, g: Poly) -> FieldCtx:
    if f.ctx.q != g.ctx.q:
        raise ValueError(f"moduli differ: {f.ctx.q} vs {g.ctx.q}")
    return f.ctx


def poly_add_sub(f: Poly, g: Poly, sign: str = "+", counter: OpCount | None = None) -> Poly:
    ctx = _same_field(f, g)
    if sign not in "+-" or len(sign) != 1:
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    m = max(len(f), len(g))
    a = list(f.coeffs) + [0] * (m - len(f))
    b = list(g.coeffs) + [0] * (m - len(g))
    ops = _ops(ctx, counter)
    out = ops.vadd(a, b) if sign == "+" else ops.vsub(a, b)
    return Poly(ctx, tuple(out))


def schoolbook(F: FieldCtx, a: list[int], b: list[int]) -> list[int]:
    """Plain convolution: len(a)*len(b) M and (len(a)-1)*(len(b)-1) A."""
    q = F.q
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b, i):
                out[j] += x * y
    F.tally((len(a) - 1) * (len(b) - 1), len(a) * len(b))
    return [c % q for c in out]


def reduce_mod_binomial(F: FieldCtx, c: list[int], d: int, omega: int) -> list[int]:
    """c mod (x^d - omega) for len(c) <= 2d - 1, one fold pass."""
    if d < 1:
        raise ValueError("block size d must be positive")
    if len(c) > 2 * d - 1:
        raise ValueError(f"length {len(c)} exceeds 2d-1 = {2 * d - 1}; one fold pass would not suffice")
    q = F.q
    omega %= q
    low = list(c[:d]) + [0] * max(0, d - len(c))
    high = list(c[d:])
    if not high:
        return low
    if omega == 1:
        folded = F.vadd(low[: len(high)], high)
    elif omega == q - 1:
        folded = F.vsub(low[: len(high)], high)
    else:
        folded = F.vadd(low[: len(high)], F.vscale(omega, high))
    return folded + low[len(high):]


def schoolbook_mul(f: Poly, g: Poly, counter: OpCount | None = None) -> Poly:
    ctx = _same_field(f, g)
    return Poly(ctx, tuple(schoolbook(_ops(ctx, counter), list(f.coeffs), list(g.coeffs))))


def reduce_binomial(c: Poly, d: int, omega: int, counter: OpCount | None = None) -> Poly:
    return Poly(c.ctx, tuple(reduce_mod_binomial(_ops(c.ctx, counter), list(c.coeffs), d, omega)))


def negacyclic_schoolbook(f: Poly, g: Poly) -> Poly:
    """Reference product in F_q[x]/(x^n + 1), n = len(f) = len(g)."""
    if len(f) != len(g):
        raise ValueError("operands must have the same length")
    return reduce_binomial(schoolbook_mul(f, g), len(f), -1)


# -- file format -------------------------------------------------------------


def poly_to_dict(p: Poly) -> dict:
    return {"q": p.q, "n": len(p), "coeffs": list(p.coeffs)}


def encode(p: Poly) -> str:
    return json.dumps(poly_to_dict(p), separators=(",", ":"))


def decode(text: str) -> Poly:
    """Parse ``{"q": int, "n": int (optional), "coeffs": [int, ...]}``."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed polynomial JSON: {exc}") from None
    return poly_from_dict(obj)


def poly_from_dict(obj) -> Poly:
    if not isinstance(obj, dict) or "q" not in obj or "coeffs" not in obj:
        raise ValueError("polynomial object needs integer 'q' and array 'coeffs'")
    q, coeffs = obj["q"], obj["coeffs"]
    if not isinstance(q, int) or isinstance(q, bool):
        raise ValueError("'q' must be an integer")
    if not isinstance(coeffs, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in coeffs):
        raise ValueError("'coeffs' must be an array of integers")
    ctx = FieldCtx(q)
    if "n" in obj:
        n = obj["n"]
        if not isinstance(n, int) or n < len(coeffs):
            raise ValueError(f"'n' must be an integer >= {len(coeffs)}")
        coeffs = coeffs + [0] * (n - len(coeffs))
    return Poly(ctx, tuple(coeffs))
