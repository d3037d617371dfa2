"""Prime-field arithmetic over F_q with an optional operation-counting seam.

All multiplication algorithms in this package work on plain ``list[int]``
blocks of residues and route every field operation through a ``FieldCtx``.
A ``CountingField`` is the same arithmetic with a tally attached, so
audited and unaudited runs share one implementation.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_MODULUS = 1 << 62

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class FieldError(ValueError):
    """Raised for invalid moduli or undefined field operations."""


def is_prime(m: int) -> bool:
    """Deterministic Miller-Rabin, exact for every m < 3.3e24."""
    if m < 2:
        return False
    for p in _MR_BASES:
        if m % p == 0:
            return m == p
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, m)
        if x == 1 or x == m - 1:
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def two_adic_valuation(m: int) -> int:
    """Largest v such that 2**v divides m."""
    if m <= 0:
        raise ValueError(f"2-adic valuation needs a positive integer, got {m}")
    return (m & -m).bit_length() - 1


def log2_exact(n: int) -> int:
    """log2 of a power of two; raises ValueError otherwise."""
    if n < 1 or n & (n - 1):
        raise ValueError(f"{n} is not a power of two")
    return n.bit_length() - 1


@dataclass
class OpCount:
    """Tally of field additions/subtractions (A) and multiplications (M)."""

    adds: int = 0
    muls: int = 0

    def __add__(self, other: OpCount) -> OpCount:
        return OpCount(self.adds + other.adds, self.muls + other.muls)

    def __sub__(self, other: OpCount) -> OpCount:
        return OpCount(self.adds - other.adds, self.muls - other.muls)

    def merge(self, other: OpCount) -> None:
        self.adds += other.adds
        self.muls += other.muls

    def as_dict(self) -> dict:
        return {"adds": self.adds, "muls": self.muls}


class FieldCtx:
    """The prime field F_q.

    Scalar methods take and return residues in ``[0, q-1]``. Vector methods
    operate elementwise on equal-length lists and always return new lists.
    ``tally`` is the hook used by block routines that do their arithmetic
    inline for speed; it is a no-op here and records counts in
    ``CountingField``.
    """

    __slots__ = ("q",)

    def __init__(self, q: int):
        q = int(q)
        if q < 3 or q % 2 == 0 or q >= MAX_MODULUS or not is_prime(q):
            raise FieldError(f"modulus must be an odd prime below 2^62, got {q}")
        self.q = q

    def __repr__(self) -> str:
        return f"FieldCtx(q={self.q})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldCtx) and other.q == self.q

    def __hash__(self) -> int:
        return hash(self.q)

    @property
    def counter(self) -> OpCount | None:
        return None

    def counting(self, counter: OpCount) -> CountingField:
        return CountingField(self.q, counter)

    def elem(self, value: int) -> int:
        return value % self.q

    # -- scalars -------------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        self.tally(1, 0)
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        self.tally(1, 0)
        return (a - b) % self.q

    def mul(self, a: int, b: int) -> int:
        self.tally(0, 1)
        return a * b % self.q

    def neg(self, a: int) -> int:
        return -a % self.q

    def inv(self, a: int) -> int:
        if a % self.q == 0:
            raise ZeroDivisionError(f"0 has no inverse modulo {self.q}")
        return pow(a, -1, self.q)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return pow(self.inv(a), -e, self.q)
        return pow(a, e, self.q)

    # -- vectors -------------------------------------------------------------

    def tally(self, adds: int, muls: int) -> None:
        pass

    def vadd(self, a: list[int], b: list[int]) -> list[int]:
        q = self.q
        self.tally(len(a), 0)
        return [(x + y) % q for x, y in zip(a, b)]

    def vsub(self, a: list[int], b: list[int]) -> list[int]:
        q = self.q
        self.tally(len(a), 0)
        return [(x - y) % q for x, y in zip(a, b)]

    def vscale(self, c: int, a: list[int]) -> list[int]:
        q = self.q
        self.tally(0, len(a))
        return [c * x % q for x in a]

    def add_into(self, dst: list[int], src: list[int], offset: int) -> None:
        """dst[offset + i] += src[i], in place."""
        q = self.q
        end = offset + len(src)
        self.tally(len(src), 0)
        dst[offset:end] = [(x + y) % q for x, y in zip(dst[offset:end], src)]


class CountingField(FieldCtx):
    """``FieldCtx`` that accumulates every A and M into an ``OpCount``."""

    __slots__ = ("_counter",)

    def __init__(self, q: int, counter: OpCount):
        # q was validated by the FieldCtx this was derived from
        self.q = q
        self._counter = counter

    def __repr__(self) -> str:
        return f"CountingField(q={self.q}, {self._counter})"

    @property
    def counter(self) -> OpCount:
        return self._counter

    def counting(self, counter: OpCount) -> CountingField:
        return CountingField(self.q, counter)

    def tally(self, adds: int, muls: int) -> None:
        c = self._counter
        c.adds += adds
        c.muls += muls


def field_arith(ctx: FieldCtx, op: str, a: int, b: int | None = None) -> int:
    """Dispatch one of add/sub/mul/neg/inv/pow by name."""
    if op in ("neg", "inv"):
        return getattr(ctx, op)(a)
    if op not in ("add", "sub", "mul", "pow"):
        raise ValueError(f"unknown field operation {op!r}")
    return getattr(ctx, op)(a, b)


def max_ntt_depth(ctx: FieldCtx, n: int) -> int:
    """Deepest admissible incomplete-NTT level: min(v2(q-1) - 1, log2 n)."""
    return min(two_adic_valuation(ctx.q - 1) - 1, log2_exact(n))


def find_primitive_root_of_unity(ctx: FieldCtx, order: int) -> int:
    """Primitive ``order``-th root of unity for a power-of-two ``order``.

    Takes the smallest quadratic non-residue g >= 2 and returns
    g^((q-1)/order), so the choice is reproducible.
    """
    q = ctx.q
    log2_exact(order)
    if order < 2:
        raise FieldError("root-of-unity order must be at least 2")
    if (q - 1) % order:
        raise FieldError(f"order {order} does not divide q-1 = {q - 1}")
    g = 2
    while pow(g, (q - 1) // 2, q) != q - 1:
        g += 1
    return pow(g, (q - 1) // order, q)
