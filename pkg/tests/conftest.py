import random

import pytest

from hybridmul.field import FieldCtx
from hybridmul.poly import Poly

BIG_Q = 8380417


@pytest.fixture
def rng():
    return random.Random(1234)


def rand_poly(rng, ctx, n):
    return Poly(ctx, tuple(rng.randrange(ctx.q) for _ in range(n)))


@pytest.fixture
def big():
    return FieldCtx(BIG_Q)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
