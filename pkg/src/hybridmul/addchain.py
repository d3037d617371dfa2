"""Addition chains for target sets: validation, shortest-chain search, and
the seven chains that generate the Toom-4 interpolation multiples.

Chains are kept strictly increasing. Any chain can be sorted and
deduplicated without losing validity or growing, so this loses nothing and
lets the search prune hard: a target smaller than the current last element
that is not yet in the chain can never be added.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field


@dataclass(frozen=True)
class AdditionChain:
    elements: tuple[int, ...]
    targets: frozenset[int] = field(default_factory=frozenset)

    @property
    def length(self) -> int:
        return len(self.elements) - 1


# Boldface entries of each chain are the multiples the interpolation uses.
INTERPOLATION_CHAINS: dict[str, AdditionChain] = {
    "H(0)": AdditionChain((1, 2, 4, 8, 10, 20, 30, 40, 50, 100, 120, 150), frozenset({10, 30, 40, 50, 120, 150})),
    "H(1)": AdditionChain((1, 2, 4, 8, 10, 20, 30, 40, 70, 80, 120), frozenset({10, 20, 70, 80, 120})),
    "H(-1)": AdditionChain((1, 2, 4, 5, 10, 20, 40, 60, 80), frozenset({5, 20, 60, 80})),
    "H(2)": AdditionChain((1, 2, 4, 5, 10, 20, 30, 35), frozenset({5, 30, 35})),
    "H(-2)": AdditionChain((1, 2, 4, 5, 6), frozenset({5, 6})),
    "H(3)": AdditionChain((1, 2, 4, 5), frozenset({4, 5})),
    "H(inf)": AdditionChain(
        (1, 2, 4, 8, 10, 20, 40, 80, 120, 240, 360, 480, 600, 1080, 1440, 1800),
        frozenset({120, 360, 480, 600, 1440, 1800}),
    ),
}

CHAIN_LENGTHS = {"H(0)": 11, "H(1)": 10, "H(-1)": 8, "H(2)": 7, "H(-2)": 4, "H(3)": 3, "H(inf)": 15}


def interpolation_chains() -> dict[str, AdditionChain]:
    return dict(INTERPOLATION_CHAINS)


def validate_chain(chain: AdditionChain) -> tuple[bool, str]:
    """Check the chain starts at 1, increases, is closed under pairwise sums
    of earlier elements, and covers its targets."""
    els = chain.elements
    if not els or els[0] != 1:
        return False, "chain must start with 1"
    seen = {1}
    for m in range(1, len(els)):
        b = els[m]
        if b <= els[m - 1]:
            return False, f"element {b} at position {m} is not larger than its predecessor"
        if not any(b - x in seen for x in els[:m]):
            return False, f"element {b} at position {m} is not a sum of two earlier elements"
        seen.add(b)
    missing = sorted(set(chain.targets) - seen)
    if missing:
        return False, f"targets {missing} do not appear in the chain"
    return True, "ok"


def chain_steps(elements: tuple[int, ...]) -> list[tuple[int, int]]:
    """For each element after the first, indices (i, j), i <= j, of two
    earlier elements summing to it. Doublings come out as i == j."""
    index = {b: k for k, b in enumerate(elements)}
    steps = []
    for m in range(1, len(elements)):
        b = elements[m]
        for i in range(m):
            j = index.get(b - elements[i])
            if j is not None and i <= j < m:
                steps.append((i, j))
                break
        else:
            raise ValueError(f"{b} is not a sum of earlier chain elements")
    return steps


@dataclass
class SearchResult:
    """Outcome of ``search_optimal``.

    ``status`` is "found" (``chain`` is shortest), "none" (no chain within
    ``max_len``) or "exhausted" (the time budget ran out; nothing shorter
    than ``proven_lower_bound`` exists).
    """

    status: str
    chain: AdditionChain | None
    proven_lower_bound: int
    nodes: int
    seconds: float


class _Budget(Exception):
    pass


def _lower_bound(last: int, top: int) -> int:
    # each step at most doubles the largest element
    steps = 0
    while last < top:
        last <<= 1
        steps += 1
    return steps


def search_optimal(targets, max_len: int, budget_s: float | None = None) -> SearchResult:
    """Shortest increasing chain containing ``targets``, by iterative deepening.

    Candidates are tried in ascending order, so the first chain found at the
    minimal depth is the lexicographically smallest one.
    """
    goal = sorted(set(int(t) for t in targets))
    if not goal:
        raise ValueError("target set must be nonempty")
    if goal[0] < 1:
        raise ValueError("targets must be positive integers")
    targets_fs = frozenset(goal)
    top = goal[-1]
    start = time.monotonic()
    deadline = None if budget_s is None else start + budget_s
    nodes = 0

    chain = [1]
    members = {1}

    def dfs(remaining: int, next_goal: int) -> bool:
        nonlocal nodes
        nodes += 1
        if deadline is not None and nodes & 0x3FF == 0 and time.monotonic() > deadline:
            raise _Budget
        while next_goal < len(goal) and goal[next_goal] in members:
            next_goal += 1
        if next_goal == len(goal):
            return True
        last = chain[-1]
        need = goal[next_goal]
        if need < last:
            return False
        # every goal from next_goal on is >= need > last, hence still missing
        if remaining < len(goal) - next_goal:
            return False
        if _lower_bound(last, top) > remaining:
            return False
        cands = set()
        for i, x in enumerate(chain):
            for y in chain[i:]:
                s = x + y
                if last < s <= need:
                    cands.add(s)
        for s in sorted(cands):
            chain.append(s)
            members.add(s)
            if dfs(remaining - 1, next_goal):
                return True
            chain.pop()
            members.discard(s)
        return False

    lower = 0
    try:
        for depth in range(0, max_len + 1):
            if dfs(depth, 0):
                found = AdditionChain(tuple(chain), targets_fs)
                return SearchResult("found", found, depth, nodes, time.monotonic() - start)
            lower = depth + 1
    except _Budget:
        return SearchResult("exhausted", None, lower, nodes, time.monotonic() - start)
    return SearchResult("none", None, lower, nodes, time.monotonic() - start)


def verify_chains(budget_s: float = 60.0, skip_search: tuple[str, ...] = ()) -> list[dict]:
    """Validate every stored chain and try to confirm its optimality."""
    rows = []
    for name, chain in INTERPOLATION_CHAINS.items():
        ok, why = validate_chain(chain)
        row = {"name": name, "length": chain.length, "expected_length": CHAIN_LENGTHS[name], "valid": ok, "detail": why}
        if name in skip_search:
            row["optimality"] = "not searched"
        else:
            res = search_optimal(chain.targets, chain.length, budget_s=budget_s)
            row["search_seconds"] = round(res.seconds, 3)
            row["search_nodes"] = res.nodes
            if res.status == "found" and res.chain.length == chain.length:
                row["optimality"] = "confirmed"
            elif res.status == "found":
                row["optimality"] = f"shorter chain exists: {list(res.chain.elements)}"
            elif res.status == "exhausted":
                row["optimality"] = f"budget exhausted; no chain shorter than {res.proven_lower_bound}"
            else:
                row["optimality"] = "search failed"
        row["pass"] = ok and chain.length == CHAIN_LENGTHS[name] and not row["optimality"].startswith(("shorter", "search failed"))
        rows.append(row)
    return rows
