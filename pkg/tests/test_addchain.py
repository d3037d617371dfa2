import pytest
from hypothesis import given, settings, strategies as st

from hybridmul.addchain import (
    CHAIN_LENGTHS, AdditionChain, chain_steps, interpolation_chains, search_optimal, validate_chain,
    verify_chains,
)


def brute_force_length(targets, cap=6):
    # breadth-first over all increasing chains; independent of the pruned search
    goal = frozenset(targets)
    frontier = [(1,)]
    for length in range(cap + 1):
        for ch in frontier:
            if goal <= set(ch):
                return length
        nxt = []
        for ch in frontier:
            sums = {a + b for a in ch for b in ch if a + b > ch[-1]}
            nxt.extend(ch + (s,) for s in sums if s <= max(goal))
        frontier = nxt
    return None


def test_validate_examples():
    assert validate_chain(AdditionChain((1, 2, 4, 5), frozenset({4, 5})))[0]
    assert AdditionChain((1, 2, 4, 5)).length == 3
    assert validate_chain(AdditionChain((1, 2, 4, 5, 6), frozenset({5, 6})))[0]
    assert not validate_chain(AdditionChain((1, 3), frozenset({3})))[0]


@pytest.mark.parametrize("chain", [
    AdditionChain((2, 4)), AdditionChain(()), AdditionChain((1, 2, 2)), AdditionChain((1, 2), frozenset({3})),
])
def test_validate_rejects(chain):
    ok, msg = validate_chain(chain)
    assert not ok and msg


def test_chain_steps():
    els = (1, 2, 4, 5)
    for k, (i, j) in enumerate(chain_steps(els), start=1):
        assert i < k and j < k and els[i] + els[j] == els[k]


def test_stored_chains():
    chains = interpolation_chains()
    assert [c.length for c in chains.values()] == [11, 10, 8, 7, 4, 3, 15]
    assert sum(c.length for c in chains.values()) == 58
    inf = chains["H(inf)"]
    assert len(inf.elements) == 16 and inf.elements[0] == 1 and inf.elements[-1] == 1800
    assert inf.targets == {120, 360, 480, 600, 1440, 1800}
    assert chains["H(-1)"].length == 8 and chains["H(-1)"].targets == {5, 20, 60, 80}
    for c in chains.values():
        assert validate_chain(c)[0]
    assert {k: v.length for k, v in chains.items()} == CHAIN_LENGTHS


def test_search_trivial():
    r = search_optimal({1}, 5)
    assert r.status == "found" and r.chain.elements == (1,) and r.chain.length == 0


def test_search_45():
    r = search_optimal({4, 5}, 5)
    assert r.status == "found" and r.chain.length == 3 and validate_chain(r.chain)[0]
    assert search_optimal({4, 5}, 2).status == "none"


def test_search_rejects_empty():
    with pytest.raises(ValueError):
        search_optimal(set(), 3)


def test_search_budget_exhausted_is_distinct():
    r = search_optimal(interpolation_chains()["H(inf)"].targets, 15, budget_s=0.0)
    assert r.status == "exhausted" and r.chain is None


@pytest.mark.parametrize("name", ["H(0)", "H(1)", "H(-1)", "H(2)", "H(-2)", "H(3)"])
def test_small_chains_optimal(name):
    c = interpolation_chains()[name]
    r = search_optimal(c.targets, c.length, budget_s=60)
    assert r.status == "found" and r.chain.length == c.length
    assert validate_chain(r.chain)[0]
    assert search_optimal(c.targets, c.length - 1, budget_s=60).status == "none"


@settings(max_examples=40, deadline=None)
@given(st.sets(st.integers(1, 40), min_size=1, max_size=3))
def test_search_matches_brute_force(targets):
    want = brute_force_length(targets)
    r = search_optimal(targets, 8)
    if want is None:
        assert r.status == "found" and r.chain.length > 6
    else:
        assert r.status == "found" and r.chain.length == want
    assert validate_chain(AdditionChain(r.chain.elements, frozenset(targets)))[0]


def test_verify_rows_shape():
    rows = verify_chains(60, skip_search=("H(inf)",))
    assert [r["name"] for r in rows] == list(CHAIN_LENGTHS)
    assert all(r["pass"] for r in rows)
    assert rows[-1]["optimality"] == "not searched"
