from __future__ import annotations

from functools import lru_cache
from itertools import combinations

import pytest
from hypothesis import strategies as st

from brushclean.graph import Graph


@lru_cache(maxsize=None)
def connected_labeled_graphs(n: int) -> tuple[Graph, ...]:
    """Every connected graph on vertex set 0..n-1 (labeled, not up to isomorphism)."""
    pairs = list(combinations(range(n), 2))
    out = []
    for mask in range(1 << len(pairs)):
        G = Graph.from_edges(n, [p for j, p in enumerate(pairs) if mask >> j & 1])
        if G.is_connected():
            out.append(G)
    return tuple(out)


def all_configs(n: int, max_total: int):
    """Every length-n non-negative vector with total <= max_total."""

    def rec(prefix, remaining, slots):
        if slots == 0:
            yield tuple(prefix)
            return
        for x in range(remaining + 1):
            yield from rec(prefix + [x], remaining - x, slots - 1)

    yield from rec([], max_total, n)


def sequential_outcomes(G: Graph, omega) -> set[bool]:
    """Verdicts reachable over every possible order of sequential cleaning.

    Memoized depth-first search over (dirty set, configuration) states;
    independent of the engine module.
    """
    memo: dict = {}

    def visit(dirty: frozenset, w: tuple) -> frozenset:
        key = (dirty, w)
        if key in memo:
            return memo[key]
        primed = []
        for v in dirty:
            dd = sum(1 for u in G.neighbors(v) if u in dirty)
            if w[v] >= dd:
                primed.append(v)
        if not primed:
            res = frozenset([not dirty])
        else:
            res = frozenset()
            for v in primed:
                nw = list(w)
                rest = dirty - {v}
                for u in G.neighbors(v):
                    if u in rest:
                        nw[v] -= 1
                        nw[u] += 1
                res |= visit(rest, tuple(nw))
        memo[key] = res
        return res

    return set(visit(frozenset(range(G.n)), tuple(omega)))


@st.composite
def graphs(draw, max_n: int = 8, min_n: int = 1) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def graph_and_config(draw, max_n: int = 8, max_brush: int = 6):
    G = draw(graphs(max_n=max_n))
    w = draw(st.lists(st.integers(0, max_brush), min_size=G.n, max_size=G.n))
    return G, tuple(w)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py" in getattr(rep, "nodeid", "") and rep.when == "call":
                lines.append((rep.nodeid.split("::")[-1], outcome))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(lines):
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")


@pytest.fixture
def rng():
    import random

    return random.Random(20261014)
