"""Exhaustive searches for the smallest working brush totals on tiny graphs.

Totals are tried in increasing order, so the first success is the exact
minimum.  On cliques only non-increasing vectors are enumerated (every other
vector is a relabeling of one of them); on other graphs every vector with
``omega[v] <= deg(v)`` is tried.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Callable, Iterator

from .engine import BrushConfig, parallel_clean, parallel_step, sequential_clean
from .graph import Graph, make_clique
from .orbit import Verdict, clique_orbit, is_one_clique_config, orbit_analyze


class SearchBudgetExhausted(RuntimeError):
    """No configuration up to the total cap succeeded."""

    def __init__(self, target: str, n: int, total_cap: int, examined: int):
        self.target = target
        self.n = n
        self.total_cap = total_cap
        self.examined = examined
        super().__init__(
            f"{target}: no configuration on {n} vertices with total <= {total_cap} "
            f"({examined} examined)"
        )


@dataclass(frozen=True)
class SearchResult:
    target: str
    n: int
    minimum: int
    witness: BrushConfig
    examined: int

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "n": self.n,
            "minimum": self.minimum,
            "witness": list(self.witness),
            "examined": self.examined,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def enumerate_canonical(n: int, total: int, cap: int) -> Iterator[BrushConfig]:
    """Non-increasing length-``n`` vectors with entries in ``[0, cap]`` summing to ``total``.

    Vectors come out in increasing lexicographic order.

    >>> list(enumerate_canonical(3, 2, 2))
    [(1, 1, 0), (2, 0, 0)]
    """
    if n < 0 or total < 0 or cap < 0:
        return

    def rec(prefix: list[int], remaining: int, slots: int, hi: int) -> Iterator[BrushConfig]:
        if slots == 0:
            if remaining == 0:
                yield tuple(prefix)
            return
        # the head must be large enough that the tail can absorb the rest
        lo = -(-remaining // slots)
        for x in range(lo, min(hi, remaining) + 1):
            prefix.append(x)
            yield from rec(prefix, remaining - x, slots - 1, x)
            prefix.pop()

    yield from rec([], total, n, cap)


def count_canonical(n: int, total: int, cap: int) -> int:
    return sum(1 for _ in enumerate_canonical(n, total, cap))


def _bounded_vectors(caps: list[int], total: int) -> Iterator[BrushConfig]:
    """All vectors with ``0 <= w[v] <= caps[v]`` summing to ``total``, lexicographic."""
    # room[j]: the most the entries from j onward can absorb
    room = [0] * (len(caps) + 1)
    for j in range(len(caps) - 1, -1, -1):
        room[j] = room[j + 1] + caps[j]

    def rec(j: int, prefix: list[int], remaining: int) -> Iterator[BrushConfig]:
        if j == len(caps):
            if remaining == 0:
                yield tuple(prefix)
            return
        lo = max(0, remaining - room[j + 1])
        for x in range(lo, min(caps[j], remaining) + 1):
            prefix.append(x)
            yield from rec(j + 1, prefix, remaining - x)
            prefix.pop()

    yield from rec(0, [], total)


def _first_success(
    target: str,
    n: int,
    total_cap: int,
    candidates: Callable[[int], Iterator[BrushConfig]],
    accept: Callable[[BrushConfig], bool],
) -> SearchResult:
    examined = 0
    for total in range(total_cap + 1):
        for w in sorted(candidates(total)):
            examined += 1
            if accept(w):
                return SearchResult(target, n, total, w, examined)
    raise SearchBudgetExhausted(target, n, total_cap, examined)


def exact_brush_number(G: Graph, model: str = "parallel", total_cap: int | None = None) -> SearchResult:
    """Least brush total that cleans ``G`` once under ``model``."""
    if model == "parallel":
        run = parallel_clean
    elif model == "sequential":
        run = sequential_clean
    else:
        raise ValueError(f"unknown model {model!r}")
    if total_cap is None:
        total_cap = G.m
    if G.n >= 1 and G.is_clique:
        candidates = lambda t: enumerate_canonical(G.n, t, G.n - 1)  # noqa: E731
    else:
        caps = [G.degree(v) for v in range(G.n)]
        candidates = lambda t: _bounded_vectors(caps, t)  # noqa: E731
    return _first_success(
        f"brush-number/{model}", G.n, total_cap, candidates,
        lambda w: run(G, w, mode="summary").cleaned,
    )


def exact_cpb_clique(n: int, total_cap: int) -> SearchResult:
    """Least brush total admitting continual parallel cleaning of K_n.

    Per-vertex counts are capped only by the total.  Each orbit gets one more
    round than there are canonical configurations of that total, so it can
    never end inconclusive.
    """
    if n < 1:
        raise ValueError("clique order must be at least 1")

    def accept(w: BrushConfig) -> bool:
        total = sum(w)
        budget = count_canonical(n, total, total) + 1
        report = clique_orbit(n, w, max_rounds=budget)
        assert report.verdict is not Verdict.INCONCLUSIVE
        return report.verdict is Verdict.CONTINUAL

    return _first_success(
        "continual-brush-number", n, total_cap,
        lambda t: enumerate_canonical(n, t, t), accept,
    )


def min_one_clique(n: int, total_cap: int | None = None) -> SearchResult:
    """Least-total 1-clique configuration of K_n."""
    if total_cap is None:
        total_cap = n * (n - 1)
    return _first_success(
        "one-clique", n, total_cap,
        lambda t: enumerate_canonical(n, t, n - 1),
        lambda w: is_one_clique_config(n, w).verdict,
    )


def _cleans_by_definition(G: Graph, omega: BrushConfig) -> bool:
    dirty = frozenset(range(G.n))
    while dirty:
        rho, omega, dirty = parallel_step(G, omega, dirty)
        if not rho:
            return False
    return True


def verify_witness(result: SearchResult, G: Graph | None = None) -> bool:
    """Re-check a witness along a different code path from the one that found it.

    Continual witnesses are replayed on the explicit graph with exact-vector
    cycle detection; single-cleaning witnesses with the step-by-step
    definition (parallel) or a randomized order (sequential).
    """
    G = G if G is not None else make_clique(result.n)
    if result.target == "one-clique":
        trace = parallel_clean(G, result.witness, mode="summary")
        return (
            max(result.witness, default=0) <= G.n - 1
            and trace.cleaned
            and sorted(trace.final_config) == sorted(result.witness)
        )
    if result.target == "continual-brush-number":
        total = result.minimum
        budget = comb(total + G.n - 1, G.n - 1) + 1
        return orbit_analyze(G, result.witness, max_rounds=budget, exact=True).verdict is Verdict.CONTINUAL
    if result.target.endswith("/parallel"):
        return _cleans_by_definition(G, result.witness)
    return sequential_clean(G, result.witness, policy="random", seed=0).cleaned
