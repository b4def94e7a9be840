"""Parallel and sequential brush cleaning runs.

A configuration is a tuple of non-negative brush counts indexed by vertex.
Every run starts with all vertices dirty.  A dirty vertex is *primed* when it
holds at least as many brushes as it has dirty incident edges; cleaning it
sends one brush along each of those edges.

Three runners are provided:

* :func:`parallel_clean` cleans every primed vertex at once, on any graph;
* :func:`sequential_clean` cleans one primed vertex per step;
* :func:`clique_parallel_clean` is a drop-in replacement for
  :func:`parallel_clean` on complete graphs that never touches edges.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

import numpy as np

from .graph import Graph

BrushConfig = tuple[int, ...]
TraceMode = Literal["full", "summary"]

_INT64_MAX = np.iinfo(np.int64).max


def as_config(omega: Iterable[int], n: int | None = None) -> BrushConfig:
    config = tuple(int(w) for w in omega)
    if n is not None and len(config) != n:
        raise ValueError(f"configuration has {len(config)} entries, graph has {n} vertices")
    if any(w < 0 for w in config):
        raise ValueError("brush counts must be non-negative")
    return config


@dataclass(frozen=True)
class Step:
    """One cleaning step: the vertices cleaned and the state right after."""

    t: int
    rho: tuple[int, ...]
    omega: BrushConfig
    dirty: frozenset[int]


@dataclass(frozen=True)
class CleaningTrace:
    n: int
    model: str
    mode: TraceMode
    initial: BrushConfig
    rho_sizes: tuple[int, ...]
    steps: tuple[Step, ...]  # empty in summary mode
    final_config: BrushConfig
    final_dirty: frozenset[int]
    peak: int  # largest brush count held by any vertex at any time

    @property
    def K(self) -> int:
        return len(self.rho_sizes)

    @property
    def cleaned(self) -> bool:
        return not self.final_dirty

    @property
    def total(self) -> int:
        return sum(self.initial)

    def to_dict(self) -> dict:
        if self.mode == "full":
            steps = [
                {"t": s.t, "rho": list(s.rho), "omega": list(s.omega)} for s in self.steps
            ]
        else:
            steps = [{"t": t, "size": r} for t, r in enumerate(self.rho_sizes, start=1)]
        return {
            "model": self.model,
            "mode": self.mode,
            "n": self.n,
            "initial": list(self.initial),
            "cleaned": self.cleaned,
            "K": self.K,
            "steps": steps,
            "final_config": list(self.final_config),
            "final_dirty": sorted(self.final_dirty),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        lines = [f"model {self.model} n {self.n} mode {self.mode}"]
        lines.append("initial " + _ints(self.initial))
        if self.mode == "full":
            for s in self.steps:
                lines.append(f"step {s.t} rho {_ints(s.rho)} omega {_ints(s.omega)}")
        else:
            for t, r in enumerate(self.rho_sizes, start=1):
                lines.append(f"step {t} size {r}")
        lines.append(f"cleaned {'yes' if self.cleaned else 'no'} K {self.K}")
        lines.append("final " + _ints(self.final_config))
        lines.append(("dirty " + _ints(sorted(self.final_dirty))).rstrip())
        return "\n".join(lines) + "\n"


def _ints(xs: Iterable[int]) -> str:
    return " ".join(str(x) for x in xs)


def dirty_degree(G: Graph, dirty: frozenset[int] | set[int], v: int) -> int:
    """Number of dirty edges at ``v``; zero once ``v`` itself is clean."""
    if v not in dirty:
        return 0
    return sum(1 for u in G.neighbors(v) if u in dirty)


def parallel_step(
    G: Graph, omega: Sequence[int], dirty: frozenset[int] | set[int]
) -> tuple[frozenset[int], BrushConfig, frozenset[int]]:
    """Apply one parallel step straight from the definition.

    Returns ``(rho, omega', dirty')``.  ``rho`` is empty on a stall, in which
    case the configuration is returned unchanged.
    """
    degrees = {v: dirty_degree(G, dirty, v) for v in dirty}
    rho = frozenset(v for v in dirty if omega[v] >= degrees[v])
    new = list(omega)
    for v in dirty:
        gained = sum(1 for u in G.neighbors(v) if u in rho)
        if v in rho:
            new[v] = omega[v] - degrees[v] + gained
        else:
            new[v] = omega[v] + gained
    return rho, tuple(new), frozenset(dirty) - rho


def parallel_clean(G: Graph, omega0: Sequence[int], mode: TraceMode = "full") -> CleaningTrace:
    """Run the parallel process until no dirty vertex is primed.

    Dirty degrees are maintained incrementally, so a whole run costs
    O(n * K + m) rather than O(m) per step.
    """
    omega = list(as_config(omega0, G.n))
    initial = tuple(omega)
    dirty = set(range(G.n))
    dd = [G.degree(v) for v in range(G.n)]
    sizes: list[int] = []
    steps: list[Step] = []
    peak = max(omega, default=0)
    t = 0
    while True:
        rho = [v for v in sorted(dirty) if omega[v] >= dd[v]]
        if not rho:
            break
        t += 1
        for v in rho:
            omega[v] -= dd[v]
        for v in rho:
            for u in G.neighbors(v):
                if u in dirty:
                    omega[u] += 1
                    dd[u] -= 1
        dirty.difference_update(rho)
        for v in rho:
            dd[v] = 0
        sizes.append(len(rho))
        peak = max(peak, max(omega))
        if mode == "full":
            steps.append(Step(t, tuple(rho), tuple(omega), frozenset(dirty)))
    return CleaningTrace(
        G.n, "parallel", mode, initial, tuple(sizes), tuple(steps),
        tuple(omega), frozenset(dirty), peak,
    )


def sequential_clean(
    G: Graph,
    omega0: Sequence[int],
    policy: str = "lowest-index",
    seed: int | None = None,
    mode: TraceMode = "full",
) -> CleaningTrace:
    """Clean one primed vertex per step.

    ``policy`` is ``"lowest-index"`` or ``"random"``; the latter draws the
    next vertex uniformly among primed ones from ``random.Random(seed)``.
    """
    if policy not in ("lowest-index", "random"):
        raise ValueError(f"unknown policy {policy!r}")
    rng = random.Random(seed) if policy == "random" else None
    omega = list(as_config(omega0, G.n))
    initial = tuple(omega)
    dirty = set(range(G.n))
    dd = [G.degree(v) for v in range(G.n)]
    steps: list[Step] = []
    peak = max(omega, default=0)
    t = 0
    while True:
        primed = [v for v in sorted(dirty) if omega[v] >= dd[v]]
        if not primed:
            break
        v = primed[0] if rng is None else rng.choice(primed)
        t += 1
        omega[v] -= dd[v]
        dd[v] = 0
        dirty.discard(v)
        for u in G.neighbors(v):
            if u in dirty:
                omega[u] += 1
                dd[u] -= 1
        peak = max(peak, max(omega))
        if mode == "full":
            steps.append(Step(t, (v,), tuple(omega), frozenset(dirty)))
    return CleaningTrace(
        G.n, "sequential", mode, initial, (1,) * t, tuple(steps),
        tuple(omega), frozenset(dirty), peak,
    )


def clique_parallel_clean(n: int, omega0: Sequence[int], mode: TraceMode = "full") -> CleaningTrace:
    """Parallel run on K_n without materializing edges.

    On a clique every dirty vertex has ``|D| - 1`` dirty edges and all dirty
    vertices receive the same number of brushes each step, so their relative
    order never changes.  Sorting once by initial count, each step cleans a
    prefix of the remaining sorted vertices; the run costs O(n log n) plus
    O(n) per recorded step in full mode.
    """
    if n < 1:
        raise ValueError(f"clique order must be at least 1, got {n}")
    initial = as_config(omega0, n)
    if initial and max(initial) > _INT64_MAX // 2:
        raise OverflowError("brush counts exceed 64-bit range")
    w0 = np.asarray(initial, dtype=np.int64)
    order = np.argsort(-w0, kind="stable")
    vals = w0[order]
    neg_vals = -vals  # ascending, for searchsorted
    final = w0.copy()
    pos = 0
    offset = 0  # brushes received by every still-dirty vertex so far
    dsize = n
    sizes: list[int] = []
    steps: list[Step] = []
    peak = int(vals[0]) if n else 0
    while pos < n:
        need = dsize - 1 - offset
        end = int(np.searchsorted(neg_vals, -need, side="right"))
        if end <= pos:
            break
        r = end - pos
        peak = max(peak, int(vals[pos]) + offset)
        final[order[pos:end]] = vals[pos:end] + offset - (dsize - 1) + (r - 1)
        offset += r
        dsize -= r
        pos = end
        sizes.append(r)
        if mode == "full":
            snap = final.copy()
            snap[order[pos:]] = vals[pos:] + offset
            rho = tuple(sorted(order[end - r:end].tolist()))
            steps.append(Step(len(sizes), rho, tuple(snap.tolist()), frozenset(order[pos:].tolist())))
    if pos < n:
        final[order[pos:]] = vals[pos:] + offset
        peak = max(peak, int(vals[pos]) + offset)
    return CleaningTrace(
        n, "parallel", mode, initial, tuple(sizes), tuple(steps),
        tuple(final.tolist()), frozenset(order[pos:].tolist()), peak,
    )


def clean(G: Graph, omega0: Sequence[int], model: str = "parallel", mode: TraceMode = "full") -> CleaningTrace:
    """Dispatch on model, using the clique stepper whenever ``G`` is complete."""
    if model == "sequential":
        return sequential_clean(G, omega0, mode=mode)
    if model != "parallel":
        raise ValueError(f"unknown model {model!r}")
    if G.n >= 1 and G.is_clique:
        return clique_parallel_clean(G.n, omega0, mode=mode)
    return parallel_clean(G, omega0, mode=mode)


__all__ = [
    "BrushConfig",
    "CleaningTrace",
    "Step",
    "as_config",
    "clean",
    "clique_parallel_clean",
    "dirty_degree",
    "parallel_clean",
    "parallel_step",
    "sequential_clean",
]
