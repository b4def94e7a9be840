"""Continual parallel cleaning: feed each run's final configuration into the next.

The parallel process is deterministic and preserves the brush total, so the
sequence of round-start configurations either reaches one that stalls or
revisits an earlier one.  On a clique, configurations are compared up to
relabeling (sorted counts), since any permutation of K_n is an automorphism.
"""

from __future__ import annotations

import enum
import json
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .engine import BrushConfig, as_config, clique_parallel_clean, parallel_clean
from .graph import Graph

# configurations longer than this are summarized as multisets in JSON
SUMMARY_THRESHOLD = 64


class Verdict(enum.Enum):
    CONTINUAL = "continually-cleanable"
    FAILS = "fails"
    INCONCLUSIVE = "inconclusive-budget-exhausted"


@dataclass(frozen=True)
class OrbitReport:
    n: int
    round_configs: tuple[BrushConfig, ...]
    verdict: Verdict
    cycle_start: int | None = None
    failed_round: int | None = None

    @property
    def rounds(self) -> int:
        """Number of cleaning runs performed."""
        return len(self.round_configs)

    @property
    def cycle_length(self) -> int | None:
        if self.cycle_start is None:
            return None
        return len(self.round_configs) - self.cycle_start

    def describe(self) -> str:
        if self.verdict is Verdict.FAILS:
            return f"fails-at-round-{self.failed_round}"
        return self.verdict.value

    def to_dict(self) -> dict:
        if self.n > SUMMARY_THRESHOLD:
            configs = [sorted(Counter(c).items()) for c in self.round_configs]
            configs = [[list(p) for p in c] for c in configs]
            key = "round_multisets"
        else:
            configs = [list(c) for c in self.round_configs]
            key = "round_configs"
        return {
            "n": self.n,
            "rounds": self.rounds,
            key: configs,
            "verdict": self.describe(),
            "cycle_start": self.cycle_start,
            "failed_round": self.failed_round,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def orbit_analyze(
    G: Graph, omega0: Sequence[int], max_rounds: int = 1000, exact: bool = False
) -> OrbitReport:
    """Iterate parallel cleaning from ``omega0`` for at most ``max_rounds`` runs.

    ``round_configs[s]`` is the configuration that starts round ``s``.  When
    the final configuration of the last run repeats round ``cycle_start``
    (exactly, or up to relabeling on a clique), every later round revisits an
    already-cleaned configuration and the verdict is continual.

    ``exact=True`` disables the clique shortcut: the generic stepper runs and
    only identical vectors count as repeats.
    """
    if not exact and G.n >= 1 and G.is_clique:
        return clique_orbit(G.n, omega0, max_rounds)
    return _iterate(G.n, lambda c: parallel_clean(G, c, mode="summary"), lambda c: c, omega0, max_rounds)


def clique_orbit(n: int, omega0: Sequence[int], max_rounds: int = 1000) -> OrbitReport:
    """:func:`orbit_analyze` on K_n, without building the graph."""
    return _iterate(
        n,
        lambda c: clique_parallel_clean(n, c, mode="summary"),
        lambda c: tuple(sorted(c)),
        omega0,
        max_rounds,
    )


def _iterate(n, run, key, omega0, max_rounds) -> OrbitReport:
    if max_rounds < 1:
        raise ValueError("max_rounds must be positive")
    omega = as_config(omega0, n)
    seen: dict[BrushConfig, int] = {}
    configs: list[BrushConfig] = []
    for s in range(max_rounds):
        seen[key(omega)] = s
        configs.append(omega)
        trace = run(omega)
        if not trace.cleaned:
            return OrbitReport(n, tuple(configs), Verdict.FAILS, failed_round=s)
        omega = trace.final_config
        start = seen.get(key(omega))
        if start is not None:
            return OrbitReport(n, tuple(configs), Verdict.CONTINUAL, cycle_start=start)
    return OrbitReport(n, tuple(configs), Verdict.INCONCLUSIVE)


@dataclass(frozen=True)
class OneCliqueReport:
    n: int
    config: BrushConfig
    final_config: BrushConfig
    cap: bool
    cleans: bool
    multiset: bool
    peak: int
    strict: bool = False

    @property
    def S(self) -> int:
        return sum(self.config)

    @property
    def step_cap(self) -> bool:
        """No vertex held more than n - 1 brushes at any time of the run."""
        return self.peak <= self.n - 1

    @property
    def verdict(self) -> bool:
        ok = self.cap and self.cleans and self.multiset
        return ok and self.step_cap if self.strict else ok

    def __bool__(self) -> bool:
        return self.verdict

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "S": self.S,
            "cap": self.cap,
            "cleans": self.cleans,
            "multiset": self.multiset,
            "strict": self.strict,
            "step_cap": self.step_cap,
            "peak": self.peak,
            "verdict": self.verdict,
            "final_config": list(self.final_config),
        }

    def to_text(self) -> str:
        yn = lambda b: "yes" if b else "no"  # noqa: E731
        lines = [
            f"n {self.n}",
            f"S {self.S}",
            f"cap {yn(self.cap)}",
            f"cleans {yn(self.cleans)}",
            f"multiset {yn(self.multiset)}",
        ]
        if self.strict:
            lines.append(f"step-cap {yn(self.step_cap)} peak {self.peak}")
        lines.append("final " + " ".join(map(str, self.final_config)))
        lines.append(f"verdict {'true' if self.verdict else 'false'}")
        return "\n".join(lines) + "\n"


def is_one_clique_config(n: int, omega0: Sequence[int], strict: bool = False) -> OneCliqueReport:
    """Check the 1-clique conditions for ``omega0`` on K_n.

    The cap is checked on the initial configuration; ``strict=True`` also
    requires it at every step of the run.
    """
    config = as_config(omega0, n)
    trace = clique_parallel_clean(n, config, mode="summary")
    return OneCliqueReport(
        n=n,
        config=config,
        final_config=trace.final_config,
        cap=all(w <= n - 1 for w in config),
        cleans=trace.cleaned,
        multiset=trace.cleaned and sorted(trace.final_config) == sorted(config),
        peak=trace.peak,
        strict=strict,
    )

