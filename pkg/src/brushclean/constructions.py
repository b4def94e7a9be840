"""Explicit 1-clique configurations and the recursive chains built from them.

A chain starts from a small verified base on K_{n0} and repeatedly lifts a
1-clique configuration of K_n to one of K_{3n+d}, d in {1, 2, 3}.  Costs
(brush totals) are tracked as exact integers next to the configurations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Sequence

from .engine import BrushConfig, as_config, clique_parallel_clean
from .orbit import is_one_clique_config
from .search import min_one_clique

DIGITS = (1, 2, 3)


class ConstructionError(ValueError):
    pass


def theorem_config(k: int) -> BrushConfig:
    """The three-phase configuration of K_{3k+3}.

    Vertices ``k..2k+2`` hold ``k+2`` brushes; every other vertex ``i`` holds
    ``i``.  The total is ``4k^2 + 7k + 6``.
    """
    if k < 0:
        raise ConstructionError(f"k must be non-negative, got {k}")
    return tuple(k + 2 if k <= i <= 2 * k + 2 else i for i in range(3 * k + 3))


def theorem_cost(k: int) -> int:
    return 4 * k * k + 7 * k + 6


def lift_cost(S: int, n: int, d: int) -> int:
    """Brush total of the lift of an ``S``-brush configuration of K_n to K_{3n+d}."""
    if d == 3:
        return 2 * S + 3 * n * n + 8 * n + 6
    if d == 1:
        return 2 * S + 3 * n * n + 2 * n
    if d == 2:
        return 2 * S + 3 * n * n + 5 * n + 2
    raise ConstructionError(f"digit must be 1, 2 or 3, got {d}")


def lemma_lift(base: Sequence[int], d: int, verify: bool = True) -> BrushConfig:
    """Lift a 1-clique configuration of K_n to K_{3n+d}.

    The result is three blocks: the base itself on ``u_0..u_{n-1}``, ``n+d``
    vertices holding ``n+d-1`` brushes each, and the base shifted up by
    ``2n+d`` on the last ``n`` vertices.
    """
    if d not in DIGITS:
        raise ConstructionError(f"digit must be 1, 2 or 3, got {d}")
    base = as_config(base)
    n = len(base)
    if n < 1:
        raise ConstructionError("base configuration is empty")
    if verify and not is_one_clique_config(n, base).verdict:
        raise ConstructionError(f"base on K_{n} is not a 1-clique configuration")
    middle = (n + d - 1,) * (n + d)
    top = tuple(w + 2 * n + d for w in base)
    return base + middle + top


@lru_cache(maxsize=None)
def base_config(n: int) -> BrushConfig:
    """Minimum-total 1-clique configuration of K_n for n in {1, 2, 3}, ascending."""
    if n not in (1, 2, 3):
        raise ConstructionError(f"base order must be 1, 2 or 3, got {n}")
    found = min_one_clique(n)
    config = tuple(sorted(found.witness))
    if not is_one_clique_config(n, config).verdict:  # pragma: no cover - guarded by search
        raise ConstructionError(f"search returned an invalid base for K_{n}")
    return config


@dataclass(frozen=True)
class CliqueChain:
    """Orders ``n_i = 3 n_{i-1} + d_i`` starting from ``n0``.

    ``base`` defaults to :func:`base_config`; supply one to start from any
    other verified 1-clique configuration.
    """

    n0: int
    digits: tuple[int, ...] = ()
    base: BrushConfig | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(int(d) for d in self.digits))
        if self.n0 < 1:
            raise ConstructionError(f"base order must be positive, got {self.n0}")
        bad = [d for d in self.digits if d not in DIGITS]
        if bad:
            raise ConstructionError(f"digits must be in {{1, 2, 3}}, got {bad}")
        if self.base is not None:
            object.__setattr__(self, "base", as_config(self.base, self.n0))

    @cached_property
    def base_configuration(self) -> BrushConfig:
        return self.base if self.base is not None else base_config(self.n0)

    @cached_property
    def orders(self) -> tuple[int, ...]:
        out = [self.n0]
        for d in self.digits:
            out.append(3 * out[-1] + d)
        return tuple(out)

    @cached_property
    def costs(self) -> tuple[int, ...]:
        out = [sum(self.base_configuration)]
        for n, d in zip(self.orders, self.digits):
            out.append(lift_cost(out[-1], n, d))
        return tuple(out)

    def __len__(self) -> int:
        return len(self.orders)

    def to_dict(self) -> dict:
        return {
            "n0": self.n0,
            "digits": list(self.digits),
            "orders": list(self.orders),
            "costs": list(self.costs),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def parse(cls, text: str) -> "CliqueChain":
        """Parse ``"n0,d1,d2,..."``."""
        try:
            parts = [int(p) for p in text.replace(" ", "").split(",") if p]
        except ValueError:
            raise ConstructionError(f"chain must be comma-separated integers, got {text!r}") from None
        if not parts:
            raise ConstructionError("empty chain")
        return cls(parts[0], tuple(parts[1:]))


@dataclass(frozen=True)
class BuiltChain:
    chain: CliqueChain
    configs: tuple[BrushConfig, ...]

    @property
    def costs(self) -> tuple[int, ...]:
        return tuple(sum(c) for c in self.configs)


def build_chain(chain: CliqueChain, verify: bool = True) -> BuiltChain:
    """Materialize every level of ``chain``.

    Each lift verifies the level below it; with ``verify`` the top level is
    checked as well, so every returned configuration is a verified 1-clique
    configuration.
    """
    configs = [chain.base_configuration]
    for d in chain.digits:
        configs.append(lemma_lift(configs[-1], d, verify=verify))
    if verify and not is_one_clique_config(len(configs[-1]), configs[-1]).verdict:
        raise ConstructionError(f"level {len(configs) - 1} of {chain} failed verification")
    built = BuiltChain(chain, tuple(configs))
    if built.costs != chain.costs:  # pragma: no cover - cost recursion is exact
        raise ConstructionError("configuration totals disagree with the cost recursion")
    return built


def decompose(n: int) -> CliqueChain:
    """The chain ending at ``n`` whose base lies in {1, 2, 3}.

    For ``n >= 4`` exactly one digit ``d`` makes ``(n - d) / 3`` a positive
    integer, so the chain is unique.
    """
    if n < 1:
        raise ConstructionError(f"order must be positive, got {n}")
    digits: list[int] = []
    while n > 3:
        d = (n - 1) % 3 + 1
        digits.append(d)
        n = (n - d) // 3
    return CliqueChain(n, tuple(reversed(digits)))


def construct(n: int) -> BrushConfig:
    """A verified 1-clique configuration of K_n via :func:`decompose`."""
    return build_chain(decompose(n)).configs[-1]


def phase_profile(k: int) -> tuple[int, ...]:
    """Number of vertices cleaned at each step when running ``theorem_config(k)``.

    For ``k >= 9`` this is the closed form: phase 1 doubles (1, 2, 4, ...) for
    ``l - 1`` steps with ``l = ceil(log2(k + 1))`` and finishes its ``k``
    vertices in step ``l``; then ``k + 3`` vertices, then ``k``.  Smaller ``k``
    are simulated.
    """
    if k < 0:
        raise ConstructionError(f"k must be non-negative, got {k}")
    if k < 9:
        return clique_parallel_clean(3 * k + 3, theorem_config(k), mode="summary").rho_sizes
    ell = _ceil_log2(k + 1)
    waves = tuple(2 ** j for j in range(ell - 1))
    return waves + (k - (2 ** (ell - 1) - 1), k + 3, k)


def theorem_final_config(k: int) -> BrushConfig:
    """Closed-form final configuration after running ``theorem_config(k)``, ``k >= 9``."""
    if k < 9:
        raise ConstructionError("closed form holds for k >= 9")
    ell = _ceil_log2(k + 1)
    half = 2 ** (ell - 1)
    out = []
    for i in range(3 * k + 3):
        if i < k:
            out.append(i + 2 * k + 3)
        elif i <= 2 * k + 2:
            out.append(k + 2)
        elif i <= 3 * k - half + 3:
            out.append(i + half - 2 * k - 4)
        else:
            t_star = _ceil_log2(3 * k - i + 4)
            out.append(i + 3 * 2 ** (t_star - 1) - 3 * k - 5)
    return tuple(out)


def _ceil_log2(x: int) -> int:
    return (x - 1).bit_length() if x > 0 else 0


def format_configs(configs: Sequence[Sequence[int]]) -> str:
    """Render configurations as ``n S`` header lines, each followed by the counts."""
    lines = []
    for c in configs:
        lines.append(f"{len(c)} {sum(c)}")
        lines.append(" ".join(str(w) for w in c))
    return "\n".join(lines) + "\n"


def parse_configs(text: str) -> list[BrushConfig]:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if len(rows) % 2:
        raise ConstructionError("configuration file must alternate 'n S' headers and count lines")
    out = []
    for idx in range(0, len(rows), 2):
        header, body = rows[idx], rows[idx + 1]
        try:
            n, S = (int(x) for x in header)
            config = as_config(int(x) for x in body)
        except ValueError as exc:
            raise ConstructionError(f"bad configuration record {idx // 2}: {exc}") from None
        if len(config) != n or sum(config) != S:
            raise ConstructionError(
                f"record {idx // 2}: header says n={n} S={S}, counts give n={len(config)} S={sum(config)}"
            )
        out.append(config)
    return out

