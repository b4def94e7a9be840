"""Simple undirected graphs on vertices ``0..n-1``.

Graphs are immutable; the edge-list text format is::

    n m
    u v
    ...

with one edge per line after the header.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable


class GraphError(ValueError):
    """Invalid graph construction."""


class GraphParseError(GraphError):
    """Edge-list parse failure; ``kind`` names the defect and ``line`` is 1-based."""

    def __init__(self, kind: str, line: int, detail: str):
        self.kind = kind
        self.line = line
        super().__init__(f"{kind} at line {line}: {detail}")


def _normalize(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]
    adjacency: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        seen: set[tuple[int, int]] = set()
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            e = _normalize(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
            nbrs[u].append(v)
            nbrs[v].append(u)
        adjacency = tuple(tuple(sorted(a)) for a in nbrs)
        return cls(n, frozenset(seen), adjacency)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def is_clique(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for u in self.adjacency[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n

    def render(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{u} {v}" for u, v in sorted(self.edges))
        return "\n".join(lines) + "\n"


def make_clique(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"clique order must be at least 1, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle length must be at least 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format, rejecting loops, duplicates and bad endpoints."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise GraphParseError("malformed line", 1, "missing 'n m' header")

    def ints(lineno: int, raw: str) -> tuple[int, int]:
        parts = raw.split()
        if len(parts) != 2:
            raise GraphParseError("malformed line", lineno, f"expected two integers, got {raw!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError("malformed line", lineno, f"non-integer token in {raw!r}") from None
        return a, b

    n, m = ints(1, lines[0])
    if n < 0 or m < 0:
        raise GraphParseError("malformed line", 1, "n and m must be non-negative")
    body = lines[1:]
    if len(body) != m:
        # report the first missing line, or the first surplus one
        lineno = len(lines) + 1 if len(body) < m else m + 2
        raise GraphParseError(
            "edge count mismatch", lineno, f"header declares {m} edges, found {len(body)}"
        )
    seen: set[tuple[int, int]] = set()
    for offset, raw in enumerate(body, start=2):
        u, v = ints(offset, raw)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError("out-of-range endpoint", offset, f"edge ({u}, {v}) with n={n}")
        if u == v:
            raise GraphParseError("self-loop", offset, f"vertex {u}")
        e = _normalize(u, v)
        if e in seen:
            raise GraphParseError("duplicate edge", offset, f"{e[0]} {e[1]}")
        seen.add(e)
    return Graph.from_edges(n, seen)
