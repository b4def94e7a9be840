"""Closed-form quantities for cliques, in exact rational arithmetic.

Only leading quadratic terms are given where the underlying bounds carry an
unspecified ``O(n)`` term; exact construction costs come from the chain.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .constructions import CliqueChain

CONJECTURED_RATIO = Fraction(9, 16)
LIMIT_RATIO = Fraction(7, 12)
LIMIT_COEFFICIENT = Fraction(3, 7)


def brush_number_clique(n: int) -> int:
    """b(K_n) = floor(n^2 / 4)."""
    if n < 1:
        raise ValueError(f"clique order must be positive, got {n}")
    return n * n // 4


@dataclass(frozen=True)
class PriorBounds:
    lower: Fraction
    upper: Fraction
    # both carry an unstated linear term
    plus_linear: bool = True


def prior_bounds_clique(n: int) -> PriorBounds:
    """Leading terms (5/16) n^2 and (4/9) n^2 of the earlier cpb(K_n) bounds."""
    if n < 1:
        raise ValueError(f"clique order must be positive, got {n}")
    return PriorBounds(Fraction(5, 16) * n * n, Fraction(4, 9) * n * n)


def envelope_coefficient(i: int, intro_variant: bool = False) -> Fraction:
    """3/7 + (1/63)(2/9)^i, or with exponent i+1 when ``intro_variant``."""
    if i < 0:
        raise ValueError(f"chain index must be non-negative, got {i}")
    e = i + 1 if intro_variant else i
    return LIMIT_COEFFICIENT + Fraction(1, 63) * Fraction(2, 9) ** e


def envelope(i: int, n: int, intro_variant: bool = False) -> Fraction:
    return envelope_coefficient(i, intro_variant) * n * n


@dataclass(frozen=True)
class BoundsRow:
    i: int
    n: int
    b: int
    S: int
    envelope: Fraction
    envelope_coeff: Fraction

    @property
    def s_ratio(self) -> Fraction:
        return Fraction(self.S, self.n * self.n)

    @property
    def b_over_s(self) -> Fraction:
        return Fraction(self.b, self.S) if self.S else Fraction(0)

    @property
    def slack(self) -> Fraction:
        """(S - envelope) / n: the linear-term constant this level needs."""
        return (self.S - self.envelope) / self.n


def ratio_table(chain: CliqueChain, intro_variant: bool = False) -> list[BoundsRow]:
    """One row per chain level with exact costs from the lift recursion."""
    rows = []
    for i, (n, S) in enumerate(zip(chain.orders, chain.costs)):
        rows.append(
            BoundsRow(
                i=i,
                n=n,
                b=brush_number_clique(n),
                S=S,
                envelope=envelope(i, n, intro_variant),
                envelope_coeff=envelope_coefficient(i, intro_variant),
            )
        )
    return rows


@dataclass(frozen=True)
class RatioSummary:
    first_above_conjecture: int | None  # first level with b/S > 9/16
    above_from_then_on: bool
    last_s_ratio_gap: Fraction  # |S/n^2 - 3/7| at the last level
    last_b_over_s_gap: Fraction  # |b/S - 7/12| at the last level
    slack_constant: Fraction  # max over levels of (S - envelope) / n, at least 0


def summarize(rows: list[BoundsRow]) -> RatioSummary:
    first = next((r.i for r in rows if r.b_over_s > CONJECTURED_RATIO), None)
    after = first is not None and all(r.b_over_s > CONJECTURED_RATIO for r in rows[first:])
    last = rows[-1]
    return RatioSummary(
        first_above_conjecture=first,
        above_from_then_on=after,
        last_s_ratio_gap=abs(last.s_ratio - LIMIT_COEFFICIENT),
        last_b_over_s_gap=abs(last.b_over_s - LIMIT_RATIO),
        slack_constant=max([Fraction(0)] + [r.slack for r in rows]),
    )


def to_decimal(x: Fraction, digits: int = 12) -> str:
    # round-half-even on the exact value; display only
    scaled = round(x * 10**digits)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


CSV_COLUMNS = ("i", "n", "b", "S", "S/n^2", "envelope_coeff", "b/S")


def rows_to_csv(rows: list[BoundsRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in rows:
        writer.writerow(
            [r.i, r.n, r.b, r.S, to_decimal(r.s_ratio), to_decimal(r.envelope_coeff), to_decimal(r.b_over_s)]
        )
    return buf.getvalue()
