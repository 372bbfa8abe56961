"""Tabular output: significant-digit formatting, CSV and markdown emission."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mpf

SIG_DIGITS = 17

TABLE_HEADER = ("b", "m", "exact", "approx", "abs_diff")
SIMULATION_HEADER = (
    "bits",
    "path_len",
    "total_trials",
    "matches",
    "empirical_p",
    "exact_p",
    "std_error",
    "z_score",
    "seed",
)


def format_sig(x, digits: int = SIG_DIGITS) -> str:
    """Decimal string with the given significant digits, '.' separator, no grouping."""
    with mpmath.workdps(digits + 10):
        if isinstance(x, Fraction):
            x = mpf(x.numerator) / mpf(x.denominator)
        else:
            x = mpf(x)
        return mpmath.nstr(x, digits, strip_zeros=True)


@dataclass(frozen=True)
class ReportTable:
    """Formatted rows ready for CSV or markdown; header is part of the contract."""

    header: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]

    @classmethod
    def from_estimates(cls, estimates) -> "ReportTable":
        ordered = sorted(estimates, key=lambda e: (e.params.bits, e.params.path_len))
        rows = tuple(
            (
                str(e.params.bits),
                str(e.params.path_len),
                format_sig(e.exact.value),
                format_sig(e.approx.value),
                format_sig(e.abs_diff),
            )
            for e in ordered
        )
        return cls(TABLE_HEADER, rows)

    @classmethod
    def from_simulation(cls, cells) -> "ReportTable":
        ordered = sorted(cells, key=lambda c: (c.config.bits, c.config.path_len))
        rows = tuple(
            (
                str(c.config.bits),
                str(c.config.path_len),
                str(c.total_trials),
                str(c.matches),
                # matches/total is exact; format the rational, not its float
                format_sig(Fraction(c.matches, c.total_trials)),
                format_sig(c.exact_p),
                format_sig(c.std_error),
                format_sig(c.z_score),
                str(c.config.master_seed),
            )
            for c in ordered
        )
        return cls(SIMULATION_HEADER, rows)

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(self.header)
        writer.writerows(self.rows)
        return out.getvalue()

    def to_markdown(self) -> str:
        lines = [
            "| " + " | ".join(self.header) + " |",
            "|" + "|".join(" --- " for _ in self.header) + "|",
        ]
        lines.extend("| " + " | ".join(row) + " |" for row in self.rows)
        return "\n".join(lines) + "\n"
