"""Benchmark harness backing the linear-time and quadratic-scaling claims.

Each run times the extended division (or the standard division) on seeded
random words and records, next to wall time, a machine-independent
operation counter: the number of separation rule applications plus the
number of letterwise shift applications performed.  For the extended
division that counter is exactly two operations per letter regardless of
word length, which is the hardware-free form of the linear-time claim; the
wall-clock per-letter figures substantiate it on the machine at hand.

Table construction for the standard division (the half-twist and D words
per strand count) is warmed up before timing starts, so rows measure the
per-call cost with the one-time setup amortised away.
"""

from __future__ import annotations

import csv
import gc
import random
import statistics
import time
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

from .bridge import _image_table, extend, fsd
from .extended import ged_details
from .sampling import random_extended_word, random_standard_word

ALGORITHMS = ("ged", "fsd")


@dataclass(frozen=True, slots=True)
class BenchRow:
    """One timed trial: strand count, input length, wall time, op counts."""

    n: int
    length: int
    trial: int
    ns_total: int
    ops: int

    @property
    def ns_per_letter(self) -> float:
        return self.ns_total / self.length if self.length else 0.0

    @property
    def ops_per_letter(self) -> float:
        return self.ops / self.length if self.length else 0.0


def run_bench(
    algorithm: str,
    ns: Sequence[int],
    sizes: Sequence[int],
    trials: int,
    seed: int = 0,
) -> list[BenchRow]:
    """Time the chosen division on random words, one row per trial.

    Sizes must be ascending.  Rows come out sorted by (n, length, trial)
    and are deterministic for a fixed seed up to wall-clock jitter.
    """
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    if list(sizes) != sorted(sizes):
        raise ValueError("sizes must be ascending")
    rows: list[BenchRow] = []
    for n in ns:
        if algorithm == "fsd":
            _image_table(n)  # one-time table setup, excluded from timing
        rng = random.Random(seed ^ (n << 20))
        for size in sizes:
            for trial in range(trials):
                if algorithm == "ged":
                    word = random_extended_word(n, size, rng)
                    gc_was_enabled = gc.isenabled()
                    gc.disable()
                    try:
                        started = time.perf_counter_ns()
                        result = ged_details(word)
                        elapsed = time.perf_counter_ns() - started
                    finally:
                        if gc_was_enabled:
                            gc.enable()
                    ops = result.stats.total_ops
                else:
                    word = random_standard_word(n, size, rng)
                    gc_was_enabled = gc.isenabled()
                    gc.disable()
                    try:
                        started = time.perf_counter_ns()
                        fsd(word)
                        elapsed = time.perf_counter_ns() - started
                    finally:
                        if gc_was_enabled:
                            gc.enable()
                    # recount the division engine's work on the same extension
                    ops = ged_details(extend(word)).stats.total_ops
                rows.append(
                    BenchRow(n=n, length=size, trial=trial, ns_total=elapsed, ops=ops)
                )
    return rows


def median_ns_per_letter(rows: Iterable[BenchRow]) -> dict[tuple[int, int], float]:
    """Median per-letter wall time keyed by (n, length)."""
    grouped: dict[tuple[int, int], list[float]] = {}
    for row in rows:
        grouped.setdefault((row.n, row.length), []).append(row.ns_per_letter)
    return {key: statistics.median(values) for key, values in grouped.items()}


def fit_log_slope(points: Sequence[tuple[float, float]]) -> float:
    """Least-squares slope of log(y) against log(x)."""
    import math

    xs = [math.log(x) for x, _ in points]
    ys = [math.log(y) for _, y in points]
    mean_x = sum(xs) / len(xs)
    mean_y = sum(ys) / len(ys)
    numerator = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    denominator = sum((x - mean_x) ** 2 for x in xs)
    return numerator / denominator


def write_csv(rows: Iterable[BenchRow], stream: TextIO) -> None:
    """Stable CSV schema: n,len,trial,ns_total,ns_per_letter,ops,ops_per_letter."""
    writer = csv.writer(stream)
    writer.writerow(
        ["n", "len", "trial", "ns_total", "ns_per_letter", "ops", "ops_per_letter"]
    )
    for row in rows:
        writer.writerow(
            [
                row.n,
                row.length,
                row.trial,
                row.ns_total,
                f"{row.ns_per_letter:.3f}",
                row.ops,
                f"{row.ops_per_letter:.3f}",
            ]
        )


def format_table(rows: Sequence[BenchRow]) -> str:
    header = f"{'n':>4} {'len':>9} {'trial':>5} {'ns_total':>12} {'ns/letter':>10} {'ops':>10} {'ops/letter':>10}"
    lines = [header]
    for row in rows:
        lines.append(
            f"{row.n:>4} {row.length:>9} {row.trial:>5} {row.ns_total:>12} "
            f"{row.ns_per_letter:>10.2f} {row.ops:>10} {row.ops_per_letter:>10.2f}"
        )
    return "\n".join(lines)
