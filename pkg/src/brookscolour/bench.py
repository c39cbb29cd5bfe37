"""Wall-clock scaling measurements for the colouring pipeline.

For each requested size n a random connected graph with m = 3n edges is
generated, construction and colouring are timed separately with the
monotonic nanosecond clock, and medians over the repeats damp noise.
Every colouring is checked by the verifier before its timing is recorded.
A warm-up colouring runs first so compilation never lands in a timing.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

import numpy as np

from .colouring import brooks_bound, brooks_colour
from .errors import BadParamsError
from .generators import random_connected
from .graph import build_graph, max_degree
from .oracle import verify_colouring

CSV_HEADER = "n,m,build_ns,colour_ns,colours,delta"


@dataclass(frozen=True)
class BenchmarkRecord:
    n: int
    m: int
    build_ns: int
    colour_ns: int
    colours: int
    delta: int

    def csv_row(self) -> str:
        return f"{self.n},{self.m},{self.build_ns},{self.colour_ns},{self.colours},{self.delta}"


def _derived_seed(seed: int, n: int) -> int:
    return int(np.random.SeedSequence([seed, n]).generate_state(1)[0])


def bench(sizes, repeats: int = 5, seed: int = 0,
          csv_path: str | None = None) -> list[BenchmarkRecord]:
    """Time graph construction and colouring for each size in ``sizes``.

    Sizes must be ascending and at least 7 (so m = 3n stays simple).
    Returns one record per size; writes CSV when a path is given.
    """
    sizes = [int(s) for s in sizes]
    if sizes != sorted(sizes):
        raise BadParamsError("sizes must be ascending")
    if sizes and sizes[0] < 7:
        raise BadParamsError("sizes must be >= 7 so that m = 3n fits a simple graph")
    if repeats < 1:
        raise BadParamsError("repeats must be >= 1")

    # warm-up: touch every code path once so JIT time never hits a timing
    warm = random_connected(64, 192, seed=_derived_seed(seed, 0))
    warm_col, _ = brooks_colour(warm)
    verify_colouring(warm, warm_col, brooks_bound(warm))

    records = []
    for n in sizes:
        g = random_connected(n, 3 * n, seed=_derived_seed(seed, n))
        edges = g.edges()
        build_times = []
        for _ in range(repeats):
            t0 = time.perf_counter_ns()
            rebuilt = build_graph(n, edges)
            build_times.append(time.perf_counter_ns() - t0)
        g = rebuilt
        bound = brooks_bound(g)
        colour_times = []
        colours = 0
        for _ in range(repeats):
            t0 = time.perf_counter_ns()
            col, _report = brooks_colour(g)
            elapsed = time.perf_counter_ns() - t0
            violations = verify_colouring(g, col, bound)
            if violations:
                raise AssertionError(f"benchmark colouring invalid at n={n}: {violations[:3]}")
            colour_times.append(elapsed)
            colours = col.num_colours
        records.append(BenchmarkRecord(
            n=n, m=g.m,
            build_ns=int(statistics.median(build_times)),
            colour_ns=int(statistics.median(colour_times)),
            colours=colours, delta=max_degree(g)))
    if csv_path is not None:
        write_csv(records, csv_path)
    return records


def write_csv(records, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(CSV_HEADER + "\n")
        for rec in records:
            fh.write(rec.csv_row() + "\n")
