"""Wall-clock comparison of the fast transform against the dense oracle."""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

import numpy as np

from . import fourier, transforms


@dataclass(frozen=True)
class BenchRow:
    n: int
    fft_seconds: float
    naive_seconds: float | None  # None above the dense cap


@dataclass(frozen=True)
class BenchReport:
    rows: tuple[BenchRow, ...]
    repeats: int

    def doubling_ratios(self) -> list[tuple[int, float]]:
        """[(n, T(n)/T(n/2))] for consecutive sizes; ~2 for an n log n fft."""
        out = []
        for prev, cur in zip(self.rows, self.rows[1:]):
            if cur.n == 2 * prev.n and prev.fft_seconds > 0:
                out.append((cur.n, cur.fft_seconds / prev.fft_seconds))
        return out

    def format_table(self, porcelain: bool = False) -> str:
        ratios = dict(self.doubling_ratios())
        lines = []
        if porcelain:
            for row in self.rows:
                naive = "" if row.naive_seconds is None else f"{row.naive_seconds:.9f}"
                ratio = f"{ratios[row.n]:.3f}" if row.n in ratios else ""
                lines.append(f"{row.n}\t{row.fft_seconds:.9f}\t{naive}\t{ratio}")
            return "\n".join(lines) + "\n"
        lines.append(f"{'n':>8}  {'fft (s)':>12}  {'naive (s)':>12}  {'speedup':>8}  {'T(n)/T(n/2)':>11}")
        for row in self.rows:
            if row.naive_seconds is None:
                naive = "skipped"
                speedup = "-"
            else:
                naive = f"{row.naive_seconds:.6f}"
                speedup = f"{row.naive_seconds / row.fft_seconds:.1f}x" if row.fft_seconds > 0 else "inf"
            ratio = f"{ratios[row.n]:.2f}" if row.n in ratios else "-"
            lines.append(f"{row.n:>8}  {row.fft_seconds:>12.6f}  {naive:>12}  {speedup:>8}  {ratio:>11}")
        return "\n".join(lines) + "\n"


def _median_seconds(fn, repeats: int) -> float:
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return statistics.median(times)


def run_bench(sizes, repeats: int = 5, naive_cap: int = 4096, seed: int = 0) -> BenchReport:
    """Median-of-repeats timings of fft and the dense naive transform.

    Sizes must be ascending powers of two; the naive side builds its Fourier
    matrix outside the timed region and is skipped above naive_cap.
    """
    sizes = [int(n) for n in sizes]
    if not sizes or any(not transforms.is_power_of_two(n) for n in sizes):
        raise ValueError(f"sizes must be powers of two, got {sizes}")
    if sorted(sizes) != sizes:
        raise ValueError("sizes must be ascending")
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    rng = np.random.default_rng(seed)
    rows = []
    for n in sizes:
        x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        transforms.fft(x)  # warm the twiddle cache before timing
        t_fft = _median_seconds(lambda: transforms.fft(x), repeats)
        t_naive = None
        if n <= naive_cap:
            f = fourier.dft_matrix(n)
            t_naive = _median_seconds(lambda: f @ x, repeats)
        rows.append(BenchRow(n, t_fft, t_naive))
    return BenchReport(tuple(rows), repeats)
