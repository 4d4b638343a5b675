"""Benchmark the compiled kernels against the pure-Python fallback.

Two operations dominate every suite in this package: turning a word into
its normal form, and conjugating a normal form by all simple elements
(the inner step of the summit-set search). The benchmark sweeps an
(n, length) grid, runs both workloads through every available backend on
identical inputs, and prints one row per grid cell with the per-call
means and the resulting speedup.
"""

from __future__ import annotations

import dataclasses
import time
from types import ModuleType

from . import _native
from .garside import _all_simples, _letters_to_factors
from .words import derive_seed, random_word

try:
    from . import _speedups
except ImportError:
    _speedups = None

__all__ = ["BenchRow", "available_backends", "render_rows", "run_bench"]


def available_backends() -> list[tuple[str, ModuleType]]:
    backends: list[tuple[str, ModuleType]] = [("python", _native)]
    if _speedups is not None:
        backends.append(("c", _speedups))
    return backends


@dataclasses.dataclass(frozen=True)
class BenchRow:
    op: str
    n: int
    length: int
    trials: int
    mean_us: dict[str, float]  # backend name -> per-call mean

    def speedup(self) -> float | None:
        if "python" in self.mean_us and "c" in self.mean_us and self.mean_us["c"] > 0:
            return self.mean_us["python"] / self.mean_us["c"]
        return None


def _grid_lengths(maxlen: int) -> list[int]:
    lengths = []
    length = 4
    while length < maxlen:
        lengths.append(length)
        length *= 2
    lengths.append(maxlen)
    return lengths


def _time_calls(fn, inputs, repeats: int) -> float:
    start = time.perf_counter()
    for _ in range(repeats):
        for args in inputs:
            fn(*args)
    elapsed = time.perf_counter() - start
    return elapsed * 1e6 / (len(inputs) * repeats)


def run_bench(n_max: int, maxlen: int, trials: int, seed: int) -> list[BenchRow]:
    """Sweep n in 2..n_max and a doubling length grid up to maxlen."""
    if n_max < 2:
        raise ValueError("need at least 2 strands")
    if maxlen < 1 or trials < 1:
        raise ValueError("maxlen and trials must be positive")
    backends = available_backends()
    rows = []
    for n in range(2, n_max + 1):
        simples = _all_simples(n)
        for length in _grid_lengths(maxlen):
            words = [
                random_word(n, length, derive_seed(seed, n * 1_000_000 + length * 1_000 + t))
                for t in range(trials)
            ]
            raw = [_letters_to_factors(n, w.letters) for w in words]
            nf_inputs = [(n, p, flat) for p, flat in raw]
            nfs = [_native.normalize(n, p, flat) for p, flat in raw]
            conj_inputs = [(n, p, flat, simples) for p, flat in nfs]
            # Repeat tiny workloads enough to get stable numbers.
            repeats = max(1, 2_000 // (trials * max(1, length)))
            nf_means = {}
            conj_means = {}
            for name, module in backends:
                nf_means[name] = _time_calls(module.normalize, nf_inputs, repeats)
                conj_means[name] = _time_calls(module.conjugate_batch, conj_inputs, repeats)
            rows.append(BenchRow("nf", n, length, trials, nf_means))
            rows.append(BenchRow("conjugate-batch", n, length, trials, conj_means))
    return rows


def render_rows(rows: list[BenchRow]) -> str:
    names = [name for name, _ in available_backends()]
    header = f"{'op':18s} {'n':>2s} {'len':>5s} {'trials':>6s}"
    for name in names:
        header += f" {name + '_us':>12s}"
    header += f" {'speedup':>8s}"
    lines = [header]
    for row in rows:
        line = f"{row.op:18s} {row.n:2d} {row.length:5d} {row.trials:6d}"
        for name in names:
            line += f" {row.mean_us[name]:12.2f}"
        ratio = row.speedup()
        line += f" {ratio:8.1f}" if ratio is not None else f" {'-':>8s}"
        lines.append(line)
    return "\n".join(lines) + "\n"
