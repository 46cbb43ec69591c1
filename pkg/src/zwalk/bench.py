"""Timing and counter harness.

Runs the reducer (and optionally the brute-force oracle and the
detect-and-contract baseline) over seeded random strings and the adversarial
family, recording wall time and operation counters.  One CSV row per run;
medians are computed separately so desk-machine noise does not leak into the
records themselves.

The interesting outputs are the scaling shapes: the reducer's counters stay
within fixed multiples of the input length on every family, while
detect-and-contract's comparison count per letter keeps growing on the
adversarial inputs.
"""

import statistics
import time
from dataclasses import dataclass, field
from typing import TextIO, Union

from . import _kernels
from .gen import adversarial, random_string
from .oracle import Strategy, normal_form_naive

CSV_HEADER = "algo,n,sigma,seed,time_ns,comparisons,appends,contractions"

ALGOS = ("reducer", "naive_oracle", "detect_and_contract")


@dataclass(frozen=True)
class BenchRecord:
    algo: str
    n: int
    sigma: Union[int, str]  # alphabet size, or "adversarial"
    seed: int  # seed for random inputs; the level m for adversarial ones
    time_ns: int  # -1 marks a skipped run
    comparisons: int
    appends: int
    contractions: int

    @property
    def skipped(self) -> bool:
        return self.time_ns < 0

    def csv_row(self) -> str:
        return (
            f"{self.algo},{self.n},{self.sigma},{self.seed},"
            f"{self.time_ns},{self.comparisons},{self.appends},{self.contractions}"
        )


@dataclass
class BenchConfig:
    algos: tuple = ("reducer",)
    sizes: tuple = ()
    sigmas: tuple = ()
    adversarial_ms: tuple = ()
    repetitions: int = 10
    seed_base: int = 1
    naive_cap: int = 4096


def _run_once(algo: str, ids) -> tuple[int, int, int, int]:
    """Returns (time_ns, comparisons, appends, contractions)."""
    if algo == "reducer":
        t0 = time.perf_counter_ns()
        _, regs, _ = _kernels.zreduce(ids, collect_trace=False)
        dt = time.perf_counter_ns() - t0
        return (
            dt,
            int(regs[_kernels.R_COMPS]),
            int(regs[_kernels.R_READS]),
            int(regs[_kernels.R_NCONTR]),
        )
    if algo == "detect_and_contract":
        t0 = time.perf_counter_ns()
        _, regs = _kernels.detect_and_contract(ids)
        dt = time.perf_counter_ns() - t0
        return (
            dt,
            int(regs[_kernels.R_COMPS]),
            int(regs[_kernels.R_READS]),
            int(regs[_kernels.R_NCONTR]),
        )
    raise ValueError(f"unknown algorithm {algo!r}")


def _run_naive(s) -> tuple[int, int, int, int]:
    # comparisons for the oracle are the letter comparisons of its radii
    # rescans; it appends nothing.
    import numpy as np

    cur = s.ids
    comps = 0
    steps = 0
    t0 = time.perf_counter_ns()
    cur = np.ascontiguousarray(cur, dtype=np.int32)
    while cur.shape[0] >= 3:
        radii = np.zeros(cur.shape[0], dtype=np.int32)
        comps += int(_kernels.naive_radii_kernel(cur, radii))
        p1, p2 = (int(v) for v in _kernels.first_z_kernel(radii))
        if p1 == 0:
            break
        sarm = p2 - p1
        cur = np.concatenate((cur[:p1], cur[p2 + sarm :]))
        steps += 1
    dt = time.perf_counter_ns() - t0
    return dt, comps, 0, steps


def run_bench(config: BenchConfig) -> list[BenchRecord]:
    """Run every configured (algorithm, input) pair ``repetitions`` times.

    The first (warm-up) run per pair is discarded; inputs above
    ``naive_cap`` yield a single skipped record for the oracle instead of
    being run."""
    records: list[BenchRecord] = []
    inputs = []
    k = 0
    for n in config.sizes:
        for sigma in config.sigmas:
            seed = config.seed_base + k
            k += 1
            inputs.append((random_string(n, sigma, seed), n, sigma, seed))
    for m in config.adversarial_ms:
        full, _ = adversarial(m)
        inputs.append((full, len(full), "adversarial", m))

    for algo in config.algos:
        if algo not in ALGOS:
            raise ValueError(f"unknown algorithm {algo!r}")
        for s, n, sigma, seed in inputs:
            if algo == "naive_oracle":
                if n > config.naive_cap:
                    records.append(BenchRecord(algo, n, sigma, seed, -1, -1, -1, -1))
                    continue
                runner = lambda: _run_naive(s)
            else:
                ids = s.ids
                runner = lambda: _run_once(algo, ids)
            runner()  # warm-up, discarded
            for _ in range(config.repetitions):
                dt, comps, appends, contractions = runner()
                records.append(
                    BenchRecord(algo, n, sigma, seed, dt, comps, appends, contractions)
                )
    return records


def write_csv(records: list[BenchRecord], fh: TextIO) -> None:
    fh.write(CSV_HEADER + "\n")
    for rec in records:
        fh.write(rec.csv_row() + "\n")


def median_summary(records: list[BenchRecord]) -> list[str]:
    """One line per (algo, n, sigma): median time and time per letter."""
    groups: dict[tuple, list[BenchRecord]] = {}
    for rec in records:
        if rec.skipped:
            continue
        groups.setdefault((rec.algo, rec.n, rec.sigma, rec.seed), []).append(rec)
    lines = []
    for (algo, n, sigma, seed), recs in groups.items():
        med = statistics.median(r.time_ns for r in recs)
        per = med / n if n else float("nan")
        lines.append(
            f"{algo} n={n} sigma={sigma} seed={seed} "
            f"median_ns={int(med)} ns_per_letter={per:.2f}"
        )
    return lines
