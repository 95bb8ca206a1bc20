"""Monte Carlo estimation of logical error rates under independent X/Z noise.

Each trial draws X and Z errors independently with probability p per qubit,
decodes both species, and counts a failure when any of the 2k logicals is
flipped.  Trial i uses its own Philox counter stream keyed by (seed, i), so
results are identical no matter how trials are split across workers.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from multiprocessing import Pool

import numpy as np

from .csscode import CssCode
from .decoder import Decoder

RNG_NAME = "philox"  # numpy.random.Philox, 4x64 counter-based


@dataclass(frozen=True)
class NoiseModel:
    p: float

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p = {self.p} outside [0, 1]")


@dataclass(frozen=True)
class SimPoint:
    p: float
    trials: int
    failures: int
    p_log: float
    ci_low: float
    ci_high: float
    seed: int


@dataclass
class SimCurve:
    r: int
    s: int
    n: int
    k: int
    d: int
    points: list = field(default_factory=list)


def wilson_interval(failures: int, trials: int, z: float = 1.959963984540054):
    """95% Wilson score interval for a binomial proportion."""
    if trials == 0:
        return 0.0, 1.0
    ph = failures / trials
    denom = 1 + z * z / trials
    center = (ph + z * z / (2 * trials)) / denom
    half = z * math.sqrt(ph * (1 - ph) / trials + z * z / (4 * trials * trials)) / denom
    lo = 0.0 if failures == 0 else max(0.0, center - half)
    hi = 1.0 if failures == trials else min(1.0, center + half)
    return lo, hi


def _trial_stream(seed: int, trial: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=(seed << 64) + trial))


def _run_range(dec: Decoder, p: float, seed: int, start: int, stop: int) -> int:
    n = dec.code.n
    failures = 0
    for i in range(start, stop):
        u = _trial_stream(seed, i).random(2 * n)
        e_z = (u[:n] < p).view(np.uint8)
        e_x = (u[n:] < p).view(np.uint8)
        if dec.failure_mask(e_z, "Z") or dec.failure_mask(e_x, "X"):
            failures += 1
    return failures


_worker_decoder = None


def _worker_init(dec):
    global _worker_decoder
    _worker_decoder = dec


def _worker_run(args):
    p, seed, start, stop = args
    return _run_range(_worker_decoder, p, seed, start, stop)


def run_point(
    code: CssCode,
    p: float,
    trials: int = 40_000,
    seed: int = 0,
    workers: int = 1,
    decoder: Decoder | None = None,
) -> SimPoint:
    NoiseModel(p)
    dec = (decoder or Decoder(code)).precompute()
    if workers <= 1:
        failures = _run_range(dec, p, seed, 0, trials)
    else:
        step = -(-trials // (4 * workers))
        chunks = [
            (p, seed, lo, min(lo + step, trials)) for lo in range(0, trials, step)
        ]
        with Pool(workers, initializer=_worker_init, initargs=(dec,)) as pool:
            failures = sum(pool.map(_worker_run, chunks))
    lo, hi = wilson_interval(failures, trials)
    return SimPoint(p, trials, failures, failures / trials, lo, hi, seed)


def run_curve(
    code: CssCode,
    p_grid: list,
    trials: int = 40_000,
    seed: int = 0,
    workers: int = 1,
    d: int | None = None,
) -> SimCurve:
    dec = Decoder(code).precompute()
    curve = SimCurve(code.r, code.s, code.n, code.k, d if d is not None else -1)
    for p in sorted(p_grid):
        curve.points.append(
            run_point(code, p, trials, seed, workers, decoder=dec)
        )
    return curve


def overhead_point(
    code_or_fn,
    target: float = 0.999,
    trials: int = 40_000,
    seed: int = 0,
    tol: float = 1e-3,
    workers: int = 1,
):
    """Largest p (up to the 0.5 cap) where all qubits stay protected with
    probability >= target, located by bisection on the failure rate."""
    if callable(code_or_fn):
        p_log = code_or_fn
    else:
        dec = Decoder(code_or_fn).precompute()
        p_log = lambda p: run_point(
            code_or_fn, p, trials, seed, workers, decoder=dec
        ).p_log
    budget = 1.0 - target
    if p_log(0.5) <= budget:
        return 0.5
    lo, hi = 0.0, 0.5
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if p_log(mid) <= budget:
            lo = mid
        else:
            hi = mid
    return lo


CSV_HEADER = [
    "r", "s", "n", "k", "d", "p", "trials", "failures",
    "p_log", "ci_low", "ci_high", "seed", "rng",
]


def write_csv(curves: list, path: str):
    with open(path, "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(CSV_HEADER)
        for c in curves:
            for pt in c.points:
                w.writerow([
                    c.r, c.s, c.n, c.k, c.d, pt.p, pt.trials, pt.failures,
                    f"{pt.p_log:.6g}", f"{pt.ci_low:.6g}", f"{pt.ci_high:.6g}",
                    pt.seed, RNG_NAME,
                ])
