"""Input generators, wall-clock measurement, and empirical complexity exponents.

``bench_compare`` times containment scans on pseudorandom matrices across a
ladder of sizes and fits the slope of log median-time against log n. The
timed form of each specialized label is its full-scan ``max_*`` variant: the
worst-case cost claims being checked are about complete scans, and on random
inputs the early-exit forms would mostly measure how soon a threshold fires.
The boolean verdict is still derived from the scanned statistic and, for
sizes up to 64, cross-checked against the brute-force oracle.

Generation is deterministic: ``gen_random(n, density, seed)`` fills cells
row-major with one Mersenne Twister draw each, so identical arguments give
identical matrices on every platform and run.
"""

from __future__ import annotations

import logging
import math
import random
import statistics
from dataclasses import dataclass
from time import perf_counter

from .matrix import (
    AllOnes,
    BitMatrix,
    ColumnOnes,
    Cross,
    Identity,
    LShape,
    RowOnes,
    TupleIdentity,
    classify_pattern,
    transpose,
)
from .naive import contains_naive
from .fast import (
    contains_cross,
    dispatch,
    max_allones_rows,
    max_column_ones,
    max_identity,
    max_lshape_height,
    max_tuple_identity_width,
)

log = logging.getLogger(__name__)


class BenchConfigError(ValueError):
    """Invalid benchmark configuration or label/pattern mismatch."""


class UnsupportedPatternError(ValueError):
    """No dense avoiding construction is known for this pattern class."""


def gen_random(n: int, density: float, seed: int) -> BitMatrix:
    """n x n matrix with i.i.d. ones at the given density.

    Cell (r, c) is 1 iff the next float of ``random.Random(seed)`` is below
    ``density``, drawn row-major. The generator algorithm is fixed, so the
    output is reproducible across runs and platforms.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    draw = rng.random
    return BitMatrix(n, n, bytes(1 if draw() < density else 0 for _ in range(n * n)))


def _full_rows(n: int, m: int) -> BitMatrix:
    """n x n matrix whose first m rows are all ones."""
    m = min(m, n)
    return BitMatrix(n, n, b"\x01" * (m * n) + bytes((n - m) * n))


def _corner(n: int, m: int) -> BitMatrix:
    """n x n matrix with ones exactly in the first m rows and first m columns."""
    m = min(m, n)
    cells = bytearray(n * n)
    for r in range(n):
        for c in range(n):
            if r < m or c < m:
                cells[r * n + c] = 1
    return BitMatrix(n, n, bytes(cells))


def gen_avoider(n: int, P: BitMatrix) -> BitMatrix:
    """Dense n x n matrix avoiding P, for worst-case full-scan inputs.

    Constructions by class: m-1 full rows starve any column of its m-th one
    (column-ones, L-shape, cross, all-ones, tuple identity, all via their row
    requirement); the identity avoider fills the first k-1 rows and first k-1
    columns, which caps any increasing chain of ones below k. Every output is
    re-verified by dispatch before it is returned.
    """
    if n < 1:
        raise ValueError("n must be positive")
    cls = classify_pattern(P)
    match cls:
        case ColumnOnes(k=k):
            if k < 2:
                raise UnsupportedPatternError(
                    "only the all-zero matrix avoids a single 1; no dense avoider"
                )
            M = _full_rows(n, k - 1)
        case RowOnes(w=w):
            if w < 2:
                raise UnsupportedPatternError(
                    "only the all-zero matrix avoids a single 1; no dense avoider"
                )
            M = transpose(_full_rows(n, w - 1))
        case Identity(k=k):
            if k < 2:
                raise UnsupportedPatternError(
                    "only the all-zero matrix avoids a single 1; no dense avoider"
                )
            M = _corner(n, k - 1)
        case TupleIdentity(j=j, k=k):
            M = _full_rows(n, j * k - 1)
        case LShape(h=h, w=_):
            M = _full_rows(n, h - 1)
        case Cross(a=a):
            M = _full_rows(n, a - 1)
        case AllOnes(k=k, l=_):
            M = _full_rows(n, k - 1)
        case _:
            raise UnsupportedPatternError(f"no avoider construction for {cls}")
    if dispatch(M, P):
        raise RuntimeError(f"avoider construction for {cls} failed verification")
    return M


# --- timed runners -----------------------------------------------------------

BENCH_LABELS = ("naive", "auto", "column", "identity", "tuple-identity", "lshape", "cross", "allones")


def _runner_for(label: str, P: BitMatrix, cls):
    """Map a label to the callable timed on each input matrix."""
    if label == "naive":
        return lambda A: contains_naive(A, P)
    if label == "auto":
        return lambda A: dispatch(A, P)
    if label == "column":
        match cls:
            case ColumnOnes(k=k):
                return lambda A: max_column_ones(A) >= k
            case RowOnes(w=w):
                return lambda A: max_column_ones(transpose(A)) >= w
    if label == "identity":
        match cls:
            case Identity(k=k):
                return lambda A: max_identity(A) >= k
    if label == "tuple-identity":
        match cls:
            case TupleIdentity(j=j, k=k):
                return lambda A: max_tuple_identity_width(A, j) >= k
            case Identity(k=k):
                return lambda A: max_tuple_identity_width(A, 1) >= k
    if label == "lshape":
        match cls:
            case LShape(h=h, w=w):
                return lambda A: max_lshape_height(A, w) >= h
    if label == "cross":
        match cls:
            case Cross(a=a, b=b, c=c, d=d):
                return lambda A: contains_cross(A, a, b, c, d)
    if label == "allones":
        match cls:
            case AllOnes(k=k, l=l):
                if l <= k:
                    return lambda A: max_allones_rows(A, l) >= k
                return lambda A: max_allones_rows(transpose(A), k) >= l
    if label not in BENCH_LABELS:
        raise BenchConfigError(f"unknown algorithm label {label!r}")
    raise BenchConfigError(f"label {label!r} does not apply to pattern class {cls}")


@dataclass(frozen=True)
class BenchReport:
    """Timing summary for one algorithm label.

    ``measurements`` holds (n, median_seconds, trials) per size in increasing
    order; ``exponent`` is the least-squares slope of log median against
    log n, or None with fewer than two sizes. ``runs`` keeps the raw
    (n, trial, seconds, contains) tuples for CSV emission.
    """

    algo: str
    measurements: tuple
    exponent: float | None
    generator: str
    seed: int
    runs: tuple


def fit_exponent(measurements) -> float | None:
    """Slope of the least-squares line through (log n, log median-seconds)."""
    if len(measurements) < 2:
        return None
    xs = [math.log(n) for n, _, _ in measurements]
    ys = [math.log(max(med, 1e-12)) for _, med, _ in measurements]
    xbar = sum(xs) / len(xs)
    ybar = sum(ys) / len(ys)
    num = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys))
    den = sum((x - xbar) ** 2 for x in xs)
    return num / den


def bench_compare(algos, P: BitMatrix, sizes, density: float, seed: int, trials: int):
    """Time each labeled algorithm on shared generated inputs; fit exponents.

    Per size, ``trials`` matrices are generated with seeds seed, seed+1, ...
    and shared across all labels; each label gets one untimed warm-up on the
    first matrix, then one timed run per matrix. Boolean outcomes at n <= 64
    are cross-checked against the brute-force oracle. Timing excludes
    generation.
    """
    sizes = list(sizes)
    if not sizes or any(n < 1 for n in sizes):
        raise BenchConfigError("sizes must be positive")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise BenchConfigError("sizes must be strictly increasing")
    if trials < 3:
        raise BenchConfigError("need at least 3 trials per size")
    if not algos:
        raise BenchConfigError("need at least one algorithm label")
    if not 0.0 <= density <= 1.0:
        raise BenchConfigError("density must lie in [0, 1]")

    cls = classify_pattern(P)
    runners = [(label, _runner_for(label, P, cls)) for label in algos]
    inputs = {n: [gen_random(n, density, seed + t) for t in range(trials)] for n in sizes}

    reports = []
    for label, runner in runners:
        measurements = []
        runs = []
        for n in sizes:
            mats = inputs[n]
            runner(mats[0])  # warm-up, discarded
            times = []
            for t, A in enumerate(mats):
                t0 = perf_counter()
                res = bool(runner(A))
                dt = perf_counter() - t0
                if n <= 64 and res != contains_naive(A, P):
                    raise RuntimeError(
                        f"{label} disagreed with the oracle at n={n}, trial {t}"
                    )
                times.append(dt)
                runs.append((n, t, dt, res))
            measurements.append((n, statistics.median(times), trials))
        medians = [med for _, med, _ in measurements]
        if any(b < a for a, b in zip(medians, medians[1:])):
            log.warning("median times for %s are not nondecreasing in n: %s", label, medians)
        reports.append(
            BenchReport(
                algo=label,
                measurements=tuple(measurements),
                exponent=fit_exponent(measurements),
                generator=f"random(density={density})",
                seed=seed,
                runs=tuple(runs),
            )
        )
    return reports


def write_bench_csv(reports, path):
    """Emit per-run rows and per-size summary rows.

    Header is ``algo,n,trial,seconds,contains``; summary rows reuse the
    layout with trial=summary, the median in the seconds column, and the
    fitted exponent (empty when undefined) in the last column.
    """
    lines = ["algo,n,trial,seconds,contains"]
    for rep in reports:
        for n, t, dt, res in rep.runs:
            lines.append(f"{rep.algo},{n},{t},{dt:.9f},{'true' if res else 'false'}")
        exp = "" if rep.exponent is None else f"{rep.exponent:.6f}"
        for n, med, _ in rep.measurements:
            lines.append(f"{rep.algo},{n},summary,{med:.9f},{exp}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
