"""Batch verification: range scans and the powers-of-3 sweep.

Work is split into contiguous chunks handed to a process pool; results are
merged back in ascending range order, so the summary (and the progress
stream) is byte-identical no matter how many workers run.  Per-n results are
pure functions of n and the budget, hence reproducible one n at a time.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import repeat
from typing import IO, NamedTuple

from .accelerated import accelerated_trace, cross_check
from .errors import DEFAULT_BUDGET, BudgetExhaustedError

DEFAULT_CHUNK_SIZE = 1024


@dataclass(frozen=True)
class ScanSummary:
    """Aggregate of cross-checking every n in [lo, hi).

    verified + undecided equals the number of integers scanned; max_i_min
    and max_cardinality carry (n, value) with the smallest achieving n, and
    histogram maps i_min to how many verified n hit it.
    """

    lo: int
    hi: int
    verified: int
    undecided: int
    max_i_min: tuple[int, int] | None
    max_cardinality: tuple[int, int] | None
    histogram: dict[int, int]


@dataclass(frozen=True)
class _ChunkResult:
    lo: int
    hi: int
    verified: int
    undecided: int
    max_i_min: tuple[int, int] | None
    max_cardinality: tuple[int, int] | None
    histogram: dict[int, int]


def _scan_chunk(lo: int, hi: int, budget: int) -> _ChunkResult:
    verified = 0
    undecided = 0
    hist: dict[int, int] = {}
    max_i_min = None
    max_card = None
    for n in range(lo, hi):
        try:
            res = cross_check(n, budget)
        except BudgetExhaustedError:
            undecided += 1
            continue
        if not res.ok:
            raise RuntimeError(f"cross-check failed at n={n}: {res.violations}")
        verified += 1
        hist[res.i_min] = hist.get(res.i_min, 0) + 1
        if max_i_min is None or res.i_min > max_i_min[1]:
            max_i_min = (n, res.i_min)
        if max_card is None or res.cardinality > max_card[1]:
            max_card = (n, res.cardinality)
    return _ChunkResult(lo, hi, verified, undecided, max_i_min, max_card, hist)


def scan_range(lo: int, hi: int, budget: int = DEFAULT_BUDGET, workers: int = 1,
               chunk_size: int = DEFAULT_CHUNK_SIZE, resume_from: int | None = None,
               progress: IO[str] | None = None) -> ScanSummary:
    """Cross-check every n in [lo, hi) against the brute-force oracle.

    resume_from skips everything below it (for restarting an interrupted
    scan).  When progress is given, one line per finished chunk is written
    and flushed:  CHUNK <lo> <hi> ok=<count> undecided=<count>.
    Chunk boundaries depend only on the range, never on the worker count.
    """
    if lo < 1 or hi <= lo:
        raise ValueError(f"need 1 <= lo < hi, got [{lo}, {hi})")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    if chunk_size < 1:
        raise ValueError(f"chunk_size must be >= 1, got {chunk_size}")
    start = lo if resume_from is None else min(max(lo, resume_from), hi)
    chunks = [(a, min(a + chunk_size, hi)) for a in range(start, hi, chunk_size)]

    if workers == 1 or len(chunks) <= 1:
        results = (_scan_chunk(a, b, budget) for a, b in chunks)
        return _merge(start, hi, results, progress)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = pool.map(_scan_chunk, (a for a, _ in chunks),
                           (b for _, b in chunks), repeat(budget))
        return _merge(start, hi, results, progress)


def _merge(lo: int, hi: int, results, progress: IO[str] | None) -> ScanSummary:
    verified = 0
    undecided = 0
    hist: dict[int, int] = {}
    max_i_min = None
    max_card = None
    for chunk in results:
        verified += chunk.verified
        undecided += chunk.undecided
        for key, count in chunk.histogram.items():
            hist[key] = hist.get(key, 0) + count
        if chunk.max_i_min is not None and (max_i_min is None or chunk.max_i_min[1] > max_i_min[1]):
            max_i_min = chunk.max_i_min
        if chunk.max_cardinality is not None and (max_card is None or chunk.max_cardinality[1] > max_card[1]):
            max_card = chunk.max_cardinality
        if progress is not None:
            progress.write(f"CHUNK {chunk.lo} {chunk.hi} ok={chunk.verified} undecided={chunk.undecided}\n")
            progress.flush()
    return ScanSummary(lo=lo, hi=hi, verified=verified, undecided=undecided,
                       max_i_min=max_i_min, max_cardinality=max_card, histogram=hist)


class Pow3Result(NamedTuple):
    exponent: int
    i_min: int | None
    cardinality: int | None
    terminated: bool


def powers_of_three(max_exp: int, budget: int = DEFAULT_BUDGET) -> list[Pow3Result]:
    """Run the odd-part trace on 3**e for e = 1..max_exp.

    Each trace is cross-checked against the brute-force oracle and must end
    at the (4, 1) fixed point.  Budget exhaustion yields a row with
    terminated=False and no numbers, never an exception.
    """
    if max_exp < 1:
        raise ValueError(f"max_exp must be >= 1, got {max_exp}")
    out = []
    for e in range(1, max_exp + 1):
        n = 3 ** e
        try:
            trace = accelerated_trace(n, budget)
            res = cross_check(n, budget)
        except BudgetExhaustedError:
            out.append(Pow3Result(e, None, None, False))
            continue
        last = trace.rows[-1]
        if not (trace.terminated and last.x == 4 and last.y == 1):
            raise RuntimeError(f"trace of 3**{e} stopped away from the fixed point")
        if not res.ok:
            raise RuntimeError(f"cross-check failed at 3**{e}: {res.violations}")
        out.append(Pow3Result(e, res.i_min, res.cardinality, True))
    return out
