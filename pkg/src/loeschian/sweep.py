"""Sharded sweep of the u - 3d*·v = 1 search over a range of d* = 1 (mod 3)."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Iterator

from .bezout import DEFAULT_BOUND
from .classify import ConjectureStatus, Method, search_conjecture2_fast, verify_conjecture2
from .eisenstein import LoeschianSieve

JOBS_ENV = "LOESCHIAN_JOBS"
CHUNK = 20000
SWEEP_SIEVE = 1 << 25
FAST_V = 2000  # candidates tried from the table before the full-bound search

_worker_state: dict = {}


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def _state(bound: int):
    if "sieve" not in _worker_state:
        sieve = LoeschianSieve(SWEEP_SIEVE)
        vs = [v for v in range(1, FAST_V + 1) if v % 3 and sieve.flags[v]]
        _worker_state.update(sieve=sieve, vs=vs)
    s = _worker_state
    return s["sieve"], [v for v in s["vs"] if v <= bound]


def _run_chunk(args: tuple[int, int, int]) -> list[ConjectureStatus]:
    lo, hi, bound = args
    sieve, vs = _state(bound)
    out = []
    for d_star in range(lo, hi + 1, 3):
        hit = search_conjecture2_fast(d_star, vs, sieve.flags, sieve.limit)
        if hit is not None:
            out.append(ConjectureStatus(d_star, True, hit, Method.DIRECT_SEARCH))
        else:
            out.append(verify_conjecture2(d_star, bound, sieve))
    return out


def _chunks(lo: int, hi: int, bound: int, size: int):
    start = lo + (1 - lo) % 3  # first value = 1 (mod 3)
    while start <= hi:
        end = min(start + size - 3, hi)
        yield start, end, bound
        start += size


def read_checkpoint(path: str | os.PathLike) -> int | None:
    p = Path(path)
    if not p.exists():
        return None
    text = p.read_text().strip()
    return int(text) if text else None


def sweep_conjecture2(
    dstar_min: int,
    dstar_max: int,
    jobs: int = 1,
    bound: int = DEFAULT_BOUND,
    checkpoint: str | os.PathLike | None = None,
    chunk: int = CHUNK,
) -> Iterator[ConjectureStatus]:
    """Statuses for every d* = 1 (mod 3) in [dstar_min, dstar_max], in ascending order.

    With a checkpoint file, the last d* of every finished chunk is recorded
    and a rerun resumes after it.
    """
    if dstar_min < 1 or dstar_max < dstar_min:
        raise ValueError(f"bad range [{dstar_min}, {dstar_max}]")
    if jobs < 1 or bound < 1:
        raise ValueError("jobs and bound must be >= 1")
    chunk = max(3, chunk - chunk % 3)
    if checkpoint is not None:
        done = read_checkpoint(checkpoint)
        if done is not None:
            dstar_min = max(dstar_min, done + 1)
    tasks = list(_chunks(dstar_min, dstar_max, bound, chunk))

    def record(results):
        if checkpoint is not None and results:
            Path(checkpoint).write_text(f"{results[-1].d_star}\n")

    if jobs == 1:
        for t in tasks:
            res = _run_chunk(t)
            yield from res
            record(res)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map preserves submission order, so the merge is ordered by d*
        for res in pool.map(_run_chunk, tasks):
            yield from res
            record(res)
