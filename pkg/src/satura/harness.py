"""Trial batches and result tables over the randomized counter.

Every trial draws its own seed via split_seed, so a batch is bit-exact
reproducible from (problem, i, prime, N, master seed) no matter how
many workers run it.  Failures never abort a batch: degenerate draws,
unit ideals, timeouts and crashes each land in their own histogram
bucket and the conservation law sum(buckets) == N holds.
"""

import csv
import io
import json
import os
import signal
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass, field as dfield
from typing import Optional

from .arith import prime_field
from .groebner import NotZeroDimensional, buchberger
from .hilbert import affine_hilbert_function
from .saturate import build_saturated_system, compute_gi, draw_parameters, split_seed

SCHEMA_VERSION = 1

# known counts per (problem, i); trials measure agreement with these
REFERENCE_VALUES = {
    "alt": {7: 7, 6: 43, 5: 234, 4: 1108, 3: 3832, 2: 8716, 1: 10858, 0: 8652},
    "monomial-example": {1: 5, 0: 6},
    "conics-affine": {0: 18},
}


def default_threads() -> int:
    env = os.environ.get("SATURA_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


class _TrialTimeout(Exception):
    pass


@contextmanager
def _alarm(seconds):
    """SIGALRM-based per-trial wall clock cap; no-op when seconds is falsy."""
    if not seconds:
        yield
        return

    def handler(signum, frame):
        raise _TrialTimeout

    old = signal.signal(signal.SIGALRM, handler)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def _run_one(payload):
    """One trial, exception-proof; runs in a worker process or inline."""
    inst, i, p, seed, timeout_s = payload
    start = time.perf_counter()
    try:
        with _alarm(timeout_s):
            res = compute_gi(inst, i, prime_field(p), seed)
        kind = "unit" if res.unit else "value"
        return {"kind": kind, "value": res.value,
                "elapsed": time.perf_counter() - start}
    except _TrialTimeout:
        return {"kind": "timeout", "value": None,
                "elapsed": time.perf_counter() - start}
    except NotZeroDimensional:
        return {"kind": "degenerate", "value": None,
                "elapsed": time.perf_counter() - start}
    except Exception as exc:  # crash bucket; batch must survive
        return {"kind": "error", "value": None, "message": str(exc),
                "elapsed": time.perf_counter() - start}


@dataclass(frozen=True)
class TrialReport:
    problem: str
    i: int
    prime: int
    trials: int
    seed: int
    reference: Optional[int]
    reference_source: str      # "table" | "modal" | "explicit"
    successes: int
    histogram: dict            # bucket -> count
    wall_time: float
    time_stats: dict           # min/max/mean/median over per-trial seconds

    @property
    def success_fraction(self) -> float:
        return self.successes / self.trials if self.trials else 0.0

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "trials",
            "problem": self.problem, "i": self.i, "prime": self.prime,
            "trials": self.trials, "seed": self.seed,
            "reference": self.reference,
            "reference_source": self.reference_source,
            "successes": self.successes,
            "success_fraction": self.success_fraction,
            "histogram": dict(sorted(self.histogram.items())),
            "wall_time": self.wall_time,
            "time_stats": self.time_stats,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["field", "value"])
        d = self.to_dict()
        for key in ("schema_version", "kind", "problem", "i", "prime", "trials",
                    "seed", "reference", "reference_source", "successes",
                    "success_fraction", "wall_time"):
            w.writerow([key, d[key]])
        for bucket, count in d["histogram"].items():
            w.writerow([f"histogram:{bucket}", count])
        for key, v in d["time_stats"].items():
            w.writerow([f"time_stats:{key}", v])
        return buf.getvalue()


def _summary(times) -> dict:
    if not times:
        return {}
    return {
        "min": min(times), "max": max(times),
        "mean": statistics.fmean(times), "median": statistics.median(times),
    }


def _default_timeout(i: int) -> Optional[float]:
    # small i cells are long-running extended targets; leave them uncapped
    return 60.0 if i >= 5 else None


def run_trials(problem, i: int, p: int, trials: int, seed: int,
               threads: Optional[int] = None, reference: Optional[int] = None,
               timeout_s="auto") -> TrialReport:
    """N independent compute_gi draws; success = agreeing with the
    reference value (built-in table, else the batch's modal value)."""
    if trials < 0:
        raise ValueError("trials must be non-negative")
    if timeout_s == "auto":
        timeout_s = _default_timeout(i)
    threads = threads or default_threads()
    payloads = [(problem, i, p, split_seed(seed, t), timeout_s)
                for t in range(trials)]
    start = time.perf_counter()
    if threads == 1 or trials <= 1:
        outcomes = [_run_one(pl) for pl in payloads]
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(_run_one, payloads, chunksize=1))
    wall = time.perf_counter() - start

    histogram = {}
    times = []
    for out in outcomes:
        bucket = str(out["value"]) if out["kind"] == "value" else out["kind"]
        histogram[bucket] = histogram.get(bucket, 0) + 1
        times.append(out["elapsed"])

    source = "explicit"
    if reference is None:
        reference = REFERENCE_VALUES.get(getattr(problem, "name", None), {}).get(i)
        source = "table"
    if reference is None:
        source = "modal"
        value_buckets = {int(k): v for k, v in histogram.items() if k.isdigit()}
        if value_buckets:
            reference = max(sorted(value_buckets), key=lambda k: value_buckets[k])
    successes = histogram.get(str(reference), 0) if reference is not None else 0
    return TrialReport(getattr(problem, "name", str(problem)), i, p, trials,
                       seed, reference, source, successes, histogram, wall,
                       _summary(times))


@dataclass(frozen=True)
class CellTable:
    """gi_table / hilbert_table share this shape: one record per cell."""

    kind: str
    problem: str
    seed: Optional[int]
    cells: tuple

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": self.kind,
            "problem": self.problem,
            "seed": self.seed,
            "cells": list(self.cells),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf)
        keys = sorted({k for c in self.cells for k in c})
        w.writerow(keys)
        for c in self.cells:
            w.writerow([c.get(k, "") for k in keys])
        return buf.getvalue()

    @property
    def failures(self) -> int:
        return sum(1 for c in self.cells if c.get("value") == "-")

    def value(self, **match):
        for c in self.cells:
            if all(c.get(k) == v for k, v in match.items()):
                return c.get("value")
        return None


def _load_checkpoint(path) -> dict:
    if path and os.path.exists(path):
        with open(path) as fh:
            return {tuple(k.split("|")): v for k, v in json.load(fh).items()}
    return {}


def _save_checkpoint(path, done: dict) -> None:
    if not path:
        return
    tmp = f"{path}.tmp"
    with open(tmp, "w") as fh:
        json.dump({"|".join(k): v for k, v in done.items()}, fh)
    os.replace(tmp, path)


def gi_table(problem, i_list, prime_list, seed: int, timeout_s="auto",
             checkpoint: Optional[str] = None) -> CellTable:
    """One randomized g_i per (i, p) cell; long sweeps are resumable.

    A timed-out cell records value "-", matching the usual convention
    for runs that failed to finish.
    """
    done = _load_checkpoint(checkpoint)
    cells = []
    for i in i_list:
        for p in prime_list:
            key = (str(i), str(p))
            if key in done:
                cells.append(done[key])
                continue
            cell_seed = split_seed(split_seed(seed, i), p)
            cap = _default_timeout(i) if timeout_s == "auto" else timeout_s
            out = _run_one((problem, i, p, cell_seed, cap))
            cell = {"i": i, "prime": p, "seed": cell_seed,
                    "elapsed": round(out["elapsed"], 3)}
            if out["kind"] == "value":
                cell["value"] = out["value"]
            elif out["kind"] == "unit":
                cell["value"] = out["value"]
                cell["unit"] = True
            else:
                cell["value"] = "-"
                cell["outcome"] = out["kind"]
            done[key] = cell
            _save_checkpoint(checkpoint, done)
            cells.append(cell)
    return CellTable("gi_table", getattr(problem, "name", str(problem)),
                     seed, tuple(cells))


def hilbert_table(problem, i_list, p: int, d_max: int, seed: int,
                  timeout_s="auto") -> CellTable:
    """Affine Hilbert function rows, one per i, at a single prime."""
    cells = []
    for i in i_list:
        cell_seed = split_seed(split_seed(seed, i), p)
        cap = _default_timeout(i) if timeout_s == "auto" else timeout_s
        start = time.perf_counter()
        try:
            with _alarm(cap):
                params = draw_parameters(i, problem.n, problem.r,
                                         prime_field(p), cell_seed)
                basis = buchberger(build_saturated_system(problem, params).generators)
                prof = affine_hilbert_function(basis, d_max)
            cell = {"i": i, "prime": p, "seed": cell_seed,
                    "value": list(prof.row()),
                    "stabilized_at": prof.stabilized_at,
                    "stable_value": prof.stable_value,
                    "elapsed": round(time.perf_counter() - start, 3)}
        except _TrialTimeout:
            cell = {"i": i, "prime": p, "seed": cell_seed, "value": "-",
                    "outcome": "timeout",
                    "elapsed": round(time.perf_counter() - start, 3)}
        except Exception as exc:
            cell = {"i": i, "prime": p, "seed": cell_seed, "value": "-",
                    "outcome": "error", "message": str(exc),
                    "elapsed": round(time.perf_counter() - start, 3)}
        cells.append(cell)
    return CellTable("hilbert_table", getattr(problem, "name", str(problem)),
                     seed, tuple(cells))
