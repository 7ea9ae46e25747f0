"""Parameter sweeps over interlacing checks, written as flat CSV.

Grid points are visited in ``(n, alpha, beta, lambda)`` lexicographic order.
With ``workers > 1`` the points are evaluated in a process pool, but
results are collected with an ordered ``map``, so the CSV is byte-identical
to the serial run.
"""
from __future__ import annotations

import csv
import io
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, TextIO

import numpy as np

from . import config
from .errors import RegimeError
from .interlace import InterlacingVerdict, Scenario, run_scenario

__all__ = ["CSV_HEADER", "SweepRecord", "SweepSummary", "parse_range", "grid_points",
           "record_from_verdict", "run_sweep", "write_csv", "to_csv_string"]

CSV_HEADER = ("scenario", "n", "alpha", "beta", "lambda", "full", "breakdown_count",
              "breakdown_lo", "breakdown_hi", "l_n", "r_n", "gamma", "k_n",
              "q_minus", "q_plus", "max_residual")


def parse_range(text: str | None, integer: bool = False) -> list:
    """Values described by ``lo:hi:step`` (inclusive), ``a,b,c`` or a single number.

    ``lo > hi`` gives an empty list.  An omitted step is 1.
    """
    if text is None or text.strip() == "":
        return []
    conv = int if integer else float
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) not in (2, 3):
            raise ValueError(f"range must be lo:hi or lo:hi:step, got {text!r}")
        lo, hi = float(parts[0]), float(parts[1])
        step = float(parts[2]) if len(parts) == 3 else 1.0
        if step <= 0:
            raise ValueError(f"step must be positive in {text!r}")
        if lo > hi:
            return []
        count = int(np.floor((hi - lo) / step + 1e-9)) + 1
        vals = [round(lo + k * step, 12) for k in range(count)]
    else:
        vals = [float(v) for v in text.split(",") if v.strip()]
    if integer:
        if any(v != int(v) for v in vals):
            raise ValueError(f"integer values expected in {text!r}")
        return [int(v) for v in vals]
    return [conv(v) for v in vals]


@dataclass(frozen=True)
class SweepRecord:
    scenario: str
    n: int
    alpha: Optional[float]
    beta: Optional[float]
    lam: Optional[float]
    full: Optional[bool]
    breakdown: tuple
    l_n: Optional[float] = None
    r_n: Optional[float] = None
    gamma: Optional[float] = None
    k_n: Optional[float] = None
    q_minus: Optional[float] = None
    q_plus: Optional[float] = None
    max_residual: Optional[float] = None

    def csv_row(self) -> list[str]:
        def f(v):
            if v is None:
                return ""
            if isinstance(v, bool):
                return "true" if v else "false"
            return repr(float(v)) if not isinstance(v, int) else str(v)
        return [self.scenario, str(self.n), f(self.alpha), f(self.beta), f(self.lam),
                "" if self.full is None else f(self.full),
                "" if self.full is None else str(len(self.breakdown)),
                ";".join(repr(lo) for lo, _ in self.breakdown),
                ";".join(repr(hi) for _, hi in self.breakdown),
                f(self.l_n), f(self.r_n), f(self.gamma), f(self.k_n),
                f(self.q_minus), f(self.q_plus), f(self.max_residual)]


@dataclass(frozen=True)
class SweepSummary:
    points: int
    evaluated: int
    skipped: int
    full: int
    degenerate: int

    @property
    def full_fraction(self) -> float:
        decided = self.evaluated - self.degenerate
        return self.full / decided if decided else float("nan")

    def line(self, scenario: str) -> str:
        return (f"{scenario}: {self.points} grid points, {self.evaluated} evaluated, "
                f"{self.skipped} out of regime, {self.degenerate} degenerate, "
                f"full-interlacing fraction {self.full_fraction:.4f}")


def grid_points(scenario, ns: Sequence[int], alphas: Sequence[float] = (),
                betas: Sequence[float] = (), lams: Sequence[float] = ()) -> list[tuple]:
    sc = Scenario(scenario)
    if sc.family == "ultraspherical":
        return [(n, None, None, lam) for n, lam in itertools.product(sorted(ns), sorted(lams))]
    return [(n, a, b, None)
            for n, a, b in itertools.product(sorted(ns), sorted(alphas), sorted(betas))]


def record_from_verdict(v: InterlacingVerdict, n, alpha, beta, lam) -> SweepRecord:
    c = v.critical
    q = c.q if c else None
    return SweepRecord(
        v.scenario.value, n, alpha, beta, lam, v.full,
        tuple((iv.lo, iv.hi) for iv in v.breakdown_intervals),
        c.l_n if c else None, c.r_n if c else None, c.gamma if c else None,
        c.k_n if c else None, q.q_minus if q else None, q.q_plus if q else None,
        v.stats.get("max_residual"))


def _evaluate(args) -> Optional[SweepRecord]:
    scenario, n, alpha, beta, lam = args
    try:
        v = run_scenario(scenario, n, alpha, beta, lam)
    except RegimeError:
        return None
    return record_from_verdict(v, n, alpha, beta, lam)


def _init_worker(settings: config.Settings):
    config.set_settings(**{f: getattr(settings, f) for f in settings.__dataclass_fields__})


def run_sweep(scenario, ns: Sequence[int], alphas: Sequence[float] = (),
              betas: Sequence[float] = (), lams: Sequence[float] = (),
              workers: int = 1) -> tuple[list[SweepRecord], SweepSummary]:
    """Evaluate ``scenario`` at every grid point.

    Out-of-regime points are skipped and counted in the summary.
    """
    sc = Scenario(scenario)
    pts = grid_points(sc, ns, alphas, betas, lams)
    jobs = [(sc.value, *p) for p in pts]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers, initializer=_init_worker,
                                 initargs=(config.get_settings(),)) as ex:
            results = list(ex.map(_evaluate, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        results = [_evaluate(j) for j in jobs]
    records = [r for r in results if r is not None]
    summary = SweepSummary(
        points=len(jobs), evaluated=len(records), skipped=len(jobs) - len(records),
        full=sum(r.full is True for r in records),
        degenerate=sum(r.full is None for r in records))
    return records, summary


def write_csv(records: Iterable[SweepRecord], out: TextIO) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        w.writerow(r.csv_row())


def to_csv_string(records: Iterable[SweepRecord]) -> str:
    buf = io.StringIO()
    write_csv(records, buf)
    return buf.getvalue()
