"""Error tables over a range of M for the preset test signals."""
from __future__ import annotations

import csv
import io
import math
import time
from dataclasses import dataclass

import numpy as np

from .errors import PhaselessError
from .pipeline import ErrorDomain, ReconstructionConfig, reconstruct, worst_case_error
from .signals import preset, sample_magnitudes

DEFAULT_MS = (10, 20, 30, 40, 50)


@dataclass
class BenchmarkRow:
    M: int
    error: float | None
    predicted_rate: float | None
    runtime_ms: float
    eta: int | None = None
    failure: str | None = None


def run_benchmark(name, Ms=DEFAULT_MS, *, s=None, c=None, fine_factor=8, quad_tol=1e-12, seed=0):
    """Reconstruct the preset signal for each M and measure the error over I_{1/2,M+1}.

    A pipeline error marks its row as failed; the remaining rows still run.
    """
    p = preset(name, seed)
    s = p.s if s is None else s
    c = p.c if c is None else c
    rows = []
    for M in sorted(Ms):
        t0 = time.perf_counter()
        try:
            cfg = ReconstructionConfig(M=M, s=s, b=p.signal.b, c=c, fine_factor=fine_factor, quad_tol=quad_tol)
            res = reconstruct(cfg, sample_magnitudes(p.signal, s, M))
            err, eta = worst_case_error(res, p.signal, ErrorDomain.benchmark(M))
            rows.append(BenchmarkRow(M, err, res.diagnostics.get("predicted_rate"),
                                     1e3 * (time.perf_counter() - t0), eta))
        except PhaselessError as exc:
            rows.append(BenchmarkRow(M, None, None, 1e3 * (time.perf_counter() - t0),
                                     failure=type(exc).__name__))
    return rows


def fit_decay_rate(Ms, errors):
    """Least-squares slope of ln(error) against M."""
    Ms = np.asarray(Ms, dtype=float)
    logs = np.log(np.asarray(errors, dtype=float))
    slope, _ = np.polyfit(Ms, logs, 1)
    return float(slope)


def rows_to_csv(rows, timing=True):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["M", "error", "predicted_rate", "runtime_ms"])
    for r in rows:
        err = "FAILED" if r.error is None else f"{r.error:.6e}"
        rate = "" if r.predicted_rate is None else f"{r.predicted_rate:.6f}"
        ms = f"{r.runtime_ms:.1f}" if timing else ""
        w.writerow([r.M, err, rate, ms])
    return buf.getvalue()


def format_table(rows):
    lines = [f"{'M':>4}  {'error':>12}  {'pred. rate':>10}"]
    for r in rows:
        err = r.failure or ("nan" if r.error is None or math.isnan(r.error) else f"{r.error:.4e}")
        rate = "" if r.predicted_rate is None else f"{r.predicted_rate:.4f}"
        lines.append(f"{r.M:>4}  {err:>12}  {rate:>10}")
    return "\n".join(lines)
