"""Acceptance suite: one check per headline criterion, each printing a PASS/FAIL line.

Run under pytest (lines are collected into the terminal summary) or directly:

    python3 tests/test_acceptance.py
"""
import math
import sys
import time
import warnings
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).parent))

import reference_pipeline as ref  # noqa: E402
from conftest import J1_PUBLISHED  # noqa: E402
from phaseless.approx import BandlimitedSampleSet, BoundInputs, sinc_gauss_interpolate, thm3_bound  # noqa: E402
from phaseless.benchmark import fit_decay_rate  # noqa: E402
from phaseless.cli import counterexample_report  # noqa: E402
from phaseless.kernels import _tabulate, eval_G, eval_G_deriv, tabulate_G_star  # noqa: E402
from phaseless.pipeline import (  # noqa: E402
    ErrorDomain,
    ReconstructionConfig,
    reconstruct,
    step2_lift_deriv,
    step3_phase_increments,
    step4_accumulate,
    step5_resynthesize,
    worst_case_error,
)
from phaseless.signals import bessel_j1_shifted, multitone_preset, sample_magnitudes  # noqa: E402

RESULTS = []


def report(name, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'}  {name}: {detail}"
    print(line)
    RESULTS.append(line)
    assert ok, line


def quiet(cfg, mags, **kw):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return reconstruct(cfg, mags, **kw)


def j1_benchmark_errors():
    sig = bessel_j1_shifted(20.0)
    errs, diags = {}, {}
    for M in J1_PUBLISHED:
        cfg = ReconstructionConfig(M=M, s=1.0, b=sig.b, c=0.1)
        res = quiet(cfg, sample_magnitudes(sig, 1.0, M))
        errs[M], _ = worst_case_error(res, sig, ErrorDomain.benchmark(M))
        diags[M] = res.diagnostics
    return errs, diags


def test_j1_benchmark_table():
    _tabulate.cache_clear()
    t0 = time.perf_counter()
    errs, _ = j1_benchmark_errors()
    elapsed = time.perf_counter() - t0
    ratios = {M: errs[M] / J1_PUBLISHED[M] for M in J1_PUBLISHED}
    ok = all(0.1 <= r <= 10 for r in ratios.values()) and elapsed < 60
    detail = ", ".join(f"M={M} {errs[M]:.3e} (x{ratios[M]:.2f})" for M in J1_PUBLISHED)
    report("J1 benchmark table", ok, f"{detail}; {elapsed:.2f} s")


def test_exponential_decay():
    errs, diags = j1_benchmark_errors()
    Ms = list(errs)
    slope = fit_decay_rate(Ms, [errs[M] for M in Ms])
    rate = diags[Ms[0]]["predicted_rate"]
    offset = diags[Ms[0]]["predicted_offset"]
    # smallest constant C with err(M) <= C exp(-rate M + offset) for every M
    C = max(errs[M] / math.exp(-rate * M + offset) for M in Ms)
    ok = slope <= -0.2 and slope <= -rate and np.isfinite(C)
    report("exponential decay", ok, f"slope {slope:.3f} per M, predicted rate {rate:.4f}, fitted constant {C:.3g}")


def test_small_instance_oracle_equivalence():
    worst_arr, worst_ref = 0.0, 0.0
    for seed in range(5):
        sig = multitone_preset(seed)
        for M in (8, 12):
            cfg = ReconstructionConfig(M=M, b=sig.b, c=0.1, fine_factor=4)
            mags = sample_magnitudes(sig, 1.0, M)
            fast = step2_lift_deriv(cfg, mags)
            slow = step2_lift_deriv(cfg, mags, method="direct")
            track = step4_accumulate(step3_phase_increments(cfg, fast))
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                f_fast = step5_resynthesize(cfg, fast, track).values
                f_slow = step5_resynthesize(cfg, fast, track, method="direct").values
            for x, y in ((fast.g, slow.g), (fast.gprime, slow.gprime), (f_fast, f_slow)):
                worst_arr = max(worst_arr, np.max(np.abs(x - y)) / np.max(np.abs(y)))
            z, f_ref = ref.reconstruct(mags.a, M, 0.1, 4)
            res = quiet(cfg, mags)
            assert np.allclose(res.grid, z)
            worst_ref = max(worst_ref, np.max(np.abs(res.values - f_ref.real)))
    ok = worst_arr <= 1e-10 and worst_ref <= 1e-9
    report("small-instance oracle", ok, f"FFT vs direct {worst_arr:.2e} rel, vs reference pipeline {worst_ref:.2e}")


def fd(z, M, h=1e-6):
    return (eval_G(z + h, M) - eval_G(z - h, M)) / (2 * h)


def trapezoid_g_star(m, M, h=1e-3):
    t = np.linspace(m - M, m, int(round(M / h)) + 1)
    y = np.real(eval_G(t, M))
    return (y.sum() - 0.5 * (y[0] + y[-1])) * h / M


def test_kernel_suite():
    rng = np.random.default_rng(7)
    ident = True
    for M in (2, 8, 33):
        k = np.arange(-4 * M, 4 * M + 1)
        v = eval_G(k, M)
        ident &= bool(v[k == 0] == 1) and bool(np.all(v[k != 0] == 0))
    z = rng.uniform(-30, 30, 1000) + 1j * rng.uniform(-1, 1, 1000)
    d = eval_G_deriv(z, 16)
    fd_err = float(np.max(np.abs(d - fd(z, 16)) / (np.abs(d) + np.abs(eval_G(z, 16)))))
    gs_err = 0.0
    for M in (4, 8, 16):
        t = tabulate_G_star(M)
        gs_err = max(gs_err, max(abs(t[m] - trapezoid_g_star(m, M)) for m in t.arguments))
    ok = ident and fd_err <= 1e-6 and gs_err <= 1e-6
    report("kernel suite", ok, f"integer identities {'exact' if ident else 'broken'}, "
           f"G' vs FD {fd_err:.1e} rel, G* vs trapezoid {gs_err:.1e}")


def test_interpolation_operator():
    f = lambda x: np.sin(np.pi * np.asarray(x) / 4)
    rng = np.random.default_rng(11)
    errs, C = [], 0.0
    for M in (10, 20, 40):
        sset = BandlimitedSampleSet.from_function(f, 1.0, 0.25, M)
        z = rng.uniform(-M / 2, M / 2, 50)
        err = float(np.max(np.abs(sinc_gauss_interpolate(sset, z) - f(z))))
        errs.append(err)
        C = max(C, err / thm3_bound(BoundInputs(M=M, b=0.25, s=1.0, d=0.5)))
    decays = errs[0] > errs[1] > errs[2]
    ok = decays and C <= 100
    detail = ", ".join(f"M={M} {e:.2e}" for M, e in zip((10, 20, 40), errs))
    report("interpolation operator", ok, f"{detail}; fitted C1 {C:.3g}")


def test_counterexample():
    rep = counterexample_report()
    ok = rep["magnitude_discrepancy"] <= 1e-12 and rep["function_gap"] >= 0.9
    report("counterexample", ok,
           f"magnitude discrepancy {rep['magnitude_discrepancy']:.1e}, sup gap {rep['function_gap']:.4f}")


def test_sign_ambiguity():
    M = 30
    identical, resolved = True, 0
    for seed in range(100, 120):
        sig = multitone_preset(seed)
        cfg = ReconstructionConfig(M=M, b=sig.b, c=0.04)
        r_pos = quiet(cfg, sample_magnitudes(sig, 1.0, M))
        r_neg = quiet(cfg, sample_magnitudes(sig.negated(), 1.0, M))
        identical &= bool(np.array_equal(r_pos.values, r_neg.values))
        for truth in (sig, sig.negated()):
            _, eta = worst_case_error(r_pos, truth, ErrorDomain.benchmark(M))
            x = r_pos.grid[np.abs(r_pos.grid) <= M // 2 - 1]
            fm = np.interp(x, r_pos.grid, r_pos.values)
            resolved += int(np.dot(eta * fm, truth(x)) > 0)
    ok = identical and resolved == 40
    report("sign ambiguity", ok, f"f / -f reconstructions {'bit-identical' if identical else 'differ'}, "
           f"eta resolved {resolved}/40")


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
