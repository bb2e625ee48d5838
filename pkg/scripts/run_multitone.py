"""Multitone stand-in for the audio experiment: error vs M over several seeds.

    python3 scripts/run_multitone.py --seeds 0-9
"""
import argparse
import warnings

import numpy as np

from phaseless.benchmark import DEFAULT_MS, fit_decay_rate, run_benchmark


def seed_range(text):
    lo, _, hi = text.partition("-")
    return range(int(lo), int(hi or lo) + 1)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=seed_range, default=seed_range("0-4"))
    ap.add_argument("--c", type=float, default=None, help="line offset (preset default 0.04)")
    args = ap.parse_args()

    print("seed  " + "  ".join(f"M={M:<8}" for M in DEFAULT_MS) + "  slope")
    table = []
    for seed in args.seeds:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            rows = run_benchmark("multitone", DEFAULT_MS, seed=seed, c=args.c)
        errs = [np.nan if r.error is None else r.error for r in rows]
        table.append(errs)
        slope = fit_decay_rate(DEFAULT_MS, errs) if np.all(np.isfinite(errs)) else np.nan
        print(f"{seed:>4}  " + "  ".join(f"{e:10.3e}" for e in errs) + f"  {slope:6.3f}")
    med = np.nanmedian(np.array(table), axis=0)
    print("median " + "  ".join(f"{e:10.3e}" for e in med))


if __name__ == "__main__":
    main()
