"""Error table for J1(x + 20) at s = 1, c = 0.1, next to the published values.

    python3 scripts/run_j1_benchmark.py [--out j1.csv]
"""
import argparse
import time
import warnings

from phaseless.benchmark import fit_decay_rate, rows_to_csv, run_benchmark

PUBLISHED = {10: 3.7490e-2, 20: 5.9513e-4, 30: 4.0158e-5, 40: 3.8732e-6, 50: 3.8362e-7}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", help="also write the CSV table here")
    ap.add_argument("--fine-factor", type=int, default=8)
    args = ap.parse_args()

    t0 = time.perf_counter()
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        rows = run_benchmark("bessel", tuple(PUBLISHED), fine_factor=args.fine_factor)
    total = time.perf_counter() - t0

    print(f"{'M':>3}  {'error':>10}  {'published':>10}  {'ratio':>6}  {'ms':>7}")
    for r in rows:
        ref = PUBLISHED[r.M]
        print(f"{r.M:>3}  {r.error:10.4e}  {ref:10.4e}  {r.error / ref:6.2f}  {r.runtime_ms:7.1f}")
    slope = fit_decay_rate([r.M for r in rows], [r.error for r in rows])
    print(f"fitted slope of ln(error): {slope:.3f} per unit M "
          f"(bound predicts {rows[0].predicted_rate:.4f}); total {total:.2f} s")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(rows_to_csv(rows))


if __name__ == "__main__":
    main()
