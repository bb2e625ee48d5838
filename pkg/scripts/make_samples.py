"""Write a magnitude sample file for one of the preset signals.

    python3 scripts/make_samples.py bessel --M 30 > j1_M30.txt
    phaseless reconstruct j1_M30.txt --b 0.3183 --preset bessel
"""
import argparse
import sys

from phaseless.samplefile import format_samples
from phaseless.signals import PRESETS, preset, sample_magnitudes


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("name", choices=PRESETS)
    ap.add_argument("--M", type=int, default=30)
    ap.add_argument("--s", type=float, help="sampling rate (preset default otherwise)")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    p = preset(args.name, args.seed)
    s = p.s if args.s is None else args.s
    sys.stdout.write(format_samples(sample_magnitudes(p.signal, s, args.M), s))


if __name__ == "__main__":
    main()
