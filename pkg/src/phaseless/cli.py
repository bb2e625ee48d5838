"""Command-line front end.

    phaseless reconstruct SAMPLES [--b B] [--c C] [--out result.json]
    phaseless benchmark --preset bessel [--M 10,20,30,40,50] [--out table.csv]
    phaseless demo-counterexample [--format json]
    phaseless tabulate-kernel --M 8 [--quad-tol 1e-12] --out gstar_M8.txt

Exit codes: 0 success, 2 parse error, 3 NearZeroOnLine,
4 QuadratureNonConvergence, 5 invalid rate or configuration.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from . import benchmark as bench
from .errors import InvalidRate, ParseError, PhaselessError
from .kernels import tabulate_G_star
from .pipeline import ReconstructionConfig, reconstruct
from .samplefile import read_samples
from .signals import PRESETS, counterexample_pair, preset

COMMANDS = ("reconstruct", "benchmark", "demo-counterexample", "tabulate-kernel")

COUNTEREXAMPLE_SCHEMA = {
    "type": "object",
    "required": ["signals", "s", "threshold_2b", "magnitude_discrepancy", "function_gap", "range"],
    "properties": {
        "signals": {"type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 2},
        "s": {"type": "number"},
        "threshold_2b": {"type": "number"},
        "magnitude_discrepancy": {"type": "number", "minimum": 0},
        "function_gap": {"type": "number", "minimum": 0},
        "range": {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2},
    },
    "additionalProperties": False,
}


@dataclass
class RunManifest:
    command: str
    config: dict = field(default_factory=dict)
    input_path: Path | None = None
    output_path: Path | None = None
    signal_preset: str | None = None
    seed: int = 0
    Ms: tuple = bench.DEFAULT_MS
    fmt: str = "text"

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InvalidRate(f"unknown command {self.command!r}")
        if self.command == "benchmark" and self.signal_preset is None:
            raise InvalidRate("benchmark requires --preset")
        if self.command == "reconstruct" and self.input_path is None:
            raise InvalidRate("reconstruct requires an input file")


def _emit(text, path):
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _dumps(obj):
    return json.dumps(obj, indent=1, sort_keys=True) + "\n"


def cmd_reconstruct(man):
    mags, s = read_samples(man.input_path)
    cfg_kw = dict(man.config)
    for key, have in (("M", mags.M), ("s", s)):
        want = cfg_kw.pop(key, None)
        if want is not None and want != have:
            raise InvalidRate(f"--{key}={want} disagrees with the sample file ({key}={have})")
    cfg = ReconstructionConfig(M=mags.M, s=s, **cfg_kw)
    reference = preset(man.signal_preset, man.seed).signal if man.signal_preset else None
    res = reconstruct(cfg, mags, reference=reference)
    out = {
        "config": asdict(cfg),
        "grid": res.grid.tolist(),
        "values": res.values.tolist(),
        "sign_resolved": res.sign_resolved,
        "eta_hint": res.eta_hint,
        "diagnostics": res.diagnostics,
    }
    _emit(_dumps(out), man.output_path)
    return 0


def cmd_benchmark(man):
    kw = {k: man.config[k] for k in ("s", "c", "fine_factor", "quad_tol") if k in man.config}
    rows = bench.run_benchmark(man.signal_preset, man.Ms, seed=man.seed, **kw)
    if man.fmt == "json":
        text = _dumps([asdict(r) for r in rows])
    else:
        text = bench.rows_to_csv(rows, timing=man.config.get("timing", True))
    _emit(text, man.output_path)
    return 0


def counterexample_report(lo=-10.0, hi=10.0, n_dense=20001):
    f1, f2 = counterexample_pair()
    half = np.arange(-200, 201) / 2.0  # every half-integer in [-100, 100]
    x = np.linspace(lo, hi, n_dense)
    return {
        "signals": [f1.description, f2.description],
        "s": 2.0,
        "threshold_2b": 2.0 * f1.b,
        "magnitude_discrepancy": float(np.max(np.abs(np.abs(f1(half)) - np.abs(f2(half))))),
        "function_gap": float(np.max(np.abs(f1(x) - f2(x)))),
        "range": [lo, hi],
    }


def cmd_demo_counterexample(man):
    rep = counterexample_report()
    if man.fmt == "json":
        text = _dumps(rep)
    else:
        text = (
            f"f1 = {rep['signals'][0]}, f2 = {rep['signals'][1]}\n"
            f"sampling rate s = {rep['s']:g}, threshold 2b = {rep['threshold_2b']:g}\n"
            f"max ||f1(k/2)| - |f2(k/2)||, |k| <= 200: {rep['magnitude_discrepancy']:.3e}\n"
            f"sup |f1 - f2| on [{rep['range'][0]:g}, {rep['range'][1]:g}]: {rep['function_gap']:.6f}\n"
            "equal magnitudes at rate 2b do not determine the signal up to sign\n"
        )
    _emit(text, man.output_path)
    return 0


def cmd_tabulate_kernel(man):
    M = man.config.get("M")
    if M is None:
        raise InvalidRate("tabulate-kernel requires --M")
    table = tabulate_G_star(int(M), man.config.get("quad_tol", 1e-12))
    _emit(table.to_text(), man.output_path)
    return 0


HANDLERS = {
    "reconstruct": cmd_reconstruct,
    "benchmark": cmd_benchmark,
    "demo-counterexample": cmd_demo_counterexample,
    "tabulate-kernel": cmd_tabulate_kernel,
}


def _int_list(text):
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser():
    parser = argparse.ArgumentParser(prog="phaseless", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--s", type=float, help="sampling rate")
        p.add_argument("--b", type=float, help="bandwidth (type / pi)")
        p.add_argument("--c", type=float, help="imaginary offset of the unwrapping line")
        p.add_argument("--fine-factor", type=int, help="output points per sample spacing")
        p.add_argument("--quad-tol", type=float, help="absolute tolerance for the G* table")
        p.add_argument("--preset", choices=PRESETS)
        p.add_argument("--seed", type=int, default=0, help="seed for the multitone preset")
        p.add_argument("--out", type=Path, help="output file (default stdout)")
        p.add_argument("--format", choices=("text", "csv", "json"), default="text")

    p = sub.add_parser("reconstruct", help="reconstruct f from a magnitude sample file")
    p.add_argument("input", type=Path)
    p.add_argument("--M", type=int)
    common(p)
    p = sub.add_parser("benchmark", help="error table over M for a preset signal")
    p.add_argument("--M", type=_int_list, default=bench.DEFAULT_MS, help="comma-separated list")
    p.add_argument("--no-timing", action="store_true", help="leave runtime_ms empty")
    common(p)
    p = sub.add_parser("demo-counterexample", help="two signals with equal magnitudes at rate 2b")
    common(p)
    p = sub.add_parser("tabulate-kernel", help="write the G* lookup table")
    p.add_argument("--M", type=int)
    common(p)
    return parser


def manifest_from_args(args):
    config = {}
    for key in ("s", "b", "c", "fine_factor", "quad_tol"):
        val = getattr(args, key, None)
        if val is not None:
            config[key] = val
    Ms = bench.DEFAULT_MS
    if args.command == "benchmark":
        Ms = args.M
        config["timing"] = not args.no_timing
    elif getattr(args, "M", None) is not None:
        config["M"] = args.M
    return RunManifest(
        command=args.command,
        config=config,
        input_path=getattr(args, "input", None),
        output_path=args.out,
        signal_preset=args.preset,
        seed=args.seed,
        Ms=Ms,
        fmt=args.format,
    )


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        man = manifest_from_args(args)
        return HANDLERS[man.command](man)
    except PhaselessError as exc:
        err = {"error": type(exc).__name__, "exit_code": exc.exit_code, "message": str(exc)}
        sys.stderr.write(json.dumps(err) + "\n")
        return exc.exit_code
    except (OSError, ValueError) as exc:
        code = ParseError.exit_code if isinstance(exc, OSError) else InvalidRate.exit_code
        err = {"error": type(exc).__name__, "exit_code": code, "message": str(exc)}
        sys.stderr.write(json.dumps(err) + "\n")
        return code


if __name__ == "__main__":
    sys.exit(main())
