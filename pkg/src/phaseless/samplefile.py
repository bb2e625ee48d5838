"""Plain-text magnitude sample files.

    M=<M> s=<s>
    -M <space> a_{-M}
    ...
    M <space> a_M

Magnitudes are written with 17 significant digits so a write/read round trip
reproduces the doubles exactly.
"""
from __future__ import annotations

from pathlib import Path

from .errors import ParseError
from .pipeline import MagnitudeSamples


def format_samples(mags, s):
    lines = [f"M={mags.M} s={s!r}"]
    lines += [f"{k} {a:.17g}" for k, a in zip(range(-mags.M, mags.M + 1), mags.a)]
    return "\n".join(lines) + "\n"


def parse_samples(text):
    """Return ``(MagnitudeSamples, s)``; raises ParseError on any format violation."""
    rows = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise ParseError("empty sample file")
    try:
        head = dict(tok.split("=", 1) for tok in rows[0].split())
        M = int(head["M"])
        s = float(head["s"])
    except (KeyError, ValueError) as exc:
        raise ParseError(f"bad header {rows[0]!r}; expected 'M=<M> s=<s>'") from exc
    if M < 2:
        raise ParseError(f"M must be >= 2, got {M}")
    body = rows[1:]
    if len(body) != 2 * M + 1:
        raise ParseError(f"expected {2 * M + 1} sample lines for M={M}, found {len(body)}")
    values = []
    for lineno, (expect, ln) in enumerate(zip(range(-M, M + 1), body), start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'k magnitude', got {ln!r}")
        try:
            k = int(parts[0])
            a = float(parts[1])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: cannot parse {ln!r}") from exc
        if k != expect:
            raise ParseError(f"line {lineno}: expected k={expect}, got k={k}")
        if not a >= 0 or a == float("inf"):
            raise ParseError(f"line {lineno}: magnitude must be finite and nonnegative, got {parts[1]}")
        values.append(a)
    return MagnitudeSamples(values), s


def write_samples(path, mags, s):
    Path(path).write_text(format_samples(mags, s))


def read_samples(path):
    return parse_samples(Path(path).read_text())
