"""Exact bandlimited test signals and their magnitude samples.

Bandwidth convention: a signal of exponential type beta has b = beta/pi, so a
rate s > 2b is what the reconstruction needs.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import EmptySpec
from .pipeline import MagnitudeSamples

_SERIES_LIMIT = 12.0


def _series_jn(n, x):
    """Ascending series sum_m (-1)^m (x/2)^{2m+n} / (m! (m+n)!)."""
    h = 0.5 * x
    term = h ** n / math.factorial(n)
    total = term.copy()
    h2 = h * h
    for m in range(1, 60):
        term = -term * h2 / (m * (m + n))
        total = total + term
        if np.all(np.abs(term) < 1e-18 * np.maximum(np.abs(total), 1e-300)):
            break
    return total


def _miller_jn(n, x):
    """J_n(x) for an array of x > 0 by backward recurrence normalised with J0 + 2 sum J_2k = 1."""
    x = np.asarray(x, dtype=float)
    xm = float(x.max())
    top = int(xm + 25 + 10 * xm ** (1.0 / 3.0))
    top += top % 2
    jp, j = np.zeros_like(x), np.full_like(x, 1e-30)
    norm = np.zeros_like(x)
    keep = np.zeros_like(x)
    for k in range(top, 0, -1):
        jp, j = j, 2.0 * k / x * j - jp
        big = np.abs(j) > 1e250
        if big.any():
            scale = np.where(big, 1e-250, 1.0)
            jp, j, norm, keep = jp * scale, j * scale, norm * scale, keep * scale
        if k - 1 == n:
            keep = j.copy()
        if (k - 1) % 2 == 0 and k > 1:
            norm += 2.0 * j
    return keep / (norm + j)


def bessel_j(n, x):
    """Bessel function of the first kind J_n for small integer n >= 0, real x.

    Series for |x| <= 12, Miller backward recurrence beyond.
    """
    x = np.asarray(x, dtype=float)
    flat = np.abs(x).ravel()
    res = np.empty_like(flat)
    small = flat <= _SERIES_LIMIT
    if small.any():
        res[small] = _series_jn(n, flat[small])
    if (~small).any():
        res[~small] = _miller_jn(n, flat[~small])
    res = res.reshape(x.shape)
    if n % 2:
        res = np.where(x < 0, -res, res)
    return res[()] if res.ndim == 0 else res


def bessel_j1(x):
    return bessel_j(1, x)


@dataclass(frozen=True)
class TestSignal:
    """A real signal with known closed form; ``b`` bounds its type divided by pi."""

    __test__ = False  # not a pytest class

    name: str
    b: float
    eval: Callable
    description: str = ""

    def __call__(self, x):
        return self.eval(np.asarray(x, dtype=float))

    def negated(self):
        f = self.eval
        return TestSignal(f"-{self.name}", self.b, lambda x: -f(x), f"negation of {self.name}")


def bessel_j1_shifted(shift=20.0):
    """x -> J1(x + shift); J1 has exponential type 1, so b = 1/pi."""
    return TestSignal(
        f"bessel_j1_shift{shift:g}",
        1.0 / math.pi,
        lambda x: bessel_j1(x + shift),
        f"J1(x + {shift:g})",
    )


def multitone(frequencies, amps, phases):
    """x -> sum_i amp_i sin(2 pi freq_i x + phase_i), with b = 2 max freq_i."""
    f = np.asarray(frequencies, dtype=float)
    a = np.asarray(amps, dtype=float)
    p = np.asarray(phases, dtype=float)
    if f.size == 0:
        raise EmptySpec("multitone needs at least one tone")
    if not f.shape == a.shape == p.shape or f.ndim != 1:
        raise ValueError("frequencies, amps and phases must be 1-d arrays of equal length")
    if np.any(f <= 0):
        raise ValueError("tone frequencies must be positive")

    def ev(x):
        x = np.asarray(x, dtype=float)
        return np.sin(2 * np.pi * f * x[..., None] + p) @ a

    return TestSignal(f"multitone{len(f)}", 2.0 * float(f.max()), ev, f"{len(f)}-tone sum")


def multitone_preset(seed=0, n_tones=8, max_freq=0.1):
    """Synthetic stand-in for recorded audio: ``n_tones`` tones below ``max_freq``
    with amplitudes and phases drawn from a seeded generator."""
    rng = np.random.default_rng(seed)
    freqs = rng.uniform(0.1 * max_freq, max_freq, n_tones)
    amps = rng.uniform(0.3, 1.0, n_tones)
    phases = rng.uniform(0.0, 2 * np.pi, n_tones)
    sig = multitone(freqs, amps / amps.sum(), phases)
    return TestSignal(f"multitone_seed{seed}", sig.b, sig.eval, sig.description)


def shifted_sine():
    """sin(pi (x + 1/4)); type pi, so b = 1."""
    return TestSignal("sine", 1.0, lambda x: np.sin(np.pi * (x + 0.25)), "sin(pi (x + 1/4))")


def counterexample_pair():
    """sin(pi(x + 1/4)) and cos(pi(x + 1/4)): both of type pi (b = 1), with equal
    magnitudes at every x = k/2, i.e. at rate s = 2 = 2b."""
    f1 = shifted_sine()
    f2 = TestSignal("cosine", 1.0, lambda x: np.cos(np.pi * (x + 0.25)), "cos(pi (x + 1/4))")
    return f1, f2


def sample_magnitudes(sig, s, M):
    """a_k = |f(k/s)| for k = -M..M."""
    if not s > 0:
        raise ValueError("sampling rate must be positive")
    k = np.arange(-M, M + 1)
    return MagnitudeSamples(np.abs(sig(k / s)))


@dataclass(frozen=True)
class Preset:
    signal: TestSignal
    s: float
    c: float


def preset(name, seed=0):
    """Benchmark presets with their default rate and line offset."""
    if name == "bessel":
        return Preset(bessel_j1_shifted(20.0), 1.0, 0.1)
    if name == "multitone":
        return Preset(multitone_preset(seed), 1.0, 0.04)
    if name == "sine":
        return Preset(shifted_sine(), 4.0, 0.1)
    raise ValueError(f"unknown preset {name!r}; choose bessel, multitone or sine")


PRESETS = ("bessel", "multitone", "sine")
