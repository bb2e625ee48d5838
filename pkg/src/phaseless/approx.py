"""Truncated sinc-Gaussian sampling series and their error bounds.

Two operators:

* ``sinc_gauss_interpolate``: f(z/s) ~ sum_{|k|<=M} f(k/s) G(z - k, M) for a
  function of bandwidth b < s.
* ``fine_grid_interpolate``: f(z) ~ sum_{|k|<=dM} f(k/M) G(Mz - k, M) for any f
  analytic in a strip, evaluated on [-d/2, d/2].

The bound evaluators return the decay envelopes with user-supplied constants
(C1, C2 default to 1); they are diagnostics and are never enforced.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidRate
from .kernels import eval_G


@dataclass(frozen=True)
class BandlimitedSampleSet:
    """Samples f(k/s) for k = -M..M of a function with bandwidth b < s."""

    samples: np.ndarray
    s: float
    b: float
    M: int

    def __post_init__(self):
        arr = np.asarray(self.samples)
        if arr.shape != (2 * self.M + 1,):
            raise ValueError(f"need 2M+1 = {2 * self.M + 1} samples, got {arr.shape}")
        if not self.s > self.b:
            raise InvalidRate(f"sampling rate s={self.s} must exceed bandwidth b={self.b}")
        object.__setattr__(self, "samples", arr)

    @classmethod
    def from_function(cls, f, s, b, M):
        k = np.arange(-M, M + 1)
        return cls(np.asarray(f(k / s)), s, b, M)


@dataclass(frozen=True)
class BoundInputs:
    M: int
    b: float
    s: float
    d: float = 0.5
    c: float = 0.0
    delta: float = 0.1
    C1: float = 1.0
    C2: float = 1.0


def sinc_gauss_interpolate(sset, z):
    """Evaluate sum_k f(k/s) G(z - k, M); approximates f(z/s).

    ``z`` may be a complex scalar or array.
    """
    z = np.asarray(z, dtype=complex)
    k = np.arange(-sset.M, sset.M + 1)
    out = eval_G(z[..., None] - k, sset.M) @ sset.samples
    return out[()] if out.ndim == 0 else out


def fine_grid_interpolate(values, M, d, z):
    """Evaluate sum_{|k|<=dM} f(k/M) G(Mz - k, M); approximates f(z) for |z| <= d/2.

    ``values[i]`` is f(k/M) with k = i - floor(dM).
    """
    K = int(math.floor(d * M))
    values = np.asarray(values)
    if values.shape != (2 * K + 1,):
        raise ValueError(f"need 2*floor(dM)+1 = {2 * K + 1} values, got {values.shape}")
    z = np.asarray(z, dtype=float)
    k = np.arange(-K, K + 1)
    out = eval_G(M * z[..., None] - k, M) @ values
    return out[()] if out.ndim == 0 else out


def thm3_bound(inp, im_z=0.0):
    """C1 M^{-1/2} exp(-pi(1-d)/2 (1-b/s) M + 2 pi |Im z|)."""
    expo = -math.pi * (1.0 - inp.d) / 2.0 * (1.0 - inp.b / inp.s) * inp.M
    return inp.C1 * inp.M ** -0.5 * math.exp(expo + 2.0 * math.pi * abs(im_z))


def fine_grid_bound(inp, K=1.0):
    """C2 K (M/delta)^{1/2} exp(-pi delta M / 4)."""
    return inp.C2 * K * math.sqrt(inp.M / inp.delta) * math.exp(-math.pi * inp.delta * inp.M / 4.0)


def main_rate_bound(inp):
    """Decay rate and offset of the reconstruction error envelope C exp(-rate M + offset).

    rate = min(pi/16 (1 - 2b/s), pi delta/8), offset = 4 pi c.
    """
    if not inp.s > 2.0 * inp.b:
        raise InvalidRate(f"need s > 2b, got s={inp.s}, b={inp.b}")
    if not inp.delta > 0:
        raise InvalidRate(f"zero-free strip half-width must be positive, got {inp.delta}")
    rate = min(math.pi / 16.0 * (1.0 - 2.0 * inp.b / inp.s), math.pi * inp.delta / 8.0)
    return rate, 4.0 * math.pi * inp.c
