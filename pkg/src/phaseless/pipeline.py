"""Reconstruction of a real bandlimited f, up to sign, from |f(k/s)|, k = -M..M.

The five steps:

1. lift the squared magnitudes to g_M(z/s) = sum_k a_k^2 G(z - k + ic, M) on
   the fine grid z = n/M, |n| <= M^2 (so g_M(z/s) ~ f((z + ic)/s)^2);
2. the same sum with dG/dz gives d/dz g_M(z/s);
3. integrate Im(g'/g) over each unit z-interval with G* weights, giving the
   phase increment Q(n) of g_M between z = n-1 and z = n;
4. accumulate R(n) = sum of increments from 0 to n;
5. rebuild samples of f on the line, sqrt|g_M(k/s)| exp(i/2 (R(k) + arg g_M(0))),
   and shift back to the real axis with the conjugate offset -ic.

Steps 1, 2 and 5 are batches of linear convolutions with fractional kernel
offsets and run through ``fft_fractional_convolve``; every one of them also has
a direct-summation path (``method="direct"``) used as an oracle.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field, replace
from fractions import Fraction

import numpy as np
import scipy.fft

from .approx import BoundInputs, main_rate_bound
from .errors import DomainMismatch, InvalidRate, NearZeroOnLine
from .kernels import eval_G, eval_G_deriv, tabulate_G_star

NEAR_ZERO_RATIO = 1e-12
# interior imaginary residue (relative to max |f_M|) above which a warning is raised
IMAG_RESIDUE_WARN = 1e-3


class ImaginaryResidueWarning(RuntimeWarning):
    pass


@dataclass(frozen=True)
class ReconstructionConfig:
    """All tunables of a reconstruction run.

    ``b`` may be None when the bandwidth is unknown; the s > 2b check and the
    predicted-rate diagnostics are then skipped. ``delta`` is the half-width of
    the zero-free strip around Im = c assumed by the rate prediction; it
    defaults to ``c`` (all zeros of f on the real axis).
    """

    M: int
    s: float = 1.0
    b: float | None = None
    c: float = 0.1
    fine_factor: int = 8
    quad_tol: float = 1e-12
    fft_pad: str = "fast"
    delta: float | None = None

    def __post_init__(self):
        if int(self.M) != self.M or self.M < 2:
            raise InvalidRate(f"M must be an integer >= 2, got {self.M!r}")
        if not self.s > 0:
            raise InvalidRate(f"sampling rate must be positive, got {self.s}")
        if self.b is not None:
            if self.b < 0:
                raise InvalidRate(f"bandwidth must be nonnegative, got {self.b}")
            if not self.s > 2.0 * self.b:
                raise InvalidRate(f"need s > 2b, got s={self.s}, b={self.b}")
        if not self.c > 0:
            raise InvalidRate(f"line offset c must be positive, got {self.c}")
        if int(self.fine_factor) != self.fine_factor or self.fine_factor < 1:
            raise InvalidRate(f"fine_factor must be a positive integer, got {self.fine_factor!r}")
        if not self.quad_tol > 0:
            raise InvalidRate(f"quad_tol must be positive, got {self.quad_tol}")
        if self.fft_pad not in ("fast", "pow2"):
            raise InvalidRate(f"unknown fft_pad policy {self.fft_pad!r}")

    @property
    def strip_halfwidth(self):
        return self.c if self.delta is None else self.delta


@dataclass(frozen=True)
class MagnitudeSamples:
    """a[i] = |f((i - M)/s)|."""

    a: np.ndarray

    def __post_init__(self):
        arr = np.array(self.a, dtype=float)
        if arr.ndim != 1 or len(arr) % 2 != 1 or len(arr) < 5:
            raise ValueError(f"need 2M+1 magnitudes with M >= 2, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)) or np.any(arr < 0):
            raise ValueError("magnitudes must be finite and nonnegative")
        arr.setflags(write=False)
        object.__setattr__(self, "a", arr)

    @property
    def M(self):
        return (len(self.a) - 1) // 2


@dataclass(frozen=True)
class FineGrid:
    """g[i] = g_M(n/(Ms)) and gprime[i] its z-derivative, with n = i - M^2."""

    g: np.ndarray
    gprime: np.ndarray | None
    M: int
    s: float
    c: float

    def at(self, n):
        return self.g[np.asarray(n) + self.M ** 2]


@dataclass(frozen=True)
class PhaseTrack:
    """Q[i] = Q(i - (M-2)) for n in [-(M-2), M-1]; R[i] = R(i - (M-1)) for n in [-(M-1), M-1]."""

    M: int
    Q: np.ndarray
    R: np.ndarray | None = None

    @property
    def q_index(self):
        return np.arange(-(self.M - 2), self.M)

    @property
    def r_index(self):
        return np.arange(-(self.M - 1), self.M)

    def q(self, n):
        return self.Q[np.asarray(n) + self.M - 2]

    def r(self, n):
        return self.R[np.asarray(n) + self.M - 1]


@dataclass(frozen=True)
class ReconstructionResult:
    grid: np.ndarray
    values: np.ndarray
    s: float = 1.0
    sign_resolved: bool = False
    eta_hint: int | None = None
    diagnostics: dict = field(default_factory=dict)


@dataclass(frozen=True)
class ErrorDomain:
    """Integer-endpoint interval [-(floor(r(M-1)) - 1), floor(r(M-1)) - 1] in z units."""

    r: Fraction
    M: int

    def __post_init__(self):
        r = Fraction(self.r)
        if not 0 < r <= 1:
            raise ValueError(f"r must lie in (0, 1], got {r}")
        object.__setattr__(self, "r", r)

    @property
    def interval(self):
        h = math.floor(self.r * (self.M - 1)) - 1
        return (-h, h)

    @classmethod
    def benchmark(cls, M):
        """The error domain I_{1/2, M+1} used for M-sample benchmarks."""
        return cls(Fraction(1, 2), M + 1)


def _fft_length(n, policy):
    if policy == "pow2":
        return 1 << (n - 1).bit_length()
    return scipy.fft.next_fast_len(n)


def fft_fractional_convolve(weights, kernel, factor, pad="fast"):
    """Fine-grid linear convolution out[n] = sum_k w_k kernel(n/factor - k).

    ``weights`` has length 2K+1 (k = -K..K); the output covers
    n = -K*factor .. K*factor (length 2*K*factor + 1). For each fractional
    offset r = j/factor one zero-padded transform convolves the weights with
    kernel(m + r), m = -2K..2K; results are interleaved onto the fine grid.
    ``kernel`` must accept complex/real numpy arrays.
    """
    w = np.asarray(weights, dtype=complex)
    if w.ndim != 1 or len(w) % 2 != 1:
        raise ValueError("weights must have odd length 2K+1")
    K = (len(w) - 1) // 2
    P = int(factor)
    m = np.arange(-2 * K, 2 * K + 1)
    r = np.arange(P) / P
    taps = kernel(m[None, :] + r[:, None])  # shape (P, 4K+1)
    L = _fft_length(4 * K + 2, pad)
    W = scipy.fft.fft(w, L)
    T = scipy.fft.fft(taps, L, axis=1)
    full = scipy.fft.ifft(T * W[None, :], axis=1)
    # linear-convolution index q + 3K holds output sample q, q = -K..K
    rows = full[:, 2 * K:4 * K + 1]  # (P, 2K+1)
    fine = rows.T.reshape(-1)  # n = q*P + j ordering, q = -K..K
    return fine[: 2 * K * P + 1]


def direct_fractional_convolve(weights, kernel, factor):
    """O(K^2 P) reference for ``fft_fractional_convolve``."""
    w = np.asarray(weights, dtype=complex)
    K = (len(w) - 1) // 2
    z = np.arange(-K * factor, K * factor + 1) / factor
    k = np.arange(-K, K + 1)
    return kernel(z[:, None] - k[None, :]) @ w


def _convolve(weights, kernel, factor, method, pad):
    if method == "fft":
        return fft_fractional_convolve(weights, kernel, factor, pad)
    if method == "direct":
        return direct_fractional_convolve(weights, kernel, factor)
    raise ValueError(f"unknown method {method!r}")


def _check_consistent(cfg, mags):
    if mags.M != cfg.M:
        raise ValueError(f"config has M={cfg.M} but {len(mags.a)} magnitudes were given")


def step1_lift(cfg, mags, method="fft"):
    """g_M(n/(Ms)) = sum_k a_k^2 G(n/M - k + ic, M) for |n| <= M^2."""
    _check_consistent(cfg, mags)
    M, c = cfg.M, cfg.c
    g = _convolve(mags.a ** 2, lambda t: eval_G(t + 1j * c, M), M, method, cfg.fft_pad)
    return FineGrid(g, None, M, cfg.s, c)


def step2_lift_deriv(cfg, mags, grid=None, method="fft"):
    """Fill the z-derivative: sum_k a_k^2 G'(n/M - k + ic, M)."""
    _check_consistent(cfg, mags)
    if grid is None:
        grid = step1_lift(cfg, mags, method)
    M, c = cfg.M, cfg.c
    gp = _convolve(mags.a ** 2, lambda t: eval_G_deriv(t + 1j * c, M), M, method, cfg.fft_pad)
    return replace(grid, gprime=gp)


def log_derivative_phase(grid):
    """Im(g'/g) on the fine grid; raises NearZeroOnLine if g nearly vanishes."""
    scale = np.max(np.abs(grid.g))
    if scale == 0.0:
        return np.zeros(len(grid.g))
    if np.min(np.abs(grid.g)) < NEAR_ZERO_RATIO * scale:
        n = int(np.argmin(np.abs(grid.g))) - grid.M ** 2
        raise NearZeroOnLine(
            f"|g_M| drops below {NEAR_ZERO_RATIO:g} * max|g_M| at z = {n / grid.M:g}; "
            f"try a different c (now {grid.c})"
        )
    return np.imag(grid.gprime / grid.g)


def step3_phase_increments(cfg, grid, table=None):
    """Q(n) = sum_{k=(n-2)M}^{(n+1)M} Im(g'/g)(k/M) G*(Mn - k, M) for n in [-(M-2), M-1].

    Q(n) approximates the phase change of g_M from z = n-1 to z = n along the line.
    """
    M = cfg.M
    if grid.gprime is None:
        raise ValueError("fine grid has no derivative; run step2_lift_deriv first")
    if table is None:
        table = tabulate_G_star(M, cfg.quad_tol)
    phi = log_derivative_phase(grid)
    n = np.arange(-(M - 2), M)
    m = np.arange(-M, 2 * M + 1)
    k = M * n[:, None] - m[None, :]  # fine-grid index, always within [-M^2, M^2]
    Q = phi[k + M * M] @ table.lookup(m)
    return PhaseTrack(M, Q)


def step4_accumulate(track):
    """R(0) = 0 and R(n) - R(n-1) = Q(n), summed outward from 0 in both directions."""
    M = track.M
    Q = track.Q
    up = np.cumsum(Q[M - 1:])  # Q(1..M-1) -> R(1..M-1)
    down = -np.cumsum(Q[M - 2::-1])  # Q(0), Q(-1), ... -> R(-1), R(-2), ...
    R = np.concatenate((down[::-1], [0.0], up))
    return replace(track, R=R)


def principal_arg(z):
    """Argument in (-pi, pi]."""
    a = float(np.angle(z))
    return math.pi if a == -math.pi else a


def line_samples(grid, track):
    """Approximate f((k + ic)/s), k = -(M-1)..M-1, up to the global sign."""
    M = grid.M
    k = np.arange(-(M - 1), M)
    gk = grid.g[k * M + M * M]
    theta0 = principal_arg(grid.g[M * M])
    return np.sqrt(np.abs(gk)) * np.exp(0.5j * (track.R + theta0))


def step5_resynthesize(cfg, grid, track, method="fft"):
    """f_M(z/s) = sum_{|k|<=M-1} w_k G(z - k - ic, M) on z = j/N, |j| <= N(M-1)."""
    M, c, N = cfg.M, cfg.c, cfg.fine_factor
    if track.R is None:
        raise ValueError("phase track has no accumulated phase; run step4_accumulate first")
    w = line_samples(grid, track)
    f = _convolve(w, lambda t: eval_G(t - 1j * c, M), N, method, cfg.fft_pad)
    z = np.arange(-N * (M - 1), N * (M - 1) + 1) / N
    values = np.real(f)
    peak = float(np.max(np.abs(values)))
    imag = np.abs(np.imag(f))
    lo, hi = ErrorDomain.benchmark(M).interval
    interior = (z >= lo) & (z <= hi)
    diag = {
        "imag_residue": float(np.max(imag)),
        "imag_residue_interior": float(np.max(imag[interior])) if interior.any() else 0.0,
        "max_abs_value": peak,
    }
    if peak > 0 and diag["imag_residue_interior"] > IMAG_RESIDUE_WARN * peak:
        warnings.warn(
            f"M={M}: imaginary residue inside the error domain is "
            f"{diag['imag_residue_interior'] / peak:.3g} * max|f_M| (warn above {IMAG_RESIDUE_WARN:g})",
            ImaginaryResidueWarning,
            stacklevel=2,
        )
    return ReconstructionResult(z / cfg.s, values, cfg.s, diagnostics=diag)


def _predicted(cfg):
    if cfg.b is None:
        return {}
    rate, offset = main_rate_bound(
        BoundInputs(M=cfg.M, b=cfg.b, s=cfg.s, c=cfg.c, delta=cfg.strip_halfwidth)
    )
    return {
        "predicted_rate": rate,
        "predicted_offset": offset,
        "predicted_bound": math.exp(-rate * cfg.M + offset),
    }


def reconstruct(cfg, mags, method="fft", table=None, reference=None):
    """Run all five steps. With ``reference`` (callable x -> f(x)) the result's
    ``eta_hint`` records the sign aligning f_M with it."""
    if not isinstance(mags, MagnitudeSamples):
        mags = MagnitudeSamples(mags)
    grid = step1_lift(cfg, mags, method)
    grid = step2_lift_deriv(cfg, mags, grid, method)
    track = step4_accumulate(step3_phase_increments(cfg, grid, table))
    result = step5_resynthesize(cfg, grid, track, method)
    scale = float(np.max(np.abs(grid.g)))
    diag = dict(result.diagnostics)
    diag["min_abs_g"] = float(np.min(np.abs(grid.g)))
    diag["max_abs_g"] = scale
    diag.update(_predicted(cfg))
    result = replace(result, diagnostics=diag)
    if reference is not None:
        _, eta = worst_case_error(result, reference, ErrorDomain.benchmark(cfg.M))
        result = replace(result, eta_hint=eta)
    return result


def worst_case_error(result, reference, domain):
    """min over eta = +-1 of max |f_M - eta f| over grid points z/s with z in the domain.

    Returns ``(error, eta)``.
    """
    x = np.asarray(result.grid)
    z = x * result.s
    lo, hi = domain.interval
    eps = 1e-9
    if len(z) == 0 or z[0] > lo + eps or z[-1] < hi - eps:
        raise DomainMismatch(f"result grid [{z[0]:g}, {z[-1]:g}] does not cover [{lo}, {hi}]")
    sel = (z >= lo - eps) & (z <= hi + eps)
    vals = np.asarray(result.values)[sel]
    ref = np.asarray(reference(x[sel]), dtype=float)
    plus = float(np.max(np.abs(vals - ref))) if vals.size else 0.0
    minus = float(np.max(np.abs(vals + ref))) if vals.size else 0.0
    return (plus, 1) if plus <= minus else (minus, -1)
