"""Sinc-Gaussian kernels G, dG/dz and the window-averaged kernel G*.

    G(z, M)  = sin(pi z)/(pi z) * exp(-pi z^2 / (2M))
    G'(z, M) = dG/dz
    G*(z, M) = (1/M) * integral_{z-M}^{z} G(t, M) dt

G* has no closed form; it is tabulated once per (M, tol) on the integers
[-M, 2M] and reused across inputs.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

import numpy as np

from .errors import ParseError, QuadratureNonConvergence

# switchover radii for the Taylor fills at the removable singularity
_G_SERIES_RADIUS = 1e-6
_GPRIME_SERIES_RADIUS = 1e-4

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(10)


def _check_M(M):
    if int(M) != M or M < 2:
        raise ValueError(f"M must be an integer >= 2, got {M!r}")


def _sincos_pi_real(x):
    """sin(pi x), cos(pi x) with quadrant reduction; exact zeros at integers and half-integers."""
    n = np.round(2.0 * x)
    f = np.pi * (x - 0.5 * n)
    s, c = np.sin(f), np.cos(f)
    q = np.mod(n, 4)
    sin = np.select([q == 0, q == 1, q == 2], [s, c, -s], -c)
    cos = np.select([q == 0, q == 1, q == 2], [c, -s, -c], s)
    return sin, cos


def sincos_pi(z):
    """sin(pi z), cos(pi z) for complex ``z``."""
    z = np.asarray(z, dtype=complex)
    sx, cx = _sincos_pi_real(z.real)
    py = np.pi * z.imag
    ch, sh = np.cosh(py), np.sinh(py)
    return sx * ch + 1j * cx * sh, cx * ch - 1j * sx * sh


def sinc(z):
    """sin(pi z)/(pi z) for complex ``z`` with the value 1 filled in at 0."""
    z = np.asarray(z, dtype=complex)
    u = np.pi * z
    small = np.abs(z) < _G_SERIES_RADIUS
    safe = np.where(small, 1.0, u)
    u2 = u * u
    sin, _ = sincos_pi(z)
    return np.where(small, 1.0 - u2 / 6.0 + u2 * u2 / 120.0, sin / safe)


def eval_G(z, M):
    """Sinc-Gaussian kernel G(z, M); accepts scalars or arrays of complex ``z``."""
    _check_M(M)
    z = np.asarray(z, dtype=complex)
    out = sinc(z) * np.exp(-np.pi * z * z / (2.0 * M))
    return out[()] if out.ndim == 0 else out


def eval_G_deriv(z, M):
    """Exact derivative dG/dz.

    [cos(pi z)/z - sin(pi z)/(pi z^2) - sin(pi z)/M] * exp(-pi z^2/(2M)).
    The first two terms are replaced by their odd Taylor series near z = 0.
    """
    _check_M(M)
    z = np.asarray(z, dtype=complex)
    u = np.pi * z
    small = np.abs(z) < _GPRIME_SERIES_RADIUS
    sin, cos = sincos_pi(z)
    zs = np.where(small, 1.0, z)
    head = cos / zs - sin / (np.pi * zs * zs)
    u2 = u * u
    series = np.pi * u * (-1.0 / 3.0 + u2 / 30.0 - u2 * u2 / 840.0)
    bracket = np.where(small, series, head) - sin / M
    out = bracket * np.exp(-np.pi * z * z / (2.0 * M))
    return out[()] if out.ndim == 0 else out


def _gauss(f, a, b):
    half = 0.5 * (b - a)
    return half * np.dot(_GL_WEIGHTS, f(0.5 * (a + b) + half * _GL_NODES))


def adaptive_gauss(f, a, b, tol, max_depth=40, max_panels=100_000):
    """Integrate real ``f`` over [a, b] by adaptive bisection with a 10-point Gauss rule.

    A panel is accepted once the single-panel and two-half-panel estimates
    agree to the panel's share of ``tol``.
    """
    total = 0.0
    stack = [(a, b, tol, _gauss(f, a, b), 0)]
    panels = 0
    while stack:
        lo, hi, ptol, whole, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        left = _gauss(f, lo, mid)
        right = _gauss(f, mid, hi)
        panels += 1
        if abs(left + right - whole) <= ptol:
            total += left + right
            continue
        if depth + 1 >= max_depth or panels > max_panels:
            raise QuadratureNonConvergence(
                f"adaptive quadrature on [{a}, {b}] did not reach tol={tol:g} "
                f"(depth {depth + 1}, {panels} panels)"
            )
        stack.append((lo, mid, 0.5 * ptol, left, depth + 1))
        stack.append((mid, hi, 0.5 * ptol, right, depth + 1))
    return total


def _real_G(M):
    def f(t):
        return np.real(eval_G(t, M))

    return f


def eval_G_star(z, M, tol=1e-12):
    """G*(z, M) at a single real ``z`` by adaptive quadrature over unit panels."""
    _check_M(M)
    f = _real_G(M)
    lo = z - M
    cuts = np.concatenate(([lo], np.arange(math.floor(lo) + 1, math.ceil(z)), [z]))
    cuts = np.unique(cuts)
    return sum(adaptive_gauss(f, p, q, tol) for p, q in zip(cuts[:-1], cuts[1:])) / M


@dataclass(frozen=True)
class GStarTable:
    """G*(m, M) for every integer m in [-M, 2M].

    ``values[i]`` holds G*(i - M, M).
    """

    M: int
    values: np.ndarray = field(repr=False)
    quad_tol: float = 1e-12

    def __post_init__(self):
        _check_M(self.M)
        vals = np.array(self.values, dtype=float)
        if vals.shape != (3 * self.M + 1,):
            raise ValueError(f"expected {3 * self.M + 1} entries, got {vals.shape}")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    @property
    def arguments(self):
        return np.arange(-self.M, 2 * self.M + 1)

    def __getitem__(self, m):
        m = int(m)
        if not -self.M <= m <= 2 * self.M:
            raise KeyError(m)
        return float(self.values[m + self.M])

    def __len__(self):
        return len(self.values)

    def lookup(self, m):
        """Vectorised access for integer arrays ``m`` inside [-M, 2M]."""
        return self.values[np.asarray(m) + self.M]

    def as_dict(self):
        return {int(m): float(v) for m, v in zip(self.arguments, self.values)}

    def to_text(self):
        lines = [f"M={self.M} tol={self.quad_tol!r}"]
        lines += [f"{m}\t{v:.17g}" for m, v in zip(self.arguments, self.values)]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        rows = [ln for ln in text.splitlines() if ln.strip()]
        if not rows:
            raise ParseError("empty G* table")
        try:
            head = dict(tok.split("=", 1) for tok in rows[0].split())
            M = int(head["M"])
            tol = float(head["tol"])
        except (KeyError, ValueError) as exc:
            raise ParseError(f"bad G* table header {rows[0]!r}") from exc
        values = {}
        for ln in rows[1:]:
            parts = ln.split("\t")
            if len(parts) != 2:
                raise ParseError(f"bad G* table line {ln!r}")
            try:
                values[int(parts[0])] = float(parts[1])
            except ValueError as exc:
                raise ParseError(f"bad G* table line {ln!r}") from exc
        expected = range(-M, 2 * M + 1)
        if sorted(values) != list(expected):
            raise ParseError(f"G* table for M={M} must list every m in [{-M}, {2 * M}]")
        return cls(M, np.array([values[m] for m in expected]), tol)

    def save(self, path):
        Path(path).write_text(self.to_text())

    @classmethod
    def load(cls, path):
        return cls.from_text(Path(path).read_text())


def tabulate_G_star(M, tol=1e-12):
    """Tabulate G*(m, M) for integers m in [-M, 2M].

    Each unit integral U(j) = int_{j-1}^{j} G(t, M) dt for j in [-2M+1, 2M] is
    computed once to absolute ``tol``; G*(m) is then the window sum
    (1/M) * sum_{j=m-M+1}^{m} U(j), so the table error stays below ``tol``.
    """
    _check_M(M)
    if not tol > 0:
        raise ValueError("tol must be positive")
    return _tabulate(int(M), float(tol))


@lru_cache(maxsize=64)
def _tabulate(M, tol):
    f = _real_G(M)
    js = np.arange(-2 * M + 1, 2 * M + 1)
    unit = np.array([adaptive_gauss(f, j - 1.0, float(j), tol) for j in js])
    csum = np.concatenate(([0.0], np.cumsum(unit)))
    # window for m covers unit[m - M + 1 .. m] -> csum indices offset by 2M - 1
    ms = np.arange(-M, 2 * M + 1)
    hi = ms + 2 * M
    lo = hi - M
    return GStarTable(M, (csum[hi] - csum[lo]) / M, tol)
