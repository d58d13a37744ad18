"""Definite-parity Fourier series and sampled periodic signals.

A series here is a pure cosine or pure sine series with no constant term,

    f(theta) = sum_{k>=1} a_k cos(k theta)   or   sum_{k>=1} a_k sin(k theta),

on the periodic interval [-pi, pi).  Signals live on the uniform grid
theta_j = -pi + 2*pi*j/M, chosen so that theta = 0 and theta = -pi are grid
points (the standard waveforms' singular points sit on the grid).
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass

import numpy as np

__all__ = [
    "PARITIES",
    "EvalOptions",
    "DEFAULT_OPTIONS",
    "HarmonicCoefficients",
    "SampledSignal",
    "theta_grid",
    "eval_series",
    "make_waveform",
    "render_signal",
    "save_coefficients",
    "load_coefficients",
    "save_signal",
    "load_signal",
]

PARITIES = ("cosine", "sine")

WAVEFORMS = ("square", "sawtooth", "triangle")

# Keep temporary trig matrices below ~32 MB when summing long series.
_CHUNK_ELEMENTS = 2**22


@dataclass(frozen=True)
class EvalOptions:
    """Truncation and quadrature controls shared by the evaluation routines.

    k_max caps every series summation; tail_tol is the absolute bound the
    rigorous truncation rules must reach; quad_resolution is the number of
    quadrature points per period.
    """

    k_max: int = 2**20
    tail_tol: float = 1e-12
    quad_resolution: int = 2**14

    def __post_init__(self) -> None:
        if self.k_max < 1:
            raise ValueError("k_max must be a positive integer")
        if not (self.tail_tol > 0.0 and np.isfinite(self.tail_tol)):
            raise ValueError("tail_tol must be a positive finite real")
        if self.quad_resolution < 2:
            raise ValueError("quad_resolution must be >= 2")


DEFAULT_OPTIONS = EvalOptions()


@dataclass(frozen=True)
class HarmonicCoefficients:
    """One side of a conjugate pair: amplitudes a_k, k >= 1, plus a parity tag.

    There is no constant term; the k=0 slot does not exist by construction.
    """

    parity: str
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        if self.parity not in PARITIES:
            raise ValueError(f"parity must be one of {PARITIES}, got {self.parity!r}")
        arr = np.asarray(self.coeffs, dtype=float)
        if arr.ndim != 1:
            raise ValueError("coeffs must be a one-dimensional sequence")
        if arr.size and not np.all(np.isfinite(arr)):
            raise ValueError("coefficients must all be finite")
        object.__setattr__(self, "coeffs", arr)

    def __len__(self) -> int:
        return int(self.coeffs.size)


@dataclass(frozen=True)
class SampledSignal:
    """Real values on the uniform periodic grid theta_j = -pi + 2*pi*j/M."""

    values: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.values, dtype=float)
        if arr.ndim != 1 or arr.size < 1:
            raise ValueError("values must be a non-empty one-dimensional sequence")
        if not np.all(np.isfinite(arr)):
            raise ValueError("signal values must all be finite")
        object.__setattr__(self, "values", arr)

    @property
    def resolution(self) -> int:
        return int(self.values.size)

    def thetas(self) -> np.ndarray:
        return theta_grid(self.resolution)

    def value_at(self, j: int) -> float:
        """Grid value with periodic (modulo M) index wrapping."""
        return float(self.values[j % self.resolution])


def theta_grid(resolution: int) -> np.ndarray:
    """Uniform periodic grid theta_j = -pi + 2*pi*j/M, j = 0..M-1."""
    if resolution < 1:
        raise ValueError("resolution must be >= 1")
    return -np.pi + 2.0 * np.pi * np.arange(resolution) / resolution


def _trig(parity: str, x: np.ndarray) -> np.ndarray:
    return np.cos(x) if parity == "cosine" else np.sin(x)


def _eval_many(coeffs: HarmonicCoefficients, thetas: np.ndarray, k_max: int) -> np.ndarray:
    """Partial sums at many angles, chunked over harmonics to bound memory."""
    n = min(len(coeffs), k_max)
    out = np.zeros(thetas.shape, dtype=float)
    if n == 0:
        return out
    a = coeffs.coeffs[:n]
    step = max(1, _CHUNK_ELEMENTS // max(thetas.size, 1))
    for lo in range(0, n, step):
        k = np.arange(lo + 1, min(lo + step, n) + 1, dtype=float)
        out += _trig(coeffs.parity, np.multiply.outer(thetas, k)) @ a[lo : lo + k.size]
    return out


def eval_series(coeffs: HarmonicCoefficients, theta: float, opts: EvalOptions | None = None):
    """Evaluate the series at theta, truncated at min(len(coeffs), opts.k_max).

    theta may be a scalar (returns float) or an array (returns an array).
    """
    opts = opts or DEFAULT_OPTIONS
    th = np.asarray(theta, dtype=float)
    if not np.all(np.isfinite(th)):
        raise ValueError("theta must be finite")
    vals = _eval_many(coeffs, np.atleast_1d(th), opts.k_max)
    return float(vals[0]) if th.ndim == 0 else vals.reshape(th.shape)


def make_waveform(kind: str, k_max: int) -> HarmonicCoefficients:
    """Coefficients of the unit-amplitude square, sawtooth, or triangle wave.

    square:   sine series,   a_k =  4/(pi k)     for odd k, else 0
    sawtooth: sine series,   a_k = -4/(pi k)     for even k, else 0
    triangle: cosine series, a_k = -8/(pi^2 k^2) for odd k, else 0
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    k = np.arange(1, k_max + 1, dtype=float)
    odd = (np.arange(1, k_max + 1) % 2) == 1
    if kind == "square":
        return HarmonicCoefficients("sine", np.where(odd, 4.0 / (np.pi * k), 0.0))
    if kind == "sawtooth":
        return HarmonicCoefficients("sine", np.where(~odd, -4.0 / (np.pi * k), 0.0))
    if kind == "triangle":
        return HarmonicCoefficients("cosine", np.where(odd, -8.0 / (np.pi**2 * k**2), 0.0))
    raise ValueError(f"unknown waveform kind {kind!r}, expected one of {WAVEFORMS}")


def render_signal(
    coeffs: HarmonicCoefficients, resolution: int, opts: EvalOptions | None = None
) -> SampledSignal:
    """Sample the series on the standard grid of the given resolution."""
    if resolution < 2:
        raise ValueError("resolution must be >= 2")
    opts = opts or DEFAULT_OPTIONS
    return SampledSignal(_eval_many(coeffs, theta_grid(resolution), opts.k_max))


def save_coefficients(coeffs: HarmonicCoefficients, path) -> None:
    """Write {"parity": ..., "coeffs": [...]} JSON."""
    with open(path, "w", encoding="utf-8") as fh:
        json.dump({"parity": coeffs.parity, "coeffs": coeffs.coeffs.tolist()}, fh)
        fh.write("\n")


def load_coefficients(path) -> HarmonicCoefficients:
    with open(path, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    return HarmonicCoefficients(obj["parity"], np.asarray(obj["coeffs"], dtype=float))


def save_signal(signal: SampledSignal, path) -> None:
    """Write CSV with header theta,value at 17 significant digits."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["theta", "value"])
        for t, v in zip(signal.thetas(), signal.values):
            writer.writerow([f"{t:.17g}", f"{v:.17g}"])


def load_signal(path) -> SampledSignal:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header[:2] != ["theta", "value"]:
            raise ValueError("expected a theta,value CSV header")
        values = [float(row[1]) for row in reader]
    return SampledSignal(np.asarray(values))
