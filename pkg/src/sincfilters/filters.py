"""First-order and order-N low-pass filters on the periodic interval.

The filter acts in two equivalent ways: in coefficient space every harmonic
a_k picks up a sinc multiplier determined by the kernel variant, and in
physical space the first-order filter is the symmetric moving average over
[theta - eps, theta + eps].  Order N composes N first-order passes; the
variants differ in how the per-stage range scales with N:

    naive     stage eps,            total range N*eps      (requires eps <= pi/N)
    fixed     stage eps/N,          total range eps
    gaussian  stage eps/sqrt(N),    total range sqrt(N)*eps
    scaled    stages eps/2, eps/4,  total range eps*(1 - 2^-N)

The kernel of every variant is  1/(2*pi) + (1/pi) * sum_k m_k cos(k dtheta)
with m_k the per-variant multiplier.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import FilterRangeError, NonConvergenceError
from .series import DEFAULT_OPTIONS, EvalOptions, HarmonicCoefficients, SampledSignal

__all__ = [
    "VARIANTS",
    "KernelSpec",
    "sinc",
    "filter_multiplier",
    "apply_filter_coeffs",
    "filter_direct",
    "kernel_eval",
    "kernel_integral",
    "stage_range",
    "total_range",
]

VARIANTS = ("naive", "fixed", "gaussian", "scaled")

_SINC_TAYLOR_CUT = 1e-4


@dataclass(frozen=True)
class KernelSpec:
    """Order N, range parameter eps (radians), and range-scaling variant."""

    order: int
    range_param: float
    variant: str = "fixed"

    def __post_init__(self) -> None:
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}, got {self.variant!r}")
        if int(self.order) != self.order or self.order < 0:
            raise ValueError("order must be a non-negative integer")
        object.__setattr__(self, "order", int(self.order))
        eps = float(self.range_param)
        if not (0.0 < eps <= np.pi):
            raise ValueError("range_param must lie in (0, pi]")
        if self.variant == "naive" and self.order >= 1 and eps > np.pi / self.order:
            raise ValueError(
                f"naive variant requires eps <= pi/N (total range N*eps <= pi); "
                f"eps={eps} N={self.order}"
            )
        if self.variant == "gaussian" and math.sqrt(max(self.order, 1)) * eps > np.pi:
            raise ValueError(
                f"gaussian variant requires sqrt(N)*eps <= pi; eps={eps} N={self.order}"
            )
        object.__setattr__(self, "range_param", eps)


def sinc(x):
    """sin(x)/x with a Taylor fallback 1 - x^2/6 + x^4/120 for |x| < 1e-4."""
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("sinc argument must be finite")
    small = np.abs(arr) < _SINC_TAYLOR_CUT
    safe = np.where(small, 1.0, arr)
    t = np.where(small, arr, 0.0)
    out = np.where(small, 1.0 - t * t / 6.0 + t**4 / 120.0, np.sin(safe) / safe)
    return float(out) if arr.ndim == 0 else out


def stage_range(spec: KernelSpec) -> float:
    """Range of each first-order pass making up the order-N filter."""
    if spec.order == 0:
        return 0.0
    if spec.variant == "naive":
        return spec.range_param
    if spec.variant == "fixed":
        return spec.range_param / spec.order
    if spec.variant == "gaussian":
        return spec.range_param / math.sqrt(spec.order)
    # scaled: the stages differ; the widest is eps/2
    return spec.range_param / 2.0


def total_range(spec: KernelSpec) -> float:
    """Half-width of the kernel's support."""
    if spec.order == 0:
        return 0.0
    if spec.variant == "naive":
        return spec.order * spec.range_param
    if spec.variant == "fixed":
        return spec.range_param
    if spec.variant == "gaussian":
        return math.sqrt(spec.order) * spec.range_param
    return spec.range_param * (1.0 - 0.5**spec.order)


def filter_multiplier(k, spec: KernelSpec):
    """Eigenvalue of the order-N filter on the k-th harmonic.

    naive: sinc(k eps)^N; fixed: sinc(k eps/N)^N; gaussian: sinc(k eps/sqrt N)^N;
    scaled: prod_{n=1..N} sinc(k eps / 2^n).  N = 0 is the identity (1).
    """
    karr = np.asarray(k, dtype=float)
    if np.any(karr < 1):
        raise ValueError("harmonic index k must be >= 1")
    if spec.order == 0:
        out = np.ones_like(karr)
    elif spec.variant == "scaled":
        from .scaled import ScaledKernelParams, scaled_coefficient

        out = scaled_coefficient(karr, ScaledKernelParams(spec.range_param, spec.order))
    else:
        out = sinc(karr * stage_range(spec)) ** spec.order
    return float(out) if karr.ndim == 0 else out


def apply_filter_coeffs(coeffs: HarmonicCoefficients, spec: KernelSpec) -> HarmonicCoefficients:
    """Multiply every a_k by the filter's eigenvalue; parity and length kept."""
    if len(coeffs) == 0:
        return coeffs
    k = np.arange(1, len(coeffs) + 1)
    return HarmonicCoefficients(coeffs.parity, coeffs.coeffs * filter_multiplier(k, spec))


def _fractional_index(x: np.ndarray, resolution: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Split angles into (whole periods, node index, in-cell fraction)."""
    h = 2.0 * np.pi / resolution
    t = (x + np.pi) / h
    wraps = np.floor(t / resolution)
    t = t - wraps * resolution
    # rounding in the reduction can leave t a hair outside [0, resolution)
    idx = np.clip(np.floor(t).astype(int), 0, resolution - 1)
    return wraps, idx, t - idx


def filter_direct(signal: SampledSignal, eps: float, opts: EvalOptions | None = None) -> SampledSignal:
    """Symmetric moving average (1/2eps) * integral over [theta-eps, theta+eps].

    The window integral is taken over the periodic linear interpolant of the
    grid values: cumulative trapezoid between nodes, exact fragment integrals
    at the two fractional endpoints, and an h^2/12 endpoint-slope correction
    (centered-difference slopes) that removes the trapezoid boundary error.
    The result is clipped to [min(signal), max(signal)], which the exact
    operator satisfies.
    """
    eps = float(eps)
    if not (0.0 < eps <= np.pi):
        raise ValueError("eps must lie in (0, pi]")
    v = signal.values
    m = signal.resolution
    h = 2.0 * np.pi / m
    if 2.0 * eps < 8.0 * h:
        raise FilterRangeError(
            f"range too small for grid: 2*eps = {2 * eps:.3g} spans fewer than "
            f"8 grid cells of {h:.3g}"
        )

    vp = np.concatenate([v, v[:1]])
    cells = h * (vp[:-1] + vp[1:]) / 2.0
    cum = np.concatenate([[0.0], np.cumsum(cells)])
    period_integral = cum[-1]
    slope = (np.roll(v, -1) - np.roll(v, 1)) / (2.0 * h)

    def window_edge(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        wraps, i, frac = _fractional_index(x, m)
        vi = v[i]
        vnext = v[(i + 1) % m]
        fragment = h * (vi * frac + 0.5 * (vnext - vi) * frac * frac)
        antider = wraps * period_integral + cum[i] + fragment
        edge_slope = slope[i] * (1.0 - frac) + slope[(i + 1) % m] * frac
        return antider, edge_slope

    thetas = signal.thetas()
    upper, slope_u = window_edge(thetas + eps)
    lower, slope_l = window_edge(thetas - eps)
    integral = (upper - lower) - (h * h / 12.0) * (slope_u - slope_l)
    out = integral / (2.0 * eps)
    return SampledSignal(np.clip(out, v.min(), v.max()))


def _fold(dtheta) -> np.ndarray:
    """Reduce to [0, pi] using evenness first, so kernels are exactly even."""
    d = np.abs(np.asarray(dtheta, dtype=float))
    d = np.mod(d, 2.0 * np.pi)
    return np.where(d > np.pi, 2.0 * np.pi - d, d)


def _box_kernel(d: np.ndarray, half_width: float) -> np.ndarray:
    """First-order kernel: 1/(2a) inside, 0 outside, lateral-limit average at the edge."""
    a = half_width
    return np.where(d < a, 1.0 / (2.0 * a), np.where(d == a, 1.0 / (4.0 * a), 0.0))


def _two_box_kernel(d: np.ndarray, a: float, b: float) -> np.ndarray:
    """Convolution of boxes with half-widths a >= b: overlap / (4ab)."""
    overlap = np.minimum(d + b, a) - np.maximum(d - b, -a)
    return np.clip(overlap, 0.0, None) / (4.0 * a * b)


def _power_series_cutoff(stage: float, order: int, tol: float, k_max: int) -> int:
    """Smallest K with the integral-comparison tail bound below tol.

    Uses |m_k| <= (k*stage)^-N, valid once k*stage >= 1, so
    sum_{k>K} |m_k| <= stage^-N K^(1-N) / (N-1).
    """
    if order < 2:
        raise ValueError("series cutoff rule requires order >= 2")
    log_k = (-math.log(math.pi * tol * (order - 1)) - order * math.log(stage)) / (order - 1)
    k_need = max(int(math.ceil(math.exp(min(log_k, 700.0)))), int(math.ceil(1.0 / stage)) + 1)
    if k_need > k_max:
        raise NonConvergenceError(
            f"kernel series needs {k_need} harmonics to reach tail_tol; k_max={k_max}. "
            f"Loosen tail_tol or raise k_max."
        )
    return k_need


def _series_values(multipliers: np.ndarray, d: np.ndarray) -> np.ndarray:
    k = np.arange(1, multipliers.size + 1, dtype=float)
    out = np.full(d.shape, 1.0 / (2.0 * np.pi))
    step = max(1, 2**22 // max(d.size, 1))
    for lo in range(0, multipliers.size, step):
        kk = k[lo : lo + step]
        out += (np.cos(np.multiply.outer(d, kk)) @ multipliers[lo : lo + step]) / np.pi
    return out


def kernel_eval(spec: KernelSpec, dtheta, opts: EvalOptions | None = None):
    """Kernel value at separation dtheta (scalar or array).

    N = 1 and N = 2 use the exact closed forms (box; two-box convolution);
    N >= 3 sums the Fourier series, truncated where the rigorous tail bound
    drops below opts.tail_tol.  Order 0 is the identity's singular kernel and
    is not evaluable pointwise.
    """
    opts = opts or DEFAULT_OPTIONS
    if spec.order < 1:
        raise ValueError("kernel_eval requires order >= 1 (order 0 is the delta kernel)")
    if spec.variant == "scaled":
        from .scaled import ScaledKernelParams, scaled_kernel_eval

        return scaled_kernel_eval(ScaledKernelParams(spec.range_param, spec.order), dtheta, opts)
    d = _fold(dtheta)
    scalar = d.ndim == 0
    d = np.atleast_1d(d)
    s = stage_range(spec)
    if spec.order == 1:
        out = _box_kernel(d, s)
    elif spec.order == 2:
        out = _two_box_kernel(d, s, s)
    else:
        k_cut = _power_series_cutoff(s, spec.order, opts.tail_tol, opts.k_max)
        out = _series_values(filter_multiplier(np.arange(1, k_cut + 1), spec), d)
    return float(out[0]) if scalar else out


def _uniform_grid_series_values(multipliers: np.ndarray, resolution: int) -> np.ndarray:
    """Series values on theta_j = -pi + 2*pi*j/M via an inverse DFT.

    Requires len(multipliers) < resolution (sub-Nyquist), in which case the
    values are identical to the direct cosine sums up to rounding.
    """
    m = resolution
    if multipliers.size >= m:
        raise ValueError("series must be band-limited below the grid resolution")
    spectrum = np.zeros(m)
    k = np.arange(1, multipliers.size + 1)
    spectrum[k] = multipliers * (-1.0) ** k  # cos(k*theta_j) = Re[(-1)^k w^(jk)]
    return 1.0 / (2.0 * np.pi) + (m / np.pi) * np.fft.ifft(spectrum).real


def kernel_integral(spec: KernelSpec, opts: EvalOptions | None = None) -> float:
    """Periodic trapezoid quadrature of the kernel over one period.

    The kernel is evaluated through its Fourier series truncated below the
    quadrature bandwidth (K = min(k_max, quad_resolution - 1)), so the
    quadrature is alias-free and measures the constant term exactly: every
    retained harmonic integrates to zero on the uniform periodic grid.
    """
    opts = opts or DEFAULT_OPTIONS
    if spec.order < 1:
        raise ValueError("kernel_integral requires order >= 1")
    m = opts.quad_resolution
    k_cut = min(opts.k_max, m - 1)
    mult = filter_multiplier(np.arange(1, k_cut + 1), spec)
    values = _uniform_grid_series_values(mult, m)
    return float(values.sum() * (2.0 * np.pi / m))
