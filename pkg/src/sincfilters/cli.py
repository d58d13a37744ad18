"""Command-line surface: kernel/waveform data files and batch filtering.

Every command writes plain CSV (theta,value or k,coefficient) or JSON with
floats at 17 significant digits, so identical invocations produce
byte-identical files.  Exit codes: 0 success, 1 usage or precondition error,
2 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import InsufficientOrderError, NonConvergenceError
from .filters import KernelSpec, VARIANTS, apply_filter_coeffs, kernel_eval, kernel_integral
from .oracle import OracleConfig, oracle_iterated_filter, oracle_moving_average
from .scaled import (
    ScaledKernelParams,
    apply_scaled_filter,
    invariant_points,
    scaled_coefficient,
    scaled_kernel_derivative,
    scaled_kernel_eval,
    _scaled_series_cutoff,
)
from .series import (
    EvalOptions,
    WAVEFORMS,
    load_coefficients,
    make_waveform,
    render_signal,
    save_coefficients,
    theta_grid,
)

__all__ = ["RunConfig", "run", "main", "console_main"]

# Figure-style sweeps: exponentially growing N per variant, linear for scaled.
SWEEP_LISTS = {
    "naive": [2**i for i in range(8)],
    "fixed": [2**i for i in range(14)],
    "gaussian": [2**i for i in range(11)],
    "scaled": list(range(1, 11)),
}


@dataclass
class RunConfig:
    command: str
    eps: float = 0.5
    order: int = 100
    variant: str = "fixed"
    kind: str = "square"
    points: int = 1024
    k_max: int = 2**20
    tail_tol: float = 1e-12
    deriv_order: int = 1
    out: str | None = None
    infile: str | None = None

    def options(self) -> EvalOptions:
        return EvalOptions(k_max=self.k_max, tail_tol=self.tail_tol, quad_resolution=2**14)


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; we use 1
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _write_rows(path: str, header: tuple[str, str], xs, ys) -> None:
    lines = [f"{header[0]},{header[1]}"]
    lines += [f"{x:.17g},{y:.17g}" for x, y in zip(xs, ys)]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def _cmd_kernel(cfg: RunConfig) -> int:
    spec = KernelSpec(cfg.order, cfg.eps, cfg.variant)
    grid = theta_grid(cfg.points)
    values = kernel_eval(spec, grid, cfg.options())
    _write_rows(cfg.out, ("theta", "value"), grid, values)
    return 0


def _cmd_scaled_kernel(cfg: RunConfig) -> int:
    params = ScaledKernelParams(cfg.eps, cfg.order)
    grid = theta_grid(cfg.points)
    values = scaled_kernel_eval(params, grid, cfg.options())
    _write_rows(cfg.out, ("theta", "value"), grid, values)
    return 0


def _cmd_derivative(cfg: RunConfig) -> int:
    params = ScaledKernelParams(cfg.eps, cfg.order)
    grid = theta_grid(cfg.points)
    values = scaled_kernel_derivative(params, cfg.deriv_order, grid, cfg.options())
    _write_rows(cfg.out, ("theta", "value"), grid, values)
    return 0


def _waveform_cutoff(cfg: RunConfig) -> int:
    if cfg.order >= 3:
        return _scaled_series_cutoff(cfg.eps, cfg.order, 0, cfg.tail_tol, cfg.k_max)
    return cfg.k_max


def _cmd_waveform(cfg: RunConfig) -> int:
    coeffs = make_waveform(cfg.kind, _waveform_cutoff(cfg))
    if cfg.order > 0:
        coeffs = apply_scaled_filter(coeffs, ScaledKernelParams(cfg.eps, cfg.order))
    signal = render_signal(coeffs, cfg.points, cfg.options())
    _write_rows(cfg.out, ("theta", "value"), signal.thetas(), signal.values)
    return 0


def _cmd_filter(cfg: RunConfig) -> int:
    if not cfg.infile:
        raise _UsageError("filter requires --in with a coefficient JSON file")
    coeffs = load_coefficients(cfg.infile)
    spec = KernelSpec(cfg.order, cfg.eps, cfg.variant)
    filtered = apply_filter_coeffs(coeffs, spec)
    if cfg.out.endswith(".json"):
        save_coefficients(filtered, cfg.out)
    else:
        _write_rows(
            cfg.out,
            ("k", "coefficient"),
            np.arange(1, len(filtered) + 1),
            filtered.coeffs,
        )
    return 0


def _cmd_invariants(cfg: RunConfig) -> int:
    pts = invariant_points(cfg.eps)
    _write_rows(cfg.out, ("theta", "value"), [p[0] for p in pts], [p[1] for p in pts])
    return 0


def _sweep_values(cfg: RunConfig, n: int, grid: np.ndarray, opts: EvalOptions) -> np.ndarray:
    if cfg.variant == "scaled":
        return scaled_kernel_eval(ScaledKernelParams(cfg.eps, n), grid, opts)
    try:
        return kernel_eval(KernelSpec(n, cfg.eps, cfg.variant), grid, opts)
    except ValueError:
        # Total range beyond the period: no compact support, but the kernel's
        # series is still the curve the figures show.  Needs n >= 3 to truncate.
        from .filters import _power_series_cutoff, _series_values, sinc

        stage = cfg.eps if cfg.variant == "naive" else cfg.eps / np.sqrt(n)
        k_cut = _power_series_cutoff(stage, n, opts.tail_tol, opts.k_max)
        mult = sinc(np.arange(1, k_cut + 1) * stage) ** n
        return _series_values(mult, np.abs(grid))


def _cmd_sweep(cfg: RunConfig) -> int:
    out_dir = Path(cfg.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    grid = theta_grid(cfg.points)
    opts = cfg.options()
    for n in SWEEP_LISTS[cfg.variant]:
        values = _sweep_values(cfg, n, grid, opts)
        _write_rows(out_dir / f"kernel_{cfg.variant}_N{n}.csv", ("theta", "value"), grid, values)
    return 0


def _cmd_selfcheck(cfg: RunConfig) -> int:
    checks: list[tuple[str, float, float]] = []  # (name, error, tolerance)
    eps = 0.5
    ocfg = OracleConfig(resolution=2000)

    harmonic = oracle_moving_average(lambda t: np.cos(3 * t), 0.7, eps, ocfg)
    from .filters import sinc

    checks.append(("harmonic eigenvalue", abs(harmonic - sinc(3 * eps) * np.cos(2.1)), 1e-9))

    depth2 = oracle_iterated_filter(
        lambda t: np.cos(2 * t), 0.3, [eps / 2, eps / 2], OracleConfig(resolution=600)
    )
    checks.append(("two-stage eigenvalue", abs(depth2 - sinc(eps) ** 2 * np.cos(0.6)), 1e-8))

    for spec in (KernelSpec(1, eps, "naive"), KernelSpec(2, eps), KernelSpec(4, eps)):
        checks.append(
            (f"unit integral N={spec.order} ({spec.variant})",
             abs(kernel_integral(spec) - 1.0), 1e-10)
        )

    params = ScaledKernelParams(eps, 50)
    for theta, expected in invariant_points(eps):
        checks.append(
            (f"invariant point theta={theta:+.3g}",
             abs(scaled_kernel_eval(params, theta) - expected), 1e-9)
        )

    k = np.arange(1, 200)
    stages = scaled_coefficient(k, ScaledKernelParams(eps, 30))
    direct = np.ones_like(stages)
    for n in range(1, 31):
        direct = direct * sinc(k * eps / 2**n)
    checks.append(("scaled coefficient product", float(np.abs(stages - direct).max()), 1e-15))

    failed = 0
    for name, err, tol in checks:
        ok = err <= tol
        failed += 0 if ok else 1
        print(f"{'PASS' if ok else 'FAIL'}  {name}: error {err:.3g} (tol {tol:g})")
    print(f"selfcheck: {len(checks) - failed}/{len(checks)} passed")
    return 0 if failed == 0 else 2


_COMMANDS = {
    "kernel": _cmd_kernel,
    "scaled-kernel": _cmd_scaled_kernel,
    "derivative": _cmd_derivative,
    "filter": _cmd_filter,
    "waveform": _cmd_waveform,
    "invariants": _cmd_invariants,
    "sweep": _cmd_sweep,
    "selfcheck": _cmd_selfcheck,
}


def run(cfg: RunConfig) -> int:
    """Dispatch a validated RunConfig; returns the process exit code."""
    if cfg.command not in _COMMANDS:
        raise _UsageError(f"unknown command {cfg.command!r}")
    if cfg.command != "selfcheck" and not cfg.out:
        raise _UsageError(f"{cfg.command} requires --out")
    return _COMMANDS[cfg.command](cfg)


def _build_parser() -> _Parser:
    parser = _Parser(prog="sincfilters", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, **flags) -> None:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--eps", type=float, default=0.5, help="range parameter in radians")
        p.add_argument("--N", dest="order", type=int, default=flags.get("default_order", 100),
                       help="filter order / construction steps")
        p.add_argument("--variant", choices=VARIANTS, default="fixed")
        p.add_argument("--kind", choices=WAVEFORMS, default="square")
        p.add_argument("--points", type=int, default=1024, help="output grid resolution")
        p.add_argument("--kmax", dest="k_max", type=int, default=2**20)
        p.add_argument("--tol", dest="tail_tol", type=float,
                       default=flags.get("default_tol", 1e-12),
                       help="absolute series tail bound")
        p.add_argument("--order", dest="deriv_order", type=int, default=1,
                       help="derivative order (derivative command)")
        p.add_argument("--in", dest="infile", default=None, help="input coefficient JSON")
        p.add_argument("--out", default=None, help="output file (or directory for sweep)")

    add("kernel", "order-N kernel over one period as theta,value CSV", default_order=1)
    add("scaled-kernel", "scaled kernel over one period as theta,value CSV")
    add("derivative", "term-wise scaled-kernel derivative as theta,value CSV")
    add("filter", "apply a filter to a coefficient JSON file", default_order=1)
    add("waveform", "scaled-filtered square/sawtooth/triangle wave as CSV")
    add("invariants", "the five invariant points of the scaled kernel as CSV")
    # N=3 in the scaled sweep cannot reach 1e-12 within any practical k_max;
    # 1e-9 is far below plotting resolution.
    add("sweep", "one kernel CSV per N in the figure lists", default_tol=1e-9)
    add("selfcheck", "run the built-in oracle-agreement checks")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
        cfg = RunConfig(
            command=ns.command,
            eps=ns.eps,
            order=ns.order,
            variant=ns.variant,
            kind=ns.kind,
            points=ns.points,
            k_max=ns.k_max,
            tail_tol=ns.tail_tol,
            deriv_order=ns.deriv_order,
            out=ns.out,
            infile=ns.infile,
        )
        return run(cfg)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, InsufficientOrderError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NonConvergenceError as exc:
        print(f"non-convergence: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
