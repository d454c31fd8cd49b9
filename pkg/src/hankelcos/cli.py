"""
Command-line front end.

Commands
--------
eval     one (k, w) point by one or all routes
verify   all routes over a range of w, with pass/fail per point
sweep    one route over a range of w for one or more k (plot-ready CSV)
fit-ab   large-w constants of the reduced equation
fit-cd   constants of the damped log-sine integral from sample pairs
hankel   H0^(2), J0, Y0 at complex arguments with a Wronskian self-check

Exit status: 0 all checks pass, 1 verification failure, 2 configuration
error, 3 I/O error.  Errors print one line on stderr.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .branch import TransformPoint, closed_form_L, greens_spectral
from .errors import DomainError, HankelCosError, NoConvergence
from .quad import transform_L
from .report import Record, VerificationReport, format_csv, format_json
from .route_ode import cd_self_consistency, fit_AB
from .specfun import bessel_j0, bessel_j0_prime, bessel_y0, bessel_y0_prime, hankel2_0

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_IO = 0, 1, 2, 3

_VALUE_OPTS = {"--k", "--w", "--z", "--w-range", "--pairs", "--w-samples", "--tol",
               "--method", "--format", "--output", "--seed", "--exclude", "--samples"}


class ConfigError(Exception):
    """Invalid command-line configuration (exit status 2)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def parse_complex(text: str) -> complex:
    """``"re,im"`` or ``"re"`` to a complex number."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise ConfigError(f"cannot parse complex value {text!r} (expected re,im)")


def parse_range(text: str) -> list[float]:
    """``"start:stop:step"`` to the points ``start, start+step, ... <= stop``."""
    try:
        start, stop, step = (float(p) for p in text.split(":"))
    except ValueError:
        raise ConfigError(f"cannot parse range {text!r} (expected start:stop:step)") from None
    if not step > 0 or stop < start:
        raise ConfigError("w-range needs a positive step and stop >= start")
    n = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [start + i * step for i in range(n)]


def parse_pairs(text: str) -> list[tuple[float, float]]:
    try:
        return [tuple(float(v) for v in item.split(":", 1)) for item in text.split(",")]
    except ValueError:
        raise ConfigError(f"cannot parse pairs {text!r} (expected mu:nu,mu:nu)") from None


def parse_floats(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",")]
    except ValueError:
        raise ConfigError(f"cannot parse list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", default=None, help="report path (default: stdout)")
    common.add_argument("--tol", type=float, default=None, help="pass/fail tolerance")
    common.add_argument("--seed", type=int, default=0)
    parser = _Parser(prog="hankelcos", description="Cosine transform of H0^(2)(kx): evaluation and checks")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate one point", parents=[common])
    p.add_argument("--k", required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--method", choices=("closed", "quad", "green", "all"), default="all")

    for name, method_default in (("verify", "all"), ("sweep", "quad")):
        p = sub.add_parser(name, help=f"{name} over a w range", parents=[common])
        p.add_argument("--k", required=True, action="append", help="repeatable")
        p.add_argument("--w-range", required=True, help="start:stop:step")
        p.add_argument("--method", choices=("closed", "quad", "green", "all"), default=method_default)
        p.add_argument("--exclude", type=float, default=0.1,
                       help="skip points with |w -+ k| below this multiple of |k|")
        p.add_argument("--samples", type=int, default=None,
                       help="draw this many random w in the range (uses --seed)")

    p = sub.add_parser("fit-ab", help="fit the large-w constants A, B", parents=[common])
    p.add_argument("--k", required=True)
    p.add_argument("--w-samples", default="50,100,200,400")

    p = sub.add_parser("fit-cd", help="solve for C, D from sample pairs", parents=[common])
    p.add_argument("--pairs", default="0.5:2,1:3,0.25:1.5")

    p = sub.add_parser("hankel", help="cylinder functions at complex z", parents=[common])
    p.add_argument("--z", required=True, action="append", help="re,im (repeatable)")
    return parser


def _join_negative_values(argv):
    """Rewrite ``--k -1,0`` as ``--k=-1,0`` so argparse does not read a flag."""
    out = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a in _VALUE_OPTS and i + 1 < len(argv) and argv[i + 1].startswith("-") \
                and not argv[i + 1].startswith("--"):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


@dataclass(frozen=True)
class RunConfig:
    command: str
    args: argparse.Namespace
    tol: float
    output_format: str
    output_path: str | None
    seed: int


_DEFAULT_TOL = {"eval": 1e-6, "verify": 1e-6, "sweep": 1e-6, "fit-ab": 1e-3,
                "fit-cd": 1e-6, "hankel": 1e-8}


def parse_config(argv) -> RunConfig:
    args = build_parser().parse_args(_join_negative_values(list(argv)))
    tol = args.tol if args.tol is not None else _DEFAULT_TOL[args.command]
    if not tol > 0:
        raise ConfigError("tolerance must be positive")
    return RunConfig(args.command, args, tol, args.format, args.output, args.seed)


def _threads() -> int:
    raw = os.environ.get("HC_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        n = int(raw)
    except ValueError:
        raise ConfigError(f"HC_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise ConfigError("HC_THREADS must be a positive integer")
    return n


def _route_value(method: str, point: TransformPoint):
    if method == "closed":
        return closed_form_L(point), 0.0
    if method == "green":
        return -2j * greens_spectral(point, 0.0), 0.0
    res = transform_L(point)
    return res.value, res.abs_error_estimate


def _point_records(point: TransformPoint, methods, tol, *, against_closed=False) -> list[Record]:
    """Records for one point; gaps are relative differences between routes.

    With ``against_closed`` each route is compared with the closed form
    only, so a single-route sweep still carries a meaningful gap.
    """
    values = {}
    for m in methods:
        try:
            values[m] = _route_value(m, point)
        except NoConvergence:
            values[m] = (complex(math.nan, math.nan), math.nan)
    refs = {"closed": (closed_form_L(point), 0.0)} if against_closed else values
    out = []
    for m, (v, err) in values.items():
        others = [abs(v - o) / abs(o) for n, (o, _) in refs.items() if n != m]
        gap = max(others) if others else 0.0
        ok = gap <= tol             # False for NaN
        out.append(Record(point.k, point.w, m, complex(v), float(err), gap, ok))
    return out


def _methods(choice: str):
    return ("closed", "quad", "green") if choice == "all" else (choice,)


def run_eval(cfg: RunConfig) -> VerificationReport:
    point = TransformPoint(parse_complex(cfg.args.k), parse_complex(cfg.args.w))
    return VerificationReport(_point_records(point, _methods(cfg.args.method), cfg.tol))


def run_range(cfg: RunConfig) -> VerificationReport:
    ks = [parse_complex(k) for k in cfg.args.k]
    ws = parse_range(cfg.args.w_range)
    if cfg.args.samples is not None:
        if cfg.args.samples < 1:
            raise ConfigError("--samples must be positive")
        rng = np.random.default_rng(cfg.seed)
        ws = sorted(rng.uniform(ws[0], ws[-1], cfg.args.samples).tolist())
    methods = _methods(cfg.args.method)
    sweep = cfg.command == "sweep"
    points, skipped = [], 0
    for k in ks:
        for w in ws:
            if min(abs(w - k), abs(w + k)) < cfg.args.exclude * abs(k):
                skipped += 1
                continue
            points.append(TransformPoint(k, w))
    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        chunks = list(pool.map(
            lambda p: _point_records(p, methods, cfg.tol, against_closed=sweep), points))
    report = VerificationReport([r for chunk in chunks for r in chunk], skipped=skipped)
    return report


def run_fit_ab(cfg: RunConfig) -> VerificationReport:
    k = parse_complex(cfg.args.k)
    samples = parse_floats(cfg.args.w_samples)
    fit = fit_AB(k, samples)
    w_min = complex(min(samples), 0.0)
    recs = [
        Record(k, w_min, "fit-ab:A", fit.A, fit.residual_norm, abs(fit.A - 1j), abs(fit.A - 1j) <= cfg.tol),
        Record(k, w_min, "fit-ab:B", fit.B, fit.residual_norm, abs(fit.B), abs(fit.B) <= cfg.tol),
    ]
    return VerificationReport(recs, extra={"condition_number": fit.condition_number,
                                           "sample_count": fit.sample_count})


def run_fit_cd(cfg: RunConfig) -> VerificationReport:
    pairs = parse_pairs(cfg.args.pairs)
    rep = cd_self_consistency(pairs, tolerance=cfg.tol)
    recs = []
    for fit in rep.fits:
        dev = max([max(abs(fit.C - o.C), abs(fit.D - o.D)) for o in rep.fits if o is not fit],
                  default=0.0)
        recs.append(Record(0j, complex(*fit.pair), "fit-cd", complex(fit.C, fit.D),
                           fit.abs_error_estimate, dev, dev <= cfg.tol))
    for pair, msg in rep.failures:
        recs.append(Record(0j, complex(*pair), "fit-cd", complex(math.nan, math.nan),
                           math.nan, math.nan, False))
    extra = {"max_dev_C": rep.max_dev_C, "max_dev_D": rep.max_dev_D}
    if rep.fits:
        extra["C"] = float(np.mean([f.C for f in rep.fits]))
        extra["D"] = float(np.mean([f.D for f in rep.fits]))
    if rep.warning:
        extra["warning"] = rep.warning
    return VerificationReport(recs, extra=extra)


def run_hankel(cfg: RunConfig) -> VerificationReport:
    recs = []
    for text in cfg.args.z:
        z = parse_complex(text)
        if z == 0:
            raise DomainError("z = 0 is a singular point")
        j, y = bessel_j0(z), bessel_y0(z)
        wr = j * bessel_y0_prime(z) - bessel_j0_prime(z) * y
        gap = abs(wr * math.pi * z / 2 - 1)
        for name, value in (("h2", hankel2_0(z)), ("j0", j), ("y0", y)):
            recs.append(Record(z, 0j, name, value, 0.0, gap, gap <= cfg.tol))
    return VerificationReport(recs)


_COMMANDS = {"eval": run_eval, "verify": run_range, "sweep": run_range,
             "fit-ab": run_fit_ab, "fit-cd": run_fit_cd, "hankel": run_hankel}


def run(cfg: RunConfig) -> tuple[int, VerificationReport]:
    report = _COMMANDS[cfg.command](cfg)
    return (EXIT_OK if report.passed else EXIT_FAIL), report


def emit_report(report: VerificationReport, fmt: str, path: str | None) -> None:
    text = format_csv(report.records) if fmt == "csv" else format_json(report)
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _one_line(exc: Exception) -> str:
    text = str(exc)
    return text.splitlines()[0] if text else type(exc).__name__


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_config(argv)
        status, report = run(cfg)
    except NoConvergence as exc:
        print(f"verification failed: {_one_line(exc)}", file=sys.stderr)
        return EXIT_FAIL
    except (ConfigError, HankelCosError, ValueError) as exc:
        print(f"error: {_one_line(exc)}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        emit_report(report, cfg.output_format, cfg.output_path)
    except OSError as exc:
        print(f"io error: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    if status == EXIT_FAIL:
        s = report.summary()
        print(f"verification failed: {s['failed']} of {s['records']} records exceed tolerance",
              file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
