"""Command-line front end: ``basel-linalg verify | spectrum | sums | zeta | all``.

Exit status is 0 when every check passes, 1 when any check fails and 2 on
usage errors.  CSV and JSON outputs are byte-identical for identical flags.
"""
from __future__ import annotations

import argparse
import math
import random
import sys
import time
from dataclasses import asdict, dataclass

from . import bounds, cot_sums, determinant, exact_matrices, spectrum
from .exact_matrices import Kind, TraceCapExceeded
from .report import RENDERERS, CheckRecord, VerificationReport

COMMANDS = ("verify", "spectrum", "sums", "zeta", "all")

DEFAULT_VERIFY_N_MAX = 100
DEFAULT_SUMS_N_MAX = 200
DEFAULT_SPECTRUM_N_MAX = 64
FLOAT_SUM_MAX_N = 512

DETERMINANT_TOL = 1e-9
SPECTRUM_TOL = 1e-10
GAP_TOL = 1e-10
FLOAT_SUM_TOL = 1e-9

REFERENCE_ZETA = {1: math.pi**2 / 6, 2: math.pi**4 / 90}
ZETA_CSV_COLUMNS = ["n", "partial_sum", "lower", "upper", "width", "contains_partial"]


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int | None = None
    n_max: int | None = None
    p: int = 1
    ladder: tuple[int, ...] | None = None
    output_format: str = "table"
    output_path: str | None = None
    seed: int = 42

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.output_format not in RENDERERS:
            raise UsageError(f"unknown format {self.output_format!r}")
        for name in ("n", "n_max"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise UsageError(f"--{name.replace('_', '-')} must be positive, got {v}")
        if self.p < 1:
            raise UsageError(f"--p must be positive, got {self.p}")
        if self.seed < 0:
            raise UsageError(f"--seed must be non-negative, got {self.seed}")
        if self.ladder is not None:
            lad = tuple(self.ladder)
            if not lad or any(v < 1 for v in lad):
                raise UsageError(f"--ladder entries must be positive, got {list(lad)}")
            if any(b <= a for a, b in zip(lad, lad[1:])):
                raise UsageError(f"--ladder must be strictly ascending, got {list(lad)}")
            object.__setattr__(self, "ladder", lad)

    def stable_dict(self) -> dict:
        d = asdict(self)
        del d["output_path"]  # destination does not change content
        d["ladder"] = list(self.ladder) if self.ladder is not None else None
        return d


class _Checker:
    """Collects check records for one suite; ``scale`` rescales tolerances."""

    def __init__(self, report: VerificationReport, suite: str, scale: float):
        self.report, self.suite, self.scale = report, suite, scale

    def exact(self, name: str, ok: bool, **params) -> None:
        self.report.checks.append(CheckRecord(self.suite, name, params, bool(ok)))

    def within(self, name: str, error: float, tol: float, **params) -> None:
        tol = tol * self.scale
        self.report.checks.append(
            CheckRecord(self.suite, name, params, bool(error <= tol), float(error), tol)
        )


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(1.0, abs(b))


def verify_suite(n_max: int, seed: int, scale: float = 1.0) -> VerificationReport:
    rep = VerificationReport("verify", {})
    chk = _Checker(rep, "verify", scale)
    rng = random.Random(seed)

    for n in range(1, n_max + 1):
        chk.exact("inverse", exact_matrices.verify_inverse(n), n=n)
    for n in range(1, n_max + 1):
        tr2 = exact_matrices.trace_power(n, 2).value
        chk.exact("trace_p2_closed_form", tr2 == n * (n + 1) * (n * n + n + 1) // 6, n=n)
    for n in range(1, n_max + 1):
        chk.exact("s1_closed_form", cot_sums.power_sum(n, 1).value == cot_sums.s1_closed_form(n), n=n)
    for n in range(1, n_max + 1):
        chk.exact(
            "s2_closed_form",
            3 * cot_sums.power_sum(n, 2).value == cot_sums.s2_closed_form_times3(n),
            n=n,
        )
    for n in range(1, n_max + 1):
        chk.exact("zero_set", determinant.verify_zero_set(n), n=n)

    thetas = [rng.uniform(0.01, math.pi / 2 - 0.05) for _ in range(200)]
    for n in range(1, min(n_max, 50) + 1):
        err = max(determinant.evaluate(n, t).relative_gap for t in thetas)
        chk.within("determinant_agreement", err, DETERMINANT_TOL, n=n)
    dense_thetas = thetas[:20]
    for n in range(1, min(n_max, 8) + 1):
        err = max(
            _rel(determinant.eval_recurrence(n, t), determinant.dense_determinant(n, t))
            for t in dense_thetas
        )
        chk.within("determinant_dense_oracle", err, DETERMINANT_TOL, n=n)

    premise = [rng.uniform(1e-6, math.pi / 2 - 0.01) for _ in range(100)]
    chk.exact("squeeze_premise", all(bounds.premise_holds(t) for t in premise))
    return rep


def spectrum_suite(ns: list[int], scale: float = 1.0) -> VerificationReport:
    rep = VerificationReport(
        "spectrum", {}, csv_columns=["n", "k", "closed_form", "bisection", "abs_error"]
    )
    chk = _Checker(rep, "spectrum", scale)
    for n in ns:
        sr = spectrum.spectrum_report(n)
        chk.within("bisection_vs_closed_form", sr.max_abs_error, SPECTRUM_TOL, n=n)
        diag, off = exact_matrices.build_matrix(n, Kind.B).bands()
        lo = spectrum.sturm_count(diag, off, 0.0)
        hi = spectrum.sturm_count(diag, off, 4.0)
        chk.exact("sturm_count_bracket", lo == 0 and hi == n, n=n)
        eigs = sr.closed_form_eigs_B
        gap = min((b - a for a, b in zip(eigs, eigs[1:])), default=math.inf)
        chk.exact("distinct_eigenvalues", gap > GAP_TOL, n=n)
        for k, (a, b) in enumerate(zip(eigs, sr.numeric_eigs_B), start=1):
            rep.data.append({
                "suite": "spectrum", "n": n, "k": k,
                "closed_form": a, "bisection": b, "abs_error": abs(a - b),
            })
    return rep


def sums_suite(n_max: int, p: int, scale: float = 1.0) -> VerificationReport:
    rep = VerificationReport(
        "sums", {},
        csv_columns=["n", "p", "value", "float_value", "rel_error", "extension"],
    )
    chk = _Checker(rep, "sums", scale)
    for n in range(1, n_max + 1):
        r = cot_sums.power_sum(n, p)
        if p == 1:
            chk.exact("s1_closed_form", r.value == cot_sums.s1_closed_form(n), n=n, p=p)
        elif p == 2:
            chk.exact("s2_closed_form", 3 * r.value == cot_sums.s2_closed_form_times3(n), n=n, p=p)
        row = {"suite": "sums", "n": n, "p": p, "value": r.value,
               "float_value": None, "rel_error": None, "extension": r.extension}
        if n <= FLOAT_SUM_MAX_N:
            fv = cot_sums.float_power_sum(n, p)
            err = abs(fv - float(r.value)) / float(r.value)
            chk.within("float_cross_check", err, FLOAT_SUM_TOL, n=n, p=p)
            row.update(float_value=fv, rel_error=err)
        rep.data.append(row)
    return rep


def _enclosure_dict(e: bounds.ZetaEnclosure) -> dict:
    return {
        "target": e.target.value, "p": e.p, "n": e.n,
        "lower": e.lower, "upper": e.upper, "width": e.width,
        "lower_coef": e.lower_coef, "squeeze_upper_coef": e.squeeze_upper_coef,
        "provenance": dict(e.provenance),
    }


def zeta_suite(p: int, ladder: list[int], scale: float = 1.0) -> VerificationReport:
    rep = VerificationReport("zeta", {}, csv_columns=list(ZETA_CSV_COLUMNS))
    chk = _Checker(rep, "zeta", scale)
    rows = bounds.squeeze_table(p, ladder)
    for row in rows:
        enc = row.enclosure
        chk.exact("squeeze_contains_partial", row.contains_partial, n=row.n, p=p)
        if p == 1:
            chk.exact("literal_squeeze", bounds.literal_squeeze_p1(row.n, row.partial.value), n=row.n, p=p)
        rep.data.append({
            "suite": "zeta", "n": row.n, "p": p, "partial_sum": row.partial.value,
            "lower": enc.lower, "upper": enc.upper, "width": enc.width,
            "contains_partial": row.contains_partial,
        })
    widths = [r.enclosure.width for r in rows]
    chk.exact("monotone_width", all(b < a for a, b in zip(widths, widths[1:])), p=p)

    final = bounds.zeta_enclosure(ladder[-1], p)
    rep.enclosures.append(_enclosure_dict(final))
    if p in REFERENCE_ZETA:
        chk.exact("limit_capture", final.contains(REFERENCE_ZETA[p]), n=final.n, p=p)
    return rep


def _timed(name: str, fn, *args, **kwargs) -> VerificationReport:
    t0 = time.perf_counter()
    rep = fn(*args, **kwargs)
    rep.wall_time[name] = time.perf_counter() - t0
    return rep


def _powers_of_two(limit: int) -> list[int]:
    out, k = [], 1
    while k <= limit:
        out.append(k)
        k *= 2
    return out


def run(config: RunConfig, tolerance_scale: float = 1.0) -> tuple[VerificationReport, int]:
    """Run one command.  ``tolerance_scale`` multiplies every float tolerance
    and exists so tests can force failures."""
    cmd, s = config.command, tolerance_scale
    try:
        if cmd == "verify":
            rep = _timed("verify", verify_suite, config.n_max or DEFAULT_VERIFY_N_MAX, config.seed, s)
        elif cmd == "spectrum":
            ns = [config.n] if config.n else _powers_of_two(config.n_max or DEFAULT_SPECTRUM_N_MAX)
            rep = _timed("spectrum", spectrum_suite, ns, s)
        elif cmd == "sums":
            n_max = config.n_max or config.n or DEFAULT_SUMS_N_MAX
            if config.p >= 3 and n_max > exact_matrices.DEFAULT_TRACE_CAP:
                raise TraceCapExceeded(n_max, config.p, exact_matrices.DEFAULT_TRACE_CAP)
            rep = _timed(f"sums_p{config.p}", sums_suite, n_max, config.p, s)
        elif cmd == "zeta":
            if config.ladder:
                ladder = list(config.ladder)
            elif config.n:
                ladder = [config.n]
            else:
                ladder = bounds.default_ladder(config.p)
            if config.p >= 3 and ladder[-1] > exact_matrices.DEFAULT_TRACE_CAP:
                raise TraceCapExceeded(ladder[-1], config.p, exact_matrices.DEFAULT_TRACE_CAP)
            rep = _timed(f"zeta_p{config.p}", zeta_suite, config.p, ladder, s)
        else:
            rep = VerificationReport("all", {})
            rep.extend(_timed("verify", verify_suite, DEFAULT_VERIFY_N_MAX, config.seed, s))
            rep.extend(_timed("spectrum", spectrum_suite, _powers_of_two(DEFAULT_SPECTRUM_N_MAX), s))
            for p in (1, 2):
                rep.extend(_timed(f"sums_p{p}", sums_suite, DEFAULT_SUMS_N_MAX, p, s))
            for p in (1, 2):
                rep.extend(_timed(f"zeta_p{p}", zeta_suite, p, bounds.default_ladder(p), s))
            # mixed data rows have no single CSV layout; CSV falls back to checks
            rep.csv_columns = None
    except TraceCapExceeded as exc:
        raise UsageError(str(exc)) from exc
    rep.suite = cmd
    rep.config = config.stable_dict()
    return rep, 0 if rep.passed else 1


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _non_negative_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _ladder(text: str) -> tuple[int, ...]:
    return tuple(_positive_int(part.strip()) for part in text.split(","))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_positive_int, help="single matrix order")
    common.add_argument("--n-max", type=_positive_int, help="largest order in a sweep")
    common.add_argument("--p", type=_positive_int, default=1, help="power: sums of 1/m^(2p)")
    common.add_argument("--ladder", type=_ladder, help="comma-separated ascending n values")
    common.add_argument("--format", dest="output_format", choices=sorted(RENDERERS), default="table")
    common.add_argument("--out", dest="output_path", help="write the report here instead of stdout")
    common.add_argument("--seed", type=_non_negative_int, default=42)

    parser = argparse.ArgumentParser(
        prog="basel-linalg",
        description="Exact checks of the A_n / B_n matrix identities and squeeze enclosures of zeta(2p).",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "verify": "exact inverse, trace, cotangent-sum and determinant checks",
        "spectrum": "closed-form eigenvalues of B_n against Sturm bisection",
        "sums": "exact cotangent power sums S_p(n) for n = 1..n_max",
        "zeta": "squeeze table and the final zeta(2p) enclosure",
        "all": "every suite at default sizes",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config_args = vars(args).copy()
    try:
        config = RunConfig(**config_args)
        report, status = run(config)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2

    text = RENDERERS[config.output_format](report)
    if config.output_path:
        with open(config.output_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for name, secs in report.wall_time.items():
        print(f"{name}: {secs:.3f} s", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
