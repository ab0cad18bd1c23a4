"""Exit criteria.  Each test prints one PASS/FAIL line, visible without -s."""
import math
import random
import time

import numpy as np
import pytest

from basel_linalg.bounds import (
    default_ladder,
    literal_squeeze_p1,
    odd_sum_enclosure,
    partial_sum,
    squeeze_table,
    zeta_enclosure,
)
from basel_linalg.cli import RunConfig, run
from basel_linalg.cot_sums import power_sum
from basel_linalg.determinant import dense_determinant, eval_closed_form, eval_recurrence, verify_zero_set
from basel_linalg.exact_matrices import trace_power, verify_inverse
from basel_linalg.report import to_csv, to_json
from basel_linalg.spectrum import spectrum_report
from oracles import dense_a, matmul, trace

pytestmark = pytest.mark.acceptance


@pytest.fixture
def verdict(capsys):
    def report(label, ok, detail=""):
        with capsys.disabled():
            print(f"\n[acceptance] {label}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
        assert ok, f"{label} {detail}"

    return report


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_c1_exact_inverse(verdict):
    ok, secs = _timed(lambda: all(verify_inverse(n) for n in range(1, 101)))
    verdict("C1 exact inverse n=1..100", ok and secs < 5, f"({secs:.2f} s, limit 5 s)")


def test_c2_s1_exact(verdict):
    ok, secs = _timed(lambda: all(power_sum(n, 1).value == 2 * n * n + n for n in range(1, 201)))
    verdict("C2 S_1(n) = 2n^2+n, n=1..200", ok and secs < 1, f"({secs:.3f} s, limit 1 s)")


def test_c3_s2_exact(verdict):
    ok, secs = _timed(lambda: all(
        3 * power_sum(n, 2).value == 8 * n**4 + 16 * n**3 + 4 * n**2 - n for n in range(1, 201)
    ))
    verdict("C3 3 S_2(n) = 8n^4+16n^3+4n^2-n, n=1..200", ok and secs < 1, f"({secs:.3f} s, limit 1 s)")


def test_c4_determinant_agreement(verdict):
    def check():
        rng = random.Random(42)
        thetas = [rng.uniform(0.01, math.pi / 2 - 0.05) for _ in range(200)]
        worst = 0.0
        for n in range(1, 51):
            for t in thetas:
                if abs(math.cos(t)) < 1e-3:
                    continue
                cf = eval_closed_form(n, t)
                worst = max(worst, abs(eval_recurrence(n, t) - cf) / max(1.0, abs(cf)))
        worst_dense = 0.0
        for n in range(1, 9):
            for t in thetas[:20]:
                d = dense_determinant(n, t)
                worst_dense = max(worst_dense, abs(eval_recurrence(n, t) - d) / max(1.0, abs(d)))
        return worst, worst_dense

    (worst, worst_dense), secs = _timed(check)
    ok = worst <= 1e-9 and worst_dense <= 1e-9 and secs < 5
    verdict(
        "C4 determinant recurrence vs closed form / dense oracle",
        ok, f"(max rel {worst:.2e} / {worst_dense:.2e}, tol 1e-9, {secs:.2f} s)",
    )


def test_c5_eigenvalue_cross_validation(verdict):
    def check():
        return {n: spectrum_report(n).max_abs_error for n in (1, 2, 4, 8, 16, 32, 64)}

    errors, secs = _timed(check)
    worst = max(errors.values())
    verdict("C5 closed-form vs bisection eigenvalues", worst <= 1e-10 and secs < 10,
            f"(max abs {worst:.2e}, tol 1e-10, {secs:.2f} s)")


def test_c6_zeta2_enclosure(verdict):
    def check():
        enc = zeta_enclosure(10**6, 1)
        ladder = default_ladder(1)
        literal = all(literal_squeeze_p1(n, partial_sum(n, 1).value) for n in ladder)
        strict = all(row.contains_partial for row in squeeze_table(1, ladder))
        return enc, literal and strict

    (enc, squeeze_ok), secs = _timed(check)
    ok = enc.contains(math.pi**2 / 6) and enc.width <= 1e-6 and squeeze_ok and secs < 10
    verdict("C6 zeta(2) enclosure at n=1e6", ok,
            f"([{enc.lower!r}, {enc.upper!r}], width {enc.width:.3e}, {secs:.2f} s)")


def test_c7_zeta4_enclosure(verdict):
    enc, secs = _timed(lambda: zeta_enclosure(10**4, 2))
    ok = enc.contains(math.pi**4 / 90) and enc.width <= 1e-6 and secs < 5
    verdict("C7 zeta(4) enclosure at n=1e4", ok,
            f"([{enc.lower!r}, {enc.upper!r}], width {enc.width:.3e}, {secs:.2f} s)")


def test_c8_zero_set(verdict):
    ok = all(verify_zero_set(n) for n in range(1, 65))
    verdict("C8 zero set n=1..64", ok)


def test_c9_property_suite(verdict):
    failures = []

    for n in range(1, 301):
        idx = np.arange(1, n + 1, dtype=np.int64)
        a = n + 1 - np.maximum.outer(idx, idx)
        if trace_power(n, 2).value != int((a * a).sum()):
            failures.append(f"tr(A^2) n={n}")

    for n in range(1, 51):
        a = dense_a(n)
        power = a
        for p in range(1, 5):
            if p > 1:
                power = matmul(power, a)
            if trace_power(n, p).value != trace(power):
                failures.append(f"tr(A^{p}) n={n}")

    for p, ladder in ((1, default_ladder(1)), (2, default_ladder(2)), (3, [1, 4, 16, 64, 256])):
        for enc_fn in (odd_sum_enclosure, zeta_enclosure):
            widths = [enc_fn(n, p).width for n in ladder]
            if not all(b < a for a, b in zip(widths, widths[1:])):
                failures.append(f"width p={p} {enc_fn.__name__}")

    config = RunConfig("zeta", p=1, ladder=(10, 100, 1000), output_format="csv")
    if to_csv(run(config)[0]) != to_csv(run(config)[0]):
        failures.append("csv determinism")
    config = RunConfig("verify", n_max=30, seed=42, output_format="json")
    if to_json(run(config)[0]) != to_json(run(config)[0]):
        failures.append("json determinism")

    verdict("C9 property suite", not failures, f"{failures}" if failures else "")
