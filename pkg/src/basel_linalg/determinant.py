"""The determinant family D_n(theta) = det(4 sin^2(theta) I_n - B_n).

Three routes to the same function are provided: the three-term recurrence,
the closed form ``(-1)^n cos((2n+1) theta) / cos(theta)`` and the
alternating cosine sum ``1 + 2 sum_j (-1)^j cos(2 j theta)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact_matrices import Kind, build_matrix
from .spectrum import theta_grid

ZERO_TOL = 1e-9
SEPARATION_TOL = 1e-12
POLE_TOL = 1e-12


class PoleError(ZeroDivisionError):
    pass


def _check(n: int, theta: float) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if not (0.0 < theta < math.pi / 2):
        raise ValueError(f"theta must lie in (0, pi/2), got {theta!r}")


def eval_recurrence(n: int, theta: float) -> float:
    _check(n, theta)
    c2 = math.cos(2 * theta)
    d1 = 1.0 - 2.0 * c2
    if n == 1:
        return d1
    d2 = 1.0 - 2.0 * c2 + 2.0 * math.cos(4 * theta)
    coeff = 4.0 * math.sin(theta) ** 2 - 2.0
    prev, cur = d1, d2
    for _ in range(3, n + 1):
        prev, cur = cur, coeff * cur - prev
    return cur


def eval_closed_form(n: int, theta: float) -> float:
    _check(n, theta)
    c = math.cos(theta)
    if abs(c) < POLE_TOL:
        raise PoleError(f"cos(theta) = {c!r} is too close to the pole at pi/2")
    sign = -1.0 if n % 2 else 1.0
    return sign * math.cos((2 * n + 1) * theta) / c


def eval_cosine_sum(n: int, theta: float) -> float:
    _check(n, theta)
    terms = [1.0] + [
        (-2.0 if j % 2 else 2.0) * math.cos(2 * j * theta) for j in range(1, n + 1)
    ]
    return math.fsum(terms)


@dataclass(frozen=True)
class DeterminantEval:
    n: int
    theta: float
    by_recurrence: float
    by_closed_form: float

    @property
    def relative_gap(self) -> float:
        return abs(self.by_recurrence - self.by_closed_form) / max(
            1.0, abs(self.by_closed_form)
        )


def evaluate(n: int, theta: float) -> DeterminantEval:
    return DeterminantEval(n, theta, eval_recurrence(n, theta), eval_closed_form(n, theta))


def verify_zero_set(n: int) -> bool:
    angles = theta_grid(n).angles
    if any(abs(eval_closed_form(n, t)) > ZERO_TOL for t in angles):
        return False
    shifts = sorted(4.0 * math.sin(t) ** 2 for t in angles)
    return all(b - a > SEPARATION_TOL for a, b in zip(shifts, shifts[1:]))


def exact_determinant(rows: list[list[Fraction]]) -> Fraction:
    """Determinant by Gaussian elimination over the rationals (no rounding)."""
    a = [list(map(Fraction, r)) for r in rows]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def dense_determinant(n: int, theta: float) -> float:
    """det(4 sin^2(theta) I_n - B_n) from the dense matrix, exactly in the
    rational value of the double ``4 sin^2(theta)``."""
    _check(n, theta)
    s = Fraction(4.0 * math.sin(theta) ** 2)
    b = build_matrix(n, Kind.B)
    rows = [
        [(s if i == j else 0) - b.entry(i, j) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    return float(exact_determinant(rows))
