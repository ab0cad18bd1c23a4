"""Exact cotangent power sums S_p(n) = sum_k cot^(2p)(theta_k).

With mu_k the eigenvalues of A_n, cot^2(theta_k) = 4 mu_k - 1, so a binomial
expansion turns S_p(n) into an integer combination of traces tr(A_n^j).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact_matrices import DEFAULT_TRACE_CAP, trace_power
from .spectrum import theta_grid

# the largest p for which the closed form in n is known here
CLOSED_FORM_MAX_P = 2


@dataclass(frozen=True)
class PowerSumReport:
    n: int
    p: int
    value: Fraction
    trace_terms: list[tuple[int, int, int]]  # (j, C(p, j), tr(A_n^j))

    @property
    def extension(self) -> bool:
        """True for p >= 3, where no closed form is checked against."""
        return self.p > CLOSED_FORM_MAX_P


def power_sum(n: int, p: int, cap: int = DEFAULT_TRACE_CAP) -> PowerSumReport:
    if not isinstance(p, int) or p < 1:
        raise ValueError(f"p must be a positive integer, got {p!r}")
    terms = []
    total = 0
    for j in range(p + 1):
        tr = n if j == 0 else trace_power(n, j, cap).value
        c = math.comb(p, j)
        terms.append((j, c, tr))
        total += c * 4**j * (-1) ** (p - j) * tr
    return PowerSumReport(n, p, Fraction(total), terms)


def s1_closed_form(n: int) -> int:
    return 2 * n * n + n


def s2_closed_form_times3(n: int) -> int:
    return 8 * n**4 + 16 * n**3 + 4 * n**2 - n


def _check_n_max(n_max: int) -> None:
    if not isinstance(n_max, int) or n_max < 1:
        raise ValueError(f"n_max must be a positive integer, got {n_max!r}")


def verify_lemma2(n_max: int) -> bool:
    _check_n_max(n_max)
    return all(power_sum(n, 1).value == s1_closed_form(n) for n in range(1, n_max + 1))


def verify_remark(n_max: int) -> bool:
    _check_n_max(n_max)
    return all(
        3 * power_sum(n, 2).value == s2_closed_form_times3(n) for n in range(1, n_max + 1)
    )


def float_power_sum(n: int, p: int) -> float:
    """S_p(n) summed from double-precision cotangents over the angle grid."""
    return math.fsum((1.0 / math.tan(t)) ** (2 * p) for t in theta_grid(n))
