"""Squeeze bounds for sums of 1/m^(2p) and enclosures of zeta(2p).

From cot^2(t) < 1/t^2 < cot^2(t) + 1 on (0, pi/2), evaluated at the
angles t_k = (2k - 1) pi / (2 (2n + 1)), the odd partial sum

    P_p(n) = sum_{k <= n} 1/(2k - 1)^(2p)

is trapped between (pi / (2(2n+1)))^(2p) * S_p(n) and
(pi / (2(2n+1)))^(2p) * 4^p tr(A_n^p).  Both bounds are pi^(2p) times an
exact rational; they are converted to floats with directed rounding and a
further 4 ulp of outward slack.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cot_sums import power_sum
from .exact_matrices import DEFAULT_TRACE_CAP, trace_power

SLACK_ULPS = 4
LITERAL_SLACK = 1e-12

_PI_LO = Fraction("3.1415926535897932384626433832795028841971")
_PI_HI = _PI_LO + Fraction(1, 10**40)


class Target(str, enum.Enum):
    ODD_SUM = "odd_sum"
    FULL_ZETA = "full_zeta"


def _widen(x: float, direction: float, ulps: int = SLACK_ULPS) -> float:
    for _ in range(ulps):
        x = math.nextafter(x, direction)
    return x


def _float_down(q: Fraction) -> float:
    f = float(q)  # correctly rounded
    return math.nextafter(f, -math.inf) if Fraction(f) > q else f


def _float_up(q: Fraction) -> float:
    f = float(q)
    return math.nextafter(f, math.inf) if Fraction(f) < q else f


def pi_power_lower(coef: Fraction, power: int) -> float:
    """Float strictly below ``coef * pi**power`` for ``coef >= 0``."""
    return _widen(_float_down(coef * _PI_LO**power), -math.inf)


def pi_power_upper(coef: Fraction, power: int) -> float:
    return _widen(_float_up(coef * _PI_HI**power), math.inf)


def odd_part_factor(p: int) -> Fraction:
    """sum 1/m^(2p) = factor * sum 1/(2k - 1)^(2p)."""
    return Fraction(4**p, 4**p - 1)


def _check(n: int, p: int) -> None:
    for name, v in (("n", n), ("p", p)):
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ValueError(f"{name} must be a positive integer, got {v!r}")


@dataclass(frozen=True)
class PartialSum:
    p: int
    n: int
    value: float
    # bound on |value - exact partial sum|
    error_bound: float

    @property
    def upper_estimate(self) -> float:
        return _widen(self.value + self.error_bound, math.inf)


def partial_sum(n: int, p: int) -> PartialSum:
    """Odd partial sum, accumulated in ascending k without loss (math.fsum)."""
    _check(n, p)
    e = 2 * p
    if p == 1:
        # (2k-1)^2 < 2^53 here, so each term is one correctly rounded division
        value = math.fsum(1.0 / (m * m) for m in range(1, 2 * n, 2))
    else:
        value = math.fsum(1.0 / float(m) ** e for m in range(1, 2 * n, 2))
    # per-term rounding is below 2^-51 relative; fsum adds half an ulp
    return PartialSum(p, n, value, value * 2.0**-49)


def tail_majorant(n: int, p: int) -> Fraction:
    """Upper bound on sum_{k > n} 1/(2k - 1)^(2p).

    The summand is convex, so each term is at most its integral over
    [k - 1/2, k + 1/2]; the integral from n + 1/2 to infinity is exact.
    """
    _check(n, p)
    return Fraction(1, 2 * (2 * p - 1) * (2 * n) ** (2 * p - 1))


@dataclass(frozen=True)
class ZetaEnclosure:
    p: int
    n: int
    lower: float
    upper: float
    target: Target
    # exact coefficients of pi^(2p) for the two squeeze bounds
    lower_coef: Fraction
    squeeze_upper_coef: Fraction
    provenance: dict = field(default_factory=dict)

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def contains(self, x: float) -> bool:
        return self.lower <= x <= self.upper

    def strictly_contains(self, x: float) -> bool:
        return self.lower < x < self.upper


def squeeze_coefficients(n: int, p: int, cap: int = DEFAULT_TRACE_CAP) -> tuple[Fraction, Fraction]:
    _check(n, p)
    scale = Fraction(1, (2 * (2 * n + 1)) ** (2 * p))
    lower = scale * power_sum(n, p, cap).value
    upper = scale * 4**p * trace_power(n, p, cap).value
    return lower, upper


def odd_sum_enclosure(n: int, p: int = 1, cap: int = DEFAULT_TRACE_CAP) -> ZetaEnclosure:
    """Bounds on the finite odd partial sum P_p(n)."""
    lo, hi = squeeze_coefficients(n, p, cap)
    return ZetaEnclosure(
        p, n,
        pi_power_lower(lo, 2 * p),
        pi_power_upper(hi, 2 * p),
        Target.ODD_SUM,
        lo, hi,
        {"lower": "squeeze: S_p(n)", "upper": "squeeze: 4^p tr(A_n^p)"},
    )


def zeta_enclosure(n: int, p: int = 1, cap: int = DEFAULT_TRACE_CAP) -> ZetaEnclosure:
    """Bounds on the limit zeta(2p) from grid size ``n``.

    The squeeze lower bound lies below every later partial sum and hence
    below the limit.  The squeeze upper bound only dominates the finite sum
    (for p = 1 it stays below the limit for every n), so the upper end is the
    larger of it and the partial sum plus a tail majorant, the latter being a
    rigorous bound on the limit.
    """
    _check(n, p)
    factor = odd_part_factor(p)
    lo, hi = squeeze_coefficients(n, p, cap)
    lo, hi = lo * factor, hi * factor
    squeeze_hi = pi_power_upper(hi, 2 * p)

    ps = partial_sum(n, p)
    tail_hi = _float_up(factor * (Fraction(ps.upper_estimate) + tail_majorant(n, p)))
    tail_hi = _widen(tail_hi, math.inf)

    upper, source = max(
        (squeeze_hi, "squeeze: 4^p tr(A_n^p)"),
        (tail_hi, "partial sum + tail majorant"),
    )
    return ZetaEnclosure(
        p, n,
        pi_power_lower(lo, 2 * p),
        upper,
        Target.FULL_ZETA,
        lo, hi,
        {"lower": "squeeze: S_p(n)", "upper": source},
    )


@dataclass(frozen=True)
class SqueezeRow:
    n: int
    partial: PartialSum
    enclosure: ZetaEnclosure
    contains_partial: bool


def squeeze_table(p: int, n_ladder: Sequence[int], cap: int = DEFAULT_TRACE_CAP) -> list[SqueezeRow]:
    ladder = list(n_ladder)
    if not ladder:
        raise ValueError("n_ladder must not be empty")
    if any(b <= a for a, b in zip(ladder, ladder[1:])):
        raise ValueError(f"n_ladder must be strictly ascending, got {ladder}")
    rows = []
    for n in ladder:
        ps = partial_sum(n, p)
        enc = odd_sum_enclosure(n, p, cap)
        inside = (
            enc.lower < ps.value - ps.error_bound
            and ps.value + ps.error_bound < enc.upper
        )
        rows.append(SqueezeRow(n, ps, enc, inside))
    return rows


def default_ladder(p: int, cap: int = DEFAULT_TRACE_CAP) -> list[int]:
    if p == 1:
        return [10**e for e in range(1, 7)]
    if p == 2:
        return [10**e for e in range(1, 5)]
    ladder = [10**e for e in range(1, 7) if 10**e < cap]
    return ladder + [cap]


def literal_squeeze_p1(n: int, value: float, slack: float = LITERAL_SLACK) -> bool:
    """The p = 1 inequality chain in plain double precision."""
    q = (math.pi**2 / 4) / (2 * n + 1) ** 2
    return q * (2 * n * n + n) - slack < value < q * (2 * n * n + 2 * n) + slack


def premise_holds(theta: float) -> bool:
    """sin(t) < t < tan(t), the inequality the squeeze is built on."""
    return math.sin(theta) < theta < math.tan(theta)
