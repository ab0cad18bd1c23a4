"""Closed-form spectra of A_n and B_n, and a Sturm-bisection cross-check."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .exact_matrices import Kind, build_matrix

BISECTION_WIDTH = 1e-12
MAX_BISECTION_STEPS = 200
# Gershgorin: diag(B_n) <= 2 and off-diagonal row sums <= 2
GERSHGORIN_BRACKET = (0.0, 4.0)
_PIVMIN = 1e-300


class BisectionDidNotConverge(RuntimeError):
    pass


@dataclass(frozen=True)
class ThetaGrid:
    n: int
    angles: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.angles)

    def __iter__(self):
        return iter(self.angles)


def theta_grid(n: int) -> ThetaGrid:
    """Angles ((2k - 1) / (2n + 1)) * pi/2 for k = 1..n, ascending."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    half_pi = math.pi / 2
    return ThetaGrid(n, tuple((2 * k - 1) / (2 * n + 1) * half_pi for k in range(1, n + 1)))


def closed_form_eigenvalues(n: int, which: Kind | str) -> list[float]:
    """Ascending eigenvalues of ``A_n`` or ``B_n`` from 4 sin^2(theta_k)."""
    which = Kind(which)
    b_eigs = sorted(4.0 * math.sin(t) ** 2 for t in theta_grid(n))
    if which is Kind.B:
        return b_eigs
    return sorted(1.0 / v for v in b_eigs)


def sturm_count(diag: Sequence[float], off: Sequence[float], x: float) -> int:
    """Number of eigenvalues of the symmetric tridiagonal matrix below ``x``.

    Counts negative pivots of the LDL^T factorisation of ``T - x I``.
    """
    count = 0
    q = diag[0] - x
    for i in range(len(diag)):
        if i:
            q = diag[i] - x - off[i - 1] ** 2 / q
        if abs(q) < _PIVMIN:
            q = -_PIVMIN
        if q < 0:
            count += 1
    return count


def tridiagonal_bisection(
    diag: Sequence[float],
    off: Sequence[float],
    bracket: tuple[float, float],
    width: float = BISECTION_WIDTH,
    max_steps: int = MAX_BISECTION_STEPS,
) -> list[float]:
    n = len(diag)
    eigs = []
    for k in range(1, n + 1):
        lo, hi = bracket
        steps = 0
        while hi - lo > width:
            if steps >= max_steps:
                raise BisectionDidNotConverge(
                    f"eigenvalue {k} not isolated after {max_steps} steps "
                    f"(bracket [{lo!r}, {hi!r}])"
                )
            mid = 0.5 * (lo + hi)
            if sturm_count(diag, off, mid) >= k:
                hi = mid
            else:
                lo = mid
            steps += 1
        eigs.append(0.5 * (lo + hi))
    return eigs


def bisection_eigenvalues(n: int) -> list[float]:
    diag, off = build_matrix(n, Kind.B).bands()
    return tridiagonal_bisection(
        [float(d) for d in diag], [float(e) for e in off], GERSHGORIN_BRACKET
    )


@dataclass(frozen=True)
class SpectrumReport:
    n: int
    closed_form_eigs_B: list[float]
    numeric_eigs_B: list[float]
    max_abs_error: float


def spectrum_report(n: int) -> SpectrumReport:
    closed = closed_form_eigenvalues(n, Kind.B)
    numeric = bisection_eigenvalues(n)
    err = max(abs(a - b) for a, b in zip(closed, numeric))
    return SpectrumReport(n, closed, numeric, err)
