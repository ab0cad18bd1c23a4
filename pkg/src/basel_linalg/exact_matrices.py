"""Exact integer forms of the matrix ``A_n`` and its tridiagonal inverse ``B_n``.

``A_n`` has entries ``n + 1 - max(i, j)`` and is never materialised except
for small oracle checks.  ``B_n`` is tridiagonal with diagonal
``(1, 2, ..., 2)`` and off-diagonals ``-1``.  All indices in the public
functions are 1-based.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

DEFAULT_TRACE_CAP = 512


class Kind(str, enum.Enum):
    A = "A"
    B = "B"


class TraceCapExceeded(ValueError):
    """Raised when an iterative trace is requested for ``n`` above the cap."""

    def __init__(self, n: int, p: int, cap: int):
        self.n, self.p, self.cap = n, p, cap
        super().__init__(
            f"tr(A_n^{p}) for p >= 3 is limited to n <= {cap} (got n={n})"
        )


def _check_order(n: int, name: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n!r}")


@dataclass(frozen=True)
class StructuredMatrix:
    n: int
    kind: Kind

    def __post_init__(self):
        _check_order(self.n)
        object.__setattr__(self, "kind", Kind(self.kind))

    def entry(self, i: int, j: int) -> int:
        n = self.n
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"entry ({i}, {j}) outside a {n}x{n} matrix")
        if self.kind is Kind.A:
            return n + 1 - max(i, j)
        if i == j:
            return 1 if i == 1 else 2
        return -1 if abs(i - j) == 1 else 0

    def row(self, i: int) -> list[int]:
        return [self.entry(i, j) for j in range(1, self.n + 1)]

    def to_dense(self) -> list[list[int]]:
        """Materialise the matrix as nested lists (meant for small n)."""
        return [self.row(i) for i in range(1, self.n + 1)]

    def bands(self) -> tuple[list[int], list[int]]:
        """Diagonal and sub-diagonal of ``B_n``."""
        if self.kind is not Kind.B:
            raise ValueError("bands() is only defined for the tridiagonal kind B")
        diag = [1] + [2] * (self.n - 1)
        return diag, [-1] * (self.n - 1)


def build_matrix(n: int, kind: Kind | str) -> StructuredMatrix:
    return StructuredMatrix(n, Kind(kind))


def verify_inverse(n: int) -> bool:
    """Check ``A_n @ B_n == I`` exactly.

    Every entry of the product is formed, but each uses only the (at most
    three) nonzero entries of column ``j`` of ``B_n``.
    """
    _check_order(n)
    a = build_matrix(n, Kind.A)
    b = build_matrix(n, Kind.B)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            total = 0
            for k in range(max(1, j - 1), min(n, j + 1) + 1):
                total += a.entry(i, k) * b.entry(k, j)
            if total != (1 if i == j else 0):
                return False
    return True


def matvec_a(n: int, x: list[int]) -> list[int]:
    """Exact ``A_n @ x`` in O(n) using prefix sums."""
    if len(x) != n:
        raise ValueError(f"vector length {len(x)} does not match n={n}")
    # suffix[i] = sum_{j > i} (n + 1 - j) * x_j  (1-based i, stored 0-based)
    suffix = [0] * (n + 1)
    for j in range(n, 0, -1):
        suffix[j - 1] = suffix[j] + (n + 1 - j) * x[j - 1]
    out = [0] * n
    prefix = 0
    for i in range(1, n + 1):
        prefix += x[i - 1]
        out[i - 1] = (n + 1 - i) * prefix + suffix[i]
    return out


@dataclass(frozen=True)
class TraceRecord:
    n: int
    p: int
    value: int


def trace_power(n: int, p: int, cap: int = DEFAULT_TRACE_CAP) -> TraceRecord:
    """Exact ``tr(A_n^p)``.

    p = 1 and p = 2 use closed sums; p >= 3 runs exact matrix-vector
    iteration one column at a time and is limited to ``n <= cap``.
    """
    _check_order(n)
    _check_order(p, "p")
    if p == 1:
        return TraceRecord(n, p, n * (n + 1) // 2)
    if p == 2:
        # the value n + 1 - m occurs 2m - 1 times (where max(i, j) = m)
        value = sum((2 * m - 1) * (n + 1 - m) ** 2 for m in range(1, n + 1))
        return TraceRecord(n, p, value)
    if n > cap:
        raise TraceCapExceeded(n, p, cap)

    half = p // 2
    total = 0
    for i in range(1, n + 1):
        w = [n + 1 - max(i, j) for j in range(1, n + 1)]  # column i of A
        for _ in range(half - 1):
            w = matvec_a(n, w)
        # (A^p)_ii = (A^h e_i) . (A^(p-h) e_i)
        other = matvec_a(n, w) if p % 2 else w
        total += sum(u * v for u, v in zip(w, other))
    return TraceRecord(n, p, total)
