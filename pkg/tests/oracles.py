"""Brute-force helpers that never touch the package's matrix code."""


def dense_a(n):
    """A_n straight from its displayed pattern: row i is n+1-i repeated i times,
    then counting down to 1."""
    rows = []
    for i in range(1, n + 1):
        head = [n + 1 - i] * i
        tail = list(range(n - i, 0, -1))
        rows.append(head + tail)
    return rows


def dense_b(n):
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        out[i][i] = 1 if i == 0 else 2
        if i + 1 < n:
            out[i][i + 1] = out[i + 1][i] = -1
    return out


def matmul(x, y):
    cols = list(zip(*y))
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in x]


def trace(m):
    return sum(m[i][i] for i in range(len(m)))
