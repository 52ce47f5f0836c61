"""Smith normal form over the integers, with unimodular transforms.

All arithmetic is on Python ints, so intermediate growth is never a problem.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

Matrix = List[List[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], inner: int | None = None) -> Matrix:
    if inner is None:
        inner = len(b)
    ncols = len(b[0]) if b else 0
    return [[sum(row[k] * b[k][j] for k in range(inner)) for j in range(ncols)] for row in a]


def smith_normal_form(
    matrix: Sequence[Sequence[int]], ncols: int | None = None
) -> Tuple[Matrix, Matrix, Matrix]:
    """Return ``(U, D, V)`` with ``U @ matrix @ V == D``.

    ``U`` (m x m) and ``V`` (n x n) are unimodular, ``D`` is diagonal with
    nonnegative entries ``d_1 | d_2 | ...`` followed by zeros.  ``ncols`` is
    only needed when the matrix has no rows.
    """
    a = [list(map(int, row)) for row in matrix]
    m = len(a)
    n = len(a[0]) if m else (ncols or 0)
    u = identity(m)
    v = identity(n)

    def swap_rows(i: int, j: int) -> None:
        if i != j:
            a[i], a[j] = a[j], a[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        if i != j:
            for row in a:
                row[i], row[j] = row[j], row[i]
            for row in v:
                row[i], row[j] = row[j], row[i]

    def add_row(dst: int, src: int, k: int) -> None:
        # row_dst += k * row_src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst: int, src: int, k: int) -> None:
        for row in a:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    x = a[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                return u, a, v
            swap_rows(t, best[1])
            swap_cols(t, best[2])
            p = a[t][t]
            clean = True
            for i in range(t + 1, m):
                q = a[i][t] // p
                if q:
                    add_row(i, t, -q)
                if a[i][t]:
                    clean = False
            for j in range(t + 1, n):
                q = a[t][j] // p
                if q:
                    add_col(j, t, -q)
                if a[t][j]:
                    clean = False
            if not clean:
                continue
            offender = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p),
                None,
            )
            if offender is None:
                break
            add_row(t, offender, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return u, a, v


def invariant_factors(matrix: Sequence[Sequence[int]], ncols: int | None = None) -> List[int]:
    """Nonzero diagonal entries of the Smith normal form."""
    _, d, _ = smith_normal_form(matrix, ncols)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0)) if d[i][i]]


def integer_kernel(matrix: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Basis (as a list of column vectors) of ``{x in Z^n : matrix @ x == 0}``."""
    _, d, v = smith_normal_form(matrix, ncols)
    rank = sum(1 for i in range(min(len(d), ncols)) if d[i][i])
    return [[v[i][j] for i in range(ncols)] for j in range(rank, ncols)]


def determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant via fraction-free Bareiss elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
