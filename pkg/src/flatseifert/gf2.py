"""GF(2) linear algebra on 0/1 tuples, using int bitsets internally."""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple


def _to_bits(vec: Sequence[int]) -> int:
    out = 0
    for i, x in enumerate(vec):
        if x & 1:
            out |= 1 << i
    return out


def _from_bits(bits: int, n: int) -> Tuple[int, ...]:
    return tuple((bits >> i) & 1 for i in range(n))


def _rref(rows: List[int], ncols: int) -> Tuple[List[int], List[int]]:
    """Reduced row echelon form; returns (rows, pivot columns)."""
    work = [r for r in rows if r]
    pivots: List[int] = []
    top = 0
    for col in range(ncols):
        bit = 1 << col
        hit = next((i for i in range(top, len(work)) if work[i] & bit), None)
        if hit is None:
            continue
        work[top], work[hit] = work[hit], work[top]
        for i in range(len(work)):
            if i != top and work[i] & bit:
                work[i] ^= work[top]
        pivots.append(col)
        top += 1
    return work[:top], pivots


def rank(rows: Sequence[Sequence[int]], ncols: int) -> int:
    return len(_rref([_to_bits(r) for r in rows], ncols)[1])


def nullspace(rows: Sequence[Sequence[int]], ncols: int) -> List[Tuple[int, ...]]:
    """Basis of ``{x : rows @ x == 0 (mod 2)}``."""
    reduced, pivots = _rref([_to_bits(r) for r in rows], ncols)
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        x = 1 << free
        for row, pc in zip(reduced, pivots):
            if row >> free & 1:
                x |= 1 << pc
        basis.append(_from_bits(x, ncols))
    return basis


def span(basis: Sequence[Sequence[int]], ncols: int) -> List[Tuple[int, ...]]:
    """All 2^k vectors of the span, in lexicographic order."""
    vecs = {0}
    for b in basis:
        bb = _to_bits(b)
        vecs |= {v ^ bb for v in vecs}
    return sorted(_from_bits(v, ncols) for v in vecs)


def solve(columns: Sequence[Sequence[int]], target: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """Find ``x`` with ``sum_j x_j * columns[j] == target (mod 2)``, or None."""
    k = len(columns)
    n = len(target)
    # One equation per coordinate; unknowns are bits 0..k-1, constant is bit k.
    rows = []
    for i in range(n):
        r = 0
        for j, col in enumerate(columns):
            if col[i] & 1:
                r |= 1 << j
        if target[i] & 1:
            r |= 1 << k
        rows.append(r)
    reduced, pivots = _rref(rows, k + 1)
    if k in pivots:
        return None
    x = [0] * k
    for row, pc in zip(reduced, pivots):
        x[pc] = (row >> k) & 1
    return tuple(x)

