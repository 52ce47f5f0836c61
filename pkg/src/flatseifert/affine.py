"""Exact affine maps of Q^3, used as faithful models of the flat groups."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, List, Sequence, Tuple

from .fpgroup import Word

Vec = Tuple[Fraction, Fraction, Fraction]
Mat = Tuple[Vec, Vec, Vec]


def _mat(rows: Iterable[Iterable]) -> Mat:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)  # type: ignore[return-value]


def _vec(xs: Iterable) -> Vec:
    return tuple(Fraction(x) for x in xs)  # type: ignore[return-value]


def _mm(a: Mat, b: Mat) -> Mat:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)) for i in range(3)
    )  # type: ignore[return-value]


def _mv(a: Mat, v: Vec) -> Vec:
    return tuple(sum(a[i][k] * v[k] for k in range(3)) for i in range(3))  # type: ignore[return-value]


def _inv(a: Mat) -> Mat:
    (p, q, r), (s, t, u), (v, w, x) = a
    det = p * (t * x - u * w) - q * (s * x - u * v) + r * (s * w - t * v)
    if det == 0:
        raise ValueError("linear part is singular")
    adj = (
        (t * x - u * w, r * w - q * x, q * u - r * t),
        (u * v - s * x, p * x - r * v, r * s - p * u),
        (s * w - t * v, q * v - p * w, p * t - q * s),
    )
    return tuple(tuple(c / det for c in row) for row in adj)  # type: ignore[return-value]


_I3 = _mat([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
_ZERO = _vec([0, 0, 0])


@dataclass(frozen=True)
class AffineIsometry:
    """``x -> linear @ x + translation``."""

    linear: Mat
    translation: Vec

    @classmethod
    def make(cls, linear: Sequence[Sequence], translation: Sequence) -> "AffineIsometry":
        m = _mat(linear)
        _inv(m)
        return cls(m, _vec(translation))

    @classmethod
    def identity(cls) -> "AffineIsometry":
        return cls(_I3, _ZERO)

    @classmethod
    def translation_by(cls, t: Sequence) -> "AffineIsometry":
        return cls(_I3, _vec(t))

    def then(self, other: "AffineIsometry") -> "AffineIsometry":
        """Apply ``self`` first, then ``other``."""
        lin = _mm(other.linear, self.linear)
        tr = _mv(other.linear, self.translation)
        return AffineIsometry(lin, tuple(a + b for a, b in zip(tr, other.translation)))  # type: ignore[arg-type]

    def inverse(self) -> "AffineIsometry":
        li = _inv(self.linear)
        t = _mv(li, self.translation)
        return AffineIsometry(li, tuple(-x for x in t))  # type: ignore[arg-type]

    def power(self, k: int) -> "AffineIsometry":
        base = self if k >= 0 else self.inverse()
        out = AffineIsometry.identity()
        for _ in range(abs(k)):
            out = out.then(base)
        return out

    def is_identity(self) -> bool:
        return self.linear == _I3 and not any(self.translation)

    def is_translation(self) -> bool:
        return self.linear == _I3

    def order_of_linear(self, limit: int = 24) -> int | None:
        m = self.linear
        for k in range(1, limit + 1):
            if m == _I3:
                return k
            m = _mm(m, self.linear)
        return None

    def to_json(self) -> dict:
        return {
            "linear": [[str(x) for x in row] for row in self.linear],
            "translation": [str(x) for x in self.translation],
        }


def eval_word(rep: Sequence[AffineIsometry], w: Word) -> AffineIsometry:
    """Image of ``w`` with the leftmost letter applied first."""
    out = AffineIsometry.identity()
    for g, e in w.letters:
        out = out.then(rep[g].power(e))
    return out


def holonomy_group(rep: Sequence[AffineIsometry], limit: int = 1000) -> List[Mat]:
    """Closure of the linear parts; raises if it exceeds ``limit`` elements."""
    gens = [r.linear for r in rep] + [_inv(r.linear) for r in rep]
    seen = {_I3}
    frontier = [_I3]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                p = _mm(m, g)
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
                    if len(seen) > limit:
                        raise ValueError("holonomy group is not finite (or too large)")
        frontier = nxt
    return sorted(seen)


def translation_rank(rep: Sequence[AffineIsometry], max_len: int = 4, exps=(-2, -1, 1, 2)) -> int:
    """Rank of the translations among products of <= max_len generator powers.

    Stops early once rank 3 is reached.
    """
    powers = [rep[g].power(e) for g in range(len(rep)) for e in exps]
    found: List[Vec] = []
    layer = [AffineIsometry.identity()]
    for _ in range(max_len):
        nxt = []
        seen = set()
        for a in layer:
            for p in powers:
                c = a.then(p)
                key = (c.linear, c.translation)
                if key in seen:
                    continue
                seen.add(key)
                nxt.append(c)
                if c.is_translation() and any(c.translation):
                    found.append(c.translation)
        r = _rank(found)
        if r == 3:
            return 3
        layer = nxt
    return _rank(found)


def _rank(vectors: Sequence[Vec]) -> int:
    rows = [list(v) for v in vectors]
    rank = 0
    for col in range(3):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


