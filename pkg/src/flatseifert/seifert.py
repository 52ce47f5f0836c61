"""Seifert invariants ``{b; (eps, g); (a_1, b_1), ..., (a_n, b_n)}``.

Generators of the fundamental group are ordered ``s_1..s_n, v_1..v_g', h``
where ``h`` is the regular fibre, ``s_k`` the exceptional fibres and ``v_j``
the base-surface generators (``g' = 2g`` for an orientable base, ``g``
otherwise).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import List, Tuple

from .fpgroup import Presentation, Word, Z2Char

TYPES = ("o1", "o2", "n1", "n2", "n3", "n4")
ORIENTABLE_TYPES = ("o1", "n2")

# Minimum genus per type; n3 and n4 need one / two fibre-preserving
# crosscaps on top of at least one fibre-reversing one.
_MIN_GENUS = {"o1": 0, "o2": 0, "n1": 1, "n2": 1, "n3": 2, "n4": 3}


@dataclass(frozen=True)
class SeifertInvariants:
    b: int
    eps: str
    g: int
    pairs: Tuple[Tuple[int, int], ...] = field(default=())

    def __post_init__(self) -> None:
        if self.eps not in TYPES:
            raise ValueError(f"unknown type {self.eps!r}; expected one of {TYPES}")
        if self.g < _MIN_GENUS[self.eps]:
            raise ValueError(f"type {self.eps} needs genus >= {_MIN_GENUS[self.eps]}")
        pairs = tuple((int(a), int(bk)) for a, bk in self.pairs)
        for a, bk in pairs:
            if a < 2:
                raise ValueError(f"exceptional fibre multiplicity must be >= 2, got {a}")
            if gcd(a, bk) != 1:
                raise ValueError(f"pair ({a}, {bk}) is not coprime")
        object.__setattr__(self, "pairs", pairs)
        # On a non-orientable total space some v_j inverts h, and v_j -> v_j h
        # shifts b by 2; only b mod 2 is an invariant there.
        if not self.orientable and self.b not in (0, 1):
            object.__setattr__(self, "b", self.b % 2)

    @property
    def orientable(self) -> bool:
        return self.eps in ORIENTABLE_TYPES

    @property
    def base_orientable(self) -> bool:
        return self.eps in ("o1", "o2")

    @property
    def n(self) -> int:
        return len(self.pairs)

    @property
    def n_base_gens(self) -> int:
        return 2 * self.g if self.base_orientable else self.g

    def generator_names(self) -> Tuple[str, ...]:
        s = [f"s{k + 1}" for k in range(self.n)]
        if self.n_base_gens == 1 and not self.base_orientable:
            v = ["v"]
        else:
            v = [f"v{j + 1}" for j in range(self.n_base_gens)]
        return tuple(s + v + ["h"])

    def fibre_signs(self) -> List[int]:
        """epsilon_j in ``v_j h v_j^-1 = h^epsilon_j``."""
        m = self.n_base_gens
        if self.eps in ("o1", "n1"):
            return [1] * m
        if self.eps in ("o2", "n2"):
            return [-1] * m
        if self.eps == "n3":
            return [1] + [-1] * (m - 1)
        return [1, 1] + [-1] * (m - 2)

    def reordered(self) -> "SeifertInvariants":
        return SeifertInvariants(self.b, self.eps, self.g, tuple(sorted(self.pairs)))

    def same_as(self, other: "SeifertInvariants") -> bool:
        """Equality up to permutation of the exceptional pairs."""
        return self.reordered() == other.reordered()

    def __str__(self) -> str:
        body = f"{{{self.b};({self.eps},{self.g});"
        body += ",".join(f"({a},{bk})" for a, bk in self.pairs)
        return body + "}"

    def to_json(self) -> dict:
        return {"b": self.b, "type": self.eps, "g": self.g, "pairs": [list(p) for p in self.pairs]}

    @classmethod
    def from_json(cls, data: dict) -> "SeifertInvariants":
        missing = {"b", "type", "g"} - set(data)
        if missing:
            raise ValueError(f"missing field(s): {sorted(missing)}")
        return cls(
            int(data["b"]),
            str(data["type"]),
            int(data["g"]),
            tuple(tuple(p) for p in data.get("pairs", [])),
        )

    @classmethod
    def loads(cls, text: str) -> "SeifertInvariants":
        return cls.from_json(json.loads(text))


@dataclass(frozen=True)
class DerivedInvariants:
    a: int
    c: int
    d: int


def build_presentation(si: SeifertInvariants) -> Presentation:
    n, m = si.n, si.n_base_gens
    h = n + m
    rels: List[Word] = []
    for k, (ak, bk) in enumerate(si.pairs):
        rels.append(Word.of((k, 1), (h, 1), (k, -1), (h, -1)))
    for k, (ak, bk) in enumerate(si.pairs):
        rels.append(Word.of((k, ak), (h, bk)))
    for j, e in enumerate(si.fibre_signs()):
        v = n + j
        rels.append(Word.of((v, 1), (h, 1), (v, -1), (h, -e)))
    last = [(k, 1) for k in range(n)]
    if si.base_orientable:
        for i in range(si.g):
            x, y = n + 2 * i, n + 2 * i + 1
            last += [(x, 1), (y, 1), (x, -1), (y, -1)]
    else:
        last += [(n + j, 2) for j in range(m)]
    last.append((h, -si.b))
    rels.append(Word.of(*last))
    return Presentation(si.generator_names(), tuple(rels))


def derived_invariants(si: SeifertInvariants) -> DerivedInvariants:
    a = lcm(*(ak for ak, _ in si.pairs)) if si.pairs else 1
    c = si.b * a + sum(bk * (a // ak) for ak, bk in si.pairs)
    d = sum(1 for ak, _ in si.pairs if ak % 2 == 0)
    return DerivedInvariants(a, c, d)


def orientation_character(si: SeifertInvariants) -> Z2Char:
    """w1 on the generators of ``build_presentation(si)``.

    v_j reverses the total orientation exactly when it reverses the base
    orientation XOR it reverses the fibre.
    """
    base_flip = 0 if si.base_orientable else 1
    vs = [base_flip ^ (1 if e == -1 else 0) for e in si.fibre_signs()]
    return tuple([0] * si.n + vs + [0])


def reverse_orientation(si: SeifertInvariants) -> SeifertInvariants:
    if not si.orientable:
        raise ValueError(f"type {si.eps} has a non-orientable total space")
    return SeifertInvariants(
        -si.b - si.n, si.eps, si.g, tuple((a, a - bk) for a, bk in si.pairs)
    )


def orbifold_euler_characteristic(si: SeifertInvariants) -> Fraction:
    chi = 2 - 2 * si.g if si.base_orientable else 2 - si.g
    return chi - sum(1 - Fraction(1, a) for a, _ in si.pairs)


def euler_number(si: SeifertInvariants) -> Fraction:
    return -(si.b + sum(Fraction(bk, a) for a, bk in si.pairs))


def is_flat(si: SeifertInvariants) -> bool:
    """Euclidean geometry: the base orbifold is Euclidean and the fibration has no twist.

    The Euler number is an invariant only for an orientable total space; on
    the other types b is a residue mod 2 and imposes nothing.
    """
    if orbifold_euler_characteristic(si) != 0:
        return False
    return not si.orientable or euler_number(si) == 0
