"""Z2-index of a free involution from its classifying character.

index 1  iff phi lifts to an integral character,
index 3  iff the cup-cube [phi]^3 in H^3(N; Z2) is nonzero,
index 2  otherwise.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .catalog import entry
from .fpgroup import IntChar, integral_lift
from .seifert import SeifertInvariants, build_presentation, derived_invariants


class OddMultiplicityWarning(UserWarning):
    """phi(s_k) = 1 on an exceptional fibre with odd a_k while d > 0."""


def cup_cube(si: SeifertInvariants, phi: Sequence[int]) -> int:
    """Coefficient of the top class in [phi]^3, for phi on the quotient ``si``."""
    phi = [x % 2 for x in phi]
    n, m = si.n, si.n_base_gens
    s, v, h = phi[:n], phi[n:n + m], phi[n + m]
    inv = derived_invariants(si)
    if inv.d > 0:
        total = 0
        for (ak, _), sk in zip(si.pairs, s):
            if not sk:
                continue
            if ak % 2:
                # a_k/2 is not an integer here; the term is dropped
                warnings.warn(
                    f"phi(s_k)=1 with odd a_k={ak} in {si}; term omitted",
                    OddMultiplicityWarning,
                    stacklevel=2,
                )
                continue
            total += ak // 2
        return total % 2
    if inv.c % 2:
        return 0
    half = inv.c // 2
    if si.eps == "o1":
        k = half
    elif si.eps in ("o2", "n1"):
        k = half + sum(v)
    elif si.eps == "n2":
        k = half + si.g
    elif si.eps == "n3":
        k = half + v[0] + si.g - 1
    else:
        k = half + v[0] + v[1] + si.g - 2
    return (h * k) % 2


@dataclass(frozen=True)
class BUDecision:
    index: int
    lift: Optional[IntChar]
    cube: int


def _quotient(base: Union[str, SeifertInvariants]) -> SeifertInvariants:
    return base if isinstance(base, SeifertInvariants) else entry(base).primary


def decide(base: Union[str, SeifertInvariants], phi: Sequence[int]) -> BUDecision:
    si = _quotient(base)
    phi = tuple(x % 2 for x in phi)
    if not any(phi):
        raise ValueError("the character is zero, not an epimorphism")
    lift = integral_lift(build_presentation(si), phi)
    cube = cup_cube(si, phi)
    if lift is not None:
        return BUDecision(1, lift, cube)
    return BUDecision(3 if cube else 2, None, cube)


def bu_index(base: Union[str, SeifertInvariants], phi: Sequence[int]) -> int:
    return decide(base, phi).index
