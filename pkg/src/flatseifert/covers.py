"""Double covers: Reidemeister-Schreier for index-2 kernels, and identification."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Union

from .catalog import entry, identify
from .fpgroup import AbelianGroup, Presentation, Word, Z2Char, abelianization, tietze_simplify
from .seifert import SeifertInvariants, build_presentation, orientation_character

Base = Union[str, SeifertInvariants]


def transversal_choices(phi: Sequence[int]) -> List[int]:
    return [i for i, x in enumerate(phi) if x % 2]


def schreier_rewrite(p: Presentation, phi: Sequence[int], t: Optional[int] = None) -> Presentation:
    """Unsimplified presentation of ``ker phi`` with transversal ``{1, t}``.

    Schreier generator ``x_c`` (c = 0, 1) stands for ``r_c x (rep of r_c x)^-1``;
    ``t_0`` is trivial and omitted, so there are ``2n - 1`` generators and
    ``2m`` relators (some possibly empty).
    """
    phi = [x % 2 for x in phi]
    if not any(phi):
        raise ValueError("the character is zero, not an epimorphism")
    choices = transversal_choices(phi)
    if t is None:
        t = choices[0]
    elif t not in choices:
        raise ValueError(f"generator {t} is not sent to 1")

    n = p.ngens
    index = {}
    names = []
    for c in (0, 1):
        for x in range(n):
            if (x, c) == (t, 0):
                continue
            index[(x, c)] = len(names)
            names.append(f"{p.generator_names[x]}_{c}")

    def rewrite(w: Word, coset: int) -> Word:
        letters = []
        for x, e in w.letters:
            for _ in range(abs(e)):
                if e > 0:
                    if (x, coset) in index:
                        letters.append((index[(x, coset)], 1))
                    coset ^= phi[x]
                else:
                    coset ^= phi[x]
                    if (x, coset) in index:
                        letters.append((index[(x, coset)], -1))
        # conjugating by t: t w t^-1 read from coset 0 equals w read from coset 1
        return Word(tuple(letters)).reduced()

    rels = tuple(rewrite(r, c) for c in (0, 1) for r in p.relators)
    return Presentation(tuple(names), rels)


def kernel_presentation_index2(p: Presentation, phi: Sequence[int], t: Optional[int] = None) -> Presentation:
    return tietze_simplify(schreier_rewrite(p, phi, t))


def cover_orientable(si: SeifertInvariants, phi: Sequence[int]) -> bool:
    """The double cover along phi is orientable iff w1 is 0 or phi."""
    w1 = orientation_character(si)
    phi = tuple(x % 2 for x in phi)
    return not any(w1) or w1 == phi


@dataclass(frozen=True)
class CoverReport:
    base: str
    phi: Z2Char
    cover: Optional[str]
    cover_h1: AbelianGroup
    cover_orientable: bool
    cover_presentation: Presentation
    index: Optional[int] = None

    def to_json(self) -> dict:
        return {
            "base": self.base,
            "phi": list(self.phi),
            "cover": self.cover,
            "cover_h1": str(self.cover_h1),
            "cover_orientable": self.cover_orientable,
            "cover_presentation": {
                "generators": list(self.cover_presentation.generator_names),
                "relators": [
                    r.format(self.cover_presentation.generator_names)
                    for r in self.cover_presentation.relators
                ],
            },
            "index": self.index,
        }


def _resolve(base: Base):
    if isinstance(base, SeifertInvariants):
        return str(base), base
    e = entry(base)
    return e.id, e.primary


def double_cover(base: Base, phi: Sequence[int], strict: bool = True) -> CoverReport:
    """Kernel presentation, H1, orientability and catalog identity of a double cover.

    With ``strict=False`` a cover outside the flat family gets ``cover=None``
    instead of raising.
    """
    from .borsuk_ulam import bu_index
    from .catalog import AmbiguousOrUnknown

    name, si = _resolve(base)
    p = build_presentation(si)
    phi = tuple(x % 2 for x in phi)
    kp = kernel_presentation_index2(p, phi)
    h1 = abelianization(kp)
    orientable = cover_orientable(si, phi)
    try:
        cover = identify(h1, orientable)
    except AmbiguousOrUnknown:
        if strict:
            raise
        cover = None
    return CoverReport(name, phi, cover, h1, orientable, kp, bu_index(si, phi))
