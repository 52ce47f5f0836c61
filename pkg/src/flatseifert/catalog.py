"""The ten closed flat 3-manifolds as Seifert fibred spaces.

Each entry carries its Seifert forms, H1 and orientability (the pair is a
complete invariant inside the family), an exact affine representation of the
fundamental group used to solve the word problem, and explicit automorphisms
relating characters.

Faithfulness of the affine representations: the linear parts generate a
finite group and the translations of the image have rank 3, so the image is
a crystallographic group.  The kernel of a surjection between two groups of
Hirsch length 3 is finite, hence trivial since the source is torsion-free.
``check_representation`` verifies both hypotheses.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Tuple

from .affine import AffineIsometry, eval_word, holonomy_group, translation_rank
from .fpgroup import AbelianGroup, Presentation, Word, Z2Char, abelianization
from .seifert import SeifertInvariants, build_presentation

IDS = ("M1", "M2", "M3", "M4", "M5", "M6", "N1", "N2", "N3", "N4")


class AmbiguousOrUnknown(LookupError):
    """No catalog entry (or more than one) matches an (H1, orientability) pair."""


def _si(b: int, eps: str, g: int, *pairs: Tuple[int, int]) -> SeifertInvariants:
    return SeifertInvariants(b, eps, g, tuple(pairs))


FORMS: Dict[str, Tuple[SeifertInvariants, ...]] = {
    "M1": (_si(0, "o1", 1),),
    "M2": (_si(-2, "o1", 0, (2, 1), (2, 1), (2, 1), (2, 1)), _si(0, "n2", 2)),
    "M3": (_si(-1, "o1", 0, (3, 1), (3, 1), (3, 1)),),
    "M4": (_si(-1, "o1", 0, (2, 1), (4, 1), (4, 1)),),
    "M5": (_si(-1, "o1", 0, (2, 1), (3, 1), (6, 1)),),
    "M6": (_si(-1, "n2", 1, (2, 1), (2, 1)),),
    "N1": (_si(0, "n1", 2), _si(0, "o2", 1)),
    "N2": (_si(1, "n1", 2), _si(1, "o2", 1)),
    "N3": (_si(0, "n3", 2),),
    "N4": (_si(1, "n3", 2), _si(0, "n1", 1, (2, 1), (2, 1))),
}
PRIMARY_FORMS = {k: v[0] for k, v in FORMS.items()}

# Computed once with abelianization(); test_catalog recomputes them.
H1: Dict[str, str] = {
    "M1": "Z^3",
    "M2": "Z + Z/2 + Z/2",
    "M3": "Z + Z/3",
    "M4": "Z + Z/2",
    "M5": "Z",
    "M6": "Z/4 + Z/4",
    "N1": "Z^2 + Z/2",
    "N2": "Z^2",
    "N3": "Z + Z/2 + Z/2",
    "N4": "Z + Z/4",
}

# Reference numbering phi_1, phi_2, ... of the epimorphisms, as vectors over
# the primary generators.  Enumeration itself is lexicographic.
REFERENCE_EPIS: Dict[str, Tuple[Z2Char, ...]] = {
    "M1": ((1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)),
    "M2": (
        (1, 1, 0, 0, 0), (1, 0, 1, 0, 0), (1, 0, 0, 1, 0), (0, 1, 1, 0, 0),
        (0, 1, 0, 1, 0), (0, 0, 1, 1, 0), (1, 1, 1, 1, 0),
    ),
    "M3": ((1, 1, 1, 1),),
    "M4": ((1, 1, 0, 0), (1, 0, 1, 0), (0, 1, 1, 0)),
    "M5": ((1, 0, 1, 0),),
    "M6": ((1, 1, 0, 0), (1, 1, 1, 0), (0, 0, 1, 0)),
    "N1": ((1, 1, 1), (1, 0, 1), (0, 1, 1), (0, 0, 1), (1, 1, 0), (1, 0, 0), (0, 1, 0)),
    "N2": ((1, 1, 0), (1, 0, 0), (0, 1, 0)),
    "N3": ((1, 1, 1), (1, 0, 1), (0, 1, 1), (0, 0, 1), (1, 1, 0), (1, 0, 0), (0, 1, 0)),
    "N4": ((1, 1, 0), (1, 0, 0), (0, 1, 0)),
}


@dataclass(frozen=True)
class AutomorphismCertificate:
    """An automorphism theta given on generators, with its inverse.

    ``relates`` lists reference-numbered pairs ``(i, j)`` (1-based) with
    ``phi_i == phi_j . theta``.
    """

    gen_images: Tuple[str, ...]
    inv_images: Tuple[str, ...]
    relates: Tuple[Tuple[int, int], ...] = ()
    label: str = ""

    def words(self, p: Presentation) -> Tuple[List[Word], List[Word]]:
        return [p.word(t) for t in self.gen_images], [p.word(t) for t in self.inv_images]


_C = AutomorphismCertificate

CERTIFICATES: Dict[str, Tuple[AutomorphismCertificate, ...]] = {
    # generators v1 v2 h
    "M1": (
        _C(("v2", "v1", "h"), ("v2", "v1", "h"), ((2, 1), (6, 5)), "swap v1,v2"),
        _C(("v1", "h", "v2"), ("v1", "h", "v2"), ((4, 2), (5, 3)), "swap v2,h"),
        _C(("v1 v2", "v2", "h"), ("v1 v2^-1", "v2", "h"), ((7, 6), (3, 2)), "v1 -> v1 v2"),
    ),
    # generators s1 s2 s3 s4 h
    "M2": (
        _C(("s1 s2 s1^-1", "s1", "s3", "s4", "h"), ("s2", "s2^-1 s1 s2", "s3", "s4", "h"),
           ((4, 2), (5, 3)), "exchange s1,s2"),
        _C(("s1", "s2 s3 s2^-1", "s2", "s4", "h"), ("s1", "s3", "s3^-1 s2 s3", "s4", "h"),
           ((2, 1), (6, 5)), "exchange s2,s3"),
        _C(("s1", "s2", "s3 s4 s3^-1", "s3", "h"), ("s1", "s2", "s4", "s4^-1 s3 s4", "h"),
           ((3, 2), (5, 4)), "exchange s3,s4"),
    ),
    # generators s1 s2 s3 h
    "M4": (
        _C(("s1", "s2 s3 s2^-1", "s2", "h"), ("s1", "s3", "s3^-1 s2 s3", "h"),
           ((2, 1),), "exchange s2,s3"),
    ),
    # generators s1 s2 v h
    "M6": (
        _C(("s1", "s2 v s2^-1 v^-1 s2^-1", "s2 v", "h"), ("s1", "v^-1 s2^-1 v", "v^-1 s2 v^2", "h"),
           ((1, 2),), "theta_1: v -> s2 v"),
        # theta is an involution, so it is its own inverse
        _C(("v", "v s1^-2", "s1", "v^-2"), ("v", "v s1^-2", "s1", "v^-2"),
           ((1, 3),), "theta: s1 -> v, v -> s1"),
    ),
    # generators v1 v2 h
    "N1": (
        _C(("h v1", "h^-1 v2", "h"), ("h^-1 v1", "h v2", "h"), ((4, 1),), "v1 -> h v1, v2 -> h^-1 v2"),
        _C(("v1 v2 v1^-1", "v1", "h"), ("v2", "v2^-1 v1 v2", "h"), ((3, 2), (7, 6)), "exchange v1,v2"),
    ),
    "N2": (
        _C(("v1 v2 v1^-1", "v1", "h"), ("v2", "v2^-1 v1 v2", "h"), ((3, 2),), "exchange v1,v2"),
    ),
    "N3": (
        _C(("v1", "v2 h", "h"), ("v1", "v2 h^-1", "h"), ((2, 1), (4, 3)), "v2 -> v2 h"),
    ),
}

# Affine representations of the primary presentations, found by
# tools/build_reps.py: lattice coordinates, h is the unit z-translation.
# Each generator: (linear part rows, translation).
_REPS: Dict[str, list] = {
    "M1": [
        (((1, 0, 0), (0, 1, 0), (0, 0, 1)), ("1/2", -1, 1)),
        (((1, 0, 0), (0, 1, 0), (0, 0, 1)), ("1/2", "1/2", 2)),
        (((1, 0, 0), (0, 1, 0), (0, 0, 1)), (0, 0, 1)),
    ],
    "M2": [
        (((-1, 0, 0), (0, -1, 0), (0, 0, 1)), (0, "1/2", "-1/2")),
        (((-1, 0, 0), (0, -1, 0), (0, 0, 1)), ("1/2", -1, "-1/2")),
        (((-1, 0, 0), (0, -1, 0), (0, 0, 1)), (1, "1/2", "-1/2")),
        (((-1, 0, 0), (0, -1, 0), (0, 0, 1)), ("1/2", 2, "-1/2")),
        (((1, 0, 0), (0, 1, 0), (0, 0, 1)), (0, 0, 1)),
    ],
    "M3": [
        (((-1, -1, 0), (1, 0, 0), (0, 0, 1)), ("5/2", "-3/2", "-1/3")),
        (((-1, -1, 0), (1, 0, 0), (0, 0, 1)), ("1/2", -1, "-1/3")),
        (((-1, -1, 0), (1, 0, 0), (0, 0, 1)), (1, "1/2", "-1/3")),
        (((1, 0, 0), (0, 1, 0), (0, 0, 1)), (0, 0, 1)),
    ],
    "M4": [
        (((-1, 0, 0), (0, -1, 0), (0, 0, 1)), (2, 1, "-1/2")),
        (((0, -1, 0), (1, 0, 0), (0, 0, 1)), ("1/2", -1, "-1/4")),
        (((0, -1, 0), (1, 0, 0), (0, 0, 1)), (1, "1/2", "-1/4")),
        (((1, 0, 0), (0, 1, 0), (0, 0, 1)), (0, 0, 1)),
    ],
    "M5": [
        (((-1, 0, 0), (0, -1, 0), (0, 0, 1)), (2, 0, "-1/2")),
        (((-1, -1, 0), (1, 0, 0), (0, 0, 1)), ("1/2", -1, "-1/3")),
        (((0, -1, 0), (1, 1, 0), (0, 0, 1)), (1, "1/2", "-1/6")),
        (((1, 0, 0), (0, 1, 0), (0, 0, 1)), (0, 0, 1)),
    ],
    "M6": [
        (((-1, 0, 0), (0, -1, 0), (0, 0, 1)), ("5/2", -1, "-1/2")),
        (((-1, 0, 0), (0, -1, 0), (0, 0, 1)), ("1/2", -1, "-1/2")),
        (((1, 0, 0), (0, -1, 0), (0, 0, -1)), (1, "1/2", "1/2")),
        (((1, 0, 0), (0, 1, 0), (0, 0, 1)), (0, 0, 1)),
    ],
    "N1": [
        (((1, 0, 0), (0, -1, 0), (0, 0, 1)), (1, "1/2", "-1/2")),
        (((1, 0, 0), (0, -1, 0), (0, 0, 1)), (-1, 1, "1/2")),
        (((1, 0, 0), (0, 1, 0), (0, 0, 1)), (0, 0, 1)),
    ],
    "N2": [
        (((1, 0, 0), (0, -1, 0), (0, 0, 1)), (1, "1/2", 0)),
        (((1, 0, 0), (0, -1, 0), (0, 0, 1)), (-1, 1, "1/2")),
        (((1, 0, 0), (0, 1, 0), (0, 0, 1)), (0, 0, 1)),
    ],
    "N3": [
        (((1, 0, 0), (0, -1, 0), (0, 0, 1)), (1, "1/2", 0)),
        (((1, 0, 0), (0, -1, 0), (0, 0, -1)), (-1, 1, "1/2")),
        (((1, 0, 0), (0, 1, 0), (0, 0, 1)), (0, 0, 1)),
    ],
    "N4": [
        (((1, 0, 0), (0, -1, 0), (0, 0, 1)), (1, "1/2", "1/2")),
        (((1, 0, 0), (0, -1, 0), (0, 0, -1)), (-1, 1, "1/2")),
        (((1, 0, 0), (0, 1, 0), (0, 0, 1)), (0, 0, 1)),
    ],
}


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    forms: Tuple[SeifertInvariants, ...]
    orientable: bool
    h1: AbelianGroup
    rep: Tuple[AffineIsometry, ...]
    certificates: Tuple[AutomorphismCertificate, ...] = field(default=())
    reference_epis: Tuple[Z2Char, ...] = field(default=())

    @property
    def primary(self) -> SeifertInvariants:
        return self.forms[0]

    @property
    def presentation(self) -> Presentation:
        return _presentation(self.id)

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "forms": [f.to_json() for f in self.forms],
            "forms_text": [str(f) for f in self.forms],
            "h1": str(self.h1),
            "orientable": self.orientable,
        }


@lru_cache(maxsize=None)
def _presentation(mid: str) -> Presentation:
    return build_presentation(PRIMARY_FORMS[mid])


def _rep(mid: str) -> Tuple[AffineIsometry, ...]:
    return tuple(AffineIsometry.make(lin, tr) for lin, tr in _REPS[mid])


@lru_cache(maxsize=None)
def catalog() -> Tuple[CatalogEntry, ...]:
    return tuple(
        CatalogEntry(
            id=mid,
            forms=FORMS[mid],
            orientable=PRIMARY_FORMS[mid].orientable,
            h1=AbelianGroup.parse(H1[mid]),
            rep=_rep(mid),
            certificates=CERTIFICATES.get(mid, ()),
            reference_epis=REFERENCE_EPIS[mid],
        )
        for mid in IDS
    )


def entry(mid: str) -> CatalogEntry:
    for e in catalog():
        if e.id == mid:
            return e
    raise KeyError(f"unknown manifold {mid!r}; expected one of {', '.join(IDS)}")


def identify(h1: AbelianGroup, orientable: bool) -> str:
    hits = [e.id for e in catalog() if e.h1 == h1 and e.orientable == orientable]
    if len(hits) != 1:
        kind = "orientable" if orientable else "non-orientable"
        raise AmbiguousOrUnknown(f"{kind} manifold with H1 = {h1} matches {hits or 'nothing'}")
    return hits[0]


def is_trivial(mid: str, w: Word) -> bool:
    return eval_word(entry(mid).rep, w).is_identity()


def check_representation(mid: str) -> List[str]:
    """Problems with the stored representation (empty list when it is valid)."""
    e = entry(mid)
    p = e.presentation
    problems = []
    if len(e.rep) != p.ngens:
        return [f"{mid}: {len(e.rep)} affine maps for {p.ngens} generators"]
    for r in p.relators:
        if not eval_word(e.rep, r).is_identity():
            problems.append(f"{mid}: relator {r.format(p.generator_names)} is not the identity")
    try:
        holonomy_group(e.rep)
    except ValueError as exc:
        problems.append(f"{mid}: {exc}")
    if translation_rank(e.rep) != 3:
        problems.append(f"{mid}: translations do not span rank 3")
    return problems


def recompute_h1(mid: str) -> Dict[str, AbelianGroup]:
    return {str(f): abelianization(build_presentation(f)) for f in FORMS[mid]}
