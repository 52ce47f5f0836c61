"""Equivalence of epimorphisms onto Z2.

Two characters are merged only along verified automorphism certificates
(``phi ~ phi . theta``); distinct classes must then be told apart by the
cover they define or by their Z2-index.
"""

from __future__ import annotations

from typing import Dict, List, Sequence

from .catalog import AutomorphismCertificate, entry, is_trivial
from .covers import double_cover
from .fpgroup import Word, Z2Char, pull_back, z2_characters


class IncompleteSeparation(RuntimeError):
    """Two classes share cover and index but no certificate merges them."""


def check_homomorphism(mid: str, gen_images: Sequence[Word]) -> bool:
    p = entry(mid).presentation
    if len(gen_images) != p.ngens:
        return False
    return all(is_trivial(mid, r.substitute(gen_images)) for r in p.relators)


def verify_certificate(mid: str, cert: AutomorphismCertificate) -> bool:
    p = entry(mid).presentation
    try:
        fwd, inv = cert.words(p)
    except ValueError:
        return False
    if not (check_homomorphism(mid, fwd) and check_homomorphism(mid, inv)):
        return False
    for g in range(p.ngens):
        x = Word(((g, 1),))
        # theta(theta^-1(g)) and theta^-1(theta(g)) must both equal g
        if not is_trivial(mid, x.inverse() * inv[g].substitute(fwd)):
            return False
        if not is_trivial(mid, x.inverse() * fwd[g].substitute(inv)):
            return False
    return True


def act(mid: str, phi: Sequence[int], cert: AutomorphismCertificate) -> Z2Char:
    """``phi . theta``."""
    p = entry(mid).presentation
    fwd, _ = cert.words(p)
    return pull_back(phi, fwd, p.ngens)


def certificate_claims_hold(mid: str, cert: AutomorphismCertificate) -> bool:
    refs = entry(mid).reference_epis
    return all(act(mid, refs[j - 1], cert) == refs[i - 1] for i, j in cert.relates)


def partition_epimorphisms(mid: str, check_separation: bool = True) -> List[List[Z2Char]]:
    """Classes of epimorphisms, each sorted, ordered by their smallest member."""
    e = entry(mid)
    chars = z2_characters(e.presentation)
    parent: Dict[Z2Char, Z2Char] = {c: c for c in chars}

    def find(c: Z2Char) -> Z2Char:
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    for cert in e.certificates:
        if not verify_certificate(mid, cert):
            raise ValueError(f"{mid}: certificate {cert.label!r} does not verify")
        for c in chars:
            image = act(mid, c, cert)
            if image not in parent:
                raise ValueError(f"{mid}: {cert.label!r} maps {c} outside the epimorphisms")
            a, b = find(c), find(image)
            if a != b:
                parent[max(a, b)] = min(a, b)

    groups: Dict[Z2Char, List[Z2Char]] = {}
    for c in chars:
        groups.setdefault(find(c), []).append(c)
    classes = sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])

    if check_separation:
        seen = {}
        for cls in classes:
            reports = [double_cover(mid, c) for c in cls]
            keys = {(r.cover, r.index) for r in reports}
            if len(keys) != 1:
                raise ValueError(f"{mid}: class {cls} is not constant in (cover, index): {keys}")
            (key,) = keys
            if key in seen:
                raise IncompleteSeparation(
                    f"{mid}: classes {seen[key]} and {cls} both give cover {key[0]} with index {key[1]}"
                )
            seen[key] = cls
    return classes
