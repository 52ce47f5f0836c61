"""Finitely presented groups: words, presentations, abelianization, Z2 characters.

Words are run-length encoded: a word is a tuple of ``(generator, exponent)``
letters with 0-based generator indices and nonzero exponents.  Characters to
Z2 (and their integral lifts) are plain tuples indexed by generator.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import gf2
from .smith import integer_kernel, smith_normal_form

Letter = Tuple[int, int]
Z2Char = Tuple[int, ...]
IntChar = Tuple[int, ...]


@dataclass(frozen=True)
class Word:
    letters: Tuple[Letter, ...] = ()

    @classmethod
    def of(cls, *letters: Letter) -> "Word":
        return cls(tuple(letters)).reduced()

    def reduced(self) -> "Word":
        return free_reduce(self)

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def __mul__(self, other: "Word") -> "Word":
        return free_reduce(Word(self.letters + other.letters))

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else self.inverse()
        return free_reduce(Word(base.letters * abs(k)))

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def exponent_sums(self, ngens: int) -> List[int]:
        sums = [0] * ngens
        for g, e in self.letters:
            sums[g] += e
        return sums

    def generators(self) -> set:
        return {g for g, _ in self.letters}

    def substitute(self, images: Sequence["Word"]) -> "Word":
        """Replace generator ``i`` by ``images[i]`` everywhere."""
        out: List[Letter] = []
        for g, e in self.letters:
            img = images[g] if e > 0 else images[g].inverse()
            out.extend(img.letters * abs(e))
        return free_reduce(Word(tuple(out)))

    def format(self, names: Sequence[str]) -> str:
        if not self.letters:
            return "1"
        return " ".join(names[g] if e == 1 else f"{names[g]}^{e}" for g, e in self.letters)


def free_reduce(w: Word) -> Word:
    stack: List[List[int]] = []
    for g, e in w.letters:
        if e == 0:
            continue
        if stack and stack[-1][0] == g:
            stack[-1][1] += e
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([g, e])
    return Word(tuple((g, e) for g, e in stack))


def cyclic_reduce(w: Word) -> Word:
    """Free reduction followed by cancellation across the ends (a conjugate)."""
    letters = list(free_reduce(w).letters)
    while len(letters) > 1 and letters[0][0] == letters[-1][0]:
        g, e = letters[0][0], letters[0][1] + letters[-1][1]
        letters = letters[1:-1]
        if e:
            letters = [(g, e)] + letters
        letters = list(free_reduce(Word(tuple(letters))).letters)
    return Word(tuple(letters))


_TOKEN = re.compile(r"^([A-Za-z_][A-Za-z0-9_']*)(?:\^(-?\d+))?$")


def parse_word(text: str, names: Sequence[str]) -> Word:
    """Parse ``"v1 h^-1 v1^-1"``-style text over the given generator names."""
    index = {n: i for i, n in enumerate(names)}
    letters = []
    for tok in text.split():
        if tok == "1":
            continue
        m = _TOKEN.match(tok)
        if not m or m.group(1) not in index:
            raise ValueError(f"bad token {tok!r} (generators: {', '.join(names)})")
        e = int(m.group(2)) if m.group(2) else 1
        if e:
            letters.append((index[m.group(1)], e))
    return free_reduce(Word(tuple(letters)))


@dataclass(frozen=True)
class Presentation:
    generator_names: Tuple[str, ...]
    relators: Tuple[Word, ...]

    def __post_init__(self) -> None:
        n = len(self.generator_names)
        for r in self.relators:
            for g, _ in r.letters:
                if not 0 <= g < n:
                    raise ValueError(f"relator uses generator {g} outside 0..{n - 1}")

    @property
    def ngens(self) -> int:
        return len(self.generator_names)

    @property
    def deficiency(self) -> int:
        return self.ngens - len(self.relators)

    def relation_matrix(self) -> List[List[int]]:
        return [r.exponent_sums(self.ngens) for r in self.relators]

    def word(self, text: str) -> Word:
        return parse_word(text, self.generator_names)

    def format(self) -> str:
        rels = ", ".join(r.format(self.generator_names) for r in self.relators)
        return f"< {', '.join(self.generator_names)} | {rels} >"


@dataclass(frozen=True)
class AbelianGroup:
    rank: int
    torsion: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if any(t < 2 for t in self.torsion):
            raise ValueError("torsion coefficients must be >= 2")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise ValueError("torsion coefficients must be in divisibility order")

    def __str__(self) -> str:
        parts = [f"Z^{self.rank}"] if self.rank > 1 else ["Z"] * self.rank
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"

    @classmethod
    def parse(cls, text: str) -> "AbelianGroup":
        rank, torsion = 0, []
        for part in text.replace(" ", "").split("+"):
            if part in ("", "0"):
                continue
            if part == "Z":
                rank += 1
            elif part.startswith("Z^"):
                rank += int(part[2:])
            elif part.startswith("Z/"):
                torsion.append(int(part[2:]))
            else:
                raise ValueError(f"cannot parse abelian group {text!r}")
        return cls(rank, tuple(sorted(torsion)))


def abelianization(p: Presentation) -> AbelianGroup:
    _, d, _ = smith_normal_form(p.relation_matrix(), p.ngens)
    diag = [d[i][i] for i in range(min(len(d), p.ngens))]
    nonzero = [x for x in diag if x]
    return AbelianGroup(p.ngens - len(nonzero), tuple(x for x in nonzero if x > 1))


def is_homomorphism_mod2(p: Presentation, phi: Sequence[int]) -> bool:
    return all(sum(a * b for a, b in zip(row, phi)) % 2 == 0 for row in p.relation_matrix())


def z2_characters(p: Presentation) -> List[Z2Char]:
    """All epimorphisms onto Z2, lexicographic in the generator order."""
    rows = [[x % 2 for x in row] for row in p.relation_matrix()]
    basis = gf2.nullspace(rows, p.ngens)
    return [v for v in gf2.span(basis, p.ngens) if any(v)]


def integral_lift(p: Presentation, phi: Sequence[int]) -> Optional[IntChar]:
    """A homomorphism to Z congruent to ``phi`` mod 2, or None if none exists."""
    kernel = integer_kernel(p.relation_matrix(), p.ngens)
    coeffs = gf2.solve(kernel, phi)
    if coeffs is None:
        return None
    psi = [0] * p.ngens
    for c, col in zip(coeffs, kernel):
        if c:
            psi = [a + b for a, b in zip(psi, col)]
    return _shorten_mod2(tuple(psi), kernel)


def _shorten_mod2(psi: Tuple[int, ...], kernel: List[List[int]]) -> IntChar:
    # Greedy cosmetic pass: add even multiples of kernel vectors while that
    # shrinks the l1 norm.  Keeps witnesses small; parity is untouched.
    def norm(v: Sequence[int]) -> int:
        return sum(abs(x) for x in v)

    improved = True
    while improved:
        improved = False
        for col in kernel:
            for k in (2, -2):
                cand = tuple(a + k * b for a, b in zip(psi, col))
                if norm(cand) < norm(psi):
                    psi, improved = cand, True
    return psi


def is_integral_lift(p: Presentation, phi: Sequence[int], psi: Sequence[int]) -> bool:
    if len(psi) != p.ngens:
        return False
    kills = all(sum(a * b for a, b in zip(row, psi)) == 0 for row in p.relation_matrix())
    return kills and all((a - b) % 2 == 0 for a, b in zip(psi, phi))


def pull_back(phi: Sequence[int], images: Sequence[Word], ngens: int) -> Z2Char:
    """The character ``phi . theta`` where ``theta`` sends generator i to images[i]."""
    return tuple(
        sum(a * b for a, b in zip(img.exponent_sums(ngens), phi)) % 2 for img in images
    )


# --------------------------------------------------------------------------
# Tietze simplification


def tietze_simplify(p: Presentation, max_passes: int = 100) -> Presentation:
    """Simplify by generator elimination, free/cyclic reduction and dedup.

    Never guaranteed to be minimal; the group is unchanged up to isomorphism.
    """
    names = list(p.generator_names)
    rels = [cyclic_reduce(r) for r in p.relators]
    alive = list(range(len(names)))

    for _ in range(max_passes):
        rels = _dedup(r for r in rels if r)
        pick = _find_eliminable(rels)
        if pick is None:
            break
        ri, pos = pick
        rel = rels[ri]
        g, e = rel.letters[pos]
        # rotate so that g^e comes first: g^e w = 1  =>  g = w^-e
        rest = Word(rel.letters[pos + 1:] + rel.letters[:pos])
        value = rest.inverse() if e == 1 else rest
        images = [Word(((i, 1),)) for i in range(len(names))]
        images[g] = value
        rels = [cyclic_reduce(r.substitute(images)) for j, r in enumerate(rels) if j != ri]
        alive.remove(g)

    # renumber surviving generators
    remap = {old: new for new, old in enumerate(alive)}
    out = tuple(
        Word(tuple((remap[g], e) for g, e in r.letters)) for r in _dedup(r for r in rels if r)
    )
    return Presentation(tuple(names[i] for i in alive), out)


def _find_eliminable(rels: List[Word]) -> Optional[Tuple[int, int]]:
    best = None
    for ri, r in enumerate(rels):
        counts: Dict[int, int] = {}
        for g, e in r.letters:
            counts[g] = counts.get(g, 0) + abs(e)
        for pos, (g, e) in enumerate(r.letters):
            if abs(e) == 1 and counts[g] == 1:
                key = (len(r), ri, pos)
                if best is None or key < best:
                    best = key
                break
    return None if best is None else (best[1], best[2])


def _canonical(w: Word) -> Tuple[Letter, ...]:
    # smallest rotation of w or w^-1; identifies relators equal up to
    # cyclic permutation and inversion
    cands = []
    for v in (w, w.inverse()):
        ls = v.letters
        for i in range(len(ls)):
            cands.append(ls[i:] + ls[:i])
    return min(cands) if cands else ()


def _dedup(rels: Iterable[Word]) -> List[Word]:
    seen, out = set(), []
    for r in rels:
        key = _canonical(r)
        if key not in seen:
            seen.add(key)
            out.append(r)
    return out
