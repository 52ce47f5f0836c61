"""Frozen reference results and the checks run by ``flatseifert check``.

Characters are referred to by their reference number (1-based position in
``catalog.REFERENCE_EPIS``).
"""

from __future__ import annotations

import itertools
import random
import warnings
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Tuple

from .borsuk_ulam import OddMultiplicityWarning, decide
from .catalog import IDS, entry
from .covers import double_cover, schreier_rewrite, transversal_choices
from .equivalence import certificate_claims_hold, partition_epimorphisms, verify_certificate
from .fpgroup import abelianization, integral_lift, is_integral_lift, tietze_simplify, z2_characters
from .report import full_classification, source_degrees
from .seifert import SeifertInvariants, build_presentation, reverse_orientation
from .smith import determinant, matmul, smith_normal_form

EPI_COUNTS = dict(zip(IDS, (7, 7, 1, 3, 1, 3, 7, 3, 7, 3)))

# (cover, base, index) with multiplicity
GRAPH = Counter({
    ("M1", "M1", 1): 1, ("M1", "M2", 1): 1, ("M1", "N1", 1): 1, ("M1", "N2", 1): 1,
    ("M2", "M2", 2): 1, ("M2", "M4", 1): 1, ("M2", "N3", 2): 1, ("M2", "N4", 2): 1, ("M2", "M6", 2): 1,
    ("M3", "M3", 1): 1, ("M3", "M5", 1): 1,
    ("M4", "M4", 3): 1,
    ("N1", "N1", 2): 1, ("N1", "N1", 1): 1, ("N1", "N2", 1): 1, ("N1", "N3", 1): 1,
    ("N1", "N3", 2): 1, ("N1", "N4", 1): 1, ("N1", "N4", 2): 1,
    ("N2", "N1", 3): 1,
    ("N3", "N3", 3): 1,
    ("N4", "N3", 2): 1,
})
SOURCE_DEGREES = (4, 5, 2, 1, 0, 0, 7, 1, 1, 1)

# base -> {reference number: (cover, index)}
COVERS: Dict[str, Dict[int, Tuple[str, int]]] = {
    "M1": {i: ("M1", 1) for i in range(1, 8)},
    "M2": {**{i: ("M2", 2) for i in range(1, 7)}, 7: ("M1", 1)},
    "M3": {1: ("M3", 1)},
    "M4": {1: ("M4", 3), 2: ("M4", 3), 3: ("M2", 1)},
    "M5": {1: ("M3", 1)},
    "M6": {1: ("M2", 2), 2: ("M2", 2), 3: ("M2", 2)},
    "N1": {1: ("N1", 1), 4: ("N1", 1), 6: ("N1", 2), 7: ("N1", 2),
           2: ("N2", 3), 3: ("N2", 3), 5: ("M1", 1)},
    "N2": {1: ("M1", 1), 2: ("N1", 1), 3: ("N1", 1)},
    "N3": {3: ("N3", 3), 4: ("N3", 3), 7: ("N1", 2), 6: ("M2", 2),
           1: ("N4", 2), 2: ("N4", 2), 5: ("N1", 1)},
    "N4": {1: ("N1", 1), 2: ("M2", 2), 3: ("N1", 2)},
}

CLASSES: Dict[str, Tuple[Tuple[int, ...], ...]] = {
    "M1": ((1, 2, 3, 4, 5, 6, 7),),
    "M2": ((1, 2, 3, 4, 5, 6), (7,)),
    "M3": ((1,),),
    "M4": ((1, 2), (3,)),
    "M5": ((1,),),
    "M6": ((1, 2, 3),),
    "N1": ((1, 4), (2, 3), (5,), (6, 7)),
    "N2": ((1,), (2, 3)),
    "N3": ((1, 2), (3, 4), (5,), (6,), (7,)),
    "N4": ((1,), (2,), (3,)),
}

# claimed integral lifts, kept verbatim
LIFT_WITNESSES: Tuple[Tuple[str, int, Tuple[int, ...]], ...] = (
    ("M2", 7, (1, 1, 1, 1, -2)),
    ("M3", 1, (1, 1, 1, -3)),
    ("M4", 3, (2, 1, 1, -4)),
    ("M5", 1, (3, 2, 1, -6)),
    ("N1", 1, (2, -2, 1)),
    ("N1", 5, (1, -2, 0)),
    ("N2", 1, (1, 0, 0)),
    ("N2", 2, (1, 0, -2)),
    ("N3", 5, (1, 1, 0)),
    ("N4", 1, (1, -1, 0)),
)

# claimed "no integral lift" cases
NO_LIFT: Tuple[Tuple[str, int], ...] = (
    ("M2", 1), ("M6", 1), ("N1", 6),
    ("N3", 1), ("N3", 6), ("N3", 7),
    ("N4", 2), ("N4", 3),
)

# pairs of double covers with the same total space that are not equivalent:
# (base, reference number with index 1, reference number with index 2)
INEQUIVALENT_PAIRS: Tuple[Tuple[str, int, int], ...] = (("N1", 4, 6), ("N3", 5, 7), ("N4", 1, 3))

REVERSED = (
    SeifertInvariants(-2, "o1", 0, ((3, 2),) * 3),
    SeifertInvariants(-1, "o1", 0, ((3, 1),) * 3),
)


@dataclass(frozen=True)
class CheckResult:
    criterion: int
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        tail = f"  ({self.detail})" if self.detail else ""
        label = f"{self.criterion}." if self.criterion else "+"
        return f"[{mark}] {label} {self.name}{tail}"


def ref(mid: str, k: int):
    return entry(mid).reference_epis[k - 1]


def check_epi_counts() -> Iterator[CheckResult]:
    got = {m: len(z2_characters(entry(m).presentation)) for m in IDS}
    bad = {m: got[m] for m in IDS if got[m] != EPI_COUNTS[m]}
    yield CheckResult(1, "epimorphism counts", not bad, f"mismatch {bad}" if bad else "")


def check_graph() -> Iterator[CheckResult]:
    edges = full_classification()
    got = Counter(e.key() for e in edges)
    diff = (got - GRAPH) + (GRAPH - got)
    yield CheckResult(2, "classification graph edge multiset", not diff,
                      f"{sum(got.values())} edges" + (f", differs on {dict(diff)}" if diff else ""))
    deg = source_degrees(edges)
    yield CheckResult(2, "source-degree vector", deg == SOURCE_DEGREES, str(deg))


def check_covers() -> Iterator[CheckResult]:
    for base in IDS:
        for k, expected in sorted(COVERS[base].items()):
            r = double_cover(base, ref(base, k))
            got = (r.cover, r.index)
            yield CheckResult(3, f"{base} phi_{k} -> cover {expected[0]}, index {expected[1]}",
                              got == expected, "" if got == expected else f"got {got}")


def check_lifts() -> Iterator[CheckResult]:
    for base, k, psi in LIFT_WITNESSES:
        p = entry(base).presentation
        ok = is_integral_lift(p, ref(base, k), psi)
        detail = ""
        if not ok:
            found = integral_lift(p, ref(base, k))
            detail = f"claimed witness invalid; computed lift {found}"
        yield CheckResult(4, f"{base} phi_{k} lift witness {psi}", ok, detail)
    for base, k in NO_LIFT:
        found = integral_lift(entry(base).presentation, ref(base, k))
        yield CheckResult(4, f"{base} phi_{k} admits no lift", found is None,
                          "" if found is None else f"found {found}")


def check_certificates() -> Iterator[CheckResult]:
    for base in IDS:
        for cert in entry(base).certificates:
            ok = verify_certificate(base, cert) and certificate_claims_hold(base, cert)
            yield CheckResult(5, f"{base} automorphism {cert.label}", ok)


def check_classes() -> Iterator[CheckResult]:
    for base in IDS:
        refs = entry(base).reference_epis
        got = sorted(tuple(sorted(refs.index(c) + 1 for c in cls)) for cls in partition_epimorphisms(base))
        want = sorted(CLASSES[base])
        yield CheckResult(5, f"{base} equivalence classes", got == want, str(got))


def check_reverse_orientation() -> Iterator[CheckResult]:
    src, want = REVERSED
    got = reverse_orientation(src)
    yield CheckResult(7, f"reverse_orientation {src}", got.same_as(want), str(got))


def check_inequivalent() -> Iterator[CheckResult]:
    for base, i, j in INEQUIVALENT_PAIRS:
        a, b = double_cover(base, ref(base, i)), double_cover(base, ref(base, j))
        ok = a.cover == b.cover == "N1" and (a.index, b.index) == (1, 2)
        yield CheckResult(8, f"{base}: phi_{i} and phi_{j} give N1 with indices 1 vs 2", ok,
                          f"{a.cover}:{a.index} vs {b.cover}:{b.index}")


def check_index_consistency() -> Iterator[CheckResult]:
    bad = []
    for base in IDS:
        forms = entry(base).forms
        for phi in z2_characters(entry(base).presentation):
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", OddMultiplicityWarning)
                d = decide(base, phi)
            if (d.lift is None) == (d.index == 1):
                bad.append((base, phi))
        if len(forms) > 1:
            idx = [sorted(Counter(decide(f, phi).index for phi in z2_characters(build_presentation(f))).items())
                   for f in forms]
            if any(x != idx[0] for x in idx):
                bad.append((base, "forms"))
    yield CheckResult(0, "index decisions consistent across forms", not bad, str(bad) if bad else "")


def _all_pairs():
    for base in IDS:
        for phi in z2_characters(entry(base).presentation):
            yield base, phi


def check_properties(seed: int = 0) -> Iterator[CheckResult]:
    rng = random.Random(seed)
    bad = 0
    for _ in range(200):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        m = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        u, d, v = smith_normal_form(m)
        if matmul(matmul(u, m), v) != d or abs(determinant(u)) != 1 or abs(determinant(v)) != 1:
            bad += 1
    yield CheckResult(6, "Smith normal form U*M*V = D on 200 random matrices", not bad, f"{bad} failures")

    bad_chars = []
    for mid in IDS:
        p = entry(mid).presentation
        brute = [phi for phi in itertools.product((0, 1), repeat=p.ngens)
                 if any(phi) and all(sum(e * phi[g] for g, e in r.letters) % 2 == 0 for r in p.relators)]
        if sorted(brute) != sorted(z2_characters(p)):
            bad_chars.append(mid)
    yield CheckResult(6, "characters equal brute-force enumeration", not bad_chars, str(bad_chars or ""))

    bad_tietze, bad_def, bad_trans, pairs, multi = [], [], [], 0, 0
    for base, phi in _all_pairs():
        pairs += 1
        p = entry(base).presentation
        raw = schreier_rewrite(p, phi)
        if abelianization(tietze_simplify(raw)) != abelianization(raw):
            bad_tietze.append((base, phi))
        if raw.deficiency != 2 * p.deficiency - 1:
            bad_def.append((base, phi))
        choices = transversal_choices(phi)
        if len(choices) > 1:
            multi += 1
            groups = {str(abelianization(schreier_rewrite(p, phi, t))) for t in choices}
            if len(groups) != 1:
                bad_trans.append((base, phi))
    yield CheckResult(6, "Tietze simplification preserves abelianization", not bad_tietze, f"{pairs} pairs")
    yield CheckResult(6, "kernel deficiency law 2*def - 1", not bad_def, f"{pairs} pairs")
    yield CheckResult(6, "transversal-choice invariance", not bad_trans, f"{multi} pairs")


CHECKS: Tuple[Callable[[], Iterator[CheckResult]], ...] = (
    check_epi_counts, check_graph, check_covers, check_lifts, check_certificates,
    check_classes, check_properties, check_reverse_orientation, check_inequivalent, check_index_consistency,
)


def run_checks() -> List[CheckResult]:
    return [r for chk in CHECKS for r in chk()]
