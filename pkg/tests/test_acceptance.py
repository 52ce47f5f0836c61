"""Acceptance criteria, one test each; characters use reference numbering."""

import itertools
import random
from collections import Counter

from flatseifert.catalog import IDS, entry
from flatseifert.covers import double_cover, schreier_rewrite, transversal_choices
from flatseifert.equivalence import certificate_claims_hold, partition_epimorphisms, verify_certificate
from flatseifert.fpgroup import abelianization, integral_lift, is_integral_lift, tietze_simplify, z2_characters
from flatseifert.report import full_classification, source_degrees
from flatseifert.seifert import SeifertInvariants, reverse_orientation
from flatseifert.smith import determinant, matmul, smith_normal_form


def ref(mid, k):
    return entry(mid).reference_epis[k - 1]


def test_criterion_1_epimorphism_counts():
    got = tuple(len(z2_characters(entry(m).presentation)) for m in IDS)
    assert got == (7, 7, 1, 3, 1, 3, 7, 3, 7, 3)


def test_criterion_2_classification_graph():
    expected = Counter()
    for cover, targets in {
        "M1": [("M1", 1), ("M2", 1), ("N1", 1), ("N2", 1)],
        "M2": [("M2", 2), ("M4", 1), ("N3", 2), ("N4", 2), ("M6", 2)],
        "M3": [("M3", 1), ("M5", 1)],
        "M4": [("M4", 3)],
        "N1": [("N1", 2), ("N1", 1), ("N2", 1), ("N3", 1), ("N3", 2), ("N4", 1), ("N4", 2)],
        "N2": [("N1", 3)],
        "N3": [("N3", 3)],
        "N4": [("N3", 2)],
    }.items():
        for base, index in targets:
            expected[(cover, base, index)] += 1
    edges = full_classification()
    assert sum(expected.values()) == 22
    assert Counter(e.key() for e in edges) == expected
    assert source_degrees(edges) == (4, 5, 2, 1, 0, 0, 7, 1, 1, 1)


COVERS = {
    ("M1", k): "M1" for k in range(1, 8)
} | {("M2", k): "M2" for k in range(1, 7)} | {
    ("M2", 7): "M1", ("M3", 1): "M3", ("M4", 1): "M4", ("M4", 2): "M4", ("M4", 3): "M2",
    ("M5", 1): "M3", ("M6", 1): "M2", ("M6", 2): "M2", ("M6", 3): "M2",
    ("N1", 1): "N1", ("N1", 2): "N2", ("N1", 3): "N2", ("N1", 4): "N1", ("N1", 5): "M1",
    ("N1", 6): "N1", ("N1", 7): "N1",
    ("N2", 1): "M1", ("N2", 2): "N1", ("N2", 3): "N1",
    ("N3", 1): "N4", ("N3", 2): "N4", ("N3", 3): "N3", ("N3", 4): "N3", ("N3", 5): "N1",
    ("N3", 6): "M2", ("N3", 7): "N1",
    ("N4", 1): "N1", ("N4", 2): "M2", ("N4", 3): "N1",
}


def test_criterion_3_cover_identifications():
    assert len(COVERS) == 42
    wrong = {}
    for (base, k), want in COVERS.items():
        got = double_cover(base, ref(base, k)).cover
        if got != want:
            wrong[(base, k)] = (want, got)
    assert not wrong


CLAIMED_LIFTS = [
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
]
CLAIMED_NO_LIFT = [("M2", 1), ("M6", 1), ("N1", 6), ("N3", 1), ("N3", 6), ("N3", 7), ("N4", 2), ("N4", 3)]


def test_criterion_4_lift_witnesses_and_no_lift_claims():
    invalid = [
        (base, k, psi) for base, k, psi in CLAIMED_LIFTS
        if not is_integral_lift(entry(base).presentation, ref(base, k), psi)
    ]
    wrongly_lifting = [
        (base, k) for base, k in CLAIMED_NO_LIFT
        if integral_lift(entry(base).presentation, ref(base, k)) is not None
    ]
    assert not wrongly_lifting, f"claimed non-liftable but a lift exists: {wrongly_lifting}"
    assert not invalid, f"claimed witnesses failing the relator or parity check: {invalid}"


def test_criterion_5_automorphism_certificates():
    certs = [(m, c) for m in IDS for c in entry(m).certificates]
    labels = {(m, c.label) for m, c in certs}
    assert ("M6", "theta: s1 -> v, v -> s1") in labels
    assert ("N1", "v1 -> h v1, v2 -> h^-1 v2") in labels
    failing = [(m, c.label) for m, c in certs if not (verify_certificate(m, c) and certificate_claims_hold(m, c))]
    assert not failing


def test_criterion_6_property_suites():
    rng = random.Random(6)
    for _ in range(200):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        m = [[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)]
        u, d, v = smith_normal_form(m)
        assert matmul(matmul(u, m), v) == d
        assert abs(determinant(u)) == 1 and abs(determinant(v)) == 1

    for mid in IDS:
        p = entry(mid).presentation
        brute = sorted(
            phi for phi in itertools.product((0, 1), repeat=p.ngens)
            if any(phi) and all(sum(e * phi[g] for g, e in w.letters) % 2 == 0 for w in p.relators)
        )
        assert z2_characters(p) == brute
        assert abelianization(tietze_simplify(p)) == abelianization(p)

    pairs = [(mid, phi) for mid in IDS for phi in z2_characters(entry(mid).presentation)]
    assert len(pairs) == 42
    for mid, phi in pairs:
        p = entry(mid).presentation
        raw = schreier_rewrite(p, phi)
        assert raw.deficiency == 2 * p.deficiency - 1
        assert abelianization(tietze_simplify(raw)) == abelianization(raw)
        choices = transversal_choices(phi)
        if len(choices) > 1:
            assert len({abelianization(schreier_rewrite(p, phi, t)) for t in choices}) == 1


def test_criterion_7_reverse_orientation_identity():
    src = SeifertInvariants(-2, "o1", 0, ((3, 2),) * 3)
    assert reverse_orientation(src) == SeifertInvariants(-1, "o1", 0, ((3, 1),) * 3)
    assert reverse_orientation(src).same_as(entry("M3").primary)


def test_criterion_8_inequivalent_n1_covers():
    for base, i, j in (("N1", 4, 6), ("N3", 5, 7), ("N4", 1, 3)):
        a, b = double_cover(base, ref(base, i)), double_cover(base, ref(base, j))
        assert a.cover == b.cover == "N1"
        assert (a.index, b.index) == (1, 2)
        classes = partition_epimorphisms(base)
        assert not any(ref(base, i) in c and ref(base, j) in c for c in classes)
