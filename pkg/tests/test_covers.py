import pytest

from flatseifert.affine import eval_word
from flatseifert.catalog import IDS, entry
from flatseifert.covers import (
    cover_orientable, double_cover, kernel_presentation_index2, schreier_rewrite, transversal_choices,
)
from flatseifert.fpgroup import AbelianGroup, Word, abelianization, z2_characters
from flatseifert.seifert import SeifertInvariants

PAIRS = [(mid, phi) for mid in IDS for phi in z2_characters(entry(mid).presentation)]


def test_pair_count():
    assert len(PAIRS) == 42


@pytest.mark.parametrize("mid,phi", PAIRS)
def test_schreier_bookkeeping(mid, phi):
    p = entry(mid).presentation
    raw = schreier_rewrite(p, phi)
    assert raw.ngens == 2 * p.ngens - 1
    assert len(raw.relators) == 2 * len(p.relators)
    assert raw.deficiency == 2 * p.deficiency - 1


def _schreier_words(p, phi, t):
    """Each Schreier generator x_c as a word in the base generators."""
    reps = {0: Word(()), 1: Word(((t, 1),))}
    out = []
    for c in (0, 1):
        for x in range(p.ngens):
            if (x, c) == (t, 0):
                continue
            out.append(reps[c] * Word(((x, 1),)) * reps[c ^ phi[x]].inverse())
    return out


@pytest.mark.parametrize("mid,phi", PAIRS)
def test_kernel_embeds_in_base(mid, phi):
    # generators land in ker phi and relators hold in the faithful affine image
    e = entry(mid)
    p = e.presentation
    for t in transversal_choices(phi):
        raw = schreier_rewrite(p, phi, t)
        images = _schreier_words(p, phi, t)
        for w in images:
            assert sum(ex * phi[g] for g, ex in w.letters) % 2 == 0
        for r in raw.relators:
            assert eval_word(e.rep, r.substitute(images)).is_identity()


@pytest.mark.parametrize("mid,phi", [(m, f) for m, f in PAIRS if len(transversal_choices(f)) > 1])
def test_transversal_invariance(mid, phi):
    p = entry(mid).presentation
    groups = {abelianization(schreier_rewrite(p, phi, t)) for t in transversal_choices(phi)}
    assert len(groups) == 1


def test_kernel_examples():
    for phi in z2_characters(entry("M1").presentation):
        assert abelianization(kernel_presentation_index2(entry("M1").presentation, phi)) == AbelianGroup(3, ())
    assert abelianization(kernel_presentation_index2(entry("M2").presentation, (1, 1, 1, 1, 0))) == AbelianGroup(3, ())
    assert abelianization(kernel_presentation_index2(entry("N1").presentation, (1, 0, 1))) == AbelianGroup(2, ())


def test_cover_orientability():
    n3 = entry("N3").primary
    assert cover_orientable(n3, (1, 0, 0))
    assert not cover_orientable(n3, (0, 1, 0))
    m2 = entry("M2").primary
    assert all(cover_orientable(m2, phi) for phi in z2_characters(entry("M2").presentation))


def test_double_cover_examples():
    assert double_cover("M5", (1, 0, 1, 0)).cover == "M3"
    assert double_cover("N4", (1, 0, 0)).cover == "M2"
    assert double_cover("N3", (0, 1, 1)).cover == "N3"


def test_bad_transversal_and_zero_character():
    p = entry("M1").presentation
    with pytest.raises(ValueError):
        schreier_rewrite(p, (0, 0, 0))
    with pytest.raises(ValueError):
        schreier_rewrite(p, (1, 0, 0), t=1)


def test_non_flat_cover_is_unknown():
    si = SeifertInvariants(0, "o1", 0, ((2, 1), (2, 1), (3, 1)))
    r = double_cover(si, (1, 1, 0, 0), strict=False)
    assert r.cover is None
    assert r.to_json()["cover"] is None
