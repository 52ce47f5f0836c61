import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from flatseifert.catalog import FORMS, IDS
from flatseifert.fpgroup import Word
from flatseifert.seifert import (
    SeifertInvariants,
    build_presentation,
    derived_invariants,
    euler_number,
    is_flat,
    orbifold_euler_characteristic,
    orientation_character,
    reverse_orientation,
)


def rels(si):
    p = build_presentation(si)
    return [r.format(p.generator_names) for r in p.relators]


def test_m1_presentation():
    p = build_presentation(SeifertInvariants(0, "o1", 1))
    assert p.generator_names == ("v1", "v2", "h")
    assert rels(SeifertInvariants(0, "o1", 1)) == ["v1 h v1^-1 h^-1", "v2 h v2^-1 h^-1", "v1 v2 v1^-1 v2^-1"]


def test_n3_presentation():
    assert rels(SeifertInvariants(0, "n3", 2)) == ["v1 h v1^-1 h^-1", "v2 h v2^-1 h", "v1^2 v2^2"]


def test_m2_presentation():
    r = rels(SeifertInvariants(-2, "o1", 0, ((2, 1),) * 4))
    assert r[:4] == [f"s{k} h s{k}^-1 h^-1" for k in range(1, 5)]
    assert r[4:8] == [f"s{k}^2 h" for k in range(1, 5)]
    assert r[8] == "s1 s2 s3 s4 h^2"


def test_derived_invariants():
    m2 = SeifertInvariants(-2, "o1", 0, ((2, 1),) * 4)
    m4 = SeifertInvariants(-1, "o1", 0, ((2, 1), (4, 1), (4, 1)))
    assert tuple(vars(derived_invariants(m2)).values()) == (2, 0, 4)
    assert tuple(vars(derived_invariants(m4)).values()) == (4, 0, 3)
    assert tuple(vars(derived_invariants(SeifertInvariants(0, "o1", 1))).values()) == (1, 0, 0)


def test_orientation_character():
    assert orientation_character(SeifertInvariants(3, "o1", 2, ((5, 2),))) == (0, 0, 0, 0, 0, 0)
    assert orientation_character(SeifertInvariants(0, "n1", 2)) == (1, 1, 0)
    assert orientation_character(SeifertInvariants(0, "n3", 2)) == (1, 0, 0)
    assert orientation_character(SeifertInvariants(0, "n2", 2)) == (0, 0, 0)


def test_reverse_orientation():
    src = SeifertInvariants(-2, "o1", 0, ((3, 2),) * 3)
    assert reverse_orientation(src) == SeifertInvariants(-1, "o1", 0, ((3, 1),) * 3)
    m1 = SeifertInvariants(0, "o1", 1)
    assert reverse_orientation(m1) == m1
    with pytest.raises(ValueError):
        reverse_orientation(SeifertInvariants(0, "n1", 2))


coprime_pairs = st.tuples(st.integers(2, 9), st.integers(-9, 9)).filter(lambda p: __import__("math").gcd(*p) == 1)
orientable_si = st.builds(
    SeifertInvariants,
    st.integers(-5, 5),
    st.sampled_from(["o1", "n2"]),
    st.integers(1, 3),
    st.lists(coprime_pairs, max_size=4).map(tuple),
)


@given(orientable_si)
def test_reverse_orientation_is_involution(si):
    assert reverse_orientation(reverse_orientation(si)).same_as(si)


any_si = st.builds(
    SeifertInvariants,
    st.integers(-5, 5),
    st.sampled_from(["o1", "o2", "n1", "n2", "n3", "n4"]),
    st.integers(3, 4),
    st.lists(coprime_pairs, max_size=3).map(tuple),
)


@given(any_si)
def test_json_roundtrip(si):
    assert SeifertInvariants.loads(json.dumps(si.to_json())) == si


@given(any_si)
def test_presentation_shape(si):
    p = build_presentation(si)
    assert p.ngens == si.n + si.n_base_gens + 1
    assert len(p.relators) == 2 * si.n + si.n_base_gens + 1
    assert len(orientation_character(si)) == p.ngens


def test_validation():
    with pytest.raises(ValueError):
        SeifertInvariants(0, "o3", 1)
    with pytest.raises(ValueError):
        SeifertInvariants(0, "n3", 1)
    with pytest.raises(ValueError):
        SeifertInvariants(0, "o1", 0, ((4, 2),))
    with pytest.raises(ValueError):
        SeifertInvariants(0, "o1", 0, ((1, 1),))
    with pytest.raises(ValueError):
        SeifertInvariants.from_json({"b": 0, "g": 1})


def test_nonorientable_b_is_mod_2():
    assert SeifertInvariants(5, "n1", 2).b == 1
    assert SeifertInvariants(-2, "o2", 1).b == 0
    assert SeifertInvariants(-2, "o1", 1).b == -2


def test_single_crosscap_generator_name():
    assert build_presentation(SeifertInvariants(-1, "n2", 1, ((2, 1), (2, 1)))).generator_names == ("s1", "s2", "v", "h")


@pytest.mark.parametrize("mid", IDS)
def test_catalog_forms_are_flat(mid):
    for f in FORMS[mid]:
        assert is_flat(f)
        assert orbifold_euler_characteristic(f) == 0


def test_non_flat_examples():
    nil = SeifertInvariants(1, "o1", 1)
    assert euler_number(nil) == -1 and not is_flat(nil)
    assert not is_flat(SeifertInvariants(0, "o1", 0, ((2, 1), (2, 1), (3, 1))))
    assert orbifold_euler_characteristic(SeifertInvariants(0, "o1", 2)) == Fraction(-2)


def test_euler_number_applies_to_n2():
    assert is_flat(SeifertInvariants(0, "n2", 2))
    assert not is_flat(SeifertInvariants(1, "n2", 2))
