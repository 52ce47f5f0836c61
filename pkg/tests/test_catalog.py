import pytest

from flatseifert.catalog import (
    FORMS, IDS, AmbiguousOrUnknown, catalog, entry, identify, recompute_h1,
)
from flatseifert.fpgroup import AbelianGroup
from flatseifert.seifert import SeifertInvariants


def test_ten_entries_with_unique_signature():
    entries = catalog()
    assert [e.id for e in entries] == list(IDS)
    assert len({(e.h1, e.orientable) for e in entries}) == 10


def test_forms():
    assert entry("M6").primary == SeifertInvariants(-1, "n2", 1, ((2, 1), (2, 1)))
    assert entry("N4").forms == (SeifertInvariants(1, "n3", 2), SeifertInvariants(0, "n1", 1, ((2, 1), (2, 1))))


@pytest.mark.parametrize("mid", IDS)
def test_h1_agrees_across_forms(mid):
    assert set(recompute_h1(mid).values()) == {entry(mid).h1}
    assert all(f.orientable == entry(mid).orientable for f in FORMS[mid])


def test_identify():
    assert identify(AbelianGroup(3, ()), True) == "M1"
    assert identify(AbelianGroup(1, (2, 2)), True) == "M2"
    assert identify(AbelianGroup(1, (2, 2)), False) == "N3"
    with pytest.raises(AmbiguousOrUnknown):
        identify(AbelianGroup(5, ()), True)


def test_unknown_id():
    with pytest.raises(KeyError):
        entry("M7")


def test_json_shape():
    d = entry("N1").to_json()
    assert d["id"] == "N1" and d["h1"] == "Z^2 + Z/2" and d["orientable"] is False
    assert d["forms"][0] == {"b": 0, "type": "n1", "g": 2, "pairs": []}
