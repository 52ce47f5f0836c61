import json

import pytest

from flatseifert.cli import main
from flatseifert.corpus import run_checks


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_catalog(capsys):
    code, out = run(capsys, "catalog", "--json")
    data = json.loads(out)
    assert code == 0 and len(data) == 10
    assert {"id", "forms", "h1", "orientable"} <= set(data[0])


def test_epis_cross_reference(capsys):
    _, out = run(capsys, "epis", "M2")
    assert "7: s1=1 s2=1 s3=1 s4=1 h=0" in out
    assert "ref phi_7" in out


def test_cover_and_index(capsys):
    _, out = run(capsys, "cover", "M2", "--epi", "7")
    assert "cover     M1" in out
    _, out = run(capsys, "index", "M4", "--epi", "2")
    assert out.strip().endswith("index 3: no integral lift, cup-cube = 1")


def test_epi_out_of_range():
    with pytest.raises(SystemExit):
        main(["cover", "M3", "--epi", "2"])
    with pytest.raises(SystemExit):
        main(["epis", "X9"])


def test_classes(capsys):
    _, out = run(capsys, "classes", "N4")
    assert len(out.strip().splitlines()) == 3


def test_graph_formats(capsys):
    for fmt in ("table", "json", "dot"):
        code, out = run(capsys, "graph", "--format", fmt)
        assert code == 0 and out
    with pytest.raises(SystemExit):
        main(["graph", "--format", "svg"])


def test_analyze(tmp_path, capsys):
    f = tmp_path / "m4.json"
    f.write_text(json.dumps({"b": -1, "type": "o1", "g": 0, "pairs": [[2, 1], [4, 1], [4, 1]]}))
    _, out = run(capsys, "analyze", "--input", str(f))
    data = json.loads(out)
    assert data["identified_as"] == "M4"
    assert [e["index"] for e in data["epimorphisms"]] == [1, 3, 3]
    assert data["derived"] == {"a": 4, "c": 0, "d": 3}

    f.write_text(json.dumps({"b": 0, "type": "o1", "g": 0, "pairs": [[2, 1], [2, 1], [3, 1]]}))
    _, out = run(capsys, "analyze", "--input", str(f))
    data = json.loads(out)
    assert data["flat"] is False and "cover" not in data["epimorphisms"][0]


def test_analyze_rejects_bad_input(tmp_path):
    f = tmp_path / "bad.json"
    f.write_text(json.dumps({"b": 0, "type": "o9", "g": 0}))
    with pytest.raises(SystemExit):
        main(["analyze", "--input", str(f)])


def test_check_exit_code_reflects_results(capsys):
    code, out = run(capsys, "check")
    failed = [r for r in run_checks() if not r.passed]
    assert code == (1 if failed else 0)
    assert out.strip().splitlines()[-1] == f"{len(run_checks()) - len(failed)} passed, {len(failed)} failed"
