import io
import json
import subprocess
import sys

import pytest

from ecindex.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def table_rows(text):
    lines = [l for l in text.splitlines() if l and not l.startswith("#")]
    header = lines[0].split()
    return [dict(zip(header, l.split())) for l in lines[1:]]


@pytest.fixture
def corpus(tmp_path):
    f = tmp_path / "corpus.g6"
    f.write_text("Ch\nC~\nDhc\n")  # P_4, K_4, C_5
    return str(f)


def test_closed_form_path():
    assert run("closed-form", "path", "6") == (0, "38\n")


def test_closed_form_unsupported(capsys):
    code, _ = run("closed-form", "join-extremal", "5", "8")
    assert code == 2
    assert "no closed form" in capsys.readouterr().err


def test_family_outputs():
    assert run("family", "complete", "4") == (0, "C~\n")
    assert run("family", "path", "4", "--g6") == (0, "Ch\n")
    assert run("family", "path", "3", "--edgelist") == (0, "3 2\n0 1\n1 2\n")


def test_family_domain_error(capsys):
    code, out = run("family", "cycle", "2")
    assert code == 2 and out == ""
    assert "violates n >= 3" in capsys.readouterr().err


def test_compute_table_and_json_agree(corpus):
    code, table = run("compute", corpus)
    assert code == 0
    code, js = run("compute", corpus, "--json")
    assert code == 0
    records = [json.loads(l) for l in js.splitlines()]
    rows = table_rows(table)
    assert [r["xi"] for r in records] == [14, 12, 20]
    assert len(rows) == len(records)
    for row, rec in zip(rows, records):
        for key, value in row.items():
            assert str(rec[key]) == value


def test_bounds_p4_prop5():
    code, out = run("bounds", "g6:Ch")
    assert code == 0
    row = next(r for r in table_rows(out) if r["bound"] == "PROP5_ZAGREB")
    assert row == {"bound": "PROP5_ZAGREB", "bound_value": "14", "value": "14", "status": "TIGHT", "class": "P_4"}
    prop4 = next(r for r in table_rows(out) if r["bound"] == "PROP4_DEGDIST")
    assert prop4["bound_value"] == "28/3"


def test_bounds_json_matches_table(corpus):
    _, table = run("bounds", corpus)
    _, js = run("bounds", corpus, "--json")
    records = [json.loads(l) for l in js.splitlines()]
    rows = [r for r in table_rows(table) if r["bound"] != "bound"]
    assert len(rows) == len(records) == 3 * 11
    for row, rec in zip(rows, records):
        assert row["bound"] == rec["bound"] and row["status"] == rec["status"]
        assert row["bound_value"] == ("-" if rec["bound_value"] is None else str(rec["bound_value"]))
        assert row["value"] == ("-" if rec["xi_value"] is None else str(rec["xi_value"]))


def test_bounds_c5_cor1():
    _, js = run("bounds", "g6:Dhc", "--json")
    cor1 = next(json.loads(l) for l in js.splitlines() if '"COR1_SUM"' in l)
    assert (cor1["bound_value"], cor1["xi_value"], cor1["tight"]) == (40, 40, True)


def test_rank_outputs():
    code, out = run("rank", "--n", "6", "--order", "max", "--top", "3")
    assert code == 0
    assert [r["xi"] for r in table_rows(out)] == ["38", "31", "29"]
    _, js = run("rank", "--n", "6", "--top", "6", "--json")
    assert [json.loads(l)["xi"] for l in js.splitlines()] == [15, 24, 24, 29, 31, 38]
    _, out = run("rank", "--n", "7", "--diameter", "4", "--top", "1")
    assert table_rows(out)[0]["xi"] == "34"


def test_rank_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        run("rank", "--n", "6", "--diameter", "2", "--pendents", "3")
    assert info.value.code == 2
    assert run("rank", "--n", "20")[0] == 2


def test_verify_p7_passes():
    code, out = run("verify", "P7", "--n-max", "10")
    assert code == 0
    assert out.rstrip().endswith("PASSED")
    rows = table_rows(out.rsplit("\n", 2)[0])
    assert len(rows) == 15 and all(r["verdict"] == "ok" for r in rows)


def test_verify_p6_floor_fails():
    code, out = run("verify", "P6", "--n-max", "7", "--variant", "floor")
    assert code == 1
    assert "mismatch: n=5, d=3" in out
    assert out.rstrip().endswith("FAILED")


def test_verify_json():
    code, out = run("verify", "P9", "--n-max", "7", "--json")
    assert code == 0
    records = [json.loads(l) for l in out.splitlines()]
    assert [r["value"] for r in records if r["n"] == 6] == [38, 31, 29]
    assert all(r["ok"] for r in records)


def test_verify_size_error(capsys):
    assert run("verify", "P3", "--n-max", "8")[0] == 2
    assert "capped" in capsys.readouterr().err


def test_transform_list_and_apply():
    code, out = run("transform", "lemma1", "g6:Ch")
    assert code == 0
    assert out.splitlines()[0] == "# graph 0: Ch has 2 lemma1 sites"
    code, out = run("transform", "lemma1", "g6:Ch", "--site", "0")
    assert code == 0 and "xi 14 -> 9" in out
    # spider with legs 2,2,2
    code, out = run("transform", "lemma2", "g6:FkE?G", "--site", "0")
    assert code == 0 and "xi 36 -> 45" in out


def test_transform_errors(capsys):
    assert run("transform", "lemma1", "g6:Ch", "--site", "5")[0] == 2
    assert "graph 0: site index 5" in capsys.readouterr().err
    assert run("transform", "lemma1", "g6:C~")[0] == 2
    assert "graph 0:" in capsys.readouterr().err


def test_parse_error_names_location(capsys, tmp_path):
    f = tmp_path / "bad.el"
    f.write_text("3 2\n0 1\n")
    assert run("compute", str(f))[0] == 2
    err = capsys.readouterr().err
    assert "bad.el: line 1" in err


def test_disconnected_graph_names_graph(capsys, tmp_path):
    f = tmp_path / "two.g6"
    f.write_text("Ch\nC?\n")
    assert run("compute", str(f))[0] == 2
    assert "graph 1:" in capsys.readouterr().err


def test_deterministic(corpus):
    for argv in (["bounds", corpus], ["rank", "--n", "9", "--order", "max"], ["verify", "P8", "--n-max", "8"]):
        assert run(*argv) == run(*argv)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "ecindex", "closed-form", "star", "6"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "15\n"


def test_bounds_violation_exit_status(monkeypatch):
    # no real graph violates a bound, so feed a fabricated report
    from ecindex import cli
    from ecindex.bounds import BoundId, BoundReport

    fake = BoundReport(BoundId.PROP2_STAR_MIN, True, 9, 8, False, False, False)
    monkeypatch.setattr(cli, "check_all_bounds", lambda g: [fake])
    code, out = run("bounds", "g6:Ch")
    assert code == 1 and "VIOLATED" in out
