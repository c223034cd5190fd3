import json
from importlib import resources

import pytest

from oscount import cli
from oscount.counting import g4_arrangement, q8d8_arrangement
from oscount.errors import InvalidInputError
from oscount.fileio import (
    parse_arrangement_file,
    parse_arrangement_text,
    parse_group_text,
    serialize_arrangement,
    serialize_group,
)


def data_path(name: str) -> str:
    return str(resources.files("oscount.data") / name)


def test_shipped_q8d8_file():
    arr = parse_arrangement_file(data_path("q8d8.arr"))
    assert len(arr.hyperplanes) == 21
    assert arr.ambient_dim == 5
    assert arr.field.is_rational
    assert arr.hyperplanes == q8d8_arrangement().hyperplanes


def test_g4_file_from_spec_rows():
    text = """# comment
field cyclotomic 3
dim 2
hyperplane (1,0) (1,0)
hyperplane (0,1) (-1,-1)
hyperplane (-1,-1) (0,1)
"""
    arr = parse_arrangement_text(text)
    assert arr.same_hyperplanes(g4_arrangement())


def test_empty_hyperplane_list_is_valid():
    arr = parse_arrangement_text("field rational\ndim 3\n")
    assert len(arr.hyperplanes) == 0 and arr.ambient_dim == 3


def test_round_trip_stability():
    for build in (q8d8_arrangement, g4_arrangement):
        arr = build()
        text = serialize_arrangement(arr)
        again = parse_arrangement_text(text)
        assert again.hyperplanes == arr.hyperplanes
        assert serialize_arrangement(again) == text


def test_malformed_line_reports_line_number():
    with pytest.raises(InvalidInputError, match="line 3"):
        parse_arrangement_text("field rational\ndim 2\nhyperplane 1 junk\n")
    with pytest.raises(InvalidInputError, match="line 1"):
        parse_arrangement_text("frobnicate\n")


def test_wrong_coefficient_count_names_hyperplane():
    with pytest.raises(InvalidInputError, match="hyperplane 2"):
        parse_arrangement_text("field rational\ndim 2\nhyperplane 1 0\nhyperplane 1\n")


def test_group_round_trip():
    from oscount.counting import g4_group

    g = g4_group()
    text = serialize_group(g)
    again = parse_group_text(text)
    assert serialize_group(again) == text
    again.enumerate_elements()
    assert again.order == 24


def test_group_file_errors():
    with pytest.raises(InvalidInputError, match="symplectic_form"):
        parse_group_text("field rational\ndim 2\ngenerator\n1 0\n0 1\n")
    with pytest.raises(InvalidInputError, match="rows"):
        parse_group_text(
            "field rational\ndim 2\nsymplectic_form\n0 1\n-1 0\ngenerator\n1 0\n"
        )


def test_cli_count_catalog(capsys):
    assert cli.main(["count", "--catalog", "g4"]) == 0
    out = capsys.readouterr().out
    assert "resolution count: 2" in out


def test_cli_count_json_structure(capsys):
    assert cli.main(["count", "--catalog", "wreath:A1:2", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["os_dimension"] == 8
    assert doc["weyl_order"] == 4
    assert doc["resolution_count"] == 2
    assert doc["poincare_poly"]["coefficients"] == [1, 4, 3]


def test_cli_analyze_with_oracles(capsys, tmp_path):
    path = tmp_path / "g4.arr"
    path.write_text(serialize_arrangement(g4_arrangement()))
    assert cli.main(["analyze", str(path), "--oracle", "nbc", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["os_dimension"] == 6
    assert doc["oracle_results"]["nbc_betti"] == [1, 3, 2]
    assert "regions" not in doc  # non-real arrangement


def test_cli_analyze_ff_oracle(capsys, tmp_path):
    path = tmp_path / "braid.arr"
    path.write_text(
        "field rational\ndim 3\nhyperplane 1 -1 0\nhyperplane 1 0 -1\nhyperplane 0 1 -1\n"
    )
    assert cli.main(["analyze", str(path), "--oracle", "ff", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["oracle_results"]["agrees"] is True


def test_cli_json_is_deterministic_except_timing(capsys):
    def run():
        assert cli.main(["count", "--catalog", "g4", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        doc.pop("timing_seconds")
        return json.dumps(doc, sort_keys=False)

    assert run() == run()


def test_cli_exit_code_invalid_input(capsys):
    assert cli.main(["count", "--catalog", "nope"]) == 1
    assert cli.main(["analyze", "/nonexistent/file.arr"]) == 1
    assert cli.main(["count", "--arrangement", "/nonexistent.arr"]) == 1


def test_cli_exit_code_cap(capsys, tmp_path):
    path = tmp_path / "q8.arr"
    path.write_text(serialize_arrangement(q8d8_arrangement()))
    assert cli.main(["analyze", str(path), "--flat-cap", "10"]) == 2


def test_cli_exit_code_inconsistency(capsys, tmp_path):
    path = tmp_path / "q8.arr"
    path.write_text(serialize_arrangement(q8d8_arrangement()))
    # wrong Weyl order: 2592 is not divisible by 7
    assert cli.main(["count", "--arrangement", str(path), "--weyl-order", "7"]) == 3


def test_cli_count_arrangement_with_weyl_order(capsys, tmp_path):
    path = tmp_path / "q8.arr"
    path.write_text(serialize_arrangement(q8d8_arrangement()))
    assert cli.main(["count", "--arrangement", str(path), "--weyl-order", "32", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["resolution_count"] == 81


def test_cli_cone_round_trip(capsys, tmp_path):
    src = tmp_path / "aff.arr"
    src.write_text("field rational\ndim 1\nhyperplane 1\nhyperplane 1 = -1\nhyperplane 1 = 1\n")
    out = tmp_path / "coned.arr"
    assert cli.main(["cone", str(src), "--out", str(out)]) == 0
    coned = parse_arrangement_file(str(out))
    assert coned.central and len(coned.hyperplanes) == 4


def test_cli_catalan_emit(capsys, tmp_path):
    out = tmp_path / "cat.arr"
    assert cli.main(["catalan", "--type", "A2", "--n", "2", "--out", str(out)]) == 0
    arr = parse_arrangement_file(str(out))
    assert len(arr.hyperplanes) == 10


def test_cli_wreath_formula(capsys):
    assert cli.main(["wreath-formula", "--type", "A3", "--n", "2", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["count"] == 14


def test_cli_catalan_json_mode(capsys):
    assert cli.main(["catalan", "--type", "A1", "--n", "2", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["num_hyperplanes"] == 4
    assert parse_arrangement_text(doc["arrangement_text"]).central


def test_cli_cap_env_override(capsys, tmp_path, monkeypatch):
    path = tmp_path / "q8.arr"
    path.write_text(serialize_arrangement(q8d8_arrangement()))
    monkeypatch.setenv("OSCOUNT_FLAT_CAP", "10")
    assert cli.main(["analyze", str(path)]) == 2
    monkeypatch.setenv("OSCOUNT_FLAT_CAP", "junk")
    assert cli.main(["analyze", str(path)]) == 1


def test_cli_group_analyze(capsys):
    assert cli.main(["group", "analyze", data_path("q8d8.grp"), "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["order"] == 32
    assert doc["num_reflection_classes"] == 5
    assert doc["zeta_bijection"]["bijective"] is True
    assert doc["namikawa_weyl"]["total_order"] == 32


def test_cli_group_analyze_g4(capsys):
    assert cli.main(["group", "analyze", data_path("g4.grp"), "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["order"] == 24
    assert doc["namikawa_weyl"]["total_order"] == 3


def test_selftest_skip_ff(capsys):
    assert cli.main(["selftest", "--skip", "ff", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["failed"] == 0
    assert doc["skipped"] >= 1
    names = {c["name"]: c["status"] for c in doc["checks"]}
    assert names["finite-field oracle"] == "SKIP"


def test_selftest_detects_tampered_catalog(capsys, monkeypatch):
    # negative control: flip one sign in the q8d8 arrangement
    import oscount.counting as counting_mod

    real_catalog = counting_mod.catalog

    def tampered(name):
        entry = real_catalog(name)
        if name == "q8d8":
            from oscount.arrangement import build_arrangement
            from oscount.fields import rational_field

            f = rational_field()
            planes = list(entry.arrangement.hyperplanes)
            first = planes[0]
            bad_normal = (first.normal[0], -first.normal[1]) + first.normal[2:]
            planes[0] = (bad_normal, first.offset)
            rest = [(h.normal, h.offset) for h in planes[1:]]
            entry.arrangement = build_arrangement(f, 5, [planes[0]] + rest)
        return entry

    monkeypatch.setattr(cli, "catalog", tampered)
    assert cli.main(["selftest", "--skip", "ff", "--skip", "nbc", "--json"]) == 3
    doc = json.loads(capsys.readouterr().out)
    assert doc["failed"] >= 1
    bad = [c for c in doc["checks"] if c["status"] == "FAIL"]
    assert any(
        "Poincare" in c["detail"] or "count" in c["detail"] or "divisible" in c["detail"]
        for c in bad
    )
