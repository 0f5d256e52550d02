import json

import pytest

from uclab.main import main
from uclab.services.io_service import serialize_family
from uclab.services.suite_service import P3M1, P3M1_CHILD, P3M1_DUAL, P3M1_REDUCED


@pytest.fixture
def cube_file(family_file):
    return family_file(serialize_family(P3M1), name="cube.fam")


def test_dual(cube_file, capsys):
    assert main(["dual", cube_file]) == 0
    assert capsys.readouterr().out == serialize_family(P3M1_DUAL)


def test_dual_with_induced_indexing(family_file, capsys):
    path = family_file("{}\n1 2 3\n2\n3\n1 2\n1 3\n2 3\n")
    assert main(["dual", path, "--indexing", "induced"]) == 0
    out = capsys.readouterr().out
    assert len([line for line in out.splitlines() if not line.startswith("universe")]) == 7


def test_child(cube_file, capsys):
    assert main(["child", cube_file]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# dual-side minimal set {3,4,6}")
    assert out.endswith(serialize_family(P3M1_CHILD))


def test_reduce(family_file, capsys):
    path = family_file(serialize_family(P3M1_DUAL))
    assert main(["reduce", path, "--minimal", "3 4 6"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# removed {3,4,6}, a = 6")
    assert out.endswith(serialize_family(P3M1_REDUCED))


def test_reduce_rejects_non_minimal_set(family_file, capsys):
    path = family_file(serialize_family(P3M1_DUAL))
    assert main(["reduce", path, "--minimal", "1 3 4 5 6"]) == 2
    assert "not minimal" in capsys.readouterr().err


def test_check_reports_and_exit_codes(cube_file, family_file, capsys):
    assert main(["check", cube_file, "--axioms", "--frankl"]) == 0
    out = capsys.readouterr().out
    assert "PASS frankl: strict, element 2 in 4 of 7" in out
    assert "is_union_closed: True" in out

    failing = family_file("{}\n1\n2\n3\n", name="spread.fam")
    assert main(["check", failing, "--frankl"]) == 1
    assert "FAIL frankl" in capsys.readouterr().out


def test_check_salzborn_needs_normalized(cube_file, capsys):
    assert main(["check", cube_file, "--salzborn"]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_json_mode(cube_file, capsys):
    assert main(["--format", "json", "check", cube_file, "--frankl"]) == 0
    records = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert [r["command"] for r in records] == ["check", "check"]
    assert records[1]["result"]["verdict"] == "strict"


def test_json_error_report(family_file, capsys):
    path = family_file("1 x\n")
    assert main(["--format", "json", "dual", path]) == 2
    report = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert report["error"] == "FamilyFormatError"
    assert report["details"]["line_number"] == 1


def test_descend(cube_file, capsys):
    assert main(["descend", cube_file, "--depth", "2"]) == 0
    out = capsys.readouterr().out
    assert out.count("# depth") == 3


def test_enumerate(capsys):
    assert main(["enumerate", "--n", "2", "--normalized", "--iso"]) == 0
    assert capsys.readouterr().out.count("# family") == 1


def test_chain(cube_file, capsys):
    assert main(["chain", cube_file]) == 0
    assert "PASS chain" in capsys.readouterr().out


def test_suite_filter(capsys):
    assert main(["paper-suite", "--filter", "punctured-cube-dual"]) == 0
    assert capsys.readouterr().out.startswith("PASS punctured-cube-dual")


def test_missing_file(capsys):
    assert main(["dual", "does-not-exist.fam"]) == 2


def test_usage_error():
    with pytest.raises(SystemExit) as exc_info:
        main(["descend"])
    assert exc_info.value.code == 2


def test_negative_universe_size_is_an_input_error(capsys):
    assert main(["enumerate", "--n", "-1"]) == 2
    assert capsys.readouterr().err.startswith("error: n:")


def test_undecodable_file_is_an_input_error(tmp_path, capsys):
    path = tmp_path / "binary.fam"
    path.write_bytes(b"{}\n1 \xff\n")
    assert main(["--format", "json", "check", str(path)]) == 2
    report = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert report["error"] == "InputError"
    assert "not UTF-8" in report["message"]
