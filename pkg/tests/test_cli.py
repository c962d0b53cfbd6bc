import json
from pathlib import Path

import pytest

from gcf_forge.cli import (
    EXIT_INCONCLUSIVE,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_PRECONDITION,
    EXIT_REFUTED,
    load_problem_file,
    main,
    report_from_dict,
    report_to_dict,
)
from gcf_forge.errors import ProblemFileError


def write_problem(tmp_path: Path, name: str, **fields) -> str:
    path = tmp_path / name
    path.write_text(json.dumps(fields))
    return str(path)


@pytest.fixture
def quartic_file(problems_dir) -> str:
    return str(problems_dir / "eight_over_pi_squared.json")


class TestProblemFile:
    def test_loads_bundled_problem(self, quartic_file):
        pf = load_problem_file(quartic_file)
        assert pf.name == "eight_over_pi_squared"
        assert pf.problem.b0 == 1
        assert pf.problem.a.degree == 4
        assert pf.problem.target is not None

    def test_unknown_field_rejected(self, tmp_path):
        path = write_problem(tmp_path, "p.json", b0="1", a="-n", b="1", extra="x")
        with pytest.raises(ProblemFileError):
            load_problem_file(path)

    def test_missing_field_rejected(self, tmp_path):
        path = write_problem(tmp_path, "p.json", b0="1", a="-n")
        with pytest.raises(ProblemFileError):
            load_problem_file(path)

    def test_non_string_field_rejected(self, tmp_path):
        path = tmp_path / "p.json"
        path.write_text('{"b0": 1, "a": "-n", "b": "1"}')
        with pytest.raises(ProblemFileError):
            load_problem_file(str(path))


class TestEval:
    def test_table_rows(self, quartic_file, capsys):
        code = main(["eval", quartic_file, "--depth", "2", "--exact"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "6/7" in out
        assert "90/109" in out

    def test_depth_zero_single_row(self, tmp_path, capsys):
        path = write_problem(tmp_path, "p.json", b0="5", a="-n", b="n+1")
        code = main(["eval", path, "--depth", "0", "--exact"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        rows = [line for line in out.splitlines() if line and line[0] != "#"]
        assert len(rows) == 2  # header + the n = 0 row
        assert rows[1].split()[-1] == "5"

    def test_malformed_polynomial_exits_2(self, tmp_path, capsys):
        path = write_problem(tmp_path, "p.json", b0="1", a="-(2*n^4", b="1")
        code = main(["eval", path])
        err = capsys.readouterr().err
        assert code == EXIT_PARSE
        assert "offset" in err


class TestFactorize:
    def test_quartic_coupling_printed(self, quartic_file, capsys):
        code = main(["factorize", quartic_file])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "c = n^2; d = 2*n^2 - n" in out

    def test_empty_search_space_message(self, problems_dir, capsys):
        code = main(["factorize", str(problems_dir / "no_rational_coupling.json")])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "no coupling within linear-split search space" in out

    def test_zero_numerator_exits_3(self, tmp_path, capsys):
        path = write_problem(tmp_path, "p.json", b0="1", a="0", b="1")
        assert main(["factorize", path]) == EXIT_PRECONDITION


class TestSeries:
    def test_quartic_series_summary(self, quartic_file, capsys):
        code = main(["series", quartic_file, "--count", "3", "--exact"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "rho = 1/2" in out
        assert "convergent" in out
        assert "109/90" in out

    def test_without_coupling(self, problems_dir, capsys):
        code = main(["series", str(problems_dir / "no_rational_coupling.json")])
        assert code == EXIT_INCONCLUSIVE


class TestVerify:
    def test_verified_exit_zero(self, quartic_file, capsys):
        code = main(["verify", quartic_file, "--digits", "30", "--depth", "64"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "verdict: verified" in out
        assert "digits matched: 30" in out

    def test_wrong_target_exits_one(self, tmp_path, capsys):
        path = write_problem(
            tmp_path,
            "p.json",
            b0="1",
            a="-(2*n^4 - n^3)",
            b="3*n^2 + 3*n + 1",
            target="pi^2/8",
        )
        code = main(["verify", path, "--digits", "20", "--depth", "32"])
        out = capsys.readouterr().out
        assert code == EXIT_REFUTED
        assert "verdict: refuted-at-depth" in out

    def test_no_target_exits_four(self, problems_dir, capsys):
        code = main(
            ["verify", str(problems_dir / "reciprocal_log2.json"), "--digits", "15"]
        )
        out = capsys.readouterr().out
        assert code == EXIT_INCONCLUSIVE
        assert "series value: 0.693147180559945" in out

    def test_json_report_round_trip(self, quartic_file, tmp_path, capsys):
        report_path = tmp_path / "report.json"
        code = main(
            [
                "verify",
                quartic_file,
                "--digits",
                "25",
                "--depth",
                "32",
                "--json",
                str(report_path),
            ]
        )
        capsys.readouterr()
        assert code == EXIT_OK
        doc = json.loads(report_path.read_text())
        assert doc["verdict"] == "verified"
        assert doc["rho"] == "1/2"
        assert doc["coupling"] == {"c": "n^2", "d": "2*n^2 - n"}
        rebuilt = report_from_dict(doc)
        assert report_to_dict(rebuilt) == doc

    def test_missing_file_is_parse_error(self, tmp_path, capsys):
        assert main(["eval", str(tmp_path / "nope.json")]) == EXIT_PARSE


def test_report_object_round_trip(quartic_file):
    from gcf_forge import verify_conjecture

    pf = load_problem_file(quartic_file)
    report = verify_conjecture(pf.problem, digits=15, depth=16, name=pf.name)
    rebuilt = report_from_dict(json.loads(json.dumps(report_to_dict(report))))
    assert rebuilt == report
