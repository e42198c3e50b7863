import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from bipolar_fre.cli import main
from bipolar_fre.documents import (
    ProblemDocument,
    fmt_decimal,
    parse_problem,
    parse_solution,
    render_problem,
)
from bipolar_fre.errors import ParseError
from bipolar_fre.oracle import random_instance


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def solve(capsys, path, *extra):
    code, out, _ = run(capsys, "solve", path, *extra)
    return code, json.loads(out)


def test_solve_single(capsys, problems_dir):
    code, doc = solve(capsys, problems_dir / "single_greatest_least.json")
    assert code == 0
    assert doc["fre_greatest"]["x_bar"] == ["1/2", "4/5"]
    assert doc["fre_greatest"]["y_bar"] == ["1", "1"]
    assert doc["solutions"]["greatest"] == ["1/2", "4/5"]
    assert doc["solutions"]["least"] == ["0", "0"]


def test_solve_two_minimal(capsys, problems_dir):
    _, doc = solve(capsys, problems_dir / "single_two_minimal.json")
    assert doc["solutions"]["least"] is None
    assert sorted(doc["solutions"]["minimal"]) == [["0", "4/5"], ["1/2", "0"]]


def test_solve_conflict(capsys, problems_dir):
    code, doc = solve(capsys, problems_dir / "forced_conflict.json")
    assert code == 1
    w = doc["witness"]
    assert w["kind"] == "no-feasible-pair"
    assert w["conflict"] == {"column": 1, "plus_row": 1, "minus_row": 2,
                             "x_bar_plus_y_bar": "3/2"}
    assert "3/2" in w["message"]


def test_solve_three_by_three(capsys, problems_dir):
    _, doc = solve(capsys, problems_dir / "three_by_three.json")
    sols = doc["solutions"]
    assert sorted(sols["maximal"]) == [["1", "1/3", "1/2"], ["1/2", "4/5", "1/2"]]
    assert sols["least"] == ["1/2", "1/3", "1/2"]
    assert doc["families"]["s_minus_maximal"] == [[1, 2, 3]]
    assert doc["annotations"]["decimal"]["minimal"] == [["0.5", "0.333333", "0.5"]]


def test_solve_is_byte_deterministic(capsys, problems_dir):
    path = problems_dir / "three_by_three.json"
    assert run(capsys, "solve", path)[1] == run(capsys, "solve", path)[1]


def test_timing_opt_in(capsys, problems_dir):
    path = problems_dir / "single_greatest_least.json"
    assert "timing_ms" not in solve(capsys, path)[1]
    assert "timing_ms" in solve(capsys, path, "--timing")[1]


def test_text_format(capsys, problems_dir):
    code, out, _ = run(capsys, "solve", problems_dir / "single_greatest_least.json",
                       "--format", "text")
    assert code == 0
    assert "verdict: solvable" in out
    assert "greatest: (1/2, 4/5)" in out


def test_check(capsys, problems_dir):
    path = problems_dir / "single_greatest_least.json"
    code, out, _ = run(capsys, "check", path, "(0.4,0.5)")
    doc = json.loads(out)
    assert code == 1 and doc["verdict"] is False
    assert doc["rows"][0]["value"] == "8/25"
    code, out, _ = run(capsys, "check", path, "[\"1/2\", \"0.8\"]")
    assert code == 0 and json.loads(out)["verdict"] is True


def test_pairs(capsys, problems_dir):
    code, out, _ = run(capsys, "pairs", problems_dir / "three_by_three.json")
    doc = json.loads(out)
    assert code == 0
    assert doc["s_plus"] == [[], [1], [2], [3], [1, 3], [2, 3]]
    assert doc["s_minus"] == [[1], [2], [1, 2], [1, 3], [2, 3], [1, 2, 3]]


def test_oracle_agrees(capsys, problems_dir):
    path = problems_dir / "three_by_three.json"
    _, solved = solve(capsys, path)
    code, out, _ = run(capsys, "oracle", path)
    ora = json.loads(out)
    assert code == 0
    assert sorted(ora["maximal"]) == sorted(solved["solutions"]["maximal"])
    assert ora["minimal"] == solved["solutions"]["minimal"]


def test_free_column_reported(capsys, tmp_path):
    path = tmp_path / "p.json"
    path.write_text(json.dumps({"schema_version": "1", "a_plus": [["0.5", "0"]],
                                "a_minus": [["0.2", "0"]], "b": ["0.4"]}))
    _, doc = solve(capsys, path)
    assert doc["free_columns"] == [2]
    assert doc["solutions"]["greatest"] == ["4/5", "free"]


def test_gen_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert run(capsys, "gen", "--seed", 7, "--m", 3, "--n", 2, "--grid", 5, p)[0] == 0
    assert a.read_text() == b.read_text()
    assert parse_problem(a.read_text()).to_system() == random_instance(7, 3, 2, 5)


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "solve", tmp_path / "nope.json")
    assert code == 2 and "cannot read" in err


def test_malformed_file(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"schema_version": "1",\n "a_plus": [[0.5]')
    code, _, err = run(capsys, "solve", path)
    assert code == 2 and "line" in err


def test_out_of_range(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"schema_version": "1", "a_plus": [["1.5"]],
                                "a_minus": [["0"]], "b": ["0"]}))
    assert run(capsys, "solve", path)[0] == 2


def test_cap_exit_code(capsys, tmp_path):
    path = tmp_path / "big.json"
    assert run(capsys, "gen", "--seed", 1, "--m", 5, "--n", 1, "--grid", 3, path)[0] == 0
    code, _, err = run(capsys, "oracle", path, "--max-oracle", 2)
    assert code == 3 and "too large" in err


def test_usage_error(capsys):
    assert run(capsys, "solve")[0] == 2


def test_module_entry_point(problems_dir):
    out = subprocess.run(
        [sys.executable, "-m", "bipolar_fre", "solve", str(problems_dir / "forced_conflict.json")],
        capture_output=True, text=True,
    )
    assert out.returncode == 1
    assert json.loads(out.stdout)["verdict"] == "unsolvable"


class TestDocuments:
    def test_round_trip(self, problems_dir):
        for path in sorted(problems_dir.glob("*.json")):
            doc = parse_problem(path.read_text())
            again = parse_problem(render_problem(doc))
            assert again == doc

    def test_from_system_round_trip(self):
        s = random_instance(3, 4, 3, 6)
        assert parse_problem(render_problem(ProblemDocument.from_system(s))).to_system() == s

    def test_scalar_forms(self):
        assert parse_solution("(2/3, 0.3333333, 1)") == (F(2, 3), F(3333333, 10**7), F(1))
        assert parse_solution('{"x": ["0.5", 1]}') == (F(1, 2), F(1))

    def test_bad_solution(self):
        with pytest.raises((ParseError, ValueError)):
            parse_solution("(0.4, banana)")

    def test_decimal_annotation(self):
        assert fmt_decimal(F(1, 3)) == "0.333333"
        assert fmt_decimal(None) == "free"
