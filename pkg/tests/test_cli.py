import json
import subprocess
import sys

import pytest

from gin3.checks import CHECK_NAMES, verify_degrees, verify_ideal
from gin3.cli import EXIT_EXHAUSTED, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main, parse_seeds, UsageError
from gin3.gin import construct_gin_greedy
from gin3.monomials import minimalize

INTRO = [[2, 0, 0], [1, 1, 0], [0, 3, 0], [1, 0, 2]]


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    monkeypatch.delenv("GIN3_FIXTURES", raising=False)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out), err


class TestChecks:
    def test_names(self):
        assert [c.name for c in verify_degrees((4, 5, 6)).checks] == list(CHECK_NAMES)

    def test_intro_ideal(self):
        rep = verify_ideal(minimalize([tuple(g) for g in INTRO]))
        status = {c.name: c.status for c in rep.checks}
        assert status["almost_revlex"] == "fail" and status["strongly_stable"] == "pass"
        assert status["generator_count"] == "skip" and not rep.ok

    def test_wrong_degrees_fail_hilbert(self):
        rep = verify_ideal(construct_gin_greedy((3, 3, 3)).ideal, (2, 3, 4))
        assert {c.name for c in rep.checks if c.status == "fail"} >= {"hilbert_match"}


class TestPredict:
    def test_339(self, capsys):
        code, data, _ = run_json(capsys, "predict", "--degrees", "3,3,9")
        assert code == EXIT_OK and data["mu"] == 13 and data["case"] == "I.eq-lt"

    def test_auto_sort(self, capsys):
        _, a, _ = run_json(capsys, "predict", "--degrees", "3,3,9")
        code, b, err = run_json(capsys, "predict", "--degrees", "9,3,3")
        assert code == EXIT_OK and a == b and "sorted" in err

    @pytest.mark.parametrize("degrees", ["1,2,3", "2,3", "a,b,c", "0,5,5"])
    def test_bad_degrees(self, capsys, degrees):
        code, out, err = run(capsys, "predict", "--degrees", degrees)
        assert code == EXIT_USAGE and out == "" and "error" in err

    def test_message_names_hypothesis(self, capsys):
        _, _, err = run(capsys, "predict", "--degrees", "1,2,3")
        assert "2 <= d1 <= d2 <= d3" in err

    def test_text_rendering(self, capsys):
        _, out, _ = run(capsys, "predict", "--degrees", "3,3,9")
        assert "x2^4x3^5" in out and "x1^3" in out

    def test_closed_form(self, capsys):
        code, data, _ = run_json(capsys, "predict", "--degrees", "6,6,6", "--compare-closed-form")
        assert code == EXIT_OK
        assert data["closed_form"]["normalized"]["matches_greedy"]

    def test_closed_form_raw_differs(self, capsys):
        code, out, _ = run(capsys, "predict", "--degrees", "5,5,5", "--compare-closed-form")
        assert "closed form (as written): missing" in out
        assert "closed form (normalized): identical to greedy" in out

    def test_fixtures_flag(self, capsys, tmp_path):
        empty = tmp_path / "t.json"
        empty.write_text(json.dumps({"corrections": []}))
        _, data, _ = run_json(capsys, "predict", "--degrees", "5,5,5", "--compare-closed-form", "--fixtures", str(empty))
        assert not data["closed_form"]["normalized"]["matches_greedy"]

    def test_json_byte_identical(self, capsys):
        _, a, _ = run(capsys, "predict", "--degrees", "4,5,6", "--format", "json")
        _, b, _ = run(capsys, "predict", "--degrees", "4,5,6", "--format", "json")
        assert a == b


class TestVerify:
    @pytest.mark.parametrize("degrees", ["4,5,6", "6,6,6"])
    def test_pass(self, capsys, degrees):
        code, data, _ = run_json(capsys, "verify", "--degrees", degrees)
        assert code == EXIT_OK and all(c["status"] == "pass" for c in data["checks"]) and len(data["checks"]) == 6

    def test_intro_file_fails(self, capsys, tmp_path):
        f = tmp_path / "ideal.json"
        f.write_text(json.dumps(INTRO))
        code, data, _ = run_json(capsys, "verify", "--ideal-file", str(f))
        assert code == EXIT_FAIL
        assert next(c for c in data["checks"] if c["name"] == "almost_revlex")["status"] == "fail"

    def test_predict_round_trip(self, capsys, tmp_path):
        _, out, _ = run(capsys, "predict", "--degrees", "3,5,6", "--format", "json")
        f = tmp_path / "p.json"
        f.write_text(out)
        code, data, _ = run_json(capsys, "verify", "--ideal-file", str(f))
        assert code == EXIT_OK and data["degrees"] == [3, 5, 6]
        assert [c["status"] for c in data["checks"]] == ["pass"] * 6

    def test_missing_args(self, capsys):
        assert run(capsys, "verify")[0] == EXIT_USAGE

    @pytest.mark.parametrize("content", ["not json", json.dumps([[1, 2]]), json.dumps({"nope": 1})])
    def test_bad_file(self, capsys, tmp_path, content):
        f = tmp_path / "bad.json"
        f.write_text(content)
        assert run(capsys, "verify", "--ideal-file", str(f))[0] == EXIT_USAGE


class TestOracle:
    def test_five_seeds(self, capsys):
        code, data, _ = run_json(capsys, "oracle", "--degrees", "2,2,3", "--seeds", "1..5")
        assert code == EXIT_OK and [v["seed"] for v in data["verdicts"]] == [1, 2, 3, 4, 5]
        assert all(v["match"] for v in data["verdicts"])

    def test_monomial_mismatch(self, capsys):
        code, data, _ = run_json(capsys, "oracle", "--degrees", "2,2,2", "--no-coordinate-change", "--monomial")
        assert code == EXIT_FAIL
        assert len(data["verdicts"][0]["computed_generators"]) == 3

    def test_small_prime_warning(self, capsys):
        code, _, err = run(capsys, "oracle", "--degrees", "2,2,2", "--prime", "5")
        assert "warning" in err and "small" in err
        assert code in (EXIT_OK, EXIT_FAIL, EXIT_EXHAUSTED)

    def test_exhaustion_code(self, capsys):
        # over F_3 degenerate draws are common, so with no retries some seed runs out
        codes = {run(capsys, "oracle", "--degrees", "2,2,2", "--prime", "3", "--seeds", str(s), "--retries", "0")[0] for s in range(1, 30)}
        assert EXIT_EXHAUSTED in codes

    def test_not_prime(self, capsys):
        assert run(capsys, "oracle", "--degrees", "2,2,2", "--prime", "32001")[0] == EXIT_USAGE

    def test_byte_identical(self, capsys):
        a = run(capsys, "oracle", "--degrees", "2,3,3", "--seeds", "4,9", "--format", "json")[1]
        b = run(capsys, "oracle", "--degrees", "2,3,3", "--seeds", "4,9", "--format", "json")[1]
        assert a == b


class TestSweep:
    def test_max_three(self, capsys):
        code, data, _ = run_json(capsys, "sweep", "--max", "3")
        assert code == EXIT_OK
        assert [r["degrees"] for r in data["rows"]] == [[2, 2, 2], [2, 2, 3], [2, 3, 3], [3, 3, 3]]
        assert data["failures"] == []

    def test_max_six(self, capsys):
        code, data, _ = run_json(capsys, "sweep", "--max", "6")
        assert code == EXIT_OK and data["triples"] == 35

    def test_counts_only(self, capsys):
        code, data, _ = run_json(capsys, "sweep", "--max", "10", "--counts-only")
        assert code == EXIT_OK and data["triples"] == 165
        assert all(r["greedy_mu"] == r["formula"] for r in data["rows"])

    def test_oracle_and_output(self, capsys, tmp_path):
        out = tmp_path / "corpus.json"
        code, _, _ = run(capsys, "sweep", "--max", "3", "--oracle-sum", "7", "--seeds", "1,2", "--output", str(out))
        corpus = json.loads(out.read_text())
        assert code == EXIT_OK and out.read_text().endswith("\n")
        assert [len(r.get("oracle", [])) for r in corpus["rows"]] == [2, 2, 0, 0]

    def test_emit_fixtures(self, capsys, tmp_path):
        code, _, _ = run(capsys, "sweep", "--max", "3", "--emit-fixtures", str(tmp_path))
        assert code == EXIT_OK
        assert sorted(p.name for p in tmp_path.iterdir()) == ["count_discrepancies.json", "piecewise_discrepancies.json"]

    def test_bad_bound(self, capsys):
        assert run(capsys, "sweep", "--max", "1")[0] == EXIT_USAGE


class TestHilbert:
    def test_table(self, capsys):
        code, data, _ = run_json(capsys, "hilbert", "--degrees", "2,2,3")
        assert code == EXIT_OK and data["H"] == [1, 3, 4, 3, 1]

    def test_piecewise(self, capsys):
        code, data, _ = run_json(capsys, "hilbert", "--degrees", "2,2,3", "--piecewise")
        assert code == EXIT_OK and not any(r["discrepancy"] for r in data["piecewise"])


def test_seed_parsing():
    assert parse_seeds("1..3,7") == [1, 2, 3, 7]
    with pytest.raises(UsageError):
        parse_seeds("x")


def test_unknown_command_is_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == EXIT_USAGE


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "gin3.cli", "predict", "--degrees", "2,2,2"], capture_output=True, text=True)
    assert r.returncode == 0 and "mu 6" in r.stdout


def test_fixtures_flag_does_not_leak(capsys, tmp_path):
    import os

    empty = tmp_path / "t.json"
    empty.write_text(json.dumps({"corrections": []}))
    run(capsys, "predict", "--degrees", "2,2,2", "--fixtures", str(empty))
    assert "GIN3_FIXTURES" not in os.environ
