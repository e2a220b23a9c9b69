from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gin3.checks import count_catalogue, dumps
from gin3.exprs import FormulaError, evaluate
from gin3.hilbert import CaseTag, ci_hilbert_series, target_counts
from gin3.piecewise import (
    COUNT_BRANCHES,
    HILBERT_BRANCHES,
    discrepancy_catalogue,
    load_catalogue,
    piecewise_count,
    piecewise_hilbert,
)
from gin3.checks import emit_fixtures

from strategies import degree_triples


class TestEvaluate:
    def test_arithmetic(self):
        assert evaluate("(3*d-3)/2", {"d": 5}) == 6
        assert evaluate("(3*d-3)/2", {"d": 4}) == Fraction(9, 2)
        assert evaluate("-a**2 + 1", {"a": 3}) == -8

    def test_functions(self):
        assert evaluate("binom(k+2,2)", {"k": 5}) == 21
        assert evaluate("binom(2,5)", {}) == 0
        assert evaluate("floor(7/2) + ceil(7/2)", {}) == 7
        assert evaluate("sum('d-i','i',1,j)", {"d": 3, "j": 2}) == 3
        assert evaluate("sum('i','i',1,0)", {}) == 0
        assert evaluate("H(2)", {"H": lambda m: 10 * m}) == 20

    @pytest.mark.parametrize("bad", ["x", "1 +", "__import__('os')", "a.b", "[1]", "binom(1/2, 1)"])
    def test_rejects(self, bad):
        with pytest.raises(FormulaError):
            evaluate(bad, {"a": 1})

    @given(st.integers(-50, 50), st.integers(-50, 50), st.integers(1, 20))
    def test_matches_python(self, a, b, c):
        env = {"a": a, "b": b, "c": c}
        assert evaluate("(a*b - c)/c + a**2", env) == Fraction(a * b - c, c) + a * a
        assert evaluate("floor(a/c)", env) == a // c


class TestPiecewise:
    def test_555_at_5(self):
        v = piecewise_hilbert((5, 5, 5), 5)
        assert v.value == 18 and v.expected == 18 and not v.discrepancy

    def test_339_at_4(self):
        v = piecewise_hilbert((3, 3, 9), 4)
        assert v.value == 9 and not v.discrepancy

    def test_223_symmetry_branch(self):
        v = piecewise_hilbert((2, 2, 3), 4)
        assert v.value == 1 and not v.discrepancy
        assert v.branch == "I.eq-lt:H[4]"

    def test_uncovered_is_flagged(self):
        cat = load_catalogue()
        row = next(r for r in cat["J"] if r["issues"][0]["branch"] is None)
        v = piecewise_count(tuple(row["degrees"]), row["k"])
        assert v.discrepancy and v.value is None

    def test_expected_is_truth(self):
        for t in [(4, 5, 6), (3, 6, 6), (2, 7, 9)]:
            h = ci_hilbert_series(t)
            c = target_counts(t)
            for k in range(len(h)):
                assert piecewise_hilbert(t, k).expected == h[k]
            for k in range(len(c)):
                assert piecewise_count(t, k).expected == c[k]

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            piecewise_hilbert((2, 2, 2), 4)

    def test_all_cases_have_branches(self):
        assert set(HILBERT_BRANCHES) == set(CaseTag) == set(COUNT_BRANCHES)

    @given(degree_triples, st.data())
    def test_flag_means_disagreement(self, t, data):
        k = data.draw(st.integers(0, t.socle_degree))
        v = piecewise_hilbert(t, k)
        if not v.discrepancy:
            assert v.value == v.expected


class TestCatalogues:
    def test_piecewise_catalogue_is_current(self):
        assert dumps(discrepancy_catalogue(10)) == dumps(load_catalogue())

    def test_unflagged_cases_agree(self):
        cat = load_catalogue()
        flagged = {(tuple(r["degrees"]), r["k"]) for r in cat["H"]}
        for key in cat["summary"]["H"]:
            assert key.startswith("II.lt-lt")
        assert all(k[0][0] < k[0][1] < k[0][2] for k in flagged)

    def test_count_catalogue_is_current(self):
        from importlib import resources
        import json

        committed = json.loads(resources.files("gin3.data").joinpath("count_discrepancies.json").read_text())
        fresh = count_catalogue(10)
        assert [{k: v for k, v in r.items() if k != "oracle"} for r in committed["rows"]] == fresh
        assert len(fresh) == 20
        assert all(r["case"] == "II.lt-eq" for r in fresh)
        assert all(r["oracle"]["match"] for r in committed["rows"])

    def test_emit_writes_files(self, tmp_path):
        paths = emit_fixtures(4, tmp_path, oracle_seed=None)
        assert sorted(p.name for p in tmp_path.iterdir()) == sorted(paths)
