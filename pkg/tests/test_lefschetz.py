import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gin3.gin import construct_gin_greedy
from gin3.lefschetz import (
    is_strong_lefschetz_x3,
    is_weak_lefschetz_x3,
    lefschetz_report,
    standard_monomials,
    x3_power_map_rank,
)
from gin3.monomials import Monomial, minimalize
from gin3.piecewise import sorted_triples

from strategies import ideals, monomials_up_to

MAXIMAL = minimalize([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
SMALL = minimalize([(1, 0, 0), (0, 2, 0), (0, 0, 3)])


def artinian_ideals():
    pure = st.tuples(st.integers(1, 5), st.integers(1, 5), st.integers(1, 5))
    return st.tuples(pure, st.lists(monomials_up_to(6), max_size=5)).map(
        lambda p: minimalize([(p[0][0], 0, 0), (0, p[0][1], 0), (0, 0, p[0][2])] + p[1])
    )


def matrix_rank(J, t, b):
    src = standard_monomials(J, t)
    tgt = standard_monomials(J, t + b)
    if not src or not tgt:
        return 0
    col = {m: i for i, m in enumerate(tgt)}
    A = np.zeros((len(tgt), len(src)))
    for j, m in enumerate(src):
        img = m * Monomial(0, 0, b)
        if img in col:
            A[col[img], j] = 1
    return int(np.linalg.matrix_rank(A))


class TestRank:
    def test_maximal_ideal(self):
        r = x3_power_map_rank(MAXIMAL, 0, 1)
        assert (r.source_dim, r.target_dim, r.rank, r.verdict) == (1, 0, 0, "surjective")

    def test_gin_339(self):
        r = x3_power_map_rank(construct_gin_greedy((3, 3, 9)).ideal, 2, 2)
        assert (r.source_dim, r.target_dim, r.rank) == (6, 9, 6)
        assert r.verdict == "injective"

    def test_small_ideal_fails(self):
        r = x3_power_map_rank(SMALL, 0, 3)
        assert (r.source_dim, r.target_dim, r.rank, r.verdict) == (1, 1, 0, "neither")

    def test_bijective(self):
        assert x3_power_map_rank(minimalize([(1, 0, 0), (0, 1, 0), (0, 0, 3)]), 0, 1).verdict == "both"

    @pytest.mark.parametrize("t,b", [(-1, 1), (0, 0)])
    def test_bad_arguments(self, t, b):
        with pytest.raises(ValueError):
            x3_power_map_rank(SMALL, t, b)

    def test_json(self):
        assert x3_power_map_rank(SMALL, 0, 3).to_json() == {
            "t": 0, "b": 3, "source_dim": 1, "target_dim": 1, "rank": 0, "verdict": "neither",
        }

    @given(artinian_ideals(), st.integers(0, 11), st.data())
    def test_matches_matrix_rank(self, J, t, data):
        b = data.draw(st.integers(1, 12 - t))
        assert x3_power_map_rank(J, t, b).rank == matrix_rank(J, t, b)

    @given(ideals, st.integers(0, 8), st.integers(1, 4))
    def test_verdict_coherent(self, J, t, b):
        r = x3_power_map_rank(J, t, b)
        assert r.rank <= min(r.source_dim, r.target_dim)
        assert r.injective == (r.rank == r.source_dim)
        assert r.surjective == (r.rank == r.target_dim)
        if r.verdict == "neither":
            assert r.source_dim > 0 and r.target_dim > 0 and r.rank < min(r.source_dim, r.target_dim)


class TestCriterion:
    def test_small_ideal(self):
        assert is_strong_lefschetz_x3(SMALL) == (False, (0, 3))
        assert is_weak_lefschetz_x3(SMALL)

    def test_maximal_ideal(self):
        assert is_strong_lefschetz_x3(MAXIMAL) == (True, None)
        assert is_weak_lefschetz_x3(MAXIMAL)

    def test_gin_339(self):
        assert is_strong_lefschetz_x3(construct_gin_greedy((3, 3, 9)).ideal) == (True, None)

    def test_non_artinian(self):
        rep = lefschetz_report(minimalize([(1, 0, 0), (0, 1, 0)]))
        assert not rep.holds and rep.reason == "ideal is not artinian"

    def test_window(self):
        rep = lefschetz_report(SMALL)
        # socle degree 3, so t + b runs up to 4
        assert max(r.t + r.b for r in rep.rows) == 4
        assert len(rep.rows) == 10

    def test_report_json(self):
        d = lefschetz_report(SMALL).to_json()
        assert d["holds"] is False and d["first_failure"] == [0, 3]

    @pytest.mark.parametrize("t", list(sorted_triples(8)), ids=str)
    def test_every_gin_passes(self, t):
        J = construct_gin_greedy(t).ideal
        assert is_strong_lefschetz_x3(J)[0]
        assert is_weak_lefschetz_x3(J)

    @given(artinian_ideals())
    def test_strong_implies_weak(self, J):
        if is_strong_lefschetz_x3(J)[0]:
            assert is_weak_lefschetz_x3(J)
