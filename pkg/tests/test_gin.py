from itertools import permutations

import pytest
from hypothesis import given

from gin3.gin import ConstructionError, check_slices, construct_gin_greedy, generator_count, mu_bound, mu_bound_check
from gin3.hilbert import ci_hilbert_series
from gin3.monomials import Monomial, degree_slice, is_almost_revlex, is_strongly_stable, monomials_of_degree, parse_monomial, quotient_hilbert
from gin3.piecewise import sorted_triples
from gin3.references import load_reference_lists

from strategies import degree_triples

M = Monomial
ALL = list(sorted_triples(10))

GIN_339 = [
    "x1^3", "x1^2*x2", "x1*x2^3", "x2^5", "x2^4*x3^5", "x1*x2^2*x3^7", "x2^3*x3^7",
    "x1^2*x3^9", "x1*x2*x3^9", "x2^2*x3^9", "x1*x3^11", "x2*x3^11", "x3^13",
]


def test_339_generators():
    r = construct_gin_greedy((3, 3, 9))
    assert set(r.generators) == {parse_monomial(s) for s in GIN_339}
    assert r.mu == 13


def test_222_generators():
    r = construct_gin_greedy((2, 2, 2))
    assert r.generators == (M(2, 0, 0), M(1, 1, 0), M(0, 2, 0), M(1, 0, 2), M(0, 1, 2), M(0, 0, 4))


def test_222_new_generators_by_degree():
    r = construct_gin_greedy((2, 2, 2))
    assert r.new_by_degree == {2: (M(2, 0, 0), M(1, 1, 0), M(0, 2, 0)), 3: (M(1, 0, 2), M(0, 1, 2)), 4: (M(0, 0, 4),)}


def test_349_has_sixteen():
    assert construct_gin_greedy((3, 4, 9)).mu == 16


def test_reference_lists_match():
    for ref in load_reference_lists():
        r = construct_gin_greedy(ref.degrees)
        assert set(r.generators) == set(ref.monomials()), ref.degrees
        assert r.mu == ref.mu


def test_json_shape():
    d = construct_gin_greedy((2, 2, 2)).to_json()
    assert list(d) == ["degrees", "case", "method", "generators", "new_by_degree", "mu"]
    assert d["case"] == "II.eq-eq" and d["method"] == "greedy" and d["mu"] == 6
    assert d["new_by_degree"]["4"] == [[0, 0, 4]]


@pytest.mark.parametrize("t", ALL, ids=str)
def test_structure(t):
    r = construct_gin_greedy(t)
    J = r.ideal
    check_slices(r)
    assert is_almost_revlex(J) and is_strongly_stable(J)
    assert quotient_hilbert(J, t.terminal_degree) == ci_hilbert_series(t).padded(t.terminal_degree)
    top = t.terminal_degree
    assert degree_slice(J, top).as_set() == set(monomials_of_degree(top))
    assert J.mu == generator_count(t)
    assert mu_bound_check(t, J)


@given(degree_triples)
def test_permutation_gives_same_ideal(t):
    base = construct_gin_greedy(t).generators
    for p in permutations(t):
        assert construct_gin_greedy(p).generators == base


def test_deterministic():
    a = construct_gin_greedy((4, 6, 7)).to_json()
    from gin3.gin import _greedy

    _greedy.cache_clear()
    assert construct_gin_greedy((4, 6, 7)).to_json() == a


def test_check_slices_catches_tampering():
    r = construct_gin_greedy((3, 3, 3))
    bad = type(r)(r.degrees, r.ideal, {**r.new_by_degree, 3: ()}, r.method)
    with pytest.raises(AssertionError):
        check_slices(bad)


def test_construction_error_is_runtime_error():
    assert issubclass(ConstructionError, RuntimeError)


class TestCounts:
    @pytest.mark.parametrize("t,mu", [((3, 3, 9), 13), ((3, 4, 9), 16), ((4, 5, 6), 23), ((2, 2, 2), 6), ((5, 5, 5), 25)])
    def test_examples(self, t, mu):
        assert generator_count(t) == mu

    def test_printed_parity_gives_fraction(self):
        # (3,4,4): parity on d2 = 4 gives 3*5 - 9/4 + 1
        v = generator_count((3, 4, 4), printed=True)
        assert v.denominator == 4
        assert generator_count((3, 4, 4)) == construct_gin_greedy((3, 4, 4)).mu == 14

    def test_odd_equal_degrees_exact(self):
        for d in (3, 5, 7, 9):
            assert generator_count((d, d, d)) == construct_gin_greedy((d, d, d)).mu


class TestBound:
    @pytest.mark.parametrize("t,bound", [((3, 3, 9), 13), ((2, 2, 2), 7), ((4, 5, 6), 25)])
    def test_examples(self, t, bound):
        assert mu_bound(t) == bound
        assert mu_bound_check(t, construct_gin_greedy(t).ideal)

    def test_tight_at_339(self):
        assert construct_gin_greedy((3, 3, 9)).mu == mu_bound((3, 3, 9))
