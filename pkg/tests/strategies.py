from hypothesis import strategies as st

from gin3.hilbert import DegreeTriple
from gin3.monomials import Monomial, minimalize

exponent = st.integers(min_value=0, max_value=8)
monomials = st.builds(Monomial, exponent, exponent, exponent)


def monomials_up_to(max_degree):
    return st.tuples(
        st.integers(0, max_degree), st.integers(0, max_degree), st.integers(0, max_degree)
    ).filter(lambda t: sum(t) <= max_degree).map(lambda t: Monomial(*t))


ideals = st.lists(monomials_up_to(6), min_size=0, max_size=6).map(lambda gs: minimalize(gs, 12))
degree_triples = st.tuples(st.integers(2, 10), st.integers(2, 10), st.integers(2, 10)).map(lambda t: DegreeTriple(*t))
small_triples = st.tuples(st.integers(2, 6), st.integers(2, 6), st.integers(2, 6)).map(lambda t: DegreeTriple(*t))
