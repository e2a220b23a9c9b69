"""Greedy construction of the generic initial ideal and its generator counts."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .hilbert import CaseTag, DegreeTriple, classify_case, target_counts
from .monomials import (
    DegreeSlice,
    Monomial,
    MonomialIdeal,
    _monomials_of_degree,
    degree_slice,
    shadow,
)


class ConstructionError(RuntimeError):
    """The shadow of J_k overshoots the prescribed |J_{k+1}|."""


@dataclass(frozen=True)
class GinResult:
    degrees: DegreeTriple
    ideal: MonomialIdeal
    new_by_degree: dict = field(default_factory=dict)
    method: str = "greedy"

    @property
    def case(self) -> CaseTag:
        return classify_case(self.degrees)

    @property
    def generators(self) -> tuple[Monomial, ...]:
        return self.ideal.generators

    @property
    def mu(self) -> int:
        return self.ideal.mu

    def to_json(self) -> dict:
        return {
            "degrees": list(self.degrees),
            "case": str(self.case),
            "method": self.method,
            "generators": [list(g) for g in self.generators],
            "new_by_degree": {str(k): [list(m) for m in ms] for k, ms in sorted(self.new_by_degree.items())},
            "mu": self.mu,
        }


def construct_gin_greedy(degrees) -> GinResult:
    """Build J degree by degree: J_{k+1} is Shad(J_k) plus the revlex-largest
    monomials outside it, as many as the Hilbert function demands."""
    return _greedy(DegreeTriple.of(degrees))


@lru_cache(maxsize=512)
def _greedy(t: DegreeTriple) -> GinResult:
    counts = target_counts(t)
    current = DegreeSlice(0, ())
    new_by_degree: dict[int, tuple[Monomial, ...]] = {}
    gens: list[Monomial] = []
    for k, want in enumerate(counts):
        shad = shadow(current) if k else DegreeSlice(0, ())
        need = want - len(shad)
        if need < 0:
            raise ConstructionError(f"{t}: |Shad(J_{k - 1})| = {len(shad)} exceeds |J_{k}| = {want}")
        fresh = [m for m in _monomials_of_degree(k) if m not in shad][:need]
        if fresh:
            new_by_degree[k] = tuple(fresh)
            gens.extend(fresh)
        current = DegreeSlice(k, shad.members + tuple(fresh))
    ideal = MonomialIdeal(tuple(gens), t.terminal_degree)
    return GinResult(t, ideal, new_by_degree, "greedy")


def check_slices(result: GinResult) -> None:
    """Assert the per-degree bookkeeping of a GinResult (shadow + new = slice, sizes match)."""
    t = result.degrees
    counts = target_counts(t)
    prev = DegreeSlice(0, ())
    for k in range(t.terminal_degree + 1):
        sl = degree_slice(result.ideal, k)
        if len(sl) != counts[k]:
            raise AssertionError(f"|J_{k}| = {len(sl)}, expected {counts[k]}")
        rebuilt = set(shadow(prev).members if k else ()) | set(result.new_by_degree.get(k, ()))
        if rebuilt != sl.as_set():
            raise AssertionError(f"slice {k} is not Shad(J_{k - 1}) plus the new generators")
        prev = sl


# -- generator counts ---------------------------------------------------------

def generator_count(degrees, printed: bool = False):
    """Number of minimal generators of the Gin from the closed formula for its case.

    With ``printed=True`` the parity switch for the ``d1 < d2 = d3`` case keys
    on d = d2 as it is printed; otherwise on d1, which is what the generator
    lists require.  The printed variant can return a non-integer Fraction.
    """
    t = DegreeTriple.of(degrees)
    d1, d2, d3 = t
    case = classify_case(t)
    F = Fraction
    if case is CaseTag.I_EQ_LT:
        d = d1
        value = F(d * d + d + 1)
    elif case is CaseTag.I_LT_LT:
        value = F(1 + d1 + d1 * d2)
    elif case is CaseTag.II_EQ_EQ:
        d = d1
        if d % 2:
            value = 1 + F(d * (d + 1), 2) + F((d + 1) ** 2, 4)
        else:
            value = 1 + F(d * (d + 1), 2) + F(d * (d + 2), 4)
    elif case is CaseTag.II_EQ_LT:
        d = d1
        if d3 % 2 == 0:
            value = d * (d + 1) - F(2 * d - d3, 2) ** 2 + 1
        else:
            value = d * (d + 1) - F((2 * d - d3) ** 2 - 1, 4) + 1
    elif case is CaseTag.II_LT_EQ:
        d = d2
        parity_of = d if printed else d1
        if parity_of % 2 == 0:
            value = d1 * (d + 1) - F(d1, 2) ** 2 + 1
        else:
            value = d1 * (d + 1) - F(d1 * d1 - 1, 4) + 1
    else:
        a = t.alpha
        if a % 2 == 0:
            value = d1 * (d2 + 1) - F(a, 2) ** 2 + 1
        else:
            value = d1 * (d2 + 1) - F(a * a - 1, 4) + 1
    if value.denominator == 1:
        return int(value)
    return value


def mu_bound(degrees) -> int:
    t = DegreeTriple.of(degrees)
    return t.d1 * (t.d2 + 1) + 1


def mu_bound_check(degrees, J: MonomialIdeal) -> bool:
    return J.mu <= mu_bound(degrees)
