"""Monomials in x1, x2, x3, the graded reverse lexicographic order, and monomial ideals.

A monomial x1^a x2^b x3^c is the exponent triple ``Monomial(a, b, c)``.  The
rich comparisons on :class:`Monomial` are the degrevlex order with
x1 > x2 > x3, so ``sorted(..., reverse=True)`` lists monomials from the
revlex-largest down.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterable, NamedTuple, Optional

NVARS = 3

_UNITS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


class Monomial(NamedTuple):
    a: int
    b: int
    c: int

    @property
    def degree(self) -> int:
        return self.a + self.b + self.c

    def sort_key(self) -> tuple[int, int, int]:
        # larger key <=> larger in degrevlex
        return (self.a + self.b + self.c, -self.c, -self.b)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __le__(self, other):
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other):
        return self.sort_key() > other.sort_key()

    def __ge__(self, other):
        return self.sort_key() >= other.sort_key()

    def __mul__(self, other):
        return Monomial(self.a + other[0], self.b + other[1], self.c + other[2])

    def divides(self, other) -> bool:
        return self.a <= other[0] and self.b <= other[1] and self.c <= other[2]

    def __truediv__(self, other):
        q = Monomial(self.a - other[0], self.b - other[1], self.c - other[2])
        if min(q) < 0:
            raise ValueError(f"{format_monomial(other)} does not divide {format_monomial(self)}")
        return q

    def lcm(self, other) -> "Monomial":
        return Monomial(max(self.a, other[0]), max(self.b, other[1]), max(self.c, other[2]))

    def __str__(self):
        return format_monomial(self)


def monomial(a: int, b: int, c: int) -> Monomial:
    if min(a, b, c) < 0:
        raise ValueError(f"negative exponent in {(a, b, c)}")
    return Monomial(a, b, c)


ONE = Monomial(0, 0, 0)
X1, X2, X3 = (Monomial(*u) for u in _UNITS)


def revlex_compare(m1, m2) -> int:
    """Return -1, 0 or 1 as ``m1`` is smaller than, equal to or greater than ``m2``.

    Higher degree is greater.  Within a degree, ``m1 > m2`` exactly when the
    last nonzero entry of ``m1 - m2`` is negative.
    """
    d1, d2 = sum(m1), sum(m2)
    if d1 != d2:
        return 1 if d1 > d2 else -1
    for e1, e2 in zip(reversed(tuple(m1)), reversed(tuple(m2))):
        if e1 != e2:
            return 1 if e1 < e2 else -1
    return 0


def revlex_desc(monomials: Iterable) -> list[Monomial]:
    return sorted({Monomial(*m) for m in monomials}, reverse=True)


@dataclass(frozen=True)
class DegreeSlice:
    """All members of a set of monomials of one degree, revlex-largest first."""

    degree: int
    members: tuple[Monomial, ...] = ()

    def __post_init__(self):
        ms = revlex_desc(self.members)
        for m in ms:
            if m.degree != self.degree:
                raise ValueError(f"{m} has degree {m.degree}, slice has degree {self.degree}")
        object.__setattr__(self, "members", tuple(ms))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, m):
        return Monomial(*m) in self._set

    @property
    def _set(self) -> frozenset:
        s = self.__dict__.get("_memo_set")
        if s is None:
            s = frozenset(self.members)
            object.__setattr__(self, "_memo_set", s)
        return s

    def as_set(self) -> frozenset:
        return self._set


@lru_cache(maxsize=None)
def _monomials_of_degree(k: int) -> tuple[Monomial, ...]:
    return tuple(
        sorted((Monomial(a, b, k - a - b) for a in range(k + 1) for b in range(k - a + 1)), reverse=True)
    )


def monomials_of_degree(k: int) -> DegreeSlice:
    if k < 0:
        raise ValueError("degree must be non-negative")
    return DegreeSlice(k, _monomials_of_degree(k))


def binomial_pair(j: int) -> list[Monomial]:
    """The j+1 monomials of degree j in x1, x2, x1^j first."""
    return [Monomial(j - i, i, 0) for i in range(j + 1)]


def shadow(slice_: DegreeSlice) -> DegreeSlice:
    out = {m * u for m in slice_ for u in _UNITS}
    return DegreeSlice(slice_.degree + 1, tuple(out))


def _is_artinian(gens) -> bool:
    return all(any(sum(g) == g[i] for g in gens) for i in range(NVARS))


def _pure_power_bound(gens) -> Optional[int]:
    # every monomial of degree >= a1+a2+a3-2 is divisible by some x_i^{a_i}
    if not _is_artinian(gens):
        return None
    return sum(min(g[i] for g in gens if sum(g) == g[i]) for i in range(NVARS)) - 2


def _generator_order(m: Monomial):
    # degree ascending, then revlex descending
    return (m.degree, m.c, m.b)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    ``max_relevant_degree`` bounds the degrees that finitely supported queries
    (Hilbert tables, Lefschetz windows) look at.  For an artinian ideal it
    defaults to the degree from which every monomial is a member.
    """

    generators: tuple[Monomial, ...]
    max_relevant_degree: int = field(default=-1)

    def __post_init__(self):
        gens = tuple(sorted({Monomial(*g) for g in self.generators}, key=_generator_order))
        for i, u in enumerate(gens):
            for v in gens[i + 1:]:
                if u.divides(v) or v.divides(u):
                    raise ValueError(f"generators not minimal: {u} and {v}")
        object.__setattr__(self, "generators", gens)
        if self.max_relevant_degree < 0:
            bound = _pure_power_bound(gens)
            if bound is None:
                bound = 2 * max((g.degree for g in gens), default=0)
            object.__setattr__(self, "max_relevant_degree", max(bound, 0))

    def __len__(self):
        return len(self.generators)

    def __contains__(self, m) -> bool:
        return ideal_membership(self, m)

    @property
    def mu(self) -> int:
        return len(self.generators)

    def is_artinian(self) -> bool:
        return _is_artinian(self.generators)

    def to_json(self) -> dict:
        return {"generators": [list(g) for g in self.generators]}

    @classmethod
    def from_json(cls, data: dict) -> "MonomialIdeal":
        return minimalize(Monomial(*g) for g in data["generators"])


def minimalize(monomials: Iterable, max_relevant_degree: int = -1) -> MonomialIdeal:
    ms = sorted({Monomial(*m) for m in monomials}, key=lambda m: m.degree)
    kept: list[Monomial] = []
    for m in ms:
        if not any(g.divides(m) for g in kept):
            kept.append(m)
    return MonomialIdeal(tuple(kept), max_relevant_degree)


def ideal_membership(J: MonomialIdeal, m) -> bool:
    return any(g.divides(m) for g in J.generators)


def degree_slice(J: MonomialIdeal, k: int) -> DegreeSlice:
    if k < 0:
        raise ValueError("degree must be non-negative")
    return DegreeSlice(k, tuple(m for m in _monomials_of_degree(k) if ideal_membership(J, m)))


def quotient_hilbert(J: MonomialIdeal, k_max: int) -> list[int]:
    """H(S/J, k) for 0 <= k <= k_max, by counting standard monomials."""
    if k_max < 0:
        raise ValueError("k_max must be non-negative")
    return [comb(k + 2, 2) - len(degree_slice(J, k)) for k in range(k_max + 1)]


def top_nonzero_degree(J: MonomialIdeal) -> int:
    """Largest k with (S/J)_k != 0; J must be artinian."""
    if not J.is_artinian():
        raise ValueError("ideal is not artinian")
    for k in range(J.max_relevant_degree, -1, -1):
        if len(degree_slice(J, k)) < comb(k + 2, 2):
            return k
    return -1


def is_strongly_stable(J: MonomialIdeal) -> bool:
    # Checking the minimal generators suffices: a member m = g*w with g a
    # generator; if x_i | g then x_j m/x_i = (x_j g/x_i) w lies in J, and if
    # x_i does not divide g it divides w, so x_j m/x_i = g (x_j w/x_i).
    for u in J.generators:
        for i in (1, 2):
            if u[i] == 0:
                continue
            for j in range(i):
                v = list(u)
                v[i] -= 1
                v[j] += 1
                if not ideal_membership(J, v):
                    return False
    return True


def is_strongly_stable_up_to(J: MonomialIdeal, k_max: int) -> bool:
    """Exchange check over every member of degree <= k_max (no generator shortcut)."""
    for k in range(k_max + 1):
        for u in degree_slice(J, k):
            for i in (1, 2):
                if u[i] == 0:
                    continue
                for j in range(i):
                    v = list(u)
                    v[i] -= 1
                    v[j] += 1
                    if not ideal_membership(J, v):
                        return False
    return True


def almost_revlex_violation(J: MonomialIdeal) -> Optional[tuple[Monomial, Monomial]]:
    """First (generator, non-member above it) pair, or None if J is almost revlex."""
    for u in J.generators:
        for v in _monomials_of_degree(u.degree):
            if v <= u:
                break
            if not ideal_membership(J, v):
                return u, v
    return None


def is_almost_revlex(J: MonomialIdeal) -> bool:
    return almost_revlex_violation(J) is None


# -- text forms ---------------------------------------------------------------

def format_monomial(m, sep: str = "*") -> str:
    """``x1^2*x3`` style; ``sep=""`` gives the juxtaposed form ``x1^2x3``."""
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return sep.join(parts) if parts else "1"


_FACTOR = re.compile(r"x([123])(?:\^(\d+))?")


def parse_monomial(text: str) -> Monomial:
    """Inverse of :func:`format_monomial`; accepts either separator."""
    s = text.strip().replace("*", "").replace(" ", "")
    if s == "1":
        return ONE
    exps = [0, 0, 0]
    pos = 0
    while pos < len(s):
        match = _FACTOR.match(s, pos)
        if match is None:
            raise ValueError(f"cannot parse monomial {text!r}")
        exps[int(match.group(1)) - 1] += int(match.group(2) or 1)
        pos = match.end()
    return Monomial(*exps)
