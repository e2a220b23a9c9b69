"""Lefschetz checks for x3 on S/J with J a monomial ideal.

Multiplication by x3^b sends a standard monomial m to m*x3^b, which is either
zero in S/J or again a standard monomial, and distinct m have distinct images.
The rank of the map is therefore a count of surviving monomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .monomials import Monomial, MonomialIdeal, _monomials_of_degree, ideal_membership


@dataclass(frozen=True)
class MapRankReport:
    t: int
    b: int
    source_dim: int
    target_dim: int
    rank: int

    @property
    def injective(self) -> bool:
        return self.rank == self.source_dim

    @property
    def surjective(self) -> bool:
        return self.rank == self.target_dim

    @property
    def verdict(self) -> str:
        if self.injective and self.surjective:
            return "both"
        if self.injective:
            return "injective"
        if self.surjective:
            return "surjective"
        return "neither"

    @property
    def ok(self) -> bool:
        # injective or surjective, inclusively
        return self.verdict != "neither"

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "b": self.b,
            "source_dim": self.source_dim,
            "target_dim": self.target_dim,
            "rank": self.rank,
            "verdict": self.verdict,
        }


def standard_monomials(J: MonomialIdeal, k: int) -> list[Monomial]:
    return [m for m in _monomials_of_degree(k) if not ideal_membership(J, m)]


def _rank(source, target: set, t: int, b: int) -> MapRankReport:
    shift = Monomial(0, 0, b)
    rank = sum(1 for m in source if m * shift in target)
    return MapRankReport(t, b, len(source), len(target), rank)


def x3_power_map_rank(J: MonomialIdeal, t: int, b: int) -> MapRankReport:
    if t < 0 or b < 1:
        raise ValueError("need t >= 0 and b >= 1")
    return _rank(standard_monomials(J, t), set(standard_monomials(J, t + b)), t, b)


def _socle_window(J: MonomialIdeal) -> Optional[int]:
    """Socle degree of S/J, or None when J is not artinian."""
    if not J.is_artinian():
        return None
    for k in range(J.max_relevant_degree, -1, -1):
        if standard_monomials(J, k):
            return k
    return -1


@dataclass
class LefschetzReport:
    holds: bool
    failure: Optional[tuple[int, int]]
    rows: list
    reason: str = ""

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "first_failure": list(self.failure) if self.failure else None,
            "reason": self.reason,
            "maps": [r.to_json() for r in self.rows],
        }


def lefschetz_report(J: MonomialIdeal, max_power: Optional[int] = None) -> LefschetzReport:
    """Every map x3^b : (S/J)_t -> (S/J)_{t+b} with t + b <= socle + 1.

    Past that window the target is zero and every map is surjective.  A
    non-artinian J is reported as failing rather than raising.
    """
    socle = _socle_window(J)
    if socle is None:
        return LefschetzReport(False, None, [], "ideal is not artinian")
    rows = []
    failure = None
    top = socle + 1
    std = [set(standard_monomials(J, k)) for k in range(top + 1)]
    for b in range(1, top + 1):
        if max_power is not None and b > max_power:
            break
        for t in range(0, top - b + 1):
            r = _rank(std[t], std[t + b], t, b)
            rows.append(r)
            if failure is None and not r.ok:
                failure = (t, b)
    return LefschetzReport(failure is None, failure, rows)


def is_strong_lefschetz_x3(J: MonomialIdeal) -> tuple[bool, Optional[tuple[int, int]]]:
    """(True, None) or (False, first failing (t, b)); failures ordered by b then t."""
    rep = lefschetz_report(J)
    return rep.holds, rep.failure


def is_weak_lefschetz_x3(J: MonomialIdeal) -> bool:
    return lefschetz_report(J, max_power=1).holds
