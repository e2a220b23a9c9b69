"""Hilbert function of a complete intersection of three forms in three variables."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb


class InvalidDegrees(ValueError):
    """Degrees violating 2 <= d1 <= d2 <= d3 (after sorting)."""


@dataclass(frozen=True, order=True)
class DegreeTriple:
    d1: int
    d2: int
    d3: int

    def __post_init__(self):
        ds = sorted(int(d) for d in (self.d1, self.d2, self.d3))
        if ds[0] < 2:
            raise InvalidDegrees(f"degrees {tuple(ds)} violate 2 <= d1 <= d2 <= d3 (need every degree >= 2)")
        object.__setattr__(self, "d1", ds[0])
        object.__setattr__(self, "d2", ds[1])
        object.__setattr__(self, "d3", ds[2])

    @classmethod
    def of(cls, degrees) -> "DegreeTriple":
        if isinstance(degrees, DegreeTriple):
            return degrees
        ds = list(degrees)
        if len(ds) != 3:
            raise InvalidDegrees(f"expected three degrees, got {len(ds)}")
        return cls(*ds)

    @property
    def alpha(self) -> int:
        return self.d1 + self.d2 - self.d3

    @property
    def total(self) -> int:
        return self.d1 + self.d2 + self.d3

    @property
    def socle_degree(self) -> int:
        return self.total - 3

    @property
    def terminal_degree(self) -> int:
        """First degree in which the Gin contains every monomial."""
        return self.total - 2

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.d1, self.d2, self.d3)

    def __iter__(self):
        return iter(self.as_tuple())

    def __str__(self):
        return f"({self.d1},{self.d2},{self.d3})"


class CaseTag(str, Enum):
    I_EQ_LT = "I.eq-lt"
    I_LT_LT = "I.lt-lt"
    II_EQ_EQ = "II.eq-eq"
    II_EQ_LT = "II.eq-lt"
    II_LT_EQ = "II.lt-eq"
    II_LT_LT = "II.lt-lt"

    def __str__(self):
        return self.value


def classify_case(degrees) -> CaseTag:
    t = DegreeTriple.of(degrees)
    d1, d2, d3 = t
    if d1 + d2 <= d3 + 1:
        # d2 = d3 would force d1 <= 1 here, so only the two eq-lt / lt-lt shapes occur
        return CaseTag.I_EQ_LT if d1 == d2 else CaseTag.I_LT_LT
    if d1 == d2 == d3:
        return CaseTag.II_EQ_EQ
    if d1 == d2:
        return CaseTag.II_EQ_LT
    if d2 == d3:
        return CaseTag.II_LT_EQ
    return CaseTag.II_LT_LT


@dataclass(frozen=True)
class HilbertTable:
    degrees: DegreeTriple
    values: tuple[int, ...]

    @property
    def socle_degree(self) -> int:
        return self.degrees.socle_degree

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.values):
            return self.values[k]
        if k < 0:
            raise IndexError(k)
        return 0

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def padded(self, k_max: int) -> list[int]:
        return [self[k] for k in range(k_max + 1)]

    def to_json(self) -> dict:
        return {
            "degrees": list(self.degrees),
            "H": list(self.values),
            "J_counts": target_counts(self.degrees),
        }


def _truncated_geometric(d: int) -> list[int]:
    return [1] * d


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def ci_hilbert_series(degrees) -> HilbertTable:
    """Coefficients of (1+...+t^{d1-1})(1+...+t^{d2-1})(1+...+t^{d3-1})."""
    t = DegreeTriple.of(degrees)
    p = [1]
    for d in t:
        p = _poly_mul(p, _truncated_geometric(d))
    return HilbertTable(t, tuple(p))


def target_counts(degrees) -> list[int]:
    """|J_k| = C(k+2,2) - H(A,k) for 0 <= k <= d1+d2+d3-2."""
    t = DegreeTriple.of(degrees)
    h = ci_hilbert_series(t)
    return [comb(k + 2, 2) - h[k] for k in range(t.terminal_degree + 1)]
