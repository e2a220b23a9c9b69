"""Piecewise formulas for H(A,k) and |J_k|, checked against the product series.

Every branch is a formula valid on a set of degrees k, described either by
``k = k_of_j`` with j in an inclusive range, by bounds on k, or both.  The
branches are transcribed as written.  Where the written text cannot be
evaluated at all (a truncated expression, an undefined symbol) a minimal
repair is applied and listed in ``REPAIRS``.

References inside a branch to H(m) or |J_m| are resolved with the true values
from the product series, so each branch is judged on its own.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from itertools import combinations_with_replacement
from math import comb
from typing import Optional

from .exprs import FormulaError, evaluate
from .hilbert import CaseTag, DegreeTriple, ci_hilbert_series, classify_case, target_counts
from .templates import environment

CATALOGUE = "piecewise_discrepancies.json"


@dataclass(frozen=True)
class Branch:
    label: str
    value: str
    k_of_j: Optional[str] = None
    j_range: Optional[tuple[str, str]] = None
    k_min: Optional[str] = None
    k_max: Optional[str] = None
    strict_min: bool = False
    parity: Optional[tuple[str, int]] = None


B = Branch
BIN = "binom(k+2,2)"
FULL = BIN

# (branch label, what was written, what is evaluated)
REPAIRS = [
    ("II.lt-eq:H[2]", "k = j + d1 -", "k = j + d1 - 1"),
    ("I.lt-lt:J[1]", "k <= d - 1 with d undefined", "k <= d1 - 1"),
    ("I.lt-lt:J[7]", "k = d2 + d3 - 2", "k = j + d2 + d3 - 2"),
    ("I.lt-lt:J[8]", "k >= 3d - 2 with d undefined", "k >= d1 + d2 + d3 - 2"),
    ("II.lt-lt:J[6]", "range 0 <= d3 - d2", "range 0 <= j <= d3 - d2"),
    ("II.lt-lt:J[9]", "k >= 3d - 2 with d undefined", "k >= d1 + d2 + d3 - 2"),
]

HILBERT_BRANCHES: dict[CaseTag, list[Branch]] = {
    CaseTag.I_EQ_LT: [
        B("H[1]", BIN, k_max="d-1"),
        B("H[2]", "binom(d+1,2) + sum('d-i','i',1,j)", "d-1+j", ("0", "d-1")),
        B("H[3]", "d**2", k_min="2*d-2", k_max="d3-1"),
        B("H[4]", "H(2*d+d3-3-k)", k_min="d3"),
    ],
    CaseTag.I_LT_LT: [
        B("H[1]", BIN, k_max="d1-1"),
        B("H[2]", "binom(d1+1,2) + j*d1", "j+d1-1", ("0", "d2-d1")),
        B("H[3]", "binom(d1+1,2) + d1*(d2-d1) + sum('d1-i','i',1,j)", "j+d2-1", ("0", "d1-1")),
        B("H[4]", "d1*d2", k_min="d1+d2-2", k_max="d3-1"),
        B("H[5]", "H(d1+d2+d3-3-k)", k_min="d3"),
    ],
    CaseTag.II_EQ_EQ: [
        B("H[1]", BIN, k_max="d-1"),
        B("H[2]", "binom(k+2,2) - 3*j*(j+1)/2", "j+d-1", ("0", "floor((d-1)/2)")),
        B("H[3]", "H(3*d-k-3)", k_min="ceil((3*d-3)/2)"),
    ],
    CaseTag.II_EQ_LT: [
        B("H[1]", BIN, k_max="d-1"),
        B("H[2]", "binom(d+1,2) + sum('d-i','i',1,j)", "j+d-1", ("0", "d3-d")),
        B(
            "H[3]",
            "binom(d+1,2) + sum('d-i','i',1,d3-d) + sum('2*d-d3-2*i','i',1,j)",
            "j+d3-1",
            ("0", "floor((2*d-d3-1)/2)"),
        ),
        B("H[4]", "H(d3+2*d-3-k)", k_min="ceil((d3+2*d-3)/2)"),
    ],
    CaseTag.II_LT_EQ: [
        B("H[1]", BIN, k_max="d1-2"),
        B("H[2]", "binom(d1+1,2) + j*d1", "j+d1-1", ("0", "d-d1")),
        B(
            "H[3]",
            "binom(d1+1,2) + d1*(d-d1) + sum('d1-2*i','i',1,j)",
            "j+d-1",
            ("0", "floor((d1-1)/2)"),
        ),
        B("H[4]", "H(d1+2*d-3-k)", k_min="ceil((d1+2*d-3)/2)"),
    ],
    CaseTag.II_LT_LT: [
        B("H[1]", BIN, k_max="d1-2"),
        B("H[2]", "binom(d1+1,2) + j*d1", "j+d1-1", ("0", "d2-d1")),
        # the range bounds k, not j
        B("H[3]", "binom(d1+1,2) + d1*(d2-d1) + sum('d1-i','i',1,j)", "j+d2-1", None, k_min="0", k_max="d3-d2"),
        B(
            "H[4]",
            "binom(d1+1,2) + d1*(d2-d1) + sum('d1-j','i',1,d3-1) + sum('d1+d2-d3-2*i','i',1,j)",
            "j+d3-1",
            ("0", "floor((d1+d2-d3-1)/2)"),
        ),
        B("H[5]", "H(d1+d2+d3-3-k)", k_min="d3-1+floor((d1+d2-d3-1)/2)", strict_min=True),
    ],
}

COUNT_BRANCHES: dict[CaseTag, list[Branch]] = {
    CaseTag.I_EQ_LT: [
        B("J[1]", "0", k_max="d-1"),
        B("J[2]", "j*(j+1)", "d-1+j", ("0", "d-1")),
        B("J[3]", "d*(d-1) + 2*d*j + j*(j-1)/2", "2*d-2+j", ("0", "d3+1-2*d")),
        B("J[4]", "d3*(d3+1)/2 - d**2 + j*d3 + j*(j+1)", "d3-1+j", ("0", "d-1")),
        B("J[5]", "d3*(d3-1)/2 + d*(d3-1) + j*(d3+2*d)", "d+d3-2+j", ("0", "d")),
        B("J[6]", FULL, k_min="2*d+d3-2"),
    ],
    CaseTag.I_LT_LT: [
        B("J[1]", "0", k_max="d1-1"),
        B("J[2]", "j*(j+1)/2", "j+d1-1", ("0", "d2-d1")),
        B("J[3]", "(d2-d1)*(d2-d1-1)/2 + j*(d2-d1) + j*(j+1)", "j+d2-1", ("0", "d1-1")),
        B("J[4]", "(d1**2+d2**2-d1-d2)/2 + j*(d1+d2) + j*(j-1)/2", "j+d1+d2-2", ("0", "d3-d1-d2+1")),
        B("J[5]", "(d3**2+d3-2*d1*d2)/2 + j*d3 + j*(j+1)", "j+d3-1", ("0", "d1-1")),
        B(
            "J[6]",
            "((d1+d3)*(d1+d3-1) + d1**2 - d1 - 2*d1*d2)/2 + j*(d3+2*d1) + j*(j-1)/2",
            "j+d1+d3-2",
            ("0", "d2-d1"),
        ),
        B("J[7]", "((d2+d3)*(d2+d3-1) + d1*(d1-1))/2 + j*(d1+d2+d3)", "j+d2+d3-2", ("0", "d1-1")),
        B("J[8]", FULL, k_min="d1+d2+d3-2"),
    ],
    CaseTag.II_EQ_EQ: [
        B("J[1]", "0", k_max="d-1"),
        B("J[2]", "3*j*(j+1)/2", "d-1+j", ("0", "floor((3*d-1)/2)")),
        B("J[3]", "(3*d**2 + 3*d*(4*j+2))/8 + 3*j*(j+1)/2", "j+(3*d-2)/2", ("0", "(d-2)/2"), parity=("d", 0)),
        B("J[3]", "(3*(d**2-1) + 12*j*d)/8 + 3*j**2/2", "j+(3*d-3)/2", ("0", "(d-1)/2"), parity=("d", 1)),
        B("J[4]", "3*d*(d-1)/2 + 3*j*d", "j+2*d-2", ("0", "d-1")),
        B("J[5]", FULL, k_min="3*d-2"),
    ],
    CaseTag.II_EQ_LT: [
        B("J[1]", "0", k_max="d-1"),
        B("J[2]", "j*(j+1)", "j+d-1", ("0", "d3-d")),
        B(
            "J[3]",
            "d3**2 + d3 - d**2 - d - 2*d*d3 + j*(2*d3-d) + 3*j*(j+1)/2",
            "j+d3-1",
            ("0", "floor((2*d-d3-1)/2)"),
        ),
        B(
            "J[4]",
            "(4*d**2 + 3*d3**2 - 4*d*d3 + 4*d)/8 + j*(2*d+d3)/2 + 3*j*(j+1)/2",
            "j+(2*d+d3-2)/2",
            ("0", "(2*d-d3-2)/2"),
            parity=("d3", 0),
        ),
        B(
            "J[4]",
            "(3*d3**2 + 4*d**2 - 4*d*d3 - 3)/2 + j*(2*d+d3-3)/2 + 3*j*(j+1)/2",
            "j+(2*d+d3-3)/2",
            ("0", "(2*d-d3-1)/2"),
            parity=("d3", 1),
        ),
        B("J[5]", "3*d**2 - 2*d + d3*(d3+1)/2 - 2*d*d3 + (4*d-d3)*j + j*(j-1)", "j+2*d-2", ("0", "d3-d")),
        B("J[6]", "(d+d3)*(d+d3-1)/2 - d*(d+1)/2 + j*(2*d+d3)", "j+d3+d-2", ("0", "d-1")),
        B("J[7]", FULL, k_min="3*d-2"),
    ],
    CaseTag.II_LT_EQ: [
        B("J[1]", "0", k_max="d1-1"),
        B("J[2]", "j*(j+1)/2", "j+d1-1", ("0", "d-d1")),
        B("J[3]", "(d-d1)*(d-d1-1)/2 + j*(d-d1) + 3*j*(j+1)/2", "j+d-1", ("0", "floor((d1-1)/2)")),
        B(
            "J[4]",
            "(3*d1**2 + 2*d1 + 4*d**2 + 4*d - 4*d*d1)/8 + j*(2*d+d1)/2 + 3*j*(j+1)/2",
            "j+(2*d+d1-2)/2",
            ("0", "(d1-2)/2"),
            parity=("d1", 0),
        ),
        B(
            "J[4]",
            "(3*d1**2 + 4*d**2 - 4*d*d1 - 3)/2 + j*(2*d+d1)/2 + 3*j**2/2",
            "j+(2*d+d1-3)/2",
            ("0", "(d1-1)/2"),
            parity=("d1", 1),
        ),
        B("J[5]", "d*(d-1)/2 + d1*(d1-1) + j*(2*d1+d) + j*(j-1)/2", "j+d1+d-2", ("0", "d-d1")),
        B("J[6]", "(2*d*(2*d-1) - d1*(d1-1))/2 + j*(2*d+d1)", "j+2*d-2", ("0", "d1-1")),
        B("J[7]", FULL, k_min="3*d-2"),
    ],
    CaseTag.II_LT_LT: [
        B("J[1]", "0", k_max="d1-1"),
        B("J[2]", "j*(j+1)/2", "j+d1-1", ("0", "d2-d1")),
        B("J[3]", "d2*(d2-1) + j*(d2-d1) + j*(j+1)", "j+d2-1", ("0", "d3-d2")),
        B("J[4]", "J(d3-1) + j*(2*d3-d1-d2) + 3*j*(j+1)/2", "j+d3-1", ("0", "floor((alpha-1)/2)")),
        B("J[5]", "J((s-4)/2) + (j+1)*s/2 + 3*j*(j+1)/2", "j+(s-2)/2", ("0", "(alpha-2)/2"), parity=("s", 0)),
        B("J[5]", "J((s-3)/2) + j*s/2 + 3*j**2/2", "j+(s-3)/2", ("0", "(alpha-1)/2"), parity=("s", 1)),
        B("J[6]", "J(d1+d2-2) + j*(2*d1+2*d2-d3-1) + j**2", "j+d1+d2-2", ("0", "d3-d2")),
        B("J[7]", "J(d1+d3-2) + j*(2*d1+d3-1) + j*(j+1)/2", "j+d1+d3-2", ("0", "d2-d1")),
        B("J[8]", "J(d2+d3-1) + j*s", "j+d1+d3-2", ("0", "d1-1")),
        B("J[9]", FULL, k_min="d1+d2+d3-2"),
    ],
}


@dataclass
class PiecewiseValue:
    degrees: DegreeTriple
    k: int
    kind: str
    expected: int
    value: Optional[Fraction]
    branch: Optional[str]
    others: list = field(default_factory=list)

    @property
    def issues(self) -> list[dict]:
        """Every covering branch whose value is wrong, or a lone entry when nothing covers k."""
        rows = [(self.branch, self.value)] + list(self.others) if self.branch else []
        if not rows:
            return [{"branch": None, "value": None}]
        return [
            {"branch": lbl, "value": None if v is None else str(v)}
            for lbl, v in rows
            if v is None or v != self.expected
        ]

    @property
    def discrepancy(self) -> bool:
        return bool(self.issues)


def _branch_js(br: Branch, env: dict, k: int) -> list:
    """The j values (or [None]) for which ``br`` covers degree k."""
    ok_k = True
    if br.k_min is not None:
        lo = evaluate(br.k_min, env)
        ok_k &= k > lo if br.strict_min else k >= lo
    if br.k_max is not None:
        ok_k &= k <= evaluate(br.k_max, env)
    if not ok_k:
        return []
    if br.k_of_j is None:
        return [None]
    # k_of_j is j plus an offset
    j = Fraction(k) - evaluate(br.k_of_j, {**env, "j": 0})
    if j.denominator != 1:
        return []
    if br.j_range is not None:
        lo, hi = (evaluate(x, env) for x in br.j_range)
        if not lo <= j <= hi:
            return []
    return [int(j)]


def _evaluate_at(branches: list[Branch], kind: str, t: DegreeTriple, k: int) -> PiecewiseValue:
    truth_h = ci_hilbert_series(t)
    truth_j = target_counts(t)

    def H(m):
        m = Fraction(m)
        if m.denominator != 1 or m < 0:
            raise FormulaError(f"H at {m}")
        return truth_h[int(m)]

    def J(m):
        m = Fraction(m)
        if m.denominator != 1 or m < 0:
            raise FormulaError(f"|J| at {m}")
        return truth_j[int(m)] if m < len(truth_j) else comb(int(m) + 2, 2)

    env = {**environment(t), "k": k, "H": H, "J": J}
    expected = truth_h[k] if kind == "H" else truth_j[k]
    hits = []
    for br in branches:
        if br.parity is not None:
            name, want = br.parity
            if int(evaluate(name, env)) % 2 != want:
                continue
        try:
            js = _branch_js(br, env, k)
        except FormulaError:
            js = []
        for j in js:
            try:
                v = evaluate(br.value, env if j is None else {**env, "j": j})
            except FormulaError:
                v = None
            hits.append((br.label, v))
    pv = PiecewiseValue(t, k, kind, expected, None, None)
    if hits:
        pv.branch, pv.value = hits[0]
        pv.others = hits[1:]
    return pv


def _label(case: CaseTag, label: str) -> str:
    return f"{case}:{label}"


def _labelled(table: dict, case: CaseTag) -> list[Branch]:
    return [Branch(_label(case, b.label), *[getattr(b, f) for f in Branch.__dataclass_fields__ if f != "label"]) for b in table[case]]


def piecewise_hilbert(degrees, k: int) -> PiecewiseValue:
    t = DegreeTriple.of(degrees)
    if not 0 <= k <= t.socle_degree:
        raise ValueError(f"k must lie in 0..{t.socle_degree}")
    case = classify_case(t)
    return _evaluate_at(_labelled(HILBERT_BRANCHES, case), "H", t, k)


def piecewise_count(degrees, k: int) -> PiecewiseValue:
    t = DegreeTriple.of(degrees)
    if not 0 <= k <= t.terminal_degree:
        raise ValueError(f"k must lie in 0..{t.terminal_degree}")
    case = classify_case(t)
    return _evaluate_at(_labelled(COUNT_BRANCHES, case), "J", t, k)


def sorted_triples(max_degree: int):
    for t in combinations_with_replacement(range(2, max_degree + 1), 3):
        yield DegreeTriple(*t)


def discrepancy_catalogue(max_degree: int = 10) -> dict:
    """Every (degrees, k) where a covering branch is wrong or no branch covers k."""
    rows = {"H": [], "J": []}
    for t in sorted_triples(max_degree):
        for kind, top, fn in (("H", t.socle_degree, piecewise_hilbert), ("J", t.terminal_degree, piecewise_count)):
            for k in range(top + 1):
                pv = fn(t, k)
                if pv.discrepancy:
                    rows[kind].append({"degrees": list(t), "k": k, "expected": pv.expected, "issues": pv.issues})
    summary = {}
    for kind in rows:
        counts: dict[str, int] = {}
        for r in rows[kind]:
            for issue in r["issues"]:
                key = issue["branch"] or f"{classify_case(r['degrees'])}:uncovered"
                counts[key] = counts.get(key, 0) + 1
        summary[kind] = dict(sorted(counts.items()))
    return {"max_degree": max_degree, "repairs": [list(r) for r in REPAIRS], "summary": summary, **rows}


def load_catalogue() -> dict:
    return json.loads(resources.files("gin3.data").joinpath(CATALOGUE).read_text(encoding="utf-8"))
