"""Closed-form generator lists of the Gin, one template per case and parity branch.

Each template is a list of families.  A family is one of

* ``mono``: a single monomial x1^a x2^b x3^c,
* ``block``: x1^a x2^b x3^c times every monomial of degree n in x1, x2,
* ``span``: a run written by its first and last member, x1^a x2^b x3^c, ...,
  x2^b' x3^c'.  It is expanded from the first member (the x1-exponent gives
  the length) and the last member is only checked for consistency,

optionally indexed by j over an inclusive range.  Exponents are formulas in
d1, d2, d3, d (the repeated degree where there is one), alpha = d1+d2-d3,
s = d1+d2+d3 and j.

The formulas are kept exactly as written, typos included.  A separate JSON
table lists corrections; ``construct_gin_closed_form(..., normalize=True)``
applies them.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, replace
from fractions import Fraction
from importlib import resources
from typing import Optional

from .exprs import FormulaError, evaluate
from .gin import GinResult, construct_gin_greedy
from .hilbert import CaseTag, DegreeTriple, classify_case
from .monomials import Monomial, binomial_pair, minimalize

FIXTURE_ENV = "GIN3_FIXTURES"
TYPO_TABLE = "template_typos.json"


@dataclass(frozen=True)
class Family:
    kind: str
    a: str
    b: str
    c: str
    n: str = "0"
    last: Optional[tuple[str, str, str]] = None
    j: Optional[tuple[str, str]] = None

    def field_value(self, name: str) -> str:
        if name.startswith("last."):
            return self.last["abc".index(name[-1])]
        if name in ("lo", "hi"):
            return self.j[0 if name == "lo" else 1]
        return getattr(self, name)

    def with_field(self, name: str, value: str) -> "Family":
        if name.startswith("last."):
            last = list(self.last)
            last["abc".index(name[-1])] = value
            return replace(self, last=tuple(last))
        if name in ("lo", "hi"):
            j = list(self.j)
            j[0 if name == "lo" else 1] = value
            return replace(self, j=tuple(j))
        return replace(self, **{name: value})


def mono(a, b, c, j=None) -> Family:
    return Family("mono", a, b, c, j=j)


def block(a, b, c, n, j=None) -> Family:
    return Family("block", a, b, c, n=n, j=j)


def span(first, last, j=None) -> Family:
    return Family("span", *first, last=last, j=j)


_TAIL_EQ = block("0", "0", "d-2+2*j", "d-j", ("1", "d"))

TEMPLATES: dict[tuple[CaseTag, str], list[Family]] = {
    (CaseTag.I_EQ_LT, "all"): [
        mono("d", "0", "0"),
        mono("d-j-1", "2*j+1", "0", ("0", "d-1")),
        block("0", "2*d-2*j-2", "d3-2*d+2*j+2", "j", ("0", "d-2")),
        block("0", "0", "d3+2*j-2", "d-j", ("1", "d")),
    ],
    (CaseTag.I_LT_LT, "all"): [
        mono("d1", "0", "0"),
        mono("d1-j", "d2-d1+2*j-1", "0", ("1", "d1-1")),
        mono("0", "d1+d2-1", "0"),
        mono("0", "d1+d2-2", "d3-d1-d2+2"),
        block("0", "d1+d2-2*j-2", "d3-d1-d2+2*j+2", "j", ("1", "d1-2")),
        block("0", "d2-d1+1-j", "d3+d1-d2-2+2*j", "d1-1", ("1", "d2-d1")),
        block("0", "0", "d3+d2-d1+2*j-2", "d1-j", ("1", "d1")),
    ],
    (CaseTag.II_EQ_EQ, "d odd"): [
        block("d-2", "0", "0", "2"),
        mono("d-2*j-1", "3*j+1", "0", ("1", "(d-3)/2")),
        mono("d-2*j-2", "3*j+2", "0", ("1", "(d-3)/2")),
        mono("0", "(3*d-1)/2", "0"),
        mono("0", "(3*d-3)/3", "1"),
        span(("2*j", "(3*d-3)/2-3*j", "2*j+1"), ("0", "(3*d-3)/2-j", "2*j+1"), ("1", "(d-3)/2")),
        _TAIL_EQ,
    ],
    (CaseTag.II_EQ_EQ, "d even"): [
        block("d-2", "0", "0", "2"),
        mono("d-2*j-1", "3*j+1", "0", ("1", "(d-4)/2")),
        mono("d-2*j-2", "3*j+2", "0", ("1", "(d-4)/2")),
        mono("1", "(3*d-4)/2", "0"),
        mono("0", "(3*d-2)/2", "0"),
        span(("2*j-1", "3*d/2-3*j", "2*j"), ("0", "(3*d-2)/2-j", "2*j"), ("1", "(d-2)/2")),
        _TAIL_EQ,
    ],
    (CaseTag.II_EQ_LT, "d3 even"): [
        mono("d", "0", "0"),
        mono("d-1", "1", "0"),
        mono("d-j-1", "2*j+1", "0", ("1", "d3-d-1")),
        mono("2*d-d3-2*j+1", "2*d3-2*d+3*j-2", "0", ("1", "(2*d-d3)/2")),
        mono("2*d-d3-2*j", "2*d3-2*d+3*j-1", "0", ("1", "(2*d-d3)/2")),
        span(("2*j-1", "(2*d+d3-2)/2-3*j", "2*j"), ("0", "(2*d+d3-4)/2-j", "2*j"), ("1", "(2*d-d3-2)/2")),
        block("0", "2*d3-2*d+2-2*j", "2*d-d3-2+2*j", "2*d-d3+j-2", ("1", "d3-d")),
        block("0", "0", "d3-2+2*j", "d-j", ("1", "d")),
    ],
    (CaseTag.II_EQ_LT, "d3 odd"): [
        mono("d", "0", "0"),
        mono("d-1", "1", "0"),
        mono("d-j-1", "2*j+1", "0", ("1", "d3-d-1")),
        mono("2*d-d3-2*j+1", "2*d3-2*d+3*j-2", "0", ("1", "(2*d-d3-1)/2")),
        mono("2*d-d3-2*j", "2*d3-2*d+3*j-1", "0", ("1", "(2*d-d3-1)/2")),
        mono("0", "(2*d+d3-1)/2", "0"),
        mono("0", "(2*d+d3-3)/2", "1"),
        span(("2*j", "(2*d+d3-3)/2-3*j", "2*j+1"), ("0", "(2*d+d3-3)/2-j", "2*j+1"), ("1", "(2*d-d3-3)/2")),
        block("0", "2*d3-2*d+2-2*j", "2*d-d3-2+2*j", "2*d-d3+j-2", ("1", "d3-d")),
        block("0", "0", "d3-2+2*j", "d-j", ("1", "d")),
    ],
    (CaseTag.II_LT_EQ, "d1 even"): [
        mono("d1", "0", "0"),
        mono("d1-2*j+1", "d-d1-2+3*j", "0", ("1", "(d1-2)/2")),
        mono("d1-2*j", "d-d1-1+3*j", "0", ("1", "(d1-2)/2")),
        mono("1", "(d1+2*d-4)/2", "0"),
        mono("0", "(d1+2*d-4)/2", "0"),
        span(("2*j-1", "(d1+2*d)/2-3*j", "2*j"), ("0", "(d1+2*d-2)/2-j", "2*j"), ("1", "(d1-4)/2")),
        block("0", "d-d1-j+1", "d1-2+2*j", "d1-1", ("1", "d-d1")),
        block("0", "0", "2*d-d1-2+2*j", "d1-j", ("1", "d1")),
    ],
    (CaseTag.II_LT_EQ, "d1 odd"): [
        mono("d1", "0", "0"),
        mono("d1-2*j+1", "d-d1-2+3*j", "0", ("1", "(d1-1)/2")),
        mono("d1-2*j", "d-d1-1+3*j", "0", ("1", "(d1-1)/2")),
        mono("0", "(d1+2*d-1)/2", "0"),
        mono("0", "(d1+2*d-3)/2", "1"),
        span(("2*j", "(d1+2*d-3)/2-3*j", "2*j+1"), ("0", "(d1+2*d-3)/2-3*j", "2*j+1"), ("1", "(d1-3)/2")),
        block("0", "d-d1-j+1", "d1-2+2*j", "d1-1", ("1", "d-d1")),
        block("0", "0", "2*d-d1-2+2*j", "d1-j", ("1", "d1")),
    ],
    (CaseTag.II_LT_LT, "alpha even"): [
        mono("d1", "0", "0"),
        # the run x1^(d1-1) x2^(d2-d1+1), x1^(d1-2) x2^(d2-d1+3), ..., x1^alpha x2^(2*d3-d1-d2-1)
        mono("d1-j", "d2-d1+2*j-1", "0", ("1", "d3-d2")),
        mono("alpha-2*j", "2*d3-d1-d2+3*j-1", "0", ("1", "(alpha-2)/2")),
        mono("alpha-2*j+1", "2*d3-d1-d2+3*j-2", "0", ("1", "(alpha-2)/2")),
        mono("0", "(s-2)/2", "0"),
        mono("1", "(s-4)/2", "0"),
        block("0", "s/2-3*j", "2*j", "2*j-1", ("1", "(alpha-2)/2")),
        span(("alpha+j-2", "2*d3-d1-d2-2*j+2", "alpha+2*j-2"), ("0", "d3-j", "alpha+2*j-2"), ("1", "d3-d2")),
        span(("d1-1", "d2-d1-j+1", "d1+d3-d2+2*j-2"), ("0", "d2-j", "d1+d3-d2+2*j-2"), ("1", "d2-d1")),
        block("0", "0", "d2+d3-d1-2+2*j", "d1-j", ("1", "d1")),
    ],
    (CaseTag.II_LT_LT, "alpha odd"): [
        mono("d1", "0", "0"),
        mono("d1-j", "d2-d1+2*j-1", "0", ("1", "d3-d2")),
        mono("alpha-2*j", "2*d3-d1-d2+3*j-1", "0", ("1", "(alpha-1)/2")),
        mono("alpha-2*j+1", "2*d3-d1-d2+3*j-2", "0", ("1", "(alpha-1)/2")),
        mono("0", "(s-1)/2", "0"),
        mono("0", "(s-3)/2", "1"),
        span(("2*j", "(s-3)/2-3*j", "2*j+1"), ("0", "(s-3)/2-j", "2*j+1"), ("1", "(alpha-3)/2")),
        span(("alpha+j-2", "2*d3-d1-d2-2*j+2", "alpha+2*j-2"), ("0", "d3-j", "alpha+2*j-2"), ("1", "d3-d2")),
        span(("d1-1", "d2-d1-j+1", "d1+d3-d2+2*j-2"), ("0", "d2-j", "d1+d3-d2+2*j-2"), ("1", "d2-d1")),
        block("0", "0", "d2+d3-d1-2+2*j", "d1-j", ("1", "d1")),
    ],
}


def branch_of(degrees) -> tuple[CaseTag, str]:
    t = DegreeTriple.of(degrees)
    case = classify_case(t)
    if case in (CaseTag.I_EQ_LT, CaseTag.I_LT_LT):
        return case, "all"
    if case is CaseTag.II_EQ_EQ:
        return case, "d odd" if t.d1 % 2 else "d even"
    if case is CaseTag.II_EQ_LT:
        return case, "d3 odd" if t.d3 % 2 else "d3 even"
    if case is CaseTag.II_LT_EQ:
        return case, "d1 odd" if t.d1 % 2 else "d1 even"
    return case, "alpha odd" if t.alpha % 2 else "alpha even"


def environment(degrees) -> dict:
    t = DegreeTriple.of(degrees)
    env = {"d1": t.d1, "d2": t.d2, "d3": t.d3, "alpha": t.alpha, "s": t.total}
    case = classify_case(t)
    if case in (CaseTag.I_EQ_LT, CaseTag.II_EQ_EQ, CaseTag.II_EQ_LT):
        env["d"] = t.d1
    elif case is CaseTag.II_LT_EQ:
        env["d"] = t.d2
    return env


# -- typo table ---------------------------------------------------------------

@dataclass(frozen=True)
class TemplateTypo:
    case: str
    branch: str
    family: int
    field: str
    as_written: str
    corrected: str
    note: str = ""


def typo_table_path() -> Optional[str]:
    """Path from $GIN3_FIXTURES (a file, or a directory holding the table)."""
    env = os.environ.get(FIXTURE_ENV)
    if not env:
        return None
    return os.path.join(env, TYPO_TABLE) if os.path.isdir(env) else env


def load_typo_table(path: Optional[str] = None) -> list[TemplateTypo]:
    path = path or typo_table_path()
    if path:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    else:
        data = json.loads(resources.files("gin3.data").joinpath(TYPO_TABLE).read_text(encoding="utf-8"))
    return [TemplateTypo(**row) for row in data["corrections"]]


def normalized_templates(typos: list[TemplateTypo]) -> dict:
    out = {key: list(fams) for key, fams in TEMPLATES.items()}
    for ty in typos:
        key = (CaseTag(ty.case), ty.branch)
        fam = out[key][ty.family]
        if fam.field_value(ty.field) != ty.as_written:
            raise ValueError(f"typo table entry {ty} does not match the template text {fam.field_value(ty.field)!r}")
        out[key][ty.family] = fam.with_field(ty.field, ty.corrected)
    return out


# -- expansion ----------------------------------------------------------------

@dataclass
class Expansion:
    degrees: DegreeTriple
    case: CaseTag
    branch: str
    normalized: bool
    listed: list = field(default_factory=list)
    anomalies: list = field(default_factory=list)


def _as_exponent(v: Fraction) -> Optional[int]:
    if v.denominator != 1 or v < 0:
        return None
    return int(v)


def expand_family(fam: Family, env: dict, index: int, out: Expansion) -> None:
    if fam.j is None:
        js = [None]
    else:
        lo, hi = (evaluate(x, env) for x in fam.j)
        if lo.denominator != 1 or hi.denominator != 1:
            out.anomalies.append({"family": index, "issue": f"non-integer range {lo}..{hi}"})
        js = list(range(int(-((-lo) // 1)), int(hi // 1) + 1))
    for j in js:
        e = dict(env) if j is None else {**env, "j": j}
        try:
            raw = [evaluate(x, e) for x in (fam.a, fam.b, fam.c, fam.n)]
        except FormulaError as exc:
            out.anomalies.append({"family": index, "j": j, "issue": str(exc)})
            continue
        exps = [_as_exponent(v) for v in raw]
        if None in exps:
            out.anomalies.append({"family": index, "j": j, "issue": f"invalid exponents {[str(v) for v in raw]}"})
            continue
        a, b, c, n = exps
        if fam.kind == "mono":
            out.listed.append(Monomial(a, b, c))
        elif fam.kind == "block":
            out.listed.extend(Monomial(a, b, c) * m for m in binomial_pair(n))
        else:
            first = Monomial(a, b, c)
            run = [Monomial(0, b, c) * m for m in binomial_pair(a)]
            last = tuple(evaluate(x, e) for x in fam.last)
            if tuple(run[-1]) != last:
                out.anomalies.append(
                    {"family": index, "j": j, "issue": f"run from {first} ends at {run[-1]}, written end {[str(v) for v in last]}"}
                )
            out.listed.extend(run)


def expand_template(degrees, normalize: bool = True, typos: Optional[list[TemplateTypo]] = None) -> Expansion:
    t = DegreeTriple.of(degrees)
    case, branch = branch_of(t)
    if normalize:
        families = normalized_templates(load_typo_table() if typos is None else typos)[(case, branch)]
    else:
        families = TEMPLATES[(case, branch)]
    out = Expansion(t, case, branch, normalize)
    env = environment(t)
    for i, fam in enumerate(families):
        expand_family(fam, env, i, out)
    return out


@dataclass
class ClosedFormReport:
    result: GinResult
    expansion: Expansion
    missing: list
    extra: list

    @property
    def matches_greedy(self) -> bool:
        return not self.missing and not self.extra

    def to_json(self) -> dict:
        return {
            "degrees": list(self.result.degrees),
            "case": str(self.expansion.case),
            "branch": self.expansion.branch,
            "normalized": self.expansion.normalized,
            "matches_greedy": self.matches_greedy,
            "missing": [list(m) for m in self.missing],
            "extra": [list(m) for m in self.extra],
            "anomalies": self.expansion.anomalies,
        }


def construct_gin_closed_form(degrees, normalize: bool = True, typos=None) -> GinResult:
    return compare_closed_form(degrees, normalize, typos).result


def compare_closed_form(degrees, normalize: bool = True, typos=None) -> ClosedFormReport:
    """Expand the template for ``degrees`` and diff its minimal generators with greedy."""
    exp = expand_template(degrees, normalize, typos)
    t = exp.degrees
    ideal = minimalize(exp.listed, t.terminal_degree)
    by_degree: dict[int, list] = {}
    for g in ideal.generators:
        by_degree.setdefault(g.degree, []).append(g)
    result = GinResult(t, ideal, {k: tuple(v) for k, v in by_degree.items()}, "closed-form")
    greedy = set(construct_gin_greedy(t).generators)
    mine = set(ideal.generators)
    return ClosedFormReport(result, exp, sorted(greedy - mine, reverse=True), sorted(mine - greedy, reverse=True))
