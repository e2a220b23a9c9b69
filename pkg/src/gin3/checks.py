"""The named structural checks run by ``verify`` and ``sweep``, and the sweep catalogues."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Optional

from .gin import construct_gin_greedy, generator_count, mu_bound
from .hilbert import DegreeTriple, ci_hilbert_series, classify_case
from .groebner import DEFAULT_PRIME
from .lefschetz import is_strong_lefschetz_x3
from .monomials import MonomialIdeal, almost_revlex_violation, format_monomial, is_strongly_stable, quotient_hilbert
from .oracle import oracle_compare
from .piecewise import discrepancy_catalogue, sorted_triples

CHECK_NAMES = (
    "almost_revlex",
    "strongly_stable",
    "hilbert_match",
    "strong_lefschetz",
    "generator_count",
    "mu_bound",
)


@dataclass
class Check:
    name: str
    status: str
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class VerifyReport:
    degrees: Optional[DegreeTriple]
    ideal: MonomialIdeal
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def to_json(self) -> dict:
        return {
            "degrees": list(self.degrees) if self.degrees else None,
            "mu": self.ideal.mu,
            "ok": self.ok,
            "checks": [c.to_json() for c in self.checks],
        }


def verify_ideal(J: MonomialIdeal, degrees=None) -> VerifyReport:
    """Run the six checks on J; those needing the degrees are skipped without them."""
    t = DegreeTriple.of(degrees) if degrees is not None else None
    rep = VerifyReport(t, J)
    add = rep.checks.append

    bad = almost_revlex_violation(J)
    if bad is None:
        add(Check("almost_revlex", "pass"))
    else:
        u, v = bad
        add(Check("almost_revlex", "fail", f"{format_monomial(v)} precedes generator {format_monomial(u)} but is not in J"))

    add(Check("strongly_stable", "pass" if is_strongly_stable(J) else "fail"))

    if t is None:
        add(Check("hilbert_match", "skip", "no degrees given"))
    else:
        want = ci_hilbert_series(t).padded(t.terminal_degree)
        got = quotient_hilbert(J, t.terminal_degree)
        if got == want:
            add(Check("hilbert_match", "pass"))
        else:
            add(Check("hilbert_match", "fail", f"H(S/J) = {got}, expected {want}"))

    holds, where = is_strong_lefschetz_x3(J)
    if holds:
        add(Check("strong_lefschetz", "pass"))
    elif where is None:
        add(Check("strong_lefschetz", "fail", "ideal is not artinian"))
    else:
        add(Check("strong_lefschetz", "fail", f"x3^{where[1]} from degree {where[0]} is neither injective nor surjective"))

    if t is None:
        add(Check("generator_count", "skip", "no degrees given"))
        add(Check("mu_bound", "skip", "no degrees given"))
    else:
        want_mu = generator_count(t)
        status = "pass" if J.mu == want_mu else "fail"
        add(Check("generator_count", status, f"mu = {J.mu}, formula gives {want_mu}"))
        bound = mu_bound(t)
        add(Check("mu_bound", "pass" if J.mu <= bound else "fail", f"mu = {J.mu} <= {bound}"))
    return rep


def verify_degrees(degrees) -> VerifyReport:
    t = DegreeTriple.of(degrees)
    return verify_ideal(construct_gin_greedy(t).ideal, t)


def count_catalogue(max_degree: int = 10, oracle_seed: Optional[int] = None, p: int = DEFAULT_PRIME) -> list[dict]:
    """Triples where the count formula with the parity switch as printed differs from greedy.

    With ``oracle_seed`` each row also records an oracle run confirming the
    greedy generators.
    """
    rows = []
    for t in sorted_triples(max_degree):
        mu = construct_gin_greedy(t).mu
        written = generator_count(t, printed=True)
        if written != mu:
            rows.append(
                {
                    "degrees": list(t),
                    "case": str(classify_case(t)),
                    "greedy_mu": mu,
                    "formula_as_written": str(written),
                    "formula_corrected": generator_count(t),
                }
            )
            if oracle_seed is not None:
                v = oracle_compare(t, oracle_seed, p)
                rows[-1]["oracle"] = {
                    "seed": oracle_seed,
                    "p": p,
                    "hilbert_gate": v.hilbert_gate,
                    "retries": v.retries,
                    "computed_mu": v.computed.mu,
                    "match": v.match,
                }
    return rows


def emit_fixtures(max_degree: int, directory, oracle_seed: int = 1) -> dict[str, str]:
    """Write the discrepancy catalogues as JSON files into ``directory``."""
    os.makedirs(directory, exist_ok=True)
    out = {}
    payloads = {
        "piecewise_discrepancies.json": discrepancy_catalogue(max_degree),
        "count_discrepancies.json": {"max_degree": max_degree, "rows": count_catalogue(max_degree, oracle_seed)},
    }
    for name, data in payloads.items():
        path = os.path.join(directory, name)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(dumps(data))
        out[name] = path
    return out


def dumps(data) -> str:
    return json.dumps(data, indent=1, sort_keys=True, ensure_ascii=False) + "\n"
