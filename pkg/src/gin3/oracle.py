"""Compare the predicted Gin with the initial ideal of a random complete intersection."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .gin import construct_gin_greedy
from .groebner import (
    DEFAULT_PRIME,
    LinearChange,
    NonArtinianError,
    SparsePolynomial,
    apply_change,
    buchberger_initial_ideal,
    is_prime,
    random_homogeneous,
)
from .hilbert import DegreeTriple, ci_hilbert_series
from .monomials import MonomialIdeal, quotient_hilbert

DEFAULT_RETRIES = 5
SMALL_MODULUS = 1000


class SmallModulusWarning(UserWarning):
    pass


class OracleExhausted(RuntimeError):
    def __init__(self, message: str, failures: list):
        super().__init__(message)
        self.failures = failures


@dataclass
class OracleVerdict:
    degrees: DegreeTriple
    p: int
    seed: int
    hilbert_gate: str
    match: bool
    computed: MonomialIdeal
    predicted: MonomialIdeal
    retries: int
    coordinate_change: bool = True
    monomial_input: bool = False
    failures: list = field(default_factory=list)
    change: list | None = None

    def to_json(self) -> dict:
        return {
            "degrees": list(self.degrees),
            "p": self.p,
            "seed": self.seed,
            "hilbert_gate": self.hilbert_gate,
            "match": self.match,
            "computed_generators": [list(g) for g in self.computed.generators],
            "predicted_generators": [list(g) for g in self.predicted.generators],
            "retries": self.retries,
            "coordinate_change": self.coordinate_change,
            "monomial_input": self.monomial_input,
            "failed_attempts": self.failures,
            "linear_change": self.change,
        }


def check_modulus(p: int) -> None:
    if not is_prime(p) or p == 2:
        raise ValueError(f"modulus {p} is not an odd prime")
    if p < SMALL_MODULUS:
        warnings.warn(
            f"modulus {p} is small; random draws will often be non-generic", SmallModulusWarning, stacklevel=3
        )


def draw_system(degrees, seed: int, attempt: int, p: int, coordinate_change: bool = True, monomial: bool = False):
    """The polynomials and linear change for one attempt; fully determined by (seed, attempt)."""
    t = DegreeTriple.of(degrees)
    streams = [np.random.default_rng(s) for s in np.random.SeedSequence([seed, attempt]).spawn(4)]
    if monomial:
        polys = [SparsePolynomial.monomial(tuple(d if i == j else 0 for j in range(3)), 1, p) for i, d in enumerate(t)]
    else:
        polys = [random_homogeneous(d, rng, p) for d, rng in zip(t, streams)]
    change = LinearChange.random(streams[3], p) if coordinate_change else None
    if change is not None:
        polys = [apply_change(change, f) for f in polys]
    return polys, change


def oracle_compare(
    degrees,
    seed: int,
    p: int = DEFAULT_PRIME,
    coordinate_change: bool = True,
    monomial: bool = False,
    retries: int = DEFAULT_RETRIES,
) -> OracleVerdict:
    """Initial ideal of a random (optionally rotated) complete intersection vs the greedy Gin.

    A draw passes the Hilbert gate when its initial ideal has the Hilbert
    function of a complete intersection of these degrees in every degree up to
    d1+d2+d3-2.  Failing draws are redrawn up to ``retries`` times; after that
    OracleExhausted is raised listing every failing attempt.
    """
    t = DegreeTriple.of(degrees)
    check_modulus(p)
    cap = t.terminal_degree
    expected = ci_hilbert_series(t).padded(cap)
    predicted = construct_gin_greedy(t).ideal
    failures = []
    for attempt in range(retries + 1):
        polys, change = draw_system(t, seed, attempt, p, coordinate_change, monomial)
        try:
            J = buchberger_initial_ideal(polys, cap)
        except NonArtinianError as exc:
            failures.append({"attempt": attempt, "reason": str(exc)})
            continue
        got = quotient_hilbert(J, cap)
        if got != expected:
            failures.append({"attempt": attempt, "reason": f"Hilbert function {got} != {expected}"})
            continue
        return OracleVerdict(
            degrees=t,
            p=p,
            seed=seed,
            hilbert_gate="pass",
            match=J.generators == predicted.generators,
            computed=J,
            predicted=predicted,
            retries=attempt,
            coordinate_change=coordinate_change,
            monomial_input=monomial,
            failures=failures,
            change=change.to_json() if change is not None else None,
        )
    raise OracleExhausted(f"{t}, seed {seed}: no draw passed the Hilbert gate in {retries + 1} attempts", failures)
