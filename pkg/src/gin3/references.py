"""Reference generator lists in the compact ``x3^9{x1,x2}^2`` notation."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources

from .hilbert import DegreeTriple
from .monomials import Monomial, binomial_pair, parse_monomial

_BLOCK = re.compile(r"^(?P<head>.*?)\{x1,x2\}(?:\^(?P<n>\d+))?$")


def expand_token(token: str) -> list[Monomial]:
    """``x3^9{x1,x2}^2`` -> [x1^2x3^9, x1x2x3^9, x2^2x3^9]; a bare monomial -> [it]."""
    s = token.replace(" ", "")
    m = _BLOCK.match(s)
    if m is None:
        if "{" in s or "}" in s:
            raise ValueError(f"malformed token {token!r}")
        return [parse_monomial(s)]
    head = parse_monomial(m.group("head")) if m.group("head") else Monomial(0, 0, 0)
    n = int(m.group("n") or 1)
    return [head * b for b in binomial_pair(n)]


@dataclass(frozen=True)
class ReferenceList:
    degrees: DegreeTriple
    mu: int
    tokens: tuple[str, ...]
    corrections: tuple[dict, ...]

    def corrected_tokens(self) -> list[str]:
        toks = list(self.tokens)
        for c in self.corrections:
            if toks[c["index"]] != c["as_written"]:
                raise ValueError(f"correction {c} does not match token {toks[c['index']]!r}")
            toks[c["index"]] = c["corrected"]
        return toks

    def monomials(self, corrected: bool = True) -> list[Monomial]:
        out: list[Monomial] = []
        for tok in self.corrected_tokens() if corrected else self.tokens:
            out.extend(expand_token(tok))
        return out

    def unparseable(self) -> list[str]:
        bad = []
        for tok in self.tokens:
            try:
                expand_token(tok)
            except ValueError:
                bad.append(tok)
        return bad


def load_reference_lists() -> list[ReferenceList]:
    data = json.loads(resources.files("gin3.data").joinpath("reference_gins.json").read_text(encoding="utf-8"))
    return [
        ReferenceList(DegreeTriple.of(r["degrees"]), r["mu"], tuple(r["tokens"]), tuple(r["corrections"]))
        for r in data["lists"]
    ]
