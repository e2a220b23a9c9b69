"""Command line interface: ``gin3 predict|verify|oracle|sweep|hilbert``."""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Optional

from .checks import CHECK_NAMES, dumps, emit_fixtures, verify_degrees, verify_ideal
from .gin import ConstructionError, construct_gin_greedy, generator_count
from .groebner import DEFAULT_PRIME, is_prime
from .hilbert import DegreeTriple, InvalidDegrees, ci_hilbert_series
from .monomials import MonomialIdeal, format_monomial, minimalize
from .oracle import DEFAULT_RETRIES, OracleExhausted, oracle_compare
from .piecewise import piecewise_count, piecewise_hilbert, sorted_triples
from .templates import FIXTURE_ENV, compare_closed_form

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_EXHAUSTED = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    degrees: Optional[DegreeTriple] = None
    prime: int = DEFAULT_PRIME
    seeds: list = field(default_factory=lambda: [1])
    fmt: str = "text"
    max_degree: int = 10
    fixtures: Optional[str] = None


def parse_degrees(text: str, err=None) -> DegreeTriple:
    try:
        raw = [int(x) for x in text.replace(" ", "").split(",")]
    except ValueError:
        raise UsageError(f"cannot parse degrees {text!r}; expected a,b,c") from None
    try:
        t = DegreeTriple.of(raw)
    except InvalidDegrees as exc:
        raise UsageError(str(exc)) from None
    if list(t) != raw:
        print(f"note: degrees sorted to {t}", file=err or sys.stderr)
    return t


def parse_seeds(text: str) -> list[int]:
    seeds: list[int] = []
    try:
        for part in text.replace(" ", "").split(","):
            if ".." in part:
                lo, hi = (int(x) for x in part.split(".."))
                if hi < lo:
                    raise UsageError(f"empty seed range {part!r}")
                seeds.extend(range(lo, hi + 1))
            elif part:
                seeds.append(int(part))
    except ValueError:
        raise UsageError(f"cannot parse seeds {text!r}; use a list like 1,2,7 or a range like 1..5") from None
    if not seeds:
        raise UsageError("at least one seed is required")
    return seeds


def render(m) -> str:
    return format_monomial(m, sep="")


def emit(obj, fmt: str, text: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(obj, indent=2) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


# -- commands -----------------------------------------------------------------

def cmd_predict(cfg: RunConfig, args) -> int:
    res = construct_gin_greedy(cfg.degrees)
    data = res.to_json()
    lines = [f"degrees {res.degrees}  case {res.case}  mu {res.mu}"]
    for k, ms in sorted(res.new_by_degree.items()):
        lines.append(f"  degree {k}: " + ", ".join(render(m) for m in ms))
    status = EXIT_OK
    if args.compare_closed_form:
        raw = compare_closed_form(res.degrees, normalize=False)
        norm = compare_closed_form(res.degrees, normalize=True)
        data["closed_form"] = {"as_written": raw.to_json(), "normalized": norm.to_json()}
        for label, rep in (("as written", raw), ("normalized", norm)):
            if rep.matches_greedy:
                lines.append(f"closed form ({label}): identical to greedy")
            else:
                lines.append(
                    f"closed form ({label}): missing {', '.join(render(m) for m in rep.missing) or '-'};"
                    f" extra {', '.join(render(m) for m in rep.extra) or '-'}"
                )
            for a in rep.expansion.anomalies:
                lines.append(f"  anomaly in family {a['family']}: {a['issue']}")
    emit(data, cfg.fmt, "\n".join(lines))
    return status


def _load_ideal(path: str) -> tuple[MonomialIdeal, Optional[DegreeTriple]]:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read ideal file {path}: {exc}") from None
    if isinstance(data, list):
        data = {"generators": data}
    try:
        gens = [tuple(int(e) for e in g) for g in data["generators"]]
        if any(len(g) != 3 or min(g) < 0 for g in gens):
            raise ValueError("each generator must be three non-negative exponents")
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad ideal file {path}: {exc}") from None
    degrees = None
    if data.get("degrees"):
        try:
            degrees = DegreeTriple.of(data["degrees"])
        except InvalidDegrees as exc:
            raise UsageError(str(exc)) from None
    return minimalize(gens), degrees


def cmd_verify(cfg: RunConfig, args) -> int:
    if args.ideal_file:
        J, file_degrees = _load_ideal(args.ideal_file)
        rep = verify_ideal(J, cfg.degrees or file_degrees)
    elif cfg.degrees is not None:
        rep = verify_degrees(cfg.degrees)
    else:
        raise UsageError("verify needs --degrees or --ideal-file")
    head = f"degrees {rep.degrees}" if rep.degrees else "no degrees"
    lines = [f"{head}  mu {rep.ideal.mu}"]
    width = max(len(n) for n in CHECK_NAMES)
    for c in rep.checks:
        lines.append(f"  {c.name:<{width}}  {c.status}" + (f"  ({c.detail})" if c.detail else ""))
    passed = sum(c.status == "pass" for c in rep.checks)
    lines.append(f"{passed}/{len(rep.checks)} pass")
    emit(rep.to_json(), cfg.fmt, "\n".join(lines))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_oracle(cfg: RunConfig, args) -> int:
    rows = []
    lines = []
    exhausted = []
    all_match = True
    for seed in cfg.seeds:
        try:
            v = oracle_compare(
                cfg.degrees,
                seed,
                cfg.prime,
                coordinate_change=not args.no_coordinate_change,
                monomial=args.monomial,
                retries=args.retries,
            )
        except OracleExhausted as exc:
            exhausted.append({"seed": seed, "error": str(exc), "failed_attempts": exc.failures})
            lines.append(f"seed {seed}: exhausted ({exc})")
            continue
        rows.append(v.to_json())
        all_match &= v.match
        lines.append(
            f"seed {seed}: gate {v.hilbert_gate}, retries {v.retries}, computed mu {v.computed.mu},"
            f" predicted mu {v.predicted.mu}, {'match' if v.match else 'MISMATCH'}"
        )
        if not v.match:
            lines.append("  computed: " + ", ".join(render(g) for g in v.computed.generators))
    data = {"degrees": list(cfg.degrees), "p": cfg.prime, "verdicts": rows, "exhausted": exhausted}
    emit(data, cfg.fmt, "\n".join(lines))
    if exhausted:
        return EXIT_EXHAUSTED
    return EXIT_OK if all_match else EXIT_FAIL


def cmd_sweep(cfg: RunConfig, args) -> int:
    if cfg.max_degree < 2:
        raise UsageError("--max must be at least 2")
    triples = list(sorted_triples(cfg.max_degree))
    if args.counts_only:
        rows = []
        lines = [f"{'degrees':<12}{'case':<10}{'greedy':>7}{'formula':>9}{'as written':>12}"]
        for t in triples:
            res = construct_gin_greedy(t)
            written = generator_count(t, printed=True)
            row = {
                "degrees": list(t),
                "case": str(res.case),
                "greedy_mu": res.mu,
                "formula": generator_count(t),
                "formula_as_written": str(written),
            }
            rows.append(row)
            lines.append(f"{str(t):<12}{row['case']:<10}{res.mu:>7}{row['formula']:>9}{str(written):>12}")
        mismatches = sum(r["greedy_mu"] != r["formula"] for r in rows)
        lines.append(f"{len(rows)} triples, {mismatches} mismatches with the corrected formula")
        emit({"max_degree": cfg.max_degree, "triples": len(rows), "rows": rows}, cfg.fmt, "\n".join(lines))
        return EXIT_OK if mismatches == 0 else EXIT_FAIL

    rows = []
    failures = []
    for t in triples:
        rep = verify_degrees(t)
        row = {"degrees": list(t), "mu": rep.ideal.mu, "checks": {c.name: c.status for c in rep.checks}}
        if args.oracle_sum and t.total <= args.oracle_sum:
            row["oracle"] = []
            for seed in cfg.seeds:
                try:
                    v = oracle_compare(t, seed, cfg.prime)
                    row["oracle"].append({"seed": seed, "match": v.match, "retries": v.retries})
                    if not v.match:
                        failures.append({"degrees": list(t), "oracle_seed": seed})
                except OracleExhausted as exc:
                    row["oracle"].append({"seed": seed, "exhausted": str(exc)})
                    failures.append({"degrees": list(t), "oracle_seed": seed, "exhausted": True})
        if not rep.ok:
            failures.append({"degrees": list(t), "failed": [c.to_json() for c in rep.checks if c.status == "fail"]})
        rows.append(row)
    corpus = {"max_degree": cfg.max_degree, "triples": len(rows), "failures": failures, "rows": rows}
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(dumps(corpus))
    written = {}
    if args.emit_fixtures:
        written = emit_fixtures(cfg.max_degree, args.emit_fixtures)
    lines = [f"{len(rows)} triples with d_i <= {cfg.max_degree}; {len(rows) - len({tuple(f['degrees']) for f in failures})} pass all checks"]
    for f in failures:
        lines.append(f"  FAIL {tuple(f['degrees'])}: {f}")
    for name, path in written.items():
        lines.append(f"wrote {path}")
    emit({k: v for k, v in corpus.items()} | {"fixtures": written}, cfg.fmt, "\n".join(lines))
    return EXIT_OK if not failures else EXIT_FAIL


def cmd_hilbert(cfg: RunConfig, args) -> int:
    table = ci_hilbert_series(cfg.degrees)
    data = table.to_json()
    lines = [f"degrees {cfg.degrees}  socle degree {table.socle_degree}  dimension {sum(table)}"]
    lines.append("H   = " + " ".join(str(v) for v in table))
    lines.append("|J| = " + " ".join(str(v) for v in data["J_counts"]))
    if args.piecewise:
        rows = []
        for kind, top, fn in (
            ("H", cfg.degrees.socle_degree, piecewise_hilbert),
            ("J", cfg.degrees.terminal_degree, piecewise_count),
        ):
            for k in range(top + 1):
                pv = fn(cfg.degrees, k)
                rows.append(
                    {
                        "kind": kind,
                        "k": k,
                        "expected": pv.expected,
                        "value": None if pv.value is None else str(pv.value),
                        "branch": pv.branch,
                        "discrepancy": pv.discrepancy,
                        "issues": pv.issues,
                    }
                )
                if pv.discrepancy:
                    lines.append(
                        f"  {kind}({k}) = {pv.expected}; formula {pv.branch or 'none'} gives {pv.value}; issues {pv.issues}"
                    )
        data["piecewise"] = rows
        flagged = sum(r["discrepancy"] for r in rows)
        lines.append(f"piecewise formulas: {flagged} flagged degrees of {len(rows)}")
    emit(data, cfg.fmt, "\n".join(lines))
    return EXIT_OK


COMMANDS = {
    "predict": cmd_predict,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "sweep": cmd_sweep,
    "hilbert": cmd_hilbert,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--fixtures", help="typo-normalization table (overrides $GIN3_FIXTURES)")

    parser = argparse.ArgumentParser(prog="gin3", description="Generic initial ideals of complete intersections in three variables.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("predict", parents=[common], help="greedy Gin for a degree triple")
    p.add_argument("--degrees", required=True)
    p.add_argument("--compare-closed-form", action="store_true")

    p = sub.add_parser("verify", parents=[common], help="run the structural checks")
    p.add_argument("--degrees")
    p.add_argument("--ideal-file")

    p = sub.add_parser("oracle", parents=[common], help="compare with a Groebner basis computation")
    p.add_argument("--degrees", required=True)
    p.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    p.add_argument("--seeds", default="1")
    p.add_argument("--retries", type=int, default=DEFAULT_RETRIES)
    p.add_argument("--no-coordinate-change", action="store_true")
    p.add_argument("--monomial", action="store_true", help="use x1^d1, x2^d2, x3^d3 instead of random forms")

    p = sub.add_parser("sweep", parents=[common], help="check every sorted triple up to a bound")
    p.add_argument("--max", type=int, default=10, dest="max_degree")
    p.add_argument("--counts-only", action="store_true")
    p.add_argument("--oracle-sum", type=int, default=0, help="also run the oracle on triples with d1+d2+d3 <= this")
    p.add_argument("--seeds", default="1")
    p.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    p.add_argument("--output", help="write the corpus JSON here")
    p.add_argument("--emit-fixtures", metavar="DIR", help="write the discrepancy catalogues into DIR")

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert function and |J_k| targets")
    p.add_argument("--degrees", required=True)
    p.add_argument("--piecewise", action="store_true", help="also evaluate the piecewise formulas")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(command=args.command, fmt=args.format, fixtures=args.fixtures)
        if getattr(args, "degrees", None):
            cfg.degrees = parse_degrees(args.degrees)
        if hasattr(args, "seeds"):
            cfg.seeds = parse_seeds(args.seeds)
        if hasattr(args, "prime"):
            if not is_prime(args.prime) or args.prime == 2:
                raise UsageError(f"--prime {args.prime} is not an odd prime")
            cfg.prime = args.prime
        if hasattr(args, "max_degree"):
            cfg.max_degree = args.max_degree
        with _fixture_override(cfg.fixtures), warnings.catch_warnings():
            warnings.simplefilter("always")
            warnings.showwarning = _warn_to_stderr
            return COMMANDS[args.command](cfg, args)
    except UsageError as exc:
        print(f"gin3: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConstructionError as exc:
        print(f"gin3: construction failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


@contextmanager
def _fixture_override(path: Optional[str]):
    """Point $GIN3_FIXTURES at ``path`` for one command, then put it back."""
    if not path:
        yield
        return
    before = os.environ.get(FIXTURE_ENV)
    os.environ[FIXTURE_ENV] = path
    try:
        yield
    finally:
        if before is None:
            del os.environ[FIXTURE_ENV]
        else:
            os.environ[FIXTURE_ENV] = before


def _warn_to_stderr(message, category, filename, lineno, file=None, line=None):
    print(f"gin3: warning: {message}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
