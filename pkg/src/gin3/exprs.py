"""Exact evaluation of small arithmetic formulas such as ``(3*d-3)/2``."""

from __future__ import annotations

import ast
from fractions import Fraction
from functools import lru_cache
from math import comb


class FormulaError(ValueError):
    pass


_BINOPS = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
    ast.Div: lambda a, b: Fraction(a) / Fraction(b),
    ast.Pow: lambda a, b: a ** int(b),
}


def _floor(x):
    return Fraction(x).numerator // Fraction(x).denominator


def _ceil(x):
    return -_floor(-Fraction(x))


def _binom(n, k):
    n, k = Fraction(n), Fraction(k)
    if n.denominator != 1 or k.denominator != 1:
        raise FormulaError("binomial of a non-integer")
    if k < 0 or n < k:
        return Fraction(0)
    return Fraction(comb(int(n), int(k)))


_FUNCS = {"floor": _floor, "ceil": _ceil, "binom": _binom}


@lru_cache(maxsize=None)
def _parse(text: str) -> ast.Expression:
    try:
        return ast.parse(text, mode="eval")
    except SyntaxError as exc:
        raise FormulaError(f"cannot parse {text!r}") from exc


def evaluate(text: str, env: dict) -> Fraction:
    """Evaluate ``text`` with rational arithmetic.

    Names come from ``env``; ``floor``, ``ceil``, ``binom`` and ``sum(expr, var,
    lo, hi)`` (inclusive, with ``expr`` a string) are available.  Unknown names
    raise FormulaError.
    """
    return Fraction(_eval(_parse(text).body, env))


def _eval(node, env):
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return Fraction(node.value)
    if isinstance(node, ast.Name):
        if node.id not in env:
            raise FormulaError(f"unbound name {node.id!r}")
        return Fraction(env[node.id])
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand, env)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        return _BINOPS[type(node.op)](_eval(node.left, env), _eval(node.right, env))
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name):
        name = node.func.id
        if name == "sum":
            body, var, lo, hi = node.args
            if not (isinstance(body, ast.Constant) and isinstance(var, ast.Constant)):
                raise FormulaError("sum needs a quoted body and variable name")
            lo_v, hi_v = _floor(_eval(lo, env)), _floor(_eval(hi, env))
            total = Fraction(0)
            for i in range(lo_v, hi_v + 1):
                total += evaluate(body.value, {**env, var.value: i})
            return total
        if name in _FUNCS:
            return _FUNCS[name](*(_eval(a, env) for a in node.args))
        if name in env and callable(env[name]):
            return Fraction(env[name](*(_eval(a, env) for a in node.args)))
    raise FormulaError(f"unsupported syntax: {ast.dump(node)}")
