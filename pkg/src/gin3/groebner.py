"""Prime-field polynomials in x1, x2, x3 and a degree-truncated Buchberger algorithm.

Everything here is a surrogate for characteristic zero: with a large prime the
initial ideal of a random complete intersection in random coordinates agrees
with the characteristic-zero Gin except on a small exceptional set of draws.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from .monomials import (
    Monomial,
    MonomialIdeal,
    _monomials_of_degree,
    degree_slice,
    format_monomial,
    minimalize,
)

DEFAULT_PRIME = 32003


class NonArtinianError(RuntimeError):
    """The truncated initial ideal misses monomials of the cap degree."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldElement:
    value: int
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.p != self.p:
                raise ValueError("mixing different prime fields")
            return other.value
        return int(other)

    def __add__(self, other):
        return FieldElement(self.value + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.value - self._coerce(other), self.p)

    def __rsub__(self, other):
        return FieldElement(self._coerce(other) - self.value, self.p)

    def __neg__(self):
        return FieldElement(-self.value, self.p)

    def __mul__(self, other):
        return FieldElement(self.value * self._coerce(other), self.p)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise ZeroDivisionError("zero has no inverse")
        return FieldElement(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        return self * FieldElement(self._coerce(other), self.p).inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return FieldElement(pow(self.value, e, self.p), self.p)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value


class SparsePolynomial:
    """A polynomial over Z/p as a map from Monomial to nonzero residue."""

    __slots__ = ("terms", "p")

    def __init__(self, terms: Mapping | Iterable = (), p: int = DEFAULT_PRIME):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, int] = {}
        for m, c in items:
            m = Monomial(*m)
            v = (clean.get(m, 0) + int(c)) % p
            if v:
                clean[m] = v
            else:
                clean.pop(m, None)
        self.terms = clean
        self.p = p

    @classmethod
    def monomial(cls, m, coeff: int = 1, p: int = DEFAULT_PRIME) -> "SparsePolynomial":
        return cls({Monomial(*m): coeff}, p)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(m.degree for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({m.degree for m in self.terms}) <= 1

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms)

    def leading_coefficient(self) -> int:
        return self.terms[self.leading_monomial()]

    def monic(self) -> "SparsePolynomial":
        inv = pow(self.leading_coefficient(), -1, self.p)
        return SparsePolynomial({m: c * inv for m, c in self.terms.items()}, self.p)

    def _check(self, other: "SparsePolynomial"):
        if other.p != self.p:
            raise ValueError("mixing different prime fields")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return SparsePolynomial(out, self.p)

    def __neg__(self):
        return SparsePolynomial({m: -c for m, c in self.terms.items()}, self.p)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int) -> "SparsePolynomial":
        return SparsePolynomial({m: c * v for m, v in self.terms.items()}, self.p)

    def shift(self, s) -> "SparsePolynomial":
        return SparsePolynomial({m * s: v for m, v in self.terms.items()}, self.p)

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(int(other))
        self._check(other)
        out: dict[Monomial, int] = {}
        p = self.p
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                out[m] = (out.get(m, 0) + c1 * c2) % p
        return SparsePolynomial(out, p)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.p == other.p and self.terms == other.terms

    def __hash__(self):
        return hash((self.p, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def to_json(self) -> list:
        return [[c, list(m)] for m, c in self.sorted_terms()]

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{format_monomial(m)}" for m, c in self.sorted_terms())


# -- random data --------------------------------------------------------------

def make_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(np.random.SeedSequence(seed))


def random_homogeneous(degree: int, seed, p: int = DEFAULT_PRIME) -> SparsePolynomial:
    """Every monomial of ``degree`` gets an independent uniform coefficient mod p."""
    if degree < 1:
        raise ValueError("degree must be at least 1")
    rng = make_rng(seed)
    mons = _monomials_of_degree(degree)
    while True:
        coeffs = rng.integers(0, p, size=len(mons))
        f = SparsePolynomial(zip(mons, coeffs.tolist()), p)
        if not f.is_zero():
            return f


def _det3(a, p: int) -> int:
    return (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    ) % p


@dataclass(frozen=True)
class LinearChange:
    """x_i -> sum_j matrix[i][j] x_j over Z/p."""

    matrix: tuple[tuple[int, int, int], ...]
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        m = tuple(tuple(int(v) % self.p for v in row) for row in self.matrix)
        if len(m) != 3 or any(len(r) != 3 for r in m):
            raise ValueError("linear change must be 3x3")
        object.__setattr__(self, "matrix", m)
        if self.determinant == 0:
            raise ValueError("linear change is singular mod p")

    @property
    def determinant(self) -> int:
        return _det3(self.matrix, self.p)

    @classmethod
    def identity(cls, p: int = DEFAULT_PRIME) -> "LinearChange":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)), p)

    @classmethod
    def random(cls, seed, p: int = DEFAULT_PRIME) -> "LinearChange":
        rng = make_rng(seed)
        while True:
            a = rng.integers(0, p, size=(3, 3)).tolist()
            if _det3(a, p):
                return cls(tuple(tuple(r) for r in a), p)

    def inverse(self) -> "LinearChange":
        a, p = self.matrix, self.p
        inv_det = pow(self.determinant, -1, p)
        cof = [[0] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(3):
                r = [x for x in range(3) if x != i]
                c = [y for y in range(3) if y != j]
                minor = a[r[0]][c[0]] * a[r[1]][c[1]] - a[r[0]][c[1]] * a[r[1]][c[0]]
                cof[i][j] = (-1) ** (i + j) * minor
        # inverse = adjugate / det, adjugate = cofactor transpose
        return LinearChange(tuple(tuple(cof[j][i] * inv_det for j in range(3)) for i in range(3)), p)

    def to_json(self) -> list:
        return [list(r) for r in self.matrix]


def apply_change(g: LinearChange, f: SparsePolynomial) -> SparsePolynomial:
    if g.p != f.p:
        raise ValueError("mixing different prime fields")
    p = f.p
    images = [
        SparsePolynomial({(1, 0, 0): row[0], (0, 1, 0): row[1], (0, 0, 1): row[2]}, p) for row in g.matrix
    ]
    powers: dict[tuple[int, int], SparsePolynomial] = {}

    def power(i: int, e: int) -> SparsePolynomial:
        if (i, e) not in powers:
            powers[(i, e)] = SparsePolynomial.monomial((0, 0, 0), 1, p) if e == 0 else power(i, e - 1) * images[i]
        return powers[(i, e)]

    out = SparsePolynomial((), p)
    for m, c in f.terms.items():
        out = out + (power(0, m[0]) * power(1, m[1]) * power(2, m[2])).scale(c)
    return out


# -- reference (dict based) S-polynomials and normal forms ---------------------

def s_polynomial(f: SparsePolynomial, g: SparsePolynomial) -> SparsePolynomial:
    lf, lg = f.leading_monomial(), g.leading_monomial()
    lcm = lf.lcm(lg)
    a = f.shift(lcm / lf).scale(pow(f.leading_coefficient(), -1, f.p))
    b = g.shift(lcm / lg).scale(pow(g.leading_coefficient(), -1, g.p))
    return a - b


def normal_form(f: SparsePolynomial, basis: Sequence[SparsePolynomial]) -> SparsePolynomial:
    """Full remainder of f on division by ``basis`` (first divisor wins)."""
    p = f.p
    rest = dict(f.terms)
    remainder: dict[Monomial, int] = {}
    leads = [(g.leading_monomial(), g) for g in basis]
    while rest:
        lm = max(rest)
        c = rest[lm]
        for gl, g in leads:
            if gl.divides(lm):
                q = c * pow(g.terms[gl], -1, p) % p
                s = lm / gl
                for m, v in g.terms.items():
                    mm = m * s
                    nv = (rest.get(mm, 0) - q * v) % p
                    if nv:
                        rest[mm] = nv
                    else:
                        rest.pop(mm, None)
                break
        else:
            remainder[lm] = c
            del rest[lm]
    return SparsePolynomial(remainder, p)


# -- dense homogeneous Buchberger ---------------------------------------------

@lru_cache(maxsize=None)
def _index(k: int) -> dict:
    return {m: i for i, m in enumerate(_monomials_of_degree(k))}


@lru_cache(maxsize=None)
def _shift_map(k: int, s: Monomial) -> np.ndarray:
    """Positions in degree k+deg(s) of s*m for the degree-k monomials m, in order."""
    target = _index(k + s.degree)
    return np.fromiter((target[m * s] for m in _monomials_of_degree(k)), dtype=np.int64)


class _Element:
    __slots__ = ("degree", "vec", "lead")

    def __init__(self, degree: int, vec: np.ndarray, lead: Monomial):
        self.degree = degree
        self.vec = vec
        self.lead = lead


class _Basis:
    """Monic basis elements plus, per degree up to the cap, a table naming for
    each monomial the first basis element whose leading monomial divides it."""

    def __init__(self, cap: int, p: int):
        self.cap = cap
        self.p = p
        self.elements: list[_Element] = []
        self.reducer = {k: np.full(comb(k + 2, 2), -1, dtype=np.int64) for k in range(cap + 1)}
        self.routes: dict[tuple[int, int], tuple[np.ndarray, np.ndarray]] = {}

    def add(self, el: _Element) -> int:
        idx = len(self.elements)
        self.elements.append(el)
        a, b, c = el.lead
        for k in range(el.lead.degree, self.cap + 1):
            ea, eb, ec = _exponent_arrays(k)
            table = self.reducer[k]
            table[(table < 0) & (ea >= a) & (eb >= b) & (ec >= c)] = idx
        return idx

    def _route(self, k: int, i: int):
        key = (k, i)
        hit = self.routes.get(key)
        if hit is None:
            el = self.elements[int(self.reducer[k][i])]
            hit = (el.vec, _shift_map(el.degree, _monomials_of_degree(k)[i] / el.lead))
            self.routes[key] = hit
        return hit

    def reduce(self, k: int, vec: np.ndarray) -> np.ndarray:
        """Full reduction of a degree-k vector.

        Subtracting a multiple of a monic element at position i only touches
        positions i and later (smaller monomials), so one left-to-right pass
        over the reducible positions suffices.
        """
        p = self.p
        vec = vec % p
        for i in np.flatnonzero(self.reducer[k] >= 0).tolist():
            c = int(vec[i])
            if c:
                evec, where = self._route(k, i)
                vec[where] = (vec[where] - c * evec) % p
        return vec


@lru_cache(maxsize=None)
def _exponent_arrays(k: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    arr = np.array(_monomials_of_degree(k), dtype=np.int64).reshape(-1, 3)
    return arr[:, 0], arr[:, 1], arr[:, 2]


def _to_dense(f: SparsePolynomial) -> tuple[int, np.ndarray]:
    k = f.degree
    vec = np.zeros(comb(k + 2, 2), dtype=np.int64)
    idx = _index(k)
    for m, c in f.terms.items():
        vec[idx[m]] = c
    return k, vec


def _to_sparse(k: int, vec: np.ndarray, p: int) -> SparsePolynomial:
    mons = _monomials_of_degree(k)
    return SparsePolynomial(((mons[i], int(vec[i])) for i in np.flatnonzero(vec)), p)


def _monic_element(k: int, vec: np.ndarray, p: int) -> _Element:
    i = int(np.flatnonzero(vec)[0])
    inv = pow(int(vec[i]), -1, p)
    return _Element(k, vec * inv % p, _monomials_of_degree(k)[i])


def buchberger_basis(polys: Sequence[SparsePolynomial], degree_cap: Optional[int] = None) -> list[SparsePolynomial]:
    """Reduced-as-we-go Groebner basis of homogeneous ``polys`` truncated at ``degree_cap``.

    Pairs are taken in increasing degree of the lcm of their leading monomials
    and pairs with coprime leading monomials are skipped.  Pairs whose lcm has
    degree above the cap are dropped: for homogeneous input an S-polynomial of
    degree D and its reduction stay in degree D and only use basis elements of
    degree <= D, so nothing computed above the cap can feed back into lower
    degrees.  Every element of the ideal of degree <= cap therefore has its
    leading monomial divisible by the leading monomial of a basis element.
    """
    polys = [f for f in polys if not f.is_zero()]
    if not polys:
        return []
    p = polys[0].p
    if any(f.p != p for f in polys):
        raise ValueError("mixing different prime fields")
    if p >= 2**31:
        raise ValueError("modulus too large for int64 elimination")
    if any(not f.is_homogeneous() for f in polys):
        raise ValueError("input polynomials must be homogeneous")
    if degree_cap is None:
        degree_cap = sum(f.degree for f in polys) - 2
    if degree_cap < max(f.degree for f in polys):
        raise ValueError("degree cap below the largest input degree")

    basis = _Basis(degree_cap, p)
    pending: dict[int, list] = {}
    for f in polys:
        pending.setdefault(f.degree, []).append(("input", f))

    def push_pairs(new: int):
        lead = basis.elements[new].lead
        for old in range(new):
            other = basis.elements[old].lead
            if min(lead.a, other.a) == 0 and min(lead.b, other.b) == 0 and min(lead.c, other.c) == 0:
                continue
            lcm = lead.lcm(other)
            if lcm.degree <= degree_cap:
                pending.setdefault(lcm.degree, []).append(("pair", (old, new, lcm)))

    for k in range(degree_cap + 1):
        for kind, item in pending.pop(k, []):
            if kind == "input":
                _, vec = _to_dense(item)
            else:
                i, j, lcm = item
                vec = np.zeros(comb(k + 2, 2), dtype=np.int64)
                for idx, sign in ((i, 1), (j, -1)):
                    el = basis.elements[idx]
                    vec[_shift_map(el.degree, lcm / el.lead)] += sign * el.vec
            vec = basis.reduce(k, vec)
            if vec.any():
                push_pairs(basis.add(_monic_element(k, vec, p)))
    return [_to_sparse(el.degree, el.vec, p) for el in basis.elements]


def leading_ideal(basis: Sequence[SparsePolynomial], degree_cap: int) -> MonomialIdeal:
    return minimalize((g.leading_monomial() for g in basis), degree_cap)


def buchberger_initial_ideal(polys: Sequence[SparsePolynomial], degree_cap: Optional[int] = None) -> MonomialIdeal:
    """Revlex initial ideal of homogeneous ``polys`` through degree ``degree_cap``.

    Raises NonArtinianError when the initial ideal does not contain every
    monomial of the cap degree (the input was not a regular sequence, or the
    cap is too low).
    """
    if degree_cap is None:
        degree_cap = sum(f.degree for f in polys) - 2
    J = leading_ideal(buchberger_basis(polys, degree_cap), degree_cap)
    if len(degree_slice(J, degree_cap)) != comb(degree_cap + 2, 2):
        raise NonArtinianError(f"initial ideal misses monomials of degree {degree_cap}")
    return J
