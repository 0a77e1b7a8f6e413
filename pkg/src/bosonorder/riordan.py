"""Exponential Riordan arrays, Sheffer pairs, triangles, and bivariate EGFs.

An exponential Riordan pair [d, h] (d(0) = 1, h(0) = 0, h'(0) = 1) encodes
the lower-triangular array

    s_{n,k} = (n!/k!) [z^n] d(z) h(z)^k

whose row polynomials s_n(t) have the bivariate exponential generating
function d(z) exp(t h(z)).  Pairs form a group:

    [d1, h1] * [d2, h2] = [(d2 o h1) d1,  h2 o h1]
    [d, h]^(-1)         = [1/(d o hbar), hbar],   hbar = revert(h)
    identity            = [1, z]

A sequence is Sheffer for the pair [g, f] (acting by the derivative D)
exactly when its coefficient array is the exponential Riordan array of the
group inverse of [g, f].  A :class:`RiordanPair` therefore carries a
``convention`` tag saying which of the two descriptions its series are;
converting between conventions is a group inversion.

Ladder operators: if s_n is Sheffer for [g, f] then

    f(D) s_n = n s_(n-1)
    [t - g'(D)/g(D)] (1/f'(D)) s_n = s_(n+1)

(the lowering operator is the delta series f, NOT g: g(D) has a unit
constant term and cannot annihilate constants).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .scalars import SPoly, as_spoly
from .series import Series

RIORDAN = "riordan"
SHEFFER = "sheffer"


@dataclass(frozen=True)
class RiordanPair:
    """A pair of series with a convention tag.

    convention == "riordan": (first, second) = (d, h), the coefficient-array
    description.  convention == "sheffer": (first, second) = (g, f), the
    operator description.  The same sequence's two descriptions are group
    inverses of each other.
    """

    first: Series
    second: Series
    convention: str = RIORDAN

    def __post_init__(self):
        if self.convention not in (RIORDAN, SHEFFER):
            raise ValueError(f"unknown convention {self.convention!r}")
        if self.first.order != self.second.order:
            raise ValueError("pair series must share a truncation order")
        if self.first[0] != 1:
            raise ValueError("first series must have constant term 1")
        if not self.second[0].is_zero():
            raise ValueError("second series must have zero constant term")
        if self.second.order >= 1 and self.second[1] != 1:
            raise ValueError("second series must have unit linear term")

    @property
    def order(self) -> int:
        return self.first.order

    def eval_s(self, value) -> "RiordanPair":
        return RiordanPair(self.first.eval_s(value), self.second.eval_s(value),
                           self.convention)


def identity_pair(order: int, convention: str = RIORDAN) -> RiordanPair:
    return RiordanPair(Series.one(order), Series.variable(order), convention)


def group_product(p1: RiordanPair, p2: RiordanPair) -> RiordanPair:
    """Group product of two pairs, both in Riordan convention."""
    if p1.convention != RIORDAN or p2.convention != RIORDAN:
        raise ValueError("group_product expects both pairs in Riordan convention")
    d = p2.first.compose(p1.second) * p1.first
    h = p2.second.compose(p1.second)
    return RiordanPair(d, h, RIORDAN)


def group_inverse(p: RiordanPair) -> RiordanPair:
    """Group inverse of a pair, keeping its convention tag."""
    if p.order == 0:
        return RiordanPair(Series.one(0), Series.zero(0), p.convention)
    hbar = p.second.revert()
    d = p.first.compose(hbar).reciprocal()
    return RiordanPair(d, hbar, p.convention)


def as_riordan(p: RiordanPair) -> RiordanPair:
    """The Riordan-convention description of the same sequence."""
    if p.convention == RIORDAN:
        return p
    q = group_inverse(p)
    return RiordanPair(q.first, q.second, RIORDAN)


def as_sheffer(p: RiordanPair) -> RiordanPair:
    """The Sheffer-convention description of the same sequence."""
    if p.convention == SHEFFER:
        return p
    q = group_inverse(p)
    return RiordanPair(q.first, q.second, SHEFFER)


@dataclass
class Triangle:
    """Lower-triangular table of SPoly entries; rows[n][k] for 0 <= k <= n."""

    N: int
    rows: list

    def __post_init__(self):
        if len(self.rows) != self.N + 1:
            raise ValueError("row count must be N+1")
        self.rows = [[as_spoly(c) for c in row] for row in self.rows]
        for n, row in enumerate(self.rows):
            if len(row) != n + 1:
                raise ValueError(f"row {n} must have {n + 1} entries")

    def entry(self, n: int, k: int) -> SPoly:
        """Entry (n, k), zero outside the triangle."""
        if k < 0 or k > n or n > self.N:
            return SPoly()
        return self.rows[n][k]

    def row_poly(self, n: int) -> list:
        """Row n as the coefficient list of a polynomial in t."""
        return list(self.rows[n])

    def eval_s(self, value) -> "Triangle":
        return Triangle(self.N, [[SPoly.const(c.eval(value)) for c in row]
                                 for row in self.rows])

    def __eq__(self, other):
        if not isinstance(other, Triangle):
            return NotImplemented
        return self.N == other.N and self.rows == other.rows

    def to_json(self) -> dict:
        return {"N": self.N, "rows": [[c.to_json() for c in row]
                                      for row in self.rows]}

    @staticmethod
    def from_json(data) -> "Triangle":
        return Triangle(data["N"], [[SPoly.from_json(c) for c in row]
                                    for row in data["rows"]])

    def to_csv(self) -> str:
        """One row per line; exact rational (or polynomial-in-s) cells."""
        return "\n".join(",".join(str(c) for c in row) for row in self.rows) + "\n"


def _tp_trim(coeffs) -> tuple:
    cs = list(coeffs)
    while cs and cs[-1].is_zero():
        cs.pop()
    return tuple(cs)


class BivariateEGF:
    """A bivariate EGF stored as plain z-coefficients, each a polynomial in t.

    ``zcoeffs[n]`` is the coefficient of z^n (NOT z^n/n!); the row polynomial
    of index n is therefore n! * zcoeffs[n].  Entries of the t-polynomials
    are SPoly, so one object covers the whole symbolic-s family.
    """

    __slots__ = ("zcoeffs", "order")

    def __init__(self, zcoeffs, order: int):
        rows = []
        for n in range(order + 1):
            src = zcoeffs[n] if n < len(zcoeffs) else ()
            rows.append(_tp_trim(as_spoly(c) for c in src))
        object.__setattr__(self, "zcoeffs", tuple(rows))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("BivariateEGF is immutable")

    def coeff(self, n: int, k: int) -> SPoly:
        """Coefficient of z^n t^k."""
        row = self.zcoeffs[n]
        return row[k] if k < len(row) else SPoly()

    def row_poly(self, n: int) -> list:
        """n! times the z^n coefficient: the row polynomial in t."""
        f = factorial(n)
        return [f * c for c in self.zcoeffs[n]]

    def to_triangle(self) -> Triangle:
        rows = []
        for n in range(self.order + 1):
            poly = self.row_poly(n)
            poly += [SPoly()] * (n + 1 - len(poly))
            if len(poly) > n + 1:
                raise ValueError(f"t-degree of row {n} exceeds n")
            rows.append(poly)
        return Triangle(self.order, rows)

    # -- exact operators used by PDE characterizations -------------------

    def dz(self) -> "BivariateEGF":
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 truncation")
        return BivariateEGF([[(n + 1) * c for c in self.zcoeffs[n + 1]]
                             for n in range(self.order)], self.order - 1)

    def dt(self) -> "BivariateEGF":
        return BivariateEGF([[k * row[k] for k in range(1, len(row))]
                             for row in self.zcoeffs], self.order)

    def mul_z(self) -> "BivariateEGF":
        rows = [()] + list(self.zcoeffs[:-1])
        return BivariateEGF(rows, self.order)

    def mul_t(self) -> "BivariateEGF":
        return BivariateEGF([(SPoly(),) + row if row else () for row in self.zcoeffs],
                            self.order)

    def scale(self, c) -> "BivariateEGF":
        c = as_spoly(c)
        return BivariateEGF([[c * e for e in row] for row in self.zcoeffs],
                            self.order)

    def __add__(self, other):
        n = min(self.order, other.order)
        rows = []
        for i in range(n + 1):
            a, b = self.zcoeffs[i], other.zcoeffs[i]
            width = max(len(a), len(b))
            rows.append([(a[k] if k < len(a) else SPoly())
                         + (b[k] if k < len(b) else SPoly())
                         for k in range(width)])
        return BivariateEGF(rows, n)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def truncate(self, order: int) -> "BivariateEGF":
        if order > self.order:
            raise ValueError("cannot extend a truncation")
        return BivariateEGF(self.zcoeffs[: order + 1], order)

    def is_zero(self) -> bool:
        return all(not row for row in self.zcoeffs)

    def eval_s(self, value) -> "BivariateEGF":
        return BivariateEGF([[SPoly.const(c.eval(value)) for c in row]
                             for row in self.zcoeffs], self.order)

    def __eq__(self, other):
        if not isinstance(other, BivariateEGF):
            return NotImplemented
        return self.order == other.order and self.zcoeffs == other.zcoeffs

    def __hash__(self):
        return hash((self.zcoeffs, self.order))

    def to_json(self) -> dict:
        return {"trunc_order": self.order,
                "coeffs": [[c.to_json() for c in row] for row in self.zcoeffs]}


def pair_to_egf(p: RiordanPair, N: int) -> BivariateEGF:
    """Expand d(z) exp(t h(z)) through z^N for a pair (any convention)."""
    p = as_riordan(p)
    if N > p.order:
        raise ValueError(f"truncation order {p.order} insufficient for N={N}")
    d = p.first.truncate(N)
    h = p.second.truncate(N)
    cols = []
    acc = d
    invfact = Fraction(1)
    for k in range(N + 1):
        cols.append([invfact * acc[n] for n in range(N + 1)])
        if k < N:
            acc = acc * h
            invfact /= k + 1
    rows = [[cols[k][n] for k in range(n + 1)] for n in range(N + 1)]
    return BivariateEGF(rows, N)


def array_coeffs(p: RiordanPair, N: int) -> Triangle:
    """The coefficient triangle s_{n,k} = (n!/k!) [z^n] d h^k through row N."""
    return pair_to_egf(p, N).to_triangle()


def apply_to_egf(p: RiordanPair, u: Series) -> Series:
    """Action on column EGFs: u(z) maps to d(z) u(h(z))."""
    q = as_riordan(p)
    return u.compose(q.second) * q.first


def ordinary_array_coeffs(d: Series, h: Series, N: int) -> Triangle:
    """Ordinary (non-exponential) Riordan triangle t_{n,k} = [z^n] d h^k.

    The one place this package needs the ordinary normalization is the
    cross-check of the Weyl-ordered power formula, whose interior triangle
    is an ordinary Riordan array.
    """
    if not h[0].is_zero():
        raise ValueError("h must have zero constant term")
    if N > min(d.order, h.order):
        raise ValueError("truncation order insufficient")
    acc = d.truncate(N)
    h = h.truncate(N)
    cols = []
    for k in range(N + 1):
        cols.append([acc[n] for n in range(N + 1)])
        if k < N:
            acc = acc * h
    return Triangle(N, [[cols[k][n] for k in range(n + 1)] for n in range(N + 1)])


# ---------------------------------------------------------------------------
# Ladder (monomiality) operators.
# ---------------------------------------------------------------------------

def _apply_dseries(op: Series, poly: list) -> list:
    """Apply a power series in D = d/dt to a polynomial in t (exact)."""
    out = [SPoly() for _ in poly] or [SPoly()]
    cur = list(poly)
    k = 0
    while cur and k <= op.order:
        c = op[k]
        if not c.is_zero():
            for i, a in enumerate(cur):
                out[i] = out[i] + c * a
        cur = [i * cur[i] for i in range(1, len(cur))]
        k += 1
    if cur and k > op.order:
        raise ValueError("operator series order too small for the input degree")
    return out


def ladder_apply(p: RiordanPair, which: str, poly, order: int | None = None) -> list:
    """Apply the lowering or raising operator of a Sheffer pair to a t-polynomial.

    ``poly`` is a coefficient list in t (ascending).  ``order`` is the
    truncation used for the D-series; the default degree(poly)+1 is exact.
    Returns a trimmed coefficient list.
    """
    if p.convention != SHEFFER:
        raise ValueError("ladder_apply expects a Sheffer-convention pair")
    coeffs = [as_spoly(c) for c in poly]
    coeffs = list(_tp_trim(coeffs))
    deg = len(coeffs) - 1 if coeffs else 0
    if order is None:
        order = deg + 1
    if order < deg:
        raise ValueError("requested operator order cannot resolve the input degree")
    g, f = p.first, p.second
    if which == "lowering":
        if p.order < order:
            raise ValueError("pair truncation order too small")
        return list(_tp_trim(_apply_dseries(f.truncate(order), coeffs)))
    if which == "raising":
        if p.order < order + 1:
            raise ValueError("pair truncation order too small")
        fp = f.deriv().truncate(order)
        q = _apply_dseries(fp.reciprocal(), coeffs)
        gratio = (g.deriv().truncate(order)) / (g.truncate(order))
        correction = _apply_dseries(gratio, q)
        shifted = [SPoly()] + q
        out = [shifted[i] - (correction[i] if i < len(correction) else SPoly())
               for i in range(len(shifted))]
        return list(_tp_trim(out))
    raise ValueError("which must be 'lowering' or 'raising'")


# ---------------------------------------------------------------------------
# Catalog of classical Sheffer sequences.
# ---------------------------------------------------------------------------

def catalog(name: str, N: int, convention: str = SHEFFER) -> RiordanPair:
    """Classical sequences by name: touchard, hermite, laguerre, abel.

    touchard  Bell/Touchard polynomials    R[1, e^z - 1]   = S[1, log(1+D)]
    hermite   probabilists' Hermite He_n   R[e^(-z^2/2), z] = S[e^(D^2/2), D]
    laguerre  n! L_n(-t)                   R[1/(1-z), z/(1-z)] = S[1/(1+D), D/(1+D)]
    abel      A_n(t) = t (t - n)^(n-1)     S[1, D e^D]
    """
    z = Series.variable(N)
    key = name.strip().lower()
    if key == "touchard":
        pair = RiordanPair(Series.one(N), (1 + z).log(), SHEFFER)
    elif key == "hermite":
        pair = RiordanPair((z * z / 2).exp(), z, SHEFFER)
    elif key == "laguerre":
        pair = RiordanPair((1 + z).reciprocal(), z / (1 + z), SHEFFER)
    elif key == "abel":
        pair = RiordanPair(Series.one(N), z * z.exp(), SHEFFER)
    else:
        raise ValueError(
            f"unknown catalog sequence {name!r}; "
            "available: touchard, hermite, laguerre, abel")
    return pair if convention == SHEFFER else as_riordan(pair)
