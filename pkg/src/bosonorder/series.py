"""Truncated formal power series over Q[s], with exact arithmetic.

A :class:`Series` carries its truncation order N explicitly and stores
coefficients for z^0 .. z^N.  Binary operations return the minimum of the
operand orders, so a result is never silently pretended to more precision
than its inputs support.  All operations are exact: no floats anywhere.

The operations are the standard formal ones -- Cauchy product, composition,
compositional reversion (order-by-order linear solve), exp/log, and rational
powers f^q = exp(q log f) for series with constant term 1.

:class:`BiSeries` is the two-variable analogue truncated on a coefficient
box; it exists for identities that live in a double power-series ring with
independent truncation orders in each variable.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import SPoly, as_spoly, format_rational


class Series:
    """Formal power series in one variable, truncated at an explicit order.

    >>> z = Series.variable(4)
    >>> print((1 + z).pow_rational(Fraction(1, 2)))
    1 + 1/2*z - 1/8*z^2 + 1/16*z^3 - 5/128*z^4 + O(z^5)
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order: int):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        cs = [as_spoly(c) for c in coeffs]
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        while len(cs) < order + 1:
            cs.append(SPoly())
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero(order: int) -> "Series":
        return Series((), order)

    @staticmethod
    def one(order: int) -> "Series":
        return Series((1,), order)

    @staticmethod
    def const(c, order: int) -> "Series":
        return Series((c,), order)

    @staticmethod
    def variable(order: int) -> "Series":
        """The series z."""
        return Series((0, 1), order)

    # -- queries ---------------------------------------------------------

    def __getitem__(self, n: int) -> SPoly:
        if n < 0:
            raise IndexError(n)
        if n > self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError(
                f"cannot extend truncation order {self.order} to {order}"
            )
        return Series(self.coeffs, order)

    def valuation(self) -> int:
        """Index of the first nonzero coefficient; order+1 if none."""
        for n, c in enumerate(self.coeffs):
            if not c.is_zero():
                return n
        return self.order + 1

    # -- ring operations -------------------------------------------------

    @staticmethod
    def _scalar(x):
        if isinstance(x, (int, Fraction, SPoly)):
            return as_spoly(x)
        return None

    def __add__(self, other):
        sc = Series._scalar(other)
        if sc is not None:
            cs = list(self.coeffs)
            cs[0] = cs[0] + sc
            return Series(cs, self.order)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return Series((self.coeffs[k] + other.coeffs[k] for k in range(n + 1)), n)

    __radd__ = __add__

    def __neg__(self):
        return Series((-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        sc = Series._scalar(other)
        if sc is not None:
            return self + (-sc)
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        sc = Series._scalar(other)
        if sc is not None:
            return Series((sc * c for c in self.coeffs), self.order)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        out = [SPoly() for _ in range(n + 1)]
        for i in range(n + 1):
            a = self.coeffs[i]
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Series(out, n)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Series":
        if n < 0:
            raise ValueError("negative integer power; use reciprocal")
        out = Series.one(self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def reciprocal(self) -> "Series":
        """1/f for f with invertible (nonzero rational) constant term."""
        a0 = self.coeffs[0]
        if not a0.is_rational() or a0.is_zero():
            raise ValueError(
                f"constant term {a0} is not invertible; cannot take reciprocal"
            )
        inv0 = 1 / a0.as_rational()
        out = [SPoly.const(inv0)]
        for n in range(1, self.order + 1):
            acc = SPoly()
            for k in range(1, n + 1):
                ak = self.coeffs[k]
                if not ak.is_zero():
                    acc = acc + ak * out[n - k]
            out.append(-inv0 * acc)
        return Series(out, self.order)

    def __truediv__(self, other):
        sc = Series._scalar(other)
        if sc is not None:
            inv = 1 / sc.as_rational()
            return Series((c * inv for c in self.coeffs), self.order)
        if not isinstance(other, Series):
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        sc = Series._scalar(other)
        if sc is None:
            return NotImplemented
        return self.reciprocal() * sc

    def exact_scalar_div(self, divisor: SPoly) -> "Series":
        """Divide every coefficient exactly by an SPoly (remainder must vanish)."""
        divisor = as_spoly(divisor)
        return Series((c.exact_div(divisor) for c in self.coeffs), self.order)

    # -- composition and reversion --------------------------------------

    def compose(self, inner: "Series") -> "Series":
        """self(inner), requiring inner to have zero constant term."""
        if not inner.coeffs[0].is_zero():
            raise ValueError("composition requires zero constant term in the inner series")
        n = min(self.order, inner.order)
        out = Series.zero(n)
        for k in range(n, -1, -1):
            out = out * inner + self.coeffs[k]
        return out

    def revert(self) -> "Series":
        """Compositional inverse g with g(self(z)) = self(g(z)) = z.

        Requires zero constant term and an invertible linear coefficient.
        A rational unit c != 1 is handled by normalizing f/c, reverting,
        and substituting z/c back.
        """
        if not self.coeffs[0].is_zero():
            raise ValueError("reversion requires zero constant term")
        if self.order < 1:
            raise ValueError("reversion needs truncation order >= 1")
        c1 = self.coeffs[1]
        if not c1.is_rational() or c1.is_zero():
            raise ValueError(f"linear coefficient {c1} is not invertible")
        c = c1.as_rational()
        f = self if c == 1 else self / c
        # Order-by-order solve: with g known through z^(n-1) (and g_n = 0),
        # the z^n coefficient of f(g) is off by exactly g_n, since f_1 = 1.
        g = [SPoly(), SPoly.const(1)]
        for n in range(2, self.order + 1):
            approx = Series(g, self.order)
            err = f.compose(approx).coeffs[n]
            g.append(-err)
        gbar = Series(g, self.order)
        if c != 1:
            gbar = gbar.compose(Series.variable(self.order) / c)
        return gbar

    # -- exp, log, rational powers --------------------------------------

    def exp(self) -> "Series":
        """exp(f) for f with zero constant term."""
        if not self.coeffs[0].is_zero():
            raise ValueError("exp requires zero constant term")
        out = [SPoly.const(1)]
        for n in range(1, self.order + 1):
            acc = SPoly()
            for k in range(1, n + 1):
                uk = self.coeffs[k]
                if not uk.is_zero():
                    acc = acc + (k * uk) * out[n - k]
            out.append(acc / n)
        return Series(out, self.order)

    def log(self) -> "Series":
        """log(f) for f with constant term exactly 1."""
        if self.coeffs[0] != 1:
            raise ValueError("log requires constant term 1")
        out = [SPoly()]
        for n in range(1, self.order + 1):
            acc = SPoly()
            for k in range(1, n):
                acc = acc + (k * out[k]) * self.coeffs[n - k]
            out.append(self.coeffs[n] - acc / n)
        return Series(out, self.order)

    def pow_rational(self, q) -> "Series":
        """f^q = exp(q log f) for rational q; requires constant term 1."""
        q = Fraction(q)
        if self.coeffs[0] != 1:
            raise ValueError("pow_rational requires constant term 1")
        return (self.log() * q).exp()

    def deriv(self) -> "Series":
        """d/dz; the result order drops by one."""
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 truncation")
        return Series(((n + 1) * self.coeffs[n + 1] for n in range(self.order)),
                      self.order - 1)

    # -- evaluation of s -------------------------------------------------

    def eval_s(self, value) -> "Series":
        """Evaluate every coefficient at a rational s."""
        return Series((SPoly.const(c.eval(value)) for c in self.coeffs), self.order)

    def subs_s(self, value: SPoly) -> "Series":
        return Series((c.subs(value) for c in self.coeffs), self.order)

    # -- comparisons, display, serialization ----------------------------

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.order))

    def agrees(self, other: "Series", upto: int | None = None) -> bool:
        """Coefficientwise equality through min(orders) or an explicit bound."""
        n = min(self.order, other.order)
        if upto is not None:
            if upto > n:
                raise ValueError("comparison bound exceeds truncation orders")
            n = upto
        return all(self.coeffs[k] == other.coeffs[k] for k in range(n + 1))

    def __str__(self):
        parts = []
        for n, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if c.is_rational():
                txt = format_rational(c.as_rational())
            else:
                txt = f"({c})"
            if n == 0:
                parts.append(txt)
            else:
                zn = "z" if n == 1 else f"z^{n}"
                if txt == "1":
                    parts.append(zn)
                elif txt == "-1":
                    parts.append(f"-{zn}")
                else:
                    parts.append(f"{txt}*{zn}")
        body = " + ".join(parts).replace("+ -", "- ") if parts else "0"
        return f"{body} + O(z^{self.order + 1})"

    def __repr__(self):
        return f"Series({self})"

    def to_json(self) -> dict:
        return {"trunc_order": self.order,
                "coeffs": [c.to_json() for c in self.coeffs]}

    @staticmethod
    def from_json(data) -> "Series":
        return Series([SPoly.from_json(c) for c in data["coeffs"]],
                      data["trunc_order"])


# Contract-level aliases for the core operations.

def mul(f: Series, g: Series) -> Series:
    return f * g


def compose(outer: Series, inner: Series) -> Series:
    return outer.compose(inner)


def revert(f: Series) -> Series:
    return f.revert()


def pow_rational(f: Series, q) -> Series:
    return f.pow_rational(q)


def exp_log(f: Series, kind: str) -> Series:
    """Dispatch to exp or log by name."""
    if kind == "exp":
        return f.exp()
    if kind == "log":
        return f.log()
    raise ValueError(f"kind must be 'exp' or 'log', got {kind!r}")


class BiSeries:
    """Power series in two variables truncated on a coefficient box.

    ``table[i][j]`` is the coefficient of x^i u^j for 0 <= i <= xorder,
    0 <= j <= uorder.  Products are exact entrywise on the box because a
    coefficient of the product only involves lower coefficients of the
    factors.
    """

    __slots__ = ("table", "xorder", "uorder")

    def __init__(self, table, xorder: int, uorder: int):
        rows = []
        for i in range(xorder + 1):
            src = table[i] if i < len(table) else ()
            row = [as_spoly(src[j]) if j < len(src) else SPoly()
                   for j in range(uorder + 1)]
            rows.append(tuple(row))
        object.__setattr__(self, "table", tuple(rows))
        object.__setattr__(self, "xorder", xorder)
        object.__setattr__(self, "uorder", uorder)

    def __setattr__(self, name, value):
        raise AttributeError("BiSeries is immutable")

    @staticmethod
    def zero(xorder: int, uorder: int) -> "BiSeries":
        return BiSeries((), xorder, uorder)

    @staticmethod
    def const(c, xorder: int, uorder: int) -> "BiSeries":
        return BiSeries(((c,),), xorder, uorder)

    @staticmethod
    def var_x(xorder: int, uorder: int) -> "BiSeries":
        return BiSeries(((), (1,)), xorder, uorder)

    @staticmethod
    def var_u(xorder: int, uorder: int) -> "BiSeries":
        return BiSeries(((0, 1),), xorder, uorder)

    @staticmethod
    def from_series(f: Series, xorder: int, uorder: int) -> "BiSeries":
        """Pour a univariate series in as a function of x alone."""
        if f.order < xorder:
            raise ValueError("series order too small for requested box")
        return BiSeries(tuple((f.coeffs[i],) for i in range(xorder + 1)),
                        xorder, uorder)

    def coeff(self, i: int, j: int) -> SPoly:
        return self.table[i][j]

    def x_slice(self, j: int) -> Series:
        """The coefficient of u^j as a series in x."""
        return Series((self.table[i][j] for i in range(self.xorder + 1)),
                      self.xorder)

    def is_zero(self) -> bool:
        return all(c.is_zero() for row in self.table for c in row)

    def _check_box(self, other: "BiSeries"):
        if self.xorder != other.xorder or self.uorder != other.uorder:
            raise ValueError("BiSeries box mismatch")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, SPoly)):
            rows = [list(r) for r in self.table]
            rows[0][0] = rows[0][0] + as_spoly(other)
            return BiSeries(rows, self.xorder, self.uorder)
        self._check_box(other)
        return BiSeries(
            tuple(tuple(a + b for a, b in zip(ra, rb))
                  for ra, rb in zip(self.table, other.table)),
            self.xorder, self.uorder)

    __radd__ = __add__

    def __neg__(self):
        return BiSeries(tuple(tuple(-c for c in row) for row in self.table),
                        self.xorder, self.uorder)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, SPoly)):
            return self + (-as_spoly(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, SPoly)):
            c = as_spoly(other)
            return BiSeries(tuple(tuple(c * e for e in row) for row in self.table),
                            self.xorder, self.uorder)
        self._check_box(other)
        out = [[SPoly() for _ in range(self.uorder + 1)]
               for _ in range(self.xorder + 1)]
        for i1 in range(self.xorder + 1):
            for j1 in range(self.uorder + 1):
                a = self.table[i1][j1]
                if a.is_zero():
                    continue
                for i2 in range(self.xorder + 1 - i1):
                    for j2 in range(self.uorder + 1 - j1):
                        b = other.table[i2][j2]
                        if not b.is_zero():
                            out[i1 + i2][j1 + j2] = out[i1 + i2][j1 + j2] + a * b
        return BiSeries(out, self.xorder, self.uorder)

    __rmul__ = __mul__

    def reciprocal(self) -> "BiSeries":
        """1/F for invertible rational constant term; Neumann-series style."""
        c00 = self.table[0][0]
        if not c00.is_rational() or c00.is_zero():
            raise ValueError("constant term not invertible")
        inv0 = 1 / c00.as_rational()
        u = -(inv0 * (self - c00.as_rational()))
        out = BiSeries.const(1, self.xorder, self.uorder)
        powed = BiSeries.const(1, self.xorder, self.uorder)
        for _ in range(self.xorder + self.uorder):
            powed = powed * u
            if powed.is_zero():
                break
            out = out + powed
        return inv0 * out

    def compose_series(self, f: Series) -> "BiSeries":
        """f(self) for self with zero constant term.

        Exactness on the box requires f known through order xorder+uorder.
        """
        if not self.table[0][0].is_zero():
            raise ValueError("composition requires zero constant term")
        need = self.xorder + self.uorder
        if f.order < need:
            raise ValueError(
                f"outer series order {f.order} insufficient; need {need}")
        out = BiSeries.const(f.coeffs[0], self.xorder, self.uorder)
        powed = BiSeries.const(1, self.xorder, self.uorder)
        for k in range(1, need + 1):
            powed = powed * self
            if powed.is_zero():
                break
            out = out + f.coeffs[k] * powed
        return out

    def exp(self) -> "BiSeries":
        """exp(F) for F with zero constant term."""
        if not self.table[0][0].is_zero():
            raise ValueError("exp requires zero constant term")
        out = BiSeries.const(1, self.xorder, self.uorder)
        powed = BiSeries.const(1, self.xorder, self.uorder)
        fact = Fraction(1)
        for k in range(1, self.xorder + self.uorder + 1):
            powed = powed * self
            if powed.is_zero():
                break
            fact *= k
            out = out + (Fraction(1, 1) / fact) * powed
        return out

    def __pow__(self, n: int) -> "BiSeries":
        if n < 0:
            raise ValueError("negative power")
        out = BiSeries.const(1, self.xorder, self.uorder)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        return (self.xorder == other.xorder and self.uorder == other.uorder
                and self.table == other.table)

    def __hash__(self):
        return hash((self.table, self.xorder, self.uorder))
