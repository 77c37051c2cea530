"""Exact scalar and polynomial arithmetic.

Rationals are :class:`fractions.Fraction`.  :class:`ComplexRational` is the
field Q(i) on top of them and :class:`Poly` is a dense univariate polynomial
over that field.  Everything here is immutable.

The floating side (``BigFloat``) is provided by private :mod:`mpmath`
contexts so that precision is carried explicitly rather than through the
global ``mpmath.mp`` object.
"""
from __future__ import annotations

import os
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import mpmath

Rational = Fraction

DEFAULT_PRECISION_BITS = 256
ZERO_DEGREE = -1
"""Degree reported for the zero polynomial."""

VARIABLE_ROLES = ("x", "t", "s", "lambda")


class ComplexRational:
    """Exact element ``re + im*i`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re if type(re) is Fraction else Fraction(re))
        object.__setattr__(self, "im", im if type(im) is Fraction else Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("ComplexRational is immutable")

    @classmethod
    def parse(cls, text: str) -> "ComplexRational":
        return _parse_complex(text)

    # ring operations -----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return ComplexRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return ComplexRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return ComplexRational(other.re - self.re, other.im - self.im)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return ComplexRational(a * c, 0)
        return ComplexRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return ComplexRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "ComplexRational":
        if not self.im:
            if not self.re:
                raise ZeroDivisionError("division by zero in Q(i)")
            return ComplexRational(1 / self.re, 0)
        n = self.re * self.re + self.im * self.im
        return ComplexRational(self.re / n, -self.im / n)

    def conjugate(self) -> "ComplexRational":
        return ComplexRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    # predicates and conversions --------------------------------------------

    @property
    def is_real(self) -> bool:
        return not self.im

    def is_integer(self) -> bool:
        return not self.im and self.re.denominator == 1

    def is_nonpositive_integer(self) -> bool:
        return self.is_integer() and self.re <= 0

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def to_mpc(self, ctx=None):
        ctx = ctx or mpmath.mp
        re_ = ctx.mpf(self.re.numerator) / self.re.denominator
        if not self.im:
            return ctx.mpc(re_, 0)
        return ctx.mpc(re_, ctx.mpf(self.im.numerator) / self.im.denominator)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"ComplexRational({self})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        im = "" if abs(self.im) == 1 else f"{abs(self.im)}*"
        if not self.re:
            return f"{'-' if self.im < 0 else ''}{im}i"
        return f"{self.re}{'-' if self.im < 0 else '+'}{im}i"


ZERO = ComplexRational(0)
ONE = ComplexRational(1)
I = ComplexRational(0, 1)

_NUM = r"[0-9]+(?:/[0-9]+)?"
_REAL_RE = re.compile(rf"^[+-]?{_NUM}$")
_IMAG_RE = re.compile(rf"^(?P<sign>[+-]?)(?P<im>{_NUM})?\*?i$")
_COMPLEX_RE = re.compile(rf"^(?P<re>[+-]?{_NUM})(?P<sign>[+-])(?P<im>{_NUM})?\*?i$")


def _parse_complex(text: str) -> ComplexRational:
    text = str(text).strip().replace(" ", "")
    if _REAL_RE.match(text):
        return ComplexRational(Fraction(text), 0)
    match = _IMAG_RE.match(text) or _COMPLEX_RE.match(text)
    if match is None:
        raise ValueError(f"cannot parse exact complex rational from {text!r}")
    im = Fraction(match["im"]) if match["im"] else Fraction(1)
    if match["sign"] == "-":
        im = -im
    re_ = Fraction(match["re"]) if "re" in match.groupdict() else Fraction(0)
    return ComplexRational(re_, im)


def _coerce(value):
    if type(value) is ComplexRational:
        return value
    if isinstance(value, (int, Fraction)):
        return ComplexRational(value, 0)
    return None


def cq(value) -> ComplexRational:
    """Convert ints, Fractions, strings and ComplexRationals to ComplexRational.

    Floats are rejected: every parameter on the exact path must be exact.
    """
    out = _coerce(value)
    if out is not None:
        return out
    if isinstance(value, str):
        return _parse_complex(value)
    raise TypeError(f"cannot convert {type(value).__name__} exactly to ComplexRational")


# --------------------------------------------------------------------------
# polynomials
# --------------------------------------------------------------------------


class Poly:
    """Dense univariate polynomial with ComplexRational coefficients.

    ``coeffs[k]`` multiplies ``var**k``.  Trailing zeros are stripped on
    construction so equal polynomials compare equal.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "x"):
        cs = [cq(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _raw(cls, coeffs: list, var: str) -> "Poly":
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", tuple(coeffs))
        object.__setattr__(p, "var", var)
        return p

    @classmethod
    def variable(cls, var: str = "x") -> "Poly":
        return cls._raw([ZERO, ONE], var)

    @classmethod
    def constant(cls, c, var: str = "x") -> "Poly":
        return cls._raw([cq(c)], var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> ComplexRational:
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> ComplexRational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __len__(self):
        return len(self.coeffs)

    def _other(self, other):
        if isinstance(other, Poly):
            if other.var != self.var and other.degree > 0 and self.degree > 0:
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        c = _coerce(other)
        if c is None:
            return None
        return Poly._raw([c], self.var)

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Poly._raw(out, self._var_with(other))

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _coerce(other)
            if c is None:
                return NotImplemented
            return self.scale(c)
        other = self._other(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw([], self._var_with(other))
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Poly._raw(out, self._var_with(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = _coerce(other)
        if c is None:
            return NotImplemented
        return self.scale(c.inverse())

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = Poly._raw([ONE], self.var)
        for _ in range(k):
            out = out * self
        return out

    def _var_with(self, other: "Poly") -> str:
        return self.var if self.degree > 0 or other.degree <= 0 else other.var

    def scale(self, c) -> "Poly":
        c = cq(c)
        if not c:
            return Poly._raw([], self.var)
        return Poly._raw([c * x for x in self.coeffs], self.var)

    def __call__(self, x):
        return self.eval_at(x)

    def eval_at(self, x):
        """Horner evaluation; ``x`` may be a scalar or another :class:`Poly`."""
        if isinstance(x, Poly):
            acc = Poly._raw([], x.var)
        else:
            x = cq(x)
            acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_numeric(self, z, ctx=None):
        """Evaluate at an mpmath number using the coefficients' mpc images."""
        ctx = ctx or mpmath.mp
        acc = ctx.mpc(0)
        for c in reversed(self.coeffs):
            acc = acc * z + c.to_mpc(ctx)
        return acc

    def derivative(self) -> "Poly":
        return Poly._raw([k * c for k, c in enumerate(self.coeffs)][1:], self.var)

    def compose_affine(self, u, v, var: str | None = None) -> "Poly":
        """Return ``p(u*X + v)`` as a polynomial in ``var`` (default: same)."""
        lin = Poly._raw([cq(v), cq(u)], var or self.var)
        return self.compose(lin)

    def compose(self, inner: "Poly") -> "Poly":
        """Return ``p(inner(X))``; the result lives in ``inner.var``."""
        out = self.eval_at(inner)
        if not isinstance(out, Poly):
            out = Poly._raw([out], inner.var)
        return Poly._raw(list(out.coeffs), inner.var)

    def with_var(self, var: str) -> "Poly":
        return Poly._raw(list(self.coeffs), var)

    def monic(self) -> "Poly":
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no monic form")
        return self.scale(self.lead.inverse())

    def proportionality(self, other: "Poly"):
        """Return ``c`` with ``self == c * other``, or ``None`` if there is none.

        Two zero polynomials are proportional with ``c = 0``; a nonzero
        polynomial is never proportional to zero.
        """
        if not other.coeffs:
            return ZERO if not self.coeffs else None
        if len(self.coeffs) != len(other.coeffs):
            return ZERO if not self.coeffs else None
        c = self.lead / other.lead
        for x, y in zip(self.coeffs, other.coeffs):
            if x != c * y:
                return None
        return c

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        c = _coerce(other)
        if c is None:
            return NotImplemented
        return self.coeffs == ((c,) if c else ())

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly([{', '.join(str(c) for c in self.coeffs)}], var={self.var!r})"


def poly_from_roots(roots: Sequence, var: str = "x") -> Poly:
    out = Poly.constant(1, var)
    for r in roots:
        out = out * Poly([-cq(r), 1], var)
    return out


# --------------------------------------------------------------------------
# combinatorial helpers
# --------------------------------------------------------------------------


def pochhammer(x, k: int):
    """Rising factorial ``(x)_k = x (x+1) ... (x+k-1)`` in any commutative ring."""
    if k < 0:
        raise ValueError("Pochhammer index must be non-negative")
    if isinstance(x, Poly):
        out = Poly.constant(1, x.var)
    else:
        x = cq(x)
        out = ONE
    for i in range(k):
        out = out * (x + i)
    return out


def pochhammer_table(x, kmax: int) -> list:
    """``[(x)_0, (x)_1, ..., (x)_kmax]``."""
    if isinstance(x, Poly):
        out = [Poly.constant(1, x.var)]
    else:
        x = cq(x)
        out = [ONE]
    for i in range(kmax):
        out.append(out[-1] * (x + i))
    return out


@lru_cache(maxsize=None)
def factorial(k: int) -> int:
    return 1 if k <= 1 else k * factorial(k - 1)


@lru_cache(maxsize=None)
def falling_factorial_basis_change(k: int) -> tuple:
    """Stirling numbers ``S(k, r)``, r = 0..k.

    ``x**k == sum(S(k, r) * x (x-1) ... (x-r+1))``.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return (1,)
    prev = falling_factorial_basis_change(k - 1) + (0,)
    return tuple((r * prev[r] if r else 0) + (prev[r - 1] if r else 0) for r in range(k + 1))


# --------------------------------------------------------------------------
# exact linear algebra
# --------------------------------------------------------------------------


def _row_reduce(rows: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over Q(i). Returns (rref, pivot columns)."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][col].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(matrix: Sequence[Sequence]) -> int:
    if not matrix:
        return 0
    return len(_row_reduce([[cq(x) for x in row] for row in matrix])[1])


def solve_linear(matrix: Sequence[Sequence], rhs: Sequence):
    """Solve ``A x = b`` exactly.

    Returns ``(x, consistent, rank)``.  ``A`` may be non-square; when the
    system has free variables they are set to zero.  ``x`` is ``None`` if
    the system is inconsistent.
    """
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    aug = [[cq(x) for x in row] + [cq(b)] for row, b in zip(matrix, rhs)]
    if not aug:
        return [ZERO] * ncols, True, 0
    red, pivots = _row_reduce(aug)
    if ncols in pivots:
        return None, False, len(pivots) - 1
    x = [ZERO] * ncols
    for row, col in zip(red, pivots):
        x[col] = row[-1]
    return x, True, len(pivots)


def determinant(matrix: Sequence[Sequence]) -> ComplexRational:
    """Exact determinant by Gaussian elimination with row swaps."""
    m = [[cq(x) for x in row] for row in matrix]
    n = len(m)
    det = ONE
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col]), None)
        if piv is None:
            return ZERO
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        p = m[col][col]
        det = det * p
        inv = p.inverse()
        for i in range(col + 1, n):
            if m[i][col]:
                f = m[i][col] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[col])]
    return det


# --------------------------------------------------------------------------
# arbitrary precision floats
# --------------------------------------------------------------------------


def precision_bits(bits: int | None = None) -> int:
    """Working precision: explicit argument, else $MOPKIT_PRECISION_BITS, else 256."""
    if bits is not None:
        return int(bits)
    env = os.environ.get("MOPKIT_PRECISION_BITS")
    return int(env) if env else DEFAULT_PRECISION_BITS


def make_context(bits: int | None = None) -> mpmath.ctx_mp.MPContext:
    """A private mpmath context at the requested precision (BigFloat carrier)."""
    ctx = mpmath.MPContext()
    ctx.prec = precision_bits(bits)
    return ctx
