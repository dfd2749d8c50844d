"""Exact coefficient arithmetic.

Three layers live here:

* ``TPoly``: polynomials in ``t`` with integer coefficients, the ring every
  structure constant lives in.
* ``QTPoly``: the same over the rationals.  Only the x/y-expansions need it
  (``h_n`` and ``q_n`` carry factorial denominators).
* ``XYPolynomial``: sparse polynomials in the coordinates ``x_1, x_2, ...``
  and ``y_1, y_2, ...`` with ``QTPoly`` coefficients, graded by
  ``deg x_n = n`` and ``deg y_n = -n``.

plus a fraction-free linear solver used to expand a polynomial in a basis.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence


class NonzeroRemainder(ArithmeticError):
    """Exact polynomial division was requested but the divisor does not divide."""


class Inconsistent(ArithmeticError):
    """The target vector is not in the span of the columns (or shapes disagree)."""


class NotPolynomial(ArithmeticError):
    """A solution coordinate is a rational function, not an element of Z[t]."""


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _trim(out)


class _Poly:
    """Shared arithmetic for univariate polynomials in ``t``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        if isinstance(coeffs, (int, Fraction)):
            coeffs = (coeffs,)
        elif isinstance(coeffs, _Poly):
            coeffs = coeffs.coeffs
        object.__setattr__(self, "coeffs", _trim(self._normalize(c) for c in coeffs))

    @staticmethod
    def _normalize(c):
        raise NotImplementedError

    def __setattr__(self, name, value):
        raise AttributeError("polynomials are immutable")

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, _Poly):
            return other
        if isinstance(other, int):
            return cls((other,))
        if isinstance(other, Fraction):
            return QTPoly((other,))
        return NotImplemented

    def _result_type(self, other):
        if isinstance(self, QTPoly) or isinstance(other, QTPoly):
            return QTPoly
        return TPoly

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._result_type(other)(_add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return type(self)(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._result_type(other)(_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = type(self)((1,))
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, t):
        """Evaluate at ``t`` (Horner)."""
        value = 0
        for c in reversed(self.coeffs):
            value = value * t + c
        return value

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def shift(self, k: int):
        """Multiply by ``t**k``."""
        if not self.coeffs:
            return self
        return type(self)((0,) * k + self.coeffs)

    def to_list(self) -> list:
        return list(self.coeffs)

    def __repr__(self):
        return f"{type(self).__name__}({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "t" if k == 1 else f"t^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


class TPoly(_Poly):
    """Polynomial in ``t`` over the integers, ascending coefficients.

    >>> (TPoly([1, -1]) * TPoly([1, 1])).to_list()
    [1, 0, -1]
    >>> str(TPoly([1, 0, -1]))
    '1 - t^2'
    """

    __slots__ = ()

    @staticmethod
    def _normalize(c):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise NotPolynomial(f"non-integer coefficient {c}")
            return c.numerator
        if not isinstance(c, int):
            raise TypeError(f"TPoly coefficients must be integers, got {c!r}")
        return int(c)

    def divexact(self, other: "TPoly") -> "TPoly":
        """Return ``q`` with ``q * other == self``; raise NonzeroRemainder otherwise."""
        return tpoly_divexact(self, other)


class QTPoly(_Poly):
    """Polynomial in ``t`` over the rationals."""

    __slots__ = ()

    @staticmethod
    def _normalize(c):
        return Fraction(c)

    def denominator(self) -> int:
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // _gcd(den, c.denominator)
        return den

    def to_tpoly(self) -> TPoly:
        return TPoly(self.coeffs)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


T = TPoly([0, 1])
ONE = TPoly([1])
ZERO = TPoly()


def as_tpoly(value) -> TPoly:
    if isinstance(value, TPoly):
        return value
    if isinstance(value, QTPoly):
        return value.to_tpoly()
    if isinstance(value, int):
        return TPoly([value])
    return TPoly(value)


def tpoly_mul(a: TPoly, b: TPoly) -> TPoly:
    return as_tpoly(a) * as_tpoly(b)


def tpoly_divexact(a: TPoly, b: TPoly) -> TPoly:
    """Exact division in Z[t].

    Raises ZeroDivisionError for ``b == 0`` and NonzeroRemainder when ``b``
    does not divide ``a``.
    """
    a, b = as_tpoly(a), as_tpoly(b)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    lead = b.coeffs[-1]
    if len(rem) - 1 < db:
        if rem:
            raise NonzeroRemainder(f"{b} does not divide {a}")
        return ZERO
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        q, r = divmod(c, lead)
        if r:
            raise NonzeroRemainder(f"{b} does not divide {a}")
        quot[k - db] = q
        for j, cb in enumerate(b.coeffs):
            rem[k - db + j] -= q * cb
    if any(rem):
        raise NonzeroRemainder(f"{b} does not divide {a}")
    return TPoly(quot)


# ---------------------------------------------------------------------------
# Graded polynomials in x_1, x_2, ... and y_1, y_2, ...
#
# A monomial is a sorted tuple of (var, exponent) pairs.  ``var = n`` stands
# for x_n and ``var = -n`` for y_n, so the weight of a monomial is simply
# sum(var * exponent).
# ---------------------------------------------------------------------------

def monomial_weight(mono) -> int:
    return sum(v * e for v, e in mono)


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


class XYPolynomial:
    """Sparse polynomial in the graded coordinates x_n (weight n) and y_n (weight -n)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for mono, coeff in (terms or {}).items():
            coeff = coeff if isinstance(coeff, QTPoly) else QTPoly(coeff)
            if coeff:
                clean[tuple(sorted(mono))] = coeff
        self.terms = clean

    @classmethod
    def constant(cls, c=1):
        return cls({(): QTPoly(c)})

    @classmethod
    def variable(cls, var: int):
        return cls({((var, 1),): QTPoly(1)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, XYPolynomial) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for mono, c in other.terms.items():
            new = out.get(mono, QTPoly()) + c
            if new:
                out[mono] = new
            else:
                out.pop(mono, None)
        return XYPolynomial(out)

    def __neg__(self):
        return XYPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, XYPolynomial):
            return xpoly_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c):
        c = c if isinstance(c, QTPoly) else QTPoly(c)
        if not c:
            return XYPolynomial()
        return XYPolynomial({m: v * c for m, v in self.terms.items()})

    def weights(self) -> set:
        return {monomial_weight(m) for m in self.terms}

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def dense_key(self, mono, num_x: int, num_y: int) -> tuple:
        """Exponent list x_1..x_N then y_1..y_M for serialization."""
        exps = dict(mono)
        return tuple(exps.get(n, 0) for n in range(1, num_x + 1)) + tuple(
            exps.get(-n, 0) for n in range(1, num_y + 1)
        )

    def __repr__(self):
        if not self.terms:
            return "XYPolynomial(0)"
        parts = []
        for mono in sorted(self.terms):
            name = "*".join(
                (f"x{v}" if v > 0 else f"y{-v}") + (f"^{e}" if e > 1 else "") for v, e in mono
            ) or "1"
            parts.append(f"({self.terms[mono]})*{name}")
        return "XYPolynomial(" + " + ".join(parts) + ")"


def xpoly_mul(a: XYPolynomial, b: XYPolynomial, max_weight_magnitude: int | None = None) -> XYPolynomial:
    """Exact product, dropping monomials whose |weight| exceeds the window."""
    out = {}
    for m1, c1 in a.terms.items():
        w1 = monomial_weight(m1)
        for m2, c2 in b.terms.items():
            if max_weight_magnitude is not None and abs(w1 + monomial_weight(m2)) > max_weight_magnitude:
                continue
            mono = _mono_mul(m1, m2)
            prev = out.get(mono)
            out[mono] = c1 * c2 if prev is None else prev + c1 * c2
    return XYPolynomial(out)


def _bounded_partitions(n: int, max_part: int):
    """Partitions of n with parts <= max_part, as multiplicity dicts."""
    if n == 0:
        yield {}
        return
    for part in range(min(n, max_part), 0, -1):
        for rest in _bounded_partitions(n - part, part):
            mult = dict(rest)
            mult[part] = mult.get(part, 0) + 1
            yield mult


@lru_cache(maxsize=None)
def _exp_coefficient(n: int, num_vars: int, sign: int, deformed: bool) -> XYPolynomial:
    if n < 0:
        return XYPolynomial()
    terms = {}
    for mult in _bounded_partitions(n, num_vars):
        coeff = QTPoly([1])
        denom = 1
        for part, k in mult.items():
            denom *= factorial(k)
            if deformed:
                coeff = coeff * (ONE - T ** part) ** k
        coeff = coeff * Fraction(1, denom)
        mono = tuple(sorted((sign * part, k) for part, k in mult.items()))
        terms[mono] = coeff
    return XYPolynomial(terms)


def h_poly(n: int, num_vars: int | None = None, var: str = "x") -> XYPolynomial:
    """Coefficient of z^n in exp(sum_k x_k z^k); zero for negative n.

    ``var="y"`` gives the same polynomial in the y-coordinates.
    """
    if n < 0:
        return XYPolynomial()
    if num_vars is None:
        num_vars = n
    return _exp_coefficient(n, num_vars, 1 if var == "x" else -1, False)


def q_poly(n: int, num_vars: int | None = None) -> XYPolynomial:
    """Coefficient of z^n in exp(sum_k (1 - t^k) x_k z^k); zero for negative n."""
    if n < 0:
        return XYPolynomial()
    if num_vars is None:
        num_vars = n
    return _exp_coefficient(n, num_vars, 1, True)


def xy_determinant(matrix: Sequence[Sequence[XYPolynomial]]) -> XYPolynomial:
    """Determinant by first-row Laplace expansion with memoised minors."""
    size = len(matrix)
    if size == 0:
        return XYPolynomial.constant(1)
    memo = {}

    def minor(row: int, cols: tuple) -> XYPolynomial:
        if row == size:
            return XYPolynomial.constant(1)
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = XYPolynomial()
        for pos, col in enumerate(cols):
            entry = matrix[row][col]
            if not entry:
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            if not sub:
                continue
            term = entry * sub
            total = total + term if pos % 2 == 0 else total - term
        memo[key] = total
        return total

    return minor(0, tuple(range(size)))


# ---------------------------------------------------------------------------
# Linear algebra over Q[t] with solutions in Z[t]
# ---------------------------------------------------------------------------

def _as_qt(c) -> QTPoly:
    if isinstance(c, QTPoly):
        return c
    if isinstance(c, _Poly):
        return QTPoly(c.coeffs)
    if isinstance(c, (int, Fraction)):
        return QTPoly([c])
    return QTPoly(c)


def solve_exact_linear_system(columns: Sequence[Sequence], target: Sequence) -> list[TPoly]:
    """Solve ``sum_i x_i * columns[i] == target`` for ``x_i`` in Z[t].

    Entries may be ints, Fractions, TPoly or QTPoly.  Each row is scaled to
    clear denominators, then Bareiss elimination runs over Z[t] followed by
    fraction-free back substitution, so every division below is exact.
    """
    ncols = len(columns)
    nrows = len(target)
    if any(len(col) != nrows for col in columns):
        raise Inconsistent("column length differs from target length")
    if ncols > nrows:
        raise Inconsistent(f"{ncols} unknowns over a {nrows}-dimensional space")
    if ncols == 0:
        if any(_as_qt(c) for c in target):
            raise Inconsistent("nonzero target with no columns")
        return []

    rows = []
    for r in range(nrows):
        entries = [_as_qt(columns[c][r]) for c in range(ncols)] + [_as_qt(target[r])]
        den = 1
        for e in entries:
            d = e.denominator()
            den = den * d // _gcd(den, d)
        rows.append([TPoly(e * den) for e in entries])

    prev = ONE
    pivot_rows = []
    for k in range(ncols):
        piv = next((r for r in range(k, nrows) if rows[r][k]), None)
        if piv is None:
            raise Inconsistent(f"column {k} is linearly dependent on earlier columns")
        rows[k], rows[piv] = rows[piv], rows[k]
        pk = rows[k][k]
        for r in range(k + 1, nrows):
            ark = rows[r][k]
            new = [ZERO] * (ncols + 1)
            for j in range(k + 1, ncols + 1):
                new[j] = tpoly_divexact(pk * rows[r][j] - ark * rows[k][j], prev)
            rows[r] = new
        prev = pk
        pivot_rows.append(rows[k])

    for r in range(ncols, nrows):
        if rows[r][ncols]:
            raise Inconsistent("target lies outside the span of the columns")

    det = prev
    scaled = [ZERO] * ncols
    for i in range(ncols - 1, -1, -1):
        row = pivot_rows[i]
        acc = det * row[ncols]
        for j in range(i + 1, ncols):
            acc = acc - row[j] * scaled[j]
        scaled[i] = tpoly_divexact(acc, row[i])

    solution = []
    for i, y in enumerate(scaled):
        try:
            solution.append(tpoly_divexact(y, det))
        except NonzeroRemainder:
            raise NotPolynomial(f"coordinate {i} is ({y})/({det}), not in Z[t]") from None
    return solution


def expand_in_basis(poly: XYPolynomial, basis: Sequence[XYPolynomial]) -> list[TPoly]:
    """Coordinates of ``poly`` against the given (independent) basis polynomials."""
    monos = set(poly.terms)
    for b in basis:
        monos.update(b.terms)
    monos = sorted(monos)
    zero = QTPoly()
    columns = [[b.terms.get(m, zero) for m in monos] for b in basis]
    target = [poly.terms.get(m, zero) for m in monos]
    return solve_exact_linear_system(columns, target)
