"""
Dense univariate polynomials over Z, stored with ascending coefficients.

Division and gcd pass through Q internally; results are brought back to
primitive integer form with a positive leading coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd


def _trim(coeffs):
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True)
class IntPolynomial:
    """
    Polynomial with integer coefficients, constant term first.

    >>> IntPolynomial((1, -7, 1))
    IntPolynomial('t^2 - 7t + 1')
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs=()):
        cs = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError("non-integral coefficient %s" % c)
                c = c.numerator
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError("coefficient %r is not an int" % (c,))
            cs.append(c)
        object.__setattr__(self, "coeffs", _trim(cs))

    @classmethod
    def t(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def from_fractions(cls, coeffs, keep_sign: bool = False) -> "IntPolynomial":
        """Scale a rational coefficient list to a primitive integer polynomial.

        With ``keep_sign`` the scaling factor is positive, so signs of values
        are preserved; otherwise the leading coefficient is made positive.
        """
        coeffs = _trim([Fraction(c) for c in coeffs])
        if not coeffs:
            return cls(())
        den = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in coeffs), 1)
        ints = [int(c * den) for c in coeffs]
        if keep_sign:
            g = reduce(gcd, ints, 0)
            return cls(x // g for x in ints)
        return cls(ints).primitive()

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = IntPolynomial((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def content(self) -> int:
        return reduce(gcd, self.coeffs, 0)

    def primitive(self) -> "IntPolynomial":
        """Divide out the content and make the leading coefficient positive."""
        if self.is_zero():
            return self
        c = self.content()
        if self.leading < 0:
            c = -c
        return IntPolynomial(x // c for x in self.coeffs)

    def divmod(self, other: "IntPolynomial") -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
        """Division over Q; returns rational (quotient, remainder) coefficient tuples."""
        q, r = _qdivmod([Fraction(c) for c in self.coeffs], [Fraction(c) for c in other.coeffs])
        return tuple(q), tuple(r)

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        """Quotient self/other, which must be exact with integer coefficients."""
        q = self.try_div(other)
        if q is None:
            raise ArithmeticError("%s does not divide %s over Z" % (other, self))
        return q

    def try_div(self, other: "IntPolynomial") -> "IntPolynomial | None":
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.leading
        if self.degree < db:
            return IntPolynomial(()) if self.is_zero() else None
        quot = [0] * (self.degree - db + 1)
        for k in range(self.degree - db, -1, -1):
            c = rem[k + db]
            if c == 0:
                continue
            if c % lead:
                return None
            f = c // lead
            quot[k] = f
            for j, b in enumerate(other.coeffs):
                rem[k + j] -= f * b
        if any(rem):
            return None
        return IntPolynomial(quot)

    def divides(self, other: "IntPolynomial") -> bool:
        return other.try_div(self) is not None

    def reversed(self) -> "IntPolynomial":
        """Reciprocal polynomial t^deg p(1/t)."""
        return IntPolynomial(self.coeffs[::-1])

    def is_self_reciprocal(self) -> bool:
        """True when the coefficient list is palindromic up to an overall sign."""
        c = self.coeffs
        return c == c[::-1] or c == tuple(-x for x in c[::-1])

    def __str__(self):
        return poly_str(self.coeffs)

    def __repr__(self):
        return "IntPolynomial(%r)" % str(self)


def _as_poly(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return IntPolynomial((x,))
    raise TypeError("cannot use %r as an integer polynomial" % (x,))


def poly_str(coeffs, var: str = "t") -> str:
    """Human-readable rendering, highest degree first."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            coef = "" if mag == 1 else str(mag)
            body = coef + (var if k == 1 else "%s^%d" % (var, k))
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += " %s %s" % (sign, body)
    return out


def _qdivmod(a: list[Fraction], b: list[Fraction]):
    a = list(_trim(a))
    b = list(_trim(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                a[k + j] -= c * bj
    return list(_trim(q)), list(_trim(a[: len(b) - 1]))


def poly_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Greatest common divisor over Q, returned primitive with positive leading coefficient."""
    a = [Fraction(c) for c in p.coeffs]
    b = [Fraction(c) for c in q.coeffs]
    while b:
        _, r = _qdivmod(a, b)
        a = b
        # primitive remainders keep coefficient growth in check
        b = [Fraction(c) for c in IntPolynomial.from_fractions(r).coeffs] if r else []
    if not a:
        return IntPolynomial(())
    return IntPolynomial.from_fractions(a)


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """p / gcd(p, p'), primitive."""
    if p.is_zero():
        raise ValueError("zero polynomial has no square-free part")
    if p.degree <= 0:
        return IntPolynomial((1,))
    g = poly_gcd(p, p.derivative())
    q, r = p.divmod(g)
    assert not r
    return IntPolynomial.from_fractions(q)


def product(polys) -> IntPolynomial:
    return reduce(lambda x, y: x * y, polys, IntPolynomial((1,)))
