"""
Certified real root isolation for integer polynomials via Sturm chains.

Every interval produced here is an open interval (lo, hi) with rational
endpoints that are not roots, and the Sturm counts at both endpoints are
stored with it so the isolation can be re-checked independently.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .poly import IntPolynomial, _qdivmod, poly_gcd, squarefree_part


@lru_cache(maxsize=4096)
def _sturm_chain(coeffs: tuple[int, ...]) -> tuple[IntPolynomial, ...]:
    p = IntPolynomial(coeffs)
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        _, r = _qdivmod([Fraction(c) for c in chain[-2].coeffs],
                        [Fraction(c) for c in chain[-1].coeffs])
        if not r:
            break
        # positive rescaling does not change signs; keep -rem
        chain.append(-IntPolynomial.from_fractions(r, keep_sign=True))
    return tuple(q for q in chain if not q.is_zero())


def sturm_chain(p: IntPolynomial) -> tuple[IntPolynomial, ...]:
    """Sturm sequence p, p', -rem(p, p'), ... (each term primitive up to positive scaling)."""
    if p.is_zero():
        raise ValueError("zero polynomial has no Sturm chain")
    return _sturm_chain(p.coeffs)


def sign_variations(chain, x: Fraction) -> int:
    signs = []
    for q in chain:
        v = q(x)
        if v:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p: IntPolynomial, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of p in (lo, hi]; lo must not be a root."""
    chain = sturm_chain(p)
    return sign_variations(chain, Fraction(lo)) - sign_variations(chain, Fraction(hi))


def root_bound(p: IntPolynomial) -> Fraction:
    """Cauchy bound, strictly larger than every root modulus."""
    lead = abs(p.leading)
    return 1 + Fraction(max((abs(c) for c in p.coeffs[:-1]), default=0), lead) + 1


@dataclass(frozen=True)
class IsolatingInterval:
    lo: Fraction
    hi: Fraction
    poly: IntPolynomial
    sign_changes: tuple[int, int] = field(compare=False)

    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        return self.lo < x < self.hi

    def approx(self) -> float:
        return float((self.lo + self.hi) / 2)

    def verify(self) -> bool:
        """Recompute the Sturm counts and confirm exactly one distinct root in (lo, hi)."""
        if not self.lo < self.hi:
            return False
        if self.poly(self.lo) == 0 or self.poly(self.hi) == 0:
            return False
        chain = sturm_chain(self.poly)
        va, vb = sign_variations(chain, self.lo), sign_variations(chain, self.hi)
        return va - vb == 1 and (va, vb) == self.sign_changes

    def refine(self, width: Fraction) -> "IsolatingInterval":
        """Bisect until hi - lo < width."""
        width = Fraction(width)
        if width <= 0:
            raise ValueError("refinement width must be positive")
        sq = squarefree_part(self.poly)
        lo, hi = self.lo, self.hi
        slo = sq(lo)
        while hi - lo >= width:
            m = _split_point(sq, lo, hi)
            sm = sq(m)
            if (slo > 0) != (sm > 0):
                hi = m
            else:
                lo, slo = m, sm
        return _certified(self.poly, lo, hi)

    def refine_past(self, bound: Fraction) -> "IsolatingInterval":
        """Bisect until the interval lies strictly on one side of ``bound``."""
        bound = Fraction(bound)
        if self.poly(bound) == 0:
            raise ValueError("%s is itself a root" % bound)
        cur = self
        while cur.lo <= bound <= cur.hi:
            cur = cur.refine(cur.width() / 2)
        return cur

    def __str__(self):
        return "(%s, %s)" % (self.lo, self.hi)


def _certified(p: IntPolynomial, lo: Fraction, hi: Fraction) -> IsolatingInterval:
    chain = sturm_chain(p)
    va, vb = sign_variations(chain, lo), sign_variations(chain, hi)
    if va - vb != 1:
        raise ArithmeticError("interval (%s, %s) does not isolate a root of %s" % (lo, hi, p))
    return IsolatingInterval(lo, hi, p, (va, vb))


def _split_point(p: IntPolynomial, lo: Fraction, hi: Fraction) -> Fraction:
    """A rational strictly inside (lo, hi) that is not a root of p, close to the midpoint."""
    span = hi - lo
    k = 2
    while True:
        cands = sorted((lo + span * j / k for j in range(1, k)),
                       key=lambda m: abs(2 * (m - lo) - span))
        for m in cands:
            if p(m) != 0:
                return m
        k += 1


def sturm_isolate_real_roots(p: IntPolynomial) -> list[IsolatingInterval]:
    """
    Isolate every distinct real root of p.

    Returns intervals sorted left to right.  Roots that happen to be
    rational lie strictly inside their interval, never on an endpoint.
    """
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    if p.degree == 0:
        return []
    chain = sturm_chain(p)
    b = root_bound(p)
    out = []
    stack = [(-b, b, sign_variations(chain, -b), sign_variations(chain, b))]
    while stack:
        lo, hi, va, vb = stack.pop()
        n = va - vb
        if n == 0:
            continue
        if n == 1:
            out.append(IsolatingInterval(lo, hi, p, (va, vb)))
            continue
        m = _split_point(p, lo, hi)
        vm = sign_variations(chain, m)
        stack.append((lo, m, va, vm))
        stack.append((m, hi, vm, vb))
    out.sort(key=lambda iv: iv.lo)
    return out


def positive_root_count(p: IntPolynomial) -> int:
    """Number of distinct real roots in (0, oo)."""
    k = next(i for i, c in enumerate(p.coeffs) if c)
    stripped = IntPolynomial(p.coeffs[k:])
    if stripped.degree <= 0:
        return 0
    return count_roots(stripped, Fraction(0), root_bound(stripped))


def largest_real_root(p: IntPolynomial) -> IsolatingInterval | None:
    roots = sturm_isolate_real_roots(p)
    return roots[-1] if roots else None


class Ordering(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"

    def flipped(self) -> "Ordering":
        return {Ordering.LESS: Ordering.GREATER, Ordering.GREATER: Ordering.LESS}.get(self, self)


@dataclass(frozen=True)
class RootComparison:
    ordering: Ordering
    left: IsolatingInterval
    right: IsolatingInterval
    shared_factor: IntPolynomial
    steps: tuple[str, ...]


def _has_root_in(g: IntPolynomial, iv: IsolatingInterval) -> bool:
    if g.degree <= 0:
        return False
    if g(iv.lo) == 0 or g(iv.hi) == 0:
        # g divides p, so its roots are roots of p: endpoints are never roots of p
        raise ArithmeticError("interval endpoint is a root of a factor")
    return count_roots(g, iv.lo, iv.hi) > 0


def root_comparison(p: IntPolynomial, q: IntPolynomial) -> RootComparison:
    """Exact comparison of the largest real roots of p and q, with a transcript."""
    for name, poly in (("p", p), ("q", q)):
        if poly.is_zero() or positive_root_count(poly) == 0:
            raise ValueError("%s = %s has no positive real root" % (name, poly))
    rp, rq = largest_real_root(p), largest_real_root(q)
    steps = ["largest root of p in %s" % rp, "largest root of q in %s" % rq]
    g = poly_gcd(p, q)
    steps.append("gcd(p, q) = %s" % g)
    in_p = _has_root_in(g, rp)
    in_q = _has_root_in(g, rq)
    if in_p and in_q:
        steps.append("both largest roots are roots of the common factor: equal")
        return RootComparison(Ordering.EQUAL, rp, rq, g, tuple(steps))
    if in_p:
        steps.append("largest root of p is a root of q but not its largest: less")
        return RootComparison(Ordering.LESS, rp, rq, g, tuple(steps))
    if in_q:
        steps.append("largest root of q is a root of p but not its largest: greater")
        return RootComparison(Ordering.GREATER, rp, rq, g, tuple(steps))
    # distinct roots: refine until the intervals separate
    a, b = rp, rq
    while not (a.hi <= b.lo or b.hi <= a.lo):
        a = a.refine(a.width() / 2)
        b = b.refine(b.width() / 2)
    order = Ordering.LESS if a.hi <= b.lo else Ordering.GREATER
    steps.append("refined to disjoint intervals %s and %s: %s" % (a, b, order.value))
    return RootComparison(order, a, b, g, tuple(steps))


def compare_largest_real_roots(p: IntPolynomial, q: IntPolynomial) -> Ordering:
    return root_comparison(p, q).ordering
