"""
Cyclotomic factors of integer polynomials.

By Kronecker's theorem a monic integer polynomial whose roots all lie on
the unit circle is a product of cyclotomic polynomials, so an integer
matrix is quasi-unipotent exactly when its characteristic polynomial
splits completely into factors Phi_n.  Detection is by trial division
against every Phi_n with phi(n) <= deg p.
"""

from __future__ import annotations

from functools import lru_cache

from .linalg import RationalMatrix, char_poly, DimensionError
from .poly import IntPolynomial, product


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> IntPolynomial:
    """Phi_n, via t^n - 1 = prod_{d | n} Phi_d."""
    if n < 1:
        raise ValueError("Phi_n needs n >= 1")
    num = IntPolynomial((-1,) + (0,) * (n - 1) + (1,))
    den = product(cyclotomic_polynomial(d) for d in range(1, n) if n % d == 0)
    return num.exact_div(den)


@lru_cache(maxsize=None)
def cyclotomic_indices(max_degree: int) -> tuple[int, ...]:
    """All n with phi(n) <= max_degree, ascending.

    phi(n) >= sqrt(n / 2) for every n, so n <= 2 * max_degree**2 suffices.
    """
    limit = max(2, 2 * max_degree * max_degree)
    return tuple(n for n in range(1, limit + 1) if totient(n) <= max_degree)


def cyclotomic_factors(p: IntPolynomial) -> dict[int, int]:
    """Multiplicity of each Phi_n dividing p."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    found = {}
    rest = p
    for n in cyclotomic_indices(max(p.degree, 0)):
        phi = cyclotomic_polynomial(n)
        if phi.degree > rest.degree:
            continue
        while True:
            q = rest.try_div(phi)
            if q is None:
                break
            found[n] = found.get(n, 0) + 1
            rest = q
    return found


def cyclotomic_split(p: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """
    Split p = cyclotomic_part * rest.

    cyclotomic_part is the maximal monic product of cyclotomic polynomials
    dividing p; rest carries everything else, including p's content and sign.
    """
    factors = cyclotomic_factors(p)
    cyc = product(cyclotomic_polynomial(n) ** k for n, k in sorted(factors.items()))
    return cyc, p.exact_div(cyc)


def is_quasi_unipotent(m: RationalMatrix) -> bool:
    if not m.is_square():
        raise DimensionError("expected a square matrix, got %dx%d" % m.shape)
    if not m.is_integral():
        raise ValueError("quasi-unipotence test needs an integer matrix")
    _, rest = cyclotomic_split(char_poly(m))
    return rest.degree == 0
