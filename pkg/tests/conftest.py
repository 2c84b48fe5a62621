"""
Independent oracles used across the suite.

Nothing here calls the exact kernel: char polys come from sympy,
spectra from numpy, and the two-torsion action from plain complex
arithmetic on half-lattice points.
"""

from __future__ import annotations

import functools
import itertools
import random

import numpy as np
import pytest
import sympy

from nonkahler.kummer import GaussianMatrix2

T = sympy.Symbol("t")

FAMILY = {n: "1,%d;1,%d" % (n - 2, n - 1) for n in range(3, 7)}
SPOT_MATRICES = ["1+1i,1i;1,1", "2,-1+4i;1,2i"] + [FAMILY[n] for n in range(3, 7)]


def sympy_charpoly(rows) -> list[int]:
    """Ascending integer coefficients of det(tI - M)."""
    p = sympy.Matrix(rows).charpoly(T)
    return [int(c) for c in reversed(p.all_coeffs())]


def sympy_poly(coeffs) -> sympy.Poly:
    return sympy.Poly(list(reversed(coeffs)), T)


def sympy_cyclotomic_split(coeffs):
    """(cyclotomic product, remaining factor) as ascending lists, via full factorization over Q."""
    _, factors = sympy.factor_list(sympy_poly(coeffs).as_expr(), T)
    cyc, rest = sympy.Integer(1), sympy.Integer(1)
    for f, k in factors:
        fp = sympy.Poly(f, T)
        roots = np.roots([float(c) for c in fp.all_coeffs()])
        is_cyclo = fp.is_monic and all(abs(abs(r) - 1) < 1e-9 for r in roots) and \
            abs(int(fp.all_coeffs()[-1])) == 1
        # Kronecker: monic integer with all roots on the unit circle => cyclotomic
        if is_cyclo:
            cyc *= f ** k
        else:
            rest *= f ** k
    as_list = lambda e: [int(c) for c in reversed(sympy.Poly(e, T).all_coeffs())]
    return as_list(cyc), as_list(rest)


def float_matrix(m) -> np.ndarray:
    return np.array([[float(x) for x in row] for row in m.tolist()])


def numeric_nullity(m, tol=1e-8) -> int:
    a = float_matrix(m)
    return a.shape[1] - int(np.linalg.matrix_rank(a, tol=tol))


def half_point_images(a: GaussianMatrix2) -> list[int]:
    """Two-torsion permutation from complex arithmetic on points of (1/2)Z[i]^2 mod Z[i]^2."""
    pts = [(complex(x, y) / 2, complex(z, w) / 2)
           for x, y, z, w in itertools.product((0, 1), repeat=4)]

    def reduce(c: complex) -> tuple[int, int]:
        return (round(2 * c.real) % 2, round(2 * c.imag) % 2)

    ent = [complex(e.re, e.im) for e in a.entries]
    keys = [reduce(u) + reduce(v) for u, v in pts]
    out = []
    for u, v in pts:
        img = reduce(ent[0] * u + ent[1] * v) + reduce(ent[2] * u + ent[3] * v)
        out.append(keys.index(img))
    return out


def brute_force_gated(h: int) -> list[tuple]:
    """Every 4-tuple of Gaussian integers of height <= h with det 1 and |tr|^2 > 4."""
    vals = [complex(x, y) for x in range(-h, h + 1) for y in range(-h, h + 1)]
    out = []
    for a, b, c, d in itertools.product(vals, repeat=4):
        if a * d - b * c == 1 and abs(a + d) ** 2 > 4:
            out.append((a, b, c, d))
    return out


def as_gaussian_matrix(t) -> GaussianMatrix2:
    return GaussianMatrix2(*[(int(z.real), int(z.imag)) for z in t])


@functools.lru_cache(maxsize=None)
def gated_pool(h: int = 3) -> tuple[GaussianMatrix2, ...]:
    from nonkahler.certify import sl2_candidates
    return tuple(a for a in sl2_candidates(h) if a.passes_gate())


def random_gated(n: int, h: int = 3, seed: int = 20240611) -> list[GaussianMatrix2]:
    """Rejection sampling of gated SL(2, Z[i]) matrices: draw a11, a12, a21, solve for a22."""
    from nonkahler.exact import GaussianInt
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        a, b, c = (GaussianInt(rng.randint(-h, h), rng.randint(-h, h)) for _ in range(3))
        if a.is_zero():
            continue
        d = (GaussianInt(1, 0) + b * c).exact_div(a)
        if d is None or d.height() > h:
            continue
        m = GaussianMatrix2(a, b, c, d)
        if m.passes_gate():
            out.append(m)
    return out


@pytest.fixture(scope="session")
def pool():
    return gated_pool(3)


# --------------------------------------------------------------------------- acceptance summary

ACCEPTANCE_LINES: dict[int, str] = {}


def record_criterion(number: int, title: str, ok: bool, detail: str = "") -> str:
    line = "criterion %d [%s] %s%s" % (number, "PASS" if ok else "FAIL", title,
                                       (": " + detail) if detail else "")
    ACCEPTANCE_LINES[number] = line
    print(line)
    return line


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
