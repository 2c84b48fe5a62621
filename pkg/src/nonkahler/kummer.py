"""
Rational cohomology of the Kummer surface K and the automorphism induced by A.

H^2(K; Q) has dimension 22 and splits into the 16 classes dual to the
exceptional curves over the two-torsion points of T = C^2 / Z[i]^2, and a
6-dimensional block identified with the 2-forms on R^4.  An element
A of SL(2, Z[i]) acts by permuting the first block and by pullback of
2-forms along the realified matrix on the second.

Basis conventions (fixed for reproducible output):

* two-torsion point (u, v), u, v in {0, i, 1, 1+i}, indexed
  lexicographically by (Re u, Im u, Re v, Im v);
* 2-forms ordered e12, e13, e14, e23, e24, e34;
* the 22-dimensional space is divisor block first, then the 2-form block.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product as iproduct

from .exact import (
    GaussianInt,
    IntPolynomial,
    RationalMatrix,
    char_poly,
    cyclotomic_factors,
    cyclotomic_split,
    kernel_basis,
    rank,
    symmetric_signature,
    sturm_isolate_real_roots,
)
from .exact.roots import IsolatingInterval
from .exact.poly import product as poly_product


class InvalidInputError(ValueError):
    """The input matrix is not in SL(2, Z[i])."""


class ConsistencyError(RuntimeError):
    """An identity that must hold by construction failed."""


N_POINTS = 16
N_FORMS = 6
H2_DIM = N_POINTS + N_FORMS

WEDGE_PAIRS = tuple(combinations(range(4), 2))  # (0,1), (0,2), (0,3), (1,2), (1,3), (2,3)
WEDGE_LABELS = tuple("e%d%d" % (i + 1, j + 1) for i, j in WEDGE_PAIRS)

# Re and Im of dz1 ^ dz2 with z1 = x1 + i x2, z2 = x3 + i x4
THETA_FORM = (0, 1, 0, 0, -1, 0)
ETA_FORM = (0, 0, 1, 1, 0, 0)


@dataclass(frozen=True)
class GaussianMatrix2:
    a11: GaussianInt
    a12: GaussianInt
    a21: GaussianInt
    a22: GaussianInt

    def __post_init__(self):
        for name in ("a11", "a12", "a21", "a22"):
            object.__setattr__(self, name, GaussianInt.coerce(getattr(self, name)))
        d = self.det()
        if d != GaussianInt(1, 0):
            raise InvalidInputError("determinant must be 1, got %s" % d)

    @classmethod
    def from_rows(cls, rows) -> "GaussianMatrix2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def identity(cls) -> "GaussianMatrix2":
        return cls(1, 0, 0, 1)

    def det(self) -> GaussianInt:
        return self.a11 * self.a22 - self.a12 * self.a21

    @property
    def entries(self) -> tuple[GaussianInt, ...]:
        return (self.a11, self.a12, self.a21, self.a22)

    def rows(self):
        return ((self.a11, self.a12), (self.a21, self.a22))

    def trace(self) -> GaussianInt:
        return self.a11 + self.a22

    def trace_norm_squared(self) -> int:
        """|tr A|^2 as an exact integer."""
        return self.trace().norm()

    def passes_gate(self) -> bool:
        return self.trace_norm_squared() > 4

    def height(self) -> int:
        return max(e.height() for e in self.entries)

    def sort_key(self) -> tuple[int, ...]:
        return tuple(x for e in self.entries for x in (e.re, e.im))

    def __neg__(self) -> "GaussianMatrix2":
        return GaussianMatrix2(-self.a11, -self.a12, -self.a21, -self.a22)

    def apply(self, u: GaussianInt, v: GaussianInt) -> tuple[GaussianInt, GaussianInt]:
        return (self.a11 * u + self.a12 * v, self.a21 * u + self.a22 * v)

    def __str__(self):
        return "%s,%s;%s,%s" % self.entries


def _j_matrix() -> RationalMatrix:
    return RationalMatrix.from_rows([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])


@dataclass(frozen=True)
class RealifiedAction:
    """The 4x4 integer matrix of A acting on C^2 = R^4."""

    m: RationalMatrix

    def __post_init__(self):
        from .exact import det
        if self.m.shape != (4, 4) or not self.m.is_integral():
            raise InvalidInputError("realified action must be a 4x4 integer matrix")
        if det(self.m) != 1:
            raise InvalidInputError("realified action has determinant %s" % det(self.m))
        j = _j_matrix()
        if self.m @ j != j @ self.m:
            raise InvalidInputError("realified action does not commute with J")


def _realify_entry(z: GaussianInt):
    return ((z.re, -z.im), (z.im, z.re))


def realify(a: GaussianMatrix2) -> RealifiedAction:
    """Replace each entry x+yi by the block [[x, -y], [y, x]]."""
    if a.det() != GaussianInt(1, 0):
        raise InvalidInputError("determinant must be 1, got %s" % a.det())
    rows = [[0] * 4 for _ in range(4)]
    for bi, brow in enumerate(a.rows()):
        for bj, z in enumerate(brow):
            blk = _realify_entry(z)
            for i in range(2):
                for j in range(2):
                    rows[2 * bi + i][2 * bj + j] = blk[i][j]
    return RealifiedAction(RationalMatrix.from_rows(rows))


# two-torsion points, lexicographic in (Re u, Im u, Re v, Im v)
POINT_LABELS: tuple[tuple[GaussianInt, GaussianInt], ...] = tuple(
    (GaussianInt(ur, ui), GaussianInt(vr, vi))
    for ur, ui, vr, vi in iproduct((0, 1), repeat=4)
)


def _point_index(u: GaussianInt, v: GaussianInt) -> int:
    ur, ui = u.mod2()
    vr, vi = v.mod2()
    return 8 * ur + 4 * ui + 2 * vr + vi


@dataclass(frozen=True)
class TwoTorsionPermutation:
    """images[j] = k when A maps the point w_j to w_k."""

    images: tuple[int, ...]
    point_labels: tuple = field(default=POINT_LABELS, repr=False)

    def __post_init__(self):
        if sorted(self.images) != list(range(N_POINTS)):
            raise ConsistencyError("not a permutation of the 16 points: %s" % (self.images,))
        if self.images[0] != 0:
            raise ConsistencyError("the origin must be fixed")

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(N_POINTS):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths, ascending."""
        return tuple(sorted(len(c) for c in self.cycles()))

    def char_poly(self) -> IntPolynomial:
        """prod over cycles of (t^len - 1)."""
        return poly_product(IntPolynomial((-1,) + (0,) * (n - 1) + (1,)) for n in self.cycle_type())

    def pullback_matrix(self) -> RationalMatrix:
        """Matrix of the pullback on divisor classes: column images[j] has its 1 in row j."""
        rows = [[0] * N_POINTS for _ in range(N_POINTS)]
        for j, k in enumerate(self.images):
            rows[j][k] = 1
        return RationalMatrix.from_rows(rows)


def two_torsion_permutation(a: GaussianMatrix2) -> TwoTorsionPermutation:
    images = []
    for u, v in POINT_LABELS:
        x, y = a.apply(u, v)
        images.append(_point_index(x, y))
    return TwoTorsionPermutation(tuple(images))


def exterior_square_action(r: RealifiedAction) -> RationalMatrix:
    """
    Pullback of 2-forms along r in the basis e12, e13, e14, e23, e24, e34.

    (r* e^i ^ e^j) = sum_{k<l} minor(rows i,j; cols k,l) e^k ^ e^l, so the
    matrix is the transposed second compound of r.
    """
    m = r.m
    rows = [[0] * N_FORMS for _ in range(N_FORMS)]
    for col, (i, j) in enumerate(WEDGE_PAIRS):
        for row, (k, l) in enumerate(WEDGE_PAIRS):
            rows[row][col] = m[i, k] * m[j, l] - m[i, l] * m[j, k]
    return RationalMatrix.from_rows(rows)


def wedge_pairing() -> RationalMatrix:
    """Symmetric matrix of (a, b) -> (a ^ b) / (e1 ^ e2 ^ e3 ^ e4) on 2-forms."""
    q = [[0] * N_FORMS for _ in range(N_FORMS)]
    for x, (i, j) in enumerate(WEDGE_PAIRS):
        for y, (k, l) in enumerate(WEDGE_PAIRS):
            idx = (i, j, k, l)
            if len(set(idx)) < 4:
                continue
            # sign of the permutation sorting (i, j, k, l)
            inversions = sum(1 for s in range(4) for t in range(s + 1, 4) if idx[s] > idx[t])
            q[x][y] = -1 if inversions % 2 else 1
    return RationalMatrix.from_rows(q)


@dataclass(frozen=True)
class IntersectionForm:
    """
    Cup-product pairing on H^2(K; Q).

    -divisor_scale * I on the exceptional classes, torus_scale times the
    wedge pairing on 2-forms.  The defaults give the -2-curve convention and
    the doubled torus form; only positivity of the two scales matters for
    any of the rank computations downstream.
    """

    divisor_scale: Fraction = Fraction(2)
    torus_scale: Fraction = Fraction(2)

    def __post_init__(self):
        object.__setattr__(self, "divisor_scale", Fraction(self.divisor_scale))
        object.__setattr__(self, "torus_scale", Fraction(self.torus_scale))
        if self.divisor_scale <= 0 or self.torus_scale <= 0:
            raise ValueError("intersection form scales must be positive")

    @cached_property
    def q(self) -> RationalMatrix:
        div = RationalMatrix.identity(N_POINTS).scale(-self.divisor_scale)
        return RationalMatrix.block_diag(div, wedge_pairing().scale(self.torus_scale))

    def pair(self, x, y):
        q = self.q
        return sum(xi * q[i, j] * y[j] for i, xi in enumerate(x) if xi
                   for j in range(len(y)) if y[j] and q[i, j])

    def signature(self) -> tuple[int, int]:
        pos, neg, zero = symmetric_signature(self.q)
        if zero:
            raise ConsistencyError("intersection form is degenerate")
        return pos, neg


DEFAULT_FORM = IntersectionForm()


def theta_class() -> tuple[int, ...]:
    return (0,) * N_POINTS + THETA_FORM


def eta_class() -> tuple[int, ...]:
    return (0,) * N_POINTS + ETA_FORM


@dataclass(frozen=True)
class KummerAction:
    perm: TwoTorsionPermutation
    perm_block: RationalMatrix
    ext_block: RationalMatrix
    form: IntersectionForm = DEFAULT_FORM

    @cached_property
    def matrix(self) -> RationalMatrix:
        return RationalMatrix.block_diag(self.perm_block, self.ext_block)

    @property
    def dim(self) -> int:
        return H2_DIM

    def char_poly(self) -> IntPolynomial:
        """Characteristic polynomial assembled from the two diagonal blocks."""
        return self.perm.char_poly() * char_poly(self.ext_block)

    def preserves_form(self) -> bool:
        g, q = self.matrix, self.form.q
        return g.T @ q @ g == q

    def with_form(self, form: IntersectionForm) -> "KummerAction":
        return KummerAction(self.perm, self.perm_block, self.ext_block, form)


def kummer_action(a: GaussianMatrix2, form: IntersectionForm = DEFAULT_FORM) -> KummerAction:
    perm = two_torsion_permutation(a)
    return KummerAction(perm, perm.pullback_matrix(), exterior_square_action(realify(a)), form)


@dataclass(frozen=True)
class FixedSubspace:
    basis: tuple[tuple, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def fixed_subspace(g: KummerAction | RationalMatrix) -> FixedSubspace:
    m = g.matrix if isinstance(g, KummerAction) else g
    return FixedSubspace(tuple(kernel_basis(m - RationalMatrix.identity(m.rows))))


def semisimple_at_one(m: RationalMatrix) -> bool:
    """ker(m - I)^2 == ker(m - I), i.e. no Jordan block of size > 1 for eigenvalue 1."""
    n = m.rows
    d = m - RationalMatrix.identity(n)
    return rank(d) == rank(d @ d)


@dataclass(frozen=True)
class EigenProfile:
    char_poly: IntPolynomial
    cyclotomic_part: IntPolynomial
    rest: IntPolynomial
    cyclotomic_multiplicities: dict
    large_root: IsolatingInterval | None
    small_root: IsolatingInterval | None
    semisimple_at_one: bool

    @property
    def unit_modulus_count(self) -> int:
        """Eigenvalues on the unit circle, with multiplicity."""
        off = 2 if self.large_root is not None else 0
        return self.char_poly.degree - off


def eigen_profile(g: KummerAction, a: GaussianMatrix2, width=Fraction(1, 1000)) -> EigenProfile:
    p = char_poly(g.matrix)
    if p != g.char_poly():
        raise ConsistencyError("block and full characteristic polynomials disagree")
    cyc, rest = cyclotomic_split(p)
    large = small = None
    if a.passes_gate():
        large, small = reciprocal_root_pair(rest, width)
    return EigenProfile(p, cyc, rest, cyclotomic_factors(p), large, small,
                        semisimple_at_one(g.matrix))


def reciprocal_root_pair(rest: IntPolynomial, width=Fraction(1, 1000)):
    """
    Isolating intervals for the real roots r > 1 > 1/r of a non-cyclotomic factor.

    Raises ConsistencyError unless there are exactly two real roots, one on
    each side of 1.
    """
    if rest.degree <= 0:
        raise ConsistencyError("no non-cyclotomic factor: all eigenvalues are roots of unity")
    roots = sturm_isolate_real_roots(rest)
    if len(roots) != 2 or rest(1) == 0:
        raise ConsistencyError("expected exactly two real roots off the unit circle, got %d" % len(roots))
    small, large = (iv.refine_past(1) for iv in roots)
    if not (small.hi < 1 < large.lo):
        raise ConsistencyError("real roots are not a reciprocal pair straddling 1")
    small = small.refine_past(0)
    if small.hi < 0:
        raise ConsistencyError("small real root is negative")
    return large.refine(width), small.refine(width)
