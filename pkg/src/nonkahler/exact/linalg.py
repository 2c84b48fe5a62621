"""
Exact linear algebra over Q.

Matrices are immutable and row-major.  Entries are ``int`` or
``Fraction``; integer matrices stay integral under ring operations so
that characteristic polynomials of integer input can be computed in
plain integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .poly import IntPolynomial


class DimensionError(ValueError):
    """Raised when matrix shapes are incompatible with an operation."""


def _normalize(x):
    if isinstance(x, bool):
        raise TypeError("bool is not a matrix entry")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    raise TypeError("matrix entry %r is not int or Fraction" % (x,))


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative shape")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                "expected %d entries, got %d" % (self.rows * self.cols, len(self.entries))
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise DimensionError("ragged rows")
        return cls(n, m, tuple(_normalize(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int | None = None) -> "RationalMatrix":
        if not cols:
            return cls(nrows or 0, 0, ())
        return cls.from_rows(list(zip(*cols)))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "RationalMatrix":
        m = n if m is None else m
        return cls(n, m, (0,) * (n * m))

    @classmethod
    def block_diag(cls, *blocks: "RationalMatrix") -> "RationalMatrix":
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[0] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r0 + i][c0 + j] = b[i, j]
            r0 += b.rows
            c0 += b.cols
        return cls.from_rows(out) if n else cls(0, m, ())

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_integral(self) -> bool:
        return all(isinstance(x, int) for x in self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return self.entries[j::self.cols] if self.cols else ()

    def tolist(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            self.cols, self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    @property
    def T(self) -> "RationalMatrix":
        return self.transpose()

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionError("shape mismatch %s vs %s" % (self.shape, other.shape))

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_shape(other)
        return RationalMatrix(self.rows, self.cols,
                              tuple(_normalize(a + b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_shape(other)
        return RationalMatrix(self.rows, self.cols,
                              tuple(_normalize(a - b) for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        return RationalMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> "RationalMatrix":
        return RationalMatrix(self.rows, self.cols, tuple(_normalize(c * a) for a in self.entries))

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.cols != other.rows:
                raise DimensionError("cannot multiply %s by %s" % (self.shape, other.shape))
            ocols = [other.column(j) for j in range(other.cols)]
            out = []
            for i in range(self.rows):
                r = self.row(i)
                for col in ocols:
                    out.append(_normalize(sum(a * b for a, b in zip(r, col) if a and b)))
            return RationalMatrix(self.rows, other.cols, tuple(out))
        vec = list(other)
        if len(vec) != self.cols:
            raise DimensionError("vector length %d, expected %d" % (len(vec), self.cols))
        return tuple(_normalize(sum(a * b for a, b in zip(self.row(i), vec) if a and b))
                     for i in range(self.rows))

    def __pow__(self, k: int) -> "RationalMatrix":
        if not self.is_square():
            raise DimensionError("power of non-square matrix")
        result = RationalMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def trace(self):
        if not self.is_square():
            raise DimensionError("trace of non-square matrix")
        return _normalize(sum(self[i, i] for i in range(self.rows)))

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "RationalMatrix":
        rows, cols = list(rows), list(cols)
        return RationalMatrix(len(rows), len(cols), tuple(self[i, j] for i in rows for j in cols))

    def __str__(self):
        return "\n".join("[" + " ".join("%4s" % x for x in self.row(i)) + "]" for i in range(self.rows))


def _require_square(m: RationalMatrix):
    if not m.is_square():
        raise DimensionError("expected a square matrix, got %dx%d" % m.shape)


def rref(m: RationalMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns (Gauss-Jordan over Q)."""
    a = [[Fraction(x) for x in m.row(i)] for i in range(m.rows)]
    pivots = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        p = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                ri = a[i]
                rr = a[r]
                a[i] = [x - f * y for x, y in zip(ri, rr)]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: RationalMatrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: RationalMatrix) -> list[tuple]:
    """
    Basis of the right kernel {v : m v = 0}.

    One vector per free column f of the reduced echelon form, with a 1 in
    position f and zeros in every other free position, so the output is
    canonical for a given matrix.
    """
    _require_square(m)
    a, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -a[r][f]
        basis.append(tuple(_normalize(x) for x in v))
    return basis


def nullity(m: RationalMatrix) -> int:
    return m.cols - rank(m)


def solve_in_span(basis: Sequence[Sequence], target: Sequence) -> tuple | None:
    """Coefficients c with sum c_i basis_i = target, or None if target is outside the span."""
    if not basis:
        return () if not any(target) else None
    n = len(target)
    k = len(basis)
    aug = RationalMatrix.from_rows([[basis[j][i] for j in range(k)] + [target[i]] for i in range(n)])
    a, pivots = rref(aug)
    if k in pivots:
        return None
    coeffs = [Fraction(0)] * k
    for r, p in enumerate(pivots):
        coeffs[p] = a[r][k]
    if rank(RationalMatrix.from_columns([list(b) for b in basis])) != k:
        raise ValueError("basis vectors are linearly dependent")
    return tuple(_normalize(c) for c in coeffs)


def det(m: RationalMatrix):
    """Determinant by fraction-free Bareiss elimination."""
    _require_square(m)
    n = m.rows
    if n == 0:
        return 1
    a = [[Fraction(x) for x in m.row(i)] for i in range(n)]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if p is None:
                return 0
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return _normalize(sign * a[n - 1][n - 1])


def char_poly(m: RationalMatrix):
    """
    det(tI - m) by the Faddeev-LeVerrier recurrence.

    Integer input is processed in integer arithmetic (every division in the
    recurrence is exact) and returns an :class:`IntPolynomial`.  Rational
    input returns the monic coefficient tuple of Fractions, constant first.
    """
    _require_square(m)
    n = m.rows
    integral = m.is_integral()
    a = [list(m.row(i)) if integral else [Fraction(x) for x in m.row(i)] for i in range(n)]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # mk <- a @ mk + c_{n-k+1} I
        c_prev = coeffs[n - k + 1]
        if k == 1:
            mk = [[c_prev if i == j else 0 for j in range(n)] for i in range(n)]
        else:
            mcols = list(zip(*mk))
            new = []
            for i in range(n):
                ai = a[i]
                row = [sum(x * y for x, y in zip(ai, col) if x and y) for col in mcols]
                row[i] += c_prev
                new.append(row)
            mk = new
        tr = 0
        for i in range(n):
            ai = a[i]
            tr += sum(ai[j] * mk[j][i] for j in range(n) if ai[j])
        if integral:
            if tr % k:
                raise ArithmeticError("non-exact division in Faddeev-LeVerrier")
            coeffs[n - k] = -tr // k
        else:
            coeffs[n - k] = Fraction(-tr, 1) / k
    if integral:
        return IntPolynomial(coeffs)
    return tuple(Fraction(c) for c in coeffs)


def symmetric_signature(q: RationalMatrix) -> tuple[int, int, int]:
    """
    (positive, negative, zero) inertia of a symmetric matrix.

    Exact congruence diagonalization: symmetric row/column elimination,
    using a combination e_i + e_j as pivot when the diagonal vanishes.
    """
    _require_square(q)
    n = q.rows
    a = [[Fraction(x) for x in q.row(i)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric")
    diag = []
    active = list(range(n))
    while active:
        k = next((i for i in active if a[i][i] != 0), None)
        if k is None:
            pair = next(((i, j) for i in active for j in active if i < j and a[i][j] != 0), None)
            if pair is None:
                diag.extend([Fraction(0)] * len(active))
                break
            i, j = pair
            # congruence: row_i += row_j, col_i += col_j
            for c in range(n):
                a[i][c] += a[j][c]
            for r in range(n):
                a[r][i] += a[r][j]
            k = i
        piv = a[k][k]
        for r in active:
            if r == k or a[r][k] == 0:
                continue
            f = a[r][k] / piv
            for c in range(n):
                a[r][c] -= f * a[k][c]
            for c in range(n):
                a[c][r] -= f * a[c][k]
        diag.append(piv)
        active.remove(k)
    pos = sum(1 for d in diag if d > 0)
    neg = sum(1 for d in diag if d < 0)
    return pos, neg, n - pos - neg
