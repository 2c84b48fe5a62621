"""
Matrix text format.

    matrix := row ';' row
    row    := entry ',' entry
    entry  := int | [int] 'i' | int ('+' | '-') [int] 'i'
    int    := ['-'] digit+

Whitespace anywhere is ignored; an omitted imaginary coefficient means 1.
"""

from __future__ import annotations

from .exact import GaussianInt
from .kummer import GaussianMatrix2, InvalidInputError


class MatrixSyntaxError(InvalidInputError):
    def __init__(self, text: str, position: int, reason: str):
        super().__init__("syntax error at position %d in %r: %s" % (position, text, reason))
        self.position = position


class DeterminantError(InvalidInputError):
    def __init__(self, text: str, determinant: GaussianInt):
        super().__init__("determinant of %r is %s, expected 1" % (text, determinant))
        self.determinant = determinant


class _Cursor:
    """Walks the non-whitespace characters of the source, remembering original positions."""

    def __init__(self, text: str):
        self.text = text
        self.chars = [(i, c) for i, c in enumerate(text) if not c.isspace()]
        self.k = 0

    def peek(self) -> str:
        return self.chars[self.k][1] if self.k < len(self.chars) else ""

    def pos(self) -> int:
        return self.chars[self.k][0] if self.k < len(self.chars) else len(self.text)

    def take(self) -> str:
        c = self.peek()
        self.k += 1
        return c

    def digits(self) -> str:
        out = ""
        while self.peek().isdigit() and self.peek().isascii():
            out += self.take()
        return out

    def fail(self, reason: str):
        raise MatrixSyntaxError(self.text, self.pos(), reason)


def _entry(cur: _Cursor) -> GaussianInt:
    sign = -1 if cur.peek() == "-" else 1
    if sign < 0:
        cur.take()
    num = cur.digits()
    if cur.peek() == "i":
        cur.take()
        return GaussianInt(0, sign * (int(num) if num else 1))
    if not num:
        cur.fail("expected a digit or 'i'")
    re = sign * int(num)
    if cur.peek() not in ("+", "-"):
        return GaussianInt(re, 0)
    isign = 1 if cur.take() == "+" else -1
    inum = cur.digits()
    if cur.peek() != "i":
        cur.fail("expected 'i' after imaginary coefficient")
    cur.take()
    return GaussianInt(re, isign * (int(inum) if inum else 1))


def parse_entries(text: str) -> tuple[GaussianInt, ...]:
    """The four entries in row-major order, without any determinant check."""
    cur = _Cursor(text)
    out = []
    for sep in (",", ";", ",", ""):
        out.append(_entry(cur))
        if sep:
            if cur.peek() != sep:
                cur.fail("expected %r" % sep)
            cur.take()
    if cur.peek():
        cur.fail("unexpected trailing input")
    return tuple(out)


def parse_matrix(text: str) -> GaussianMatrix2:
    a, b, c, d = parse_entries(text)
    det = a * d - b * c
    if det != GaussianInt(1, 0):
        raise DeterminantError(text, det)
    return GaussianMatrix2(a, b, c, d)


def render_gaussian(z: GaussianInt) -> str:
    return str(z)


def render_matrix(a: GaussianMatrix2) -> str:
    return "%s,%s;%s,%s" % tuple(render_gaussian(z) for z in a.entries)
