"""Gaussian integers Z[i] with exact arithmetic."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class GaussianInt:
    re: int = 0
    im: int = 0

    def __post_init__(self):
        if not isinstance(self.re, int) or not isinstance(self.im, int):
            raise TypeError("GaussianInt parts must be int, got %r, %r" % (self.re, self.im))

    @classmethod
    def coerce(cls, x) -> "GaussianInt":
        if isinstance(x, GaussianInt):
            return x
        if isinstance(x, bool):
            raise TypeError("bool is not a Gaussian integer")
        if isinstance(x, int):
            return cls(x, 0)
        if isinstance(x, tuple) and len(x) == 2:
            return cls(int(x[0]), int(x[1]))
        if isinstance(x, complex):
            if x.real != int(x.real) or x.imag != int(x.imag):
                raise ValueError("complex %r has non-integral parts" % (x,))
            return cls(int(x.real), int(x.imag))
        raise TypeError("cannot interpret %r as a Gaussian integer" % (x,))

    def __add__(self, other):
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussianInt.coerce(other) - self

    def __mul__(self, other):
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def conj(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def height(self) -> int:
        return max(abs(self.re), abs(self.im))

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def exact_div(self, other) -> "GaussianInt | None":
        """Return self/other if it lies in Z[i], else None."""
        o = GaussianInt.coerce(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian integer")
        num = self * o.conj()
        if num.re % n or num.im % n:
            return None
        return GaussianInt(num.re // n, num.im // n)

    def mod2(self) -> tuple[int, int]:
        """Residue class modulo 2Z[i] as (re mod 2, im mod 2)."""
        return (self.re % 2, self.im % 2)

    def __complex__(self):
        return complex(self.re, self.im)

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.im == 1:
            ipart = "i"
        elif self.im == -1:
            ipart = "-i"
        else:
            ipart = "%di" % self.im
        if self.re == 0:
            return ipart
        if self.im > 0:
            return "%d+%s" % (self.re, ipart)
        return "%d%s" % (self.re, ipart)

    def __repr__(self):
        return "GaussianInt(%r)" % str(self)
