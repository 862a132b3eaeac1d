"""Exact arithmetic in Q(rho), where rho is the larger root of
x**2 - (n-2)x + 1 for odd n >= 5.

Elements are a + b*rho with rational a, b.  The ring structure is enough to
evaluate every closed form exactly; rationality of an end result (b == 0)
is a theorem being checked, not an assumption.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = ["QuadElem", "rho_element", "delta_element"]

_Rat = (int, Fraction)


class QuadElem:
    """a + b*rho with rational coefficients, reduced via rho**2 = (n-2)rho - 1."""

    __slots__ = ("n", "a", "b")

    def __init__(self, n: int, a, b=0) -> None:
        if n < 5 or n % 2 == 0:
            raise ValueError(f"field parameter must be an odd integer >= 5, got {n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("QuadElem is immutable")

    def _coerce(self, other) -> "QuadElem | None":
        if isinstance(other, QuadElem):
            if other.n != self.n:
                raise ValueError(f"mixed field parameters {self.n} and {other.n}")
            return other
        if isinstance(other, _Rat):
            return QuadElem(self.n, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.n, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(self.n, -self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.n, self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (a + b rho)(c + d rho) with rho^2 = (n-2)rho - 1
        a, b, c, d = self.a, self.b, o.a, o.b
        return QuadElem(self.n, a * c - b * d, a * d + b * c + b * d * (self.n - 2))

    __rmul__ = __mul__

    def conjugate(self) -> "QuadElem":
        """Image under rho -> (n-2) - rho, the other root."""
        return QuadElem(self.n, self.a + self.b * (self.n - 2), -self.b)

    def norm(self) -> Fraction:
        """self * conjugate, always rational; zero only for the zero element."""
        a, b = self.a, self.b
        return a * a + (self.n - 2) * a * b + b * b

    def inverse(self) -> "QuadElem":
        nrm = self.norm()
        if nrm == 0:
            raise ZeroDivisionError("inverse of zero in Q(rho)")
        conj = self.conjugate()
        return QuadElem(self.n, conj.a / nrm, conj.b / nrm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = QuadElem(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, _Rat):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadElem):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return self.n == other.n and self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.n, self.a, self.b))

    def __repr__(self):
        return f"QuadElem(n={self.n}, {self.a} + {self.b}*rho)"

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self!r} has a nonzero irrational part")
        return self.a

    def as_integer(self) -> int:
        frac = self.as_fraction()
        if frac.denominator != 1:
            raise ValueError(f"{self!r} is rational but not an integer")
        return int(frac)

    def embed(self) -> float:
        """Float value under rho = (n-2 + sqrt(n(n-4)))/2."""
        rho = (self.n - 2 + math.sqrt(self.n * (self.n - 4))) / 2
        return float(self.a) + float(self.b) * rho


def rho_element(n: int) -> QuadElem:
    return QuadElem(n, 0, 1)


def delta_element(n: int) -> QuadElem:
    """sqrt(n(n-4)) expressed in the field: rho - 1/rho = 2*rho - (n-2)."""
    return QuadElem(n, -(n - 2), 2)
