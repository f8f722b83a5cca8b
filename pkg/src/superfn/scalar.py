"""Exact Gaussian-rational arithmetic.

Every coefficient in this package is a :class:`Scalar`, an element of Q(i)
stored as an exact real and imaginary rational part.  gmpy2 is used for the
rational backend when available; otherwise ``fractions.Fraction``.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as _rat
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as _rat

_RAT_ZERO = _rat(0)
_RAT_ONE = _rat(1)


class Scalar:
    """An exact Gaussian rational ``re + im*i``.  Immutable and hashable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _rat(re))
        object.__setattr__(self, "im", _rat(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @staticmethod
    def rational(p, q=1) -> "Scalar":
        return Scalar(_rat(p, q))

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __add__(self, other) -> "Scalar":
        other = _coerce(other)
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> "Scalar":
        other = _coerce(other)
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "Scalar":
        return _coerce(other) - self

    def __neg__(self) -> "Scalar":
        return Scalar(-self.re, -self.im)

    def __mul__(self, other) -> "Scalar":
        other = _coerce(other)
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Scalar":
        other = _coerce(other)
        den = other.re * other.re + other.im * other.im
        if den == 0:
            raise ZeroDivisionError("division by zero Scalar")
        return Scalar(
            (self.re * other.re + self.im * other.im) / den,
            (self.im * other.re - self.re * other.im) / den,
        )

    def __rtruediv__(self, other) -> "Scalar":
        return _coerce(other) / self

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return ONE / self ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def is_rational(self) -> bool:
        return self.im == 0

    def __repr__(self) -> str:
        return f"Scalar({self})"

    def __str__(self) -> str:
        if self.im == 0:
            return _rat_str(self.re)
        if self.re == 0:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{_rat_str(self.im)}*i"
        im = self.im
        op = "+" if im > 0 else "-"
        im_abs = im if im > 0 else -im
        im_part = "i" if im_abs == 1 else f"{_rat_str(im_abs)}*i"
        return f"{_rat_str(self.re)} {op} {im_part}"


def _coerce(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return Scalar(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Scalar")


def _rat_str(q) -> str:
    num, den = q.numerator, q.denominator
    if den == 1:
        return str(num)
    return f"{num}/{den}"


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def sign_pow(e: int) -> Scalar:
    """(-1)**e as a Scalar, for parity exponents."""
    return ONE if e % 2 == 0 else Scalar(-1)
