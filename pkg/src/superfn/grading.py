"""Index parities, weights, and the invariant form for gl(m|n).

Indices run 1..m+n; index ``a`` is even iff ``a <= m``.  A weight is a tuple
of m+n exact scalars in the epsilon basis; the invariant form is
``(eps_a, eps_b) = (-1)^{[a]} delta_ab``.
"""

from __future__ import annotations

from .scalar import Scalar, ZERO


class Dims:
    """Ambient size (m, n) of gl(m|n).  Indices are 1-based."""

    __slots__ = ("m", "n", "size")

    def __init__(self, m: int, n: int):
        if m < 0 or n < 0 or m + n == 0:
            raise ValueError(f"invalid dimensions ({m}, {n})")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "size", m + n)

    def __setattr__(self, name, value):
        raise AttributeError("Dims is immutable")

    def par(self, a: int) -> int:
        """Parity of index a: 0 if a <= m, else 1."""
        if not 1 <= a <= self.size:
            raise ValueError(f"index {a} out of range 1..{self.size}")
        return 0 if a <= self.m else 1

    def letter_par(self, a: int, b: int) -> int:
        """Parity of the elementary letter E_ab."""
        return self.par(a) ^ self.par(b)

    def indices(self) -> range:
        return range(1, self.size + 1)

    def __eq__(self, other):
        return (
            isinstance(other, Dims) and self.m == other.m and self.n == other.n
        )

    def __hash__(self):
        return hash((self.m, self.n))

    def __repr__(self):
        return f"Dims({self.m}, {self.n})"


def _as_scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    return Scalar(x)


def form(dims: Dims, lam, mu) -> Scalar:
    """Invariant bilinear form sum_a (-1)^{[a]} lam_a mu_a."""
    lam = [_as_scalar(x) for x in lam]
    mu = [_as_scalar(x) for x in mu]
    if len(lam) != dims.size or len(mu) != dims.size:
        raise ValueError("weight length must equal m+n")
    total = ZERO
    for a in dims.indices():
        term = lam[a - 1] * mu[a - 1]
        if dims.par(a):
            term = -term
        total = total + term
    return total


def is_dominant(dims: Dims, lam) -> bool:
    """Dominance: 2(lam, alpha_a)/(alpha_a, alpha_a) is a nonnegative integer
    for every simple root alpha_a = eps_a - eps_{a+1} with a != m.

    At a = m the form (alpha_m, alpha_m) vanishes, so that root imposes no
    condition.
    """
    lam = [_as_scalar(x) for x in lam]
    if len(lam) != dims.size:
        raise ValueError("weight length must equal m+n")
    for a in range(1, dims.size):
        if a == dims.m:
            continue
        alpha = [ZERO] * dims.size
        alpha[a - 1] = Scalar(1)
        alpha[a] = Scalar(-1)
        num = Scalar(2) * form(dims, lam, alpha)
        den = form(dims, alpha, alpha)
        q = num / den
        if not q.is_rational() or q.re.denominator != 1 or q.re < 0:
            return False
    return True
