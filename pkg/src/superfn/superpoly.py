"""Supercommutative polynomials in tagged generators.

A generator symbol is a tuple ``(tag, row, col, par)`` with ``tag`` a short
string (``"t"``, ``"tb"``, ``"x"``, ``"xb"``), 1-based indices, and ``par``
the symbol's parity.  Monomials are tuples of ``(symbol, exponent)`` pairs
with symbols strictly increasing in tuple order; odd symbols square to zero,
so their exponent is always 1.  Reordering two factors costs the Koszul sign
``(-1)^{[f][g]}``.

A :class:`Poly` is a finite Scalar-linear combination of monomials.  The
representation is independent of the ambient (m, n): parities are baked into
the symbols.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .scalar import Scalar, ZERO, ONE

Symbol = tuple  # (tag, row, col, par)
Monomial = tuple  # ((symbol, exp), ...)


def symbol(tag: str, row: int, col: int, par: int) -> Symbol:
    return (tag, row, col, par)


def _merge_monomials(m1: Monomial, m2: Monomial):
    """Concatenate two canonical monomials into canonical form.

    Returns ``(monomial, sign_parity)`` or ``None`` when an odd symbol would
    square.  ``sign_parity`` is 0/1: the Koszul sign is (-1)**sign_parity.
    """
    if not m1:
        return m2, 0
    if not m2:
        return m1, 0
    res = []
    sign = 0
    odd_rest = sum(1 for s, _ in m1 if s[3])
    i = j = 0
    n1, n2 = len(m1), len(m2)
    while i < n1 and j < n2:
        s1, e1 = m1[i]
        s2, e2 = m2[j]
        if s1 < s2:
            res.append(m1[i])
            if s1[3]:
                odd_rest -= 1
            i += 1
        elif s2 < s1:
            if s2[3]:
                sign ^= odd_rest & 1
            res.append(m2[j])
            j += 1
        else:
            if s1[3]:
                return None
            res.append((s1, e1 + e2))
            i += 1
            j += 1
    res.extend(m1[i:])
    res.extend(m2[j:])
    return tuple(res), sign


def monomial_parity(m: Monomial) -> int:
    return sum(1 for s, _ in m if s[3]) & 1


def monomial_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


class Poly:
    """Sparse supercommutative polynomial with exact coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[dict] = None):
        self.terms = terms if terms is not None else {}

    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def one() -> "Poly":
        return Poly({(): ONE})

    @staticmethod
    def from_scalar(c) -> "Poly":
        c = c if isinstance(c, Scalar) else Scalar(c)
        return Poly({(): c}) if c else Poly()

    @staticmethod
    def from_symbol(sym: Symbol) -> "Poly":
        return Poly({((sym, 1),): ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(monomial_degree(m) for m in self.terms)

    def parity(self) -> Optional[int]:
        """0 or 1 for homogeneous polynomials, None for mixed or zero."""
        pars = {monomial_parity(m) for m in self.terms}
        if len(pars) == 1:
            return pars.pop()
        return None

    def symbols(self) -> set:
        out = set()
        for m in self.terms:
            for s, _ in m:
                out.add(s)
        return out

    def coeff(self, m: Monomial) -> Scalar:
        return self.terms.get(m, ZERO)

    def constant_term(self) -> Scalar:
        return self.terms.get((), ZERO)

    def _add_term(self, m: Monomial, c: Scalar):
        cur = self.terms.get(m)
        tot = c if cur is None else cur + c
        if tot:
            self.terms[m] = tot
        elif cur is not None:
            del self.terms[m]

    def __add__(self, other: "Poly") -> "Poly":
        out = Poly(dict(self.terms))
        for m, c in other.terms.items():
            out._add_term(m, c)
        return out

    def __sub__(self, other: "Poly") -> "Poly":
        out = Poly(dict(self.terms))
        for m, c in other.terms.items():
            out._add_term(m, -c)
        return out

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def scale(self, c) -> "Poly":
        c = c if isinstance(c, Scalar) else Scalar(c)
        if not c:
            return Poly()
        return Poly({m: cc * c for m, cc in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        out = Poly()
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                merged = _merge_monomials(m1, m2)
                if merged is None:
                    continue
                mono, sgn = merged
                c = c1 * c2
                if sgn:
                    c = -c
                out._add_term(mono, c)
        return out

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def map_coeffs(self, fn) -> "Poly":
        out = Poly()
        for m, c in self.terms.items():
            out._add_term(m, fn(c))
        return out

    def pretty(self) -> str:
        return pretty(self)

    def __str__(self):
        return pretty(self)

    def __repr__(self):
        return f"Poly({pretty(self)})"


class DerivationSpec:
    """A homogeneous left superderivation, determined by generator images.

    ``apply`` extends the images by the graded Leibniz rule
    ``d(fg) = d(f) g + (-1)^{[d][f]} f d(g)``; generators without an image
    map to zero.
    """

    __slots__ = ("parity", "images")

    def __init__(self, parity: int, images: dict):
        self.parity = parity & 1
        self.images = images

    def apply(self, p: Poly) -> Poly:
        out = Poly()
        for m, c in p.terms.items():
            prefix_par = 0
            for idx in range(len(m)):
                s, e = m[idx]
                img = self.images.get(s)
                if img is not None and not img.is_zero():
                    coeff = c * Scalar(e)
                    if self.parity and prefix_par:
                        coeff = -coeff
                    rest = m[idx + 1:]
                    if e > 1:
                        rest = ((s, e - 1),) + rest
                    term = Poly({m[:idx]: coeff}) * img * Poly({rest: ONE})
                    for mm, cc in term.terms.items():
                        out._add_term(mm, cc)
                prefix_par ^= (e & 1) & s[3]
        return out


class StarSpec:
    """A conjugate-linear anti-automorphism, determined by generator images.

    ``apply`` conjugates coefficients and reverses products:
    ``(fg)* = g* f*`` with no extra sign.  Images must preserve parity;
    generators without an image map to themselves.
    """

    __slots__ = ("images",)

    def __init__(self, images: dict):
        self.images = images

    def apply(self, p: Poly) -> Poly:
        out = Poly()
        for m, c in p.terms.items():
            prod = Poly.from_scalar(c.conj())
            for s, e in reversed(m):
                img = self.images.get(s)
                if img is None:
                    img = Poly.from_symbol(s)
                for _ in range(e):
                    prod = prod * img
            for mm, cc in prod.terms.items():
                out._add_term(mm, cc)
        return out


def _scalar_body(c: Scalar):
    """Render a Scalar as (negative?, body-string) in CLI grammar."""
    if c.im == 0:
        neg = c.re < 0
        q = -c.re if neg else c.re
        return neg, _rat_body(q)
    if c.re == 0:
        neg = c.im < 0
        b = -c.im if neg else c.im
        if b == 1:
            return neg, "i"
        return neg, f"{_rat_body(b)}*i"
    # both parts nonzero: parenthesized sum, never negated from outside
    re_neg = c.re < 0
    re_q = -c.re if re_neg else c.re
    im_neg = c.im < 0
    im_q = -c.im if im_neg else c.im
    im_body = "i" if im_q == 1 else f"{_rat_body(im_q)}*i"
    head = f"-{_rat_body(re_q)}" if re_neg else _rat_body(re_q)
    op = "-" if im_neg else "+"
    return False, f"({head} {op} {im_body})"


def _rat_body(q) -> str:
    num, den = q.numerator, q.denominator
    return str(num) if den == 1 else f"{num}/{den}"


def pretty(p: Poly) -> str:
    """Render a Poly in the CLI expression grammar (re-parseable)."""
    if not p.terms:
        return "0"
    parts = []
    for m in sorted(p.terms, key=lambda mm: (monomial_degree(mm), mm)):
        c = p.terms[m]
        factors = []
        for s, e in m:
            name = f"{s[0]}[{s[1]},{s[2]}]"
            factors.append(name if e == 1 else f"{name}^{e}")
        if not factors:
            neg, body = _scalar_body(c)
        elif c == Scalar(1):
            neg, body = False, "*".join(factors)
        elif c == Scalar(-1):
            neg, body = True, "*".join(factors)
        else:
            neg, cbody = _scalar_body(c)
            body = "*".join([cbody] + factors)
        parts.append((neg, body))
    first_neg, first_body = parts[0]
    if first_neg:
        # a leading minus must start a scalar literal in the grammar
        out = "-" + first_body if first_body[0].isdigit() else "-1*" + first_body
    else:
        out = first_body
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out
