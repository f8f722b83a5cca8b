"""Left and right translation actions of U(gl(m|n)) on the function algebra.

For a letter ``x = E_ab`` and a generator ``g`` (t or tbar), the actions are
spliced mechanically out of the coproduct and the duality pairing:

    dR_x(g_cd) = (-1)^{[x][g]} sum_e sign(c,e,d) g_ce <g_ed, x>
    dL_x(g_cd) = -(-1)^{[x]}   sum_e <g_ce, x> sign(c,e,d) g_ed

with ``sign(c,e,d) = (-1)^{([e]+[c])([e]+[d])}`` the coproduct sign (the
antipode S(x) = -x accounts for the leading minus in dL).  Letters act as
superderivations of parity [x]; a word acts by composing its letters with
the rightmost letter applied first.  The two actions supercommute:
dL_x dR_y = (-1)^{[x][y]} dR_y dL_x.

The free coefficient algebra on tags ``x``/``xb`` carries the slot actions

    phi(u)(x_ab)  = (-1)^{[u]} x_{a, u.b}          (u acting in V)
    psi(u)(x_ab)  = (-1)^{[u][b]} x_{u.a, b}       (u acting in V*)
    phi(u)(xb_ab) = (-1)^{[u]} xb_{a, u.b}         (u acting in V*)
    psi(u)(xb_ab) = (-1)^{[u]([u]+[b])} xb_{u.a, b} (u acting in V)

and the tag-renaming isomorphism :func:`jmath` onto t/tbar intertwines
psi with dL and phi with dR.
"""

from __future__ import annotations

from .cg import CG, _pair_gen_letter, is_zero_mod_j
from .grading import Dims
from .scalar import Scalar, ONE, sign_pow
from .superpoly import DerivationSpec, Poly, symbol
from .ugl import UEl

_letter_cache: dict = {}


def _delta_sign(dims: Dims, c: int, e: int, d: int) -> Scalar:
    return sign_pow((dims.par(e) + dims.par(c)) * (dims.par(e) + dims.par(d)))


def letter_action(dims: Dims, side: str, a: int, b: int) -> DerivationSpec:
    """The superderivation dL_{E_ab} (side="left") or dR_{E_ab} ("right")."""
    key = (dims.m, dims.n, side, a, b)
    spec = _letter_cache.get(key)
    if spec is not None:
        return spec
    if side not in ("left", "right"):
        raise ValueError(f"bad side {side!r}")
    xpar = dims.letter_par(a, b)
    letter = (a, b)
    images = {}
    for tag in ("t", "tb"):
        for c in dims.indices():
            for d in dims.indices():
                gsym = symbol(tag, c, d, dims.letter_par(c, d))
                img = Poly.zero()
                for e in dims.indices():
                    if side == "right":
                        val = _pair_gen_letter(
                            dims, symbol(tag, e, d, dims.letter_par(e, d)), letter
                        )
                        if not val:
                            continue
                        coeff = val * _delta_sign(dims, c, e, d)
                        if xpar and dims.letter_par(c, d):
                            coeff = -coeff
                        img = img + Poly.from_symbol(
                            symbol(tag, c, e, dims.letter_par(c, e))
                        ).scale(coeff)
                    else:
                        val = _pair_gen_letter(
                            dims, symbol(tag, c, e, dims.letter_par(c, e)), letter
                        )
                        if not val:
                            continue
                        coeff = -val * _delta_sign(dims, c, e, d)
                        if xpar:
                            coeff = -coeff
                        img = img + Poly.from_symbol(
                            symbol(tag, e, d, dims.letter_par(e, d))
                        ).scale(coeff)
                if not img.is_zero():
                    images[gsym] = img
    spec = DerivationSpec(xpar, images)
    _letter_cache[key] = spec
    return spec


def act_word(dims: Dims, side: str, word: tuple, poly: Poly) -> Poly:
    """Apply a letter word, rightmost letter first."""
    out = poly
    for a, b in reversed(word):
        out = letter_action(dims, side, a, b).apply(out)
    return out


def act(side: str, u: UEl, f: CG) -> CG:
    """dL_u(f) for side="left", dR_u(f) for side="right"."""
    if u.dims != f.dims:
        raise ValueError("mismatched gl(m|n) dimensions")
    out = Poly.zero()
    for w, c in u.terms.items():
        out = out + act_word(u.dims, side, w, f.poly).scale(c)
    return CG(f.dims, out)


# --------------------------------------------------------- free coefficients


def _act_v(dims: Dims, c: int, d: int, idx: int):
    """E_cd v_idx = delta_{d,idx} v_c."""
    if idx == d:
        return c, ONE
    return None


def _act_vb(dims: Dims, c: int, d: int, idx: int):
    """E_cd vb_idx = -(-1)^{[c]+[c][d]} delta_{c,idx} vb_d."""
    if idx == c:
        return d, -sign_pow(dims.par(c) * (1 + dims.par(d)))
    return None


_slot_cache: dict = {}


def slot_action(dims: Dims, kind: str, a: int, b: int) -> DerivationSpec:
    """phi(E_ab) (kind="phi") or psi(E_ab) ("psi") on the x/xb alphabet."""
    key = (dims.m, dims.n, kind, a, b)
    spec = _slot_cache.get(key)
    if spec is not None:
        return spec
    if kind not in ("phi", "psi"):
        raise ValueError(f"bad slot action {kind!r}")
    upar = dims.letter_par(a, b)
    images = {}
    for r in dims.indices():
        for cc in dims.indices():
            for tag in ("x", "xb"):
                gsym = symbol(tag, r, cc, dims.letter_par(r, cc))
                if kind == "phi":
                    # acts in the first tensor slot: v_col for x, vb_col for xb
                    hit = (
                        _act_v(dims, a, b, cc)
                        if tag == "x"
                        else _act_vb(dims, a, b, cc)
                    )
                    if hit is None:
                        continue
                    new, coeff = hit
                    if upar:
                        coeff = -coeff
                    tgt = symbol(tag, r, new, dims.letter_par(r, new))
                else:
                    # acts in the second tensor slot: vb_row for x, v_row for xb
                    hit = (
                        _act_vb(dims, a, b, r)
                        if tag == "x"
                        else _act_v(dims, a, b, r)
                    )
                    if hit is None:
                        continue
                    new, coeff = hit
                    colpar = dims.par(cc)
                    if tag == "x":
                        if upar and colpar:
                            coeff = -coeff
                    else:
                        if upar and (upar + colpar) % 2:
                            coeff = -coeff
                    tgt = symbol(tag, new, cc, dims.letter_par(new, cc))
                images[gsym] = Poly.from_symbol(tgt).scale(coeff)
    spec = DerivationSpec(upar, images)
    _slot_cache[key] = spec
    return spec


def x_gen(dims: Dims, tag: str, a: int, b: int) -> Poly:
    if tag not in ("x", "xb"):
        raise ValueError(f"bad free tag {tag!r}")
    return Poly.from_symbol(symbol(tag, a, b, dims.letter_par(a, b)))


def jmath(dims: Dims, p: Poly) -> CG:
    """Rename x -> t, xb -> tbar; an isomorphism onto the function algebra."""
    rename = {"x": "t", "xb": "tb"}
    out = {}
    for mono, c in p.terms.items():
        new = tuple(
            ((rename[s[0]], s[1], s[2], s[3]), e) for s, e in mono
        )
        out[new] = c
    return CG(dims, Poly(out))


def slot_act_word(dims: Dims, kind: str, word: tuple, p: Poly) -> Poly:
    out = p
    for a, b in reversed(word):
        out = slot_action(dims, kind, a, b).apply(out)
    return out


# ------------------------------------------------------------- invariance


def invariant_letters(dims: Dims, blocks) -> list:
    """Generating letters of the Levi subalgebra of a block partition:
    every Cartan E_aa, plus the Chevalley pairs internal to each block."""
    letters = [(a, a) for a in dims.indices()]
    for lo, hi in blocks:
        for c in range(lo, hi):
            letters.append((c, c + 1))
            letters.append((c + 1, c))
    return letters


def is_invariant(
    f: CG,
    blocks,
    side: str = "left",
    mode: str = "generic",
    trials: int = 3,
    seed: int = 0,
):
    """Whether every Levi letter kills f modulo the defining ideal.

    Returns (flag, details) where details maps each letter to its verdict.
    """
    dims = f.dims
    details = {}
    ok = True
    for a, b in invariant_letters(dims, blocks):
        g = act(side, UEl.letter(dims, a, b), f)
        v = is_zero_mod_j(g, mode=mode, trials=trials, seed=seed)
        details[(a, b)] = v
        if not v.is_zero:
            ok = False
    return ok, details
