import itertools
import random

from superfn.actions import (
    act,
    act_word,
    invariant_letters,
    is_invariant,
    jmath,
    letter_action,
    slot_act_word,
    x_gen,
)
from superfn.cg import CG, is_zero_mod_j, pair, relations
from superfn.grading import Dims
from superfn.scalar import Scalar, ZERO, ONE, sign_pow
from superfn.spherical import LeviProfile, c_block
from superfn.superpoly import Poly
from superfn.ugl import UEl

D11 = Dims(1, 1)
D21 = Dims(2, 1)
D22 = Dims(2, 2)


def gen_cg(dims, tag, a, b):
    return CG.t(dims, a, b) if tag == "t" else CG.tbar(dims, a, b)


def rand_cg(dims, rng, max_terms=3, max_len=3):
    gens = []
    for a in dims.indices():
        for b in dims.indices():
            gens.append(CG.t(dims, a, b))
            gens.append(CG.tbar(dims, a, b))
    out = CG.zero(dims)
    for _ in range(rng.randint(0, max_terms)):
        term = CG.from_scalar(dims, Scalar(rng.randint(-4, 4)))
        for _ in range(rng.randint(0, max_len)):
            term = term * rng.choice(gens)
        out = out + term
    return out


def test_right_action_closed_form():
    # dR_{E_ab} t_cd = delta_db (-1)^{[a]+[b]} t_ca
    # dR_{E_ab} tb_cd = -delta_da (-1)^{[b]+[a][b]} tb_cb
    for a, b, c, d in itertools.product(D21.indices(), repeat=4):
        pa, pb = D21.par(a), D21.par(b)
        got = act("right", UEl.letter(D21, a, b), CG.t(D21, c, d))
        want = CG.t(D21, c, a).scale(sign_pow(pa + pb)) if d == b \
            else CG.zero(D21)
        assert got == want, (a, b, c, d)
        got = act("right", UEl.letter(D21, a, b), CG.tbar(D21, c, d))
        want = CG.tbar(D21, c, b).scale(-sign_pow(pb + pa * pb)) if d == a \
            else CG.zero(D21)
        assert got == want, (a, b, c, d)


def test_left_action_closed_form():
    # dL_{E_ab} t_cd = -delta_ca (-1)^{([a]+[b])([b]+[d]+1)} t_bd
    # dL_{E_ab} tb_cd = delta_cb (-1)^{([a]+[b])([d]+1)} tb_ad
    for a, b, c, d in itertools.product(D21.indices(), repeat=4):
        pa, pb, pd = D21.par(a), D21.par(b), D21.par(d)
        got = act("left", UEl.letter(D21, a, b), CG.t(D21, c, d))
        want = CG.t(D21, b, d).scale(
            -sign_pow((pa + pb) * (pb + pd + 1))) if c == a \
            else CG.zero(D21)
        assert got == want, (a, b, c, d)
        got = act("left", UEl.letter(D21, a, b), CG.tbar(D21, c, d))
        want = CG.tbar(D21, a, d).scale(
            sign_pow((pa + pb) * (pd + 1))) if c == b \
            else CG.zero(D21)
        assert got == want, (a, b, c, d)


def test_actions_are_superderivations():
    rng = random.Random(20)
    for dims in (D11, D21):
        letters = [(a, b) for a in dims.indices() for b in dims.indices()]
        for _ in range(25):
            f = rand_cg(dims, rng, max_terms=2, max_len=2)
            g = rand_cg(dims, rng, max_terms=2, max_len=2)
            a, b = rng.choice(letters)
            for side in ("left", "right"):
                spec = letter_action(dims, side, a, b)
                lhs = spec.apply((f * g).poly)
                sgn = sign_pow(spec.parity * f.parity()) \
                    if f.parity() is not None else None
                rhs = spec.apply(f.poly) * g.poly
                if f.parity() is not None:
                    rhs = rhs + (f.poly * spec.apply(g.poly)).scale(sgn)
                    assert lhs == rhs


def test_action_pairing_contract():
    # <dR_x f, y> = (-1)^{[x]([f]+[y])} <f, yx>
    # <dL_x f, y> = (-1)^{[x][f]} <f, S(x) y>
    rng = random.Random(21)
    for dims in (D11, D21):
        letters = [(a, b) for a in dims.indices() for b in dims.indices()]
        gens = [gen_cg(dims, tag, a, b)
                for tag in ("t", "tb") for a, b in letters]
        for _ in range(60):
            f = rng.choice(gens)
            if rng.random() < 0.5:
                f = f * rng.choice(gens)
                if f.is_zero_poly():
                    continue
            xl = rng.choice(letters)
            x = UEl.letter(dims, *xl)
            y = UEl.word(dims, tuple(rng.choice(letters)
                                     for _ in range(rng.randint(0, 2))))
            xpar = dims.letter_par(*xl)
            fpar = f.parity()
            ypar = y.parity() or 0
            lhs = pair(act("right", x, f), y)
            rhs = pair(f, y * x) * sign_pow(xpar * (fpar + ypar))
            assert lhs == rhs
            lhs = pair(act("left", x, f), y)
            rhs = pair(f, x.antipode() * y) * sign_pow(xpar * fpar)
            assert lhs == rhs


def test_left_and_right_actions_supercommute():
    # dL_x dR_y = (-1)^{[x][y]} dR_y dL_x, exactly on representatives
    rng = random.Random(22)
    letters = [(a, b) for a in D11.indices() for b in D11.indices()]
    for _ in range(40):
        f = rand_cg(D11, rng, max_terms=2, max_len=2)
        x = rng.choice(letters)
        y = rng.choice(letters)
        lr = act_word(D11, "left", (x,),
                      act_word(D11, "right", (y,), f.poly))
        rl = act_word(D11, "right", (y,),
                      act_word(D11, "left", (x,), f.poly))
        sgn = sign_pow(D11.letter_par(*x) * D11.letter_par(*y))
        assert lr == rl.scale(sgn)


def test_actions_preserve_the_ideal():
    rng = random.Random(23)
    for dims in (D11, D21):
        letters = [(a, b) for a in dims.indices() for b in dims.indices()]
        for rel in relations(dims):
            for _ in range(3):
                x = UEl.letter(dims, *rng.choice(letters))
                for side in ("left", "right"):
                    g = act(side, x, rel)
                    v = is_zero_mod_j(g, mode="pairing")
                    assert v.is_zero


def test_word_action_composes_outermost_first():
    rng = random.Random(24)
    letters = [(a, b) for a in D21.indices() for b in D21.indices()]
    for side in ("left", "right"):
        for _ in range(15):
            f = rand_cg(D21, rng, max_terms=2, max_len=2)
            w1 = rng.choice(letters)
            w2 = rng.choice(letters)
            via_word = act_word(D21, side, (w1, w2), f.poly)
            nested = act_word(D21, side, (w1,),
                              act_word(D21, side, (w2,), f.poly))
            assert via_word == nested
            u = UEl.letter(D21, *w1) * UEl.letter(D21, *w2)
            assert act(side, u, f).poly == via_word


def test_slot_actions_intertwine_with_renaming():
    # jmath((psi(x) (x) phi(y)) p) = (dL_x (x) dR_y) jmath(p)
    for dims in (D11, D21):
        letters = [(a, b) for a in dims.indices() for b in dims.indices()]
        polys = [x_gen(dims, "x", a, b) for a, b in letters]
        polys += [x_gen(dims, "xb", a, b) for a, b in letters]
        for p in polys:
            for xl in letters:
                got = jmath(dims, slot_act_word(dims, "psi", (xl,), p))
                want = act_word(dims, "left", (xl,), jmath(dims, p).poly)
                assert got.poly == want, ("psi", xl, p)
                got = jmath(dims, slot_act_word(dims, "phi", (xl,), p))
                want = act_word(dims, "right", (xl,), jmath(dims, p).poly)
                assert got.poly == want, ("phi", xl, p)


def test_invariant_letters_layout():
    blocks = [(1, 3), (4, 4)]
    letters = invariant_letters(D22, blocks)
    assert [(a, a) for a in D22.indices()] == letters[:4]
    assert (1, 2) in letters and (2, 1) in letters
    assert (2, 3) in letters and (3, 2) in letters
    assert (3, 4) not in letters


def test_is_invariant_on_block_traces():
    # C^{(i,j)} over pure refined blocks is a two-sided invariant
    from superfn.spherical import c_pair

    prof = LeviProfile.parse(D22, "2|1,1")
    f = c_pair(prof, 3, 3)
    ok, details = is_invariant(f, prof.blocks, side="left", mode="pairing")
    assert ok, details
    ok, _ = is_invariant(f, prof.blocks, side="right", mode="pairing")
    assert ok
    prof = LeviProfile.parse(D22, "1,1|1,1")
    for i in (1, 4):
        for j in (1, 4):
            f = c_pair(prof, i, j)
            for side in ("left", "right"):
                ok, _ = is_invariant(f, prof.blocks, side=side,
                                     mode="pairing")
                assert ok, (i, j, side)


def test_is_invariant_rejects_plain_generators():
    prof = LeviProfile.parse(D11, "1,1")
    ok, details = is_invariant(CG.t(D11, 1, 1), prof.blocks, side="left",
                               mode="pairing")
    assert not ok
    bad = [ab for ab, v in details.items() if not v.is_zero]
    assert bad


def test_corrected_mixed_block_derivative_signs():
    # dL_{E_23} C^{(3)}_ab = (-1)^{[a]+[b]} t_{3a} tb_{2b} and
    # dL_{E_32} C^{(3)}_ab = (-1)^{[a]} t_{2a} tb_{3b}
    # for the profile with middle block {2,3} at (m,n) = (2,2)
    prof = LeviProfile.parse(D22, "1,1|1,1")
    for a in D22.indices():
        for b in D22.indices():
            pa, pb = D22.par(a), D22.par(b)
            f = c_block(prof, 3, a, b)
            got = act("left", UEl.letter(D22, 2, 3), f)
            want = (CG.t(D22, 3, a) * CG.tbar(D22, 2, b)).scale(
                sign_pow(pa + pb))
            assert (got - want).is_zero_poly(), ("E23", a, b)
            got = act("left", UEl.letter(D22, 3, 2), f)
            want = (CG.t(D22, 2, a) * CG.tbar(D22, 3, b)).scale(sign_pow(pa))
            assert (got - want).is_zero_poly(), ("E32", a, b)
