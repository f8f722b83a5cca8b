import json
import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from superfn.cg import CG, relations
from superfn.grading import Dims
from superfn.grassmann import (
    GEl,
    GroupPoint,
    SMat,
    random_even_invertible,
    real_sample_points,
    verify_group,
)
from superfn.scalar import Scalar, ONE, I

D11 = Dims(1, 1)
D21 = Dims(2, 1)


def th(n, *js):
    out = GEl.scalar(n, 1)
    for j in js:
        out = out * GEl.gen(n, j)
    return out


def test_generators_anticommute_and_square_to_zero():
    a, b = GEl.gen(4, 1), GEl.gen(4, 2)
    assert a * b == -(b * a)
    assert (a * a).is_zero()
    assert (th(4, 1, 2, 3) * th(4, 3)).is_zero()


def test_koszul_sign_on_blocks():
    # theta1*theta2 commutes with theta3*theta4 (even times even)
    assert th(4, 1, 2) * th(4, 3, 4) == th(4, 3, 4) * th(4, 1, 2)
    assert th(4, 1, 2) * th(4, 3, 4) == th(4, 1, 2, 3, 4)
    # crossing swaps pick up signs: theta2*theta1 = -theta1*theta2
    assert GEl.gen(2, 2) * GEl.gen(2, 1) == -th(2, 1, 2)


def test_body_soul_parity_degree():
    x = GEl.scalar(3, Scalar(2, 1)) + th(3, 1, 2).scale(5)
    assert x.body() == Scalar(2, 1)
    assert x.soul() == th(3, 1, 2).scale(5)
    assert x.parity() == 0
    assert x.degree() == 2
    assert (x + GEl.gen(3, 3)).parity() is None
    assert GEl(3).degree() == -1


def test_conj_is_antilinear_reversal():
    # conj reverses factors, so a k-blade picks up (-1)^{k(k-1)/2}
    assert th(4, 1, 2).conj() == -th(4, 1, 2)
    assert th(4, 1, 2, 3).conj() == -th(4, 1, 2, 3)
    assert th(4, 1, 2, 3, 4).conj() == th(4, 1, 2, 3, 4)
    assert GEl.scalar(2, I).conj() == GEl.scalar(2, -I)
    x = th(4, 1).scale(Scalar(1, 2)) + th(4, 2, 3).scale(3)
    assert x.conj().conj() == x


@given(st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9))
@settings(max_examples=40, deadline=None)
def test_conj_reverses_products(a, b, c):
    x = GEl.scalar(3, a) + GEl.gen(3, 1).scale(b)
    y = GEl.gen(3, 2).scale(c) + th(3, 1, 3)
    assert (x * y).conj() == y.conj() * x.conj()


def test_gel_json_is_sorted_and_stable():
    x = th(3, 2, 3).scale(Scalar(Fraction(1, 2))) + GEl.scalar(3, -1)
    got = json.dumps(x.to_json(), sort_keys=True)
    again = json.dumps(x.to_json(), sort_keys=True)
    assert got == again
    assert json.loads(got)[0]["subset"] == []


def test_smat_inverse_is_exact():
    rng = random.Random(0)
    for dims in (D11, D21):
        ident = SMat.identity(dims, 2 * dims.m * dims.n)
        for _ in range(6):
            mat = random_even_invertible(dims, rng)
            inv = mat.inverse()
            assert (mat @ inv) == ident
            assert (inv @ mat) == ident


def test_group_point_images_match_twist():
    # alpha(t_ab) = eta(a,b) T_ab with eta(a,b) = (-1)^{[a][b]+[a]}
    rng = random.Random(1)
    mat = random_even_invertible(D11, rng)
    p = GroupPoint.from_matrix(D11, mat)
    assert p.evaluate(CG.t(D11, 1, 1)) == mat.entry(1, 1)
    assert p.evaluate(CG.t(D11, 2, 1)) == -mat.entry(2, 1)
    assert p.evaluate(CG.t(D11, 1, 2)) == mat.entry(1, 2)
    # eta(2,2) = (-1)^{1*1+1} = +1
    assert p.evaluate(CG.t(D11, 2, 2)) == mat.entry(2, 2)
    inv = mat.inverse()
    for a in D11.indices():
        for b in D11.indices():
            assert p.evaluate(CG.tbar(D11, a, b)) == inv.entry(b, a)


def test_point_evaluation_is_multiplicative():
    rng = random.Random(2)
    f = CG.t(D21, 1, 2) * CG.tbar(D21, 3, 1) + CG.from_scalar(D21, Scalar(2))
    g = CG.t(D21, 3, 3) - CG.tbar(D21, 2, 2)
    for _ in range(4):
        p = GroupPoint.from_matrix(D21, random_even_invertible(D21, rng))
        assert p.evaluate(f * g) == p.evaluate(f) * p.evaluate(g)
        assert p.evaluate(f + g) == p.evaluate(f) + p.evaluate(g)


def test_relations_vanish_on_points():
    rng = random.Random(3)
    for dims in (D11, D21):
        p = GroupPoint.from_matrix(dims, random_even_invertible(dims, rng))
        for rel in relations(dims):
            assert p.evaluate(rel).is_zero()


def test_convolution_matches_matrix_product():
    rng = random.Random(4)
    for dims in (D11, D21):
        x = random_even_invertible(dims, rng)
        y = random_even_invertible(dims, rng)
        left = GroupPoint.from_matrix(dims, x).convolve(
            GroupPoint.from_matrix(dims, y))
        assert left == GroupPoint.from_matrix(dims, x @ y, validate=False)


def test_inverse_point_is_matrix_inverse():
    rng = random.Random(5)
    for dims in (D11, D21):
        mat = random_even_invertible(dims, rng)
        p = GroupPoint.from_matrix(dims, mat)
        assert p.inverse_point() == GroupPoint.from_matrix(
            dims, mat.inverse(), validate=False)
        ident = GroupPoint.identity(dims, p.n)
        assert p.convolve(p.inverse_point()) == ident
        assert p.inverse_point().convolve(p) == ident


def test_identity_point_is_counit():
    p = GroupPoint.identity(D21)
    f = CG.t(D21, 1, 1) * CG.tbar(D21, 2, 2) + CG.t(D21, 1, 2)
    assert p.evaluate(f) == GEl.scalar(0, f.counit())


def test_real_points_dual_equals_inverse():
    for dims in (D11, D21):
        pts = real_sample_points(dims)
        assert len(pts) == 5
        for p in pts:
            assert p.is_real()
            assert p.theta_dual() == p.inverse_point()


def test_nonreal_point_detected():
    mat = SMat(D11, 0, [
        [GEl.scalar(0, 2), GEl.scalar(0, 0)],
        [GEl.scalar(0, 0), GEl.scalar(0, 1)],
    ])
    p = GroupPoint.from_matrix(D11, mat)
    assert not p.is_real()
    assert p.theta_dual() != p.inverse_point()


def test_smat_rejects_wrong_parity_entries():
    try:
        SMat(D11, 1, [
            [GEl.scalar(1, 1), GEl.scalar(1, 1)],
            [GEl(1), GEl.scalar(1, 1)],
        ])
        assert False, "expected ValueError"
    except ValueError:
        pass


def test_from_matrix_rejects_singular_body():
    bad = SMat(D11, 0, [
        [GEl.scalar(0, 0), GEl(0)],
        [GEl(0), GEl.scalar(0, 1)],
    ])
    try:
        GroupPoint.from_matrix(D11, bad)
        assert False, "expected ValueError"
    except ValueError:
        pass


def test_verify_group_suites():
    for dims in (D11, D21):
        rep = verify_group(dims, count=8, seed=0)
        assert rep["passed"], rep
        names = {c["name"] for c in rep["cases"]}
        assert "convolution matches the supermatrix product" in names
