import pytest

from belconf.linpoly import LinPoly
from belconf.semifield import (
    CubicalMult,
    ValidityError,
    b_epsilon,
    dual_spread_epsilon,
    epsilon_perp,
    knuth_array,
    random_presemifield,
    spread_of,
)


def test_field_array(F8):
    C = CubicalMult.field(F8)
    assert all(C.mult(x, y) == F8.mul(x, y) for x in F8.elements() for y in F8.elements())
    assert C.is_presemifield() and C.is_commutative()
    assert C.nuclei() == (8, 8, 8, 8)


def test_zero_array_is_not_presemifield(F8):
    Z = CubicalMult.zero(F8)
    assert not Z.is_presemifield()
    with pytest.raises(ValidityError):
        Z.knuth("t")


def test_n_one_rejected():
    from belconf.gf import FieldCtx

    with pytest.raises(ValidityError):
        CubicalMult.zero(FieldCtx(5, 1, 1))


def test_from_bilinear_roundtrip(F27, rng):
    C = CubicalMult.random(F27, rng)
    assert CubicalMult.from_bilinear(F27, C.mult) == C


def test_knuth_relations(F9, rng):
    for _ in range(10):
        C = random_presemifield(F9, rng)
        assert knuth_array(C, "tt") == C
        assert knuth_array(C, "dd") == C
        assert knuth_array(C, "tdt") == knuth_array(C, "dtd")


def test_transpose_gives_adjoint_right_mult(F27, rng):
    C = random_presemifield(F27, rng)
    T = C.transpose()
    for y in F27.elements():
        assert T.right_mult(y) == C.right_mult(y).adjoint()


def test_transpose_is_presemifield(F8, rng):
    for _ in range(5):
        C = random_presemifield(F8, rng)
        for w in ("t", "d", "td", "dt", "dtd"):
            assert C.knuth(w).is_presemifield()


def test_zero_divisor_scan_agrees(F9, rng):
    for _ in range(30):
        C = CubicalMult.random(F9, rng)
        assert C.is_presemifield() == (not C.has_zero_divisors())


def test_unitalize_has_identity(F27):
    C = CubicalMult.from_dict(F27, {(0, 0): 1, (1, 2): F27.neg(F27.generator)})
    U = C.unitalize(1)
    assert U.identity_element() == C.mult(1, 1)


def test_twisted_field_nuclei(F27):
    # GTF with alpha = q, beta = q^2: all nuclei equal GF(3)
    C = CubicalMult.from_dict(F27, {(0, 0): 1, (1, 2): F27.neg(F27.generator)})
    assert C.nuclei() == (3, 3, 3, 3)


def test_spread_of_field(F8):
    S = spread_of(CubicalMult.field(F8))
    assert len(S) == 9 and S.is_spread()


def test_dual_spread_is_epsilon_image(F9, rng):
    C = random_presemifield(F9, rng)
    S = spread_of(C)
    D = dual_spread_epsilon(S)
    assert D.is_spread()
    # each image member is the eps-perp of the original member
    perps = {epsilon_perp(F9, M) for M in S.subspaces()}
    assert perps == D.subspaces()


def test_b_epsilon_alternating(F9):
    for a in range(0, 9, 2):
        for b in range(0, 9, 3):
            assert b_epsilon(F9, (a, b), (a, b)) == 0
