import pytest

from belconf.bel import (
    BelConfig,
    BelViolation,
    DimensionError,
    NotReducibleError,
    random_bel,
    symmetric_rank_one_decomposition,
    symplectic_config,
)
from belconf.checks import reducible_config
from belconf.gf import FieldCtx
from belconf.linpoly import LinPoly
from belconf.semifield import CubicalMult, ValidityError, knuth_array, random_presemifield, spread_of


def test_field_config_gives_field(F8):
    B = BelConfig.field(F8)
    assert B.is_bel()
    assert B.to_cubical() == CubicalMult.field(F8)


def test_r_one_rejected(F8):
    one = LinPoly.identity(F8)
    with pytest.raises(ValueError):
        BelConfig(F8, (one,), (one,))


def test_zero_f_fails_dimension_check(F8):
    z, one = LinPoly.zero(F8), LinPoly.identity(F8)
    B = BelConfig(F8, (z, z), (one, one))
    assert not B.dims_ok()
    with pytest.raises(DimensionError):
        B.is_bel()


def test_split_pair_not_bel(F8):
    # f = (1, 0), g = (0, 1) multiplies to zero everywhere
    z, one = LinPoly.zero(F8), LinPoly.identity(F8)
    B = BelConfig(F8, (one, z), (z, one))
    assert B.dims_ok() and not B.is_bel()
    with pytest.raises(BelViolation):
        B.require_bel()


def test_cubical_matches_pointwise(F27, rng):
    for _ in range(5):
        B = random_bel(F27, 3, rng)
        C = B.to_cubical()
        assert all(C.mult(x, y) == B.bel_mult(x, y) for x in F27.elements() for y in F27.elements())


def test_canonical_config_recovers_array(F8, rng):
    C = random_presemifield(F8, rng)
    B = BelConfig.canonical(C)
    assert B.r == 3 and B.to_cubical() == C


def test_conditions_agree(F8, rng):
    for _ in range(10):
        B = random_bel(F8, 2, rng)
        assert all(B.belprop_conditions())


def test_point_sets_have_expected_size(F8, rng):
    B = random_bel(F8, 2, rng)
    assert len(B.U_points()) == 8
    assert len(B.W_points()) == 8  # dimension rn - n = 3 over GF(2)


def test_spread_matches_dual(F8, rng):
    B = random_bel(F8, 2, rng)
    assert B.bel_spread().subspaces() == spread_of(knuth_array(B.to_cubical(), "d")).subspaces()


def test_reduce_preserves_multiplication(F8, rng):
    B = reducible_config(F8, rng)
    R = B.reduce_r()
    assert R.r == 2
    assert all(B.bel_mult(x, y) == R.bel_mult(x, y) for x in F8.elements() for y in F8.elements())


def test_reduce_errors(F8, rng):
    with pytest.raises(NotReducibleError):
        random_bel(F8, 2, rng).reduce_r()


def test_gl_move_and_reparametrize(F9, rng):
    B = random_bel(F9, 2, rng)
    M = [[1, F9.generator], [0, 2]]
    moved = B.gl_move(M)
    assert moved.to_cubical() == B.to_cubical()
    A = LinPoly.random_invertible(F9, rng)
    Bm = LinPoly.random_invertible(F9, rng)
    R = B.reparametrize(A, Bm)
    assert all(R.bel_mult(x, y) == Bm(B.bel_mult(A(x), y)) for x in F9.elements() for y in F9.elements())


def test_perp_transpose_is_knuth_transpose(F27, rng):
    B = random_bel(F27, 2, rng)
    T = B.perp_transpose()
    assert T.to_cubical() == knuth_array(B.to_cubical(), "t")
    assert T.perp_transpose() == B


def test_rank_one_decomposition_char2_zero_diagonal():
    F = FieldCtx(2, 1, 3)
    M = [[0, 1, 0], [1, 0, 0], [0, 0, 0]]
    vs = symmetric_rank_one_decomposition(F, M)
    assert len(vs) == 3
    total = [[0] * 3 for _ in range(3)]
    for v in vs:
        for i in range(3):
            for j in range(3):
                total[i][j] = F.add(total[i][j], F.mul(v[i], v[j]))
    assert total == M


def test_rank_one_decomposition_rejects_asymmetric(F8):
    with pytest.raises(ValueError):
        symmetric_rank_one_decomposition(F8, [[0, 1, 0], [0, 0, 0], [0, 0, 0]])


def test_symplectic_config_of_field(F27):
    C = CubicalMult.field(F27)
    B = symplectic_config(C)
    assert B.to_cubical() == knuth_array(C, "dtd")


def test_symplectic_needs_commutative(F27):
    C = CubicalMult.from_dict(F27, {(0, 0): 1, (1, 2): F27.neg(F27.generator)})
    with pytest.raises(ValidityError):
        symplectic_config(C)
