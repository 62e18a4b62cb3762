import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from belconf.conway import conway_polynomial, is_primitive
from belconf.gf import FieldCtx, FieldError, aut_order, factor_prime_power


# Conway polynomials, lowest degree first (Lübeck's tables)
@pytest.mark.parametrize(
    "p, d, poly",
    [
        (2, 2, (1, 1, 1)),
        (2, 3, (1, 1, 0, 1)),
        (2, 4, (1, 1, 0, 0, 1)),
        (2, 8, (1, 0, 1, 1, 1, 0, 0, 0, 1)),
        (3, 2, (2, 2, 1)),
        (3, 3, (1, 2, 0, 1)),
        (3, 6, (2, 2, 1, 0, 2, 0, 1)),
        (5, 2, (2, 4, 1)),
    ],
)
def test_conway_known_values(p, d, poly):
    assert conway_polynomial(p, d) == poly
    assert is_primitive(list(poly), p)


def test_gf4_omega_squared():
    F = FieldCtx(2, 1, 2)
    assert F.mul(2, 2) == 3  # omega^2 = omega + 1


def test_prime_power_factoring():
    assert factor_prime_power(27) == (3, 3)
    with pytest.raises(FieldError):
        factor_prime_power(12)
    with pytest.raises(FieldError):
        FieldCtx(4, 1, 2)


def test_inverse_of_zero_raises():
    with pytest.raises(FieldError):
        FieldCtx(3, 1, 2).inv(0)


FIELDS = [FieldCtx(2, 1, 3), FieldCtx(3, 1, 3), FieldCtx(2, 2, 3), FieldCtx(3, 2, 2), FieldCtx(5, 1, 2)]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_field_axioms(F, data):
    x, y, z = (data.draw(st.integers(0, F.order - 1)) for _ in range(3))
    assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))
    assert F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z))
    assert F.add(x, F.neg(x)) == 0
    if x:
        assert F.mul(x, F.inv(x)) == 1


@pytest.mark.parametrize("F", FIELDS, ids=repr)
def test_frobenius_and_subfield(F):
    for x in F.elements():
        assert F.frob(x, F.n) == x
        assert F.frob(F.frob(x, 1), -1) == x
    base = set(F.base_field)
    assert len(base) == F.q
    assert all(F.frob(c, 1) == c for c in base)
    assert {F.trace(x) for x in F.elements()} == base


@pytest.mark.parametrize("F", FIELDS, ids=repr)
def test_encoding_and_coords_roundtrip(F):
    for x in F.elements():
        assert F.decode(F.encode(x)) == x
        assert F.from_coords(F.coords(x)) == x
    assert sorted(F.encode(x) for x in F.elements()) == list(range(F.order))


def test_relative_norm_gf27(F27):
    # norm to GF(3): x^13, so the generator maps to g^13 = -1
    g = F27.generator
    assert F27.rel_norm(g, 3) == F27.pow(g, 13) == 2
    assert sum(F27.rel_norm(k, 3) == 1 for k in F27.nonzero()) == 13
    with pytest.raises(FieldError):
        F27.rel_norm(g, 2)


def test_aut_order(F27):
    assert aut_order(F27, 0) == 1
    assert aut_order(F27, 1) == 3


def test_polynomial_fallback_matches_tables():
    # GF(2^17) is past the table limit and uses polynomial arithmetic
    big = FieldCtx(2, 1, 17)
    assert not big.tables
    g = big.generator
    assert big.mul(g, big.inv(g)) == 1
    assert big.frob(g, 17) == g
