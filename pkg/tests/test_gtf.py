import pytest

from belconf.gf import FieldCtx
from belconf.gtf import GtfParams, gtf_isotopic, gtf_knuth, gtf_to_cubical, gtf_valid, product_set
from belconf.isotopy import isotopic_bruteforce
from belconf.semifield import CubicalMult, ValidityError, knuth_array


@pytest.mark.parametrize("field", [(3, 1, 3), (2, 1, 3), (2, 2, 3), (2, 1, 4)])
def test_validity_matches_presemifield(field):
    F = FieldCtx(*field)
    for c in F.nonzero():
        for a in range(F.n):
            for b in range(F.n):
                P = GtfParams(F, c, a, b)
                rows = [[0] * F.n for _ in range(F.n)]
                rows[0][0] = 1
                rows[a][b] = F.sub(rows[a][b], c)
                C = CubicalMult(F, tuple(map(tuple, rows)))
                assert gtf_valid(P) == C.is_presemifield(), P.astuple()


def test_product_set_gf27(F27):
    # x^(q-1) y^(q^2-1) over GF(27) ranges over the squares
    H = product_set(F27, 1, 2)
    squares = {F27.mul(x, x) for x in F27.nonzero()}
    assert H == squares and len(H) == 13
    assert sum(gtf_valid(GtfParams(F27, c, 1, 2)) for c in F27.nonzero()) == 13


def test_zero_c_invalid(F27):
    assert not gtf_valid(GtfParams(F27, 0, 1, 2))
    with pytest.raises(ValidityError):
        gtf_to_cubical(GtfParams(F27, 0, 1, 2))


def test_mult_matches_cubical(F27):
    P = GtfParams(F27, 3, 1, 2)
    C = gtf_to_cubical(P)
    assert all(C.mult(x, y) == P.mult(x, y) for x in F27.elements() for y in F27.elements())


@pytest.mark.parametrize("field", [(3, 1, 3), (2, 2, 3), (2, 1, 5)])
def test_knuth_table_matches_cubical_route(field):
    F = FieldCtx(*field)
    for c in F.nonzero():
        for a in range(F.n):
            for b in range(F.n):
                P = GtfParams(F, c, a, b)
                if not gtf_valid(P):
                    continue
                base = gtf_to_cubical(P)
                for w in ("t", "d", "td", "dt", "dtd"):
                    assert gtf_to_cubical(gtf_knuth(P, w)) == knuth_array(base, w)


def test_knuth_d_example(F27):
    P = GtfParams(F27, 3, 1, 2)
    assert gtf_knuth(P, "d").astuple() == (3, 2, 1)
    assert gtf_knuth(P, "id") == P
    with pytest.raises(ValueError):
        gtf_knuth(P, "x")


def test_isotopic_closed_form(F27):
    g = F27.generator
    P = GtfParams(F27, g, 1, 2)
    assert gtf_isotopic(P, P)
    assert gtf_isotopic(P, GtfParams(F27, F27.pow(g, 3), 1, 2))
    assert gtf_isotopic(P, gtf_knuth(P, "t"))  # (1/alpha, beta/alpha) = (2, 1): condition (ii)
    # field isotopes are isotopic to each other and to no proper twisted field
    assert gtf_isotopic(GtfParams(F27, 2, 1, 1), GtfParams(F27, g, 0, 1))
    assert not gtf_isotopic(P, GtfParams(F27, 2, 1, 1))


def test_isotopic_bigger_field_agrees_with_invariants():
    # GF(2^5): (c, 1, 2) and (c, 1, 3) are not related by (i) or (ii)
    F = FieldCtx(2, 1, 5)
    P1, P2 = GtfParams(F, 1, 1, 2), GtfParams(F, 1, 1, 3)
    if gtf_valid(P1) and gtf_valid(P2):
        assert not gtf_isotopic(P1, P2)


def test_witness_for_condition_one(F27):
    g = F27.generator
    P1, P2 = GtfParams(F27, g, 1, 2), GtfParams(F27, F27.pow(g, 5), 1, 2)
    assert gtf_isotopic(P1, P2)
    assert isotopic_bruteforce(gtf_to_cubical(P1), gtf_to_cubical(P2)) is not None
