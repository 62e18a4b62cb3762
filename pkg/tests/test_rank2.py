import pytest

from belconf.bel import BelConfig, random_bel
from belconf.gf import FieldCtx
from belconf.gtf import GtfParams, gtf_knuth, gtf_to_cubical
from belconf.linpoly import LinPoly
from belconf.rank2 import (
    GROUP_WORDS,
    NormalizationError,
    NotRankTwoError,
    Rank2Pair,
    StabElement,
    apply_word,
    e_trivial_check,
    enumerate_S_gamma_k,
    gtf_table8,
    hypersurface_member,
    normalize,
    norm_one,
    orbit8,
    rank_two_config,
    stab_apply,
    stab_closed_form,
    stab_transform_pair,
    table24,
    table24_closed,
)
from belconf.semifield import knuth_array


@pytest.fixture
def gtf27(F27):
    return GtfParams(F27, 3, 1, 2)


def test_gtf_roundtrip(gtf27):
    P = Rank2Pair.from_gtf(gtf27)
    assert P.is_bel()
    assert P.to_gtf() == gtf27
    assert P.to_cubical() == gtf_to_cubical(gtf27)


def test_group_relations(F27, gtf27):
    P = Rank2Pair.from_gtf(gtf27)
    assert apply_word(P, "ss") == P
    assert apply_word(P, "ee") == P
    assert apply_word(P, "tt") == P
    assert apply_word(P, "ese") == apply_word(P, "t")
    assert apply_word(P, "st") == apply_word(P, "ts")
    assert apply_word(P, "se" * 4) == P
    assert len({Q for _, Q in orbit8(P)}) <= 8
    with pytest.raises(ValueError):
        apply_word(P, "x")


def test_orbit_matches_gtf_table(gtf27):
    P = Rank2Pair.from_gtf(gtf27)
    table = gtf_table8(gtf27)
    for w, Q in orbit8(P):
        assert gtf_to_cubical(table[w]) == Q.to_cubical(), w


def test_table24_matches_knuth(F8, rng):
    B = random_bel(F8, 2, rng)
    pair, _, _ = normalize(B)
    cells = table24(pair)
    for w in GROUP_WORDS[:4]:
        base = apply_word(pair, w).to_cubical()
        for row in ("id", "t", "d", "td", "dt", "dtd"):
            assert cells[(row, w)] == knuth_array(base, row)
            fn = table24_closed(pair, row, w)
            C = cells[(row, w)]
            assert all(fn(x, y) == C.mult(x, y) for x in F8.elements() for y in F8.elements())


def test_t_column_relation(gtf27):
    P = Rank2Pair.from_gtf(gtf27)
    assert apply_word(P, "t").to_cubical() == knuth_array(P.to_cubical(), "t")
    assert gtf_knuth(gtf27, "t").astuple() == gtf_table8(gtf27)["t"].astuple()


def test_normalize_produces_isotopism(F8, rng):
    for _ in range(10):
        B = random_bel(F8, 2, rng)
        pair, iso, move = normalize(B)
        assert iso.verify(B.bel_mult, pair.mult)


def test_normalize_needs_move(F8):
    z, one = LinPoly.zero(F8), LinPoly.identity(F8)
    B = BelConfig(F8, (z, one), (one, one))
    pair, iso, move = normalize(B)
    assert move is not None
    assert iso.verify(B.gl_move(move).bel_mult, pair.mult)


def test_normalize_errors(F8, F27, rng):
    with pytest.raises(NormalizationError):
        normalize(random_bel(F8, 3, rng))
    with pytest.raises(NormalizationError):
        normalize(random_bel(F8, 2, rng), both_sided=True)
    pair, _, _ = normalize(random_bel(F27, 2, rng), both_sided=True)
    assert pair.a.is_invertible() and pair.b.is_invertible()


def test_hypersurface_count(F27):
    # t = 3: N(x) = N(y) != 0 has 26 * 13 solutions, 13 norm-one scalars
    pts = sum(hypersurface_member(F27, a, b, 3) for a in F27.elements() for b in F27.elements())
    assert pts == 338
    assert len(norm_one(F27, 3)) == 13


def test_s_gamma_system_partitions(F27):
    for gamma in range(3):
        subs = enumerate_S_gamma_k(F27, gamma, 3)
        assert len(subs) == 13
        nonzero = set()
        for S in subs:
            assert len(S) == 27
            rest = S - {0}
            assert not (rest & nonzero)
            nonzero |= rest
        assert len(nonzero) == 338


def test_stab_identity(gtf27):
    I = StabElement.identity()
    assert stab_apply(gtf27, I, I) == gtf27
    assert stab_closed_form(gtf27, I, I) == gtf27


def test_stab_closed_form_agrees(F27, gtf27):
    t = 3
    ks = norm_one(F27, t)
    for gamma in range(3):
        for delta in range(3):
            phi = StabElement("plain", ks[1], ks[2], gamma, delta)
            phi2 = StabElement("plain", ks[3], ks[4], delta, gamma)
            want = stab_transform_pair(gtf27, phi, phi2).to_cubical()
            assert gtf_to_cubical(stab_apply(gtf27, phi, phi2)) == want
            assert gtf_to_cubical(stab_closed_form(gtf27, phi, phi2)) == want


def test_stab_gamma_only(F27):
    P = GtfParams(F27, F27.generator, 1, 2)
    phi = StabElement("plain", 1, 1, 0, 1)
    got = stab_apply(P, phi, StabElement.identity())
    assert got.astuple() == (F27.frob(P.c, 1), 2, 2)


def test_stab_validation(F27, gtf27):
    from belconf.semifield import ValidityError

    with pytest.raises(ValueError):
        StabElement("rotate", 1, 1, 0, 0)
    with pytest.raises(ValidityError):
        stab_apply(gtf27, StabElement("plain", 1, F27.generator, 0, 0), StabElement.identity())


def test_rank_two_config(rng):
    F = FieldCtx(3, 1, 2)
    P = Rank2Pair.from_gtf(GtfParams(F, F.generator, 0, 1))
    C = P.to_cubical()
    B = rank_two_config(C)
    assert B.to_cubical() == C
    with pytest.raises(NotRankTwoError):
        rank_two_config(gtf_to_cubical(GtfParams(FieldCtx(3, 1, 3), 3, 1, 2)))


@pytest.mark.parametrize("field", [(2, 1, 2), (3, 1, 2), (2, 1, 4)])
def test_e_trivial(field):
    F = FieldCtx(*field)
    assert e_trivial_check(F, F.n // 2)
