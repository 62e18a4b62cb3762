import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from belconf.bel import random_bel
from belconf.formats import FormatError, dump_stab, dumps, loads, parse_linpoly, parse_stab
from belconf.gf import FieldCtx
from belconf.gtf import GtfParams
from belconf.isotopy import Isotopism
from belconf.linpoly import LinPoly
from belconf.rank2 import Rank2Pair, StabElement
from belconf.semifield import CubicalMult

FIELDS = [(2, 1, 3), (3, 1, 3), (2, 2, 3), (3, 1, 2)]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(FIELDS), st.integers(0, 2**32))
def test_roundtrips(field, seed):
    F = FieldCtx(*field)
    rnd = random.Random(seed)
    objs = [
        CubicalMult.random(F, rnd),
        random_bel(F, 2, rnd),
        Rank2Pair(LinPoly.random(F, rnd), LinPoly.random(F, rnd)),
        Isotopism(*(LinPoly.random(F, rnd) for _ in range(3))),
        GtfParams(F, F.random(rnd, nonzero=True), rnd.randrange(F.n), rnd.randrange(F.n)),
    ]
    for obj in objs:
        assert loads(dumps(obj)) == obj


def test_stab_roundtrip(F27):
    s = StabElement("swap", 2, 5, 1, 2)
    assert parse_stab(F27, dump_stab(F27, s)) == s


def test_comments_and_blank_lines(F8):
    text = "# a field\n\nsemifield q=2 n=3\n[1,0,0]\n[0,0,0]\n[0,0,0]\n"
    assert loads(text) == CubicalMult.field(F8)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "semifield q=2 n=3\n[1,0,0]\n",
        "semifield q=2 n=3\n[1,0]\n[0,0,0]\n[0,0,0]\n",
        "semifield q=2 n=3\n[1,0,9]\n[0,0,0]\n[0,0,0]\n",
        "semifield q=2 n=3\n1,0,0\n[0,0,0]\n[0,0,0]\n",
        "semifield q=6 n=3\n",
        "semifield q=2\n",
        "gtf q=27 n=3 c=x a=1 b=2\n",
        "blob q=2 n=3\n",
        "bel q=2 n=3 r=1\n[1,0,0]\n[1,0,0]\n",
    ],
)
def test_malformed(text):
    with pytest.raises(FormatError):
        loads(text)


def test_bad_linpoly(F8):
    with pytest.raises(FormatError):
        parse_linpoly(F8, "[a,b,c]")


def test_bad_stab(F8):
    with pytest.raises(FormatError):
        parse_stab(F8, "stab kind=rotate k=1 m=1 gamma=0 delta=0")
    with pytest.raises(FormatError):
        parse_stab(F8, "gtf q=2")
