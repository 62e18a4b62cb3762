"""Generalized twisted fields x o y = xy - c x^alpha y^beta.

Automorphisms are stored as exponents a, b with alpha = x -> x^(q^a) and
beta = x -> x^(q^b).  Fractional notation such as alpha/beta is exponent
subtraction a - b mod n, and c^(1/beta) is ``frob(c, -b)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gf import FieldCtx
from .semifield import CubicalMult, ValidityError, KNUTH_WORDS


@dataclass(frozen=True)
class GtfParams:
    ctx: FieldCtx
    c: int
    a: int
    b: int

    def __post_init__(self):
        n = self.ctx.n
        if n < 2:
            raise ValidityError("n must be at least 2")
        object.__setattr__(self, "a", self.a % n)
        object.__setattr__(self, "b", self.b % n)

    @property
    def is_proper(self) -> bool:
        """alpha, beta nontrivial and distinct (the hypotheses of the isotopy criterion)."""
        return self.a != 0 and self.b != 0 and self.a != self.b

    def mult(self, x: int, y: int) -> int:
        F = self.ctx
        return F.sub(F.mul(x, y), F.mul(self.c, F.mul(F.frob(x, self.a), F.frob(y, self.b))))

    def astuple(self):
        return (self.c, self.a, self.b)


@lru_cache(maxsize=None)
def product_set(F: FieldCtx, a: int, b: int) -> frozenset:
    """{x^(alpha-1) y^(beta-1) : x, y nonzero}, enumerated exhaustively."""
    first = {F.div(F.frob(x, a), x) for x in F.nonzero()}
    second = {F.div(F.frob(y, b), y) for y in F.nonzero()}
    return frozenset(F.mul(u, v) for u in first for v in second)


def gtf_valid(P: GtfParams) -> bool:
    """c nonzero and outside the product set."""
    if not P.c:
        return False
    return P.c not in product_set(P.ctx, P.a, P.b)


def _require_valid(P: GtfParams):
    if not gtf_valid(P):
        raise ValidityError(f"invalid twisted-field parameters {P.astuple()}")


def gtf_to_cubical(P: GtfParams) -> CubicalMult:
    _require_valid(P)
    F, n = P.ctx, P.ctx.n
    rows = [[0] * n for _ in range(n)]
    rows[0][0] = 1
    rows[P.a][P.b] = F.sub(rows[P.a][P.b], P.c)
    return CubicalMult(F, tuple(map(tuple, rows)))


def gtf_knuth(P: GtfParams, word: str) -> GtfParams:
    """Parameters of the Knuth derivative, by the closed-form table."""
    _require_valid(P)
    F, a, b, c = P.ctx, P.a, P.b, P.c
    if word in ("", "id"):
        return P
    table = {
        "t": (F.frob(c, -a), -a, b - a),
        "d": (c, b, a),
        "td": (F.frob(c, -a), b - a, -a),
        "dt": (F.frob(c, -b), -b, a - b),
        "dtd": (F.frob(c, -b), a - b, -b),
        "tdt": (F.frob(c, -b), a - b, -b),
    }
    if word not in table:
        raise ValueError(f"unknown Knuth word {word!r}; expected one of {KNUTH_WORDS}")
    return GtfParams(F, *table[word])


def _automorphisms(F: FieldCtx):
    """All x -> x^(p^k) as callables, k = 0 .. e*n - 1."""
    return [lambda x, k=k: F.pfrob(x, k) for k in range(F.deg)]


def gtf_isotopic(P: GtfParams, P2: GtfParams) -> bool:
    """Isotopy of two twisted fields by the closed-form criterion.

    Both must be valid.  Improper parameter sets (alpha or beta trivial, or
    alpha == beta) give field isotopes, so two improper ones are isotopic and
    an improper one is never isotopic to a proper one.
    """
    _require_valid(P)
    _require_valid(P2)
    if P.ctx != P2.ctx:
        return False
    if not (P.is_proper and P2.is_proper):
        return P.is_proper == P2.is_proper
    F = P.ctx
    H = product_set(F, P.a, P.b)
    autos = _automorphisms(F)
    if (P.a, P.b) == (P2.a, P2.b):
        # c^rho in c' * H
        cinv = F.inv(P2.c)
        if any(F.mul(rho(P.c), cinv) in H for rho in autos):
            return True
    n = F.n
    if (P2.a, P2.b) == ((-P.a) % n, (-P.b) % n):
        # c'^rho in c^-1 * H
        if any(F.mul(rho(P2.c), P.c) in H for rho in autos):
            return True
    return False
