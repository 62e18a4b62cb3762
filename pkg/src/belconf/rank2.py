"""BEL-configurations in V(2n, q): (a, b) pairs, the operations s, e, t, the
stabilizer action on twisted-field configurations, and rank two semifields.

A :class:`Rank2Pair` (a, b) stands for U = U_(1,a), W = W_(1,b) with
multiplication xy + b(a(x) y).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import linalg
from .bel import BelConfig, BelViolation
from .gf import FieldCtx
from .gtf import GtfParams, _require_valid
from .isotopy import Isotopism
from .linpoly import LinPoly
from .semifield import CubicalMult, ValidityError, b_epsilon, epsilon_perp, knuth_array


class NormalizationError(ValueError):
    pass


class NotRankTwoError(ValueError):
    pass


@dataclass(frozen=True)
class Rank2Pair:
    a: LinPoly
    b: LinPoly

    @property
    def ctx(self) -> FieldCtx:
        return self.a.ctx

    def mult(self, x: int, y: int) -> int:
        F = self.ctx
        return F.add(F.mul(x, y), self.b(F.mul(self.a(x), y)))

    __call__ = mult

    def config(self) -> BelConfig:
        one = LinPoly.identity(self.ctx)
        return BelConfig(self.ctx, (one, self.a), (one, self.b))

    def to_cubical(self) -> CubicalMult:
        return self.config().to_cubical()

    def is_bel(self) -> bool:
        return self.to_cubical().is_presemifield()

    def require_bel(self):
        if not self.is_bel():
            raise BelViolation("pair (a, b) violates the BEL property")

    @classmethod
    def from_gtf(cls, P: GtfParams) -> "Rank2Pair":
        """a(x) = c^(1/beta) x^(alpha/beta), b(x) = -x^beta."""
        F = P.ctx
        a = LinPoly.monomial(F, F.frob(P.c, -P.b), P.a - P.b)
        b = LinPoly.monomial(F, F.neg(1), P.b)
        return cls(a, b)

    def to_gtf(self) -> GtfParams:
        """Parameters when a and b are monomials l x^(q^i), m x^(q^j)."""
        F = self.ctx
        (i, lam), (j, mu) = _monomial(self.a), _monomial(self.b)
        return GtfParams(F, F.neg(F.mul(mu, F.frob(lam, j))), i + j, j)

    @classmethod
    def random(cls, F: FieldCtx, rng, tries: int = 10000) -> "Rank2Pair":
        """Rejection sampling over random (a, b); falls back to a random normalized config."""
        for _ in range(tries):
            P = cls(LinPoly.random(F, rng), LinPoly.random(F, rng))
            if P.is_bel():
                return P
        raise NormalizationError("no BEL pair found")  # pragma: no cover


def _monomial(f: LinPoly) -> tuple[int, int]:
    nz = [(i, c) for i, c in enumerate(f.coeffs) if c]
    if len(nz) != 1:
        raise ValueError(f"{f} is not a nonzero monomial")
    return nz[0]


# -- s, e, t and the group of order 8 -----------------------------------


def op_s(P: Rank2Pair) -> Rank2Pair:
    P.require_bel()
    return Rank2Pair(P.b, P.a)


def op_e(P: Rank2Pair) -> Rank2Pair:
    P.require_bel()
    return Rank2Pair(P.a.adjoint(), P.b)


def op_t(P: Rank2Pair) -> Rank2Pair:
    P.require_bel()
    return Rank2Pair(P.b.adjoint(), P.a.adjoint())


_OPS = {"s": op_s, "e": op_e, "t": op_t}

GROUP_WORDS = ("id", "s", "e", "es", "t", "st", "et", "est")
TABLE_COLUMNS = ("id", "s", "e", "es")


def apply_word(P: Rank2Pair, word: str) -> Rank2Pair:
    """Letters from {s, e, t}, applied left to right."""
    for letter in "" if word == "id" else word:
        try:
            P = _OPS[letter](P)
        except KeyError:
            raise ValueError(f"unknown letter {letter!r}") from None
    return P


def orbit8(P: Rank2Pair) -> list[tuple[str, Rank2Pair]]:
    """The eight group words with their pairs (duplicates kept, one per word)."""
    return [(w, apply_word(P, w)) for w in GROUP_WORDS]


# Closed forms of the 6 x 4 table.  Shapes: "L" xy + P(Q(x) y),
# "R" xy + P(x Q(y)), "M" xy + P(x) Q(y).  Upper case is the adjoint.
TABLE24 = {
    "id": {"id": ("L", "b", "a"), "s": ("L", "a", "b"), "e": ("L", "b", "A"), "es": ("L", "A", "b")},
    "t": {"id": ("L", "A", "B"), "s": ("L", "B", "A"), "e": ("L", "a", "B"), "es": ("L", "B", "a")},
    "d": {"id": ("R", "b", "a"), "s": ("R", "a", "b"), "e": ("R", "b", "A"), "es": ("R", "A", "b")},
    "td": {"id": ("R", "A", "B"), "s": ("R", "B", "A"), "e": ("R", "a", "B"), "es": ("R", "B", "a")},
    "dt": {"id": ("M", "B", "a"), "s": ("M", "A", "b"), "e": ("M", "B", "A"), "es": ("M", "a", "b")},
    "dtd": {"id": ("M", "a", "B"), "s": ("M", "b", "A"), "e": ("M", "A", "B"), "es": ("M", "b", "a")},
}


def table24_closed(P: Rank2Pair, row: str, col: str):
    """The closed-form multiplication of one cell as a callable."""
    F = P.ctx
    maps = {"a": P.a, "b": P.b, "A": P.a.adjoint(), "B": P.b.adjoint()}
    shape, p, q = TABLE24[row][col]
    f, g = maps[p], maps[q]
    if shape == "L":
        return lambda x, y: F.add(F.mul(x, y), f(F.mul(g(x), y)))
    if shape == "R":
        return lambda x, y: F.add(F.mul(x, y), f(F.mul(x, g(y))))
    return lambda x, y: F.add(F.mul(x, y), F.mul(f(x), g(y)))


def table24(P: Rank2Pair) -> dict[tuple[str, str], CubicalMult]:
    """Cell (row, col): Knuth word ``row`` applied to the pair ``apply_word(P, col)``."""
    P.require_bel()
    out = {}
    for col in TABLE_COLUMNS:
        base = apply_word(P, col).to_cubical()
        for row in TABLE24:
            out[(row, col)] = knuth_array(base, row)
    return out


def gtf_table8(P: GtfParams) -> dict[str, GtfParams]:
    """Twisted-field parameters of the eight group words, by closed form."""
    _require_valid(P)
    F, c, a, b = P.ctx, P.c, P.a, P.b
    rows = {
        "id": (c, a, b),
        "s": (F.frob(c, -b), a, a - b),
        "e": (F.frob(c, b - a), 2 * b - a, b),
        "es": (F.frob(c, -a), 2 * b - a, b - a),
        "t": (F.frob(c, -a), -a, b - a),
        "st": (F.frob(c, -a - b), -a, -b),
        "et": (F.frob(c, -b), a - 2 * b, a - b),
        "est": (F.frob(c, -2 * b), a - 2 * b, -b),
    }
    return {w: GtfParams(F, *v) for w, v in rows.items()}


# -- normalization -------------------------------------------------------


def _spread_reps(F: FieldCtx):
    """Representatives (1, l) in element order, then (0, 1)."""
    for lam in F.elements():
        yield (1, lam)
    yield (0, 1)


def normalize(B: BelConfig, both_sided: bool = False):
    """(pair, isotopism, move) with S_pair(A x, B y) == C(S_B(x, y)).

    ``move`` is the 2 x 2 matrix over GF(q^n) applied first (None for the
    identity).  With ``both_sided`` a and b are also made invertible, which
    needs q > 2.
    """
    if B.r != 2:
        raise NormalizationError("normalize needs r = 2")
    B.require_bel()
    F = B.ctx
    if both_sided and F.q == 2:
        raise NormalizationError("both-sided normalization needs q > 2")

    def attempt(cfg):
        f1, f2 = cfg.f
        g1, g2 = cfg.g
        if not (f1.is_invertible() and g1.is_invertible()):
            return None
        g1inv = g1.inverse()
        pair = Rank2Pair(f2.compose(f1.inverse()), g1inv.compose(g2))
        if both_sided and not (pair.a.is_invertible() and pair.b.is_invertible()):
            return None
        return pair, Isotopism(f1, LinPoly.identity(F), g1inv)

    got = attempt(B)
    if got is not None:
        return got[0], got[1], None
    reps = list(_spread_reps(F))
    for p in reps:
        for r in reps:
            if p == r:
                continue
            M = linalg.inverse(F, [list(p), list(r)])
            got = attempt(B.gl_move(M))
            if got is not None:
                return got[0], got[1], M
    raise NormalizationError("no GL(2, q^n) move normalizes this configuration")


# -- the stabilizer of B~(W) for W = {(x^beta, x)} ----------------------


@dataclass(frozen=True)
class StabElement:
    """plain: (x1, x2) -> (k x1^gamma, m x2^delta); swap: (x1, x2) -> (k x2^gamma, m x1^delta)."""

    kind: str
    k: int
    m: int
    gamma: int
    delta: int

    def __post_init__(self):
        if self.kind not in ("plain", "swap"):
            raise ValueError(f"kind must be plain or swap, not {self.kind!r}")

    def validate(self, F: FieldCtx, t: int):
        nk, nm = F.rel_norm(self.k, t), F.rel_norm(self.m, t)
        if nk != nm or not nk:
            raise ValidityError("stabilizer element needs N(k) == N(m) != 0")
        step = F.n // t
        if self.gamma % step or self.delta % step:
            raise ValidityError(f"automorphism exponents must be multiples of {step}")

    def apply(self, F: FieldCtx, v: tuple[int, int]) -> tuple[int, int]:
        x1, x2 = v
        if self.kind == "swap":
            x1, x2 = x2, x1
        return F.mul(self.k, F.frob(x1, self.gamma)), F.mul(self.m, F.frob(x2, self.delta))

    def apply_monomial(self, F: FieldCtx, mono):
        """Image of {(P x^(q^i), R x^(q^j))} as the same kind of description."""
        (P, i), (R, j) = mono
        if self.kind == "swap":
            (P, i), (R, j) = (R, j), (P, i)
        return (F.mul(self.k, F.frob(P, self.gamma)), i + self.gamma), (F.mul(self.m, F.frob(R, self.delta)), j + self.delta)

    @classmethod
    def identity(cls) -> "StabElement":
        return cls("plain", 1, 1, 0, 0)


def beta_t(P: GtfParams) -> int:
    """t with Fix(beta) = GF(q^(n/t))."""
    return P.ctx.n // gcd(P.b, P.ctx.n)


def stab_apply(P: GtfParams, phi: StabElement, phi2: StabElement) -> GtfParams:
    """Parameters of the configuration (U_f^phi, W_g^phi2)."""
    _require_valid(P)
    F = P.ctx
    t = beta_t(P)
    phi.validate(F, t)
    phi2.validate(F, t)
    U = phi.apply_monomial(F, ((1, 0), (F.frob(P.c, -P.b), P.a - P.b)))
    W = phi2.apply_monomial(F, ((1, P.b), (1, 0)))
    (Pu, iu), (Ru, ju) = U
    ea = ju - iu
    ac = F.mul(Ru, F.inv(F.frob(Pu, ea)))
    (Pw, iw), (Rw, jw) = W
    eb = iw - jw
    bc = F.mul(Pw, F.inv(F.frob(Rw, eb)))
    return GtfParams(F, F.mul(bc, F.frob(ac, eb)), ea + eb, eb)


def stab_closed_form(P: GtfParams, phi: StabElement, phi2: StabElement) -> GtfParams:
    """Explicit formulas for two plain elements:
    alpha' = alpha gamma' delta / (delta' gamma), beta' = beta gamma' / delta',
    c' = k'/m'^beta' * m^beta' / k^alpha' * c^(beta' delta / beta)."""
    if phi.kind != "plain" or phi2.kind != "plain":
        raise ValueError("closed form covers plain elements only")
    F = P.ctx
    a2 = P.a + phi2.gamma + phi.delta - phi2.delta - phi.gamma
    b2 = P.b + phi2.gamma - phi2.delta
    c2 = F.mul(F.div(phi2.k, F.frob(phi2.m, b2)), F.div(F.frob(phi.m, b2), F.frob(phi.k, a2)))
    c2 = F.mul(c2, F.frob(P.c, b2 + phi.delta - P.b))
    return GtfParams(F, c2, a2, b2)


def stab_transform_pair(P: GtfParams, phi: StabElement, phi2: StabElement) -> Rank2Pair:
    """Point-by-point image of U_f and W_g, reinterpolated as an (a, b) pair."""
    F = P.ctx
    base = Rank2Pair.from_gtf(P)
    U = {phi.apply(F, (x, base.a(x))) for x in F.elements()}
    W = {phi2.apply(F, (F.frob(x, P.b), x)) for x in F.elements()}
    ua = dict(U)
    wb = {w2: w1 for w1, w2 in W}
    if len(ua) != F.order or len(wb) != F.order:
        raise BelViolation("transformed subspace is not a graph")
    a = LinPoly.from_images(F, [ua[e] for e in F.basis])
    b = -LinPoly.from_images(F, [wb[e] for e in F.basis])
    return Rank2Pair(a, b)


def hypersurface_member(F: FieldCtx, a: int, b: int, t: int) -> bool:
    na = F.rel_norm(a, t)
    return na != 0 and na == F.rel_norm(b, t)


def norm_one(F: FieldCtx, t: int) -> list[int]:
    return [k for k in F.nonzero() if F.rel_norm(k, t) == 1]


def enumerate_S_gamma_k(F: FieldCtx, gamma: int, t: int) -> list[frozenset]:
    """The system {S_(gamma,k) : N(k) = 1}, members as sets of encoded points x + Q*y."""
    if gamma % (F.n // t):
        raise ValidityError("gamma must fix GF(q^(n/t))")
    Q = F.order
    return [
        frozenset(x + Q * F.mul(k, F.frob(x, gamma)) for x in F.elements()) for k in norm_one(F, t)
    ]


# -- rank two semifields -------------------------------------------------


def rank_two_config(C: CubicalMult) -> BelConfig:
    """Configuration f = (f1, f2), g = (1, -x^(q^m)) for S = f1(x) y - (f2(x) y)^(q^m)."""
    F, n = C.ctx, C.ctx.n
    if n % 2:
        raise NotRankTwoError("n must be even")
    C.require_presemifield()
    m = n // 2
    if any(C.c[i][j] for i in range(n) for j in range(n) if j not in (0, m)):
        raise NotRankTwoError("multiplication is not of the form f1(x)y - (f2(x)y)^(q^m)")
    f1 = LinPoly(F, tuple(C.c[i][0] for i in range(n)))
    f2 = LinPoly(F, tuple(F.frob(F.neg(C.c[(a + m) % n][m]), -m) for a in range(n)))
    g = (LinPoly.identity(F), LinPoly.monomial(F, F.neg(1), m))
    return BelConfig(F, (f1, f2), g)


def e_trivial_check(F: FieldCtx, m: int) -> bool:
    """W = {(x^(q^m), x)} is totally isotropic for b_eps and equals its own W^eps."""
    if F.n != 2 * m:
        raise ValueError("need n = 2m")
    pts = [(F.frob(x, m), x) for x in F.elements()]
    if any(b_epsilon(F, u, v) for u in pts for v in pts):
        return False
    Q = F.order
    W = frozenset(u0 + Q * u1 for u0, u1 in pts)
    return epsilon_perp(F, W) == W
