"""The acceptance suite, shared by the test-suite and ``verify all``.

Each check returns a :class:`CheckResult`; none of them raise on a failed
property, so a report always lists every check.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .bel import BelConfig, random_bel, random_config, symmetric_rank_one_decomposition, symplectic_config
from .gf import FieldCtx
from .gtf import GtfParams, gtf_isotopic, gtf_knuth, gtf_to_cubical, gtf_valid
from .isotopy import isotopic_bruteforce
from .linpoly import LinPoly
from .rank2 import (
    GROUP_WORDS,
    Rank2Pair,
    StabElement,
    apply_word,
    beta_t,
    e_trivial_check,
    gtf_table8,
    orbit8,
    stab_apply,
    stab_closed_form,
    stab_transform_pair,
    table24,
    table24_closed,
)
from .semifield import CubicalMult, knuth_array, random_presemifield, spread_of

DEFAULT_SEED = 20130401


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    failures: list = field(default_factory=list)

    def line(self, timing: bool = True) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} [{self.number:2d}] {self.name}: {self.detail}"
        return f"{text} ({self.seconds:.2f}s)" if timing else text


def _pointwise(F: FieldCtx, f, g) -> bool:
    return all(f(x, y) == g(x, y) for x in F.elements() for y in F.elements())


def non_square(F: FieldCtx) -> int:
    """First element (in integer order) that is not a square and not in GF(q)."""
    squares = {F.mul(x, x) for x in F.nonzero()}
    return next(x for x in F.nonzero() if x not in squares and not F.in_base(x))


# 1 ---------------------------------------------------------------------


def check_knuth_s3(seed: int = DEFAULT_SEED, count: int = 100) -> tuple[bool, str, list]:
    rng = random.Random(seed)
    bad = []
    for q, n in ((2, 3), (3, 2)):
        F = FieldCtx.from_q(q, n)
        for i in range(count):
            C = random_presemifield(F, rng)
            t, d = C.transpose(), C.dual()
            if t.transpose() != C or d.dual() != C:
                bad.append((q, n, i, "involution"))
            if knuth_array(C, "tdt") != knuth_array(C, "dtd"):
                bad.append((q, n, i, "tdt"))
            for y in F.elements():
                if t.right_mult(y) != C.right_mult(y).adjoint():
                    bad.append((q, n, i, "adjoint"))
                    break
    return not bad, f"{2 * count} presemifields at (2,3),(3,2)", bad


# 2 ---------------------------------------------------------------------


def check_gtf_example(seed: int = DEFAULT_SEED) -> tuple[bool, str, list]:
    F = FieldCtx(3, 1, 3)
    c = non_square(F)
    P = GtfParams(F, c, 1, 2)
    a, b = 1, 2
    expected = {
        "t": (F.frob(c, -a), -a, b - a),
        "d": (c, b, a),
        "td": (F.frob(c, -a), b - a, -a),
        "dt": (F.frob(c, -b), -b, a - b),
        "dtd": (F.frob(c, -b), a - b, -b),
    }
    bad = []
    base = gtf_to_cubical(P)
    for w, (c2, a2, b2) in expected.items():
        got = gtf_knuth(P, w)
        if got != GtfParams(F, c2, a2, b2):
            bad.append((w, "table", got.astuple()))
        if gtf_to_cubical(got) != knuth_array(base, w):
            bad.append((w, "cubical"))
    return not bad, f"GF(27), c={c}, alpha=q, beta=q^2", bad


# 3 ---------------------------------------------------------------------


def check_bel_equivalences(seed: int = DEFAULT_SEED, count: int = 200, q: int = 2, n: int = 3):
    rng = random.Random(seed)
    F = FieldCtx.from_q(q, n)
    bad = []
    n_bel = 0
    for i in range(count):
        r = 2 + i % 2
        B = random_bel(F, r, rng, tries=0) if i % 4 < 2 else random_config(F, r, rng)
        conds = B.belprop_conditions()
        is_bel = B.is_bel()
        n_bel += is_bel
        if len(set(conds)) != 1 or conds[0] != is_bel:
            bad.append((i, conds, is_bel))
        if is_bel != B.to_cubical().is_presemifield():
            bad.append((i, "cubical"))
    return not bad, f"{count} tuple pairs, {n_bel} BEL", bad


# 4 ---------------------------------------------------------------------


def gtf_config(P: GtfParams) -> BelConfig:
    """f = (1, c^(1/beta) x^(alpha/beta)), g = (1, -x^beta)."""
    pair = Rank2Pair.from_gtf(P)
    return pair.config()


def check_explicit_mult(seed: int = DEFAULT_SEED):
    F = FieldCtx(3, 1, 3)
    P = GtfParams(F, non_square(F), 1, 2)
    B = gtf_config(P)
    ok = _pointwise(F, B.bel_mult, P.mult)
    return ok, "729 pairs of GF(27)", [] if ok else ["mismatch"]


# 5 ---------------------------------------------------------------------


def check_spread(seed: int = DEFAULT_SEED, count: int = 20, q: int = 2, n: int = 3):
    rng = random.Random(seed)
    F = FieldCtx.from_q(q, n)
    bad = []
    for i in range(count):
        B = random_bel(F, 2 + i % 2, rng)
        S = B.bel_spread()
        if len(S.subspaces()) != F.order + 1 or not S.is_spread():
            bad.append((i, "spread"))
        if S.subspaces() != spread_of(knuth_array(B.to_cubical(), "d")).subspaces():
            bad.append((i, "cubical route"))
    return not bad, f"{count} BEL configurations", bad


# 6 ---------------------------------------------------------------------


def reducible_config(F: FieldCtx, rng) -> BelConfig:
    """BEL r = 3 configuration whose W_g contains B((v1, v2, 1)).

    Built from a random r = 2 one (f', g') by undoing a reduction:
    f = (f'_1 + v1 f3, f'_2 + v2 f3, f3), g = (g'_1, g'_2, -(g'_1 v1 + g'_2 v2)).
    With v1 = 0 this is the shape g_3 = g_2 o (x -> l x).
    """
    base = random_bel(F, 2, rng)
    v1 = F.random(rng) if rng.random() < 0.5 else 0
    v2 = F.random(rng, nonzero=True)
    f3 = LinPoly.random(F, rng)
    f = (base.f[0] + f3.scale(v1), base.f[1] + f3.scale(v2), f3)
    g1, g2 = base.g
    g3 = -(g1.compose(LinPoly.scalar(F, v1)) + g2.compose(LinPoly.scalar(F, v2)))
    return BelConfig(F, f, (g1, g2, g3))


def check_reduction(seed: int = DEFAULT_SEED, count: int = 20, q: int = 2, n: int = 3):
    rng = random.Random(seed)
    F = FieldCtx.from_q(q, n)
    bad = []
    for i in range(count):
        B = reducible_config(F, rng)
        if not B.is_bel():
            bad.append((i, "construction"))
            continue
        v = B.find_spread_element_in_W()
        if v is None or not B.psi(v).is_zero:
            bad.append((i, "spread element"))
            continue
        R = B.reduce_r()
        if R.r != 2 or not _pointwise(F, B.bel_mult, R.bel_mult):
            bad.append((i, "multiplication"))
    return not bad, f"{count} reducible r=3 configurations", bad


# 7 ---------------------------------------------------------------------


def check_perp_transpose(seed: int = DEFAULT_SEED, count: int = 100, q: int = 2, n: int = 3):
    rng = random.Random(seed)
    F = FieldCtx.from_q(q, n)
    bad = []
    for i in range(count):
        B = random_bel(F, 2 + i % 2, rng)
        T = B.perp_transpose()
        if T.to_cubical() != knuth_array(B.to_cubical(), "t"):
            bad.append((i, "transpose"))
        if T.perp_transpose() != B:
            bad.append((i, "involution"))
    return not bad, f"{count} BEL configurations", bad


# 8 ---------------------------------------------------------------------


def _random_symmetric(F: FieldCtx, rng) -> CubicalMult:
    n = F.n
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = F.random(rng)
    return CubicalMult(F, tuple(map(tuple, rows)))


def commutative_presemifields(F: FieldCtx, rng, count: int) -> list[CubicalMult]:
    """Field, a commutative twisted field and x^q y + x y^q (when valid), and random S(A x, A y)."""
    seeds = [CubicalMult.field(F), CubicalMult.from_dict(F, {(1, 0): 1, (0, 1): 1})]
    for c in F.nonzero():
        G = GtfParams(F, c, 1, 1)
        if gtf_valid(G):
            seeds.append(gtf_to_cubical(G))
            break
    seeds = [s for s in seeds if s.is_presemifield()]
    out = list(seeds)
    while len(out) < count:
        base = rng.choice(seeds)
        A = LinPoly.random_invertible(F, rng)
        out.append(CubicalMult.from_bilinear(F, lambda x, y, b=base, A=A: b.mult(A(x), A(y))))
    return out


def check_symplectic(seed: int = DEFAULT_SEED, count: int = 50):
    rng = random.Random(seed)
    F = FieldCtx(3, 1, 3)
    bad = []
    arrays = [_random_symmetric(F, rng) for _ in range(count)]
    arrays += commutative_presemifields(F, rng, 10)
    n_semi = 0
    for i, C in enumerate(arrays):
        vs = symmetric_rank_one_decomposition(F, C.c)
        recon = [[F.sum(F.mul(v[a], v[b]) for v in vs) for b in range(F.n)] for a in range(F.n)]
        if tuple(map(tuple, recon)) != C.c:
            bad.append((i, "reconstruction"))
        if C.is_presemifield():
            n_semi += 1
            B = symplectic_config(C)
            if any(g != f.adjoint() for f, g in zip(B.f, B.g)):
                bad.append((i, "adjoint"))
            if knuth_array(B.to_cubical(), "dtd") != C:
                bad.append((i, "dtd"))
    F2 = FieldCtx(2, 1, 2)
    W = CubicalMult(F2, ((0, 1), (1, 0)))
    vs = symmetric_rank_one_decomposition(F2, W.c)
    recon = tuple(tuple(F2.sum(F2.mul(v[a], v[b]) for v in vs) for b in range(2)) for a in range(2))
    if recon != W.c or len(vs) != 3:
        bad.append(("char 2 witness", len(vs)))
    return not bad, f"{len(arrays)} symmetric arrays ({n_semi} presemifields) + char-2 witness", bad


# 9 ---------------------------------------------------------------------


def check_order8(seed: int = DEFAULT_SEED, count: int = 100, q: int = 2, n: int = 3):
    rng = random.Random(seed)
    F = FieldCtx.from_q(q, n)
    bad = []
    pairs = [Rank2Pair.random(F, rng) for _ in range(count)]
    for i, P in enumerate(pairs):
        for w in ("ss", "ee", "tt"):
            if apply_word(P, w) != P:
                bad.append((i, w))
        if apply_word(P, "ese") != apply_word(P, "t") or apply_word(P, "st") != apply_word(P, "ts"):
            bad.append((i, "relations"))
        if apply_word(P, "sesesese") != P:
            bad.append((i, "(se)^4"))
    for i, P in enumerate(pairs[:5]):
        for (row, col), C in table24(P).items():
            if not _pointwise(F, C.mult, table24_closed(P, row, col)):
                bad.append((i, row, col))
    G = FieldCtx(3, 1, 3)
    gp = GtfParams(G, non_square(G), 1, 2)
    pair = Rank2Pair.from_gtf(gp)
    expected = gtf_table8(gp)
    for w, pw in orbit8(pair):
        if pw.to_gtf() != expected[w]:
            bad.append(("gtf", w))
    for (row, col), C in table24(pair).items():
        if not _pointwise(G, C.mult, table24_closed(pair, row, col)):
            bad.append(("gtf", row, col))
    return not bad, f"{count} pairs, {len(GROUP_WORDS)} words, 24 cells at q^n=8 and 27", bad


# 10 --------------------------------------------------------------------


def _random_stab(F: FieldCtx, t: int, rng, kind: str) -> StabElement:
    k = F.random(rng, nonzero=True)
    target = F.rel_norm(k, t)
    m = rng.choice([x for x in F.nonzero() if F.rel_norm(x, t) == target])
    step = F.n // t
    return StabElement(kind, k, m, step * rng.randrange(t), step * rng.randrange(t))


def check_stabilizer(seed: int = DEFAULT_SEED, count: int = 50):
    rng = random.Random(seed)
    F = FieldCtx(3, 1, 3)
    P = GtfParams(F, non_square(F), 1, 2)
    t = beta_t(P)
    bad = []
    ident = StabElement.identity()
    for gamma in range(F.n):
        got = stab_apply(P, StabElement("plain", 1, 1, 0, gamma), ident)
        if got != GtfParams(F, F.frob(P.c, gamma), P.a + gamma, P.b):
            bad.append(("phi_1,1,1,gamma", gamma))
    for i in range(count):
        kinds = [("plain", "plain"), ("plain", "swap"), ("swap", "plain"), ("swap", "swap")][i % 4]
        phi, phi2 = (_random_stab(F, t, rng, k) for k in kinds)
        R = stab_apply(P, phi, phi2)
        direct = stab_transform_pair(P, phi, phi2)
        if not _pointwise(F, direct.mult, R.mult):
            bad.append((i, "direct"))
        if kinds == ("plain", "plain") and stab_closed_form(P, phi, phi2) != R:
            bad.append((i, "closed form"))
    nc = F.rel_norm(P.c, t)
    for g1 in range(F.n):
        for g2 in range(F.n):
            R = stab_apply(P, StabElement("plain", 1, 1, g1, 0), StabElement("plain", 1, 1, g2, 0))
            if F.rel_norm(R.c, t) != nc:
                bad.append(("norm", g1, g2))
    return not bad, f"{count} stabilizer pairs over GF(27)", bad


# 11 --------------------------------------------------------------------


def isotopy_test_pairs(F: FieldCtx) -> list[tuple[GtfParams, GtfParams]]:
    """Ten GTF pairs at order 27: isotopic ones by both conditions and
    non-isotopic ones against field isotopes."""
    c = non_square(F)
    g = F.generator
    valid = [x for x in F.nonzero() if gtf_valid(GtfParams(F, x, 1, 2))]
    proper = [GtfParams(F, x, 1, 2) for x in valid]
    improper = [GtfParams(F, x, 1, 1) for x in F.nonzero() if gtf_valid(GtfParams(F, x, 1, 1))]
    P = GtfParams(F, c, 1, 2)
    inv = [GtfParams(F, x, 2, 1) for x in F.nonzero() if gtf_valid(GtfParams(F, x, 2, 1))]
    field_like = [GtfParams(F, g, 0, 1), GtfParams(F, g, 2, 0)]
    field_like = [x for x in field_like if gtf_valid(x)]
    return [
        (P, P),
        (P, proper[-1]),
        (proper[0], proper[len(proper) // 2]),
        (P, inv[0]),
        (inv[-1], proper[1]),
        (P, improper[0]),
        (improper[0], proper[2]),
        (P, field_like[0]),
        (inv[0], field_like[-1]),
        (improper[0], improper[-1]),
    ]


def check_isotopy(seed: int = DEFAULT_SEED, jobs: int = 1, exhaustive: int = 1):
    """``exhaustive`` non-isotopic pairs are searched without invariant pruning."""
    F = FieldCtx(3, 1, 3)
    bad = []
    summary = {"iso": 0, "non": 0}
    unpruned = 0
    for i, (P1, P2) in enumerate(isotopy_test_pairs(F)):
        theory = gtf_isotopic(P1, P2)
        C1, C2 = gtf_to_cubical(P1), gtf_to_cubical(P2)
        prune = True
        if not theory and unpruned < exhaustive:
            prune = False
            unpruned += 1
        wit = isotopic_bruteforce(C1, C2, prune=prune, jobs=jobs)
        found = wit is not None
        summary["iso" if theory else "non"] += 1
        if found != theory:
            bad.append((i, P1.astuple(), P2.astuple(), theory, found))
        if found and not wit.verify(C1.mult, C2.mult):
            bad.append((i, "witness"))
    detail = f"{summary['iso']} isotopic, {summary['non']} non-isotopic ({unpruned} unpruned)"
    return not bad, detail, bad


# 12 --------------------------------------------------------------------


def check_e_trivial(seed: int = DEFAULT_SEED):
    bad = []
    for q, n, m in ((2, 2, 1), (2, 4, 2), (3, 2, 1)):
        if not e_trivial_check(FieldCtx.from_q(q, n), m):
            bad.append((q, n, m))
    return not bad, "(q,n,m) in (2,2,1), (2,4,2), (3,2,1)", bad


CHECKS = [
    (1, "Knuth S3 relations", check_knuth_s3),
    (2, "twisted-field Knuth table", check_gtf_example),
    (3, "BEL equivalences", check_bel_equivalences),
    (4, "explicit multiplication", check_explicit_mult),
    (5, "spread construction", check_spread),
    (6, "r-reduction", check_reduction),
    (7, "perp-transpose", check_perp_transpose),
    (8, "symplectic pipeline", check_symplectic),
    (9, "order-8 group", check_order8),
    (10, "stabilizer action", check_stabilizer),
    (11, "isotopy cross-validation", check_isotopy),
    (12, "e-triviality", check_e_trivial),
]

# checks whose field is a free parameter (default q=2, n=3)
_GENERIC = {3, 5, 6, 7, 9}


def run_check(number: int, seed: int = DEFAULT_SEED, jobs: int = 1, q=None, n=None) -> CheckResult:
    num, name, fn = CHECKS[number - 1]
    kwargs = {"seed": seed}
    if num == 11:
        kwargs["jobs"] = jobs
    if num in _GENERIC and q is not None and n is not None:
        kwargs.update(q=q, n=n)
    start = time.perf_counter()
    try:
        ok, detail, bad = fn(**kwargs)
    except Exception as exc:  # a crash is reported as a failure, not propagated
        ok, detail, bad = False, f"error: {type(exc).__name__}: {exc}", [repr(exc)]
    return CheckResult(num, name, ok, detail, time.perf_counter() - start, bad)


def run_all(seed: int = DEFAULT_SEED, jobs: int = 1, q=None, n=None) -> list[CheckResult]:
    return [run_check(num, seed, jobs, q, n) for num, _, _ in CHECKS]
