"""BEL-configurations (D, U_f, W_g) in V(rn, q) = GF(q^n)^r.

The Desarguesian spread D is fixed: its members are B(v) = {(a v_1, ..., a v_r)}.
U_f = {(f_1(x), ..., f_r(x))} and W_g = {(x_1, ..., x_r) : sum g_i(x_i) = 0}.
The associated presemifield is S_{f,g}(x, y) = sum g_i(f_i(x) y).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import linalg
from .gf import FieldCtx, FieldError
from .linpoly import LinPoly
from .semifield import CubicalMult, SemifieldSpread, ValidityError


class DimensionError(ValueError):
    """dim U_f != n or dim W_g != rn - n."""


class NotReducibleError(ValueError):
    """W_g contains no member of the Desarguesian spread (or r is already 2)."""


class BelViolation(ValueError):
    pass


@dataclass(frozen=True)
class BelConfig:
    ctx: FieldCtx
    f: tuple[LinPoly, ...]
    g: tuple[LinPoly, ...]

    def __post_init__(self):
        if self.ctx.n < 2:
            raise ValidityError("n must be at least 2")
        if len(self.f) != len(self.g):
            raise ValueError("f and g must have the same length")
        if len(self.f) < 2:
            raise ValueError("r must be at least 2")

    @property
    def r(self) -> int:
        return len(self.f)

    @classmethod
    def field(cls, F: FieldCtx, r: int = 2) -> "BelConfig":
        one, zero = LinPoly.identity(F), LinPoly.zero(F)
        return cls(F, (one,) + (zero,) * (r - 1), (one,) + (zero,) * (r - 1))

    @classmethod
    def canonical(cls, C: CubicalMult) -> "BelConfig":
        """r = n configuration with g_i = x^(q^i) and f_i = l_i^(q^-i)."""
        F, n = C.ctx, C.ctx.n
        f, g = [], []
        for j in range(n):
            l_j = LinPoly(F, tuple(C.c[i][j] for i in range(n)))
            f.append(l_j.frob_power(-j))
            g.append(LinPoly.monomial(F, 1, j))
        return cls(F, tuple(f), tuple(g))

    # -- dimensions and the BEL property -------------------------------

    def dims_ok(self) -> bool:
        F, n = self.ctx, self.ctx.n
        stacked = [row for fi in self.f for row in fi.to_matrix()]
        mats = [gi.to_matrix() for gi in self.g]
        wide = [[v for M in mats for v in M[i]] for i in range(n)]
        return linalg.rank(F, stacked) == n and linalg.rank(F, wide) == n

    def require_dims(self):
        if not self.dims_ok():
            raise DimensionError("dim U_f != n or dim W_g != rn - n")

    def bel_mult(self, x: int, y: int) -> int:
        F = self.ctx
        acc = 0
        for fi, gi in zip(self.f, self.g):
            acc = F.add(acc, gi(F.mul(fi(x), y)))
        return acc

    def to_cubical(self) -> CubicalMult:
        """c_{a+b, b} += g_{ib} f_{ia}^(q^b)."""
        F, n = self.ctx, self.ctx.n
        rows = [[0] * n for _ in range(n)]
        for fi, gi in zip(self.f, self.g):
            for b, gb in enumerate(gi.coeffs):
                if not gb:
                    continue
                for a, fa in enumerate(fi.coeffs):
                    if fa:
                        k = (a + b) % n
                        rows[k][b] = F.add(rows[k][b], F.mul(gb, F.frob(fa, b)))
        return CubicalMult(F, tuple(map(tuple, rows)))

    def is_bel(self) -> bool:
        self.require_dims()
        return self.to_cubical().is_presemifield()

    def require_bel(self):
        if not self.is_bel():
            raise BelViolation("not a BEL-configuration")

    # -- explicit point sets --------------------------------------------

    def U_points(self) -> set[tuple[int, ...]]:
        return {tuple(fi(x) for fi in self.f) for x in self.ctx.elements()}

    def W_points(self) -> set[tuple[int, ...]]:
        F, n, r = self.ctx, self.ctx.n, self.r
        mats = [gi.to_matrix() for gi in self.g]
        wide = [[v for M in mats for v in M[i]] for i in range(n)]
        basis = linalg.nullspace(F, wide)
        vecs = [
            tuple(F.from_coords(v[i * n:(i + 1) * n]) for i in range(r)) for v in basis
        ]
        pts = set()
        for coeffs in product(F.base_field, repeat=len(vecs)):
            acc = [0] * r
            for s, v in zip(coeffs, vecs):
                if s:
                    acc = [F.add(a, F.mul(s, b)) for a, b in zip(acc, v)]
            pts.add(tuple(acc))
        return pts

    def belprop_conditions(self) -> tuple[bool, bool, bool, bool, bool]:
        """The five equivalent forms of the BEL property, each computed separately.

        1. S_{f,g} has no zero divisors;
        2. B(U) and B(W) share no spread member;
        3. U misses the union of the members meeting W;
        4. W misses the union of the members meeting U;
        5. no nonzero u in U is a GF(q^n)-multiple of a nonzero w in W.
        """
        self.require_dims()
        F = self.ctx
        c1 = not self.to_cubical().has_zero_divisors()
        U = [u for u in self.U_points() if any(u)]
        W = [w for w in self.W_points() if any(w)]
        c2 = not ({spread_rep(F, u) for u in U} & {spread_rep(F, w) for w in W})
        cover_W = {tuple(F.mul(s, c) for c in w) for w in W for s in F.nonzero()}
        c3 = not any(u in cover_W for u in U)
        cover_U = {tuple(F.mul(s, c) for c in u) for u in U for s in F.nonzero()}
        c4 = not any(w in cover_U for w in W)
        c5 = not any(_is_multiple(F, u, w) for u in U for w in W)
        return c1, c2, c3, c4, c5

    # -- spread ---------------------------------------------------------

    def T_g(self, v: tuple[int, ...]) -> tuple[int, int]:
        """(x_0, x_1, ..., x_r) -> (x_0, sum g_i(x_i))."""
        F = self.ctx
        return v[0], F.sum(gi(xi) for gi, xi in zip(self.g, v[1:]))

    def bel_spread(self) -> SemifieldSpread:
        """{T_g(B(z)) : z in <v, U_f>} with v = (1, 0, ..., 0), built point by point.

        Members from z = v + u are the graphs of y -> S(x, y); those from z = u
        all collapse onto {(0, y)}.
        """
        self.require_bel()
        F = self.ctx
        graphs = []
        for x in F.elements():
            fx = [fi(x) for fi in self.f]
            pts = {}
            for y in F.elements():
                z_y = (y,) + tuple(F.mul(a, y) for a in fx)
                a, b = self.T_g(z_y)
                pts[a] = b
            h = LinPoly.from_images(F, [pts[b] for b in F.basis])
            if any(h(a) != b for a, b in pts.items()):  # pragma: no cover - linear by construction
                raise BelViolation("T_g image is not a graph")
            graphs.append(h)
        for x in F.nonzero():
            fx = [fi(x) for fi in self.f]
            image = {self.T_g((0,) + tuple(F.mul(a, y) for a in fx)) for y in F.elements()}
            if image != {(0, w) for w in F.elements()}:
                raise BelViolation("member through U_f is not A_inf")
        return SemifieldSpread(F, tuple(graphs))

    # -- r-reduction ----------------------------------------------------

    def psi(self, v) -> LinPoly:
        """psi_g(v) = sum g_i o (multiplication by v_i)."""
        F = self.ctx
        acc = LinPoly.zero(F)
        for gi, vi in zip(self.g, v):
            if vi:
                acc = acc + gi.compose(LinPoly.scalar(F, vi))
        return acc

    def psi_image(self) -> list[LinPoly]:
        """[psi_g(F(x)) for x in GF(q^n)]: the left multiplications of S_{f,g}."""
        self.require_dims()
        return [self.psi(tuple(fi(x) for fi in self.f)) for x in self.ctx.elements()]

    def find_spread_element_in_W(self):
        """A nonzero v with B(v) <= W_g, first nonzero coordinate 1; None if psi_g is injective."""
        self.require_dims()
        F, n, r = self.ctx, self.ctx.n, self.r
        # columns: F_q-coordinates of psi_g(b_j e_i)
        cols = []
        for i in range(r):
            for b in F.basis:
                v = [0] * r
                v[i] = b
                img = self.psi(v)
                cols.append([c for coeff in img.coeffs for c in F.coords(coeff)])
        M = [[col[k] for col in cols] for k in range(n * n)]
        kernel = linalg.nullspace(F, M)
        if not kernel:
            return None
        u = kernel[0]
        v = [F.from_coords(u[i * n:(i + 1) * n]) for i in range(r)]
        lead = next(c for c in v if c)
        s = F.inv(lead)
        return tuple(F.mul(s, c) for c in v)

    def reduce_r(self) -> "BelConfig":
        """Drop one coordinate using a spread member inside W_g."""
        if self.r <= 2:
            raise NotReducibleError("r = 2 configurations are not reduced further")
        v = self.find_spread_element_in_W()
        if v is None:
            raise NotReducibleError("W_g contains no member of the Desarguesian spread")
        k = next(i for i, c in enumerate(v) if c)
        F = self.ctx
        fk = self.f[k]
        f2 = tuple(fi - fk.scale(vi) for i, (fi, vi) in enumerate(zip(self.f, v)) if i != k)
        g2 = tuple(gi for i, gi in enumerate(self.g) if i != k)
        return BelConfig(F, f2, g2)

    # -- polarity -------------------------------------------------------

    def perp_transpose(self) -> "BelConfig":
        """[U_f, W_g] -> [W_g^perp, U_f^perp] = [U_(g^), W_(f^)]."""
        self.require_dims()
        return BelConfig(self.ctx, tuple(gi.adjoint() for gi in self.g), tuple(fi.adjoint() for fi in self.f))

    # -- moves ----------------------------------------------------------

    def gl_move(self, M: list[list[int]]) -> "BelConfig":
        """Apply v -> v M for an invertible r x r matrix M over GF(q^n).

        U_f maps to U_(f M) and W_g to W_(g M^-1); S_{f,g} is unchanged.
        """
        F, r = self.ctx, self.r
        Minv = linalg.inverse(F, M)
        f2 = tuple(
            _lin_sum(F, [self.f[i].scale(M[i][j]) for i in range(r)]) for j in range(r)
        )
        g2 = tuple(
            _lin_sum(F, [self.g[j].compose(LinPoly.scalar(F, Minv[i][j])) for j in range(r)]) for i in range(r)
        )
        return BelConfig(F, f2, g2)

    def reparametrize(self, A: LinPoly, B: LinPoly) -> "BelConfig":
        """(f A, B g): the same subspaces, multiplication becomes B(S(A x, y))."""
        return BelConfig(self.ctx, tuple(fi.compose(A) for fi in self.f), tuple(B.compose(gi) for gi in self.g))


def _lin_sum(F: FieldCtx, terms) -> LinPoly:
    acc = LinPoly.zero(F)
    for t in terms:
        acc = acc + t
    return acc


def spread_rep(F: FieldCtx, v) -> tuple[int, ...]:
    """Canonical representative of B(v): scale so the first nonzero entry is 1."""
    lead = next(c for c in v if c)
    s = F.inv(lead)
    return tuple(F.mul(s, c) for c in v)


def _is_multiple(F: FieldCtx, u, w) -> bool:
    k = next(i for i, c in enumerate(w) if c)
    if not u[k]:
        return False
    lam = F.div(u[k], w[k])
    return all(F.mul(lam, b) == a for a, b in zip(u, w))


# -- symplectic construction ---------------------------------------------


def _sqrt(F: FieldCtx, d: int):
    if not d:
        return 0
    if F.p == 2:
        return F.pfrob(d, -1)
    lg = F.log(d)
    if lg % 2:
        return None
    return F.pow(F.generator, lg // 2)


def _as_sum_of_squares(F: FieldCtx, d: int) -> list[int]:
    """[s_1, ..., s_k] with sum s_i^2 == d, k <= 2."""
    s = _sqrt(F, d)
    if s is not None:
        return [s]
    for a in F.nonzero():
        b = _sqrt(F, F.sub(d, F.mul(a, a)))
        if b is not None and b:
            return [a, b]
    raise FieldError(f"{d} is not a sum of two squares")  # pragma: no cover - impossible in odd char


def symmetric_rank_one_decomposition(F: FieldCtx, C) -> list[list[int]]:
    """Vectors v_k over GF(q^n) with C == sum_k v_k v_k^T.

    Diagonal pivots d clear a row and column with d w w^T (d split into at most
    two squares); a zero diagonal is first seeded with m (e_i + e_j)(e_i + e_j)^T.
    """
    n = len(C)
    M = [list(row) for row in C]
    if any(M[i][j] != M[j][i] for i in range(n) for j in range(n)):
        raise ValueError("matrix is not symmetric")
    terms: list[list[int]] = []

    def subtract(scale, w):
        for i in range(n):
            for j in range(n):
                if w[i] and w[j]:
                    M[i][j] = F.sub(M[i][j], F.mul(scale, F.mul(w[i], w[j])))

    def emit(scale, w):
        for s in _as_sum_of_squares(F, scale):
            terms.append([F.mul(s, wi) for wi in w])

    while any(any(row) for row in M):
        k = next((i for i in range(n) if M[i][i]), None)
        if k is not None:
            d = M[k][k]
            w = [F.div(M[i][k], d) for i in range(n)]
            emit(d, w)
            subtract(d, w)
        else:
            i, j = next((i, j) for i in range(n) for j in range(n) if M[i][j])
            m = M[i][j]
            w = [1 if t in (i, j) else 0 for t in range(n)]
            emit(m, w)
            subtract(m, w)
    return terms


def symplectic_config(C: CubicalMult) -> BelConfig:
    """Configuration (f, f^) from a commutative array C = sum v_k v_k^T.

    C plays the role of S^dtd; f_k has coefficient vector v_k.  A single-term
    decomposition is padded with the zero pair to keep r >= 2.
    """
    if not C.is_commutative():
        raise ValidityError("symplectic construction needs a symmetric array")
    F = C.ctx
    vs = symmetric_rank_one_decomposition(F, C.c)
    f = [LinPoly(F, tuple(v)) for v in vs]
    while len(f) < 2:
        f.append(LinPoly.zero(F))
    return BelConfig(F, tuple(f), tuple(fk.adjoint() for fk in f))


def random_config(F: FieldCtx, r: int, rng) -> BelConfig:
    """Random (f, g) with dims_ok; not necessarily BEL."""
    while True:
        B = BelConfig(F, tuple(LinPoly.random(F, rng) for _ in range(r)), tuple(LinPoly.random(F, rng) for _ in range(r)))
        if B.dims_ok():
            return B


def random_bel(F: FieldCtx, r: int, rng, tries: int = 20) -> BelConfig:
    """Random BEL-configuration.

    A few rounds of rejection sampling; otherwise a structured seed (the
    canonical configuration of a random presemifield when r >= n, an (a, b)
    pair for r < n), padded with zero coordinates, then a random GL(r, q^n)
    move and reparametrization.
    """
    from .semifield import random_presemifield  # noqa: PLC0415

    for _ in range(tries):
        B = random_config(F, r, rng)
        if B.is_bel():
            return B
    one, zero = LinPoly.identity(F), LinPoly.zero(F)
    if r >= F.n:
        seed = BelConfig.canonical(random_presemifield(F, rng))
    else:
        while True:
            a, b = LinPoly.random(F, rng), LinPoly.random(F, rng)
            seed = BelConfig(F, (one, a), (one, b))
            if seed.is_bel():
                break
    pad = r - seed.r
    seed = BelConfig(
        F,
        seed.f + tuple(LinPoly.random(F, rng) for _ in range(pad)),
        seed.g + (zero,) * pad,
    )
    while True:
        M = [[F.random(rng) for _ in range(r)] for _ in range(r)]
        try:
            moved = seed.gl_move(M)
        except linalg.SingularError:
            continue
        break
    return moved.reparametrize(LinPoly.random_invertible(F, rng), LinPoly.random_invertible(F, rng))
