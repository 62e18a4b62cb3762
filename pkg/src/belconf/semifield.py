"""Presemifields as cubical arrays c_ij, their spreads, nuclei and Knuth orbit.

The multiplication of a :class:`CubicalMult` is S(x, y) = sum c_ij x^(q^i) y^(q^j).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .gf import FieldCtx, FieldError
from .linpoly import LinPoly


class ValidityError(ValueError):
    """Input is not a presemifield (or otherwise outside an operation's domain)."""


KNUTH_WORDS = ("id", "t", "d", "td", "dt", "dtd")


@dataclass(frozen=True)
class CubicalMult:
    ctx: FieldCtx
    c: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.ctx.n
        if n < 2:
            raise ValidityError("n must be at least 2")
        if len(self.c) != n or any(len(row) != n for row in self.c):
            raise ValueError(f"cubical array must be {n}x{n}")

    @classmethod
    def field(cls, F: FieldCtx) -> "CubicalMult":
        return cls.from_dict(F, {(0, 0): 1})

    @classmethod
    def zero(cls, F: FieldCtx) -> "CubicalMult":
        return cls.from_dict(F, {})

    @classmethod
    def from_dict(cls, F: FieldCtx, entries: dict) -> "CubicalMult":
        n = F.n
        rows = [[0] * n for _ in range(n)]
        for (i, j), v in entries.items():
            i, j = i % n, j % n
            rows[i][j] = F.add(rows[i][j], v)
        return cls(F, tuple(map(tuple, rows)))

    @classmethod
    def from_bilinear(cls, F: FieldCtx, fn) -> "CubicalMult":
        """Recover c_ij from any F_q-bilinear callable fn(x, y)."""
        # row i of c is the coefficient vector of y -> r_i(y)
        right = [LinPoly.from_function(F, lambda x, y=y: fn(x, y)) for y in F.basis]
        rows = []
        for i in range(F.n):
            r_i = LinPoly.from_images(F, [R.coeffs[i] for R in right])
            rows.append(r_i.coeffs)
        return cls(F, tuple(rows))

    @classmethod
    def random(cls, F: FieldCtx, rng) -> "CubicalMult":
        return cls(F, tuple(tuple(F.random(rng) for _ in range(F.n)) for _ in range(F.n)))

    # -- multiplication -------------------------------------------------

    def mult(self, x: int, y: int) -> int:
        F = self.ctx
        acc = 0
        fx = [F.frob(x, i) for i in range(F.n)]
        fy = [F.frob(y, j) for j in range(F.n)]
        for i, row in enumerate(self.c):
            for j, cij in enumerate(row):
                if cij:
                    acc = F.add(acc, F.mul(cij, F.mul(fx[i], fy[j])))
        return acc

    __call__ = mult

    @cached_property
    def table(self) -> tuple[tuple[int, ...], ...]:
        """table[x][y] = S(x, y), built from the right-multiplication maps."""
        F = self.ctx
        cols = [self.right_mult(y).table for y in F.elements()]
        return tuple(tuple(cols[y][x] for y in F.elements()) for x in F.elements())

    def right_mult(self, y: int) -> LinPoly:
        """R_y: x -> S(x, y), coefficients r_i(y) = sum_j c_ij y^(q^j)."""
        F = self.ctx
        fy = [F.frob(y, j) for j in range(F.n)]
        return LinPoly(F, tuple(F.sum(F.mul(cij, fy[j]) for j, cij in enumerate(row)) for row in self.c))

    def left_mult(self, x: int) -> LinPoly:
        """L_x: y -> S(x, y), coefficients l_j(x) = sum_i c_ij x^(q^i)."""
        F = self.ctx
        fx = [F.frob(x, i) for i in range(F.n)]
        n = F.n
        return LinPoly(F, tuple(F.sum(F.mul(self.c[i][j], fx[i]) for i in range(n)) for j in range(n)))

    def spread_set(self) -> list[LinPoly]:
        return [self.right_mult(y) for y in self.ctx.elements()]

    def is_presemifield(self) -> bool:
        # R_y is F_q-linear in y, so checking one y per F_q-line suffices
        F = self.ctx
        seen = set()
        for y in F.nonzero():
            if y in seen:
                continue
            for s in F.base_field:
                seen.add(F.mul(s, y))
            if not self.right_mult(y).is_invertible():
                return False
        return True

    def has_zero_divisors(self) -> bool:
        """Direct scan of the multiplication table."""
        T = self.table
        return any(T[x][y] == 0 for x in self.ctx.nonzero() for y in self.ctx.nonzero())

    def is_commutative(self) -> bool:
        n = self.ctx.n
        return all(self.c[i][j] == self.c[j][i] for i in range(n) for j in range(n))

    def require_presemifield(self):
        if not self.is_presemifield():
            raise ValidityError("not a presemifield")

    # -- Knuth orbit ----------------------------------------------------

    def transpose(self) -> "CubicalMult":
        """c'_ij = c_{-i, j-i}^(q^i); the right multiplications become adjoints."""
        F, n = self.ctx, self.ctx.n
        return CubicalMult(
            F, tuple(tuple(F.frob(self.c[(-i) % n][(j - i) % n], i) for j in range(n)) for i in range(n))
        )

    def dual(self) -> "CubicalMult":
        """c'_ij = c_ji, i.e. S^d(x, y) = S(y, x)."""
        n = self.ctx.n
        return CubicalMult(self.ctx, tuple(tuple(self.c[j][i] for j in range(n)) for i in range(n)))

    def knuth(self, word: str, check: bool = True) -> "CubicalMult":
        """Apply a word in t, d, letters acting left to right ("td" = t first)."""
        if check:
            self.require_presemifield()
        return knuth_array(self, word)

    # -- unitalization and nuclei --------------------------------------

    def unitalize(self, e: int = 1) -> "CubicalMult":
        """Isotopic semifield x*y = S(R_e^-1 x, L_e^-1 y) with identity S(e, e)."""
        if not e:
            raise FieldError("unitalize needs e != 0")
        self.require_presemifield()
        Rinv = self.right_mult(e).inverse()
        Linv = self.left_mult(e).inverse()
        return CubicalMult.from_bilinear(self.ctx, lambda x, y: self.mult(Rinv(x), Linv(y)))

    def identity_element(self):
        """Two-sided identity if there is one, else None."""
        T = self.table
        F = self.ctx
        for u in F.nonzero():
            if all(T[u][z] == z and T[z][u] == z for z in F.elements()):
                return u
        return None

    def nuclei(self) -> tuple[int, int, int, int]:
        """(|N_l|, |N_m|, |N_r|, |Z|), computed on the unitalization at e = 1
        when the array has no identity."""
        S = self if self.identity_element() is not None else self.unitalize(1)
        return _nuclei_orders(S)

    def __repr__(self):
        return f"CubicalMult({[list(r) for r in self.c]})"


def knuth_array(C: CubicalMult, word: str) -> CubicalMult:
    word = "" if word == "id" else word
    out = C
    for letter in word:
        if letter == "t":
            out = out.transpose()
        elif letter == "d":
            out = out.dual()
        else:
            raise ValueError(f"unknown Knuth letter {letter!r}")
    return out


def _nuclei_orders(S: CubicalMult) -> tuple[int, int, int, int]:
    T = S.table
    els = list(S.ctx.elements())

    def assoc(x, y, z):
        return T[x][T[y][z]] == T[T[x][y]][z]

    # the nuclei are F_p-subspaces, but sizes are small enough to scan directly
    left = [x for x in els if all(assoc(x, y, z) for y in els for z in els)]
    mid = [y for y in els if all(assoc(x, y, z) for x in els for z in els)]
    right = [z for z in els if all(assoc(x, y, z) for x in els for y in els)]
    common = set(left) & set(mid) & set(right)
    centre = [a for a in common if all(T[a][b] == T[b][a] for b in els)]
    return len(left), len(mid), len(right), len(centre)


# -- spreads -------------------------------------------------------------


@dataclass(frozen=True)
class SemifieldSpread:
    """Graphs {(x, h(x))} for each h in ``graphs`` plus A_inf = {(0, x)}."""

    ctx: FieldCtx
    graphs: tuple[LinPoly, ...]

    def __len__(self):
        return len(self.graphs) + 1

    def subspaces(self) -> frozenset:
        """Members as frozensets of encoded vectors x + Q*y."""
        Q = self.ctx.order
        members = {frozenset(x + Q * h.table[x] for x in range(Q)) for h in self.graphs}
        members.add(frozenset(Q * y for y in range(Q)))
        return frozenset(members)

    def is_spread(self) -> bool:
        """q^n + 1 members of size q^n partitioning the nonzero vectors of V(2n, q)."""
        Q = self.ctx.order
        subs = self.subspaces()
        if len(subs) != Q + 1:
            return False
        seen = set()
        for S in subs:
            if len(S) != Q:
                return False
            for v in S:
                if v:
                    if v in seen:
                        return False
                    seen.add(v)
        return len(seen) == Q * Q - 1


def spread_of(C: CubicalMult) -> SemifieldSpread:
    C.require_presemifield()
    return SemifieldSpread(C.ctx, tuple(C.spread_set()))


def dual_spread_epsilon(S: SemifieldSpread) -> SemifieldSpread:
    """Image under the symplectic polarity b((a,b),(c,d)) = tr(ad - bc)."""
    return SemifieldSpread(S.ctx, tuple(h.adjoint() for h in S.graphs))


def b_epsilon(F: FieldCtx, u: tuple[int, int], v: tuple[int, int]) -> int:
    (a, b), (c, d) = u, v
    return F.trace(F.sub(F.mul(a, d), F.mul(b, c)))


def epsilon_perp(F: FieldCtx, subspace) -> frozenset:
    """Brute-force M^eps for M a set of encoded vectors x + Q*y."""
    Q = F.order
    vecs = [(v % Q, v // Q) for v in subspace]
    return frozenset(
        a + Q * b for a in range(Q) for b in range(Q) if all(b_epsilon(F, u, (a, b)) == 0 for u in vecs)
    )


def random_presemifield(F: FieldCtx, rng, tries: int = 50) -> CubicalMult:
    """A random array that is a presemifield.

    A few rounds of rejection sampling, then a random isotope
    C(S(A x, B y)) of the field or of a random valid twisted field.
    """
    for _ in range(tries):
        C = CubicalMult.random(F, rng)
        if C.is_presemifield():
            return C
    base = CubicalMult.field(F)
    for _ in range(tries):
        a, b = rng.randrange(1, F.n), rng.randrange(1, F.n)
        cand = CubicalMult.from_dict(F, {(0, 0): 1, (a, b): F.neg(F.random(rng, nonzero=True))})
        if cand.is_presemifield():
            base = cand
            break
    A, B, C = (LinPoly.random_invertible(F, rng) for _ in range(3))
    return CubicalMult.from_bilinear(F, lambda x, y: C(base.mult(A(x), B(y))))
