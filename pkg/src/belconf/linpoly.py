"""q-linearized polynomials: the F_q-endomorphisms of GF(q^n).

A :class:`LinPoly` stores (f_0, ..., f_{n-1}) for f(x) = sum f_i x^(q^i).
The coefficient vector determines the map and vice versa.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import linalg
from .gf import FieldCtx
from .linalg import SingularError

_MOORE_INV: dict[FieldCtx, list[list[int]]] = {}


def _moore_inverse(F: FieldCtx) -> list[list[int]]:
    inv = _MOORE_INV.get(F)
    if inv is None:
        M = [[F.frob(b, i) for i in range(F.n)] for b in F.basis]
        inv = linalg.inverse(F, M)
        _MOORE_INV[F] = inv
    return inv


@dataclass(frozen=True)
class LinPoly:
    ctx: FieldCtx
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.ctx.n:
            raise ValueError(f"need {self.ctx.n} coefficients, got {len(self.coeffs)}")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, F: FieldCtx) -> "LinPoly":
        return cls(F, (0,) * F.n)

    @classmethod
    def identity(cls, F: FieldCtx) -> "LinPoly":
        return cls.scalar(F, 1)

    @classmethod
    def scalar(cls, F: FieldCtx, c: int) -> "LinPoly":
        """x -> c x."""
        return cls.monomial(F, c, 0)

    @classmethod
    def monomial(cls, F: FieldCtx, c: int, k: int) -> "LinPoly":
        """x -> c x^(q^k)."""
        cs = [0] * F.n
        cs[k % F.n] = c
        return cls(F, tuple(cs))

    @classmethod
    def from_images(cls, F: FieldCtx, images) -> "LinPoly":
        """The unique endomorphism sending F.basis[j] to images[j]."""
        inv = _moore_inverse(F)
        return cls(F, tuple(linalg.matvec(F, inv, list(images))))

    @classmethod
    def from_function(cls, F: FieldCtx, fn) -> "LinPoly":
        """Interpolate an F_q-linear callable (only evaluated on the basis)."""
        return cls.from_images(F, [fn(b) for b in F.basis])

    @classmethod
    def from_matrix(cls, F: FieldCtx, M: list[list[int]]) -> "LinPoly":
        images = [F.from_coords([M[i][j] for i in range(F.n)]) for j in range(F.n)]
        return cls.from_images(F, images)

    @classmethod
    def random(cls, F: FieldCtx, rng) -> "LinPoly":
        return cls(F, tuple(F.random(rng) for _ in range(F.n)))

    @classmethod
    def random_invertible(cls, F: FieldCtx, rng) -> "LinPoly":
        while True:
            f = cls.random(F, rng)
            if f.is_invertible():
                return f

    # -- evaluation -----------------------------------------------------

    def __call__(self, x: int) -> int:
        F = self.ctx
        acc = 0
        for i, c in enumerate(self.coeffs):
            if c:
                acc = F.add(acc, F.mul(c, F.frob(x, i)))
        return acc

    @cached_property
    def table(self) -> tuple[int, ...]:
        """Values at every field element, indexed by element."""
        return tuple(self(x) for x in self.ctx.elements())

    # -- algebra --------------------------------------------------------

    def __add__(self, other: "LinPoly") -> "LinPoly":
        F = self.ctx
        return LinPoly(F, tuple(F.add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "LinPoly":
        F = self.ctx
        return LinPoly(F, tuple(F.neg(a) for a in self.coeffs))

    def __sub__(self, other: "LinPoly") -> "LinPoly":
        return self + (-other)

    def scale(self, c: int) -> "LinPoly":
        """x -> c f(x)."""
        F = self.ctx
        return LinPoly(F, tuple(F.mul(c, a) for a in self.coeffs))

    def compose(self, g: "LinPoly") -> "LinPoly":
        """self after g: x -> self(g(x))."""
        F = self.ctx
        n = F.n
        out = [0] * n
        for i, fi in enumerate(self.coeffs):
            if not fi:
                continue
            for j, gj in enumerate(g.coeffs):
                if gj:
                    k = (i + j) % n
                    out[k] = F.add(out[k], F.mul(fi, F.frob(gj, i)))
        return LinPoly(F, tuple(out))

    __matmul__ = compose

    def adjoint(self) -> "LinPoly":
        """Adjoint for the trace form: tr(f(x) y) == tr(x f^(y))."""
        F = self.ctx
        n = F.n
        return LinPoly(F, tuple(F.frob(self.coeffs[(-i) % n], i) for i in range(n)))

    def frob_power(self, k: int) -> "LinPoly":
        """x -> f(x)^(q^k), i.e. the composite with the Frobenius on the left."""
        return LinPoly.monomial(self.ctx, 1, k).compose(self)

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # -- matrices -------------------------------------------------------

    def to_matrix(self) -> list[list[int]]:
        """Matrix over GF(q) in the basis F.basis; column j = coords of f(b_j)."""
        F = self.ctx
        cols = [F.coords(self(b)) for b in F.basis]
        return [[cols[j][i] for j in range(F.n)] for i in range(F.n)]

    def rank(self) -> int:
        return linalg.rank(self.ctx, self.to_matrix())

    def is_invertible(self) -> bool:
        return self.rank() == self.ctx.n

    def kernel(self) -> list[int]:
        """Kernel basis (as field elements), from the reduced echelon form."""
        F = self.ctx
        return [F.from_coords(v) for v in linalg.nullspace(F, self.to_matrix())]

    def inverse(self) -> "LinPoly":
        """Compositional inverse; raises SingularError for singular maps."""
        F = self.ctx
        try:
            Minv = linalg.inverse(F, self.to_matrix())
        except SingularError:
            raise SingularError("linearized polynomial is not invertible") from None
        return LinPoly.from_matrix(F, Minv)

    def __repr__(self):
        return f"LinPoly({list(self.coeffs)})"
