"""Isotopy of presemifields: invariants and an exhaustive search at desk scale."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .gf import FieldCtx
from .linpoly import LinPoly
from .semifield import CubicalMult

DEFAULT_BUDGET = 27


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Isotopism:
    """S2(A(x), B(y)) == C(S1(x, y)) for all x, y."""

    A: LinPoly
    B: LinPoly
    C: LinPoly

    def verify(self, S1, S2) -> bool:
        """Exhaustive check; S1 and S2 are any callables (x, y) -> field element."""
        F = self.A.ctx
        if not (self.A.is_invertible() and self.B.is_invertible() and self.C.is_invertible()):
            return False
        At, Bt, Ct = self.A.table, self.B.table, self.C.table
        for x in F.elements():
            ax = At[x]
            for y in F.elements():
                if S2(ax, Bt[y]) != Ct[S1(x, y)]:
                    return False
        return True

    @classmethod
    def identity(cls, F: FieldCtx) -> "Isotopism":
        one = LinPoly.identity(F)
        return cls(one, one, one)


def invariants(C: CubicalMult) -> dict:
    """Nuclei orders of the unitalization, plus q and n."""
    C.require_presemifield()
    left, mid, right, centre = C.nuclei()
    return {"q": C.ctx.q, "n": C.ctx.n, "left": left, "middle": mid, "right": right, "centre": centre}


def gl_images(F: FieldCtx, first=None):
    """Invertible maps as basis-image tuples, lexicographic in the images.

    Each image is chosen outside the F_q-span of the previous ones.  ``first``
    restricts the image of the first basis vector.
    """
    n = F.n
    scal = list(F.base_field)

    def rec(prefix, span):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        choices = [first] if (not prefix and first is not None) else F.elements()
        for v in choices:
            if v in span:
                continue
            new_span = {F.add(s, F.mul(c, v)) for s in span for c in scal}
            prefix.append(v)
            yield from rec(prefix, new_span)
            prefix.pop()

    yield from rec([], {0})


def _search_chunk(C1: CubicalMult, C2: CubicalMult, firsts) -> tuple | None:
    F = C1.ctx
    R1_one_inv = C1.right_mult(1).inverse()
    R1_basis = [C1.right_mult(b) for b in F.basis]
    R2 = {}
    for z in F.nonzero():
        R2[C2.right_mult(z).coeffs] = z
    R2_maps = {z: C2.right_mult(z) for z in F.nonzero()}
    for first in firsts:
        for images in gl_images(F, first):
            A = LinPoly.from_images(F, images)
            Ainv = A.inverse()
            AR = A.compose(R1_one_inv)
            probes = [R.compose(Ainv) for R in R1_basis]
            for yp in F.nonzero():
                C = R2_maps[yp].compose(AR)
                zs = []
                for P in probes:
                    z = R2.get(C.compose(P).coeffs)
                    if z is None:
                        break
                    zs.append(z)
                else:
                    B = LinPoly.from_images(F, zs)
                    iso = Isotopism(A, B, C)
                    if iso.verify(C1.mult, C2.mult):
                        return images, yp, iso
    return None


def isotopic_bruteforce(
    C1: CubicalMult,
    C2: CubicalMult,
    budget: int = DEFAULT_BUDGET,
    prune: bool = True,
    jobs: int = 1,
) -> Isotopism | None:
    """Exhaustive isotopism search; returns a verified witness or None.

    A runs over GL(n, q) and B(1) over the nonzero elements.  Then
    C = R2_{B(1)} A R1_1^-1 is forced, and each B(e_j) is read off by matching
    C R1_{e_j} A^-1 against the right multiplications of C2.  The witness is
    the first one in (A, B(1)) order whatever the number of workers.
    """
    F = C1.ctx
    if C2.ctx != F:
        raise ValueError("presemifields over different fields")
    if F.order > budget:
        raise BudgetExceeded(f"q^n = {F.order} exceeds the search budget {budget}")
    C1.require_presemifield()
    C2.require_presemifield()
    if prune:
        i1, i2 = invariants(C1), invariants(C2)
        if i1 != i2:
            return None
    firsts = list(F.nonzero())
    if jobs <= 1:
        found = _search_chunk(C1, C2, firsts)
        return found[2] if found else None
    size = -(-len(firsts) // jobs)
    chunks = [firsts[i:i + size] for i in range(0, len(firsts), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_search_chunk, [C1] * len(chunks), [C2] * len(chunks), chunks))
    for res in results:
        if res is not None:
            return res[2]
    return None
