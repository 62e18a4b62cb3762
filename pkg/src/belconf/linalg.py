"""Dense Gaussian elimination over a (sub)field of a FieldCtx.

Matrices are lists of rows of field elements.  Entries are assumed to lie in
whichever subfield the caller works over; only field operations are used.
"""

from __future__ import annotations

from .gf import FieldCtx


class SingularError(ArithmeticError):
    pass


def rref(F: FieldCtx, M: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    A = [row[:] for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        s = F.inv(A[r][c])
        A[r] = [F.mul(v, s) for v in A[r]]
        for i in range(rows):
            if i != r and A[i][c]:
                m = A[i][c]
                A[i] = [F.sub(a, F.mul(m, b)) for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A, pivots


def rank(F: FieldCtx, M: list[list[int]]) -> int:
    if not M:
        return 0
    return len(rref(F, M)[1])


def nullspace(F: FieldCtx, M: list[list[int]]) -> list[list[int]]:
    """Basis of {v : M v = 0}, one vector per free column, in column order."""
    cols = len(M[0])
    R, pivots = rref(F, M)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * cols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = F.neg(R[i][fc])
        basis.append(v)
    return basis


def inverse(F: FieldCtx, M: list[list[int]]) -> list[list[int]]:
    n = len(M)
    aug = [row[:] + [int(i == j) for j in range(n)] for i, row in enumerate(M)]
    R, pivots = rref(F, aug)
    if pivots[:n] != list(range(n)):
        raise SingularError("matrix is singular")
    return [row[n:] for row in R]


def matmul(F: FieldCtx, A: list[list[int]], B: list[list[int]]) -> list[list[int]]:
    Bt = list(zip(*B))
    return [[F.sum(F.mul(a, b) for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(F: FieldCtx, A: list[list[int]], v) -> list[int]:
    return [F.sum(F.mul(a, b) for a, b in zip(row, v)) for row in A]
