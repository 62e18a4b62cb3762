"""Conway polynomials over prime fields, computed by exhaustive search.

Polynomials are coefficient lists, lowest degree first, entries in [0, p).
The search is only meant for the small fields this package works with.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and _prime_factors(n) == [n]


def _mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    # f monic of degree d; a, b of length d
    d = len(f) - 1
    prod = [0] * (2 * d - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for k in range(len(prod) - 1, d - 1, -1):
        c = prod[k]
        if c:
            for j in range(d + 1):
                prod[k - d + j] = (prod[k - d + j] - c * f[j]) % p
    return prod[:d]


def _powmod(base: list[int], e: int, f: list[int], p: int) -> list[int]:
    d = len(f) - 1
    result = [1] + [0] * (d - 1)
    while e:
        if e & 1:
            result = _mulmod(result, base, f, p)
        base = _mulmod(base, base, f, p)
        e >>= 1
    return result


def _x_mod(f: list[int]) -> list[int]:
    # requires deg f >= 2
    return [0, 1] + [0] * (len(f) - 3)


def _eval_at(poly: list[int], y: list[int], f: list[int], p: int) -> list[int]:
    """Evaluate ``poly`` at the residue ``y`` modulo ``f`` (Horner)."""
    d = len(f) - 1
    acc = [0] * d
    for c in reversed(poly):
        acc = _mulmod(acc, y, f, p)
        acc[0] = (acc[0] + c) % p
    return acc


def is_primitive(f: list[int], p: int) -> bool:
    """True iff the monic ``f`` is primitive over GF(p) (hence irreducible)."""
    d = len(f) - 1
    if f[0] % p == 0:
        return False
    N = p**d - 1
    if d == 1:
        g = (-f[0]) % p
        return all(pow(g, N // r, p) != 1 for r in _prime_factors(N)) if N > 1 else g == 1
    x = _x_mod(f)
    one = [1] + [0] * (d - 1)
    if _powmod(x, N, f, p) != one:
        return False
    return all(_powmod(x, N // r, f, p) != one for r in _prime_factors(N))


def _candidates(p: int, d: int):
    # Conway order: f = x^d + sum (-1)^(d-i) a_i x^i, compared on (a_{d-1}, ..., a_0)
    for tail in product(range(p), repeat=d):
        coeffs = [0] * (d + 1)
        coeffs[d] = 1
        for k, a in enumerate(tail):
            i = d - 1 - k
            coeffs[i] = (a if (d - i) % 2 == 0 else -a) % p
        yield coeffs


@lru_cache(maxsize=None)
def conway_polynomial(p: int, d: int) -> tuple[int, ...]:
    """The Conway polynomial of degree ``d`` over GF(p), lowest degree first."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if d < 1:
        raise ValueError("degree must be positive")
    subs = [m for m in range(1, d) if d % m == 0]
    N = p**d - 1
    for f in _candidates(p, d):
        if not is_primitive(f, p):
            continue
        if d > 1 and subs:
            x = _x_mod(f)
            ok = True
            for m in subs:
                y = _powmod(x, N // (p**m - 1), f, p)
                if any(_eval_at(list(conway_polynomial(p, m)), y, f, p)):
                    ok = False
                    break
            if not ok:
                continue
        return tuple(f)
    raise RuntimeError(f"no Conway polynomial found for p={p}, d={d}")  # pragma: no cover
