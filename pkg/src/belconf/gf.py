"""Exact arithmetic in the tower GF(p) <= GF(q) <= GF(q^n).

Elements are plain ints.  Internally an element is the base-p digit string of
its coordinates over the Conway polynomial of degree e*n (the absolute
representation); :meth:`FieldCtx.encode` / :meth:`FieldCtx.decode` convert to
the tower encoding used for I/O, where the GF(q)-coordinates in the power
basis of ``irr_ext`` are flattened little-endian.  For e == 1 the two agree.

Small fields (q^n <= 2^16) use log / antilog / Zech tables; larger ones fall
back to polynomial arithmetic.
"""

from __future__ import annotations

from functools import cached_property
from math import gcd

from .conway import conway_polynomial, is_prime, _prime_factors

TABLE_LIMIT = 1 << 16


class FieldError(ArithmeticError):
    """Domain errors in field arithmetic (inverting zero, bad parameters)."""


def factor_prime_power(q: int) -> tuple[int, int]:
    fs = _prime_factors(q) if q > 1 else []
    if len(fs) != 1:
        raise FieldError(f"{q} is not a prime power")
    p = fs[0]
    e = 0
    while q > 1:
        q //= p
        e += 1
    return p, e


def _to_digits(x: int, p: int, d: int) -> list[int]:
    out = []
    for _ in range(d):
        x, r = divmod(x, p)
        out.append(r)
    return out


def _from_digits(ds, p: int) -> int:
    x = 0
    for c in reversed(ds):
        x = x * p + c
    return x


def _inverse_mod_p(M: list[list[int]], p: int) -> list[list[int]]:
    n = len(M)
    A = [row[:] + [int(i == j) for j in range(n)] for i, row in enumerate(M)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] % p), None)
        if piv is None:
            raise FieldError("singular matrix over GF(p)")
        A[col], A[piv] = A[piv], A[col]
        s = pow(A[col][col], p - 2, p)
        A[col] = [(v * s) % p for v in A[col]]
        for r in range(n):
            if r != col and A[r][col]:
                m = A[r][col]
                A[r] = [(a - m * b) % p for a, b in zip(A[r], A[col])]
    return [row[n:] for row in A]


class FieldCtx:
    """GF(q^n) with q = p^e, built on the Conway polynomial of degree e*n.

    Immutable once constructed; equality is by (p, e, n).
    """

    def __init__(self, p: int, e: int = 1, n: int = 2):
        if not is_prime(p):
            raise FieldError(f"p={p} is not prime")
        if e < 1 or n < 1:
            raise FieldError("e and n must be positive")
        self.p, self.e, self.n = p, e, n
        self.q = p**e
        self.order = self.q**n
        self.deg = e * n
        self._N = self.order - 1
        self.conway = conway_polynomial(p, self.deg)
        self.tables = self.order <= TABLE_LIMIT
        if self.tables:
            self._build_tables()
        self._frob_cache: dict[int, list[int]] = {}

    @classmethod
    def from_q(cls, q: int, n: int) -> "FieldCtx":
        p, e = factor_prime_power(q)
        return cls(p, e, n)

    def __repr__(self):
        return f"FieldCtx(p={self.p}, e={self.e}, n={self.n})"

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.p, self.e, self.n) == (other.p, other.e, other.n)

    def __hash__(self):
        return hash((self.p, self.e, self.n))

    def __reduce__(self):
        return (FieldCtx, (self.p, self.e, self.n))

    def header(self) -> str:
        return f"gf p={self.p} e={self.e} n={self.n}"

    # -- construction ---------------------------------------------------

    def _poly_mul(self, a: int, b: int) -> int:
        p, d, f = self.p, self.deg, self.conway
        A = _to_digits(a, p, d)
        B = _to_digits(b, p, d)
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(A):
            if ai:
                for j, bj in enumerate(B):
                    if bj:
                        prod[i + j] = (prod[i + j] + ai * bj) % p
        for k in range(len(prod) - 1, d - 1, -1):
            c = prod[k]
            if c:
                for j in range(d + 1):
                    prod[k - d + j] = (prod[k - d + j] - c * f[j]) % p
        return _from_digits(prod[:d], p)

    def _build_tables(self):
        N = self._N
        g = self.p if self.deg > 1 else (-self.conway[0]) % self.p
        exp = [0] * (2 * N + 2)
        log = [0] * self.order
        x = 1
        for i in range(N):
            exp[i] = x
            log[x] = i
            x = self._poly_mul(x, g) if self.deg > 1 else (x * g) % self.p
        for i in range(N, 2 * N + 2):
            exp[i] = exp[i - N]
        self._exp, self._log = exp, log
        if self.p != 2:
            # zech[k] = log(1 + g^k), or -1 when 1 + g^k == 0
            zech = [0] * N
            for k in range(N):
                s = self._add_digits(1, exp[k])
                zech[k] = log[s] if s else -1
            self._zech = zech
            self._half = N // 2

    def _add_digits(self, a: int, b: int) -> int:
        p = self.p
        out, place = 0, 1
        while a or b:
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + rb) % p) * place
            place *= p
        return out

    # -- arithmetic -----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if not a:
            return b
        if not b:
            return a
        if not self.tables:
            return self._add_digits(a, b)
        la, lb = self._log[a], self._log[b]
        z = self._zech[(lb - la) % self._N]
        if z < 0:
            return 0
        return self._exp[la + z]

    def neg(self, a: int) -> int:
        if self.p == 2 or not a:
            return a
        if self.tables:
            return self._exp[self._log[a] + self._half]
        return _from_digits([(-c) % self.p for c in _to_digits(a, self.p, self.deg)], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        if self.tables:
            return self._exp[self._log[a] + self._log[b]]
        return self._poly_mul(a, b)

    def pow(self, a: int, k: int) -> int:
        if k == 0:
            return 1
        if not a:
            if k < 0:
                raise FieldError("zero has no inverse")
            return 0
        if self.tables:
            return self._exp[(self._log[a] * k) % self._N]
        k %= self._N
        r = 1
        while k:
            if k & 1:
                r = self._poly_mul(r, a)
            a = self._poly_mul(a, a)
            k >>= 1
        return r

    def inv(self, a: int) -> int:
        if not a:
            raise FieldError("zero has no inverse")
        if self.tables:
            return self._exp[(self._N - self._log[a]) % self._N]
        return self.pow(a, self._N - 1)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def sum(self, xs) -> int:
        acc = 0
        for x in xs:
            acc = self.add(acc, x)
        return acc

    def scalar(self, k: int) -> int:
        """The image of the integer k in GF(p)."""
        return k % self.p

    def log(self, a: int) -> int:
        if not a:
            raise FieldError("log of zero")
        if self.tables:
            return self._log[a]
        raise FieldError("discrete log needs tables")  # pragma: no cover

    @cached_property
    def generator(self) -> int:
        """The primitive element (root of the Conway polynomial)."""
        return self.p if self.deg > 1 else (-self.conway[0]) % self.p

    # -- automorphisms, trace, norm ------------------------------------

    def frob(self, x: int, k: int) -> int:
        """x^(q^k); k is taken modulo n."""
        k %= self.n
        if k == 0 or not x:
            return x
        if self.tables:
            tab = self._frob_cache.get(k)
            if tab is None:
                e = self.q**k
                tab = [0] + [self._exp[(self._log[y] * e) % self._N] for y in range(1, self.order)]
                self._frob_cache[k] = tab
            return tab[x]
        return self.pow(x, self.q**k)

    def pfrob(self, x: int, k: int) -> int:
        """x^(p^k), the absolute Frobenius; k is taken modulo e*n."""
        return self.pow(x, self.p ** (k % self.deg)) if x else 0

    @cached_property
    def _trace_table(self):
        return [self._trace(x) for x in range(self.order)]

    def _trace(self, x):
        acc = x
        for k in range(1, self.n):
            acc = self.add(acc, self.frob(x, k))
        return acc

    def trace(self, x: int) -> int:
        """Relative trace GF(q^n) -> GF(q)."""
        if self.tables:
            return self._trace_table[x]
        return self._trace(x)

    def rel_norm(self, x: int, t: int) -> int:
        """Norm to the subfield of index t: x * x^b * ... * x^(b^(t-1)), b = q^(n/t)."""
        if t <= 0 or self.n % t:
            raise FieldError(f"t={t} does not divide n={self.n}")
        if not x:
            return 0
        s = self.n // t
        # exponent (q^n - 1) / (q^s - 1)
        return self.pow(x, self._N // (self.q**s - 1))

    # -- element sets ---------------------------------------------------

    def elements(self) -> range:
        return range(self.order)

    def nonzero(self) -> range:
        return range(1, self.order)

    @cached_property
    def base_field(self) -> tuple[int, ...]:
        """Elements of GF(q), in increasing int order."""
        return tuple(x for x in self.elements() if self.frob(x, 1) == x)

    def in_base(self, x: int) -> bool:
        return self.frob(x, 1) == x

    def subfield(self, s: int) -> tuple[int, ...]:
        """Elements of GF(q^s) for s | n."""
        if self.n % s:
            raise FieldError(f"{s} does not divide n={self.n}")
        return tuple(x for x in self.elements() if self.frob(x, s) == x)

    # -- coordinates and encoding --------------------------------------

    @cached_property
    def basis(self) -> tuple[int, ...]:
        """F_q-basis 1, g, ..., g^(n-1) of GF(q^n)."""
        return tuple(self.pow(self.generator, i) for i in range(self.n))

    @cached_property
    def base_basis(self) -> tuple[int, ...]:
        """F_p-basis 1, h, ..., h^(e-1) of GF(q), h the Conway root of degree e."""
        h = self.pow(self.generator, self._N // (self.q - 1))
        return tuple(self.pow(h, j) for j in range(self.e))

    @cached_property
    def _coord_inverse(self):
        # column i*e + j holds the GF(p)-digits of g^i h^j
        cols = [
            _to_digits(self.mul(b, h), self.p, self.deg) for b in self.basis for h in self.base_basis
        ]
        M = [[cols[c][r] for c in range(self.deg)] for r in range(self.deg)]
        return _inverse_mod_p(M, self.p)

    def _flat(self, x: int) -> list[int]:
        ds = _to_digits(x, self.p, self.deg)
        return [sum(a * b for a, b in zip(row, ds)) % self.p for row in self._coord_inverse]

    def coords(self, x: int) -> tuple[int, ...]:
        """Coordinates of x over GF(q) in :attr:`basis` (each an element of GF(q))."""
        flat = self._flat(x)
        e = self.e
        out = []
        for i in range(self.n):
            acc = 0
            for j in range(e):
                c = flat[i * e + j]
                if c:
                    acc = self.add(acc, self.mul(c, self.base_basis[j]))
            out.append(acc)
        return tuple(out)

    def from_coords(self, cs) -> int:
        acc = 0
        for c, b in zip(cs, self.basis):
            acc = self.add(acc, self.mul(c, b))
        return acc

    def encode(self, x: int) -> int:
        """Integer code of x: sum of a_k p^k over the flattened tower coordinates."""
        if self.e == 1:
            return x
        return _from_digits(self._flat(x), self.p)

    def decode(self, k: int) -> int:
        if not 0 <= k < self.order:
            raise FieldError(f"encoding {k} out of range for GF({self.order})")
        if self.e == 1:
            return k
        ds = _to_digits(k, self.p, self.deg)
        acc = 0
        for i, b in enumerate(self.basis):
            for j, h in enumerate(self.base_basis):
                c = ds[i * self.e + j]
                if c:
                    acc = self.add(acc, self.mul(c, self.mul(b, h)))
        return acc

    @cached_property
    def irr_base(self) -> tuple[int, ...]:
        """Conway polynomial of degree e over GF(p), lowest degree first."""
        return conway_polynomial(self.p, self.e)

    @cached_property
    def irr_ext(self) -> tuple[int, ...]:
        """Minimal polynomial of the generator over GF(q), as field elements, lowest first."""
        poly = [1]
        for k in range(self.n):
            root = self.neg(self.frob(self.generator, k))
            nxt = [0] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i + 1] = self.add(nxt[i + 1], c)
                nxt[i] = self.add(nxt[i], self.mul(c, root))
            poly = nxt
        return tuple(poly)

    def random(self, rng, nonzero: bool = False) -> int:
        lo = 1 if nonzero else 0
        return rng.randrange(lo, self.order)


def aut_order(ctx: FieldCtx, k: int) -> int:
    """Order of x -> x^(q^k) in Aut(GF(q^n) : GF(q))."""
    return ctx.n // gcd(k % ctx.n, ctx.n) if k % ctx.n else 1
