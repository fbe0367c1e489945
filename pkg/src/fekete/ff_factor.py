"""Factorization of univariate polynomials over prime fields F_q.

Pipeline: squarefree decomposition (with the q-th root step needed in
characteristic q), distinct-degree splitting, then Cantor-Zassenhaus
equal-degree splitting with a seeded generator.  Factorization patterns
only need the first two stages.

The kernels work on numpy coefficient arrays (ascending, trimmed).  Storage is
float64 whenever every intermediate sum of a product is an integer below
2**53, so convolution and matrix products stay exact while running on the
fast floating-point paths; int64 covers sums below 2**62, and anything larger
falls back to Python integers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import _kernels
from .arith import is_prime
from .polynomials import FactorizationPattern, ModPolynomial

__all__ = [
    "FactorList",
    "discriminant_character",
    "discriminant_characters",
    "distinct_degree_factorization",
    "equal_degree_split",
    "factor",
    "factor_degree_stream",
    "first_factor_degree",
    "is_irreducible_mod",
    "is_squarefree_mod",
    "pattern",
    "squarefree_decomposition",
]

_FLOAT_EXACT = 1 << 53
_INT64_SAFE = 1 << 62
_KERNEL_Q = 1 << 31


class _Ring:
    """Arithmetic in F_q[x] on coefficient arrays of length <= max_len."""

    def __init__(self, q: int, max_len: int):
        if not is_prime(q):
            raise ValueError(f"expected a prime modulus, got {q}")
        self.q = q
        bound = (q - 1) ** 2 * (max_len + 1)
        if bound < _FLOAT_EXACT:
            self.dtype = np.float64
        elif bound < _INT64_SAFE:
            self.dtype = np.int64
        else:
            self.dtype = object
        self.compiled = self.dtype is not object

    def array(self, coeffs) -> np.ndarray:
        return self.trim(np.array([int(c) % self.q for c in coeffs], dtype=self.dtype))

    def mod(self, a: np.ndarray) -> np.ndarray:
        """Reduce into [0, q).  For float64 the floor quotient is exact since
        every entry is an integer below 2**53, and it avoids the slow float %."""
        if self.dtype is np.float64:
            t = a / self.q
            np.floor(t, out=t)
            t *= self.q
            return a - t
        return a % self.q

    @staticmethod
    def trim(a: np.ndarray) -> np.ndarray:
        if not a.size or a[-1]:
            return a
        nz = np.flatnonzero(a)
        return a[: nz[-1] + 1] if nz.size else a[:0]

    def to_poly(self, a: np.ndarray) -> ModPolynomial:
        return ModPolynomial((int(c) for c in a), self.q)

    def const(self, c: int) -> np.ndarray:
        return self.array((c,))

    def x(self) -> np.ndarray:
        return self.array((0, 1))

    def add(self, a, b):
        if len(a) < len(b):
            a, b = b, a
        out = a.copy()
        out[: len(b)] += b
        return self.trim(self.mod(out))

    def sub(self, a, b):
        n = max(len(a), len(b))
        out = np.zeros(n, dtype=self.dtype)
        out[: len(a)] += a
        out[: len(b)] -= b
        return self.trim(self.mod(out))

    def mul(self, a, b):
        if not len(a) or not len(b):
            return a[:0]
        return self.trim(self.mod(np.convolve(a, b)))

    def scale(self, a, c: int):
        return self.trim(self.mod(a * (c % self.q)))

    def monic(self, a):
        if not len(a) or a[-1] == 1:
            return a
        return self.scale(a, pow(int(a[-1]), -1, self.q))

    def divrem(self, a, b):
        if not len(b):
            raise ZeroDivisionError("polynomial division by zero")
        q = self.q
        db = len(b) - 1
        if len(a) <= db:
            return a[:0], a
        inv = pow(int(b[-1]), -1, q)
        r = a.copy()
        qt = np.zeros(len(a) - db, dtype=self.dtype)
        for k in range(len(a) - 1, db - 1, -1):
            c = int(r[k]) * inv % q
            if c:
                qt[k - db] = c
                r[k - db : k + 1] = self.mod(r[k - db : k + 1] - c * b)
        return self.trim(qt), self.trim(r[:db])

    def rem(self, a, b):
        return self.divrem(a, b)[1]

    def exact_div(self, a, b):
        qt, r = self.divrem(a, b)
        if len(r):
            raise ArithmeticError("inexact division in F_q[x]")
        return qt

    def gcd(self, a, b):
        if self.dtype is np.float64:
            return _kernels.gcd_f64(a, b, self.q)
        if self.compiled:
            g = _kernels.gcd_int64(a.astype(np.int64), b.astype(np.int64), self.q)
            return g.astype(self.dtype)
        while len(b):
            a, b = b, self.rem(a, b)
        return self.monic(a)

    def derivative(self, a):
        if len(a) <= 1:
            return a[:0]
        k = np.arange(1, len(a), dtype=self.dtype) % self.q
        return self.trim(self.mod(a[1:] * k))

    def random(self, n: int, rng: random.Random):
        return self.array(rng.randrange(self.q) for _ in range(n))


class _Modulus:
    """Fast reduction modulo a fixed monic f, plus the q-power Frobenius.

    Products are reduced with a precomputed inverse of the reversed modulus,
    so each reduction costs two convolutions.  ``frobenius`` raises to the
    q-th power by repeated squaring until the accumulated cost would have paid
    for the matrix of ``x^{iq} mod f``; after that it is a matrix product.
    """

    def __init__(self, ring: _Ring, f: np.ndarray):
        self.ring = ring
        self.f = f
        self.n = len(f) - 1
        self._inv = self._reversed_inverse(self.n - 1) if self.n >= 2 else None
        self._xq = None
        self._matrix = None
        self._power_work = 0

    def _reversed_inverse(self, m: int) -> np.ndarray:
        r, q = self.ring, self.ring.q
        rev = self.f[::-1]
        g = np.ones(1, dtype=r.dtype)
        k = 1
        while k < m:
            k = min(2 * k, m)
            e = r.mod(-np.convolve(rev[:k], g)[:k])
            e[0] = (e[0] + 2) % q
            g = r.mod(np.convolve(g, e)[:k])
        return g[:m]

    def reduce(self, a: np.ndarray) -> np.ndarray:
        n, r = self.n, self.ring
        if len(a) <= n:
            return a
        m = len(a) - n
        if self._inv is None or m > len(self._inv):
            return r.rem(a, self.f)
        quo = r.mod(np.convolve(a[::-1][:m], self._inv[:m])[:m])[::-1]
        low = r.mod(a[:n] - np.convolve(quo, self.f)[:n])
        return r.trim(low)

    def mulmod(self, a, b):
        return self.reduce(self.ring.mul(a, b))

    def powmod(self, a, e: int):
        result = self.ring.const(1)
        base = self.reduce(a)
        while e:
            if e & 1:
                result = self.mulmod(result, base)
            e >>= 1
            if e:
                base = self.mulmod(base, base)
        return result

    def x_power(self, e: int):
        """``x^e mod f``; multiplying by x is a shift, so only squarings cost."""
        r = self.ring
        result = r.const(1)
        for bit in bin(e)[2:]:
            result = self.mulmod(result, result)
            if bit == "1":
                shifted = np.zeros(len(result) + 1, dtype=r.dtype)
                shifted[1:] = result
                result = self.reduce(shifted)
        return result

    def x_to_q(self):
        if self._xq is None:
            self._xq = self.x_power(self.ring.q)
        return self._xq

    def _build_matrix(self):
        r, n = self.ring, self.n
        mat = np.zeros((n, n), dtype=r.dtype)
        row = r.const(1)
        xq = self.x_to_q()
        for i in range(n):
            mat[i, : len(row)] = row
            row = self.mulmod(row, xq)
        self._matrix = mat

    def frobenius(self, a):
        """``a^q mod f``."""
        r = self.ring
        if not len(a):
            return a
        if len(a) == 2 and a[0] == 0 and a[1] == 1:
            return self.x_to_q()
        if self._matrix is None:
            cost = 2 * r.q.bit_length()
            if self._power_work + cost <= self.n or self.n < 2:
                self._power_work += cost
                return self.powmod(a, r.q)
            self._build_matrix()
        a = self.reduce(a)
        v = np.zeros(self.n, dtype=self._matrix.dtype)
        v[: len(a)] = a
        return r.trim(r.mod(v @ self._matrix))


def _setup(f: ModPolynomial) -> tuple[_Ring, np.ndarray]:
    ring = _Ring(f.q, 2 * max(f.degree, 1) + 2)
    return ring, ring.array(f.coeffs)


def _sqf_arrays(ring: _Ring, f: np.ndarray) -> list[tuple[np.ndarray, int]]:
    """Squarefree decomposition of a monic array, Yun style with q-th roots."""
    q = ring.q
    out: list[tuple[np.ndarray, int]] = []
    c = ring.gcd(f, ring.derivative(f))
    w = ring.exact_div(f, c)
    i = 1
    while len(w) > 1:
        y = ring.gcd(w, c)
        z = ring.exact_div(w, y)
        if len(z) > 1:
            out.append((z, i))
        i += 1
        w = y
        c = ring.exact_div(c, y)
    if len(c) > 1:
        # c is a q-th power; over F_q the root just thins the exponents
        root = ring.trim(c[::q].copy())
        out.extend((g, m * q) for g, m in _sqf_arrays(ring, root))
    return out


def squarefree_decomposition(f: ModPolynomial) -> list[tuple[ModPolynomial, int]]:
    """Monic squarefree, pairwise coprime parts with their multiplicities.

    The unit of f is dropped; parts are sorted by multiplicity.
    """
    if f.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    ring, a = _setup(f)
    parts = _sqf_arrays(ring, ring.monic(a))
    return sorted(((ring.to_poly(g), m) for g, m in parts), key=lambda t: (t[1], t[0].coeffs))


def discriminant_character(f: ModPolynomial) -> int | None:
    """Legendre symbol of disc(f) modulo an odd q; 0 when f has a repeated factor.

    By Stickelberger's theorem a squarefree f of degree n with r irreducible
    factors has character ``(-1)^(n - r)``, which makes this a cheap filter.
    Returns None when q = 2 or the compiled kernel does not apply.
    """
    n = f.degree
    if n < 1:
        raise ValueError("need a polynomial of degree >= 1")
    ring, a = _setup(f)
    if ring.q == 2 or not ring.compiled:
        return None
    if n == 1:
        return 1
    a = ring.monic(a)
    res = int(_kernels.resultant_int64(a.astype(np.int64), ring.derivative(a).astype(np.int64), ring.q))
    if res == 0:
        return 0
    if (n * (n - 1) // 2) % 2:
        res = ring.q - res
    return 1 if pow(res, (ring.q - 1) // 2, ring.q) == 1 else -1


def reduce_rows(coeffs: Sequence[int], qs: Sequence[int]) -> np.ndarray:
    """Integer coefficients reduced modulo each q, one int64 row per q."""
    if max(map(abs, coeffs)) < 2**62:
        base = np.array(coeffs, dtype=np.int64)
    else:
        base = np.array(coeffs, dtype=object)
    mods = np.array(qs, dtype=base.dtype)[:, None]
    return (base[None, :] % mods).astype(np.int64)


def discriminant_characters(coeffs: Sequence[int], qs: Sequence[int]) -> list[int | None]:
    """:func:`discriminant_character` of one integer polynomial modulo many
    primes at once.  A row whose degree drops mod q gets None, as does q = 2."""
    n = len(coeffs) - 1
    if n < 2:
        raise ValueError("need a polynomial of degree >= 2")
    small = [q for q in qs if 2 < q < _KERNEL_Q]
    chars = {}
    if small:
        rows = reduce_rows(coeffs, small)
        found = _kernels.discriminant_characters(rows, np.array(small, dtype=np.int64))
        chars = dict(zip(small, found.tolist()))
    out: list[int | None] = []
    for q in qs:
        if q in chars:
            out.append(None if chars[q] == 2 else chars[q])
            continue
        fq = ModPolynomial(coeffs, q)
        out.append(discriminant_character(fq) if fq.degree == n else None)
    return out


def is_squarefree_mod(f: ModPolynomial) -> bool:
    if f.degree < 1:
        return True
    ring, a = _setup(f)
    return len(ring.gcd(a, ring.derivative(a))) == 1


def _ddf_arrays(
    ring: _Ring, f: np.ndarray, report_empty: bool = False
) -> Iterator[tuple[int, np.ndarray | None]]:
    cur = f
    if len(cur) <= 2:
        if len(cur) == 2:
            yield 1, cur
        return
    mod = _Modulus(ring, f)
    x = ring.x()
    h = x
    d = 0
    while len(cur) - 1 >= 2 * (d + 1):
        d += 1
        h = mod.frobenius(h)
        g = ring.gcd(cur, ring.sub(h, x))
        if len(g) > 1:
            yield d, g
            cur = ring.exact_div(cur, g)
        elif report_empty:
            yield d, None
    if len(cur) > 1:
        yield len(cur) - 1, cur


def distinct_degree_factorization(f: ModPolynomial) -> Iterator[tuple[int, ModPolynomial]]:
    """Lazily yield ``(d, product of all degree-d irreducible factors)``.

    f must be squarefree; it is made monic first.  Degrees come out in
    increasing order, so a caller can stop as soon as it has seen enough.
    """
    if f.is_zero():
        raise ValueError("distinct-degree factorization of zero")
    ring, a = _setup(f)
    for d, g in _ddf_arrays(ring, ring.monic(a)):
        yield d, ring.to_poly(g)


def factor_degree_stream(f: ModPolynomial) -> Iterator[tuple[int, int]]:
    """Yield ``(d, number of irreducible factors of degree d)`` for d = 1, 2, ...

    Every step is reported, including empty ones, so a consumer knows the
    complete list of factors of degree <= d after each item and can stop
    early.  The final item is the leftover irreducible factor, whose degree
    exceeds every step before it.  f must be squarefree.
    """
    if f.degree < 1:
        raise ValueError("need a polynomial of degree >= 1")
    ring, a = _setup(f)
    for d, g in _ddf_arrays(ring, ring.monic(a), report_empty=True):
        yield d, 0 if g is None else (len(g) - 1) // d


def first_factor_degree(f: ModPolynomial) -> int:
    """Degree of the smallest irreducible factor of a squarefree f.

    Equals ``f.degree`` exactly when f is irreducible; stops at the first
    factor found, which is what makes witness searches cheap.
    """
    if f.degree < 1:
        raise ValueError("need a polynomial of degree >= 1")
    ring, a = _setup(f)
    for d, _ in _ddf_arrays(ring, ring.monic(a)):
        return d
    raise AssertionError("unreachable")


def _edf_arrays(ring: _Ring, f: np.ndarray, d: int, rng: random.Random) -> list[np.ndarray]:
    n = len(f) - 1
    if n == d:
        return [f]
    q = ring.q
    mod = _Modulus(ring, f)
    while True:
        a = ring.random(n, rng)
        if len(a) < 2:
            continue
        if q == 2:
            # absolute trace GF(2^d) -> GF(2)
            t, acc = a, a
            for _ in range(d - 1):
                t = mod.mulmod(t, t)
                acc = ring.add(acc, t)
            b = acc
        else:
            t, norm = a, a
            for _ in range(d - 1):
                t = mod.frobenius(t)
                norm = mod.mulmod(norm, t)
            b = ring.sub(mod.powmod(norm, (q - 1) // 2), ring.const(1))
        g = ring.gcd(f, b)
        if 1 < len(g) < len(f):
            rest = ring.exact_div(f, g)
            return _edf_arrays(ring, g, d, rng) + _edf_arrays(ring, rest, d, rng)


def equal_degree_split(f: ModPolynomial, d: int, seed: int = 0) -> list[ModPolynomial]:
    """Split a monic squarefree product of degree-d irreducibles into its factors."""
    if f.degree % d:
        raise ValueError(f"degree {f.degree} is not a multiple of {d}")
    ring, a = _setup(f)
    parts = _edf_arrays(ring, ring.monic(a), d, random.Random(seed))
    return sorted(ring.to_poly(g) for g in parts)


@dataclass(frozen=True)
class FactorList:
    """``unit * prod(factor ** mult)`` with monic, distinct irreducible factors."""

    q: int
    unit: int
    factors: tuple[tuple[ModPolynomial, int], ...]

    def expand(self) -> ModPolynomial:
        out = ModPolynomial((self.unit,), self.q)
        for g, m in self.factors:
            out = out * g**m
        return out

    def pattern(self) -> FactorizationPattern:
        return FactorizationPattern((g.degree, m) for g, m in self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)


def factor(f: ModPolynomial, seed: int = 0) -> FactorList:
    """Complete factorization over F_q; reproducible for a fixed seed."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    ring, a = _setup(f)
    rng = random.Random(seed)
    found: list[tuple[ModPolynomial, int]] = []
    for part, m in _sqf_arrays(ring, ring.monic(a)):
        for d, g in _ddf_arrays(ring, part):
            for h in _edf_arrays(ring, g, d, rng):
                found.append((ring.to_poly(h), m))
    found.sort(key=lambda t: (t[0].degree, t[0].coeffs, t[1]))
    return FactorList(f.q, f.lc, tuple(found))


def pattern(f: ModPolynomial) -> FactorizationPattern:
    """Multiset of (degree, multiplicity) over the irreducible factors of f."""
    if f.is_zero():
        raise ValueError("pattern of the zero polynomial")
    if f.degree < 1:
        return FactorizationPattern()
    ring, a = _setup(f)
    pairs = []
    for part, m in _sqf_arrays(ring, ring.monic(a)):
        for d, g in _ddf_arrays(ring, part):
            pairs.extend([(d, m)] * ((len(g) - 1) // d))
    return FactorizationPattern(pairs)


def _prime_divisors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible_mod(f: ModPolynomial) -> bool:
    """Rabin's test: ``x^{q^n} = x mod f`` and ``gcd(x^{q^{n/r}} - x, f) = 1``
    for every prime r dividing n."""
    if f.degree < 1:
        raise ValueError("irreducibility needs degree >= 1")
    n = f.degree
    if n == 1:
        return True
    ring, a = _setup(f)
    a = ring.monic(a)
    mod = _Modulus(ring, a)
    x = ring.x()
    checkpoints = {n // r for r in _prime_divisors(n)}
    h = x
    for k in range(1, n + 1):
        h = mod.frobenius(h)
        if k in checkpoints and len(ring.gcd(a, ring.sub(h, x))) != 1:
            return False
    return np.array_equal(h, x)
