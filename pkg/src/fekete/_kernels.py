"""Compiled inner loops for F_q[x] arithmetic on int64 or float64
coefficient arrays.

Callers guarantee coefficients lie in [0, q) and q**2 fits comfortably in
int64.  The float64 kernels hold exact integers; they apply while every
lazily accumulated entry stays below 2**53.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _inverse(a, q):
    # extended Euclid on scalars
    t, new_t, r, new_r = 0, 1, q, a % q
    while new_r:
        k = r // new_r
        t, new_t = new_t, t - k * new_t
        r, new_r = new_r, r - k * new_r
    return t % q


@njit(cache=True)
def _reduce(t, q, qinv):
    # t in [0, q*q + q); a float reciprocal avoids the slow integer division
    r = t - q * np.int64(t * qinv)
    if r < 0:
        r += q
    elif r >= q:
        r -= q
    return r


@njit(cache=True)
def _top(a, d):
    while d >= 0 and a[d] == 0:
        d -= 1
    return d


@njit(cache=True)
def _lazy_ok(n, q):
    # n division steps may each add (q-1)**2 before one final reduction
    return (q - 1) * (q - 1) <= (2**62) // (n + 2)


@njit(cache=True)
def _divide(a, da, b, db, q, inv, lazy, qinv):
    """Replace a (degree da) by a mod b in place and return its degree.

    b is reduced with leading coefficient inverse ``inv``.  In lazy mode
    only the leading coefficient is reduced each step; every entry is
    reduced once at the end.
    """
    while da >= db:
        c = a[da] % q * inv % q
        a[da] = 0
        if c:
            off = da - db
            neg = q - c
            if lazy:
                for j in range(db):
                    a[off + j] += neg * b[j]
            else:
                for j in range(db):
                    a[off + j] = _reduce(a[off + j] + neg * b[j], q, qinv)
        da -= 1
        if not lazy:
            da = _top(a, da)
    if lazy:
        for j in range(da + 1):
            a[j] %= q
    return _top(a, da)


@njit(cache=True)
def float_ok(n, q):
    # n + 2 unreduced products of residues stay exact in a double
    return (q - 1) * (q - 1) <= (2**53) // (n + 2)


@njit(cache=True)
def _fred(t, q):
    r = t - q * np.floor(t / q)
    if r < 0.0:
        r += q
    elif r >= q:
        r -= q
    return r


@njit(cache=True, fastmath=True)
def _axpy(y, y0, x, n, c):
    # separate so LLVM sees two distinct buffers and vectorizes
    for j in range(n):
        y[y0 + j] += c * x[j]


@njit(cache=True)
def _topf(a, d):
    while d >= 0 and a[d] == 0.0:
        d -= 1
    return d


@njit(cache=True)
def _divide_f(a, da, b, db, q, inv):
    """Float64 twin of ``_divide`` in lazy mode; q and inv are floats."""
    while da >= db:
        c = _fred(_fred(a[da], q) * inv, q)
        a[da] = 0.0
        if c != 0.0:
            _axpy(a, da - db, b, db, q - c)
        da -= 1
    for j in range(da + 1):
        a[j] = _fred(a[j], q)
    return _topf(a, da)


@njit(cache=True)
def gcd_f64(a_in, b_in, q):
    """Monic gcd of two float64 coefficient arrays; needs ``float_ok``."""
    a = a_in.copy()
    b = b_in.copy()
    qf = float(q)
    da = _topf(a, a.size - 1)
    db = _topf(b, b.size - 1)
    while db >= 0:
        inv = float(_inverse(np.int64(b[db]), q))
        da = _divide_f(a, da, b, db, qf, inv)
        a, b = b, a
        da, db = db, da
    if da < 0:
        return a[:0].copy()
    inv = float(_inverse(np.int64(a[da]), q))
    out = np.empty(da + 1)
    for j in range(da + 1):
        out[j] = _fred(a[j] * inv, qf)
    return out


@njit(cache=True)
def resultant_f64(a_in, b_in, q):
    """``resultant_int64`` on float64 arrays; needs ``float_ok``."""
    a = a_in.copy()
    b = b_in.copy()
    qf = float(q)
    da = _topf(a, a.size - 1)
    db = _topf(b, b.size - 1)
    if da < 0 or db < 0:
        return 0
    res = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if (da * db) % 2:
            res = q - 1
    while db > 0:
        lb = np.int64(b[db])
        d0 = da
        da = _divide_f(a, da, b, db, qf, float(_inverse(lb, q)))
        if da < 0:
            return 0
        if (d0 * db) % 2:
            res = (q - res) % q
        for _ in range(d0 - da):
            res = res * lb % q
        a, b = b, a
        da, db = db, da
    b0 = np.int64(b[0])
    for _ in range(da):
        res = res * b0 % q
    return res


@njit(cache=True)
def gcd_int64(a_in, b_in, q):
    """Monic gcd of two coefficient arrays (ascending)."""
    a = a_in.copy()
    b = b_in.copy()
    qinv = 1.0 / q
    lazy = _lazy_ok(max(a.size, b.size), q)
    da = _top(a, a.size - 1)
    db = _top(b, b.size - 1)
    while db >= 0:
        da = _divide(a, da, b, db, q, _inverse(b[db], q), lazy, qinv)
        a, b = b, a
        da, db = db, da
    if da < 0:
        return a[:0].copy()
    inv = _inverse(a[da], q)
    out = np.empty(da + 1, dtype=np.int64)
    for j in range(da + 1):
        out[j] = a[j] * inv % q
    return out


@njit(cache=True)
def resultant_int64(a_in, b_in, q):
    """Res(a, b) mod q, with Res(a, b) = lc(a)^deg b * prod b(roots of a)."""
    a = a_in.copy()
    b = b_in.copy()
    qinv = 1.0 / q
    da = _top(a, a.size - 1)
    db = _top(b, b.size - 1)
    if da < 0 or db < 0:
        return 0
    lazy = _lazy_ok(max(a.size, b.size), q)
    res = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if (da * db) % 2:
            res = q - 1
    while db > 0:
        lb = b[db]
        inv = _inverse(lb, q)
        d0 = da
        da = _divide(a, da, b, db, q, inv, lazy, qinv)
        if da < 0:
            return 0
        if (d0 * db) % 2:
            res = (q - res) % q
        for _ in range(d0 - da):
            res = res * lb % q
        a, b = b, a
        da, db = db, da
    for _ in range(da):
        res = res * b[0] % q
    return res


@njit(cache=True)
def _powmod(b, e, q):
    r = 1
    b %= q
    while e:
        if e & 1:
            r = r * b % q
        b = b * b % q
        e >>= 1
    return r


@njit(cache=True)
def discriminant_characters(rows, qs):
    """Legendre symbol of disc(f_i) mod q_i for rows of reduced coefficients
    (odd q_i); 0 for a repeated factor, 2 when the leading coefficient
    vanishes mod q_i."""
    k, width = rows.shape
    n = width - 1
    out = np.empty(k, dtype=np.int64)
    a = np.empty(width, dtype=np.int64)
    b = np.empty(n, dtype=np.int64)
    af = np.empty(width)
    bf = np.empty(n)
    for i in range(k):
        q = qs[i]
        if rows[i, n] == 0:
            out[i] = 2
            continue
        inv = _inverse(rows[i, n], q)
        for j in range(width):
            a[j] = rows[i, j] * inv % q
        for j in range(n):
            b[j] = (j + 1) * a[j + 1] % q
        if float_ok(width, q):
            for j in range(width):
                af[j] = a[j]
            for j in range(n):
                bf[j] = b[j]
            res = resultant_f64(af, bf, q)
        else:
            res = resultant_int64(a, b, q)
        if res == 0:
            out[i] = 0
            continue
        if (n * (n - 1) // 2) % 2:
            res = q - res
        out[i] = 1 if _powmod(res, (q - 1) // 2, q) == 1 else -1
    return out
