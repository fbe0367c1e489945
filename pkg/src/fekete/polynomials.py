"""Dense univariate polynomials over Z and over prime fields.

Coefficients are stored in ascending order: ``c[k]`` multiplies ``x**k``.
The zero polynomial has an empty coefficient tuple and degree -1.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "FactorizationPattern",
    "IntPolynomial",
    "ModPolynomial",
    "dickson",
    "discriminant",
    "fold_to_reduced",
    "reciprocal_check",
    "reduce_mod",
    "resultant",
    "sturm_root_count",
    "sturm_sequence",
    "sylvester_resultant",
    "unfold",
]


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPolynomial:
    """Immutable polynomial with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _trim(int(a) for a in coeffs)
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls((0,) * k + (c,))

    @classmethod
    def from_text(cls, text: str) -> "IntPolynomial":
        """Parse the canonical ascending ``"c0 c1 c2 ..."`` form."""
        return cls(int(tok) for tok in text.split())

    def to_text(self) -> str:
        return " ".join(str(a) for a in self.coeffs) if self.coeffs else "0"

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("IntPolynomial", self.coeffs))

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            a = self.coeffs[k]
            if a == 0:
                continue
            mag = abs(a)
            body = "" if (mag == 1 and k) else str(mag)
            if k == 1:
                body += "x"
            elif k > 1:
                body += f"x^{k}"
            sign = "-" if a < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    @staticmethod
    def _coerce(other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-a for a in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = IntPolynomial((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c: int) -> "IntPolynomial":
        return IntPolynomial(c * a for a in self.coeffs)

    def exact_div_scalar(self, c: int) -> "IntPolynomial":
        out = []
        for a in self.coeffs:
            qt, r = divmod(a, c)
            if r:
                raise ValueError(f"{c} does not divide every coefficient")
            out.append(qt)
        return IntPolynomial(out)

    def divrem(self, other: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Quotient and remainder over Z.

        Each elimination step must divide exactly by the leading coefficient
        of the divisor; that always holds for monic or unit-leading divisors.
        """
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db, lb = other.degree, other.lc
        if len(r) - 1 < db:
            return IntPolynomial(), self
        qt = [0] * (len(r) - db)
        b = other.coeffs
        for k in range(len(r) - 1, db - 1, -1):
            a = r[k]
            if a == 0:
                continue
            c, rem = divmod(a, lb)
            if rem:
                raise ValueError("inexact division over Z; use pseudo_divrem")
            qt[k - db] = c
            off = k - db
            for j in range(db + 1):
                r[off + j] -= c * b[j]
        return IntPolynomial(qt), IntPolynomial(r)

    def __divmod__(self, other):
        return self.divrem(other)

    def __floordiv__(self, other):
        return self.divrem(other)[0]

    def __mod__(self, other):
        return self.divrem(other)[1]

    def pseudo_rem(self, other: "IntPolynomial") -> "IntPolynomial":
        """``lc(other)**(deg self - deg other + 1) * self mod other``."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db, lb = other.degree, other.lc
        b = other.coeffs
        delta = len(r) - 1 - db
        if delta < 0:
            return self
        for k in range(len(r) - 1, db - 1, -1):
            a = r[k]
            for i in range(k + 1):
                r[i] *= lb
            if a:
                off = k - db
                for j in range(db + 1):
                    r[off + j] -= a * b[j]
            r[k] = 0
        return IntPolynomial(r)

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def eval_sign(self, x: Fraction | int) -> int:
        """Sign of the value at a rational point, using integer arithmetic only."""
        x = Fraction(x)
        n, d = x.numerator, x.denominator
        acc = 0
        dk = 1
        # homogenised Horner: sum a_k n^k d^(deg-k), positive multiple of f(x)
        for a in reversed(self.coeffs):
            acc = acc * n + a * dk
            dk *= d
        return (acc > 0) - (acc < 0)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(k * a for k, a in enumerate(self.coeffs) if k)

    def content(self) -> int:
        g = 0
        for a in self.coeffs:
            g = math.gcd(g, a)
        return g

    def primitive(self) -> "IntPolynomial":
        """Primitive part with positive leading coefficient."""
        if self.is_zero():
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return self.exact_div_scalar(g)

    def reverse(self) -> "IntPolynomial":
        return IntPolynomial(reversed(self.coeffs))

    def compose_linear_shift(self, c: int) -> "IntPolynomial":
        """f(x + c) by repeated synthetic division."""
        a = list(self.coeffs)
        n = len(a)
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                a[j] += c * a[j + 1]
        return IntPolynomial(a)


def _as_int_poly(f) -> IntPolynomial:
    return f if isinstance(f, IntPolynomial) else IntPolynomial(f)


def gcd(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Z[x] via the primitive PRS."""
    a, b = f.primitive(), g.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = a.pseudo_rem(b)
        a, b = b, (r.primitive() if not r.is_zero() else r)
    return a if a.is_zero() else a.primitive()


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Resultant by the subresultant PRS.

    Follows the Sylvester-determinant convention
    ``Res(f, g) = lc(f)**deg(g) * prod g(alpha)`` over the roots alpha of f,
    so ``resultant(x - a, x - b) == a - b``.
    """
    f, g = _as_int_poly(f), _as_int_poly(g)
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial")
    if f.degree == 0:
        return f.lc ** g.degree
    if g.degree == 0:
        return g.lc ** f.degree
    a_cont, b_cont = f.content(), g.content()
    A, B = f.exact_div_scalar(a_cont), g.exact_div_scalar(b_cont)
    s = 1
    t = a_cont ** B.degree * b_cont ** A.degree
    if A.degree < B.degree:
        A, B = B, A
        if A.degree % 2 and B.degree % 2:
            s = -s
    gg, h = 1, 1
    while True:
        delta = A.degree - B.degree
        if A.degree % 2 and B.degree % 2:
            s = -s
        R = A.pseudo_rem(B)
        if R.is_zero():
            return 0
        A = B
        B = R.exact_div_scalar(gg * h ** delta)
        gg = A.lc
        if delta == 0:
            pass
        elif delta == 1:
            h = gg
        else:
            h = gg ** delta // h ** (delta - 1)
        if B.degree == 0:
            dA = A.degree
            if dA == 0:
                return s * t
            lb = B.lc
            h = lb ** dA // h ** (dA - 1) if dA > 1 else lb
            return s * t * h


def _bareiss_det(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    m = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def sylvester_matrix(f: IntPolynomial, g: IntPolynomial) -> list[list[int]]:
    m, n = f.degree, g.degree
    size = m + n
    rows = []
    fd = list(reversed(f.coeffs))
    gd = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([0] * i + fd + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gd + [0] * (size - n - 1 - i))
    return rows


def sylvester_resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Resultant as the determinant of the Sylvester matrix (Bareiss)."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial")
    if f.degree == 0:
        return f.lc ** g.degree
    if g.degree == 0:
        return g.lc ** f.degree
    return _bareiss_det(sylvester_matrix(f, g))


def discriminant(f: IntPolynomial) -> int:
    """Discriminant of a monic polynomial, ``(-1)**(n(n-1)/2) * Res(f, f')``."""
    f = _as_int_poly(f)
    if f.degree < 1:
        raise ValueError("discriminant needs degree >= 1")
    if not f.is_monic():
        raise ValueError("discriminant is only defined here for monic input")
    n = f.degree
    if n == 1:
        return 1
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative())


@lru_cache(maxsize=None)
def dickson(n: int) -> IntPolynomial:
    """Dickson polynomial D_n(x, 1), with D_0 = 2.

    Satisfies ``D_n(t + 1/t) = t**n + t**-n``.
    """
    if n < 0:
        raise ValueError("dickson index must be >= 0")
    if n == 0:
        return IntPolynomial((2,))
    if n == 1:
        return IntPolynomial((0, 1))
    prev, cur = [2], [0, 1]
    for _ in range(n - 1):
        nxt = [0] + cur
        for i, a in enumerate(prev):
            nxt[i] -= a
        prev, cur = cur, nxt
    return IntPolynomial(cur)


def reciprocal_check(f: IntPolynomial) -> bool:
    """True iff the coefficient list is a palindrome."""
    c = f.coeffs
    return c == c[::-1]


def fold_to_reduced(f: IntPolynomial) -> IntPolynomial:
    """The degree-s polynomial g with ``f(x) = x**s * g(x + 1/x)``.

    f must be reciprocal of even degree 2s.  With ``c_j = a_{s-j}`` we have
    ``g = a_s + sum_{j=1..s} c_j D_j``; the Dickson series is summed by the
    Clenshaw recurrence ``b_j = c_j + u*b_{j+1} - b_{j+2}``, which costs
    O(s**2) coefficient operations instead of building every D_j.
    """
    if not reciprocal_check(f):
        raise ValueError("fold_to_reduced needs a reciprocal polynomial")
    if f.is_zero() or f.degree % 2:
        raise ValueError("fold_to_reduced needs even degree")
    s = f.degree // 2
    a = f.coeffs
    if s == 0:
        return IntPolynomial((a[0],))
    # Clenshaw for sum_{j=1..s} c_j D_j; D_0 = 2 and D_1 = u
    b1: list[int] = []  # b_{j+1}
    b2: list[int] = []  # b_{j+2}
    for j in range(s, 0, -1):
        cj = a[s - j]
        # b_j = c_j + u*b1 - b2
        bj = [0] * (max(len(b1) + 1, len(b2), 1))
        bj[0] += cj
        for i, v in enumerate(b1):
            bj[i + 1] += v
        for i, v in enumerate(b2):
            bj[i] -= v
        b2, b1 = b1, bj
    # sum_{j>=1} c_j D_j = b_1 * D_1 - b_2 * D_0 ... with c_0 := 0 contribution
    # S = u*b_1 - 2*b_2 + (c_0 = 0) ; then g = a_s + S
    out = [0] * (max(len(b1) + 1, len(b2), 1))
    for i, v in enumerate(b1):
        out[i + 1] += v
    for i, v in enumerate(b2):
        out[i] -= 2 * v
    out[0] += a[s]
    return IntPolynomial(out)


def fold_by_dickson_sum(f: IntPolynomial) -> IntPolynomial:
    """Direct evaluation of ``sum_{k<s} a_k D_{s-k} + a_s`` (reference route)."""
    if not reciprocal_check(f) or f.degree % 2:
        raise ValueError("needs a reciprocal polynomial of even degree")
    s = f.degree // 2
    g = IntPolynomial((f[s],))
    for k in range(s):
        if f[k]:
            g = g + dickson(s - k).scale(f[k])
    return g


def unfold(g: IntPolynomial) -> IntPolynomial:
    """Expand ``x**s * g(x + 1/x)`` back into a polynomial of degree 2s."""
    s = g.degree
    if s < 0:
        return IntPolynomial()
    out = [0] * (2 * s + 1)
    # x^s (x + 1/x)^k = x^(s-k) (x^2 + 1)^k
    for k, c in enumerate(g.coeffs):
        if not c:
            continue
        for i in range(k + 1):
            out[s - k + 2 * i] += c * math.comb(k, i)
    return IntPolynomial(out)


def sturm_sequence(f: IntPolynomial) -> list[IntPolynomial]:
    """Sturm chain of f, scaled by positive constants to stay in Z[x].

    Each remainder comes from an integer pseudo-remainder whose scale factor
    sign is tracked, so sign changes agree with the classical rational chain.
    """
    seq = [f, f.derivative()]
    while seq[-1].degree > 0:
        a, b = seq[-2], seq[-1]
        delta = a.degree - b.degree
        r = a.pseudo_rem(b)
        if r.is_zero():
            break
        scale_sign = 1 if (b.lc > 0 or (delta + 1) % 2 == 0) else -1
        nxt = -r if scale_sign > 0 else r
        g = nxt.content()
        seq.append(nxt.exact_div_scalar(g))
    return seq


def _sign_changes(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for x, y in zip(nz, nz[1:]) if x != y)


def sturm_root_count(f: IntPolynomial, lo: Fraction | int, hi: Fraction | int) -> int:
    """Number of distinct real roots of f in the open interval (lo, hi).

    Repeated factors are divided out first.  Endpoints must not be roots;
    callers perturb them (or divide out the known root) instead.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    if f.degree < 1:
        return 0
    if f.eval_sign(lo) == 0 or f.eval_sign(hi) == 0:
        raise ValueError("interval endpoint is a root; perturb the endpoint")
    d = gcd(f, f.derivative())
    if d.degree > 0:
        f = squarefree_part_z(f, d)
    seq = sturm_sequence(f)
    return _sign_changes([p.eval_sign(lo) for p in seq]) - _sign_changes(
        [p.eval_sign(hi) for p in seq]
    )


def squarefree_part_z(f: IntPolynomial, d: IntPolynomial | None = None) -> IntPolynomial:
    """f / gcd(f, f') as a primitive integer polynomial."""
    if d is None:
        d = gcd(f, f.derivative())
    if d.degree <= 0:
        return f
    return _exact_quotient(f, d)[0]


def _exact_quotient(f: IntPolynomial, d: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    num = [Fraction(a) for a in f.coeffs]
    db, lb = d.degree, d.lc
    qt = [Fraction(0)] * (len(num) - db)
    for k in range(len(num) - 1, db - 1, -1):
        c = num[k] / lb
        qt[k - db] = c
        for j in range(db + 1):
            num[k - db + j] -= c * d.coeffs[j]
    if any(num):
        raise ValueError("divisor does not divide exactly")
    den = 1
    for c in qt:
        den = den * c.denominator // math.gcd(den, c.denominator)
    q = IntPolynomial(int(c * den) for c in qt)
    return q.primitive(), IntPolynomial()


class ModPolynomial:
    """Immutable polynomial over the prime field F_q."""

    __slots__ = ("q", "coeffs")

    def __init__(self, coeffs: Iterable[int], q: int):
        if q < 2:
            raise ValueError("modulus must be a prime >= 2")
        object.__setattr__(self, "q", int(q))
        object.__setattr__(self, "coeffs", _trim(int(a) % q for a in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("ModPolynomial is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def monic(self) -> "ModPolynomial":
        if self.is_zero():
            return self
        inv = pow(self.lc, -1, self.q)
        return ModPolynomial((a * inv for a in self.coeffs), self.q)

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModPolynomial):
            return NotImplemented
        return self.q == other.q and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("ModPolynomial", self.q, self.coeffs))

    def __lt__(self, other: "ModPolynomial") -> bool:
        return (self.degree, self.coeffs) < (other.degree, other.coeffs)

    def __repr__(self) -> str:
        return f"ModPolynomial({list(self.coeffs)}, q={self.q})"

    def __str__(self) -> str:
        return f"{IntPolynomial(self.coeffs)} (mod {self.q})"

    def _check(self, other: "ModPolynomial") -> None:
        if self.q != other.q:
            raise ValueError("moduli differ")

    def __add__(self, other: "ModPolynomial") -> "ModPolynomial":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return ModPolynomial([x + y for x, y in zip(a, b)] + list(a[len(b):]), self.q)

    def __neg__(self) -> "ModPolynomial":
        return ModPolynomial((-a for a in self.coeffs), self.q)

    def __sub__(self, other: "ModPolynomial") -> "ModPolynomial":
        return self + (-other)

    def __mul__(self, other: "ModPolynomial") -> "ModPolynomial":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ModPolynomial((), self.q)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return ModPolynomial(out, self.q)

    def __pow__(self, e: int) -> "ModPolynomial":
        result = ModPolynomial((1,), self.q)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def divrem(self, other: "ModPolynomial") -> tuple["ModPolynomial", "ModPolynomial"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = self.q
        r = list(self.coeffs)
        db = other.degree
        if len(r) - 1 < db:
            return ModPolynomial((), q), self
        inv = pow(other.lc, -1, q)
        b = other.coeffs
        qt = [0] * (len(r) - db)
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k] * inv % q
            if c:
                qt[k - db] = c
                off = k - db
                for j in range(db + 1):
                    r[off + j] = (r[off + j] - c * b[j]) % q
        return ModPolynomial(qt, q), ModPolynomial(r, q)

    def __divmod__(self, other):
        return self.divrem(other)

    def __floordiv__(self, other):
        return self.divrem(other)[0]

    def __mod__(self, other):
        return self.divrem(other)[1]

    def __call__(self, x: int) -> int:
        acc = 0
        for a in reversed(self.coeffs):
            acc = (acc * x + a) % self.q
        return acc

    def derivative(self) -> "ModPolynomial":
        return ModPolynomial((k * a for k, a in enumerate(self.coeffs) if k), self.q)

    def gcd(self, other: "ModPolynomial") -> "ModPolynomial":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()


def reduce_mod(f: IntPolynomial, q: int) -> ModPolynomial:
    """Coefficientwise reduction of f into F_q[x]."""
    from .arith import is_prime

    if not is_prime(q):
        raise ValueError(f"reduce_mod expects a prime modulus, got {q}")
    return ModPolynomial(f.coeffs, q)


class FactorizationPattern(tuple):
    """Sorted multiset of ``(degree, multiplicity)`` pairs.

    Repeated irreducible factors of the same degree appear as repeated pairs,
    e.g. ``((1, 1), (1, 1), (2, 1))`` for two distinct linear factors times
    an irreducible quadratic.
    """

    def __new__(cls, pairs: Iterable[tuple[int, int]] = ()):
        items = sorted((int(d), int(m)) for d, m in pairs)
        for d, m in items:
            if d < 1 or m < 1:
                raise ValueError("degrees and multiplicities must be positive")
        return super().__new__(cls, items)

    @property
    def degree(self) -> int:
        return sum(d * m for d, m in self)

    def is_squarefree(self) -> bool:
        return all(m == 1 for _, m in self)

    def degrees(self) -> list[int]:
        return [d for d, _ in self]

    def to_json(self) -> list[list[int]]:
        return [[d, m] for d, m in self]

    @classmethod
    def from_json(cls, data) -> "FactorizationPattern":
        return cls((d, m) for d, m in data)

    def __repr__(self) -> str:
        return f"FactorizationPattern({list(self)})"
