"""Galois-group certificates for g_p and f_p, and the s_p / discriminant checks.

A triple ``(q1, q2, q3)`` certifies that the Galois group of g_p is the full
symmetric group: the three reductions supply an n-cycle, an (n-1)-cycle and
a transposition.  A quadruple does the same for f_p and the hyperoctahedral
group.

Two independent routes decide each clause.  Searches use a streaming
distinct-degree split that stops as soon as a prime is ruled out, after a
discriminant-character filter.  Checks recompute the full factorization
pattern and run Rabin's irreducibility test, and that route alone decides
``validated``.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterable

from .arith import PrimeIterator, is_prime, legendre, squarefree_part
from .bernoulli import gen_bernoulli
from .class_numbers import h as class_number
from .construct import FeketeDefect, build
from .ff_factor import (
    discriminant_character,
    discriminant_characters,
    factor_degree_stream,
    is_irreducible_mod,
    is_squarefree_mod,
    pattern,
)
from .polynomials import FactorizationPattern, IntPolynomial, discriminant, reduce_mod

TOOL_VERSION = "0.1.0"
DEFAULT_Q_BOUND = 10**6
DEFAULT_SEED = 0

TRIPLE = "triple"
QUADRUPLE = "quadruple"
TARGET_GROUPS = {TRIPLE: "S_n", QUADRUPLE: "(Z/2)^n x| S_n"}


class WitnessNotFound(LookupError):
    def __init__(self, p: int, kind: str, clause: int, q_bound: int):
        super().__init__(f"p={p}: no prime <= {q_bound} satisfies {kind} clause {clause}")
        self.p, self.kind, self.clause, self.q_bound = p, kind, clause, q_bound


# ---------------------------------------------------------------- s_p


@dataclass(frozen=True)
class SpValue:
    p: int
    s_p: int
    predicted: int
    squarefree_part: int

    @property
    def is_square(self) -> bool:
        r = math.isqrt(abs(self.s_p))
        return r * r == abs(self.s_p)


def s_unit_and_scale(p: int) -> tuple[int, Fraction]:
    """``(u, m)`` with ``s_p = u * m^2``; u is -p or 3p (p = 3 mod 4), -3p or 5p
    (p = 1 mod 4), and m is h(-p) or B_{2,chi_p}/4."""
    l2 = legendre(2, p)
    if p % 4 == 3:
        return -(2 * l2 - 1) * p, Fraction(class_number(-p))
    return (1 - 4 * l2) * p, gen_bernoulli(p, 2) / 4


def s_value(p: int) -> SpValue:
    """s_p from g_p(2) g_p(-2), from f_p(1) f_p(-1), and from the closed form."""
    t = build(p)
    via_g = t.g(2) * t.g(-2)
    via_f = t.f(1) * t.f(-1)
    unit, m = s_unit_and_scale(p)
    predicted = unit * m * m
    if via_g != via_f or predicted != via_g:
        raise FeketeDefect(f"s_{p}: g route {via_g}, f route {via_f}, formula {predicted}")
    return SpValue(p, via_g, int(predicted), squarefree_part(via_g))


@lru_cache(maxsize=256)
def discriminants(p: int) -> tuple[int, int]:
    """Exact (disc f_p, disc g_p) via subresultants."""
    t = build(p)
    return discriminant(t.f), discriminant(t.g)


def discriminant_relation_check(p: int) -> bool:
    """disc(f_p) = s * disc(g_p)^2 with s = (-1)^deg g * f_p(1) f_p(-1)."""
    t = build(p)
    df, dg = discriminants(p)
    s = (-1) ** t.g.degree * t.f(1) * t.f(-1)
    return df == s * dg * dg


# ---------------------------------------------------------------- clauses


@dataclass(frozen=True)
class Clause:
    """One condition on the reduction of a degree-n polynomial mod q.

    ``target`` gives the exact factor degrees when the clause fixes them;
    otherwise ``even_degree`` names the single even-degree factor allowed
    beside distinct odd-degree factors.
    """

    name: str
    target: Callable[[int], list[int]] | None = None
    even_degree: int | None = None

    def holds(self, pat: FactorizationPattern, n: int) -> bool:
        if pat.degree != n:
            return False
        if self.name == "irreducible":
            return list(pat) == [(n, 1)]
        if not pat.is_squarefree():
            return False
        degs = sorted(pat.degrees())
        if self.target is not None:
            return degs == sorted(self.target(n))
        evens = [d for d in degs if d % 2 == 0]
        return evens == [self.even_degree]

    def viable(self, found: list[int], d: int, n: int) -> bool:
        """Can factors ``found`` (all those of degree <= d) still satisfy the clause?"""
        if self.target is not None:
            return sorted(found) == sorted(t for t in self.target(n) if t <= d)
        evens = [x for x in found if x % 2 == 0]
        if d >= self.even_degree:
            return evens == [self.even_degree]
        return not evens

    def expected_character(self, n: int) -> int:
        """Discriminant character forced by Stickelberger: (-1)^(n - #factors)."""
        if self.target is not None:
            return (-1) ** (n - len(self.target(n)))
        return -1


IRREDUCIBLE = Clause("irreducible", target=lambda n: [n])
ONE_LINEAR = Clause("one-linear", target=lambda n: [1, n - 1])
TWO_LINEAR = Clause("two-linear", target=lambda n: [1, 1, n - 2])
QUADRATIC_ODD = Clause("quadratic-odd", even_degree=2)
QUARTIC_ODD = Clause("quartic-odd", even_degree=4)

CLAUSES = {
    TRIPLE: (IRREDUCIBLE, ONE_LINEAR, QUADRATIC_ODD),
    QUADRUPLE: (IRREDUCIBLE, TWO_LINEAR, QUADRATIC_ODD, QUARTIC_ODD),
}


def target_polynomial(p: int, kind: str) -> IntPolynomial:
    t = build(p)
    if kind == TRIPLE:
        return t.g
    if kind == QUADRUPLE:
        return t.f
    raise ValueError(f"unknown certificate kind {kind!r}")


def _character_allows(poly: IntPolynomial, clause: Clause, q: int, chi: int | None) -> bool:
    """Degree kept mod q, squarefree, and the discriminant character that the
    clause's factor count forces.  ``chi`` is None when no character applies."""
    n = poly.degree
    if chi is None:
        fq = reduce_mod(poly, q)
        return fq.degree == n and is_squarefree_mod(fq)
    return chi == clause.expected_character(n)


def _stream_holds(poly: IntPolynomial, clause: Clause, q: int) -> bool:
    # distinct-degree split that stops at the first step ruling q out
    n = poly.degree
    fq = reduce_mod(poly, q)
    found: list[int] = []
    for d, count in factor_degree_stream(fq):
        found.extend([d] * count)
        if not clause.viable(found, d, n):
            return False
    return clause.holds(FactorizationPattern((x, 1) for x in found), n)


def clause_holds_fast(p: int, kind: str, index: int, q: int) -> bool:
    """Search route: character filter, then a distinct-degree split that stops
    at the first step ruling q out."""
    poly = target_polynomial(p, kind)
    clause = CLAUSES[kind][index]
    fq = reduce_mod(poly, q)
    if fq.degree != poly.degree:
        return False
    chi = discriminant_character(fq)
    return _character_allows(poly, clause, q, chi) and _stream_holds(poly, clause, q)


def clause_pattern(p: int, kind: str, q: int) -> FactorizationPattern:
    fq = reduce_mod(target_polynomial(p, kind), q)
    return pattern(fq)


def clause_holds_full(p: int, kind: str, index: int, q: int) -> tuple[bool, FactorizationPattern]:
    """Check route: full pattern, plus Rabin's test for the irreducible clause."""
    poly = target_polynomial(p, kind)
    n = poly.degree
    if q == p or not is_prime(q):
        return False, FactorizationPattern()
    fq = reduce_mod(poly, q)
    if fq.degree != n:
        return False, FactorizationPattern()
    pat = pattern(fq)
    ok = CLAUSES[kind][index].holds(pat, n)
    if ok and index == 0:
        ok = is_irreducible_mod(fq)
    return ok, pat


# ---------------------------------------------------------------- certificates


@dataclass(frozen=True)
class GaloisCertificate:
    p: int
    kind: str
    primes: tuple[int, ...]
    patterns: tuple[FactorizationPattern, ...]
    validated: bool
    clause_ok: tuple[bool, ...] = ()
    seed: int = DEFAULT_SEED
    tool_version: str = TOOL_VERSION

    @property
    def target_group(self) -> str:
        return TARGET_GROUPS[self.kind]

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "kind": self.kind,
            "q": list(self.primes),
            "patterns": [pat.to_json() for pat in self.patterns],
            "seed": self.seed,
            "tool_version": self.tool_version,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict) -> "GaloisCertificate":
        """Parse and re-validate; stored patterns must agree with recomputed ones."""
        kind = data["kind"]
        cert = check(int(data["p"]), kind, [int(q) for q in data["q"]], seed=int(data.get("seed", 0)))
        stored = tuple(FactorizationPattern.from_json(x) for x in data["patterns"])
        if stored != cert.patterns:
            return GaloisCertificate(cert.p, kind, cert.primes, stored, False, cert.clause_ok, cert.seed)
        return cert


def check(p: int, kind: str, primes: Iterable[int], seed: int = DEFAULT_SEED) -> GaloisCertificate:
    primes = tuple(int(q) for q in primes)
    clauses = CLAUSES[kind]
    if len(primes) != len(clauses):
        raise ValueError(f"{kind} needs {len(clauses)} primes, got {len(primes)}")
    results = [clause_holds_full(p, kind, i, q) for i, q in enumerate(primes)]
    oks = tuple(ok for ok, _ in results)
    pats = tuple(pat for _, pat in results)
    return GaloisCertificate(p, kind, primes, pats, all(oks), oks, seed)


def check_triple(p: int, q1: int, q2: int, q3: int) -> GaloisCertificate:
    return check(p, TRIPLE, (q1, q2, q3))


def check_quadruple(p: int, q1: int, q2: int, q3: int, q4: int) -> GaloisCertificate:
    return check(p, QUADRUPLE, (q1, q2, q3, q4))


# ---------------------------------------------------------------- searches

_CHUNK = 256


def _scan_chunk(args) -> int | None:
    """Least q in an ascending chunk satisfying the clause.  Characters for
    the whole chunk come from one compiled call."""
    p, kind, index, qs = args
    poly = target_polynomial(p, kind)
    clause = CLAUSES[kind][index]
    if poly.degree < 2:
        return next((q for q in qs if clause_holds_fast(p, kind, index, q)), None)
    chars = discriminant_characters(list(poly.coeffs), qs)
    for q, chi in zip(qs, chars):
        if _character_allows(poly, clause, q, chi) and _stream_holds(poly, clause, q):
            return q
    return None


def _candidates(p: int, q_bound: int) -> Iterable[int]:
    return (q for q in PrimeIterator(2, q_bound) if q != p)


_FIRST_CHUNK = 16


def smallest_witness(
    p: int, kind: str, index: int, q_bound: int = DEFAULT_Q_BOUND, pool: ProcessPoolExecutor | None = None
) -> int:
    """Least prime q <= q_bound, q != p, satisfying clause ``index``.

    With a pool, chunks of candidates run concurrently but are consumed in
    order, so the answer is the minimum over a complete prefix.
    """
    if q_bound < 2:
        raise ValueError("q_bound must be >= 2")
    if pool is None:
        stream = iter(_candidates(p, q_bound))
        size = _FIRST_CHUNK
        while chunk := [q for _, q in zip(range(size), stream)]:
            hit = _scan_chunk((p, kind, index, chunk))
            if hit is not None:
                return hit
            size = min(2 * size, _CHUNK)
        raise WitnessNotFound(p, kind, index + 1, q_bound)
    stream = iter(_candidates(p, q_bound))
    depth = 2 * (pool._max_workers or 1)
    pending = []
    exhausted = False
    while True:
        while not exhausted and len(pending) < depth:
            chunk = [q for _, q in zip(range(_CHUNK), stream)]
            if not chunk:
                exhausted = True
                break
            pending.append(pool.submit(_scan_chunk, (p, kind, index, chunk)))
        if not pending:
            raise WitnessNotFound(p, kind, index + 1, q_bound)
        hit = pending.pop(0).result()
        if hit is not None:
            for fut in pending:
                fut.cancel()
            return hit


def find_smallest(
    p: int,
    kind: str,
    q_bound: int = DEFAULT_Q_BOUND,
    seed: int = DEFAULT_SEED,
    pool: ProcessPoolExecutor | None = None,
) -> GaloisCertificate:
    """Independent per-clause minima, then a full re-check of the result."""
    if p < 7 or not is_prime(p):
        raise ValueError(f"expected a prime p >= 7, got {p}")
    primes = [smallest_witness(p, kind, i, q_bound, pool) for i in range(len(CLAUSES[kind]))]
    cert = check(p, kind, primes, seed)
    if not cert.validated:
        raise FeketeDefect(f"search and check routes disagree for {kind} p={p}: {cert.clause_ok}")
    return cert


def find_smallest_triple(p: int, q_bound: int = DEFAULT_Q_BOUND, **kw) -> GaloisCertificate:
    return find_smallest(p, TRIPLE, q_bound, **kw)


def find_smallest_quadruple(p: int, q_bound: int = DEFAULT_Q_BOUND, **kw) -> GaloisCertificate:
    return find_smallest(p, QUADRUPLE, q_bound, **kw)


# ---------------------------------------------------------------- irreducibility


@dataclass(frozen=True)
class IrreducibilityResult:
    p: int
    status: str  # "irreducible" or "unknown"
    witness: int | None
    g_irreducible: bool
    f_irreducible: bool


def irreducibility_certify(p: int, q_bound: int = DEFAULT_Q_BOUND) -> IrreducibilityResult:
    """Find q with g_p irreducible mod q.  Never claims reducibility.

    f_p is then irreducible too because |s_p| is not a square.
    """
    try:
        q = smallest_witness(p, TRIPLE, 0, q_bound)
    except WitnessNotFound:
        return IrreducibilityResult(p, "unknown", None, False, False)
    if not is_irreducible_mod(reduce_mod(build(p).g, q)):
        raise FeketeDefect(f"witness {q} for p={p} fails Rabin's test")
    f_ok = not s_value(p).is_square
    return IrreducibilityResult(p, "irreducible", q, True, f_ok)


# ---------------------------------------------------------------- cache


class CertificateCache:
    """Directory of ``{kind}_{p}.json`` documents, re-validated on every read."""

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)
        self.path.mkdir(parents=True, exist_ok=True)
        self.rejected: list[Path] = []

    def file_for(self, p: int, kind: str) -> Path:
        return self.path / f"{kind}_{p}.json"

    def get(self, p: int, kind: str) -> GaloisCertificate | None:
        """The cached certificate if it re-validates; a bad entry is recorded
        in ``rejected`` and treated as a miss."""
        fp = self.file_for(p, kind)
        if not fp.exists():
            return None
        try:
            data = json.loads(fp.read_text())
            if data.get("p") != p or data.get("kind") != kind:
                raise ValueError("entry does not match its file name")
            cert = GaloisCertificate.from_json(data)
        except (ValueError, KeyError, TypeError):
            self.rejected.append(fp)
            return None
        if not cert.validated:
            self.rejected.append(fp)
            return None
        return cert

    def put(self, cert: GaloisCertificate) -> Path:
        if not cert.validated:
            raise ValueError("refusing to cache an unvalidated certificate")
        fp = self.file_for(cert.p, cert.kind)
        tmp = fp.with_suffix(".tmp")
        tmp.write_text(cert.dumps() + "\n")
        tmp.replace(fp)
        return fp
