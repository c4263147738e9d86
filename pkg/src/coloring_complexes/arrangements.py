"""Subarrangements of the type-B reflection arrangement.

A hyperplane is one of ``x_i = x_j`` (``eq``), ``x_i = -x_j`` (``ne``) or
``x_i = 0`` (``zero``). Characteristic polynomials come from counting the
points of ``F_q^n`` off every hyperplane for a handful of odd primes and
interpolating.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import isqrt
from pathlib import Path
from typing import Iterable, NamedTuple

import numpy as np

from .core import Polynomial, interpolate
from .errors import CrossCheckFailure, LimitExceeded, NonIntegralResult, ParseError

__all__ = [
    "Hyperplane",
    "SignedArrangement",
    "full_bn",
    "graphic",
    "rank",
    "char_poly",
    "point_count",
    "odd_primes",
    "enumerate_subarrangements",
    "parse_arrangement",
    "load_arrangement",
    "format_arrangement",
]

KINDS = ("eq", "ne", "zero")
EXHAUSTIVE_MAX_N = 3
SAMPLED_N = 4
SAMPLE_SIZE = 200


class Hyperplane(NamedTuple):
    kind: str
    i: int
    j: int = 0  # unused for kind "zero"

    @classmethod
    def eq(cls, i, j):
        return cls("eq", min(i, j), max(i, j))

    @classmethod
    def ne(cls, i, j):
        return cls("ne", min(i, j), max(i, j))

    @classmethod
    def zero(cls, i):
        return cls("zero", i, 0)

    def normal(self, n: int) -> list[int]:
        v = [0] * n
        v[self.i - 1] = 1
        if self.kind == "eq":
            v[self.j - 1] = -1
        elif self.kind == "ne":
            v[self.j - 1] = 1
        return v

    def __str__(self):
        return f"zero {self.i}" if self.kind == "zero" else f"{self.kind} {self.i} {self.j}"


@dataclass(frozen=True)
class SignedArrangement:
    n: int
    hyperplanes: frozenset = frozenset()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"ambient dimension must be positive, got {self.n}")
        norm = set()
        for h in self.hyperplanes:
            h = Hyperplane(*h)
            if h.kind not in KINDS:
                raise ValueError(f"unknown hyperplane kind {h.kind!r}")
            if h.kind == "zero":
                if not 1 <= h.i <= self.n:
                    raise ValueError(f"{h} outside 1..{self.n}")
                h = Hyperplane.zero(h.i)
            else:
                if h.i == h.j:
                    raise ValueError(f"{h}: indices must differ")
                h = Hyperplane(h.kind, min(h.i, h.j), max(h.i, h.j))
                if not 1 <= h.i < h.j <= self.n:
                    raise ValueError(f"{h} outside 1..{self.n}")
            norm.add(h)
        object.__setattr__(self, "hyperplanes", frozenset(norm))

    def sorted(self) -> list[Hyperplane]:
        return sorted(self.hyperplanes)

    def __len__(self):
        return len(self.hyperplanes)


def full_bn(n: int) -> SignedArrangement:
    """All ``2*C(n,2) + n`` hyperplanes of the type-B arrangement."""
    hs = [Hyperplane.eq(i, j) for i, j in combinations(range(1, n + 1), 2)]
    hs += [Hyperplane.ne(i, j) for i, j in combinations(range(1, n + 1), 2)]
    hs += [Hyperplane.zero(i) for i in range(1, n + 1)]
    return SignedArrangement(n, frozenset(hs))


def graphic(G) -> SignedArrangement:
    return SignedArrangement(G.n, frozenset(Hyperplane.eq(u, v) for u, v in G.edges))


def rank(A: SignedArrangement) -> int:
    """Rank over the rationals of the hyperplane normals."""
    rows = [[Fraction(x) for x in h.normal(A.n)] for h in A.sorted()]
    r = 0
    for col in range(A.n):
        piv = next((k for k in range(r, len(rows)) if rows[k][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for k in range(len(rows)):
            if k != r and rows[k][col] != 0:
                f = rows[k][col] / rows[r][col]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        r += 1
    return r


def odd_primes(count: int) -> list[int]:
    """The first ``count`` primes starting from 3."""
    out, p = [], 3
    while len(out) < count:
        if all(p % d for d in range(3, isqrt(p) + 1, 2)):
            out.append(p)
        p += 2
    return out


def point_count(A: SignedArrangement, q: int) -> int:
    """Number of points of ``F_q^n`` lying on no hyperplane of ``A``."""
    if q % 2 == 0:
        # x_i = x_j and x_i = -x_j coincide in characteristic 2
        raise ValueError("point counting needs an odd prime")
    x = np.indices((q,) * A.n, dtype=np.int64).reshape(A.n, -1)
    alive = np.ones(x.shape[1], dtype=bool)
    for h in A.hyperplanes:
        a = x[h.i - 1]
        if h.kind == "zero":
            alive &= a != 0
        elif h.kind == "eq":
            alive &= a != x[h.j - 1]
        else:
            alive &= (a + x[h.j - 1]) % q != 0
    return int(alive.sum())


def char_poly(A: SignedArrangement) -> tuple[Polynomial, int]:
    """Characteristic polynomial and rank of ``A``.

    For each odd prime ``q`` the complement of ``A`` in ``F_q^n`` has
    ``q**(n-r) * chi(q)`` points. The first ``r + 1`` odd primes determine
    ``chi``; the next one is used to check it.
    """
    r = rank(A)
    primes = odd_primes(r + 2)
    values = []
    for q in primes:
        cnt = point_count(A, q)
        scale = q ** (A.n - r)
        if cnt % scale:
            raise CrossCheckFailure(f"point count {cnt} at q={q} not divisible by {scale}")
        values.append((q, cnt // scale))
    try:
        chi = interpolate(values[:-1])
    except NonIntegralResult as exc:
        raise NonIntegralResult(f"characteristic polynomial of {A}: {exc}") from exc
    q, expected = values[-1]
    if chi(q) != expected or chi.degree() != r or not chi.is_monic():
        raise CrossCheckFailure(
            f"interpolated {chi} disagrees with the count at q={q} ({expected})"
        )
    return chi, r


def enumerate_subarrangements(n: int, seed: int = 0, sample_size: int = SAMPLE_SIZE):
    """Nonempty subarrangements of the full type-B arrangement in dimension ``n``.

    Exhaustive for ``n <= 3`` (ordered by bitmask over the sorted
    hyperplane list); a seeded sample of distinct subsets for ``n = 4``.
    """
    if n > SAMPLED_N:
        raise LimitExceeded(f"subarrangement enumeration supports n <= {SAMPLED_N}, got {n}")
    hs = full_bn(n).sorted()
    total = 1 << len(hs)
    if n <= EXHAUSTIVE_MAX_N:
        masks: Iterable[int] = range(1, total)
    else:
        masks = random.Random(seed).sample(range(1, total), sample_size)
    return [
        SignedArrangement(n, frozenset(h for k, h in enumerate(hs) if m >> k & 1))
        for m in masks
    ]


def parse_arrangement(text: str, source: str = "<input>") -> SignedArrangement:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("empty arrangement file", source)
    lineno, head = rows[0]
    try:
        n, m = (int(x) for x in head)
    except ValueError:
        raise ParseError(f"expected header 'n m', got {' '.join(head)!r}", source, lineno)
    if n < 1 or m < 0:
        raise ParseError(f"invalid header n={n} m={m}", source, lineno)
    body = rows[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else lineno)
        raise ParseError(f"header declares {m} hyperplanes, found {len(body)}", source, where)
    seen = set()
    for lineno, fields in body:
        kind, args = fields[0], fields[1:]
        try:
            idx = [int(a) for a in args]
        except ValueError:
            raise ParseError(f"non-integer index in {' '.join(fields)!r}", source, lineno)
        if kind == "zero" and len(idx) == 1 and 1 <= idx[0] <= n:
            h = Hyperplane.zero(idx[0])
        elif kind in ("eq", "ne") and len(idx) == 2 and 1 <= idx[0] < idx[1] <= n:
            h = Hyperplane(kind, idx[0], idx[1])
        else:
            raise ParseError(
                f"expected 'eq i j', 'ne i j' (1 <= i < j <= {n}) or 'zero i', "
                f"got {' '.join(fields)!r}",
                source,
                lineno,
            )
        if h in seen:
            raise ParseError(f"duplicate hyperplane {h}", source, lineno)
        seen.add(h)
    return SignedArrangement(n, frozenset(seen))


def load_arrangement(path) -> SignedArrangement:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read file ({exc.strerror})", str(path))
    return parse_arrangement(text, str(path))


def format_arrangement(A: SignedArrangement) -> str:
    return "\n".join([f"{A.n} {len(A)}"] + [str(h) for h in A.sorted()]) + "\n"
