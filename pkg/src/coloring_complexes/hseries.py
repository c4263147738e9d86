"""h-vectors from chromatic and characteristic polynomials.

Each extraction evaluates a series coefficient ``c_j`` pointwise and
multiplies by ``(1 - t)**n``; the product must be a polynomial, which
the guard window of :func:`~coloring_complexes.core.alternating_binomial_transform`
checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import GUARD, Polynomial, alternating_binomial_transform
from .errors import BadChromatic, DivisibilityViolation, RankMismatch

__all__ = [
    "HVectorReport",
    "extract_color_h",
    "extract_unipolar_h",
    "extract_bn_h",
    "extract_matroid_h",
]

KINDS = ("color", "unipolar", "bn", "matroid", "direct")


@dataclass(frozen=True)
class HVectorReport:
    values: tuple
    kind: str
    n: int
    d: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown h-vector kind {self.kind!r}")
        if len(self.values) != self.d + 1:
            raise ValueError(f"{len(self.values)} values for d={self.d}")

    def __getitem__(self, k):
        return self.values[k]

    def __len__(self):
        return len(self.values)


def _check_chromatic(P: Polynomial, n: int) -> None:
    if n < 1:
        raise BadChromatic(f"vertex count must be positive, got {n}")
    if P.degree() != n or not P.is_monic():
        raise BadChromatic(f"{P} is not monic of degree {n}")
    if P.coeffs[0] != 0:
        raise BadChromatic(f"{P} has nonzero constant term")


def extract_color_h(P: Polynomial, n: int) -> HVectorReport:
    """h-vector of the double cone over the coloring complex.

    ``P`` is the chromatic polynomial of a graph on ``n`` vertices; the
    result has ``n + 1`` entries, the last two zero.
    """
    _check_chromatic(P, n)
    c = [(j + 1) ** n - P(j + 1) for j in range(n + 1 + GUARD)]
    h = alternating_binomial_transform(c, n, n + 1)
    return HVectorReport(h, "color", n, n)


def extract_unipolar_h(P: Polynomial, n: int) -> HVectorReport:
    """h-vector of any unipolar complex, ``n - 1`` entries."""
    _check_chromatic(P, n)
    if n < 2:
        raise BadChromatic("unipolar h-vector needs at least two vertices")
    c = []
    for j in range(n - 1 + GUARD):
        num = (j + 1) ** n - P(j + 1)
        q, r = divmod(num, j + 1)
        if r:
            raise DivisibilityViolation(f"{num} not divisible by {j + 1}")
        c.append(q)
    h = alternating_binomial_transform(c, n - 1, n - 1)
    return HVectorReport(h, "unipolar", n, n - 2)


def extract_bn_h(chi: Polynomial, r: int, n: int) -> HVectorReport:
    """h-vector of the type-B sphere restricted to an arrangement.

    ``chi`` is the characteristic polynomial of a rank ``r`` subarrangement
    of the type-B arrangement in dimension ``n``.
    """
    if chi.degree() != r or not chi.is_monic():
        raise RankMismatch(f"{chi} is not monic of degree {r}")
    if not 0 <= r <= n or n < 1:
        raise RankMismatch(f"rank {r} impossible in dimension {n}")
    c = [
        (2 * j + 1) ** n - chi(2 * j + 1) * (2 * j + 1) ** (n - r)
        for j in range(n + GUARD)
    ]
    h = alternating_binomial_transform(c, n, n)
    return HVectorReport(h, "bn", n, n - 1)


def extract_matroid_h(chi: Polynomial, n: Optional[int] = None) -> HVectorReport:
    """Coloring-complex analogue for a matroid of rank ``n - 1``.

    ``n`` defaults to ``deg chi + 1``; passing anything else raises
    :class:`RankMismatch`.
    """
    if not chi.is_monic():
        raise RankMismatch(f"{chi} is not monic")
    if n is None:
        n = chi.degree() + 1
    if chi.degree() != n - 1:
        raise RankMismatch(f"{chi} has degree {chi.degree()}, expected {n - 1}")
    c = [(j + 1) ** n - (j + 1) * chi(j + 1) for j in range(n + 1 + GUARD)]
    h = alternating_binomial_transform(c, n, n + 1)
    return HVectorReport(h, "matroid", n, n)
