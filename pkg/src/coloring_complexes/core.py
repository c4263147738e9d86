"""Exact integer and polynomial arithmetic.

Polynomials are dense coefficient tuples indexed by degree, with Python
integers as coefficients, so nothing here ever touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import GuardViolation, NonIntegralResult

__all__ = [
    "NEG_INFINITY",
    "GUARD",
    "Polynomial",
    "binomial",
    "poly_from_roots",
    "poly_eval",
    "alternating_binomial_transform",
    "interpolate",
]

#: Degree of the zero polynomial. Compares below every integer.
NEG_INFINITY = float("-inf")

#: Extra coefficients computed past the end of every extracted h-vector;
#: they must all vanish.
GUARD = 3


def binomial(a: int, b: int) -> int:
    """Binomial coefficient C(a, b) for a >= 0, zero outside 0 <= b <= a."""
    if a < 0:
        raise ValueError(f"binomial: a must be nonnegative, got {a}")
    if b < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial in one variable ``t``.

    ``coeffs[k]`` is the coefficient of ``t**k``. Trailing zeros are
    stripped on construction, so the zero polynomial has ``coeffs == ()``.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_descending(cls, coeffs: Iterable[int]) -> Polynomial:
        """Build from coefficients listed highest degree first."""
        return cls(tuple(reversed(list(coeffs))))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> Polynomial:
        return cls((0,) * k + (c,))

    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, x: int) -> int:
        return poly_eval(self, x)

    def __add__(self, other: Polynomial) -> Polynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial(tuple(x + (b[k] if k < len(b) else 0) for k, x in enumerate(a)))

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-x for x in self.coeffs))

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(tuple(other * x for x in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def shift_down(self, k: int = 1) -> Polynomial:
        """Exact division by ``t**k``; the low coefficients must be zero."""
        if any(self.coeffs[:k]):
            raise ValueError(f"{self} is not divisible by t^{k}")
        return Polynomial(self.coeffs[k:])

    def render(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}{mono}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()


def poly_from_roots(roots: Iterable[int]) -> Polynomial:
    """Monic polynomial prod (t - r) over ``roots``."""
    p = [1]
    for r in roots:
        q = [0] * (len(p) + 1)
        for k, a in enumerate(p):
            q[k + 1] += a
            q[k] -= r * a
        p = q
    return Polynomial(tuple(p))


def poly_eval(p: Polynomial, x: int) -> int:
    """Exact value of ``p`` at the integer ``x`` (Horner)."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def alternating_binomial_transform(
    c: Sequence[int], n: int, out_len: int, guard: int = GUARD
) -> tuple[int, ...]:
    """Coefficients of ``(1 - t)**n * sum_j c[j] t**j``, truncated to ``out_len``.

    The ``guard`` coefficients following the truncation point are also
    computed and must be zero; otherwise :class:`GuardViolation` is raised.
    That happens when ``c`` is not the coefficient sequence of a rational
    function with denominator ``(1 - t)**n`` and numerator of degree
    below ``out_len``.
    """
    if n < 1 or out_len < 1:
        raise ValueError("n and out_len must be positive")
    total = out_len + guard
    if len(c) < total:
        raise ValueError(f"need at least {total} series terms, got {len(c)}")
    signed = [(-1) ** i * comb(n, i) for i in range(n + 1)]
    h = [
        sum(signed[i] * c[k - i] for i in range(min(k, n) + 1))
        for k in range(total)
    ]
    bad = [k for k in range(out_len, total) if h[k] != 0]
    if bad:
        raise GuardViolation(
            f"coefficient {bad[0]} of the transformed series is {h[bad[0]]}, expected 0"
        )
    return tuple(h[:out_len])


def interpolate(points: Sequence[tuple[int, int]]) -> Polynomial:
    """The integer polynomial of degree < len(points) through ``points``.

    Newton divided differences in exact rationals. Raises
    :class:`NonIntegralResult` if the interpolant has a non-integer
    coefficient.
    """
    xs = [int(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    if not xs:
        return Polynomial()
    table = [Fraction(y) for _, y in points]
    m = len(xs)
    newton = [table[0]]
    for level in range(1, m):
        table = [
            (table[k + 1] - table[k]) / (xs[k + level] - xs[k]) for k in range(m - level)
        ]
        newton.append(table[0])
    # expand sum newton[k] * prod_{l<k} (t - xs[l]) from the innermost term
    acc = [Fraction(0)]
    for k in range(m - 1, -1, -1):
        shifted = [Fraction(0)] + acc
        for d in range(len(acc)):
            shifted[d] -= xs[k] * acc[d]
        shifted[0] += newton[k]
        acc = shifted
    coeffs = []
    for d, v in enumerate(acc):
        if v.denominator != 1:
            raise NonIntegralResult(f"coefficient of t^{d} is {v}, not an integer")
        coeffs.append(v.numerator)
    return Polynomial(tuple(coeffs))
