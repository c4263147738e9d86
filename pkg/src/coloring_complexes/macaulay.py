"""Macaulay representations, M-vectors and the convex-ear conditions."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Optional, Sequence

__all__ = [
    "MacaulayRep",
    "MVectorCheck",
    "CedReport",
    "macaulay_rep",
    "macaulay_bound",
    "is_m_vector",
    "g_vector",
    "ced_conditions",
]


@dataclass(frozen=True)
class MacaulayRep:
    """``h = C(parts[0], i) + C(parts[1], i - 1) + ...``."""

    h: int
    i: int
    parts: tuple

    def indices(self) -> range:
        return range(self.i, self.i - len(self.parts), -1)

    def value(self) -> int:
        return sum(comb(a, k) for a, k in zip(self.parts, self.indices()))


def _largest_top(h: int, i: int) -> int:
    # largest a with C(a, i) <= h, for h >= 1
    hi = i
    while comb(hi, i) <= h:
        hi *= 2
    lo = i  # C(i, i) = 1 <= h
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if comb(mid, i) <= h:
            lo = mid
        else:
            hi = mid
    return lo


def macaulay_rep(h: int, i: int) -> MacaulayRep:
    """The ``i``-th Macaulay representation of ``h >= 1``.

    Greedy: take the largest ``a`` with ``C(a, i) <= h`` and continue with
    the remainder at ``i - 1``. The remainder is always below
    ``C(a, i - 1)``, so the parts strictly decrease.
    """
    if h < 1 or i < 1:
        raise ValueError(f"macaulay_rep needs h >= 1 and i >= 1, got h={h}, i={i}")
    parts = []
    rest, k = h, i
    while rest:
        a = _largest_top(rest, k)
        parts.append(a)
        rest -= comb(a, k)
        k -= 1
    return MacaulayRep(h, i, tuple(parts))


def macaulay_bound(h: int, i: int) -> int:
    """``h^<i>``: the largest possible next value after ``h`` in degree ``i``.

    Zero maps to zero.
    """
    if h < 0:
        raise ValueError(f"macaulay_bound needs h >= 0, got {h}")
    if h == 0:
        return 0
    rep = macaulay_rep(h, i)
    return sum(comb(a + 1, k + 1) for a, k in zip(rep.parts, rep.indices()))


@dataclass(frozen=True)
class MVectorCheck:
    """Verdict of :func:`is_m_vector`; truthy exactly when the sequence passes.

    ``witness`` is the first offending index: the position of a negative
    entry, 0 for a bad leading entry, or the ``i`` whose growth condition
    ``seq[i+1] <= seq[i]^<i>`` fails.
    """

    ok: bool
    witness: Optional[int] = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def is_m_vector(seq: Sequence[int]) -> MVectorCheck:
    seq = list(seq)
    if not seq:
        return MVectorCheck(True)
    for k, x in enumerate(seq):
        if x < 0:
            return MVectorCheck(False, k, f"entry {k} is negative ({x})")
    if seq[0] != 1:
        return MVectorCheck(False, 0, f"leading entry is {seq[0]}, not 1")
    for i in range(1, len(seq) - 1):
        bound = macaulay_bound(seq[i], i)
        if seq[i + 1] > bound:
            return MVectorCheck(
                False, i, f"entry {i + 1} = {seq[i + 1]} exceeds {seq[i]}^<{i}> = {bound}"
            )
    return MVectorCheck(True)


def g_vector(h: Sequence[int]) -> tuple:
    """``(h_0, h_1 - h_0, ..., h_c - h_{c-1})`` with ``c = ceil(d/2)``."""
    d = len(h) - 1
    top = (d + 1) // 2
    return (h[0],) + tuple(h[k] - h[k - 1] for k in range(1, top + 1))


@dataclass(frozen=True)
class CedReport:
    monotone_ok: bool
    symmetric_ineq_ok: bool
    g_is_m_vector: bool
    g: tuple
    first_failure: Optional[str] = None
    details: dict = field(default_factory=dict, compare=False)

    @property
    def ok(self) -> bool:
        return self.monotone_ok and self.symmetric_ineq_ok and self.g_is_m_vector


def ced_conditions(h: Sequence[int]) -> CedReport:
    """Check the three h-vector conditions forced by a convex ear decomposition.

    With ``d = len(h) - 1``:

    1. ``h_0 <= h_1 <= ... <= h_{floor(d/2)}``;
    2. ``h_i <= h_{d-i}`` for ``i <= d/2``;
    3. the g-vector (see :func:`g_vector`) is an M-vector.
    """
    h = tuple(h)
    if not h:
        raise ValueError("h-vector must be nonempty")
    d = len(h) - 1
    half = d // 2
    failures = []

    mono = next((k for k in range(half) if h[k] > h[k + 1]), None)
    if mono is not None:
        failures.append(f"condition 1: h_{mono} = {h[mono]} > h_{mono + 1} = {h[mono + 1]}")
    sym = next((k for k in range(half + 1) if h[k] > h[d - k]), None)
    if sym is not None:
        failures.append(f"condition 2: h_{sym} = {h[sym]} > h_{d - sym} = {h[d - sym]}")
    g = g_vector(h)
    mv = is_m_vector(g)
    if not mv:
        failures.append(f"condition 3: g = {g} is not an M-vector ({mv.reason})")
    return CedReport(
        monotone_ok=mono is None,
        symmetric_ineq_ok=sym is None,
        g_is_m_vector=mv.ok,
        g=g,
        first_failure=failures[0] if failures else None,
        details={"m_vector": mv},
    )
