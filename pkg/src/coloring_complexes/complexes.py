"""Explicit face lists of coloring, unipolar and type-B restricted complexes.

A face of the coloring complex is a chain ``S_1 < S_2 < ... < S_r`` of
nonempty proper subsets of ``[n]``, stored as a tuple of bitmasks (bit
``k-1`` stands for vertex ``k``). The chain is the ordered set partition
``S_1 | S_2 - S_1 | ... | [n] - S_r`` of the braid arrangement's Coxeter
sphere, and belongs to the complex exactly when one of those blocks,
the last one included, spans an edge.

A face of the type-B Coxeter sphere is a :class:`SignedBlockFace`: the
coordinates that vanish, then blocks of coordinates with equal absolute
value in increasing order, each coordinate carrying a sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, gcd
from typing import NamedTuple, Sequence, Union

from .arrangements import SignedArrangement
from .errors import CrossCheckFailure, EmptyArrangement, LengthMismatch, NoEdges, NotAComplex, VertexOutOfRange
from .graphs import Graph

__all__ = [
    "ChainFace",
    "SignedBlockFace",
    "ComplexSummary",
    "build_coloring_complex",
    "build_unipolar_complex",
    "build_bn_restriction",
    "bn_cells",
    "face_dimension",
    "faces_of",
    "f_vector",
    "h_from_f",
    "double_cone_h",
    "summarize",
    "check_closed",
    "is_pure",
    "reduced_betti",
    "format_face",
    "EXACT_RANK_MAX_COLUMNS",
    "RANK_PRIMES",
]

ChainFace = tuple  # tuple[int, ...] of strictly increasing bitmasks

#: Boundary matrices with fewer columns are ranked exactly over the integers.
EXACT_RANK_MAX_COLUMNS = 2000
#: Above that, rank modulo both primes and require agreement.
RANK_PRIMES = (2147483647, 1073741827)


class SignedBlockFace(NamedTuple):
    """Cell of the type-B Coxeter sphere.

    ``blocks`` is a tuple of ``(members, negatives)`` bitmask pairs;
    ``negatives`` is the subset of ``members`` with negative sign.
    """

    zero_set: int
    blocks: tuple

    @property
    def dim(self) -> int:
        return len(self.blocks) - 1


Face = Union[tuple, SignedBlockFace]


@dataclass(frozen=True)
class ComplexSummary:
    dim: int
    f: tuple
    h: tuple
    pure: bool

    @property
    def d(self) -> int:
        return self.dim + 1


def _dependent_sets(G: Graph) -> list[bool]:
    """``dep[S]`` is True when the vertex set ``S`` spans an edge of ``G``."""
    adj = G.neighbor_masks()
    dep = [False] * (1 << G.n)
    for S in range(1, 1 << G.n):
        low = (S & -S).bit_length() - 1
        rest = S & (S - 1)
        dep[S] = dep[rest] or bool(adj[low] & rest)
    return dep


def _chain_faces(n: int, dep: list[bool], universe: int) -> list[tuple]:
    full = (1 << n) - 1
    out = []

    def extend(chain, S, flag):
        free = universe & ~S
        D = free
        while D:
            T = S | D
            if T != full:
                f = flag or dep[D]
                face = chain + (T,)
                if f or dep[full ^ T]:
                    out.append(face)
                if T != universe:
                    extend(face, T, f)
            D = (D - 1) & free

    extend((), 0, False)
    out.sort(key=lambda c: (len(c), c))
    return out


def build_coloring_complex(G: Graph) -> list[tuple]:
    """All faces of the coloring complex of ``G``, sorted by (size, masks)."""
    if not G.edges:
        raise NoEdges("the coloring complex of an edgeless graph is void")
    full = (1 << G.n) - 1
    return _chain_faces(G.n, _dependent_sets(G), full)


def build_unipolar_complex(G: Graph, v: int) -> list[tuple]:
    """Faces of the coloring complex whose largest set avoids ``v``."""
    if not G.edges:
        raise NoEdges("the unipolar complex of an edgeless graph is void")
    if not 1 <= v <= G.n:
        raise VertexOutOfRange(f"vertex {v} not in 1..{G.n}")
    full = (1 << G.n) - 1
    return _chain_faces(G.n, _dependent_sets(G), full & ~(1 << (v - 1)))


def _ordered_partitions(mask: int):
    if not mask:
        yield ()
        return
    D = mask
    while D:
        for rest in _ordered_partitions(mask & ~D):
            yield (D,) + rest
        D = (D - 1) & mask


def _submasks(mask: int):
    D = mask
    while True:
        yield D
        if not D:
            return
        D = (D - 1) & mask


@lru_cache(maxsize=None)
def bn_cells(n: int) -> tuple:
    """Every cell of the type-B Coxeter sphere in dimension ``n``, canonically sorted."""
    full = (1 << n) - 1
    cells = []
    for Z in range(full):  # Z == full would be the origin, not on the sphere
        for parts in _ordered_partitions(full & ~Z):
            for neg in _submasks(full & ~Z):
                cells.append(SignedBlockFace(Z, tuple((B, B & neg) for B in parts)))
    cells.sort(key=lambda c: (len(c.blocks), c.zero_set, c.blocks))
    return tuple(cells)


def _cell_on_hyperplane(cell: SignedBlockFace, h) -> bool:
    Z = cell.zero_set
    bi = 1 << (h.i - 1)
    if h.kind == "zero":
        return bool(Z & bi)
    bj = 1 << (h.j - 1)
    if Z & bi and Z & bj:
        return True
    for B, neg in cell.blocks:
        if B & bi and B & bj:
            same = bool(neg & bi) == bool(neg & bj)
            return same if h.kind == "eq" else not same
    return False


def build_bn_restriction(A: SignedArrangement) -> list[SignedBlockFace]:
    """Cells of the type-B sphere lying inside at least one hyperplane of ``A``."""
    if not A.hyperplanes:
        raise EmptyArrangement("restriction to an empty arrangement is void")
    hs = A.sorted()
    return [c for c in bn_cells(A.n) if any(_cell_on_hyperplane(c, h) for h in hs)]


def face_dimension(face: Face) -> int:
    if isinstance(face, SignedBlockFace):
        return len(face.blocks) - 1
    return len(face) - 1


def faces_of(face: Face) -> list:
    """Codimension-one faces, excluding the empty face."""
    if isinstance(face, SignedBlockFace):
        blocks = face.blocks
        r = len(blocks)
        if r == 1:
            return []
        out = [SignedBlockFace(face.zero_set | blocks[0][0], blocks[1:])]
        for k in range(r - 1):
            (b1, n1), (b2, n2) = blocks[k], blocks[k + 1]
            merged = blocks[:k] + ((b1 | b2, n1 | n2),) + blocks[k + 2:]
            out.append(SignedBlockFace(face.zero_set, merged))
        return out
    if len(face) == 1:
        return []
    return [face[:k] + face[k + 1:] for k in range(len(face))]


def f_vector(faces: Sequence[Face]) -> tuple:
    """Face counts ``(f_0, ..., f_dim)``; the empty face is implicit."""
    if not faces:
        return ()
    dim = max(face_dimension(F) for F in faces)
    f = [0] * (dim + 1)
    for F in faces:
        f[face_dimension(F)] += 1
    return tuple(f)


def h_from_f(f: Sequence[int], dim: int) -> tuple:
    """h-vector of a ``dim``-dimensional complex with face numbers ``f``."""
    if len(f) != dim + 1:
        raise LengthMismatch(f"f-vector of length {len(f)} for dimension {dim}")
    d = dim + 1
    ff = (1,) + tuple(f)  # ff[i] = f_{i-1}
    return tuple(
        sum((-1) ** (j - i) * comb(d - i, j - i) * ff[i] for i in range(j + 1))
        for j in range(d + 1)
    )


def double_cone_h(h: Sequence[int]) -> tuple:
    """h-vector of the double cone: the same entries followed by two zeros."""
    if not h:
        raise LengthMismatch("h-vector must be nonempty")
    return tuple(h) + (0, 0)


def check_closed(faces: Sequence[Face]) -> None:
    """Raise :class:`NotAComplex` unless every face of every face is listed."""
    present = set(faces)
    for F in faces:
        for G in faces_of(F):
            if G not in present:
                raise NotAComplex(f"face {F} is listed but its face {G} is not")


def is_pure(faces: Sequence[Face]) -> bool:
    if not faces:
        return True
    dim = max(face_dimension(F) for F in faces)
    covered = set()
    for F in faces:
        covered.update(faces_of(F))
    return all(F in covered for F in faces if face_dimension(F) < dim)


def summarize(faces: Sequence[Face]) -> ComplexSummary:
    f = f_vector(faces)
    dim = len(f) - 1
    return ComplexSummary(dim=dim, f=f, h=h_from_f(f, dim), pure=is_pure(faces))


# -- exact homology ---------------------------------------------------------


def _rank_exact(columns: list[dict]) -> int:
    # Column reduction on the largest row index. Row operations are
    # cross-multiplications followed by removing the content, so the rank
    # is the rational rank and entries stay small.
    pivots: dict[int, dict] = {}
    for col in columns:
        v = dict(col)
        while v:
            p = max(v)
            w = pivots.get(p)
            if w is None:
                pivots[p] = v
                break
            a, b = w[p], v[p]
            if a != 1:
                v = {k: a * x for k, x in v.items()}
            for k, x in w.items():
                y = v.get(k, 0) - b * x
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
            g = 0
            for x in v.values():
                g = gcd(g, x)
                if g == 1:
                    break
            if g > 1:
                v = {k: x // g for k, x in v.items()}
    return len(pivots)


def _rank_mod(columns: list[dict], p: int) -> int:
    pivots: dict[int, dict] = {}
    for col in columns:
        v = {k: x % p for k, x in col.items() if x % p}
        while v:
            piv = max(v)
            w = pivots.get(piv)
            if w is None:
                inv = pow(v[piv], -1, p)
                pivots[piv] = {k: x * inv % p for k, x in v.items()}
                break
            c = v[piv]
            for k, x in w.items():
                y = (v.get(k, 0) - c * x) % p
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
    return len(pivots)


def _boundary_rank(columns: list[dict]) -> int:
    if len(columns) < EXACT_RANK_MAX_COLUMNS:
        return _rank_exact(columns)
    ranks = {_rank_mod(columns, p) for p in RANK_PRIMES}
    if len(ranks) != 1:
        raise CrossCheckFailure(f"modular ranks disagree: {sorted(ranks)}")
    return ranks.pop()


def reduced_betti(faces: Sequence[tuple]) -> dict[int, int]:
    """Reduced rational Betti numbers of a chain complex given by its faces.

    Returns ``{k: betti_k}`` for ``k = -1 .. dim``. Faces of a chain are its
    subchains; deleting position ``p`` contributes sign ``(-1)**p``.
    """
    check_closed(faces)
    by_dim: dict[int, list] = {}
    for F in faces:
        by_dim.setdefault(len(F) - 1, []).append(F)
    dim = max(by_dim, default=-1)
    index = {-1: {(): 0}}
    for k in range(dim + 1):
        index[k] = {F: pos for pos, F in enumerate(by_dim[k])}
    ranks = {}
    for k in range(dim + 1):
        lower = index[k - 1]
        cols = []
        for F in by_dim[k]:
            cols.append({lower[F[:p] + F[p + 1:]]: (-1) ** p for p in range(len(F))})
        ranks[k] = _boundary_rank(cols)
    ranks[-1] = 0
    ranks[dim + 1] = 0
    return {
        k: len(index[k]) - ranks[k] - ranks[k + 1]
        for k in range(-1, dim + 1)
    }


def format_face(face: Face) -> str:
    """Text form used by face dumps.

    Chains print as ``1,2|1,2,4``; signed cells as ``z:{1} b1:{+2,-3}``.
    """

    def members(mask):
        return [k + 1 for k in range(mask.bit_length()) if mask >> k & 1]

    if isinstance(face, SignedBlockFace):
        parts = ["z:{" + ",".join(map(str, members(face.zero_set))) + "}"]
        for k, (B, neg) in enumerate(face.blocks, start=1):
            signed = [f"{'-' if neg >> (v - 1) & 1 else '+'}{v}" for v in members(B)]
            parts.append(f"b{k}:{{{','.join(signed)}}}")
        return " ".join(parts)
    return "|".join(",".join(map(str, members(S))) for S in face)
