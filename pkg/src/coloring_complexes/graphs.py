"""Labeled simple graphs and their chromatic data."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Optional

from .core import Polynomial, poly_eval, poly_from_roots
from .errors import LimitExceeded, ParseError

__all__ = [
    "Graph",
    "chromatic_polynomial",
    "acyclic_orientation_count",
    "has_dominating_vertex",
    "corpus",
    "parse_graph",
    "load_graph",
    "format_graph",
]

CORPUS_MAX_N = 7
CORPUS_EXHAUSTIVE_N = 5
CORPUS_SAMPLE_SIZE = 200


@dataclass(frozen=True)
class Graph:
    """Simple graph on the vertices ``1..n``.

    ``edges`` holds pairs ``(u, v)`` with ``u < v``. Isolated vertices are
    allowed, so ``n`` is independent of the edge set.
    """

    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={self.n}")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 1 or v > self.n:
                raise ValueError(f"edge ({u}, {v}) outside 1..{self.n}")
            norm.add((u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        edges = list(edges)
        g = cls(n, frozenset(edges))
        if len(g.edges) != len(edges):
            raise ValueError("duplicate edges")
        return g

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, frozenset(combinations(range(1, n + 1), 2)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, frozenset((i, i + 1) for i in range(1, n)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls(n, frozenset([(i, i + 1) for i in range(1, n)] + [(1, n)]))

    @classmethod
    def star(cls, n: int, center: int = 1) -> Graph:
        return cls(n, frozenset((center, v) for v in range(1, n + 1) if v != center))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbor_masks(self) -> list[int]:
        """Adjacency bitmasks; bit ``k-1`` of entry ``v-1`` marks neighbor k."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return adj

    def components(self) -> int:
        parent = list(range(self.n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            parent[find(u)] = find(v)
        return len({find(v) for v in range(1, self.n + 1)})

    def is_connected(self) -> bool:
        return self.components() == 1

    def delete(self, e: tuple[int, int]) -> Graph:
        return Graph(self.n, self.edges - {e})

    def contract(self, e: tuple[int, int]) -> Graph:
        """Identify the endpoints of ``e`` and drop parallel copies.

        The surviving vertex is the smaller endpoint; vertices above the
        larger one shift down by one.
        """
        u, v = e

        def relabel(x):
            if x == v:
                x = u
            return x - 1 if x > v else x

        edges = set()
        for a, b in self.edges:
            if (a, b) == (u, v):
                continue
            a, b = relabel(a), relabel(b)
            edges.add((min(a, b), max(a, b)))
        return Graph(self.n - 1, frozenset(edges))


def _canonical_key(n: int, edges: frozenset) -> tuple:
    # Refinement by degree then sorted neighbor degrees; ties keep the
    # original order. Not a canonical form, but equal keys imply isomorphic
    # graphs, which is all the cache needs.
    deg = [0] * (n + 1)
    nbrs = [[] for _ in range(n + 1)]
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
        nbrs[a].append(b)
        nbrs[b].append(a)
    sig = {v: (deg[v], tuple(sorted(deg[w] for w in nbrs[v]))) for v in range(1, n + 1)}
    order = sorted(range(1, n + 1), key=lambda v: (sig[v], v))
    pos = {v: k for k, v in enumerate(order, start=1)}
    return (n, tuple(sorted((min(pos[a], pos[b]), max(pos[a], pos[b])) for a, b in edges)))


def chromatic_polynomial(G: Graph) -> Polynomial:
    """Chromatic polynomial by deletion and contraction.

    Subresults are memoized per call on a relabeled edge set. Edgeless and
    complete graphs terminate the recursion directly.
    """
    cache: dict[tuple, Polynomial] = {}

    def rec(g: Graph) -> Polynomial:
        m = len(g.edges)
        if m == 0:
            return Polynomial.monomial(g.n)
        if m == g.n * (g.n - 1) // 2:
            return poly_from_roots(range(g.n))
        key = _canonical_key(g.n, g.edges)
        hit = cache.get(key)
        if hit is not None:
            return hit
        e = max(g.edges)
        p = rec(g.delete(e)) - rec(g.contract(e))
        cache[key] = p
        return p

    return rec(G)


def acyclic_orientation_count(G: Graph) -> int:
    """Number of acyclic orientations, ``(-1)**n * P_G(-1)``."""
    return (-1) ** G.n * poly_eval(chromatic_polynomial(G), -1)


def has_dominating_vertex(G: Graph) -> Optional[int]:
    """Least vertex adjacent to all others, or ``None``."""
    for v in range(1, G.n + 1):
        if G.degree(v) == G.n - 1:
            return v
    return None


def _graph_from_mask(n: int, pairs: list[tuple[int, int]], mask: int) -> Graph:
    return Graph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))


def corpus(max_n: int, sample_seed: int = 0, sample_size: int = CORPUS_SAMPLE_SIZE) -> list[Graph]:
    """Test corpus of labeled graphs with at least one edge.

    Every labeled graph is included for ``n <= 5``; for ``n = 6, 7`` a
    seeded sample of ``sample_size`` distinct edge sets is drawn. Graphs
    are ordered by ``n`` and then by edge bitmask within each exhaustive
    level (sample order for sampled levels).
    """
    if max_n > CORPUS_MAX_N:
        raise LimitExceeded(f"corpus supports max_n <= {CORPUS_MAX_N}, got {max_n}")
    if max_n < 2:
        raise ValueError(f"corpus needs max_n >= 2, got {max_n}")
    rng = random.Random(sample_seed)
    out: list[Graph] = []
    for n in range(2, max_n + 1):
        pairs = list(combinations(range(1, n + 1), 2))
        total = 1 << len(pairs)
        if n <= CORPUS_EXHAUSTIVE_N:
            masks = range(1, total)
        else:
            masks = rng.sample(range(1, total), sample_size)
        out.extend(_graph_from_mask(n, pairs, m) for m in masks)
    return out


def parse_graph(text: str, source: str = "<input>") -> Graph:
    """Parse the ``n m`` / ``u v`` graph text format.

    Blank lines and ``#`` comments are ignored. Errors carry the source
    name and line number.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("empty graph file", source)
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
        raise ParseError(f"header declares {m} edges, found {len(body)}", source, where)
    edges = set()
    for lineno, fields in body:
        try:
            u, v = (int(x) for x in fields)
        except ValueError:
            raise ParseError(f"expected 'u v', got {' '.join(fields)!r}", source, lineno)
        if not 1 <= u < v <= n:
            raise ParseError(f"edge {u} {v} violates 1 <= u < v <= {n}", source, lineno)
        if (u, v) in edges:
            raise ParseError(f"duplicate edge {u} {v}", source, lineno)
        edges.add((u, v))
    return Graph(n, frozenset(edges))


def load_graph(path) -> Graph:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read file ({exc.strerror})", str(path))
    return parse_graph(text, str(path))


def format_graph(G: Graph) -> str:
    lines = [f"{G.n} {len(G.edges)}"]
    lines += [f"{u} {v}" for u, v in G.sorted_edges()]
    return "\n".join(lines) + "\n"
