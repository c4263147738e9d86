"""Brute-force reference computations.

These share no code with the package beyond the plain data types, so
agreement with the fast paths is evidence rather than tautology.
"""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from math import factorial


def count_proper_colorings(n, edges, k):
    return sum(
        1
        for col in product(range(k), repeat=n)
        if all(col[u - 1] != col[v - 1] for u, v in edges)
    )


def count_acyclic_orientations(n, edges):
    edges = list(edges)
    total = 0
    for bits in product((0, 1), repeat=len(edges)):
        arcs = [(u, v) if b == 0 else (v, u) for (u, v), b in zip(edges, bits)]
        # acyclic iff some ordering of the vertices is a topological sort
        indeg = {x: 0 for x in range(1, n + 1)}
        out = {x: [] for x in range(1, n + 1)}
        for a, b in arcs:
            indeg[b] += 1
            out[a].append(b)
        stack = [x for x in indeg if indeg[x] == 0]
        seen = 0
        while stack:
            x = stack.pop()
            seen += 1
            for y in out[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    stack.append(y)
        total += seen == n
    return total


def lagrange_coeffs(points):
    """Ascending coefficients of the Lagrange interpolant (exact rationals)."""
    m = len(points)
    coeffs = [Fraction(0)] * m
    for k, (xk, yk) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for l, (xl, _) in enumerate(points):
            if l == k:
                continue
            basis = [Fraction(0)] + basis
            for d in range(len(basis) - 1):
                basis[d] -= xl * basis[d + 1]
            denom *= xk - xl
        for d in range(m):
            coeffs[d] += yk * basis[d] / denom
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def binomial_factorial(a, b):
    if b < 0 or b > a:
        return 0
    return factorial(a) // (factorial(b) * factorial(a - b))


# -- ordered set partitions ---------------------------------------------------


def ordered_set_partitions(items):
    """All ordered set partitions of ``items`` as lists of frozensets."""
    items = list(items)
    if not items:
        yield []
        return
    n = len(items)
    for labels in product(range(n), repeat=n):
        used = sorted(set(labels))
        if used != list(range(len(used))):
            continue
        yield [frozenset(x for x, l in zip(items, labels) if l == b) for b in used]


def coloring_faces_oracle(n, edges, avoid=None):
    """f-vector of the coloring (or unipolar, ``avoid=v``) complex via partitions.

    A face is an ordered partition with at least two blocks, one of which
    contains both ends of an edge; for the unipolar complex ``avoid`` must
    sit in the last block.
    """
    f = {}
    for blocks in ordered_set_partitions(range(1, n + 1)):
        if len(blocks) < 2:
            continue
        if avoid is not None and avoid not in blocks[-1]:
            continue
        if any(u in B and v in B for B in blocks for u, v in edges):
            dim = len(blocks) - 2
            f[dim] = f.get(dim, 0) + 1
    if not f:
        return ()
    return tuple(f.get(k, 0) for k in range(max(f) + 1))


def bn_faces_oracle(n, hyperplanes):
    """f-vector of the type-B sphere restricted to ``hyperplanes``.

    Each cell is realized by an explicit integer point (zero coordinates,
    then absolute value = block position, with signs), and membership is
    decided by evaluating the hyperplane equations at that point.
    """
    f = {}
    for zmask in range((1 << n) - 1):
        Z = [k for k in range(1, n + 1) if zmask >> (k - 1) & 1]
        rest = [k for k in range(1, n + 1) if k not in Z]
        for blocks in ordered_set_partitions(rest):
            for signs in product((1, -1), repeat=len(rest)):
                sign = dict(zip(rest, signs))
                x = {k: 0 for k in Z}
                for pos, B in enumerate(blocks, start=1):
                    for k in B:
                        x[k] = sign[k] * pos
                hit = False
                for kind, i, j in hyperplanes:
                    if kind == "zero":
                        hit |= x[i] == 0
                    elif kind == "eq":
                        hit |= x[i] == x[j]
                    else:
                        hit |= x[i] == -x[j]
                if hit:
                    dim = len(blocks) - 1
                    f[dim] = f.get(dim, 0) + 1
    if not f:
        return ()
    return tuple(f.get(k, 0) for k in range(max(f) + 1))


def h_from_f_by_polynomial(f):
    """h via sum_i f_{i-1} (t-1)^{d-i}: expand and read coefficients
    of the reversed polynomial (the usual h-polynomial identity)."""
    d = len(f)
    ff = [1] + list(f)
    poly = [0] * (d + 1)  # coefficients of sum_i ff[i] * (t - 1)^(d - i), ascending
    for i, fi in enumerate(ff):
        e = d - i
        for k in range(e + 1):
            poly[k] += fi * binomial_factorial(e, k) * (-1) ** (e - k)
    # sum_j h_j t^(d-j) equals that polynomial
    return tuple(poly[d - j] for j in range(d + 1))


# -- Macaulay -----------------------------------------------------------------


def macaulay_decompositions(h, i):
    """Every admissible (a_i > a_{i-1} > ... > a_j >= j >= 1) sum equal to h."""
    out = []

    def rec(rest, k, upper, parts):
        if rest == 0:
            out.append(tuple(parts))
            return
        if k < 1:
            return
        for a in range(k, upper):
            c = binomial_factorial(a, k)
            if c > rest:
                break
            rec(rest - c, k - 1, a, parts + [a])

    rec(h, i, h + i + 1, [])
    return out


def max_upper_count_borel(i, H):
    """For each h <= H, the largest number of degree-(i+1) monomials whose
    degree-i divisors all lie in a strongly stable set of h degree-i monomials.

    Every strongly stable set of size <= H is enumerated; the count is done
    by listing divisors, not by a closed formula.
    """
    K = H + 1
    mons = sorted(combinations_with_replacement(range(1, K + 1), i), key=lambda m: (sum(m), m))
    idx = {m: k for k, m in enumerate(mons)}

    def preds(m):
        out = []
        for p in range(i):
            if m[p] > 1 and (p == 0 or m[p - 1] < m[p]):
                q = list(m)
                q[p] -= 1
                out.append(tuple(q))
        return out

    def succs(m):
        out = []
        for p in range(i):
            if m[p] < K and (p == i - 1 or m[p + 1] > m[p]):
                q = list(m)
                q[p] += 1
                out.append(tuple(q))
        return out

    P = {m: preds(m) for m in mons}
    S = {m: [s for s in succs(m) if s in idx] for m in mons}
    best = [0] * (H + 1)

    def completed_by(m, members):
        # degree-(i+1) multiples of m whose every degree-i divisor is present
        cnt = 0
        for w in {tuple(sorted(m + (x,))) for x in range(1, K + 1)}:
            if all(w[:p] + w[p + 1:] in members for p in range(i + 1)):
                cnt += 1
        return cnt

    def dfs(members, score, cands):
        size = len(members)
        best[size] = max(best[size], score)
        if size == H:
            return
        for pos, m in enumerate(cands):
            members.add(m)
            nxt = list(cands[pos + 1:])
            for s in S[m]:
                if idx[s] > idx[m] and all(p in members for p in P[s]) and s not in nxt:
                    nxt.append(s)
            nxt.sort(key=idx.__getitem__)
            dfs(members, score + completed_by(m, members), nxt)
            members.discard(m)

    dfs(set(), 0, [mons[0]])
    return best


def max_upper_count_unrestricted(i, nvars, H):
    """Like :func:`max_upper_count_borel` but over *all* subsets of degree-i
    monomials in ``nvars`` variables. Exponential; tiny cases only."""
    mons = list(combinations_with_replacement(range(nvars), i))
    uppers = list(combinations_with_replacement(range(nvars), i + 1))
    best = [0] * (H + 1)
    for h in range(H + 1):
        for D in combinations(mons, h):
            Ds = set(D)
            cnt = sum(
                1 for w in uppers if all(w[:p] + w[p + 1:] in Ds for p in range(i + 1))
            )
            best[h] = max(best[h], cnt)
    return best


def count_points_pure_python(n, hyperplanes, q):
    cnt = 0
    for x in product(range(q), repeat=n):
        ok = True
        for kind, i, j in hyperplanes:
            if kind == "zero":
                v = x[i - 1]
            elif kind == "eq":
                v = x[i - 1] - x[j - 1]
            else:
                v = x[i - 1] + x[j - 1]
            if v % q == 0:
                ok = False
                break
        cnt += ok
    return cnt

