"""
Unipolar complexes
==================

Keep one vertex out of every set in the chain. The h-vector does not
depend on which vertex is chosen.
"""

from coloring_complexes import Graph, build_unipolar_complex, chromatic_polynomial, extract_unipolar_h, summarize

G = Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 3)])
P = chromatic_polynomial(G)
print("formula:", extract_unipolar_h(P, G.n).values)

for v in range(1, G.n + 1):
    s = summarize(build_unipolar_complex(G, v))
    print(f"vertex {v}: f = {s.f}, h = {s.h}")
