"""
Coloring complex of a small graph
=================================

Build the complex of the 4-cycle face by face, count faces, and compare
the h-vector with what the chromatic polynomial predicts.
"""

from coloring_complexes import (
    Graph,
    build_coloring_complex,
    chromatic_polynomial,
    double_cone_h,
    extract_color_h,
    format_face,
    reduced_betti,
    summarize,
)

G = Graph.cycle(4)
P = chromatic_polynomial(G)
print("P(t) =", P)

# faces are chains of vertex subsets; print a few
faces = build_coloring_complex(G)
print(len(faces), "faces, e.g.", " ".join(f"[{format_face(F)}]" for F in faces[10:14]))

summ = summarize(faces)
print("f =", summ.f, " h =", summ.h, " pure:", summ.pure)

# coning twice only appends zeros, and then the formula agrees
print("double cone h =", double_cone_h(summ.h))
print("from P(t)     =", extract_color_h(P, G.n).values)

# homotopy type: a wedge of a(G) - 1 spheres where a(G) = (-1)^n P(-1)
print("reduced Betti numbers:", reduced_betti(faces))
