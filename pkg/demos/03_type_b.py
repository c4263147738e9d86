"""
Signed arrangements and the type-B sphere
=========================================

Count points over small finite fields to get a characteristic polynomial,
then read off the h-vector of the restricted Coxeter complex.
"""

from coloring_complexes import (
    Hyperplane,
    SignedArrangement,
    build_bn_restriction,
    char_poly,
    extract_bn_h,
    f_vector,
    full_bn,
    h_from_f,
    point_count,
)

A = full_bn(3)
# fields with q <= 2n - 1 have no room for a point off every hyperplane
for q in (3, 5, 7):
    print(f"|F_{q}^3 minus A| =", point_count(A, q))

chi, r = char_poly(A)
print("chi(t) =", chi, " rank", r)
print("h from chi:", extract_bn_h(chi, r, A.n).values)

faces = build_bn_restriction(A)
f = f_vector(faces)
print("direct f =", f, " h =", h_from_f(f, len(f) - 1))

# a smaller arrangement: x1 = x2, x2 = -x3, x3 = 0
B = SignedArrangement(3, frozenset({Hyperplane.eq(1, 2), Hyperplane.ne(2, 3), Hyperplane.zero(3)}))
chi, r = char_poly(B)
faces = build_bn_restriction(B)
f = f_vector(faces)
print(chi, "->", extract_bn_h(chi, r, 3).values, "vs", h_from_f(f, len(f) - 1))
