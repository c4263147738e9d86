"""
When the formula leaves the world of complexes
==============================================

Feed characteristic polynomials of matroids that are not type-B
restrictions into the same formula and test the three h-vector
conditions on what comes out.
"""

from coloring_complexes import ced_conditions, extract_matroid_h, is_m_vector, poly_from_roots

# projective geometry over F_2: a negative entry appears
pg = poly_from_roots([1, 2, 4, 8, 16])
print("PG(5,2):", extract_matroid_h(pg, 6).values)

# nonnegative, yet not an M-vector
b3 = poly_from_roots([1, 3, 5])
h = extract_matroid_h(b3, 4).values[:3]
print("B_3:", h, is_m_vector(h))

# first two conditions hold, the g-vector fails
par = poly_from_roots([1, 1, 1, 2, 8, 10])
h = extract_matroid_h(par, 7).values[:6]
rep = ced_conditions(h)
print("parallel connection:", h)
print("  monotone", rep.monotone_ok, " h_i <= h_(d-i)", rep.symmetric_ineq_ok, " g", rep.g)
print(" ", is_m_vector(rep.g))
