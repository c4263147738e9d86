"""
Macaulay representations and M-vectors
======================================
"""

from coloring_complexes import is_m_vector, macaulay_bound, macaulay_rep

for h, i in [(10, 2), (351, 2), (3952, 3), (100, 4)]:
    rep = macaulay_rep(h, i)
    print(f"{h} in degree {i}: parts {rep.parts}, bound {macaulay_bound(h, i)}")

# Hilbert function of k[x, y, z]
print(is_m_vector((1, 3, 6, 10, 15)))
print(is_m_vector((1, 2, 4)))
