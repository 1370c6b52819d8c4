"""
Squaring a rectangular representation
=====================================

The space of sections of O(k) over the Grassmannian of p-planes in C^(p+q)
is the SU(p+q) representation F(k w_q), whose Young diagram is a rectangle
with q rows and k columns.  Its tensor square is multiplicity free with one
summand for every vector (i_1, ..., i_q) with i_1 + ... + i_q <= k.
"""

from grassmoduli import lr_coefficient, rect_square_closed_form, verify_lr_rules_witness
from grassmoduli.oracle import schur_poly, to_schur_basis
from grassmoduli.partitions import rectangle
from grassmoduli.rect_decomp import lr_tableaux

p, q, k = 3, 2, 2

# closed form, one line per summand
for c in rect_square_closed_form(p, q, k):
    print(f"i={c.i}  j={c.j}  V({','.join(map(str, c.partition))})  F({c.fund})")

# the same support from brute-force monomial multiplication
f = schur_poly(rectangle(k, q), p + q)
print("oracle:", to_schur_basis(f * f).to_text())

# a single LR coefficient, and the fillings realizing the square
print("c^{(3,3,1,1)}_{(2,2),(2,2)} =", lr_coefficient((2, 2), (2, 2), (3, 3, 1, 1)))
for t in lr_tableaux(rectangle(k, q), rectangle(k, q), max_rows=p + q):
    print(t.outer, t.rows())

# every filling is determined by the counts of the last letter below the rectangle
report = verify_lr_rules_witness(p, q, k)
print(f"{report.fillings} fillings, violations: {report.violations or 'none'}")
