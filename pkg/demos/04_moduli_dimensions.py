"""
Dimension of the moduli space
=============================

dim V_k = dim S^2 F(k w_q) - dim F(2k w_q), computed from the rectangle
dimension formula and, separately, by summing the symmetric summands.
"""

from grassmoduli import equal_pq_report, moduli_report

print(f"{'p':>2} {'q':>2} {'k':>2} {'dim H0':>8} {'dim V_k':>12} {'by summands':>12}")
for p, q in [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (4, 3)]:
    for k in range(1, 4):
        r = moduli_report(p, q, k)
        print(f"{p:>2} {q:>2} {k:>2} {r.dim_H0:>8} {r.dim_Vk:>12} {r.dim_Vk_by_components:>12}")

# Gr_2(C^4), degree one: a one-parameter family
pq = equal_pq_report(2, 1)
print(pq.report.to_json(indent=2))
for note in pq.notes:
    print("-", note)

# dimensions stay exact far beyond 64 bits
print(moduli_report(10, 5, 10).dim_Vk)
