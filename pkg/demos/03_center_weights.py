"""
Center weights and the GS filter
================================

The center U(1) of S(U(p) x U(q)) acts on the lowest weight vector of each
summand by a rational weight.  Summands whose weight does not exceed
-2k + 1/p + 1/q pass the filter; among the symmetric ones only F(2k w_q)
survives.
"""

from grassmoduli import classify_components, gs_intersection_sym, gs_threshold
from grassmoduli.oracle import lowest_weight_pairing

for p, q, k in [(2, 2, 1), (3, 2, 1), (4, 1, 2)]:
    print(f"(p, q, k) = ({p}, {q}, {k}), threshold {gs_threshold(p, q, k)}")
    for c in classify_components(p, q, k):
        orc = lowest_weight_pairing(c.partition, p, q)
        flag = "pass" if c.passes_gs_filter else "    "
        print(f"  {flag}  j={c.component.j}  {c.parity:<13}  weight {c.center_weight}  (pairing {orc})")
    print("  GS intersection with S^2:", gs_intersection_sym(p, q, k))

# For q = 1 the j_0 = 1 summand sits exactly on the threshold; it is
# antisymmetric, so the intersection with S^2 is unaffected.
