"""
Symmetric and exterior squares
==============================

The character of S^2 V is half of s(x)^2 + s(x^2).  The second term is
expanded in the Schur basis with the domino (2-quotient) rule; here it is
compared with direct substitution x -> x^2 in the monomial expansion.
"""

from grassmoduli import adams2, alt_square, dim_gl, sym_square
from grassmoduli.oracle import schur_poly, square_vars, to_schur_basis
from grassmoduli.partitions import rectangle

lam, n = rectangle(2, 2), 4

psi = adams2(lam, n)
print("s_lam(x^2)      =", psi.to_text())
print("via monomials   =", to_schur_basis(square_vars(schur_poly(lam, n))).to_text())

sym, alt = sym_square(lam, n), alt_square(lam, n)
print("S^2             =", sym.to_text())
print("Lambda^2        =", alt.to_text())

d = dim_gl(lam, n)
print(f"dimensions: {sym.dimension(n)} = {d}*{d + 1}/2, {alt.dimension(n)} = {d}*{d - 1}/2")
