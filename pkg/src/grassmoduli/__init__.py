"""Exact representation theory for holomorphic isometric embeddings of Grassmannians.

Decomposes the tensor and symmetric square of the rectangular SU(p+q)
representation F(k w_q), filters components by their center weight and
computes the dimension of the moduli space V_k, with a brute-force Schur
polynomial oracle to cross-check every step.
"""
from .moduli import (
    CenterWeight,
    ComponentReport,
    ModuliReport,
    center_weight_of_component,
    classify_components,
    equal_pq_report,
    gs_intersection_sym,
    gs_threshold,
    gs_v0v0_intersection_sym,
    lowest_weight_closed_form,
    moduli_report,
)
from .oracle import MonomialPoly, lowest_weight_pairing, schur_poly, square_vars, to_schur_basis
from .partitions import (
    FundamentalCoeffs,
    Partition,
    dim_gl,
    dim_rect,
    fund_to_partition,
    partition_to_fund,
    rectangle,
)
from .rect_decomp import (
    LRTableau,
    RectSquareComponent,
    lr_coefficient,
    rect_square_closed_form,
    verify_lr_rules_witness,
)
from .schur import SchurExpansion, adams2, alt_square, multiply, sym_square

__version__ = "0.1.0"
