"""Invariant suites comparing the core computations with the brute-force oracle.

Each suite returns :class:`Check` records.  Discrepancies between the
implemented formulas and the published statements are collected separately as
:class:`Discrepancy` records; they are reported, never counted as failures,
unless the oracle sides with the published version.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb

from .moduli import (
    ANTISYMMETRIC,
    SYMMETRIC,
    center_weight_unweighted,
    classify_components,
    equal_pq_report,
    gs_intersection_sym,
    gs_threshold,
    gs_v0v0_intersection_sym,
    lowest_weight_closed_form,
    moduli_report,
    paper_skew_label,
    skew_component,
)
from .oracle import lowest_weight_pairing, schur_poly, square_vars, to_schur_basis
from .partitions import (
    FundamentalCoeffs,
    dim_gl,
    dim_rect,
    fund_to_partition,
    partition_to_fund,
    rectangle,
)
from .rect_decomp import lr_product, rect_square_closed_form, verify_lr_rules_witness
from .schur import SchurExpansion, adams2, alt_square, multiply, partitions_of, sym_square

__all__ = [
    "Check",
    "Discrepancy",
    "VerifyResult",
    "SUITES",
    "instances",
    "run_verify",
    "find_discrepancies",
]


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0


@dataclass(frozen=True)
class Discrepancy:
    key: str
    where: str
    published: str
    computed: str
    oracle_confirms_computed: bool


@dataclass
class VerifyResult:
    checks: list[Check]
    discrepancies: list[Discrepancy]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks) and all(
            d.oracle_confirms_computed for d in self.discrepancies
        )


def instances(max_n: int, max_k: int, min_k: int = 0):
    """All (p, q, k) with p >= q >= 1, p + q <= max_n, min_k <= k <= max_k."""
    for n in range(2, max_n + 1):
        for q in range(1, n // 2 + 1):
            for k in range(min_k, max_k + 1):
                yield n - q, q, k


class _Collector:
    def __init__(self, suite, name):
        self.check = Check(suite, name, True)

    def case(self, ok: bool, msg):
        self.check.cases += 1
        if not ok:
            self.check.passed = False
            if len(self.check.failures) < 20:
                self.check.failures.append(msg() if callable(msg) else msg)


def _timed(suite, name, fn, *args):
    col = _Collector(suite, name)
    t0 = time.perf_counter()
    fn(col, *args)
    col.check.seconds = time.perf_counter() - t0
    return col.check


# -- partitions ---------------------------------------------------------------

def _round_trip(col, max_n, _max_k):
    for n in range(2, max(2, min(max_n, 8)) + 1):
        for coeffs in product(range(4), repeat=n - 1):
            c = FundamentalCoeffs(n, coeffs)
            col.case(partition_to_fund(fund_to_partition(c), n) == c, f"n={n} {coeffs}")


def _rect_dims(col, max_n, max_k):
    for a in range(1, max(max_n, 2) + 1):
        for b in range(0, max(max_k, 1) + 2):
            for c in range(1, a + 1):
                col.case(dim_rect(a, b, c) == dim_gl(rectangle(b, c), a), f"a={a} b={b} c={c}")


def _ssyt_dims(col, max_n, _max_k):
    for n in range(1, min(max_n, 6) + 1):
        for size in range(0, 9):
            for lam in partitions_of(size, n):
                col.case(schur_poly(lam, n).at_ones() == dim_gl(lam, n), f"{lam} n={n}")


# -- Schur engine -------------------------------------------------------------

def _product_oracle(col, max_n, _max_k):
    for n in range(1, min(max_n, 5) + 1):
        for total in range(0, 9):
            for a in range(total // 2, total + 1):
                for lam in partitions_of(a, n):
                    for mu in partitions_of(total - a, n):
                        got = multiply(SchurExpansion.basis(lam), SchurExpansion.basis(mu), n)
                        want = to_schur_basis(schur_poly(lam, n) * schur_poly(mu, n))
                        col.case(got == want, f"{lam}*{mu} n={n}: {got} vs {want}")


def _adams_oracle(col, max_n, _max_k):
    for n in range(1, min(max_n, 5) + 1):
        for size in range(0, 9):
            for lam in partitions_of(size, n):
                got = adams2(lam, n)
                want = to_schur_basis(square_vars(schur_poly(lam, n)))
                col.case(got == want, f"{lam} n={n}: {got} vs {want}")


def _split_dims(col, max_n, _max_k):
    for n in range(1, min(max_n, 6) + 1):
        for size in range(0, 7):
            for lam in partitions_of(size, n):
                sym, alt = sym_square(lam, n), alt_square(lam, n)
                full = multiply(SchurExpansion.basis(lam), SchurExpansion.basis(lam), n)
                d = dim_gl(lam, n)
                col.case(
                    sym + alt == full
                    and sym.dimension(n) == d * (d + 1) // 2
                    and alt.dimension(n) == d * (d - 1) // 2,
                    f"{lam} n={n}",
                )


# -- rectangle square ---------------------------------------------------------

def _rect_three_ways(col, max_n, max_k):
    for p, q, k in instances(max_n, max_k):
        n = p + q
        rect = rectangle(k, q)
        closed = sorted(c.partition for c in rect_square_closed_form(p, q, k))
        lr = lr_product(rect, rect, n)
        oracle_poly = schur_poly(rect, n)
        oracle = to_schur_basis(oracle_poly * oracle_poly)
        ok = (
            closed == sorted(lr)
            and closed == sorted(oracle.support())
            and all(m == 1 for m in lr.values())
            and all(c == 1 for _, c in oracle)
            and len(closed) == comb(k + q, q)
        )
        col.case(ok, f"(p,q,k)=({p},{q},{k})")


def _lr_witness(col, max_n, max_k):
    for p, q, k in instances(max_n, min(max_k, 3)):
        if q > 4:
            continue
        rep = verify_lr_rules_witness(p, q, k)
        col.case(rep.ok and rep.fillings == comb(k + q, q), f"({p},{q},{k}): {rep.violations[:2]}")


# -- moduli pipeline ----------------------------------------------------------

def _weights(col, max_n, max_k):
    for p, q, k in instances(max_n, max_k):
        for c in classify_components(p, q, k):
            closed = lowest_weight_closed_form(c.component.j, p, q, k).value
            comp = c.center_weight.value
            orc = lowest_weight_pairing(c.partition, p, q)
            col.case(
                closed == comp == orc,
                f"({p},{q},{k}) j={c.component.j}: {closed}, {comp}, {orc}",
            )


def _gs_filter(col, max_n, max_k):
    for p, q, k in instances(max_n, max_k, min_k=1):
        threshold = gs_threshold(p, q, k).value
        for c in classify_components(p, q, k):
            orc = lowest_weight_pairing(c.partition, p, q)
            col.case(
                c.passes_gs_filter == (orc <= threshold),
                f"({p},{q},{k}) {c.partition}",
            )


def _gs_singleton(col, max_n, max_k):
    for p, q, k in instances(max_n, max_k, min_k=1):
        got = gs_intersection_sym(p, q, k)
        col.case(got == [rectangle(2 * k, q)], f"({p},{q},{k}): {got}")


def _parity(col, max_n, max_k):
    for p, q, k in instances(max_n, max_k, min_k=1):
        n = p + q
        rect = rectangle(k, q)
        # parity from the oracle: S^2 character is (s(x)^2 + s(x^2)) / 2
        s = schur_poly(rect, n)
        osym = to_schur_basis(s * s + square_vars(s))
        comps = {c.partition: c for c in classify_components(p, q, k)}
        oracle_ok = all(
            (comps[lam].parity == SYMMETRIC) == (osym[lam] == 2) for lam in comps
        )
        skew = skew_component(p, q, k)
        d = dim_rect(n, k, q)
        sym_dim = sum(c.dimension for c in comps.values() if c.parity == SYMMETRIC)
        alt_dim = sum(c.dimension for c in comps.values() if c.parity == ANTISYMMETRIC)
        col.case(
            oracle_ok
            and comps[rectangle(2 * k, q)].parity == SYMMETRIC
            and skew is not None
            and skew.parity == ANTISYMMETRIC
            and sym_dim == d * (d + 1) // 2
            and alt_dim == d * (d - 1) // 2,
            f"({p},{q},{k})",
        )


def _dims(col, max_n, max_k):
    for p, q, k in instances(max_n, max_k):
        rep = moduli_report(p, q, k)
        col.case(
            rep.flags["routes_agree"] and rep.dim_Vk == rep.dim_Vk_by_components and rep.dim_Vk >= 0,
            f"({p},{q},{k}): {rep.dim_Vk} vs {rep.dim_Vk_by_components}",
        )
    for p in range(1, max(max_n, 2)):
        col.case(moduli_report(p, 1, 1).dim_Vk == 0, f"({p},1,1) not rigid")
    for k in range(0, max_k + 3):
        col.case(moduli_report(1, 1, k).dim_Vk == k * (k - 1) // 2, f"(1,1,{k})")
    if max_n >= 4 and max_k >= 1:
        col.case(moduli_report(2, 2, 1).dim_Vk == 1, "(2,2,1)")


def _equal_pq(col, max_n, max_k):
    for q in range(1, max_n // 2 + 1):
        for k in range(0, max_k + 1):
            rep = equal_pq_report(q, k)
            col.case(
                rep.top_weight_vanishes and rep.j0_contribution_is_2j0 and rep.report.flags["routes_agree"],
                f"q={q} k={k}",
            )


SUITES = {
    "partitions": [
        ("round-trip fund <-> partition", _round_trip),
        ("rectangle dimension = hook-content", _rect_dims),
        ("hook-content = SSYT count", _ssyt_dims),
    ],
    "schur": [
        ("LR product = oracle product", _product_oracle),
        ("adams2 = oracle x -> x^2", _adams_oracle),
        ("sym + alt split and dimensions", _split_dims),
    ],
    "rect": [
        ("closed form = LR = oracle, multiplicity free", _rect_three_ways),
        ("LR tableaux collapse witness", _lr_witness),
    ],
    "weights": [
        ("closed form = component formula = oracle pairing", _weights),
        ("GS flag = oracle weight <= threshold", _gs_filter),
    ],
    "gs": [
        ("GS intersection is the 2k x q rectangle", _gs_singleton),
        ("parity facts against oracle S^2 character", _parity),
    ],
    "dims": [
        ("dim V_k routes agree and spot values", _dims),
    ],
    "pq": [
        ("p = q specialization", _equal_pq),
    ],
}


def find_discrepancies(max_n: int = 4, max_k: int = 1) -> list[Discrepancy]:
    """Places where the published statements differ from what is computed.

    Always includes the instance (2, 2, 1) for the antisymmetric label and the
    weight formula, whatever the sweep bounds.
    """
    found: list[Discrepancy] = []
    sweep = sorted(set(instances(max(max_n, 4), max(max_k, 1), min_k=1)) | {(2, 2, 1)})

    for p, q, k in sweep:
        skew = skew_component(p, q, k)
        label = paper_skew_label(p, q, k)
        if skew.component.fund != label:
            # oracle: the computed component sits in the exterior square, the
            # labelled weight does not occur in the square at all
            s = schur_poly(rectangle(k, q), p + q)
            oalt = to_schur_basis(s * s - square_vars(s))
            present = {partition_to_fund(lam, p + q) for lam in oalt.support()}
            confirmed = oalt[skew.partition] == 2 and label not in present
            found.append(
                Discrepancy(
                    "skew-label",
                    f"(p,q,k)=({p},{q},{k})",
                    f"F((2k-2)w_q + w_(q+1)) = F({label})",
                    f"F({skew.component.fund}) = V({','.join(map(str, skew.partition))})",
                    confirmed,
                )
            )

    for p, q, k in sweep:
        for c in classify_components(p, q, k):
            weighted = c.center_weight.value
            dropped = center_weight_unweighted(c.component.fund, p, q).value
            if weighted != dropped:
                orc = lowest_weight_pairing(c.partition, p, q)
                found.append(
                    Discrepancy(
                        "weight-factor",
                        f"(p,q,k)=({p},{q},{k}) j={list(c.component.j)}",
                        f"without (p-j) factor: {_frac(dropped)}",
                        f"with (p-j) factor: {_frac(weighted)}; oracle pairing {_frac(orc)}",
                        orc == weighted,
                    )
                )

    for p, q, k in sweep:
        for c in classify_components(p, q, k):
            j = c.component.j
            reduced = j[0] == 0 and sum((q - i) * j[i] for i in range(1, q)) <= 1
            if reduced != c.passes_gs_filter:
                orc = lowest_weight_pairing(c.partition, p, q)
                found.append(
                    Discrepancy(
                        "gs-inequality",
                        f"(p,q,k)=({p},{q},{k}) j={list(j)}",
                        f"sum (q-i) j_i <= 1 and j_0 = 0 gives {reduced}",
                        f"weight {_frac(c.center_weight.value)} vs threshold "
                        f"{_frac(gs_threshold(p, q, k).value)} gives {c.passes_gs_filter}",
                        (orc <= gs_threshold(p, q, k).value) == c.passes_gs_filter,
                    )
                )

    for p, q, k in sweep:
        got = gs_v0v0_intersection_sym(p, q, k)
        literal = (2 * k, 2 * k)
        if [tuple(x) for x in got] != [literal]:
            found.append(
                Discrepancy(
                    "v0v0-label",
                    f"(p,q,k)=({p},{q},{k})",
                    f"V({2 * k},{2 * k},0,...,0)",
                    "V(" + "; ".join(",".join(map(str, x)) for x in got) + ")",
                    all(lowest_weight_pairing(x, p, q) <= -2 * k for x in got),
                )
            )
    return found


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def run_verify(max_n: int = 6, max_k: int = 3, suites=None) -> VerifyResult:
    if max_n < 2:
        raise ValueError(f"max_n must be >= 2 (got {max_n})")
    if max_k < 0:
        raise ValueError(f"max_k must be >= 0 (got {max_k})")
    names = list(SUITES) if not suites else list(suites)
    unknown = [s for s in names if s not in SUITES and s != "discrepancies"]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
    checks = []
    for suite in names:
        for label, fn in SUITES.get(suite, []):
            checks.append(_timed(suite, label, fn, max_n, max_k))
    discrepancies = []
    if not suites or "discrepancies" in names:
        discrepancies = find_discrepancies(max_n, max_k)
    return VerifyResult(checks, discrepancies)
