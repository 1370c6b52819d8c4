"""Center weights, the GS filter and the dimension of the moduli space V_k.

Everything is exact: weights are ``Fraction``s, dimensions are Python ints.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .partitions import (
    FundamentalCoeffs,
    Partition,
    dim_gl,
    dim_rect,
    partition_to_fund,
    rectangle,
    su_normalize,
)
from .rect_decomp import RectSquareComponent, rect_square_closed_form
from .schur import square_coefficients

__all__ = [
    "CenterWeight",
    "center_weight_of_component",
    "center_weight_unweighted",
    "lowest_weight_closed_form",
    "gs_threshold",
    "ComponentReport",
    "classify_components",
    "gs_intersection_sym",
    "gs_v0v0_intersection_sym",
    "skew_component",
    "paper_skew_label",
    "ModuliReport",
    "moduli_report",
    "EqualPQReport",
    "equal_pq_report",
]

SYMMETRIC = "symmetric"
ANTISYMMETRIC = "antisymmetric"


@dataclass(frozen=True, order=True)
class CenterWeight:
    """Exact U(1)-weight, kept with the (p, q) whose ``pq`` is its natural denominator."""

    value: Fraction
    p: int = field(default=1, compare=False)
    q: int = field(default=1, compare=False)

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    @property
    def canonical(self) -> tuple[int, int]:
        """``(num, p*q)`` with ``value == num / (p*q)``."""
        pq = self.p * self.q
        num = self.value * pq
        assert num.denominator == 1
        return int(num), pq

    def __str__(self):
        v = self.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"

    def to_json(self) -> dict:
        return {"num": self.value.numerator, "den": self.value.denominator}


def _check_rank(fund: FundamentalCoeffs, p: int, q: int):
    if fund.n != p + q:
        raise ValueError(f"weight has rank {fund.n}, expected p + q = {p + q}")
    if not p >= q >= 1:
        raise ValueError(f"requires p ≥ q ≥ 1 (got p={p}, q={q})")


def center_weight_of_component(fund: FundamentalCoeffs, p: int, q: int) -> CenterWeight:
    """Weight of the center of S(U(p) x U(q)) on the lowest weight vector of F(fund)."""
    _check_rank(fund, p, q)
    w = -Fraction(sum(i * fund[i] for i in range(1, q + 1)), q)
    w -= Fraction(sum((p - j) * fund[q + j] for j in range(1, p)), p)
    return CenterWeight(w, p, q)


def center_weight_unweighted(fund: FundamentalCoeffs, p: int, q: int) -> CenterWeight:
    """The same sum with the ``(p - j)`` weights on ``k_{q+j}`` dropped.

    Kept only so the verification suite can show where it disagrees with the
    direct pairing.
    """
    _check_rank(fund, p, q)
    w = -Fraction(sum(i * fund[i] for i in range(1, q + 1)), q)
    w -= Fraction(sum(fund[q + j] for j in range(1, p)), p)
    return CenterWeight(w, p, q)


def lowest_weight_closed_form(j, p: int, q: int, k: int) -> CenterWeight:
    j = tuple(j)
    if len(j) != q or any(v < 0 for v in j) or sum(j) > k:
        raise ValueError(f"invalid j-vector {j} for q={q}, k={k}")
    w = Fraction(-2 * k)
    w += Fraction(p + q, p * q) * sum((q - i) * j[i] for i in range(1, q))
    w += (1 + Fraction(q, p)) * j[0]
    return CenterWeight(w, p, q)


def gs_threshold(p: int, q: int, k: int) -> CenterWeight:
    """Lowest weight -2k + 1/p + 1/q of GS(mV_0, V_0)."""
    return CenterWeight(-2 * k + Fraction(1, p) + Fraction(1, q), p, q)


@dataclass(frozen=True)
class ComponentReport:
    component: RectSquareComponent
    parity: str
    dimension: int
    center_weight: CenterWeight
    passes_gs_filter: bool

    @property
    def partition(self) -> Partition:
        return self.component.partition

    def to_json(self) -> dict:
        d = self.component.to_json()
        d.update(
            parity=self.parity,
            dimension=str(self.dimension),
            center_weight=self.center_weight.to_json(),
            gs_filter=self.passes_gs_filter,
        )
        return d


@lru_cache(maxsize=256)
def _classify(p: int, q: int, k: int) -> tuple[ComponentReport, ...]:
    n = p + q
    rect = rectangle(k, q)
    threshold = gs_threshold(p, q, k)
    out = []
    for comp in rect_square_closed_form(p, q, k):
        lam = comp.partition
        # S^2 and Lambda^2 multiplicities of this summand, computed termwise
        in_sym, in_alt = square_coefficients(rect, lam)
        if (in_sym, in_alt) not in ((1, 0), (0, 1)):
            raise ArithmeticError(f"{lam} is not a multiplicity-one summand of exactly one square")
        weight = center_weight_of_component(comp.fund, p, q)
        out.append(
            ComponentReport(
                component=comp,
                parity=SYMMETRIC if in_sym else ANTISYMMETRIC,
                dimension=dim_gl(lam, n),
                center_weight=weight,
                passes_gs_filter=weight <= threshold,
            )
        )
    return tuple(out)


def classify_components(p: int, q: int, k: int) -> list[ComponentReport]:
    return list(_classify(p, q, k))


def gs_intersection_sym(p: int, q: int, k: int) -> list[Partition]:
    """Symmetric components whose lowest weight passes the GS filter."""
    return [
        c.partition for c in _classify(p, q, k) if c.passes_gs_filter and c.parity == SYMMETRIC
    ]


def gs_v0v0_intersection_sym(p: int, q: int, k: int) -> list[Partition]:
    """Symmetric components with lowest weight at most -2k."""
    return [
        c.partition
        for c in _classify(p, q, k)
        if c.parity == SYMMETRIC and c.center_weight.value <= -2 * k
    ]


def skew_component(p: int, q: int, k: int) -> ComponentReport | None:
    """The component with ``j_{q-1} = 1`` and all other ``j`` zero (needs k >= 1)."""
    target = (0,) * (q - 1) + (1,)
    for c in _classify(p, q, k):
        if c.component.j == target:
            return c
    return None


def paper_skew_label(p: int, q: int, k: int) -> FundamentalCoeffs:
    """Fundamental coefficients of (2k - 2) w_q + w_{q+1} for SU(p + q)."""
    lam = Partition((2 * k - 1,) * q + (1,))
    return partition_to_fund(lam, p + q)


@dataclass
class ModuliReport:
    p: int
    q: int
    k: int
    dim_H0: int
    dim_sym_square: int
    dim_F2k: int
    dim_Vk: int
    N: int
    dim_image_moduli: int
    gs_sym_components: list[Partition]
    flags: dict[str, bool]
    # not part of the JSON document
    dim_Vk_by_components: int | None = None
    gs_v0v0_components: list[Partition] = field(default_factory=list)
    skew_fund: FundamentalCoeffs | None = None
    skew_label: FundamentalCoeffs | None = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "k": self.k,
            "dim_H0": str(self.dim_H0),
            "dim_sym_square": str(self.dim_sym_square),
            "dim_F2k": str(self.dim_F2k),
            "dim_Vk": str(self.dim_Vk),
            "N": str(self.N),
            "dim_image_moduli": str(self.dim_image_moduli),
            "gs_sym_components": [list(lam) for lam in self.gs_sym_components],
            "flags": {
                "routes_agree": self.flags["routes_agree"],
                "gs_singleton": self.flags["gs_singleton"],
                "skew_label_matches_paper": self.flags["skew_label_matches_paper"],
            },
        }

    def to_json(self, indent=None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, d: dict) -> "ModuliReport":
        return cls(
            p=int(d["p"]),
            q=int(d["q"]),
            k=int(d["k"]),
            dim_H0=int(d["dim_H0"]),
            dim_sym_square=int(d["dim_sym_square"]),
            dim_F2k=int(d["dim_F2k"]),
            dim_Vk=int(d["dim_Vk"]),
            N=int(d["N"]),
            dim_image_moduli=int(d["dim_image_moduli"]),
            gs_sym_components=[Partition(x) for x in d["gs_sym_components"]],
            flags=dict(d["flags"]),
        )

    @classmethod
    def from_json(cls, text: str) -> "ModuliReport":
        return cls.from_dict(json.loads(text))


def moduli_report(p: int, q: int, k: int) -> ModuliReport:
    if not p >= q >= 1:
        raise ValueError(f"requires p ≥ q ≥ 1 (got p={p}, q={q})")
    if k < 0:
        raise ValueError(f"k must be >= 0 (got {k})")
    n = p + q
    d = dim_rect(n, k, q)
    dim_f2k = dim_rect(n, 2 * k, q)
    dim_sym = d * (d + 1) // 2
    route_a = dim_sym - dim_f2k

    comps = _classify(p, q, k)
    gs = gs_intersection_sym(p, q, k)
    sym_total = sum(c.dimension for c in comps if c.parity == SYMMETRIC)
    route_b = sym_total - sum(dim_gl(lam, n) for lam in gs)

    skew = skew_component(p, q, k) if k >= 1 else None
    label = paper_skew_label(p, q, k) if k >= 1 else None
    flags = {
        "routes_agree": route_a == route_b and sym_total == dim_sym,
        "gs_singleton": gs == [rectangle(2 * k, q)],
        # vacuous for k = 0, where no such component exists
        "skew_label_matches_paper": skew is None or skew.component.fund == label,
    }
    notes = []
    if route_a - 2 < 1:
        notes.append(
            f"N = dim V_k - 2 = {route_a - 2}: N + 2 = dim V_k gives no target quadric of positive dimension here"
        )
    notes.append(
        "dim_image_moduli = dim V_k - 1 assumes a generic S^1-orbit of dimension one"
    )
    if skew is not None and not flags["skew_label_matches_paper"]:
        notes.append(
            f"antisymmetric GS component has fundamental coefficients ({skew.component.fund}), "
            f"label (2k-2)w_q + w_(q+1) gives ({label})"
        )
    v0v0 = gs_v0v0_intersection_sym(p, q, k)
    literal = Partition((2 * k, 2 * k))
    if k >= 1 and v0v0 != [literal]:
        notes.append(
            f"GS(V0,V0) symmetric part computed as {[list(x) for x in v0v0]}, "
            f"not V({2 * k},{2 * k},0,...,0)"
        )
    return ModuliReport(
        p=p,
        q=q,
        k=k,
        dim_H0=d,
        dim_sym_square=dim_sym,
        dim_F2k=dim_f2k,
        dim_Vk=route_a,
        N=route_a - 2,
        dim_image_moduli=route_a - 1,
        gs_sym_components=gs,
        flags=flags,
        dim_Vk_by_components=route_b,
        gs_v0v0_components=v0v0,
        skew_fund=skew.component.fund if skew is not None else None,
        skew_label=label,
        notes=notes,
    )


@dataclass
class EqualPQReport:
    report: ModuliReport
    top_weight_vanishes: bool
    j0_contribution_is_2j0: bool
    notes: list[str]


def equal_pq_report(q: int, k: int) -> EqualPQReport:
    """Moduli report for Gr_q(C^{2q}) plus the checks specific to p = q."""
    report = moduli_report(q, q, k)
    n = 2 * q
    vanishes = True
    contribution = True
    for c in _classify(q, q, k):
        j = c.component.j
        if j[0] == 0:
            continue
        lam = c.partition
        # last GL row is j_0 before normalization, 0 after
        if len(lam) != n or lam[n - 1] != j[0] or len(su_normalize(lam, n)) == n:
            vanishes = False
        rest = Fraction(-2 * k) + Fraction(2, q) * sum((q - i) * j[i] for i in range(1, q))
        if c.center_weight.value - rest != 2 * j[0]:
            contribution = False
    notes = list(report.notes)
    if q % 2 == 0 and k == 1:
        notes.append(
            f"q = {q} even, k = 1: real structure on the q-th exterior power of C^{n} "
            f"gives a one-parameter family of embeddings (dim V_1 = {report.dim_Vk}, expected >= 1)"
        )
    return EqualPQReport(report, vanishes, contribution, notes)
