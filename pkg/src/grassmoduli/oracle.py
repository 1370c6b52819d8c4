"""Brute-force monomial oracle.

Schur polynomials are expanded into explicit monomials through semistandard
tableaux (branching one variable at a time over horizontal strips).  Nothing
here touches Littlewood-Richardson tableaux or closed forms, so agreement with
the core modules is an independent check.
"""
from __future__ import annotations

import os
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache

from .partitions import Partition

__all__ = [
    "OracleLimitError",
    "MonomialPoly",
    "schur_poly",
    "to_schur_basis",
    "square_vars",
    "lowest_weight_pairing",
    "max_cells",
]

DEFAULT_MAX_CELLS = 5_000_000


class OracleLimitError(RuntimeError):
    """Monomial expansion grew past the configured cap."""


def max_cells() -> int:
    raw = os.environ.get("GRASSMODULI_MAX_CELLS")
    return int(raw) if raw else DEFAULT_MAX_CELLS


def _check_size(n_terms: int):
    cap = max_cells()
    if n_terms > cap:
        raise OracleLimitError(
            f"monomial expansion has {n_terms} terms, above GRASSMODULI_MAX_CELLS={cap}"
        )


class MonomialPoly:
    """Polynomial in ``nvars`` variables as ``{exponent tuple: int}``."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c}
        for e in self.terms:
            if len(e) != nvars:
                raise ValueError(f"exponent {e} does not have {nvars} entries")

    @classmethod
    def one(cls, nvars: int) -> "MonomialPoly":
        return cls(nvars, {(0,) * nvars: 1})

    def __eq__(self, other):
        return (
            isinstance(other, MonomialPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __repr__(self):
        return f"MonomialPoly({self.nvars}, {len(self.terms)} terms)"

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MonomialPoly(self.nvars, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c: int) -> "MonomialPoly":
        return MonomialPoly(self.nvars, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")
        _check_size(len(self.terms) * len(other.terms))
        out = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return MonomialPoly(self.nvars, out)

    def evaluate(self, point) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for x, a in zip(point, e):
                term *= Fraction(x) ** a
            total += term
        return total

    def at_ones(self) -> int:
        return sum(self.terms.values())

    def permute(self, perm) -> "MonomialPoly":
        """Substitute ``x_i -> x_{perm[i]}``."""
        out = {}
        for e, c in self.terms.items():
            new = [0] * self.nvars
            for i, a in enumerate(e):
                new[perm[i]] = a
            out[tuple(new)] = c
        return MonomialPoly(self.nvars, out)

    def is_symmetric(self) -> bool:
        return all(
            self.terms.get(tuple(sorted(e, reverse=True)), 0) == c
            for e, c in self.terms.items()
        )


def _horizontal_strips(lam: tuple[int, ...]):
    """Partitions ``mu`` with ``lam / mu`` a horizontal strip."""
    n = len(lam)
    mu = [0] * n

    def rec(i):
        if i == n:
            yield tuple(mu)
            return
        lo = lam[i + 1] if i + 1 < n else 0
        for v in range(lo, lam[i] + 1):
            mu[i] = v
            yield from rec(i + 1)

    yield from rec(0)


@lru_cache(maxsize=None)
def _schur_terms(lam: tuple[int, ...], nvars: int):
    if not lam:
        return {(0,) * nvars: 1}
    if len(lam) > nvars:
        return {}
    if nvars == 1:
        return {(lam[0],): 1}
    out = defaultdict(int)
    size = sum(lam)
    for mu in _horizontal_strips(lam):
        # boxes of lam / mu carry the largest letter nvars
        rest = _schur_terms(Partition(mu), nvars - 1)
        strip = size - sum(mu)
        for e, c in rest.items():
            out[e + (strip,)] += c
    _check_size(len(out))
    return dict(out)


def schur_poly(lam, nvars: int) -> MonomialPoly:
    """Schur polynomial s_lam(x_1, ..., x_nvars) as an explicit monomial sum."""
    lam = Partition(lam)
    return MonomialPoly(nvars, _schur_terms(lam, nvars))


def to_schur_basis(f: MonomialPoly):
    """Expand a symmetric polynomial in the Schur basis by leading-term peeling."""
    from .schur import SchurExpansion

    if not f.is_symmetric():
        raise ValueError("polynomial is not symmetric in its variables")
    rest = dict(f.terms)
    out = {}
    while rest:
        lead = max(rest)
        if any(a < b for a, b in zip(lead, lead[1:])):
            raise ValueError(f"leading exponent {lead} is not a partition")
        c = rest[lead]
        lam = Partition(lead)
        out[lam] = c
        for e, v in _schur_terms(lam, f.nvars).items():
            nv = rest.get(e, 0) - c * v
            if nv:
                rest[e] = nv
            else:
                rest.pop(e, None)
    return SchurExpansion(out)


def square_vars(f: MonomialPoly) -> MonomialPoly:
    return MonomialPoly(f.nvars, {tuple(2 * a for a in e): c for e, c in f.terms.items()})


def lowest_weight_pairing(lam, p: int, q: int) -> Fraction:
    """Pair the lowest weight of V(lam) with diag(1/p, ..., 1/p, -1/q, ..., -1/q)."""
    rev = Partition(lam).padded(p + q)[::-1]
    return Fraction(sum(rev[:p]), p) - Fraction(sum(rev[p:]), q)
