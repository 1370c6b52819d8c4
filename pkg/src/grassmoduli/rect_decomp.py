"""Littlewood-Richardson tableaux and the square of a rectangular weight.

Tableaux are tracked by their row/letter counts: ``x[j][a]`` is the number of
boxes carrying letter ``a + 1`` in row ``j + 1`` of the skew shape.  A row of
an LR tableau is weakly increasing, so these counts determine the filling.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from math import comb

from .partitions import FundamentalCoeffs, Partition, partition_to_fund, rectangle

__all__ = [
    "LRTableau",
    "lr_tableaux",
    "lr_coefficient",
    "lr_product",
    "RectSquareComponent",
    "rect_square_component",
    "rect_square_closed_form",
    "LRWitnessReport",
    "verify_lr_rules_witness",
]


@dataclass(frozen=True)
class LRTableau:
    inner: Partition
    content: Partition
    x: tuple[tuple[int, ...], ...]

    @property
    def outer(self) -> Partition:
        rows = [
            (self.inner[j] if j < len(self.inner) else 0) + sum(self.x[j])
            for j in range(len(self.x))
        ]
        return Partition(rows)

    def count(self, letter: int, row: int) -> int:
        """Number of boxes with ``letter`` in ``row`` (both 1-based)."""
        if not (1 <= row <= len(self.x)):
            return 0
        counts = self.x[row - 1]
        return counts[letter - 1] if 1 <= letter <= len(counts) else 0

    def rows(self) -> list[list[int]]:
        """Skew rows as explicit letter lists (inner cells omitted)."""
        return [[a + 1 for a, c in enumerate(counts) for _ in range(c)] for counts in self.x]

    def reading_word(self) -> list[int]:
        """Right-to-left, top-to-bottom reading word."""
        return [a for row in self.rows() for a in reversed(row)]


def _row_choices(j, lam_j, prev_len, prev_counts, totals, content, target):
    """All letter-count vectors for row ``j`` compatible with the rows above."""
    letters = min(j + 1, len(content))
    out = []
    counts = [0] * letters

    def rec(a, used):
        if a == letters:
            if target is None or used == target:
                out.append(tuple(counts))
            return
        hi = content[a] - totals[a]
        if a >= 1:
            # lattice word: this row's a+1's are read before its a's
            hi = min(hi, totals[a - 1] - totals[a])
        if j >= 1:
            # column strictness against the row above
            above = prev_len - sum(prev_counts) + sum(prev_counts[:a])
            hi = min(hi, above - lam_j - used)
        if target is not None:
            hi = min(hi, target - used)
        for c in range(hi, -1, -1):
            counts[a] = c
            rec(a + 1, used + c)
        counts[a] = 0

    rec(0, 0)
    return out


def lr_tableaux(lam, mu, max_rows=None, outer=None):
    """Yield every LR tableau of skew shape ``nu / lam`` and content ``mu``.

    ``nu`` ranges over all shapes with at most ``max_rows`` rows, or is fixed
    to ``outer`` when given.
    """
    lam, mu = Partition(lam), Partition(mu)
    if outer is not None:
        outer = Partition(outer)
        if not outer.contains(lam) or outer.size != lam.size + mu.size:
            return
        nrows = len(outer)
    else:
        nrows = len(lam) + len(mu)
    if max_rows is not None:
        if outer is not None and len(outer) > max_rows:
            return
        nrows = min(nrows, max_rows)
    if len(lam) > nrows:
        return
    content = tuple(mu)
    lam_rows = lam.padded(nrows) if nrows else ()
    totals = [0] * len(content)
    rows: list[tuple[int, ...]] = []

    def rec(j, prev_len, prev_counts):
        if j == nrows:
            if all(t == c for t, c in zip(totals, content)):
                yield LRTableau(lam, mu, tuple(rows))
            return
        target = None if outer is None else outer[j] - lam_rows[j]
        for counts in _row_choices(j, lam_rows[j], prev_len, prev_counts, totals, content, target):
            row_len = lam_rows[j] + sum(counts)
            if j >= 1 and row_len > prev_len:
                continue
            for a, c in enumerate(counts):
                totals[a] += c
            rows.append(counts)
            yield from rec(j + 1, row_len, counts)
            rows.pop()
            for a, c in enumerate(counts):
                totals[a] -= c

    yield from rec(0, 0, ())


def lr_coefficient(lam, mu, nu) -> int:
    """Littlewood-Richardson coefficient c^nu_{lam, mu}."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size + mu.size != nu.size:
        return 0
    return sum(1 for _ in lr_tableaux(lam, mu, outer=nu))


def lr_product(lam, mu, max_rows: int) -> Counter:
    """Support and multiplicities of s_lam * s_mu in GL(max_rows)."""
    return Counter(t.outer for t in lr_tableaux(lam, mu, max_rows=max_rows))


@dataclass(frozen=True)
class RectSquareComponent:
    p: int
    q: int
    k: int
    i: tuple[int, ...]
    j: tuple[int, ...]
    partition: Partition
    fund: FundamentalCoeffs

    def to_json(self) -> dict:
        return {
            "i": list(self.i),
            "j": list(self.j),
            "partition": list(self.partition),
            "fund": list(self.fund.coeffs),
        }


def rect_square_component(p: int, q: int, k: int, i) -> RectSquareComponent:
    """The component of F(k w_q) (x) F(k w_q) labelled by ``(i_1, ..., i_q)``."""
    i = tuple(int(v) for v in i)
    if len(i) != q or any(v < 0 for v in i) or sum(i) > k:
        raise ValueError(f"invalid parameter vector {i} for q={q}, k={k}")
    tails = [sum(i[t:]) for t in range(q)]  # tails[t] = i_{t+1} + ... + i_q
    top = [2 * k - tails[q - t] for t in range(1, q + 1)]
    lam = Partition(top + tails)
    j = tuple(i[q - a - 1] for a in range(q))  # j_a = i_{q-a}
    return RectSquareComponent(p, q, k, i, j, lam, partition_to_fund(lam, p + q))


def _check_pqk(p, q, k):
    if q < 1 or k < 0:
        raise ValueError(f"need q >= 1 and k >= 0, got q={q}, k={k}")
    if q > p:
        raise ValueError(f"requires p ≥ q (got p={p}, q={q})")


def rect_square_closed_form(p: int, q: int, k: int) -> list[RectSquareComponent]:
    """Irreducible summands of F(k w_q) (x) F(k w_q) for SU(p + q).

    Each vector ``(i_1, ..., i_q)`` with ``sum <= k`` contributes one summand of
    multiplicity one.  Results are sorted by decreasing partition.
    """
    _check_pqk(p, q, k)
    comps = [
        rect_square_component(p, q, k, i)
        for i in product(range(k + 1), repeat=q)
        if sum(i) <= k
    ]
    assert len(comps) == comb(k + q, q)
    comps.sort(key=lambda c: c.partition, reverse=True)
    return comps


@dataclass
class LRWitnessReport:
    p: int
    q: int
    k: int
    fillings: int = 0
    i_vectors: list[tuple[int, ...]] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_lr_rules_witness(p: int, q: int, k: int) -> LRWitnessReport:
    """Enumerate LR tableaux of the rectangle square and test the collapse.

    Every filling must be determined by the counts ``i_r`` of letter ``q`` in
    row ``q + r``: letter ``a`` sits in row ``q + b`` (``b <= a``) exactly
    ``i_{q+b-a}`` times, the diagonal counts are ``k - (i_{q+1-a} + ... + i_q)``
    and no other placement occurs.
    """
    _check_pqk(p, q, k)
    rect = rectangle(k, q)
    report = LRWitnessReport(p, q, k)
    seen = set()
    for t in lr_tableaux(rect, rect, max_rows=p + q):
        report.fillings += 1
        i = tuple(t.count(q, q + r) for r in range(1, q + 1))
        expected = {}
        for a in range(1, q + 1):
            expected[(a, a)] = k - sum(i[r - 1] for r in range(q + 1 - a, q + 1))
            for b in range(1, a + 1):
                expected[(a, q + b)] = i[q + b - a - 1]
        for a in range(1, q + 1):
            for row in range(1, len(t.x) + 1):
                got = t.count(a, row)
                want = expected.get((a, row), 0)
                if got != want:
                    report.violations.append(
                        f"i={i}: letter {a} in row {row} occurs {got} times, collapse predicts {want}"
                    )
        comp = rect_square_component(p, q, k, i) if sum(i) <= k else None
        if comp is None or comp.partition != t.outer:
            report.violations.append(f"i={i}: tableau shape {t.outer} does not match closed form")
        if i in seen:
            report.violations.append(f"i={i}: parameter vector realized twice")
        seen.add(i)
        report.i_vectors.append(i)
    missing = {
        i for i in product(range(k + 1), repeat=q) if sum(i) <= k
    } - seen
    for i in sorted(missing):
        report.violations.append(f"i={i}: no LR tableau realizes this parameter vector")
    report.i_vectors.sort()
    return report
