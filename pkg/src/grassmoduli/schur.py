"""Arithmetic in the Schur basis of the GL(n) representation ring."""
from __future__ import annotations

import json
from collections import Counter
from functools import lru_cache

from .partitions import Partition, parse_partition
from .rect_decomp import lr_coefficient, lr_product

__all__ = [
    "SchurExpansion",
    "multiply",
    "adams2",
    "sym_square",
    "alt_square",
    "two_quotient",
    "adams2_coefficient",
    "square_coefficients",
    "partitions_of",
]

MINUS = "−"


class SchurExpansion:
    """Finite integer combination of Schur functions, ``{Partition: int}``.

    Zero coefficients are never stored; iteration runs over partitions in
    decreasing lexicographic order.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        acc: dict[Partition, int] = {}
        for lam, c in items:
            lam = Partition(lam)
            acc[lam] = acc.get(lam, 0) + int(c)
        self._terms = {lam: acc[lam] for lam in sorted(acc, reverse=True) if acc[lam]}

    @classmethod
    def basis(cls, lam) -> "SchurExpansion":
        return cls({Partition(lam): 1})

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __getitem__(self, lam) -> int:
        return self._terms.get(Partition(lam), 0)

    def __contains__(self, lam):
        return Partition(lam) in self._terms

    def __eq__(self, other):
        if isinstance(other, SchurExpansion):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __add__(self, other):
        out = Counter(self._terms)
        out.update(other._terms)
        return SchurExpansion(dict(out))

    def __neg__(self):
        return SchurExpansion({lam: -c for lam, c in self})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar: int):
        return SchurExpansion({lam: scalar * c for lam, c in self})

    __rmul__ = __mul__

    def support(self) -> list[Partition]:
        return list(self._terms)

    def truncate(self, max_rows: int) -> "SchurExpansion":
        return SchurExpansion({lam: c for lam, c in self if len(lam) <= max_rows})

    def halve(self) -> "SchurExpansion":
        """Divide every coefficient by 2, insisting on exact divisibility."""
        out = {}
        for lam, c in self:
            if c % 2:
                raise ArithmeticError(f"odd coefficient {c} on {lam}")
            out[lam] = c // 2
        return SchurExpansion(out)

    def dimension(self, n: int) -> int:
        from .partitions import dim_gl

        return sum(c * dim_gl(lam, n) for lam, c in self)

    def to_text(self) -> str:
        parts = []
        for lam, c in self:
            sign = MINUS if c < 0 else ""
            parts.append(f"{sign}{abs(c)}·[{','.join(map(str, lam))}]")
        return " ".join(parts)

    @classmethod
    def from_text(cls, text: str) -> "SchurExpansion":
        terms = {}
        for tok in text.split():
            coeff, _, lam = tok.partition("·")
            coeff = coeff.replace(MINUS, "-")
            terms[parse_partition(lam)] = int(coeff)
        return cls(terms)

    def to_records(self) -> list[dict]:
        return [{"partition": list(lam), "coeff": str(c)} for lam, c in self]

    def to_json(self) -> str:
        return json.dumps(self.to_records())

    @classmethod
    def from_records(cls, records) -> "SchurExpansion":
        return cls({Partition(r["partition"]): int(r["coeff"]) for r in records})

    def __repr__(self):
        return f"SchurExpansion({self.to_text() or '0'})"


def multiply(a: SchurExpansion, b: SchurExpansion, max_rows: int) -> SchurExpansion:
    """Product in the representation ring of GL(max_rows)."""
    if max_rows < 1:
        raise ValueError("max_rows must be >= 1")
    out = Counter()
    for lam, c1 in a:
        for mu, c2 in b:
            for nu, m in _lr_product_cached(lam, mu, max_rows).items():
                out[nu] += c1 * c2 * m
    return SchurExpansion(dict(out)).truncate(max_rows)


@lru_cache(maxsize=4096)
def _lr_product_cached(lam, mu, max_rows):
    # LR coefficients are symmetric; put the smaller content second
    if mu.size > lam.size:
        lam, mu = mu, lam
    return lr_product(lam, mu, max_rows)


@lru_cache(maxsize=None)
def partitions_of(n: int, max_rows: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """Partitions of ``n`` with at most ``max_rows`` rows, decreasing lex order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return (Partition(),)
    if max_rows == 0:
        return ()
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, max_rows - 1, first):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


def two_quotient(mu) -> tuple[int, Partition, Partition] | None:
    """Domino sign and 2-quotient of ``mu`` when its 2-core is empty, else ``None``.

    Works on an abacus of ``N`` beta-numbers ``beta_i = mu_i + N - i`` with
    ``N`` even.  Removing a domino moves a bead from ``b`` to ``b - 2`` and
    contributes ``-1`` when the bead at ``b - 1`` is occupied (vertical domino).
    """
    mu = Partition(mu)
    N = len(mu) + (len(mu) % 2)
    beads = {(mu[i] if i < len(mu) else 0) + N - 1 - i for i in range(N)}
    runners = (sorted(b for b in beads if b % 2 == 0), sorted(b for b in beads if b % 2 == 1))
    if len(runners[0]) != N // 2:
        return None
    sign = 1
    moved = True
    while moved:
        moved = False
        for b in sorted(beads):
            if b >= 2 and b - 2 not in beads:
                if b - 1 in beads:
                    sign = -sign
                beads.remove(b)
                beads.add(b - 2)
                moved = True
                break
    quot = []
    for r in (0, 1):
        pos = [b // 2 for b in reversed(runners[r])]
        m = len(pos)
        quot.append(Partition(pos[t] - (m - 1 - t) for t in range(m)))
    return sign, quot[0], quot[1]


def adams2(lam, max_rows: int) -> SchurExpansion:
    """Schur expansion of s_lam(x_1^2, ..., x_n^2) truncated to ``max_rows`` rows.

    Coefficient of s_mu is the 2-sign of mu times c^lam_{mu0, mu1}, where
    (mu0, mu1) is the 2-quotient; partitions with non-empty 2-core vanish.
    """
    lam = Partition(lam)
    if max_rows < 1:
        raise ValueError("max_rows must be >= 1")
    return SchurExpansion({mu: adams2_coefficient(lam, mu) for mu in partitions_of(2 * lam.size, max_rows)})


def adams2_coefficient(lam, mu) -> int:
    """Coefficient of s_mu in s_lam(x^2), without expanding the whole series."""
    lam, mu = Partition(lam), Partition(mu)
    if mu.size != 2 * lam.size:
        return 0
    tq = two_quotient(mu)
    if tq is None:
        return 0
    sign, q0, q1 = tq
    return sign * lr_coefficient(q0, q1, lam)


def square_coefficients(lam, mu) -> tuple[int, int]:
    """Multiplicities of V(mu) in the symmetric and exterior squares of V(lam)."""
    full = lr_coefficient(lam, lam, mu)
    psi = adams2_coefficient(lam, mu)
    if (full + psi) % 2 or abs(psi) > full:
        raise ArithmeticError(f"inconsistent square coefficients {full}, {psi} at {mu}")
    return (full + psi) // 2, (full - psi) // 2


def _square_split(lam, max_rows):
    lam = Partition(lam)
    full = multiply(SchurExpansion.basis(lam), SchurExpansion.basis(lam), max_rows)
    return full, adams2(lam, max_rows)


def _check_nonneg(e: SchurExpansion, what: str):
    for mu, c in e:
        if c < 0:
            raise ArithmeticError(f"negative coefficient {c} on {mu} in {what}")
    return e


def sym_square(lam, max_rows: int) -> SchurExpansion:
    """Character of S^2 V(lam) for GL(max_rows)."""
    full, psi = _square_split(lam, max_rows)
    return _check_nonneg((full + psi).halve(), "symmetric square")


def alt_square(lam, max_rows: int) -> SchurExpansion:
    """Character of the exterior square of V(lam) for GL(max_rows)."""
    full, psi = _square_split(lam, max_rows)
    return _check_nonneg((full - psi).halve(), "exterior square")
