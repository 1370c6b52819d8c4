"""Partitions, SU(n) dominant weights and GL(n) dimension formulas.

Partitions are stored GL-style (absolute row lengths).  SU(n) normalization,
which shifts every row by ``-lambda_n``, only happens when converting to
fundamental-weight coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import prod

__all__ = [
    "Partition",
    "FundamentalCoeffs",
    "rectangle",
    "fund_to_partition",
    "partition_to_fund",
    "su_normalize",
    "dim_gl",
    "dim_rect",
    "parse_partition",
    "format_partition",
    "hook_length",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (trailing zeros trimmed).

    Behaves like a plain tuple, so it hashes and compares lexicographically;
    ``Partition((2, 1, 0))`` and ``Partition((2, 1))`` are the same value.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(x) for x in parts)
        if any(x < 0 for x in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise ValueError(f"{self} has more than {n} rows")
        return tuple(self) + (0,) * (n - len(self))

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for x in self if x > j) for j in range(self[0]))

    def cells(self):
        for i, row in enumerate(self):
            for j in range(row):
                yield i, j

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(a >= b for a, b in zip(self, other))

    def __repr__(self):
        return f"Partition({tuple(self)})"

    def __str__(self):
        return format_partition(self)


@dataclass(frozen=True)
class FundamentalCoeffs:
    """Coefficients ``(k_1, ..., k_{n-1})`` of ``sum k_i w_i`` for SU(n)."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if self.n < 1:
            raise ValueError("rank n must be >= 1")
        if len(self.coeffs) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} coefficients, got {len(self.coeffs)}")
        if any(c < 0 for c in self.coeffs):
            raise ValueError(f"negative coefficient in {self.coeffs}")

    def __getitem__(self, i: int) -> int:
        """1-based access ``k_i``; out-of-range indices read as 0."""
        if 1 <= i <= self.n - 1:
            return self.coeffs[i - 1]
        return 0

    def __str__(self):
        return ",".join(map(str, self.coeffs))


def rectangle(columns: int, rows: int) -> Partition:
    """The partition ``(columns, ..., columns)`` with ``rows`` rows."""
    return Partition((columns,) * rows)


def fund_to_partition(c: FundamentalCoeffs) -> Partition:
    # partial sums from the right: lambda_i = k_i + ... + k_{n-1}
    parts = []
    acc = 0
    for k in reversed(c.coeffs):
        acc += k
        parts.append(acc)
    return Partition(reversed(parts))


def su_normalize(lam, n: int) -> Partition:
    """Shift a GL(n) weight so that its n-th entry is zero."""
    padded = Partition(lam).padded(n)
    last = padded[-1] if n else 0
    return Partition(x - last for x in padded)


def partition_to_fund(lam, n: int) -> FundamentalCoeffs:
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"partition {lam} has more than {n} parts")
    padded = su_normalize(lam, n).padded(n)
    return FundamentalCoeffs(n, tuple(padded[i] - padded[i + 1] for i in range(n - 1)))


def hook_length(lam: Partition, i: int, j: int) -> int:
    conj = lam.conjugate()
    return (lam[i] - j) + (conj[j] - i) - 1


def dim_gl(lam, n: int) -> int:
    """Dimension of the GL(n) irreducible with highest weight ``lam``.

    Hook-content formula; returns 0 when ``lam`` has more than ``n`` rows
    (the content factor ``n + j - i`` vanishes on row ``n + 1``).
    """
    lam = Partition(lam)
    if len(lam) > n:
        return 0
    conj = lam.conjugate()
    num = 1
    den = 1
    for i, row in enumerate(lam):
        for j in range(row):
            num *= n + j - i
            den *= (row - j) + (conj[j] - i) - 1
    q, r = divmod(num, den)
    assert r == 0, "hook-content quotient is not an integer"
    return q


def dim_rect(a: int, b: int, c: int) -> int:
    """Dimension of F_a(b w_c), the c-row, b-column rectangle for SU(a)."""
    if not (a >= c >= 1) or b < 0:
        raise ValueError(f"need a >= c >= 1 and b >= 0, got a={a}, b={b}, c={c}")
    num = prod(a - i + j for i in range(1, c + 1) for j in range(1, b + 1))
    den = prod(1 + (c - i) + (b - j) for i in range(1, c + 1) for j in range(1, b + 1))
    q, r = divmod(num, den)
    assert r == 0, "rectangle dimension is not an integer"
    return q


def parse_partition(text: str) -> Partition:
    """Parse ``"2,1,1"``; ``""`` and ``"0"`` give the empty partition."""
    text = text.strip().strip("[]()")
    if not text:
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValueError(f"malformed partition string {text!r}") from None
    return Partition(parts)


def format_partition(lam) -> str:
    lam = Partition(lam)
    return ",".join(map(str, lam)) if lam else "0"
