"""Partitions, the Young graph and King polynomials.

Rows and columns are 1-based, so ``lam.row(1)`` is the first part and
``lam.col(1)`` is the length of the first column.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction so equality is structural.
    """

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("-", "", "()", "∅"):
            return cls()
        return cls(int(t) for t in text.strip("()").split(",") if t.strip())

    def __str__(self):
        return ",".join(map(str, self)) if self else "-"

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    @property
    def size(self) -> int:
        return sum(self)

    def row(self, i: int) -> int:
        """Length of row ``i`` (0 beyond the last row)."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def col(self, j: int) -> int:
        """Length of column ``j``."""
        return sum(1 for p in self if p >= j)

    def transpose(self) -> "Partition":
        return transpose(self)

    def boxes(self):
        for i, p in enumerate(self, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    def __contains__(self, box):
        if isinstance(box, tuple) and len(box) == 2:
            i, j = box
            return i >= 1 and j >= 1 and self.row(i) >= j
        return tuple.__contains__(self, box)

    def add_box(self, i: int) -> "Partition":
        """Add a box at the end of row ``i``; raises if the result is not a partition."""
        parts = list(self) + [0]
        if i > len(self) + 1:
            raise ValueError(f"cannot add a box in row {i} of {self}")
        parts[i - 1] += 1
        return Partition(parts)

    def remove_box(self, i: int) -> "Partition":
        parts = list(self)
        if not 1 <= i <= len(parts):
            raise ValueError(f"cannot remove a box from row {i} of {self}")
        parts[i - 1] -= 1
        return Partition(parts)


EMPTY = Partition()


@lru_cache(maxsize=None)
def transpose(lam: Partition) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def addable_rows(lam: Partition) -> list[int]:
    return [i for i in range(1, len(lam) + 2) if i == 1 or lam.row(i - 1) > lam.row(i)]


def removable_rows(lam: Partition) -> list[int]:
    return [i for i in range(1, len(lam) + 1) if lam.row(i) > lam.row(i + 1)]


@lru_cache(maxsize=None)
def box_neighbors(lam: Partition) -> tuple[frozenset, frozenset]:
    """Return ``(addable, removable)``: partitions one box above and below ``lam``."""
    lam = Partition(lam)
    up = frozenset(lam.add_box(i) for i in addable_rows(lam))
    down = frozenset(lam.remove_box(i) for i in removable_rows(lam))
    return up, down


def neighbors(lam: Partition) -> frozenset:
    up, down = box_neighbors(lam)
    return up | down


def partitions_of(n: int):
    """All partitions of ``n`` in reverse lexicographic order."""

    def rec(n, largest):
        if n == 0:
            yield ()
            return
        for first in range(min(n, largest), 0, -1):
            for rest in rec(n - first, first):
                yield (first,) + rest

    for p in rec(n, n):
        yield Partition(p)


def partitions_up_to(n: int):
    for k in range(n + 1):
        yield from partitions_of(k)


def labels(n: int) -> list[Partition]:
    """The index set Lambda_n: partitions of n, n-2, n-4, ..."""
    out = []
    for k in range(n, -1, -2):
        out.extend(partitions_of(k))
    return out


def in_labels(lam: Partition, n: int) -> bool:
    return lam.size <= n and (n - lam.size) % 2 == 0


def hook_length(lam: Partition, i: int, j: int) -> int:
    lam = Partition(lam)
    if (i, j) not in lam:
        raise ValueError(f"box {(i, j)} not in {lam}")
    return lam.row(i) - j + lam.col(j) - i + 1


def d_value(lam: Partition, i: int, j: int) -> int:
    """The integer d(i, j) attached to a box of ``lam``.

    Above or on the diagonal it uses row lengths, strictly below it uses
    column lengths.
    """
    lam = Partition(lam)
    if (i, j) not in lam:
        raise ValueError(f"box {(i, j)} not in {lam}")
    if i <= j:
        return lam.row(i) + lam.row(j) - i - j + 1
    return -lam.col(i) - lam.col(j) + i + j - 1


@dataclass(frozen=True)
class KingPolynomial:
    """``prod(u - r for r in roots) / denominator``, kept in factored form."""

    roots: tuple[int, ...]
    denominator: int

    @property
    def degree(self) -> int:
        return len(self.roots)

    def __call__(self, u):
        if isinstance(u, int):
            u = Fraction(u)
        value = u * 0 + 1
        for r in self.roots:
            value *= u - r
        return value / self.denominator

    def multiplicity(self, root: int) -> int:
        return self.roots.count(root)

    def __str__(self):
        if not self.roots:
            return "1"
        factors = []
        for r in self.roots:
            factors.append("u" if r == 0 else f"(u{-r:+d})")
        body = "".join(factors)
        return body if self.denominator == 1 else f"{body}/{self.denominator}"


@lru_cache(maxsize=None)
def king_polynomial(lam: Partition) -> KingPolynomial:
    lam = Partition(lam)
    roots = tuple(sorted(1 - d_value(lam, i, j) for i, j in lam.boxes()))
    den = prod((hook_length(lam, i, j) for i, j in lam.boxes()), start=1)
    return KingPolynomial(roots, den)


def king_root_multiplicity(lam: Partition, delta: int) -> int:
    """Multiplicity of ``delta`` as a root of the King polynomial of ``lam``."""
    return sum(1 for i, j in Partition(lam).boxes() if d_value(lam, i, j) == 1 - delta)
