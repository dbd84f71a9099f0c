"""Embedding of the Young graph into R^N, singularity degrees and walks.

A point ``e_delta(lam) = lam^T + rho_delta`` is stored through its doubled
entries ``2 x_i`` so that half-integral coordinates (odd delta) stay integral.
Only finitely many entries differ from the arithmetic tail
``2 x_i = -delta - 2 (i - 1)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .partitions import EMPTY, Partition, addable_rows, box_neighbors, removable_rows, transpose


@dataclass(frozen=True)
class EmbeddedPoint:
    doubled: tuple[int, ...]
    delta: int

    def entry2(self, i: int) -> int:
        """Doubled coordinate ``2 x_i`` (1-based, any ``i >= 1``)."""
        if i <= len(self.doubled):
            return self.doubled[i - 1]
        return -self.delta - 2 * (i - 1)

    def __getitem__(self, i: int) -> Fraction:
        return Fraction(self.entry2(i), 2)

    @property
    def tail_start(self) -> int:
        return len(self.doubled) + 1

    def contains2(self, w: int) -> bool:
        if w in self.doubled:
            return True
        top = self.entry2(self.tail_start)
        return w <= top and (top - w) % 2 == 0

    def positive2(self) -> list[int]:
        """All doubled entries that are > 0; finitely many since the tail decreases."""
        out = [w for w in self.doubled if w > 0]
        w = self.entry2(self.tail_start)
        while w > 0:
            out.append(w)
            w -= 2
        return out

    def prefix(self, length: int) -> list[Fraction]:
        return [self[i] for i in range(1, length + 1)]

    def inner(self, coeffs: dict[int, int]) -> Fraction:
        """``<x, sum c_i eps_i>`` for a finitary vector given as ``{i: c_i}``."""
        return sum((c * self[i] for i, c in coeffs.items()), Fraction(0))

    def __sub__(self, other: "EmbeddedPoint") -> dict[int, Fraction]:
        n = max(len(self.doubled), len(other.doubled)) + 1
        diff = {}
        for i in range(1, n + 1):
            d = self.entry2(i) - other.entry2(i)
            if d:
                diff[i] = Fraction(d, 2)
        return diff


@lru_cache(maxsize=None)
def embed(lam: Partition, delta: int) -> EmbeddedPoint:
    lt = transpose(Partition(lam))
    doubled = tuple(2 * lt.row(i) - delta - 2 * (i - 1) for i in range(1, len(lt) + 1))
    return EmbeddedPoint(doubled, delta)


def rho(delta: int) -> EmbeddedPoint:
    return embed(EMPTY, delta)


def degree_of_singularity(x: EmbeddedPoint) -> int:
    """Number of pairs ``i < j`` with ``x_i = -x_j``.

    Strict decrease rules out ``x_i = x_j``; a pair needs one positive entry,
    and there are finitely many of those.
    """
    return sum(1 for w in x.positive2() if x.contains2(-w))


@lru_cache(maxsize=None)
def degree(lam: Partition, delta: int) -> int:
    """The delta-degree of singularity of ``lam``."""
    return degree_of_singularity(embed(lam, delta))


def rho_degree(delta: int) -> int:
    return degree(EMPTY, delta)


def is_delta_regular(lam: Partition, delta: int) -> bool:
    return degree(lam, delta) == rho_degree(delta)


def in_A_delta(lam: Partition, delta: int) -> bool:
    """Closed-form membership of the delta-restricted set A_delta."""
    lam = Partition(lam)
    if delta >= 0:
        lt = transpose(lam)
        return lt.row(1) + lt.row(2) <= delta
    if delta % 2 == 0:
        return lam.row(1) <= -delta // 2
    m = (1 - delta) // 2
    return lam.row(1) + lam.row(2) <= 2 * m + 1


def restricted_neighbors(lam: Partition, delta: int) -> frozenset:
    if not in_A_delta(lam, delta):
        raise ValueError(f"{lam} is not in A_{delta}")
    up, down = box_neighbors(Partition(lam))
    return frozenset(mu for mu in up | down if in_A_delta(mu, delta))


def move_key(a: Partition, b: Partition) -> tuple[int, int]:
    """Sort key of the step ``a -> b``: additions before removals, then by row."""
    for i in range(1, max(len(a), len(b)) + 1):
        if a.row(i) != b.row(i):
            return (0, i) if b.row(i) > a.row(i) else (1, i)
    raise ValueError(f"{a} and {b} are equal")


def step_row(a: Partition, b: Partition) -> tuple[int, int]:
    """Return ``(sign, row)`` for the one-box step ``a -> b`` (+1 adds, -1 removes)."""
    kind, row = move_key(a, b)
    return (1 if kind == 0 else -1), row


def _ordered_neighbors(lam: Partition, delta: int | None):
    out = [lam.add_box(i) for i in addable_rows(lam)] + [lam.remove_box(i) for i in removable_rows(lam)]
    if delta is not None:
        out = [mu for mu in out if in_A_delta(mu, delta)]
    return out


class Walk(tuple):
    """A sequence of partitions starting at the empty partition, one box per step."""

    def __new__(cls, steps):
        steps = tuple(Partition(s) for s in steps)
        if not steps or steps[0] != EMPTY:
            raise ValueError("a walk starts at the empty partition")
        for a, b in zip(steps, steps[1:]):
            if abs(a.size - b.size) != 1 or b not in (box_neighbors(a)[0] | box_neighbors(a)[1]):
                raise ValueError(f"{a} -> {b} is not a one-box step")
        return super().__new__(cls, steps)

    @property
    def length(self) -> int:
        return len(self) - 1

    @property
    def end(self) -> Partition:
        return self[-1]

    def replace(self, m: int, mu: Partition) -> "Walk":
        return Walk(self[:m] + (mu,) + self[m + 1:])

    def to_json(self) -> str:
        return json.dumps([str(p) for p in self])

    @classmethod
    def from_json(cls, text: str) -> "Walk":
        return cls(Partition.parse(s) for s in json.loads(text))

    def __str__(self):
        return " -> ".join(str(p) for p in self)


def _check_walk_args(lam, n, delta, restricted):
    lam = Partition(lam)
    if n < lam.size or (n - lam.size) % 2:
        raise ValueError(f"no walks of length {n} end at {lam}: need n >= |lam| and matching parity")
    if restricted:
        if delta is None:
            raise ValueError("restricted walks need delta")
        if not in_A_delta(lam, delta):
            raise ValueError(f"{lam} is not in A_{delta}")
    return lam


@lru_cache(maxsize=None)
def _count_to(target: Partition, start: Partition, steps: int, delta: int | None) -> int:
    """Number of walks of ``steps`` steps from ``start`` to ``target``."""
    if abs(start.size - target.size) > steps:
        return 0
    if steps == 0:
        return int(start == target)
    return sum(_count_to(target, mu, steps - 1, delta) for mu in _ordered_neighbors(start, delta))


def count_walks(lam: Partition, n: int, delta: int | None = None, restricted: bool = False) -> int:
    lam = _check_walk_args(lam, n, delta, restricted)
    return _count_to(lam, EMPTY, n, delta if restricted else None)


def enumerate_walks(lam: Partition, n: int, delta: int | None = None, restricted: bool = False) -> list[Walk]:
    """All walks of length ``n`` from the empty partition to ``lam``.

    Order is lexicographic in the sequence of moves, where a move is
    ``(0, row)`` for adding a box and ``(1, row)`` for removing one.
    """
    lam = _check_walk_args(lam, n, delta, restricted)
    key = delta if restricted else None
    out = []

    def dfs(path):
        left = n - (len(path) - 1)
        if left == 0:
            out.append(Walk(path))
            return
        for mu in _ordered_neighbors(path[-1], key):
            if _count_to(lam, mu, left - 1, key):
                path.append(mu)
                dfs(path)
                path.pop()

    dfs([EMPTY])
    return out


def restricted_component(delta: int, max_size: int) -> set[Partition]:
    """Breadth-first search from the empty partition through delta-regular partitions.

    This is the graph-theoretic definition of A_delta, truncated at ``max_size`` boxes.
    """
    seen = {EMPTY}
    frontier = [EMPTY]
    while frontier:
        nxt = []
        for lam in frontier:
            up, down = box_neighbors(lam)
            for mu in up | down:
                if mu.size <= max_size and mu not in seen and is_delta_regular(mu, delta):
                    seen.add(mu)
                    nxt.append(mu)
        frontier = nxt
    return seen
