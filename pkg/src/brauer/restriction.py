"""Restriction of standard and simple modules from B_n to B_{n-1}.

Standard modules restrict along the Young graph. Simple modules are handled
block by block: for every block met by a box neighbour of ``lam`` we return
its Loewy layers, read off from weight and cap diagrams.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

from .caps import cap_diagram_of
from .geometry import degree
from .partitions import Partition, box_neighbors, in_labels, labels
from .weights import CIRC, CROSS, DOWN, UP, WeightDiagram, partition_from_weight, same_block, order_leq, weight_diagram

SIMPLE, STANDARD, PROJECTIVE = "L", "Delta", "P"


@dataclass(frozen=True, order=True)
class ModuleLabel:
    kind: str
    partition: Partition
    n: int
    delta: int

    def __post_init__(self):
        if self.kind not in (SIMPLE, STANDARD, PROJECTIVE):
            raise ValueError(f"unknown module kind {self.kind!r}")
        if not in_labels(self.partition, self.n):
            raise ValueError(f"{self.partition} is not a label for n={self.n}")

    def __str__(self):
        return f"{self.kind}_{self.n}({self.partition})"


def L(lam, n, delta) -> ModuleLabel:
    return ModuleLabel(SIMPLE, Partition(lam), n, delta)


@dataclass(frozen=True)
class LoewyStructure:
    """Radical layers, top first. One layer means a semisimple module; none means zero."""

    block: Partition
    layers: tuple[tuple[ModuleLabel, ...], ...] = field(default=())
    case: str = ""

    @property
    def head(self):
        return list(self.layers[0]) if self.layers else []

    @property
    def socle(self):
        return list(self.layers[-1]) if self.layers else []

    @property
    def middle(self):
        return [m for layer in self.layers[1:-1] for m in layer]

    @property
    def factors(self):
        return [m for layer in self.layers for m in layer]

    @property
    def is_zero(self) -> bool:
        return not self.layers

    def to_dict(self):
        return {
            "block": str(self.block),
            "head": [str(m) for m in self.head],
            "middle": [str(m) for m in self.middle],
            "socle": [str(m) for m in self.socle],
            "layers": [[str(m) for m in layer] for layer in self.layers],
        }


def _check_label(lam, n):
    lam = Partition(lam)
    if not in_labels(lam, n):
        raise ValueError(f"{lam} is not a label for n={n}: need |lam| <= n with the same parity")
    return lam


def restrict_standard(lam: Partition, n: int, delta: int) -> list[ModuleLabel]:
    """Standard factors of res Delta_n(lam): one Delta_{n-1}(mu) per box neighbour mu."""
    lam = _check_label(lam, n)
    up, down = box_neighbors(lam)
    return sorted(ModuleLabel(STANDARD, mu, n - 1, delta) for mu in up | down if in_labels(mu, n - 1))


def induce_standard(lam: Partition, n: int, delta: int) -> list[ModuleLabel]:
    lam = _check_label(lam, n)
    up, down = box_neighbors(lam)
    return sorted(ModuleLabel(STANDARD, mu, n + 1, delta) for mu in up | down)


def _pm_pairs(x: WeightDiagram):
    """Slots ``i`` where slots ``i-1, i`` carry a circle and a cross in some order."""
    out = []
    for i in range(1, len(x)):
        pair = {x[i - 1], x[i]}
        if pair == {CIRC, CROSS} and not x.is_wild(i - 1):
            out.append(i)
    return out


def lambda_pm(lam_prime: Partition, delta: int, near: Partition | None = None):
    """``(lam_plus, lam_minus, i)`` for a circle/cross pair at slots ``i-1, i`` of x_{lam'}.

    lam_plus carries v^ there and is lam' plus a box, lam_minus carries ^v and
    is lam' minus a box. With several such pairs, ``near`` (a box neighbour of
    lam' one degree less singular) selects the pair; otherwise the leftmost.
    """
    lam_prime = Partition(lam_prime)
    x = weight_diagram(lam_prime, delta)
    slots = _pm_pairs(x)
    if near is not None:
        y = weight_diagram(Partition(near), delta)
        diff = {k for k in range(max(len(x), len(y)) + 1) if x[k] != y[k] and not (x.is_wild(k) or y.is_wild(k))}
        slots = [i for i in slots if diff <= {i - 1, i}]
    if not slots:
        raise ValueError(f"x_{lam_prime} = {x} has no adjacent circle/cross pair" +
                         (f" next to {near}" if near is not None else ""))
    i = slots[0]
    plus = partition_from_weight(x.relabel({i - 1: DOWN, i: UP}))
    minus = partition_from_weight(x.relabel({i - 1: UP, i: DOWN}))
    return plus, minus, i


def I_set(lam_prime: Partition, lam_plus: Partition, delta: int):
    """Vertices j of c_{lam'} in the chamber of vertex i, with the rule each one satisfies.

    Returns ``[(j, rule)]`` with rule ``"right-down"``, ``"left-up"`` or ``"left-down"``.
    """
    lam_prime = Partition(lam_prime)
    x = weight_diagram(lam_prime, delta)
    y = weight_diagram(Partition(lam_plus), delta)
    slots = [i for i in _pm_pairs(x) if y[i - 1] == DOWN and y[i] == UP]
    if not slots:
        raise ValueError(f"{lam_plus} is not the upper partner of {lam_prime}")
    i = slots[0]
    c = cap_diagram_of(x)
    chamber = c.chamber_of(i)
    out = []
    for j in range(c.width + 1):
        if x[j] not in (DOWN, UP) or not c.belongs_to_chamber(j, chamber):
            continue
        if j > i and x[j] == DOWN:
            out.append((j, "right-down"))
        elif j < i and x[j] == UP:
            out.append((j, "left-up"))
        elif j < i and x[j] == DOWN:
            kind, data = c.arc_of(j)
            if kind == "ray" or (kind == "cap" and max(data) > i):
                out.append((j, "left-down"))
    return out


def lambda_prime_j(lam_prime: Partition, j: int, delta: int, i: int | None = None, rule: str | None = None) -> Partition:
    """The partition obtained by the relabelling attached to ``j``."""
    x = weight_diagram(Partition(lam_prime), delta)
    if i is None:
        i = _pm_pairs(x)[0]
    if rule is None:
        rule = "right-down" if j > i else ("left-up" if x[j] == UP else "left-down")
    changes = {
        "right-down": {j: UP, i - 1: DOWN, i: DOWN},
        "left-up": {j: DOWN, i - 1: UP, i: UP},
        "left-down": {j: UP, i - 1: UP, i: UP},
    }[rule]
    return partition_from_weight(x.relabel(changes))


@lru_cache(maxsize=None)
def block_representative(mu: Partition, n: int, delta: int) -> Partition:
    """Order-minimal member of the block of ``mu`` inside Lambda_n, ties by (size, parts)."""
    members = [nu for nu in labels(n) if same_block(nu, mu, delta)]
    minimal = [a for a in members if not any(b != a and order_leq(b, a, delta) for b in members)]
    return min(minimal, key=lambda p: (p.size, tuple(p)))


def _require_nonzero(delta):
    if delta == 0:
        raise ValueError("restriction of simple modules needs delta != 0")


def restrict_simple(lam: Partition, n: int, delta: int) -> dict[Partition, LoewyStructure]:
    """Block components of res L_n(lam), keyed by block representative in Lambda_{n-1}."""
    _require_nonzero(delta)
    lam = _check_label(lam, n)
    up, down = box_neighbors(lam)
    support = sorted((mu for mu in up | down if in_labels(mu, n - 1)), key=lambda p: (p.size, tuple(p)))
    groups: dict[Partition, list[Partition]] = {}
    for mu in support:
        groups.setdefault(block_representative(mu, n - 1, delta), []).append(mu)

    out = {}
    d0 = degree(lam, delta)
    for rep, members in groups.items():
        shifts = {degree(mu, delta) - d0 for mu in members}
        if len(shifts) != 1:
            raise AssertionError(f"mixed cases in one block for {lam}: {members}")
        shift = shifts.pop()
        if shift == 0:
            if len(members) != 1:
                raise AssertionError(f"two same-degree neighbours of {lam} share a block: {members}")
            out[rep] = LoewyStructure(rep, ((L(members[0], n - 1, delta),),), "I")
        elif shift == 1:
            (lp,) = members
            plus, minus, _ = lambda_pm(lp, delta, near=lam)
            if lam == plus:
                out[rep] = LoewyStructure(rep, ((L(lp, n - 1, delta),),), "II+")
            elif lam == minus:
                out[rep] = LoewyStructure(rep, (), "II-")
            else:
                raise AssertionError(f"{lam} is neither partner of {lp}")
        elif shift == -1:
            plus, minus, i = lambda_pm(lam, delta, near=members[0])
            if lam.size == n:
                out[rep] = LoewyStructure(rep, ((L(minus, n - 1, delta),),), "III")
                continue
            middle = [L(minus, n - 1, delta)]
            for j, rule in I_set(lam, plus, delta):
                nu = lambda_prime_j(lam, j, delta, i, rule)
                if in_labels(nu, n - 1):
                    middle.append(L(nu, n - 1, delta))
            top = (L(plus, n - 1, delta),)
            out[rep] = LoewyStructure(rep, (top, tuple(middle), top), "III")
        else:
            raise AssertionError(f"degree jump {shift} between neighbours")
    return out


def restriction_json(lam: Partition, n: int, delta: int) -> str:
    comps = restrict_simple(lam, n, delta)
    return json.dumps([comps[k].to_dict() for k in sorted(comps, key=lambda p: (p.size, tuple(p)))], indent=2)
