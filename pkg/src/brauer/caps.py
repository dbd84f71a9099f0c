"""Cap diagrams, chambers and decomposition numbers.

Curls (pairs of free ups joined through the wall) are handled on the doubled
line: reflect the half-line through the wall, send a cap ``(a, b)`` to the
arcs ``(a, b)`` and ``(-b, -a)`` and a curl ``(a, b)`` to the two centred arcs
``(-a, a)`` and ``(-b, b)``. The arcs are then non-crossing and every chamber
is a face of the arrangement, named by its innermost enclosing arc or, outside
all arcs, by the pair of rays around it. Mirror-image faces are identified.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .partitions import Partition
from .weights import CIRC, CROSS, DOWN, UP, WeightDiagram, weight_diagram

INF = float("inf")


@dataclass(frozen=True)
class CapDiagram:
    base: WeightDiagram
    caps: tuple[tuple[int, int], ...]
    curls: tuple[tuple[int, int], ...]
    rays: tuple[int, ...]          # down rays inside the stored window
    up_ray: int | None = None

    @property
    def width(self) -> int:
        """Number of slots drawn; every slot from here on carries a down ray."""
        return len(self.base) + 1

    def partner(self, k: int):
        for a, b in self.caps + self.curls:
            if k == a:
                return b
            if k == b:
                return a
        return None

    def arc_of(self, k: int):
        """``("cap"|"curl"|"ray", data)`` for a down/up vertex, None for circles and crosses."""
        for arc in self.caps:
            if k in arc:
                return "cap", arc
        for arc in self.curls:
            if k in arc:
                return "curl", arc
        if k == self.up_ray or k in self.rays or k >= self.width:
            return "ray", k
        return None

    def arcs(self):
        return {"caps": [list(a) for a in self.caps], "curls": [list(a) for a in self.curls],
                "rays": list(self.rays), "up_ray": self.up_ray}

    # doubled-line geometry -------------------------------------------------

    def _q(self, k: int) -> int:
        return 2 * self.base.pos2(k)

    def _lines(self):
        q = self._q
        arcs = []
        for a, b in self.caps:
            arcs += [(q(a), q(b)), (-q(b), -q(a))]
        for a, b in self.curls:
            arcs += [(-q(a), q(a)), (-q(b), q(b))]
        rays = [q(k) for k in self.rays] + [q(self.width)]
        if self.up_ray is not None:
            rays.append(q(self.up_ray))
        rays = sorted(set(rays + [-r for r in rays]))
        return arcs, rays

    def chamber_at(self, c: float):
        """Chamber containing the point just above position ``c`` of the doubled line."""
        arcs, rays = self._lines()
        inside = [(l, r) for l, r in arcs if l < c < r]
        if inside:
            return _canon("arc", min(inside, key=lambda a: a[1] - a[0]))
        left = max((r for r in rays if r < c), default=-INF)
        right = min((r for r in rays if r > c), default=INF)
        return _canon("gap", (left, right))

    def _outside(self, arc):
        arcs, rays = self._lines()
        l, r = arc
        around = [(a, b) for a, b in arcs if a <= l and r <= b and (a, b) != (l, r)]
        if around:
            return _canon("arc", min(around, key=lambda a: a[1] - a[0]))
        return self.chamber_at(l - 0.5 if l > 0 else r + 0.5)

    def chambers_of_vertex(self, k: int) -> set:
        """All chambers whose closure contains vertex ``k``."""
        q = self._q(k)
        kind = self.arc_of(k)
        if kind is None:
            return {self.chamber_at(q)}
        what, data = kind
        if what == "ray":
            return {self.chamber_at(q - 1), self.chamber_at(q + 1)}
        a, b = data
        if what == "cap":
            arc = (self._q(a), self._q(b))
        else:
            arc = (-q, q)
        return {_canon("arc", arc), self._outside(arc)}

    def chamber_of(self, k: int):
        """The unique chamber of a circle or cross vertex."""
        if self.base[k] not in (CIRC, CROSS):
            raise ValueError(f"vertex slot {k} is labelled {self.base[k]}, not a circle or cross")
        return self.chamber_at(self._q(k))

    def belongs_to_chamber(self, k: int, chamber) -> bool:
        return chamber in self.chambers_of_vertex(k)


def _canon(kind, pair):
    l, r = pair
    return (kind, min((l, r), (-r, -l)))


def _free_after_caps(labels, caps):
    capped = {v for arc in caps for v in arc}
    return [k for k, s in enumerate(labels) if s in (DOWN, UP) and k not in capped]


def _finish(x: WeightDiagram, caps) -> CapDiagram:
    labels = [x[k] for k in range(len(x) + 1)]
    free = _free_after_caps(labels, caps)
    ups = [k for k in free if labels[k] == UP]
    downs = [k for k in free if labels[k] == DOWN]
    if ups and downs and min(downs) < max(ups):
        raise AssertionError(f"a free down sits left of a free up in {x}")
    curls = tuple((ups[i], ups[i + 1]) for i in range(0, len(ups) - 1, 2))
    up_ray = ups[-1] if len(ups) % 2 else None
    return CapDiagram(x, tuple(sorted(caps)), curls, tuple(downs), up_ray)


def cap_diagram_of(x: WeightDiagram) -> CapDiagram:
    """Left-to-right stack pairing of each up with the nearest open down."""
    stack, caps = [], []
    for k in range(len(x) + 1):
        if x[k] == DOWN:
            stack.append(k)
        elif x[k] == UP and stack:
            caps.append((stack.pop(), k))
    return _finish(x, caps)


def cap_diagram_random(x: WeightDiagram, rng: random.Random) -> CapDiagram:
    """The pairing done literally: repeatedly join a random eligible down-up pair.

    A pair is eligible when only circles, crosses and already capped vertices
    lie between them. Used to check that the result does not depend on order.
    """
    labels = [x[k] for k in range(len(x) + 1)]
    capped: set[int] = set()
    caps = []
    while True:
        open_ = [k for k, s in enumerate(labels) if s in (DOWN, UP) and k not in capped]
        pairs = [(a, b) for a, b in zip(open_, open_[1:]) if labels[a] == DOWN and labels[b] == UP]
        if not pairs:
            break
        a, b = rng.choice(pairs)
        caps.append((a, b))
        capped |= {a, b}
    return _finish(x, caps)


@lru_cache(maxsize=None)
def cap_diagram(lam: Partition, delta: int) -> CapDiagram:
    return cap_diagram_of(weight_diagram(Partition(lam), delta))


def _agree(x: WeightDiagram, y: WeightDiagram, k: int, want: str) -> bool:
    return x.is_wild(k) or y[k] == want


def d_poly(lam: Partition, mu: Partition, delta: int):
    """Exponent ``k`` with ``d_{lam,mu}(q) = q^k``, or None when it vanishes.

    x_mu must agree with x_lam off the arcs of c_lam and, arc by arc, either
    agree or be flipped (a cap v^ becomes ^v, a curl ^^ becomes vv).
    """
    c = cap_diagram(Partition(lam), delta)
    x, y = c.base, weight_diagram(Partition(mu), delta)
    if x.zero_flag != y.zero_flag:
        return None
    on_arc = set()
    flips = 0
    for arcs, flipped in ((c.caps, (UP, DOWN)), (c.curls, (DOWN, DOWN))):
        for a, b in arcs:
            on_arc |= {a, b}
            same = _agree(x, y, a, x[a]) and _agree(x, y, b, x[b])
            turned = _agree(x, y, a, flipped[0]) and _agree(x, y, b, flipped[1])
            if same and not turned:
                continue
            if turned and not same:
                flips += 1
                continue
            if not same:
                return None
            # both readings fit only when a wild vertex hides the difference
            raise AssertionError(f"ambiguous arc {(a, b)} comparing {x} and {y}")
    width = max(len(x), len(y)) + 1
    for k in range(width):
        if k not in on_arc and not x.is_wild(k) and x[k] != y[k]:
            return None
    return flips


def decomposition_number(lam: Partition, mu: Partition, delta: int) -> int:
    """``[Delta(mu) : L(lam)]``, which is 0 or 1."""
    return 0 if d_poly(lam, mu, delta) is None else 1


def decomposition_matrix(block: list, delta: int):
    """Rows indexed by simples ``lam``, columns by standards ``mu``, in the given order."""
    return [[decomposition_number(lam, mu, delta) for mu in block] for lam in block]
