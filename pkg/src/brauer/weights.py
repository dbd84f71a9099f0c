"""Weight diagrams, blocks and the partial order on partitions.

Vertices of a weight diagram are stored by slot ``k``: slot ``k`` is vertex
``k`` when delta is even and vertex ``k + 1/2`` when delta is odd. Labels are
the ASCII symbols ``o`` (circle), ``x`` (cross), ``v`` (down) and ``^`` (up);
every slot past the stored prefix is ``v``.

When delta is even and some coordinate of ``e_delta(lam)`` is zero, vertex 0
may be read as either ``v`` or ``^``. It is always stored as ``v`` and
``zero_flag`` is set; comparisons treat that vertex as a wildcard.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .geometry import embed
from .partitions import Partition, box_neighbors, transpose

CIRC, CROSS, DOWN, UP = "o", "x", "v", "^"
SYMBOLS = (CIRC, CROSS, DOWN, UP)
PRETTY = {CIRC: "∘", CROSS: "×", DOWN: "∨", UP: "∧"}


def _m(delta: int) -> int:
    return delta // 2


@dataclass(frozen=True)
class WeightDiagram:
    labels: tuple[str, ...]
    delta: int
    zero_flag: bool = False

    @classmethod
    def from_labels(cls, labels, delta: int) -> "WeightDiagram":
        """Normalise a label sequence: vertex 0 ``^`` becomes ``v``, trailing ``v`` dropped."""
        labels = list(labels)
        if any(s not in SYMBOLS for s in labels):
            raise ValueError(f"unknown symbol in {labels}")
        zero = False
        if delta % 2 == 0 and labels and labels[0] in (DOWN, UP):
            labels[0] = DOWN
            zero = True
        if delta % 2 == 0 and labels and labels[0] == CROSS:
            raise ValueError("vertex 0 cannot carry a cross")
        while labels and labels[-1] == DOWN and not (zero and len(labels) == 1):
            labels.pop()
        if zero and not labels:
            labels = [DOWN]
        return cls(tuple(labels), delta, zero)

    def __getitem__(self, k: int) -> str:
        return self.labels[k] if 0 <= k < len(self.labels) else DOWN

    def __len__(self):
        return len(self.labels)

    @property
    def odd(self) -> bool:
        return self.delta % 2 == 1

    def vertex(self, k: int):
        """Human vertex name of slot ``k`` (a half-integer for odd delta)."""
        return f"{2 * k + 1}/2" if self.odd else k

    def pos2(self, k: int) -> int:
        """Doubled coordinate of slot ``k`` on the number line."""
        return 2 * k + (1 if self.odd else 0)

    def is_wild(self, k: int) -> bool:
        return self.zero_flag and k == 0

    def count(self, symbol: str) -> int:
        n = sum(1 for k, s in enumerate(self.labels) if s == symbol and not self.is_wild(k))
        return n

    def positions(self, symbol: str) -> frozenset:
        return frozenset(k for k, s in enumerate(self.labels) if s == symbol and not self.is_wild(k))

    def relabel(self, changes: dict[int, str]) -> "WeightDiagram":
        labels = list(self.labels)
        top = max(changes, default=-1)
        labels += [DOWN] * (top + 1 - len(labels))
        for k, s in changes.items():
            labels[k] = s
        return WeightDiagram.from_labels(labels, self.delta)

    def matches(self, other: "WeightDiagram") -> bool:
        """Equality up to the vertex-0 wildcard."""
        if self.delta != other.delta or self.zero_flag != other.zero_flag:
            return False
        n = max(len(self), len(other))
        return all(self[k] == other[k] for k in range(n) if not self.is_wild(k))

    def text(self, width: int | None = None, pretty: bool = False) -> str:
        width = max(width or 0, len(self.labels) + 3)
        syms = [self[k] for k in range(width)]
        if pretty:
            syms = [PRETTY[s] for s in syms]
        return " ".join(syms) + " …"

    def __str__(self):
        return self.text()

    def window(self) -> int:
        """Half-width (doubled units) of a window outside which the line is
        all gaps above and all beads below."""
        return self.pos2(len(self.labels) + 1)

    def beads(self) -> set[int]:
        """Doubled coordinates of e_delta(lam) inside ``[-window, window]``."""
        span = self.window()
        out = set()
        for p in range(-span, span + 1):
            if (p - self.delta) % 2:
                continue
            if p == 0:
                if self[0] != CIRC:
                    out.add(0)
                continue
            k = (abs(p) - (1 if self.odd else 0)) // 2
            s = self[k]
            if p > 0 and s in (UP, CROSS):
                out.add(p)
            if p < 0 and s in (DOWN, CROSS):
                out.add(p)
        return out


@lru_cache(maxsize=None)
def weight_diagram(lam: Partition, delta: int) -> WeightDiagram:
    x = embed(Partition(lam), delta)
    pos = set(x.positive2())
    top = x.entry2(x.tail_start)
    odd = delta % 2 == 1
    last = max(max(pos, default=0), -top) + 2
    labels = []
    k = 0
    while True:
        w = 2 * k + (1 if odd else 0)
        if w > last:
            break
        if w == 0:
            labels.append(DOWN if x.contains2(0) else CIRC)
        else:
            up, down = w in pos, x.contains2(-w)
            labels.append(CROSS if up and down else UP if up else DOWN if down else CIRC)
        k += 1
    return WeightDiagram.from_labels(labels, delta)


def _validate(x: WeightDiagram):
    if x.count(CIRC) - x.count(CROSS) != _m(x.delta):
        raise ValueError(f"malformed weight diagram {x}: #o - #x != {_m(x.delta)}")


def read_by_columns(x: WeightDiagram) -> Partition:
    """Recover the partition walking the line upwards from minus infinity.

    Each bead records the number of gaps seen so far; read from the top bead
    down these are the column lengths.
    """
    _validate(x)
    beads = x.beads()
    span = x.window()
    gaps = 0
    cols = []
    for p in range(-span, span + 1):
        if (p - x.delta) % 2:
            continue
        if p in beads:
            cols.append(gaps)
        else:
            gaps += 1
    return transpose(Partition(sorted((c for c in cols if c), reverse=True)))


def read_by_rows(x: WeightDiagram) -> Partition:
    """Recover the partition walking the line downwards from plus infinity.

    Each gap records how many beads lie above it; these are the row lengths.
    """
    _validate(x)
    beads = x.beads()
    span = x.window()
    seen = 0
    rows = []
    for p in range(span, -span - 1, -1):
        if (p - x.delta) % 2:
            continue
        if p in beads:
            seen += 1
        else:
            rows.append(seen)
    return Partition(sorted((r for r in rows if r), reverse=True))


def partition_from_weight(x: WeightDiagram) -> Partition:
    a, b = read_by_columns(x), read_by_rows(x)
    if a != b:
        raise ValueError(f"readings disagree on {x}: {a} vs {b}")
    if not weight_diagram(a, x.delta).matches(x):
        raise ValueError(f"{x} is not the weight diagram of any partition")
    return a


def same_block(lam: Partition, mu: Partition, delta: int) -> bool:
    """Linkage test: same circles, same crosses, and equal parity of ups
    (parity is free when a zero coordinate is present)."""
    x, y = weight_diagram(lam, delta), weight_diagram(mu, delta)
    if x.positions(CIRC) != y.positions(CIRC) or x.positions(CROSS) != y.positions(CROSS):
        return False
    if x.zero_flag != y.zero_flag:
        return False
    return x.zero_flag or (x.count(UP) - y.count(UP)) % 2 == 0


def _raising_moves(x: WeightDiagram, reach: int):
    """Diagrams obtained by one order-increasing move, touching slots < reach."""
    slots = range(1 if x.zero_flag else 0, reach)
    ups = [k for k in slots if x[k] == UP]
    downs = [k for k in slots if x[k] == DOWN]
    for a in ups:
        for b in downs:
            if a < b:
                yield x.relabel({a: DOWN, b: UP})
    for i, a in enumerate(downs):
        for b in downs[i + 1:]:
            yield x.relabel({a: UP, b: UP})
    if x.zero_flag:
        # a sign change paired with the zero coordinate flips one label
        for b in downs:
            yield x.relabel({b: UP})


def _lowering_moves(x: WeightDiagram, reach: int):
    slots = range(1 if x.zero_flag else 0, reach)
    ups = [k for k in slots if x[k] == UP]
    downs = [k for k in slots if x[k] == DOWN]
    for a in downs:
        for b in ups:
            if a < b:
                yield x.relabel({a: UP, b: DOWN})
    for i, a in enumerate(ups):
        for b in ups[i + 1:]:
            yield x.relabel({a: DOWN, b: DOWN})
    if x.zero_flag:
        for b in ups:
            yield x.relabel({b: DOWN})


def order_leq(lam: Partition, mu: Partition, delta: int) -> bool:
    """``lam <= mu`` in the block order: x_mu is reachable from x_lam by raising moves."""
    lam, mu = Partition(lam), Partition(mu)
    if not same_block(lam, mu, delta):
        raise ValueError(f"{lam} and {mu} lie in different blocks for delta={delta}")
    if lam == mu:
        return True
    if lam.size > mu.size:
        return False
    target = weight_diagram(mu, delta)
    start = weight_diagram(lam, delta)
    reach = max(len(start), len(target)) + mu.size + 2
    seen = {start.labels}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in _raising_moves(x, reach):
            if y.labels in seen:
                continue
            seen.add(y.labels)
            nu = partition_from_weight(y)
            if nu.size > mu.size:
                continue
            if y.matches(target):
                return True
            queue.append(y)
    return False


def block_by_moves(lam: Partition, delta: int, max_size: int) -> set[Partition]:
    """Block of ``lam`` as the closure under both generating moves, capped at ``max_size`` boxes."""
    start = weight_diagram(Partition(lam), delta)
    reach = len(start) + max_size + 2
    seen = {start.labels}
    out = {Partition(lam)}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in list(_raising_moves(x, reach)) + list(_lowering_moves(x, reach)):
            if y.labels in seen:
                continue
            seen.add(y.labels)
            nu = partition_from_weight(y)
            if nu.size > max_size:
                continue
            out.add(nu)
            queue.append(y)
    return out


# Configurations for one added box: (lambda labels, mu labels) on slots (k, k + 1).
BOX_MOVES = {
    "i": ("xv", "vx", "I"),
    "ii": ("^x", "x^", "I"),
    "iii": ("ov", "vo", "I"),
    "iv": ("^o", "o^", "I"),
    "vi": ("^v", "ox", "II"),
    "vii": ("^v", "xo", "II"),
    "viii": ("ox", "v^", "III"),
    "ix": ("xo", "v^", "III"),
}


def _fits(pattern: str, x: WeightDiagram, k: int) -> bool:
    for off, s in enumerate(pattern):
        slot = k + off
        if x.is_wild(slot):
            if s not in (DOWN, UP):
                return False
        elif x[slot] != s:
            return False
    return True


def classify_box_move(lam: Partition, mu: Partition, delta: int) -> str:
    """Tag ``i``..``ix`` describing how x_mu differs from x_lam when mu = lam + box."""
    lam, mu = Partition(lam), Partition(mu)
    if mu not in box_neighbors(lam)[0]:
        raise ValueError(f"{mu} is not obtained from {lam} by adding a box")
    x, y = weight_diagram(lam, delta), weight_diagram(mu, delta)
    n = max(len(x), len(y))
    diff = [k for k in range(n) if x[k] != y[k] or x.is_wild(k) != y.is_wild(k)]
    if delta % 2 == 1 and diff == [0] and x[0] == DOWN and y[0] == UP:
        return "v"
    lo = diff[0]
    for k in {max(lo - 1, 0), lo}:
        for tag, (a, b, _) in BOX_MOVES.items():
            if _fits(a, x, k) and _fits(b, y, k) and all(k <= d <= k + 1 for d in diff):
                return tag
    raise AssertionError(f"unclassified move {lam} -> {mu} at delta={delta}: {x} / {y}")


def case_of(tag: str) -> str:
    return "I" if tag == "v" else BOX_MOVES[tag][2]


def _left_counts(x: WeightDiagram, k: int) -> tuple[int, int]:
    """(#crosses, #circles) strictly left of slot k."""
    crosses = sum(1 for j in range(k) if x[j] == CROSS)
    circles = sum(1 for j in range(k) if x[j] == CIRC)
    return crosses, circles


def times_pairs(lam: Partition, delta: int):
    """For every cross at slot k: ``(k, (i, j), in_diagram, condition)``.

    ``(i, j)`` with ``i > j`` solves lam^T_i + lam^T_j - i - j + 2 = delta and
    ``condition`` is the left-count criterion predicting ``(i, j) in [lam]``.
    """
    lam = Partition(lam)
    x = weight_diagram(lam, delta)
    e = embed(lam, delta)
    m = _m(delta)
    bound = m - 1 if delta % 2 == 0 else m
    out = []
    for k in sorted(x.positions(CROSS)):
        w = x.pos2(k)
        limit = len(e.doubled) + w + abs(delta) + 3
        j = next(t for t in range(1, limit) if e.entry2(t) == w)
        i = next(t for t in range(j, limit) if e.entry2(t) == -w)
        crosses, circles = _left_counts(x, k)
        out.append((k, (i, j), (i, j) in lam, crosses - circles < bound))
    return out


def circ_pairs(lam: Partition, delta: int):
    """For every circle at slot k: ``(k, (i, j), in_diagram, condition)`` with
    ``i <= j`` solving -lam_i - lam_j + i + j = delta."""
    lam = Partition(lam)
    x = weight_diagram(lam, delta)
    m = _m(delta)
    odd = delta % 2
    bound = m - 1 if delta % 2 == 0 else m
    out = []
    for k in sorted(x.positions(CIRC)):
        limit = len(lam) + abs(delta) + k + 4
        i = next(t for t in range(1, limit) if lam.row(t) - t == k - m)
        j = next(t for t in range(1, limit) if lam.row(t) - t == -k - m - odd)
        assert -lam.row(i) - lam.row(j) + i + j == delta
        crosses, circles = _left_counts(x, k)
        out.append((k, (i, j), (i, j) in lam, crosses - circles > bound))
    return out
