"""Brute-force Brauer algebra: diagrams, cell modules and their Gram matrices.

Everything here is exact and deliberately independent of the combinatorial
modules, so it can be used to check them.

Points ``0 .. n-1`` are the top row and ``n .. 2n-1`` the bottom row of a
diagram. In a product ``a * b`` the diagram ``a`` sits on top of ``b``.
A half diagram on ``n`` points is a set of arcs plus the remaining free
points; the free points, read left to right, carry the letters ``0 .. r-1``
that the symmetric group permutes on the Specht side.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from . import exact
from .partitions import Partition, in_labels, partitions_of


@dataclass(frozen=True)
class BrauerDiagram:
    n: int
    partner: tuple[int, ...]

    def __post_init__(self):
        p = self.partner
        if len(p) != 2 * self.n or any(p[p[i]] != i or p[i] == i for i in range(2 * self.n)):
            raise ValueError(f"not a perfect matching: {p}")

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "BrauerDiagram":
        partner = [None] * (2 * n)
        for a, b in pairs:
            partner[a], partner[b] = b, a
        return cls(n, tuple(partner))

    def pairs(self):
        return sorted((i, j) for i, j in enumerate(self.partner) if i < j)

    def flip(self) -> "BrauerDiagram":
        """Mirror top and bottom (the anti-involution)."""
        n = self.n
        swap = lambda i: i + n if i < n else i - n
        return BrauerDiagram(n, tuple(swap(self.partner[swap(i)]) for i in range(2 * n)))

    def through_strands(self) -> int:
        return sum(1 for i in range(self.n) if self.partner[i] >= self.n)

    def __mul__(self, other):
        return multiply(self, other)[1]

    def extend(self, extra: int = 1) -> "BrauerDiagram":
        """Add ``extra`` vertical strands on the right."""
        n, m = self.n, self.n + extra
        pairs = []
        for a, b in self.pairs():
            pairs.append(tuple(p if p < n else p + extra for p in (a, b)))
        pairs += [(i, i + m) for i in range(n, m)]
        return BrauerDiagram.from_pairs(m, pairs)


def identity(n: int) -> BrauerDiagram:
    return BrauerDiagram.from_pairs(n, [(i, i + n) for i in range(n)])


def sigma(n: int, i: int) -> BrauerDiagram:
    """The crossing of strands ``i`` and ``i+1`` (1-based ``i``)."""
    pairs = [(k, k + n) for k in range(n) if k not in (i - 1, i)]
    pairs += [(i - 1, i + n), (i, i - 1 + n)]
    return BrauerDiagram.from_pairs(n, pairs)


def e(n: int, i: int) -> BrauerDiagram:
    pairs = [(k, k + n) for k in range(n) if k not in (i - 1, i)]
    pairs += [(i - 1, i), (i - 1 + n, i + n)]
    return BrauerDiagram.from_pairs(n, pairs)


def generators(n: int):
    return [("s", i, sigma(n, i)) for i in range(1, n)] + [("e", i, e(n, i)) for i in range(1, n)]


def multiply(a: BrauerDiagram, b: BrauerDiagram):
    """Return ``(loops, diagram)`` with ``a * b = delta**loops * diagram``."""
    if a.n != b.n:
        raise ValueError("diagrams of different rank")
    n = a.n
    # node ids: top of a = 0..n-1, middle = n..2n-1 (bottom of a = top of b), bottom of b = 2n..3n-1
    def step_a(p):
        return a.partner[p]            # a's points coincide with ids 0..2n-1

    def step_b(p):
        q = b.partner[p - n]
        return q + n                   # b's points shifted by n

    result = {}
    seen_mid = set()
    for start in list(range(n)) + list(range(2 * n, 3 * n)):
        if start in result:
            continue
        p = start
        use_a = start < n
        while True:
            p = step_a(p) if use_a else step_b(p)
            if p < n or p >= 2 * n:
                break
            seen_mid.add(p)
            use_a = not use_a
        result[start], result[p] = p, start
    loops = 0
    for m in range(n, 2 * n):
        if m in seen_mid:
            continue
        loops += 1
        p, use_a = m, True
        while True:
            seen_mid.add(p)
            p = step_a(p) if use_a else step_b(p)
            use_a = not use_a
            if p == m:
                break
    relabel = lambda p: p if p < n else p - n
    partner = tuple(relabel(result[p if p < n else p + n]) for p in range(2 * n))
    return loops, BrauerDiagram(n, partner)


@lru_cache(maxsize=None)
def all_diagrams(n: int) -> tuple[BrauerDiagram, ...]:
    def matchings(points):
        if not points:
            yield []
            return
        a = points[0]
        for k in range(1, len(points)):
            rest = points[1:k] + points[k + 1:]
            for m in matchings(rest):
                yield [(a, points[k])] + m

    return tuple(BrauerDiagram.from_pairs(n, m) for m in matchings(list(range(2 * n))))


# Specht modules --------------------------------------------------------------

@lru_cache(maxsize=None)
def standard_tableaux(lam: Partition):
    """Standard tableaux of shape ``lam`` with letters ``0 .. |lam|-1``, as tuples of rows."""
    lam = Partition(lam)
    out = []

    def fill(rows, k):
        if k == lam.size:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(lam)):
            if len(rows[i]) < lam[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                fill(rows, k + 1)
                rows[i].pop()

    fill([[] for _ in lam], 0)
    return tuple(out)


def _columns(t):
    width = len(t[0]) if t else 0
    return [[row[j] for row in t if j < len(row)] for j in range(width)]


def _polytabloid(t):
    """``{tabloid: coefficient}`` for the polytabloid of tableau ``t``."""
    cols = _columns(t)
    out = {}
    shape = [len(r) for r in t]

    def rec(j, assign, sign):
        if j == len(cols):
            rows = [[] for _ in shape]
            for col_perm in assign:
                for i, v in enumerate(col_perm):
                    rows[i].append(v)
            key = tuple(frozenset(r) for r in rows)
            out[key] = out.get(key, 0) + sign
            return
        for perm in permutations(range(len(cols[j]))):
            inv = sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])
            rec(j + 1, assign + [[cols[j][p] for p in perm]], -sign if inv % 2 else sign)

    rec(0, [], 1)
    return {k: v for k, v in out.items() if v}


class SpechtModule:
    """Young's natural representation on standard polytabloids."""

    def __init__(self, lam: Partition):
        self.shape = Partition(lam)
        self.tableaux = standard_tableaux(self.shape)
        self.vectors = [_polytabloid(t) for t in self.tableaux]
        self._keys = [tuple(frozenset(r) for r in t) for t in self.tableaux]
        # polytabloids read on the standard tabloids form an invertible matrix
        square = [[v.get(k, 0) for v in self.vectors] for k in self._keys]
        size = len(square)
        aug = [row + [int(i == j) for j in range(size)] for i, row in enumerate(square)]
        red, _ = exact.rref(aug)
        self._inverse = [row[size:] for row in red]
        self._perm_cache = {}

    @property
    def dim(self) -> int:
        return len(self.tableaux)

    def coordinates(self, vec: dict):
        """Coordinates in the polytabloid basis of a tabloid-space vector lying in the module."""
        rhs = [vec.get(k, 0) for k in self._keys]
        return [sum(a * b for a, b in zip(row, rhs)) for row in self._inverse]

    def permutation_matrix(self, w: tuple[int, ...]):
        """Matrix of the letter permutation ``k -> w[k]`` (columns are images of basis vectors)."""
        if w not in self._perm_cache:
            cols = []
            for v in self.vectors:
                moved = {}
                for key, c in v.items():
                    nk = tuple(frozenset(w[x] for x in row) for row in key)
                    moved[nk] = moved.get(nk, 0) + c
                cols.append(self.coordinates(moved))
            self._perm_cache[w] = exact.transpose(cols)
        return self._perm_cache[w]

    def form(self):
        """Gram matrix of the invariant form inherited from tabloid space."""
        return [[sum(c * v.get(k, 0) for k, c in u.items()) for v in self.vectors] for u in self.vectors]


@lru_cache(maxsize=None)
def specht_module(lam: Partition) -> SpechtModule:
    return SpechtModule(Partition(lam))


def specht_generators(lam: Partition):
    """Matrices of the adjacent transpositions ``s_1 .. s_{k-1}``."""
    sp = specht_module(lam)
    k = sp.shape.size
    out = []
    for i in range(k - 1):
        w = list(range(k))
        w[i], w[i + 1] = w[i + 1], w[i]
        out.append(sp.permutation_matrix(tuple(w)))
    return out


# cell modules -----------------------------------------------------------------

@lru_cache(maxsize=None)
def half_diagrams(n: int, arcs: int):
    """All sets of ``arcs`` disjoint pairs among ``n`` points, as sorted tuples of pairs."""
    out = []

    def rec(free, chosen, k):
        if k == 0:
            out.append(tuple(sorted(chosen)))
            return
        for idx, a in enumerate(free):
            for b in free[idx + 1:]:
                rest = [p for p in free[idx + 1:] if p != b]
                rec(rest, chosen + [(a, b)], k - 1)

    rec(list(range(n)), [], arcs)
    return tuple(sorted(set(out)))


def _free_points(n, half):
    used = {p for arc in half for p in arc}
    return [p for p in range(n) if p not in used]


class CellModule:
    """The cell module Delta_n(lam) with basis (half diagram, standard tableau)."""

    def __init__(self, lam: Partition, n: int, delta):
        lam = Partition(lam)
        if not in_labels(lam, n):
            raise ValueError(f"{lam} is not a label for n={n}")
        self.lam, self.n, self.delta = lam, n, delta
        self.halves = half_diagrams(n, (n - lam.size) // 2)
        self.specht = specht_module(lam)
        self.index = {h: i for i, h in enumerate(self.halves)}

    @property
    def dim(self) -> int:
        return len(self.halves) * self.specht.dim

    def _act_half(self, d: BrauerDiagram, half):
        """Apply ``d`` on top of a half diagram: (loops, new half, letter perm) or None."""
        n = self.n
        partner_half = {}
        for a, b in half:
            partner_half[a], partner_half[b] = b, a
        free = _free_points(n, half)
        letter = {p: k for k, p in enumerate(free)}
        new_arcs, through = [], {}
        seen_mid = set()
        for start in range(n):
            if start in through or any(start in arc for arc in new_arcs):
                continue
            p = d.partner[start]
            while True:
                if p < n:
                    new_arcs.append(tuple(sorted((start, p))))
                    break
                mid = p - n
                seen_mid.add(mid)
                if mid in letter:
                    through[start] = letter[mid]
                    break
                other = partner_half[mid]
                seen_mid.add(other)
                p = d.partner[other + n]
        if len(through) < len(free):
            return None
        loops = 0
        for m in range(n):
            if m in seen_mid or m in letter:
                continue
            loops += 1
            p = m
            while True:
                seen_mid.add(p)
                q = partner_half[p]
                seen_mid.add(q)
                p = d.partner[q + n] - n
                if p == m:
                    break
        new_half = tuple(sorted(new_arcs))
        new_free = sorted(through)
        # old letter through[pos] now sits at new position index of pos
        w = [None] * len(new_free)
        for k, pos in enumerate(new_free):
            w[through[pos]] = k
        return loops, new_half, tuple(w)

    def action(self, d: BrauerDiagram):
        """Matrix (list of rows) of the diagram ``d`` on this module."""
        if d.n != self.n:
            raise ValueError("rank mismatch")
        sd = self.specht.dim
        mat = [[0] * self.dim for _ in range(self.dim)]
        for hi, half in enumerate(self.halves):
            res = self._act_half(d, half)
            if res is None:
                continue
            loops, new_half, w = res
            scale = self.delta ** loops
            perm = self.specht.permutation_matrix(w)
            hj = self.index[new_half]
            for a in range(sd):
                for b in range(sd):
                    if perm[b][a]:
                        mat[hj * sd + b][hi * sd + a] += scale * perm[b][a]
        return mat

    def _pair_halves(self, h1, h2):
        """Overlay two half diagrams; (loops, letter matching) or None if strands meet."""
        n = self.n
        p1, p2 = {}, {}
        for a, b in h1:
            p1[a], p1[b] = b, a
        for a, b in h2:
            p2[a], p2[b] = b, a
        f1, f2 = _free_points(n, h1), _free_points(n, h2)
        l1 = {p: k for k, p in enumerate(f1)}
        l2 = {p: k for k, p in enumerate(f2)}
        match = {}
        seen = set()
        for p in f1:
            q, side = p, 2
            seen.add(q)
            while True:
                if side == 2:
                    if q in l2:
                        match[l1[p]] = l2[q]
                        break
                    q = p2[q]
                    side = 1
                else:
                    if q in l1:
                        return None
                    q = p1[q]
                    side = 2
                seen.add(q)
        loops = 0
        for p in range(n):
            if p in seen:
                continue
            loops += 1
            q = p
            while True:
                seen.add(q)
                q = p2[q]
                seen.add(q)
                q = p1[q]
                if q == p:
                    break
        return loops, match

    def gram(self):
        sd = self.specht.dim
        form = self.specht.form()
        size = self.dim
        g = [[0] * size for _ in range(size)]
        for i, h1 in enumerate(self.halves):
            for j, h2 in enumerate(self.halves):
                res = self._pair_halves(h1, h2)
                if res is None:
                    continue
                loops, match = res
                # letter match[k] of the second half diagram is joined to letter k of the first
                inv = {v: k for k, v in match.items()}
                w = tuple(inv[k] for k in range(len(match)))
                perm = self.specht.permutation_matrix(w)
                moved = exact.matmul(form, perm)
                scale = self.delta ** loops
                for a in range(sd):
                    for b in range(sd):
                        g[i * sd + a][j * sd + b] = scale * moved[a][b]
        return g


def cell_module(lam: Partition, n: int, delta) -> CellModule:
    return CellModule(Partition(lam), n, delta)


def cell_dimension(lam: Partition, n: int) -> int:
    """dim Delta_n(lam) as (#half diagrams) x (#standard tableaux)."""
    lam = Partition(lam)
    if not in_labels(lam, n):
        raise ValueError(f"{lam} is not a label for n={n}")
    return len(half_diagrams(n, (n - lam.size) // 2)) * len(standard_tableaux(lam))


def cell_action(lam: Partition, n: int, delta):
    """Matrices of sigma_i and e_i on Delta_n(lam): ``{"s": [...], "e": [...]}``."""
    m = cell_module(lam, n, delta)
    return {"s": [m.action(sigma(n, i)) for i in range(1, n)],
            "e": [m.action(e(n, i)) for i in range(1, n)]}


def gram_matrix(lam: Partition, n: int, delta):
    return cell_module(lam, n, delta).gram()


@lru_cache(maxsize=None)
def gram_rank(lam: Partition, n: int, delta) -> int:
    """dim L_n(lam) for delta != 0."""
    return exact.rank(gram_matrix(Partition(lam), n, delta))


def all_labels(n: int):
    for k in range(n, -1, -2):
        yield from partitions_of(k)


# central elements and block components -------------------------------------

@lru_cache(maxsize=None)
def center_basis(n: int, delta):
    """Integer basis of the centre of B_n(delta) as coefficient vectors over ``all_diagrams(n)``."""
    diagrams = all_diagrams(n)
    index = {d: k for k, d in enumerate(diagrams)}
    rows = {}
    for _, _, g in generators(n):
        for col, d in enumerate(diagrams):
            for sign, (loops, t) in ((1, multiply(d, g)), (-1, multiply(g, d))):
                row = rows.setdefault((id(g), index[t]), [0] * len(diagrams))
                row[col] += sign * delta ** loops
    eqs = [r for r in rows.values() if any(r)]
    return exact.nullspace(eqs, len(diagrams)) if eqs else exact.identity(len(diagrams))


def central_element(n: int, delta, seed: int = 0):
    """A random integer combination of the centre basis, as ``{diagram: coefficient}``."""
    import random
    rng = random.Random(seed)
    basis = center_basis(n, delta)
    coeffs = [rng.randint(1, 9) for _ in basis]
    vec = [sum(c * b[k] for c, b in zip(coeffs, basis)) for k in range(len(all_diagrams(n)))]
    return {d: v for d, v in zip(all_diagrams(n), vec) if v}


def act(z: dict, module: CellModule):
    """Matrix of an element of B_k (k <= module.n) acting through the first k strands."""
    size = module.dim
    out = [[0] * size for _ in range(size)]
    for d, c in z.items():
        a = module.action(d.extend(module.n - d.n) if d.n < module.n else d)
        for i in range(size):
            row, arow = out[i], a[i]
            for j in range(size):
                if arow[j]:
                    row[j] += c * arow[j]
    return out


def scalar_of(z: dict, mu: Partition, n: int, delta):
    """The scalar by which a central element of B_n acts on Delta_n(mu)."""
    m = act(z, cell_module(mu, n, delta))
    c = m[0][0] if m else 0
    if any(m[i][j] != (c if i == j else 0) for i in range(len(m)) for j in range(len(m))):
        raise AssertionError(f"central element is not scalar on Delta_{n}({mu})")
    return c


def _stable_kernel(a):
    """Kernel of a high enough power of ``a`` (the generalised 0-eigenspace)."""
    size = len(a)
    power, last = a, None
    while True:
        k = exact.nullspace(power, size) if size else []
        if last is not None and len(k) == len(last):
            return k
        if len(k) == size:
            return k
        last = k
        power = exact.matmul(power, power)


def restricted_block_dims(lam: Partition, n: int, delta, seed: int = 0):
    """Dimensions of the block components of res L_n(lam) measured by a central element.

    Returns ``(dims, scalars)``: ``dims[c]`` is the dimension of the generalised
    c-eigenspace of a random central element z of B_{n-1} on L_n(lam) =
    Delta_n(lam)/rad, and ``scalars[mu]`` is the scalar of z on Delta_{n-1}(mu).
    """
    lam = Partition(lam)
    z = central_element(n - 1, delta, seed)
    scalars = {mu: scalar_of(z, mu, n - 1, delta) for mu in all_labels(n - 1)}
    module = cell_module(lam, n, delta)
    zm = act(z, module)
    rad = exact.nullspace(module.gram(), module.dim)
    rad_rank = len(rad)
    dims = {}
    for c in sorted(set(scalars.values())):
        shifted = [[v - (c if i == j else 0) for j, v in enumerate(row)] for i, row in enumerate(zm)]
        kern = _stable_kernel(shifted)
        dims[c] = exact.rank(kern + rad) - rad_rank
    return dims, scalars
