"""Consistency checks shared by the ``verify`` command and the acceptance tests.

Every check returns a CheckResult. The ranges are parameters so the same code
runs both the fixed acceptance ranges and a quick check at one (n, delta).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from . import oracle
from .caps import cap_diagram_of, cap_diagram_random, decomposition_number
from .geometry import Walk, count_walks, degree, in_A_delta, restricted_component
from .leduc_ram import (check_relations, coupling_entries, diamond, evaluate_at, generic_matrices,
                        geometric_diamond, simple_matrices)
from .partitions import EMPTY, Partition, box_neighbors, king_root_multiplicity, labels, partitions_up_to
from .restriction import restrict_simple
from .weights import (CIRC, CROSS, _m, block_by_moves, circ_pairs, order_leq, read_by_columns, read_by_rows,
                      same_block, times_pairs, weight_diagram)

WORKED_EXAMPLE = Partition((10, 10, 9, 9, 8, 5, 3, 3))
SAMPLE = 5   # failures kept per check


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    failed: int = 0
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failed == 0 and self.checked > 0

    def fail(self, msg):
        self.failed += 1
        if len(self.failures) < SAMPLE:
            self.failures.append(msg)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{status}  {self.name}: {self.checked} checked, {self.failed} failed ({self.seconds:.1f}s)"
        for f in self.failures:
            out += f"\n      {f}"
        return out

    def to_dict(self):
        return {"name": self.name, "passed": self.passed, "checked": self.checked,
                "failed": self.failed, "failures": [str(f) for f in self.failures],
                "seconds": round(self.seconds, 3)}


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t0
        return res

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


# weight diagrams --------------------------------------------------------------

@_timed
def readings(max_size, deltas, extra=(WORKED_EXAMPLE,)):
    """Both readings of x_lam give back lam."""
    res = CheckResult("weight diagram readings recover the partition")
    parts = list(partitions_up_to(max_size)) + [Partition(p) for p in extra]
    for lam, delta in product(parts, deltas):
        x = weight_diagram(lam, delta)
        res.checked += 1
        got = (read_by_columns(x), read_by_rows(x))
        if got != (lam, lam):
            res.fail(f"{lam} at delta={delta}: read {got[0]} and {got[1]}")
    return res


@_timed
def circle_cross_balance(max_size, deltas):
    """#circles - #crosses = m where delta = 2m or 2m+1."""
    res = CheckResult("circles minus crosses equals floor(delta/2)")
    for lam, delta in product(partitions_up_to(max_size), deltas):
        x = weight_diagram(lam, delta)
        res.checked += 1
        got = x.count(CIRC) - x.count(CROSS)
        if got != _m(delta):
            res.fail(f"{lam} at delta={delta}: {got}")
    return res


@_timed
def king_multiplicity(max_size, deltas):
    """Order of vanishing of P_lam at delta against degrees and diagram witnesses."""
    res = CheckResult("King root multiplicity = degree difference = in-diagram witnesses")
    for lam, delta in product(partitions_up_to(max_size), deltas):
        res.checked += 1
        mult = king_root_multiplicity(lam, delta)
        want = degree(lam, delta) - degree(EMPTY, delta)
        pairs = times_pairs(lam, delta) + circ_pairs(lam, delta)
        witnesses = sum(1 for _, _, inside, _ in pairs if inside)
        predicted = all(inside == cond for _, _, inside, cond in pairs)
        if not (mult == want == witnesses and predicted):
            res.fail(f"{lam} at delta={delta}: multiplicity {mult}, degree gap {want}, "
                     f"witnesses {witnesses}, conditions {'ok' if predicted else 'wrong'}")
    return res


@_timed
def restricted_set(max_size, deltas):
    """Closed-form A_delta against breadth-first search through regular partitions."""
    res = CheckResult("closed-form A_delta = BFS through delta-regular partitions")
    for delta in deltas:
        bfs = restricted_component(delta, max_size + 1)
        for lam in partitions_up_to(max_size):
            res.checked += 1
            if in_A_delta(lam, delta) != (lam in bfs):
                res.fail(f"{lam} at delta={delta}: closed form {in_A_delta(lam, delta)}, bfs {lam in bfs}")
    return res


@_timed
def block_moves(max_size, deltas):
    """same_block against the orbit of the two generating moves."""
    res = CheckResult("same_block = reachability under generating moves")
    for delta in deltas:
        parts = list(partitions_up_to(max_size))
        for lam in parts:
            orbit = block_by_moves(lam, delta, max_size)
            for mu in parts:
                res.checked += 1
                if same_block(lam, mu, delta) != (mu in orbit):
                    res.fail(f"{lam}, {mu} at delta={delta}")
    return res


@_timed
def cap_diagrams(max_size, deltas, trials=3, seed=0):
    """Greedy pairing order does not matter; nonzero D implies same block and order."""
    res = CheckResult("cap diagrams are order independent and D is block/order compatible")
    rng = random.Random(seed)
    for delta in deltas:
        parts = list(partitions_up_to(max_size))
        for lam in parts:
            x = weight_diagram(lam, delta)
            ref = cap_diagram_of(x)
            for _ in range(trials):
                res.checked += 1
                if cap_diagram_random(x, rng) != ref:
                    res.fail(f"{lam} at delta={delta}: pairing depends on order")
            for mu in parts:
                if decomposition_number(lam, mu, delta):
                    res.checked += 1
                    if not (same_block(lam, mu, delta) and order_leq(mu, lam, delta)):
                        res.fail(f"D({lam},{mu}) = 1 at delta={delta} outside block or order")
    return res


# dimensions -------------------------------------------------------------------

def _double_factorial(k):
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


@_timed
def dimensions(max_n, max_k=5):
    """Walk counts against the cell basis of the diagram algebra."""
    res = CheckResult("dim Delta_n(lam): walk count = cell basis size")
    for n in range(1, max_n + 1):
        for lam in labels(n):
            res.checked += 1
            walks, cells = count_walks(lam, n), oracle.cell_dimension(lam, n)
            if walks != cells:
                res.fail(f"{lam}, n={n}: walks {walks}, cells {cells}")
    for k in range(1, max_k + 1):
        res.checked += 1
        got = count_walks(EMPTY, 2 * k)
        if got != _double_factorial(2 * k - 1):
            res.fail(f"dim Delta_{2 * k}(-) = {got}")
    return res


@_timed
def decomposition_identity(ns, deltas):
    """dim Delta(mu) = sum over lam of D(lam, mu) dim L(lam)."""
    res = CheckResult("dim Delta_n(mu) = sum_lam D(lam,mu) dim L_n(lam)")
    for n, delta in product(ns, deltas):
        labs = labels(n)
        ranks = {lam: oracle.gram_rank(lam, n, delta) for lam in labs}
        for mu in labs:
            res.checked += 1
            total = sum(decomposition_number(lam, mu, delta) * ranks[lam] for lam in labs)
            if total != count_walks(mu, n):
                res.fail(f"mu={mu}, n={n}, delta={delta}: {total} vs {count_walks(mu, n)}")
    return res


@_timed
def restriction_theorem(ns, deltas, seed=0):
    """Predicted Loewy layers against block components measured by a central element."""
    res = CheckResult("restricted simple modules: predicted factors match block dimensions")
    for n, delta in product(ns, deltas):
        if n < 2:
            continue
        for lam in labels(n):
            res.checked += 1
            comps = restrict_simple(lam, n, delta)
            dims, scalars = oracle.restricted_block_dims(lam, n, delta, seed)
            predicted = {}
            for rep, comp in comps.items():
                size = sum(oracle.gram_rank(m.partition, n - 1, delta) for m in comp.factors)
                c = scalars[rep]
                predicted[c] = predicted.get(c, 0) + size
                if comp.case == "III" and lam.size < n and comp.head != comp.socle:
                    res.fail(f"{lam}, n={n}, delta={delta}: head {comp.head} != socle {comp.socle}")
            measured = {c: d for c, d in dims.items() if d}
            predicted = {c: d for c, d in predicted.items() if d}
            if measured != predicted:
                res.fail(f"{lam}, n={n}, delta={delta}: predicted {predicted}, measured {measured}")
    return res


# matrices ---------------------------------------------------------------------

def random_parameters(count, low=17, high=97, seed=0):
    """Rational u with |u| in [low, high] and random sign."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        u = Fraction(rng.randint(low * 1000, high * 1000), 1000)
        out.append(u if rng.random() < 0.5 else -u)
    return out


@_timed
def generic_relations(ns, samples=5, seed=0, tol=1e-9):
    res = CheckResult("generic matrices satisfy the Brauer relations")
    points = random_parameters(samples, seed=seed)
    for n in ns:
        for lam in labels(n):
            mats = generic_matrices(lam, n)
            for u in points:
                res.checked += 1
                report = check_relations(evaluate_at(mats, u), u, tol)
                if not report.passed:
                    res.fail(f"{lam}, n={n}, u={u}: worst residual {report.worst:.3g}")
    return res


@_timed
def specialization(ns, deltas, tol=1e-9):
    """Decoupling, relations and dimension of the truncated matrices at u = delta."""
    res = CheckResult("matrices at u = delta: decoupling, relations, dim = Gram rank")
    for n, delta in product(ns, deltas):
        for lam in labels(n):
            if not in_A_delta(lam, delta):
                continue
            res.checked += 1
            bad = [c for c in coupling_entries(lam, n, delta) if abs(c[-1]) > tol]
            if bad:
                name, m, S, T, v = bad[0]
                res.fail(f"{lam}, n={n}, delta={delta}: {name}_{m} couples {T} to {S} ({v:.3g})")
                continue
            mats = simple_matrices(lam, n, delta)
            report = check_relations(mats, delta, tol)
            if not report.passed:
                res.fail(f"{lam}, n={n}, delta={delta}: worst residual {report.worst:.3g}")
                continue
            rank = oracle.gram_rank(lam, n, delta)
            if mats.dim != rank:
                res.fail(f"{lam}, n={n}, delta={delta}: dim {mats.dim}, Gram rank {rank}")
    return res


def _path_to(lam: Partition):
    """Some walk from the empty partition to ``lam`` adding boxes row by row."""
    path = [EMPTY]
    cur = EMPTY
    for i, r in enumerate(lam, start=1):
        for _ in range(r):
            cur = cur.add_box(i)
            path.append(cur)
    return path


def diamond_pairs(max_size):
    """``(S, T, m)`` for local configurations with |s(m)| <= max_size.

    For a != d only S = T is produced; for a = d every partner T is.
    """
    for c in partitions_up_to(max_size):
        up, down = box_neighbors(c)
        for a in sorted(up | down):
            for d in sorted(up | down):
                head = _path_to(a)
                m = len(head)
                S = Walk(head + [c, d])
                if a != d:
                    yield S, S, m
                    continue
                ua, da = box_neighbors(a)
                for b in sorted(ua | da):
                    yield S, S.replace(m, b), m


@_timed
def diamond_agreement(max_size, deltas):
    res = CheckResult("walk-step diamond = embedded-point diamond")
    pairs = list(diamond_pairs(max_size))
    for delta in deltas:
        for S, T, m in pairs:
            res.checked += 1
            comb, geo = diamond(S, T, m, delta), geometric_diamond(S, T, m, delta)
            if comb != geo:
                res.fail(f"m={m}, S={S}, T={T}, delta={delta}: {comb} vs {geo}")
    return res


# the diagram algebra itself --------------------------------------------------

@_timed
def diagram_relations(max_n, assoc_n=3, delta=None):
    """Defining relations as exact diagram identities, and associativity with loop counts."""
    res = CheckResult("diagram multiplication: relations and associativity")

    def same(lhs, rhs, what):
        res.checked += 1
        if lhs != rhs:
            res.fail(f"{what}: {lhs} vs {rhs}")

    def prod(*ds):
        loops, out = 0, ds[0]
        for d in ds[1:]:
            k, out = oracle.multiply(out, d)
            loops += k
        return loops, out

    for n in range(2, max_n + 1):
        s = {i: oracle.sigma(n, i) for i in range(1, n)}
        e = {i: oracle.e(n, i) for i in range(1, n)}
        one = oracle.identity(n)
        for i in range(1, n):
            same(prod(s[i], s[i]), (0, one), f"s{i}^2, n={n}")
            same(prod(e[i], e[i]), (1, e[i]), f"e{i}^2, n={n}")
            same(prod(e[i], s[i]), (0, e[i]), f"e{i}s{i}, n={n}")
            same(prod(s[i], e[i]), (0, e[i]), f"s{i}e{i}, n={n}")
        for i in range(1, n - 1):
            j = i + 1
            same(prod(s[i], s[j], s[i]), prod(s[j], s[i], s[j]), f"braid {i}, n={n}")
            for a, b in ((i, j), (j, i)):
                same(prod(e[a], e[b], e[a]), (0, e[a]), f"e{a}e{b}e{a}, n={n}")
                same(prod(e[a], s[b], e[a]), (0, e[a]), f"e{a}s{b}e{a}, n={n}")
            same(prod(s[i], e[j], e[i]), prod(s[j], e[i]), f"s{i}e{j}e{i}, n={n}")
            same(prod(e[i], e[j], s[i]), prod(e[i], s[j]), f"e{i}e{j}s{i}, n={n}")
        for i in range(1, n):
            for j in range(i + 2, n):
                for x, y in product((s, e), repeat=2):
                    same(prod(x[i], y[j]), prod(y[j], x[i]), f"far {i},{j}, n={n}")
        for d in oracle.all_diagrams(n) if n <= 4 else ():
            same(prod(one, d), (0, d), f"identity, n={n}")
            same(prod(d.flip().flip()), (0, d), f"flip, n={n}")
    for n in range(1, assoc_n + 1):
        ds = oracle.all_diagrams(n)
        for a, b, c in product(ds, repeat=3):
            res.checked += 1
            if prod(prod(a, b)[1], c)[1] != prod(a, prod(b, c)[1])[1] or \
                    prod(a, b)[0] + prod(prod(a, b)[1], c)[0] != prod(b, c)[0] + prod(a, prod(b, c)[1])[0]:
                res.fail(f"associativity fails for {a.pairs()}, {b.pairs()}, {c.pairs()}")
    return res


# suites -----------------------------------------------------------------------

ACCEPTANCE_DELTAS = (-3, -2, -1, 1, 2, 3, 4)

ACCEPTANCE = {
    1: ("readings", lambda: readings(10, range(-8, 9))),
    2: ("circle/cross balance", lambda: circle_cross_balance(10, range(-8, 9))),
    3: ("King multiplicity", lambda: king_multiplicity(8, range(-6, 7))),
    4: ("restricted set", lambda: restricted_set(8, range(-6, 7))),
    5: ("dimensions", lambda: dimensions(8, 5)),
    6: ("decomposition identity", lambda: decomposition_identity(range(1, 6), ACCEPTANCE_DELTAS)),
    7: ("restriction", lambda: restriction_theorem(range(1, 6), ACCEPTANCE_DELTAS)),
    8: ("generic relations", lambda: generic_relations(range(1, 6), 5)),
    9: ("specialization", lambda: specialization(range(1, 6), [d for d in range(-4, 5) if d])),
    10: ("diamond agreement", lambda: diamond_agreement(6, range(-6, 7))),
    11: ("diagram algebra", lambda: diagram_relations(5, 3)),
}


def run_acceptance(which=None):
    out = []
    for k, (_, fn) in ACCEPTANCE.items():
        if which is None or k in which:
            out.append((k, fn()))
    return out


def verify_suite(n: int, delta: int, tol: float = 1e-9, seed: int = 0):
    """Every check at one algebra rank and parameter, in a fixed order."""
    ns = range(1, n + 1)
    small = min(n, 6)
    results = [
        readings(n, [delta]),
        circle_cross_balance(n, [delta]),
        king_multiplicity(n, [delta]),
        restricted_set(n, [delta]),
        block_moves(small, [delta]),
        cap_diagrams(n, [delta], seed=seed),
        dimensions(n, max_k=n // 2),
        generic_relations(ns, 3, seed=seed, tol=tol),
        diamond_agreement(min(n, 6), [delta]),
        diagram_relations(min(n, 5), min(n, 3)),
    ]
    if delta != 0:
        results += [
            decomposition_identity(ns, [delta]),
            restriction_theorem(ns, [delta], seed=seed),
            specialization(ns, [delta], tol=tol),
        ]
    return results
