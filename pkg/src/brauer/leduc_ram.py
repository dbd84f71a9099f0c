"""Seminormal-type matrices for the Brauer algebra on walk bases.

Generic matrices live over rational functions in ``u``. An entry is stored as
a rational coefficient times square roots of rational factors, so every
entry's square is an exact rational function and numeric evaluation takes
square roots only at the end.

Basis vectors are walks from the empty partition. Columns are indexed by
the walk acted on: ``M[S][T]`` is the coefficient of ``S`` in ``g T``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .geometry import Walk, embed, enumerate_walks, in_A_delta, step_row
from .partitions import KingPolynomial, Partition, box_neighbors, in_labels, king_polynomial
from .polynomials import Poly, RationalFunction


class RadicandError(ValueError):
    """A square root of a negative number was requested."""


@dataclass(frozen=True)
class KingRoot:
    """``sqrt(P_lam(u))`` continued from large positive ``u`` through the upper half plane.

    Each linear factor ``u - r`` with ``r > u0`` contributes a factor ``i``.
    """

    king: KingPolynomial

    def rational(self) -> RationalFunction:
        return RationalFunction.from_king(self.king)

    def evaluate(self, u0) -> tuple[int, Fraction]:
        """``(k, v)`` meaning ``i**k * sqrt(v)`` with ``v >= 0``."""
        u0 = Fraction(u0)
        return sum(1 for r in self.king.roots if r > u0), abs(self.king(u0))


@dataclass(frozen=True)
class PlainRoot:
    """Square root of a rational function that must be non-negative where evaluated."""

    f: RationalFunction

    def rational(self) -> RationalFunction:
        return self.f

    def evaluate(self, u0) -> tuple[int, Fraction]:
        v = self.f(u0)
        if v < 0:
            raise RadicandError(f"negative radicand {v} at u = {u0}")
        return 0, v


@dataclass(frozen=True)
class Entry:
    """``coef`` times a product of square roots."""

    coef: RationalFunction
    roots: tuple = ()

    def phased_value(self, u0) -> tuple[int, float]:
        """``(k, v)`` with the entry equal to ``i**k * v``, ``v`` real and ``0 <= k < 4``."""
        c = self.coef(u0)
        if not self.roots or c == 0:
            return 0, float(c)
        phase, prod = 0, Fraction(1)
        for root in self.roots:
            k, v = root.evaluate(u0)
            phase += k
            prod *= v
        if prod == 0:
            return 0, 0.0
        return phase % 4, float(c) * math.sqrt(prod)

    def complex_value(self, u0) -> complex:
        k, v = self.phased_value(u0)
        return (1j) ** k * v

    def value(self, u0) -> float:
        k, v = self.phased_value(u0)
        if k % 2:
            raise RadicandError(f"entry is imaginary at u = {u0}")
        return -v if k == 2 else v

    def square(self) -> RationalFunction:
        sq = self.coef * self.coef
        for root in self.roots:
            sq = sq * root.rational()
        return sq

    def to_json(self):
        return {"coef": self.coef.to_json(), "roots": [r.rational().to_json() for r in self.roots]}


def _king(lam) -> RationalFunction:
    return RationalFunction.from_king(king_polynomial(Partition(lam)))


def _root(lam) -> KingRoot:
    return KingRoot(king_polynomial(Partition(lam)))


def _check_diamond(S: Walk, T: Walk, m: int):
    if len(S) != len(T) or not 1 <= m < len(S) - 1:
        raise ValueError(f"position {m} is not interior to walks of length {len(S) - 1}")
    if any(S[j] != T[j] for j in range(len(S)) if j != m):
        raise ValueError("walks differ away from the diamond position")


def _diamond_parts(a: Partition, b: Partition, c: Partition, d: Partition):
    """``(slope, offset)`` with diamond value ``slope*u + offset`` for s(m-1)=a, t(m)=b, s(m)=c, s(m+1)=d."""
    sign1, l = step_row(a, b)
    sign2, k = step_row(c, d)
    if sign1 == sign2:
        return 0, sign2 * (d.row(k) - k - b.row(l) + l)
    return sign2, sign2 * (b.row(l) - l + d.row(k) - k)


def diamond(S: Walk, T: Walk, m: int, u=None):
    """The diamond of the m-diamond pair (S, T).

    With ``u`` None the value is returned as a polynomial in ``u``; otherwise
    it is evaluated there (exactly for ints and Fractions).
    """
    _check_diamond(S, T, m)
    slope, offset = _diamond_parts(S[m - 1], T[m], S[m], S[m + 1])
    if u is None:
        return Poly.linear(slope, offset)
    return slope * (Fraction(u) if isinstance(u, int) else u) + offset


def _changed_column(a: Partition, b: Partition) -> tuple[int, int]:
    """``(sign, i)`` with e(b) = e(a) + sign * eps_i."""
    (i, v), = (embed(b, 0) - embed(a, 0)).items()
    return (1 if v > 0 else -1), i


def geometric_diamond(S: Walk, T: Walk, m: int, delta: int) -> Fraction:
    """The diamond at u = delta computed from the embedded points alone."""
    _check_diamond(S, T, m)
    a, c, d, b = S[m - 1], S[m], S[m + 1], T[m]
    x = embed(a, delta)
    s1, i = _changed_column(a, c)
    s2, j = _changed_column(c, d)
    if a == d:
        t1, jj = _changed_column(a, b)
        return s1 * x[i] + t1 * x[jj] + 1
    if S != T:
        return Fraction(0)
    if s1 == s2:
        if i == j:
            return Fraction(-1)
        return s1 * (x[i] - x[j])
    return s1 * (x[i] + x[j])


@lru_cache(maxsize=None)
def _sigma_entry(a, c, d, b) -> Entry | None:
    """(sigma_m)_{ST} where s(m-1)=a, s(m)=c, s(m+1)=d and t(m)=b."""
    slope, offset = _diamond_parts(a, c, c, d)
    dss = RationalFunction(Poly.linear(slope, offset))
    if a != d:
        if b == c:
            return Entry(1 / dss)
        return Entry(RationalFunction(1), (PlainRoot((dss * dss - 1) / (dss * dss)),))
    if b == c:
        return Entry((1 - _king(c) / _king(a)) / dss)
    slope, offset = _diamond_parts(a, b, c, d)
    dst = RationalFunction(Poly.linear(slope, offset))
    return Entry(-1 / (dst * _king(a)), (_root(c), _root(b)))


@lru_cache(maxsize=None)
def _e_entry(a, c, d, b) -> Entry | None:
    if a != d:
        return None
    if b == c:
        return Entry(_king(c) / _king(a))
    return Entry(1 / _king(a), (_root(c), _root(b)))


def diamond_partners(T: Walk, m: int):
    """Omega_m(T): all walks equal to T away from position m."""
    a, d = T[m - 1], T[m + 1]
    up_a, down_a = box_neighbors(a)
    up_d, down_d = box_neighbors(d)
    mids = (up_a | down_a) & (up_d | down_d)
    return [T.replace(m, b) for b in sorted(mids, key=lambda p: (p.size, tuple(p)))]


@dataclass
class GeneratorMatrices:
    basis: list
    sigma: list
    e: list
    kind: str                       # "exact" or "real"
    point: object = None            # evaluation point for real matrices

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def n(self) -> int:
        return self.basis[0].length if self.basis else 0

    def to_json(self) -> str:
        def enc(mat):
            if self.kind == "real":
                return [[repr(float(v)) for v in row] for row in mat]
            return [[None if v is None else v.to_json() for v in row] for row in mat]

        return json.dumps({
            "kind": self.kind,
            "point": None if self.point is None else str(self.point),
            "basis": [[str(p) for p in w] for w in self.basis],
            "sigma": [enc(m) for m in self.sigma],
            "e": [enc(m) for m in self.e],
        }, indent=1)


def _fill(basis, entry_fn, m):
    index = {w: k for k, w in enumerate(basis)}
    size = len(basis)
    mat = [[None] * size for _ in range(size)]
    for col, T in enumerate(basis):
        for S in diamond_partners(T, m):
            row = index.get(S)
            if row is None:
                continue
            mat[row][col] = entry_fn(S[m - 1], S[m], S[m + 1], T[m])
    return mat


def generic_matrices(lam: Partition, n: int) -> GeneratorMatrices:
    lam = Partition(lam)
    if not in_labels(lam, n):
        raise ValueError(f"{lam} is not a label for n={n}")
    basis = enumerate_walks(lam, n)
    sig = [_fill(basis, _sigma_entry, m) for m in range(1, n)]
    es = [_fill(basis, _e_entry, m) for m in range(1, n)]
    return GeneratorMatrices(basis, sig, es, "exact")


def _evaluate(mat, u0):
    size = len(mat)
    out = np.zeros((size, size))
    for i, row in enumerate(mat):
        for j, v in enumerate(row):
            if v is not None:
                out[i, j] = v.value(u0)
    return out


def evaluate_at(mats: GeneratorMatrices, u0) -> GeneratorMatrices:
    """Numeric matrices at ``u = u0``; raises PoleError or RadicandError."""
    if mats.kind != "exact":
        raise ValueError("already numeric")
    return GeneratorMatrices(mats.basis, [_evaluate(m, u0) for m in mats.sigma],
                             [_evaluate(m, u0) for m in mats.e], "real", Fraction(u0))


def restricted_walks(lam: Partition, n: int, delta: int):
    return enumerate_walks(lam, n, delta, restricted=True)


def _real_gauge(mats, basis):
    """Diagonal phases ``g`` with ``g[S]**-1 * M[S][T] * g[T]`` real for every matrix.

    Only powers of ``i`` are needed because every entry is ``i**k`` times a real.
    Raises RadicandError when no such gauge exists.
    """
    size = len(basis)
    phase = [None] * size
    for root in range(size):
        if phase[root] is not None:
            continue
        phase[root] = 0
        stack = [root]
        while stack:
            t = stack.pop()
            for mat in mats:
                for s_ in range(size):
                    k = mat[s_][t]
                    if k is None:
                        continue
                    # need k + phase[t] - phase[s] even
                    want = (k + phase[t]) % 2
                    if phase[s_] is None:
                        phase[s_] = want
                        stack.append(s_)
                    elif phase[s_] % 2 != want:
                        raise RadicandError("no real form on the restricted walks")
    return phase


def simple_matrices(lam: Partition, n: int, delta: int) -> GeneratorMatrices:
    """Matrices of L_n(lam) on delta-restricted walks, generic entries specialised at u = delta.

    Square roots are continued from large positive u, so at negative delta an
    entry can be an odd power of i times a real number. A diagonal change of
    basis by powers of i then makes every matrix real; those matrices are no
    longer symmetric.
    """
    lam = Partition(lam)
    if not in_A_delta(lam, delta):
        raise ValueError(f"{lam} is not delta-restricted for delta={delta}")
    if not in_labels(lam, n):
        raise ValueError(f"{lam} is not a label for n={n}")
    basis = restricted_walks(lam, n, delta)
    size = len(basis)
    exact = [_fill(basis, _sigma_entry, m) for m in range(1, n)] + [_fill(basis, _e_entry, m) for m in range(1, n)]
    phased = []
    for mat in exact:
        rows = [[None] * size for _ in range(size)]
        for i, row in enumerate(mat):
            for j, v in enumerate(row):
                if v is not None:
                    k, x = v.phased_value(delta)
                    if x != 0:
                        rows[i][j] = (k, x)
        phased.append(rows)
    gauge = _real_gauge([[[None if v is None else v[0] for v in row] for row in mat] for mat in phased], basis)
    out = []
    for mat in phased:
        num = np.zeros((size, size))
        for i, row in enumerate(mat):
            for j, v in enumerate(row):
                if v is not None:
                    k, x = v
                    z = (1j) ** ((k + gauge[j] - gauge[i]) % 4) * x
                    num[i, j] = z.real
        out.append(num)
    return GeneratorMatrices(basis, out[: n - 1], out[n - 1:], "real", Fraction(delta))


def coupling_entries(lam: Partition, n: int, delta: int):
    """Generic entries at u = delta from a restricted walk T to a non-restricted S.

    Yields ``(generator, m, S, T, value)``.
    """
    lam = Partition(lam)
    restricted = set(restricted_walks(lam, n, delta))
    for T in sorted(restricted):
        for m in range(1, n):
            for S in diamond_partners(T, m):
                if S in restricted:
                    continue
                args = (S[m - 1], S[m], S[m + 1], T[m])
                for name, fn in (("sigma", _sigma_entry), ("e", _e_entry)):
                    entry = fn(*args)
                    if entry is not None:
                        yield name, m, S, T, abs(entry.complex_value(delta))


def relation_residuals(mats: GeneratorMatrices, delta) -> dict[str, float]:
    """Max-norm residual of every defining relation of B_n(delta)."""
    s = [np.asarray(m, dtype=float) for m in mats.sigma]
    e = [np.asarray(m, dtype=float) for m in mats.e]
    k = len(s)
    size = mats.dim
    one = np.eye(size)
    delta = float(delta)
    out: dict[str, float] = {}

    def put(name, a, b):
        r = float(np.max(np.abs(a - b))) if size else 0.0
        out[name] = max(out.get(name, 0.0), r)

    for i in range(k):
        put("s^2 = 1", s[i] @ s[i], one)
        put("e^2 = delta e", e[i] @ e[i], delta * e[i])
        put("e s = e", e[i] @ s[i], e[i])
        put("s e = e", s[i] @ e[i], e[i])
    for i in range(k - 1):
        j = i + 1
        put("braid", s[i] @ s[j] @ s[i], s[j] @ s[i] @ s[j])
        put("e e' e = e", e[i] @ e[j] @ e[i], e[i])
        put("e e' e = e", e[j] @ e[i] @ e[j], e[j])
        put("e s' e = e", e[i] @ s[j] @ e[i], e[i])
        put("e s' e = e", e[j] @ s[i] @ e[j], e[j])
        put("s e' e = s' e", s[i] @ e[j] @ e[i], s[j] @ e[i])
        put("e e' s = e s'", e[i] @ e[j] @ s[i], e[i] @ s[j])
    for i in range(k):
        for j in range(i + 2, k):
            put("far s s", s[i] @ s[j], s[j] @ s[i])
            put("far s e", s[i] @ e[j], e[j] @ s[i])
            put("far e s", e[i] @ s[j], s[j] @ e[i])
            put("far e e", e[i] @ e[j], e[j] @ e[i])
    return out


@dataclass
class RelationReport:
    residuals: dict
    tol: float

    @property
    def passed(self) -> bool:
        return all(v <= self.tol for v in self.residuals.values())

    @property
    def worst(self) -> float:
        return max(self.residuals.values(), default=0.0)


def check_relations(mats: GeneratorMatrices, delta, tol: float = 1e-9) -> RelationReport:
    if mats.kind != "real":
        raise ValueError("evaluate the matrices first")
    return RelationReport(relation_residuals(mats, delta), tol)
