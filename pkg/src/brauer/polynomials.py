"""Univariate polynomials and rational functions in ``u`` with Fraction coefficients."""

from __future__ import annotations

from fractions import Fraction


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a root of its denominator."""


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Coefficients stored lowest degree first; the zero polynomial has no coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _strip(Fraction(c) for c in coeffs)

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def linear(cls, a, b) -> "Poly":
        """``a u + b``."""
        return cls([b, a])

    @classmethod
    def from_roots(cls, roots, scale=1) -> "Poly":
        p = cls([scale])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = other if isinstance(other, Poly) else Poly.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-(other if isinstance(other, Poly) else Poly.const(other)))

    def __rsub__(self, other):
        return Poly.const(other) - self

    def __mul__(self, other):
        other = other if isinstance(other, Poly) else Poly.const(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.lead
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + other.degree] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quot), Poly(rem[: other.degree] if other.degree > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        return self * (1 / self.lead) if self.coeffs else self

    def __call__(self, u):
        acc = u * 0
        for c in reversed(self.coeffs):
            acc = acc * u + c
        return acc

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("u" if k == 1 else f"u^{k}")
            if mono and c in (1, -1):
                coef = "-" if c == -1 else ""
            else:
                coef = str(c)
            terms.append(f"{coef}{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self):
        return [str(c) for c in self.coeffs]


def gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else Poly.const(1)


class RationalFunction:
    """``num / den`` kept reduced with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, Poly) else Poly.const(num)
        den = Poly.const(1) if den is None else (den if isinstance(den, Poly) else Poly.const(den))
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = Poly(), Poly.const(1)
            return
        g = gcd(num, den)
        num, den = num // g, den // g
        lead = den.lead
        self.num, self.den = num * (1 / lead), den * (1 / lead)

    @classmethod
    def u(cls) -> "RationalFunction":
        return cls(Poly([0, 1]))

    @classmethod
    def from_king(cls, king) -> "RationalFunction":
        return cls(Poly.from_roots(king.roots), Poly.const(king.denominator))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _coerce(self, other):
        return other if isinstance(other, RationalFunction) else RationalFunction(other)

    def __add__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __eq__(self, other):
        other = self._coerce(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def has_pole_at(self, u0) -> bool:
        return self.den(Fraction(u0)) == 0

    def __call__(self, u0):
        u0 = Fraction(u0)
        d = self.den(u0)
        if d == 0:
            raise PoleError(f"{self} has a pole at u = {u0}")
        return self.num(u0) / d

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        if self.den == Poly.const(1):
            return str(self.num)
        return f"({self.num})/({self.den})"

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}
