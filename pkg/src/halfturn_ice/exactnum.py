"""Exact arithmetic in the quadratic field Q(zeta), zeta a primitive sixth
root of unity.

Every element is written p + q*zeta with rational p, q, reduced by the
minimal polynomial zeta^2 = zeta - 1.  Rationals are `fractions.Fraction`
(always lowest terms, positive denominator), so equality is structural and
all arithmetic is exact.  Conjugation sends zeta to 1 - zeta, which is both
complex conjugation and the nontrivial field automorphism; the norm
x * conj(x) = p^2 + p*q + q^2 is rational and positive for x != 0, which
gives exact inversion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]
CycloLike = Union[int, Fraction, "Cyclo"]


@dataclass(frozen=True)
class Cyclo:
    """Field element p + q*zeta with zeta^2 = zeta - 1 (zeta = exp(i*pi/3))."""

    p: Fraction
    q: Fraction

    def __init__(self, p: Rational = 0, q: Rational = 0):
        object.__setattr__(self, "p", Fraction(p))
        object.__setattr__(self, "q", Fraction(q))

    @staticmethod
    def of(value: CycloLike) -> Cyclo:
        """Coerce an int, Fraction or Cyclo into the field."""
        if isinstance(value, Cyclo):
            return value
        return Cyclo(value)

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def __bool__(self) -> bool:
        return self.p != 0 or self.q != 0

    def __add__(self, other: CycloLike) -> Cyclo:
        o = Cyclo.of(other)
        return Cyclo(self.p + o.p, self.q + o.q)

    __radd__ = __add__

    def __neg__(self) -> Cyclo:
        return Cyclo(-self.p, -self.q)

    def __sub__(self, other: CycloLike) -> Cyclo:
        return self + (-Cyclo.of(other))

    def __rsub__(self, other: CycloLike) -> Cyclo:
        return Cyclo.of(other) + (-self)

    def __mul__(self, other: CycloLike) -> Cyclo:
        o = Cyclo.of(other)
        # (p1 + q1 z)(p2 + q2 z), then z^2 -> z - 1.
        cross = self.p * o.q + self.q * o.p
        sq = self.q * o.q
        return Cyclo(self.p * o.p - sq, cross + sq)

    __rmul__ = __mul__

    def conj(self) -> Cyclo:
        """The automorphism zeta -> 1 - zeta (complex conjugation)."""
        return Cyclo(self.p + self.q, -self.q)

    def norm(self) -> Fraction:
        """x * conj(x), always rational and nonnegative."""
        return self.p * self.p + self.p * self.q + self.q * self.q

    def inverse(self) -> Cyclo:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        c = self.conj()
        return Cyclo(c.p / n, c.q / n)

    def __truediv__(self, other: CycloLike) -> Cyclo:
        return self * Cyclo.of(other).inverse()

    def __rtruediv__(self, other: CycloLike) -> Cyclo:
        return Cyclo.of(other) * self.inverse()

    def __pow__(self, exponent: int) -> Cyclo:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Cyclo(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Cyclo):
            return self.p == other.p and self.q == other.q
        if isinstance(other, (int, Fraction)):
            return self.q == 0 and self.p == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.q == 0:
            return hash(self.p)
        return hash((self.p, self.q))

    def __str__(self) -> str:
        if self.q == 0:
            return str(self.p)
        if self.p == 0:
            return f"{self.q}*zeta"
        sign = "+" if self.q > 0 else "-"
        return f"{self.p} {sign} {abs(self.q)}*zeta"

    def __repr__(self) -> str:
        return f"Cyclo({self.p!r}, {self.q!r})"


ZETA = Cyclo(0, 1)
ONE = Cyclo(1)
ZERO = Cyclo(0)


def sigma(x: Cyclo) -> Cyclo:
    """sigma(x) = x - 1/x, the ubiquitous weight combination."""
    return x - x.inverse()
