"""Exact coefficient rings: Q, F_p and Z/m.

Coefficients are stored as plain Python numbers so that polynomial code can
use native operators and normalize once at the end:

    Q      -> int when integral, otherwise Fraction
    F_p,Z/m -> int residue in [0, m)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import NonUnit


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class Ring:
    """A coefficient ring. ``kind`` is one of "Q", "Fp", "Zmod"."""

    kind: str
    modulus: int = 0

    def __post_init__(self):
        if self.kind == "Q":
            if self.modulus != 0:
                raise ValueError("Q takes no modulus")
        elif self.kind == "Fp":
            if not _is_prime(self.modulus):
                raise ValueError(f"{self.modulus} is not prime")
        elif self.kind == "Zmod":
            if self.modulus < 2:
                raise ValueError("modulus must be at least 2")
        else:
            raise ValueError(f"unknown ring kind {self.kind!r}")

    # descriptors

    @property
    def is_field(self) -> bool:
        return self.kind == "Q" or self.kind == "Fp" or _is_prime(self.modulus)

    @property
    def is_domain(self) -> bool:
        return self.is_field

    @property
    def characteristic(self) -> int:
        return self.modulus

    def __str__(self):
        if self.kind == "Q":
            return "Q"
        return f"{self.kind}:{self.modulus}"

    # element handling

    def normalize(self, x):
        """Canonical representative of ``x`` (int, Fraction or numeric string)."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if self.kind == "Q":
            if isinstance(x, Fraction):
                return x.numerator if x.denominator == 1 else x
            return int(x)
        m = self.modulus
        if isinstance(x, Fraction):
            if x.denominator == 1:
                return x.numerator % m
            den = x.denominator % m
            if gcd(den, m) != 1:
                raise NonUnit(f"denominator {x.denominator} is not a unit mod {m}")
            return x.numerator * pow(den, -1, m) % m
        return int(x) % m

    def zero(self):
        return 0

    def one(self):
        return self.normalize(1)

    def is_zero(self, x) -> bool:
        return x == 0

    def add(self, a, b):
        return self.normalize(a + b)

    def sub(self, a, b):
        return self.normalize(a - b)

    def mul(self, a, b):
        return self.normalize(a * b)

    def neg(self, a):
        return self.normalize(-a)

    def is_unit(self, a) -> bool:
        a = self.normalize(a)
        if self.kind == "Q":
            return a != 0
        return gcd(a, self.modulus) == 1

    def inv(self, a):
        a = self.normalize(a)
        if not self.is_unit(a):
            raise NonUnit(f"{self.fmt(a)} is not a unit in {self}")
        if self.kind == "Q":
            return self.normalize(Fraction(1) / a)
        return pow(a, -1, self.modulus)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def content_is_unit(self, values) -> bool:
        """McCoy test: no nonzero scalar annihilates every value."""
        if self.kind == "Q":
            return any(v != 0 for v in values)
        g = self.modulus
        for v in values:
            g = gcd(g, v)
        return g == 1

    def fmt(self, a) -> str:
        return str(a)

    def elem(self, x) -> "RingElem":
        return RingElem(self, self.normalize(x))


QQ = Ring("Q")


def prime_field(p: int) -> Ring:
    return Ring("Fp", p)


def mod_ring(m: int) -> Ring:
    return Ring("Zmod", m)


def parse_ring(text: str) -> Ring:
    """Parse ``Q``, ``Fp:<p>`` or ``Zmod:<m>``."""
    text = text.strip()
    if text == "Q":
        return QQ
    kind, _, num = text.partition(":")
    if kind in ("Fp", "Zmod") and num.strip().isdigit():
        return Ring(kind, int(num))
    raise ValueError(f"bad ring descriptor {text!r}")


@dataclass(frozen=True)
class RingElem:
    """A ring element bundled with its ring, for standalone arithmetic."""

    ring: Ring
    value: object

    def _other(self, other):
        if isinstance(other, RingElem):
            if other.ring != self.ring:
                raise ValueError("elements of different rings")
            return other.value
        return self.ring.normalize(other)

    def __add__(self, other):
        return RingElem(self.ring, self.ring.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return RingElem(self.ring, self.ring.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return RingElem(self.ring, self.ring.sub(self._other(other), self.value))

    def __mul__(self, other):
        return RingElem(self.ring, self.ring.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElem(self.ring, self.ring.neg(self.value))

    def is_unit(self) -> bool:
        return self.ring.is_unit(self.value)

    def try_inverse(self) -> "RingElem":
        return RingElem(self.ring, self.ring.inv(self.value))

    def __str__(self):
        return self.ring.fmt(self.value)
