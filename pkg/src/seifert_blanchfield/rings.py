"""Base rings: the integers, the rationals and prime fields.

Elements are plain Python values (``int`` for Z and Z/p, ``Fraction`` for Q)
kept in canonical form by :meth:`BaseRing.normalize`.  All three rings carry
the identity involution.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotInvertible, ValidationError

INTEGERS = "Z"
RATIONALS = "Q"
PRIME_FIELD = "Fp"


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class BaseRing:
    tag: str
    p: int = 0

    def __post_init__(self):
        if self.tag not in (INTEGERS, RATIONALS, PRIME_FIELD):
            raise ValidationError(f"unknown ring tag {self.tag!r}")
        if self.tag == PRIME_FIELD and not _is_prime(self.p):
            raise ValidationError(f"{self.p} is not prime")

    # -- construction -------------------------------------------------------

    @classmethod
    def parse(cls, text):
        """Parse the CLI spelling ``z``, ``q`` or ``fp:<p>``."""
        t = text.strip().lower()
        if t in ("z", "zz", "integers"):
            return ZZ
        if t in ("q", "qq", "rationals"):
            return QQ
        if t.startswith("fp:"):
            try:
                return cls(PRIME_FIELD, int(t[3:]))
            except ValueError:
                raise ValidationError(f"bad prime in ring spec {text!r}") from None
        raise ValidationError(f"unknown ring {text!r}")

    def __str__(self):
        if self.tag == PRIME_FIELD:
            return f"fp:{self.p}"
        return self.tag.lower()

    @property
    def is_field(self):
        return self.tag != INTEGERS

    # -- elements -----------------------------------------------------------

    def normalize(self, x):
        if self.tag == INTEGERS:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValidationError(f"{x} is not an integer")
                return x.numerator
            if not isinstance(x, int):
                raise ValidationError(f"{x!r} is not an integer")
            return int(x)
        if self.tag == RATIONALS:
            return Fraction(x)
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    def parse_element(self, text):
        text = str(text).strip()
        if self.tag == RATIONALS:
            return Fraction(text)
        if "/" in text:
            return self.normalize(Fraction(text))
        return self.normalize(int(text))

    def format_element(self, x):
        return str(x)

    def zero(self):
        return self.normalize(0)

    def one(self):
        return self.normalize(1)

    def add(self, a, b):
        if self.tag == PRIME_FIELD:
            return (a + b) % self.p
        return a + b

    def sub(self, a, b):
        if self.tag == PRIME_FIELD:
            return (a - b) % self.p
        return a - b

    def neg(self, a):
        if self.tag == PRIME_FIELD:
            return (-a) % self.p
        return -a

    def mul(self, a, b):
        if self.tag == PRIME_FIELD:
            return (a * b) % self.p
        return a * b

    def involute(self, a):
        # only trivial involutions are instantiated
        return a

    def is_unit(self, a):
        if self.tag == INTEGERS:
            return a in (1, -1)
        return a != 0

    def inv(self, a):
        if not self.is_unit(a):
            raise NotInvertible(f"{a} is not a unit in {self}")
        if self.tag == INTEGERS:
            return a
        if self.tag == RATIONALS:
            return 1 / a
        return pow(a, -1, self.p)

    def divides(self, a, b):
        """Does ``a`` divide ``b``?"""
        if self.tag == INTEGERS:
            return b == 0 if a == 0 else b % a == 0
        return a != 0 or b == 0

    def exact_div(self, b, a):
        """Return ``b / a``, which must exist in the ring."""
        if self.tag == INTEGERS:
            q, r = divmod(b, a)
            if r:
                raise NotInvertible(f"{a} does not divide {b}")
            return q
        if self.tag == RATIONALS:
            return b / a
        return (b * pow(a, -1, self.p)) % self.p


ZZ = BaseRing(INTEGERS)
QQ = BaseRing(RATIONALS)


def GF(p):
    return BaseRing(PRIME_FIELD, p)
