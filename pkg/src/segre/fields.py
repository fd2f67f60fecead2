"""Exact scalar arithmetic: arbitrary-precision rationals and odd prime fields.

A field object owns the arithmetic; elements are plain Python values
(`fractions.Fraction` for the rationals, `int` in ``[0, p)`` for a prime
field).  Keeping elements unboxed makes matrices and point sets cheap and
hashable, and lets the prime-field linear algebra drop into vectorized
integer kernels.
"""

from __future__ import annotations

from fractions import Fraction

# Largest accepted prime modulus: a product of two reduced residues times a
# short dot-product length must stay inside int64 for the vectorized kernels.
MAX_PRIME = 1 << 26


def is_prime(n: int) -> bool:
    """Trial-division primality test; adequate for the moduli accepted here."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class RationalField:
    """The field of rational numbers.

    Elements are `Fraction` values, which are always stored in lowest terms
    with a positive denominator.
    """

    label = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def convert(self, x) -> Fraction:
        """Coerce an int, Fraction, or string like ``"3"`` / ``"-2/7"``."""
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into Q")

    def format(self, x: Fraction) -> str:
        return str(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def pow(self, a, n: int):
        return a ** n

    def to_json(self) -> dict:
        return {"type": "Q"}

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("Q")

    def __repr__(self) -> str:
        return "QQ"


class PrimeField:
    """The field with ``p`` elements, ``p`` an odd prime.

    Elements are plain ints reduced into ``[0, p)``.  The modulus is capped
    at ``MAX_PRIME`` so products never leave machine range in the array
    kernels.
    """

    label_prefix = "F"
    zero = 0
    one = 1

    def __init__(self, p: int):
        if not isinstance(p, int):
            raise TypeError("prime modulus must be an int")
        if p == 2:
            raise ValueError("modulus must be an odd prime")
        if p > MAX_PRIME:
            raise ValueError(f"modulus {p} exceeds the supported bound {MAX_PRIME}")
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p

    @property
    def label(self) -> str:
        return f"F{self.p}"

    def convert(self, x) -> int:
        if isinstance(x, bool):
            raise TypeError("cannot coerce bool into a prime field")
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, str):
            return int(x, 10) % self.p
        raise TypeError(f"cannot coerce {type(x).__name__} into F_{self.p}")

    def format(self, x: int) -> str:
        return str(x)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def pow(self, a, n: int):
        return pow(a, n, self.p)

    def to_json(self) -> dict:
        return {"type": "Fp", "p": self.p}

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("Fp", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


#: Shared instance of the rationals.
QQ = RationalField()


def field_from_json(obj: dict):
    """Rebuild a field from its JSON tag, ``{"type":"Q"}`` or ``{"type":"Fp","p":...}``."""
    kind = obj.get("type")
    if kind == "Q":
        return QQ
    if kind == "Fp":
        return PrimeField(int(obj["p"]))
    raise ValueError(f"unknown field tag {obj!r}")
