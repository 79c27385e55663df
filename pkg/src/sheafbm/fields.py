"""Exact coefficient fields: the rationals and odd prime fields.

Elements of the rationals are `fractions.Fraction`; elements of F_p are ints
in [0, p).  No floating point is used anywhere in the engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class FieldError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Base field descriptor.

    kind is "rationals" (characteristic 0) or "prime-field" (odd prime p).
    Characteristic 2 is rejected outright: the GKM condition can never hold
    over it, so no downstream computation is meaningful.
    """

    kind: str
    characteristic: int = 0

    def __post_init__(self):
        if self.kind == "rationals":
            if self.characteristic != 0:
                raise FieldError("rationals have characteristic 0")
        elif self.kind == "prime-field":
            p = self.characteristic
            if p == 2:
                raise FieldError("characteristic 2 is excluded (GKM assumption)")
            if not _is_prime(p):
                raise FieldError(f"characteristic {p} is not prime")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def rationals() -> "FieldSpec":
        return FieldSpec("rationals", 0)

    @staticmethod
    def prime(p: int) -> "FieldSpec":
        return FieldSpec("prime-field", p)

    @staticmethod
    def _unchecked(kind: str, characteristic: int) -> "FieldSpec":
        # Bypasses validation; exists so negative controls (e.g. the
        # characteristic-2 rejection in gkm_check) can be exercised.
        obj = object.__new__(FieldSpec)
        object.__setattr__(obj, "kind", kind)
        object.__setattr__(obj, "characteristic", characteristic)
        return obj

    # -- element operations ---------------------------------------------

    @property
    def is_rationals(self) -> bool:
        return self.kind == "rationals"

    def zero(self):
        return Fraction(0) if self.is_rationals else 0

    def one(self):
        return Fraction(1) if self.is_rationals else 1 % self.characteristic

    def of_int(self, n: int):
        if self.is_rationals:
            return Fraction(n)
        return n % self.characteristic

    def add(self, a, b):
        if self.is_rationals:
            return a + b
        return (a + b) % self.characteristic

    def sub(self, a, b):
        if self.is_rationals:
            return a - b
        return (a - b) % self.characteristic

    def mul(self, a, b):
        if self.is_rationals:
            return a * b
        return (a * b) % self.characteristic

    def neg(self, a):
        if self.is_rationals:
            return -a
        return (-a) % self.characteristic

    def inv(self, a):
        if self.is_rationals:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / a
        a %= self.characteristic
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.characteristic - 2, self.characteristic)

    def to_json(self) -> dict:
        return {"kind": self.kind, "characteristic": self.characteristic}

    @staticmethod
    def from_json(data: dict) -> "FieldSpec":
        return FieldSpec(data["kind"], int(data["characteristic"]))


def parse_field(text: str) -> FieldSpec:
    """Parse a CLI field spec: "q" for the rationals or "fp:P" for F_P."""
    if text == "q":
        return FieldSpec.rationals()
    if text.startswith("fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise FieldError(f"bad prime in field spec {text!r}")
        return FieldSpec.prime(p)
    raise FieldError(f"unknown field spec {text!r} (expected 'q' or 'fp:P')")
