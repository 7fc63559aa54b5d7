"""Exact coefficient fields: rationals, prime fields and Q(zeta_6)."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Any, Optional

from sympy import isprime, nextprime
from sympy.ntheory import primitive_root

MAX_PRIME = 1 << 62


class FieldError(ValueError):
    """Raised for malformed field specifications or element text."""


class UnsupportedFieldError(FieldError):
    """Raised when an operation needs structure the field does not have."""


class FieldKind(str, Enum):
    RATIONALS = "rationals"
    PRIME_FIELD = "prime_field"
    CYCLOTOMIC6 = "cyclotomic6"


@dataclass(frozen=True, slots=True)
class FieldSpec:
    kind: FieldKind
    modulus: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind is FieldKind.PRIME_FIELD:
            if self.modulus is None or not 2 <= self.modulus < MAX_PRIME:
                raise FieldError(f"prime modulus out of range: {self.modulus}")
            if not isprime(self.modulus):
                raise FieldError(f"modulus {self.modulus} is not prime")
        elif self.modulus is not None:
            raise FieldError(f"{self.kind.value} takes no modulus")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(FieldKind.RATIONALS)

    @classmethod
    def prime_field(cls, p: int) -> "FieldSpec":
        return cls(FieldKind.PRIME_FIELD, int(p))

    @classmethod
    def cyclotomic6(cls) -> "FieldSpec":
        return cls(FieldKind.CYCLOTOMIC6)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Accept "QQ", "rationals", "cyclotomic6", "GF(p)", "prime_field(p)" or a bare prime."""
        cleaned = text.strip().lower()
        if cleaned in {"qq", "q", "rationals"}:
            return cls.rationals()
        if cleaned in {"cyclotomic6", "qq(w)", "q(w)"}:
            return cls.cyclotomic6()
        match = re.fullmatch(r"(?:gf|f|prime_field)\((\d+)\)|(\d+)", cleaned)
        if not match:
            raise FieldError(f"unrecognised field: {text!r}")
        return cls.prime_field(int(match.group(1) or match.group(2)))

    def __str__(self) -> str:
        if self.kind is FieldKind.PRIME_FIELD:
            return f"GF({self.modulus})"
        return self.kind.value


@dataclass(frozen=True, slots=True)
class Cyc6:
    """a + b*w with w a primitive 6th root of unity, w^2 = w - 1."""

    a: Fraction
    b: Fraction


_RATIONAL_TEXT = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*")
_CYCLOTOMIC_TEXT = re.compile(
    r"\s*(?:(?P<a>[+-]?\d+(?:/\d+)?)\s*)?"
    r"(?:(?P<sign>[+-])?\s*(?:(?P<b>\d+(?:/\d+)?)\s*\*\s*)?w\s*)?"
)


class Field:
    """Base class; concrete fields implement the element operations."""

    spec: FieldSpec

    def __init__(self, spec: FieldSpec) -> None:
        self.spec = spec
        self.zero = self.from_int(0)
        self.one = self.from_int(1)

    # subclasses override
    def from_int(self, value: int) -> Any:
        raise NotImplementedError

    def from_fraction(self, value: Fraction) -> Any:
        raise NotImplementedError

    def add(self, x: Any, y: Any) -> Any:
        raise NotImplementedError

    def sub(self, x: Any, y: Any) -> Any:
        raise NotImplementedError

    def mul(self, x: Any, y: Any) -> Any:
        raise NotImplementedError

    def neg(self, x: Any) -> Any:
        raise NotImplementedError

    def inv(self, x: Any) -> Any:
        raise NotImplementedError

    def parse(self, text: str) -> Any:
        raise NotImplementedError

    def format(self, x: Any) -> str:
        raise NotImplementedError

    def random_element(self, rng: random.Random, bound: int = 50) -> Any:
        raise NotImplementedError

    def has_sixth_root(self) -> bool:
        return False

    @property
    def characteristic(self) -> int:
        return 0

    def is_zero(self, x: Any) -> bool:
        return x == self.zero

    def eq(self, x: Any, y: Any) -> bool:
        return x == y

    def div(self, x: Any, y: Any) -> Any:
        return self.mul(x, self.inv(y))

    def pow(self, x: Any, k: int) -> Any:
        if k < 0:
            x, k = self.inv(x), -k
        result = self.one
        while k:
            if k & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            k >>= 1
        return result

    def coerce(self, value: Any) -> Any:
        """Lift ints, Fractions and element text into the field."""
        if isinstance(value, bool):
            raise FieldError("booleans are not field elements")
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, Fraction):
            return self.from_fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        return value

    def __repr__(self) -> str:
        return f"Field({self.spec})"


class RationalField(Field):
    def from_int(self, value: int) -> Fraction:
        return Fraction(value)

    def from_fraction(self, value: Fraction) -> Fraction:
        return value

    def add(self, x: Fraction, y: Fraction) -> Fraction:
        return x + y

    def sub(self, x: Fraction, y: Fraction) -> Fraction:
        return x - y

    def mul(self, x: Fraction, y: Fraction) -> Fraction:
        return x * y

    def neg(self, x: Fraction) -> Fraction:
        return -x

    def inv(self, x: Fraction) -> Fraction:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / x

    def parse(self, text: str) -> Fraction:
        match = _RATIONAL_TEXT.fullmatch(text)
        if not match:
            raise FieldError(f"not a rational: {text!r}")
        num, den = match.groups()
        if den is not None and int(den) == 0:
            raise FieldError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den or 1))

    def format(self, x: Fraction) -> str:
        return str(x)

    def random_element(self, rng: random.Random, bound: int = 50) -> Fraction:
        return Fraction(rng.randint(-bound, bound))


class PrimeField(Field):
    def __init__(self, spec: FieldSpec) -> None:
        self.p = int(spec.modulus)
        super().__init__(spec)

    @property
    def characteristic(self) -> int:
        return self.p

    def from_int(self, value: int) -> int:
        return value % self.p

    def from_fraction(self, value: Fraction) -> int:
        if value.denominator % self.p == 0:
            raise UnsupportedFieldError(f"{value} has no image in GF({self.p})")
        return value.numerator * pow(value.denominator, -1, self.p) % self.p

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.p

    def sub(self, x: int, y: int) -> int:
        return (x - y) % self.p

    def mul(self, x: int, y: int) -> int:
        return x * y % self.p

    def neg(self, x: int) -> int:
        return -x % self.p

    def inv(self, x: int) -> int:
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def parse(self, text: str) -> int:
        match = _RATIONAL_TEXT.fullmatch(text)
        if not match:
            raise FieldError(f"not an element of GF({self.p}): {text!r}")
        num, den = match.groups()
        return self.from_fraction(Fraction(int(num), int(den or 1)))

    def format(self, x: int) -> str:
        return str(x)

    def random_element(self, rng: random.Random, bound: int = 50) -> int:
        return rng.randrange(self.p)

    def has_sixth_root(self) -> bool:
        return self.p % 6 == 1


class Cyclotomic6Field(Field):
    def from_int(self, value: int) -> Cyc6:
        return Cyc6(Fraction(value), Fraction(0))

    def from_fraction(self, value: Fraction) -> Cyc6:
        return Cyc6(value, Fraction(0))

    def add(self, x: Cyc6, y: Cyc6) -> Cyc6:
        return Cyc6(x.a + y.a, x.b + y.b)

    def sub(self, x: Cyc6, y: Cyc6) -> Cyc6:
        return Cyc6(x.a - y.a, x.b - y.b)

    def mul(self, x: Cyc6, y: Cyc6) -> Cyc6:
        # (a + bw)(c + dw) with w^2 = w - 1
        bd = x.b * y.b
        return Cyc6(x.a * y.a - bd, x.a * y.b + x.b * y.a + bd)

    def neg(self, x: Cyc6) -> Cyc6:
        return Cyc6(-x.a, -x.b)

    def inv(self, x: Cyc6) -> Cyc6:
        norm = x.a * x.a + x.a * x.b + x.b * x.b
        if norm == 0:
            raise ZeroDivisionError("inverse of zero")
        return Cyc6((x.a + x.b) / norm, -x.b / norm)

    def parse(self, text: str) -> Cyc6:
        cleaned = text.strip()
        if cleaned.startswith("(") and cleaned.endswith(")"):
            cleaned = cleaned[1:-1]
        match = _CYCLOTOMIC_TEXT.fullmatch(cleaned)
        if not cleaned or not match:
            raise FieldError(f"not an element of Q(w): {text!r}")
        a = Fraction(match.group("a")) if match.group("a") else Fraction(0)
        has_w = cleaned.rstrip().endswith("w")
        b = Fraction(0)
        if has_w:
            b = Fraction(match.group("b")) if match.group("b") else Fraction(1)
            if match.group("sign") == "-":
                b = -b
            elif match.group("sign") is None and match.group("a"):
                raise FieldError(f"missing sign before w in {text!r}")
        return Cyc6(a, b)

    def format(self, x: Cyc6) -> str:
        if x.b == 0:
            return str(x.a)
        sign = "-" if x.b < 0 else "+"
        return f"{x.a}{sign}{abs(x.b)}*w"

    def random_element(self, rng: random.Random, bound: int = 50) -> Cyc6:
        return Cyc6(Fraction(rng.randint(-bound, bound)), Fraction(rng.randint(-bound, bound)))

    def has_sixth_root(self) -> bool:
        return True


@lru_cache(maxsize=None)
def make_field(spec: FieldSpec) -> Field:
    """Return the shared field handle for ``spec``."""
    if spec.kind is FieldKind.RATIONALS:
        return RationalField(spec)
    if spec.kind is FieldKind.PRIME_FIELD:
        return PrimeField(spec)
    return Cyclotomic6Field(spec)


def primitive_sixth_root(field: Field) -> Any:
    """w itself over Q(w); g^((p-1)/6) for the smallest primitive root g of F_p."""
    if isinstance(field, Cyclotomic6Field):
        return Cyc6(Fraction(0), Fraction(1))
    if isinstance(field, PrimeField) and field.has_sixth_root():
        generator = primitive_root(field.p)
        return pow(generator, (field.p - 1) // 6, field.p)
    raise UnsupportedFieldError(f"{field.spec} has no primitive 6th root of unity")


def sixth_roots_of_unity(field: Field) -> list[Any]:
    """[w^0, ..., w^5] for the field's chosen primitive root w."""
    omega = primitive_sixth_root(field)
    return [field.pow(omega, k) for k in range(6)]


def seeded_primes(
    rng: random.Random, count: int, low: int = 10_000, high: int = 60_000, exclude: tuple[int, ...] = ()
) -> list[int]:
    """``count`` distinct primes above random points of [low, high), reproducible from ``rng``."""
    primes: list[int] = []
    while len(primes) < count:
        p = int(nextprime(rng.randrange(low, high)))
        if p not in primes and p not in exclude:
            primes.append(p)
    return primes


def multiplicative_order(field: Field, x: Any, bound: int = 6) -> Optional[int]:
    """Smallest k <= bound with x^k = 1, or None."""
    power = x
    for k in range(1, bound + 1):
        if power == field.one:
            return k
        power = field.mul(power, x)
    return None


__all__ = [
    "Cyc6",
    "Field",
    "FieldError",
    "FieldKind",
    "FieldSpec",
    "MAX_PRIME",
    "make_field",
    "multiplicative_order",
    "primitive_sixth_root",
    "seeded_primes",
    "sixth_roots_of_unity",
    "UnsupportedFieldError",
]
