"""Sparse weighted polynomials over the exact fields of :mod:`unproj.coeff`.

A polynomial is an immutable mapping from dense exponent tuples to nonzero
field elements. All monomial comparisons use the weighted degree reverse
lexicographic order of the owning :class:`RingDescriptor`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from .coeff import Cyclotomic6Field, Field, FieldSpec, make_field

MAX_EXPONENT = 0xFFFF
INHOMOGENEOUS = "inhomogeneous"

Monomial = Tuple[int, ...]


class PolynomialError(ValueError):
    """Base class for polynomial construction and arithmetic errors."""


class RingMismatchError(PolynomialError):
    pass


class UnknownVariableError(PolynomialError):
    pass


class UndefinedDegreeError(PolynomialError):
    pass


class ExponentOverflowError(PolynomialError):
    pass


class PolySyntaxError(PolynomialError):
    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class RingDescriptor:
    variables: Tuple[str, ...]
    weights: Tuple[int, ...]
    field_spec: FieldSpec
    # degrees used for homogeneity and Hilbert series; 0 marks a parameter
    grading: Optional[Tuple[int, ...]] = None
    _index: Dict[str, int] = dc_field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if len(self.variables) != len(self.weights):
            raise PolynomialError("one weight per variable is required")
        if len(set(self.variables)) != len(self.variables):
            seen = [v for v in self.variables if self.variables.count(v) > 1]
            raise PolynomialError(f"duplicate variable name: {seen[0]}")
        if any(w <= 0 for w in self.weights):
            raise PolynomialError("weights must be strictly positive")
        grading = self.weights if self.grading is None else tuple(int(g) for g in self.grading)
        if len(grading) != len(self.weights):
            raise PolynomialError("one grading degree per variable is required")
        if any(g < 0 for g in grading):
            raise PolynomialError("grading degrees must be non-negative")
        object.__setattr__(self, "grading", grading)
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(self.variables)})

    @property
    def field(self) -> Field:
        return make_field(self.field_spec)

    @property
    def ngens(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariableError(f"unknown variable {name!r}") from None

    def has_variable(self, name: str) -> bool:
        return name in self._index

    def weight(self, name: str) -> int:
        return self.weights[self.index(name)]

    def monomial_degree(self, monomial: Monomial) -> int:
        return sum(w * e for w, e in zip(self.weights, monomial))

    def grade(self, monomial: Monomial) -> int:
        return sum(g * e for g, e in zip(self.grading, monomial))

    def has_parameters(self) -> bool:
        return 0 in self.grading

    def order_key(self, monomial: Monomial) -> Tuple[int, Tuple[int, ...]]:
        """Sort key: larger key means larger monomial in weighted degrevlex."""
        return (self.monomial_degree(monomial), tuple(-e for e in reversed(monomial)))

    def heap_key(self, monomial: Monomial) -> Tuple[int, Tuple[int, ...]]:
        """Min-heap key that pops the largest monomial first."""
        return (-self.monomial_degree(monomial), tuple(reversed(monomial)))

    def one_monomial(self) -> Monomial:
        return (0,) * len(self.variables)

    def variable_monomial(self, name: str, power: int = 1) -> Monomial:
        exps = [0] * len(self.variables)
        exps[self.index(name)] = power
        return tuple(exps)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, value: Any) -> "Polynomial":
        c = self.field.coerce(value)
        return Polynomial(self, {self.one_monomial(): c})

    def gen(self, name: str) -> "Polynomial":
        return Polynomial(self, {self.variable_monomial(name): self.field.one})

    def gens(self) -> Dict[str, "Polynomial"]:
        return {name: self.gen(name) for name in self.variables}

    def term(self, coefficient: Any, exponents: Mapping[str, int]) -> "Polynomial":
        exps = [0] * len(self.variables)
        for name, power in exponents.items():
            exps[self.index(name)] = power
        return Polynomial(self, {tuple(exps): self.field.coerce(coefficient)})

    def with_field(self, spec: FieldSpec) -> "RingDescriptor":
        return RingDescriptor(self.variables, self.weights, spec, self.grading)

    def to_dict(self) -> Dict[str, object]:
        payload: Dict[str, object] = {
            "variables": list(self.variables),
            "weights": list(self.weights),
            "field": str(self.field_spec),
        }
        if self.grading != self.weights:
            payload["grading"] = list(self.grading)
        return payload


def make_ring(
    variables: Sequence[str],
    weights: Sequence[int],
    field_spec: FieldSpec,
    grading: Optional[Sequence[int]] = None,
) -> RingDescriptor:
    return RingDescriptor(
        tuple(variables), tuple(weights), field_spec, None if grading is None else tuple(grading)
    )


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    product = tuple(x + y for x, y in zip(a, b))
    if any(e > MAX_EXPONENT for e in product):
        raise ExponentOverflowError("exponent exceeds 16 bits")
    return product


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_quotient(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomials_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def support(monomial: Monomial) -> frozenset:
    return frozenset(i for i, e in enumerate(monomial) if e)


class Polynomial:
    """Immutable sparse polynomial; ``terms`` never stores zero coefficients."""

    __slots__ = ("ring", "terms", "_lm", "_hash")

    def __init__(self, ring: RingDescriptor, terms: Mapping[Monomial, Any]) -> None:
        zero = ring.field.zero
        self.ring = ring
        self.terms: Dict[Monomial, Any] = {m: c for m, c in terms.items() if c != zero}
        self._lm: Optional[Monomial] = None
        self._hash: Optional[int] = None

    # -- structure ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, Any]]:
        return iter(self.sorted_terms())

    def sorted_terms(self) -> List[Tuple[Monomial, Any]]:
        key = self.ring.order_key
        return sorted(self.terms.items(), key=lambda item: key(item[0]), reverse=True)

    @property
    def leading_monomial(self) -> Monomial:
        if self._lm is None:
            if not self.terms:
                raise UndefinedDegreeError("zero polynomial has no leading monomial")
            self._lm = max(self.terms, key=self.ring.order_key)
        return self._lm

    @property
    def leading_coefficient(self) -> Any:
        return self.terms[self.leading_monomial]

    def coefficient(self, monomial: Union[Monomial, Mapping[str, int]]) -> Any:
        if isinstance(monomial, Mapping):
            exps = [0] * self.ring.ngens
            for name, power in monomial.items():
                exps[self.ring.index(name)] = power
            monomial = tuple(exps)
        return self.terms.get(tuple(monomial), self.ring.field.zero)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(self.leading_monomial))

    def variables_used(self) -> List[str]:
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return [self.ring.variables[i] for i in sorted(used)]

    def is_homogeneous(self) -> bool:
        degrees = {self.ring.grade(m) for m in self.terms}
        return len(degrees) <= 1

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    # -- arithmetic --------------------------------------------------------
    def _check(self, other: "Polynomial") -> None:
        if other.ring is not self.ring and other.ring != self.ring:
            raise RingMismatchError("polynomials live in different rings")

    def _lift(self, other: Any) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other: Any) -> "Polynomial":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        fld = self.ring.field
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = fld.add(terms[m], c) if m in terms else c
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        fld = self.ring.field
        return Polynomial(self.ring, {m: fld.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other: Any) -> "Polynomial":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Any) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other: Any) -> "Polynomial":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        fld = self.ring.field
        terms: Dict[Monomial, Any] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                c = fld.mul(c1, c2)
                terms[m] = fld.add(terms[m], c) if m in terms else c
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise PolynomialError("negative powers are not polynomials")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Any) -> "Polynomial":
        fld = self.ring.field
        c = fld.coerce(c)
        return Polynomial(self.ring, {m: fld.mul(c, v) for m, v in self.terms.items()})

    def mul_term(self, monomial: Monomial, c: Any) -> "Polynomial":
        fld = self.ring.field
        return Polynomial(
            self.ring,
            {monomial_mul(m, monomial): fld.mul(c, v) for m, v in self.terms.items()},
        )

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.leading_coefficient))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            same_ring = self.ring is other.ring or self.ring == other.ring
            return same_ring and self.terms == other.terms
        if isinstance(other, int) and not isinstance(other, bool):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def poly_arith(op: str, f: Polynomial, g: Any) -> Polynomial:
    """Dispatch ``add``, ``sub``, ``mul`` or ``scale`` (g a scalar for scale)."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "scale":
        return f.scale(g)
    raise PolynomialError(f"unknown operation {op!r}")


def weighted_degree(f: Polynomial) -> Union[int, str]:
    if f.is_zero():
        raise UndefinedDegreeError("the zero polynomial has no degree")
    degrees = {f.ring.grade(m) for m in f.terms}
    if len(degrees) > 1:
        return INHOMOGENEOUS
    return degrees.pop()


def partial_derivative(f: Polynomial, var: str) -> Polynomial:
    idx = f.ring.index(var)
    fld = f.ring.field
    terms: Dict[Monomial, Any] = {}
    for m, c in f.terms.items():
        e = m[idx]
        if e == 0:
            continue
        reduced = m[:idx] + (e - 1,) + m[idx + 1 :]
        terms[reduced] = fld.mul(fld.from_int(e), c)
    return Polynomial(f.ring, terms)


def substitute(
    f: Polynomial,
    assignment: Mapping[str, Polynomial],
    target: Optional[RingDescriptor] = None,
) -> Polynomial:
    """Simultaneous substitution of ``assignment`` into ``f``.

    Unassigned variables are carried over by name into ``target`` (default:
    the ring of the images, or ``f.ring`` when nothing is assigned).
    """
    if target is None:
        rings = {img.ring for img in assignment.values()}
        if len(rings) > 1:
            raise RingMismatchError("substitution images live in different rings")
        target = rings.pop() if rings else f.ring
    for name, img in assignment.items():
        f.ring.index(name)
        if img.ring != target:
            raise RingMismatchError(f"image of {name} is not in the target ring")

    powers: Dict[Tuple[int, int], Polynomial] = {}

    def power_of(i: int, e: int) -> Polynomial:
        key = (i, e)
        if key not in powers:
            name = f.ring.variables[i]
            image = assignment[name] if name in assignment else target.gen(name)
            powers[key] = image**e
        return powers[key]

    fld = target.field
    source_field = f.ring.field
    result = target.zero()
    for m, c in f.terms.items():
        term = target.constant(_coerce_scalar(c, source_field, fld))
        for i, e in enumerate(m):
            if e:
                term = term * power_of(i, e)
                if term.is_zero():
                    break
        result = result + term
    return result


def _coerce_scalar(c: Any, source: Field, target: Field) -> Any:
    if source is target:
        return c
    if isinstance(c, Fraction):
        return target.from_fraction(c)
    if isinstance(c, int) and source.characteristic == target.characteristic:
        return c
    if getattr(c, "b", None) == 0:
        return target.from_fraction(c.a)
    raise RingMismatchError(f"cannot move {c!r} from {source.spec} to {target.spec}")


def change_ring(f: Polynomial, target: RingDescriptor) -> Polynomial:
    """Re-express ``f`` in ``target`` by variable name; unused variables may be dropped."""
    if f.ring == target:
        return f
    mapping = []
    for i, name in enumerate(f.ring.variables):
        mapping.append(target.index(name) if target.has_variable(name) else None)
    terms: Dict[Monomial, Any] = {}
    source_field, target_field = f.ring.field, target.field
    for m, c in f.terms.items():
        exps = [0] * target.ngens
        for i, e in enumerate(m):
            if not e:
                continue
            j = mapping[i]
            if j is None:
                raise UnknownVariableError(
                    f"variable {f.ring.variables[i]} does not exist in the target ring"
                )
            exps[j] = e
        terms[tuple(exps)] = _coerce_scalar(c, source_field, target_field)
    return Polynomial(target, terms)


# -- text format --------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))"
)


class _Parser:
    def __init__(self, text: str, ring: RingDescriptor) -> None:
        self.text = text
        self.ring = ring
        self.field = ring.field
        self.tokens: List[Tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            match = _TOKEN.match(text, pos)
            if not match or match.end() == pos:
                raise PolySyntaxError(f"unexpected character {text[pos]!r}", pos)
            kind = match.lastgroup
            start = match.start(kind)
            self.tokens.append((kind, match.group(kind), start))
            pos = match.end()
        self.i = 0

    def peek(self) -> Optional[Tuple[str, str, int]]:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> Tuple[str, str, int]:
        token = self.peek()
        if token is None:
            raise PolySyntaxError("unexpected end of input", len(self.text))
        self.i += 1
        return token

    def expect(self, value: str) -> None:
        kind, text, pos = self.take()
        if text != value:
            raise PolySyntaxError(f"expected {value!r}, found {text!r}", pos)

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise PolySyntaxError("empty polynomial", 0)
        result = self.ring.zero()
        sign = 1
        token = self.peek()
        if token and token[1] in "+-" and token[0] == "op":
            self.take()
            sign = -1 if token[1] == "-" else 1
        while True:
            term = self.term()
            result = result + (term if sign > 0 else -term)
            token = self.peek()
            if token is None:
                return result
            if token[0] == "op" and token[1] in "+-":
                self.take()
                sign = -1 if token[1] == "-" else 1
                continue
            raise PolySyntaxError(f"unexpected token {token[1]!r}", token[2])

    def term(self) -> Polynomial:
        value = self.atom()
        while True:
            token = self.peek()
            if token and token[0] == "op" and token[1] == "*":
                self.take()
                value = value * self.atom()
            else:
                return value

    def atom(self) -> Polynomial:
        kind, text, pos = self.take()
        if kind == "num":
            numerator = int(text)
            token = self.peek()
            if token and token[1] == "/":
                self.take()
                dkind, dtext, dpos = self.take()
                if dkind != "num" or int(dtext) == 0:
                    raise PolySyntaxError("expected a positive denominator", dpos)
                return self.ring.constant(self.field.from_fraction(Fraction(numerator, int(dtext))))
            return self.ring.constant(numerator)
        if kind == "name":
            if self.ring.has_variable(text):
                power = 1
                token = self.peek()
                if token and token[1] == "^":
                    self.take()
                    ekind, etext, epos = self.take()
                    if ekind != "num":
                        raise PolySyntaxError("expected an exponent", epos)
                    power = int(etext)
                    if power > MAX_EXPONENT:
                        raise ExponentOverflowError(f"exponent {power} exceeds 16 bits")
                return Polynomial(self.ring, {self.ring.variable_monomial(text, power): self.field.one})
            if text == "w" and isinstance(self.field, Cyclotomic6Field):
                return self.ring.constant("w")
            raise UnknownVariableError(f"unknown variable {text!r} at position {pos}")
        if text == "(":
            depth, start = 1, pos + 1
            while depth:
                k, t, p = self.take()
                if t == "(":
                    depth += 1
                elif t == ")":
                    depth -= 1
            inner = self.text[start:p]
            try:
                return self.ring.constant(self.field.parse(inner))
            except ValueError as exc:
                raise PolySyntaxError(f"bad coefficient {inner!r} ({exc})", start) from None
        raise PolySyntaxError(f"unexpected token {text!r}", pos)


def parse_poly(text: str, ring: RingDescriptor) -> Polynomial:
    return _Parser(text, ring).parse()


def _format_monomial(ring: RingDescriptor, m: Monomial) -> str:
    parts = []
    for name, e in zip(ring.variables, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    fld = f.ring.field
    pieces: List[str] = []
    for m, c in f.sorted_terms():
        mono = _format_monomial(f.ring, m)
        text = fld.format(c)
        compound = isinstance(fld, Cyclotomic6Field) and c.b != 0
        negative = not compound and text.startswith("-")
        if negative:
            text = text[1:]
        if compound:
            text = f"({text})"
        if mono and text == "1":
            body = mono
        elif mono:
            body = f"{text}*{mono}"
        else:
            body = text
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)


def polys_to_text(polys: Iterable[Polynomial]) -> List[str]:
    return [format_poly(p) for p in polys]


__all__ = [
    "change_ring",
    "format_poly",
    "INHOMOGENEOUS",
    "make_ring",
    "MAX_EXPONENT",
    "Monomial",
    "monomial_divides",
    "monomial_lcm",
    "monomial_mul",
    "monomial_quotient",
    "monomials_coprime",
    "parse_poly",
    "partial_derivative",
    "poly_arith",
    "Polynomial",
    "PolynomialError",
    "PolySyntaxError",
    "RingDescriptor",
    "RingMismatchError",
    "substitute",
    "support",
    "UndefinedDegreeError",
    "UnknownVariableError",
    "weighted_degree",
]
