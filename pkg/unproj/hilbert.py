"""Weighted Hilbert series of graded quotients, from leading-term ideals."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import sympy

from .groebner import EngineBudget, Ideal
from .polyring import Monomial, monomial_divides, monomials_coprime

t = sympy.Symbol("t")


class InhomogeneousIdealError(ValueError):
    """Hilbert series are only defined here for weighted-homogeneous ideals."""


@dataclass(frozen=True)
class HilbertSeries:
    """numerator(t) / prod(1 - t^w for w in denominator_weights)."""

    numerator: Tuple[int, ...]
    denominator_weights: Tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = list(self.numerator)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "numerator", tuple(coeffs))
        object.__setattr__(self, "denominator_weights", tuple(sorted(self.denominator_weights)))

    @classmethod
    def from_expr(cls, numerator: sympy.Expr, weights: Sequence[int]) -> "HilbertSeries":
        poly = sympy.Poly(numerator, t)
        coeffs = [int(c) for c in reversed(poly.all_coeffs())]
        return cls(tuple(coeffs), tuple(weights))

    def numerator_poly(self) -> sympy.Poly:
        return sympy.Poly(sum(c * t**k for k, c in enumerate(self.numerator)), t, domain="ZZ")

    def denominator_poly(self) -> sympy.Poly:
        den = sympy.Poly(1, t, domain="ZZ")
        for w in self.denominator_weights:
            den = den * sympy.Poly(1 - t**w, t, domain="ZZ")
        return den

    def as_expr(self) -> sympy.Expr:
        return sympy.cancel(self.numerator_poly().as_expr() / self.denominator_poly().as_expr())

    def coefficients(self, up_to: int) -> List[int]:
        """Power-series coefficients of t^0 .. t^up_to."""
        series = [0] * (up_to + 1)
        for k, c in enumerate(self.numerator):
            if k <= up_to:
                series[k] = c
        for w in self.denominator_weights:
            for k in range(w, up_to + 1):
                series[k] += series[k - w]
        return series

    def pole_order(self) -> int:
        """Order of the pole at t = 1, i.e. the Krull dimension; -1 for the zero ring."""
        if not self.numerator:
            return -1
        num = self.numerator_poly()
        root = sympy.Poly(t - 1, t, domain="ZZ")
        multiplicity = 0
        while not num.is_zero and num.eval(1) == 0:
            num, rem = sympy.div(num, root)
            if not rem.is_zero:
                break
            multiplicity += 1
        return len(self.denominator_weights) - multiplicity

    def reduced(self) -> Tuple[sympy.Expr, int]:
        """(HS * (1 - t)^d simplified, d) with d the pole order."""
        d = self.pole_order()
        return sympy.factor(sympy.cancel(self.as_expr() * (1 - t) ** d)), d

    def reduced_numerator(self) -> Optional[List[int]]:
        """Coefficients of HS * (1 - t)^d when that is a polynomial, else None."""
        expr, _ = self.reduced()
        expr = sympy.cancel(expr)
        if not expr.is_polynomial(t):
            return None
        poly = sympy.Poly(sympy.expand(expr), t)
        return [int(c) for c in reversed(poly.all_coeffs())]

    def degree(self) -> sympy.Rational:
        """Value at t = 1 of HS * (1 - t)^d."""
        expr, _ = self.reduced()
        return sympy.Rational(sympy.cancel(expr).subs(t, 1))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        left = self.numerator_poly() * other.denominator_poly()
        right = other.numerator_poly() * self.denominator_poly()
        return left == right

    def __hash__(self) -> int:
        return hash(sympy.srepr(self.as_expr()))

    def format(self) -> str:
        expr, d = self.reduced()
        return f"{sympy.sstr(expr)} / (1-t)^{d}" if d > 0 else sympy.sstr(self.as_expr())

    def to_dict(self) -> Dict[str, object]:
        return {
            "numerator": list(self.numerator),
            "denominator_weights": list(self.denominator_weights),
            "reduced": self.format(),
        }


def _poly_add(a: List[int], b: List[int], shift: int = 0) -> List[int]:
    size = max(len(a), len(b) + shift)
    out = a + [0] * (size - len(a))
    for k, c in enumerate(b):
        out[k + shift] += c
    return out


def _poly_mul(a: List[int], b: List[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _minimalize(monomials: Iterable[Monomial]) -> Tuple[Monomial, ...]:
    ordered = sorted(set(monomials), key=lambda m: (sum(m), m))
    kept: List[Monomial] = []
    for m in ordered:
        if not any(monomial_divides(k, m) for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


def _numerator(
    gens: Tuple[Monomial, ...], weights: Tuple[int, ...], memo: Dict[Tuple[Monomial, ...], List[int]]
) -> List[int]:
    if gens in memo:
        return memo[gens]
    if any(not any(m) for m in gens):
        return [0]
    nvars = len(weights)
    coprime = all(
        monomials_coprime(gens[i], gens[j]) for i in range(len(gens)) for j in range(i + 1, len(gens))
    )
    if coprime:
        result = [1]
        for m in gens:
            deg = sum(w * e for w, e in zip(weights, m))
            result = _poly_mul(result, [1] + [0] * (deg - 1) + [-1])
        memo[gens] = result
        return result

    counts = [sum(1 for m in gens if m[i]) for i in range(nvars)]
    pivot = max(range(nvars), key=lambda i: (counts[i], -i))
    unit = tuple(1 if i == pivot else 0 for i in range(nvars))
    with_pivot = _minimalize([m for m in gens if not m[pivot]] + [unit])
    colon = _minimalize(
        [m[:pivot] + (max(m[pivot] - 1, 0),) + m[pivot + 1 :] for m in gens]
    )
    result = _poly_add(
        _numerator(with_pivot, weights, memo), _numerator(colon, weights, memo), weights[pivot]
    )
    memo[gens] = result
    return result


def hilbert_series_of_monomials(
    monomials: Iterable[Monomial], weights: Sequence[int]
) -> HilbertSeries:
    """Series of k[x]/(monomials) with the given variable weights.

    Pivots on the variable that occurs in the most generators:
    HS(I) = HS(I + (x)) + t^w(x) HS(I : x).
    """
    weights = tuple(weights)
    gens = _minimalize(monomials)
    if any(not any(m) for m in gens):
        return HilbertSeries((), weights)
    numerator = _numerator(gens, weights, {})
    return HilbertSeries(tuple(numerator), weights)


def hilbert_series(
    ideal: Ideal, budget: Optional[EngineBudget] = None, logger: Optional[logging.Logger] = None
) -> HilbertSeries:
    log = logger or logging.getLogger(__name__)
    if ideal.ring.grading != ideal.ring.weights:
        raise ValueError("Hilbert series need a ring without parameter variables")
    if not ideal.is_homogeneous():
        bad = [name for name, g in ideal.generators.items() if not g.is_homogeneous()]
        raise InhomogeneousIdealError(f"inhomogeneous generators: {', '.join(bad)}")
    basis = ideal.groebner(budget, logger)
    if basis.is_unit():
        return HilbertSeries((), ideal.ring.weights)
    series = hilbert_series_of_monomials(basis.leading_monomials(), ideal.ring.weights)
    log.debug("hilbert series: %s", series.format())
    return series


__all__ = [
    "hilbert_series",
    "hilbert_series_of_monomials",
    "HilbertSeries",
    "InhomogeneousIdealError",
    "t",
]
