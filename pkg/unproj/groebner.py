"""Buchberger engine: ideals, reduced Groebner bases, normal forms and Krull dimension."""

from __future__ import annotations

import heapq
import logging
import os
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Set, Tuple, Union

from .polyring import (
    Monomial,
    Polynomial,
    RingDescriptor,
    RingMismatchError,
    format_poly,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
    monomial_quotient,
    support,
)

ORDER_TAG = "wdegrevlex"
DEFAULT_MAX_PAIRS = 2_000_000
DEFAULT_MAX_BASIS = 50_000
BUDGET_ENV = "UNPROJ_BUDGET"
VERIFY_ENV = "UNPROJ_VERIFY_GB"
PROGRESS_EVERY = 500


class ResourceLimitError(RuntimeError):
    """Raised when a Buchberger run exceeds its configured budget."""

    def __init__(self, limit: str, value: int, budget: "EngineBudget") -> None:
        super().__init__(f"{limit} budget exceeded ({value} > {getattr(budget, limit)})")
        self.limit = limit
        self.value = value
        self.budget = budget


class GroebnerCriterionError(RuntimeError):
    """Raised in verify mode when an emitted basis fails Buchberger's criterion."""


class NonMonomialError(ValueError):
    pass


@dataclass(slots=True)
class EngineBudget:
    max_pairs: int = DEFAULT_MAX_PAIRS
    max_basis: int = DEFAULT_MAX_BASIS
    verify: bool = False

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "EngineBudget":
        env = os.environ if environ is None else environ
        budget = cls()
        raw = env.get(BUDGET_ENV)
        if raw:
            budget.max_pairs = int(raw)
        budget.verify = env.get(VERIFY_ENV, "") in {"1", "true", "yes"}
        return budget

    def to_dict(self) -> Dict[str, object]:
        return {"max_pairs": self.max_pairs, "max_basis": self.max_basis, "verify": self.verify}


@dataclass(slots=True)
class GroebnerStats:
    pairs_processed: int = 0
    reductions_to_zero: int = 0
    max_intermediate: int = 0
    ms: float = 0.0

    def to_dict(self) -> Dict[str, object]:
        return {
            "pairs_processed": self.pairs_processed,
            "reductions_to_zero": self.reductions_to_zero,
            "max_intermediate": self.max_intermediate,
        }


@dataclass(slots=True)
class GroebnerBasis:
    ring: RingDescriptor
    elements: Tuple[Polynomial, ...]
    order: str = ORDER_TAG
    stats: GroebnerStats = field(default_factory=GroebnerStats)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def leading_monomials(self) -> List[Monomial]:
        return [g.leading_monomial for g in self.elements]

    def is_unit(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.elements)

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def criterion_holds(self) -> bool:
        return buchberger_criterion_holds(self.elements)

    def to_dict(self) -> Dict[str, object]:
        return {
            "order": self.order,
            "ring": self.ring.to_dict(),
            "basis": [format_poly(g) for g in self.elements],
        }


@dataclass(eq=False)
class Ideal:
    ring: RingDescriptor
    generators: Dict[str, Polynomial]
    cached_basis: Optional[GroebnerBasis] = field(default=None, repr=False)

    def __post_init__(self) -> None:
        for name, g in self.generators.items():
            if g.ring != self.ring:
                raise RingMismatchError(f"generator {name} is not in the ideal's ring")

    @classmethod
    def from_polys(
        cls, ring: RingDescriptor, polys: Iterable[Polynomial], prefix: str = "g"
    ) -> "Ideal":
        return cls(ring, {f"{prefix}{k}": p for k, p in enumerate(polys, start=1)})

    @property
    def names(self) -> List[str]:
        return list(self.generators)

    @property
    def polys(self) -> List[Polynomial]:
        return list(self.generators.values())

    def __len__(self) -> int:
        return len(self.generators)

    def __getitem__(self, name: str) -> Polynomial:
        return self.generators[name]

    def __contains__(self, name: str) -> bool:
        return name in self.generators

    def extend(self, extra: Mapping[str, Polynomial]) -> "Ideal":
        clash = set(extra) & set(self.generators)
        if clash:
            raise ValueError(f"generator names already used: {sorted(clash)}")
        return Ideal(self.ring, {**self.generators, **extra})

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators.values())

    def groebner(
        self, budget: Optional[EngineBudget] = None, logger: Optional[logging.Logger] = None
    ) -> GroebnerBasis:
        if self.cached_basis is None:
            self.cached_basis = buchberger(self, budget=budget, logger=logger)
        return self.cached_basis

    def contains(self, f: Polynomial, budget: Optional[EngineBudget] = None) -> bool:
        return self.groebner(budget).contains(f)

    def to_dict(self) -> Dict[str, object]:
        return {
            "ring": self.ring.to_dict(),
            "generators": {name: format_poly(g) for name, g in self.generators.items()},
        }


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    fld = f.ring.field
    lm_f, lm_g = f.leading_monomial, g.leading_monomial
    lcm = monomial_lcm(lm_f, lm_g)
    left = f.mul_term(monomial_quotient(lcm, lm_f), fld.inv(f.leading_coefficient))
    right = g.mul_term(monomial_quotient(lcm, lm_g), fld.inv(g.leading_coefficient))
    return left - right


def normal_form(f: Polynomial, basis: Union[GroebnerBasis, Sequence[Polynomial]]) -> Polynomial:
    """Complete reduction of ``f``; zero exactly when f lies in the ideal of a Groebner basis."""
    polys = basis.elements if isinstance(basis, GroebnerBasis) else tuple(basis)
    if f.is_zero():
        return f
    ring = f.ring
    fld = ring.field
    reducers = []
    for g in polys:
        if g.is_zero():
            continue
        if g.ring != ring:
            raise RingMismatchError("basis and polynomial live in different rings")
        reducers.append((g.leading_monomial, fld.inv(g.leading_coefficient), g))

    work = dict(f.terms)
    heap = [(ring.heap_key(m), m) for m in work]
    heapq.heapify(heap)
    remainder: Dict[Monomial, object] = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, None)
        if c is None:
            continue
        for lm, lc_inv, g in reducers:
            if not monomial_divides(lm, m):
                continue
            factor = fld.mul(c, lc_inv)
            shift = monomial_quotient(m, lm)
            for gm, gc in g.terms.items():
                if gm == lm:
                    continue
                t = monomial_mul(gm, shift)
                v = fld.mul(factor, gc)
                if t in work:
                    nv = fld.sub(work[t], v)
                    if fld.is_zero(nv):
                        del work[t]
                    else:
                        work[t] = nv
                else:
                    work[t] = fld.neg(v)
                    heapq.heappush(heap, (ring.heap_key(t), t))
            break
        else:
            remainder[m] = c
    return Polynomial(ring, remainder)


def buchberger_criterion_holds(elements: Sequence[Polynomial]) -> bool:
    elements = [g for g in elements if not g.is_zero()]
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            if not normal_form(s_polynomial(elements[i], elements[j]), elements).is_zero():
                return False
    return True


def _interreduce_input(polys: List[Polynomial]) -> List[Polynomial]:
    """Reduce every generator against all the others until nothing changes.

    The result has no zero element and no leading monomial dividing another.
    """
    current: List[Polynomial] = []
    for p in polys:
        if not p.is_zero():
            p = p.monic()
            if p not in current:
                current.append(p)
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(current):
            p = current[i]
            r = normal_form(p, current[:i] + current[i + 1 :])
            if r.is_zero():
                del current[i]
                changed = True
                continue
            r = r.monic()
            if r != p:
                current[i] = r
                changed = True
            i += 1
    return current


def buchberger(
    ideal: Union[Ideal, Sequence[Polynomial]],
    order: str = ORDER_TAG,
    budget: Optional[EngineBudget] = None,
    logger: Optional[logging.Logger] = None,
) -> GroebnerBasis:
    """Reduced, monic Groebner basis with Gebauer-Moeller pair elimination.

    Pairs are selected by weighted degree of their lcm, then by creation
    index, so the result and its statistics are deterministic.
    """
    log = logger or logging.getLogger(__name__)
    if order != ORDER_TAG:
        raise ValueError(f"unsupported monomial order {order!r}; only {ORDER_TAG} is implemented")
    budget = budget or EngineBudget.from_env()
    if isinstance(ideal, Ideal):
        ring, inputs = ideal.ring, ideal.polys
    else:
        inputs = list(ideal)
        if not inputs:
            raise ValueError("cannot infer the ring of an empty generator list")
        ring = inputs[0].ring
    started = time.perf_counter()
    stats = GroebnerStats()

    f = _interreduce_input(list(inputs))
    if not f:
        return GroebnerBasis(ring, (), order, stats)
    if any(p.is_constant() for p in f):
        return GroebnerBasis(ring, (ring.one(),), order, stats)

    lms: List[Monomial] = [p.leading_monomial for p in f]
    index: Dict[Polynomial, int] = {p: i for i, p in enumerate(f)}

    pair_keys: Dict[Tuple[int, int], Tuple[int, int, int]] = {}

    def lcm_degree(pair: Tuple[int, int]) -> Tuple[int, int, int]:
        key = pair_keys.get(pair)
        if key is None:
            i, j = pair
            key = (ring.monomial_degree(monomial_lcm(lms[i], lms[j])), max(i, j), min(i, j))
            pair_keys[pair] = key
        return key

    def update(G: Set[int], B: Set[Tuple[int, int]], ih: int) -> Tuple[Set[int], Set[Tuple[int, int]]]:
        mh = lms[ih]
        C = sorted(G)
        D: Set[Tuple[int, int]] = set()
        while C:
            ig = C.pop()
            mg = lms[ig]
            lcm_hg = monomial_lcm(mh, mg)

            def lcm_divides(ip: int) -> bool:
                return monomial_divides(monomial_lcm(mh, lms[ip]), lcm_hg)

            if monomial_mul(mh, mg) == lcm_hg or (
                not any(lcm_divides(ipx) for ipx in C)
                and not any(lcm_divides(pair[1]) for pair in D)
            ):
                D.add((ih, ig))

        E = {(a, b) for a, b in D if monomial_mul(mh, lms[b]) != monomial_lcm(mh, lms[b])}

        B_new: Set[Tuple[int, int]] = set()
        for ig1, ig2 in B:
            mg1, mg2 = lms[ig1], lms[ig2]
            lcm12 = monomial_lcm(mg1, mg2)
            if (
                not monomial_divides(mh, lcm12)
                or monomial_lcm(mg1, mh) == lcm12
                or monomial_lcm(mg2, mh) == lcm12
            ):
                B_new.add((ig1, ig2))
        B_new |= E

        G_new = {ig for ig in G if not monomial_divides(mh, lms[ig])}
        G_new.add(ih)
        return G_new, B_new

    G: Set[int] = set()
    B: Set[Tuple[int, int]] = set()
    for ih in sorted(range(len(f)), key=lambda i: ring.order_key(lms[i])):
        G, B = update(G, B, ih)

    while B:
        pair = min(B, key=lcm_degree)
        B.remove(pair)
        stats.pairs_processed += 1
        if stats.pairs_processed > budget.max_pairs:
            raise ResourceLimitError("max_pairs", stats.pairs_processed, budget)
        if stats.pairs_processed % PROGRESS_EVERY == 0:
            log.debug(
                "buchberger: %d pairs processed, %d in basis, %d pending",
                stats.pairs_processed,
                len(G),
                len(B),
            )
        reducers = [f[i] for i in sorted(G, key=lambda i: ring.order_key(lms[i]))]
        h = normal_form(s_polynomial(f[pair[0]], f[pair[1]]), reducers)
        if h.is_zero():
            stats.reductions_to_zero += 1
            continue
        h = h.monic()
        if h.is_constant():
            return GroebnerBasis(ring, (ring.one(),), order, stats)
        if h not in index:
            index[h] = len(f)
            f.append(h)
            lms.append(h.leading_monomial)
        G, B = update(G, B, index[h])
        stats.max_intermediate = max(stats.max_intermediate, len(G))
        if len(G) > budget.max_basis:
            raise ResourceLimitError("max_basis", len(G), budget)

    members = [
        ig
        for ig in sorted(G)
        if not any(
            jg != ig
            and monomial_divides(lms[jg], lms[ig])
            and (lms[jg] != lms[ig] or jg < ig)
            for jg in G
        )
    ]
    reduced = []
    for ig in members:
        others = [f[j] for j in members if j != ig]
        r = normal_form(f[ig], others)
        if not r.is_zero():
            reduced.append(r.monic())
    reduced.sort(key=lambda g: ring.order_key(g.leading_monomial))
    stats.ms = (time.perf_counter() - started) * 1000.0
    basis = GroebnerBasis(ring, tuple(reduced), order, stats)
    log.info(
        "buchberger: basis of %d elements after %d pairs (%d to zero) in %.1f ms",
        len(basis),
        stats.pairs_processed,
        stats.reductions_to_zero,
        stats.ms,
    )
    if budget.verify and not basis.criterion_holds():
        raise GroebnerCriterionError("emitted basis fails Buchberger's criterion")
    return basis


def ideals_equal(
    first: Ideal, second: Ideal, budget: Optional[EngineBudget] = None
) -> Tuple[bool, List[str]]:
    """Two-sided membership; returns (equal, names of generators not in the other ideal)."""
    missing = [n for n, g in second.generators.items() if not first.groebner(budget).contains(g)]
    missing += [n for n, g in first.generators.items() if not second.groebner(budget).contains(g)]
    return (not missing, missing)


@lru_cache(maxsize=4096)
def _min_transversal(supports: FrozenSet[FrozenSet[int]]) -> int:
    if not supports:
        return 0
    smallest = min(supports, key=lambda s: (len(s), sorted(s)))
    best = len(smallest) + len(supports)
    for v in sorted(smallest):
        rest = frozenset(s for s in supports if v not in s)
        best = min(best, 1 + _min_transversal(rest))
    return best


def _minimal_supports(monomials: Iterable[Monomial]) -> FrozenSet[FrozenSet[int]]:
    supports = sorted({support(m) for m in monomials}, key=len)
    minimal: List[FrozenSet[int]] = []
    for s in supports:
        if not any(t <= s for t in minimal):
            minimal.append(s)
    return frozenset(minimal)


def monomial_dimension(
    monomial_ideal: Union[Ideal, Iterable[Monomial]], nvars: Optional[int] = None
) -> int:
    """Krull dimension of k[x]/(monomials): nvars minus a minimum variable transversal.

    The unit ideal has dimension -1.
    """
    if isinstance(monomial_ideal, Ideal):
        monomials = []
        for name, g in monomial_ideal.generators.items():
            if g.is_zero():
                continue
            if not g.is_monomial():
                raise NonMonomialError(f"generator {name} is not a monomial: {format_poly(g)}")
            monomials.append(g.leading_monomial)
        nvars = monomial_ideal.ring.ngens if nvars is None else nvars
    else:
        monomials = list(monomial_ideal)
        if nvars is None:
            if not monomials:
                raise ValueError("nvars is required for an empty monomial list")
            nvars = len(monomials[0])
    supports = _minimal_supports(monomials)
    if frozenset() in supports:
        return -1
    return nvars - _min_transversal(supports)


def dimension(
    ideal: Ideal, budget: Optional[EngineBudget] = None, logger: Optional[logging.Logger] = None
) -> int:
    """Krull dimension of ring/ideal from the leading-term ideal of its Groebner basis."""
    basis = ideal.groebner(budget, logger)
    if basis.is_unit():
        return -1
    return monomial_dimension(basis.leading_monomials(), ideal.ring.ngens)


__all__ = [
    "buchberger",
    "buchberger_criterion_holds",
    "dimension",
    "EngineBudget",
    "GroebnerBasis",
    "GroebnerCriterionError",
    "GroebnerStats",
    "Ideal",
    "ideals_equal",
    "monomial_dimension",
    "NonMonomialError",
    "normal_form",
    "ORDER_TAG",
    "ResourceLimitError",
    "s_polynomial",
]
