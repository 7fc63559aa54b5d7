"""Generic binomial-Pfaffian ideals I_p in A_p and their structural checks.

The rings A_p carry x_1..x_n, z_1..z_n (weight 1), one r-variable per bit
string of length n (weight 1, lexicographic order) and y_1..y_p (weight
n-1). Generators are named ``e_xy_i``, ``e_zy_i`` and ``e_y_ij``.
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Any, Dict, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from .coeff import FieldSpec
from .groebner import EngineBudget, Ideal, dimension, monomial_dimension
from .pfaffian import SkewSymmetricMatrix, kernel_residual, submaximal_pfaffians
from .polyring import (
    Polynomial,
    RingDescriptor,
    change_ring,
    format_poly,
    make_ring,
    partial_derivative,
    substitute,
    weighted_degree,
)
from .report import CheckResult, outcome

MAX_GROEBNER_N = 6


@dataclass(frozen=True, slots=True)
class GenericConfig:
    n: int
    field: FieldSpec = dc_field(default_factory=FieldSpec.rationals)

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"n must be at least 2, got {self.n}")


class SecondPartials(NamedTuple):
    xx: Polynomial
    xz: Polynomial
    zx: Polynomial
    zz: Polynomial


@dataclass(slots=True)
class GeneratorSet:
    e_xy: Dict[int, Polynomial] = dc_field(default_factory=dict)
    e_zy: Dict[int, Polynomial] = dc_field(default_factory=dict)
    e_y: Dict[Tuple[int, int], Polynomial] = dc_field(default_factory=dict)

    def named(self, p: int) -> Dict[str, Polynomial]:
        """Generators of I_p (p >= 1) in naming order."""
        gens: Dict[str, Polynomial] = {}
        for t in range(1, p + 1):
            gens[f"e_xy_{t}"] = self.e_xy[t]
            gens[f"e_zy_{t}"] = self.e_zy[t]
        for i, j in itertools.combinations(range(1, p + 1), 2):
            gens[y_name(i, j)] = self.e_y[(i, j)]
        return gens


def y_name(i: int, j: int) -> str:
    return f"e_y_{i}{j}" if j < 10 else f"e_y_{i}_{j}"


def r_labels(n: int) -> List[str]:
    return ["r" + "".join(bits) for bits in itertools.product("01", repeat=n)]


def mixed_r_labels(n: int) -> List[str]:
    return r_labels(n)[1:-1]


def _check_index(config: GenericConfig, i: int, j: int) -> None:
    if not 1 <= i < j <= config.n:
        raise ValueError(f"need 1 <= i < j <= {config.n}, got ({i}, {j})")


@lru_cache(maxsize=None)
def build_ambient(config: GenericConfig, stage: Optional[int] = None) -> RingDescriptor:
    """A_stage over the configured field; stage defaults to n."""
    n = config.n
    p = n if stage is None else stage
    if not 0 <= p <= n:
        raise ValueError(f"stage must lie in 0..{n}, got {p}")
    names = (
        [f"x{t}" for t in range(1, n + 1)]
        + [f"z{t}" for t in range(1, n + 1)]
        + r_labels(n)
        + [f"y{t}" for t in range(1, p + 1)]
    )
    weights = [1] * (2 * n + 2**n) + [n - 1] * p
    return make_ring(names, weights, config.field)


@lru_cache(maxsize=None)
def build_Q(config: GenericConfig) -> Polynomial:
    ring = build_ambient(config)
    total = ring.zero()
    for label in r_labels(config.n):
        term = ring.gen(label)
        for t, bit in enumerate(label[1:], start=1):
            term = term * ring.gen(f"x{t}" if bit == "0" else f"z{t}")
        total = total + term
    return total


@lru_cache(maxsize=None)
def second_partials(config: GenericConfig, i: int, j: int) -> SecondPartials:
    _check_index(config, i, j)
    Q = build_Q(config)

    def d2(a: str, b: str) -> Polynomial:
        return partial_derivative(partial_derivative(Q, a), b)

    return SecondPartials(
        xx=d2(f"x{i}", f"x{j}"),
        xz=d2(f"x{i}", f"z{j}"),
        zx=d2(f"z{i}", f"x{j}"),
        zz=d2(f"z{i}", f"z{j}"),
    )


def pfaffian_matrix(
    ring: RingDescriptor, i: int, j: int, partials: SecondPartials
) -> SkewSymmetricMatrix:
    """The 5x5 matrix with first row (0, x_i, z_i, -x_j, -z_j)."""
    x = lambda t: ring.gen(f"x{t}")  # noqa: E731
    z = lambda t: ring.gen(f"z{t}")  # noqa: E731
    y = lambda t: ring.gen(f"y{t}")  # noqa: E731
    entries = {
        (1, 2): x(i),
        (1, 3): z(i),
        (1, 4): -x(j),
        (1, 5): -z(j),
        (2, 3): y(j),
        (2, 4): partials.zz,
        (2, 5): -partials.zx,
        (3, 4): -partials.xz,
        (3, 5): partials.xx,
        (4, 5): -y(i),
    }
    return SkewSymmetricMatrix.from_upper(ring, 5, entries)


def build_M(config: GenericConfig, i: int, j: int) -> SkewSymmetricMatrix:
    return pfaffian_matrix(build_ambient(config), i, j, second_partials(config, i, j))


def classify_pfaffians(
    ring: RingDescriptor,
    matrices: Mapping[Tuple[int, int], SkewSymmetricMatrix],
) -> Tuple[GeneratorSet, List[Dict[str, Any]]]:
    """Name every Pfaffian by the unit monomial x_iy_i, z_iy_i or y_iy_j it carries.

    Returns the generator set and a list of conflicts: a name that two
    different Pfaffians claim.
    """
    field_one = ring.field.one
    generators = GeneratorSet()
    conflicts: List[Dict[str, Any]] = []

    def monomial(*names: str):
        exps = [0] * ring.ngens
        for name in names:
            exps[ring.index(name)] += 1
        return tuple(exps)

    def record(store: Dict, key: Any, label: str, poly: Polynomial, source: Tuple[int, int]) -> None:
        if key in store and store[key] != poly:
            conflicts.append(
                {"name": label, "source": list(source), "polynomial": format_poly(poly)}
            )
        store.setdefault(key, poly)

    for (a, b), matrix in sorted(matrices.items()):
        probes = [
            (generators.e_xy, a, f"e_xy_{a}", monomial(f"x{a}", f"y{a}")),
            (generators.e_zy, a, f"e_zy_{a}", monomial(f"z{a}", f"y{a}")),
            (generators.e_xy, b, f"e_xy_{b}", monomial(f"x{b}", f"y{b}")),
            (generators.e_zy, b, f"e_zy_{b}", monomial(f"z{b}", f"y{b}")),
            (generators.e_y, (a, b), y_name(a, b), monomial(f"y{a}", f"y{b}")),
        ]
        for pf in submaximal_pfaffians(matrix):
            hits = [probe for probe in probes if pf.terms.get(probe[3]) == field_one]
            if len(hits) != 1:
                conflicts.append(
                    {"source": [a, b], "polynomial": format_poly(pf), "unit_monomials": len(hits)}
                )
                continue
            store, key, label, _ = hits[0]
            record(store, key, label, pf, (a, b))
    return generators, conflicts


@lru_cache(maxsize=None)
def _scan(config: GenericConfig) -> Tuple[GeneratorSet, Tuple[Dict[str, Any], ...]]:
    ring = build_ambient(config)
    matrices = {
        (i, j): build_M(config, i, j)
        for i, j in itertools.combinations(range(1, config.n + 1), 2)
    }
    generators, conflicts = classify_pfaffians(ring, matrices)
    return generators, tuple(conflicts)


def build_generator_set(config: GenericConfig) -> GeneratorSet:
    generators, conflicts = _scan(config)
    if conflicts:
        raise AssertionError(f"Pfaffian naming is not unique: {conflicts[0]}")
    return generators


def build_I(config: GenericConfig, p: int) -> Ideal:
    """I_p inside A_p: (Q) for p = 0, the two unit Pfaffians of M_12 for p = 1."""
    ring = build_ambient(config, p)
    if p == 0:
        return Ideal(ring, {"Q": change_ring(build_Q(config), ring)})
    generators = build_generator_set(config)
    return Ideal(ring, {name: change_ring(g, ring) for name, g in generators.named(p).items()})


def build_J(config: GenericConfig, p: int) -> Ideal:
    """J_0 = (x_1, z_1); J_p = (x_{p+1}, z_{p+1}, y_1..y_p) in A_p."""
    if not 0 <= p < config.n:
        raise ValueError(f"J_p needs 0 <= p < {config.n}, got {p}")
    ring = build_ambient(config, p)
    names = [f"x{p + 1}", f"z{p + 1}"] + [f"y{t}" for t in range(1, p + 1)]
    return Ideal(ring, {name: ring.gen(name) for name in names})


def expected_generator_count(p: int) -> int:
    if p == 0:
        return 1
    if p == 1:
        return 2
    return 2 * p + p * (p - 1) // 2


# -- verification -------------------------------------------------------------


def verify_identities(config: GenericConfig, p: int) -> CheckResult:
    """Q-decomposition, Euler relation, both unprojection syzygies and the kernel identity."""
    if not 1 <= p <= config.n:
        raise ValueError(f"p must lie in 1..{config.n}")
    n = config.n
    ring = build_ambient(config)
    Q = build_Q(config)
    gens = build_generator_set(config)
    x = lambda t: ring.gen(f"x{t}")  # noqa: E731
    z = lambda t: ring.gen(f"z{t}")  # noqa: E731
    y = lambda t: ring.gen(f"y{t}")  # noqa: E731
    failures: List[Dict[str, Any]] = []
    checked = {"decomposition": 0, "euler": 0, "syzygy_x": 0, "syzygy_z": 0, "kernel": 0}

    def expect_zero(kind: str, residual: Polynomial, **where: int) -> None:
        checked[kind] += 1
        if not residual.is_zero():
            failures.append({"identity": kind, "n": n, "p": p, **where, "residual": format_poly(residual)})

    for i, j in itertools.combinations(range(1, n + 1), 2):
        sp = second_partials(config, i, j)
        rebuilt = x(i) * x(j) * sp.xx + x(i) * z(j) * sp.xz + z(i) * x(j) * sp.zx + z(i) * z(j) * sp.zz
        expect_zero("decomposition", rebuilt - Q, i=i, j=j)

    for t in range(1, p + 1):
        expect_zero("euler", z(t) * gens.e_xy[t] - x(t) * gens.e_zy[t] - Q, t=t)

    for i, j in itertools.combinations(range(1, p + 1), 2):
        sp = second_partials(config, i, j)
        e_y = gens.e_y[(i, j)]
        lhs = y(i) * gens.e_xy[j] - x(j) * e_y
        rhs = sp.xz * gens.e_xy[i] + sp.zz * gens.e_zy[i]
        expect_zero("syzygy_x", lhs - rhs, i=i, j=j)
        lhs = z(j) * e_y - y(i) * gens.e_zy[j]
        rhs = sp.xx * gens.e_xy[i] + sp.zx * gens.e_zy[i]
        expect_zero("syzygy_z", lhs - rhs, i=i, j=j)
        for k, entry in enumerate(kernel_residual(build_M(config, i, j)), start=1):
            expect_zero("kernel", entry, i=i, j=j, row=k)

    return outcome(f"structural.n{n}.identities.p{p}", failures, {"checked": checked})


def verify_generators(config: GenericConfig) -> CheckResult:
    """Counts, unit-monomial uniqueness, degrees and the chain I_{p-1} in I_p."""
    n = config.n
    failures: List[Dict[str, Any]] = []
    _, conflicts = _scan(config)
    failures.extend({"uniqueness": c} for c in conflicts)
    counts = {}
    previous: Dict[str, Polynomial] = {}
    for p in range(0, n + 1):
        ideal = build_I(config, p)
        counts[p] = len(ideal)
        if len(ideal) != expected_generator_count(p):
            failures.append({"p": p, "count": len(ideal), "expected": expected_generator_count(p)})
        current = {name: change_ring(g, build_ambient(config)) for name, g in ideal.generators.items()}
        if p >= 2:
            missing = [name for name, g in previous.items() if current.get(name) != g]
            if missing:
                failures.append({"p": p, "chain_missing": missing})
        previous = current

    degree_of = {"e_xy": n, "e_zy": n, "e_y": 2 * (n - 1)}
    for name, g in build_I(config, n).generators.items():
        prefix = name.rsplit("_", 1)[0] if not name.startswith("e_y_") else "e_y"
        got = weighted_degree(g)
        if got != degree_of[prefix]:
            failures.append({"generator": name, "degree": got, "expected": degree_of[prefix]})
    q_degree = weighted_degree(build_Q(config))
    if q_degree != n + 1:
        failures.append({"generator": "Q", "degree": q_degree, "expected": n + 1})
    return outcome(f"structural.n{n}.generators", failures, {"counts": counts})


def specialize_r(
    config: GenericConfig, stage: int, values: Mapping[str, Any]
) -> Tuple[RingDescriptor, Dict[str, Polynomial]]:
    """Ring without r-variables and the substitution sending each r to its value."""
    source = build_ambient(config, stage)
    keep = [(v, w) for v, w in zip(source.variables, source.weights) if not v.startswith("r")]
    target = make_ring([v for v, _ in keep], [w for _, w in keep], config.field)
    fld = target.field
    assignment = {label: target.constant(fld.coerce(values[label])) for label in r_labels(config.n)}
    return target, assignment


def random_r_values(config: GenericConfig, rng: random.Random) -> Dict[str, Any]:
    fld = build_ambient(config).field
    values = {}
    for label in r_labels(config.n):
        value = fld.random_element(rng)
        while fld.is_zero(value):
            value = fld.random_element(rng)
        values[label] = value
    return values


def verify_codimension(
    config: GenericConfig,
    p: int,
    params: Optional[Mapping[str, Any]] = None,
    budget: Optional[EngineBudget] = None,
    logger: Optional[logging.Logger] = None,
    label: Optional[str] = None,
) -> CheckResult:
    """codim I_p = p + 1 by Groebner dimension; r stays symbolic unless ``params`` is given."""
    log = logger or logging.getLogger(__name__)
    ideal = build_I(config, p)
    if params is None:
        label = label or "symbolic"
    else:
        label = label or "concrete"
        target, assignment = specialize_r(config, p, params)
        ideal = Ideal(
            target,
            {name: substitute(g, assignment, target) for name, g in ideal.generators.items()},
        )
    nvars = ideal.ring.ngens
    dim = dimension(ideal, budget, log)
    codim = nvars - dim
    log.info("codimension n=%d p=%d (%s r): %d of %d variables", config.n, p, label, codim, nvars)
    failures = [] if codim == p + 1 else [{"codim": codim, "expected": p + 1}]
    details = {
        "n": config.n,
        "p": p,
        "r": "symbolic" if params is None else "concrete",
        "field": str(config.field),
        "prime": config.field.modulus,
        "variables": nvars,
        "dimension": dim,
        "codimension": codim,
        "basis_size": len(ideal.groebner(budget)),
    }
    primes = [config.field.modulus] if config.field.modulus else []
    return outcome(f"structural.n{config.n}.codimension.p{p}.{label}", failures, details, primes=primes)


def _product(ring: RingDescriptor, names: Sequence[str]) -> Polynomial:
    result = ring.one()
    for name in names:
        result = result * ring.gen(name)
    return result


def specialization_check(config: GenericConfig, p: int) -> CheckResult:
    """eta: x_p = z_p = y_p = 0 and mixed r's = 0, against the closed forms."""
    n = config.n
    if not 1 <= p <= n:
        raise ValueError(f"p must lie in 1..{n}")
    source = build_ambient(config, p)
    r0, r1 = r_labels(n)[0], r_labels(n)[-1]
    killed = {f"x{p}", f"z{p}", f"y{p}", *mixed_r_labels(n)}
    keep = [(v, w) for v, w in zip(source.variables, source.weights) if v not in killed]
    target = make_ring([v for v, _ in keep], [w for _, w in keep], config.field)
    eta = {name: target.zero() for name in killed}
    others = [t for t in range(1, n + 1) if t != p]

    expected: Dict[str, Polynomial] = {}
    for i in range(1, p):
        expected[f"e_xy_{i}"] = target.gen(f"x{i}") * target.gen(f"y{i}")
        expected[f"e_zy_{i}"] = target.gen(f"z{i}") * target.gen(f"y{i}")
        for j in range(i + 1, p):
            expected[y_name(i, j)] = target.gen(f"y{i}") * target.gen(f"y{j}")
        rest = [t for t in others if t != i]
        expected[y_name(i, p)] = _product(
            target, [r0, r1] + [f"x{t}" for t in rest] + [f"z{t}" for t in rest]
        )
    expected[f"e_xy_{p}"] = _product(target, [r1] + [f"z{t}" for t in others])
    expected[f"e_zy_{p}"] = -_product(target, [r0] + [f"x{t}" for t in others])

    failures: List[Dict[str, Any]] = []
    images: Dict[str, Polynomial] = {}
    for name, g in build_I(config, p).generators.items():
        image = substitute(g, eta, target)
        images[name] = image
        if image != expected[name]:
            failures.append(
                {"generator": name, "expected": format_poly(expected[name]), "computed": format_poly(image)}
            )
    monomials = [img.leading_monomial for img in images.values() if not img.is_zero()]
    dim = monomial_dimension(monomials, target.ngens)
    # dim R_p - (2^n + 1) with dim R_p = 2n + 2^n - 1
    expected = 2 * n - 2
    if dim != expected:
        failures.append({"monomial_dimension": dim, "expected": expected})
    details = {"n": n, "p": p, "variables": target.ngens, "monomial_dimension": dim, "expected": expected}
    return outcome(f"structural.n{n}.specialization.p{p}", failures, details)


def regular_sequence_check(
    ideal: Ideal,
    sequence: Sequence[Polynomial],
    budget: Optional[EngineBudget] = None,
    check_id: str = "regular_sequence",
    logger: Optional[logging.Logger] = None,
) -> CheckResult:
    """dim(ideal + sequence) = dim(ideal) - len(sequence)."""
    base = dimension(ideal, budget, logger)
    extended = ideal.extend({f"s{k}": f for k, f in enumerate(sequence, start=1)})
    cut = dimension(extended, budget, logger)
    failures = [] if cut == base - len(sequence) else [{"dimension_drop": base - cut, "expected": len(sequence)}]
    details = {
        "dimension": base,
        "dimension_after": cut,
        "sequence": [format_poly(f) for f in sequence],
    }
    return outcome(check_id, failures, details)


def regular_sequence_xp_zp(config: GenericConfig, p: int, budget: Optional[EngineBudget] = None) -> CheckResult:
    ideal = build_I(config, p)
    ring = ideal.ring
    return regular_sequence_check(
        ideal,
        [ring.gen(f"x{p}"), ring.gen(f"z{p}")],
        budget,
        check_id=f"structural.n{config.n}.regular.xz.p{p}",
    )


def regular_sequence_xi_xj(
    config: GenericConfig, p: int, i: int, j: int, budget: Optional[EngineBudget] = None
) -> CheckResult:
    _check_index(config, i, j)
    ideal = build_I(config, p)
    ring = ideal.ring
    return regular_sequence_check(
        ideal,
        [ring.gen(f"x{i}"), ring.gen(f"x{j}")],
        budget,
        check_id=f"structural.n{config.n}.regular.x{i}x{j}.p{p}",
    )


def verify_unprojection_pair(
    config: GenericConfig, p: int, budget: Optional[EngineBudget] = None
) -> CheckResult:
    """I_{p-1} lies in J_{p-1}, and J_{p-1} cuts R_{p-1} in codimension one."""
    if not 1 <= p <= config.n:
        raise ValueError(f"p must lie in 1..{config.n}")
    ideal = build_I(config, p - 1)
    J = build_J(config, p - 1)
    failures: List[Dict[str, Any]] = []
    kill = {name: ideal.ring.zero() for name in J.generators}
    for name, g in ideal.generators.items():
        if not substitute(g, kill, ideal.ring).is_zero():
            failures.append({"generator": name, "not_in": f"J_{p - 1}"})
    base = dimension(ideal, budget)
    cut = dimension(ideal.extend({f"j_{name}": g for name, g in J.generators.items()}), budget)
    if cut != base - 1:
        failures.append({"dimension": base, "dimension_with_J": cut})
    details = {"p": p, "dimension": base, "dimension_with_J": cut}
    return outcome(f"structural.n{config.n}.unprojection_pair.p{p}", failures, details)


def verify_unprojection_variable(
    config: GenericConfig, t: int, budget: Optional[EngineBudget] = None
) -> CheckResult:
    """y_i (x_t y_t - e_xy_t) - x_t (y_i y_t - e_y_it) lies in I_{t-1} for every i < t."""
    if not 2 <= t <= config.n:
        raise ValueError(f"t must lie in 2..{config.n}")
    full = build_ambient(config)
    gens = build_generator_set(config)
    previous = build_I(config, t - 1)
    x = lambda s: full.gen(f"x{s}")  # noqa: E731
    y = lambda s: full.gen(f"y{s}")  # noqa: E731
    failures = []
    for i in range(1, t):
        element = y(i) * (x(t) * y(t) - gens.e_xy[t]) - x(t) * (y(i) * y(t) - gens.e_y[(i, t)])
        reduced = previous.groebner(budget).reduce(change_ring(element, previous.ring))
        if not reduced.is_zero():
            failures.append({"i": i, "t": t, "normal_form": format_poly(reduced)})
    return outcome(f"structural.n{config.n}.unprojection_variable.t{t}", failures, {"t": t})


def base_change_regular_sequence_check(config: GenericConfig, p: int) -> CheckResult:
    """z's and every r except r_{0..0} cut R_p down to k[x, y, r_{0..0}]/T_1 of the expected dimension."""
    n = config.n
    if not 1 <= p <= n:
        raise ValueError(f"p must lie in 1..{n}")
    source = build_ambient(config, p)
    r0 = r_labels(n)[0]
    killed = {f"z{t}" for t in range(1, n + 1)} | set(r_labels(n)[1:])
    keep = [(v, w) for v, w in zip(source.variables, source.weights) if v not in killed]
    target = make_ring([v for v, _ in keep], [w for _, w in keep], config.field)
    kill = {name: target.zero() for name in killed}

    T1: Dict[str, Polynomial] = {}
    for i in range(1, p + 1):
        T1[f"e_xy_{i}"] = target.gen(f"x{i}") * target.gen(f"y{i}")
        T1[f"e_zy_{i}"] = -_product(target, [r0] + [f"x{s}" for s in range(1, n + 1) if s != i])
    for i, j in itertools.combinations(range(1, p + 1), 2):
        T1[y_name(i, j)] = target.gen(f"y{i}") * target.gen(f"y{j}")

    failures: List[Dict[str, Any]] = []
    for name, g in build_I(config, p).generators.items():
        image = substitute(g, kill, target)
        if image != T1[name]:
            failures.append({"generator": name, "expected": format_poly(T1[name]), "computed": format_poly(image)})
    dim = monomial_dimension([m.leading_monomial for m in T1.values()], target.ngens)
    dim_R = 2 * n + 2**n - 1
    expected = dim_R - (n + 2**n - 1)
    if dim != expected:
        failures.append({"monomial_dimension": dim, "expected": expected})
    details = {"n": n, "p": p, "sequence_length": n + 2**n - 1, "monomial_dimension": dim, "expected": expected}
    return outcome(f"structural.n{n}.base_change.p{p}", failures, details)


def linear_forms_regular_check(
    config: GenericConfig,
    p: int,
    count: int,
    rng: random.Random,
    budget: Optional[EngineBudget] = None,
) -> CheckResult:
    """Random independent linear forms in the span of the r's other than r_{0..0} are regular on R_p."""
    ideal = build_I(config, p)
    ring = ideal.ring
    fld = ring.field
    labels = r_labels(config.n)[1:]
    if not 1 <= count <= len(labels):
        raise ValueError(f"count must lie in 1..{len(labels)}")
    # triangular coefficient pattern keeps the forms independent
    forms = []
    for k in range(count):
        form = ring.gen(labels[k])
        for label in labels[k + 1 :]:
            form = form + ring.gen(label).scale(fld.random_element(rng))
        forms.append(form)
    return regular_sequence_check(
        ideal, forms, budget, check_id=f"structural.n{config.n}.linear_forms.p{p}"
    )


__all__ = [
    "base_change_regular_sequence_check",
    "build_ambient",
    "build_generator_set",
    "build_I",
    "build_J",
    "build_M",
    "build_Q",
    "classify_pfaffians",
    "expected_generator_count",
    "GenericConfig",
    "GeneratorSet",
    "linear_forms_regular_check",
    "MAX_GROEBNER_N",
    "mixed_r_labels",
    "pfaffian_matrix",
    "r_labels",
    "random_r_values",
    "regular_sequence_check",
    "regular_sequence_xi_xj",
    "regular_sequence_xp_zp",
    "second_partials",
    "SecondPartials",
    "specialization_check",
    "specialize_r",
    "verify_codimension",
    "verify_generators",
    "verify_identities",
    "verify_unprojection_pair",
    "verify_unprojection_variable",
    "y_name",
]
