"""Verification of the surface: identities, Z/6 invariance, dimensions, Hilbert series, cone lemma."""

from __future__ import annotations

import itertools
import logging
from typing import Any, Dict, List, Optional

import sympy

from . import fixed_locus  # noqa: F401  registers the fixed-locus genericity conditions
from .campedelli import (
    DIMENSION_ANCHOR,
    REDUCED_WEIGHTS,
    REDUCTION_ANCHOR,
    X_NAMES,
    Z_NAMES,
    CampedelliParams,
    CampedelliSurface,
    build_surface_ideal,
    evaluate_genericity,
    form_eigenvalue_exponent,
    reduce_to_A,
    reference_L,
    surface_partials,
)
from .coeff import FieldSpec, primitive_sixth_root
from .groebner import EngineBudget, Ideal, dimension, ideals_equal, monomial_dimension
from .hilbert import HilbertSeries, hilbert_series, t
from .pfaffian import kernel_residual, matrix_rank
from .polyring import format_poly, parse_poly, substitute, weighted_degree
from .report import CheckResult, outcome
from .symmetry import SURFACE_GENERATOR, GroupAction, basis_vector_images, compare_point_formulas

# g acting on the named generators of T^s: name -> (sign, image name)
INVARIANCE_TABLE: Dict[str, tuple] = {
    "e_sxy_1": (1, "e_sxy_2"),
    "e_sxy_2": (1, "e_sxy_3"),
    "e_sxy_3": (1, "e_sxy_1"),
    "e_sxy_4": (1, "e_sxy_4"),
    "e_szy_1": (-1, "e_szy_2"),
    "e_szy_2": (-1, "e_szy_3"),
    "e_szy_3": (-1, "e_szy_1"),
    "e_szy_4": (-1, "e_szy_4"),
    "e_sy_14": (1, "e_sy_24"),
    "e_sy_24": (1, "e_sy_34"),
    "e_sy_34": (1, "e_sy_14"),
    "e_sy_12": (1, "e_sy_23"),
    "e_sy_13": (1, "e_sy_12"),
    "e_sy_23": (1, "e_sy_13"),
}
SECTION_SIGNS = {"h1": 1, "h2": 1, "h3": -1, "h4": -1}

EXPECTED_SERIES = HilbertSeries((1, 2, 6, 2, 1), (1, 1, 1))
EXPECTED_DEGREE = 12

# graded Betti numbers of A/L over A: homological degree -> {internal degree: rank}
BETTI_TABLE: Dict[int, Dict[int, int]] = {
    0: {0: 1},
    1: {3: 8, 4: 6},
    2: {4: 3, 5: 24, 6: 8},
    3: {6: 8, 7: 24, 8: 3},
    4: {8: 6, 9: 8},
    5: {12: 1},
}
SOCLE_DEGREE = 12


def _surface_label(params: Optional[CampedelliParams]) -> str:
    return "symbolic" if params is None else "concrete"


def verify_surface_identities(
    params: Optional[CampedelliParams] = None, field: Optional[FieldSpec] = None
) -> CheckResult:
    """Euler relation, both syzygies and the kernel identity for the M^s_ij; degrees when concrete."""
    surface = build_surface_ideal(params, field=field)
    ring = surface.ring
    g = ring.gen
    I = surface.I
    failures: List[Dict[str, Any]] = []

    for s in range(1, 5):
        residual = g(f"z{s}") * I[f"e_sxy_{s}"] - g(f"x{s}") * I[f"e_szy_{s}"] - surface.Qs
        if not residual.is_zero():
            failures.append({"identity": "euler", "t": s, "residual": format_poly(residual)})

    for i, j in itertools.combinations(range(1, 5), 2):
        sp = surface_partials(surface.Qs, i, j)
        e_y = I[f"e_sy_{i}{j}"]
        lhs = g(f"y{i}") * I[f"e_sxy_{j}"] - g(f"x{j}") * e_y
        residual = lhs - (sp.xz * I[f"e_sxy_{i}"] + sp.zz * I[f"e_szy_{i}"])
        if not residual.is_zero():
            failures.append({"identity": "syzygy_x", "i": i, "j": j, "residual": format_poly(residual)})
        lhs = g(f"z{j}") * e_y - g(f"y{i}") * I[f"e_szy_{j}"]
        residual = lhs - (sp.xx * I[f"e_sxy_{i}"] + sp.zx * I[f"e_szy_{i}"])
        if not residual.is_zero():
            failures.append({"identity": "syzygy_z", "i": i, "j": j, "residual": format_poly(residual)})
        for row, entry in enumerate(kernel_residual(surface.matrices[(i, j)]), start=1):
            if not entry.is_zero():
                failures.append({"identity": "kernel", "i": i, "j": j, "row": row})

    degrees = {}
    for name, gen in I.generators.items():
        expected = 4 if name.startswith("e_sy_") else 3
        degrees[name] = weighted_degree(gen)
        if degrees[name] != expected:
            failures.append({"generator": name, "degree": degrees[name], "expected": expected})
    return outcome(
        f"campedelli.identities.{_surface_label(params)}",
        failures,
        {"generators": len(I), "degrees": degrees},
    )


def _eigenvalue(fld, exponent: int) -> Any:
    if fld.has_sixth_root():
        return fld.pow(primitive_sixth_root(fld), exponent)
    if exponent % 3:
        raise ValueError(f"zeta^{exponent} is not in {fld.spec}")
    return fld.one if exponent % 6 == 0 else fld.neg(fld.one)


def w2_dimension(surface: CampedelliSurface, action: GroupAction) -> int:
    """Dimension of the invariants in W_1, the span of the sixteen monomials a_1a_2a_3a_4."""
    ring = surface.ring
    fld = ring.field
    monomials = []
    for choice in itertools.product("xz", repeat=4):
        term = ring.one()
        for k, letter in enumerate(choice, start=1):
            term = term * ring.gen(f"{letter}{k}")
        monomials.append(term.leading_monomial)
    position = {m: k for k, m in enumerate(monomials)}
    # rows of (g - 1) on W_1
    rows = []
    for m in monomials:
        image = action.apply(ring.constant(1).mul_term(m, fld.one))
        row = [fld.zero] * len(monomials)
        for mono, coeff in image.terms.items():
            row[position[mono]] = fld.add(row[position[mono]], coeff)
        row[position[m]] = fld.sub(row[position[m]], fld.one)
        rows.append(row)
    return len(monomials) - matrix_rank(rows, fld)


def verify_group_invariance(
    params: Optional[CampedelliParams] = None,
    field: Optional[FieldSpec] = None,
    budget: Optional[EngineBudget] = None,
    logger: Optional[logging.Logger] = None,
) -> CheckResult:
    """g.Q^s = Q^s, the generator mapping table, eigenforms, section eigenvalues and g.T^s = T^s."""
    log = logger or logging.getLogger(__name__)
    surface = build_surface_ideal(params, field=field)
    ring = surface.ring
    fld = ring.field
    action = GroupAction.surface()
    failures: List[Dict[str, Any]] = []

    if not action.power(6).is_identity() or action.power(3).is_identity():
        failures.append({"group_order": "g does not have order 6"})
    if not action.preserves_degrees(ring):
        failures.append({"degrees": "action does not preserve weights"})
    if action.apply(surface.Qs) != surface.Qs:
        failures.append({"invariant": "Qs", "image": format_poly(action.apply(surface.Qs))})
    for k, F in enumerate(surface.F, start=1):
        if action.apply(F) != F:
            failures.append({"invariant": f"F{k}"})
    invariants = w2_dimension(surface, action)
    if invariants != 4:
        failures.append({"W2_dimension": invariants, "expected": 4})

    T = surface.T
    for name, (sign, target) in INVARIANCE_TABLE.items():
        image = action.apply(T[name])
        expected = T[target] if sign == 1 else -T[target]
        if image != expected:
            failures.append(
                {"generator": name, "expected": ("" if sign == 1 else "-") + target, "image": format_poly(image)}
            )

    for name, m in surface.forms.items():
        value = _eigenvalue(fld, form_eigenvalue_exponent(name))
        if action.apply(m) != m.scale(value):
            failures.append({"eigenform": name, "image": format_poly(action.apply(m))})

    if not surface.custom_sections:
        for name, sign in SECTION_SIGNS.items():
            h = surface.sections[name]
            if action.apply(h) != (h if sign == 1 else -h):
                failures.append({"section": name, "image": format_poly(action.apply(h))})

    # generator set of T^s closed under g up to sign
    lookup = {g: name for name, g in T.generators.items()}
    lookup.update({-g: name for name, g in T.generators.items()})
    unmatched = [name for name, g in T.generators.items() if action.apply(g) not in lookup]
    details: Dict[str, Any] = {
        "mode": _surface_label(params),
        "W2_dimension": invariants,
        "eigenforms": sorted(surface.forms),
        "unmatched_generators": unmatched,
    }

    if params is not None:
        basis = T.groebner(budget, log)
        outside = []
        for k in range(1, 6):
            element = action.power(k)
            outside += [f"g^{k}.{name}" for name, g in T.generators.items() if not basis.contains(element.apply(g))]
        equal, missing = ideals_equal(T, action.apply_ideal(T), budget)
        if outside or not equal:
            failures.append({"ideal_invariance": outside + missing})
        details["ideal_invariance"] = not outside and equal

    point_formulas = compare_point_formulas(surface.ring.field_spec, action, log)
    details["point_action"] = point_formulas
    expected_vectors = {v: ("-" if s == -1 else "") + w for v, s, w in SURFACE_GENERATOR}
    vectors = basis_vector_images(surface.ring.field_spec, action)
    if vectors != expected_vectors:
        failures.append({"basis_vectors": vectors, "expected": expected_vectors})
    notes = []
    if point_formulas["disagree"]:
        notes.append(
            "printed point formula differs at "
            + ", ".join(d["coordinate"] for d in point_formulas["disagree"])
        )
    result = outcome(f"campedelli.invariance.{_surface_label(params)}", failures, details)
    result.notes.extend(notes)
    return result


def dimension_R_check(
    params: Optional[CampedelliParams] = None,
    budget: Optional[EngineBudget] = None,
    logger: Optional[logging.Logger] = None,
    label: str = "anchor",
) -> CheckResult:
    """dim A_4^s / I^s_4 = 7 (default parameters r = (1, 0, 0, 0))."""
    params = params or CampedelliParams.from_strings(DIMENSION_ANCHOR)
    surface = build_surface_ideal(params)
    dim = dimension(surface.I, budget, logger)
    failures = [] if dim == 7 else [{"dimension": dim, "expected": 7}]
    return outcome(
        f"campedelli.dimension.R.{label}", failures, {"dimension": dim, "params": params.to_dict()}
    )


def surface_quotient(params: CampedelliParams, h_forms=None) -> Ideal:
    """L in A, or T itself when custom sections rule out the reduction."""
    surface = build_surface_ideal(params, h_forms=h_forms)
    return surface.T if surface.custom_sections else reduce_to_A(surface)


def dimension_L_check(
    params: CampedelliParams,
    budget: Optional[EngineBudget] = None,
    logger: Optional[logging.Logger] = None,
    label: str = "params",
    h_forms=None,
) -> CheckResult:
    ideal = surface_quotient(params, h_forms)
    dim = dimension(ideal, budget, logger)
    failures = [] if dim == 3 else [{"dimension": dim, "expected": 3}]
    primes = [params.field.modulus] if params.field.modulus else []
    return outcome(
        f"campedelli.dimension.L.{label}",
        failures,
        {"dimension": dim, "variables": ideal.ring.ngens, "params": params.to_dict()},
        genericity=evaluate_genericity(params),
        primes=primes,
    )


def monomial_quotient_check(field: Optional[FieldSpec] = None) -> CheckResult:
    """At r = (1, 0, 0, 0): I^s_4 modulo the z's is (x_iy_i, y_iy_j, w_t) with dimension 3."""
    params = CampedelliParams.from_strings(DIMENSION_ANCHOR, field)
    surface = build_surface_ideal(params)
    ring = surface.ring
    kill = {v: ring.zero() for v in Z_NAMES}
    failures: List[Dict[str, Any]] = []
    monomials = []
    for name, g in surface.I.generators.items():
        image = substitute(g, kill, ring)
        kind, index = name.rsplit("_", 1)
        if kind == "e_sxy":
            expected = ring.gen(f"x{index}") * ring.gen(f"y{index}")
        elif kind == "e_szy":
            w = ring.one()
            for s in range(1, 5):
                if str(s) != index:
                    w = w * ring.gen(f"x{s}")
            expected = -w
        else:
            expected = ring.gen(f"y{index[0]}") * ring.gen(f"y{index[1]}")
        if image != expected:
            failures.append({"generator": name, "expected": format_poly(expected), "computed": format_poly(image)})
        if not image.is_zero():
            monomials.append(image.leading_monomial)
    z_positions = {ring.index(v) for v in Z_NAMES}
    reduced = [tuple(e for k, e in enumerate(m) if k not in z_positions) for m in monomials]
    dim = monomial_dimension(reduced, ring.ngens - len(Z_NAMES))
    if dim != 3:
        failures.append({"monomial_dimension": dim, "expected": 3})
    return outcome("campedelli.dimension.monomial_quotient", failures, {"monomial_dimension": dim})


def reference_L_check(
    field: Optional[FieldSpec] = None, budget: Optional[EngineBudget] = None
) -> CheckResult:
    """L at r1 = r4 = 1 (others 0) generates the same ideal as the fourteen listed polynomials."""
    params = CampedelliParams.from_strings(REDUCTION_ANCHOR, field)
    L = reduce_to_A(build_surface_ideal(params))
    reference = reference_L(params.field)
    equal, missing = ideals_equal(L, reference, budget)
    failures = [] if equal else [{"not_in_other": missing}]
    return outcome(
        "campedelli.reference_L",
        failures,
        {"generators": {name: format_poly(g) for name, g in L.generators.items()}},
    )


def betti_numerator() -> sympy.Expr:
    total = sympy.Integer(0)
    for i, row in BETTI_TABLE.items():
        for j, b in row.items():
            total += (-1) ** i * b * t**j
    return sympy.expand(total)


def betti_self_dual() -> bool:
    top = max(BETTI_TABLE)
    return all(
        BETTI_TABLE.get(top - i, {}).get(SOCLE_DEGREE - j) == b
        for i, row in BETTI_TABLE.items()
        for j, b in row.items()
    )


def surface_invariants(series: HilbertSeries) -> Dict[str, Any]:
    """p_g, P_2, K^2 and chi of the cover and K^2, chi of the free Z/6 quotient."""
    coefficients = series.coefficients(2)
    K2 = int(series.degree())
    p_g = coefficients[1]
    chi = 1 + p_g  # q = 0
    return {
        "p_g": p_g,
        "P2": coefficients[2],
        "K2": K2,
        "chi": chi,
        "P2_matches_K2_plus_chi": coefficients[2] == K2 + chi,
        "quotient_K2": sympy.Rational(K2, 6),
        "quotient_chi": sympy.Rational(chi, 6),
    }


def hilbert_and_betti_check(
    params: CampedelliParams,
    budget: Optional[EngineBudget] = None,
    logger: Optional[logging.Logger] = None,
    label: str = "params",
    h_forms=None,
) -> CheckResult:
    log = logger or logging.getLogger(__name__)
    ideal = surface_quotient(params, h_forms)
    series = hilbert_series(ideal, budget, log)
    failures: List[Dict[str, Any]] = []
    if series != EXPECTED_SERIES:
        failures.append({"series": series.format(), "expected": EXPECTED_SERIES.format()})

    N = betti_numerator()
    h = sympy.Poly(list(reversed(EXPECTED_SERIES.numerator)), t).as_expr()
    factored = sympy.expand((1 - t) ** 2 * (1 - t**2) ** 3 * h)
    if sympy.expand(N - factored) != 0:
        failures.append({"betti_numerator": sympy.sstr(N), "expected": sympy.sstr(factored)})
    from_resolution = HilbertSeries.from_expr(N, REDUCED_WEIGHTS)
    if from_resolution != series:
        failures.append({"resolution_series": from_resolution.format(), "computed": series.format()})
    if not betti_self_dual():
        failures.append({"betti_self_dual": False})

    degree = series.degree()
    if degree != EXPECTED_DEGREE:
        failures.append({"degree": str(degree), "expected": EXPECTED_DEGREE})
    h_vector = series.reduced_numerator()
    palindromic = h_vector is not None and h_vector == list(reversed(h_vector))
    if not palindromic:
        failures.append({"h_vector": h_vector, "palindromic": False})
    a_invariant = None if h_vector is None else len(h_vector) - 1 - series.pole_order()
    if a_invariant != 1:
        failures.append({"a_invariant": a_invariant, "expected": 1})

    invariants = surface_invariants(series) if not failures else {}
    if invariants and (invariants["p_g"] != 5 or not invariants["P2_matches_K2_plus_chi"]):
        failures.append({"invariants": {k: str(v) for k, v in invariants.items()}})
    primes = [params.field.modulus] if params.field.modulus else []
    return outcome(
        f"campedelli.hilbert.{label}",
        failures,
        {
            "series": series.to_dict(),
            "betti_numerator": sympy.sstr(N),
            "h_vector": h_vector,
            "a_invariant": a_invariant,
            "degree": str(degree),
            "invariants": {k: str(v) for k, v in invariants.items()},
            "params": params.to_dict(),
        },
        genericity=evaluate_genericity(params),
        primes=primes,
    )


def cone_lemma_check(
    params: CampedelliParams,
    budget: Optional[EngineBudget] = None,
    logger: Optional[logging.Logger] = None,
) -> CheckResult:
    """Only the vertex has all x and z coordinates zero."""
    surface = build_surface_ideal(params)
    ring = surface.ring
    cut = surface.T.extend({f"c_{v}": ring.gen(v) for v in X_NAMES + Z_NAMES})
    dim = dimension(cut, budget, logger)
    failures: List[Dict[str, Any]] = []
    if dim != 0:
        failures.append({"dimension": dim, "basis": cut.groebner(budget).to_dict()["basis"]})

    symbolic = build_surface_ideal(None, field=FieldSpec.cyclotomic6())
    sring = symbolic.ring
    kill = {v: sring.zero() for v in X_NAMES + Z_NAMES}
    for i, j in itertools.combinations(range(1, 5), 2):
        image = substitute(symbolic.T[f"e_sy_{i}{j}"], kill, sring)
        if image != sring.gen(f"y{i}") * sring.gen(f"y{j}"):
            failures.append({"generator": f"e_sy_{i}{j}", "restricted": format_poly(image)})
    h4 = substitute(symbolic.T["h4"], kill, sring)
    expected_h4 = parse_poly("y4 + r6*y1 + r6*y2 + r6*y3", sring)
    if h4 != expected_h4:
        failures.append({"section": "h4", "restricted": format_poly(h4)})
    return outcome("campedelli.cone_lemma", failures, {"dimension": dim, "params": params.to_dict()})


def genericity_conditions(params: CampedelliParams) -> CheckResult:
    entries = evaluate_genericity(params)
    failures = [{"condition": e.condition, "value": e.value} for e in entries if not e.ok]
    return outcome(
        "campedelli.genericity",
        failures,
        {"conditions": len(entries), "params": params.to_dict()},
        genericity=entries,
    )


__all__ = [
    "BETTI_TABLE",
    "betti_numerator",
    "betti_self_dual",
    "cone_lemma_check",
    "dimension_L_check",
    "dimension_R_check",
    "EXPECTED_SERIES",
    "genericity_conditions",
    "hilbert_and_betti_check",
    "INVARIANCE_TABLE",
    "monomial_quotient_check",
    "reference_L_check",
    "surface_invariants",
    "surface_quotient",
    "verify_group_invariance",
    "verify_surface_identities",
    "w2_dimension",
]
