"""The specific four-stage format behind the Z/6 numerical Campedelli surface.

``A_4^s`` has x_1..x_4, z_1..z_4 of weight 1 and y_1..y_4 of weight 2. The
quartic Q^s is a combination of the four invariant multilinear forms F_i,
I^s_4 is generated by the fourteen unit Pfaffians of the M^s_ij, and the
surface ideal T^s adds the four sections h_1..h_4. Generators are named
``e_sxy_t``, ``e_szy_t``, ``e_sy_ij``; sections ``h1``..``h4``; eigenforms
``m{i}_{j}`` (eigenvalue zeta^i).
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from .coeff import Field, FieldSpec, UnsupportedFieldError, make_field, primitive_sixth_root
from .groebner import Ideal
from .pfaffian import SkewSymmetricMatrix
from .polyring import (
    Polynomial,
    RingDescriptor,
    format_poly,
    make_ring,
    parse_poly,
    partial_derivative,
    substitute,
    weighted_degree,
)
from .report import CheckResult, GenericityEntry, outcome
from .unprojection import SecondPartials, classify_pfaffians, pfaffian_matrix

X_NAMES = tuple(f"x{t}" for t in range(1, 5))
Z_NAMES = tuple(f"z{t}" for t in range(1, 5))
Y_NAMES = tuple(f"y{t}" for t in range(1, 5))
SURFACE_VARIABLES = X_NAMES + Z_NAMES + Y_NAMES
SURFACE_WEIGHTS = (1,) * 8 + (2,) * 4
R_NAMES = tuple(f"r{k}" for k in range(1, 9))
REDUCED_VARIABLES = ("x1", "x2", "x3", "z1", "z2", "y1", "y2", "y3")
REDUCED_WEIGHTS = (1,) * 5 + (2,) * 3
SECTION_DEGREES = {"h1": 1, "h2": 1, "h3": 1, "h4": 2}
ZETA_FORMS = frozenset({"m1_1", "m2_1", "m4_1", "m5_1"})

# each section is its variable plus terms free of the variables solved before it
SOLVED_BY_SECTION = (("h1", "z3"), ("h2", "z4"), ("h3", "x4"), ("h4", "y4"))

DIMENSION_ANCHOR = ("1", "0", "0", "0", "0", "0", "0", "0")
REDUCTION_ANCHOR = ("1", "0", "0", "1", "0", "0", "0", "0")

EXPLICIT_TABLE: Dict[str, str] = {
    "e_sxy_1": "x2*x3*z4*r2 + x3*x4*z2*r3 + x2*x4*z3*r3 + z2*z3*z4*r4 + x1*y1",
    "e_szy_1": "-x2*x3*x4*r1 - x3*z2*z4*r2 - x2*z3*z4*r2 - x4*z2*z3*r3 + z1*y1",
    "e_sxy_2": "x1*x3*z4*r2 + x3*x4*z1*r3 + x1*x4*z3*r3 + z1*z3*z4*r4 + x2*y2",
    "e_szy_2": "-x1*x3*x4*r1 - x3*z1*z4*r2 - x1*z3*z4*r2 - x4*z1*z3*r3 + z2*y2",
    "e_sxy_3": "x1*x2*z4*r2 + x2*x4*z1*r3 + x1*x4*z2*r3 + z1*z2*z4*r4 + x3*y3",
    "e_szy_3": "-x1*x2*x4*r1 - x2*z1*z4*r2 - x1*z2*z4*r2 - x4*z1*z2*r3 + z3*y3",
    "e_sxy_4": "x2*x3*z1*r2 + x1*x3*z2*r2 + x1*x2*z3*r2 + z1*z2*z3*r4 + x4*y4",
    "e_szy_4": "-x1*x2*x3*r1 - x3*z1*z2*r3 - x2*z1*z3*r3 - x1*z2*z3*r3 + z4*y4",
    "e_sy_12": (
        "-x3^2*z4^2*r2^2 + x3^2*x4^2*r1*r3 - x3*x4*z3*z4*r2*r3 - x4^2*z3^2*r3^2"
        " + x3*x4*z3*z4*r1*r4 + z3^2*z4^2*r2*r4 + y1*y2"
    ),
    "e_sy_13": (
        "-x2^2*z4^2*r2^2 + x2^2*x4^2*r1*r3 - x2*x4*z2*z4*r2*r3 - x4^2*z2^2*r3^2"
        " + x2*x4*z2*z4*r1*r4 + z2^2*z4^2*r2*r4 + y1*y3"
    ),
    "e_sy_14": (
        "x2^2*x3^2*r1*r2 - x3^2*z2^2*r2*r3 - x2*x3*z2*z3*r2*r3 - x2^2*z3^2*r2*r3"
        " + x2*x3*z2*z3*r1*r4 + z2^2*z3^2*r3*r4 + y1*y4"
    ),
    "e_sy_23": (
        "-x1^2*z4^2*r2^2 + x1^2*x4^2*r1*r3 - x1*x4*z1*z4*r2*r3 - x4^2*z1^2*r3^2"
        " + x1*x4*z1*z4*r1*r4 + z1^2*z4^2*r2*r4 + y2*y3"
    ),
    "e_sy_24": (
        "x1^2*x3^2*r1*r2 - x3^2*z1^2*r2*r3 - x1*x3*z1*z3*r2*r3 - x1^2*z3^2*r2*r3"
        " + x1*x3*z1*z3*r1*r4 + z1^2*z3^2*r3*r4 + y2*y4"
    ),
    "e_sy_34": (
        "x1^2*x2^2*r1*r2 - x2^2*z1^2*r2*r3 - x1*x2*z1*z2*r2*r3 - x1^2*z2^2*r2*r3"
        " + x1*x2*z1*z2*r1*r4 + z1^2*z2^2*r3*r4 + y3*y4"
    ),
}

# L at REDUCTION_ANCHOR, in k[x1,x2,x3,z1,z2,y1,y2,y3]
REFERENCE_L_GENERATORS: Tuple[str, ...] = (
    "x1*y1",
    "z1*y1",
    "x2*y2",
    "z2*y2",
    "x3*y3",
    "z1*y3 + z2*y3",
    "z1^2*z2 + z1*z2^2",
    "x1*x2*x3",
    "y1*y2",
    "y1*y3",
    "x2*x3*z1*z2 + x2*x3*z2^2",
    "y2*y3",
    "x1*x3*z1^2 + x1*x3*z1*z2",
    "x1*x2*z1*z2",
)


class GenericityError(ValueError):
    """Raised when parameters violate a nonvanishing condition a check relies on."""

    def __init__(self, condition: str, value: str) -> None:
        super().__init__(f"genericity condition {condition} fails (value {value})")
        self.condition = condition
        self.value = value


@dataclass(frozen=True)
class CampedelliParams:
    """(r_1, ..., r_8) as elements of ``field``."""

    r: Tuple[Any, ...]
    field: FieldSpec = dc_field(default_factory=FieldSpec.rationals)

    def __post_init__(self) -> None:
        if len(self.r) != 8:
            raise ValueError(f"eight parameters r1..r8 are required, got {len(self.r)}")
        fld = make_field(self.field)
        values = tuple(fld.coerce(v) for v in self.r)
        object.__setattr__(self, "r", values)
        if all(fld.is_zero(v) for v in values[:4]):
            raise GenericityError("(r1,r2,r3,r4) != 0", "0")

    @property
    def field_handle(self) -> Field:
        return make_field(self.field)

    def value(self, k: int) -> Any:
        return self.r[k - 1]

    @property
    def needs_zeta(self) -> bool:
        fld = self.field_handle
        return not (fld.is_zero(self.r[6]) and fld.is_zero(self.r[7]))

    @classmethod
    def from_strings(cls, values: Sequence[Any], field: Optional[FieldSpec] = None) -> "CampedelliParams":
        return cls(tuple(str(v) for v in values), field or FieldSpec.rationals())

    @classmethod
    def load(cls, path: Path, field: Optional[FieldSpec] = None) -> "CampedelliParams":
        """Read a JSON array of eight element strings (or ``{"r": [...]}``)."""
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
        if isinstance(payload, Mapping):
            payload = payload.get("r")
        if not isinstance(payload, list):
            raise ValueError(f"{path}: expected a JSON array of eight parameters")
        return cls.from_strings(payload, field)

    @classmethod
    def sample(cls, field: FieldSpec, rng: random.Random) -> "CampedelliParams":
        """Nonzero random r's; r7 = r8 = 0 when the field has no primitive 6th root."""
        fld = make_field(field)
        values = []
        for _ in range(8):
            value = fld.random_element(rng)
            while fld.is_zero(value):
                value = fld.random_element(rng)
            values.append(value)
        if not fld.has_sixth_root():
            values[6] = values[7] = fld.zero
        return cls(tuple(values), field)

    def to_dict(self) -> Dict[str, object]:
        fld = self.field_handle
        return {"r": [fld.format(v) for v in self.r], "field": str(self.field)}


@lru_cache(maxsize=None)
def surface_ring(field: FieldSpec, symbolic_r: bool = False) -> RingDescriptor:
    """A_4^s; with ``symbolic_r`` the parameters r1..r8 are appended as degree-0 variables.

    They keep weight 1 in the monomial order and degree 0 in the grading.
    """
    names = list(SURFACE_VARIABLES)
    weights = list(SURFACE_WEIGHTS)
    grading = list(SURFACE_WEIGHTS)
    if symbolic_r:
        names += R_NAMES
        weights += [1] * len(R_NAMES)
        grading += [0] * len(R_NAMES)
    return make_ring(names, weights, field, grading)


@lru_cache(maxsize=None)
def reduced_ring(field: FieldSpec) -> RingDescriptor:
    """The eight-variable ring A onto which A_4^s/T^s is presented."""
    return make_ring(REDUCED_VARIABLES, REDUCED_WEIGHTS, field)


@lru_cache(maxsize=None)
def parameter_ring(field: FieldSpec) -> RingDescriptor:
    return make_ring(R_NAMES, (1,) * len(R_NAMES), field)


def parameter_polys(ring: RingDescriptor, params: Optional[CampedelliParams]) -> Tuple[Polynomial, ...]:
    if params is None:
        return tuple(ring.gen(name) for name in R_NAMES)
    return tuple(ring.constant(v) for v in params.r)


def build_F_basis(ring: RingDescriptor) -> Tuple[Polynomial, Polynomial, Polynomial, Polynomial]:
    x1, x2, x3, x4 = (ring.gen(v) for v in X_NAMES)
    z1, z2, z3, z4 = (ring.gen(v) for v in Z_NAMES)
    return (
        x1 * x2 * x3 * x4,
        (x1 * x2 * z3 + x1 * z2 * x3 + z1 * x2 * x3) * z4,
        (x1 * z2 * z3 + z1 * x2 * z3 + z1 * z2 * x3) * x4,
        z1 * z2 * z3 * z4,
    )


def build_Qs(ring: RingDescriptor, coefficients: Sequence[Polynomial]) -> Polynomial:
    total = ring.zero()
    for r, F in zip(coefficients[:4], build_F_basis(ring)):
        total = total + r * F
    return total


def surface_partials(Qs: Polynomial, i: int, j: int) -> SecondPartials:
    def d2(a: str, b: str) -> Polynomial:
        return partial_derivative(partial_derivative(Qs, a), b)

    return SecondPartials(
        xx=d2(f"x{i}", f"x{j}"),
        xz=d2(f"x{i}", f"z{j}"),
        zx=d2(f"z{i}", f"x{j}"),
        zz=d2(f"z{i}", f"z{j}"),
    )


def build_pfaffian_generators(
    ring: RingDescriptor, coefficients: Sequence[Polynomial]
) -> Tuple[Polynomial, Dict[Tuple[int, int], SkewSymmetricMatrix], Dict[str, Polynomial]]:
    """Q^s, the six matrices M^s_ij and the fourteen named unit Pfaffians."""
    Qs = build_Qs(ring, coefficients)
    matrices = {
        (i, j): pfaffian_matrix(ring, i, j, surface_partials(Qs, i, j))
        for i, j in itertools.combinations(range(1, 5), 2)
    }
    found, conflicts = classify_pfaffians(ring, matrices)
    if conflicts:
        raise AssertionError(f"Pfaffian naming is not unique: {conflicts[0]}")
    named: Dict[str, Polynomial] = {}
    for t in range(1, 5):
        named[f"e_sxy_{t}"] = found.e_xy[t]
        named[f"e_szy_{t}"] = found.e_zy[t]
    for i, j in itertools.combinations(range(1, 5), 2):
        named[f"e_sy_{i}{j}"] = found.e_y[(i, j)]
    return Qs, matrices, named


def build_eigenforms(ring: RingDescriptor) -> Dict[str, Polynomial]:
    """The forms m^i_j; the zeta-bearing ones only when the field has a primitive 6th root."""
    g = ring.gen
    forms = {
        "m0_1": g("z1") + g("z2") + g("z3"),
        "m0_2": g("z4"),
        "m3_1": g("x1") + g("x2") + g("x3"),
        "m3_2": g("x4"),
    }
    fld = ring.field
    if fld.has_sixth_root():
        zeta = primitive_sixth_root(fld)
        zeta2, zeta4 = fld.pow(zeta, 2), fld.pow(zeta, 4)
        forms["m1_1"] = g("x1") + g("x2").scale(zeta2) + g("x3").scale(zeta4)
        forms["m2_1"] = g("z1") + g("z2").scale(zeta4) + g("z3").scale(zeta2)
        forms["m4_1"] = g("z1") + g("z2").scale(zeta2) + g("z3").scale(zeta4)
        forms["m5_1"] = g("x1") + g("x2").scale(zeta4) + g("x3").scale(zeta2)
    return dict(sorted(forms.items()))


def form_eigenvalue_exponent(name: str) -> int:
    """m^i_j is a zeta^i eigenvector."""
    return int(name[1])


def build_sections(
    ring: RingDescriptor, coefficients: Sequence[Polynomial], forms: Mapping[str, Polynomial]
) -> Dict[str, Polynomial]:
    g = ring.gen
    r5, r6, r7, r8 = coefficients[4:8]
    h4 = g("y4") + r6 * (g("y1") + g("y2") + g("y3"))
    if ZETA_FORMS <= set(forms):
        h4 = h4 + r7 * forms["m1_1"] * forms["m2_1"] + r8 * forms["m4_1"] * forms["m5_1"]
    elif not (r7.is_zero() and r8.is_zero()):
        raise UnsupportedFieldError(
            f"h4 with r7, r8 needs a primitive 6th root of unity; {ring.field_spec} has none"
        )
    return {
        "h1": forms["m0_1"],
        "h2": forms["m0_2"],
        "h3": forms["m3_2"] + r5 * forms["m3_1"],
        "h4": h4,
    }


def parse_sections(ring: RingDescriptor, texts: Sequence[str]) -> Dict[str, Polynomial]:
    """User-supplied h1..h4 (degrees 1, 1, 1, 2) in the text grammar."""
    if len(texts) != 4:
        raise ValueError(f"four forms h1..h4 are required, got {len(texts)}")
    sections = {}
    for (name, degree), text in zip(SECTION_DEGREES.items(), texts):
        poly = parse_poly(text, ring)
        if poly.is_zero() or weighted_degree(poly) != degree:
            raise ValueError(f"{name} must be homogeneous of degree {degree}: {text!r}")
        sections[name] = poly
    return sections


@dataclass(eq=False)
class CampedelliSurface:
    ring: RingDescriptor
    params: Optional[CampedelliParams]
    coefficients: Tuple[Polynomial, ...]
    F: Tuple[Polynomial, ...]
    Qs: Polynomial
    matrices: Dict[Tuple[int, int], SkewSymmetricMatrix]
    I: Ideal
    forms: Dict[str, Polynomial]
    sections: Dict[str, Polynomial]
    T: Ideal
    custom_sections: bool = False

    @property
    def symbolic(self) -> bool:
        return self.params is None

    def to_dict(self) -> Dict[str, object]:
        return {
            "ring": self.ring.to_dict(),
            "params": None if self.params is None else self.params.to_dict(),
            "Qs": format_poly(self.Qs),
            "I": {name: format_poly(g) for name, g in self.I.generators.items()},
            "forms": {name: format_poly(m) for name, m in self.forms.items()},
            "sections": {name: format_poly(h) for name, h in self.sections.items()},
        }


@lru_cache(maxsize=64)
def _build_surface(
    params: Optional[CampedelliParams], field: FieldSpec, h_forms: Optional[Tuple[str, ...]]
) -> CampedelliSurface:
    ring = surface_ring(field, symbolic_r=params is None)
    coefficients = parameter_polys(ring, params)
    Qs, matrices, named = build_pfaffian_generators(ring, coefficients)
    forms = build_eigenforms(ring)
    if h_forms is None:
        sections = build_sections(ring, coefficients, forms)
    else:
        sections = parse_sections(ring, h_forms)
    I = Ideal(ring, named)
    return CampedelliSurface(
        ring=ring,
        params=params,
        coefficients=coefficients,
        F=build_F_basis(ring),
        Qs=Qs,
        matrices=matrices,
        I=I,
        forms=forms,
        sections=sections,
        T=I.extend(sections),
        custom_sections=h_forms is not None,
    )


def build_surface_ideal(
    params: Optional[CampedelliParams] = None,
    *,
    field: Optional[FieldSpec] = None,
    h_forms: Optional[Sequence[str]] = None,
) -> CampedelliSurface:
    """Construct A_4^s, I^s_4, the eigenforms, h_1..h_4 and T^s.

    Without ``params`` the r's stay symbolic, over ``field`` (default Q(w)).
    """
    if params is not None:
        if field is not None and field != params.field:
            raise ValueError(f"params live over {params.field}, not {field}")
        field = params.field
        if params.needs_zeta and not params.field_handle.has_sixth_root() and h_forms is None:
            raise UnsupportedFieldError(
                f"r7/r8 are nonzero but {params.field} has no primitive 6th root of unity"
            )
    field = field or FieldSpec.cyclotomic6()
    return _build_surface(params, field, None if h_forms is None else tuple(h_forms))


def verify_explicit_table(field: Optional[FieldSpec] = None) -> CheckResult:
    """The fourteen Pfaffians with symbolic r1..r4 against the hard-coded table."""
    ring = surface_ring(field or FieldSpec.rationals(), symbolic_r=True)
    _, _, named = build_pfaffian_generators(ring, parameter_polys(ring, None))
    failures: List[Dict[str, Any]] = []
    for name, text in EXPLICIT_TABLE.items():
        expected = parse_poly(text, ring)
        computed = named[name]
        if computed != expected:
            failures.append(
                {
                    "generator": name,
                    "expected": format_poly(expected),
                    "computed": format_poly(computed),
                    "difference": format_poly(computed - expected),
                }
            )
    extra = sorted(set(named) - set(EXPLICIT_TABLE))
    if extra:
        failures.append({"unexpected_generators": extra})
    return outcome("campedelli.explicit_table", failures, {"generators": len(named)})


def solve_sections(surface: CampedelliSurface) -> Dict[str, Polynomial]:
    """Images of z3, z4, x4, y4 in A that make every h_i vanish."""
    if surface.symbolic or surface.custom_sections:
        raise ValueError("the reduction to A needs concrete parameters and the standard sections")
    A = reduced_ring(surface.ring.field_spec)
    images: Dict[str, Polynomial] = {}
    for section, var in SOLVED_BY_SECTION:
        rest = surface.sections[section] - surface.ring.gen(var)
        images[var] = -substitute(rest, images, A)
    return images


def reduce_to_A(surface: CampedelliSurface) -> Ideal:
    """L: the image of I^s_4 under the substitution solving h_1..h_4."""
    A = reduced_ring(surface.ring.field_spec)
    images = solve_sections(surface)
    for name, h in surface.sections.items():
        residue = substitute(h, images, A)
        if not residue.is_zero():
            raise AssertionError(f"section {name} does not vanish on A: {format_poly(residue)}")
    return Ideal(A, {name: substitute(g, images, A) for name, g in surface.I.generators.items()})


def reference_L(field: FieldSpec) -> Ideal:
    A = reduced_ring(field)
    return Ideal(A, {f"l{k}": parse_poly(text, A) for k, text in enumerate(REFERENCE_L_GENERATORS, start=1)})


# -- genericity -----------------------------------------------------------------


@dataclass(frozen=True)
class GenericityCondition:
    """``expression`` (a polynomial in r1..r8) must not vanish."""

    expression: str
    source: str

    @property
    def name(self) -> str:
        return f"{self.expression} != 0"


_CONDITIONS: Dict[str, GenericityCondition] = {}


def require_nonzero(expression: str, source: str) -> GenericityCondition:
    """Register a nonvanishing condition a verification step depends on."""
    condition = _CONDITIONS.get(expression)
    if condition is None:
        condition = GenericityCondition(expression, source)
        _CONDITIONS[expression] = condition
    return condition


def registered_conditions() -> List[GenericityCondition]:
    return list(_CONDITIONS.values())


def evaluate_condition(condition: GenericityCondition, params: CampedelliParams) -> Any:
    ring = parameter_ring(params.field)
    values = {name: ring.constant(v) for name, v in zip(R_NAMES, params.r)}
    value = substitute(parse_poly(condition.expression, ring), values, ring)
    return value.coefficient(ring.one_monomial())


def evaluate_genericity(params: CampedelliParams) -> List[GenericityEntry]:
    fld = params.field_handle
    nonzero = sum(1 for v in params.r[:4] if not fld.is_zero(v))
    entries = [GenericityEntry("(r1,r2,r3,r4) != 0", f"{nonzero} nonzero", nonzero > 0)]
    if fld.characteristic:
        entries.append(
            GenericityEntry("characteristic != 3", str(fld.characteristic), fld.characteristic != 3)
        )
    for condition in registered_conditions():
        value = evaluate_condition(condition, params)
        entries.append(GenericityEntry(condition.name, fld.format(value), not fld.is_zero(value)))
    return entries


def require_generic(params: CampedelliParams) -> List[GenericityEntry]:
    entries = evaluate_genericity(params)
    for entry in entries:
        if not entry.ok:
            raise GenericityError(entry.condition, entry.value)
    return entries


__all__ = [
    "build_eigenforms",
    "build_F_basis",
    "build_pfaffian_generators",
    "build_Qs",
    "build_sections",
    "build_surface_ideal",
    "CampedelliParams",
    "CampedelliSurface",
    "DIMENSION_ANCHOR",
    "evaluate_genericity",
    "EXPLICIT_TABLE",
    "form_eigenvalue_exponent",
    "GenericityCondition",
    "GenericityError",
    "parameter_ring",
    "parse_sections",
    "R_NAMES",
    "reduce_to_A",
    "REDUCED_VARIABLES",
    "reduced_ring",
    "REDUCTION_ANCHOR",
    "reference_L",
    "REFERENCE_L_GENERATORS",
    "registered_conditions",
    "require_generic",
    "require_nonzero",
    "solve_sections",
    "surface_ring",
    "SURFACE_VARIABLES",
    "SURFACE_WEIGHTS",
    "ZETA_FORMS",
]
