"""Freeness of the Z/6 action: no point of the cone other than the vertex is fixed up to scaling.

Every nontrivial element has g^2 or g^3 as a power, so it suffices to show
that g^t P = h*P (t = 2, 3) forces P = 0. For each scalar h allowed by the
eigenvalues of g^t on the x, z coordinates we build the weighted-homogeneous
ideal F_h = T^s + (g^t P - h*P) in the point coordinates; dim F_h = 0 means
only the vertex survives. The hand case analysis is replayed as exact
substitutions with r symbolic, and every scalar it divides by is registered
as a genericity condition.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Tuple

from .campedelli import (
    X_NAMES,
    Y_NAMES,
    Z_NAMES,
    CampedelliParams,
    CampedelliSurface,
    build_surface_ideal,
    require_generic,
    require_nonzero,
)
from .coeff import FieldSpec, make_field, primitive_sixth_root, sixth_roots_of_unity
from .groebner import EngineBudget, Ideal, dimension
from .pfaffian import matrix_rank
from .polyring import Polynomial, RingDescriptor, format_poly, parse_poly, substitute
from .report import CheckResult, outcome
from .symmetry import GroupAction, PointCoordinates

# admissible h = zeta^k on the x, z block
EXPECTED_ADMISSIBLE = {2: (0, 2, 4), 3: (0, 3)}

PRINTED_STAGE3_RELATION = "r1*x1^3 + 3*r3*x1*z1^2"
PRINTED_STAGE4_RELATION = "3*r1*x1^3 + r2*x1*z1^2"

Substitution = Callable[[RingDescriptor, Any], Dict[str, Polynomial]]


def _zero(ring: RingDescriptor, names) -> Dict[str, Polynomial]:
    return {v: ring.zero() for v in names}


def _g2_trivial(ring: RingDescriptor, omega: Any) -> Dict[str, Polynomial]:
    # a_x1 = a_x2 = a_x3, then h1, h2 kill z and h3 gives a_x4 = -3 r5 a_x1
    x1 = ring.gen("x1")
    return {
        "x2": x1,
        "x3": x1,
        "x4": ring.gen("r5") * x1 * -3,
        **_zero(ring, Z_NAMES),
    }


def _g2_twisted(ring: RingDescriptor, omega: Any) -> Dict[str, Polynomial]:
    fld = ring.field
    omega2, omega4 = fld.pow(omega, 2), fld.pow(omega, 4)
    x1, z1, y1 = ring.gen("x1"), ring.gen("z1"), ring.gen("y1")
    return {
        "x2": x1.scale(omega),
        "x3": x1.scale(omega2),
        "z2": z1.scale(omega),
        "z3": z1.scale(omega2),
        "y2": y1.scale(omega2),
        "y3": y1.scale(omega4),
        **_zero(ring, ("x4", "z4", "y4")),
    }


def _g2_twisted_y0(ring: RingDescriptor, omega: Any) -> Dict[str, Polynomial]:
    return {**_g2_twisted(ring, omega), **_zero(ring, Y_NAMES)}


def _g2_twisted_x0(ring: RingDescriptor, omega: Any) -> Dict[str, Polynomial]:
    return {**_g2_twisted_y0(ring, omega), **_zero(ring, X_NAMES)}


def _g2_twisted_z0(ring: RingDescriptor, omega: Any) -> Dict[str, Polynomial]:
    return {**_g2_twisted_y0(ring, omega), **_zero(ring, Z_NAMES)}


def _g3_plus(ring: RingDescriptor, omega: Any) -> Dict[str, Polynomial]:
    return _zero(ring, X_NAMES + Y_NAMES)


def _g3_minus(ring: RingDescriptor, omega: Any) -> Dict[str, Polynomial]:
    return _zero(ring, Z_NAMES + Y_NAMES)


def _g3_minus_x1_only(ring: RingDescriptor, omega: Any) -> Dict[str, Polynomial]:
    return _zero(ring, ("x2", "x3", "x4") + Z_NAMES + Y_NAMES)


SUBSTITUTIONS: Dict[str, Substitution] = {
    "g2.trivial": _g2_trivial,
    "g2.twisted": _g2_twisted,
    "g2.twisted.y0": _g2_twisted_y0,
    "g2.twisted.x0": _g2_twisted_x0,
    "g2.twisted.z0": _g2_twisted_z0,
    "g3.plus": _g3_plus,
    "g3.minus": _g3_minus,
    "g3.minus.x1": _g3_minus_x1_only,
}


@dataclass(frozen=True)
class IdentityReplay:
    """``generator`` under ``substitution`` must equal ``expected`` (r symbolic).

    ``generator`` is a generator or section name, or ``combination`` for
    r1*x1*e_sxy_4 + 3*r2*z1*e_szy_4.
    """

    t: int
    h_exponent: int
    substitution: str
    generator: str
    expected: str
    condition: Optional[str] = None

    @property
    def label(self) -> str:
        return f"g{self.t}.zeta^{self.h_exponent}.{self.substitution}.{self.generator}"


def _twisted_replays(k: int) -> List[IdentityReplay]:
    return [
        IdentityReplay(2, k, "g2.twisted", "e_sxy_1", "x1*y1"),
        IdentityReplay(2, k, "g2.twisted", "e_szy_1", "z1*y1"),
        IdentityReplay(2, k, "g2.twisted.y0", "e_sxy_4", "3*r2*x1^2*z1 + r4*z1^3"),
        IdentityReplay(2, k, "g2.twisted.y0", "e_szy_4", "-r1*x1^3 - 3*r3*x1*z1^2"),
        IdentityReplay(
            2, k, "g2.twisted.y0", "combination", "r1*r4*x1*z1^3 - 9*r2*r3*x1*z1^3", "r1*r4 - 9*r2*r3"
        ),
        IdentityReplay(2, k, "g2.twisted.z0", "e_szy_4", "-r1*x1^3", "r1"),
        IdentityReplay(2, k, "g2.twisted.x0", "e_sxy_4", "r4*z1^3", "r4"),
    ]


REPLAYS: Tuple[IdentityReplay, ...] = (
    IdentityReplay(2, 0, "g2.trivial", "e_szy_4", "-r1*x1^3", "r1"),
    *_twisted_replays(2),
    *_twisted_replays(4),
    IdentityReplay(3, 0, "g3.plus", "e_sy_14", "r3*r4*z2^2*z3^2", "r3*r4"),
    IdentityReplay(3, 0, "g3.plus", "e_sy_24", "r3*r4*z1^2*z3^2", "r3*r4"),
    IdentityReplay(3, 0, "g3.plus", "e_sy_34", "r3*r4*z1^2*z2^2", "r3*r4"),
    IdentityReplay(3, 3, "g3.minus", "e_sy_12", "r1*r3*x3^2*x4^2", "r1*r3"),
    IdentityReplay(3, 3, "g3.minus", "e_sy_13", "r1*r3*x2^2*x4^2", "r1*r3"),
    IdentityReplay(3, 3, "g3.minus", "e_sy_23", "r1*r3*x1^2*x4^2", "r1*r3"),
    IdentityReplay(3, 3, "g3.minus", "e_sy_14", "r1*r2*x2^2*x3^2", "r1*r2"),
    IdentityReplay(3, 3, "g3.minus", "e_sy_24", "r1*r2*x1^2*x3^2", "r1*r2"),
    IdentityReplay(3, 3, "g3.minus", "e_sy_34", "r1*r2*x1^2*x2^2", "r1*r2"),
    IdentityReplay(3, 3, "g3.minus.x1", "h3", "r5*x1", "r5"),
)

for _replay in REPLAYS:
    if _replay.condition:
        require_nonzero(_replay.condition, f"fixed_locus.g{_replay.t}")


def eigen_prefilter(t: int, field: FieldSpec) -> Tuple[int, ...]:
    """Exponents k such that zeta^k is an eigenvalue of P -> g^t P on the x, z coordinates."""
    fld = make_field(field)
    roots = sixth_roots_of_unity(fld)
    coordinates = X_NAMES + Z_NAMES
    matrix = GroupAction.surface().power(t).point_matrix(coordinates, fld)
    admissible = []
    for k, h in enumerate(roots):
        shifted = [
            [fld.sub(a, h) if r == c else a for c, a in enumerate(row)] for r, row in enumerate(matrix)
        ]
        if matrix_rank(shifted, fld) < len(coordinates):
            admissible.append(k)
    return tuple(admissible)


def fixed_locus_ideal(surface: CampedelliSurface, t: int, h: Any) -> Ideal:
    """F_h = T^s + (g^t P - h*P) in the point coordinates a_v."""
    P = PointCoordinates.generic(surface.ring.field_spec)
    moved = GroupAction.surface().power(t).act_on_point(P)
    generators = {name: P.evaluate(g) for name, g in surface.T.generators.items()}
    for v, diff in moved.differences(P.weighted_scale(h)).items():
        if not diff.is_zero():
            generators[f"fix_{v}"] = diff
    return Ideal(P.ring, generators)


def replay_identities(t: int, field: Optional[FieldSpec] = None) -> List[Dict[str, Any]]:
    """Run the substitution replays for g^t with r symbolic over ``field`` (default Q(w))."""
    surface = build_surface_ideal(None, field=field)
    ring = surface.ring
    fld = ring.field
    zeta = primitive_sixth_root(fld)
    results = []
    for replay in REPLAYS:
        if replay.t != t:
            continue
        assignment = SUBSTITUTIONS[replay.substitution](ring, fld.pow(zeta, replay.h_exponent))
        if replay.generator == "combination":
            e = substitute(surface.T["e_sxy_4"], assignment, ring)
            z = substitute(surface.T["e_szy_4"], assignment, ring)
            image = ring.gen("r1") * ring.gen("x1") * e + ring.gen("r2") * ring.gen("z1") * z * 3
        else:
            image = substitute(surface.T[replay.generator], assignment, ring)
        expected = parse_poly(replay.expected, ring)
        entry: Dict[str, Any] = {
            "replay": replay.label,
            "expected": format_poly(expected),
            "computed": format_poly(image),
            "ok": image == expected,
        }
        if replay.condition:
            entry["condition"] = f"{replay.condition} != 0"
        results.append(entry)
    return results


def stage4_resolution(field: Optional[FieldSpec] = None) -> Dict[str, Any]:
    """Which printed relation the derived e_szy_4 reduction matches, for h = zeta^2 and zeta^4."""
    surface = build_surface_ideal(None, field=field)
    ring = surface.ring
    fld = ring.field
    zeta = primitive_sixth_root(fld)
    stage3 = parse_poly(PRINTED_STAGE3_RELATION, ring)
    stage4 = parse_poly(PRINTED_STAGE4_RELATION, ring)
    out: Dict[str, Any] = {}
    for k in (2, 4):
        assignment = _g2_twisted_y0(ring, fld.pow(zeta, k))
        relation = -substitute(surface.T["e_szy_4"], assignment, ring)
        out[f"zeta^{k}"] = {
            "derived": format_poly(relation),
            "matches_stage3_print": relation == stage3,
            "matches_stage4_print": relation == stage4,
        }
    return out


def fixed_locus_check(
    t: int,
    params: CampedelliParams,
    budget: Optional[EngineBudget] = None,
    logger: Optional[logging.Logger] = None,
    label: str = "params",
) -> CheckResult:
    log = logger or logging.getLogger(__name__)
    if t not in EXPECTED_ADMISSIBLE:
        raise ValueError(f"the fixed-locus check covers g^2 and g^3, not g^{t}")
    genericity = require_generic(params)
    fld = params.field_handle
    roots = sixth_roots_of_unity(fld)
    failures: List[Dict[str, Any]] = []

    admissible = eigen_prefilter(t, params.field)
    if admissible != EXPECTED_ADMISSIBLE[t]:
        failures.append({"admissible": list(admissible), "expected": list(EXPECTED_ADMISSIBLE[t])})

    surface = build_surface_ideal(params)
    dimensions: Dict[str, int] = {}
    for k in admissible:
        ideal = fixed_locus_ideal(surface, t, roots[k])
        dim = dimension(ideal, budget, log)
        dimensions[f"zeta^{k}"] = dim
        log.info("fixed locus g^%d, h = zeta^%d: dimension %d", t, k, dim)
        if dim != 0:
            failures.append(
                {"t": t, "h": f"zeta^{k}", "dimension": dim, "basis": ideal.groebner(budget).to_dict()["basis"][:20]}
            )

    replays = replay_identities(t, params.field)
    failures.extend({"replay": r} for r in replays if not r["ok"])
    details: Dict[str, Any] = {
        "t": t,
        "admissible": [f"zeta^{k}" for k in admissible],
        "dimensions": dimensions,
        "replays": len(replays),
        "params": params.to_dict(),
    }
    if t == 2:
        details["stage4"] = stage4_resolution(params.field)
    primes = [params.field.modulus] if params.field.modulus else []
    return outcome(f"fixed_locus.g{t}.{label}", failures, details, genericity=genericity, primes=primes)


__all__ = [
    "eigen_prefilter",
    "EXPECTED_ADMISSIBLE",
    "fixed_locus_check",
    "fixed_locus_ideal",
    "IdentityReplay",
    "PRINTED_STAGE3_RELATION",
    "PRINTED_STAGE4_RELATION",
    "replay_identities",
    "REPLAYS",
    "stage4_resolution",
    "SUBSTITUTIONS",
]
