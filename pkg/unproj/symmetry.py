"""The Z/6 action on A_4^s, on ideals, and the induced action on points of the cone.

Elements of the group act on polynomials by substituting signed variables
(``g.f = f(g x)``). On a point P the induced action is the contragredient
one, ``(gP)_v = (g^-1 v)(P)``, so that f(gP) = (g^-1 f)(P) and V(T) is
preserved whenever T is.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .coeff import Field, FieldSpec
from .groebner import Ideal
from .polyring import Polynomial, RingDescriptor, format_poly, make_ring, substitute
from .campedelli import SURFACE_VARIABLES, SURFACE_WEIGHTS

GROUP_ORDER = 6

# generator g on variables: v -> sign * image
SURFACE_GENERATOR: Tuple[Tuple[str, int, str], ...] = (
    ("x1", -1, "x2"),
    ("x2", -1, "x3"),
    ("x3", -1, "x1"),
    ("x4", -1, "x4"),
    ("z1", 1, "z2"),
    ("z2", 1, "z3"),
    ("z3", 1, "z1"),
    ("z4", 1, "z4"),
    ("y1", -1, "y2"),
    ("y2", -1, "y3"),
    ("y3", -1, "y1"),
    ("y4", -1, "y4"),
)

# gP as printed next to the action table: coordinate v of gP is sign * a_w
PRINTED_POINT_FORMULA: Dict[str, Tuple[int, str]] = {
    "x1": (-1, "x3"),
    "x2": (-1, "x1"),
    "x3": (-1, "x2"),
    "x4": (-1, "x4"),
    "z1": (1, "z3"),
    "z2": (1, "z1"),
    "z3": (1, "z2"),
    "z4": (1, "z4"),
    "y1": (-1, "y3"),
    "y2": (-1, "y2"),
    "y3": (-1, "y1"),
    "y4": (-1, "y4"),
}


@dataclass(frozen=True)
class GroupAction:
    """A signed permutation of variables; unnamed variables are fixed."""

    images: Tuple[Tuple[str, int, str], ...]
    order: int = GROUP_ORDER

    def __post_init__(self) -> None:
        sources = [v for v, _, _ in self.images]
        targets = sorted(w for _, _, w in self.images)
        if sorted(sources) != targets:
            raise ValueError("images must permute the acted-on variables")
        if any(s not in (1, -1) for _, s, _ in self.images):
            raise ValueError("only signed permutations are supported")

    @classmethod
    def surface(cls) -> "GroupAction":
        return cls(SURFACE_GENERATOR)

    @classmethod
    def identity(cls, variables: Sequence[str] = SURFACE_VARIABLES) -> "GroupAction":
        return cls(tuple((v, 1, v) for v in variables))

    @cached_property
    def table(self) -> Dict[str, Tuple[int, str]]:
        return {v: (s, w) for v, s, w in self.images}

    @property
    def variables(self) -> List[str]:
        return [v for v, _, _ in self.images]

    def image(self, var: str) -> Tuple[int, str]:
        return self.table.get(var, (1, var))

    def compose(self, other: "GroupAction") -> "GroupAction":
        """self after other on polynomials: v -> other(v) with self applied to its variable."""
        names = list(dict.fromkeys(self.variables + other.variables))
        images = []
        for v in names:
            s1, w1 = other.image(v)
            s2, w2 = self.image(w1)
            images.append((v, s1 * s2, w2))
        return GroupAction(tuple(images), self.order)

    def power(self, k: int) -> "GroupAction":
        k %= self.order
        result = GroupAction.identity(self.variables)
        for _ in range(k):
            result = self.compose(result)
        return GroupAction(result.images, self.order)

    def inverse(self) -> "GroupAction":
        return self.power(self.order - 1)

    def is_identity(self) -> bool:
        return all(s == 1 and v == w for v, s, w in self.images)

    def apply(self, f: Polynomial) -> Polynomial:
        ring = f.ring
        assignment = {
            v: ring.gen(w) if s == 1 else -ring.gen(w)
            for v, s, w in self.images
            if ring.has_variable(v)
        }
        return substitute(f, assignment, ring)

    def apply_ideal(self, ideal: Ideal) -> Ideal:
        return Ideal(ideal.ring, {name: self.apply(g) for name, g in ideal.generators.items()})

    def preserves_degrees(self, ring: RingDescriptor) -> bool:
        return all(ring.weight(v) == ring.weight(w) for v, _, w in self.images if ring.has_variable(v))

    def act_on_point(self, point: "PointCoordinates") -> "PointCoordinates":
        inverse = self.inverse()
        values = {}
        for v in point.values:
            s, w = inverse.image(v)
            values[v] = point.values[w] if s == 1 else -point.values[w]
        return PointCoordinates(point.ring, values)

    def point_matrix(self, coordinates: Sequence[str], field: Field) -> List[List[Any]]:
        """Matrix of P -> gP restricted to ``coordinates`` (which must be preserved)."""
        inverse = self.inverse()
        position = {v: k for k, v in enumerate(coordinates)}
        rows = [[field.zero] * len(coordinates) for _ in coordinates]
        for row, v in enumerate(coordinates):
            s, w = inverse.image(v)
            if w not in position:
                raise ValueError(f"coordinate {v} is not mapped into the block")
            rows[row][position[w]] = field.from_int(s)
        return rows


@lru_cache(maxsize=None)
def point_ring(field: FieldSpec) -> RingDescriptor:
    """Coordinates a_v of a point, named ``a`` + variable, with the surface weights."""
    return make_ring([f"a{v}" for v in SURFACE_VARIABLES], SURFACE_WEIGHTS, field)


@dataclass(frozen=True, eq=False)
class PointCoordinates:
    """Coordinates of a point of the affine cone, keyed by surface variable."""

    ring: RingDescriptor
    values: Dict[str, Polynomial]

    @classmethod
    def generic(cls, field: FieldSpec) -> "PointCoordinates":
        ring = point_ring(field)
        return cls(ring, {v: ring.gen(f"a{v}") for v in SURFACE_VARIABLES})

    @classmethod
    def from_values(cls, field: FieldSpec, values: Mapping[str, Any]) -> "PointCoordinates":
        ring = point_ring(field)
        return cls(ring, {v: ring.constant(values.get(v, 0)) for v in SURFACE_VARIABLES})

    def coordinate(self, var: str) -> Polynomial:
        return self.values[var]

    def weighted_scale(self, h: Any) -> "PointCoordinates":
        """h*P: x and z coordinates times h, y coordinates times h^2."""
        fld = self.ring.field
        scaled = {}
        for v, value in self.values.items():
            power = 2 if v.startswith("y") else 1
            scaled[v] = value.scale(fld.pow(h, power))
        return PointCoordinates(self.ring, scaled)

    def evaluate(self, f: Polynomial) -> Polynomial:
        """f(P) for a polynomial on A_4^s with concrete coefficients."""
        return substitute(f, self.values, self.ring)

    def differences(self, other: "PointCoordinates") -> Dict[str, Polynomial]:
        return {v: self.values[v] - other.values[v] for v in self.values}

    def to_dict(self) -> Dict[str, str]:
        return {v: format_poly(value) for v, value in self.values.items()}


Target = Union[Polynomial, Ideal, PointCoordinates]


def apply_group(k: int, target: Target, action: Optional[GroupAction] = None) -> Target:
    """g^k applied to a polynomial, an ideal (generator-wise) or a point."""
    element = (action or GroupAction.surface()).power(k)
    if isinstance(target, Polynomial):
        return element.apply(target)
    if isinstance(target, Ideal):
        return element.apply_ideal(target)
    if isinstance(target, PointCoordinates):
        return element.act_on_point(target)
    raise TypeError(f"cannot apply a group element to {type(target).__name__}")


def printed_point_formula(point: PointCoordinates) -> PointCoordinates:
    values = {}
    for v, (s, w) in PRINTED_POINT_FORMULA.items():
        values[v] = point.values[w] if s == 1 else -point.values[w]
    return PointCoordinates(point.ring, values)


def compare_point_formulas(
    field: FieldSpec, action: Optional[GroupAction] = None, logger: Optional[logging.Logger] = None
) -> Dict[str, object]:
    """Coordinates where the printed gP differs from the derived contragredient action."""
    log = logger or logging.getLogger(__name__)
    generic = PointCoordinates.generic(field)
    derived = (action or GroupAction.surface()).act_on_point(generic)
    printed = printed_point_formula(generic)
    disagree = []
    for v in SURFACE_VARIABLES:
        if derived.values[v] != printed.values[v]:
            disagree.append(
                {
                    "coordinate": v,
                    "derived": format_poly(derived.values[v]),
                    "printed": format_poly(printed.values[v]),
                }
            )
    if disagree:
        log.warning(
            "printed point action differs from the derived one at %s",
            ", ".join(d["coordinate"] for d in disagree),
        )
    return {
        "agree": [v for v in SURFACE_VARIABLES if v not in {d["coordinate"] for d in disagree}],
        "disagree": disagree,
    }


def basis_vector_images(field: FieldSpec, action: Optional[GroupAction] = None) -> Dict[str, str]:
    """g f_v for each coordinate vector f_v, as ``sign`` + coordinate."""
    element = action or GroupAction.surface()
    out = {}
    for v in SURFACE_VARIABLES:
        point = PointCoordinates.from_values(field, {v: 1})
        moved = element.act_on_point(point)
        (w, value), = [(w, c) for w, c in moved.values.items() if not c.is_zero()]
        out[v] = ("-" if value == point.ring.constant(-1) else "") + w
    return out


__all__ = [
    "apply_group",
    "basis_vector_images",
    "compare_point_formulas",
    "GROUP_ORDER",
    "GroupAction",
    "point_ring",
    "PointCoordinates",
    "PRINTED_POINT_FORMULA",
    "printed_point_formula",
    "SURFACE_GENERATOR",
]
