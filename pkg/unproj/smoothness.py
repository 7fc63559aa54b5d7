"""Jacobian-criterion probe: the surface is smooth away from the vertex of the cone."""

from __future__ import annotations

import itertools
import logging
import random
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .campedelli import CampedelliParams, build_surface_ideal, reduce_to_A
from .coeff import FieldKind
from .groebner import EngineBudget, Ideal, ResourceLimitError, dimension
from .pfaffian import determinant
from .polyring import Polynomial, partial_derivative
from .report import CheckResult, CheckStatus, outcome

CODIMENSION = 5
# minors added per stage; None means every remaining minor
DEFAULT_STAGES: Tuple[Optional[int], ...] = (24, 96, 384, None)


def jacobian(ideal: Ideal) -> List[List[Polynomial]]:
    """Rows are generators, columns are the ring variables."""
    return [[partial_derivative(g, v) for v in ideal.ring.variables] for g in ideal.polys]


def minor_indices(nrows: int, ncols: int, size: int) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    return list(
        itertools.product(itertools.combinations(range(nrows), size), itertools.combinations(range(ncols), size))
    )


def minor(matrix: Sequence[Sequence[Polynomial]], rows: Sequence[int], cols: Sequence[int]) -> Polynomial:
    return determinant([[matrix[r][c] for c in cols] for r in rows])


def smoothness_probe(
    params: CampedelliParams,
    budget: Optional[EngineBudget] = None,
    logger: Optional[logging.Logger] = None,
    seed: int = 0,
    stages: Sequence[Optional[int]] = DEFAULT_STAGES,
    label: str = "params",
) -> CheckResult:
    """dim(L + 5x5 minors of its Jacobian) = 0, adding random minors stage by stage.

    Dimension can only drop as minors are added, so every completed stage gives
    an upper bound for the singular locus; a budget overrun reports that bound.
    """
    log = logger or logging.getLogger(__name__)
    check_id = f"campedelli.smoothness.{label}"
    if params.field.kind is not FieldKind.PRIME_FIELD:
        raise ValueError("the smoothness probe runs over a prime field")
    if params.needs_zeta:
        raise ValueError("the smoothness probe expects r7 = r8 = 0")

    L = reduce_to_A(build_surface_ideal(params))
    J = jacobian(L)
    details: Dict[str, Any] = {
        "params": params.to_dict(),
        "jacobian_shape": [len(J), len(J[0])],
        "stages": [],
    }
    failures: List[Dict[str, Any]] = []
    try:
        base_dim = dimension(L, budget, log)
    except ResourceLimitError as exc:
        details["error"] = str(exc)
        return CheckResult(check_id, CheckStatus.RESOURCE_LIMIT, details, primes=[params.field.modulus])
    details["dimension_L"] = base_dim
    if base_dim != 3:
        failures.append({"dimension_L": base_dim, "expected": 3})

    pending = minor_indices(len(J), len(J[0]), CODIMENSION)
    random.Random(seed).shuffle(pending)
    current = L
    bound = base_dim
    added = 0
    for stage, size in enumerate(stages, start=1):
        if not pending or bound <= 0:
            break
        take = pending if size is None else pending[:size]
        pending = [] if size is None else pending[size:]
        minors = [m for m in (minor(J, rows, cols) for rows, cols in take) if not m.is_zero()]
        added += len(minors)
        # restart from the previous basis rather than from L
        previous = list(current.groebner(budget, log).elements)
        current = Ideal.from_polys(L.ring, previous + minors, prefix="s")
        try:
            bound = dimension(current, budget, log)
        except ResourceLimitError as exc:
            log.warning("smoothness stage %d hit the budget; dimension bound stays %d", stage, bound)
            details.update({"error": str(exc), "dimension_bound": bound, "minors_added": added})
            return CheckResult(
                check_id,
                CheckStatus.RESOURCE_LIMIT,
                details,
                primes=[params.field.modulus],
                notes=[f"singular locus dimension <= {bound}"],
            )
        details["stages"].append({"stage": stage, "minors": len(minors), "dimension": bound})
        log.info("smoothness stage %d: %d nonzero minors, dimension %d", stage, len(minors), bound)

    details.update({"dimension_bound": bound, "minors_added": added})
    if bound > 0:
        failures.append({"singular_locus_dimension": bound, "basis": current.groebner(budget).to_dict()["basis"]})
    return outcome(check_id, failures, details, primes=[params.field.modulus])


__all__ = ["CODIMENSION", "jacobian", "minor", "minor_indices", "smoothness_probe"]
