"""Check catalogue and execution for the ``verify`` and ``construct`` commands."""

from __future__ import annotations

import inspect
import itertools
import json
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

from . import campedelli_checks as cc
from .campedelli import (
    CampedelliParams,
    GenericityError,
    build_surface_ideal,
    evaluate_genericity,
    reduce_to_A,
    verify_explicit_table,
)
from .coeff import FieldSpec, make_field, seeded_primes
from .fixed_locus import fixed_locus_check
from .groebner import EngineBudget, ResourceLimitError
from .io_utils import PARAMS_DIR
from .polyring import format_poly
from .report import CheckResult, CheckStatus, VerificationReport
from .smoothness import smoothness_probe
from . import unprojection as up

TARGETS = ("structural", "campedelli", "fixed-locus", "hilbert", "smoothness")
ELEMENTS = {"g2": 2, "g3": 3}
DEFAULT_PARAMS_FILE = PARAMS_DIR / "default.json"
HILBERT_PRIMES = (103, 31991)
STRUCTURAL_PRIME = 31991
RECHECK_PRIMES = 3
FIXED_LOCUS_PRIME = 103
SMOOTHNESS_PRIME = 103
# largest n for which the Groebner-based structural checks run with symbolic r
SYMBOLIC_GROEBNER_N = 3
CONCRETE_GROEBNER_N = 4


@dataclass(slots=True)
class RunConfig:
    command: str
    target: Optional[str] = None
    n: int = 3
    stage: Optional[int] = None
    params_file: Optional[Path] = None
    prime: Optional[int] = None
    symbolic_r: bool = False
    seed: int = 0
    budget: Optional[int] = None
    format: str = "json"
    out: Optional[Path] = None
    element: Optional[str] = None
    jobs: int = 1
    stable: bool = False
    h_forms_file: Optional[Path] = None
    input: Optional[Path] = None
    samples: int = 3

    def engine_budget(self) -> EngineBudget:
        budget = EngineBudget.from_env()
        if self.budget is not None:
            budget.max_pairs = self.budget
        return budget

    def field_spec(self, default_prime: Optional[int] = None) -> FieldSpec:
        prime = self.prime or default_prime
        return FieldSpec.prime_field(prime) if prime else FieldSpec.rationals()

    def h_forms(self) -> Optional[Tuple[str, ...]]:
        if self.h_forms_file is None:
            return None
        payload = json.loads(Path(self.h_forms_file).read_text(encoding="utf-8"))
        if not isinstance(payload, list) or not all(isinstance(item, str) for item in payload):
            raise ValueError(f"{self.h_forms_file}: expected a JSON array of four polynomial strings")
        return tuple(payload)


@dataclass(slots=True)
class PlannedCheck:
    check_id: str
    func: Callable[..., CheckResult]
    kwargs: Dict[str, Any] = field(default_factory=dict)


def generic_sample(
    field_spec: FieldSpec, rng: random.Random, zero_zeta_terms: bool = False, attempts: int = 100
) -> CampedelliParams:
    """Random parameters passing every registered genericity condition."""
    for _ in range(attempts):
        try:
            params = CampedelliParams.sample(field_spec, rng)
        except GenericityError:
            continue
        if zero_zeta_terms:
            zero = params.field_handle.zero
            params = CampedelliParams(params.r[:6] + (zero, zero), field_spec)
        if all(entry.ok for entry in evaluate_genericity(params)):
            return params
    raise RuntimeError(f"no generic parameters found over {field_spec} in {attempts} draws")


def load_params(config: RunConfig, field_spec: FieldSpec) -> CampedelliParams:
    return CampedelliParams.load(config.params_file or DEFAULT_PARAMS_FILE, field_spec)


def _structural_plan(config: RunConfig, budget: EngineBudget) -> List[PlannedCheck]:
    n = config.n
    generic = up.GenericConfig(n, config.field_spec())
    # Groebner-based checks run over a prime field
    gb_field = config.field_spec(STRUCTURAL_PRIME)
    gb_generic = up.GenericConfig(n, gb_field)
    stages = [config.stage] if config.stage is not None else list(range(1, n + 1))
    for p in stages:
        if not 1 <= p <= n:
            raise ValueError(f"--stage must lie in 1..{n}")
    rng = random.Random(config.seed)
    prefix = f"structural.n{n}"
    plan = [PlannedCheck(f"{prefix}.generators", up.verify_generators, {"config": generic})]
    for p in stages:
        plan.append(PlannedCheck(f"{prefix}.identities.p{p}", up.verify_identities, {"config": generic, "p": p}))
        plan.append(PlannedCheck(f"{prefix}.specialization.p{p}", up.specialization_check, {"config": generic, "p": p}))
        plan.append(
            PlannedCheck(f"{prefix}.base_change.p{p}", up.base_change_regular_sequence_check, {"config": generic, "p": p})
        )

    if n <= SYMBOLIC_GROEBNER_N or (config.symbolic_r and n <= CONCRETE_GROEBNER_N):
        recheck = seeded_primes(rng, RECHECK_PRIMES, exclude=(gb_field.modulus,))
        for p in stages:
            plan.append(
                PlannedCheck(
                    f"{prefix}.codimension.p{p}.symbolic",
                    up.verify_codimension,
                    {"config": gb_generic, "p": p, "budget": budget},
                )
            )
            for q in recheck:
                plan.append(
                    PlannedCheck(
                        f"{prefix}.codimension.p{p}.symbolic.gf{q}",
                        up.verify_codimension,
                        {
                            "config": up.GenericConfig(n, FieldSpec.prime_field(q)),
                            "p": p,
                            "budget": budget,
                            "label": f"symbolic.gf{q}",
                        },
                    )
                )
    elif n <= CONCRETE_GROEBNER_N:
        for k in range(1, config.samples + 1):
            values = up.random_r_values(gb_generic, rng)
            for p in stages:
                plan.append(
                    PlannedCheck(
                        f"{prefix}.codimension.p{p}.s{k}",
                        up.verify_codimension,
                        {"config": gb_generic, "p": p, "params": values, "budget": budget, "label": f"s{k}"},
                    )
                )

    if n <= SYMBOLIC_GROEBNER_N:
        for p in stages:
            plan.append(
                PlannedCheck(f"{prefix}.regular.xz.p{p}", up.regular_sequence_xp_zp, {"config": gb_generic, "p": p, "budget": budget})
            )
            for i, j in itertools.combinations(range(1, n + 1), 2):
                plan.append(
                    PlannedCheck(
                        f"{prefix}.regular.x{i}x{j}.p{p}",
                        up.regular_sequence_xi_xj,
                        {"config": gb_generic, "p": p, "i": i, "j": j, "budget": budget},
                    )
                )
            plan.append(
                PlannedCheck(
                    f"{prefix}.unprojection_pair.p{p}", up.verify_unprojection_pair, {"config": gb_generic, "p": p, "budget": budget}
                )
            )
            if p >= 2:
                plan.append(
                    PlannedCheck(
                        f"{prefix}.unprojection_variable.t{p}",
                        up.verify_unprojection_variable,
                        {"config": gb_generic, "t": p, "budget": budget},
                    )
                )
            plan.append(
                PlannedCheck(
                    f"{prefix}.linear_forms.p{p}",
                    up.linear_forms_regular_check,
                    {"config": gb_generic, "p": p, "count": 2, "rng": random.Random(config.seed + p), "budget": budget},
                )
            )
    return plan


def _campedelli_plan(config: RunConfig, budget: EngineBudget) -> List[PlannedCheck]:
    field_spec = config.field_spec()
    params = load_params(config, field_spec)
    h_forms = config.h_forms()
    plan = [
        PlannedCheck("campedelli.explicit_table", verify_explicit_table, {}),
        PlannedCheck("campedelli.identities.concrete", cc.verify_surface_identities, {"params": params}),
        PlannedCheck("campedelli.invariance.concrete", cc.verify_group_invariance, {"params": params, "budget": budget}),
        PlannedCheck("campedelli.dimension.R.anchor", cc.dimension_R_check, {"budget": budget}),
        PlannedCheck("campedelli.dimension.monomial_quotient", cc.monomial_quotient_check, {"field": field_spec}),
        PlannedCheck("campedelli.reference_L", cc.reference_L_check, {"field": field_spec, "budget": budget}),
        PlannedCheck(
            "campedelli.dimension.L.params",
            cc.dimension_L_check,
            {"params": params, "budget": budget, "h_forms": h_forms},
        ),
        PlannedCheck(
            "campedelli.hilbert.params",
            cc.hilbert_and_betti_check,
            {"params": params, "budget": budget, "h_forms": h_forms},
        ),
        PlannedCheck("campedelli.cone_lemma", cc.cone_lemma_check, {"params": params, "budget": budget}),
        PlannedCheck("campedelli.genericity", cc.genericity_conditions, {"params": params}),
    ]
    if config.symbolic_r:
        plan.append(PlannedCheck("campedelli.identities.symbolic", cc.verify_surface_identities, {}))
        plan.append(PlannedCheck("campedelli.invariance.symbolic", cc.verify_group_invariance, {}))
    return plan


def _hilbert_plan(config: RunConfig, budget: EngineBudget) -> List[PlannedCheck]:
    primes = (config.prime,) if config.prime else HILBERT_PRIMES
    rng = random.Random(config.seed)
    h_forms = config.h_forms()
    plan = []
    for prime in primes:
        field_spec = FieldSpec.prime_field(prime)
        for k in range(1, config.samples + 1):
            params = generic_sample(field_spec, rng)
            label = f"p{prime}.s{k}"
            plan.append(
                PlannedCheck(
                    f"campedelli.hilbert.{label}",
                    cc.hilbert_and_betti_check,
                    {"params": params, "budget": budget, "label": label, "h_forms": h_forms},
                )
            )
            plan.append(
                PlannedCheck(
                    f"campedelli.dimension.L.{label}",
                    cc.dimension_L_check,
                    {"params": params, "budget": budget, "label": label, "h_forms": h_forms},
                )
            )
    return plan


def _fixed_locus_plan(config: RunConfig, budget: EngineBudget) -> List[PlannedCheck]:
    field_spec = FieldSpec.prime_field(config.prime or FIXED_LOCUS_PRIME)
    if not make_field(field_spec).has_sixth_root():
        raise ValueError(f"the fixed-locus checks need p = 1 mod 6, got {field_spec}")
    elements = [ELEMENTS[config.element]] if config.element else sorted(ELEMENTS.values())
    rng = random.Random(config.seed)
    samples: List[Tuple[str, CampedelliParams]] = []
    if config.params_file is not None:
        samples.append(("params", load_params(config, field_spec)))
    samples += [(f"s{k}", generic_sample(field_spec, rng)) for k in range(1, config.samples + 1)]
    plan = []
    for t in elements:
        for label, params in samples:
            plan.append(
                PlannedCheck(
                    f"fixed_locus.g{t}.{label}",
                    fixed_locus_check,
                    {"t": t, "params": params, "budget": budget, "label": label},
                )
            )
    return plan


def _smoothness_plan(config: RunConfig, budget: EngineBudget) -> List[PlannedCheck]:
    field_spec = FieldSpec.prime_field(config.prime or SMOOTHNESS_PRIME)
    rng = random.Random(config.seed)
    if config.params_file is not None:
        params, label = load_params(config, field_spec), "params"
    else:
        params, label = generic_sample(field_spec, rng, zero_zeta_terms=True), "s1"
    return [
        PlannedCheck(
            f"campedelli.smoothness.{label}",
            smoothness_probe,
            {"params": params, "budget": budget, "seed": config.seed, "label": label},
        )
    ]


PLANNERS: Dict[str, Callable[[RunConfig, EngineBudget], List[PlannedCheck]]] = {
    "structural": _structural_plan,
    "campedelli": _campedelli_plan,
    "fixed-locus": _fixed_locus_plan,
    "hilbert": _hilbert_plan,
    "smoothness": _smoothness_plan,
}


def plan_checks(config: RunConfig) -> List[PlannedCheck]:
    if config.target not in PLANNERS:
        raise ValueError(f"unknown verification target {config.target!r}")
    return PLANNERS[config.target](config, config.engine_budget())


def _run_one(check: PlannedCheck, logger: Optional[logging.Logger] = None) -> CheckResult:
    log = logger or logging.getLogger(__name__)
    kwargs = dict(check.kwargs)
    if "logger" in inspect.signature(check.func).parameters:
        kwargs["logger"] = log
    started = time.perf_counter()
    try:
        result = check.func(**kwargs)
    except ResourceLimitError as exc:
        result = CheckResult(
            check.check_id,
            CheckStatus.RESOURCE_LIMIT,
            {"limit": exc.limit, "value": exc.value, "budget": exc.budget.to_dict()},
        )
    except GenericityError as exc:
        result = CheckResult(
            check.check_id, CheckStatus.FAIL, {"error": str(exc), "condition": exc.condition, "value": exc.value}
        )
    except Exception as exc:  # noqa: BLE001
        log.exception("check %s raised", check.check_id)
        result = CheckResult(check.check_id, CheckStatus.FAIL, {"error": f"{type(exc).__name__}: {exc}"})
    result.ms = round((time.perf_counter() - started) * 1000, 1)
    return result


def _log_result(log: logging.Logger, result: CheckResult) -> None:
    level = logging.INFO if result.status is not CheckStatus.FAIL else logging.WARNING
    log.log(level, "%s: %s (%.1f ms)", result.check_id, result.status.value, result.ms or 0.0)
    for entry in result.genericity:
        if not entry.ok:
            log.warning("%s: genericity condition %s fails (value %s)", result.check_id, entry.condition, entry.value)


def run_verification(config: RunConfig, logger: Optional[logging.Logger] = None) -> VerificationReport:
    log = logger or logging.getLogger(__name__)
    plan = plan_checks(config)
    log.info("verify %s: %d checks, seed %d, %d job(s)", config.target, len(plan), config.seed, config.jobs)
    report = VerificationReport(command=f"verify {config.target}", seed=config.seed)
    if config.jobs > 1 and len(plan) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            for result in pool.map(_run_one, plan):
                _log_result(log, result)
                report.add(result)
    else:
        for check in plan:
            log.info("running %s", check.check_id)
            result = _run_one(check, log)
            _log_result(log, result)
            report.add(result)
    if config.stable:
        report.strip_timings()
    log.info(report.summary_line())
    return report


def run_construct(config: RunConfig, logger: Optional[logging.Logger] = None) -> Dict[str, Any]:
    """Named generators of I_p (``--n``/``--stage``), or of I^s_4, T^s and L (``campedelli``)."""
    log = logger or logging.getLogger(__name__)
    if config.target == "campedelli":
        field_spec = config.field_spec()
        if config.symbolic_r and config.prime is None:
            # h4 carries r7, r8 symbolically and needs the sixth roots
            field_spec = FieldSpec.cyclotomic6()
        params = None if config.symbolic_r else load_params(config, field_spec)
        surface = build_surface_ideal(params, field=field_spec if params is None else None, h_forms=config.h_forms())
        payload = surface.to_dict()
        if params is not None and not surface.custom_sections:
            L = reduce_to_A(surface)
            payload["L"] = {name: format_poly(g) for name, g in L.generators.items()}
        log.info("constructed the surface ideal with %d generators", len(surface.T))
        return payload
    generic = up.GenericConfig(config.n, config.field_spec())
    p = config.n if config.stage is None else config.stage
    ideal = up.build_I(generic, p)
    log.info("constructed I_%d for n=%d: %d generators", p, config.n, len(ideal))
    return {
        "n": config.n,
        "stage": p,
        "ring": ideal.ring.to_dict(),
        "generators": {name: format_poly(g) for name, g in ideal.generators.items()},
    }


__all__ = [
    "ELEMENTS",
    "generic_sample",
    "plan_checks",
    "PlannedCheck",
    "run_construct",
    "run_verification",
    "RunConfig",
    "TARGETS",
]
