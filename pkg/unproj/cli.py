"""Command-line interface for the unprojection verification toolkit."""

from __future__ import annotations

import argparse
import json
import logging
from pathlib import Path

from .io_utils import (
    RunPaths,
    generate_run_id,
    prepare_run_directories,
    relative_artifact_path,
    save_text,
    write_json,
)
from .logging_utils import build_logger, release_handlers
from .report import VerificationReport, emit_report
from .runner import ELEMENTS, TARGETS, RunConfig, run_construct, run_verification


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Exact verification of binomial-Pfaffian unprojection formats"
    )

    subparsers = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--run-id", dest="run_id", help="Optional run identifier")
    common.add_argument("--verbose", action="store_true", help="Enable verbose logging")
    common.add_argument("--format", choices=("json", "text"), default="json", help="Output format")
    common.add_argument("--out", type=Path, help="Also write the output to this file")

    construct_parser = subparsers.add_parser(
        "construct", help="Emit the named generators of I_p or of the surface ideal", parents=[common]
    )
    construct_parser.add_argument(
        "--campedelli", action="store_true", help="Build I^s_4, T^s and L instead of the generic I_p"
    )
    _add_ring_arguments(construct_parser)

    verify_parser = subparsers.add_parser(
        "verify", help="Run a verification suite and emit a report", parents=[common]
    )
    verify_parser.add_argument("target", choices=TARGETS, help="Which suite to run")
    _add_ring_arguments(verify_parser)
    verify_parser.add_argument("--seed", type=int, default=0, help="Seed for random parameters and primes")
    verify_parser.add_argument("--budget", type=int, help="Maximum critical pairs per Groebner basis")
    verify_parser.add_argument(
        "--element", choices=sorted(ELEMENTS), help="Group element for the fixed-locus suite (default: both)"
    )
    verify_parser.add_argument("--samples", type=int, default=3, help="Random parameter vectors per prime")
    verify_parser.add_argument("--jobs", type=int, default=1, help="Worker processes")
    verify_parser.add_argument(
        "--stable", action="store_true", help="Drop timings so identical runs give identical JSON"
    )

    report_parser = subparsers.add_parser(
        "report", help="Re-emit a saved JSON report", parents=[common]
    )
    report_parser.add_argument("--input", required=True, type=Path, help="Report JSON written by verify")

    return parser


def _add_ring_arguments(subparser: argparse.ArgumentParser) -> None:
    subparser.add_argument("--n", type=int, default=3, help="Number of unprojection stages of the generic format")
    subparser.add_argument("--stage", type=int, help="Restrict to stage p")
    subparser.add_argument("--params", dest="params_file", type=Path, help="JSON array of r1..r8")
    subparser.add_argument("--prime", type=int, help="Work over GF(P) instead of Q")
    subparser.add_argument("--symbolic-r", action="store_true", help="Keep the r's as variables")
    subparser.add_argument("--h-forms", dest="h_forms_file", type=Path, help="JSON array of h1..h4 texts")


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        target=getattr(args, "target", None) or ("campedelli" if getattr(args, "campedelli", False) else None),
        n=getattr(args, "n", 3),
        stage=getattr(args, "stage", None),
        params_file=getattr(args, "params_file", None),
        prime=getattr(args, "prime", None),
        symbolic_r=getattr(args, "symbolic_r", False),
        seed=getattr(args, "seed", 0),
        budget=getattr(args, "budget", None),
        format=args.format,
        out=args.out,
        element=getattr(args, "element", None),
        jobs=max(1, getattr(args, "jobs", 1)),
        stable=getattr(args, "stable", False),
        h_forms_file=getattr(args, "h_forms_file", None),
        input=getattr(args, "input", None),
        samples=max(1, getattr(args, "samples", 3)),
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = _config_from_args(args)

    run_id = args.run_id or generate_run_id()
    step_name = args.command if config.target is None else f"{args.command}-{config.target}"
    run_paths = prepare_run_directories(run_id, step_name)
    logger = build_logger(run_paths, verbose=args.verbose)
    try:
        return _execute(parser, args, config, run_paths, logger)
    finally:
        release_handlers()


def _execute(
    parser: argparse.ArgumentParser,
    args: argparse.Namespace,
    config: RunConfig,
    run_paths: RunPaths,
    logger: logging.Logger,
) -> int:
    try:
        if args.command == "construct":
            result = run_construct(config, logger)
            # generator names keep their construction order
            output = json.dumps(result, indent=2, ensure_ascii=False)
            exit_code = 0
        elif args.command == "verify":
            report = run_verification(config, logger)
            result = report.to_dict()
            output = emit_report(report, config.format)
            exit_code = report.exit_code()
        elif args.command == "report":
            payload = json.loads(config.input.read_text(encoding="utf-8"))
            report = VerificationReport.from_dict(payload)
            result = report.to_dict()
            output = emit_report(report, config.format)
            exit_code = report.exit_code()
        else:
            parser.error(f"Unknown command: {args.command}")
    except (ValueError, OSError) as exc:
        logger.error("%s", exc)
        parser.error(str(exc))

    summary_path = run_paths.summary_path
    write_json(summary_path, result, sort_keys=args.command != "construct")
    logger.info("wrote %s", relative_artifact_path(summary_path))
    if config.out is not None:
        save_text(config.out, output + "\n")
        logger.info("wrote %s", relative_artifact_path(config.out))

    print(output)
    return exit_code


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
