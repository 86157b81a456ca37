"""
Command-line interface for bfs-hvs.

Every subcommand reads a ``.hvs`` document, runs one engine operation
through the ``Workbench`` and prints deterministic text, or a JSON report
with ``--json``. Exit codes: 0 success, 1 the checked property is false,
2 input error, 3 capacity or hypothesis error.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence

from .algebra.checkers import Verdict, describe_verdict
from .algebra.fuzzy import BipolarFuzzySoftSet
from .algebra.space import VectorSubset
from .algebra.utils.rational_utils import format_rational, parse_rational
from .client import Workbench
from .dsl import serialize_document
from .exceptions import (
    BfsHvsError,
    CapacityError,
    ConstructionError,
    DomainError,
    HypothesisError,
    NameNotFoundError,
    OracleError,
    ParseError,
    PreconditionError,
    SpaceMismatchError,
    StructureError,
)
from .types import CHECK_METHODS, SuiteConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_CAPACITY = 3

INPUT_ERRORS = (
    ParseError,
    StructureError,
    DomainError,
    SpaceMismatchError,
    PreconditionError,
    NameNotFoundError,
)
CAPACITY_ERRORS = (CapacityError, HypothesisError, ConstructionError, OracleError)

# Options whose values may be negative fractions such as -2/5
_SIGNED_OPTIONS = ("--alpha", "--beta")


@dataclass
class CommandOutcome:
    """Exit code, text for standard output and the JSON report."""

    exit_code: int
    text: str
    report: Dict[str, Any] = field(default_factory=dict)
    error: bool = False

    def render(self, as_json: bool) -> str:
        if as_json:
            return json.dumps(self.report, indent=2, sort_keys=True)
        return self.text


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _id_list(text: str) -> List[str]:
    return [item.strip() for item in text.split(",") if item.strip()]


def _subset_text(subset: VectorSubset, wb: Workbench, space_name: str) -> str:
    return subset.describe(wb.space(space_name))


def _document_outcome(
    wb: Workbench,
    command: str,
    name: str,
    bfs: BipolarFuzzySoftSet,
    header: Optional[List[str]] = None,
    extra: Optional[Dict[str, Any]] = None,
) -> CommandOutcome:
    document = wb.derived_document(name, bfs)
    text = serialize_document(document, header=header).rstrip("\n")
    report = {"command": command, "name": name, "bfs": bfs.to_dict(), **(extra or {})}
    return CommandOutcome(EXIT_OK, text, report)


def cmd_check(wb: Workbench, args: argparse.Namespace) -> CommandOutcome:
    space = wb.space(args.space)
    report = space.axioms
    lines = []
    for result in report.results():
        if result.name.startswith("H"):
            status = "pass" if result.passed else "fail"
        else:
            status = "true" if result.passed else "false"
        line = f"{result.name}: {status}"
        if result.witness is not None:
            line += f" ({result.witness.describe(space)})"
        lines.append(line)
    lines.append(f"hvs: {'true' if report.is_hvs else 'false'}")
    return CommandOutcome(
        EXIT_OK if report.is_hvs else EXIT_FALSE,
        "\n".join(lines),
        {
            "command": "check",
            "space": args.space,
            "hvs": report.is_hvs,
            "axioms": report.to_dict(space),
        },
    )


def _verdict_dict(verdict: Verdict, wb: Workbench, bfs_name: str) -> Dict[str, Any]:
    space = wb.bfs(bfs_name).space
    return {
        "holds": verdict.holds,
        "witness": verdict.witness.to_dict(space) if verdict.witness else None,
    }


def cmd_check_bfs(wb: Workbench, args: argparse.Namespace) -> CommandOutcome:
    space = wb.bfs(args.bfs).space
    if args.method != "all":
        verdict = wb.check_bfs(args.bfs, args.method, args.require_hvs)
        return CommandOutcome(
            EXIT_OK if verdict.holds else EXIT_FALSE,
            describe_verdict(verdict, space),
            {
                "command": "check-bfs",
                "bfs": args.bfs,
                "method": args.method,
                **_verdict_dict(verdict, wb, args.bfs),
            },
        )
    result = wb.cross_check(args.bfs, args.require_hvs)
    lines = []
    for method in CHECK_METHODS:
        if method in result.verdicts:
            lines.append(describe_verdict(result.verdicts[method], space))
        else:
            lines.append(f"{method}: refused ({result.refusals[method]})")
    lines.append(f"agree: {'true' if result.agree else 'false'}")
    return CommandOutcome(
        EXIT_OK if result.holds else EXIT_FALSE,
        "\n".join(lines),
        {
            "command": "check-bfs",
            "bfs": args.bfs,
            "method": "all",
            "agree": result.agree,
            "holds": result.holds,
            "verdicts": {
                m: _verdict_dict(v, wb, args.bfs) for m, v in result.verdicts.items()
            },
            "refusals": dict(result.refusals),
        },
    )


def cmd_level(wb: Workbench, args: argparse.Namespace) -> CommandOutcome:
    space = wb.bfs(args.bfs).space
    level = wb.level(args.bfs, args.alpha, args.beta)
    lines = [f"{e}: {cut.describe(space)}" for e, cut in level.items()]
    return CommandOutcome(
        EXIT_OK,
        "\n".join(lines),
        {
            "command": "level",
            "bfs": args.bfs,
            "alpha": format_rational(level.alpha),
            "beta": format_rational(level.beta),
            "cuts": {e: cut.ids(space) for e, cut in level.items()},
        },
    )


def cmd_span(wb: Workbench, args: argparse.Namespace) -> CommandOutcome:
    result = wb.span(args.space, _id_list(args.set))
    space = wb.space(args.space)
    return CommandOutcome(
        EXIT_OK,
        result.describe(space),
        {"command": "span", "space": args.space, "span": result.ids(space)},
    )


def cmd_enumerate(wb: Workbench, args: argparse.Namespace) -> CommandOutcome:
    space = wb.space(args.space)
    subspaces = wb.enumerate_subhyperspaces(args.space)
    return CommandOutcome(
        EXIT_OK,
        "\n".join(s.describe(space) for s in subspaces),
        {
            "command": "enumerate-shs",
            "space": args.space,
            "subhyperspaces": [s.ids(space) for s in subspaces],
        },
    )


def cmd_sum(wb: Workbench, args: argparse.Namespace) -> CommandOutcome:
    name = args.name or f"{args.bfs}_plus_{args.other}"
    return _document_outcome(wb, "sum", name, wb.sum(args.bfs, args.other))


def cmd_scale(wb: Workbench, args: argparse.Namespace) -> CommandOutcome:
    name = args.name or f"{args.bfs}_times_{args.scalar}"
    return _document_outcome(wb, "scale", name, wb.scale(args.bfs, args.scalar))


def cmd_negate(wb: Workbench, args: argparse.Namespace) -> CommandOutcome:
    name = args.name or f"{args.bfs}_neg"
    return _document_outcome(wb, "negate", name, wb.negate(args.bfs))


def cmd_generate(wb: Workbench, args: argparse.Namespace) -> CommandOutcome:
    generated = wb.generate(args.bfs)
    name = args.name or f"{args.bfs}_generated"
    trace = generated.trace()
    return _document_outcome(
        wb, "generate", name, generated.result, header=trace, extra={"shells": trace}
    )


def cmd_normalize(wb: Workbench, args: argparse.Namespace) -> CommandOutcome:
    if args.strict_shift and args.mode != "shift":
        raise PreconditionError(
            "--strict-shift applies to --mode shift only", operation="normalize"
        )
    result = wb.normalize(args.bfs, args.mode, args.strict_shift)
    name = args.name or f"{args.bfs}_{args.mode}"
    return _document_outcome(wb, "normalize", name, result, extra={"mode": args.mode})


def cmd_characteristic(wb: Workbench, args: argparse.Namespace) -> CommandOutcome:
    params = _id_list(args.params)
    result = wb.characteristic(args.space, _id_list(args.set), params, args.variant)
    name = args.name or f"chi_{args.variant}"
    return _document_outcome(
        wb, "characteristic", name, result, extra={"variant": args.variant}
    )


def cmd_promote(wb: Workbench, args: argparse.Namespace) -> CommandOutcome:
    result = wb.promote(args.bfs, args.param, args.alpha, args.beta)
    name = args.name or f"{args.bfs}_promoted"
    return _document_outcome(wb, "promote", name, result)


def cmd_is_normal(wb: Workbench, args: argparse.Namespace) -> CommandOutcome:
    normal = wb.is_normal(args.bfs)
    return CommandOutcome(
        EXIT_OK if normal else EXIT_FALSE,
        f"is-normal: {'true' if normal else 'false'}",
        {"command": "is-normal", "bfs": args.bfs, "normal": normal},
    )


def cmd_verify(wb: Workbench, args: argparse.Namespace) -> CommandOutcome:
    config = SuiteConfig(
        instances=args.n,
        seed=args.seed,
        params=tuple(_id_list(args.params)),
        workers=args.workers,
    )
    report = wb.verify(args.space, config)
    lines = [
        f"instances: {report.instances}",
        f"seed: {report.seed}",
        f"methods: {', '.join(report.methods)}",
    ]
    lines += [f"refused {m}: {reason}" for m, reason in sorted(report.refused.items())]
    lines += [f"agree {pair}: {n}" for pair, n in sorted(report.agreements.items())]
    lines.append(f"disagreements: {len(report.disagreements)}")
    lines.append(f"bfs-hvs instances: {report.bfs_hvs_instances}")
    lines.append(f"construction failures: {len(report.construction_failures)}")
    for name, count in sorted(report.property_checks.items()):
        failed = len(report.property_failures.get(name, []))
        lines.append(f"property {name}: {count - failed}/{count}")
    return CommandOutcome(
        EXIT_OK if report.ok else EXIT_FALSE,
        "\n".join(lines),
        {"command": "verify", "space": args.space, **report.to_dict()},
    )


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subparser per command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="structure document (.hvs)")
    common.add_argument("--json", action="store_true", help="print a JSON report")
    common.add_argument("--verbose", action="store_true", help="log at DEBUG level")

    parser = argparse.ArgumentParser(
        prog="bfs-hvs",
        description="Bipolar fuzzy soft sets over finite hypervector spaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(
        name: str, handler: Callable[..., CommandOutcome], help_text: str
    ) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = command("check", cmd_check, "check H1-H5 and the srd/sld/invertible flags")
    p.add_argument("--space", required=True)

    p = command("check-bfs", cmd_check_bfs, "decide whether a soft set is a bfs-hvs")
    p.add_argument("--bfs", required=True)
    p.add_argument("--method", choices=[*CHECK_METHODS, "all"], default="direct")
    p.add_argument(
        "--require-hvs",
        action="store_true",
        help="reject spaces failing H1-H5 for every method",
    )

    p = command("level", cmd_level, "(alpha, beta)-level soft set")
    p.add_argument("--bfs", required=True)
    p.add_argument("--alpha", required=True, type=_rational)
    p.add_argument("--beta", required=True, type=_rational)

    p = command("span", cmd_span, "smallest subhyperspace containing a set")
    p.add_argument("--space", required=True)
    p.add_argument("--set", required=True, help="comma-separated vector ids")

    p = command("enumerate-shs", cmd_enumerate, "list every subhyperspace")
    p.add_argument("--space", required=True)

    p = command("sum", cmd_sum, "sum of two soft sets")
    p.add_argument("--bfs", required=True)
    p.add_argument("--with", dest="other", required=True)
    p.add_argument("--name")

    p = command("scale", cmd_scale, "scalar product b o G")
    p.add_argument("--bfs", required=True)
    p.add_argument("--scalar", required=True)
    p.add_argument("--name")

    p = command("negate", cmd_negate, "negation -G")
    p.add_argument("--bfs", required=True)
    p.add_argument("--name")

    p = command("generate", cmd_generate, "smallest bfs-hvs containing a soft set")
    p.add_argument("--bfs", required=True)
    p.add_argument("--name")

    p = command("normalize", cmd_normalize, "normalize a bfs-hvs")
    p.add_argument("--bfs", required=True)
    p.add_argument("--mode", choices=["shift", "scale"], default="shift")
    p.add_argument(
        "--strict-shift",
        action="store_true",
        help="use the literal negative shift -1 + G-(0)",
    )
    p.add_argument("--name")

    p = command("characteristic", cmd_characteristic, "characteristic soft set")
    p.add_argument("--space", required=True)
    p.add_argument("--set", required=True, help="comma-separated vector ids")
    p.add_argument("--params", required=True, help="comma-separated parameters")
    p.add_argument("--variant", choices=["pos", "neg", "normal"], default="pos")
    p.add_argument("--name")

    p = command("promote", cmd_promote, "promote a level cut to full membership")
    p.add_argument("--bfs", required=True)
    p.add_argument("--param", required=True)
    p.add_argument("--alpha", required=True, type=_rational)
    p.add_argument("--beta", required=True, type=_rational)
    p.add_argument("--name")

    p = command("is-normal", cmd_is_normal, "is a bfs-hvs normal")
    p.add_argument("--bfs", required=True)

    p = command("verify", cmd_verify, "run the randomized equivalence suite")
    p.add_argument("--space", required=True)
    p.add_argument("--n", type=int, default=200)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--params", default="p", help="comma-separated parameters")
    p.add_argument("--workers", type=int, default=1)
    return parser


def _join_signed_values(argv: Sequence[str]) -> List[str]:
    """Rewrite ``--beta -2/5`` as ``--beta=-2/5`` so argparse keeps the value."""
    out: List[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in _SIGNED_OPTIONS and i + 1 < len(argv):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
            continue
        out.append(token)
        i += 1
    return out


def _error_outcome(code: int, error: BaseException) -> CommandOutcome:
    report: Dict[str, Any] = {"error": {"message": str(error)}}
    if isinstance(error, BfsHvsError):
        report["error"]["code"] = error.error_code
    return CommandOutcome(code, f"error: {error}", report, error=True)


def run(argv: Optional[Sequence[str]] = None) -> CommandOutcome:
    """
    Run one command.

    Args:
        argv: Arguments without the program name; defaults to ``sys.argv``

    Returns:
        The ``CommandOutcome``; errors are mapped to exit codes, not raised
    """
    raw = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_signed_values(raw))
    except SystemExit as e:
        code = e.code if isinstance(e.code, int) else EXIT_INPUT
        return CommandOutcome(code, "", error=code != EXIT_OK)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        workbench = Workbench(args.file).load()
        return args.handler(workbench, args)
    except INPUT_ERRORS as e:
        return _error_outcome(EXIT_INPUT, e)
    except CAPACITY_ERRORS as e:
        return _error_outcome(EXIT_CAPACITY, e)
    except OSError as e:
        return _error_outcome(EXIT_INPUT, e)
    except BfsHvsError as e:
        logger.debug("Unclassified engine error", exc_info=True)
        return _error_outcome(EXIT_INPUT, e)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Console entry point; prints the outcome and returns the exit code."""
    raw = list(sys.argv[1:] if argv is None else argv)
    outcome = run(raw)
    as_json = "--json" in raw
    rendered = outcome.render(as_json)
    if rendered:
        stream = sys.stderr if outcome.error and not as_json else sys.stdout
        print(rendered, file=stream)
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
