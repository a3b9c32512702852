"""
Command-line front end.

Usage:
    # Verify a design file at strength 2
    design-lattice verify fano.json --t 2

    # Group of a built-in design, with witness and audits
    design-lattice embed --builtin sts13 --witness --audit --format json

    # Zero-sum designs and count tables
    design-lattice boolean enumerate --variant projective --n 3 --k 3
    design-lattice boolean counts --n 5 --method all

Exit status is 0 on success, 1 for domain failures (not a design, failed
audit, rejected input) and 2 for usage errors. Reports go to stdout or
--out; logs go to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

from design_lattice import __version__
from design_lattice.boolean.counts import CountMethod, block_counts
from design_lattice.boolean.enumerate import build_verified
from design_lattice.boolean.planes import octuples_without_plane_pair, quadruples_are_planes_audit
from design_lattice.boolean.reducibility import irreducible_count
from design_lattice.boolean.spec import BooleanDesignSpec, Variant
from design_lattice.config import ENUMERATION, env_budget_override
from design_lattice.design.core import Design, complement, derived, supplement, verify_design
from design_lattice.design.io import design_to_model, load_design, params_to_model
from design_lattice.design.library import BUILTINS, builtin
from design_lattice.errors import DesignLatticeError, SpecInvalid
from design_lattice.groups.embedding import embedding_report
from design_lattice.utils.logging import generate_run_id, run_id_var, setup_logging
from design_lattice.utils.metrics import write_metrics

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace], str]


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------


def _json(payload: object) -> str:
    return json.dumps(payload, indent=2, sort_keys=False)


def _is_json(args: argparse.Namespace) -> bool:
    return getattr(args, "format", "text") == "json"


def effective_budget(args: argparse.Namespace) -> int:
    """DESIGNLATTICE_BUDGET beats --budget, which beats the configured default."""
    override = env_budget_override()
    if override is not None:
        return override
    flag = getattr(args, "budget", None)
    return flag if flag is not None else ENUMERATION.BUDGET


def _load(args: argparse.Namespace) -> Design:
    if args.builtin:
        return builtin(args.builtin)
    return load_design(Path(args.design))


def _design_text(design: Design) -> str:
    lines = [f"v={design.v} k={design.k} b={design.b}"]
    for block in design.blocks:
        lines.append("{" + ", ".join(design.label(p) for p in block) + "}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> str:
    params = verify_design(_load(args), args.t)
    if _is_json(args):
        return params_to_model(params).model_dump_json(by_alias=True, indent=2)
    return params.describe()


def cmd_transform(args: argparse.Namespace) -> str:
    design = _load(args)
    params = verify_design(design, args.t) if args.t is not None else None
    if args.kind == "complement":
        result = complement(design, params)
    elif args.kind == "supplement":
        result = supplement(design, params, effective_budget(args))
    else:
        if args.point is None:
            raise SpecInvalid("derived needs --point")
        result = derived(design, args.point)
    if _is_json(args):
        return design_to_model(result).model_dump_json(exclude_none=True, indent=2)
    return _design_text(result)


def cmd_embed(args: argparse.Namespace) -> str:
    report = embedding_report(_load(args), witness=args.witness, audit=args.audit)
    if _is_json(args):
        return report.model_dump_json(indent=2)
    lines = [f"G_D ≅ {report.description}, injective: {'yes' if report.injective else 'no'}"]
    if report.order is not None:
        lines.append(f"order: {report.order}, exponent: {report.exponent}")
    if args.witness:
        if report.witness is None:
            lines.append("witness: none")
        else:
            w = report.witness
            lines.append(f"witness: points {w['i']} and {w['j']} collapse, coefficients {w['coefficients']}")
    if report.exponent_audit is not None:
        lines.append(f"exponent audit: {report.exponent} divides {report.exponent_audit['bound']}")
    if report.gram_audit is not None:
        lines.append(f"gram audit: det = {report.gram_audit['determinant']}")
    return "\n".join(lines)


def _spec_from_args(args: argparse.Namespace) -> BooleanDesignSpec:
    variant = Variant(args.variant)
    if variant is Variant.FIELD:
        if args.q is None:
            raise SpecInvalid("field variant needs --q")
        return BooleanDesignSpec.field(args.q, args.k)
    if args.n is None:
        raise SpecInvalid(f"{variant.value} variant needs --n")
    return BooleanDesignSpec(variant, args.k, n=args.n)


def cmd_enumerate(args: argparse.Namespace) -> str:
    spec = _spec_from_args(args)
    design, params = build_verified(spec, effective_budget(args))
    if _is_json(args):
        payload = design_to_model(design).model_dump(exclude_none=True)
        payload["params"] = (
            params_to_model(params).model_dump(by_alias=True) if params is not None else None
        )
        return _json(payload)
    summary = params.describe() if params is not None else "degenerate (no blocks)"
    return f"{spec.describe()}: {summary}\n{_design_text(design)}"


def cmd_counts(args: argparse.Namespace) -> str:
    table = block_counts(args.n, CountMethod(args.method), effective_budget(args))
    if _is_json(args):
        return table.to_model().model_dump_json(indent=2)
    width = len(str(table.v))
    lines = [f"n={table.n} v={table.v} method={table.method.value}"]
    lines.extend(f"b_{k:<{width}} = {b}" for k, b in enumerate(table.b))
    return "\n".join(lines)


def cmd_irreducible(args: argparse.Namespace) -> str:
    report = irreducible_count(args.n, args.k, effective_budget(args))
    if _is_json(args):
        return report.model_dump_json(indent=2)
    return "\n".join(
        [
            f"n={report.n} k={report.k}: {report.oracle} of {report.blocks} blocks irreducible",
            f"ordered-tuple product: {report.product_formula}",
            f"conjectured count: {report.conjectured} ({'matches' if report.conjecture_matches else 'differs'})",
        ]
    )


def cmd_planes(args: argparse.Namespace) -> str:
    budget = effective_budget(args)
    report = quadruples_are_planes_audit(args.n, budget)
    payload = report.to_dict()
    if args.octuples:
        payload["octuples_without_plane_pair"] = [list(b) for b in octuples_without_plane_pair(args.n, budget)]
    if _is_json(args):
        return _json(payload)
    lines = [f"n={report.n}: {report.quadruples} zero-sum quadruples = {report.planes} affine planes"]
    if args.octuples:
        lines.append(f"zero-sum octuples without a plane pair: {len(payload['octuples_without_plane_pair'])}")  # type: ignore[arg-type]
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS, help="Report format")
    common.add_argument("--out", type=Path, default=argparse.SUPPRESS, help="Write the report to a file")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS, help="Cap on C(v,k) for enumeration")
    common.add_argument("--log-level", default=argparse.SUPPRESS, help="DEBUG, INFO, WARNING or ERROR")
    common.add_argument("--metrics-out", type=Path, default=argparse.SUPPRESS, help="Write Prometheus metrics here")
    return common


def _add_design_source(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("design", nargs="?", help="Design JSON file")
    source.add_argument("--builtin", choices=sorted(BUILTINS), help="Use a built-in design")


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="design-lattice",
        description="Block designs, their abelian groups and zero-sum constructions",
        parents=[common],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", parents=[common], help="Verify t-design parameters")
    _add_design_source(verify)
    verify.add_argument("--t", type=int, default=2, help="Strength (default 2)")
    verify.set_defaults(handler=cmd_verify)

    transform = commands.add_parser("transform", parents=[common], help="Complement, supplement or derived design")
    transform.add_argument("kind", choices=["complement", "supplement", "derived"])
    _add_design_source(transform)
    transform.add_argument("--point", type=int, help="Point for the derived design")
    transform.add_argument("--t", type=int, help="Verify the input at this strength and audit the result")
    transform.set_defaults(handler=cmd_transform)

    embed = commands.add_parser("embed", parents=[common], help="Group of a design and embeddability")
    _add_design_source(embed)
    embed.add_argument("--witness", action="store_true", help="Explain a non-injective embedding")
    embed.add_argument("--audit", action="store_true", help="Run the exponent and Gram audits")
    embed.set_defaults(handler=cmd_embed)

    boolean = commands.add_parser("boolean", help="Zero-sum designs over GF(q) and Z_2^n")
    boolean_commands = boolean.add_subparsers(dest="boolean_command", required=True)

    enumerate_ = boolean_commands.add_parser("enumerate", parents=[common], help="Build a zero-sum design")
    enumerate_.add_argument("--variant", choices=[v.value for v in Variant], required=True)
    enumerate_.add_argument("--n", type=int, help="Dimension of Z_2^n")
    enumerate_.add_argument("--q", type=int, help="Field order (field variant)")
    enumerate_.add_argument("--k", type=int, required=True, help="Block size")
    enumerate_.set_defaults(handler=cmd_enumerate)

    counts = boolean_commands.add_parser("counts", parents=[common], help="Block counts b_k")
    counts.add_argument("--n", type=int, required=True)
    counts.add_argument("--method", choices=[m.value for m in CountMethod], default="all")
    counts.set_defaults(handler=cmd_counts)

    irreducible = boolean_commands.add_parser("irreducible", parents=[common], help="Irreducible block counts")
    irreducible.add_argument("--n", type=int, required=True)
    irreducible.add_argument("--k", type=int, required=True)
    irreducible.set_defaults(handler=cmd_irreducible)

    planes = boolean_commands.add_parser("planes", parents=[common], help="Zero-sum quadruples against affine planes")
    planes.add_argument("--n", type=int, required=True)
    planes.add_argument("--octuples", action="store_true", help="Also list zero-sum octuples that are not plane pairs")
    planes.set_defaults(handler=cmd_planes)

    return parser


# ---------------------------------------------------------------------------
# Entry points
# ---------------------------------------------------------------------------


def run(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, run one subcommand and return the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else 2

    budget = getattr(args, "budget", None)
    if budget is not None and budget < 1:
        parser.print_usage(sys.stderr)
        print("design-lattice: error: --budget must be at least 1", file=sys.stderr)
        return 2

    setup_logging(level=getattr(args, "log_level", None))
    run_id_var.set(generate_run_id())
    logger.info("Running %s", args.command)

    try:
        report = args.handler(args)
    except DesignLatticeError as e:
        logger.debug("Command failed", exc_info=True)
        print(f"design-lattice: error: {e}", file=sys.stderr)
        return e.exit_code
    finally:
        metrics_out = getattr(args, "metrics_out", None)
        if metrics_out is not None:
            write_metrics(metrics_out)

    out = getattr(args, "out", None)
    if out is not None:
        out.write_text(report + "\n", encoding="utf-8")
    else:
        print(report)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
