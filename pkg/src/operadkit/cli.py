"""Command-line front end.

Subcommands: ``compose`` glues configuration files, ``check`` runs the operad
axiom suites, ``algebra`` runs the structure-constant checkers, ``strata``
enumerates boundary strata and builds the chain complex.  Payloads go to
stdout (canonical JSON or CSV, so runs are byte-reproducible), messages to
stderr.  Exit codes: 0 success, 1 a checked property failed (witness in the
report), 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import geometry
from .algebras import (AInfinityData, GAlgebraData, SwissAlgebraData,
                       check_a_infinity, check_g_algebra,
                       check_swiss_cheese_algebra, load_algebra_file)
from .axiomcheck import check_operad_axioms, check_relative_axioms
from .errors import InvalidFixtureError, OperadkitError
from .operads import (CommutativeMultiplication, DiskOperadInstance,
                      EndomorphismOperad, RelativeEndomorphismOperad,
                      SwissOperadInstance, discrete_operad_from_json,
                      make_associative_operad, make_commutative_operad,
                      product_relative_operad)
from .graded import GradedSpace
from .reporting import canonical_json
from .strata import associahedron_complex, enumerate_strata, filtration_table


def _read_config(path, strict):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        return geometry.config_from_dict(doc, strict=strict)
    except (OSError, json.JSONDecodeError, ValueError, OperadkitError) as exc:
        raise ValueError(f"{path}: {exc}") from exc


def cmd_compose(args) -> int:
    try:
        outer = _read_config(args.outer, args.strict)
        inners = [_read_config(p, args.strict) for p in args.inners]
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        if isinstance(outer, geometry.DiskConfiguration):
            if not all(isinstance(i, geometry.DiskConfiguration) for i in inners):
                raise ValueError("disk slots take disk configurations")
            result = geometry.compose_disks(outer, inners)
        elif all(isinstance(i, geometry.SwissConfiguration) for i in inners):
            result = geometry.compose_swiss_gamma(outer, inners)
        elif all(isinstance(i, geometry.DiskConfiguration) for i in inners):
            result = geometry.compose_swiss_Gamma(outer, inners)
        else:
            raise ValueError("inner configurations must all fill the same "
                             "kind of slot (all semidisk or all disk)")
    except (OperadkitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(canonical_json(geometry.config_to_dict(result)))
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(geometry.render_svg(result))
    return 0


_TEST_SPACE_1 = GradedSpace.from_pairs([("a", 0), ("b", 1)])
_TEST_SPACE_2 = GradedSpace.from_pairs([("p", 0), ("q", 1)])


def _build_instance(name, fixture):
    if fixture is not None:
        with open(fixture, "r", encoding="utf-8") as fh:
            return discrete_operad_from_json(json.load(fh))
    if name == "disks":
        return DiskOperadInstance()
    if name == "swiss":
        return SwissOperadInstance()
    if name == "as":
        return make_associative_operad(8)
    if name == "comm":
        return make_commutative_operad(12)
    if name == "product-comm-as":
        comm = make_commutative_operad(12)
        return product_relative_operad(
            comm, CommutativeMultiplication(comm, 2, 0),
            make_associative_operad(8))
    if name == "end":
        return EndomorphismOperad(_TEST_SPACE_1, 12)
    if name == "rel-end":
        return RelativeEndomorphismOperad(_TEST_SPACE_1, _TEST_SPACE_2, 12)
    raise ValueError(f"unknown instance {name!r}")


def cmd_check(args) -> int:
    try:
        instance = _build_instance(args.instance, args.fixture)
    except (ValueError, OSError, json.JSONDecodeError, InvalidFixtureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    kind = getattr(instance, "kind", "operad")
    if args.mode in ("module", "relative") and kind != "relative":
        print(f"error: instance {args.instance!r} is not a relative operad",
              file=sys.stderr)
        return 2
    if args.mode == "operad" and kind != "operad":
        print(f"error: instance {args.instance!r} is not a plain operad",
              file=sys.stderr)
        return 2
    try:
        if args.mode == "operad":
            report = check_operad_axioms(instance, args.arity_budget,
                                         args.samples, args.seed)
        else:
            report = check_relative_axioms(instance, args.arity_budget,
                                           args.samples, args.seed,
                                           module_only=args.mode == "module")
    except InvalidFixtureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(report.to_json())
    return 0 if report.passed else 1


def cmd_algebra(args) -> int:
    try:
        data = load_algebra_file(args.file)
    except (OSError, InvalidFixtureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    expected = {"check-g": GAlgebraData, "check-swiss": SwissAlgebraData,
                "check-ainf": AInfinityData}[args.checker]
    if not isinstance(data, expected):
        print(f"error: {args.file} holds a {type(data).__name__}, "
              f"not the input of {args.checker}", file=sys.stderr)
        return 2
    if args.checker == "check-g":
        report = check_g_algebra(data)
    elif args.checker == "check-swiss":
        report = check_swiss_cheese_algebra(data)
    else:
        report = check_a_infinity(data, args.max_arity)
    sys.stdout.write(report.to_json())
    return 0 if report.passed else 1


def cmd_strata(args) -> int:
    try:
        if args.strata_command == "enumerate":
            records = enumerate_strata(args.m, args.n, max_codim=args.max_codim,
                                       boundary_order=args.order)
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(["tree", "dim", "codim"])
            for r in records:
                writer.writerow([r.tree.key(), r.dimension, r.codimension])
            sys.stdout.write(buf.getvalue())
            return 0
        if args.strata_command == "table":
            table = filtration_table(args.m, args.n)
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(["dim", "codim", "count", "cumulative",
                             "shifted_index"])
            for row in table.rows():
                writer.writerow([row["dim"], row["codim"], row["count"],
                                 row["cumulative"], row["shifted_index"]])
            sys.stdout.write(buf.getvalue())
            return 0
        # chain
        cx = associahedron_complex(args.n)
        payload = {
            "n": args.n,
            "ranks": cx.dimensions,
            "euler_characteristic": cx.euler_characteristic(),
        }
        if args.check_d2:
            payload["d_squared_zero"] = cx.d_squared_is_zero()
            payload["homology"] = cx.homology_ranks()
        sys.stdout.write(canonical_json(payload))
        if args.check_d2 and not payload["d_squared_zero"]:
            return 1
        return 0
    except (OperadkitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="operadkit",
        description="exact disk operads, their algebras, and their strata")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compose", help="glue configurations into a slot file")
    p.add_argument("outer", help="outer configuration (JSON)")
    p.add_argument("inners", nargs="*", help="inner configurations, one per slot")
    p.add_argument("--svg", help="also render the result to this SVG file")
    p.add_argument("--strict", action="store_true",
                   help="demand strict inequalities (open conditions)")
    p.set_defaults(fn=cmd_compose)

    p = sub.add_parser("check", help="run an operad axiom suite")
    p.add_argument("mode", choices=["operad", "module", "relative"])
    p.add_argument("--instance", required=True,
                   help="disks | swiss | as | comm | product-comm-as | end | rel-end")
    p.add_argument("--fixture", help="table-driven operad fixture (JSON)")
    p.add_argument("--arity-budget", type=int, default=3)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("algebra", help="check a structure-constant file")
    p.add_argument("checker", choices=["check-g", "check-swiss", "check-ainf"])
    p.add_argument("file")
    p.add_argument("--max-arity", type=int, default=6,
                   help="largest identity arity for check-ainf")
    p.set_defaults(fn=cmd_algebra)

    p = sub.add_parser("strata", help="boundary strata of the compactifications")
    ssub = p.add_subparsers(dest="strata_command", required=True)
    pe = ssub.add_parser("enumerate", help="CSV of strata with dim and codim")
    pe.add_argument("m", type=int)
    pe.add_argument("n", type=int)
    pe.add_argument("--max-codim", type=int, default=None)
    pe.add_argument("--order", choices=["fixed", "all"], default="fixed")
    pe.set_defaults(fn=cmd_strata)
    pt = ssub.add_parser("table", help="filtration table by dimension")
    pt.add_argument("m", type=int)
    pt.add_argument("n", type=int)
    pt.set_defaults(fn=cmd_strata)
    pc = ssub.add_parser("chain", help="chain complex of the (0,n) strata")
    pc.add_argument("--n", type=int, required=True)
    pc.add_argument("--check-d2", action="store_true",
                    help="verify the boundary squares to zero and report homology")
    pc.set_defaults(fn=cmd_strata)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
