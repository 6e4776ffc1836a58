"""Command-line interface: ``skewpbw <command> <file.alg> [options]``.

Exit codes: 0 on success, 1 on a domain error (validation failure, algebra
not graded, ...), 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys

from .errors import AlgebraError, InputError, ValidationFailed
from .frontend.definition import AlgebraDefinition, load_definition, read_definition_source
from .frontend.parser import parse_expr
from .nakayama import hdet_stage, is_calabi_yau, nakayama
from .pbw import PbwAlgebra
from .tower import build_tower

COMMANDS = ("validate", "normalform", "mul", "tower", "hdet", "nakayama", "check-cy", "hilbert")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="skewpbw", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("definition", help="path to a .alg file or the name of a bundled fixture")
    p.add_argument("--field", help="override the base field: q or fp:<p>")
    p.add_argument("--max-degree", type=int, default=10)
    p.add_argument("--stage", type=int, help="1-based stage index for hdet")
    p.add_argument("--nu", help="file whose [nu] section gives the Nakayama automorphism of R")
    p.add_argument("-e", dest="exprs", action="append", default=[], metavar="EXPR")
    return p


def _nu(args, algebra: PbwAlgebra):
    if args.nu:
        d = AlgebraDefinition.parse(read_definition_source(args.nu))
        nu = d.nu_endo(algebra.ring)
        if nu is None:
            raise InputError(f"{args.nu} has no [nu] section")
        return nu
    return algebra.definition.nu_endo(algebra.ring) if algebra.definition else None


def run(args, out) -> int:
    src = read_definition_source(args.definition)
    cmd = args.command
    if cmd == "validate":
        try:
            algebra = load_definition(src, args.field)
        except ValidationFailed as exc:
            print("invalid", file=out)
            print(exc.report.format(), file=out)
            return 1
        print(algebra.state, file=out)
        print(algebra.report.format(), file=out)
        return 0

    algebra = load_definition(src, args.field)
    if cmd == "normalform":
        if len(args.exprs) != 1:
            raise _UsageError("normalform needs exactly one -e EXPR")
        print(parse_expr(args.exprs[0], algebra), file=out)
    elif cmd == "mul":
        if len(args.exprs) < 2:
            raise _UsageError("mul needs at least two -e EXPR")
        product = algebra.one()
        for text in args.exprs:
            product = product * parse_expr(text, algebra)
        print(product, file=out)
    elif cmd == "tower":
        for line in build_tower(algebra).format_lines():
            print(line, file=out)
    elif cmd == "hdet":
        if args.stage is None:
            raise _UsageError("hdet needs --stage i")
        if not 1 <= args.stage <= algebra.n:
            raise _UsageError(f"--stage must lie in 1..{algebra.n}")
        u = hdet_stage(algebra, args.stage - 1)
        print(algebra.field.format_raw(u.value), file=out)
    elif cmd == "nakayama":
        mu = nakayama(algebra, _nu(args, algebra))
        for line in mu.format_lines(algebra):
            print(line, file=out)
    elif cmd == "check-cy":
        nu = _nu(args, algebra)
        verdict = is_calabi_yau(algebra, nu)
        print("true" if verdict else "false", file=out)
        for line in nakayama(algebra, nu).format_lines(algebra):
            print(line, file=out)
    elif cmd == "hilbert":
        if args.max_degree < 0:
            raise _UsageError("--max-degree must be nonnegative")
        print(" ".join(str(algebra.hilbert(d)) for d in range(args.max_degree + 1)), file=out)
    return 0


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return run(args, out)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 2
    except (InputError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    except AlgebraError as exc:
        print(f"error: {exc}", file=err)
        return 1


if __name__ == "__main__":
    sys.exit(main())
