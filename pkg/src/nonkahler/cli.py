"""Command-line front end: ``python -m nonkahler <command> ...``."""

from __future__ import annotations

import argparse
import sys

from .certify import certify_nonkahler, compare_homotopy_types, enumerate_family
from .config import Settings
from .io import parse_matrix
from .kummer import ConsistencyError, InvalidInputError
from .report import (
    analysis_doc,
    analyze,
    certify_doc,
    compare_doc,
    dumps,
    enumerate_doc,
    render_certificate_text,
    render_compare_text,
    render_enumerate_text,
    render_text,
)
from .topology import GateError

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_GATE = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage, which would collide with the gate code
    def error(self, message):
        raise UsageError("%s\n%s: error: %s" % (self.format_usage().rstrip(), self.prog, message))


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="nonkahler", description="Exact cohomology reports for M(A), A in SL(2, Z[i]).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("analyze", help="Betti numbers, hard Lefschetz, formality, certificate, jump loci")
    sp.add_argument("--matrix", required=True, help='e.g. "1,1;1,2" or "1+1i,1i;1,1"')
    fmt(sp)
    sp = sub.add_parser("certify", help="nonkähler certificate")
    sp.add_argument("--matrix", required=True)
    fmt(sp)
    sp = sub.add_parser("compare", help="distinguish homotopy types by spectral radius")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    fmt(sp)
    sp = sub.add_parser("enumerate", help="certify every gated matrix up to an entry height")
    sp.add_argument("--height", type=int, required=True)
    sp.add_argument("--out", help="write the JSON document to this path")
    sp.add_argument("--workers", type=int, default=1)
    fmt(sp)
    return p


def _run(args, settings: Settings, out) -> int:
    json_out = args.format == "json"
    if args.command == "analyze":
        a = parse_matrix(args.matrix)
        an = analyze(a, settings, source=args.matrix)
        out.write(dumps(analysis_doc(an)) if json_out else render_text(an))
    elif args.command == "certify":
        a = parse_matrix(args.matrix)
        c = certify_nonkahler(a, settings.refine_width)
        out.write(dumps(certify_doc(c, args.matrix)) if json_out
                  else "\n".join(render_certificate_text(c)) + "\n")
    elif args.command == "compare":
        a, b = parse_matrix(args.a), parse_matrix(args.b)
        v = compare_homotopy_types(a, b)
        out.write(dumps(compare_doc(v, a, b, args.a, args.b)) if json_out else render_compare_text(v))
    elif args.command == "enumerate":
        if args.height < 1:
            raise InvalidInputError("--height must be >= 1")
        members = enumerate_family(args.height, settings.refine_width, max(1, args.workers))
        doc = enumerate_doc(args.height, members)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(dumps(doc))
        out.write(dumps(doc) if json_out else render_enumerate_text(args.height, members))
    return EXIT_OK


MATRIX_FLAGS = ("--matrix", "--a", "--b")


def _attach_matrix_values(argv: list[str]) -> list[str]:
    """Glue "--a -1,0;..." into "--a=-1,0;..." so negative entries are not read as flags."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok in MATRIX_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else "%s=%s" % (tok, nxt))
        else:
            out.append(tok)
    return out


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_attach_matrix_values(argv))
    except UsageError as exc:
        err.write(str(exc) + "\n")
        return EXIT_ERROR
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_ERROR
    try:
        settings = Settings.from_env()
        return _run(args, settings, out)
    except GateError as exc:
        err.write("gate error: %s\n" % exc)
        return EXIT_GATE
    except (InvalidInputError, ValueError) as exc:
        err.write("input error: %s\n" % exc)
        return EXIT_ERROR
    except (ConsistencyError, ArithmeticError) as exc:
        err.write("internal error: %s\n" % exc)
        return EXIT_ERROR
    except OSError as exc:
        err.write("i/o error: %s\n" % exc)
        return EXIT_ERROR
