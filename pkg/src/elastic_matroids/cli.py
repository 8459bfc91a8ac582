"""Command-line front end.

Exit codes: 0 success, 1 verification violation, 2 usage or parse error,
3 ground-set guard exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import catalog
from .core import settings
from .documents import dumps, parse, to_document
from .elasticity import elasticity_report
from .errors import ConsistencyError, MatroidError, ResourceError
from .report import analyze, elasticity_json, emit, fan_json, separations_json, summary, theta_json
from .structures import fans, theta_separators
from .connectivity import _require_3c
from .verify import CLAIMS

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--max-elements", type=int, default=20)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--quiet", action="store_true")

    p = argparse.ArgumentParser(prog="elastic-matroids", description="Elastic elements of 3-connected matroids.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("analyze", "elastic", "fans", "theta"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("file")
    sp = sub.add_parser("separations", parents=[common])
    sp.add_argument("file")
    which = sp.add_mutually_exclusive_group()
    which.add_argument("--vertical", action="store_true")
    which.add_argument("--cyclic", action="store_true")
    sp.add_argument("--maximal-only", action="store_true")
    sp = sub.add_parser("verify", parents=[common])
    sp.add_argument("claim", choices=sorted(CLAIMS))
    sp.add_argument("file")
    sp = sub.add_parser("gen", parents=[common])
    sp.add_argument("family", choices=sorted(catalog.FAMILIES))
    sp.add_argument("params", nargs="*", type=int)
    sp.add_argument("-o", "--output")
    return p


def _gen(args) -> str:
    _, names = catalog.FAMILIES[args.family]
    names = [k for k in names if k != "seed"]
    if len(args.params) != len(names):
        raise SystemExit(f"gen {args.family} expects parameters {names}")
    params = dict(zip(names, args.params))
    if args.family == "randomLinear":
        params["seed"] = args.seed
    m = catalog.build(catalog.CatalogSpec(args.family, params))
    return dumps(to_document(m))


def run(args) -> int:
    settings.max_elements = args.max_elements
    if args.command == "gen":
        _write(_gen(args), args.output)
        return EXIT_OK
    m = parse(_read(args.file))
    code = EXIT_OK
    if args.command == "analyze":
        report = analyze(m)
        failed = [k for k, o in report.get("verification", {}).items() if not o["passed"]]
        code = EXIT_VIOLATION if failed else EXIT_OK
    elif args.command == "elastic":
        report = {"matroid": summary(m), "elasticity": elasticity_json(m, elasticity_report(m))}
    elif args.command == "fans":
        _require_3c(m)
        report = {"matroid": summary(m), "fans": [fan_json(m, f) for f in fans(m, check=False)]}
    elif args.command == "theta":
        _require_3c(m)
        report = {"matroid": summary(m), "thetaSeparators": [theta_json(m, t) for t in theta_separators(m, check=False)]}
    elif args.command == "separations":
        _require_3c(m)
        both = not (args.vertical or args.cyclic)
        seps = separations_json(m, args.vertical or both, args.cyclic or both, args.maximal_only)
        report = {"matroid": summary(m), "separations": seps}
    elif args.command == "verify":
        outcome = CLAIMS[args.claim](m)
        report = {"matroid": summary(m), "verification": {args.claim: outcome.to_dict()}}
        code = EXIT_OK if outcome.passed else EXIT_VIOLATION
    report.setdefault("schemaVersion", 1)
    if not args.quiet:
        _write(emit(report, args.format), None)
    return code


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return run(args)
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (MatroidError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
