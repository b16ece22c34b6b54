"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
3 resource guard (dimension cap).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import warnings
from pathlib import Path

from . import __version__
from .cache import CacheWarning, cache_load, cache_path, cache_store, default_cache_dir, get_module
from .errors import DimensionCapExceeded, PBWError
from .hwmod import DEFAULT_CAP
from .kostant import kostant_polynomial
from .pbwfilt import additivity, linear_coefficient_check, lowest_weight_degree, pbw_filtration
from .rootsys import FAMILIES, LieType, build_root_system
from .verify import run_verification

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_RESOURCE = 0, 1, 2, 3
FORCED_CAP = 10 ** 9


class UsageError(Exception):
    pass


def _coords(text: str, rank: int, what: str):
    try:
        values = tuple(int(c) for c in text.replace(" ", "").split(","))
    except ValueError:
        raise UsageError(f"cannot parse {what} {text!r}; expected comma-separated integers")
    if len(values) != rank:
        raise UsageError(f"{what} {text!r} needs {rank} coordinates")
    return values


def _lie_type(args) -> LieType:
    if args.type is None or args.rank is None:
        raise UsageError("--type and --rank are required")
    return LieType(args.type, args.rank)


def _cap(args) -> int:
    if args.force:
        return FORCED_CAP
    if args.max_dim < 1:
        raise UsageError("--max-dim must be at least 1")
    return args.max_dim


def _cache_dir(args):
    return Path(args.cache_dir) if args.cache_dir else default_cache_dir()


def _emit(record: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record, indent=2) + "\n"
    flat = {k: (json.dumps(v) if isinstance(v, (list, dict)) else v) for k, v in record.items()}
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(flat), lineterminator="\n")
        writer.writeheader()
        writer.writerow(flat)
        return buf.getvalue()
    lines = ["| field | value |", "|---|---|"]
    lines += [f"| {k} | {v} |" for k, v in flat.items()]
    return "\n".join(lines) + "\n"


def cmd_degree(args) -> int:
    lt = _lie_type(args)
    rs = build_root_system(lt)
    weight = _coords(args.weight, lt.rank, "weight")
    module = get_module(rs, weight, cap=_cap(args), cache_dir=_cache_dir(args))
    poly, gc = pbw_filtration(module)
    record = {
        "type": str(lt),
        "weight": list(weight),
        "dim": module.total_dim,
        "coeffs": list(poly.coeffs),
        "degree": poly.degree,
        "lowest_weight_degree": lowest_weight_degree(module, gc),
        "linear_term": linear_coefficient_check(module, poly).as_dict(),
    }
    if args.per_weight:
        record["per_weight"] = [{"weight": list(w), "coeffs": list(p.coeffs)}
                                for w, p in gc.per_weight.items()]
    sys.stdout.write(_emit(record, args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    families = FAMILIES if args.family.lower() == "all" else args.family.upper()
    if not families or any(f not in FAMILIES for f in families):
        raise UsageError(f"bad family filter {args.family!r}; use letters from {FAMILIES} or 'all'")
    if args.max_rank < 1:
        raise UsageError("--max-rank must be at least 1")
    report = run_verification(families, args.max_rank, _cap(args), threads=max(1, args.threads),
                              cache_dir=_cache_dir(args))
    text = report.render(args.format)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return report.exit_code


def cmd_kostant(args) -> int:
    lt = _lie_type(args)
    rs = build_root_system(lt)
    nu = _coords(args.nu, lt.rank, "nu")
    if any(c < 0 for c in nu):
        raise UsageError(f"nu {nu} must have nonnegative simple-root coordinates")
    coeffs = kostant_polynomial(rs, nu)
    record = {"type": str(lt), "nu": list(nu), "coeffs": list(coeffs), "partitions": sum(coeffs)}
    sys.stdout.write(_emit(record, args.format))
    return EXIT_OK


def cmd_additivity(args) -> int:
    lt = _lie_type(args)
    rs = build_root_system(lt)
    parts = [p for p in args.weights.split(";") if p.strip()]
    if len(parts) != 2:
        raise UsageError("--weights takes two weights separated by ';', e.g. 1,0;0,1")
    lam, mu = (_coords(p, lt.rank, "weight") for p in parts)
    result = additivity(rs, lam, mu, cap=_cap(args))
    record = {
        "type": str(lt),
        "lambda": list(lam),
        "mu": list(mu),
        "degrees": [result.degree_lam, result.degree_mu, result.degree_sum],
        "result": "PASS" if result.holds else "FAIL",
    }
    sys.stdout.write(_emit(record, args.format))
    return EXIT_OK if result.holds else EXIT_MISMATCH


def cmd_cache(args) -> int:
    cache_dir = _cache_dir(args)
    if cache_dir is None:
        raise UsageError("no cache directory: pass --cache-dir or set PBW_CACHE_DIR")
    if args.action == "list":
        files = sorted(Path(cache_dir).glob("*.json")) if Path(cache_dir).exists() else []
        for f in files:
            sys.stdout.write(f.name + "\n")
        return EXIT_OK
    if args.action == "clear":
        for f in sorted(Path(cache_dir).glob("*.json")) if Path(cache_dir).exists() else []:
            f.unlink()
        return EXIT_OK
    lt = _lie_type(args)
    rs = build_root_system(lt)
    if args.weight is None:
        raise UsageError("--weight is required")
    weight = _coords(args.weight, lt.rank, "weight")
    if args.action == "store":
        module = get_module(rs, weight, cap=_cap(args), cache_dir=None)
        path = cache_store(module, cache_dir)
        record = {"path": str(path), "dim": module.total_dim}
    else:
        module = cache_load(rs, weight, cache_dir)
        record = {"path": str(cache_path(cache_dir, lt, weight)), "hit": module is not None,
                  "dim": module.total_dim if module else None}
    sys.stdout.write(_emit(record, args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "md"), default="json")
    common.add_argument("--max-dim", type=int, default=DEFAULT_CAP,
                        help="dimension cap for constructed modules (default %(default)s)")
    common.add_argument("--force", action="store_true", help="lift the dimension cap")
    common.add_argument("--cache-dir", default=None, help="module cache directory (default $PBW_CACHE_DIR)")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("-v", "--verbose", action="store_true")

    typed = argparse.ArgumentParser(add_help=False)
    typed.add_argument("--type", help="family letter A-G")
    typed.add_argument("--rank", type=int)

    parser = argparse.ArgumentParser(prog="pbwdeg", description="PBW degrees of simple modules")
    parser.add_argument("--version", action="version", version=f"pbwdeg {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("degree", parents=[common, typed], help="Hilbert-Poincare polynomial of V(lambda)")
    p.add_argument("--weight", required=True, help="fundamental-weight coordinates, e.g. 1,0")
    p.add_argument("--per-weight", action="store_true", help="include p_(lambda,tau) for every weight")
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("verify", parents=[common], help="check fundamental-weight degrees")
    p.add_argument("--family", default="all", help="family letters, e.g. BD, or 'all'")
    p.add_argument("--max-rank", type=int, default=8)
    p.add_argument("--output", help="write the report to this file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("kostant", parents=[common, typed], help="graded Kostant partition function")
    p.add_argument("--nu", required=True, help="simple-root coordinates, e.g. 1,1")
    p.set_defaults(func=cmd_kostant)

    p = sub.add_parser("additivity", parents=[common, typed], help="deg p_(lam+mu) = deg p_lam + deg p_mu")
    p.add_argument("--weights", required=True, help="two weights separated by ';'")
    p.set_defaults(func=cmd_additivity)

    p = sub.add_parser("cache", parents=[common, typed], help="manage the module cache")
    p.add_argument("action", choices=("store", "load", "list", "clear"))
    p.add_argument("--weight")
    p.set_defaults(func=cmd_cache)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    with warnings.catch_warnings():
        warnings.simplefilter("always", CacheWarning)
        try:
            return args.func(args)
        except DimensionCapExceeded as exc:
            sys.stderr.write(f"error: {exc}; rerun with --force or a larger --max-dim\n")
            return EXIT_RESOURCE
        except (UsageError, PBWError, ValueError) as exc:
            sys.stderr.write(f"error: {exc}\n")
            return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
