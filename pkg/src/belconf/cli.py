"""Command-line front end.

Exit codes: 0 success, 1 a mathematical check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks, formats
from .bel import BelConfig, BelViolation, DimensionError, NotReducibleError, symplectic_config
from .gf import FieldCtx, FieldError
from .gtf import GtfParams, gtf_isotopic, gtf_knuth, gtf_to_cubical, gtf_valid
from .isotopy import DEFAULT_BUDGET, BudgetExceeded, invariants, isotopic_bruteforce
from .linalg import SingularError
from .rank2 import (
    TABLE24,
    NormalizationError,
    NotRankTwoError,
    Rank2Pair,
    apply_word,
    normalize,
    orbit8,
    stab_apply,
    table24,
    table24_closed,
)
from .semifield import KNUTH_WORDS, CubicalMult, ValidityError, spread_of


class UsageError(Exception):
    pass


# -- input helpers -------------------------------------------------------


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str, *kinds):
    obj = formats.loads(_read(path))
    if isinstance(obj, GtfParams) and CubicalMult in kinds and GtfParams not in kinds:
        obj = gtf_to_cubical(obj)
    if kinds and not isinstance(obj, kinds):
        names = "/".join(k.__name__ for k in kinds)
        raise UsageError(f"{path}: expected {names}, got {type(obj).__name__}")
    return obj


def _ctx(args) -> FieldCtx:
    if args.q is None or args.n is None:
        raise UsageError("--q and --n are required")
    try:
        return FieldCtx.from_q(args.q, args.n)
    except FieldError as exc:
        raise UsageError(f"unknown field parameters: {exc}") from None


def _elem(F: FieldCtx, text, name: str) -> int:
    if text is None:
        raise UsageError(f"--{name} is required")
    return formats.parse_element(F, str(text))


def _gtf_from_args(args, suffix: str = "") -> GtfParams:
    F = _ctx(args)
    c = _elem(F, getattr(args, "c" + suffix), "c" + suffix)
    a, b = getattr(args, "a" + suffix), getattr(args, "b" + suffix)
    if a is None or b is None:
        raise UsageError(f"--a{suffix} and --b{suffix} are required")
    return GtfParams(F, c, a, b)


def _gtf_out(P: GtfParams) -> dict:
    F = P.ctx
    return {"gtf": formats.dumps(P).strip(), "c": F.encode(P.c), "a": P.a, "b": P.b}


# -- handlers: each returns (exit code, report dict) --------------------


def gtf_build(args):
    P = _gtf_from_args(args)
    ok = gtf_valid(P)
    return (0 if ok else 1), {"gtf": formats.dumps(P).strip(), "valid": ok, "proper": P.is_proper}


def gtf_knuth_cmd(args):
    P = _gtf_from_args(args)
    out = gtf_knuth(P, args.word)
    return 0, {"word": args.word, **_gtf_out(out)}


def gtf_isotopic_cmd(args):
    P = _gtf_from_args(args)
    P2 = _gtf_from_args(args, "2")
    return 0, {"isotopic": gtf_isotopic(P, P2)}


def sf_mult(args):
    C = _load(args.file, CubicalMult)
    F = C.ctx
    x, y = _elem(F, args.x, "x"), _elem(F, args.y, "y")
    return 0, {"x": args.x, "y": args.y, "product": F.encode(C.mult(x, y))}


def sf_check(args):
    C = _load(args.file, CubicalMult)
    ok = C.is_presemifield()
    return (0 if ok else 1), {"presemifield": ok, "commutative": C.is_commutative()}


def sf_nuclei(args):
    C = _load(args.file, CubicalMult)
    return 0, invariants(C)


def sf_knuth(args):
    C = _load(args.file, CubicalMult)
    return 0, {"word": args.word, "semifield": formats.dumps(C.knuth(args.word))}


def sf_spread(args):
    C = _load(args.file, CubicalMult)
    S = spread_of(C)
    ok = S.is_spread()
    return (0 if ok else 1), {"members": len(S.subspaces()), "spread": ok}


def bel_check(args):
    B = _load(args.file, BelConfig)
    conds = B.belprop_conditions()
    ok = B.is_bel()
    consistent = all(c == ok for c in conds)
    return (0 if ok and consistent else 1), {"bel": ok, "conditions": list(conds), "consistent": consistent}


def bel_mult(args):
    B = _load(args.file, BelConfig)
    F = B.ctx
    x, y = _elem(F, args.x, "x"), _elem(F, args.y, "y")
    B.require_dims()
    return 0, {"x": args.x, "y": args.y, "product": F.encode(B.bel_mult(x, y))}


def bel_cubical(args):
    B = _load(args.file, BelConfig)
    B.require_dims()
    return 0, {"semifield": formats.dumps(B.to_cubical())}


def bel_spread_cmd(args):
    B = _load(args.file, BelConfig)
    S = B.bel_spread()
    same = S.subspaces() == spread_of(B.to_cubical().dual()).subspaces()
    ok = S.is_spread() and same
    return (0 if ok else 1), {"members": len(S.subspaces()), "spread": S.is_spread(), "matches_cubical_route": same}


def bel_reduce(args):
    B = _load(args.file, BelConfig)
    v = B.find_spread_element_in_W()
    R = B.reduce_r()
    return 0, {"v": [B.ctx.encode(c) for c in v], "bel": formats.dumps(R)}


def bel_transpose(args):
    B = _load(args.file, BelConfig)
    return 0, {"bel": formats.dumps(B.perp_transpose())}


def bel_symplectic(args):
    C = _load(args.file, CubicalMult)
    B = symplectic_config(C)
    return 0, {"r": B.r, "bel": formats.dumps(B)}


def _pair_out(P: Rank2Pair) -> dict:
    out = {"rank2": formats.dumps(P)}
    try:
        out["gtf"] = formats.dumps(P.to_gtf()).strip()
    except ValueError:
        pass
    return out


def r2_normalize(args):
    B = _load(args.file, BelConfig)
    pair, iso, move = normalize(B, both_sided=args.both_sided)
    F = B.ctx
    return 0, {
        **_pair_out(pair),
        "move": None if move is None else [[F.encode(v) for v in row] for row in move],
        "isotopism": formats.dumps(iso),
    }


def _r2_op(word):
    def handler(args):
        P = _load(args.file, Rank2Pair)
        return 0, {"word": word, **_pair_out(apply_word(P, word))}

    return handler


def r2_orbit8(args):
    P = _load(args.file, Rank2Pair)
    return 0, {"orbit": {w: _pair_out(Q) for w, Q in orbit8(P)}}


def r2_stab(args):
    P = _gtf_from_args(args)
    F = P.ctx
    if not args.phi or not args.phi2:
        raise UsageError("--phi and --phi2 stab lines are required")
    phi, phi2 = formats.parse_stab(F, args.phi), formats.parse_stab(F, args.phi2)
    return 0, _gtf_out(stab_apply(P, phi, phi2))


def r2_table24(args):
    P = _load(args.file, Rank2Pair)
    F = P.ctx
    cells = table24(P)
    mismatches = []
    for (row, col), C in cells.items():
        f = table24_closed(P, row, col)
        if any(C.mult(x, y) != f(x, y) for x in F.elements() for y in F.elements()):
            mismatches.append(f"{row}/{col}")
    return (1 if mismatches else 0), {
        "cells": len(cells),
        "rows": list(TABLE24),
        "columns": ["id", "s", "e", "es"],
        "mismatches": mismatches,
    }


def iso_test(args):
    C1 = _load(args.file, CubicalMult)
    C2 = _load(args.file2, CubicalMult)
    wit = isotopic_bruteforce(C1, C2, budget=args.budget, prune=not args.no_prune, jobs=args.jobs)
    out = {"isotopic": wit is not None}
    if wit is not None:
        out["isotopism"] = formats.dumps(wit)
        out["verified"] = wit.verify(C1.mult, C2.mult)
    return 0, out


def iso_invariants(args):
    return 0, invariants(_load(args.file, CubicalMult))


def verify_all(args):
    results = checks.run_all(seed=args.seed, jobs=args.jobs, q=args.q, n=args.n)
    lines = [r.line(timing=args.timing) for r in results]
    passed = sum(r.passed for r in results)
    report = {
        "checks": lines,
        "passed": passed,
        "failed": len(results) - passed,
    }
    return (0 if passed == len(results) else 1), report


# -- parser --------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--seed", type=int, default=checks.DEFAULT_SEED)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--json", action="store_true", help="machine-readable report")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="belconf", description="Semifields from BEL-configurations.")
    groups = parser.add_subparsers(dest="group", required=True)

    def leaf(sub, name, handler, help_text, file=False, file2=False, xy=False, word=None):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if file:
            p.add_argument("file", help="input file ('-' for stdin)")
        if file2:
            p.add_argument("file2", help="second input file")
        if xy:
            p.add_argument("--x")
            p.add_argument("--y")
        if word:
            p.add_argument("--word", required=True, choices=word)
        p.set_defaults(handler=handler)
        return p

    def gtf_flags(p, suffix=""):
        p.add_argument(f"--c{suffix}")
        p.add_argument(f"--a{suffix}", type=int)
        p.add_argument(f"--b{suffix}", type=int)

    g = groups.add_parser("gtf", help="generalized twisted fields").add_subparsers(dest="action", required=True)
    gtf_flags(leaf(g, "build", gtf_build, "validate parameters"))
    gtf_flags(leaf(g, "knuth", gtf_knuth_cmd, "Knuth derivative parameters", word=KNUTH_WORDS))
    p = leaf(g, "isotopic", gtf_isotopic_cmd, "closed-form isotopy test")
    gtf_flags(p)
    gtf_flags(p, "2")

    s = groups.add_parser("semifield", help="cubical arrays").add_subparsers(dest="action", required=True)
    leaf(s, "mult", sf_mult, "evaluate S(x, y)", file=True, xy=True)
    leaf(s, "check", sf_check, "presemifield test", file=True)
    leaf(s, "nuclei", sf_nuclei, "nuclei orders", file=True)
    leaf(s, "knuth", sf_knuth, "Knuth derivative", file=True, word=KNUTH_WORDS)
    leaf(s, "spread", sf_spread, "semifield spread", file=True)

    b = groups.add_parser("bel", help="BEL-configurations").add_subparsers(dest="action", required=True)
    leaf(b, "check", bel_check, "BEL property by five routes", file=True)
    leaf(b, "mult", bel_mult, "evaluate S_{f,g}(x, y)", file=True, xy=True)
    leaf(b, "cubical", bel_cubical, "cubical array of S_{f,g}", file=True)
    leaf(b, "spread", bel_spread_cmd, "spread through T_g", file=True)
    leaf(b, "reduce", bel_reduce, "drop a coordinate", file=True)
    leaf(b, "transpose", bel_transpose, "perp-transpose", file=True)
    leaf(b, "symplectic", bel_symplectic, "configuration (f, f^) of a commutative array", file=True)

    r = groups.add_parser("rank2", help="r = 2 configurations").add_subparsers(dest="action", required=True)
    p = leaf(r, "normalize", r2_normalize, "reduce to an (a, b) pair", file=True)
    p.add_argument("--both-sided", action="store_true", help="also make a and b invertible (q > 2)")
    for letter in "set":
        leaf(r, letter, _r2_op(letter), f"operation {letter}", file=True)
    leaf(r, "orbit8", r2_orbit8, "the eight group words", file=True)
    p = leaf(r, "stab", r2_stab, "stabilizer action on a twisted field")
    gtf_flags(p)
    p.add_argument("--phi", help="stab line acting on U")
    p.add_argument("--phi2", help="stab line acting on W")
    leaf(r, "table24", r2_table24, "check the 24 closed forms", file=True)

    i = groups.add_parser("iso", help="isotopy").add_subparsers(dest="action", required=True)
    p = leaf(i, "test", iso_test, "exhaustive isotopism search", file=True, file2=True)
    p.add_argument("--no-prune", action="store_true", help="skip the nuclei filter")
    leaf(i, "invariants", iso_invariants, "nuclei record", file=True)

    v = groups.add_parser("verify", help="acceptance suite").add_subparsers(dest="action", required=True)
    p = leaf(v, "all", verify_all, "run every acceptance check")
    p.add_argument("--timing", action="store_true", help="append wall times (breaks byte-identical output)")
    return parser


def _scalar(val) -> str:
    if isinstance(val, bool):
        return str(val).lower()
    if val is None:
        return "none"
    if isinstance(val, (list, dict)):
        return json.dumps(val, sort_keys=True)
    return str(val)


def _render(report: dict) -> str:
    out = []
    for key, val in report.items():
        if key == "checks":
            out.extend(val)
        elif isinstance(val, str) and "\n" in val:
            out.append(f"{key}:")
            out.append(val.rstrip("\n"))
        elif isinstance(val, dict) and all(isinstance(v, dict) for v in val.values()):
            out.append(f"{key}:")
            for k2, v2 in val.items():
                shown = v2.get("gtf") or " ".join(v2.get("rank2", "").split("\n")[1:]).strip()
                out.append(f"  {k2}: {shown}")
        else:
            out.append(f"{key}: {_scalar(val)}")
    return "\n".join(out)


_DOMAIN_ERRORS = (
    formats.FormatError,
    FieldError,
    ValidityError,
    DimensionError,
    BelViolation,
    NotReducibleError,
    NormalizationError,
    NotRankTwoError,
    BudgetExceeded,
    SingularError,
    UsageError,
)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, report = args.handler(args)
    except _DOMAIN_ERRORS as exc:
        kind = type(exc).__name__
        if args.json:
            print(json.dumps({"error": kind, "message": str(exc)}, sort_keys=True))
        else:
            print(f"error ({kind}): {exc}", file=sys.stderr)
        return 2
    command = f"{args.group} {args.action}"
    if args.json:
        print(json.dumps({"command": command, "exit": code, **report}, sort_keys=True, indent=2))
    else:
        print(f"# {command}")
        print(_render(report))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
