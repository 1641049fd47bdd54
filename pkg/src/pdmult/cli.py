"""Command-line front end.

Exit codes: 0 when the computation succeeded and the checked property holds,
1 when it was computed but the property fails, 2 on invalid input or a
violated precondition (payload ``{"error": code, "detail": ...}``).
"""

import argparse
import json
import sys
from pathlib import Path

from pdmult.corpus import run_corpus
from pdmult.errors import MalformedInput, PDMultError
from pdmult.interpolation import (
    FunctionalSet,
    cayley_bacharach_analyze,
    evaluation_matrix,
    fundamental_polynomial,
    is_n_correct,
)
from pdmult.intersection import bezout_check, operator_system
from pdmult.linalg import rank
from pdmult.multiplicity import check_d_invariance, multiplicity_space
from pdmult.noether import DecompositionCertificate, noether_decompose, verify_dim_w
from pdmult.poly import BivarPoly, Point

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise MalformedInput(message)


def _load_json(arg):
    text = arg.strip()
    if not text.startswith(("{", "[")):
        try:
            text = Path(arg).read_text(encoding="utf-8")
        except OSError as exc:
            raise MalformedInput(f"cannot read {arg}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON in {arg}: {exc}") from None


def _poly(args, name):
    value = getattr(args, name)
    if value is None:
        raise MalformedInput(f"--{name} is required")
    return BivarPoly.from_json(_load_json(value))


def _degree(args, required=True):
    if args.degree is None:
        if required:
            raise MalformedInput("--degree is required")
        return None
    if args.degree < 0:
        raise MalformedInput("--degree must be nonnegative")
    return args.degree


def _functionals(args):
    if args.ops is not None:
        return FunctionalSet.from_json(_load_json(args.ops))
    p, q = _poly(args, "p"), _poly(args, "q")
    return FunctionalSet.from_system(operator_system(p, q))


def cmd_mult(args):
    if args.point is None:
        raise MalformedInput("--point is required")
    space = multiplicity_space(_poly(args, "p"), _poly(args, "q"), Point.parse(args.point))
    invariant = check_d_invariance(space)
    return dict(space.to_json(), d_invariant=invariant), invariant


def cmd_bezout(args):
    report = bezout_check(_poly(args, "p"), _poly(args, "q"))
    return report.to_json(), report.complete


def cmd_noether(args):
    f, p, q = _poly(args, "f"), _poly(args, "p"), _poly(args, "q")
    k = _degree(args, required=False)
    if k is not None and f.degree > k:
        raise MalformedInput(f"deg f = {f.degree} exceeds --degree {k}")
    result = noether_decompose(f, p, q, k=k)
    return result.to_json(), isinstance(result, DecompositionCertificate)


def cmd_cb(args):
    report = cayley_bacharach_analyze(_poly(args, "p"), _poly(args, "q"))
    ok = report.implication_holds and (report.degenerate or report.rank_full == report.expected_rank)
    return report.to_json(), ok


def cmd_independence(args):
    S = _functionals(args)
    n = _degree(args)
    r = rank(evaluation_matrix(S, n))
    payload = {
        "degree": n,
        "size": len(S),
        "rank": r,
        "independent": r == len(S),
        "correct": is_n_correct(S, n),
        "functionals": S.to_json(),
    }
    return payload, payload["independent"]


def cmd_fundamental(args):
    S = _functionals(args)
    n = _degree(args)
    if args.index is None:
        raise MalformedInput("--index is required")
    if not 0 <= args.index < len(S):
        raise MalformedInput(f"--index {args.index} out of range 0..{len(S) - 1}")
    poly = fundamental_polynomial(args.index, S, n)
    payload = {
        "index": args.index,
        "degree": n,
        "functional": S[args.index].to_json(),
        "polynomial": None if poly is None else poly.to_json(),
        "pretty": None if poly is None else poly.pretty(),
    }
    return payload, poly is not None


def cmd_dimw(args):
    p, q = _poly(args, "p"), _poly(args, "q")
    k = _degree(args, required=False)
    m, n = p.degree, q.degree
    ks = [k] if k is not None else list(range(max(m, n), m + n + 3))
    checks = [verify_dim_w(p, q, kk) for kk in ks]
    return {"m": m, "n": n, "checks": [c.to_json() for c in checks]}, all(c.match for c in checks)


def cmd_corpus(args):
    summary = run_corpus(args.path)
    return summary, summary["all_pass"]


COMMANDS = {
    "mult": cmd_mult,
    "bezout": cmd_bezout,
    "noether": cmd_noether,
    "cb": cmd_cb,
    "independence": cmd_independence,
    "fundamental": cmd_fundamental,
    "dimw": cmd_dimw,
    "corpus": cmd_corpus,
}


def build_parser():
    parser = _Parser(prog="pdmult", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--out", help="write the JSON report here instead of stdout")
        if name == "corpus":
            sp.add_argument("path", nargs="?", default=None, help="corpus directory (default: bundled)")
            continue
        for flag in ("p", "q"):
            sp.add_argument(f"--{flag}", help="polynomial JSON file or inline JSON")
        if name == "noether":
            sp.add_argument("--f", help="polynomial JSON file or inline JSON")
        if name == "mult":
            sp.add_argument("--point", help='point as "a/b,c/d"')
        if name in ("noether", "independence", "fundamental", "dimw"):
            sp.add_argument("--degree", type=int)
        if name in ("independence", "fundamental"):
            sp.add_argument("--ops", help="functional set JSON file or inline JSON")
        if name == "fundamental":
            sp.add_argument("--index", type=int)
    return parser


def _emit(payload, out):
    text = json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def run(argv=None):
    out = None
    try:
        args = build_parser().parse_args(argv)
        out = args.out
        payload, ok = COMMANDS[args.command](args)
    except PDMultError as exc:
        _emit({"error": exc.code, "detail": str(exc.detail)}, out)
        return EXIT_INVALID
    except (ValueError, IndexError) as exc:
        _emit({"error": "invalid_input", "detail": str(exc)}, out)
        return EXIT_INVALID
    _emit(payload, out)
    return EXIT_OK if ok else EXIT_FAIL


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
