"""Command-line front end.

Exit codes: 0 success, 1 axiom failure or counterexample, 2 usage,
3 size cap or search budget, 4 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from .checkers import SUITES, run_suite
from .edges import EdgeSet, bigstar, hm1_family, hm_family, num_edges, star, stars_minus
from .errors import CapExceeded, GenericityNotCertified, MatroidError, PreconditionNotMet
from .explorer import check_closing_corollary, confirm_theorem_2dim, search_question
from .matroid import matroid_from_json, uniform_matroid
from .reports import Scope
from .rigidity import cycle_matroid_arm, generic_embedding

log = logging.getLogger("rigmat")

OK, FAIL, USAGE, CAP, IO = 0, 1, 2, 3, 4

EXPLORE_EXIT = {"equivalence-confirmed": OK, "exhausted-no-counterexample": OK,
                "counterexample": FAIL, "discrepancy": FAIL, "budget-exhausted": CAP}


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _dump(obj) -> str:
    return json.dumps(obj) + "\n"


def _need_dim(n: int, m: int) -> None:
    if m < 1:
        raise UsageError("--m must be at least 1")
    if n < m + 1:
        raise UsageError(f"need n >= m+1 (got n={n}, m={m})")


def _load(path: str):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise IOError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path} is not valid JSON: {exc}") from exc
    return matroid_from_json(data)


# -- commands -----------------------------------------------------------------

def cmd_build(args) -> int:
    if args.kind == "uniform":
        if args.rank is None:
            raise UsageError("--kind uniform needs --rank")
        if not 0 <= args.rank <= num_edges(args.n):
            raise UsageError(f"rank must lie in [0, {num_edges(args.n)}]")
        data = uniform_matroid(args.n, args.rank).to_json()
    elif args.kind == "cycle" or args.m == 1:
        _need_dim(args.n, 1 if args.kind == "cycle" else args.m)
        data = cycle_matroid_arm(args.n).to_json()
    else:
        _need_dim(args.n, args.m)
        try:
            p, M = generic_embedding(args.n, args.m, args.seed)
        except GenericityNotCertified as exc:
            log.error("%s", exc)
            return FAIL
        data = M.to_json()
        data["embedding"] = p.to_json()
    _emit(json.dumps(data, indent=1) + "\n", args.out)
    return OK


def cmd_check(args) -> int:
    suites = [s.strip() for s in args.suites.split(",") if s.strip()]
    unknown = [s for s in suites if s not in SUITES]
    if unknown:
        raise UsageError(f"unknown suites {unknown}; choose from {','.join(SUITES)}")
    scope = None
    if args.scope is not None:
        if args.scope.startswith("sampled") and args.seed is None:
            raise UsageError("--seed is required with a sampled scope")
        try:
            scope = Scope.parse(args.scope, args.seed)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    M = _load(args.matroid)
    _need_dim(len(M.vertices), args.m)
    lines, ok = [], True
    for s in suites:
        try:
            rep = run_suite(s, M, args.m, scope)
        except PreconditionNotMet as exc:
            lines.append(_dump({"suite": s, "passed": False, "error": "PreconditionNotMet",
                                "message": str(exc)}))
            ok = False
            continue
        lines.append(_dump(rep.to_json()))
        ok &= rep.passed
    _emit("".join(lines), args.out)
    return OK if ok else FAIL


def cmd_enumerate(args) -> int:
    M = _load(args.matroid)
    family = getattr(M, args.what)()
    out = sys.stdout if args.out is None else open(args.out, "w")
    try:
        for X in family:
            out.write(_dump(X.to_json()))
    finally:
        if out is not sys.stdout:
            out.close()
    return OK


def _family(args) -> tuple[str, list[EdgeSet]]:
    from itertools import combinations
    n, m = args.n, args.m
    if args.hm:
        return "hm", hm_family(n, m)
    if args.hm1:
        return "hm1", hm1_family(n, m)
    if args.bigstar:
        return "bigstar", [bigstar(V, n) for V in combinations(range(n), m)]
    if args.star:
        return "star", [star(v, n) for v in range(n)]
    return "stars_minus", stars_minus(n, m - 1)


def cmd_families(args) -> int:
    _need_dim(args.n, args.m)
    name, fam = _family(args)
    lines = [_dump({"family": name, "n": args.n, "m": args.m, "count": len(fam)})]
    lines += [_dump(X.to_json()) for X in fam]
    _emit("".join(lines), args.out)
    return OK


def cmd_explore(args) -> int:
    _need_dim(args.n, args.m)
    if args.mode == "confirm-2dim":
        f = confirm_theorem_2dim(args.n, args.m)
    else:
        if args.n < args.m + 2:
            raise UsageError(f"search needs n >= m+2 (got n={args.n}, m={args.m})")
        if args.budget < 1:
            raise UsageError("--budget must be positive")
        run = search_question if args.mode == "question" else check_closing_corollary
        f = run(args.n, args.m, budget=args.budget, seed=args.seed)
    _emit(f.dumps() + "\n", args.out)
    return EXPLORE_EXIT[f.verdict]


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--out", help="write output here instead of stdout")
    shared.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker bound (computations currently run single-threaded)")
    shared.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="rigmat", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", parents=[shared], help="build a matroid and write its JSON")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--m", type=int, default=2)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--kind", choices=["arm", "cycle", "uniform"], default="arm",
                   help="arm: generic rigidity matroid (cycle matroid for m=1)")
    b.add_argument("--rank", type=int, help="rank for --kind uniform")
    b.set_defaults(func=cmd_build)

    c = sub.add_parser("check", parents=[shared], help="run checker suites on a matroid file")
    c.add_argument("matroid")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--suites", default="prop6", help=f"comma list from {','.join(SUITES)}")
    c.add_argument("--scope", help="exhaustive or sampled:COUNT (default depends on size)")
    c.add_argument("--seed", type=int)
    c.set_defaults(func=cmd_check)

    e = sub.add_parser("enumerate", parents=[shared], help="stream a family as JSON lines")
    e.add_argument("matroid")
    e.add_argument("--what", required=True,
                   choices=["bases", "circuits", "cocircuits", "hyperplanes", "flats"])
    e.set_defaults(func=cmd_enumerate)

    f = sub.add_parser("families", parents=[shared], help="emit a prescribed edge-set family")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--m", type=int, default=2)
    which = f.add_mutually_exclusive_group(required=True)
    for flag in ("--hm", "--hm1", "--bigstar", "--star", "--stars-minus"):
        which.add_argument(flag, action="store_true")
    f.set_defaults(func=cmd_families)

    x = sub.add_parser("explore", parents=[shared], help="run a search and write a finding")
    x.add_argument("--mode", choices=["confirm-2dim", "question", "closing-corollary"],
                   required=True)
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--m", type=int, default=2)
    x.add_argument("--budget", type=int, default=1000)
    x.add_argument("--seed", type=int, default=0)
    x.set_defaults(func=cmd_explore)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    if args.threads < 1:
        parser.error("--threads must be positive")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"rigmat: error: {exc}", file=sys.stderr)
        return USAGE
    except CapExceeded as exc:
        print(f"rigmat: cap exceeded: {exc}", file=sys.stderr)
        return CAP
    except (OSError, ValueError, KeyError, MatroidError) as exc:
        print(f"rigmat: cannot process input: {exc}", file=sys.stderr)
        return IO


if __name__ == "__main__":
    sys.exit(main())
