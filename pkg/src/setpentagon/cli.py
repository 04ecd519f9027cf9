"""Command-line front end.

Exit status: 0 on success, 1 when a verification or property check fails,
2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from .construct import (GroupConstructionData, HypothesisError, MonoidConstructionData,
                        clifford_solution, constant_solution, from_endomorphism, group_solution,
                        militaru_solution, monoid_idempotent_solution, variety_S_solution)
from .formats import (ParseError, format_solution, format_theta, parse_cayley,
                      parse_construction, parse_solution, parse_theta, read_text)
from .lab import mutation_sweep, run_catalog, standard_instances
from .search import SearchOptions, census, enumerate_solutions
from .semigroup import DomainError, MalformedTable, NotAssociative
from .solution import (FLAG_NAMES, NotASolution, PentagonSolution, classify_table,
                       solutions_isomorphic, verify_solution)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

log = logging.getLogger("setpentagon")


class UsageError(Exception):
    pass


# -- input helpers ---------------------------------------------------------------

def _load_semigroup(path):
    return parse_cayley(read_text(path), source=str(path))


def _load_pair(args):
    """Semigroup and theta table from ``--solution`` or ``--table`` + ``--theta``."""
    if args.solution:
        sol = parse_solution(read_text(args.solution), source=str(args.solution))
        return sol.semigroup, sol.theta
    if not (args.table and args.theta):
        raise UsageError("give --solution FILE, or both --table and --theta")
    S = _load_semigroup(args.table)
    theta = parse_theta(read_text(args.theta), n=S.n, source=str(args.theta))
    return S, theta


def _yes(b):
    return "yes" if b else "no"


def _flag_line(flags):
    d = flags.as_dict()
    return (f"idempotent: {_yes(d['idempotent'])}; non-degenerate: {_yes(d['nondegenerate'])}; "
            f"involutive: {_yes(d['involutive'])}; commutative: {_yes(d['commutative'])}; "
            f"cocommutative: {_yes(d['cocommutative'])}")


def _emit(args, text, payload):
    out = json.dumps(payload, indent=2, sort_keys=True) + "\n" if args.json else text
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _filters(args):
    return frozenset(args.filter or ())


# -- subcommands ------------------------------------------------------------------

def cmd_verify(args):
    S, theta = _load_pair(args)
    res = verify_solution(S, theta)
    payload = {"solution": res.ok, "violations": res.total,
               "witnesses": [{"condition": v.condition, "triple": list(v.triple)}
                             for v in res.violations]}
    if not res.ok:
        lines = [f"solution: no ({res.total} violation(s))"]
        lines += [f"  {v.condition} fails at (x, y, z) = {v.triple}" for v in res.violations]
        _emit(args, "\n".join(lines) + "\n", payload)
        return EXIT_FAIL
    flags = classify_table(S, theta)
    payload["flags"] = flags.as_dict()
    _emit(args, f"solution: yes; {_flag_line(flags)}\n", payload)
    return EXIT_OK


def cmd_classify(args):
    S, theta = _load_pair(args)
    sol = PentagonSolution(S, theta)
    flags = sol.flags
    text = "".join(f"{k}: {_yes(v)}\n" for k, v in flags.as_dict().items())
    _emit(args, text, {"flags": flags.as_dict()})
    return EXIT_OK


def cmd_enumerate(args):
    S = _load_semigroup(args.table)
    opts = SearchOptions(filter=_filters(args), up_to_iso=args.up_to_iso,
                         worker_count=args.workers)
    sols = enumerate_solutions(S, opts)
    if args.format == "solution":
        text = "\n".join(format_solution(s) for s in sols)
    else:
        text = "".join(format_theta(s.theta) for s in sols)
    text += f"# COUNT={len(sols)}\n"
    payload = {"count": len(sols), "up_to_iso": args.up_to_iso, "filter": sorted(opts.filter),
               "solutions": [{"theta": [list(r) for r in s.theta], "flags": s.flags.as_dict()}
                             for s in sols]}
    _emit(args, text, payload)
    return EXIT_OK


def cmd_census(args):
    rep = census(args.order, _filters(args), args.workers, allow_large=args.allow_large)
    log.info("census finished in %.2fs", rep.elapsed)
    _emit(args, rep.to_text(), rep.to_json())
    return EXIT_OK


def _ints(spec, name):
    if name not in spec.subsets:
        raise UsageError(f"construction data needs `{name}: ...`")
    return spec.subsets[name]


def _full_map(spec, name, n):
    if name not in spec.maps:
        raise UsageError(f"construction data needs a `{name}:` map section")
    m = spec.maps[name]
    missing = [x for x in range(n) if x not in m]
    if missing:
        raise UsageError(f"map {name} has no image for {missing}")
    return tuple(m[x] for x in range(n))


def _build(spec, S):
    kind = spec.kind
    if kind == "militaru":
        n = spec.n
        if n is None:
            raise UsageError("militaru data needs `n N`")
        return militaru_solution(n, _full_map(spec, "f", n), _full_map(spec, "g", n))[1]
    if S is None:
        raise UsageError(f"kind {kind} needs --table")
    if kind == "endomorphism":
        return from_endomorphism(S, _full_map(spec, "gamma", S.n))
    if kind == "constant":
        (e,) = _ints(spec, "e")
        return constant_solution(S, e)
    if kind == "variety":
        return variety_S_solution(S)
    if kind == "clifford":
        return clifford_solution(S)
    if kind == "group":
        mu = _full_map(spec, "mu", S.n) if "mu" in spec.maps else None
        return group_solution(GroupConstructionData(S, _ints(spec, "K"), _ints(spec, "R"), mu))
    if kind == "monoid":
        mu = _full_map(spec, "mu", S.n)
        fam = {}
        for name in spec.maps:
            if name.startswith("theta "):
                fam[int(name.split()[1])] = _full_map(spec, name, S.n)
        return monoid_idempotent_solution(MonoidConstructionData(S, mu, fam))
    raise UsageError(f"unknown kind {kind}")


def cmd_construct(args):
    spec = parse_construction(read_text(args.data), source=str(args.data))
    S = _load_semigroup(args.table) if args.table else None
    try:
        sol = _build(spec, S)
    except HypothesisError as exc:
        _emit(args, f"hypothesis failed: {exc}\n",
              {"ok": False, "condition": exc.condition, "witness": repr(exc.witness)})
        return EXIT_FAIL
    payload = {"ok": True, "mul": [list(r) for r in sol.semigroup.mul],
               "identity": sol.semigroup.identity, "theta": [list(r) for r in sol.theta],
               "flags": sol.flags.as_dict()}
    _emit(args, format_solution(sol), payload)
    return EXIT_OK


def cmd_iso(args):
    a = parse_solution(read_text(args.first), source=str(args.first))
    b = parse_solution(read_text(args.second), source=str(args.second))
    f = solutions_isomorphic(a, b) if a.n == b.n else None
    if f is None:
        _emit(args, "isomorphic: no\n", {"isomorphic": False})
        return EXIT_FAIL
    _emit(args, "isomorphic: yes; map: " + " ".join(map(str, f)) + "\n",
          {"isomorphic": True, "map": list(f)})
    return EXIT_OK


def cmd_lab(args):
    instances = standard_instances(args.max_order)
    rep = run_catalog(instances, worker_count=args.workers)
    payload = rep.to_json()
    text = rep.summary() if args.summary else rep.to_text()
    if args.mutation:
        sweep = mutation_sweep(instances)
        unflipped = [k for k, v in sweep.items() if v.kind is None]
        text += "".join(f"MUTATION {k} {v.kind or 'none'} {v.mutation}\n" for k, v in sweep.items())
        text += f"MUTATION_UNFLIPPED={len(unflipped)}\n"
        payload["mutation"] = {k: {"kind": v.kind, "mutation": repr(v.mutation)}
                               for k, v in sweep.items()}
        ok = rep.ok and not unflipped
    else:
        ok = rep.ok
    _emit(args, text, payload)
    return EXIT_OK if ok else EXIT_FAIL


# -- parser -------------------------------------------------------------------------

def _workers(s):
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("worker count must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="setpentagon",
                                description="Solutions s(x, y) = (xy, theta_x(y)) of the "
                                            "set-theoretical pentagon equation on small semigroups.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, output=True):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if output:
            sp.add_argument("-o", "--output", help="write results to a file")

    def pair(sp):
        sp.add_argument("--solution", help="solution file (keyed block)")
        sp.add_argument("--table", help="Cayley table file")
        sp.add_argument("--theta", help="theta table file")

    sp = sub.add_parser("verify", help="check (P1) and (P2) and report flags")
    pair(sp)
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("classify", help="print classification flags of a solution")
    pair(sp)
    common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("enumerate", help="all solutions on one semigroup")
    sp.add_argument("--table", required=True)
    sp.add_argument("--filter", action="append", choices=FLAG_NAMES,
                    help="keep only solutions with this flag (repeatable)")
    sp.add_argument("--up-to-iso", action="store_true")
    sp.add_argument("--workers", type=_workers, default=1)
    sp.add_argument("--format", choices=("theta", "solution"), default="theta")
    common(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("census", help="solutions up to isomorphism over all semigroups of an order")
    sp.add_argument("--order", type=int, default=3)
    sp.add_argument("--filter", action="append", choices=FLAG_NAMES)
    sp.add_argument("--workers", type=_workers, default=1)
    sp.add_argument("--allow-large", action="store_true",
                    help="permit orders above 3 (long runtime)")
    common(sp)
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("construct", help="build a solution from construction data")
    sp.add_argument("--data", required=True)
    sp.add_argument("--table")
    common(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("iso", help="test two solutions for isomorphism")
    sp.add_argument("first")
    sp.add_argument("second")
    common(sp)
    sp.set_defaults(func=cmd_iso)

    sp = sub.add_parser("lab", help="run the property catalog")
    sp.add_argument("--max-order", type=int, default=3, choices=(1, 2, 3))
    sp.add_argument("--workers", type=_workers, default=1)
    sp.add_argument("--summary", action="store_true", help="one line per case")
    sp.add_argument("--mutation", action="store_true", help="also run the mutation sweep")
    common(sp)
    sp.set_defaults(func=cmd_lab)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except NotASolution as exc:
        print(f"error: not a solution: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except NotAssociative as exc:
        print(f"error: not associative at (x, y, z) = {exc.triple}", file=sys.stderr)
    except (UsageError, ParseError, MalformedTable, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
