"""Command-line frontend.

Every command builds a JSON-ready record (exact values as strings) and prints
it as json, csv or text. Exit codes: 0 success, 1 usage or parse error,
2 a computed invariant failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Sequence

from .dunkl import DunklSystem
from .errors import DomainError, IntegrityError, UnsupportedError
from .exact import format_scalar, parse_scalar
from .groups import build_group, parse_group, parse_params
from .modules import (character_series, default_cutoff, euler_character_identity, finite_dim_decide,
                      gorenstein_check, irreducible_quotient, polynomial_rep, radical_vanishes_on,
                      rank1_brute_force, submodule_closure)
from .poly import parse_poly
from .singular import (TypeAParams, WreathParams, er_residual, generic_singular_solver,
                       partitions, pattern_member, pattern_point, rank1_data, resonant_point,
                       sigma_r, sigma_r_contains, solve_er, support_member, typeA_singular,
                       weight_pattern, wreath_singular, permutes)

EXIT_OK, EXIT_USAGE, EXIT_INTEGRITY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------------------
# helpers


def _poly_json(f) -> str:
    return f.to_text()


def _killed(system: DunklSystem, fs) -> bool:
    return all(not system.apply(f, i) for f in fs for i in range(system.n))


def _cutoff(args, expected_finite: bool, n: int, r: int | None) -> int:
    if args.cutoff is not None:
        return args.cutoff
    if expected_finite and r is not None:
        return default_cutoff(n, r)
    return default_cutoff()


def _singular_quotient(args):
    """Quotient by the closed-form singular vectors for --group and --r."""
    group = parse_group(args.group)
    if args.r is None:
        raise UsageError("--r is required")
    if group.is_type_a:
        tp = TypeAParams(group.n, args.r)
        fs = typeA_singular(tp)
        params = tp.params()
        finite = tp.d == 1
        cutoff = _cutoff(args, finite, group.n, args.r)
        Q = submodule_closure(group, params, fs, cutoff, translation=True)
        info = {"k": format_scalar(tp.k)}
        U = fs[: group.n - 1]
    else:
        k = parse_scalar(args.k, group.l) if args.k is not None else Fraction(0)
        if args.c:
            wp = WreathParams(group.l, group.n, args.r, k, tuple(parse_scalar(x, group.l) for x in args.c))
            if er_residual(wp):
                raise DomainError("parameters are not on E_r; omit the last c to solve for it")
        else:
            wp = solve_er(group.l, group.n, args.r, k)
        fs = wreath_singular(wp)
        params = wp.params()
        finite = not sigma_r_contains(k, wp)
        cutoff = _cutoff(args, finite, group.n, args.r)
        Q = submodule_closure(group, params, fs, cutoff)
        info = {"k": format_scalar(k), "c": [format_scalar(x) for x in wp.c]}
        U = fs
    return group, params, Q, fs, U, info


def _params_from(args, group):
    return parse_params(group, args.k, args.c)


# ---------------------------------------------------------------------------
# commands; each returns (record, ok)


def cmd_dunkl(args):
    group = parse_group(args.group)
    params = _params_from(args, group)
    f = parse_poly(args.poly, group.n, group.l)
    system = DunklSystem(group, params)
    if "," in args.direction:
        y = [parse_scalar(x, group.l) for x in args.direction.split(",")]
        if len(y) != group.n:
            raise DomainError(f"direction needs {group.n} coordinates")
    else:
        y = int(args.direction) - 1
        if not 0 <= y < group.n:
            raise DomainError("direction index out of range")
    out = system.apply(f, y)
    return {"command": "dunkl", "group": group.descriptor, "params": params.describe(),
            "input": f.to_text(), "direction": args.direction, "result": out.to_text()}, True


def cmd_singular(args):
    if args.family == "typeA":
        tp = TypeAParams(args.n, args.r)
        fs = typeA_singular(tp)
        group, params = tp.group(), tp.params()
        system = DunklSystem(group, params)
        killed = _killed(system, fs)
        total = sum(fs[1:], fs[0])
        record = {"command": "singular", "family": "typeA", "n": args.n, "r": args.r,
                  "k": format_scalar(tp.k), "f": [_poly_json(f) for f in fs],
                  "killed_by_dunkl": killed, "sum_zero": not total, "equivariant": permutes(group, fs)}
        return record, killed and not total and record["equivariant"]
    if args.family == "wreath":
        group = build_group(args.l, args.n)
        k = parse_scalar(args.k, args.l) if args.k is not None else Fraction(0)
        if args.c:
            wp = WreathParams(args.l, args.n, args.r, k, tuple(parse_scalar(x, args.l) for x in args.c))
        else:
            wp = solve_er(args.l, args.n, args.r, k)
        fs = wreath_singular(wp)
        system = DunklSystem(group, wp.params())
        killed = _killed(system, fs)
        pattern = weight_pattern(group, fs, wp.q)
        record = {"command": "singular", "family": "wreath", "l": args.l, "n": args.n, "r": args.r,
                  "p": wp.p, "q": wp.q, "s": wp.s, "k": format_scalar(k),
                  "c": [format_scalar(x) for x in wp.c], "f": [_poly_json(f) for f in fs],
                  "killed_by_dunkl": killed, "weight_pattern": pattern}
        return record, killed and pattern
    group = parse_group(args.group)
    params = _params_from(args, group)
    basis = generic_singular_solver(group, params, args.degree)
    return {"command": "singular", "family": "solve", "group": group.descriptor,
            "params": params.describe(), "degree": args.degree, "dimension": len(basis),
            "basis": [_poly_json(f) for f in basis]}, True


def cmd_quotient(args):
    group, params, Q, fs, U, info = _singular_quotient(args)
    record = {"command": "quotient", **Q.describe(), **info, "generators": [_poly_json(f) for f in fs]}
    ok = True
    if record["finite"]:
        record["gorenstein"] = gorenstein_check(Q)
    return record, ok


def cmd_radical(args):
    group = parse_group(args.group)
    params = _params_from(args, group)
    cutoff = args.cutoff if args.cutoff is not None else default_cutoff()
    Q = irreducible_quotient(group, params, cutoff)
    rad = [len(e) for e in Q.ambient_relations]
    record = {"command": "radical", **Q.describe(), "radical_dimensions": rad,
              "table": {"header": ["degree", "radical", "quotient"],
                        "rows": [[m, rad[m], d] for m, d in enumerate(Q.hilbert_series())]}}
    return record, True


def _quotient_for(args):
    if args.r is not None:
        return _singular_quotient(args)[2]
    group = parse_group(args.group)
    params = _params_from(args, group)
    cutoff = args.cutoff if args.cutoff is not None else default_cutoff()
    return irreducible_quotient(group, params, cutoff)


def cmd_hilbert(args):
    Q = _quotient_for(args)
    h = Q.hilbert_series()
    return {"command": "hilbert", "group": Q.group.descriptor, "cutoff": Q.cutoff, "hilbert": h,
            "table": {"header": ["degree", "dimension"], "rows": [[m, d] for m, d in enumerate(h)]}}, True


def cmd_character(args):
    Q = _quotient_for(args)
    series = [character_series(Q, g) for g in Q.group.conjugacy_class_reps()]
    rows = [[str(s.element), m, format_scalar(c)] for s in series for m, c in enumerate(s.coeffs)]
    return {"command": "character", "group": Q.group.descriptor, "cutoff": Q.cutoff,
            "shift": format_scalar(Q.shift()), "characters": [s.to_json() for s in series],
            "table": {"header": ["class", "degree", "trace"], "rows": rows}}, True


def cmd_gorenstein(args):
    Q = _quotient_for(args)
    fd = finite_dim_decide(Q)
    if not fd.finite:
        raise DomainError(f"quotient is not finite-dimensional through degree {Q.cutoff}")
    gor = gorenstein_check(Q)
    rad = radical_vanishes_on(Q)
    record = {"command": "gorenstein", "group": Q.group.descriptor, "cutoff": Q.cutoff,
              "dimension": fd.dimension, "gorenstein": gor, "radical_zero": rad}
    ok = True
    if Q.group.is_real and gor != rad:
        ok = False
        record["error"] = "Gorenstein and irreducible disagree for a real group"
    return record, ok


def cmd_locus(args):
    k = parse_scalar(args.k, args.l) if args.k is not None else Fraction(0)
    c = tuple(parse_scalar(x, args.l) for x in (args.c or []))
    wp = WreathParams(args.l, args.n, args.r, k, c)
    if args.which == "sigma":
        members = sorted(sigma_r(wp))
        record = {"command": "locus", "which": "sigma", "l": args.l, "n": args.n, "r": args.r,
                  "p": wp.p, "sigma_r": [format_scalar(x) for x in members]}
        if args.k is not None:
            record["k"] = format_scalar(k)
            record["contains"] = sigma_r_contains(k, wp)
        return record, True
    if not c:
        raise UsageError("locus er needs --c")
    res = er_residual(wp)
    return {"command": "locus", "which": "er", "l": args.l, "n": args.n, "r": args.r,
            "k": format_scalar(k), "c": [format_scalar(x) for x in c],
            "residual": format_scalar(res), "on_locus": not res}, True


def cmd_support(args):
    tp = TypeAParams(args.n, args.r)
    fs = typeA_singular(tp)
    if args.mode == "check":
        if not args.point:
            raise UsageError("support check needs --point")
        point = [parse_scalar(x) for x in args.point.split(",")]
        a, b = support_member(point, tp, fs), pattern_member(point, tp)
        return {"command": "support", "n": args.n, "r": args.r, "point": [format_scalar(x) for x in point],
                "support_member": a, "pattern_member": b}, a == b
    rng = random.Random(args.seed)
    pats = list(partitions(args.n))
    rows = []
    agree = True
    for i in range(args.samples):
        pat = pats[i % len(pats)]
        point = pattern_point(pat, rng)
        a, b = support_member(point, tp, fs), pattern_member(point, tp)
        agree &= a == b
        rows.append([" ".join(map(str, pat)), ",".join(format_scalar(x) for x in point), a, b])
    return {"command": "support", "n": args.n, "r": args.r, "samples": args.samples, "seed": args.seed,
            "agree": agree, "table": {"header": ["pattern", "point", "support", "pattern_member"], "rows": rows}}, agree


def _rank1_record(l: int, c: Sequence, N: int | None, check: bool):
    data = rank1_data(c, l)
    rows = []
    ok = True
    bs = {p: data.b(p) for p in range(l)}
    for p in range(l):
        for m in range(l):
            rows.append([p, m, data.multiplicity(p, m)])
    record = {"command": "rank1", "l": l, "c": [format_scalar(x) for x in c],
              "f": [format_scalar(data.f(p)) for p in range(l)],
              "b": {str(p): bs[p] for p in range(l)},
              "table": {"header": ["p", "m", "multiplicity"], "rows": rows}}
    if check:
        for p in range(l):
            predicted = data.singular_degrees(p)
            cutoff = N if N is not None else max([2 * (bs[p] or l)] + list(predicted))
            bf = rank1_brute_force(c, l, p, cutoff)
            expect = {d: m for d, m in predicted.items() if d <= cutoff}
            chars = all(bf.traces[j] == data.character(p, j, cutoff) for j in range(l))
            ok &= bf.lowest_weights == expect and chars
        record["brute_force_agrees"] = ok
    return record, ok


def cmd_rank1(args):
    c = [parse_scalar(x, args.l) for x in (args.c or [])]
    return _rank1_record(args.l, c, args.cutoff, not args.no_check)


def cmd_euler(args):
    group, params, Q, fs, U, info = _singular_quotient(args)
    rep = polynomial_rep(U)
    rows, ok = [], True
    for g in group.conjugacy_class_reps():
        chk = euler_character_identity(Q, rep, args.r, g)
        ok &= chk.ok
        rows.append([str(g), chk.ok])
    return {"command": "euler-check", "group": group.descriptor, "r": args.r, "cutoff": Q.cutoff, **info,
            "table": {"header": ["class", "identity_holds"], "rows": rows}, "ok": ok}, ok


# ---------------------------------------------------------------------------
# sweep


def _execute(argv: Sequence[str]) -> tuple[int, dict]:
    """Run one command in isolation; never raises."""
    try:
        args = build_parser().parse_args(list(argv))
        if args.command == "sweep":
            raise UsageError("sweeps cannot be nested")
        record, ok = COMMANDS[args.command](args)
        return (EXIT_OK if ok else EXIT_INTEGRITY), record
    except UsageError as e:
        return EXIT_USAGE, {"error": f"usage: {e}"}
    except IntegrityError as e:
        return EXIT_INTEGRITY, {"error": f"integrity: {e}"}
    except (DomainError, UnsupportedError, ValueError, ZeroDivisionError) as e:
        return EXIT_USAGE, {"error": str(e)}


def grid_points(grid: Sequence[str]) -> list[list[tuple[str, str]]]:
    """['k=1/3,1/2', 'r=1,3'] -> cartesian product of (name, value) pairs."""
    if not grid:
        return []
    axes = []
    for item in grid:
        if "=" not in item:
            raise UsageError(f"grid entry {item!r} is not name=v1,v2,...")
        name, values = item.split("=", 1)
        vals = [v for v in values.split(",") if v]
        axes.append([(name, v) for v in vals])
    return [list(p) for p in itertools.product(*axes)]


def cmd_sweep(args):
    template = list(args.template)
    if template and template[0] == "--":
        template = template[1:]
    if args.rank1_points:
        rng = random.Random(args.seed)
        argvs = []
        for _ in range(args.rank1_points):
            data = resonant_point(args.l, rng)
            argvs.append(["rank1", "--l", str(args.l), "--c", *[format_scalar(x) for x in data.c]])
        labels = [{"c": a[4:]} for a in argvs]
    else:
        if not template and args.grid:
            raise UsageError("sweep needs a command template after --")
        points = grid_points(args.grid)
        argvs, labels = [], []
        for point in points:
            argv = list(template)
            for name, value in point:
                argv += [f"--{name}", value]
            argvs.append(argv)
            labels.append(dict(point))
    if args.workers > 1 and len(argvs) > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            results = list(pool.map(_execute, argvs))
    else:
        results = [_execute(a) for a in argvs]
    records = []
    ok = True
    for label, (code, record) in zip(labels, results):
        ok &= code != EXIT_INTEGRITY
        records.append({"point": label, "exit": code, "record": record})
    return {"command": "sweep", "points": len(records), "records": records}, ok


COMMANDS = {
    "dunkl": cmd_dunkl,
    "singular": cmd_singular,
    "quotient": cmd_quotient,
    "radical": cmd_radical,
    "hilbert": cmd_hilbert,
    "character": cmd_character,
    "gorenstein": cmd_gorenstein,
    "locus": cmd_locus,
    "support": cmd_support,
    "rank1": cmd_rank1,
    "sweep": cmd_sweep,
    "euler-check": cmd_euler,
}


# ---------------------------------------------------------------------------
# parser and output


def _common(p):
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.add_argument("--cutoff", type=int, default=None,
                   help="top degree (default n*r+2 when finite is expected, else $CHEREDNIK_CUTOFF or 20)")
    p.add_argument("--seed", type=int, default=0)


def _group_args(p, need_r=False):
    p.add_argument("--group", required=True, help='"S(n)", "Z(l)" or "G(l,1,n)"')
    p.add_argument("--k", default=None, help="exact rational, e.g. 2/3")
    p.add_argument("--c", nargs="+", default=None, help="c_1 .. c_{l-1}; e for a primitive root")
    p.add_argument("--r", type=int, default=None, required=need_r, help="degree of the singular vectors")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cherednik", description="Exact computations with rational Cherednik algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dunkl", help="apply a Dunkl operator")
    _group_args(p)
    p.add_argument("--poly", required=True)
    p.add_argument("--direction", default="1", help="basis index (1-based) or comma-separated vector")
    _common(p)

    p = sub.add_parser("singular", help="closed-form or computed singular vectors")
    fam = p.add_subparsers(dest="family", required=True)
    q = fam.add_parser("typeA")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--r", type=int, required=True)
    _common(q)
    q = fam.add_parser("wreath")
    q.add_argument("--l", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--k", default=None)
    q.add_argument("--c", nargs="+", default=None)
    _common(q)
    q = fam.add_parser("solve")
    _group_args(q)
    q.add_argument("--degree", type=int, required=True)
    _common(q)

    for name, helptext in [("quotient", "quotient by the closed-form singular vectors"),
                           ("euler-check", "Euler character identity per conjugacy class")]:
        p = sub.add_parser(name, help=helptext)
        _group_args(p, need_r=True)
        _common(p)

    p = sub.add_parser("radical", help="Gram radical and L_c")
    _group_args(p)
    _common(p)

    for name in ("hilbert", "character", "gorenstein"):
        p = sub.add_parser(name, help=f"{name} of a quotient (with --r) or of L_c (without)")
        _group_args(p)
        _common(p)

    p = sub.add_parser("locus", help="Sigma_r membership or the E_r residual")
    p.add_argument("which", choices=["sigma", "er"])
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", default=None)
    p.add_argument("--c", nargs="+", default=None)
    _common(p)

    p = sub.add_parser("support", help="support of V_k for S_n")
    p.add_argument("mode", choices=["check", "sample"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--point", default=None, help="comma-separated coordinates")
    p.add_argument("--samples", type=int, default=100)
    _common(p)

    p = sub.add_parser("rank1", help="rank-one multiplicities and characters")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--c", nargs="+", default=None)
    p.add_argument("--no-check", action="store_true", help="skip the brute-force cross-check")
    _common(p)

    p = sub.add_parser("sweep", help="run a command over a parameter grid")
    p.add_argument("--grid", action="append", default=[], help="name=v1,v2,... (repeatable)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--rank1-points", type=int, default=0, help="sample this many resonant rank-one points")
    p.add_argument("--l", type=int, default=3)
    p.add_argument("template", nargs=argparse.REMAINDER, help="-- command args ...")
    _common(p)
    return parser


def _flatten(record: dict) -> list[tuple[str, str]]:
    out = []
    for key in sorted(record):
        if key == "table":
            continue
        val = record[key]
        out.append((key, val if isinstance(val, str) else json.dumps(val, sort_keys=True)))
    return out


def render(record: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record, indent=2, sort_keys=True)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        table = record.get("table")
        if table:
            w.writerow(table["header"])
            w.writerows(table["rows"])
        else:
            w.writerow(["key", "value"])
            w.writerows(_flatten(record))
        return buf.getvalue().rstrip("\n")
    return "\n".join(f"{k}: {v}" for k, v in _flatten(record))


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        record, ok = COMMANDS[args.command](args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except IntegrityError as e:
        print(f"integrity error: {e}", file=sys.stderr)
        return EXIT_INTEGRITY
    except (DomainError, UnsupportedError, ValueError, ZeroDivisionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    print(render(record, args.format))
    return EXIT_OK if ok else EXIT_INTEGRITY


if __name__ == "__main__":
    sys.exit(main())
