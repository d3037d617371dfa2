"""Command-line interface: ``hybridmul <command> [options]``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from fractions import Fraction

from . import addchain, bench, costmodel, selftest
from .field import FieldCtx, OpCount, max_ntt_depth, two_adic_valuation
from .hybrid import STRATEGIES, HybridParams, resolve
from .poly import Poly, decode, negacyclic_schoolbook, poly_to_dict


class CliError(Exception):
    pass


def _fraction(text: str) -> Fraction:
    try:
        return costmodel.as_weight(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a nonnegative rational: {text!r} ({exc})")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(args, obj, text: str | None = None) -> None:
    if args.json or text is None:
        print(json.dumps(obj, indent=2, default=str))
    else:
        print(text)


def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise CliError("missing required option(s): " + ", ".join("--" + m.replace("_", "-") for m in missing))


# -- commands ---------------------------------------------------------------------------


def cmd_params(args) -> int:
    _require(args, "q", "n")
    ctx = FieldCtx(args.q)
    v2 = two_adic_valuation(ctx.q - 1)
    lmax = max_ntt_depth(ctx, args.n)
    d = args.n >> lmax
    L_opt, cost = costmodel.optimal_L(d, args.w)
    rep = {
        "q": ctx.q, "n": args.n, "v2(q-1)": v2, "ell_max": lmax, "full_ntt": lmax == args.n.bit_length() - 1,
        "d": d, "w": str(args.w), "L_opt": L_opt, "L_max": costmodel.pure_toom_depth(d),
        "total_cost": costmodel.fmt1(costmodel.total_cost(args.n, lmax, L_opt, args.w)),
    }
    text = "\n".join(f"{k:>10}: {v}" for k, v in rep.items())
    _emit(args, rep, text)
    return 0


def _load_poly(path: str) -> Poly:
    with open(path, encoding="utf-8") as fh:
        return decode(fh.read())


def cmd_mul(args) -> int:
    if args.random:
        _require(args, "q", "n")
        ctx = FieldCtx(args.q)
        rng = random.Random(args.seed)
        f = Poly(ctx, tuple(rng.randrange(ctx.q) for _ in range(args.n)))
        g = Poly(ctx, tuple(rng.randrange(ctx.q) for _ in range(args.n)))
    else:
        if not (args.f and args.g):
            raise CliError("give two polynomial files (-f/-g) or --random")
        f, g = _load_poly(args.f), _load_poly(args.g)
        if f.q != g.q or len(f) != len(g):
            raise CliError(f"operands disagree: q={f.q}/{g.q}, n={len(f)}/{len(g)}")
        if args.q is not None and args.q != f.q:
            raise CliError(f"--q {args.q} does not match the files (q={f.q})")
    n = len(f)
    L = args.L if args.L is not None else None
    params = HybridParams.for_strategy(args.strategy, n, args.ell, L) if args.strategy != "auto" else HybridParams(n, auto=True)
    pipe = resolve(params, f.ctx, args.w)
    counter = OpCount() if args.counts else None
    h = pipe.multiply(f, g, counter=counter, parallel=args.parallel)
    result = {"pipeline": pipe.describe(), "product": poly_to_dict(h)}
    status = 0
    if args.check:
        ok = h == negacyclic_schoolbook(f, g)
        result["check"] = "pass" if ok else "FAIL"
        status = 0 if ok else 1
    if counter is not None:
        result["counts"] = counter.as_dict()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(poly_to_dict(h), fh)
            fh.write("\n")
    if args.json:
        _emit(args, result)
    else:
        if not args.out:
            print(json.dumps(poly_to_dict(h), separators=(",", ":")))
        desc = pipe.describe()
        print(f"# pipeline: ell={desc['ell']} d={desc['d']} inner={desc['inner']} L={desc['L']}", file=sys.stderr)
        if args.check:
            print(f"# check: {result['check']}", file=sys.stderr)
        if counter is not None:
            print(f"# counts: adds={counter.adds} muls={counter.muls}", file=sys.stderr)
    return status


def cmd_cost_table(args) -> int:
    if args.ns:
        ns = args.ns
    elif args.n:
        ns = [args.n]
    else:
        ns = (256, 512, 1024)
    rows = costmodel.reproduce_table1(args.w, ns)
    if args.json:
        out = [{**r.formatted(), "exact": {"karatsuba": str(r.karatsuba), "toom4": str(r.toom4), "hybrid": str(r.hybrid)},
                "L_max": r.L_max} for r in rows]
        print(json.dumps(out, indent=2))
    else:
        buf = io.StringIO()
        wr = csv.DictWriter(buf, fieldnames=["n", "ell", "d", "karatsuba", "toom4", "hybrid", "L_opt"], lineterminator="\n")
        wr.writeheader()
        for r in rows:
            wr.writerow(r.formatted())
        sys.stdout.write(buf.getvalue())
    if args.diff_paper:
        problems = costmodel.diff_reference(rows)
        for p in problems:
            print(f"MISMATCH {p}", file=sys.stderr)
        compared = sum(1 for r in rows if r.n in costmodel.REFERENCE_TABLE)
        print(f"# reference diff: {compared} rows compared, {len(problems)} mismatches", file=sys.stderr)
        return 1 if problems else 0
    return 0


def cmd_optimize(args) -> int:
    if args.d is None:
        _require(args, "n")
        ell = args.ell or 0
        d = args.n >> ell
    else:
        d = args.d
    rows = []
    for L in range(costmodel.pure_toom_depth(d) + 1):
        t_m, t_a = costmodel.hybrid_model_counts(d, L)
        row = {"L": L, "T_M": str(t_m), "T_A": str(t_a), "C_w": costmodel.fmt1(t_m + args.w * t_a)}
        if args.d is None:
            row["total"] = costmodel.fmt1(costmodel.total_cost(args.n, ell, L, args.w))
        rows.append(row)
    L_opt, cost = costmodel.optimal_L(d, args.w)
    rep = {"d": d, "w": str(args.w), "L_opt": L_opt, "C_w(L_opt)": costmodel.fmt1(cost), "candidates": rows}
    lines = [f"d={d} w={args.w}"] + [
        f"  L={r['L']}: T_M={r['T_M']} T_A={r['T_A']} C_w={r['C_w']}" + (f" total={r['total']}" if "total" in r else "")
        for r in rows
    ] + [f"L_opt={L_opt}"]
    _emit(args, rep, "\n".join(lines))
    return 0


def cmd_bench(args) -> int:
    _require(args, "q", "n")
    records = bench.run_bench(args.n, args.q, args.strategies, args.trials, args.seed, args.w, args.ell)
    if args.json:
        print(json.dumps([r.as_dict() for r in records], indent=2))
    else:
        print(f"n={args.n} q={args.q} ell={records[0].ell} trials={args.trials}")
        for r in records:
            print(f"  {r.strategy:<10} L={r.L}  median {r.median_ms:9.3f} ms")
    if args.assert_ordering:
        problems = bench.check_ordering(records)
        for p in problems:
            print(f"ORDERING {p}", file=sys.stderr)
        return 1 if problems else 0
    return 0


def cmd_chains(args) -> int:
    if args.action == "verify":
        rows = addchain.verify_chains(args.budget)
        total = sum(r["length"] for r in rows)
        ok = all(r["pass"] for r in rows) and total == 58
        if args.json:
            print(json.dumps({"chains": rows, "total": total, "pass": ok}, indent=2))
        else:
            for r in rows:
                print(f"{'PASS' if r['pass'] else 'FAIL'} {r['name']:<7} length {r['length']:>2}  {r['optimality']}")
            print(f"total {total}")
        return 0 if ok else 1
    if not args.targets:
        raise CliError("chains search needs --targets")
    res = addchain.search_optimal(args.targets, args.max_len, args.budget)
    rep = {"targets": sorted(set(args.targets)), "status": res.status,
           "chain": list(res.chain.elements) if res.chain else None,
           "length": res.chain.length if res.chain else None,
           "proven_lower_bound": res.proven_lower_bound, "nodes": res.nodes, "seconds": round(res.seconds, 3)}
    if res.status == "found":
        text = f"length {res.chain.length}: " + ", ".join(map(str, res.chain.elements))
    elif res.status == "none":
        text = f"no chain of length <= {args.max_len}"
    else:
        text = f"budget exhausted: no chain shorter than {res.proven_lower_bound}"
    _emit(args, rep, text)
    return {"found": 0, "none": 1, "exhausted": 3}[res.status]


def cmd_selftest(args) -> int:
    results = selftest.run_all(quick=args.quick, chain_budget=args.budget)
    ok = all(r.ok for r in results)
    if args.json:
        out = {"pass": ok, "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results]}
        if args.counts:
            out["counts"] = selftest.count_report()
        print(json.dumps(out, indent=2, default=str))
    else:
        for r in results:
            print(f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.detail}")
        if args.counts:
            for row in selftest.count_report():
                print(json.dumps(row))
    return 0 if ok else 1


# -- parser -----------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, help="prime modulus")
    common.add_argument("--n", type=int, help="ring size (power of two)")
    common.add_argument("--ell", type=int, help="NTT depth (default: largest admissible)")
    common.add_argument("--L", type=int, help="Toom-4 recursion depth")
    common.add_argument("--w", type=_fraction, default=costmodel.DEFAULT_W, help="cost of one addition relative to one multiplication (default 0.2)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(prog="hybridmul", description="Incomplete NTT with Toom-4/Karatsuba multiplication over F_q[x]/(x^n+1).")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("params", parents=[common], help="admissible NTT depth and optimal Toom depth for (q, n)")
    s.set_defaults(func=cmd_params)

    s = sub.add_parser("mul", parents=[common], help="multiply two polynomials")
    s.add_argument("-f", help="first operand (JSON polynomial file)")
    s.add_argument("-g", help="second operand (JSON polynomial file)")
    s.add_argument("--random", action="store_true", help="use seeded random operands of size --n over --q")
    s.add_argument("--strategy", choices=STRATEGIES + ("auto",), default="hybrid")
    s.add_argument("--out", help="write the product here instead of stdout")
    s.add_argument("--check", action="store_true", help="compare against the schoolbook oracle")
    s.add_argument("--counts", action="store_true", help="report field operation counts")
    s.add_argument("--parallel", action="store_true", help="multiply CRT components in parallel")
    s.set_defaults(func=cmd_mul)

    s = sub.add_parser("cost-table", parents=[common], help="weighted cost table for Karatsuba / pure Toom-4 / hybrid")
    s.add_argument("--ns", type=_int_list, help="comma-separated ring sizes (default 256,512,1024)")
    s.add_argument("--diff-paper", action="store_true", help="compare with the reference rows; exit 1 on mismatch")
    s.set_defaults(func=cmd_cost_table)

    s = sub.add_parser("optimize", parents=[common], help="cost of every Toom depth for one subproblem size")
    s.add_argument("--d", type=int, help="subproblem size (default n / 2^ell)")
    s.set_defaults(func=cmd_optimize)

    s = sub.add_parser("bench", parents=[common], help="median timings at ell = ell_max")
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--strategies", type=lambda t: [x for x in t.split(",") if x], default=list(bench.BENCH_STRATEGIES))
    s.add_argument("--assert-ordering", action="store_true")
    s.set_defaults(func=cmd_bench)

    s = sub.add_parser("chains", parents=[common], help="verify or search addition chains")
    s.add_argument("action", choices=("verify", "search"))
    s.add_argument("--targets", type=_int_list)
    s.add_argument("--max-len", type=int, default=20)
    s.add_argument("--budget", type=float, default=60.0, help="search time budget in seconds")
    s.set_defaults(func=cmd_chains)

    s = sub.add_parser("selftest", parents=[common], help="run the built-in consistency checks")
    s.add_argument("--counts", action="store_true", help="also print operation counts per strategy and size")
    s.add_argument("--quick", action="store_true", help="smaller grids, skip the long chain search")
    s.add_argument("--budget", type=float, default=60.0)
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
