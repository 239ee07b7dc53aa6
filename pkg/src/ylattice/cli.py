"""Command-line front end: every computation and identity check, one binary.

Exit codes: 0 success, 1 a verification found a counterexample, 2 bad
arguments (unparseable partitions, containment violations, bad ranges).
All output is deterministic; big numbers are always rendered as decimal
strings, never floats.
"""

import argparse
import csv
import io
import json
import sys

from . import counts, partitions, rankpoly, series
from .partitions import Partition


class UsageError(Exception):
    pass


def _parse_partition(text, name):
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad {name} partition {text!r}: {exc}")


def _emit_poly(poly, fmt, out):
    if fmt == "json":
        print(json.dumps(poly.to_json()), file=out)
    elif fmt == "csv":
        w = csv.writer(out)
        w.writerow(["degree", "coefficient"])
        for d, c in enumerate(poly.coeffs):
            w.writerow([d, str(c)])
    else:
        print(str(poly), file=out)


def _emit_rows(header, rows, fmt, out):
    if fmt == "json":
        # big integers always travel as decimal strings
        payload = [
            {
                h: str(v) if isinstance(v, int) and not isinstance(v, bool) else v
                for h, v in zip(header, row)
            }
            for row in rows
        ]
        print(json.dumps(payload), file=out)
    elif fmt == "csv":
        w = csv.writer(out)
        w.writerow(header)
        w.writerows(rows)
    else:
        widths = [
            max(len(str(h)), *(len(str(row[i])) for row in rows)) if rows else len(str(h))
            for i, h in enumerate(header)
        ]
        print("  ".join(str(h).ljust(w) for h, w in zip(header, widths)), file=out)
        for row in rows:
            print("  ".join(str(v).ljust(w) for v, w in zip(row, widths)), file=out)


def cmd_rankpoly(args, out):
    lam = _parse_partition(args.lam, "--lambda")
    mu = _parse_partition(args.mu, "--mu") if args.mu is not None else Partition()
    if not partitions.contains(mu, lam):
        raise UsageError(f"--mu {mu} is not contained in --lambda {lam}")
    _emit_poly(rankpoly.rank_gen_poly(mu, lam), args.format, out)
    return 0


def cmd_count(args, out):
    lam = _parse_partition(args.lam, "--lambda")
    value = rankpoly.interval_count(lam)
    if args.format == "json":
        print(json.dumps(str(value)), file=out)
    elif args.format == "csv":
        _emit_rows(["lambda", "count"], [[str(lam), value]], "csv", out)
    else:
        print(value, file=out)
    return 0


def cmd_gaussian(args, out):
    if args.n < 0 or args.k < 0:
        raise UsageError("--n and --k must be nonnegative")
    _emit_poly(rankpoly.gaussian_poly(args.n, args.k), args.format, out)
    return 0


def cmd_poincare(args, out):
    lam = _parse_partition(args.lam, "--lambda")
    _emit_poly(rankpoly.poincare_poly(lam), args.format, out)
    return 0


def cmd_series(args, out):
    if args.k < 0 or args.trunc < args.k:
        raise UsageError("need k >= 0 and --trunc >= k")
    if args.method == "recursive":
        s = series.qk_recursive(args.k, args.trunc)
    else:
        s = series.qk_direct(args.k, args.trunc)
    if args.y0:
        s = s.constant_part()
    if args.format == "json":
        print(json.dumps(s.to_json()), file=out)
    else:
        rows = [
            [" ".join(map(str, exps)), str(coeff)]
            for exps, coeff in s.sorted_terms()
        ]
        _emit_rows(["exponents", "coeff"], rows, args.format, out)
    return 0


def cmd_gk(args, out):
    if args.max_k < 1:
        raise UsageError("--max-k must be at least 1")
    rows = []
    for k in range(1, args.max_k + 1):
        g = counts.g_k(k)
        rows.append([k, counts.fraction_str(g), counts.fraction_decimal(g)])
    _emit_rows(["k", "gk", "gk_decimal"], rows, args.format, out)
    return 0


def cmd_bkm(args, out):
    if args.k < 0 or args.m < 0:
        raise UsageError("--k and --m must be nonnegative")
    rec = counts.b_recursive(args.k, args.m)
    direct = counts.b_direct(args.k, args.m)
    rows = [[args.k, args.m, counts.fraction_str(rec), counts.fraction_str(direct),
             rec == direct]]
    _emit_rows(["k", "m", "recursive", "direct", "equal"], rows, args.format, out)
    return 0


def cmd_asymptotics(args, out):
    if args.k < 1 or args.n_start < args.k or args.n_end < args.n_start or args.step < 1:
        raise UsageError("need k >= 1, n-start >= k, n-end >= n-start, step >= 1")
    n_values = range(args.n_start, args.n_end + 1, args.step)
    table = counts.convergence_table(args.k, n_values)
    if args.format == "csv":
        rows = [
            [row["n"], row["c"], row["C"], row["A"].numerator,
             row["A"].denominator, counts.fraction_decimal(row["ratio"])]
            for row in table
        ]
        _emit_rows(["n", "c", "C", "A_num", "A_den", "ratio_decimal"], rows, "csv", out)
    else:
        rows = [
            [row["n"], row["c"], row["C"], row["A"].numerator,
             row["A"].denominator, counts.fraction_str(row["ratio"]),
             counts.fraction_decimal(row["ratio"])]
            for row in table
        ]
        _emit_rows(
            ["n", "c", "C", "A_num", "A_den", "ratio", "ratio_decimal"],
            rows, args.format, out,
        )
    return 0


def _verify_gaussian(args):
    for n in range(args.max_n + 1):
        for k in range(args.max_k + 1):
            grid = rankpoly.rank_gen_poly((), (n,) * k)
            gauss = rankpoly.gaussian_poly(n, k)
            if grid != gauss:
                return False, f"rectangle {n}^{k}: {grid} != {gauss}"
            if not gauss.is_palindromic():
                return False, f"gaussian({n},{k}) not palindromic: {gauss}"
    return True, f"rectangles up to {args.max_n}x{args.max_k}: chain split equals product formula, all palindromic"


def _verify_recursion(args):
    k, trunc = args.k, args.trunc
    if k < 1 or trunc < k:
        raise UsageError("need --k >= 1 and --trunc >= k")
    direct = series.qk_direct(k, trunc)
    rec = series.qk_recursive(k, trunc)
    if rec != direct:
        return False, f"k={k} N={trunc}: recursive series differs from enumeration"
    lhs = direct - direct.shift(series.prefix_monomial(k, k))
    rhs = series.qk_recursion_rhs(k, trunc)
    if lhs != rhs:
        return False, f"k={k} N={trunc}: multiplied form mismatch"
    return True, f"k={k} N={trunc}: recursion matches enumeration ({len(direct.terms)} terms), multiplied form holds"


def _verify_xm(args):
    report = series.verify_xm_recursion(args.k, args.m, args.trunc)
    if not report["ok"]:
        n = report["first_mismatch"]
        return False, (
            f"k={args.k} m={args.m}: coefficient of x^{n} differs "
            f"({report['lhs'][n]} vs {report['rhs'][n]})"
        )
    return True, f"k={args.k} m={args.m}: collapse recursion holds to order {args.trunc}"


def _verify_denominator(args):
    report = series.dk_product_check(args.k, args.trunc)
    if args.k in series.CLOSED_FORM_NUMERATORS:
        expected = series.MultiSeries(
            args.k, args.trunc, series.CLOSED_FORM_NUMERATORS[args.k]
        )
        if report["product"] != expected:
            return False, f"k={args.k}: product differs from the closed-form numerator"
    if not report["stabilized"]:
        return False, (
            f"k={args.k} N={args.trunc}: no zero tail observed "
            f"(max degree {report['max_degree']}); raise --trunc"
        )
    return True, (
        f"k={args.k} N={args.trunc}: product is polynomial up to degree "
        f"{report['max_degree']}, tail vanishes"
    )


def _verify_decomposition(args):
    from .partitions import (
        catalan,
        decompose_staircase_interval,
        enumerate_interval,
        enumerate_staircase_interval,
        staircase_concat,
        staircase_rectangle,
    )

    for k in range(1, args.max_k + 1):
        for m in range(args.max_m + 1):
            whole = enumerate_staircase_interval(k, m)
            if len(whole) != catalan(k):
                return False, f"|interval({k},{m})| = {len(whole)} != catalan({k})"
            seen = []
            for block in decompose_staircase_interval(k, m):
                seen.extend(block.enumerate())
            if sorted(seen) != sorted(whole):
                return False, f"blocks of ({k},{m}) do not partition the interval"
            for r in range(1, k + 1):
                block = enumerate_interval(*partitions.staircase_block_bounds(k, m, r))
                images = [
                    staircase_concat(k, m, r, lam, lam2)
                    for lam in enumerate_staircase_interval(k - r, r + m)
                    for lam2 in enumerate_staircase_interval(r - 1, m)
                ]
                if sorted(images) != sorted(block) or len(set(images)) != len(images):
                    return False, f"concatenation is not a bijection at k={k} m={m} r={r}"
    return True, (
        f"k <= {args.max_k}, m <= {args.max_m}: Catalan cardinality, disjoint blocks, "
        "concatenation bijection all hold"
    )


def _verify_bkm(args):
    for k in range(args.max_sum + 1):
        for m in range(args.max_sum - k + 1):
            rec = counts.b_recursive(k, m)
            direct = counts.b_direct(k, m)
            if rec != direct:
                return False, f"b({k},{m}): recursion {rec} != interval sum {direct}"
    return True, f"k+m <= {args.max_sum}: recursion equals interval sum everywhere"


def _verify_lemmas(args):
    from .partitions import enumerate_interval

    max_rank = args.max_rank
    for n in range(max_rank + 1):
        for k in range(n + 1):
            for lam in partitions.enumerate_partitions(k, n):
                base = rankpoly.rank_gen_poly((), lam)
                brute = sum(
                    (rankpoly.YPoly.monomial(sum(nu)) for nu in enumerate_interval((), lam)),
                    rankpoly.YPoly(),
                )
                if base != brute:
                    return False, f"rank poly of {lam} differs from enumeration"
                if base != sum(rankpoly.filled_prefix_expansion(lam), rankpoly.YPoly()):
                    return False, f"filled-prefix expansion fails at {lam}"
                if not _check_split_identities(lam):
                    return False, f"split identities fail inside [0, {lam}]"
    return True, f"all intervals below rank {max_rank}: polynomials match enumeration, splits are consistent"


def _check_split_identities(lam):
    from .partitions import enumerate_interval

    k = len(lam)
    for mu in enumerate_interval((), lam):
        poly = rankpoly.rank_gen_poly(mu, lam)
        for r in range(1, k + 1):
            nxt = lam[r] if r < k else 0
            if lam[r - 1] > nxt and mu.part(r) < lam[r - 1]:
                left, right = partitions.interval_split_top(mu, lam, r)
                if poly != rankpoly.rank_gen_poly(left.mu, left.lam) + rankpoly.rank_gen_poly(right.mu, right.lam):
                    return False
        for r in range(1, k):
            if mu.part(r) == lam[r - 1]:
                if poly != rankpoly.rank_gen_poly(mu[:r], lam[:r]) * rankpoly.rank_gen_poly(mu[r:], lam[r:]):
                    return False
    return True


_VERIFY_TARGETS = {
    "gaussian": _verify_gaussian,
    "recursion": _verify_recursion,
    "xm": _verify_xm,
    "denominator": _verify_denominator,
    "decomposition": _verify_decomposition,
    "bkm": _verify_bkm,
    "lemmas": _verify_lemmas,
}


def cmd_verify(args, out):
    ok, message = _VERIFY_TARGETS[args.target](args)
    print(f"{args.target}: {'OK' if ok else 'FAIL'} - {message}", file=out)
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ylattice",
        description="Exact interval counts, rank generating polynomials and "
        "growth constants for Young's lattice.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=["text", "json", "csv"], default="text")

    p = sub.add_parser("rankpoly", help="rank generating polynomial of [mu, lambda]")
    p.add_argument("--lambda", dest="lam", required=True, metavar="PARTS")
    p.add_argument("--mu", default=None, metavar="PARTS")
    add_format(p)
    p.set_defaults(func=cmd_rankpoly)

    p = sub.add_parser("count", help="number of partitions contained in lambda")
    p.add_argument("--lambda", dest="lam", required=True, metavar="PARTS")
    add_format(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("gaussian", help="y-binomial coefficient of n+k over k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_gaussian)

    p = sub.add_parser("poincare", help="rank polynomial with exponents doubled")
    p.add_argument("--lambda", dest="lam", required=True, metavar="PARTS")
    add_format(p)
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("series", help="truncated generating series for length k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trunc", type=int, default=8)
    p.add_argument("--method", choices=["direct", "recursive"], default="direct")
    p.add_argument("--y0", action="store_true", help="keep only the y-constant part")
    add_format(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("gk", help="table of first-order growth constants")
    p.add_argument("--max-k", type=int, default=7)
    add_format(p)
    p.set_defaults(func=cmd_gk)

    p = sub.add_parser("bkm", help="singular coefficient, recursion vs interval sum")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_bkm)

    p = sub.add_parser("asymptotics", help="convergence table for the average interval size")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-start", type=int, required=True)
    p.add_argument("--n-end", type=int, required=True)
    p.add_argument("--step", type=int, default=1)
    add_format(p)
    p.set_defaults(func=cmd_asymptotics)

    p = sub.add_parser("verify", help="machine-check an identity family")
    p.add_argument("target", choices=sorted(_VERIFY_TARGETS))
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--trunc", type=int, default=8)
    p.add_argument("--max-k", type=int, default=5)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--max-m", type=int, default=2)
    p.add_argument("--max-sum", type=int, default=8)
    p.add_argument("--max-rank", type=int, default=8)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, IndexError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
