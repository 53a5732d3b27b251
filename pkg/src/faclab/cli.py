"""Command-line front end.

Subcommands cover the factorial functional (eval-l, membership), inversion
(inverse), the conjecture scans with JSONL persistence and resume
(rigidity-scan, rpc-scan, bridge-probe), the exact identity suites (verify)
and ansatz recurrence discovery (recurrence).

Exit codes: 0 success / no findings, 1 findings or failed checks,
2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import itertools
import multiprocessing
import os
import random
import sys
from fractions import Fraction

from . import bridge, expr, factorial_map, inversion, records, two_monomials
from .algebra import GaussianRational, factorial

USAGE_ERROR = 2
FINDINGS = 1
OK = 0


def _threads(args) -> int:
    if getattr(args, "threads", None):
        return max(1, args.threads)
    env = os.environ.get("FACLAB_THREADS", "")
    if env.isdigit() and int(env) > 0:
        return int(env)
    return 1


def _parallel_map(fn, items, threads):
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with multiprocessing.Pool(min(threads, len(items))) as pool:
        return pool.map(fn, items)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _natural(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _exponent_vector(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected two comma-separated naturals")
    try:
        vec = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    if any(v < 0 for v in vec):
        raise argparse.ArgumentTypeError("entries must be >= 0")
    return vec


def cmd_eval_l(args) -> int:
    poly = expr.parse_poly(args.poly)
    if args.k < 1:
        print("eval-l: --k must be >= 1", file=sys.stderr)
        return USAGE_ERROR
    print(factorial_map.factorial_value_power(poly, args.k))
    return OK


def _print_verdict(n: int, verdict) -> None:
    start, length = verdict.window
    for k, value in zip(range(start, start + length), verdict.values):
        print(f"L(f^{k}) = {value}")
    if verdict.member:
        witness = (
            f"witness k = {verdict.witness_k}"
            if verdict.witness_k is not None
            else "zero polynomial"
        )
        print(f"n = {n}: member ({witness})")
    else:
        print(f"n = {n}: NOT a member (all {length} window values vanish)")


def _membership_record(poly_text: str, n: int, verdict) -> records.ScanRecord:
    return records.ScanRecord(
        kind="membership",
        params={"poly": poly_text, "n": n},
        result={
            "member": verdict.member,
            "witness_k": verdict.witness_k,
            "window": list(verdict.window),
            "values": [str(v) for v in verdict.values],
        },
    )


def cmd_membership(args) -> int:
    poly = expr.parse_poly(args.poly)
    canonical = expr.format_poly(poly)
    print(f"f = {canonical}   (N(f) = {poly.term_count})")
    if args.n_max is not None:
        verdicts = factorial_map.strong_scan(poly, args.n_max)
        pairs = list(zip(range(1, args.n_max + 1), verdicts))
    else:
        if args.n is None:
            print("membership: provide --n or --n-max", file=sys.stderr)
            return USAGE_ERROR
        pairs = [(args.n, factorial_map.window_membership(poly, args.n))]
    for n, verdict in pairs:
        _print_verdict(n, verdict)
    if args.out:
        skip = records.existing_keys(args.out)
        fresh = [
            record
            for n, verdict in pairs
            if (record := _membership_record(canonical, n, verdict)).key not in skip
        ]
        records.append_records(args.out, fresh)
        print(f"recorded {len(fresh)} new of {len(pairs)} results to {args.out}")
    non_members = [n for n, verdict in pairs if not verdict.member]
    if non_members:
        print(f"NON-MEMBER windows at n = {non_members} (counterexample candidate!)")
        return FINDINGS
    return OK


def cmd_inverse(args) -> int:
    sources = [s for s in (args.alpha, args.mu, args.poly) if s is not None]
    if len(sources) != 1:
        print("inverse: provide exactly one of --alpha, --mu, --poly", file=sys.stderr)
        return USAGE_ERROR
    order = args.order
    needed = order + 1
    alpha = mu = None
    if args.alpha is not None:
        alpha = expr.parse_scalar_list(args.alpha)
        series = inversion.UniSeries.from_additive(alpha, needed)
    elif args.mu is not None:
        mu = expr.parse_scalar_list(args.mu)
        series = inversion.UniSeries.from_multiplicative(mu, needed)
    else:
        poly = expr.parse_poly(args.poly)
        if poly.num_vars != 1:
            print("inverse: --poly must be univariate (X1)", file=sys.stderr)
            return USAGE_ERROR
        coeffs = [poly.coefficient((k,)) for k in range(poly.total_degree() + 1)]
        series = inversion.UniSeries(coeffs or [0]).pad(needed)
    if not series.is_normalized:
        print("inverse: series must satisfy a(X) = X mod X^2", file=sys.stderr)
        return USAGE_ERROR

    available = {"direct", "lagrange"}
    if alpha is not None:
        available.add("aif")
    if mu is not None:
        available.add("mif")
    if args.mode not in available:
        print(
            f"inverse: mode {args.mode!r} needs "
            + ("--mu" if args.mode == "mif" else "--alpha"),
            file=sys.stderr,
        )
        return USAGE_ERROR

    def compute(mode: str) -> list[GaussianRational]:
        if mode == "direct":
            inv = inversion.series_inverse(series, needed)
            return [(n + 1) * inv.coefficient(n + 1) for n in range(1, order + 1)]
        if mode == "lagrange":
            return [inversion.lagrange_u(series, n) for n in range(1, order + 1)]
        if mode == "aif":
            return [inversion.aif_u(alpha, n) for n in range(1, order + 1)]
        return [inversion.mif_u(mu, n) for n in range(1, order + 1)]

    u = compute(args.mode)
    for n, value in enumerate(u, start=1):
        print(f"u_{n} = {value}")
    inverse_coeffs = ["1"] + [str(value / (n + 2)) for n, value in enumerate(u[:-1])]
    print("inverse series coefficients (X^1..X^%d): %s" % (order, ", ".join(inverse_coeffs)))
    if args.check:
        for mode in sorted(available - {args.mode}):
            other = compute(mode)
            if other != u:
                print(f"cross-check FAILED: {args.mode} vs {mode}", file=sys.stderr)
                return FINDINGS
        print(f"cross-check: modes {sorted(available)} agree")
    return OK


def _rigidity_worker(task):
    alpha, m, n_max = task
    u, windows = inversion.rigidity_point(alpha, m, n_max)
    return alpha, u, windows


def cmd_rigidity_scan(args) -> int:
    if args.m > 3:
        print("rigidity-scan: --m is capped at 3 (desk scale)", file=sys.stderr)
        return USAGE_ERROR
    grid = expr.parse_grid(args.grid)
    points = [
        alpha
        for alpha in itertools.product(grid, repeat=args.m)
        if any(alpha)
    ]
    skip = records.existing_keys(args.out) if args.out else set()

    def params_for(alpha):
        return {
            "m": args.m,
            "alpha": [str(a) for a in alpha],
            "n_max": args.n_max,
        }

    todo = [
        alpha
        for alpha in points
        if records.record_key("rigidity", params_for(alpha)) not in skip
    ]
    results = _parallel_map(
        _rigidity_worker, [(alpha, args.m, args.n_max) for alpha in todo], _threads(args)
    )
    findings = []
    fresh = []
    for alpha, u, windows in results:
        findings.extend((alpha, n) for n in windows)
        fresh.append(
            records.ScanRecord(
                kind="rigidity",
                params=params_for(alpha),
                result={"u": [str(v) for v in u], "zero_windows": windows},
            )
        )
    if args.out:
        records.append_records(args.out, fresh)
    skipped = len(points) - len(todo)
    print(
        f"rigidity scan m={args.m}: {len(points)} grid points"
        + (f" ({skipped} already recorded)" if skipped else "")
        + f", {len(findings)} zero-window findings"
    )
    for alpha, n in findings:
        print(f"FINDING: alpha = ({', '.join(map(str, alpha))}), window start n = {n}")
    return FINDINGS if findings else OK


def _rpc_worker(task):
    (a, b), n_max = task
    pair = two_monomials.ExponentPair(a, b)
    degrees, findings = two_monomials.pair_gcd_profile(pair, n_max)
    return pair, degrees, findings


def cmd_rpc_scan(args) -> int:
    pairs = two_monomials.canonical_pairs(args.max_exp)
    skip = records.existing_keys(args.out) if args.out else set()

    def params_for(pair):
        return {"a": list(pair.a), "b": list(pair.b), "n_max": args.n_max}

    todo = [
        pair
        for pair in pairs
        if records.record_key("rpc", params_for(pair)) not in skip
    ]
    results = _parallel_map(
        _rpc_worker, [((pair.a, pair.b), args.n_max) for pair in todo], _threads(args)
    )
    findings = []
    fresh = []
    max_degree = 0
    for pair, degrees, pair_findings in results:
        findings.extend(pair_findings)
        max_degree = max(max_degree, max(degrees))
        fresh.append(
            records.ScanRecord(
                kind="rpc",
                params=params_for(pair),
                result={
                    "gcd_degrees": degrees,
                    "findings": [
                        {"n": f.n, "gcd": [str(c) for c in f.gcd.coeffs]}
                        for f in pair_findings
                    ],
                },
            )
        )
    if args.out:
        records.append_records(args.out, fresh)
    skipped = len(pairs) - len(todo)
    print(
        f"rpc scan max_exp={args.max_exp}, n=0..{args.n_max}: {len(pairs)} pairs"
        + (f" ({skipped} already recorded)" if skipped else "")
        + f", max gcd degree {max_degree if todo else 'n/a'}, {len(findings)} findings"
    )
    for f in findings:
        print(f"FINDING: a={f.pair.a} b={f.pair.b} n={f.n} gcd={f.gcd}")
    return FINDINGS if findings else OK


def cmd_bridge_probe(args) -> int:
    grid = expr.parse_grid(args.grid)
    report = bridge.probe_bridge_windows(args.m, grid, args.n)
    print(
        f"bridge probe m={args.m}, n={args.n}: {report.points_scanned} points, "
        f"{len(report.violations)} violations"
    )
    if args.out:
        skip = records.existing_keys(args.out)
        fresh = []
        for violation in report.violations:
            record = records.ScanRecord(
                kind="bridge",
                params={
                    "m": args.m,
                    "n": args.n,
                    "mu": [str(v) for v in violation.mu],
                },
                result={
                    "u_window": [str(v) for v in violation.u_window],
                    "value_window": [str(v) for v in violation.value_window],
                },
            )
            if record.key not in skip:
                fresh.append(record)
        records.append_records(args.out, fresh)
    for violation in report.violations:
        print(f"VIOLATION: mu = ({', '.join(map(str, violation.mu))})")
    return FINDINGS if report.violations else OK


def _random_scalar(rng: random.Random, complex_ok: bool = True) -> GaussianRational:
    def part():
        return Fraction(rng.randint(-6, 6), rng.randint(1, 4))

    if complex_ok and rng.random() < 0.25:
        return GaussianRational(part(), part())
    return GaussianRational(part())


def _suite_bridge(seed: int) -> list[tuple[str, bool]]:
    rng = random.Random(seed)
    ok = True
    for _ in range(200):
        m = rng.randint(1, 4)
        n = rng.randint(1, 8 - m // 2)
        el = bridge.EFamilyElement([_random_scalar(rng) for _ in range(m)])
        if not bridge.check_bridge_identity(el, n):
            ok = False
            break
    checks = [("bridge identity on 200 random elements", ok)]
    grid2 = [GaussianRational(v) for v in range(-2, 3)]
    clean = all(
        bridge.probe_bridge_windows(2, grid2, n).clean for n in range(1, 4)
    )
    checks.append(("window probe m=2 grid -2..2 n=1..3", clean))
    grid3 = [GaussianRational(v) for v in range(-1, 2)]
    checks.append(("window probe m=3 grid -1..1 n=1", bridge.probe_bridge_windows(3, grid3, 1).clean))
    return checks


def _suite_recurrences(seed: int) -> list[tuple[str, bool]]:
    rng = random.Random(seed)
    checks = [("three-term recurrence for P_n, n=0..40", bridge.verify_p_recurrence(40))]
    ok = bridge.verify_mu_recurrence(1, 1, 20) and bridge.verify_mu_recurrence(2, -3, 20)
    for _ in range(20):
        mu1 = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        mu2 = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        ok = ok and bridge.verify_mu_recurrence(mu1, mu2, 20)
    checks.append(("mu-recurrence on 22 coefficient pairs, n=2..20", ok))
    for a, b, order, deg_n in (((1, 1), (0, 0), 3, 2), ((3, 0), (0, 0), 4, 3)):
        pair = two_monomials.ExponentPair(a, b)
        rec = two_monomials.discover_recurrence(pair, order, deg_n, 1)
        holds = rec is not None and all(
            not two_monomials.apply_recurrence(
                rec, lambda n: two_monomials.pab_poly(pair, n), n
            )
            for n in range(0, 21)
        )
        checks.append((f"exact order-{order} recurrence for a={a}, b={b}", holds))
    return checks


def _suite_certificate(_seed: int) -> list[tuple[str, bool]]:
    return [("five-term certificate expands to zero", bridge.verify_recurrence_certificate())]


def _suite_hypergeometric(_seed: int) -> list[tuple[str, bool]]:
    return [("hypergeometric closed form, n=1..20", bridge.verify_hypergeometric_form(20))]


def _suite_differences(_seed: int) -> list[tuple[str, bool]]:
    ok = all(
        two_monomials.verify_difference_identity(a, 10, case)
        for a in range(0, 5)
        for case in (1, 2)
    )
    return [("closed-case difference identities, a<=4, n<=10", ok)]


_SUITES = {
    "bridge": _suite_bridge,
    "recurrences": _suite_recurrences,
    "certificate": _suite_certificate,
    "hypergeometric": _suite_hypergeometric,
    "differences": _suite_differences,
    "prop35": _suite_differences,
}


def cmd_verify(args) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    if args.suite == "all":
        names.remove("prop35")
    failures = 0
    for name in names:
        for label, ok in _SUITES[name](args.seed):
            status = "PASS" if ok else "FAIL"
            if not ok:
                failures += 1
            print(f"{status} [{name}] {label}")
    return FINDINGS if failures else OK


def cmd_recurrence(args) -> int:
    pair = two_monomials.ExponentPair(args.a, args.b)
    try:
        rec, details = two_monomials.discover_recurrence_detailed(
            pair,
            args.order,
            args.deg_n,
            args.deg_x,
            n_samples=args.samples,
            sample_count=args.sample_count,
        )
    except two_monomials.UnderdeterminedSystemError as exc:
        print(f"recurrence: underdetermined configuration: {exc}", file=sys.stderr)
        return USAGE_ERROR
    lo, hi = details["sampled"]
    if rec is None:
        print(
            f"no recurrence found at order {args.order} "
            f"(deg_n {args.deg_n}, deg_x {args.deg_x}; sampled n = {lo}..{hi})"
        )
        return OK
    for t, c in enumerate(rec.coeffs):
        print(f"C{t}(n, X) = {expr.format_poly(c, ('n', 'X'))}")
    vlo, vhi = details["verified"]
    print(
        f"verified for tested range n = {lo}..{vhi} "
        f"(solved on {lo}..{hi}, re-checked on {vlo}..{vhi}); not a proof"
    )
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="faclab",
        description="Exact checks and scans for factorial functionals and series inversion.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval-l", help="print L(f^k) exactly")
    p.add_argument("--poly", required=True)
    p.add_argument("--k", type=_natural, required=True)
    p.set_defaults(fn=cmd_eval_l)

    p = sub.add_parser("membership", help="window membership report")
    p.add_argument("--poly", required=True)
    p.add_argument("--n", type=_positive)
    p.add_argument("--n-max", type=_positive, dest="n_max")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_membership)

    p = sub.add_parser("inverse", help="inverse-series coefficients u_1..u_order")
    p.add_argument("--alpha", help="comma list: a(X) = X(1 - a1 X - ... - am X^m)")
    p.add_argument("--mu", help="comma list: a(X) = X(1 - m1 X)...(1 - mm X)")
    p.add_argument("--poly", help="univariate normalized polynomial in X1")
    p.add_argument("--order", type=_positive, required=True)
    p.add_argument(
        "--mode", choices=("direct", "aif", "mif", "lagrange"), default="direct"
    )
    p.add_argument("--check", action="store_true", help="cross-check all modes")
    p.set_defaults(fn=cmd_inverse)

    p = sub.add_parser("rigidity-scan", help="zero-window scan over a coefficient grid")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--grid", required=True, help='"-2..2" or comma list')
    p.add_argument("--n-max", type=_positive, required=True, dest="n_max")
    p.add_argument("--out")
    p.add_argument("--threads", type=_positive)
    p.set_defaults(fn=cmd_rigidity_scan)

    p = sub.add_parser("rpc-scan", help="common-root scan over exponent pairs")
    p.add_argument("--max-exp", type=_positive, required=True, dest="max_exp")
    p.add_argument("--n-max", type=_natural, required=True, dest="n_max")
    p.add_argument("--out")
    p.add_argument("--threads", type=_positive)
    p.set_defaults(fn=cmd_rpc_scan)

    p = sub.add_parser("bridge-probe", help="window-vanishing probe on a mu grid")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--grid", required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_bridge_probe)

    p = sub.add_parser("verify", help="run the exact identity suites")
    p.add_argument(
        "--suite",
        choices=("all", "bridge", "recurrences", "hypergeometric", "certificate", "differences", "prop35"),
        default="all",
    )
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("recurrence", help="ansatz recurrence discovery for a family")
    p.add_argument("--a", type=_exponent_vector, required=True)
    p.add_argument("--b", type=_exponent_vector, required=True)
    p.add_argument("--order", type=_positive, required=True)
    p.add_argument("--deg-n", type=_natural, required=True, dest="deg_n")
    p.add_argument("--deg-x", type=_natural, required=True, dest="deg_x")
    p.add_argument("--samples", type=_positive, default=20)
    p.add_argument("--sample-count", type=_positive, dest="sample_count")
    p.set_defaults(fn=cmd_recurrence)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except expr.ExprError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
