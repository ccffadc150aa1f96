"""Command-line surface: reproducible verification runs and data exports.

Subcommands
    cyclotomy-table      full cyclotomic-number table (csv or json)
    pt-sums              per-class character sums P_t
    jacobsthal-scan      JSON lines of H/I/curve records over GF(p^2k)
    expsum               one record for a given pair (a, b)
    expsum-sweep         all a for a fixed b, with the distribution report
    walsh-spectrum       full Walsh spectrum of a pair
    theorem1-verify      closed-form spectrum check of the (1, 1) pair
    sequences-crosscorr  cross-correlation table of the decimated pair
    verify-all           the complete identity suite; exit 0 iff all pass

Exit codes: 0 ok, 1 verification failure, 2 invalid arguments,
3 desk-scale guard exceeded.  All randomness is seeded and the seed is
printed; element arguments accept "c0,c1,...,c_{m-1}" digits or "g^e".
The CHARSUM_THREADS environment variable (or --threads) sets the
partition width of the sweeps; output is byte-identical regardless.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

from . import __version__, cyclotomy, expsum, jacobsthal, sequences, walsh
from .errors import (
    BoundViolation,
    CharsumError,
    GuardExceeded,
    OracleMismatch,
    RootCountViolation,
)
from .field_core import FieldParams, build_context, context

SCHEMA_VERSION = 1
DEFAULT_GUARD = 10 ** 8
DEFAULT_SEED = 20260809


def _header(cmd: str, args, ctx) -> dict:
    return {
        "schema": f"charsum.{cmd}/{SCHEMA_VERSION}",
        "version": __version__,
        "p": args.p,
        "k": args.k,
        "seed": args.seed,
        "context": {
            "degree": ctx.m,
            "modulus": ",".join(str(c) for c in ctx.modulus),
        },
    }


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _pmap(fn, items, threads):
    """Partitioned map with deterministic (input-order) merge."""
    if threads <= 1:
        return [fn(x) for x in items]
    from concurrent.futures import ThreadPoolExecutor
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _guard_check(args) -> None:
    size = args.p ** (4 * args.k)
    if size > args.guard and not args.force:
        raise GuardExceeded(
            f"p^4k = {size} exceeds the guard {args.guard}; pass --force to override")


def _parse_common(sub, element_args=()):
    sub.add_argument("--p", type=int, required=True, help="odd prime characteristic")
    sub.add_argument("--k", type=int, required=True, help="tower parameter, n = 4k")
    sub.add_argument("--seed", type=int, default=DEFAULT_SEED,
                     help="seed for randomized checks (printed in the header)")
    sub.add_argument("--guard", type=int, default=DEFAULT_GUARD,
                     help="refuse runs with p^4k beyond this size")
    sub.add_argument("--force", action="store_true",
                     help="override the desk-scale guard")
    sub.add_argument("--threads", type=int,
                     default=int(os.environ.get("CHARSUM_THREADS", "1")),
                     help="sweep partition width (output is identical)")
    sub.add_argument("--format", choices=("json", "csv", "text"), default="json")
    for name, help_text in element_args:
        sub.add_argument(name, required=True, help=help_text)


# --------------------------------------------------------------------------
# subcommand handlers
# --------------------------------------------------------------------------

def _cmd_cyclotomy_table(args) -> int:
    ctx = context(args.p, args.k)
    view = ctx.subfield(2 * args.k)
    table = cyclotomy.full_table(view)
    if args.format == "csv":
        print(table.to_csv())
    else:
        _emit(_header("cyclotomy-table", args, ctx))
        _emit({"order": table.order, "nu": f"g^{table.nu_log}",
               "table": [list(r) for r in table.table], "total": table.total})
    return 0


def _cmd_pt_sums(args) -> int:
    ctx = context(args.p, args.k)
    view = ctx.subfield(2 * args.k)
    pt = cyclotomy.pt_sums(view)
    _emit(_header("pt-sums", args, ctx))
    _emit({"order": pt.order, "values": [v.as_int() for v in pt.values]})
    return 0


def _cmd_jacobsthal_scan(args) -> int:
    # standalone GF(p^2k) context: the scan does not need the big field
    params = FieldParams(args.p, args.k)
    ctx = build_context(params, 2 * args.k)
    view = ctx.subfield(ctx.m)
    _emit(_header("jacobsthal-scan", args, ctx))
    report = jacobsthal.theorem2_scan(view)
    for rec in report.records:
        _emit(rec.to_json_dict(view))
    _emit({"max_abs_H": report.max_abs_H, "argmax": f"g^{report.argmax_log}",
           "max_ratio": report.max_ratio, "bound_attained": report.attained})
    return 0


def _cmd_expsum(args) -> int:
    ctx = context(args.p, args.k)
    pair = expsum.CoeffPair(ctx.parse_element(args.a), ctx.parse_element(args.b))
    rec = expsum.expsum_record(ctx, pair)
    _emit(_header("expsum", args, ctx))
    _emit(rec.to_json_dict(ctx))
    return 0


def _cmd_expsum_sweep(args) -> int:
    ctx = context(args.p, args.k)
    b = ctx.parse_element(args.b)
    _emit(_header("expsum-sweep", args, ctx))
    coeffs = [a for a in [ctx.zero] + list(ctx.powers())
              if not (a.is_zero and b.is_zero)]
    records = _pmap(
        lambda a: expsum.expsum_record(ctx, expsum.CoeffPair(a, b), check_oracle=False),
        coeffs, args.threads)
    for rec in records:
        _emit(rec.to_json_dict(ctx))
    report = expsum.distribution_sweep(ctx, b)
    _emit(report.to_json_dict(ctx))
    return 0


def _cmd_walsh_spectrum(args) -> int:
    ctx = context(args.p, args.k)
    pair = expsum.CoeffPair(ctx.parse_element(args.a), ctx.parse_element(args.b))
    spec = walsh.FunctionSpec(ctx, pair)
    spectrum = walsh.full_spectrum(spec)
    _emit(_header("walsh-spectrum", args, ctx))
    labels = ["0"] + [f"g^{e}" for e in range(ctx.order)]
    for label, c in zip(labels, spectrum.coefficients):
        _emit({"y": label, "coeff": list(c.c), "norm2": c.norm_squared().as_int()})
    _emit({"summary": dict(sorted(spectrum.summary.items())),
           "parseval": spectrum.parseval,
           "bent": walsh.is_bent(spec, spectrum),
           "weakly_regular_neg": walsh.is_weakly_regular_neg(spec, spectrum)})
    return 0


def _cmd_theorem1_verify(args) -> int:
    ctx = context(args.p, args.k)
    chk = walsh.theorem1_spectrum_check(ctx)
    _emit(_header("theorem1-verify", args, ctx))
    ok = (chk.all_formula_ok and chk.all_special_ok and chk.counts_ok
          and chk.bent and chk.weakly_regular)
    _emit({"formula_ok": chk.all_formula_ok, "special_case_ok": chk.all_special_ok,
           "counts_ok": chk.counts_ok, "bent": chk.bent,
           "weakly_regular_neg": chk.weakly_regular,
           "summary": dict(sorted(chk.summary.items()))})
    return 0 if ok else 1


def _cmd_sequences_crosscorr(args) -> int:
    ctx = context(args.p, args.k)
    s = sequences.m_sequence(ctx)
    u = sequences.decimate(s, ctx.params.d)
    v = sequences.decimate(s, 2)
    if args.format == "csv":
        print("tau,value")
        for tau in range(u.period):
            print(f"{tau},{sequences.cross_correlation(u, v, tau)}")
    else:
        _emit(_header("sequences-crosscorr", args, ctx))
        for tau in range(u.period):
            c = sequences.cross_correlation(u, v, tau)
            _emit({"tau": tau, "coeff": list(c.c)})
    return 0


# --------------------------------------------------------------------------
# verify-all
# --------------------------------------------------------------------------

def _run_verify_all(args) -> int:
    ctx = context(args.p, args.k)
    pk = args.p ** args.k
    view = ctx.subfield(2 * args.k)
    kview = ctx.subfield(args.k)
    b_values = [ctx.parse_element(s.strip()) for s in args.b.split(";")]
    rng = random.Random(args.seed)
    print(f"charsum verify-all  p={args.p} k={args.k} seed={args.seed} "
          f"b={[ctx.format_element(b) for b in b_values]}")

    sweeps = {}

    def check_lemma1():
        rep = cyclotomy.verify_lemma1(view)
        return rep.ok, f"total {rep.total}, {len(rep.mismatches)} mismatches"

    def check_pt():
        pt = cyclotomy.pt_sums(view)  # raises on defect
        return True, f"values {[v.as_int() for v in pt.values]}"

    def check_eq1():
        n_checked = 0
        for a in view.nonzero_elements():
            if kview.contains(a):
                continue
            got = jacobsthal.I_sum(view, pk + 1, a)
            if got != jacobsthal.eq1_value(pk, view.eta(a)):
                return False, f"a = {ctx.format_element(a)} gives {got}"
            n_checked += 1
        return True, f"{n_checked} elements"

    def check_theorem2():
        rep = jacobsthal.theorem2_scan(view)  # BoundViolation on defect
        return True, (f"{len(rep.records)} elements, max |H| = {rep.max_abs_H}, "
                      f"ratio {rep.max_ratio:.4f}")

    def check_curve():
        for rec in jacobsthal.theorem2_scan(view).records:
            if rec.H != (pk + 1) * (rec.curve_N - pk):
                return False, f"mismatch at a = {ctx.format_element(rec.a)}"
        return True, "H/(p^k+1) = N - p^k throughout"

    def check_theorem3():
        for b in b_values:
            sweeps[b.enc] = expsum.distribution_sweep(ctx, b)  # OracleMismatch on defect
        return True, f"full sweeps at {len(b_values)} b values"

    def check_prop1():
        for b in b_values:
            for a in [ctx.zero] + list(ctx.powers()):
                pair = expsum.CoeffPair(a, b)
                if expsum.classify(ctx, pair) is expsum.CaseTag.JACOBSTHAL:
                    continue
                if expsum.N_count(ctx, pair)[0] > 2:
                    return False, f"N > 2 at a = {ctx.format_element(a)}"
        samples = 0
        while samples < args.samples:
            a = ctx.from_enc(rng.randrange(ctx.q))
            b = ctx.from_enc(rng.randrange(ctx.q))
            if a.is_zero and b.is_zero:
                continue
            pair = expsum.CoeffPair(a, b)
            if not (pair.a ** (pk * (pk + 1)) != pair.b ** (pk + 1)):
                continue
            if expsum.prop1_F_zeros(ctx, pair) != expsum.L_zeros_field(ctx, pair):
                return False, "L and F zero sets differ"
            samples += 1
        return True, f"range check + {samples} sampled zero-set comparisons"

    def check_prop2():
        n_pairs = 0
        for b in b_values:
            for a in expsum.jacobsthal_pairs(ctx, b):
                pair = expsum.CoeffPair(a, b)
                n1 = expsum.N_count(ctx, pair)[0]
                n2 = expsum.N_via_nonsquares(ctx, pair)
                n3 = expsum.N_via_jacobsthal(ctx, pair)
                if not n1 == n2 == n3:
                    return False, f"paths {n1}/{n2}/{n3} at a = {ctx.format_element(a)}"
                n_pairs += 1
        return True, f"{n_pairs} pairs, three paths each"

    def check_cor1():
        for _ in range(args.samples):
            a = ctx.from_enc(rng.randrange(ctx.q))
            b = ctx.from_enc(rng.randrange(ctx.q))
            if a.is_zero and b.is_zero:
                continue
            h = ctx.from_exp(rng.randrange(ctx.order))
            if not expsum.corollary1_check(ctx, expsum.CoeffPair(a, b), h):
                return False, f"scaling failed at h = {ctx.format_element(h)}"
        return True, f"{args.samples} seeded triples"

    def check_cor2():
        n_pairs = 0
        for b in b_values:
            for a in expsum.jacobsthal_pairs(ctx, b):
                results = expsum.corollary_suite(ctx, expsum.CoeffPair(a, b))
                bad = [key for key, ok in results.items() if ok is False]
                if bad:
                    return False, f"properties {bad} failed at a = {ctx.format_element(a)}"
                n_pairs += 1
        return True, f"{n_pairs} pairs x 7 properties"

    def check_rst():
        lines = []
        for b in b_values:
            rep = sweeps.get(b.enc) or expsum.distribution_sweep(ctx, b)
            if any(rep.residuals):
                return False, f"residuals {rep.residuals} at b = {ctx.format_element(b)}"
            lines.append(f"b={ctx.format_element(b)}: (r,s,t)=({rep.r},{rep.s},{rep.t})")
        return True, "; ".join(lines)

    def check_theorem1():
        chk = walsh.theorem1_spectrum_check(ctx)
        ok = (chk.all_formula_ok and chk.all_special_ok and chk.counts_ok
              and chk.bent and chk.weakly_regular)
        return ok, f"spectrum counts {chk.summary}"

    checks = [
        ("lemma1 cyclotomic table", check_lemma1),
        ("pt class sums", check_pt),
        ("eq1 companion sum", check_eq1),
        ("theorem2 jacobsthal bound", check_theorem2),
        ("curve count identity", check_curve),
        ("theorem3 oracle equivalence", check_theorem3),
        ("prop1 three-valued range", check_prop1),
        ("prop2/eq8 triple path", check_prop2),
        ("corollary1 scaling", check_cor1),
        ("corollary2 suite", check_cor2),
        ("r/s/t distribution identities", check_rst),
        ("theorem1 spectrum", check_theorem1),
    ]

    failures = []
    for name, fn in checks:
        t0 = time.perf_counter()
        try:
            ok, detail = fn()
        except CharsumError as exc:
            ok, detail = False, str(exc)
        dt = time.perf_counter() - t0
        status = "ok" if ok else "FAIL"
        print(f"[{status:4}] {name}: {detail} ({dt:.2f}s)")
        if not ok:
            failures.append(name)
    if failures:
        print(f"FAILED: {failures[0]}")
        return 1
    print("all identities verified")
    return 0


def _cmd_verify_all(args) -> int:
    return _run_verify_all(args)


# --------------------------------------------------------------------------
# entry point
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charsum",
        description="exact character-sum laboratory over GF(p^4k)")
    sub = parser.add_subparsers(dest="cmd", required=True)

    handlers = {}

    def add(name, fn, element_args=(), extra=None):
        s = sub.add_parser(name)
        _parse_common(s, element_args)
        if extra:
            extra(s)
        handlers[name] = fn

    add("cyclotomy-table", _cmd_cyclotomy_table)
    add("pt-sums", _cmd_pt_sums)
    add("jacobsthal-scan", _cmd_jacobsthal_scan)
    add("expsum", _cmd_expsum,
        element_args=(("--a", "first coefficient"), ("--b", "second coefficient")))
    add("expsum-sweep", _cmd_expsum_sweep,
        element_args=(("--b", "fixed second coefficient"),))
    add("walsh-spectrum", _cmd_walsh_spectrum,
        element_args=(("--a", "first coefficient"), ("--b", "second coefficient")))
    add("theorem1-verify", _cmd_theorem1_verify)
    add("sequences-crosscorr", _cmd_sequences_crosscorr)
    add("verify-all", _cmd_verify_all, extra=lambda s: (
        s.add_argument("--b", default="g^0;g^1",
                       help="semicolon-separated b values for the sweeps"),
        s.add_argument("--samples", type=int, default=200,
                       help="sample count for randomized checks"),
    ))

    parser.set_defaults(_handlers=handlers)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        _guard_check(args)
        return args._handlers[args.cmd](args)
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (BoundViolation, OracleMismatch, RootCountViolation) as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except (CharsumError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
