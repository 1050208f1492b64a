"""``permsign`` command line: signs, theorem checks, class numbers, identities, scans."""
from __future__ import annotations

import argparse
import contextlib
import csv
import re
import sys
import time

from . import identities as ids
from .arith import DEFAULT_SEED, OddPrime, is_primitive_root, primitive_roots
from .classnum import check_discriminant, class_number_for_prime, reduced_forms
from .perms import make_nu, make_sigma, make_tau, sign_cycles
from .verify import (
    CSV_HEADER,
    DEFAULT_SAMPLE,
    VerificationRecord,
    classify,
    fmt_sign,
    max_full_default,
    scan,
    verify_prime,
)

IDENTITY_MAX_P = 2000


class UsageError(Exception):
    pass


def _prime(value: str, seed: int = DEFAULT_SEED) -> OddPrime:
    try:
        return OddPrime(int(value), seed=seed)
    except ValueError:
        raise UsageError(f"{value} is not an odd prime") from None


def parse_mode(text: str, sample: int) -> tuple[str, int]:
    """``full``, ``sampled``, ``sampled(k)`` or ``sampled:k`` -> ``(mode, k)``."""
    m = re.fullmatch(r"\s*(full|sampled)\s*(?:[(:]\s*(\d+)\s*\)?)?\s*", text)
    if not m:
        raise UsageError(f"bad mode {text!r}; use full or sampled(k)")
    mode, k = m.group(1), m.group(2)
    if mode == "full" and k is not None:
        raise UsageError("full mode takes no sample size")
    k = int(k) if k is not None else sample
    if k < 1:
        raise UsageError("sample size must be positive")
    return mode, k


def _human(rec: VerificationRecord, detail: bool) -> str:
    lines = [
        f"p = {rec.p}",
        f"  case          {rec.case}",
        f"  discriminant  {rec.discriminant}",
        f"  class number  {rec.class_number}",
        f"  predicted     {rec.predicted}",
        f"  roots         {rec.roots_total} (even {rec.roots_even}, odd {rec.roots_odd}) [{rec.mode}]",
        f"  passed        {'yes' if rec.passed else 'NO'}",
        f"  detail        {rec.detail}",
    ]
    if detail:
        for g, t, s in rec.per_root:
            lines.append(f"    g={g:<8} tau {fmt_sign(t)}  sigma {'' if s is None else fmt_sign(s)}")
    return "\n".join(lines)


def _emit(records, fmt: str, detail: bool, out) -> None:
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for rec in records:
            w.writerow(rec.csv_row())
    elif fmt == "json":
        for rec in records:
            out.write(rec.to_json(per_root=detail) + "\n")
    else:
        for rec in records:
            out.write(_human(rec, detail) + "\n")


@contextlib.contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def cmd_sign(args) -> int:
    P = _prime(args.p, args.seed)
    if not is_primitive_root(args.g, P):
        raise UsageError(f"{args.g} is not a primitive root mod {P.p}")
    build = {"tau": make_tau, "sigma": make_sigma, "nu": make_nu}[args.which]
    perm = build(args.g, P)
    print(f"sign {fmt_sign(sign_cycles(perm))}")
    print(f"cycles {perm.cycle_type()}")
    return 0


def cmd_verify(args) -> int:
    P = _prime(args.p, args.seed)
    mode, k = parse_mode(args.mode, args.sample)
    rec = verify_prime(P, None if mode == "full" else k)
    with _output(args.out) as out:
        _emit([rec], args.format, args.detail, out)
    return 0 if rec.passed else 1


def cmd_scan(args) -> int:
    mode, k = parse_mode(args.mode, args.sample)
    lo, hi = args.lo, args.hi
    if not 3 <= lo <= hi <= 1 << 31:
        raise UsageError(f"invalid range [{lo}, {hi}]; need 3 <= from <= to <= 2^31")
    t0 = time.perf_counter()
    records = scan(lo, hi, mode=mode, sample=k, max_full=args.max_full, jobs=args.jobs)
    with _output(args.out) as out:
        _emit(records, args.format, args.detail, out)
    failed = sum(not r.passed for r in records)
    print(f"{len(records)} records, {failed} failed, {time.perf_counter() - t0:.1f}s",
          file=sys.stderr)
    return 0 if failed == 0 else 1


def cmd_classnum(args) -> int:
    if args.prime is not None:
        P = _prime(args.prime, args.seed)
        D, _ = class_number_for_prime(P)
    elif args.D is not None:
        try:
            D = check_discriminant(args.D)
        except ValueError:
            raise UsageError(f"{args.D} is not a discriminant (need D < 0, D = 0 or 1 mod 4)") from None
    else:
        raise UsageError("give a discriminant or --prime")
    forms = reduced_forms(D)
    print(f"D={D} h={len(forms)}")
    print("forms " + ",".join(str(f) for f in forms))
    return 0


def identity_checks(P: OddPrime, tol: float, max_p: int = IDENTITY_MAX_P):
    """``(name, outcome)`` pairs; outcome is True, False or a skip reason."""
    p = P.p
    rows = []

    def run(name, fn, *a):
        try:
            rows.append((name, bool(fn(*a))))
        except ids.InconsistencyError as exc:
            rows.append((name, False))
            rows.append((name + " error", str(exc)))

    if p > max_p:
        rows.append(("exact product identities", f"skipped: p > {max_p} (raise with --max-p)"))
    else:
        run("wilson_pair", ids.check_wilson_pair, P)
        run("product_j2_i2", ids.check_product_j2_i2, P)
        run("product_j_minus_i", ids.product_j_minus_i, P)
        run("kohl_sigma", ids.check_kohl_sigma, P)
        run("sign_via_product", lambda: all(
            ids.sign_via_product(g, P) == sign_cycles(make_tau(g, P)) for g in primitive_roots(P)))
    if p % 4 == 3:
        if p > 3:
            run("mordell", ids.check_mordell, P)
        else:
            rows.append(("mordell", "skipped: needs p > 3"))
    else:
        run("williams_currie", ids.check_williams_currie, P)
    tag = classify(P)
    if tag.n is not None:
        if p > max_p:
            rows.append(("special_form_product", f"skipped: p > {max_p}"))
        else:
            run(f"special_form_product(n={tag.n})", ids.check_special_form_product, P, tag.n)
    if p <= ids.COMPLEX_MAX_P:
        run("upsilon_complex", ids.check_upsilon_complex, P, tol)
        run("petrov_complex", ids.check_petrov_complex, P, tol)
    else:
        rows.append(("complex products", f"skipped: p > {ids.COMPLEX_MAX_P}"))
    return rows


def cmd_identities(args) -> int:
    P = _prime(args.p, args.seed)
    rows = identity_checks(P, args.tol, args.max_p)
    width = max(len(name) for name, _ in rows)
    ok = True
    for name, outcome in rows:
        if outcome is True:
            text = "pass"
        elif outcome is False:
            text, ok = "FAIL", False
        else:
            text = outcome
        print(f"{name:<{width}}  {text}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permsign",
        description="Signs of primitive-root permutations mod p and the congruences behind them.",
    )
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed for rho factorization (results never depend on it)")
    sub = parser.add_subparsers(dest="command", required=True)

    def output_flags(sp):
        sp.add_argument("--format", choices=("human", "csv", "json"), default="human")
        sp.add_argument("--detail", action="store_true", help="include per-root signs")
        sp.add_argument("--out", help="write records to this file instead of stdout")
        sp.add_argument("--mode", default="sampled",
                        help="full, or sampled(k): all roots up to --max-full, k smallest above")
        sp.add_argument("--sample", type=int, default=DEFAULT_SAMPLE,
                        help=f"sample size when --mode sampled has none (default {DEFAULT_SAMPLE})")

    sp = sub.add_parser("sign", help="sign and cycle type of tau_g, sigma_g or nu_g")
    sp.add_argument("p")
    sp.add_argument("g", type=int)
    sp.add_argument("--which", choices=("tau", "sigma", "nu"), default="tau")
    sp.set_defaults(func=cmd_sign)

    sp = sub.add_parser("verify", help="check the theorem at one prime")
    sp.add_argument("p")
    output_flags(sp)
    sp.set_defaults(func=cmd_verify, mode="full")

    sp = sub.add_parser("scan", help="verify every prime in a range")
    sp.add_argument("--from", dest="lo", type=int, default=3)
    sp.add_argument("--to", dest="hi", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=1, help="worker processes")
    sp.add_argument("--max-full", type=int, default=None,
                    help="largest p tested on all roots in sampled mode "
                         "(default $PERMSIGN_MAX_FULL or 2000)")
    output_flags(sp)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("classnum", help="class number and reduced forms")
    sp.add_argument("D", type=int, nargs="?")
    sp.add_argument("--prime", help="use the fundamental discriminant of Q(sqrt(-p))")
    sp.set_defaults(func=cmd_classnum)

    sp = sub.add_parser("identities", help="run every congruence/product check at p")
    sp.add_argument("p")
    sp.add_argument("--tol", type=float, default=1e-6)
    sp.add_argument("--max-p", type=int, default=IDENTITY_MAX_P,
                    help=f"skip O(p^2) checks above this prime (default {IDENTITY_MAX_P})")
    sp.set_defaults(func=cmd_identities)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_full", 0) is None:
        args.max_full = max_full_default()
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
