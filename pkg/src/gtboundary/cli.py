"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .boundary import (
    approx_sweep,
    box_sampler,
    phi_n_numeric_many,
    phi_window,
    profile_sampler,
    random_sampler,
    sweep_maxima,
)
from .errors import GTError, PreconditionError, ToleranceNotMet
from .gt import as_signature, dim_weyl
from .omega import OmegaPoint
from .reldim import METHODS, reldim
from .verify import SUITES, run_suite

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2

# flags whose values may start with '-', e.g. --range -1:2
_VALUE_FLAGS = ("--range", "--N")


class InputError(Exception):
    pass


def fmt(x: Fraction, strict: bool = False) -> str:
    x = Fraction(x)
    if strict or x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return str(x.numerator)


def parse_signature(text: str) -> tuple:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON {text!r}: {exc.msg}") from None
    if not isinstance(data, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in data):
        raise InputError(f"signature must be a JSON array of integers, got {text!r}")
    if not data:
        raise InputError("signature must be nonempty")
    return as_signature(data)


def parse_omega(text: str) -> OmegaPoint:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON {text!r}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise InputError("omega must be a JSON object")
    return OmegaPoint.from_json(data)


def parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise InputError(f"range must look like a:b, got {text!r}") from None
    if lo > hi:
        raise InputError(f"empty range {text!r}")
    return lo, hi


def format_signature(nu: Sequence[int]) -> str:
    return "[" + ",".join(str(x) for x in nu) + "]"


def write_sweep_csv(path: str, rows, maxima: dict) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("N,nu,lambda_NK,lambda_inf,deviation\n")
        for r in rows:
            fh.write(f"{r.N},{format_signature(r.nu)},{fmt(r.lambda_NK)},{fmt(r.lambda_inf)},{fmt(r.deviation)}\n")
        fh.write("# summary: N,max_deviation\n")
        for N, m in maxima.items():
            fh.write(f"# {N},{fmt(m)}\n")


def read_sweep_csv(path: str) -> tuple[list[dict], dict]:
    """Parse a sweep file back into exact rows and the summary maxima."""
    rows, summary = [], {}
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().strip()
        if header != "N,nu,lambda_NK,lambda_inf,deviation":
            raise InputError(f"unexpected header {header!r}")
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if body and body[0].isdigit():
                    N, m = body.split(",")
                    summary[int(N)] = Fraction(m)
                continue
            head, rest = line.split(",", 1)
            nu_text, tail = rest.split("]", 1)
            _, lam, inf, dev = tail.split(",")
            rows.append(
                {
                    "N": int(head),
                    "nu": tuple(json.loads(nu_text + "]")),
                    "lambda_NK": Fraction(lam),
                    "lambda_inf": Fraction(inf),
                    "deviation": Fraction(dev),
                }
            )
    return rows, summary


def cmd_dim(args) -> int:
    print(dim_weyl(parse_signature(args.nu)))
    return EXIT_OK


def cmd_reldim(args) -> int:
    kappa, nu = parse_signature(args.kappa), parse_signature(args.nu)
    value = reldim(kappa, nu, args.method)
    if args.check_all:
        values = {}
        for m in METHODS:
            try:
                values[m] = reldim(kappa, nu, m)
            except PreconditionError as exc:
                print(f"note: {m} route skipped: {exc}", file=sys.stderr)
        if len(set(values.values())) != 1:
            for m, v in values.items():
                print(f"{m}\t{fmt(v)}", file=sys.stderr)
            print("routes disagree", file=sys.stderr)
            return EXIT_VERIFY
    print(fmt(value, args.strict_rational))
    return EXIT_OK


def cmd_phi(args) -> int:
    if (args.nu is None) == (args.omega is None):
        raise InputError("give exactly one of --nu and --omega")
    lo, hi = parse_range(args.range)
    source = parse_signature(args.nu) if args.nu is not None else parse_omega(args.omega)
    if isinstance(source, OmegaPoint) and not source.is_rational:
        try:
            values = phi_n_numeric_many(source, range(lo, hi + 1), args.tol)
        except ToleranceNotMet as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        for n, v in zip(range(lo, hi + 1), values):
            print(f"{n}\t{v:.17g}")
        return EXIT_OK
    for n, v in phi_window(source, lo, hi).items():
        print(f"{n}\t{fmt(v, args.strict_rational)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        res = run_suite(name, args.seed)
        prefix = f"{name}: " if len(names) > 1 else ""
        print(prefix + res.summary())
        for case in res.failures:
            print(f"  failed: {case!r}", file=sys.stderr)
        ok = ok and res.ok
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_sweep(args) -> int:
    kappa = parse_signature(args.kappa)
    lo, hi = parse_range(args.N)
    if lo <= len(kappa):
        raise InputError(f"N must exceed K={len(kappa)}")
    if args.sampler == "exhaustive":
        sampler = box_sampler(args.box)
    elif args.sampler == "profile":
        head = json.loads(args.profile)
        tail = json.loads(args.tail) if args.tail else []
        sampler = profile_sampler([Fraction(str(x)) for x in head], [Fraction(str(y)) for y in tail])
    else:
        sampler = random_sampler(args.count, args.box, args.seed)
    try:
        open(args.out, "a", encoding="utf-8").close()
    except OSError as exc:
        raise InputError(f"cannot write {args.out}: {exc.strerror}") from None
    rows = approx_sweep(kappa, range(lo, hi + 1), sampler, workers=args.workers)
    maxima = sweep_maxima(rows)
    write_sweep_csv(args.out, rows, maxima)
    for N, m in maxima.items():
        print(f"{N}\t{fmt(m)}\t{float(m):.6g}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gtboundary", description="Exact relative dimensions in the Gelfand-Tsetlin graph.")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dim", help="Weyl dimension of a signature")
    d.add_argument("--nu", required=True)
    d.set_defaults(func=cmd_dim)

    r = sub.add_parser("reldim", help="relative dimension Dim_{K,N}(kappa,nu)/Dim_N nu")
    r.add_argument("--kappa", required=True)
    r.add_argument("--nu", required=True)
    r.add_argument("--method", choices=METHODS, default="residue")
    r.add_argument("--check-all", action="store_true", help="run every route and exit 2 on disagreement")
    r.add_argument("--strict-rational", action="store_true", help="print integers as n/1")
    r.set_defaults(func=cmd_reldim)

    f = sub.add_parser("phi", help="Laurent coefficients of Phi(u; omega)")
    f.add_argument("--nu")
    f.add_argument("--omega")
    f.add_argument("--range", default="0:0")
    f.add_argument("--tol", type=float, default=1e-12)
    f.add_argument("--strict-rational", action="store_true")
    f.set_defaults(func=cmd_phi)

    v = sub.add_parser("verify", help="run a named identity suite")
    v.add_argument("--suite", choices=list(SUITES) + ["all"], required=True)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sweep", help="uniform-approximation deviation sweep to CSV")
    s.add_argument("--kappa", required=True)
    s.add_argument("--N", required=True, help="range a:b")
    s.add_argument("--sampler", choices=("exhaustive", "profile", "random"), default="exhaustive")
    s.add_argument("--box", type=int, default=1)
    s.add_argument("--profile", default="[0.5]", help="head profile x as a JSON list of rationals")
    s.add_argument("--tail", default=None, help="tail profile y as a JSON list of rationals")
    s.add_argument("--count", type=int, default=50)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_sweep)
    return p


def _join_values(argv: list[str]) -> list[str]:
    out, it = [], iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_values(argv))
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, GTError, ValueError, ZeroDivisionError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
