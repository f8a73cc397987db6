"""Command-line interface.

Exit codes: 0 success, 2 usage or parameter error, 3 verification failure,
4 I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .classifier import ClosedFormMismatch, VerificationError, enumerate_mates
from .closed_forms import pineapple_poly
from .formats import export
from .graph import (
    Graph,
    InvalidParams,
    MixedExtension,
    PineappleParams,
    disjoint_union,
    make_complete,
    make_complete_split,
    make_mixed_extension,
    make_pineapple,
)
from .oracle.census import JOBS_ENV, census, default_jobs
from .oracle.scan import DEFAULT_CAP, ScanCapExceeded, assert_impossible, exhaustive_family_scan
from .oracle.verify import verify_mate
from .spectra import char_poly, poly_divides, quotient_matrix, rank_over_rationals

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_IO = 0, 2, 3, 4


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Config:
    output_format: str = "text"
    scan_cap: int = DEFAULT_CAP
    parallelism: int = 1

    def __post_init__(self):
        if self.output_format not in ("text", "json", "csv"):
            raise UsageError(f"unknown format {self.output_format!r}")
        if self.scan_cap < 5:
            raise UsageError("scan cap must be at least 5")
        if self.parallelism < 1:
            raise UsageError("parallelism must be positive")


def parse_range(text: str) -> range:
    """``a:b`` inclusive on both ends; a bare integer is a one-element range."""
    try:
        if ":" in text:
            lo, hi = (int(v) for v in text.split(":", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a:b or an integer, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _jobs(text: str) -> int:
    if text == "auto":
        import os
        return os.cpu_count() or 1
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer or 'auto', got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("jobs must be positive")
    return value


def _params(args) -> PineappleParams:
    return PineappleParams(args.p, args.k, args.q)


def _write(data: bytes | str, out: str | None):
    if isinstance(data, str):
        data = data.encode("utf-8")
    if out is None or out == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    with open(out, "wb") as fh:
        fh.write(data)


def cmd_poly(args, cfg: Config) -> int:
    fp = pineapple_poly(_params(args))
    if cfg.output_format == "json":
        print(fp.to_json())
    else:
        print(fp)
        print(fp.expand())
    return EXIT_OK


def cmd_mates(args, cfg: Config) -> int:
    result = enumerate_mates(_params(args))
    if cfg.output_format == "json":
        print(result.to_json())
        return EXIT_OK
    verdict = "DAS" if result.das else "non-DAS"
    print(f"{result.params}: {verdict}, {len(result.mates)} mate(s)")
    for mate in result.mates:
        print(f"  {mate.family}: {mate}")
    if result.rejected_roots:
        roots = ", ".join(map(str, result.rejected_roots))
        print(f"  rejected two-component roots a = {roots}")
    return EXIT_OK


def cmd_census(args, cfg: Config) -> int:
    table = census(args.p, args.k, args.q, jobs=cfg.parallelism)
    if cfg.output_format == "json":
        body = json.dumps([c.to_dict() for c in table.rows]) + "\n"
    else:
        body = table.to_csv()
    if args.out:
        _write(body, args.out)
        print(table.summary())
    else:
        _write(body, None)
        print(table.summary(), file=sys.stderr)
    return EXIT_OK


def cmd_verify(args, cfg: Config) -> int:
    params = _params(args)
    g = make_pineapple(params)
    f = char_poly(g)
    checks: list[tuple[str, bool]] = []
    checks.append(("closed form equals characteristic polynomial", pineapple_poly(params).expand() == f))
    adj = g.integer_matrix()
    shifted = [[v + (i == j) for j, v in enumerate(row)] for i, row in enumerate(adj)]
    checks.append((f"rank A = p+1 = {params.p + 1}", rank_over_rationals(adj) == params.p + 1))
    checks.append((f"rank (I+A) = q+2 = {params.q + 2}", rank_over_rationals(shifted) == params.q + 2))
    parts = [list(range(params.k)), list(range(params.k, params.p)),
             list(range(params.p, params.p + params.q))]
    cubic = quotient_matrix(g, parts).char_poly()
    checks.append(("quotient cubic divides the characteristic polynomial", poly_divides(cubic, f)))
    try:
        result = enumerate_mates(params)
    except (VerificationError, ClosedFormMismatch) as exc:
        checks.append((f"classifier: {exc}", False))
        result = None
    if result is not None:
        for mate in result.mates:
            checks.append((f"cospectral mate {mate.spec.describe()}", verify_mate(params, mate.spec)))
    ok = all(passed for _, passed in checks)
    if cfg.output_format == "json":
        print(json.dumps({"p": params.p, "k": params.k, "q": params.q, "passed": ok,
                          "das": None if result is None else result.das,
                          "checks": [{"check": name, "passed": passed} for name, passed in checks]}))
    else:
        for name, passed in checks:
            print(f"{'PASS' if passed else 'FAIL'} {name}")
        if result is not None:
            print("DAS" if result.das else f"non-DAS ({len(result.mates)} mate(s))")
    return EXIT_OK if ok else EXIT_VERIFY


def _graph_from_args(args) -> Graph:
    fam = args.family
    if fam == "pineapple":
        if None in (args.p, args.k, args.q):
            raise UsageError("pineapple needs --p, --k and --q")
        g = make_pineapple(PineappleParams(args.p, args.k, args.q))
    elif fam == "cs":
        if None in (args.indep, args.clique):
            raise UsageError("cs needs --indep and --clique")
        g = make_complete_split(indep=args.indep, clique=args.clique)
    elif fam == "complete":
        if args.n is None:
            raise UsageError("complete needs --n")
        g = make_complete(args.n)
    elif fam == "mixedext":
        if args.type is None:
            raise UsageError("mixedext needs --type, e.g. --type=-2,3,1,-2")
        try:
            types = tuple(int(v) for v in args.type.split(","))
        except ValueError:
            raise UsageError(f"bad --type {args.type!r}") from None
        if args.base is not None and args.base != len(types):
            raise UsageError(f"--base {args.base} but --type has {len(types)} entries")
        g = make_mixed_extension(MixedExtension(types))
    elif fam == "union":
        if None in (args.t, args.clique, args.indep):
            raise UsageError("union needs --t, --clique and --indep")
        g = disjoint_union([make_complete(args.t),
                            make_complete_split(indep=args.indep, clique=args.clique)])
    else:  # argparse restricts the choices
        raise UsageError(f"unknown family {fam!r}")
    if args.isolated:
        g = disjoint_union([g], args.isolated)
    return g


def cmd_graph(args, cfg: Config) -> int:
    g = _graph_from_args(args)
    data = export(g, args.format)
    _write(data + b"\n" if data else data, args.out)
    return EXIT_OK


def cmd_scan(args, cfg: Config) -> int:
    if args.impossible:
        ok = assert_impossible(args.impossible, cap=cfg.scan_cap)
        if cfg.output_format == "json":
            print(json.dumps({"case": args.impossible, "cap": cfg.scan_cap, "passed": ok}))
        else:
            print(f"{'PASS' if ok else 'FAIL'} {args.impossible} up to order {cfg.scan_cap}")
        return EXIT_OK if ok else EXIT_VERIFY
    if args.order is None:
        raise UsageError("scan needs --order or --impossible")
    reports = [exhaustive_family_scan(n, cap=cfg.scan_cap) for n in args.order]
    ok = all(r.passed for r in reports)
    if cfg.output_format == "json":
        print(json.dumps([r.to_dict() for r in reports]))
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status} {r.params_range}: {len(r.found)} mate(s) found, "
                  f"{len(r.missed_by_classifier)} missed, {len(r.spurious_in_classifier)} spurious")
            for params, spec in r.missed_by_classifier:
                print(f"  missed: {params} ~ {spec.describe()}")
            for params, spec in r.spurious_in_classifier:
                print(f"  spurious: {params} ~ {spec.describe()}")
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pineapple-spectra",
        description="Spectral characterization of generalized pineapple graphs K_{p,k}^q.",
        epilog=f"Ranges are written a:b, inclusive. {JOBS_ENV} sets the default number of "
               "census worker processes (an integer or 'auto').",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def pkq(p):
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--q", type=int, required=True)

    def fmt(p, choices=("text", "json"), default="text"):
        p.add_argument("--format", choices=choices, default=default)

    p = sub.add_parser("poly", help="factored characteristic polynomial of K_{p,k}^q")
    pkq(p)
    fmt(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("mates", help="all cospectral mates and the DAS verdict")
    pkq(p)
    fmt(p)
    p.set_defaults(func=cmd_mates)

    p = sub.add_parser("census", help="classify a (k, q) grid for fixed p")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=parse_range, required=True, help="k range a:b")
    p.add_argument("--q", type=parse_range, required=True, help="q range a:b")
    p.add_argument("--out", help="CSV path; without it the CSV goes to stdout and the summary to stderr")
    p.add_argument("--jobs", type=_jobs, default=None,
                   help=f"worker processes (default from {JOBS_ENV}, else 1)")
    fmt(p, ("csv", "json"), "csv")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run the oracle checks for one triple")
    pkq(p)
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("graph", help="export a graph as graph6 or an edge list")
    p.add_argument("--family", required=True,
                   choices=("pineapple", "cs", "complete", "mixedext", "union"))
    for name in ("p", "k", "q", "n", "t", "indep", "clique", "base"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--type", help="comma-separated mixed-extension type; use --type=-2,... "
                                  "when the first entry is negative")
    p.add_argument("--isolated", type=int, default=0)
    p.add_argument("--format", choices=("graph6", "edgelist", "edge-list"), default="graph6")
    p.add_argument("--out")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("scan", help="exhaustive structured-family scan against the classifier")
    p.add_argument("--order", type=parse_range, help="order or range a:b")
    p.add_argument("--impossible", choices=("KcKde", "P4_lmns"))
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    fmt(p)
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        jobs = getattr(args, "jobs", None) or default_jobs()
        fmt = args.format if args.format in ("text", "json", "csv") else "text"
        cfg = Config(output_format=fmt, scan_cap=getattr(args, "cap", DEFAULT_CAP), parallelism=jobs)
        return args.func(args, cfg)
    except (InvalidParams, UsageError, ScanCapExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (VerificationError, ClosedFormMismatch) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
