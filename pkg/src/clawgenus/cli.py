"""Command-line interface.

Commands:
  compute       genus polynomial coefficients by a chosen route (or all)
  table         the coefficient table for n = 0 .. max-n
  certify       root / interlacing / log-concavity certificates
  oracle-check  compare exhaustive enumeration against the algebraic engine

Results go to stdout, diagnostics to stderr.  The exit status is 0 exactly
when every requested check passed.  Exact quantities never serialize as
floating point: rationals appear as [numerator, denominator] pairs, and the
only float fields are decimal approximations explicitly marked "approx".
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import ClawgenusError
from .formulas import genus_explicit, genus_from_series, genus_recurrence
from .oracle import enumerate_pgd
from .pgd import pgd
from .polynomials import IntPoly
from .rootcert import (
    RootCertificate,
    certify_interlacing,
    concavity_report,
    isolate_roots,
    normalized_recurrence,
)

CHECK, CROSS, SKIP = "✓", "✗", "-"


def canonical_json(obj) -> str:
    """Canonical serialization: sorted keys, no whitespace, no floats for
    exact quantities.  Parsing and re-serializing is byte-identical."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def parse_n_spec(spec: str) -> list[int]:
    """Parse "7" or "0..10" into an explicit list of indices."""
    try:
        if ".." in spec:
            a_s, b_s = spec.split("..", 1)
            a, b = int(a_s), int(b_s)
        else:
            a = b = int(spec)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad index spec {spec!r}") from None
    if a < 0 or b < a:
        raise argparse.ArgumentTypeError(f"bad index range {spec!r}")
    return list(range(a, b + 1))


def _padded_coeffs(p: IntPoly, n: int) -> list[int]:
    return [p[i] for i in range(n + 2)]


ROUTES = ("pgd", "recurrence", "gf", "explicit", "oracle")


def _route_poly(route: str, n: int, jobs: int, ack: bool) -> IntPoly:
    if route == "pgd":
        return pgd(n).total()
    if route == "recurrence":
        return genus_recurrence(n).poly
    if route == "gf":
        return genus_from_series(n).poly
    if route == "explicit":
        return genus_explicit(n).poly
    if route == "oracle":
        return enumerate_pgd(n, jobs=jobs, acknowledge_cost=ack).total()
    raise ValueError(f"unknown route {route!r}")


def cmd_compute(args) -> int:
    ns = args.n
    rows = []
    for n in ns:
        if args.route == "all":
            polys = {
                r: _route_poly(r, n, args.parallelism, args.acknowledge_cost)
                for r in ("pgd", "recurrence", "gf", "explicit")
            }
            base = polys["recurrence"]
            for r, p in polys.items():
                if p != base:
                    i = next(
                        i for i in range(max(len(p), len(base))) if p[i] != base[i]
                    )
                    print(
                        f"route disagreement at n={n}, coefficient i={i}: "
                        f"{r}={p[i]}, recurrence={base[i]}",
                        file=sys.stderr,
                    )
                    return 1
            rows.append((n, base, True))
        else:
            p = _route_poly(args.route, n, args.parallelism, args.acknowledge_cost)
            rows.append((n, p, None))

    if args.format == "csv":
        for n, p, _ in rows:
            print(",".join(str(c) for c in [n] + _padded_coeffs(p, n)))
    elif args.format == "json":
        out = []
        for n, p, agree in rows:
            entry = {
                "n": n,
                "route": args.route,
                "coefficients": _padded_coeffs(p, n),
            }
            if agree is not None:
                entry["agree"] = agree
            out.append(entry)
        print(canonical_json(out))
    else:
        for n, p, agree in rows:
            tag = "AGREE  " if agree else ""
            print(f"n={n}: {tag}{p}")
    return 0


def cmd_table(args) -> int:
    rows = [
        (n, _padded_coeffs(genus_recurrence(n).poly, n))
        for n in range(args.max_n + 1)
    ]
    if args.format == "csv":
        for n, cs in rows:
            print(",".join(str(c) for c in [n] + cs))
    elif args.format == "json":
        print(canonical_json([{"n": n, "coefficients": cs} for n, cs in rows]))
    else:
        width = args.max_n + 2
        cells = [["n/i"] + [str(i) for i in range(width)]]
        for n, cs in rows:
            cells.append([str(n)] + [str(c) for c in cs + [0] * (width - len(cs))])
        widths = [max(len(r[c]) for r in cells) for c in range(width + 1)]
        for r in cells:
            print("  ".join(s.rjust(w) for s, w in zip(r, widths)))
    return 0


def _root_cert_json(cert: RootCertificate) -> dict:
    d = cert.to_json_dict()
    d["approx"] = [iv.approx() for iv in cert.intervals]
    return d


def cmd_certify(args) -> int:
    certs: dict[int, RootCertificate] = {}

    def cert(k: int) -> RootCertificate:
        if k not in certs:
            certs[k] = isolate_roots(normalized_recurrence(k))
        return certs[k]

    failures = 0
    out_rows = []
    for n in args.n:
        c = cert(n)
        real_rooted = c.complete
        inter = {"consecutive": None, "skip": None}
        marks = {"consecutive": SKIP, "skip": SKIP}
        for mode, m in (("consecutive", n - 1), ("skip", n - 2)):
            if m < 0:
                continue
            try:
                inter[mode] = certify_interlacing(
                    c, cert(m), mode, max_refine=args.max_refine
                )
                marks[mode] = CHECK
            except ClawgenusError as exc:
                print(f"n={n} {mode} interlacing failed: {exc}", file=sys.stderr)
                marks[mode] = CROSS
                failures += 1
        conc = concavity_report(genus_recurrence(n))
        if not real_rooted or not conc.ok:
            failures += 1

        if args.format == "json":
            out_rows.append(
                {
                    "n": n,
                    "root_certificate": _root_cert_json(c),
                    "interlacing": {
                        mode: ic.to_json_dict() if ic else None
                        for mode, ic in inter.items()
                    },
                    "log_concave": conc.ok,
                    "summary": {
                        "real_rooted": real_rooted,
                        "interlace_consecutive": marks["consecutive"] == CHECK
                        if n >= 1
                        else None,
                        "interlace_skip": marks["skip"] == CHECK
                        if n >= 2
                        else None,
                        "log_concave": conc.ok,
                    },
                }
            )
        else:
            print(
                f"n={n}: real-rooted {CHECK if real_rooted else CROSS} "
                f"({len(c.intervals)} intervals), "
                f"interlace(n-1) {marks['consecutive']}, "
                f"interlace(n-2) {marks['skip']}, "
                f"log-concave {CHECK if conc.ok else CROSS}"
            )
    if args.format == "json":
        print(canonical_json(out_rows))
    return 1 if failures else 0


def cmd_oracle_check(args) -> int:
    status = 0
    for n in args.n:
        o = enumerate_pgd(n, jobs=args.parallelism, acknowledge_cost=args.acknowledge_cost)
        v = pgd(n)
        pairs = zip("abc", o.as_polys(), (v.a, v.b, v.c))
        bad = [name for name, op, vp in pairs if op != vp]
        if bad:
            print(
                f"n={n}: oracle differs from the production route in "
                f"class(es) {', '.join(bad)}",
                file=sys.stderr,
            )
            status = 1
        else:
            print(
                f"n={n}: oracle matches the production route "
                f"({o.embedding_count()} embeddings) {CHECK}"
            )
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clawgenus",
        description=(
            "Exact genus polynomials of iterated-claw graphs: computation "
            "by independent routes, brute-force verification, and "
            "machine-checkable certificates of real-rootedness, root "
            "interlacing and log-concavity."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="genus polynomial coefficients")
    p.add_argument("--n", type=parse_n_spec, required=True, metavar="N|A..B",
                   help="claw index or inclusive range, e.g. 4 or 0..10")
    p.add_argument("--route", choices=ROUTES + ("all",), default="all",
                   help="computation route; 'all' cross-checks the four "
                        "algebraic routes (default)")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--parallelism", type=int, default=1,
                   help="worker count for the oracle route")
    p.add_argument("--acknowledge-cost", action="store_true",
                   help="allow oracle enumeration above the size cap")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table", help="coefficient table for n = 0..max-n")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("certify", help="root and log-concavity certificates")
    p.add_argument("--n", type=parse_n_spec, required=True, metavar="N|A..B")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--max-refine", type=int, default=None,
                   help="override the interval refinement budget")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("oracle-check",
                       help="compare exhaustive enumeration with the engine")
    p.add_argument("--n", type=parse_n_spec, required=True, metavar="N|A..B")
    p.add_argument("--parallelism", type=int, default=1)
    p.add_argument("--acknowledge-cost", action="store_true")
    p.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ClawgenusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
