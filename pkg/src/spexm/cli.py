"""Command-line entry point.

Subcommands: family, rho, certify, enum, search, verify, scan, witness,
audit.  All numeric output is printed to 15 significant digits; reports are
JSON lines with a schema version; identical argv (and seed) give
byte-identical primary output, with wall-time kept in a separate meta field.

Exit codes: 0 success/PASS, 2 violations or conjecture findings, 3 refused
(cost cap), 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__, graph6
from .canon import canonical_form
from .enumeration import EnumConstraints, enumerate_by_edges
from .graphs import (
    FamilySpec,
    Graph,
    GraphError,
    bits,
    book,
    complete_bipartite,
    complete_split,
    ct_plus,
    cycle,
    hts_rk,
    k1r_bullet_rk,
    build_family,
    path,
    rk,
    snk,
    star,
    stats,
)
from .patterns import parse_pattern
from .search import SearchConfig, maximize_rho
from .spectra import (
    SpectraError,
    certify_quadratic_eigenfactor,
    certify_rho_equals_sqrt,
    char_poly,
    family_rho_closed_form,
    spectral_radius,
)
from .verify import (
    CostCapError,
    Report,
    TheoremId,
    check_theorem,
    extremal_structure_audit,
    parse_theorem_id,
    scan_conjecture,
    thm15_witness,
)

EXIT_OK = 0
EXIT_VIOLATIONS = 2
EXIT_REFUSED = 3
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def sig15(x: float) -> str:
    return format(float(x), ".15g")


def parse_family_text(text: str) -> FamilySpec:
    """Family grammar: S:n:k, CS:n:k, B:r, K:s:t, R:k, H:t:s:k[:a-b,...],
    KB:r:k, C:t, C+:t, P:v, star:m."""
    parts = text.strip().split(":")
    tag = parts[0]
    args = parts[1:]
    try:
        ints = [int(a) for a in args if "-" not in a]
        if tag == "S":
            return snk(*ints)
        if tag == "star":
            return star(*ints)
        if tag == "CS":
            return complete_split(*ints)
        if tag == "B":
            return book(*ints)
        if tag == "K":
            return complete_bipartite(*ints)
        if tag == "R":
            return rk(*ints)
        if tag == "KB":
            return k1r_bullet_rk(*ints)
        if tag == "C":
            return cycle(*ints)
        if tag == "C+":
            return ct_plus(*ints)
        if tag == "P":
            return path(*ints)
        if tag == "H":
            edges = []
            if len(args) == 4:
                edges = [tuple(int(x) for x in e.split("-")) for e in args[3].split(",") if e]
            return hts_rk(ints[0], ints[1], ints[2], edges)
    except (TypeError, ValueError) as exc:
        raise GraphError(f"bad family spec {text!r}: {exc}") from None
    raise GraphError(
        f"bad family spec {text!r}; expected one of S:n:k, CS:n:k, B:r, K:s:t, "
        "R:k, H:t:s:k[:a-b,...], KB:r:k, C:t, C+:t, P:v, star:m"
    )


def _parse_m_range(text: str) -> list[int]:
    out = []
    for chunk in text.split(","):
        if ".." in chunk:
            a, b = chunk.split("..")
            out.extend(range(int(a), int(b) + 1))
        else:
            out.append(int(chunk))
    return sorted(set(out))


def _read_graphs(args) -> list[Graph]:
    if args.g6:
        return [graph6.parse_graph6(args.g6)]
    return [graph6.parse_graph6(line.strip()) for line in sys.stdin if line.strip()]


def _open_out(args):
    if args.out and args.out != "-":
        return open(args.out, "w")
    return sys.stdout


def build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-12,
                        help="residual tolerance (default 1e-12)")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker count for sharded verification (default: cores)")
    common.add_argument("--seed", type=int, default=0, help="search seed (default 0)")
    common.add_argument("--out", default="-", help="output file (default stdout)")
    common.add_argument("--format", choices=("json", "csv", "g6", "text"), default="text")

    p = _Parser(prog="spexm", description=__doc__, parents=[common])
    p.add_argument("--version", action="version", version=f"spexm {__version__}")
    sub = p.add_subparsers(dest="cmd", required=True)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    f = add("family", help="build a named family graph (bound tightness anchors)")
    f.add_argument("--spec", required=True, help="e.g. S:7:3, B:4, K:3:3, H:1:0:1")
    f.add_argument("--rho", action="store_true", help="print spectral radius + exact certification")
    f.add_argument("--stats", action="store_true")

    r = add("rho", help="spectral radius with certified residual")
    r.add_argument("--g6", help="graph6 string (default: read lines from stdin)")
    r.add_argument("--perron", action="store_true", help="also print the Perron vector")

    c = add("certify", help="exact algebraic certification")
    c.add_argument("--g6", required=True)
    c.add_argument("--sqrt", action="store_true", help="decide rho = sqrt(m) exactly")
    c.add_argument("--quadratic", nargs=2, type=int, metavar=("P", "Q"),
                   help="remainder of char_poly modulo x^2 - P x - Q")
    c.add_argument("--charpoly", action="store_true")

    e = add("enum", help="isomorph-free enumeration at fixed edge count")
    e.add_argument("--edges", type=int, required=True)
    e.add_argument("--forbid", action="append", default=[], help="pattern, e.g. C5, C4+, K2,4, B3")
    e.add_argument("--connected", action="store_true")
    e.add_argument("--max-vertices", type=int, default=None)

    s = add("search", help="hill-climb max rho over F-free graphs")
    s.add_argument("--edges", type=int, required=True)
    s.add_argument("--forbid", action="append", default=[])
    s.add_argument("--restarts", type=int, default=20)
    s.add_argument("--max-steps", type=int, default=10_000)

    v = add("verify", help="run a theorem check over an m range")
    v.add_argument("--theorem", required=True, help="T1.1:r=2 T1.2 T1.3i:r=2 T1.3ii "
                                                    "T1.4C5 T1.4C6 T1.5:k=1 L5.1 L5.2 L5.4 R2.1 R4.1")
    v.add_argument("--m", default=None, help="range, e.g. 10..12 or 9,11")
    v.add_argument("--mode", choices=("exhaustive", "search"), default="exhaustive")
    v.add_argument("--cap", type=int, default=14, help="exhaustive refusal cap (default 14)")
    v.add_argument("--restarts", type=int, default=20, help="search-mode restarts")

    sc = add("scan", help="conjecture counterexample scanner")
    sc.add_argument("--conjecture", required=True, choices=("6.1", "6.2"))
    sc.add_argument("--r", type=int, default=None)
    sc.add_argument("--k", type=int, default=None)
    sc.add_argument("--m", required=True)
    sc.add_argument("--cap", type=int, default=14)

    w = add("witness", help="consecutive-cycles witness extraction")
    w.add_argument("--g6", required=True)
    w.add_argument("--k", type=int, required=True)

    a = add("audit", help="extremal-graph structural audit")
    a.add_argument("--g6", required=True)
    a.add_argument("--forbid", action="append", default=[])
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _dispatch(args)
    except CostCapError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (GraphError, SpectraError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _dispatch(args) -> int:
    out = _open_out(args)
    try:
        return _run(args, out)
    finally:
        if out is not sys.stdout:
            out.close()


def _run(args, out) -> int:
    if args.cmd == "family":
        spec = parse_family_text(args.spec)
        G = build_family(spec)
        print(graph6.write_graph6(G), file=out)
        if args.stats:
            st = stats(G)
            st["components"] = [sorted(bits(c)) for c in st["components"]]
            st["cut_vertices"] = sorted(bits(st["cut_vertices"]))
            print(json.dumps(st, sort_keys=True), file=out)
        if args.rho:
            cert = spectral_radius(G, args.tol)
            print(f"rho = {sig15(cert.rho)}  residual = {cert.residual:.3e}", file=out)
            try:
                cf = family_rho_closed_form(spec)
                print(f"closed_form = {sig15(cf)}", file=out)
            except SpectraError:
                pass
            sq = certify_rho_equals_sqrt(G)
            print(f"rho_equals_sqrt_m_exactly = {str(sq.is_exact).lower()}", file=out)
        return EXIT_OK

    if args.cmd == "rho":
        for G in _read_graphs(args):
            cert = spectral_radius(G, args.tol)
            line = (f"rho = {sig15(cert.rho)}  residual = {cert.residual:.3e}  "
                    f"iterations = {cert.iterations}  component = {cert.component}")
            print(line, file=out)
            if args.perron:
                print("perron = [" + ", ".join(sig15(x) for x in cert.perron) + "]", file=out)
        return EXIT_OK

    if args.cmd == "certify":
        G = graph6.parse_graph6(args.g6)
        if args.charpoly:
            print("charpoly_coeffs_low_to_high = " + str(list(char_poly(G).coeffs)), file=out)
        if args.quadratic:
            p_, q_ = args.quadratic
            cert = certify_quadratic_eigenfactor(G, p_, q_)
            print(f"remainder = ({cert.remainder[0]}, {cert.remainder[1]})", file=out)
            print(f"divides = {str(cert.divides).lower()}", file=out)
            print(f"rho_matches_larger_root = {str(cert.rho_matches_root).lower()}", file=out)
        if args.sqrt or not (args.quadratic or args.charpoly):
            sq = certify_rho_equals_sqrt(G)
            print(f"rho_equals_sqrt_m_exactly = {str(sq.is_exact).lower()}", file=out)
        return EXIT_OK

    if args.cmd == "enum":
        forbid = tuple(parse_pattern(t) for t in args.forbid)
        c = EnumConstraints(m=args.edges, forbid=forbid, connected_only=args.connected,
                            max_vertices=args.max_vertices)
        lines: list[str] = []
        enumerate_by_edges(c, lambda G: lines.append(graph6.write_graph6(G)))
        for line in sorted(lines):
            print(line, file=out)
        print(f"classes = {len(lines)}", file=sys.stderr)
        return EXIT_OK

    if args.cmd == "search":
        forbid = tuple(parse_pattern(t) for t in args.forbid)
        cfg = SearchConfig(m=args.edges, forbid=forbid, restarts=args.restarts,
                           max_steps=args.max_steps, seed=args.seed)
        res = maximize_rho(cfg)
        print(graph6.write_graph6(res.best), file=out)
        payload = {
            "schema": 1,
            "rho": res.rho,
            "canonical": canonical_form(res.best),
            "restarts": res.restarts_run,
            "trace": [{"restart": r, "step": s, "rho": rho} for r, s, rho in res.trace],
        }
        print(json.dumps(payload, sort_keys=True), file=out)
        return EXIT_OK

    if args.cmd == "verify":
        tid = parse_theorem_id(args.theorem)
        m_range = _parse_m_range(args.m) if args.m else [1]
        reports = check_theorem(tid, m_range, args.mode, threads=args.threads,
                                cap=args.cap, restarts=args.restarts, seed=args.seed)
        return _emit_reports(reports, out)

    if args.cmd == "scan":
        tid = TheoremId("CONJ" + args.conjecture, r=args.r, k=args.k)
        reports = scan_conjecture(tid, _parse_m_range(args.m), threads=args.threads,
                                  cap=args.cap)
        return _emit_reports(reports, out)

    if args.cmd == "witness":
        G = graph6.parse_graph6(args.g6)
        w = thm15_witness(G, args.k)
        if w is None:
            print("none (rho does not exceed the threshold)", file=out)
        else:
            print(json.dumps({
                "j_star": w.j_star,
                "f_column_sums": list(w.f_column_sums),
                "path": list(w.path),
                "cycles": {str(t): list(cyc) for t, cyc in w.cycles.items()},
            }, sort_keys=True), file=out)
        return EXIT_OK

    if args.cmd == "audit":
        G = graph6.parse_graph6(args.g6)
        forbid = tuple(parse_pattern(t) for t in args.forbid)
        results = extremal_structure_audit(G, forbid)
        for res in results:
            print(json.dumps(res, sort_keys=True), file=out)
        return EXIT_OK if all(r["passed"] for r in results if r["applicable"]) else EXIT_VIOLATIONS

    raise AssertionError(f"unhandled command {args.cmd}")


def _emit_reports(reports: list[Report], out) -> int:
    bad = False
    for rep in reports:
        print(rep.to_json(), file=out)
        if rep.status in ("VIOLATIONS", "FINDINGS"):
            bad = True
    return EXIT_VIOLATIONS if bad else EXIT_OK


def console_entry() -> None:
    raise SystemExit(main())
