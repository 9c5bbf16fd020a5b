"""Command-line front end: ``abs-spectra <subcommand> ...``.

Exit codes: 0 success, 1 a verification failed, 2 bad usage or input.
graph6 is the pipe format on stdin and stdout.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Optional, Sequence, TextIO

from . import families, verify
from .enumeration import enumerate_class
from .errors import AbsSpectraError
from .graph_core import ClassSpec, Graph, graph6_encode, read_graph6_lines
from .spectral import abs_matrix, adjacency_matrix, factorization_discrepancy, graph_spectrum
from .transforms import kelmans

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CLASSES = {
    "bip-unicyclic": dict(cycle_rank=1, bipartite=True),
    "bicyclic": dict(cycle_rank=2),
}
_FILTER = re.compile(r"^(girth|diam|pendants)\s*(=|<=)\s*(\d+)$")


class UsageError(Exception):
    pass


def _precision(value: str) -> int:
    p = int(value)
    if not 1 <= p <= 12:
        raise argparse.ArgumentTypeError("precision must be between 1 and 12")
    return p


def _n_range(value: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(\d+)\s*\.\.\s*(\d+)\s*", value)
    if not m:
        raise argparse.ArgumentTypeError(f"expected a..b, got {value!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {value!r}")
    return lo, hi


def _class_spec(name: str, n: int, filters: Optional[str] = None) -> ClassSpec:
    fields: dict = dict(CLASSES[name])
    for part in (filters or "").split(","):
        part = part.strip()
        if not part:
            continue
        m = _FILTER.match(part)
        if not m:
            raise UsageError(f"bad filter {part!r}; expected girth=K, diam<=K or pendants=K")
        key, op, val = m.group(1), m.group(2), int(m.group(3))
        if key == "diam":
            fields["diameter_max" if op == "<=" else "diameter_eq"] = val
        elif op != "=":
            raise UsageError(f"{key} only supports '='")
        else:
            fields["girth_eq" if key == "girth" else "pendant_eq"] = val
    return ClassSpec(n=n, **fields)


def _stdin_graphs(stdin: TextIO) -> list[Graph]:
    graphs = list(read_graph6_lines(stdin))
    if not graphs:
        raise UsageError("no graph6 input on stdin")
    return graphs


def _fmt(x: float, precision: int) -> str:
    return f"{x:.{precision}f}"


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------


def cmd_family(args, out: TextIO, stdin: TextIO) -> int:
    G = families.build_family(args.token)
    if args.format == "g6":
        print(graph6_encode(G), file=out)
    else:
        print(" ".join(f"{u}-{v}" for u, v in G.edges), file=out)
    return EXIT_OK


def cmd_spectral(args, out: TextIO, stdin: TextIO) -> int:
    what = args.what
    claim = None
    if what.startswith("charpoly-check:"):
        claim = what.split(":", 1)[1].lower()
        if claim not in families.CHARPOLY_CLAIMS:
            raise UsageError(f"unknown factorization {claim!r}; choose from {sorted(families.CHARPOLY_CLAIMS)}")
        kind = families.CHARPOLY_CLAIMS[claim][1]
        if args.matrix != kind:
            raise UsageError(f"the {claim} factorization is about the {kind} matrix")
    elif what not in ("radius", "spectrum"):
        raise UsageError(f"--what must be radius, spectrum or charpoly-check:<name>, got {what!r}")
    graphs = [families.build_family(args.family)] if args.family else _stdin_graphs(stdin)

    status = EXIT_OK
    for G in graphs:
        if claim is not None:
            M = abs_matrix(G) if args.matrix == "abs" else adjacency_matrix(G)
            gap = factorization_discrepancy(M, families.charpoly_factors(claim, G.n))
            ok = gap <= verify.FACTOR_TOL
            print(f"{'pass' if ok else 'fail'} max_discrepancy={gap:.3e}", file=out)
            if not ok:
                status = EXIT_FAIL
            continue
        spectrum = graph_spectrum(G, args.matrix)
        if what == "radius":
            print(_fmt(spectrum.radius, args.precision), file=out)
        else:
            print(" ".join(_fmt(v, args.precision) for v in spectrum.values), file=out)
    return status


def cmd_enumerate(args, out: TextIO, stdin: TextIO) -> int:
    spec = _class_spec(args.cls, args.n, args.filter)
    # The cap check runs before the first graph is yielded, so nothing is printed on exit 2.
    for G in enumerate_class(spec):
        print(graph6_encode(G), file=out)
    return EXIT_OK


def cmd_top(args, out: TextIO, stdin: TextIO) -> int:
    if args.k < 1:
        raise UsageError("--k must be at least 1")
    spec = _class_spec(args.cls, args.n)
    results = verify.top_k(spec, args.k)
    print(f"{'rank':>4}  {'eta1':>{args.precision + 3}}  {'margin':>10}  graph6", file=out)
    for r in results:
        print(f"{r.rank:>4}  {_fmt(r.value, args.precision)}  {r.margin_to_next:>10.3e}  {r.graph}", file=out)
    return EXIT_OK


def cmd_kelmans(args, out: TextIO, stdin: TextIO) -> int:
    for G in _stdin_graphs(stdin):
        print(graph6_encode(kelmans(G, args.u, args.v)), file=out)
    return EXIT_OK


def cmd_verify(args, out: TextIO, stdin: TextIO) -> int:
    if args.check == "all":
        jobs = []
        for check_id, spec in verify.CATALOG.items():
            if args.profile == "quick" and spec.profile != "quick":
                continue
            lo, hi = spec.default_range
            if args.n_range:
                lo, hi = max(lo, args.n_range[0]), min(hi, args.n_range[1])
                if lo > hi:
                    continue
            jobs.extend(verify.plan(check_id, (lo, hi), args.seed))
    else:
        if args.check not in verify.CATALOG:
            raise UsageError(f"unknown check {args.check!r}; known: {', '.join(verify.CATALOG)}")
        jobs = verify.plan(args.check, args.n_range, args.seed)
    reports = verify.run_jobs(jobs)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            for r in reports:
                fh.write(r.to_json() + "\n")
    print(verify.summarize(reports), file=out)
    return EXIT_FAIL if any(r.status == "fail" for r in reports) else EXIT_OK


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="abs-spectra", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("family", help="build a named graph family member")
    p.add_argument("token", help="e.g. h1:8, g2:12, binf:3,1,3, pstar:n=10,d=4,i=3")
    p.add_argument("--format", choices=("g6", "edges"), default="g6")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("spectral", help="spectral radius, spectrum, or a factorization check")
    p.add_argument("--family", help="family token; otherwise graph6 is read from stdin")
    p.add_argument("--matrix", choices=("abs", "adj"), default="abs")
    p.add_argument("--what", default="radius", help="radius | spectrum | charpoly-check:<zeta|phi|rho|psi|g1>")
    p.add_argument("--precision", type=_precision, default=6)
    p.set_defaults(func=cmd_spectral)

    p = sub.add_parser("enumerate", help="list a graph class as graph6, one per isomorphism class")
    p.add_argument("--class", dest="cls", choices=sorted(CLASSES), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--filter", help="comma list of girth=K, diam<=K, diam=K, pendants=K")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run verification checks and write a JSONL report")
    p.add_argument("--check", default="all", help="check id or 'all'")
    p.add_argument("--n-range", type=_n_range)
    p.add_argument("--profile", choices=("quick", "full"), default="quick")
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.add_argument("--out", help="JSONL output path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("top", help="the k largest ABS spectral radii in a class")
    p.add_argument("--class", dest="cls", choices=sorted(CLASSES), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--precision", type=_precision, default=6)
    p.set_defaults(func=cmd_top)

    p = sub.add_parser("kelmans", help="apply the Kelmans operation to graph6 read from stdin")
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.set_defaults(func=cmd_kelmans)
    return parser


def main(argv: Optional[Sequence[str]] = None, stdin: Optional[TextIO] = None, stdout: Optional[TextIO] = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, stdout, stdin)
    except (UsageError, AbsSpectraError, ValueError, KeyError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"abs-spectra: error: {message}", file=sys.stderr)
        return EXIT_USAGE
