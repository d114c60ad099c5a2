"""Command-line entry point.

Exit codes: 0 success, 1 a verification did not match, 2 usage or input
error, 3 internal failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Any

from . import __version__
from .census import DEFAULT_MAX_N, default_threads
from .connectivity import digraph_essential_connectivity, essential_connectivity, vertex_connectivity
from .errors import (
    ConstructionInfeasible,
    InvalidArgument,
    NotConnectedError,
    ParseError,
    PreconditionError,
    UnsupportedError,
)
from .extremal import theorem1_extremal, theorem2_extremal, theorem3_extremal
from .formats import (
    parse_digraph6,
    parse_edge_list,
    parse_graph6,
    write_digraph6,
    write_edge_list,
    write_graph6,
)
from .graphs import Digraph, Graph, iter_bits
from .spectral import DEFAULT_TOL, graph_spectral_radius
from .verify import (
    DEFAULT_SEED,
    VerificationReport,
    check_arc_monotonicity,
    check_edge_monotonicity,
    verify_arc_lemma,
    verify_balancing_lemma,
    verify_discriminant_lemma,
    verify_edge_lemma,
    verify_theorem1,
    verify_theorem2,
    verify_theorem3_family,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
_SUFFIX_FORMAT = {".el": "el", ".txt": "el", ".g6": "g6", ".d6": "d6"}


def dumps(obj: Any, indent: int | None = 2) -> str:
    """JSON text with every float written to 17 significant digits."""

    def enc(value: Any, depth: int) -> str:
        pad = "" if indent is None else "\n" + " " * (indent * (depth + 1))
        end = "" if indent is None else "\n" + " " * (indent * depth)
        sep = ", " if indent is None else ","
        if isinstance(value, bool) or value is None or isinstance(value, str):
            return json.dumps(value)
        if isinstance(value, int):
            return str(int(value))
        if isinstance(value, float):
            return format(value, ".17g") if math.isfinite(value) else "null"
        if isinstance(value, dict):
            if not value:
                return "{}"
            items = [pad + json.dumps(str(k)) + ": " + enc(v, depth + 1) for k, v in value.items()]
            return "{" + sep.join(items) + end + "}"
        if isinstance(value, (list, tuple)):
            if not value:
                return "[]"
            return "[" + sep.join(pad + enc(v, depth + 1) for v in value) + end + "]"
        if hasattr(value, "item"):
            return enc(value.item(), depth)
        raise TypeError(f"cannot serialise {type(value).__name__}")

    return enc(obj, 0)


# -- input ----------------------------------------------------------------


def _load(path: str, fmt: str | None) -> Graph | Digraph:
    p = Path(path)
    fmt = fmt or _SUFFIX_FORMAT.get(p.suffix)
    if fmt is None:
        raise InvalidArgument(f"cannot infer format of {path}; pass --format")
    data = p.read_bytes()
    if fmt == "el":
        return parse_edge_list(data)
    if fmt == "g6":
        return parse_graph6(data)
    return parse_digraph6(data)


def _encode(g: Graph | Digraph, fmt: str) -> str:
    if fmt == "el":
        return write_edge_list(g).decode("ascii").rstrip("\n")
    if fmt == "g6":
        if not isinstance(g, Graph):
            raise InvalidArgument("graph6 holds undirected graphs only; use d6")
        return write_graph6(g).decode("ascii")
    return write_digraph6(g if isinstance(g, Digraph) else Digraph.from_graph(g)).decode("ascii")


def _emit(args: argparse.Namespace, payload: dict[str, Any], human: str) -> None:
    print(dumps(payload) if args.json else human)


# -- subcommands ----------------------------------------------------------


def cmd_spectrum(args: argparse.Namespace) -> int:
    g = _load(args.file, args.format)
    res = graph_spectral_radius(g, args.tol)
    payload = {"n": g.n, "directed": isinstance(g, Digraph), "lambda1": res.lambda1,
               "lower": res.lower, "upper": res.upper, "iterations": res.iterations,
               "residual": res.residual, "perron": [float(x) for x in res.perron]}
    # spectrum always answers in JSON; --json only toggles indentation
    print(dumps(payload, indent=2 if args.json else None))
    return EXIT_OK


def cmd_essconn(args: argparse.Namespace) -> int:
    g = _load(args.file, args.format)
    cert = essential_connectivity(g) if isinstance(g, Graph) else digraph_essential_connectivity(g)
    if cert is None:
        _emit(args, {"essential_connectivity": None, "defined": False},
              "essential connectivity: undefined (no essential cut exists)")
        return EXIT_OK
    blocks = [sorted(iter_bits(b)) for b in cert.partition.blocks]
    payload = {"essential_connectivity": cert.size, "defined": True, "cut": sorted(cert.cut),
               "components": blocks, "nontrivial_blocks": list(cert.nontrivial_blocks)}
    _emit(args, payload, f"essential connectivity: {cert.size}\ncut: {sorted(cert.cut)}\ncomponents: {blocks}")
    return EXIT_OK


def cmd_vconn(args: argparse.Namespace) -> int:
    g = _load(args.file, args.format)
    if not isinstance(g, Graph):
        raise UnsupportedError("vconn handles undirected graphs only")
    k = vertex_connectivity(g)
    _emit(args, {"vertex_connectivity": k}, f"vertex connectivity: {k}")
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    if args.family == "thm1":
        g = theorem1_extremal(args.n, _need(args, "kappa"))
    elif args.family == "thm2":
        g = theorem2_extremal(args.n, _need(args, "kappa"), _need(args, "delta"))
    else:
        g = theorem3_extremal(args.n, _need(args, "k"), _need(args, "n1"))
    fmt = args.out or ("g6" if isinstance(g, Graph) else "d6")
    print(_encode(g, fmt))
    return EXIT_OK


def _need(args: argparse.Namespace, name: str) -> int:
    value = getattr(args, name)
    if value is None:
        raise InvalidArgument(f"--{name.replace('_', '-')} is required here")
    return value


def _report_text(r: VerificationReport) -> str:
    lines = [f"{r.claim} {r.parameters}",
             f"  candidates examined: {r.candidates_examined}",
             f"  extremal matches: {r.extremal_matches}   uniqueness: {r.uniqueness}"]
    if r.min_lambda1 is not None:
        lines.append(f"  min lambda1: {r.min_lambda1.value:.12f} "
                     f"[{r.min_lambda1.lower!r}, {r.min_lambda1.upper!r}]")
    if r.minimizer_canonical is not None:
        lines.append(f"  minimizer: {r.minimizer_canonical}   construction: {r.construction_canonical}")
    if r.flags:
        lines.append(f"  flags: {', '.join(r.flags)}")
    lines.append(f"  runtime: {r.runtime_ms} ms")
    return "\n".join(lines)


def cmd_verify(args: argparse.Namespace) -> int:
    claim = args.claim
    common = {"tol": args.tol}
    if claim == "thm1":
        report = verify_theorem1(_need(args, "n"), _need(args, "kappa"), threads=args.threads,
                                 max_n=args.max_n, **common)
    elif claim == "thm2":
        report = verify_theorem2(_need(args, "n"), _need(args, "kappa"), _need(args, "delta"),
                                 threads=args.threads, max_n=args.max_n, **common)
    elif claim == "thm3":
        report = verify_theorem3_family(_need(args, "n"), _need(args, "k"), samples=args.samples,
                                        seed=args.seed, **common)
    elif claim == "lemma-edge" and args.file:
        return _single_check(args, "edge")
    elif claim == "lemma-edge":
        report = verify_edge_lemma(args.trials, args.seed, **common)
    elif claim == "lemma-arc" and args.file:
        return _single_check(args, "arc")
    elif claim == "lemma-arc":
        report = verify_arc_lemma(args.trials, args.seed, **common)
    elif claim == "lemma-balance":
        if args.parts:
            from .verify import check_balancing_lemma
            ok = check_balancing_lemma(_need(args, "s"), args.parts, args.p, args.tol)
            _emit(args, {"claim": "LEMMA-BALANCE", "s": args.s, "parts": args.parts, "p": args.p,
                         "holds": ok}, f"balancing lemma holds: {ok}")
            return EXIT_OK if ok else EXIT_MISMATCH
        report = verify_balancing_lemma(p=args.p, **common)
    else:
        report = verify_discriminant_lemma(args.n, args.k)
    _emit(args, report.to_dict(), _report_text(report))
    return EXIT_OK if report.extremal_matches else EXIT_MISMATCH


def _single_check(args: argparse.Namespace, kind: str) -> int:
    g = _load(args.file, args.format)
    if args.edge is None:
        raise InvalidArgument(f"--edge U V is required with --file for lemma-{kind}")
    pair = (args.edge[0], args.edge[1])
    if kind == "edge":
        if not isinstance(g, Graph):
            raise UnsupportedError("lemma-edge needs an undirected graph")
        ok = check_edge_monotonicity(g, pair, args.tol)
    else:
        d = g if isinstance(g, Digraph) else Digraph.from_graph(g)
        ok = check_arc_monotonicity(d, pair, args.tol)
    _emit(args, {"claim": f"LEMMA-{kind.upper()}", "pair": list(pair), "holds": ok},
          f"strict monotonicity holds: {ok}")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_convert(args: argparse.Namespace) -> int:
    g = _load(args.file, args.format)
    print(_encode(g, args.to))
    return EXIT_OK


# -- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--file", help="input graph file")
    common.add_argument("--format", choices=["el", "g6", "d6"], help="input format (default: by suffix)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=default_threads(),
                        help="worker threads for enumeration (default: $ESSSPEC_THREADS or 1)")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="relative enclosure width")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized campaigns")
    common.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="enumeration size guard")

    parser = argparse.ArgumentParser(prog="essspec", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, helptext in [("spectrum", cmd_spectrum, "distance spectral radius of a graph file"),
                               ("essconn", cmd_essconn, "essential connectivity with certificate"),
                               ("vconn", cmd_vconn, "vertex connectivity")]:
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.set_defaults(func=fn, needs_file=True)

    p = sub.add_parser("construct", parents=[common], help="build an extremal graph")
    p.add_argument("family", choices=["thm1", "thm2", "thm3"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kappa", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--n1", type=int)
    p.add_argument("--out", choices=["el", "g6", "d6"])
    p.set_defaults(func=cmd_construct, needs_file=False)

    p = sub.add_parser("verify", parents=[common], help="run a verification")
    p.add_argument("claim", choices=["thm1", "thm2", "thm3", "lemma-edge", "lemma-arc",
                                     "lemma-balance", "lemma-f"])
    p.add_argument("--n", type=int)
    p.add_argument("--kappa", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--edge", type=int, nargs=2, metavar=("U", "V"))
    p.add_argument("--s", type=int)
    p.add_argument("--parts", type=int, nargs="+")
    p.add_argument("--p", type=int, default=2)
    p.set_defaults(func=cmd_verify, needs_file=False)

    p = sub.add_parser("convert", parents=[common], help="convert between file formats")
    p.add_argument("--to", choices=["el", "g6", "d6"], required=True)
    p.set_defaults(func=cmd_convert, needs_file=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.needs_file and not args.file:
        parser.print_usage(sys.stderr)
        print(f"essspec {args.command}: --file is required", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (ParseError, InvalidArgument, NotConnectedError, PreconditionError,
            UnsupportedError, ConstructionInfeasible, OSError) as exc:
        print(f"essspec: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001 - must never map to 0 or 1
        print(f"essspec: internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
