"""Command-line entry point: ``vmtk {lrw,verify,delta,splitdec,minor}``.

Exit codes: 0 when every check passes, 1 when some check fails (or a
queried graph is not a Δ_k member), 2 on usage, parse or size errors.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
import time
from pathlib import Path

from .corpus import resolve_seed
from .delta import (
    DeltaCertificate,
    block_code,
    classify_type,
    count_delta,
    enumerate_delta,
    enumerate_rooted_delta,
    recognize_delta,
)
from .formats import FormatError, read_graphs, to_graph6, write_edgelist, write_marked
from .graph import Graph, components, is_connected
from .rankwidth import EXACT_MAX_N, BudgetExceeded, linear_rankwidth_exact, lrw_at_most
from .splitdec import canonical_decomposition, classify_bags, split_decomposition, to_dot
from .verify import SUITES, run_suite
from .vertexminor import apply_steps

EXIT_PASS, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _load(args: argparse.Namespace) -> list[Graph]:
    if not args.input:
        raise UsageError("--input is required")
    return read_graphs(args.input, args.format)


def _labels(g: Graph, layout) -> str:
    return " ".join(g.labels[v] for v in layout)


def cmd_lrw(args: argparse.Namespace) -> int:
    status = EXIT_PASS
    for i, g in enumerate(_load(args)):
        if i:
            print()
        if args.decide is not None:
            ok, layout = lrw_at_most(g, args.decide)
            print(f"lrw <= {args.decide}: {'yes' if ok else 'no'}")
            if layout is not None:
                print(f"layout: {_labels(g, layout)}")
            continue
        if g.n > EXACT_MAX_N:
            raise UsageError(
                f"graph has {g.n} vertices; exact mode handles at most {EXACT_MAX_N}, use --decide T"
            )
        width, layout = linear_rankwidth_exact(g)
        print(f"lrw = {width}")
        print(f"layout: {_labels(g, layout)}")
    return status


def cmd_verify(args: argparse.Namespace) -> int:
    seed = resolve_seed(args.seed)
    started = time.perf_counter()
    rep = run_suite(args.target, args.k, seed, args.jobs)
    print(f"# vmtk verify {args.target}" + (f" --k {args.k}" if args.k is not None else ""))
    print(f"# seed {seed}")
    for line in rep.lines():
        print(line)
    for note in rep.notes:
        print(f"# {note}")
    print(rep.summary())
    if args.timing:
        print(f"wall-clock {time.perf_counter() - started:.2f}s", file=sys.stderr)
    return EXIT_PASS if rep.ok else EXIT_FAIL


def _certificate_lines(cert: DeltaCertificate, depth: int = 0) -> list[str]:
    g = cert.graph
    pad = "  " * depth
    if cert.k == 0:
        a, b = sorted(cert.vertices)
        return [f"{pad}Delta_0 thick edge {g.labels[a]} {g.labels[b]}"]
    assert cert.triangle is not None
    tri = " ".join(g.labels[v] for v in cert.triangle)
    out = [f"{pad}Delta_{cert.k} main triangle {tri}"]
    for part in cert.parts:
        out += _certificate_lines(part, depth + 1)
    return out


def cmd_delta(args: argparse.Namespace) -> int:
    if args.action == "count":
        if args.k is None:
            raise UsageError("delta count needs --k")
        for name, value in count_delta(args.k).rows():
            print(f"{name} = {'-' if value is None else value}")
        return EXIT_PASS
    if args.action == "enumerate":
        if args.k is None:
            raise UsageError("delta enumerate needs --k")
        if args.rooted:
            for i, r in enumerate(enumerate_rooted_delta(args.k)):
                print(f"# rooted {i}: root {r.graph.labels[r.root]} (index {r.root})")
                print(to_graph6(r.graph))
        else:
            for i, g in enumerate(enumerate_delta(args.k)):
                cert = recognize_delta(g)
                assert cert is not None
                tag = classify_type(cert).tag if cert.k else "-"
                print(f"# member {i}: type {tag}, {g.n} vertices, code {hash_code(block_code(g))}")
                print(to_graph6(g))
        return EXIT_PASS
    status = EXIT_PASS
    for g in _load(args):
        cert = recognize_delta(g)
        if cert is None:
            print("not a member")
            status = EXIT_FAIL
            continue
        line = f"member of Delta_{cert.k}"
        if cert.k:
            line += f", type {classify_type(cert).tag}"
        print(line)
        print("\n".join(_certificate_lines(cert)))
    return status


def hash_code(code: tuple) -> str:
    """Short stable digest of a nested code for display."""
    return hashlib.sha256(repr(code).encode()).hexdigest()[:12]


def cmd_splitdec(args: argparse.Namespace) -> int:
    graphs = _load(args)
    for i, g in enumerate(graphs):
        if is_connected(g):
            parts = [g]
        elif args.per_component:
            parts = [g.induced(v for v in range(g.n) if (c >> v) & 1) for c in components(g)]
        else:
            raise UsageError("input is disconnected; pass --per-component to decompose each component")
        for j, h in enumerate(parts):
            d = canonical_decomposition(h, args.seed) if args.canonical else split_decomposition(h, args.seed)
            if len(graphs) > 1 or len(parts) > 1:
                print(f"# graph {i} component {j}")
            kinds = [k.kind for _, k in classify_bags(d)]
            print(f"# bags {len(kinds)}: " + " ".join(f"{kinds.count(x)} {x}" for x in ("prime", "star", "complete")))
            sys.stdout.write(write_marked(d))
            if args.emit_dot:
                path = Path(args.emit_dot)
                if len(graphs) > 1 or len(parts) > 1:
                    path = path.with_name(f"{path.stem}-{i}-{j}{path.suffix}")
                path.write_text(to_dot(d))
    return EXIT_PASS


def cmd_minor(args: argparse.Namespace) -> int:
    graphs = _load(args)
    if len(graphs) != 1:
        raise UsageError("minor expects exactly one input graph")
    h = apply_steps(graphs[0], args.step or [])
    print("# labels " + " ".join(h.labels))
    sys.stdout.write(write_edgelist(h))
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vmtk", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def io(p: argparse.ArgumentParser) -> None:
        p.add_argument("--input", help="graph file (.g6 for graph6, else edge list)")
        p.add_argument("--format", choices=("edgelist", "g6"), help="override format detection")

    p = sub.add_parser("lrw", help="linear rank-width with a witness layout")
    io(p)
    p.add_argument("--decide", type=int, metavar="T", help="only decide lrw <= T")
    p.set_defaults(func=cmd_lrw)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("target", help=f"one of {', '.join(SUITES)}; excluded-K style is accepted")
    p.add_argument("--k", type=int)
    p.add_argument("--seed", type=int, help="corpus seed (default $VMTK_SEED or built-in)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="print wall-clock time to stderr")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("delta", help="the Δ_k family")
    p.add_argument("action", choices=("enumerate", "count", "recognize"))
    p.add_argument("--k", type=int)
    p.add_argument("--rooted", action="store_true")
    io(p)
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("splitdec", help="split decompositions in marked-graph text format")
    io(p)
    p.add_argument("--canonical", action="store_true")
    p.add_argument("--seed", type=int, help="randomise split choices")
    p.add_argument("--emit-dot", metavar="PATH")
    p.add_argument("--per-component", action="store_true")
    p.set_defaults(func=cmd_splitdec)

    p = sub.add_parser("minor", help="replay vertex-minor steps and print the result")
    io(p)
    p.add_argument("--step", action="append", metavar="STEP", help='"L v", "P u v" or "D v"')
    p.set_defaults(func=cmd_minor)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FormatError, ValueError, KeyError, OSError, BudgetExceeded) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
