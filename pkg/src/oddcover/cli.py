"""``oddcover`` command line.

Graphs are read from edge-list files, covers from JSON files or stdin.

Exit codes: 0 success / valid / found, 1 invalid / refuted, 2 timeout or
truncated output, 3 usage error or malformed input.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from collections.abc import Sequence

from . import constructions as cons
from .cover import CoverFormatError, OddCover, dumps, incidence_matrix, is_perfect, loads, lower_bound, verify
from .f2core import rank
from .gf import gf_new
from .graph import EdgeListError, Graph, complete_graph, cycle_graph, disjoint_union, empty_graph, even_cores, format_edge_list, parse_edge_list, rank_via_twins
from .properties import DEFAULT_SAMPLES, Report, even_clique_props, same_type_check, sdr_check, row_independence_check
from .search import NO, YES, SearchTimeout, b2_exact, has_cover_of_size, labels_graph, pairs_search

EXIT_OK, EXIT_FAIL, EXIT_TIMEOUT, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        raise UsageError(message)


# -- input helpers ------------------------------------------------------------


def _read_text(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str) -> Graph:
    try:
        return parse_edge_list(_read_text(path))
    except EdgeListError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _load_cover(path: str | None) -> OddCover:
    try:
        return loads(_read_text(path))
    except CoverFormatError as exc:
        raise UsageError(f"{path or '<stdin>'}: {exc}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _same_size(g: Graph, c: OddCover) -> None:
    if g.n != c.n:
        raise UsageError(f"cover has {c.n} vertices, graph has {g.n}")


# -- construct ------------------------------------------------------------------


def _base_for_field(p: int, m: int, base_path: str | None) -> OddCover:
    if base_path:
        return _load_cover(base_path)
    if p != 3:
        raise UsageError("field-lift needs --base unless the field has characteristic 3")
    # F_3^m vectors map to F_{3^m} elements through their coefficient lists.
    ctx = gf_new(3, m)
    tom = cons.tomon_cover(m)
    vectors = [v for v in itertools.product(range(3), repeat=m) if any(v)]
    return tom.relabel([ctx.element(v) - 1 for v in vectors], ctx.q - 1)


def _construct(args: argparse.Namespace) -> OddCover:
    name, params = args.name, args.params
    try:
        ints = [int(x) for x in params]
    except ValueError:
        raise UsageError(f"parameters must be integers, got {params}") from None

    def need(count: int) -> list[int]:
        if len(ints) != count:
            raise UsageError(f"{name} takes {count} integer parameter(s)")
        return ints

    if name == "double":
        if not args.graph:
            raise UsageError("double needs --graph")
        return cons.double_cover(_load_graph(args.graph))
    if name == "odd-clique":
        return cons.odd_clique_cover(*need(1))
    if name == "odd-clique-union":
        return cons.odd_clique_union_cover(ints)
    if name == "even-cycle":
        (length,) = need(1)
        if length % 2:
            raise UsageError("even-cycle takes an even cycle length")
        return cons.even_cycle_cover(length // 2)
    if name == "cycle-union":
        odd = [(x - 1) // 2 for x in ints if x % 2]
        even = [x // 2 for x in ints if x % 2 == 0]
        return cons.cycle_union_cover(odd, even)
    if name == "pairs-18mod24":
        return cons.pairs_to_cover(cons.pairs_18mod24(*need(1)))
    if name == "pairs-6mod24":
        return cons.pairs_to_cover(cons.pairs_6mod24(*need(1)))
    if name == "tomon":
        return cons.tomon_cover(*need(1))
    if name == "field-lift":
        p, m, k = need(3)
        ctx = gf_new(p, m)
        return cons.field_lift_cover(ctx, k, _base_for_field(p, m, args.base))
    raise UsageError(f"unknown construction {name!r}")


def cmd_construct(args: argparse.Namespace) -> int:
    try:
        c = _construct(args)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(dumps(c), args.out)
    return EXIT_OK


def cmd_graph(args: argparse.Namespace) -> int:
    kind, params = args.kind, args.params
    try:
        if kind == "labels":
            g = labels_graph(params)
        elif kind == "union":
            g = disjoint_union([_load_graph(p) for p in params])
        else:
            if len(params) != 1:
                raise UsageError(f"graph {kind} takes one vertex count")
            n = int(params[0])
            g = {"complete": complete_graph, "cycle": cycle_graph, "empty": empty_graph}[kind](n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(format_edge_list(g).rstrip("\n"), args.out)
    return EXIT_OK


# -- analysis -----------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    c = _load_cover(args.cover)
    _same_size(g, c)
    report = verify(g, c)
    if not report.valid:
        print(f"invalid: {len(report.violations)} violation(s)")
        for (u, v), parity in report.violations:
            want = "odd" if g.has_edge(u, v) else "even"
            print(f"  pair {u} {v}: covered {parity}, needs {want}")
        return EXIT_FAIL
    r = rank(g.adjacency())
    print(f"valid: {len(c)} bicliques, rank {r}")
    if args.perfect and not is_perfect(g, c):
        print(f"not perfect: {len(c)} bicliques, perfect needs {r // 2}")
        return EXIT_FAIL
    if args.perfect:
        print("perfect")
    return EXIT_OK


def cmd_rank(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    r = rank_via_twins(g) if args.twins else rank(g.adjacency())
    lb = lower_bound(g)
    print(f"rank {r}")
    print(f"lower bound {lb.value} ({lb.reason})")
    if lb.obstruction is not None:
        print("obstruction " + " ".join(map(str, lb.obstruction)))
    return EXIT_OK


def cmd_even_cores(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    cores = even_cores(g, args.cap)
    print(f"kernel dimension {cores.dimension}")
    for s in cores.sets:
        print(" ".join(map(str, s)))
    if cores.truncated:
        print(f"truncated: dimension exceeds cap {args.cap}")
        return EXIT_TIMEOUT
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    if args.k is not None:
        res = has_cover_of_size(g, args.k, args.budget_seconds, args.threads)
        print(f"k={args.k}: {res.status} ({res.nodes} nodes)")
        if res.status == YES:
            if args.labels:
                print("labels " + " ".join(res.labels))
            if args.out:
                _emit(dumps(res.cover), args.out)
            return EXIT_OK
        return EXIT_FAIL if res.status == NO else EXIT_TIMEOUT
    try:
        res = b2_exact(g, args.budget_seconds, args.threads, args.max_k)
    except SearchTimeout as exc:
        print(f"timeout: b2 in [{exc.lower}, {exc.upper}]")
        return EXIT_TIMEOUT
    except LookupError as exc:
        print(f"refuted: {exc}")
        return EXIT_FAIL
    print(f"b2 {res.value}")
    if args.labels:
        print("labels " + " ".join(res.labels))
    if args.out:
        _emit(dumps(res.witness), args.out)
    return EXIT_OK


def cmd_pairs_search(args: argparse.Namespace) -> int:
    if args.n < 2 or args.n % 2:
        raise UsageError("--n must be a positive even number")
    res = pairs_search(args.n, args.budget_seconds)
    print(f"n={args.n}: {res.status} ({res.nodes} nodes)")
    if res.status == "found":
        for row in res.matrix.entries:
            print(" ".join(f"{e:+d}" if e else " 0" for e in row))
        return EXIT_OK
    return EXIT_FAIL if res.status == "none" else EXIT_TIMEOUT


def _seed(args: argparse.Namespace) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("ODDCOVER_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"ODDCOVER_SEED must be an integer, got {env!r}") from None


def cmd_props(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    c = _load_cover(args.cover)
    _same_size(g, c)
    seed = _seed(args)
    if not is_perfect(g, c):
        print("cover is not a perfect odd cover of the graph")
        return EXIT_FAIL
    reports = [row_independence_check(g, incidence_matrix(c), args.trials, seed)]
    sdr = Report("row bases are transversals")
    sdr.add("greedy row basis", sdr_check(g, c))
    reports.append(sdr)
    if g.n % 2 == 0 and g.adj == complete_graph(g.n).adj:
        reports.append(even_clique_props(c, g.n, args.samples, seed))
    if args.pairing:
        st = Report("paired vertices share supports")
        st.add("pairs (2i, 2i+1)", same_type_check(c, cons.canonical_pairing(c.n)))
        reports.append(st)
    if args.json:
        print(json.dumps({"seed": seed, "reports": [r.to_dict() for r in reports]}))
    else:
        print(f"seed {seed}")
        for r in reports:
            print("\n".join(r.lines()))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


# -- parser -------------------------------------------------------------------

CONSTRUCTIONS = (
    "double",
    "odd-clique",
    "odd-clique-union",
    "even-cycle",
    "cycle-union",
    "pairs-18mod24",
    "pairs-6mod24",
    "tomon",
    "field-lift",
)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="oddcover", description="Odd covers of graphs by bicliques.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="emit a constructed cover as JSON")
    p.add_argument("name", choices=CONSTRUCTIONS)
    p.add_argument("params", nargs="*", help="integer parameters of the construction")
    p.add_argument("--graph", help="edge list of H for 'double'")
    p.add_argument("--base", help="base cover JSON for 'field-lift'")
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("graph", help="emit a standard graph as an edge list")
    p.add_argument("kind", choices=("complete", "cycle", "empty", "labels", "union"))
    p.add_argument("params", nargs="+")
    p.add_argument("--out")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="check a cover against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--cover", help="cover JSON (stdin if omitted)")
    p.add_argument("--perfect", action="store_true", help="also require size rank/2")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rank", help="GF(2) rank and the even-core lower bound")
    p.add_argument("--graph", required=True)
    p.add_argument("--twins", action="store_true", help="reduce adjacent twins first")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("even-cores", help="list even cores")
    p.add_argument("--graph", required=True)
    p.add_argument("--cap", type=int, default=20, help="largest kernel dimension to enumerate")
    p.set_defaults(func=cmd_even_cores)

    p = sub.add_parser("search", help="exact odd cover number by labeling search")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, help="decide a single size instead of minimising")
    p.add_argument("--max-k", type=int)
    p.add_argument("--budget-seconds", type=float)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--labels", action="store_true", help="print the witness labels")
    p.add_argument("--out", help="write the witness cover JSON here")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("pairs-search", help="search for a pairs matrix of K_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget-seconds", type=float)
    p.set_defaults(func=cmd_pairs_search)

    p = sub.add_parser("props", help="structural checks on a perfect cover")
    p.add_argument("--graph", required=True)
    p.add_argument("--cover", help="cover JSON (stdin if omitted)")
    p.add_argument("--seed", type=int, help="defaults to $ODDCOVER_SEED, then 0")
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--pairing", action="store_true", help="check vertices 2i, 2i+1 share supports")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_props)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"oddcover: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


run = main

if __name__ == "__main__":
    sys.exit(main())
