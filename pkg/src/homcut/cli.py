"""Command-line front end.

Exit codes follow the solver convention: 0 means found/ok, 1 means a proven
negative answer (or a failed verification run), 2 means an input or usage
error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import dichotomy, suites
from .cuts import enumerate_factor_cuts, find_factor_cut, format_cut
from .gadgets import (
    GadgetInstance,
    TargetRejected,
    analyze_target,
    build_factorcut,
    build_surjective_instance,
    lift_target,
    provenance_json,
)
from .graph import Graph, GraphParseError, parse_graph, serialize_graph
from .hom import (
    COMPACTION,
    PLAIN,
    SURJECTIVE,
    ListHom,
    Retraction,
    format_witness,
    parse_vertex_pairs,
    solve,
)

USAGE_ERROR = 2


class CliError(Exception):
    pass


def _load_graph(path: str) -> Graph:
    try:
        return parse_graph(Path(path).read_text())
    except FileNotFoundError:
        raise CliError(f"no such file: {path}") from None
    except GraphParseError as exc:
        raise CliError(f"{path}: {exc}") from None


def _parse_roots(spec: str, g: Graph) -> tuple[int, int]:
    try:
        a, b = (int(tok) for tok in spec.split(","))
    except ValueError:
        raise CliError(f"--roots expects 's,t', got {spec!r}") from None
    if not (1 <= a <= g.n and 1 <= b <= g.n):
        raise CliError("root out of range")
    return a - 1, b - 1


def _parse_lists_file(path: str, g: Graph, h: Graph) -> ListHom:
    lists: dict[int, frozenset[int]] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        left, sep, rest = line.partition(":")
        if not sep:
            raise CliError(f"{path}:{lineno}: expected '<u>: <targets>'")
        u = int(left) - 1
        entries = frozenset(int(tok) - 1 for tok in rest.split())
        if not 0 <= u < g.n:
            raise CliError(f"{path}:{lineno}: vertex {left} out of range")
        if any(not 0 <= x < h.n for x in entries):
            raise CliError(f"{path}:{lineno}: list entry out of target range")
        lists[u] = entries
    return ListHom(tuple(lists.get(u, frozenset(range(h.n))) for u in range(g.n)))


def _write_instance(inst: GadgetInstance, out_prefix: str) -> tuple[Path, Path]:
    gpath = Path(f"{out_prefix}.ghom")
    ppath = Path(f"{out_prefix}.provenance.json")
    gpath.write_text(serialize_graph(inst.graph))
    payload = {"meta": {k: v for k, v in inst.meta.items() if k != "cliques"},
               "roles": provenance_json(inst)}
    ppath.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return gpath, ppath


# ---------------------------------------------------------------------------
# subcommands


def cmd_fmt(args) -> int:
    g = _load_graph(args.file)
    text = serialize_graph(g)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_solve(args) -> int:
    g = _load_graph(args.input_graph)
    h = _load_graph(args.target_graph)
    if args.variant in (PLAIN, SURJECTIVE, COMPACTION):
        variant = args.variant
        if args.lists or args.anchors:
            raise CliError(f"--lists/--anchors do not apply to variant {args.variant}")
    elif args.variant == "retr":
        if not args.anchors:
            raise CliError("variant retr requires --anchors")
        pairs = parse_vertex_pairs(Path(args.anchors).read_text())
        variant = Retraction(tuple(pairs))
    else:  # list
        if not args.lists:
            raise CliError("variant list requires --lists")
        variant = _parse_lists_file(args.lists, g, h)
        empty = [u + 1 for u, lst in enumerate(variant.lists) if not lst]
        if empty:
            print(f"no witness: vertex {empty[0]} has an empty list")
            return 1
    try:
        witness = solve(g, h, variant, allow_reflexive_input=args.allow_loops)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if witness is None:
        print("no witness: exhaustive search proved none exists")
        return 1
    text = format_witness(witness)
    if args.witness:
        Path(args.witness).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_cut(args) -> int:
    g = _load_graph(args.input_graph)
    try:
        if args.enumerate:
            cuts = enumerate_factor_cuts(g, args.i, args.j, max_n=args.max_n)
            sys.stdout.write(f"c {len(cuts)} cuts\n")
            for cut in cuts:
                sys.stdout.write(format_cut(cut))
            return 0 if cuts else 1
        cut = find_factor_cut(g, args.i, args.j)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if cut is None:
        print("no cut: exhaustive search proved none exists")
        return 1
    text = format_cut(cut)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_reduce_factorcut(args) -> int:
    g = _load_graph(args.input_graph)
    s, t = _parse_roots(args.roots, g)
    try:
        inst = build_factorcut(g, s, t, args.i, args.j)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    gpath, ppath = _write_instance(inst, args.out)
    k = inst.meta["k"]
    print(f"wrote {gpath} and {ppath}")
    print(f"vertices: {inst.graph.n} (original {g.n}, clique size {k})")
    if inst.meta.get("passthrough"):
        print("note: (1,1) coincides with the source problem; instance passed through")
    return 0


def cmd_reduce_shc(args) -> int:
    g = _load_graph(args.input_graph)
    h = _load_graph(args.target_graph)
    s, t = _parse_roots(args.roots, g)
    try:
        ta = analyze_target(h)
    except TargetRejected as exc:
        raise CliError(f"target rejected: {exc}") from None
    lift = (0, 0)
    if args.lift:
        try:
            li, lj = (int(tok) for tok in args.lift.split(","))
        except ValueError:
            raise CliError(f"--lift expects 'i,j', got {args.lift!r}") from None
        lift = (li, lj)
    size = ta.omega + max(lift) if lift != (0, 0) else None
    try:
        inst = build_surjective_instance(ta, g, s, t, clique_size=size)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    gpath, ppath = _write_instance(inst, args.out)
    print(f"wrote {gpath} and {ppath}")
    meta = inst.meta
    print(
        f"vertices: {inst.graph.n} = {meta['clique_size']}*{meta['n']} "
        f"+ 2*({meta['ell']}-1)*{meta['m']} + {meta['target_vertices']} - 2"
    )
    print(f"parameters: ell={ta.ell} omega={ta.omega} r_p={ta.r_p} r_q={ta.r_q}")
    if lift != (0, 0):
        lifted = lift_target(h, ta, *lift)
        lpath = Path(f"{args.out}.lifted_target.ghom")
        lpath.write_text(serialize_graph(lifted))
        print(f"wrote {lpath} (twin lift i={lift[0]}, j={lift[1]})")
    return 0


def cmd_classify(args) -> int:
    records = []
    for path in args.files:
        g = _load_graph(path)
        c = dichotomy.classify(g)
        if len(args.files) > 1:
            sys.stdout.write(f"c {path}\n")
        sys.stdout.write(dichotomy.format_classification(c))
        records.append({"file": path, "verdict": c.verdict, "rule": c.rule,
                        "citation": c.citation})
    if args.json:
        Path(args.json).write_text(json.dumps(records, indent=2) + "\n")
    return 0


def cmd_verify(args) -> int:
    names = list(suites.SUITES) if args.suite == "all" else [args.suite]
    reports = []
    for name in names:
        rep = suites.run_suite(name, args.seed, args.trials, args.max_n)
        sys.stdout.write(suites.format_report(rep))
        reports.append(rep)
    if args.json:
        Path(args.json).write_text(
            json.dumps([r.to_json() for r in reports], indent=2) + "\n"
        )
    return 0 if all(r.ok for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homcut",
        description=(
            "Exact workbench for surjective graph homomorphisms, factor cuts, "
            "hardness gadget constructions and small-target classification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fmt", help="canonicalize a graph file")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_fmt)

    p = sub.add_parser("solve", help="decide a homomorphism variant exactly")
    p.add_argument("--variant", required=True,
                   choices=[PLAIN, SURJECTIVE, COMPACTION, "retr", "list"])
    p.add_argument("-G", dest="input_graph", required=True)
    p.add_argument("-H", dest="target_graph", required=True)
    p.add_argument("--lists", help="per-vertex candidate lists ('<u>: <x> <y>' lines)")
    p.add_argument("--anchors", help="retraction anchors ('<u> -> <x>' lines)")
    p.add_argument("--witness", help="write the witness here instead of stdout")
    p.add_argument("--allow-loops", action="store_true",
                   help="accept looped input graphs for hom/surj/comp")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("cut", help="decide or enumerate (i,j)-factor cuts")
    p.add_argument("-G", dest="input_graph", required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--max-n", type=int, default=16,
                   help="enumeration size guard (default 16)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("reduce", help="build a hardness gadget instance")
    rsub = p.add_subparsers(dest="reduction", required=True)

    pf = rsub.add_parser("factorcut", help="matching cut -> (i,j)-factor cut")
    pf.add_argument("-G", dest="input_graph", required=True)
    pf.add_argument("--i", type=int, required=True)
    pf.add_argument("--j", type=int, required=True)
    pf.add_argument("--roots", required=True, help="1-based 's,t'")
    pf.add_argument("--out", required=True, help="output path prefix")
    pf.set_defaults(func=cmd_reduce_factorcut)

    ps = rsub.add_parser("shc", help="factor cut -> surjective colouring instance")
    ps.add_argument("-G", dest="input_graph", required=True)
    ps.add_argument("-H", dest="target_graph", required=True)
    ps.add_argument("--roots", required=True, help="1-based 's,t'")
    ps.add_argument("--lift", help="'i,j' true-twin lift of the target")
    ps.add_argument("--out", required=True, help="output path prefix")
    ps.set_defaults(func=cmd_reduce_shc)

    p = sub.add_parser("classify", help="complexity verdict for target graphs")
    p.add_argument("files", nargs="+")
    p.add_argument("--json", help="also write structured records here")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=sorted(suites.SUITES) + ["all"])
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--json", help="also write the structured report here")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
