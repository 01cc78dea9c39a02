"""Command-line interface.

Reports are JSON with sorted keys unless ``--pretty`` is given.  Exit status
is 0 on success, 1 on a domain error (bad input graph, failed precondition)
and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import kernels
from .acceptance import run_all
from .centers import analyze
from .certificates import certify
from .errors import RadioError
from .families import canonical_ordering, generate, parse_spec, random_block_graph
from .graph import format_graph, read_graph
from .linegraph import line_graph_of_tree, transfer_to_line, transfer_to_tree
from .radio import exact_radio_number, format_ordering, labeling_from_ordering, lower_bound, parse_ordering


def _emit(obj, pretty: bool, out=None) -> None:
    out = out or sys.stdout
    if pretty:
        _pretty(obj, out)
    else:
        out.write(json.dumps(obj, sort_keys=True) + "\n")


def _pretty(obj, out, indent: int = 0) -> None:
    pad = "  " * indent
    if isinstance(obj, dict):
        width = max((len(str(k)) for k in obj), default=0)
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, dict) and v:
                out.write(f"{pad}{k}:\n")
                _pretty(v, out, indent + 1)
            else:
                out.write(f"{pad}{str(k).ljust(width)}  {_scalar(v)}\n")
    else:
        out.write(f"{pad}{_scalar(obj)}\n")


def _scalar(v) -> str:
    if isinstance(v, list):
        return " ".join(map(str, v)) if all(not isinstance(x, (list, dict)) for x in v) else json.dumps(v)
    if isinstance(v, dict):
        return json.dumps(v, sort_keys=True)
    return "-" if v is None else str(v)


def _read_text(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _spec_arg(tokens: list[str]):
    text = " ".join(tokens)
    if len(tokens) == 1 and os.path.isfile(tokens[0]):
        text = _read_text(tokens[0])
    return parse_spec(text)


# ---------------------------------------------------------------------------
# commands


def cmd_generate(args) -> int:
    if args.random is not None:
        g = random_block_graph(args.seed, args.random, args.max_clique)
        text = format_graph(g, f"random block graph seed={args.seed} p={args.random} max_clique={args.max_clique}")
        names = None
    else:
        spec = _spec_arg(args.spec)
        ng = generate(spec)
        text = format_graph(ng.graph, spec.to_json())
        names = {"spec": spec.to_dict(), "names": ng.name_map()}
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        if names is not None:
            with open(args.output + ".names.json", "w", encoding="utf-8") as fh:
                fh.write(json.dumps(names, sort_keys=True, indent=1) + "\n")
    else:
        sys.stdout.write(text)
    return 0


def cmd_analyze(args) -> int:
    _emit(analyze(read_graph(args.graph)).summary(), args.pretty)
    return 0


def cmd_lb(args) -> int:
    g = read_graph(args.graph)
    an = analyze(g)
    _emit({"lb": lower_bound(g, an.centers, an.levels)}, args.pretty)
    return 0


def cmd_exact(args) -> int:
    g = read_graph(args.graph)
    an = analyze(g)
    lb = lower_bound(g, an.centers, an.levels)
    res = exact_radio_number(g, an.dist, max_p=args.max_p, threads=args.threads, backend=args.backend)
    out = {"rn": res.rn, "lb": lb, "gap": res.rn - lb}
    if args.witness:
        out["ordering"] = list(res.ordering.order)
        out["labels"] = list(res.witness.labels)
    _emit(out, args.pretty)
    return 0


def cmd_certify(args) -> int:
    g = read_graph(args.graph)
    order = parse_ordering(_read_text(args.ordering), g.p)
    _emit(certify(g, order).to_dict(), args.pretty)
    return 0


def cmd_order(args) -> int:
    spec = _spec_arg(args.spec)
    ng = generate(spec)
    an = analyze(ng.graph)
    order = canonical_ordering(spec, ng)
    f = labeling_from_ordering(ng.graph, an.centers, an.levels, order)
    rep = certify(ng.graph, order, an)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(format_ordering(order))
    _emit({
        "spec": spec.to_dict(),
        "ordering": list(order.order),
        "ordering_names": [ng.names[v] for v in order.order],
        "labels": list(f.labels),
        "span": f.span,
        "certificate": rep.to_dict(),
    }, args.pretty)
    return 0


def cmd_linegraph(args) -> int:
    lt = line_graph_of_tree(read_graph(args.tree))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(format_graph(lt.graph, "line graph; vertex i is the tree edge named name_of[i]"))
    _emit(lt.summary(), args.pretty)
    return 0


def cmd_transfer(args) -> int:
    t = read_graph(args.tree)
    text = _read_text(args.ordering)
    if args.direction == "to-line":
        rep = transfer_to_line(t, parse_ordering(text, t.p))
    else:
        rep = transfer_to_tree(t, parse_ordering(text, t.p - 1))
    _emit(rep.to_dict(), args.pretty)
    return 0


def cmd_selftest(args) -> int:
    results = run_all(args.only)
    if args.pretty:
        for r in results:
            print(r.line())
    else:
        _emit({"criteria": [r.to_dict() for r in results], "passed": all(r.passed for r in results)}, False)
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="blockradio", description="Radio labelings of block graphs.")
    ap.add_argument("--pretty", action="store_true", help="plain-text output instead of JSON")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate a family member or a random block graph")
    p.add_argument("--spec", nargs="+", help="family spec: JSON, a JSON file, or 'family key=value ...'")
    p.add_argument("--random", type=int, metavar="P", help="random block graph on P vertices")
    p.add_argument("--max-clique", type=int, default=4)
    p.add_argument("--seed", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("analyze", help="weight centers, levels and branches")
    p.add_argument("graph")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("lb", help="lower bound on the radio number")
    p.add_argument("graph")
    p.set_defaults(func=cmd_lb)

    p = sub.add_parser("exact", help="exact radio number by exhaustive search")
    p.add_argument("graph")
    p.add_argument("--max-p", type=int, default=10)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--backend", choices=sorted(kernels.BACKENDS))
    p.add_argument("--witness", action="store_true", help="include the optimal ordering and labels")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("certify", help="check whether an ordering certifies rn = LB")
    p.add_argument("graph")
    p.add_argument("--ordering", required=True)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("order", help="canonical optimal ordering of a family member")
    p.add_argument("--spec", nargs="+", required=True)
    p.add_argument("-o", "--output", help="also write the ordering file")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("linegraph", help="line graph of a tree")
    p.add_argument("tree")
    p.add_argument("-o", "--output", help="write the line graph in the graph text format")
    p.set_defaults(func=cmd_linegraph)

    p = sub.add_parser("transfer", help="move a certified ordering between a tree and its line graph")
    p.add_argument("tree")
    p.add_argument("--ordering", required=True)
    p.add_argument("--direction", choices=["to-line", "to-tree"], required=True)
    p.set_defaults(func=cmd_transfer)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.add_argument("--only", type=int, nargs="+", choices=range(1, 10), metavar="N")
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "generate":
        if (args.spec is None) == (args.random is None):
            ap.error("generate needs exactly one of --spec and --random")
        if args.random is not None and args.seed is None:
            ap.error("random generation needs an explicit --seed")
    try:
        return args.func(args)
    except RadioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc.strerror or exc}: {exc.filename}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
