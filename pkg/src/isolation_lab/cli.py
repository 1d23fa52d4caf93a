"""Command-line front end.

Subcommands: compute (invariants on one graph), construct (certified set
builders), verify (theorem campaigns over a corpus), explore (open-problem
campaigns), generate (corpus files).  Graph arguments accept a file path
(edge-list or graph6) or a family spec like ``cycle:5``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .core import Graph, GraphFamilySpec, parse_graph, serialize_graph, standard_family
from .corpus import CorpusSpec, canonical_key, generate_corpus
from .harness import ALL_RULES, EXPLORE_TARGETS, run_explore, run_verify
from .records import ResultsLog, render_table
from .sierpinski import recursive_isolating_set, sierpinski_bounds
from .solvers import (
    BudgetExceededError,
    DEFAULT_NODE_BUDGET,
    classic_invariants,
    domination_number,
    independence_domination_number,
    isolation_number,
    matching_number,
    max_k_colorable_subgraph,
    saturation_number,
    total_domination_number,
    two_packing_number,
    vertex_cover_number,
    clique_number,
    independence_number,
)
from .constructions import (
    clique_coloring_isolating_set,
    independence_split_isolating_set,
    lexicographic_isolating_set,
    prism_isolating_set,
    saturation_isolating_set,
    vertex_cover_product_isolating_set,
)


def load_graph(text: str) -> tuple[Graph, str]:
    """Resolve a CLI graph argument to (graph, spec string)."""
    if os.path.exists(text):
        with open(text, "r", encoding="utf-8") as fh:
            return parse_graph(fh.read()), text
    try:
        spec = GraphFamilySpec.parse(text)
    except ValueError as exc:
        raise SystemExit(f"error: cannot read graph {text!r}: {exc}")
    return standard_family(spec), str(spec)


_SOLVERS = {
    "iota": isolation_number,
    "gamma": domination_number,
    "gamma_t": total_domination_number,
    "alpha": independence_number,
    "beta": vertex_cover_number,
    "alpha_prime": matching_number,
    "omega": clique_number,
    "s": saturation_number,
    "rho2": two_packing_number,
    "gamma_i": independence_domination_number,
}


def _solve_tag(G: Graph, tag: str, budget: int):
    if tag.startswith("alpha_k:"):
        k = int(tag.split(":", 1)[1])
        return max_k_colorable_subgraph(G, k, node_budget=budget)
    if tag not in _SOLVERS:
        raise SystemExit(
            f"error: unknown invariant {tag!r}; known: "
            f"{', '.join(sorted(_SOLVERS))}, alpha_k:<k>")
    return _SOLVERS[tag](G, node_budget=budget)


def cmd_compute(args) -> int:
    G, spec = load_graph(args.graph)
    key = canonical_key(G)
    log = ResultsLog(args.log)
    rows = []
    status = 0
    for tag in args.invariant.split(","):
        tag = tag.strip()
        cached = None if args.no_cache else log.lookup(key, tag)
        if cached is not None:
            rows.append({"invariant": tag, "value": cached.value,
                         "witness": cached.witness, "source": "cache"})
            continue
        try:
            res = _solve_tag(G, tag, args.budget)
        except BudgetExceededError as exc:
            rows.append({"invariant": tag, "value": "", "witness": str(exc),
                         "source": "error"})
            status = 1
            continue
        except ValueError as exc:
            rows.append({"invariant": tag, "value": "", "witness": str(exc),
                         "source": "error"})
            continue
        log.record(key, spec, tag, res.value, list(res.witness), res.nodes,
                   res.elapsed)
        rows.append({"invariant": tag, "value": res.value,
                     "witness": list(res.witness), "source": "solved"})
    print(f"graph: {spec}  (n={G.n}, m={G.m})")
    print(render_table(rows, ["invariant", "value", "witness", "source"]), end="")
    return status


_PAIR_BUILDERS = {
    "independence-split": independence_split_isolating_set,
    "clique-coloring": clique_coloring_isolating_set,
    "cover-product": vertex_cover_product_isolating_set,
    "lex": lexicographic_isolating_set,
}
_UNARY_BUILDERS = {
    "prism": prism_isolating_set,
    "saturation": saturation_isolating_set,
}


def cmd_construct(args) -> int:
    G, gspec = load_graph(args.g)
    if args.builder == "sierpinski":
        t = args.t or 2
        members = recursive_isolating_set(G, t, node_budget=args.budget)
        bounds = sierpinski_bounds(G, t, node_budget=args.budget)
        print(f"builder: sierpinski  base: {gspec}  t={t}")
        print(f"isolating set of size {len(members)} "
              f"(sandwich [{bounds.lower},{bounds.upper}]"
              + (f", exact {bounds.exact}" if bounds.exact is not None else "") + ")")
        print("members:", " ".join(str(v) for v in members))
        return 0
    if args.builder in _UNARY_BUILDERS:
        cert = _UNARY_BUILDERS[args.builder](G, node_budget=args.budget)
    elif args.builder in _PAIR_BUILDERS:
        if not args.h:
            raise SystemExit(f"error: builder {args.builder} needs --h")
        H, _ = load_graph(args.h)
        cert = _PAIR_BUILDERS[args.builder](G, H, node_budget=args.budget)
    else:
        raise SystemExit(
            f"error: unknown builder {args.builder!r}; known: "
            f"{', '.join(sorted(_UNARY_BUILDERS) + sorted(_PAIR_BUILDERS))}, sierpinski")
    print(f"builder: {args.builder}  target order {cert.target.n}")
    print(f"certified set of size {cert.size} (bound {cert.bound}); "
          f"checks: {', '.join(cert.checks)}")
    print("members:", " ".join(cert.target.label(v) for v in cert.members))
    return 0


def cmd_verify(args) -> int:
    rules = ALL_RULES if args.theorems == "all" else [
        r.strip() for r in args.theorems.split(",")]
    spec = CorpusSpec.parse(args.corpus, seed=args.seed)
    campaign = run_verify(rules, spec, budget=args.budget)
    print(campaign.to_text(), end="")
    if args.out:
        campaign.write(args.out)
        print(f"report written to {args.out}")
    return 1 if campaign.summary.get("violated", 0) else 0


def cmd_explore(args) -> int:
    spec = CorpusSpec.parse(args.corpus, seed=args.seed)
    campaign = run_explore(args.target, spec, budget=args.budget)
    print(campaign.to_text(), end="")
    if args.out:
        campaign.write(args.out)
        print(f"report written to {args.out}")
    # counterexamples to open problems are findings, not failures
    return 0


def cmd_generate(args) -> int:
    spec = CorpusSpec.parse(args.corpus, seed=args.seed)
    items = generate_corpus(spec)
    lines = [json.dumps({"corpus": str(spec), "count": len(items)}, sort_keys=True)]
    for i, item in enumerate(items):
        graphs = item if isinstance(item, tuple) else (item,)
        entry = {"index": i, "graphs": [
            {"key": canonical_key(g), "order": g.n,
             "edges": [list(e) for e in g.edges()]} for g in graphs]}
        lines.append(json.dumps(entry, sort_keys=True))
    payload = "\n".join(lines) + "\n"
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(payload)
    print(f"{len(items)} corpus items written to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="isolation-lab",
        description="exact isolation/domination invariants, certified "
                    "constructions, and verification campaigns")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute invariants on one graph")
    p.add_argument("--graph", required=True, help="file path or family spec like cycle:5")
    p.add_argument("--invariant", required=True,
                   help="comma-separated tags, e.g. iota,gamma,rho2,alpha_k:2")
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--log", default=None, help="results log path (default from "
                                               "ISOLATION_LAB_CACHE)")
    p.set_defaults(fn=cmd_compute)

    p = sub.add_parser("construct", help="run a certified set builder")
    p.add_argument("--builder", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--h", default=None)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("verify", help="verify proved rules over a corpus")
    p.add_argument("--theorems", default="all",
                   help=f"'all' or comma-separated ids from: {', '.join(ALL_RULES)}")
    p.add_argument("--corpus", required=True,
                   help="corpus spec, e.g. random-pairs:count=20,min=3,max=6")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("explore", help="explore open inequalities over a corpus")
    p.add_argument("--target", required=True, choices=EXPLORE_TARGETS)
    p.add_argument("--corpus", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_explore)

    p = sub.add_parser("generate", help="write a deterministic corpus file")
    p.add_argument("--corpus", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_generate)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
