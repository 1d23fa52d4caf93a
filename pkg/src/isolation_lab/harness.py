"""Verification and exploration campaigns over graph corpora.

Each verification rule names one proved inequality or identity and checks it
on concrete instances, recording numeric sides and a verdict.  A ``violated``
verdict on a proved rule indicates a solver bug and fails the campaign.
Exploration targets are open inequalities: counterexamples are serialized as
findings, never as failures, but the proved packing lower bound is re-checked
on every exploration row as a guard.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .core import Graph, VertexSet, is_connected, serialize_graph
from .corpus import CorpusSpec, canonical_key, generate_corpus
from .products import cartesian_product, lexicographic_product
from .records import TheoremCheck, render_table, write_jsonl
from .sierpinski import (
    DIRECT_SOLVE_VERTEX_CAP,
    VertexCapExceeded,
    extreme_isolation_number,
    recursive_isolating_set,
    sierpinski_bounds,
    sierpinski_graph,
)
from .solvers import (
    BudgetExceededError,
    DEFAULT_NODE_BUDGET,
    classic_invariants,
    domination_number,
    independence_domination_number,
    isolation_number,
    isolation_number_given_dominated,
    matching_number,
    minimum_isolating_set_below,
    saturation_number,
    total_domination_number,
    two_packing_number,
)
from .constructions import (
    CertificateError,
    HypothesisError,
    bipartition,
    clique_coloring_isolating_set,
    independence_split_isolating_set,
    lexicographic_isolating_set,
    prism_isolating_set,
    vertex_cover_product_isolating_set,
)

PRODUCT_EXACT_ORDER_CAP = 64

K2 = Graph(2, [(0, 1)])


def _short(G: Graph) -> str:
    return f"G(n={G.n},m={G.m})"


def _check_gamma_gap_lower(G: Graph, budget: int) -> list[TheoremCheck]:
    iota = isolation_number(G, node_budget=budget).value
    gamma = domination_number(G, node_budget=budget).value
    gi = independence_domination_number(G, node_budget=budget).value
    rhs = gamma - gi
    verdict = "holds" if iota >= rhs else "violated"
    return [TheoremCheck("gamma-gap-lower", (canonical_key(G),), True, iota, rhs,
                         verdict, f"iota={iota} gamma={gamma} gamma_i={gi}")]


def _check_basic_chains(G: Graph, budget: int) -> list[TheoremCheck]:
    iota = isolation_number(G, node_budget=budget).value
    gamma = domination_number(G, node_budget=budget).value
    rho2 = two_packing_number(G, node_budget=budget).value
    gi = independence_domination_number(G, node_budget=budget).value
    ci = classic_invariants(G, node_budget=budget)
    alpha, beta = ci["alpha"].value, ci["beta"].value
    ap = ci["alpha_prime"].value
    sat = saturation_number(G, node_budget=budget).value
    ok = [iota <= gamma, rho2 <= gi <= gamma, alpha + beta == G.n]
    detail = (f"iota={iota} gamma={gamma} rho2={rho2} gamma_i={gi} "
              f"alpha={alpha} beta={beta} s={sat} alpha'={ap}")
    if not G.isolated_vertices():
        ok += [iota <= sat <= ap, gamma <= ap]
    else:
        detail += " (isolated vertices: matching chain skipped)"
    verdict = "holds" if all(ok) else "violated"
    return [TheoremCheck("basic-chains", (canonical_key(G),), True,
                         detail, "chains", verdict, detail)]


def _upper_bound_check(rule, builder, G, H, budget) -> list[TheoremCheck]:
    keys = (canonical_key(G), canonical_key(H))
    try:
        cert = builder(G, H, node_budget=budget)
    except HypothesisError as exc:
        return [TheoremCheck(rule, keys, False, "", "", "hypothesis-not-met", str(exc))]
    except CertificateError as exc:
        return [TheoremCheck(rule, keys, True, "", "", "violated", str(exc))]
    rhs = cert.bound
    if cert.target.n <= PRODUCT_EXACT_ORDER_CAP:
        lhs = isolation_number(cert.target, node_budget=budget).value
        verdict = "holds" if lhs <= rhs else "violated"
        detail = f"exact iota={lhs}, certified bound={rhs}"
    else:
        lhs = f"<={rhs}"
        verdict = "holds"
        detail = "certificate only (product beyond exact-solve cap)"
    return [TheoremCheck(rule, keys, True, lhs, rhs, verdict, detail)]


def _check_independence_split(G, H, budget):
    return _upper_bound_check("independence-split-upper",
                              independence_split_isolating_set, G, H, budget)


def _check_clique_coloring(G, H, budget):
    return _upper_bound_check("clique-coloring-upper",
                              clique_coloring_isolating_set, G, H, budget)


def _check_cover_product(G, H, budget):
    return _upper_bound_check("cover-product-upper",
                              vertex_cover_product_isolating_set, G, H, budget)


def _check_packing_lower(G: Graph, H: Graph, budget: int) -> list[TheoremCheck]:
    keys = (canonical_key(G), canonical_key(H))
    rho_g = two_packing_number(G, node_budget=budget).value
    rho_h = two_packing_number(H, node_budget=budget).value
    iota_g = isolation_number(G, node_budget=budget).value
    iota_h = isolation_number(H, node_budget=budget).value
    rhs = max(rho_g * iota_h, rho_h * iota_g)
    P = cartesian_product(G, H)
    below = minimum_isolating_set_below(P.graph, rhs, node_budget=budget)
    if below is None:
        return [TheoremCheck("packing-lower", keys, True, f">={rhs}", rhs, "holds",
                             f"no isolating set below {rhs}")]
    return [TheoremCheck("packing-lower", keys, True, below.value, rhs, "violated",
                         f"isolating set of size {below.value} found")]


def _check_prism_identity(G: Graph, budget: int) -> list[TheoremCheck]:
    key = (canonical_key(G),)
    gamma_g = domination_number(G, node_budget=budget).value
    P = cartesian_product(G, K2)
    iota_p = isolation_number(P.graph, node_budget=budget).value
    gamma_p = domination_number(P.graph, node_budget=budget).value
    ok = gamma_g <= iota_p <= gamma_p
    detail = f"gamma(G)={gamma_g} iota(prism)={iota_p} gamma(prism)={gamma_p}"
    bipartite = True
    try:
        bipartition(G)
    except HypothesisError:
        bipartite = False
    if bipartite:
        cert = prism_isolating_set(G, node_budget=budget)
        ok = ok and iota_p == gamma_g and cert.size == gamma_g
        detail += f" bipartite: certified set size {cert.size}"
    else:
        detail += " non-bipartite: bounds only"
    return [TheoremCheck("prism-identity", key, True, iota_p,
                         gamma_g if bipartite else f"[{gamma_g},{gamma_p}]",
                         "holds" if ok else "violated", detail)]


def _check_lexicographic_identity(G: Graph, H: Graph, budget: int) -> list[TheoremCheck]:
    keys = (canonical_key(G), canonical_key(H))
    try:
        cert = lexicographic_isolating_set(G, H, node_budget=budget)
    except HypothesisError as exc:
        return [TheoremCheck("lexicographic-identity", keys, False, "", "",
                             "hypothesis-not-met", str(exc))]
    P = lexicographic_product(G, H)
    iota_p = isolation_number(P.graph, node_budget=budget).value
    gamma_p = domination_number(P.graph, node_budget=budget).value
    gamma_t = total_domination_number(G, node_budget=budget).value
    ok = iota_p == gamma_p == gamma_t == cert.size
    detail = f"iota={iota_p} gamma={gamma_p} gamma_t(G)={gamma_t} cert={cert.size}"
    return [TheoremCheck("lexicographic-identity", keys, True, iota_p, gamma_t,
                         "holds" if ok else "violated", detail)]


def _check_sierpinski_upper(G: Graph, budget: int, t: int) -> list[TheoremCheck]:
    key = (canonical_key(G),)
    bounds = sierpinski_bounds(G, t, node_budget=budget)
    D = recursive_isolating_set(G, t, node_budget=budget)
    assert len(D) == bounds.upper
    order = G.n ** t
    if order <= DIRECT_SOLVE_VERTEX_CAP:
        S = sierpinski_graph(G, t)
        lhs = isolation_number(S.graph, node_budget=budget).value
        ok = lhs <= bounds.upper
        detail = f"exact iota={lhs}, replicated witness size {len(D)}"
    else:
        lhs = f"<={bounds.upper}"
        ok = True
        detail = f"replicated witness of size {len(D)} is isolating (direct solve beyond cap)"
    return [TheoremCheck(f"sierpinski-upper[t={t}]", key, True, lhs, bounds.upper,
                         "holds" if ok else "violated", detail)]


def _check_sierpinski_lower(G: Graph, budget: int, t: int) -> list[TheoremCheck]:
    key = (canonical_key(G),)
    bounds = sierpinski_bounds(G, t, node_budget=budget)
    order = G.n ** t
    if order <= DIRECT_SOLVE_VERTEX_CAP:
        S = sierpinski_graph(G, t)
        lhs = isolation_number(S.graph, node_budget=budget).value
        ok = lhs >= bounds.lower
        detail = f"exact iota={lhs}"
    else:
        lhs = f">={bounds.lower}"
        ok = bounds.lower <= bounds.upper
        detail = "sandwich consistency only (direct solve beyond cap)"
    detail += f"; sandwich [{bounds.lower},{bounds.upper}]"
    return [TheoremCheck(f"sierpinski-lower[t={t}]", key, True, lhs, bounds.lower,
                         "holds" if ok else "violated", detail)]


def _check_hypercube_identity(n: int, budget: int) -> list[TheoremCheck]:
    from .core import hypercube_graph
    Qn = hypercube_graph(n)
    Qn1 = hypercube_graph(n + 1)
    gamma = domination_number(Qn, node_budget=budget).value
    iota = isolation_number(Qn1, node_budget=budget).value
    return [TheoremCheck(f"hypercube-identity[n={n}]",
                         (canonical_key(Qn),), True, iota, gamma,
                         "holds" if iota == gamma else "violated",
                         f"iota(Q{n + 1})={iota} gamma(Q{n})={gamma}")]


UNARY_RULES = {
    "gamma-gap-lower": _check_gamma_gap_lower,
    "basic-chains": _check_basic_chains,
    "prism-identity": _check_prism_identity,
}
PAIR_RULES = {
    "independence-split-upper": _check_independence_split,
    "clique-coloring-upper": _check_clique_coloring,
    "cover-product-upper": _check_cover_product,
    "packing-lower": _check_packing_lower,
    "lexicographic-identity": _check_lexicographic_identity,
}
SIERPINSKI_RULES = {
    "sierpinski-upper": _check_sierpinski_upper,
    "sierpinski-lower": _check_sierpinski_lower,
}
ALL_RULES = (list(UNARY_RULES) + list(PAIR_RULES) + list(SIERPINSKI_RULES)
             + ["hypercube-identity"])


@dataclass
class Campaign:
    command: str
    params: dict
    rows: list[dict] = field(default_factory=list)
    findings: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    def to_text(self) -> str:
        cols = ["rule", "inputs", "lhs", "rhs", "verdict"] \
            if self.command == "verify" else \
            ["target", "inputs", "lhs", "rhs", "status"]
        display = []
        for row in self.rows:
            d = dict(row)
            d["inputs"] = " ".join(s.split(";edges=")[0] for s in row.get("inputs", []))
            display.append(d)
        head = f"campaign: {self.command} {self.params}\n"
        body = render_table(display, cols)
        foot = f"summary: {self.summary}\n"
        finds = ""
        if self.findings:
            finds = f"findings: {len(self.findings)} (serialized in report file)\n"
        return head + body + foot + finds

    def write(self, path: str) -> None:
        write_jsonl(path, {"command": self.command, "params": self.params,
                           "summary": self.summary},
                    self.rows + [{"finding": f} for f in self.findings])


def _instances(corpus_items):
    """Split corpus items into a flat graph list and a pair list."""
    if corpus_items and isinstance(corpus_items[0], tuple):
        pairs = list(corpus_items)
        graphs = [g for pair in pairs for g in pair]
    else:
        graphs = list(corpus_items)
        pairs = [(graphs[i], graphs[i + 1]) for i in range(0, len(graphs) - 1, 2)]
    return graphs, pairs


def run_verify(rules, corpus_spec: CorpusSpec, budget: int = DEFAULT_NODE_BUDGET,
               t_values=(2, 3), hypercube_range=(1, 4)) -> Campaign:
    """Run the named rules over a corpus and report one row per instance."""
    if rules in ("all", ["all"]):
        rules = ALL_RULES
    unknown = [r for r in rules if r not in ALL_RULES]
    if unknown:
        raise ValueError(f"unknown rules: {unknown}")
    items = generate_corpus(corpus_spec)
    graphs, pairs = _instances(items)
    checks: list[TheoremCheck] = []
    for rule in rules:
        try:
            if rule in UNARY_RULES:
                for G in graphs:
                    checks.extend(_run_guarded(UNARY_RULES[rule], rule, G,
                                               budget=budget))
            elif rule in PAIR_RULES:
                for G, H in pairs:
                    checks.extend(_run_guarded(PAIR_RULES[rule], rule, G, H,
                                               budget=budget))
            elif rule in SIERPINSKI_RULES:
                for G in graphs:
                    for t in t_values:
                        checks.extend(_run_guarded(SIERPINSKI_RULES[rule], rule,
                                                   G, budget=budget, t=t))
            elif rule == "hypercube-identity":
                for n in range(hypercube_range[0], hypercube_range[1] + 1):
                    checks.extend(_check_hypercube_identity(n, budget))
        except VertexCapExceeded as exc:
            checks.append(TheoremCheck(rule, (), True, "", "", "budget-exceeded",
                                       str(exc)))
    counts: dict[str, int] = {}
    for c in checks:
        counts[c.verdict] = counts.get(c.verdict, 0) + 1
    campaign = Campaign("verify",
                        {"rules": list(rules), "corpus": str(corpus_spec),
                         "budget": budget, "t_values": list(t_values)},
                        [c.row() for c in checks],
                        summary={"rows": len(checks), **counts})
    return campaign


def _run_guarded(fn, rule, *graphs, budget, **kw):
    keys = tuple(canonical_key(g) for g in graphs if isinstance(g, Graph))
    try:
        return fn(*graphs, budget, **kw)
    except (BudgetExceededError, VertexCapExceeded) as exc:
        return [TheoremCheck(rule, keys, True, "", "", "budget-exceeded", str(exc))]


EXPLORE_TARGETS = ("vizing-iota", "gamma-lower", "gammai-lower", "sierpinski-gap")


def run_explore(target: str, corpus_spec: CorpusSpec,
                budget: int = DEFAULT_NODE_BUDGET) -> Campaign:
    """Explore an open inequality over a corpus.

    Counterexamples are findings (full serialization, no failure status); the
    proved packing lower bound is re-checked on every product row as a guard.
    """
    if target not in EXPLORE_TARGETS:
        raise ValueError(f"unknown exploration target {target!r}")
    items = generate_corpus(corpus_spec)
    graphs, pairs = _instances(items)
    rows: list[dict] = []
    findings: list[dict] = []
    if target == "sierpinski-gap":
        for G in graphs:
            key = canonical_key(G)
            try:
                S2 = sierpinski_graph(G, 2)
                upper = extreme_isolation_number(G, node_budget=budget).value
                lower = isolation_number_given_dominated(
                    S2.graph, S2.extreme_vertices(), node_budget=budget).value
                rows.append({"target": target, "inputs": [key],
                             "lhs": upper, "rhs": lower, "gap": upper - lower,
                             "status": "recorded"})
            except (BudgetExceededError, VertexCapExceeded) as exc:
                rows.append({"target": target, "inputs": [key], "lhs": "", "rhs": "",
                             "status": "budget-exceeded", "detail": str(exc)})
        gaps = [r["gap"] for r in rows if "gap" in r]
        summary = {"rows": len(rows), "max_gap": max(gaps, default=0)}
    else:
        for G, H in pairs:
            keys = [canonical_key(G), canonical_key(H)]
            iota_g = isolation_number(G, node_budget=budget).value
            iota_h = isolation_number(H, node_budget=budget).value
            if target == "vizing-iota":
                rhs = iota_g * iota_h
            elif target == "gamma-lower":
                rhs = max(domination_number(G, node_budget=budget).value * iota_h,
                          domination_number(H, node_budget=budget).value * iota_g)
            else:
                rhs = max(
                    independence_domination_number(G, node_budget=budget).value * iota_h,
                    independence_domination_number(H, node_budget=budget).value * iota_g)
            rho_rhs = max(
                two_packing_number(G, node_budget=budget).value * iota_h,
                two_packing_number(H, node_budget=budget).value * iota_g)
            P = cartesian_product(G, H)
            row = {"target": target, "inputs": keys, "rhs": rhs,
                   "proved_packing_bound": rho_rhs}
            if P.graph.n > PRODUCT_EXACT_ORDER_CAP:
                row.update(lhs="", status="beyond-exact-cap")
                rows.append(row)
                continue
            try:
                lhs = isolation_number(P.graph, node_budget=budget).value
            except BudgetExceededError as exc:
                row.update(lhs="", status="budget-exceeded", detail=str(exc))
                rows.append(row)
                continue
            row["lhs"] = lhs
            row["packing_bound_ok"] = lhs >= rho_rhs
            if not row["packing_bound_ok"]:
                row["status"] = "violated"       # proved bound broken: solver bug
            elif lhs >= rhs:
                row["status"] = "holds"
            else:
                row["status"] = "counterexample"
                witness = isolation_number(P.graph, node_budget=budget).witness
                findings.append({
                    "target": target, "lhs": lhs, "rhs": rhs,
                    "g_edges": serialize_graph(G), "h_edges": serialize_graph(H),
                    "product_isolating_set": list(witness),
                })
            rows.append(row)
        summary = {
            "rows": len(rows),
            "holds": sum(1 for r in rows if r.get("status") == "holds"),
            "counterexamples": len(findings),
            "violated_proved_bound": sum(1 for r in rows if r.get("status") == "violated"),
        }
    campaign = Campaign("explore",
                        {"target": target, "corpus": str(corpus_spec),
                         "budget": budget},
                        rows, findings, summary)
    return campaign
