"""Certified set builders: each constructive argument becomes an algorithm
returning a vertex set together with re-verified certificate assertions.

A failed certificate raises: the builders encode constructive proofs, so any
disagreement is an implementation bug, never a warning.  Where an argument
chooses arbitrarily (which optimal set, which coloring, which second-factor
vertex), the deterministic lexicographically-least witness from the solvers
is used so runs are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .core import Graph, VertexSet, is_dominating, is_isolating
from .products import ProductGraph, cartesian_product, lexicographic_product
from .solvers import (
    DEFAULT_NODE_BUDGET,
    clique_number,
    domination_number,
    independence_number,
    isolation_number,
    max_k_colorable_subgraph,
    saturation_number,
    total_domination_number,
)


class CertificateError(AssertionError):
    """A constructed set failed one of its own certificate checks."""


class HypothesisError(ValueError):
    """The input does not satisfy a construction's hypotheses."""


class NonBipartiteError(HypothesisError):
    """Raised with an explicit odd cycle when a bipartite input was required."""

    def __init__(self, cycle: tuple[int, ...]):
        super().__init__(f"graph is not bipartite: odd cycle {cycle}")
        self.cycle = cycle


class EnumerationCapExceeded(RuntimeError):
    def __init__(self, cap: int, partial: int):
        super().__init__(
            f"enumeration cap {cap} exceeded ({partial} sets found so far)")
        self.cap = cap
        self.partial = partial


@dataclass(frozen=True)
class CertifiedSet:
    """A constructed set, its claimed size bound, and the checks it passed."""

    target: Graph
    members: VertexSet
    bound: int
    checks: tuple[str, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def _certify(target: Graph, members: VertexSet, bound: int,
             dominating: bool = False) -> CertifiedSet:
    checks = []
    if not is_isolating(target, members):
        raise CertificateError("constructed set is not isolating")
    checks.append("isolating")
    if dominating:
        if not is_dominating(target, members):
            raise CertificateError("constructed set is not dominating")
        checks.append("dominating")
    if len(members) != bound:
        raise CertificateError(
            f"constructed set has size {len(members)}, bound says {bound}")
    checks.append(f"size={bound}")
    return CertifiedSet(target, members, bound, tuple(checks))


# Isolation graph: one vertex per minimum isolating set, adjacency when the
# undominated leftovers are disjoint.

@dataclass(frozen=True)
class IsolationGraph:
    graph: Graph
    source: Graph
    sets: tuple[tuple[int, ...], ...]
    leftovers: tuple[tuple[int, ...], ...]


def isolation_graph(G: Graph, *, enumeration_cap: int = 20_000,
                    node_budget: int = DEFAULT_NODE_BUDGET) -> IsolationGraph:
    """Enumerate all minimum isolating sets and wire up the disjoint-leftover
    adjacency; sets appear in lexicographic order."""
    base = isolation_number(G, node_budget=node_budget)
    full = G.full_mask()
    sets = []
    leftover_masks = []
    for comb in combinations(range(G.n), base.value):
        A = VertexSet.of(G.n, comb)
        if is_isolating(G, A):
            if len(sets) >= enumeration_cap:
                raise EnumerationCapExceeded(enumeration_cap, len(sets))
            covered = 0
            for v in comb:
                covered |= G.closed[v]
            sets.append(comb)
            leftover_masks.append(full & ~covered)
    edges = [(i, j)
             for i in range(len(sets)) for j in range(i + 1, len(sets))
             if leftover_masks[i] & leftover_masks[j] == 0]
    labels = ["{" + ",".join(str(v) for v in s) + "}" for s in sets]
    leftovers = tuple(tuple(VertexSet(G.n, m).members()) for m in leftover_masks)
    return IsolationGraph(Graph(len(sets), edges, labels), G, tuple(sets), leftovers)


# Upper-bound builders on the Cartesian product.

def independence_split_isolating_set(G: Graph, H: Graph, *,
                                     node_budget: int = DEFAULT_NODE_BUDGET
                                     ) -> CertifiedSet:
    """Pair a maximum independent set of one factor with an isolating set of
    the other, and the remaining vertices with a dominating set; the smaller
    of the two orientations is returned (certified on G box H)."""
    P = cartesian_product(G, H)

    def one(A: Graph, B: Graph):
        alpha = independence_number(A, node_budget=node_budget)
        iota = isolation_number(B, node_budget=node_budget)
        gamma = domination_number(B, node_budget=node_budget)
        amask = VertexSet.of(A.n, alpha.witness)
        pairs = [(g, h) for g in alpha.witness for h in iota.witness]
        pairs += [(g, h) for g in amask.complement() for h in gamma.witness]
        bound = alpha.value * iota.value + (A.n - alpha.value) * gamma.value
        return pairs, bound

    pairs_gh, bound_gh = one(G, H)
    pairs_hg, bound_hg = one(H, G)
    if bound_hg < bound_gh:
        pairs = [(g, h) for h, g in pairs_hg]
        bound = bound_hg
    else:
        pairs, bound = pairs_gh, bound_gh
    members = VertexSet.of(P.graph.n, (P.index(g, h) for g, h in pairs))
    return _certify(P.graph, members, bound)


def clique_coloring_isolating_set(G: Graph, H: Graph, *,
                                  enumeration_cap: int = 20_000,
                                  node_budget: int = DEFAULT_NODE_BUDGET
                                  ) -> CertifiedSet:
    """Combine a maximum clique of the isolation graph of one factor (k
    pairwise leftover-disjoint minimum isolating sets) with a maximum induced
    k-colorable subgraph of the other factor; uncolored vertices are paired
    with a dominating set.  Returns the smaller orientation on G box H."""
    P = cartesian_product(G, H)

    def one(A: Graph, B: Graph):
        IB = isolation_graph(B, enumeration_cap=enumeration_cap,
                             node_budget=node_budget)
        omega = clique_number(IB.graph, node_budget=node_budget)
        clique_sets = [IB.sets[i] for i in omega.witness]
        k = omega.value
        gamma = domination_number(B, node_budget=node_budget)
        akres = max_k_colorable_subgraph(A, k, node_budget=node_budget)
        coloring = akres.aux["coloring"]
        colored = VertexSet.of(A.n, akres.witness)
        pairs = [(g, h) for g in colored.complement() for h in gamma.witness]
        for i, iso_set in enumerate(clique_sets, start=1):
            cls = [v for v in akres.witness if coloring[v] == i]
            pairs += [(g, h) for g in cls for h in iso_set]
        bound = akres.value * isolation_number(B, node_budget=node_budget).value \
            + (A.n - akres.value) * gamma.value
        return pairs, bound

    pairs_gh, bound_gh = one(G, H)
    pairs_hg, bound_hg = one(H, G)
    if bound_hg < bound_gh:
        pairs = [(g, h) for h, g in pairs_hg]
        bound = bound_hg
    else:
        pairs, bound = pairs_gh, bound_gh
    members = VertexSet.of(P.graph.n, (P.index(g, h) for g, h in pairs))
    return _certify(P.graph, members, bound)


def vertex_cover_product_isolating_set(G: Graph, H: Graph, *,
                                       node_budget: int = DEFAULT_NODE_BUDGET
                                       ) -> CertifiedSet:
    """Product of minimum vertex covers (complements of maximum independent
    sets); needs both factors free of isolated vertices."""
    for name, F in (("first", G), ("second", H)):
        if F.isolated_vertices():
            raise HypothesisError(
                f"{name} factor has an isolated vertex "
                f"{F.isolated_vertices()[0]}")
    P = cartesian_product(G, H)
    ag = independence_number(G, node_budget=node_budget)
    ah = independence_number(H, node_budget=node_budget)
    cover_g = VertexSet.of(G.n, ag.witness).complement()
    cover_h = VertexSet.of(H.n, ah.witness).complement()
    members = VertexSet.of(P.graph.n,
                           (P.index(g, h) for g in cover_g for h in cover_h))
    return _certify(P.graph, members, (G.n - ag.value) * (H.n - ah.value))


def bipartition(G: Graph) -> tuple[VertexSet, VertexSet]:
    """Two-color each component by breadth-first search; isolated vertices go
    to the first side.  Raises with an explicit odd cycle otherwise."""
    color = [-1] * G.n
    parent = [-1] * G.n
    for root in range(G.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in G.neighbors(u):
                if color[v] == -1:
                    color[v] = color[u] ^ 1
                    parent[v] = u
                    queue.append(v)
                elif color[v] == color[u]:
                    up = [u]
                    while up[-1] != -1 and parent[up[-1]] != -1:
                        up.append(parent[up[-1]])
                    anc = {x: i for i, x in enumerate(up)}
                    w = v
                    down = [w]
                    while w not in anc:
                        w = parent[w]
                        down.append(w)
                    cycle = tuple(up[:anc[w] + 1] + down[-2::-1])
                    raise NonBipartiteError(cycle)
    side0 = VertexSet.of(G.n, (v for v in range(G.n) if color[v] == 0))
    return side0, side0.complement()


def prism_isolating_set(G: Graph, *,
                        node_budget: int = DEFAULT_NODE_BUDGET) -> CertifiedSet:
    """Split a minimum dominating set of a bipartite G across the two layers
    of the prism according to the bipartition sides."""
    side0, _ = bipartition(G)
    K2 = Graph(2, [(0, 1)])
    P = cartesian_product(G, K2)
    gamma = domination_number(G, node_budget=node_budget)
    members = VertexSet.of(
        P.graph.n,
        (P.index(v, 0 if v in side0 else 1) for v in gamma.witness))
    return _certify(P.graph, members, gamma.value)


def lexicographic_isolating_set(G: Graph, H: Graph, *,
                                node_budget: int = DEFAULT_NODE_BUDGET) -> CertifiedSet:
    """A minimum total dominating set of G in a single H-layer dominates the
    whole lexicographic product; needs both factors nontrivial and connected
    and the second factor's isolation number at least 2."""
    from .core import is_connected
    if G.n < 2 or H.n < 2:
        raise HypothesisError("both factors must be nontrivial")
    if not is_connected(G) or not is_connected(H):
        raise HypothesisError("both factors must be connected")
    iota_h = isolation_number(H, node_budget=node_budget)
    if iota_h.value < 2:
        raise HypothesisError(
            f"second factor has isolation number {iota_h.value} < 2")
    P = lexicographic_product(G, H)
    gamma_t = total_domination_number(G, node_budget=node_budget)
    members = VertexSet.of(P.graph.n, (P.index(v, 0) for v in gamma_t.witness))
    return _certify(P.graph, members, gamma_t.value, dominating=True)


def saturation_isolating_set(G: Graph, *,
                             node_budget: int = DEFAULT_NODE_BUDGET) -> CertifiedSet:
    """One endpoint (the lower index) per edge of a minimum maximal matching."""
    sat = saturation_number(G, node_budget=node_budget)
    members = VertexSet.of(G.n, (min(u, v) for u, v in sat.witness))
    return _certify(G, members, sat.value)
