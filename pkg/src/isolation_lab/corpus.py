"""Corpus generation: exhaustive small-graph enumeration, seeded random
models, brute-force isomorphism, and cache keys.

Isomorphism handling is deliberately desk-scale: an exact backtracking test
guarded by cheap fingerprints, intended for graphs of order <= 10.  The
enumeration of non-isomorphic graphs scans all labeled graphs and deduplicates
with fingerprint buckets plus pairwise isomorphism tests.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterator, Optional

from .core import Graph, VertexSet, is_connected


def graph_fingerprint(G: Graph) -> tuple:
    """Cheap isomorphism-invariant bucket key: degrees, neighbor-degree
    multisets, and per-vertex triangle counts (all sorted)."""
    deg = [G.degree(v) for v in range(G.n)]
    nbr = sorted(tuple(sorted(deg[u] for u in G.neighbors(v))) for v in range(G.n))
    tri = sorted(
        sum(1 for u in G.neighbors(v) for w in G.neighbors(v)
            if u < w and G.has_edge(u, w))
        for v in range(G.n))
    return (G.n, G.m, tuple(sorted(deg)), tuple(nbr), tuple(tri))


def are_isomorphic(G: Graph, H: Graph) -> bool:
    """Exact isomorphism by degree-refined backtracking (order <= 10 intended)."""
    if G.n != H.n or G.m != H.m:
        return False
    if graph_fingerprint(G) != graph_fingerprint(H):
        return False
    n = G.n
    degG = [G.degree(v) for v in range(n)]
    degH = [H.degree(v) for v in range(n)]
    # map G vertices in order of decreasing degree for early pruning
    order = sorted(range(n), key=lambda v: (-degG[v], v))
    mapping = [-1] * n
    used = [False] * n

    def bt(i):
        if i == n:
            return True
        g = order[i]
        for h in range(n):
            if used[h] or degH[h] != degG[g]:
                continue
            ok = True
            for j in range(i):
                g2 = order[j]
                if G.has_edge(g, g2) != H.has_edge(h, mapping[g2]):
                    ok = False
                    break
            if ok:
                mapping[g] = h
                used[h] = True
                if bt(i + 1):
                    return True
                used[h] = False
                mapping[g] = -1
        return False

    return bt(0)


def enumerate_graphs(n: int, connected_only: bool = True) -> list[Graph]:
    """All non-isomorphic graphs of order exactly n, lexicographic
    representatives, optionally restricted to connected graphs."""
    if n < 1:
        raise ValueError("order must be >= 1")
    slots = list(combinations(range(n), 2))
    buckets: dict[tuple, list[Graph]] = {}
    out: list[Graph] = []
    for mask in range(1 << len(slots)):
        edges = [slots[i] for i in range(len(slots)) if mask >> i & 1]
        G = Graph(n, edges)
        if connected_only and not is_connected(G):
            continue
        key = graph_fingerprint(G)
        reps = buckets.setdefault(key, [])
        if any(are_isomorphic(G, R) for R in reps):
            continue
        reps.append(G)
        out.append(G)
    return out


def enumerate_connected_graphs_up_to(n: int) -> list[Graph]:
    out = []
    for k in range(1, n + 1):
        out.extend(enumerate_graphs(k, connected_only=True))
    return out


# Trees via leaf extension with a canonical rooted code (AHU style).

def _tree_centers(G: Graph) -> list[int]:
    n = G.n
    if n == 1:
        return [0]
    deg = [G.degree(v) for v in range(n)]
    leaves = [v for v in range(n) if deg[v] <= 1]
    removed = len(leaves)
    while removed < n:
        nxt = []
        for leaf in leaves:
            for u in G.neighbors(leaf):
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        if not nxt:
            break
        leaves = nxt
        removed += len(nxt)
    return sorted(leaves)


def _rooted_code(G: Graph, root: int, parent: int) -> str:
    child_codes = sorted(
        _rooted_code(G, u, root) for u in G.neighbors(root) if u != parent)
    return "(" + "".join(child_codes) + ")"


def tree_canonical_code(G: Graph) -> str:
    """Canonical string for a tree: least rooted code over its center(s)."""
    return min(_rooted_code(G, c, -1) for c in _tree_centers(G))


def enumerate_trees(n: int) -> list[Graph]:
    """All non-isomorphic trees of order exactly n."""
    if n < 1:
        raise ValueError("order must be >= 1")
    level: dict[str, Graph] = {"()": Graph(1, [])}
    for size in range(2, n + 1):
        nxt: dict[str, Graph] = {}
        for T in level.values():
            for v in range(T.n):
                grown = Graph(size, list(T.edges()) + [(v, size - 1)])
                code = tree_canonical_code(grown)
                if code not in nxt:
                    nxt[code] = grown
        level = nxt
    return [level[c] for c in sorted(level)]


# Seeded random models.

class GenerationError(RuntimeError):
    pass


_REJECTION_CAP = 1000


def random_connected_gnp(rng: random.Random, n: int, p: float) -> Graph:
    """G(n, p) with rejection until connected."""
    for _ in range(_REJECTION_CAP):
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < p]
        G = Graph(n, edges)
        if is_connected(G):
            return G
    raise GenerationError(
        f"no connected G({n},{p}) sample in {_REJECTION_CAP} attempts")


def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniform random labeled tree from a random Pruefer sequence."""
    if n < 1:
        raise ValueError("order must be >= 1")
    if n == 1:
        return Graph(1, [])
    if n == 2:
        return Graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    import heapq
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Graph(n, edges)


def random_connected_bipartite(rng: random.Random, m: int, n: int, p: float) -> Graph:
    """G(m, n, p) on a fixed bipartition, rejected until connected."""
    for _ in range(_REJECTION_CAP):
        edges = [(u, m + v) for u in range(m) for v in range(n)
                 if rng.random() < p]
        G = Graph(m + n, edges)
        if is_connected(G):
            return G
    raise GenerationError(
        f"no connected bipartite G({m},{n},{p}) sample in {_REJECTION_CAP} attempts")


def canonical_key(G: Graph) -> str:
    """Cache key: order, size, degree sequence and sorted edge list under the
    identity labeling.  A lookup key only, not an isomorphism certificate."""
    deg = ".".join(str(d) for d in G.degree_sequence())
    edges = ",".join(f"{u}-{v}" for u, v in G.edges())
    return f"n={G.n};m={G.m};deg={deg};edges={edges}"


@dataclass(frozen=True)
class CorpusSpec:
    """Deterministic corpus description: generator, parameters, seed."""

    generator: str
    params: dict = field(default_factory=dict)
    seed: int = 0

    _GENERATORS = ("all-connected-up-to", "all-trees-up-to", "random-gnp",
                   "random-tree", "random-bipartite", "random-pairs",
                   "named-family-sweep")

    def __post_init__(self):
        if self.generator not in self._GENERATORS:
            raise ValueError(f"unknown corpus generator {self.generator!r}")

    @classmethod
    def parse(cls, text: str, seed: int = 0) -> "CorpusSpec":
        """Parse ``generator:key=value,...``; a bare integer is shorthand for
        ``n=<value>`` (e.g. ``all-connected-up-to:4``)."""
        name, _, rest = text.partition(":")
        params = {}
        if rest:
            for part in rest.split(","):
                k, _, v = part.partition("=")
                if not v:
                    try:
                        params["n"] = int(k)
                        continue
                    except ValueError:
                        raise ValueError(f"corpus parameter {part!r} needs key=value")
                try:
                    params[k] = int(v)
                except ValueError:
                    try:
                        params[k] = float(v)
                    except ValueError:
                        params[k] = v
        return cls(name.strip(), params, seed)

    def __str__(self):
        inner = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.generator}:{inner};seed={self.seed}"


def generate_corpus(spec: CorpusSpec) -> list:
    """Materialize a corpus: a list of Graphs, or of (Graph, Graph) pairs for
    the pair generator.  Identical spec + seed gives identical output."""
    rng = random.Random(spec.seed)
    p = spec.params
    gen = spec.generator
    if gen == "all-connected-up-to":
        return enumerate_connected_graphs_up_to(int(p["n"]))
    if gen == "all-trees-up-to":
        out = []
        for k in range(1, int(p["n"]) + 1):
            out.extend(enumerate_trees(k))
        return out
    if gen == "random-gnp":
        return [random_connected_gnp(rng, int(p["n"]), float(p.get("p", 0.5)))
                for _ in range(int(p.get("count", 1)))]
    if gen == "random-tree":
        return [random_tree(rng, int(p["n"])) for _ in range(int(p.get("count", 1)))]
    if gen == "random-bipartite":
        out = []
        for _ in range(int(p.get("count", 1))):
            total = p.get("n_total")
            if total is not None:
                m = rng.randrange(1, int(total))
                n = int(total) - m
            else:
                m, n = int(p["m"]), int(p["n"])
            out.append(random_connected_bipartite(rng, m, n, float(p.get("p", 0.5))))
        return out
    if gen == "random-pairs":
        lo, hi = int(p.get("min", 3)), int(p.get("max", 7))
        prob = float(p.get("p", 0.5))
        out = []
        for _ in range(int(p.get("count", 1))):
            n1 = rng.randint(lo, hi)
            n2 = rng.randint(lo, hi)
            out.append((random_connected_gnp(rng, n1, prob),
                        random_connected_gnp(rng, n2, prob)))
        return out
    if gen == "named-family-sweep":
        from .core import GraphFamilySpec, standard_family
        fam = str(p["family"])
        return [standard_family(GraphFamilySpec(fam, (k,)))
                for k in range(int(p["start"]), int(p["stop"]) + 1)]
    raise AssertionError(gen)
