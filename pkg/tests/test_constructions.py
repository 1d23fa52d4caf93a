import random

import pytest

from isolation_lab import (
    CertifiedSet,
    EnumerationCapExceeded,
    GraphFamilySpec,
    HypothesisError,
    NonBipartiteError,
    VertexSet,
    bipartition,
    build_graph,
    cartesian_product,
    clique_coloring_isolating_set,
    clique_number,
    domination_number,
    independence_split_isolating_set,
    is_dominating,
    is_isolating,
    isolation_graph,
    isolation_number,
    lexicographic_isolating_set,
    lexicographic_product,
    prism_isolating_set,
    saturation_isolating_set,
    saturation_number,
    standard_family,
    total_domination_number,
    vertex_cover_product_isolating_set,
)
from isolation_lab.corpus import are_isomorphic, random_connected_gnp


def fam(text):
    return standard_family(GraphFamilySpec.parse(text))


def test_isolation_graph_complete():
    for n in (3, 4, 5):
        IG = isolation_graph(fam(f"complete:{n}"))
        assert are_isomorphic(IG.graph, fam(f"complete:{n}"))
        assert clique_number(IG.graph).value == n
        assert all(L == () for L in IG.leftovers)


def test_isolation_graph_star():
    for n in (3, 4, 5):
        IG = isolation_graph(fam(f"star:{n}"))
        assert are_isomorphic(IG.graph, fam(f"star:{n}"))
        assert clique_number(IG.graph).value == 2


def test_isolation_graph_payloads_certify():
    G = fam("cycle:5")
    IG = isolation_graph(G)
    iota = isolation_number(G).value
    for A, L in zip(IG.sets, IG.leftovers):
        assert len(A) == iota
        assert is_isolating(G, VertexSet.of(G.n, A))
        covered = 0
        for v in A:
            covered |= G.closed[v]
        assert VertexSet(G.n, G.full_mask() & ~covered).members() == L


def test_isolation_graph_empty_leftover_is_universal():
    G = fam("star:4")
    IG = isolation_graph(G)
    for i, L in enumerate(IG.leftovers):
        if L == ():
            assert IG.graph.degree(i) == IG.graph.n - 1


def test_isolation_graph_cap():
    with pytest.raises(EnumerationCapExceeded) as info:
        isolation_graph(fam("complete:5"), enumeration_cap=2)
    assert info.value.partial == 2


def test_independence_split_construction():
    K2 = fam("complete:2")
    cert = independence_split_isolating_set(K2, K2)
    assert cert.size == 2 and "isolating" in cert.checks
    rng = random.Random(31)
    for _ in range(10):
        G = random_connected_gnp(rng, rng.randint(2, 5), 0.5)
        H = random_connected_gnp(rng, rng.randint(2, 5), 0.5)
        cert = independence_split_isolating_set(G, H)
        assert is_isolating(cert.target, cert.members)
        assert isolation_number(cert.target).value <= cert.size == cert.bound


def test_clique_coloring_construction_sharp_cases():
    cert = clique_coloring_isolating_set(fam("complete:2"), fam("complete:3"))
    assert cert.size == 2
    P = cartesian_product(fam("complete:3"), fam("complete:2"))
    assert isolation_number(P.graph).value == 2
    cert = clique_coloring_isolating_set(fam("cycle:5"), fam("complete:5"))
    assert cert.size == 5
    P = cartesian_product(fam("complete:5"), fam("cycle:5"))
    assert isolation_number(P.graph).value == 5


def test_clique_coloring_always_certifies():
    rng = random.Random(32)
    for _ in range(8):
        G = random_connected_gnp(rng, rng.randint(2, 5), 0.5)
        H = random_connected_gnp(rng, rng.randint(2, 5), 0.5)
        cert = clique_coloring_isolating_set(G, H)
        assert is_isolating(cert.target, cert.members)
        assert isolation_number(cert.target).value <= cert.size


def test_cover_product_construction():
    cert = vertex_cover_product_isolating_set(fam("path:5"), fam("path:5"))
    assert cert.size == 4
    cert = vertex_cover_product_isolating_set(fam("star:3"), fam("star:4"))
    assert cert.size == 1
    with pytest.raises(HypothesisError, match="isolated"):
        vertex_cover_product_isolating_set(fam("empty:2"), fam("path:2"))


def test_bipartition_and_odd_cycle():
    side0, side1 = bipartition(fam("complete_bipartite:2,3"))
    assert side0.members() == (0, 1) and side1.members() == (2, 3, 4)
    G = build_graph(4, [(0, 1), (2, 3)])
    s0, _ = bipartition(G)
    assert 0 in s0 and 2 in s0
    with pytest.raises(NonBipartiteError) as info:
        bipartition(fam("cycle:5"))
    cyc = info.value.cycle
    assert len(cyc) % 2 == 1 and len(cyc) >= 3
    C5 = fam("cycle:5")
    for i, u in enumerate(cyc):
        assert C5.has_edge(u, cyc[(i + 1) % len(cyc)])


def test_prism_construction():
    cert = prism_isolating_set(fam("path:4"))
    assert cert.size == 2
    Q3 = fam("hypercube:3")
    cert = prism_isolating_set(Q3)
    assert cert.size == domination_number(Q3).value
    cert = prism_isolating_set(fam("complete:2"))
    assert cert.size == 1
    with pytest.raises(NonBipartiteError):
        prism_isolating_set(fam("complete:3"))


def test_prism_matches_exact_on_bipartite_corpus():
    rng = random.Random(33)
    from isolation_lab.corpus import random_connected_bipartite
    for _ in range(10):
        G = random_connected_bipartite(rng, rng.randint(1, 4), rng.randint(1, 4), 0.6)
        cert = prism_isolating_set(G)
        P = cartesian_product(G, fam("complete:2"))
        assert cert.size == isolation_number(P.graph).value == \
            domination_number(G).value


def test_lexicographic_construction():
    cert = lexicographic_isolating_set(fam("path:4"), fam("cycle:5"))
    assert cert.size == 2 and "dominating" in cert.checks
    P = lexicographic_product(fam("path:4"), fam("cycle:5"))
    assert isolation_number(P.graph).value == 2
    cert = lexicographic_isolating_set(fam("complete:2"), fam("cycle:5"))
    assert cert.size == 2
    for bad in (fam("complete:1"), build_graph(4, [(0, 1), (2, 3)])):
        with pytest.raises(HypothesisError):
            lexicographic_isolating_set(bad, fam("cycle:5"))
    with pytest.raises(HypothesisError, match="isolation number"):
        lexicographic_isolating_set(fam("path:4"), fam("complete:4"))


def test_saturation_construction():
    cert = saturation_isolating_set(fam("path:4"))
    assert cert.size == 1
    cert = saturation_isolating_set(fam("cycle:5"))
    assert cert.size == 2
    cert = saturation_isolating_set(fam("empty:4"))
    assert cert.size == 0 and cert.members.is_empty()
    rng = random.Random(34)
    for _ in range(10):
        G = random_connected_gnp(rng, rng.randint(2, 7), 0.4)
        cert = saturation_isolating_set(G)
        assert cert.size == saturation_number(G).value
        assert isolation_number(G).value <= cert.size


def test_constructions_upper_bound_exact_iota():
    rng = random.Random(35)
    for _ in range(6):
        G = random_connected_gnp(rng, rng.randint(2, 4), 0.5)
        H = random_connected_gnp(rng, rng.randint(2, 4), 0.5)
        exact = isolation_number(cartesian_product(G, H).graph).value
        for builder in (independence_split_isolating_set,
                        clique_coloring_isolating_set,
                        vertex_cover_product_isolating_set):
            assert exact <= builder(G, H).size
