import random

import pytest

from isolation_lab import (
    GraphFamilySpec,
    VertexSet,
    build_graph,
    cartesian_product,
    fiber,
    induced_subgraph,
    lexicographic_product,
    project,
    standard_family,
)
from isolation_lab.corpus import are_isomorphic


def fam(text):
    return standard_family(GraphFamilySpec.parse(text))


def random_graph(rng, n, p=0.5):
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                           if rng.random() < p])


def test_k2_box_k2_is_c4():
    P = cartesian_product(fam("complete:2"), fam("complete:2"))
    assert are_isomorphic(P.graph, fam("cycle:4"))


def test_cartesian_degree_identity():
    rng = random.Random(11)
    for _ in range(10):
        G = random_graph(rng, rng.randint(1, 5))
        H = random_graph(rng, rng.randint(1, 5))
        P = cartesian_product(G, H)
        for p in range(P.graph.n):
            g, h = P.coords(p)
            assert P.graph.degree(p) == G.degree(g) + H.degree(h)


def test_iterated_k2_product_matches_hypercube():
    K2 = fam("complete:2")
    G = K2
    for _ in range(3):
        G = cartesian_product(G, K2).graph
    assert G.adj == fam("hypercube:4").adj


def test_lexicographic_examples():
    P = lexicographic_product(fam("complete:2"), fam("complete:2"))
    assert are_isomorphic(P.graph, fam("complete:4"))
    G = fam("cycle:5")
    P = lexicographic_product(G, fam("complete:1"))
    assert P.graph.adj == G.adj


def test_lexicographic_degree_identity():
    rng = random.Random(12)
    for _ in range(10):
        G = random_graph(rng, rng.randint(1, 5))
        H = random_graph(rng, rng.randint(1, 5))
        P = lexicographic_product(G, H)
        for p in range(P.graph.n):
            g, h = P.coords(p)
            assert P.graph.degree(p) == G.degree(g) * H.n + H.degree(h)


def test_edge_count_identities():
    rng = random.Random(13)
    for _ in range(10):
        G = random_graph(rng, rng.randint(1, 6))
        H = random_graph(rng, rng.randint(1, 6))
        box = cartesian_product(G, H).graph
        lex = lexicographic_product(G, H).graph
        assert box.m == G.n * H.m + H.n * G.m
        assert lex.m == H.n * H.n * G.m + G.n * H.m


def test_empty_factor_rejected():
    with pytest.raises(ValueError, match="nonempty"):
        cartesian_product(fam("empty:0"), fam("complete:2"))
    with pytest.raises(ValueError, match="nonempty"):
        lexicographic_product(fam("complete:2"), fam("empty:0"))


def test_projection_examples():
    P = cartesian_product(fam("complete:2"), fam("complete:2"))
    A = VertexSet.of(4, [P.index(0, 0), P.index(0, 1)])
    assert project(P, A, "first").members() == (0,)
    assert project(P, A, "second").members() == (0, 1)
    assert project(P, VertexSet.empty(4), "second").is_empty()


def test_fibers_induce_factor_copies():
    G, H = fam("complete:2"), fam("complete:3")
    P = cartesian_product(G, H)
    hf = fiber(P, "second", 0)
    assert len(hf) == 3
    sub, _ = induced_subgraph(P.graph, hf)
    assert are_isomorphic(sub, H)
    gf = fiber(P, "first", 2)
    sub, _ = induced_subgraph(P.graph, gf)
    assert are_isomorphic(sub, G)
    rng = random.Random(14)
    for _ in range(5):
        G = random_graph(rng, rng.randint(1, 5))
        H = random_graph(rng, rng.randint(1, 5))
        P = cartesian_product(G, H)
        for h in range(H.n):
            sub, _ = induced_subgraph(P.graph, fiber(P, "first", h))
            assert are_isomorphic(sub, G)
        for g in range(G.n):
            sub, _ = induced_subgraph(P.graph, fiber(P, "second", g))
            assert are_isomorphic(sub, H)


def test_cartesian_commutes_up_to_isomorphism():
    rng = random.Random(15)
    for _ in range(8):
        G = random_graph(rng, rng.randint(1, 3))
        H = random_graph(rng, rng.randint(1, 3))
        assert are_isomorphic(cartesian_product(G, H).graph,
                              cartesian_product(H, G).graph)


def test_row_major_indexing_contract():
    P = cartesian_product(fam("path:3"), fam("path:4"))
    assert P.index(2, 1) == 2 * 4 + 1
    assert P.coords(9) == (2, 1)
    with pytest.raises(ValueError):
        P.index(3, 0)
