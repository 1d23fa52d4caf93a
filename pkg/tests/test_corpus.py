import random

import pytest

from isolation_lab import GraphFamilySpec, build_graph, is_connected, standard_family
from isolation_lab.corpus import (
    CorpusSpec,
    GenerationError,
    are_isomorphic,
    canonical_key,
    enumerate_connected_graphs_up_to,
    enumerate_graphs,
    enumerate_trees,
    generate_corpus,
    random_connected_bipartite,
    random_connected_gnp,
    random_tree,
    tree_canonical_code,
)


def fam(text):
    return standard_family(GraphFamilySpec.parse(text))


def test_isomorphism_basic():
    assert are_isomorphic(fam("cycle:4"), build_graph(4, [(0, 2), (2, 1), (1, 3), (3, 0)]))
    assert not are_isomorphic(fam("path:4"), fam("star:3"))
    assert not are_isomorphic(fam("cycle:6"), build_graph(6, [(0, 1), (1, 2), (2, 0),
                                                              (3, 4), (4, 5), (5, 3)]))


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21)])
def test_connected_graph_counts(n, expected):
    assert len(enumerate_graphs(n)) == expected


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
def test_all_graph_counts(n, expected):
    assert len(enumerate_graphs(n, connected_only=False)) == expected


def test_connected_up_to_4_count():
    corpus = enumerate_connected_graphs_up_to(4)
    assert len(corpus) == 10
    by_order = {}
    for G in corpus:
        by_order[G.n] = by_order.get(G.n, 0) + 1
    assert by_order == {1: 1, 2: 1, 3: 2, 4: 6}


def test_enumeration_yields_pairwise_non_isomorphic():
    graphs = enumerate_graphs(5)
    for i in range(len(graphs)):
        for j in range(i + 1, len(graphs)):
            assert not are_isomorphic(graphs[i], graphs[j])


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 1), (3, 1), (4, 2), (5, 3),
                                        (6, 6), (7, 11), (8, 23), (9, 47)])
def test_tree_counts(n, expected):
    trees = enumerate_trees(n)
    assert len(trees) == expected
    for T in trees:
        assert T.m == n - 1 and is_connected(T)


def test_tree_canonical_code_invariant():
    T1 = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    T2 = build_graph(4, [(3, 2), (2, 0), (0, 1)])
    assert tree_canonical_code(T1) == tree_canonical_code(T2)
    star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert tree_canonical_code(T1) != tree_canonical_code(star)


def test_random_generators_connected_and_seeded():
    rng = random.Random(9)
    for _ in range(10):
        assert is_connected(random_connected_gnp(rng, 6, 0.5))
        T = random_tree(rng, 8)
        assert T.m == 7 and is_connected(T)
        B = random_connected_bipartite(rng, 3, 4, 0.5)
        assert is_connected(B)
    a = random_connected_gnp(random.Random(5), 7, 0.5)
    b = random_connected_gnp(random.Random(5), 7, 0.5)
    assert a.adj == b.adj


def test_random_rejection_cap():
    rng = random.Random(0)
    with pytest.raises(GenerationError):
        random_connected_gnp(rng, 9, 0.0)


def test_canonical_key_stable():
    assert canonical_key(fam("complete:3")) == canonical_key(fam("complete:3"))
    assert canonical_key(fam("complete:3")) == "n=3;m=3;deg=2.2.2;edges=0-1,0-2,1-2"
    # identity-labeling key: relabeled isomorphic graphs may differ (documented)
    assert canonical_key(fam("path:3")) != canonical_key(build_graph(3, [(1, 0), (0, 2)]))


def test_corpus_spec_parse_and_roundtrip():
    spec = CorpusSpec.parse("random-pairs:count=5,min=3,max=7", seed=3)
    assert spec.params == {"count": 5, "min": 3, "max": 7} and spec.seed == 3
    spec2 = CorpusSpec.parse("all-connected-up-to:4")
    assert spec2.params == {"n": 4}
    with pytest.raises(ValueError):
        CorpusSpec.parse("nosuch:1")


def test_generate_corpus_deterministic():
    spec = CorpusSpec.parse("random-gnp:n=6,count=4,p=0.5", seed=77)
    a = generate_corpus(spec)
    b = generate_corpus(spec)
    assert [g.adj for g in a] == [g.adj for g in b]
    pairs = generate_corpus(CorpusSpec.parse("random-pairs:count=3", seed=1))
    assert all(isinstance(t, tuple) and len(t) == 2 for t in pairs)
    sweep = generate_corpus(CorpusSpec.parse("named-family-sweep:family=cycle,start=3,stop=5"))
    assert [g.n for g in sweep] == [3, 4, 5]
    trees = generate_corpus(CorpusSpec.parse("all-trees-up-to:5"))
    assert len(trees) == 1 + 1 + 1 + 2 + 3
