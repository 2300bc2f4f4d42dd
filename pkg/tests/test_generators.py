import pytest

from comfnet import (
    complete_graph,
    connected_gnp,
    cycle_graph,
    eccentricity_profile,
    enumerate_trees,
    generate,
    gnp,
    path_graph,
    random_tree,
    star_graph,
)
from comfnet.corpus import (
    cycles_corpus,
    gnp_corpus,
    parse_corpus_spec,
    standard_corpus,
    trees_corpus,
)

# one representative count per size, a classic sequence worth pinning
TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47]


def test_basic_shapes():
    assert path_graph(1).m == 0
    assert path_graph(4).m == 3
    assert cycle_graph(5).m == 5
    assert star_graph(4).m == 4
    assert complete_graph(5).m == 10


def test_shape_validation():
    with pytest.raises(ValueError):
        cycle_graph(2)
    with pytest.raises(ValueError):
        path_graph(0)
    with pytest.raises(ValueError):
        gnp(5, 1.5)
    with pytest.raises(ValueError):
        gnp(0, 0.5)


def test_gnp_deterministic():
    assert gnp(20, 0.2, seed=7) == gnp(20, 0.2, seed=7)
    assert gnp(20, 0.2, seed=7) != gnp(20, 0.2, seed=8)


def test_random_tree_is_tree():
    for seed in range(6):
        for n in (1, 2, 5, 9):
            t = random_tree(n, seed=seed)
            assert t.m == n - 1 if n > 1 else t.m == 0
            assert t.is_connected()
    assert random_tree(8, seed=3) == random_tree(8, seed=3)


def test_connected_gnp_connected():
    g = connected_gnp(15, 0.2, seed=3)
    assert g.is_connected()
    assert g == connected_gnp(15, 0.2, seed=3)


def test_generate_dispatch():
    assert generate("path", 6) == path_graph(6)
    assert generate("cycle", 6) == cycle_graph(6)
    assert generate("tree", 7, seed=2) == random_tree(7, seed=2)
    assert generate("gnp", 12, p=0.3, seed=5) == gnp(12, 0.3, seed=5)
    assert generate("gnp", 12, p=0.15, seed=5, require_connected=True).is_connected()
    with pytest.raises(ValueError):
        generate("gnp", 12)
    with pytest.raises(ValueError):
        generate("torus", 12)


def test_enumerate_trees_counts():
    assert [len(enumerate_trees(n)) for n in range(1, 10)] == TREE_COUNTS


def test_enumerated_trees_are_trees_and_order_is_stable():
    trees = enumerate_trees(7)
    for t in trees:
        assert t.n == 7 and t.m == 6 and t.is_connected()
    again = enumerate_trees(7)
    assert [t.edges for t in trees] == [t.edges for t in again]


# --- corpora ------------------------------------------------------------------

def test_trees_corpus_filters_diameter():
    graphs = trees_corpus()
    assert all(eccentricity_profile(g).diameter >= 3 for g in graphs)
    assert all(4 <= g.n <= 9 for g in graphs)
    # stars drop out of every size class
    assert len(graphs) == sum(TREE_COUNTS[3:]) - 6


def test_cycles_corpus_range():
    graphs = cycles_corpus(7, 12)
    assert [g.n for g in graphs] == list(range(7, 13))


def test_gnp_corpus_is_reproducible_and_filtered():
    a = gnp_corpus(count=12)
    b = gnp_corpus(count=12)
    assert [g.edges for g in a] == [g.edges for g in b]
    for g in a:
        assert g.is_connected()
        assert 10 <= g.n <= 40
        assert eccentricity_profile(g).diameter >= 3


def test_standard_corpus_composition():
    graphs = standard_corpus()
    assert len(graphs) == len(trees_corpus()) + 24 + 200


def test_parse_corpus_spec():
    assert [g.n for g in parse_corpus_spec("cycles:7-9")] == [7, 8, 9]
    assert len(parse_corpus_spec("paths:4-6+cycles:7-8")) == 5
    gnps = parse_corpus_spec("gnp:n=12,p=0.3,count=3,seed=5")
    assert len(gnps) == 3 and all(g.is_connected() for g in gnps)
    with pytest.raises(ValueError):
        parse_corpus_spec("moebius:3-9")
    with pytest.raises(ValueError):
        parse_corpus_spec("cycles:x-9")
    with pytest.raises(ValueError):
        parse_corpus_spec("")
