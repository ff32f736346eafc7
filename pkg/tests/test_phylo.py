from fractions import Fraction
from itertools import product
from random import Random

import pytest

from matroid_ultrametric import fixtures
from matroid_ultrametric.bergman import is_ultrametric_circuits
from matroid_ultrametric.phylo import (
    DissimilarityMap,
    EquidistantTree,
    TreeNode,
    format_distance_matrix,
    is_ultrametric_3pt,
    linf_fit,
    newick_export,
    parse_distance_matrix,
    parse_newick,
    subdominant_ultrametric,
    tree_distance,
    tree_from_ultrametric,
    tree_to_json,
)
from matroid_ultrametric.rational import ParseError
from matroid_ultrametric.subdominant import subdominant

from oracles import brute_minimax

F = Fraction


@pytest.fixture
def w1_map():
    return DissimilarityMap("ABCD", fixtures.w1())


@pytest.fixture
def d123():
    return DissimilarityMap.from_pairs("ABC", {("A", "B"): 1, ("A", "C"): 2, ("B", "C"): 3})


def random_map(rng, n):
    return DissimilarityMap([f"t{i}" for i in range(n)], [F(rng.randint(0, 9), rng.choice((1, 2))) for _ in range(n * (n - 1) // 2)])


def random_tree(rng, taxa):
    """Random equidistant tree by merging random clusters at increasing heights."""
    nodes = [TreeNode(0, label=t) for t in taxa]
    h = F(0)
    while len(nodes) > 1:
        h += F(rng.randint(1, 6), rng.choice((1, 2, 4)))
        k = rng.randint(2, min(3, len(nodes)))
        rng.shuffle(nodes)
        merged, nodes = nodes[:k], nodes[k:]
        nodes.append(TreeNode(h, tuple(merged)))
    return EquidistantTree(nodes[0], tuple(taxa))


# -- dissimilarity maps -------------------------------------------------------


def test_map_indexing(w1_map):
    assert w1_map["A", "B"] == F(6, 5)
    assert w1_map["C", "B"] == F(1, 5)
    assert w1_map[2, 3] == 2
    assert w1_map["D", "D"] == 0
    m = w1_map.to_matrix()
    assert all(m[i][j] == m[j][i] for i in range(4) for j in range(4))


def test_map_validation():
    with pytest.raises(ValueError):
        DissimilarityMap("AB", [1, 2])
    with pytest.raises(ValueError):
        DissimilarityMap("AA", [1])
    with pytest.raises(ValueError):
        DissimilarityMap.from_matrix("AB", [[0, 1], [2, 0]])
    with pytest.raises(ValueError):
        DissimilarityMap.from_matrix("AB", [[1, 1], [1, 0]])


def test_map_matroid_edge_order(w1_map):
    k = w1_map.matroid()
    assert k.labels(k.full) == ("A-B", "A-C", "A-D", "B-C", "B-D", "C-D")


# -- three-point condition ----------------------------------------------------


def test_three_point_examples(w1_map, d123):
    assert is_ultrametric_3pt(w1_map)
    assert not is_ultrametric_3pt(d123)
    assert is_ultrametric_3pt(DissimilarityMap("ABCD", [5] * 6))


@pytest.mark.parametrize("n", [3, 4])
def test_three_point_matches_matroid_exhaustive(n):
    taxa = [str(i) for i in range(n)]
    k = DissimilarityMap(taxa, [0] * (n * (n - 1) // 2)).matroid()
    for vals in product((0, 1, 2), repeat=n * (n - 1) // 2):
        d = DissimilarityMap(taxa, vals)
        assert is_ultrametric_3pt(d) == is_ultrametric_circuits(k, d.values)


@pytest.mark.parametrize("n", [5, 6])
def test_three_point_matches_matroid_random(n):
    rng = Random(n)
    k = random_map(rng, n).matroid()
    for i in range(1500):
        d = random_map(rng, n)
        if i % 2:
            d = subdominant_ultrametric(d)
        assert is_ultrametric_3pt(d) == is_ultrametric_circuits(k, d.values)


# -- subdominant ultrametric ----------------------------------------------------


def test_subdominant_ultrametric_examples(w1_map, d123):
    assert subdominant_ultrametric(d123).values == (1, 2, 2)
    assert subdominant_ultrametric(w1_map) == w1_map
    d = DissimilarityMap("XY", [7])
    assert subdominant_ultrametric(d) == d


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_minimax_matches_path_enumeration_and_matroid(n):
    rng = Random(100 + n)
    k = random_map(rng, n).matroid()
    for _ in range(30 if n < 6 else 5):
        d = random_map(rng, n)
        u = subdominant_ultrametric(d)
        brute = brute_minimax(n, lambda a, b: d[a, b])
        assert list(u.values) == [brute[p] for p in d.pairs]
        assert u.values == subdominant(k, d.values)


# -- fitting ------------------------------------------------------------------


def test_fit_example(d123):
    fit, eps = linf_fit(d123)
    assert fit.values == (F(3, 2), F(5, 2), F(5, 2))
    assert eps == F(1, 2)


def test_fit_of_ultrametric_is_identity(w1_map):
    fit, eps = linf_fit(w1_map)
    assert fit == w1_map and eps == 0


@pytest.mark.parametrize("seed", range(10))
def test_fit_translation_equivariant(seed):
    rng = Random(seed)
    d = random_map(rng, 5)
    c = F(rng.randint(-5, 5), 3)
    fit, eps = linf_fit(d)
    fit2, eps2 = linf_fit(d.shifted(c))
    assert eps2 == eps and fit2 == fit.shifted(c)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_fit_beats_random_ultrametrics(n):
    rng = Random(n)
    d = random_map(rng, n)
    fit, eps = linf_fit(d)
    assert is_ultrametric_3pt(fit)
    assert d.linf(fit) == eps
    for _ in range(1000):
        z = tree_distance(random_tree(rng, d.taxa))
        # a random tree lives on its own scale; also try its best constant shift
        gaps = [a - b for a, b in zip(d.values, z.values)]
        best = z.shifted((max(gaps) + min(gaps)) / 2)
        assert d.linf(z) >= eps
        assert d.linf(best) >= eps


# -- trees --------------------------------------------------------------------


def test_tree_from_w1(w1_map):
    t = tree_from_ultrametric(w1_map)
    heights = sorted(node.height for node in t.internal_nodes())
    assert heights == [F(1, 10), F(3, 5), F(1)]
    assert set(t.root.children[1].leaves()) == {"D"}
    assert tree_distance(t) == w1_map


def test_tree_star_and_cherry():
    star = tree_from_ultrametric(DissimilarityMap("abc", [2, 2, 2]))
    assert star.root.height == 1 and len(star.root.children) == 3
    cherry = tree_from_ultrametric(DissimilarityMap("XY", [6]))
    assert cherry.root.height == 3
    assert tree_distance(cherry).values == (6,)


def test_tree_rejects_non_ultrametric(d123):
    with pytest.raises(ValueError):
        tree_from_ultrametric(d123)


def test_tree_validation():
    leaf = TreeNode(0, label="a")
    with pytest.raises(ValueError):
        EquidistantTree(TreeNode(1, (leaf, TreeNode(0, label="a"))))
    with pytest.raises(ValueError):
        EquidistantTree(TreeNode(1, (TreeNode(2, (leaf, TreeNode(0, label="b"))), TreeNode(0, label="c"))))
    with pytest.raises(ValueError):
        TreeNode(1)


@pytest.mark.parametrize("seed", range(30))
def test_round_trips(seed):
    rng = Random(seed)
    taxa = [f"s{i}" for i in range(rng.randint(2, 7))]
    t = random_tree(rng, taxa)
    u = tree_distance(t)
    assert is_ultrametric_3pt(u)
    assert tree_from_ultrametric(u) == t
    assert tree_distance(tree_from_ultrametric(u)) == u
    assert parse_newick(newick_export(t)) == t


def test_round_trip_from_ultrametric():
    rng = Random(4)
    for _ in range(50):
        u = subdominant_ultrametric(random_map(rng, 6))
        assert tree_distance(tree_from_ultrametric(u)) == u


# -- Newick and JSON ------------------------------------------------------------


def test_newick_examples(w1_map):
    assert newick_export(tree_from_ultrametric(w1_map)) == "((A:0.6,(B:0.1,C:0.1):0.5):0.4,D:1);"
    assert newick_export(tree_from_ultrametric(DissimilarityMap("XY", [6]))) == "(X:3,Y:3);"
    assert newick_export(tree_from_ultrametric(DissimilarityMap("abc", [2, 2, 2]))) == "(a:1,b:1,c:1);"


def test_newick_quoting_and_rationals():
    d = DissimilarityMap(["it's", "b c", "d"], [F(2, 3), F(2), F(2)])
    t = tree_from_ultrametric(d)
    text = newick_export(t)
    assert text == "(('b c':1/3,'it''s':1/3):2/3,d:1);"
    assert parse_newick(text) == t


@pytest.mark.parametrize(
    "text",
    ["(A:1,B:1)", "(A:1,B:2);", "(A,B:1);", "(A:1,B:1;", "(:1,B:1);", "(A:x,B:1);", "('A:1,B:1);"],
)
def test_newick_parse_errors(text):
    with pytest.raises(ParseError):
        parse_newick(text)


def test_tree_json(w1_map):
    doc = tree_to_json(tree_from_ultrametric(w1_map))
    assert doc["height"] == "1" and doc["node"] is None
    assert [c["node"] for c in doc["children"]] == [None, "D"]


# -- distance matrix CSV ----------------------------------------------------------


def test_matrix_csv_round_trip(w1_map):
    text = format_distance_matrix(w1_map)
    assert text.splitlines()[0] == ",A,B,C,D"
    assert parse_distance_matrix(text) == w1_map


@pytest.mark.parametrize(
    "text",
    [
        ",A,B\nA,0,1\nB,2,0\n",
        ",A,B\nA,1,1\nB,1,0\n",
        ",A,B\nA,0,1\nC,1,0\n",
        ",A,B\nA,0,1\n",
        ",A,B\nA,0,x\nB,1,0\n",
        ",A,B\nA,0\nB,1,0\n",
        "",
    ],
)
def test_matrix_csv_errors(text):
    with pytest.raises(ParseError):
        parse_distance_matrix(text)
