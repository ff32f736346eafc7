from fractions import Fraction
from itertools import combinations
from random import Random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from matroid_ultrametric import fixtures
from matroid_ultrametric.bergman import superlevel_flat_test
from matroid_ultrametric.subdominant import subdominant
from matroid_ultrametric.tropical import (
    INF,
    TropicalPoint,
    TropicalPolytope,
    flat_generator,
    is_vertex_generator,
    lambda_coefficient,
    matroid_vertex_set,
    nearest_point,
    project_bergman,
    tp_distance,
    trop_add,
    trop_combine,
    trop_mul,
)

from conftest import ALL_FIXTURES
from oracles import random_weights

F = Fraction
scalars = st.one_of(st.fractions(), st.just(INF))


def test_scalar_examples():
    assert trop_add(3, 5) == 3
    assert trop_mul(3, 5) == 8
    assert trop_mul(F(7), INF) == INF
    assert trop_add(F(7), INF) == 7


@given(scalars, scalars, scalars)
def test_semiring_laws(a, b, c):
    assert trop_add(a, b) == trop_add(b, a)
    assert trop_add(trop_add(a, b), c) == trop_add(a, trop_add(b, c))
    assert trop_add(a, a) == a
    assert trop_mul(a, b) == trop_mul(b, a)
    assert trop_mul(trop_mul(a, b), c) == trop_mul(a, trop_mul(b, c))
    assert trop_mul(a, trop_add(b, c)) == trop_add(trop_mul(a, b), trop_mul(a, c))
    assert trop_mul(a, 0) == a
    assert trop_add(a, INF) == a


def test_combine_of_flats_is_intersection(matroids):
    k4 = matroids["K4"]
    proper = [f for f in k4.flats if f != k4.full]
    for f1, f2 in combinations(proper, 2):
        meet = f1 & f2
        got = trop_combine((0, 0), (flat_generator(k4, f1), flat_generator(k4, f2)))
        assert got.coords == flat_generator(k4, meet).coords


def test_combine_rejects_empty():
    with pytest.raises(ValueError):
        trop_combine([], [])
    with pytest.raises(ValueError):
        trop_combine([INF], [(0, 0)])


def test_point_projective_equality():
    assert TropicalPoint((1, 2, INF)) == TropicalPoint((0, 1, INF))
    assert TropicalPoint((1, 2)) != TropicalPoint((1, 3))
    assert TropicalPoint((5, 7)).normalized().coords == (0, 2)
    assert len({TropicalPoint((1, 2)), TropicalPoint((3, 4))}) == 1
    with pytest.raises(ValueError):
        TropicalPoint((INF, INF))


def test_flat_generator_examples(matroids):
    u23, k4 = matroids["U23"], matroids["K4"]
    assert flat_generator(u23, {"0"}).coords == (INF, 0, 0)
    assert flat_generator(k4, 0).coords == (0,) * 6
    assert flat_generator(k4, {"BC"}).coords == (0, 0, 0, INF, 0, 0)
    with pytest.raises(ValueError):
        flat_generator(u23, {"0", "1"})
    with pytest.raises(ValueError):
        flat_generator(u23, u23.full)


def test_vertex_set_examples(matroids):
    u23 = matroids["U23"]
    verts = {v.coords for v in matroid_vertex_set(u23).vertices}
    assert verts == {(INF, 0, 0), (0, INF, 0), (0, 0, INF)}
    assert [v.coords for v in matroid_vertex_set(matroids["U12"]).vertices] == [(0, 0)]
    assert len(matroid_vertex_set(matroids["K4"]).vertices) == 7


def test_tp_distance_examples():
    x = (F(1), F(-2), F(5))
    assert tp_distance(x, x) == 0
    assert tp_distance(x, [v + 7 for v in x]) == 0
    assert tp_distance((0, 0, 0), (0, 1, 3)) == 3
    with pytest.raises(ValueError):
        tp_distance((0, INF), (0, 0))


@given(st.lists(st.fractions(), min_size=3, max_size=3), st.lists(st.fractions(), min_size=3, max_size=3),
       st.lists(st.fractions(), min_size=3, max_size=3))
def test_tp_distance_is_a_metric(x, y, z):
    assert tp_distance(x, y) == tp_distance(y, x) >= 0
    assert tp_distance(x, z) <= tp_distance(x, y) + tp_distance(y, z)
    # equals the l-infinity distance minimised over representatives
    diffs = [a - b for a, b in zip(x, y)]
    best_shift = (max(diffs) + min(diffs)) / 2
    assert tp_distance(x, y) == 2 * max(abs(d - best_shift) for d in diffs)


def test_lambda_examples():
    assert lambda_coefficient((0, 0), (-3, -5)) == -3
    assert lambda_coefficient((INF, 0, 0), (-1, -2, -3)) == -2
    x = (F(2), F(-1), F(4))
    assert lambda_coefficient(x, x) == 0
    with pytest.raises(ValueError):
        lambda_coefficient((INF, INF), (0, 0))


def test_nearest_point_examples(matroids):
    p12 = matroid_vertex_set(matroids["U12"])
    assert nearest_point(p12, TropicalPoint((-3, -5))).coords == (-3, -3)
    p23 = matroid_vertex_set(matroids["U23"])
    x = TropicalPoint((-1, -2, -3))
    assert [lambda_coefficient(v, x) for v in p23.vertices] == [-2, -1, -1]
    assert nearest_point(p23, x).coords == (-1, -2, -2)


def test_nearest_point_fixes_members(matroids):
    k4 = matroids["K4"]
    x = TropicalPoint(-w for w in fixtures.w1(k4))
    assert nearest_point(matroid_vertex_set(k4), x) == x


def test_project_examples(matroids):
    assert project_bergman(matroids["U23"], (F(1), F(2), F(3))) == (1, 2, 2)
    k4 = matroids["K4"]
    assert project_bergman(k4, fixtures.w1(k4)) == fixtures.w1(k4)
    assert project_bergman(matroids["U12"], (F(3), F(5))) == (3, 3)


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_projection_identity_and_membership(name, matroids):
    m = matroids[name]
    poly = matroid_vertex_set(m)
    rng = Random(name)
    for _ in range(200):
        w = random_weights(rng, m.n)
        assert project_bergman(m, w) == subdominant(m, w)
        p = nearest_point(poly, TropicalPoint(-x for x in w))
        assert superlevel_flat_test(m, p.coords)


@pytest.mark.parametrize("name", ["K4", "Fano", "U35"])
def test_projection_is_closest(name, matroids):
    m = matroids[name]
    poly = matroid_vertex_set(m)
    rng = Random(11)
    w = random_weights(rng, m.n, spread=9)
    x = TropicalPoint(-v for v in w)
    best = tp_distance(x, nearest_point(poly, x))
    for _ in range(1000):
        z = poly.combine([F(rng.randint(-20, 20), rng.randint(1, 4)) for _ in poly.vertices])
        assert z.is_finite()
        assert best <= tp_distance(x, z)


@pytest.mark.parametrize("name", ["K4", "Fano", "U24"])
def test_negated_fan_is_tropically_convex(name, matroids):
    m = matroids[name]
    rng = Random(2)
    for _ in range(300):
        x = [-v for v in subdominant(m, random_weights(rng, m.n))]
        y = [-v for v in subdominant(m, random_weights(rng, m.n))]
        a, b = F(rng.randint(-5, 5), 2), F(rng.randint(-5, 5), 3)
        assert superlevel_flat_test(m, trop_combine((a, b), (x, y)).coords)


def test_vertex_generator_examples(matroids):
    u23, k4 = matroids["U23"], matroids["K4"]
    assert is_vertex_generator(u23, {"0"})
    assert not is_vertex_generator(k4, {"BC"})
    for name in ("U23", "K3", "K4", "Fano"):
        assert not is_vertex_generator(matroids[name], 0)
    with pytest.raises(ValueError):
        is_vertex_generator(u23, {"0", "1"})
    with pytest.raises(ValueError):
        is_vertex_generator(u23, u23.full)


@pytest.mark.parametrize("name", ["U23", "K3", "K4", "U24", "Fano", "U35", "K5"])
def test_vertex_generators_are_hyperplanes(name, matroids):
    m = matroids[name]
    gens = {f for f in m.flats if f != m.full and is_vertex_generator(m, f)}
    assert gens == set(m.hyperplanes)


def test_non_hyperplane_flat_is_combination(matroids):
    k4 = matroids["K4"]
    bc = k4.mask({"BC"})
    above = [h for h in k4.hyperplanes if h & bc == bc]
    got = trop_combine([0] * len(above), [flat_generator(k4, h) for h in above])
    assert got.coords == flat_generator(k4, bc).coords


def test_polytope_validation():
    with pytest.raises(ValueError):
        TropicalPolytope(())
    with pytest.raises(ValueError):
        TropicalPolytope(((0, 0), (0, 0, 0)))
