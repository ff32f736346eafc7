"""Small named matroids and weight vectors used in tests and demos."""

from fractions import Fraction
from itertools import combinations

from .matroid import Matroid

FANO_LINES = ("123", "145", "167", "246", "257", "347", "356")


def uniform(rank, n, labels=None):
    """``U_{rank,n}``; elements default to ``"0" .. str(n-1)``."""
    labels = labels or [str(i) for i in range(n)]
    return Matroid.uniform(labels, rank)


def complete_graph(vertices, sep=""):
    """Cycle matroid of ``K_n``; the edge between ``u`` and ``v`` is ``u + sep + v``."""
    vertices = [str(v) for v in vertices]
    edges = [(f"{u}{sep}{v}", u, v) for u, v in combinations(vertices, 2)]
    return Matroid.graphic(vertices, edges)


def k3():
    return complete_graph("ABC")


def k4():
    return complete_graph("ABCD")


def k5():
    return complete_graph("ABCDE")


def fano():
    """The Fano plane: all 3-subsets of 1..7 except its seven lines."""
    elements = [str(i) for i in range(1, 8)]
    lines = {frozenset(line) for line in FANO_LINES}
    bases = [c for c in combinations(elements, 3) if frozenset(c) not in lines]
    return Matroid.from_bases(elements, bases)


def w1(matroid=None):
    """The running ``M(K_4)``-ultrametric: weight 0.2 on BC, 1.2 on AB and AC, 2 elsewhere."""
    matroid = matroid or k4()
    values = {"AB": "1.2", "AC": "1.2", "AD": "2", "BC": "0.2", "BD": "2", "CD": "2"}
    return matroid.weights(values)


def named(name):
    """Fixture matroid by short name, e.g. ``"U23"``, ``"K4"``, ``"Fano"``."""
    table = {
        "U12": lambda: uniform(1, 2, ["a", "b"]),
        "U23": lambda: uniform(2, 3),
        "U24": lambda: uniform(2, 4),
        "U35": lambda: uniform(3, 5),
        "K3": k3,
        "K4": k4,
        "K5": k5,
        "Fano": fano,
    }
    return table[name]()


def as_fraction_tuple(values):
    return tuple(Fraction(v) for v in values)
