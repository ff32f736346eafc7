"""Ultrametrics, l-infinity ultrametric fitting and equidistant trees.

A dissimilarity map on ``n`` taxa is the same thing as a weight vector on
the edges of ``K_n``; :meth:`DissimilarityMap.matroid` gives that matroid
with edges in the same order as ``values``.
"""

import csv
import io
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .matroid import Matroid
from .rational import ParseError, format_rational, parse_rational


@dataclass(frozen=True)
class DissimilarityMap:
    """Symmetric, zero-diagonal values on pairs of taxa.

    ``values`` lists ``d(i, j)`` for ``i < j`` in ``itertools.combinations``
    order.
    """

    taxa: tuple
    values: tuple

    def __post_init__(self):
        taxa = tuple(str(t) for t in self.taxa)
        if not taxa:
            raise ValueError("need at least one taxon")
        if len(set(taxa)) != len(taxa):
            raise ValueError("taxa labels are not distinct")
        values = tuple(Fraction(v) for v in self.values)
        if len(values) != len(taxa) * (len(taxa) - 1) // 2:
            raise ValueError("wrong number of pair values")
        object.__setattr__(self, "taxa", taxa)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_pairs(cls, taxa, mapping):
        """Build from ``{(a, b): value}`` keyed by taxa labels, either orientation."""
        taxa = tuple(str(t) for t in taxa)
        lookup = {}
        for (a, b), v in mapping.items():
            lookup[frozenset((str(a), str(b)))] = v
        try:
            values = [lookup[frozenset((a, b))] for a, b in combinations(taxa, 2)]
        except KeyError as exc:
            raise ValueError(f"missing pair {sorted(exc.args[0])}") from None
        return cls(taxa, values)

    @classmethod
    def from_matrix(cls, taxa, rows):
        """Build from a full square matrix, rejecting asymmetry and a nonzero diagonal."""
        n = len(taxa)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError("matrix is not square")
        for i in range(n):
            if rows[i][i] != 0:
                raise ValueError(f"nonzero diagonal at {taxa[i]!r}")
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"asymmetric entries for {taxa[j]!r}, {taxa[i]!r}")
        return cls(taxa, [rows[i][j] for i, j in combinations(range(n), 2)])

    @property
    def n(self):
        return len(self.taxa)

    @property
    def pairs(self):
        return list(combinations(range(self.n), 2))

    def _pos(self, t):
        return t if isinstance(t, int) else self.taxa.index(str(t))

    def __getitem__(self, key):
        i, j = (self._pos(t) for t in key)
        if i == j:
            return Fraction(0)
        if i > j:
            i, j = j, i
        n = self.n
        return self.values[i * (2 * n - i - 1) // 2 + (j - i - 1)]

    def to_matrix(self):
        return [[self[i, j] for j in range(self.n)] for i in range(self.n)]

    def shifted(self, c):
        """Add ``c`` to every off-diagonal entry."""
        return DissimilarityMap(self.taxa, [v + c for v in self.values])

    def reordered(self, taxa):
        """Same map with taxa listed in a different order."""
        return DissimilarityMap(taxa, [self[a, b] for a, b in combinations(taxa, 2)])

    def linf(self, other):
        """``max |d(i,j) - d'(i,j)|`` over pairs; ``other`` may order taxa differently."""
        other = other.reordered(self.taxa)
        return max((abs(a - b) for a, b in zip(self.values, other.values)), default=Fraction(0))

    def matroid(self):
        """Cycle matroid of ``K_n`` whose edge order matches ``values``."""
        ids = [f"{a}-{b}" for a, b in combinations(self.taxa, 2)]
        if len(set(ids)) != len(ids):
            ids = [f"{i}-{j}" for i, j in self.pairs]
        edges = [(eid, a, b) for eid, (a, b) in zip(ids, combinations(self.taxa, 2))]
        return Matroid.graphic(self.taxa, edges)


def is_ultrametric_3pt(d):
    """Every triple's two largest values are equal."""
    for i, j, k in combinations(range(d.n), 3):
        a, b, c = sorted((d[i, j], d[j, k], d[i, k]))
        if b != c:
            return False
    return True


def three_point_violation(d):
    """First triple of taxa breaking the three-point condition, or ``None``."""
    for i, j, k in combinations(range(d.n), 3):
        a, b, c = sorted((d[i, j], d[j, k], d[i, k]))
        if b != c:
            return (d.taxa[i], d.taxa[j], d.taxa[k])
    return None


def minimum_spanning_tree(d):
    """Kruskal on ``K_n``; ties resolved by pair order. Returns ``(i, j, value)`` triples."""
    parent = list(range(d.n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    tree = []
    for k in sorted(range(len(d.values)), key=lambda k: (d.values[k], k)):
        i, j = d.pairs[k]
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            tree.append((i, j, d.values[k]))
    return tree


def subdominant_ultrametric(d):
    """Minimax-path values: the largest edge on the MST path between each pair."""
    adj = {i: [] for i in range(d.n)}
    for i, j, v in minimum_spanning_tree(d):
        adj[i].append((j, v))
        adj[j].append((i, v))
    out = {}
    for src in range(d.n):
        stack = [(src, None)]
        seen = {src}
        while stack:
            u, worst = stack.pop()
            if worst is not None:
                out[src, u] = worst
            for w, v in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append((w, v if worst is None or v > worst else worst))
    return DissimilarityMap(d.taxa, [out[i, j] for i, j in d.pairs])


def linf_fit(d):
    """l-infinity closest ultrametric: the subdominant ultrametric raised by half the largest gap.

    Returns ``(fit, eps)`` with ``d.linf(fit) == eps``.
    """
    u = subdominant_ultrametric(d)
    eps = d.linf(u) / 2
    return u.shifted(eps), eps


@dataclass(frozen=True)
class TreeNode:
    """Node of an equidistant tree. Leaves carry a label and height 0.

    Children are kept sorted by their smallest leaf label, so equal trees
    compare equal.
    """

    height: Fraction
    children: tuple = ()
    label: str = None

    def __post_init__(self):
        object.__setattr__(self, "height", Fraction(self.height))
        kids = tuple(sorted(self.children, key=lambda c: c.min_label))
        object.__setattr__(self, "children", kids)
        if not kids and self.label is None:
            raise ValueError("a leaf needs a label")

    @property
    def is_leaf(self):
        return not self.children

    @property
    def min_label(self):
        return self.label if self.is_leaf else self.children[0].min_label

    def leaves(self):
        if self.is_leaf:
            return (self.label,)
        return tuple(x for c in self.children for x in c.leaves())


@dataclass(frozen=True)
class EquidistantTree:
    """Rooted tree with all leaves at height 0; leaf distance is twice the LCA height."""

    root: TreeNode
    taxa: tuple = field(default=None, compare=False)

    def __post_init__(self):
        leaves = self.root.leaves()
        if len(set(leaves)) != len(leaves):
            raise ValueError("leaf labels are not distinct")
        taxa = tuple(self.taxa) if self.taxa is not None else leaves
        if sorted(taxa) != sorted(leaves):
            raise ValueError("taxa do not match the leaves")
        object.__setattr__(self, "taxa", taxa)
        _check_heights(self.root)

    def internal_nodes(self):
        out = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            if not node.is_leaf:
                out.append(node)
                stack.extend(node.children)
        return out


def _check_heights(node):
    for c in node.children:
        if not c.is_leaf and c.height >= node.height:
            raise ValueError("internal heights must increase towards the root")
        if c.is_leaf and c.height != 0:
            raise ValueError("leaves must sit at height 0")
        _check_heights(c)


def tree_from_ultrametric(u):
    """Equidistant tree whose distance function is ``u``.

    Clusters are merged at each distinct value ``t`` into a node of height
    ``t / 2``; several clusters joining at one level give a multifurcation.
    """
    violation = three_point_violation(u)
    if violation is not None:
        raise ValueError(f"not an ultrametric: triple {violation}")
    parent = list(range(u.n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    nodes = {i: TreeNode(0, label=t) for i, t in enumerate(u.taxa)}
    for t in sorted(set(u.values)):
        before = {r: nodes[r] for r in {find(i) for i in range(u.n)}}
        for (i, j), v in zip(u.pairs, u.values):
            if v == t:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
        groups = {}
        for r, node in before.items():
            groups.setdefault(find(r), []).append(node)
        nodes = {}
        for r, members in groups.items():
            nodes[r] = members[0] if len(members) == 1 else TreeNode(t / 2, tuple(members))
    (root,) = nodes.values()
    return EquidistantTree(root, u.taxa)


def tree_distance(tree, taxa=None):
    """Dissimilarity map ``2 * height(LCA)`` of the tree's leaves."""
    taxa = tuple(taxa) if taxa is not None else tree.taxa
    dist = {}
    for node in tree.internal_nodes():
        groups = [c.leaves() for c in node.children]
        for a_idx, b_idx in combinations(range(len(groups)), 2):
            for a in groups[a_idx]:
                for b in groups[b_idx]:
                    dist[frozenset((a, b))] = 2 * node.height
    return DissimilarityMap(taxa, [dist[frozenset((a, b))] for a, b in combinations(taxa, 2)])


# -- Newick -----------------------------------------------------------------

_PLAIN_LABEL = re.compile(r"[^\s(),:;'\[\]]+")


def _quote(label):
    if _PLAIN_LABEL.fullmatch(label):
        return label
    return "'" + label.replace("'", "''") + "'"


def newick_export(tree):
    """Rooted Newick with branch lengths ``parent height - child height``."""

    def emit(node, parent_height):
        if node.is_leaf:
            text = _quote(node.label)
        else:
            text = "(" + ",".join(emit(c, node.height) for c in node.children) + ")"
        if parent_height is not None:
            text += ":" + format_rational(parent_height - node.height)
        return text

    return emit(tree.root, None) + ";"


def parse_newick(text):
    """Parse Newick written by :func:`newick_export` (or any equidistant Newick with lengths)."""
    pos = 0
    s = text.strip()

    def peek():
        return s[pos] if pos < len(s) else ""

    def label():
        nonlocal pos
        if peek() == "'":
            out = []
            pos += 1
            while True:
                if pos >= len(s):
                    raise ParseError("unterminated quoted label")
                if s[pos] == "'":
                    if s[pos + 1 : pos + 2] == "'":
                        out.append("'")
                        pos += 2
                        continue
                    pos += 1
                    return "".join(out)
                out.append(s[pos])
                pos += 1
        m = _PLAIN_LABEL.match(s, pos)
        if not m:
            return None
        pos = m.end()
        return m.group()

    def length():
        nonlocal pos
        if peek() != ":":
            return None
        pos += 1
        m = re.compile(r"[^\s(),:;\[\]]+").match(s, pos)
        if not m:
            raise ParseError(f"missing branch length at offset {pos}")
        pos = m.end()
        return parse_rational(m.group())

    # returns (node, branch length to parent)
    def subtree():
        nonlocal pos
        if peek() == "(":
            pos += 1
            kids = [subtree()]
            while peek() == ",":
                pos += 1
                kids.append(subtree())
            if peek() != ")":
                raise ParseError(f"expected ')' at offset {pos}")
            pos += 1
            label()
            heights = set()
            for child, blen in kids:
                if blen is None:
                    raise ParseError("every non-root branch needs a length")
                heights.add(child.height + blen)
            if len(heights) != 1:
                raise ParseError("tree is not equidistant")
            return TreeNode(heights.pop(), tuple(c for c, _ in kids)), length()
        name = label()
        if name is None:
            raise ParseError(f"expected a label at offset {pos}")
        return TreeNode(0, label=name), length()

    root, _ = subtree()
    if peek() != ";" or pos + 1 != len(s):
        raise ParseError("Newick text must end with ';'")
    try:
        return EquidistantTree(root)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def tree_to_json(tree):
    """JSON-ready dict ``{node, height, children}``; internal nodes have ``node: null``."""

    def dump(node):
        return {
            "node": node.label,
            "height": format_rational(node.height),
            "children": [dump(c) for c in node.children],
        }

    return dump(tree.root)


def tree_json_text(tree):
    return json.dumps(tree_to_json(tree), indent=2)


# -- distance matrix files --------------------------------------------------


def parse_distance_matrix(text):
    """Square CSV: a header of taxa labels (first cell ignored) and one labelled row per taxon."""
    rows = [r for r in csv.reader(io.StringIO(text)) if r and any(c.strip() for c in r)]
    if len(rows) < 2:
        raise ParseError("distance matrix needs a header and at least one row")
    taxa = [c.strip() for c in rows[0][1:]]
    body = rows[1:]
    if len(body) != len(taxa):
        raise ParseError(f"{len(taxa)} taxa in header but {len(body)} rows")
    matrix = []
    for r, t in zip(body, taxa):
        if len(r) != len(taxa) + 1:
            raise ParseError(f"row {r[0]!r} has {len(r) - 1} entries, expected {len(taxa)}")
        if r[0].strip() != t:
            raise ParseError(f"row label {r[0].strip()!r} does not match header {t!r}")
        matrix.append([parse_rational(c) for c in r[1:]])
    try:
        return DissimilarityMap.from_matrix(taxa, matrix)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def read_distance_matrix(path):
    with open(path, encoding="utf-8") as fh:
        return parse_distance_matrix(fh.read())


def format_distance_matrix(d):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["", *d.taxa])
    for i, t in enumerate(d.taxa):
        w.writerow([t, *(format_rational(d[i, j]) for j in range(d.n))])
    return buf.getvalue()
