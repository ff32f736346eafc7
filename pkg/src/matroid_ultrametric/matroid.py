"""Exact, enumeration-based matroids on small ground sets.

A :class:`Matroid` is immutable. Subsets are bitmasks over element positions
(bit ``i`` is ``elements[i]``); every method taking a subset also accepts an
iterable of labels or positions. Weight vectors are tuples of
:class:`~fractions.Fraction` aligned with ``elements``.
"""

from functools import cached_property
from fractions import Fraction
from itertools import combinations

from . import kernels

MAX_ELEMENTS = 24


class MatroidError(ValueError):
    """Invalid matroid description."""


class ExchangeAxiomError(MatroidError):
    """Explicit bases violate equicardinality or basis exchange."""


class LoopError(MatroidError):
    """The matroid has a loop, so its Bergman fan is empty."""


def positions(mask):
    """Positions set in ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def lex_key(mask):
    """Sort key putting masks in lexicographic order of their position tuples."""
    return positions(mask)


def popcount(mask):
    return bin(mask).count("1")


class Matroid:
    """A loopless matroid given by bases, a uniform rank, or a multigraph.

    Use the :meth:`from_bases`, :meth:`uniform` and :meth:`graphic`
    constructors rather than calling the class directly.
    """

    def __init__(self, elements, bases, kind, *, params=None, allow_loops=False):
        elements = tuple(str(e) for e in elements)
        if not elements:
            raise MatroidError("ground set is empty")
        if len(set(elements)) != len(elements):
            raise MatroidError("element identifiers are not distinct")
        if len(elements) > MAX_ELEMENTS:
            raise MatroidError(f"at most {MAX_ELEMENTS} elements are supported")
        self.elements = elements
        self.kind = kind
        self.params = params or {}
        self._index = {e: i for i, e in enumerate(elements)}
        self._bases = tuple(sorted(set(bases), key=lex_key))
        if not self._bases:
            raise MatroidError("no bases given")
        if not allow_loops:
            covered = 0
            for b in self._bases:
                covered |= b
            loops = self.full & ~covered
            if loops:
                names = ",".join(self.labels(loops))
                raise LoopError(f"matroid has loops: {{{names}}}")
            if popcount(self._bases[0]) == 0:
                raise MatroidError("matroid has rank 0")

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_bases(cls, elements, bases):
        """Matroid from an explicit list of bases, validating the exchange axiom."""
        elements = tuple(str(e) for e in elements)
        index = {e: i for i, e in enumerate(elements)}
        masks = []
        for b in bases:
            b = [str(x) for x in b]
            if len(set(b)) != len(b):
                raise MatroidError(f"repeated element in basis {b}")
            try:
                masks.append(sum(1 << index[x] for x in b))
            except KeyError as exc:
                raise MatroidError(f"basis element {exc.args[0]!r} not in ground set") from None
        masks = sorted(set(masks))
        if not masks:
            raise MatroidError("no bases given")
        _check_exchange(masks)
        return cls(elements, masks, "bases")

    @classmethod
    def uniform(cls, elements, rank):
        """The uniform matroid: every ``rank``-subset is a basis."""
        elements = tuple(str(e) for e in elements)
        if not 1 <= rank <= len(elements):
            raise MatroidError(f"uniform rank {rank} outside 1..{len(elements)}")
        bases = [sum(1 << i for i in c) for c in combinations(range(len(elements)), rank)]
        return cls(elements, bases, "uniform", params={"rank": rank})

    @classmethod
    def graphic(cls, vertices, edges):
        """Cycle matroid of a multigraph; ``edges`` holds ``(id, u, v)`` triples."""
        vertices = tuple(str(v) for v in vertices)
        if len(set(vertices)) != len(vertices):
            raise MatroidError("vertex identifiers are not distinct")
        vindex = {v: i for i, v in enumerate(vertices)}
        ends = []
        ids = []
        for eid, u, v in edges:
            u, v = str(u), str(v)
            if u not in vindex or v not in vindex:
                raise MatroidError(f"edge {eid!r} has an unknown endpoint")
            if u == v:
                raise LoopError(f"edge {eid!r} is a loop at {u!r}")
            ids.append(str(eid))
            ends.append((vindex[u], vindex[v]))
        if not ids:
            raise MatroidError("graph has no edges")
        rank = len(vertices) - _component_count(len(vertices), ends)
        bases = []
        for combo in combinations(range(len(ids)), rank):
            if _is_forest(len(vertices), [ends[i] for i in combo]):
                bases.append(sum(1 << i for i in combo))
        params = {
            "vertices": vertices,
            "edges": tuple((ids[i], vertices[a], vertices[b]) for i, (a, b) in enumerate(ends)),
        }
        return cls(ids, bases, "graphic", params=params)

    # -- ground set plumbing ----------------------------------------------

    @property
    def n(self):
        return len(self.elements)

    @property
    def full(self):
        return (1 << len(self.elements)) - 1

    def index(self, e):
        """Position of an element given by label or position."""
        if isinstance(e, int) and not isinstance(e, bool):
            if not 0 <= e < self.n:
                raise IndexError(f"position {e} out of range")
            return e
        try:
            return self._index[str(e)]
        except KeyError:
            raise KeyError(f"unknown element {e!r}") from None

    def mask(self, subset):
        """Bitmask of a subset given as a mask or an iterable of elements."""
        if isinstance(subset, int) and not isinstance(subset, bool):
            if subset < 0 or subset & ~self.full:
                raise ValueError(f"mask {subset:#x} outside the ground set")
            return subset
        m = 0
        for e in subset:
            m |= 1 << self.index(e)
        return m

    def labels(self, subset):
        """Element labels of a subset, in element order."""
        return tuple(self.elements[i] for i in positions(self.mask(subset)))

    def weights(self, values):
        """Weight vector from a mapping ``label -> value`` or a sequence.

        Values may be ints, Fractions or rational strings; floats are refused
        because they cannot carry decimal weights exactly.
        """
        from .rational import parse_rational

        if isinstance(values, dict):
            missing = [e for e in self.elements if e not in values]
            extra = [k for k in values if str(k) not in self._index]
            if missing or extra:
                raise ValueError(f"weights must cover the ground set exactly (missing {missing}, extra {extra})")
            values = [values[e] for e in self.elements]
        values = list(values)
        if len(values) != self.n:
            raise ValueError(f"expected {self.n} weights, got {len(values)}")
        out = []
        for v in values:
            if isinstance(v, float):
                raise TypeError("float weights are inexact; pass Fraction, int or str")
            out.append(parse_rational(v) if isinstance(v, str) else Fraction(v))
        return tuple(out)

    def __repr__(self):
        return f"<Matroid {self.kind} rank={self.rank()} n={self.n}>"

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.elements == other.elements and self._bases == other._bases

    def __hash__(self):
        return hash((self.elements, self._bases))

    # -- rank oracle ------------------------------------------------------

    @cached_property
    def _rank(self):
        return kernels.rank_table(self.n, self._bases)

    def rank(self, subset=None):
        """Matroid rank of ``subset`` (the whole ground set by default)."""
        if subset is None:
            return self._rank[self.full]
        return self._rank[self.mask(subset)]

    def is_independent(self, subset):
        s = self.mask(subset)
        return self._rank[s] == popcount(s)

    def is_basis(self, subset):
        s = self.mask(subset)
        return popcount(s) == self._rank[self.full] == self._rank[s]

    def closure(self, subset):
        s = self.mask(subset)
        r = self._rank[s]
        out = s
        for i in range(self.n):
            bit = 1 << i
            if not s & bit and self._rank[s | bit] == r:
                out |= bit
        return out

    def is_flat(self, subset):
        s = self.mask(subset)
        return self.closure(s) == s

    # -- enumerations -----------------------------------------------------

    @property
    def bases(self):
        """All bases, lexicographically ordered."""
        return self._bases

    @cached_property
    def circuits(self):
        """All circuits (minimal dependent sets), lexicographically ordered."""
        return tuple(sorted(kernels.minimal_dependent_sets(self.n, self._rank), key=lex_key))

    @cached_property
    def flats(self):
        """All flats, lexicographically ordered."""
        return tuple(sorted(kernels.closed_sets(self.n, self._rank), key=lex_key))

    @cached_property
    def hyperplanes(self):
        """Flats of rank ``rank() - 1``."""
        r = self.rank()
        return tuple(f for f in self.flats if self._rank[f] == r - 1)

    @cached_property
    def cocircuits(self):
        """Complements of hyperplanes, lexicographically ordered."""
        return tuple(sorted((self.full ^ h for h in self.hyperplanes), key=lex_key))

    @cached_property
    def coloops(self):
        common = self.full
        for b in self._bases:
            common &= b
        return common

    def dual(self):
        """The dual matroid; its bases are the complements of bases.

        A coloop becomes a loop of the dual, so the loop check is skipped.
        """
        return Matroid(
            self.elements,
            [self.full ^ b for b in self._bases],
            "bases",
            allow_loops=True,
        )

    # -- fundamental circuits ---------------------------------------------

    def fundamental_circuit(self, basis, x):
        """The unique circuit inside ``basis + x`` for ``x`` outside the basis."""
        b = self.mask(basis)
        x = self.index(x)
        if not self.is_basis(b):
            raise ValueError(f"{self.labels(b)} is not a basis")
        if b >> x & 1:
            raise ValueError(f"{self.elements[x]!r} lies in the basis")
        span = b | 1 << x
        found = [c for c in self.circuits if c & ~span == 0]
        assert len(found) == 1, "basis plus one element holds exactly one circuit"
        return found[0]

    def fundamental_cocircuit(self, basis, y):
        """The unique cocircuit avoiding ``basis - y`` for ``y`` in the basis."""
        b = self.mask(basis)
        y = self.index(y)
        if not self.is_basis(b):
            raise ValueError(f"{self.labels(b)} is not a basis")
        if not b >> y & 1:
            raise ValueError(f"{self.elements[y]!r} is not in the basis")
        return self.full ^ self.closure(b ^ 1 << y)

    # -- weighted bases ---------------------------------------------------

    def min_weight_basis(self, weights):
        """Greedy minimum-weight basis; ties go to the earlier element."""
        order = sorted(range(self.n), key=lambda i: (weights[i], i))
        b = 0
        size = 0
        for i in order:
            cand = b | 1 << i
            if self._rank[cand] == size + 1:
                b = cand
                size += 1
        return b

    def min_weight_bases(self, weights):
        """Every basis of minimum total weight, found by exhaustive scan."""
        totals = [(sum(weights[i] for i in positions(b)), b) for b in self._bases]
        best = min(t for t, _ in totals)
        return tuple(b for t, b in totals if t == best)

    def basis_weight(self, basis, weights):
        return sum((weights[i] for i in positions(self.mask(basis))), Fraction(0))


def _check_exchange(masks):
    size = popcount(masks[0])
    for b in masks:
        if popcount(b) != size:
            raise ExchangeAxiomError("bases have different cardinalities")
    known = set(masks)
    for b1 in masks:
        for b2 in masks:
            only1 = b1 & ~b2
            only2 = b2 & ~b1
            for x in positions(only1):
                if not any((b1 ^ 1 << x | 1 << y) in known for y in positions(only2)):
                    raise ExchangeAxiomError(
                        f"basis exchange fails for bases {positions(b1)}, {positions(b2)} at position {x}"
                    )


def _find(parent, a):
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


def _is_forest(nv, ends):
    parent = list(range(nv))
    for a, b in ends:
        ra, rb = _find(parent, a), _find(parent, b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def _component_count(nv, ends):
    parent = list(range(nv))
    count = nv
    for a, b in ends:
        ra, rb = _find(parent, a), _find(parent, b)
        if ra != rb:
            parent[ra] = rb
            count -= 1
    return count
