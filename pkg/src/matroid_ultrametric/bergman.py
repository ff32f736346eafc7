"""Membership of a weight vector in the Bergman fan of a matroid.

Four independent tests are provided, one per characterization:

* bases: every element lies in some minimum-weight basis;
* circuits: no circuit has a unique heaviest element;
* cocircuits: every element is lightest in some cocircuit;
* flags: every proper part of the weight-class flag is a flat.

Each ``*_violation`` function returns ``None`` for members and the
lexicographically first witness otherwise.
"""

import math
from dataclasses import dataclass

from . import kernels
from .matroid import positions
from .rational import order_keys


@dataclass(frozen=True)
class Flag:
    """A chain ``0 = F_0 < F_1 < ... < F_{k+1} = E`` of bitmasks.

    ``values[i]`` is the constant weight on ``chain[i+1] - chain[i]``.
    """

    chain: tuple
    values: tuple

    @property
    def parts(self):
        """The proper nonempty parts ``F_1 .. F_k``."""
        return self.chain[1:-1]

    def differences(self):
        return tuple(b & ~a for a, b in zip(self.chain, self.chain[1:]))


def weight_class_flag(weights):
    """The flag whose weight class contains ``weights``."""
    chain = [0]
    values = []
    for v in sorted(set(weights)):
        level = 0
        for i, w in enumerate(weights):
            if w == v:
                level |= 1 << i
        chain.append(chain[-1] | level)
        values.append(v)
    return Flag(tuple(chain), tuple(values))


def bases_violation(matroid, weights):
    """First element in no minimum-weight basis, as a position."""
    covered = 0
    for b in matroid.min_weight_bases(weights):
        covered |= b
    missing = matroid.full & ~covered
    return positions(missing)[0] if missing else None


def circuit_violation(matroid, weights):
    """First circuit whose maximum weight is attained by a single element."""
    keys, _ = order_keys(weights)
    idx = kernels.first_unique_max(matroid.circuits, keys)
    return None if idx < 0 else matroid.circuits[idx]


def cocircuit_violation(matroid, weights):
    """First element that is not of minimum weight in any cocircuit containing it."""
    ok = 0
    for c in matroid.cocircuits:
        low = min(weights[i] for i in positions(c))
        for i in positions(c):
            if weights[i] == low:
                ok |= 1 << i
    missing = matroid.full & ~ok
    return positions(missing)[0] if missing else None


def flag_violation(matroid, weights):
    """First proper part of the weight-class flag that is not a flat."""
    for part in weight_class_flag(weights).parts:
        if not matroid.is_flat(part):
            return part
    return None


def is_ultrametric_bases(matroid, weights):
    return bases_violation(matroid, weights) is None


def is_ultrametric_circuits(matroid, weights):
    return circuit_violation(matroid, weights) is None


def is_ultrametric_cocircuits(matroid, weights):
    return cocircuit_violation(matroid, weights) is None


def is_ultrametric_flag(matroid, weights):
    return flag_violation(matroid, weights) is None


def is_ultrametric(matroid, weights):
    """Fan membership (the circuit test, which is the cheapest)."""
    return is_ultrametric_circuits(matroid, weights)


def superlevel_sets(x):
    """Sets ``{i : x_i >= r}`` for every finite coordinate value ``r``, plus the infinite support."""
    finite = sorted({v for v in x if v != math.inf})
    out = []
    for r in finite:
        out.append(sum(1 << i for i, v in enumerate(x) if v >= r))
    out.append(sum(1 << i for i, v in enumerate(x) if v == math.inf))
    return out


def superlevel_violation(matroid, x):
    """First superlevel set of ``x`` (coordinates may be ``math.inf``) that is not a flat."""
    for s in superlevel_sets(x):
        if not matroid.is_flat(s):
            return s
    return None


def superlevel_flat_test(matroid, x):
    """Whether ``x`` lies in the negated Bergman fan: all superlevel sets are flats."""
    return superlevel_violation(matroid, x) is None
