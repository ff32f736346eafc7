"""Subdominant M-ultrametrics via the blue rule, the red rule and a minimum basis.

The subdominant M-ultrametric of ``w`` is the componentwise largest point of
the Bergman fan lying below ``w``.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .matroid import positions
from .rational import order_keys


@dataclass(frozen=True)
class RuleApplication:
    """Audit record for one rule application in :func:`apply_rules_sequential`."""

    element: int
    rule: str
    old: Fraction
    new: Fraction
    witness: int


def blue_rule_witness(matroid, weights, e):
    """``(value, cocircuit)``: the largest cocircuit minimum over cocircuits containing ``e``.

    Ties go to the lexicographically first cocircuit.
    """
    e = matroid.index(e)
    best = best_c = None
    for c in matroid.cocircuits:
        if c >> e & 1:
            low = min(weights[i] for i in positions(c))
            if best is None or low > best:
                best, best_c = low, c
    if best is None:
        # a loop lies in no cocircuit; only possible on duals
        return weights[e], 0
    return best, best_c


def blue_rule_value(matroid, weights, e):
    return blue_rule_witness(matroid, weights, e)[0]


def red_rule_witness(matroid, weights, e):
    """``(value, circuit)`` for the red rule at ``e``.

    The value is the smallest ``max(C - e)`` over circuits ``C`` containing
    ``e``, capped at ``weights[e]``: when ``e`` is the unique maximum of no
    circuit the rule does not apply and the weight is kept (circuit ``0``).
    """
    e = matroid.index(e)
    best, best_c = weights[e], 0
    for c in matroid.circuits:
        if c >> e & 1 and c != 1 << e:
            high = max(weights[i] for i in positions(c & ~(1 << e)))
            if high < best:
                best, best_c = high, c
    return best, best_c


def red_rule_value(matroid, weights, e):
    return red_rule_witness(matroid, weights, e)[0]


def circuit_minmax(matroid, weights, e):
    """Uncapped ``min over C containing e of max(C - e)``; ``None`` for coloops."""
    e = matroid.index(e)
    vals = [
        max(weights[i] for i in positions(c & ~(1 << e)))
        for c in matroid.circuits
        if c >> e & 1 and c != 1 << e
    ]
    return min(vals) if vals else None


def subdominant(matroid, weights):
    """The subdominant M-ultrametric: the blue rule applied to every element of the original vector."""
    keys, levels = order_keys(weights)
    return tuple(levels[k] for k in kernels.blue_keys(matroid.n, matroid.cocircuits, keys))


def subdominant_red(matroid, weights):
    """Same result via the red rule applied simultaneously to every element."""
    keys, levels = order_keys(weights)
    return tuple(levels[k] for k in kernels.red_keys(matroid.n, matroid.circuits, keys))


def apply_rules_sequential(matroid, weights, order, rules, log=None):
    """Apply one rule per element in ``order``, each to the current vector.

    ``rules`` is a single ``"blue"``/``"red"`` or one choice per entry of
    ``order``. Pass a list as ``log`` to collect :class:`RuleApplication`
    records.
    """
    order = [matroid.index(e) for e in order]
    if sorted(order) != list(range(matroid.n)):
        raise ValueError("order must be a permutation of the ground set")
    if isinstance(rules, str):
        rules = [rules] * len(order)
    rules = list(rules)
    if len(rules) != len(order):
        raise ValueError("need one rule choice per element")
    current = list(weights)
    for e, rule in zip(order, rules):
        if rule == "blue":
            value, witness = blue_rule_witness(matroid, current, e)
        elif rule == "red":
            value, witness = red_rule_witness(matroid, current, e)
        else:
            raise ValueError(f"unknown rule {rule!r}")
        if log is not None:
            log.append(RuleApplication(e, rule, current[e], value, witness))
        current[e] = value
    return tuple(current)


def subdominant_via_basis(matroid, weights, basis=None):
    """Keep weights on a minimum basis; elsewhere take the fundamental-circuit maximum."""
    b = matroid.min_weight_basis(weights) if basis is None else matroid.mask(basis)
    out = list(weights)
    for e in positions(matroid.full & ~b):
        c = matroid.fundamental_circuit(b, e)
        out[e] = max(weights[i] for i in positions(c & ~(1 << e)))
    return tuple(out)


def minmax_identity_check(matroid, weights, basis, e):
    """Check that the circuit min-max at ``e`` equals the fundamental-circuit maximum.

    ``basis`` must be a minimum-weight basis and ``e`` must lie outside it.
    """
    b = matroid.mask(basis)
    e = matroid.index(e)
    if b >> e & 1:
        raise ValueError("element lies in the basis")
    greedy = matroid.min_weight_basis(weights)
    if matroid.basis_weight(b, weights) != matroid.basis_weight(greedy, weights):
        raise ValueError("basis is not of minimum weight")
    c0 = matroid.fundamental_circuit(b, e)
    return circuit_minmax(matroid, weights, e) == max(weights[i] for i in positions(c0 & ~(1 << e)))
