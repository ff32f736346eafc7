"""Subdominant matroid ultrametrics, tropical projection onto Bergman fans,
and l-infinity fitting of equidistant trees.

All arithmetic is exact (``fractions.Fraction``). The bitmask kernels run
compiled when the Cython extension is built and fall back to pure Python
otherwise; ``matroid_ultrametric.kernels.BACKEND`` names the active one.
"""

from .bergman import (
    Flag,
    is_ultrametric,
    is_ultrametric_bases,
    is_ultrametric_circuits,
    is_ultrametric_cocircuits,
    is_ultrametric_flag,
    superlevel_flat_test,
    weight_class_flag,
)
from .matroid import ExchangeAxiomError, LoopError, Matroid, MatroidError
from .phylo import (
    DissimilarityMap,
    EquidistantTree,
    is_ultrametric_3pt,
    linf_fit,
    newick_export,
    parse_newick,
    subdominant_ultrametric,
    tree_distance,
    tree_from_ultrametric,
)
from .rational import ParseError, format_rational, parse_rational
from .subdominant import (
    apply_rules_sequential,
    blue_rule_value,
    red_rule_value,
    subdominant,
    subdominant_via_basis,
)
from .tropical import TropicalPoint, TropicalPolytope, nearest_point, project_bergman

__version__ = "0.1.0"
