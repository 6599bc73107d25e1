"""Divisor class groups of toric rings of order, stable set and edge polytopes."""

from .classgroup import AbelianGroup, class_group, class_group_rank, shortcut_rank
from .equivalence import fingerprint, unimodular_equivalent
from .errors import (
    BadParams,
    DegeneratePolytope,
    Disconnected,
    EmptyGraph,
    LatticeDeficient,
    NotIDP,
    NotPerfect,
    OddCycleConditionFails,
    SearchBudgetExceeded,
    TooLarge,
    ToriclassError,
)
from .graph import SimpleGraph, edge_polytope, graph_family, stable_set_polytope
from .polytope import LatticePolytope, from_points, is_idp, pyramid, pyramid_reduce
from .poset import Poset, chain_polytope, order_polytope, poset_family

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "BadParams",
    "DegeneratePolytope",
    "Disconnected",
    "EmptyGraph",
    "LatticeDeficient",
    "LatticePolytope",
    "NotIDP",
    "NotPerfect",
    "OddCycleConditionFails",
    "Poset",
    "SearchBudgetExceeded",
    "SimpleGraph",
    "TooLarge",
    "ToriclassError",
    "chain_polytope",
    "class_group",
    "class_group_rank",
    "edge_polytope",
    "fingerprint",
    "from_points",
    "graph_family",
    "is_idp",
    "order_polytope",
    "poset_family",
    "pyramid",
    "pyramid_reduce",
    "shortcut_rank",
    "stable_set_polytope",
    "unimodular_equivalent",
]
