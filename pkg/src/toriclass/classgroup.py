"""Divisor class groups of toric rings of lattice polytopes.

The class group is the cokernel of the divisor matrix: one row per facet,
one column per lattice point, entry = value of the normalized facet form at
that point.  Its Smith normal form gives the free rank and the torsion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Disconnected, LatticeDeficient, NotIDP, NotPerfect, OddCycleConditionFails
from .lattice import smith_normal_form
from .polytope import LatticePolytope, is_idp

__all__ = [
    "AbelianGroup",
    "DivisorMatrix",
    "divisor_matrix",
    "class_group",
    "class_group_details",
    "class_group_rank",
    "shortcut_rank",
    "lattice_points_generate",
]


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank plus cyclic factors Z/d for d in torsion (each d > 1, chained)."""

    free_rank: int
    torsion: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", _canonical_torsion(self.torsion))

    def __add__(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup(self.free_rank + other.free_rank, self.torsion + other.torsion)

    @property
    def is_torsion_free(self) -> bool:
        return not self.torsion

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def _canonical_torsion(factors) -> tuple:
    fs = [int(f) for f in factors if int(f) > 1]
    if not fs:
        return ()
    diag = [[f if i == j else 0 for j in range(len(fs))] for i, f in enumerate(fs)]
    return tuple(d for d in smith_normal_form(diag).invariant_factors if d > 1)


@dataclass(frozen=True)
class DivisorMatrix:
    rows: tuple  # facets
    cols: tuple  # reduced lattice points
    entries: tuple  # entries[i][j] = value of facet i at point j


def lattice_points_generate(P: LatticePolytope) -> bool:
    """Do the lattice points affinely generate the reduced lattice Z^dim?"""
    pts = P.reduced_lattice_points
    if P.dim == 0:
        return True
    diffs = [[a - b for a, b in zip(p, pts[0])] for p in pts[1:]]
    snf = smith_normal_form(diffs)
    return snf.rank == P.dim and all(d == 1 for d in snf.invariant_factors)


def divisor_matrix(P: LatticePolytope) -> DivisorMatrix:
    if P.dim == 0:
        return DivisorMatrix((), P.lattice_points, ())
    return DivisorMatrix(tuple(P.facets), P.reduced_lattice_points, P.facet_values())


def class_group_details(P: LatticePolytope, assume_idp: bool = False) -> dict:
    """Class group together with the sizes reported in JSON output."""
    if P.dim == 0:
        return {"group": AbelianGroup(0), "psi_size": 0, "matrix_rank": 0}
    if not lattice_points_generate(P):
        raise LatticeDeficient("lattice points do not generate the lattice of the affine hull")
    if not assume_idp:
        cert = is_idp(P)
        if not cert.is_idp:
            raise NotIDP(f"IDP check returned {cert.verdict}")
    M = divisor_matrix(P).entries
    snf = smith_normal_form(M)
    group = AbelianGroup(len(M) - snf.rank, tuple(d for d in snf.invariant_factors if d > 1))
    return {"group": group, "psi_size": len(M), "matrix_rank": snf.rank}


def class_group(P: LatticePolytope, assume_idp: bool = False) -> AbelianGroup:
    return class_group_details(P, assume_idp)["group"]


def class_group_rank(P: LatticePolytope, assume_idp: bool = False) -> int:
    """Rank from the facet count alone: |facets| - (dim + 1)."""
    if P.dim == 0:
        return 0
    if not assume_idp and not is_idp(P).is_idp:
        raise NotIDP("rank formula needs an IDP polytope")
    return len(P.facets) - (P.dim + 1)


def shortcut_rank(obj, kind: str | None = None) -> int:
    """Combinatorial rank formulas.

    ``obj`` is a Poset (Hibi formula), or a SimpleGraph with kind "stable"
    (maximal cliques minus one) or "edge" (|Psi| minus the Krull dimension).
    """
    from .graph import SimpleGraph, edge_psi_forms, is_perfect, maximal_cliques, odd_cycle_condition
    from .poset import Poset, hibi_rank

    if isinstance(obj, Poset):
        return hibi_rank(obj)
    if not isinstance(obj, SimpleGraph):
        raise TypeError("expected a Poset or a SimpleGraph")
    if kind in ("stable", "stable_set"):
        if not is_perfect(obj):
            raise NotPerfect("stable set shortcut needs a perfect graph")
        return len(maximal_cliques(obj)) - 1
    if kind == "edge":
        if not obj.is_connected():
            raise Disconnected("edge shortcut needs a connected graph")
        if not odd_cycle_condition(obj):
            raise OddCycleConditionFails("edge shortcut needs the odd cycle condition")
        if obj.n == 2:
            # a single edge: the polytope is a point
            return 0
        return len(edge_psi_forms(obj)) - (obj.n - obj.bipartite_component_count())
    raise ValueError(f"unknown kind {kind!r}")
