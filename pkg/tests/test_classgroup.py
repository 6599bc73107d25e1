import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toriclass.classgroup import (
    AbelianGroup,
    class_group,
    class_group_details,
    class_group_rank,
    divisor_matrix,
    lattice_points_generate,
    shortcut_rank,
)
from toriclass.errors import (
    Disconnected,
    LatticeDeficient,
    NotIDP,
    NotPerfect,
    OddCycleConditionFails,
)
from toriclass.graph import SimpleGraph, edge_polytope, graph_family, stable_set_polytope
from toriclass.polytope import from_points, pyramid
from toriclass.poset import X_SHAPE, Poset, comparability_graph, order_polytope, poset_family


def cube(d):
    return from_points(list(itertools.product((0, 1), repeat=d)))


def test_abelian_group_canonical_form():
    assert AbelianGroup(1, (6, 2, 1)) == AbelianGroup(1, (2, 6))
    assert AbelianGroup(0, (2, 3)) == AbelianGroup(0, (6,))
    assert str(AbelianGroup(2, (2,))) == "Z^2 + Z/2"
    assert str(AbelianGroup(0)) == "0"
    assert AbelianGroup(1) + AbelianGroup(2, (3,)) == AbelianGroup(3, (3,))
    assert not AbelianGroup(0, (2,)).is_torsion_free


def test_unit_cube():
    assert class_group(cube(3)) == AbelianGroup(2)


def test_gamma_stable_set_polytope():
    assert class_group(stable_set_polytope(graph_family("gamma"))) == AbelianGroup(3)


def test_k222_edge_polytope():
    assert class_group(edge_polytope(graph_family("complete_multipartite", (2, 2, 2)))) == AbelianGroup(3)


def test_rank_from_facets():
    assert class_group_rank(cube(2)) == 1
    assert class_group_rank(from_points([(0, 0), (1, 0), (0, 1)])) == 0
    assert class_group_rank(order_polytope(X_SHAPE.disjoint_union(Poset(1)))) == 3


def test_details_sizes():
    info = class_group_details(stable_set_polytope(graph_family("gamma")))
    assert info["psi_size"] == 10 and info["matrix_rank"] == 7


def test_not_idp_raises():
    # lattice points generate Z^3, yet (1, 1, 1) in 2P has no decomposition
    P = from_points([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2), (0, 0, 1)])
    assert lattice_points_generate(P)
    with pytest.raises(NotIDP):
        class_group(P)


def test_lattice_deficient_raises():
    P = from_points([(0, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1)])
    assert not lattice_points_generate(P)
    with pytest.raises(LatticeDeficient):
        class_group(P, assume_idp=True)


def test_point_has_trivial_group():
    assert class_group(from_points([(3, 4)])) == AbelianGroup(0)


def test_divisor_matrix_shape_and_zero_pattern():
    P = stable_set_polytope(graph_family("path", (3,)))
    M = divisor_matrix(P)
    assert len(M.entries) == len(M.rows) and all(len(r) == len(M.cols) for r in M.entries)
    for i, f in enumerate(M.rows):
        for j, c in enumerate(M.cols):
            assert (M.entries[i][j] == 0) == (f.value(c) == 0)
            assert M.entries[i][j] >= 0


def test_shortcuts():
    assert shortcut_rank(poset_family("Pi1", (2, 2))) == 1
    assert shortcut_rank(comparability_graph(poset_family("Pi2", (1, 1, 1, 2))), "stable") == 2
    assert shortcut_rank(graph_family("h_graph"), "edge") == 2
    assert shortcut_rank(graph_family("complete", (2,)), "edge") == 0


def test_shortcut_preconditions():
    with pytest.raises(NotPerfect):
        shortcut_rank(graph_family("cycle", (5,)), "stable")
    with pytest.raises(Disconnected):
        shortcut_rank(graph_family("empty", (3,)), "edge")
    bad = SimpleGraph(6, frozenset({(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 4)}))
    with pytest.raises(OddCycleConditionFails):
        shortcut_rank(SimpleGraph(8, frozenset({(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6),
                                                (3, 7), (7, 8), (8, 4)})), "edge")
    assert shortcut_rank(bad, "edge") == class_group(edge_polytope(bad)).free_rank


def test_witness_class_groups():
    assert class_group(order_polytope(X_SHAPE.disjoint_union(Poset(1)))) == AbelianGroup(3)
    assert class_group(stable_set_polytope(comparability_graph(poset_family("Pi2", (1, 1, 1, 2))))) == AbelianGroup(2)
    assert class_group(edge_polytope(graph_family("h_graph"))) == AbelianGroup(2)
    for s1 in range(2, 5):
        for s2 in range(2, 5):
            K = edge_polytope(graph_family("complete_bipartite", (s1, s2)))
            assert class_group(K) == AbelianGroup(1)


small = st.lists(st.tuples(st.integers(0, 1), st.integers(0, 1), st.integers(0, 1), st.integers(0, 1)),
                 min_size=1, max_size=10)


@settings(max_examples=60)
@given(small)
def test_pyramid_invariance(points):
    P = from_points(points)
    if not lattice_points_generate(P):
        return
    try:
        g = class_group(P)
    except NotIDP:
        return
    assert class_group(pyramid(P)) == g


@settings(max_examples=60)
@given(small)
def test_free_rank_equals_facet_formula(points):
    P = from_points(points)
    if P.dim == 0 or not lattice_points_generate(P):
        return
    try:
        g = class_group(P)
    except NotIDP:
        return
    assert g.free_rank == class_group_rank(P)
