import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toriclass.errors import DegeneratePolytope
from toriclass.graph import graph_family, stable_set_polytope, edge_polytope, SimpleGraph
from toriclass.polytope import (
    LatticePolytope,
    facets,
    from_points,
    is_idp,
    lattice_points,
    polytope_from_json,
    polytope_to_json,
    pyramid,
    pyramid_reduce,
)
from toriclass.poset import X_SHAPE, Poset, order_polytope

SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]


def forms(P):
    return sorted((f.normal, f.offset, f.divisor) for f in facets(P))


def cube(d):
    return from_points(list(itertools.product((0, 1), repeat=d)))


def test_unit_square():
    P = from_points(SQUARE)
    assert P.dim == 2 and len(P.vertices) == 4


def test_duplicates_are_dropped():
    assert from_points(SQUARE + [(1, 0)]).vertices == from_points(SQUARE).vertices


def test_edge_polytope_k3_is_a_triangle():
    P = from_points([(1, 1, 0), (1, 0, 1), (0, 1, 1)])
    assert P.dim == 2 and len(P.vertices) == 3


def test_non_vertex_generators_are_not_vertices():
    P = from_points([(0, 0), (2, 0), (0, 2), (1, 1), (1, 0)])
    assert P.vertices == ((0, 0), (0, 2), (2, 0))


def test_square_facets():
    # x, y, 1 - x, 1 - y
    assert forms(from_points(SQUARE)) == [((-1, 0), 1, 1), ((0, -1), 1, 1), ((0, 1), 0, 1), ((1, 0), 0, 1)]


def test_single_edge_stable_set_facets():
    assert forms(from_points([(0, 0), (1, 0), (0, 1)])) == [((-1, -1), 1, 1), ((0, 1), 0, 1), ((1, 0), 0, 1)]


def test_k3_edge_polytope_facets_have_unit_divisor():
    # The lattice points affinely generate the reduced lattice, so the
    # normalized forms need no extra divisor (the 1/2 lives in the ambient forms).
    P = edge_polytope(graph_family("complete", (3,)))
    assert len(facets(P)) == 3
    assert all(f.divisor == 1 for f in facets(P))


def test_segment_of_length_two_has_interior_point():
    P = from_points([(0,), (2,)])
    assert P.lattice_points == ((0,), (1,), (2,))
    assert all(f.divisor == 1 for f in facets(P))


def test_divisor_on_lattice_deficient_tetrahedron():
    # lattice points are the 4 vertices, which span an index-2 sublattice
    P = from_points([(0, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1)])
    assert len(P.lattice_points) == 4
    assert sorted(f.divisor for f in facets(P)) == [2, 2, 2, 2]


def test_point_has_no_facets():
    with pytest.raises(DegeneratePolytope):
        facets(from_points([(1, 2)]))


def test_lattice_points():
    assert len(lattice_points(from_points(SQUARE))) == 4
    assert len(lattice_points(from_points([(0, 0), (2, 0), (0, 2), (2, 2)]))) == 9
    Pi = X_SHAPE.disjoint_union(Poset(1))
    assert len(lattice_points(order_polytope(Pi))) == 16


def test_lattice_points_sorted_and_ambient():
    P = from_points([(1, 1, 0), (1, 0, 1), (0, 1, 1)])
    assert lattice_points(P) == [(0, 1, 1), (1, 0, 1), (1, 1, 0)]


def test_idp_unit_cube():
    assert is_idp(cube(3)).is_idp


def test_not_idp_reeve_like_simplex():
    cert = is_idp(from_points([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)]))
    assert cert.verdict == "NotIDP"
    assert cert.witness == (1, 1, 1) and cert.degree == 2


def test_idp_witness_has_no_decomposition():
    P = from_points([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)])
    cert = is_idp(P)
    pts = lattice_points(P)
    assert all(tuple(a + b for a, b in zip(p, q)) != cert.witness for p in pts for q in pts)


def test_idp_inconclusive_below_bound():
    # a non-compressed simplex: degree bound 1 checks nothing, dim - 1 = 2
    P = from_points([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 3)])
    cert = is_idp(P, degree_bound=1)
    assert cert.verdict == "Inconclusive"


def test_stable_set_polytopes_of_small_graphs_are_idp():
    for G in (graph_family("cycle", (4,)), graph_family("gamma"), graph_family("path", (5,))):
        assert is_idp(stable_set_polytope(G)).is_idp


def test_pyramid_of_point_is_segment():
    P = pyramid(from_points([(0, 0)]))
    assert P.dim == 1 and len(P.lattice_points) == 2


def test_pyramid_of_square():
    P = pyramid(from_points(SQUARE))
    assert len(P.vertices) == 5 and len(P.lattice_points) == 5


def test_stab_of_cone_is_pyramid():
    # vertex 1 adjacent to every other vertex of a 4-cycle plus apex
    G = SimpleGraph(5, frozenset({(2, 3), (3, 4), (4, 5), (2, 5)} | {(1, v) for v in range(2, 6)}))
    H = SimpleGraph(4, frozenset({(1, 2), (2, 3), (3, 4), (1, 4)}))
    P = stable_set_polytope(G)
    Q = pyramid(stable_set_polytope(H))
    # the apex coordinate is appended last in pyramid(), first in G
    moved = sorted(p[1:] + p[:1] for p in P.lattice_points)
    assert moved == sorted(Q.lattice_points)


def test_pyramid_reduce_simplex():
    d = 4
    simplex = from_points([tuple(int(i == j) for j in range(d)) for i in range(d)] + [(0,) * d])
    core, count = pyramid_reduce(simplex)
    assert core.dim == 0 and count == d


def test_pyramid_reduce_square():
    core, count = pyramid_reduce(from_points(SQUARE))
    assert count == 0 and core.dim == 2


def test_pyramid_reduce_star():
    core, count = pyramid_reduce(stable_set_polytope(graph_family("complete_bipartite", (1, 3))))
    assert count == 1
    assert core.dim == 3 and len(core.lattice_points) == 8 and len(core.vertices) == 8


small_points = st.lists(
    st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)), min_size=1, max_size=7
)


@settings(max_examples=60)
@given(small_points)
def test_facet_inequalities_cut_out_lattice_points(points):
    P = from_points(points)
    if P.dim == 0:
        return
    pts = P.reduced_lattice_points
    for f in facets(P):
        vals = [f.value(c) for c in pts]
        assert min(vals) == 0
        from math import gcd
        g = 0
        for v in vals:
            g = gcd(g, v)
        assert g == 1
    box = itertools.product(*[range(min(c[i] for c in pts) - 1, max(c[i] for c in pts) + 2) for i in range(P.dim)])
    inside = sorted(c for c in box if all(f.raw(c) >= 0 for f in facets(P)))
    assert inside == sorted(pts)


@settings(max_examples=60)
@given(small_points)
def test_vertices_lie_on_dim_facets(points):
    P = from_points(points)
    if P.dim == 0:
        return
    for v in P.reduced_vertices:
        assert sum(1 for f in facets(P) if f.raw(v) == 0) >= P.dim


@settings(max_examples=40)
@given(small_points)
def test_pyramid_adds_one_facet_and_reduces_back(points):
    P = from_points(points)
    Q = pyramid(P)
    assert len(Q.lattice_points) == len(P.lattice_points) + 1
    if P.dim >= 1:
        assert len(facets(Q)) == len(facets(P)) + 1
    core_p, n_p = pyramid_reduce(P)
    core_q, n_q = pyramid_reduce(Q)
    assert n_q == n_p + 1 and n_q >= 1
    assert len(core_q.lattice_points) == len(core_p.lattice_points)


def test_edge_polytope_dimension_formula():
    from toriclass.census import enumerate_objects

    for n in range(2, 7):
        for _, G in enumerate_objects("graphs", n, {"connected": True}):
            b = 1 if G.is_bipartite() else 0
            assert edge_polytope(G).dim == n - b - 1


def test_zero_one_polytopes_have_vertices_as_lattice_points():
    for P in (order_polytope(X_SHAPE), stable_set_polytope(graph_family("gamma"))):
        assert sorted(P.vertices) == sorted(P.lattice_points)


def test_json_round_trip():
    P = order_polytope(X_SHAPE)
    doc = polytope_to_json(P)
    Q = polytope_from_json(doc)
    assert Q.lattice_points == P.lattice_points
    assert polytope_to_json(Q) == doc
    assert {"ambient_dim", "generators", "vertices", "facets", "lattice_points"} <= set(doc)


def test_constructor_rejects_wrong_lengths():
    with pytest.raises(ValueError):
        LatticePolytope([(0, 0), (1,)], 2)
