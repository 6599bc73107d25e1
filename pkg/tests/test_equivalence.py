import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toriclass.classgroup import class_group
from toriclass.equivalence import (
    EquivWitness,
    fingerprint,
    unimodular_equivalent,
    witness_to_json,
)
from toriclass.errors import SearchBudgetExceeded
from toriclass.graph import edge_polytope, graph_family, stable_set_polytope
from toriclass.lattice import determinant
from toriclass.polytope import LatticePolytope, from_points
from toriclass.poset import X_SHAPE, Poset, chain_polytope, order_polytope, poset_family

SQUARE = from_points([(0, 0), (1, 0), (0, 1), (1, 1)])


def scramble(P: LatticePolytope, rng: random.Random) -> LatticePolytope:
    d = P.ambient_dim
    A = [[int(i == j) for j in range(d)] for i in range(d)]
    for _ in range(2 * d + 2):
        i, j = rng.randrange(d), rng.randrange(d)
        if i != j:
            c = rng.choice((-1, 1))
            A[i] = [a + c * b for a, b in zip(A[i], A[j])]
    if d and rng.random() < 0.5:
        A[0] = [-x for x in A[0]]
    t = [rng.randint(-2, 2) for _ in range(d)]
    return LatticePolytope(
        [tuple(sum(a * x for a, x in zip(row, g)) + s for row, s in zip(A, t)) for g in P.generators], d
    )


def check(w, P, Q):
    assert abs(determinant([list(r) for r in w.matrix])) == 1
    assert sorted(w.apply(p) for p in P.reduced_lattice_points) == sorted(Q.reduced_lattice_points)


def test_square_fingerprint():
    fp = fingerprint(SQUARE)
    assert (fp.dim, fp.vertices, fp.lattice_points, fp.facets) == (2, 4, 4, 4)
    assert fp.volume == 2


def test_triangle_differs_from_square():
    assert fingerprint(from_points([(0, 0), (1, 0), (0, 1)])).vertices == 3
    assert unimodular_equivalent(from_points([(0, 0), (1, 0), (0, 1)]), SQUARE) is None


def test_segre_fingerprints_agree():
    A = edge_polytope(graph_family("complete_bipartite", (2, 2)))
    B = order_polytope(poset_family("Pi1", (1, 1)))
    assert fingerprint(A) == fingerprint(B)
    w = unimodular_equivalent(A, B)
    check(w, A, B)


def test_scrambled_copy_is_equivalent():
    rng = random.Random(11)
    P = order_polytope(X_SHAPE)
    Q = scramble(P, rng)
    w = unimodular_equivalent(P, Q)
    assert w is not None
    check(w, P, Q)


def test_notched_graph_and_order_polytope():
    A = edge_polytope(graph_family("K_s1s2_t1t2", (3, 3, 1, 1)))
    B = order_polytope(poset_family("Pi3", (2, 2, 1, 1, 0)))
    check(unimodular_equivalent(A, B), A, B)


def test_apex_graph_and_notched_graph():
    A = edge_polytope(graph_family("K_1s1s2_t1t2", (3, 3, 0, 0)))
    B = edge_polytope(graph_family("K_s1s2_t1t2", (3, 3, 1, 1)))
    check(unimodular_equivalent(A, B), A, B)


def test_inequivalent_same_fingerprint():
    # order and chain polytopes of the X-shape share coarse data but differ
    P, Q = order_polytope(X_SHAPE), chain_polytope(X_SHAPE)
    assert unimodular_equivalent(P, Q) is None


def test_points_of_different_ambient_dimension():
    w = unimodular_equivalent(from_points([(1, 2)]), from_points([(5,)]))
    assert w is not None and w.matrix == ()


def test_different_ambient_dimensions():
    A = from_points([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)])
    w = unimodular_equivalent(A, SQUARE)
    assert w is not None


def test_budget_exit_is_distinct_from_none():
    P = stable_set_polytope(graph_family("empty", (4,)))
    Q = scramble(P, random.Random(1))
    with pytest.raises(SearchBudgetExceeded) as exc:
        unimodular_equivalent(P, Q, budget=2)
    assert exc.value.nodes == 3


def test_witness_json():
    w = EquivWitness(((1, 0), (0, 1)), (0, 2))
    assert witness_to_json(w) == {"matrix": [[1, 0], [0, 1]], "translation": [0, 2]}
    assert w.apply((1, 1)) == (1, 3)


CORPUS = [
    order_polytope(X_SHAPE),
    order_polytope(poset_family("Pi2", (1, 1, 1, 1))),
    order_polytope(poset_family("Pi4", (1, 1, 1, 1))),
    chain_polytope(poset_family("Pi3", (1, 1, 1, 1, 1))),
    stable_set_polytope(graph_family("gamma")),
    stable_set_polytope(graph_family("cycle", (6,))),
    edge_polytope(graph_family("complete_multipartite", (2, 2, 2))),
    edge_polytope(graph_family("h_graph")),
    edge_polytope(graph_family("K_s1s2_t1t2", (3, 2, 1, 1))),
    from_points([(0, 0, 0), (2, 0, 0), (0, 2, 0), (0, 0, 1), (1, 1, 1)]),
    from_points([(0, 0), (3, 1), (1, 2)]),
]


@settings(max_examples=200)
@given(st.sampled_from(range(len(CORPUS))), st.integers(0, 10**6))
def test_soundness_and_symmetry_on_relabelled_pairs(k, seed):
    rng = random.Random(seed)
    P = CORPUS[k]
    Q = scramble(P, rng)
    w = unimodular_equivalent(P, Q)
    assert w is not None
    check(w, P, Q)
    back = unimodular_equivalent(Q, P)
    assert back is not None
    check(back, Q, P)


def test_corpus_pairs_are_symmetric_and_preserve_class_groups():
    for i, P in enumerate(CORPUS):
        for Q in CORPUS[i + 1:]:
            a, b = unimodular_equivalent(P, Q), unimodular_equivalent(Q, P)
            assert (a is None) == (b is None)
            if a is not None:
                assert class_group(P) == class_group(Q)


def test_deterministic_witness():
    P = order_polytope(poset_family("Pi1", (2, 1)))
    Q = scramble(P, random.Random(5))
    assert unimodular_equivalent(P, Q) == unimodular_equivalent(P, Q)


def test_x_shape_plus_point_against_pyramid():
    from toriclass.polytope import pyramid

    P = order_polytope(X_SHAPE.disjoint_union(Poset(1)))
    Q = pyramid(order_polytope(X_SHAPE))
    # the unit segment factor is a product, not a pyramid
    assert unimodular_equivalent(P, Q) is None
