import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from toriclass.census import enumerate_objects
from toriclass.equivalence import unimodular_equivalent
from toriclass.errors import BadParams
from toriclass.graph import is_perfect, stable_set_polytope
from toriclass.poset import (
    X_SHAPE,
    Poset,
    chain_polytope,
    comparability_graph,
    contains_x_shape,
    hasse_edge_count,
    hibi_rank,
    order_polytope,
    poset_family,
    poset_from_json,
    poset_polytope,
    poset_to_dot,
    poset_to_json,
)


def chain(n):
    return Poset(n, frozenset((i, i + 1) for i in range(1, n)))


def test_cover_validation():
    with pytest.raises(BadParams):
        Poset(3, frozenset({(1, 2), (2, 3), (1, 3)}))
    with pytest.raises(BadParams):
        Poset(2, frozenset({(1, 2), (2, 1)}))
    with pytest.raises(BadParams):
        Poset(2, frozenset({(1, 3)}))


def test_from_relations_reduces_to_covers():
    P = Poset.from_relations(3, [(1, 2), (2, 3), (1, 3)])
    assert P.covers == frozenset({(1, 2), (2, 3)})


def test_pi1_antichain():
    P = poset_family("Pi1", (1, 1))
    assert P.size == 2 and not P.covers


def test_pi4_is_x_shape():
    assert poset_family("Pi4", (1, 1, 1, 1)).canonical_form() == X_SHAPE.canonical_form()


def test_pi3_with_empty_middle_chain():
    assert poset_family("Pi3", (1, 1, 1, 1, 0)).covers == frozenset({(1, 2), (1, 4), (3, 4)})


def test_pi2_shape():
    # a chain 1 < 2 of length t = 2 below the one-element chains 3 and 4; chain {5} apart
    P = poset_family("Pi2", (1, 1, 1, 2))
    assert P.covers == frozenset({(1, 2), (2, 3), (2, 4)})
    assert not P.comparable(3, 4) and not any(P.comparable(5, v) for v in range(1, 5))


@pytest.mark.parametrize(
    "kind,params",
    [("Pi1", (0, 1)), ("Pi2", (1, 1, 0, 0)), ("Pi2", (1, 1, 1, -1)), ("Pi3", (1, 1, 0, 1, 0)),
     ("Pi4", (1, 1, 1, 0)), ("Pi5", (1,)), ("Pi1", (1,))],
)
def test_family_parameter_errors(kind, params):
    with pytest.raises(BadParams):
        poset_family(kind, params)


def test_order_polytope_of_two_chain():
    assert sorted(order_polytope(chain(2)).vertices) == [(0, 0), (1, 0), (1, 1)]


def test_chain_polytope_of_two_chain():
    assert sorted(chain_polytope(chain(2)).vertices) == [(0, 0), (0, 1), (1, 0)]


def test_x_shape_plus_point_order_polytope():
    Pi = X_SHAPE.disjoint_union(Poset(1))
    assert len(order_polytope(Pi).vertices) == 16
    assert len(Pi.ideals()) == 16


def test_poset_polytope_dispatch():
    assert poset_polytope(chain(2), "order").vertices == order_polytope(chain(2)).vertices
    with pytest.raises(BadParams):
        poset_polytope(chain(2), "hull")


def test_x_shape_detection():
    assert not contains_x_shape(chain(6))
    assert contains_x_shape(poset_family("Pi4", (1, 1, 1, 1)))
    assert not contains_x_shape(poset_family("Pi3", (2, 2, 1, 1, 0)))


def test_x_shape_detection_matches_brute_force():
    from itertools import combinations, permutations

    def brute(P):
        for S in combinations(range(1, P.size + 1), 5):
            for a, b, c, d, e in permutations(S):
                if (P.less(a, c) and P.less(b, c) and P.less(c, d) and P.less(c, e)
                        and not P.comparable(a, b) and not P.comparable(d, e)):
                    return True
        return False

    for n in range(5, 7):
        for _, P in enumerate_objects("posets", n):
            assert contains_x_shape(P) == brute(P)


def test_comparability_graphs():
    assert not comparability_graph(Poset(3)).edges
    assert len(comparability_graph(chain(3)).edges) == 3
    G = comparability_graph(poset_family("Pi2", (1, 1, 1, 2)))
    all_pairs = {(i, j) for i in range(1, 5) for j in range(i + 1, 5)}
    assert G.edges == frozenset(all_pairs - {(3, 4)})
    assert G.degree(5) == 0


def test_comparability_graphs_are_perfect():
    for n in range(1, 7):
        for _, P in enumerate_objects("posets", n):
            assert is_perfect(comparability_graph(P))


def test_chain_polytope_is_stable_set_polytope_of_comparability_graph():
    for n in range(1, 6):
        for _, P in enumerate_objects("posets", n):
            assert chain_polytope(P).same_points(stable_set_polytope(comparability_graph(P)))


def test_hibi_rank_examples():
    assert hibi_rank(chain(5)) == 0
    assert hibi_rank(poset_family("Pi1", (2, 2))) == 1
    Pi = X_SHAPE.disjoint_union(Poset(1))
    assert hasse_edge_count(Pi) == 10 and hibi_rank(Pi) == 3


def test_hibi_rank_matches_facet_count():
    for n in range(1, 7):
        for _, P in enumerate_objects("posets", n):
            O = order_polytope(P)
            assert hibi_rank(P) == len(O.facets) - (n + 1)


def test_order_chain_equivalence_iff_no_x_shape():
    for n in range(1, 6):
        for _, P in enumerate_objects("posets", n):
            w = unimodular_equivalent(order_polytope(P), chain_polytope(P))
            assert (w is not None) == (not contains_x_shape(P))


def test_families_pi1_pi2_pi3_order_equals_chain():
    for P in (poset_family("Pi1", (2, 3)), poset_family("Pi2", (1, 2, 1, 1)), poset_family("Pi3", (1, 2, 1, 1, 1))):
        assert unimodular_equivalent(order_polytope(P), chain_polytope(P)) is not None


posets = st.integers(1, 7).flatmap(
    lambda n: st.lists(st.tuples(st.integers(1, n), st.integers(1, n)), max_size=10).map(
        lambda pairs: Poset.from_relations(n, [(min(a, b), max(a, b)) for a, b in pairs if a != b])
    )
)


@given(posets)
def test_ideals_are_down_closed_and_antichains_incomparable(P):
    for I in P.ideals():
        assert all(i in I for j in I for i in range(1, P.size + 1) if P.less(i, j))
    for A in P.antichains():
        assert all(not P.comparable(a, b) for a in A for b in A)
    # ideals and antichains are in bijection via maximal elements
    assert len(P.ideals()) == len(P.antichains())


@given(posets, st.randoms(use_true_random=False))
def test_canonical_form_invariant_under_relabelling(P, rng):
    perm = list(range(1, P.size + 1))
    rng.shuffle(perm)
    assert P.relabel(perm).canonical_form() == P.canonical_form()


@given(posets)
def test_linear_extension_respects_order(P):
    ext = P.linear_extension()
    pos = {v: k for k, v in enumerate(ext)}
    assert all(pos[i] < pos[j] for i, j in P.relations())


@given(posets)
def test_dual_reverses_relations(P):
    D = P.dual()
    assert sorted(D.relations()) == sorted((j, i) for i, j in P.relations())
    assert hibi_rank(D) == hibi_rank(P)


def test_json_round_trip():
    P = poset_family("Pi3", (1, 2, 1, 1, 1))
    doc = poset_to_json(P)
    assert doc["size"] == P.size
    assert poset_from_json(doc) == P


def test_dot_output():
    text = poset_to_dot(chain(2), hat=True)
    assert "p1 -> p2;" in text and "bottom -> p1;" in text and "p2 -> top;" in text
    assert "bottom" not in poset_to_dot(chain(2))


def test_random_relabel_keeps_hibi_rank():
    rng = random.Random(7)
    P = poset_family("Pi4", (1, 2, 1, 1))
    for _ in range(5):
        perm = list(range(1, P.size + 1))
        rng.shuffle(perm)
        assert hibi_rank(P.relabel(perm)) == hibi_rank(P) == 2
