import pytest

from toriclass import census

OTHER_CHECKS = [
    "order-chain-equivalence",
    "order-chain-families",
    "rank-one-coincidence",
    "stable-rank-two-in-order",
    "edge-rank-two-in-order",
    "order-rank-two-in-stable-or-edge",
]


@pytest.mark.parametrize("name", OTHER_CHECKS)
def test_check_passes_at_default_bounds(name):
    rep = census.verify(name)
    assert rep.instance_count > 0
    assert rep.counterexamples == []


def test_order_chain_equivalence_counts():
    rep = census.verify("order-chain-equivalence", {"max_elements": 5})
    # one instance per poset on 1..5 elements
    assert rep.passed and rep.instance_count == 1 + 2 + 5 + 16 + 63


def test_smaller_bounds_are_respected():
    assert census.verify("edge-nonbipartite-small-rank", {"max_vertices": 5}).details["bounds"] == {"max_vertices": 5}
