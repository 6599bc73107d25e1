from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toriclass.lattice import (
    affine_lattice_span,
    determinant,
    determinantal_divisors,
    hermite_normal_form,
    identity,
    inverse_unimodular,
    is_unimodular,
    matmul,
    saturated_row_lattice,
    smith_normal_form,
)


def matrices(max_rows=5, max_cols=5, lo=-6, hi=6):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(
                st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=m, max_size=m
            )
        )
    )


def unimodular(n):
    """Products of elementary integer matrices."""
    ops = st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(-2, 2)), max_size=8)

    def build(steps):
        U = identity(n)
        for i, j, c in steps:
            if i != j:
                U[i] = [a + c * b for a, b in zip(U[i], U[j])]
        return U

    return ops.map(build)


def test_snf_identity():
    s = smith_normal_form(identity(3))
    assert s.invariant_factors == (1, 1, 1) and s.rank == 3


def test_snf_zero():
    s = smith_normal_form([[0, 0], [0, 0]])
    assert s.invariant_factors == () and s.rank == 0


def test_snf_small_example():
    assert smith_normal_form([[2, 4], [6, 8]]).invariant_factors == (2, 4)


def test_snf_rectangular_and_empty():
    assert smith_normal_form([[1, 2, 3]]).invariant_factors == (1,)
    assert smith_normal_form([]).rank == 0


def test_snf_transforms_reproduce_diagonal():
    A = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    s = smith_normal_form(A, transforms=True)
    assert s.invariant_factors == (2, 6, 12)
    assert matmul(matmul(s.left, A), s.right) == s.diagonal()
    assert is_unimodular(s.left) and is_unimodular(s.right)


def test_snf_without_transforms_keeps_none():
    s = smith_normal_form([[3]])
    assert s.left is None and s.right is None


@settings(max_examples=1000)
@given(matrices())
def test_snf_matches_determinantal_divisors(A):
    s = smith_normal_form(A)
    prod = 1
    for k in range(1, min(len(A), len(A[0])) + 1):
        dk = determinantal_divisors(A, k)
        if k <= s.rank:
            prod *= s.invariant_factors[k - 1]
            assert dk == prod
        else:
            assert dk == 0


@given(matrices(4, 4))
def test_snf_factors_divide_chain(A):
    f = smith_normal_form(A).invariant_factors
    assert all(b % a == 0 for a, b in zip(f, f[1:]))
    assert all(d > 0 for d in f)


@given(matrices(4, 4), st.data())
def test_snf_invariant_under_unimodular_multiplication(A, data):
    m, n = len(A), len(A[0])
    U = data.draw(unimodular(m))
    V = data.draw(unimodular(n))
    base = smith_normal_form(A).invariant_factors
    assert smith_normal_form(matmul(matmul(U, A), V)).invariant_factors == base


@given(matrices(3, 3))
def test_snf_invariant_under_permutations(A):
    base = smith_normal_form(A).invariant_factors
    for perm in permutations(range(len(A))):
        assert smith_normal_form([A[i] for i in perm]).invariant_factors == base


@given(matrices(4, 4))
def test_snf_transforms_property(A):
    s = smith_normal_form(A, transforms=True)
    assert matmul(matmul(s.left, A), s.right) == s.diagonal()
    assert abs(determinant(s.left)) == 1 and abs(determinant(s.right)) == 1


def test_hnf_shape():
    H = hermite_normal_form([[2, 0], [0, 2], [1, 1]])
    assert H == [[1, 1], [0, 2]]


@given(matrices(4, 4))
def test_hnf_row_space_and_transform(A):
    H, U = hermite_normal_form(A, transform=True)
    if H:
        assert matmul(U, A) == H
    assert len(H) == smith_normal_form(A).rank
    for k, row in enumerate(H):
        piv = next(j for j, x in enumerate(row) if x)
        assert row[piv] > 0
        for above in H[:k]:
            assert 0 <= above[piv] < row[piv]


def test_affine_span_single_point():
    b = affine_lattice_span([(0, 0)])
    assert b.origin == (0, 0) and b.basis == ()


def test_affine_span_generates_z2():
    b = affine_lattice_span([(0, 0), (2, 0), (0, 2), (1, 1)])
    assert b.rank == 2
    assert abs(determinant([list(r) for r in b.basis])) == 2
    # (1, 0) is not an integer combination of the differences.
    assert b.coordinates((1, 0)) is None
    assert b.coordinates((1, 1)) is not None


def test_affine_span_edge_polytope_k3():
    b = affine_lattice_span([(1, 1, 0), (1, 0, 1), (0, 1, 1)])
    assert b.rank == 2


@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4)), min_size=1, max_size=6))
def test_affine_span_membership(points):
    b = affine_lattice_span(points)
    for p in points:
        c = b.coordinates(p)
        assert c is not None
        back = [o + sum(ci * v[j] for ci, v in zip(c, b.basis)) for j, o in enumerate(b.origin)]
        assert tuple(back) == p


@given(matrices(3, 4))
def test_saturated_row_lattice_inverse(A):
    L, P = saturated_row_lattice(A, len(A[0]))
    if L:
        assert matmul(L, P) == identity(len(L))


def test_inverse_unimodular():
    U = [[2, 1], [1, 1]]
    assert matmul(U, inverse_unimodular(U)) == identity(2)


def test_determinant_bareiss():
    assert determinant([[1, 2, 3], [4, 5, 6], [7, 8, 10]]) == -3
    assert determinant([]) == 1


def test_non_unimodular_inverse_rejected():
    with pytest.raises(ValueError):
        inverse_unimodular([[2, 0], [0, 1]])
