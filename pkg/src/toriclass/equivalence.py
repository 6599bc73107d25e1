"""Unimodular equivalence of lattice polytopes.

Both polytopes are compared through their reduced, full-dimensional copies.
The search fixes an affinely independent set of lattice points of P and
tries to send it onto lattice points of Q with matching facet data.  Every
partial choice already determines the image of all points of P in the
affine hull of the chosen ones, and those images must again be points of Q
with the same facet data.  A complete choice determines the affine map,
which is accepted only if it is integral, unimodular and maps the lattice
points of P onto those of Q.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import SearchBudgetExceeded
from .lattice import determinant
from .polytope import LatticePolytope

__all__ = [
    "DEFAULT_BUDGET",
    "EquivWitness",
    "Fingerprint",
    "fingerprint",
    "unimodular_equivalent",
    "witness_to_json",
]

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class Fingerprint:
    dim: int
    vertices: int
    lattice_points: int
    facets: int
    points_per_facet: tuple
    facets_per_vertex: tuple
    volume: int


@dataclass(frozen=True)
class EquivWitness:
    """The map x -> matrix @ x + translation on reduced coordinates."""

    matrix: tuple
    translation: tuple

    def apply(self, x) -> tuple:
        return tuple(
            sum(a * b for a, b in zip(row, x)) + t for row, t in zip(self.matrix, self.translation)
        )


def witness_to_json(w: EquivWitness) -> dict:
    return {"matrix": [list(r) for r in w.matrix], "translation": list(w.translation)}


def _normalized_volume(P: LatticePolytope) -> int:
    r = P.dim
    pts = P.reduced_vertices
    if r == 0:
        return 1
    if r == 1:
        xs = [p[0] for p in pts]
        return max(xs) - min(xs)
    from scipy.spatial import ConvexHull

    vol = ConvexHull(pts).volume * factorial(r)
    out = round(vol)
    if abs(vol - out) > 1e-6 * max(1.0, vol):
        raise ArithmeticError("normalized volume is not close to an integer")
    return out


def fingerprint(P: LatticePolytope) -> Fingerprint:
    if P.dim == 0:
        return Fingerprint(0, 1, 1, 0, (), (), 1)
    fv = P.facet_values()
    pts = P.reduced_lattice_points
    index = {p: i for i, p in enumerate(pts)}
    verts = [index[v] for v in P.reduced_vertices]
    per_facet = sorted(row.count(0) for row in fv)
    per_vertex = sorted(sum(1 for row in fv if row[i] == 0) for i in verts)
    return Fingerprint(
        P.dim,
        len(verts),
        len(pts),
        len(fv),
        tuple(per_facet),
        tuple(per_vertex),
        _normalized_volume(P),
    )


class _Side:
    """Lattice points of one polytope with their facet data."""

    def __init__(self, P: LatticePolytope):
        self.points = P.reduced_lattice_points
        self.index = {p: i for i, p in enumerate(self.points)}
        fv = P.facet_values()
        self.columns = [tuple(row[i] for row in fv) for i in range(len(self.points))]
        vset = set(P.reduced_vertices)
        self.signature = [
            (p in vset, tuple(sorted(col))) for p, col in zip(self.points, self.columns)
        ]

    def pair(self, i, j):
        return tuple(sorted(zip(self.columns[i], self.columns[j])))


def _solve(rows, rhs):
    """Unique rational solution of a consistent full-column-rank system, or None."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    A = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    piv = []
    row = 0
    for col in range(n):
        k = next((i for i in range(row, m) if A[i][col] != 0), None)
        if k is None:
            continue
        A[row], A[k] = A[k], A[row]
        inv = 1 / A[row][col]
        A[row] = [x * inv for x in A[row]]
        for i in range(m):
            if i != row and A[i][col] != 0:
                f = A[i][col]
                A[i] = [x - f * y for x, y in zip(A[i], A[row])]
        piv.append(col)
        row += 1
    if any(A[i][n] != 0 for i in range(row, m)):
        return None
    x = [Fraction(0)] * n
    for i, col in enumerate(piv):
        x[col] = A[i][n]
    return x


def _choose_basis(side: _Side, r: int):
    """Affinely independent points of P, rarest signatures first.

    For each prefix, also return the points of P lying in its affine hull
    together with their affine coefficients.
    """
    freq = Counter(side.signature)
    order = sorted(range(len(side.points)), key=lambda i: (freq[side.signature[i]], i))
    basis = [order[0]]
    diffs = []
    o = side.points[order[0]]
    for i in order[1:]:
        if len(basis) == r + 1:
            break
        d = [a - b for a, b in zip(side.points[i], o)]
        if _rank(diffs + [d]) > len(diffs):
            basis.append(i)
            diffs.append(d)
    hulls = []
    for k in range(len(basis)):
        cols = diffs[:k]
        members = []
        for i, p in enumerate(side.points):
            if i in basis[: k + 1]:
                continue
            d = [a - b for a, b in zip(p, o)]
            if k == 0:
                if not any(d):
                    members.append((i, ()))
                continue
            lam = _solve([list(t) for t in zip(*cols)], d)
            if lam is not None:
                members.append((i, tuple(lam)))
        hulls.append(members)
    return basis, hulls


def _rank(rows) -> int:
    if not rows:
        return 0
    A = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    for col in range(len(A[0])):
        k = next((i for i in range(rank, len(A)) if A[i][col] != 0), None)
        if k is None:
            continue
        A[rank], A[k] = A[k], A[rank]
        for i in range(rank + 1, len(A)):
            f = A[i][col] / A[rank][col]
            if f:
                A[i] = [x - f * y for x, y in zip(A[i], A[rank])]
        rank += 1
    return rank


def _affine_map(P_pts, Q_pts):
    """Integral (A, v) with A p_i + v = q_i on an affine basis, else None."""
    p0, q0 = P_pts[0], Q_pts[0]
    r = len(p0)
    DP = [[P_pts[j + 1][i] - p0[i] for j in range(r)] for i in range(r)]
    DQ = [[Q_pts[j + 1][i] - q0[i] for j in range(r)] for i in range(r)]
    dp = determinant(DP)
    if abs(dp) != abs(determinant(DQ)):
        return None
    # A = DQ * DP^{-1}; solve A * DP = DQ row by row via DP^T a = row of DQ
    DPT = [list(col) for col in zip(*DP)]
    A = []
    for row in DQ:
        a = _solve(DPT, row)
        if a is None or any(x.denominator != 1 for x in a):
            return None
        A.append(tuple(int(x) for x in a))
    if abs(determinant([list(r_) for r_ in A])) != 1:
        return None
    v = tuple(q - sum(a * p for a, p in zip(row, p0)) for row, q in zip(A, q0))
    return tuple(A), v


def unimodular_equivalent(P: LatticePolytope, Q: LatticePolytope, budget: int = DEFAULT_BUDGET):
    """Return an EquivWitness mapping P onto Q, or None if none exists.

    Raises SearchBudgetExceeded once more than ``budget`` candidate images
    have been tried.
    """
    if fingerprint(P) != fingerprint(Q):
        return None
    r = P.dim
    if r == 0:
        p, q = P.reduced_generators[0], Q.reduced_generators[0]
        return EquivWitness((), tuple(b - a for a, b in zip(p, q)))
    sp, sq = _Side(P), _Side(Q)
    if Counter(sp.signature) != Counter(sq.signature):
        return None
    basis, hulls = _choose_basis(sp, r)
    by_sig = {}
    for j, s in enumerate(sq.signature):
        by_sig.setdefault(s, []).append(j)
    nodes = 0
    chosen = []

    def consistent(k):
        c0 = sq.points[chosen[0]]
        cols = [[a - b for a, b in zip(sq.points[j], c0)] for j in chosen[1:]]
        for i, lam in hulls[k]:
            img = tuple(
                c0[t] + sum(l * col[t] for l, col in zip(lam, cols)) for t in range(r)
            )
            if any(isinstance(x, Fraction) and x.denominator != 1 for x in img):
                return False
            j = sq.index.get(tuple(int(x) for x in img))
            if j is None or sq.signature[j] != sp.signature[i]:
                return False
        return True

    def search(k):
        nonlocal nodes
        if k == len(basis):
            m = _affine_map([sp.points[i] for i in basis], [sq.points[j] for j in chosen])
            if m is None:
                return None
            w = EquivWitness(*m)
            if sorted(w.apply(p) for p in sp.points) != list(sq.points):
                return None
            return w
        b = basis[k]
        for j in by_sig.get(sp.signature[b], ()):
            if j in chosen:
                continue
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(nodes)
            if any(sp.pair(basis[t], b) != sq.pair(chosen[t], j) for t in range(k)):
                continue
            chosen.append(j)
            if consistent(k):
                w = search(k + 1)
                if w is not None:
                    return w
            chosen.pop()
        return None

    w = search(0)
    if w is not None:
        assert sorted(w.apply(p) for p in sp.points) == list(sq.points)
        assert abs(determinant([list(row) for row in w.matrix])) == 1
    return w
