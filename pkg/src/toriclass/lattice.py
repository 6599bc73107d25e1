"""Exact integer linear algebra.

Matrices are plain lists of lists of Python ints, so arithmetic never
overflows.  Anything array-like with integer entries is accepted as input.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

__all__ = [
    "SmithForm",
    "AffineLatticeBasis",
    "as_matrix",
    "identity",
    "transpose",
    "matmul",
    "determinant",
    "smith_normal_form",
    "hermite_normal_form",
    "affine_lattice_span",
    "saturated_row_lattice",
    "determinantal_divisors",
    "is_unimodular",
    "inverse_unimodular",
    "vector_gcd",
]


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors of an integer matrix.

    ``left`` and ``right`` are only filled in when transforms were requested;
    then ``left @ A @ right`` is the diagonal form.
    """

    invariant_factors: tuple
    rows: int
    cols: int
    left: tuple | None = None
    right: tuple | None = None

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def diagonal(self) -> list:
        D = [[0] * self.cols for _ in range(self.rows)]
        for i, d in enumerate(self.invariant_factors):
            D[i][i] = d
        return D


@dataclass(frozen=True)
class AffineLatticeBasis:
    """An affine lattice ``origin + Z-span(basis)``."""

    origin: tuple
    basis: tuple

    @property
    def rank(self) -> int:
        return len(self.basis)

    def coordinates(self, point) -> tuple | None:
        """Integer coordinates of ``point`` in the basis, or None if not a member."""
        diff = [p - o for p, o in zip(point, self.origin)]
        if not self.basis:
            return () if not any(diff) else None
        # Solve c @ basis = diff through the row-style Hermite form.
        H, U = hermite_normal_form(list(self.basis), transform=True)
        coeffs = []
        rest = diff[:]
        for row in H:
            piv = next(j for j, x in enumerate(row) if x)
            q, r = divmod(rest[piv], row[piv])
            if r:
                return None
            coeffs.append(q)
            rest = [a - q * b for a, b in zip(rest, row)]
        if any(rest):
            return None
        # H = U @ basis, so c = coeffs @ U.
        return tuple(sum(coeffs[i] * U[i][j] for i in range(len(H))) for j in range(len(self.basis)))


def as_matrix(A) -> list:
    """Copy ``A`` into a list of lists of Python ints."""
    return [[int(x) for x in row] for row in A]


def identity(n: int) -> list:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(A) -> list:
    A = as_matrix(A)
    if not A:
        return []
    return [list(col) for col in zip(*A)]


def matmul(A, B) -> list:
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def vector_gcd(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g


def determinant(A) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    M = as_matrix(A)
    n = len(M)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def is_unimodular(A) -> bool:
    A = as_matrix(A)
    return len(A) == (len(A[0]) if A else 0) and abs(determinant(A)) == 1


def inverse_unimodular(A) -> list:
    """Inverse of a square integer matrix with determinant +-1."""
    A = as_matrix(A)
    n = len(A)
    H, U = hermite_normal_form(A, transform=True)
    # H = U A is upper triangular with unit diagonal when A is unimodular.
    if len(H) != n or any(abs(H[i][i]) != 1 for i in range(n)):
        raise ValueError("matrix is not unimodular")
    # Back substitution: solve H X = I, then A^{-1} = X U.
    X = [[0] * n for _ in range(n)]
    for col in range(n):
        for i in range(n - 1, -1, -1):
            s = int(i == col) - sum(H[i][k] * X[k][col] for k in range(i + 1, n))
            X[i][col] = s * H[i][i]
    return matmul(X, U)


def _swap_rows(M, i, j):
    M[i], M[j] = M[j], M[i]


def _swap_cols(M, i, j):
    for row in M:
        row[i], row[j] = row[j], row[i]


def smith_normal_form(A, transforms: bool = False) -> SmithForm:
    """Smith normal form by pivoting on the smallest nonzero entry.

    The pivot is the entry of least absolute value in the active block, ties
    broken by (row, col), which makes the transforms reproducible.
    """
    M = as_matrix(A)
    m = len(M)
    n = len(M[0]) if m else 0
    U = identity(m) if transforms else None
    V = identity(n) if transforms else None
    factors = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = M[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, pi, pj = best
        if pi != t:
            _swap_rows(M, t, pi)
            if U is not None:
                _swap_rows(U, t, pi)
        if pj != t:
            _swap_cols(M, t, pj)
            if V is not None:
                _swap_cols(V, t, pj)
        while True:
            p = M[t][t]
            dirty = False
            for i in range(t + 1, m):
                q = M[i][t] // p
                if q:
                    ri, rt = M[i], M[t]
                    for j in range(t, n):
                        ri[j] -= q * rt[j]
                    if U is not None:
                        ui, ut = U[i], U[t]
                        for j in range(m):
                            ui[j] -= q * ut[j]
                if M[i][t]:
                    dirty = True
            for j in range(t + 1, n):
                q = M[t][j] // p
                if q:
                    for row in M:
                        row[j] -= q * row[t]
                    if V is not None:
                        for row in V:
                            row[j] -= q * row[t]
                if M[t][j]:
                    dirty = True
            if not dirty:
                # Enforce divisibility against the rest of the block.
                bad = next(
                    ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if M[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                i = bad[0]
                for j in range(t, n):
                    M[t][j] += M[i][j]
                if U is not None:
                    for j in range(m):
                        U[t][j] += U[i][j]
                continue
            # Move the smallest remaining entry of the cross onto the pivot.
            cand = [(abs(M[i][t]), i, t) for i in range(t, m) if M[i][t]]
            cand += [(abs(M[t][j]), t, j) for j in range(t + 1, n) if M[t][j]]
            _, ci, cj = min(cand)
            if ci != t:
                _swap_rows(M, t, ci)
                if U is not None:
                    _swap_rows(U, t, ci)
            if cj != t:
                _swap_cols(M, t, cj)
                if V is not None:
                    _swap_cols(V, t, cj)
        if M[t][t] < 0:
            M[t] = [-x for x in M[t]]
            if U is not None:
                U[t] = [-x for x in U[t]]
        factors.append(M[t][t])
        t += 1
    return SmithForm(
        tuple(factors),
        m,
        n,
        tuple(tuple(r) for r in U) if U is not None else None,
        tuple(tuple(r) for r in V) if V is not None else None,
    )


def hermite_normal_form(A, transform: bool = False):
    """Row-style Hermite normal form.

    Returns the nonzero rows H (echelon, positive pivots, entries above a
    pivot reduced into [0, pivot)).  With ``transform`` also returns U with
    ``H == U @ A`` restricted to the first len(H) rows of U.
    """
    M = as_matrix(A)
    m = len(M)
    n = len(M[0]) if m else 0
    U = identity(m)
    r = 0
    for c in range(n):
        while True:
            nz = [i for i in range(r, m) if M[i][c]]
            if not nz:
                break
            i = min(nz, key=lambda k: (abs(M[k][c]), k))
            if i != r:
                M[r], M[i] = M[i], M[r]
                U[r], U[i] = U[i], U[r]
            done = True
            for k in range(r + 1, m):
                q = M[k][c] // M[r][c]
                if q:
                    M[k] = [a - q * b for a, b in zip(M[k], M[r])]
                    U[k] = [a - q * b for a, b in zip(U[k], U[r])]
                if M[k][c]:
                    done = False
            if done:
                break
        if r < m and M[r][c]:
            if M[r][c] < 0:
                M[r] = [-x for x in M[r]]
                U[r] = [-x for x in U[r]]
            for k in range(r):
                q = M[k][c] // M[r][c]
                if q:
                    M[k] = [a - q * b for a, b in zip(M[k], M[r])]
                    U[k] = [a - q * b for a, b in zip(U[k], U[r])]
            r += 1
            if r == m:
                break
    H = M[:r]
    if transform:
        return H, U[:r]
    return H


def affine_lattice_span(points) -> AffineLatticeBasis:
    """Affine lattice generated by ``points``.

    The origin is the first point and the basis is the Hermite form of all
    differences to it.
    """
    pts = [tuple(int(x) for x in p) for p in points]
    if not pts:
        raise ValueError("points must be nonempty")
    origin = pts[0]
    diffs = [[a - b for a, b in zip(p, origin)] for p in pts[1:]]
    basis = hermite_normal_form(diffs) if diffs else []
    return AffineLatticeBasis(origin, tuple(tuple(r) for r in basis))


def saturated_row_lattice(rows, dim: int):
    """Basis of (row space over Q) intersected with Z^dim.

    Returns ``(L, P)`` where L is an r x dim basis and P is a dim x r integer
    matrix with ``L @ P == I_r``, so ``x @ P`` gives coordinates of any
    lattice member x.
    """
    rows = as_matrix(rows)
    if not rows or not any(any(r) for r in rows):
        return [], [[] for _ in range(dim)]
    snf = smith_normal_form(rows, transforms=True)
    r = snf.rank
    V = [list(row) for row in snf.right]
    Vinv = inverse_unimodular(V)
    L = [Vinv[i] for i in range(r)]
    P = [row[:r] for row in V]
    return L, P


def determinantal_divisors(A, k: int) -> int:
    """gcd of all k x k minors of A (0 if there are none or all vanish)."""
    M = as_matrix(A)
    m = len(M)
    n = len(M[0]) if m else 0
    g = 0
    for rs in combinations(range(m), k):
        for cs in combinations(range(n), k):
            g = gcd(g, determinant([[M[i][j] for j in cs] for i in rs]))
            if g == 1:
                return 1
    return g
