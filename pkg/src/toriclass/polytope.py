"""Lattice polytopes with exact hulls.

Every polytope is mapped onto a full-dimensional copy of itself in Z^r,
where r is its dimension, using a lattice basis of aff(P) intersected with
the ambient integer lattice.  Facets, lattice points and IDP checks all work
in those reduced coordinates; ambient coordinates are kept for display.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm

from .errors import DegeneratePolytope
from .lattice import (
    determinant,
    inverse_unimodular,
    matmul,
    saturated_row_lattice,
    smith_normal_form,
    vector_gcd,
)

__all__ = [
    "Facet",
    "FacetSystem",
    "IdpCertificate",
    "LatticePolytope",
    "Reduction",
    "from_points",
    "facets",
    "lattice_points",
    "is_idp",
    "pyramid",
    "pyramid_reduce",
    "polytope_to_json",
    "polytope_from_json",
]


@dataclass(frozen=True)
class Facet:
    """Affine form x -> (<normal, x> + offset) / divisor in reduced coordinates."""

    normal: tuple
    offset: int
    divisor: int = 1

    def value(self, point) -> int:
        s = sum(a * b for a, b in zip(self.normal, point)) + self.offset
        q, r = divmod(s, self.divisor)
        if r:
            raise ValueError("point is not in the lattice spanned by the polytope")
        return q

    def raw(self, point) -> int:
        return sum(a * b for a, b in zip(self.normal, point)) + self.offset


@dataclass(frozen=True)
class FacetSystem:
    forms: tuple

    def __len__(self):
        return len(self.forms)

    def __iter__(self):
        return iter(self.forms)

    def __getitem__(self, i):
        return self.forms[i]


@dataclass(frozen=True)
class IdpCertificate:
    verdict: str  # "IDP", "NotIDP" or "Inconclusive"
    witness: tuple | None = None
    degree: int | None = None
    reason: str = ""

    @property
    def is_idp(self) -> bool:
        return self.verdict == "IDP"


@dataclass(frozen=True)
class Reduction:
    """Affine bijection between aff(P) cap Z^d and Z^r.

    ``reduce(x) = x @ M`` and ``lift(c) = origin + (c - reduce(origin)) @ K``.
    When ``subset`` is set, M just selects those coordinates.
    """

    origin: tuple
    M: tuple
    K: tuple
    subset: tuple | None

    @property
    def rank(self) -> int:
        return len(self.K)

    @property
    def basis(self) -> tuple:
        return self.K

    def reduce(self, x) -> tuple:
        if self.subset is not None:
            return tuple(x[i] for i in self.subset)
        r = self.rank
        return tuple(sum(x[i] * self.M[i][j] for i in range(len(x))) for j in range(r))

    def lift(self, c, scale: int = 1) -> tuple:
        """Ambient point of ``c``; ``scale`` lifts points of scale * P."""
        base = self.reduce(self.origin)
        delta = [a - scale * b for a, b in zip(c, base)]
        return tuple(
            scale * o + sum(delta[i] * self.K[i][j] for i in range(len(delta)))
            for j, o in enumerate(self.origin)
        )


def _make_reduction(points, d: int) -> Reduction:
    origin = points[0]
    diffs = [[a - b for a, b in zip(p, origin)] for p in points[1:]]
    L, P = saturated_row_lattice(diffs, d) if diffs else ([], [[] for _ in range(d)])
    r = len(L)
    if r == d:
        eye = tuple(tuple(int(i == j) for j in range(d)) for i in range(d))
        return Reduction(tuple(origin), eye, eye, tuple(range(d)))
    for S in combinations(range(d), r):
        sub = [[row[j] for j in S] for row in L]
        if abs(determinant(sub)) == 1:
            K = matmul(inverse_unimodular(sub), L)
            M = tuple(tuple(int(i == s) for s in S) for i in range(d))
            return Reduction(tuple(origin), M, tuple(tuple(r_) for r_ in K), tuple(S))
    return Reduction(
        tuple(origin), tuple(tuple(r_) for r_ in P), tuple(tuple(r_) for r_ in L), None
    )


def _rank(rows) -> int:
    if not rows:
        return 0
    return smith_normal_form(rows).rank


def _primitive(v):
    g = vector_gcd(v)
    return tuple(x // g for x in v) if g > 1 else tuple(v)


def _inverse_columns(B):
    """Columns of B^{-1} scaled to primitive integer vectors."""
    n = len(B)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(B)]
    for c in range(n):
        p = next(i for i in range(c, n) if M[i][c] != 0)
        M[c], M[p] = M[p], M[c]
        pv = M[c][c]
        M[c] = [x / pv for x in M[c]]
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    cols = []
    for j in range(n):
        col = [M[i][n + j] for i in range(n)]
        den = lcm(*(x.denominator for x in col))
        cols.append(_primitive([int(x * den) for x in col]))
    return cols


def cone_facets(hom):
    """Facet normals of the full-dimensional cone spanned by ``hom``.

    Exact double description.  Returns primitive integer forms a with
    a . x >= 0 on every generator.
    """
    n = len(hom[0])
    chosen = []
    rows = []
    for i, h in enumerate(hom):
        if _rank(rows + [list(h)]) > len(rows):
            rows.append(list(h))
            chosen.append(i)
            if len(rows) == n:
                break
    if len(rows) < n:
        raise DegeneratePolytope("cone is not full-dimensional")
    forms = []
    for k, a in enumerate(_inverse_columns(rows)):
        mask = 0
        for j, idx in enumerate(chosen):
            if j != k:
                mask |= 1 << idx
        forms.append((a, mask))
    chosen_set = set(chosen)
    for idx, p in enumerate(hom):
        if idx in chosen_set:
            continue
        bit = 1 << idx
        vals = [sum(x * y for x, y in zip(a, p)) for a, _ in forms]
        if min(vals) >= 0:
            forms = [(a, m | bit) if v == 0 else (a, m) for (a, m), v in zip(forms, vals)]
            continue
        pos = [(f, v) for f, v in zip(forms, vals) if v > 0]
        neg = [(f, v) for f, v in zip(forms, vals) if v < 0]
        keep = [((a, m | bit) if v == 0 else (a, m)) for (a, m), v in zip(forms, vals) if v >= 0]
        masks = [m for _, m in forms]
        for (ap, mp), vp in pos:
            for (an, mn), vn in neg:
                common = mp & mn
                if bin(common).count("1") < n - 2:
                    continue
                if any((common & m) == common for m in masks if m != mp and m != mn):
                    continue
                new = _primitive([vp * x - vn * y for x, y in zip(an, ap)])
                keep.append((new, common | bit))
        forms = keep
    return [a for a, _ in forms]


def _affine_facets(points, dim):
    """Irredundant (normal, offset) pairs for a full-dimensional point set."""
    if dim == 0:
        return []
    hom = [tuple(p) + (1,) for p in points]
    out = {(tuple(a[:-1]), a[-1]) for a in cone_facets(hom)}
    return sorted(out)


def _scan(levels, scale=1):
    """Integer points of a polytope given facets of its coordinate projections."""
    r = len(levels)
    out = []
    prefix = []

    def rec(k):
        lo = None
        hi = None
        for a, o in levels[k]:
            s = o * scale
            for i in range(k):
                s += a[i] * prefix[i]
            ak = a[k]
            if ak > 0:
                b = -(s // ak)
                lo = b if lo is None or b > lo else lo
            elif ak < 0:
                b = s // (-ak)
                hi = b if hi is None or b < hi else hi
        for x in range(lo, hi + 1):
            prefix.append(x)
            if k + 1 == r:
                out.append(tuple(prefix))
            else:
                rec(k + 1)
            prefix.pop()

    if r == 0:
        return [()]
    rec(0)
    return out


class LatticePolytope:
    """Convex hull of integer generators, with lazily computed hull data."""

    def __init__(self, generators, ambient_dim: int):
        pts = sorted({tuple(int(x) for x in p) for p in generators})
        if not pts:
            raise ValueError("a polytope needs at least one point")
        if any(len(p) != ambient_dim for p in pts):
            raise ValueError("all points must have length ambient_dim")
        self.ambient_dim = ambient_dim
        self.generators = tuple(pts)
        self.reduction = _make_reduction(pts, ambient_dim)
        self.dim = self.reduction.rank
        self.reduced_generators = tuple(self.reduction.reduce(p) for p in pts)
        self._lock = threading.RLock()
        self._cache = {}

    def _get(self, key, fn):
        try:
            return self._cache[key]
        except KeyError:
            pass
        with self._lock:
            if key not in self._cache:
                self._cache[key] = fn()
            return self._cache[key]

    def __repr__(self):
        return f"LatticePolytope(dim={self.dim}, ambient_dim={self.ambient_dim}, generators={len(self.generators)})"

    # raw (un-normalized) facets of the reduced copy
    def _raw_facets(self):
        return self._get("raw_facets", lambda: _affine_facets(self.reduced_generators, self.dim))

    def _levels(self):
        def build():
            levels = []
            for k in range(1, self.dim):
                proj = sorted({p[:k] for p in self.reduced_generators})
                levels.append(_affine_facets(proj, k))
            levels.append(self._raw_facets())
            return levels

        return self._get("levels", build)

    @property
    def reduced_lattice_points(self) -> tuple:
        def build():
            if self.dim == 0:
                return (self.reduced_generators[0],)
            return tuple(sorted(_scan(self._levels())))

        return self._get("rpoints", build)

    @property
    def lattice_points(self) -> tuple:
        def build():
            return tuple(sorted(self.reduction.lift(c) for c in self.reduced_lattice_points))

        return self._get("points", build)

    @property
    def facets(self) -> FacetSystem:
        def build():
            if self.dim == 0:
                raise DegeneratePolytope("a point has no facets")
            pts = self.reduced_lattice_points
            forms = []
            for a, o in self._raw_facets():
                g = 0
                for p in pts:
                    g = gcd(g, sum(x * y for x, y in zip(a, p)) + o)
                forms.append(Facet(a, o, g))
            return FacetSystem(tuple(forms))

        return self._get("facets", build)

    @property
    def vertices(self) -> tuple:
        def build():
            if self.dim == 0:
                return self.generators
            raw = self._raw_facets()
            tight = []
            for p in self.reduced_generators:
                m = 0
                for i, (a, o) in enumerate(raw):
                    if sum(x * y for x, y in zip(a, p)) + o == 0:
                        m |= 1 << i
                tight.append(m)
            out = []
            for i, mi in enumerate(tight):
                if not any(j != i and (mi & mj) == mi for j, mj in enumerate(tight)):
                    out.append(self.generators[i])
            return tuple(out)

        return self._get("vertices", build)

    @property
    def reduced_vertices(self) -> tuple:
        return tuple(self.reduction.reduce(v) for v in self.vertices)

    def facet_values(self) -> tuple:
        """Rows of normalized facet values over the reduced lattice points."""

        def build():
            pts = self.reduced_lattice_points
            return tuple(tuple(f.value(p) for p in pts) for f in self.facets)

        return self._get("facet_values", build)

    def scaled_points(self, n: int) -> list:
        """Reduced lattice points of n * P."""
        if self.dim == 0:
            return [tuple(n * x for x in self.reduced_generators[0])]
        return _scan(self._levels(), n)

    def contains_reduced(self, c, scale: int = 1) -> bool:
        return all(
            sum(x * y for x, y in zip(a, c)) + o * scale >= 0 for a, o in self._raw_facets()
        )

    def same_points(self, other) -> bool:
        return self.ambient_dim == other.ambient_dim and self.lattice_points == other.lattice_points


def from_points(points, ambient_dim: int | None = None) -> LatticePolytope:
    points = [tuple(p) for p in points]
    if ambient_dim is None:
        ambient_dim = len(points[0])
    return LatticePolytope(points, ambient_dim)


def facets(P: LatticePolytope) -> FacetSystem:
    return P.facets


def lattice_points(P: LatticePolytope) -> list:
    return list(P.lattice_points)


def is_idp(P: LatticePolytope, degree_bound: int | None = None) -> IdpCertificate:
    """Check the integer decomposition property degree by degree.

    A point of nP decomposes iff subtracting some lattice point of P lands in
    (n-1)P, given that all lower degrees decompose.  Hilbert basis elements
    of the cone over P sit in degree at most dim P - 1, so a clean pass up to
    that degree certifies IDP.
    """
    r = P.dim
    if r <= 1:
        return IdpCertificate("IDP", reason="dimension at most one")
    pts = P.reduced_lattice_points
    if all(max(f.raw(c) for c in pts) == 1 for f in P.facets):
        return IdpCertificate("IDP", reason="compressed")
    bound = r if degree_bound is None else degree_bound
    for n in range(2, bound + 1):
        for beta in P.scaled_points(n):
            if not any(
                P.contains_reduced([b - a for b, a in zip(beta, alpha)], n - 1) for alpha in pts
            ):
                return IdpCertificate("NotIDP", P.reduction.lift(beta, n), n)
    if bound >= r - 1:
        return IdpCertificate("IDP", reason=f"checked degrees 2..{bound}")
    return IdpCertificate("Inconclusive", degree=bound, reason="degree bound reached")


def pyramid(P: LatticePolytope) -> LatticePolytope:
    gens = [tuple(g) + (0,) for g in P.generators]
    gens.append(tuple([0] * P.ambient_dim) + (1,))
    return LatticePolytope(gens, P.ambient_dim + 1)


def _find_apex(P: LatticePolytope):
    verts = P.reduced_vertices
    for f in P.facets:
        off = [v for v in verts if f.raw(v) != 0]
        if len(off) == 1 and f.raw(off[0]) == 1:
            return f
    return None


def pyramid_reduce(P: LatticePolytope):
    """Strip lattice-pyramid apexes until none is left.

    Returns ``(core, apex_count)``.
    """
    count = 0
    core = P
    while core.dim >= 1:
        f = _find_apex(core)
        if f is None:
            break
        base = [
            core.generators[i]
            for i, c in enumerate(core.reduced_generators)
            if f.raw(c) == 0
        ]
        core = LatticePolytope(base, core.ambient_dim)
        count += 1
    return core, count


def polytope_to_json(P: LatticePolytope) -> dict:
    doc = {
        "ambient_dim": P.ambient_dim,
        "generators": [list(g) for g in P.generators],
        "vertices": [list(v) for v in P.vertices],
        "lattice_points": [list(p) for p in P.lattice_points],
    }
    if P.dim > 0:
        doc["facets"] = [
            {"normal": list(f.normal), "offset": f.offset, "divisor": f.divisor} for f in P.facets
        ]
    else:
        doc["facets"] = []
    return doc


def polytope_from_json(doc: dict) -> LatticePolytope:
    return LatticePolytope([tuple(g) for g in doc["generators"]], int(doc["ambient_dim"]))
