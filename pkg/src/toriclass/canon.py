"""Canonical labelling of small relational structures.

A structure is an n x n matrix of small integer codes; ``rel[i][i]`` acts as
a vertex colour.  The canonical form is the lexicographically largest code
matrix over all leaves of an individualization-refinement search.  Swapping
two twins (vertices that relate identically to everything else) is an
automorphism, so only one twin per class is branched on.
"""

from __future__ import annotations

__all__ = ["canonical_form", "canonical_labeling"]


def _rank(keys):
    order = sorted(set(keys))
    idx = {k: i for i, k in enumerate(order)}
    return [idx[k] for k in keys]


def _refine(rel, colors):
    n = len(rel)
    ncol = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            rv = rel[v]
            sigs.append(
                (colors[v], tuple(sorted((rv[w], rel[w][v], colors[w]) for w in range(n) if w != v)))
            )
        new = _rank(sigs)
        k = len(set(new))
        if k == ncol:
            return new
        colors, ncol = new, k


def _twins(rel, u, v):
    if rel[u][v] != rel[v][u] or rel[u][u] != rel[v][v]:
        return False
    for w in range(len(rel)):
        if w != u and w != v and (rel[u][w] != rel[v][w] or rel[w][u] != rel[w][v]):
            return False
    return True


def canonical_labeling(rel):
    """Return ``(certificate, order)``.

    ``order[k]`` is the original vertex placed at canonical position k, and
    the certificate is the code matrix read in that order, row by row.
    """
    n = len(rel)
    if n == 0:
        return (), ()
    best = [None, None]

    def leaf(colors):
        order = sorted(range(n), key=lambda v: colors[v])
        cert = tuple(rel[a][b] for a in order for b in order)
        if best[0] is None or cert > best[0]:
            best[0] = cert
            best[1] = tuple(order)

    def search(colors):
        cells = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        if len(cells) == n:
            leaf(colors)
            return
        target = min((c for c in cells if len(cells[c]) > 1), key=lambda c: (len(cells[c]), c))
        reps = []
        for v in cells[target]:
            if not any(_twins(rel, v, u) for u in reps):
                reps.append(v)
        for v in reps:
            keyed = [(colors[w], 0 if w == v else 1) for w in range(n)]
            search(_refine(rel, _rank(keyed)))

    init = _rank([rel[v][v] for v in range(n)])
    search(_refine(rel, init))
    return best[0], best[1]


def canonical_form(rel) -> tuple:
    return (len(rel),) + canonical_labeling(rel)[0]
