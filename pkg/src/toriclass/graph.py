"""Simple graphs: structure tests, stable set and edge polytopes, the
combinatorial facet data of edge polytopes, and the graph families used in
the rank one and rank two classifications.

Vertices are labelled 1..n.  Internally adjacency is kept as bitmasks with
bit v-1 standing for vertex v.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .canon import canonical_form
from .errors import BadParams, Disconnected, EmptyGraph, TooLarge
from .polytope import LatticePolytope

__all__ = [
    "SimpleGraph",
    "VertexStatus",
    "SpecialSet",
    "BlockDecomposition",
    "graph_family",
    "maximal_cliques",
    "is_perfect",
    "blocks",
    "odd_cycle_condition",
    "vertex_status",
    "special_sets",
    "edge_psi_forms",
    "graph_polytope",
    "stable_set_polytope",
    "edge_polytope",
    "graph_to_json",
    "graph_from_json",
    "graph_to_dot",
]


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask):
    return bin(mask).count("1")


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        norm = set()
        for e in self.edges:
            i, j = (int(x) for x in e)
            if i == j:
                raise BadParams(f"loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise BadParams(f"edge ({i},{j}) outside 1..{self.n}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(norm))

    @cached_property
    def adj(self) -> tuple:
        a = [0] * self.n
        for i, j in self.edges:
            a[i - 1] |= 1 << (j - 1)
            a[j - 1] |= 1 << (i - 1)
        return tuple(a)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v) -> list:
        return [u + 1 for u in _bits(self.adj[v - 1])]

    def degree(self, v) -> int:
        return _popcount(self.adj[v - 1])

    def has_edge(self, i, j) -> bool:
        return bool(self.adj[i - 1] >> (j - 1) & 1)

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def complement(self) -> "SimpleGraph":
        return SimpleGraph(
            self.n,
            frozenset((i, j) for i in range(1, self.n + 1) for j in range(i + 1, self.n + 1) if not self.has_edge(i, j)),
        )

    def induced(self, vertices) -> "SimpleGraph":
        """Induced subgraph, relabelled 1..k in increasing order of ``vertices``."""
        vs = sorted(vertices)
        pos = {v: k + 1 for k, v in enumerate(vs)}
        return SimpleGraph(len(vs), frozenset((pos[i], pos[j]) for i, j in self.edges if i in pos and j in pos))

    def relabel(self, perm) -> "SimpleGraph":
        if not isinstance(perm, dict):
            perm = {i + 1: p for i, p in enumerate(perm)}
        return SimpleGraph(self.n, frozenset((perm[i], perm[j]) for i, j in self.edges))

    def disjoint_union(self, other: "SimpleGraph") -> "SimpleGraph":
        s = self.n
        return SimpleGraph(s + other.n, self.edges | {(i + s, j + s) for i, j in other.edges})

    # connectivity on vertex masks
    def _component_masks(self, within: int) -> list:
        comps = []
        rest = within
        while rest:
            seed = rest & -rest
            comp = seed
            frontier = seed
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                nxt &= within & ~comp
                comp |= nxt
                frontier = nxt
            comps.append(comp)
            rest &= ~comp
        return comps

    def components(self) -> list:
        return [sorted(v + 1 for v in _bits(c)) for c in self._component_masks(self.full)]

    def is_connected(self) -> bool:
        return self.n > 0 and len(self._component_masks(self.full)) == 1

    def _bipartite_mask(self, within: int) -> bool:
        color = {}
        for comp in self._component_masks(within):
            start = (comp & -comp).bit_length() - 1
            color[start] = 0
            stack = [start]
            while stack:
                v = stack.pop()
                for u in _bits(self.adj[v] & within):
                    if u not in color:
                        color[u] = 1 - color[v]
                        stack.append(u)
                    elif color[u] == color[v]:
                        return False
        return True

    def is_bipartite(self) -> bool:
        return self._bipartite_mask(self.full)

    def bipartition(self) -> tuple:
        """(V1, V2) of a connected bipartite graph, V1 holding the smallest label."""
        if not self.is_connected():
            raise Disconnected("bipartition needs a connected graph")
        color = {0: 0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in _bits(self.adj[v]):
                if u not in color:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    raise BadParams("graph is not bipartite")
        V1 = tuple(v + 1 for v in range(self.n) if color[v] == 0)
        V2 = tuple(v + 1 for v in range(self.n) if color[v] == 1)
        return V1, V2

    def bipartite_component_count(self) -> int:
        return sum(1 for c in self._component_masks(self.full) if self._bipartite_mask(c))

    def independent_sets(self) -> list:
        """All independent sets including the empty set, as sorted tuples."""
        if self.n > 20:
            raise TooLarge("independent set enumeration is limited to 20 vertices")
        out = []

        def rec(v, chosen, banned):
            if v == self.n:
                out.append(tuple(u + 1 for u in _bits(chosen)))
                return
            rec(v + 1, chosen, banned)
            if not banned >> v & 1:
                rec(v + 1, chosen | 1 << v, banned | self.adj[v])

        rec(0, 0, 0)
        return sorted(out)

    def canonical_form(self) -> tuple:
        rel = [[1 if self.adj[i] >> j & 1 else 0 for j in range(self.n)] for i in range(self.n)]
        return canonical_form(rel)


# --------------------------------------------------------------------------
# families


def _complete_bipartite_edges(A, B):
    return {(a, b) for a in A for b in B}


def _cycle(n):
    return SimpleGraph(n, frozenset((i, i % n + 1) for i in range(1, n + 1)))


def _glue_path(G: SimpleGraph, a: int, b: int, length: int) -> SimpleGraph:
    """Join a and b by a new path of the given length; interior vertices are appended."""
    if length == 0:
        # identify b with a: drop b and shift larger labels down
        relabel = {}
        for v in range(1, G.n + 1):
            if v == b:
                relabel[v] = a if a < b else a - 1
            else:
                relabel[v] = v if v < b else v - 1
        edges = set()
        for i, j in G.edges:
            x, y = relabel[i], relabel[j]
            if x == y:
                raise BadParams("identification creates a loop")
            edges.add((min(x, y), max(x, y)))
        return SimpleGraph(G.n - 1, frozenset(edges))
    inner = list(range(G.n + 1, G.n + length))
    seq = [a] + inner + [b]
    edges = set(G.edges)
    for x, y in zip(seq, seq[1:]):
        e = (min(x, y), max(x, y))
        if e in edges:
            raise BadParams("path duplicates an existing edge")
        edges.add(e)
    return SimpleGraph(G.n + len(inner), frozenset(edges))


def _k_bip(s1, s2, t1, t2, strict=True):
    if min(s1, s2) < 1 or min(t1, t2) < 0:
        raise BadParams("need s1, s2 >= 1 and t1, t2 >= 0")
    if strict and not (t1 < s1 and t2 < s2):
        raise BadParams("need t1 < s1 and t2 < s2")
    d = s1 + s2 + t1 + t2
    e = {(i, j) for i in range(1, s1 + t1 + 1) for j in range(s1 + t1 + t2 + 1, d + 1)}
    e |= {(i, j) for i in range(1, s1 + 1) for j in range(s1 + t1 + 1, d + 1)}
    return SimpleGraph(d, frozenset(e))


def _glued(case, args):
    """Glued-path constructions.

    across: s1,s2,L                 K_{s1,s2}, path of even length L >= 2 from 1 to s1+1
    within: s1,s2,L                 K_{s1,s2}, path of odd length L from 1 to 2
    two-across: s1,s2,t1,t2,L1,L2    two complete bipartite graphs, pairs from different parts
    within-across: s1,s2,t1,t2,L1,L2 same part of the first, different parts of the second
    two-within: s1,s2,t1,t2,L1,L2    same part in both
    notched-across: s1,s2,t1,t2,i,j,L  K^{t1,t2}_{s1,s2}, i, j in different parts, L even >= 2
    notched-within: s1,s2,t1,t2,i,j,L  i, j in the same part, L odd
    apex: s1,s2,t1,t2               K^{t1,t2}_{1,s1,s2}
    For the two-graph cases the first graph uses labels 1..s1+s2 and the
    second the next t1+t2 labels; a path of length 0 identifies its ends.
    """
    a = [int(x) for x in args]
    if case in ("across", "within"):
        if len(a) != 3:
            raise BadParams(f"case {case} needs s1,s2,L")
        s1, s2, L = a
        if min(s1, s2) < 2:
            raise BadParams("need s1, s2 >= 2")
        G = graph_family("complete_bipartite", (s1, s2))
        if case == "across":
            if L < 2 or L % 2:
                raise BadParams("case across needs an even path length >= 2")
            return _glue_path(G, 1, s1 + 1, L)
        if L < 1 or L % 2 == 0:
            raise BadParams("case within needs an odd path length")
        return _glue_path(G, 1, 2, L)
    if case in ("two-across", "within-across", "two-within"):
        if len(a) != 6:
            raise BadParams(f"case {case} needs s1,s2,t1,t2,L1,L2")
        s1, s2, t1, t2, L1, L2 = a
        if min(s1, s2, t1, t2) < 2 or min(L1, L2) < 0:
            raise BadParams("need all part sizes >= 2 and path lengths >= 0")
        parity = (L1 + L2) % 2
        if case in ("two-across", "two-within") and parity != 1:
            raise BadParams(f"case {case} needs an odd total path length")
        if case == "within-across" and parity != 0:
            raise BadParams("case within-across needs an even total path length")
        G = graph_family("complete_bipartite", (s1, s2)).disjoint_union(
            graph_family("complete_bipartite", (t1, t2))
        )
        off = s1 + s2
        i, j = (1, s1 + 1) if case == "two-across" else (1, 2)
        k, l = (off + 1, off + 2) if case == "two-within" else (off + 1, off + t1 + 1)
        # glue the longer path first so identification does not disturb labels
        first, second = ((i, k, L1), (j, l, L2))
        H = G
        pending = []
        for x, y, L in (first, second):
            if L == 0:
                pending.append((x, y))
            else:
                H = _glue_path(H, x, y, L)
        # identify in decreasing order of the removed label
        for x, y in sorted(pending, key=lambda p: -p[1]):
            H = _glue_path(H, x, y, 0)
        return H
    if case in ("notched-across", "notched-within"):
        if len(a) != 7:
            raise BadParams(f"case {case} needs s1,s2,t1,t2,i,j,L")
        s1, s2, t1, t2, i, j, L = a
        if min(s1, s2) < 2:
            raise BadParams("need s1, s2 >= 2")
        G = _k_bip(s1, s2, t1, t2, strict=False)
        if not (1 <= i <= G.n and 1 <= j <= G.n) or i == j:
            raise BadParams("path ends must be distinct vertices")
        side = lambda v: v <= s1 + t1
        if case == "notched-across":
            if side(i) == side(j):
                raise BadParams("case notched-across needs ends in different parts")
            if L < 2 or L % 2:
                raise BadParams("case notched-across needs an even path length >= 2")
        else:
            if side(i) != side(j):
                raise BadParams("case notched-within needs ends in the same part")
            if L < 1 or L % 2 == 0:
                raise BadParams("case notched-within needs an odd path length")
        return _glue_path(G, i, j, L)
    if case == "apex":
        if len(a) != 4:
            raise BadParams("case apex needs s1,s2,t1,t2")
        if min(a[0], a[1]) < 2:
            raise BadParams("need s1, s2 >= 2")
        return graph_family("K_1s1s2_t1t2", a, strict=False)
    raise BadParams(f"unknown construction case {case!r}")


_GAMMA = [(1, 5), (1, 6), (2, 4), (2, 6), (3, 4), (3, 5), (4, 5), (4, 6), (5, 6)]
# Two 4-cycles sharing vertex 7.  The variant swaps edge 35 for 56, which
# makes it a glued-path graph of class group rank 1.
_H = [(1, 2), (1, 7), (2, 6), (3, 4), (3, 5), (4, 7), (5, 7), (6, 7)]
_H_TEXT = [(1, 2), (1, 7), (2, 6), (3, 4), (4, 7), (5, 6), (5, 7), (6, 7)]


def graph_family(kind: str, params=(), strict: bool = True) -> SimpleGraph:
    """Named graph families.

    ``strict`` enforces 0 <= t_i < s_i for the K^{t1,t2} families; the
    classification sweeps need the relaxed form t_i >= 0.
    """
    p = list(params)
    if kind == "complete_bipartite":
        s1, s2 = (int(x) for x in p)
        if min(s1, s2) < 1:
            raise BadParams("part sizes must be positive")
        return SimpleGraph(
            s1 + s2, frozenset(_complete_bipartite_edges(range(1, s1 + 1), range(s1 + 1, s1 + s2 + 1)))
        )
    if kind == "complete_multipartite":
        sizes = [int(x) for x in p]
        if not sizes or min(sizes) < 1:
            raise BadParams("part sizes must be positive")
        starts = [sum(sizes[:k]) for k in range(len(sizes))]
        parts = [range(s + 1, s + z + 1) for s, z in zip(starts, sizes)]
        e = set()
        for A, B in combinations(parts, 2):
            e |= _complete_bipartite_edges(A, B)
        return SimpleGraph(sum(sizes), frozenset(e))
    if kind == "K_s1s2_t1t2":
        if len(p) != 4:
            raise BadParams("K_s1s2_t1t2 needs s1,s2,t1,t2")
        return _k_bip(*(int(x) for x in p), strict=strict)
    if kind == "K_1s1s2_t1t2":
        if len(p) != 4:
            raise BadParams("K_1s1s2_t1t2 needs s1,s2,t1,t2")
        s1, s2, t1, t2 = (int(x) for x in p)
        B = _k_bip(s1, s2, t1, t2, strict=strict)
        d = B.n
        extra = {(i, d + 1) for i in range(1, d + 1) if i <= s1 or i >= s1 + t1 + t2 + 1}
        return SimpleGraph(d + 1, B.edges | extra)
    if kind == "bipartite_wedge":
        s1, s2, t1, t2 = (int(x) for x in p)
        if min(s1, s2, t1, t2) < 1:
            raise BadParams("bipartite_wedge needs positive parameters")
        d = s1 + s2 + t1 + t2
        A1 = list(range(1, t1 + 1)) + [d + 2]
        B1 = list(range(t1 + 1, t1 + t2 + 1)) + [d + 3]
        A2 = list(range(t1 + t2 + 1, t1 + t2 + s1 + 1)) + [d + 3]
        B2 = list(range(t1 + t2 + s1 + 1, d + 1)) + [d + 1]
        e = _complete_bipartite_edges(A1, B1) | _complete_bipartite_edges(A2, B2)
        return SimpleGraph(d + 3, frozenset(e))
    if kind == "glued":
        if not p:
            raise BadParams("glued needs a case label")
        return _glued(str(p[0]), p[1:])
    if kind == "gamma":
        return SimpleGraph(6, frozenset(_GAMMA))
    if kind == "h_graph":
        return SimpleGraph(7, frozenset(_H))
    if kind == "h_graph_alt":
        return SimpleGraph(7, frozenset(_H_TEXT))
    if kind == "cycle":
        (n,) = (int(x) for x in p)
        if n < 3:
            raise BadParams("cycles need at least 3 vertices")
        return _cycle(n)
    if kind == "path":
        (n,) = (int(x) for x in p)
        return SimpleGraph(n, frozenset((i, i + 1) for i in range(1, n)))
    if kind == "complete":
        (n,) = (int(x) for x in p)
        return SimpleGraph(n, frozenset(combinations(range(1, n + 1), 2)))
    if kind == "empty":
        (n,) = (int(x) for x in p)
        return SimpleGraph(n)
    raise BadParams(f"unknown graph family {kind!r}")


# --------------------------------------------------------------------------
# cliques, perfectness, blocks, odd cycles


def maximal_cliques(G: SimpleGraph) -> list:
    """Bron-Kerbosch with pivoting; cliques as sorted tuples, sorted."""
    out = []
    adj = G.adj

    def bk(R, P, X):
        if not P and not X:
            out.append(tuple(v + 1 for v in _bits(R)))
            return
        pivot = max(_bits(P | X), key=lambda u: _popcount(P & adj[u]))
        for v in list(_bits(P & ~adj[pivot])):
            bk(R | 1 << v, P & adj[v], X & adj[v])
            P &= ~(1 << v)
            X |= 1 << v

    if G.n:
        bk(0, G.full, 0)
    return sorted(out)


def _induced_cycle_sets(G: SimpleGraph, k: int):
    for S in combinations(range(G.n), k):
        mask = sum(1 << v for v in S)
        if all(_popcount(G.adj[v] & mask) == 2 for v in S) and len(G._component_masks(mask)) == 1:
            yield mask


def is_perfect(G: SimpleGraph, bound: int = 10) -> bool:
    """No odd hole and no odd antihole, checked by brute force."""
    if G.n > bound:
        raise TooLarge(f"perfectness check limited to {bound} vertices")
    H = G.complement()
    for k in range(5, G.n + 1, 2):
        for X in (G, H):
            if next(_induced_cycle_sets(X, k), None) is not None:
                return False
    return True


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple  # sorted tuples of vertices
    cut_vertices: tuple
    block_graph: tuple  # edges (cut vertex, block index)

    def is_tree(self) -> bool:
        nodes = len(self.blocks) + len(self.cut_vertices)
        return len(self.block_graph) == nodes - 1


def blocks(G: SimpleGraph) -> BlockDecomposition:
    """Biconnected components by depth-first search with an edge stack."""
    n = G.n
    disc = [0] * n
    low = [0] * n
    timer = [1]
    found = []
    cuts = set()
    edge_stack = []

    def dfs(u, parent):
        disc[u] = low[u] = timer[0]
        timer[0] += 1
        children = 0
        for v in _bits(G.adj[u]):
            if not disc[v]:
                children += 1
                edge_stack.append((u, v))
                dfs(v, u)
                low[u] = min(low[u], low[v])
                if (parent is None and children > 1) or (parent is not None and low[v] >= disc[u]):
                    cuts.add(u)
                if low[v] >= disc[u]:
                    comp = set()
                    while True:
                        a, b = edge_stack.pop()
                        comp |= {a, b}
                        if (a, b) == (u, v):
                            break
                    found.append(tuple(sorted(x + 1 for x in comp)))
            elif v != parent and disc[v] < disc[u]:
                edge_stack.append((u, v))
                low[u] = min(low[u], disc[v])

    for s in range(n):
        if not disc[s]:
            if G.adj[s] == 0:
                disc[s] = timer[0]
                timer[0] += 1
                found.append((s + 1,))
            else:
                dfs(s, None)
    bl = tuple(sorted(found))
    cv = tuple(sorted(c + 1 for c in cuts))
    bg = tuple(sorted((c, k) for k, B in enumerate(bl) for c in cv if c in B))
    return BlockDecomposition(bl, cv, bg)


def _has_odd_cycle_in(G: SimpleGraph, mask: int) -> bool:
    return not G._bipartite_mask(mask)


def _hamiltonian_cycle(G: SimpleGraph, mask: int) -> bool:
    """Does the subgraph induced on ``mask`` contain a cycle through all of it?"""
    verts = list(_bits(mask))
    k = len(verts)
    if k < 3:
        return False
    start = verts[0]
    # reach[S] = bitmask of end vertices of paths from start covering S
    reach = {1 << start: 1 << start}
    frontier = [1 << start]
    for _ in range(k - 1):
        nxt = {}
        for S in frontier:
            ends = reach[S]
            for e in _bits(ends):
                for u in _bits(G.adj[e] & mask & ~S):
                    T = S | 1 << u
                    nxt[T] = nxt.get(T, 0) | 1 << u
        reach.update(nxt)
        frontier = list(nxt)
    return bool(reach.get(mask, 0) & G.adj[start])


def odd_cycle_vertex_sets(G: SimpleGraph, max_size: int | None = None) -> list:
    """Vertex masks carrying an odd cycle through all of their vertices."""
    top = G.n if max_size is None else min(max_size, G.n)
    out = []
    for k in range(3, top + 1, 2):
        for S in combinations(range(G.n), k):
            mask = sum(1 << v for v in S)
            if all(_popcount(G.adj[v] & mask) >= 2 for v in S) and _hamiltonian_cycle(G, mask):
                out.append(mask)
    return out


def odd_cycle_condition(G: SimpleGraph) -> bool:
    """Every two vertex-disjoint odd cycles are joined by an edge."""
    if G.is_bipartite():
        return True
    cycles = odd_cycle_vertex_sets(G, G.n - 3)
    for a, b in combinations(cycles, 2):
        if a & b:
            continue
        if not any(G.adj[v] & b for v in _bits(a)):
            return False
    return True


# --------------------------------------------------------------------------
# facet data of edge polytopes


@dataclass(frozen=True)
class VertexStatus:
    bipartite: bool
    regular: tuple
    ordinary: tuple
    cut: tuple


def vertex_status(G: SimpleGraph) -> VertexStatus:
    if not G.is_connected():
        raise Disconnected("vertex status needs a connected graph")
    bip = G.is_bipartite()
    regular, ordinary, cut = [], [], []
    for v in range(G.n):
        rest = G.full & ~(1 << v)
        comps = G._component_masks(rest)
        if len(comps) <= 1:
            ordinary.append(v + 1)
        else:
            cut.append(v + 1)
        if not bip and comps and all(_has_odd_cycle_in(G, c) for c in comps):
            regular.append(v + 1)
    return VertexStatus(bip, tuple(regular), tuple(ordinary), tuple(cut))


@dataclass(frozen=True)
class SpecialSet:
    kind: str  # "fundamental" or "acceptable"
    members: tuple
    closure: tuple  # vertices of B(T)
    spanning: bool


def _b_of(G: SimpleGraph, T: int):
    """(vertex mask of B(T), whether B(T) is connected)."""
    N = 0
    for v in _bits(T):
        N |= G.adj[v]
    V = T | N
    # B(T) only has edges between T and N(T)
    comp = T & -T
    frontier = comp
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            if T >> v & 1:
                nxt |= G.adj[v]
            else:
                nxt |= G.adj[v] & T
        nxt &= V & ~comp
        comp |= nxt
        frontier = nxt
    return V, N, comp == V


def special_sets(G: SimpleGraph) -> list:
    """Fundamental sets (non-bipartite G) or acceptable sets inside V1 (bipartite G)."""
    if not G.is_connected():
        raise Disconnected("special sets need a connected graph")
    bip = G.is_bipartite()
    if bip:
        V1, _ = G.bipartition()
        pool = sum(1 << (v - 1) for v in V1)
    else:
        pool = G.full
    out = []
    for T in _independent_masks(G, pool):
        if not T:
            continue
        V, N, conn = _b_of(G, T)
        if not conn:
            continue
        rest = G.full & ~V
        spanning = rest == 0
        if bip:
            comps = G._component_masks(rest)
            if len(comps) != 1 or not any(G.adj[v] & rest for v in _bits(rest)):
                continue
            kind = "acceptable"
        else:
            if not spanning and not all(_has_odd_cycle_in(G, c) for c in G._component_masks(rest)):
                continue
            kind = "fundamental"
        out.append(
            SpecialSet(kind, tuple(v + 1 for v in _bits(T)), tuple(v + 1 for v in _bits(V)), spanning)
        )
    out.sort(key=lambda s: (len(s.members), s.members))
    return out


def _independent_masks(G: SimpleGraph, pool: int) -> list:
    out = []
    verts = list(_bits(pool))

    def rec(k, chosen, banned):
        if k == len(verts):
            out.append(chosen)
            return
        v = verts[k]
        rec(k + 1, chosen, banned)
        if not banned >> v & 1:
            rec(k + 1, chosen | 1 << v, banned | G.adj[v])

    rec(0, 0, 0)
    return out


def edge_psi_forms(G: SimpleGraph) -> list:
    """Combinatorial facet forms of the edge polytope of a connected graph.

    Each entry is ``(coefficients, divisor, label)``: the linear form
    x -> <coefficients, x> / divisor on R^n.  Coordinate forms come from
    regular (resp. ordinary) vertices, the others from fundamental (resp.
    acceptable) sets T as sum over N(T) minus sum over T; the divisor is 2
    exactly for spanning fundamental sets.
    """
    st = vertex_status(G)
    forms = []
    coord = st.ordinary if st.bipartite else st.regular
    for v in coord:
        c = [0] * G.n
        c[v - 1] = 1
        forms.append((tuple(c), 1, ("vertex", v)))
    for S in special_sets(G):
        c = [0] * G.n
        T = set(S.members)
        for v in S.closure:
            c[v - 1] = -1 if v in T else 1
        div = 2 if (S.kind == "fundamental" and S.spanning) else 1
        forms.append((tuple(c), div, (S.kind, S.members)))
    return forms


# --------------------------------------------------------------------------
# polytopes


def _indicator(n, members):
    v = [0] * n
    for i in members:
        v[i - 1] = 1
    return tuple(v)


def stable_set_polytope(G: SimpleGraph) -> LatticePolytope:
    return LatticePolytope([_indicator(G.n, S) for S in G.independent_sets()], G.n)


def edge_polytope(G: SimpleGraph) -> LatticePolytope:
    if not G.edges:
        raise EmptyGraph("edge polytope needs at least one edge")
    return LatticePolytope([_indicator(G.n, e) for e in G.sorted_edges()], G.n)


def graph_polytope(G: SimpleGraph, kind: str) -> LatticePolytope:
    if kind in ("stable_set", "stable"):
        return stable_set_polytope(G)
    if kind == "edge":
        return edge_polytope(G)
    raise BadParams(f"unknown graph polytope kind {kind!r}")


# --------------------------------------------------------------------------
# documents


def graph_to_json(G: SimpleGraph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.sorted_edges()]}


def graph_from_json(doc: dict) -> SimpleGraph:
    return SimpleGraph(int(doc["n"]), frozenset(tuple(e) for e in doc["edges"]))


def graph_to_dot(G: SimpleGraph, parts=None) -> str:
    """DOT text; ``parts`` is an optional list of vertex groups drawn side by side."""
    lines = ["graph G {"]
    if parts:
        for k, part in enumerate(parts):
            lines.append(f"  subgraph part{k} {{ rank=same; " + " ".join(f"v{v};" for v in part) + " }")
    for v in range(1, G.n + 1):
        lines.append(f'  v{v} [label="{v}"];')
    for i, j in G.sorted_edges():
        lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
