"""Finite posets, their order and chain polytopes, and the families Pi1..Pi4.

Elements are labelled 1..d.  A poset is stored by its covering relations;
the strict order is derived on demand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .canon import canonical_form
from .errors import BadParams
from .polytope import LatticePolytope

__all__ = [
    "Poset",
    "poset_family",
    "poset_polytope",
    "order_polytope",
    "chain_polytope",
    "contains_x_shape",
    "comparability_graph",
    "hibi_rank",
    "hasse_edge_count",
    "poset_to_json",
    "poset_from_json",
    "poset_to_dot",
    "X_SHAPE",
]


def _closure(d, pairs):
    """up[i] = bitmask of elements strictly above element i (0-based)."""
    up = [0] * d
    for i, j in pairs:
        up[i] |= 1 << j
    changed = True
    while changed:
        changed = False
        for i in range(d):
            acc = up[i]
            m = acc
            while m:
                low = m & -m
                acc |= up[low.bit_length() - 1]
                m ^= low
            if acc != up[i]:
                up[i] = acc
                changed = True
    return up


@dataclass(frozen=True)
class Poset:
    size: int
    covers: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        covers = frozenset((int(i), int(j)) for i, j in self.covers)
        object.__setattr__(self, "covers", covers)
        for i, j in covers:
            if not (1 <= i <= self.size and 1 <= j <= self.size) or i == j:
                raise BadParams(f"bad cover ({i},{j})")
        up = _closure(self.size, [(i - 1, j - 1) for i, j in covers])
        for i in range(self.size):
            if up[i] >> i & 1:
                raise BadParams("cover relation has a cycle")
        for i, j in covers:
            # (i,j) is redundant if some k with i < k < j exists
            if any(up[i - 1] >> (k - 1) & 1 and up[k - 1] >> (j - 1) & 1 for k in range(1, self.size + 1)):
                raise BadParams(f"cover ({i},{j}) is implied by others")

    @classmethod
    def from_relations(cls, size, pairs):
        """Build from any generating set of relations p_i < p_j."""
        pairs = [(int(i), int(j)) for i, j in pairs]
        up = _closure(size, [(i - 1, j - 1) for i, j in pairs])
        for i in range(size):
            if up[i] >> i & 1:
                raise BadParams("relations contain a cycle")
        covers = set()
        for i in range(size):
            for j in range(size):
                if up[i] >> j & 1:
                    if not any(up[i] >> k & 1 and up[k] >> j & 1 for k in range(size)):
                        covers.add((i + 1, j + 1))
        return cls(size, frozenset(covers))

    @cached_property
    def _up(self):
        return _closure(self.size, [(i - 1, j - 1) for i, j in self.covers])

    def less(self, i, j) -> bool:
        """True iff p_i < p_j (1-based)."""
        return bool(self._up[i - 1] >> (j - 1) & 1)

    def comparable(self, i, j) -> bool:
        return self.less(i, j) or self.less(j, i)

    def relations(self) -> list:
        return [(i, j) for i in range(1, self.size + 1) for j in range(1, self.size + 1) if self.less(i, j)]

    def minimal_elements(self) -> list:
        has_lower = {j for _, j in self.covers}
        return [i for i in range(1, self.size + 1) if i not in has_lower]

    def maximal_elements(self) -> list:
        has_upper = {i for i, _ in self.covers}
        return [i for i in range(1, self.size + 1) if i not in has_upper]

    def linear_extension(self) -> list:
        d = self.size
        down = [0] * d
        for i, j in self.covers:
            down[j - 1] |= 1 << (i - 1)
        done = 0
        out = []
        while len(out) < d:
            for v in range(d):
                if not done >> v & 1 and down[v] & ~done == 0:
                    out.append(v + 1)
                    done |= 1 << v
                    break
        return out

    def ideals(self) -> list:
        """All down-closed subsets as sorted tuples."""
        order = self.linear_extension()
        lower = {j: [i for i, jj in self.covers if jj == j] for j in range(1, self.size + 1)}
        out = []

        def rec(k, chosen):
            if k == len(order):
                out.append(tuple(sorted(chosen)))
                return
            v = order[k]
            rec(k + 1, chosen)
            if all(u in chosen for u in lower[v]):
                chosen.add(v)
                rec(k + 1, chosen)
                chosen.discard(v)

        rec(0, set())
        return sorted(out)

    def antichains(self) -> list:
        order = self.linear_extension()
        out = []

        def rec(k, chosen):
            if k == len(order):
                out.append(tuple(sorted(chosen)))
                return
            v = order[k]
            rec(k + 1, chosen)
            if not any(self.comparable(u, v) for u in chosen):
                chosen.append(v)
                rec(k + 1, chosen)
                chosen.pop()

        rec(0, [])
        return sorted(out)

    def relation_codes(self) -> list:
        """Matrix with 1 for p_i < p_j, 2 for p_i > p_j and 0 otherwise."""
        d = self.size
        return [
            [1 if self.less(i, j) else 2 if self.less(j, i) else 0 for j in range(1, d + 1)]
            for i in range(1, d + 1)
        ]

    def canonical_form(self) -> tuple:
        return canonical_form(self.relation_codes())

    def relabel(self, perm) -> "Poset":
        """perm maps old label -> new label (dict or 1-based sequence)."""
        if not isinstance(perm, dict):
            perm = {i + 1: p for i, p in enumerate(perm)}
        return Poset(self.size, frozenset((perm[i], perm[j]) for i, j in self.covers))

    def disjoint_union(self, other: "Poset") -> "Poset":
        s = self.size
        return Poset(s + other.size, self.covers | {(i + s, j + s) for i, j in other.covers})

    def dual(self) -> "Poset":
        return Poset(self.size, frozenset((j, i) for i, j in self.covers))


def _chain(start, stop):
    return [(k, k + 1) for k in range(start, stop)]


def poset_family(kind: str, params) -> Poset:
    """Construct Pi1..Pi4 with the standard element labelling."""
    p = tuple(int(x) for x in params)
    if kind == "Pi1":
        if len(p) != 2 or min(p) < 1:
            raise BadParams("Pi1 needs s1, s2 >= 1")
        s1, s2 = p
        rel = _chain(1, s1) + _chain(s1 + 1, s1 + s2)
        return Poset.from_relations(s1 + s2, rel)
    if kind == "Pi2":
        if len(p) != 4 or min(p[:3]) < 1 or p[3] < 0:
            raise BadParams("Pi2 needs s1, s2, s3 >= 1 and t >= 0")
        s1, s2, s3, t = p
        d = s1 + s2 + s3 + t
        rel = _chain(1, t)
        rel += _chain(t + 1, t + s1) + _chain(t + s1 + 1, t + s1 + s2)
        if t > 0:
            rel += [(t, t + 1), (t, t + s1 + 1)]
        rel += _chain(t + s1 + s2 + 1, d)
        return Poset.from_relations(d, rel)
    if kind == "Pi3":
        if len(p) != 5 or min(p[:4]) < 1 or p[4] < 0:
            raise BadParams("Pi3 needs s1, s2, t1, t2 >= 1 and t3 >= 0")
        s1, s2, t1, t2, t3 = p
        d = s1 + s2 + t1 + t2 + t3
        rel = _chain(1, t1 + s1)
        rel += _chain(t1 + s1 + 1, t1 + s1 + s2 + t2)
        mid = list(range(t1 + s1 + s2 + t2 + 1, d + 1))
        seq = [t1] + mid + [t1 + s1 + s2 + 1]
        rel += list(zip(seq, seq[1:]))
        return Poset.from_relations(d, rel)
    if kind == "Pi4":
        if len(p) != 4 or min(p) < 1:
            raise BadParams("Pi4 needs s1, s2, t1, t2 >= 1")
        s1, s2, t1, t2 = p
        d = s1 + s2 + t1 + t2
        top = d + 1
        rel = _chain(1, t1) + [(t1, top)]
        rel += _chain(t1 + 1, t1 + t2) + [(t1 + t2, top)]
        rel += [(top, t1 + t2 + 1)] + _chain(t1 + t2 + 1, t1 + t2 + s1)
        rel += [(top, t1 + t2 + s1 + 1)] + _chain(t1 + t2 + s1 + 1, d)
        return Poset.from_relations(d + 1, rel)
    raise BadParams(f"unknown poset family {kind!r}")


X_SHAPE = Poset(5, frozenset({(1, 3), (2, 3), (3, 4), (3, 5)}))


def _indicator(d, members):
    v = [0] * d
    for i in members:
        v[i - 1] = 1
    return tuple(v)


def order_polytope(P: Poset) -> LatticePolytope:
    return LatticePolytope([_indicator(P.size, I) for I in P.ideals()], P.size)


def chain_polytope(P: Poset) -> LatticePolytope:
    return LatticePolytope([_indicator(P.size, A) for A in P.antichains()], P.size)


def poset_polytope(P: Poset, kind: str) -> LatticePolytope:
    if kind == "order":
        return order_polytope(P)
    if kind == "chain":
        return chain_polytope(P)
    raise BadParams(f"unknown poset polytope kind {kind!r}")


def contains_x_shape(P: Poset) -> bool:
    """True iff some element has two incomparable elements below and two above."""
    r = range(1, P.size + 1)
    for z in r:
        below = [a for a in r if P.less(a, z)]
        above = [b for b in r if P.less(z, b)]
        lo = any(not P.comparable(a, b) for i, a in enumerate(below) for b in below[i + 1:])
        hi = any(not P.comparable(a, b) for i, a in enumerate(above) for b in above[i + 1:])
        if lo and hi:
            return True
    return False


def comparability_graph(P: Poset):
    from .graph import SimpleGraph

    return SimpleGraph(P.size, frozenset(P.relations()))


def hasse_edge_count(P: Poset) -> int:
    """Edges of the Hasse diagram after adjoining a new bottom and top."""
    if P.size == 0:
        return 1
    return len(P.covers) + len(P.minimal_elements()) + len(P.maximal_elements())


def hibi_rank(P: Poset) -> int:
    return hasse_edge_count(P) - P.size - 1


def poset_to_json(P: Poset) -> dict:
    return {"size": P.size, "covers": [list(c) for c in sorted(P.covers)]}


def poset_from_json(doc: dict) -> Poset:
    return Poset(int(doc["size"]), frozenset(tuple(c) for c in doc["covers"]))


def poset_to_dot(P: Poset, hat: bool = False) -> str:
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for i in range(1, P.size + 1):
        lines.append(f'  p{i} [label="{i}"];')
    for i, j in sorted(P.covers):
        lines.append(f"  p{i} -> p{j};")
    if hat:
        lines.append('  bottom [label="0"];')
        lines.append('  top [label="1"];')
        for i in P.minimal_elements():
            lines.append(f"  bottom -> p{i};")
        for i in P.maximal_elements():
            lines.append(f"  p{i} -> top;")
        if P.size == 0:
            lines.append("  bottom -> top;")
    lines.append("}")
    return "\n".join(lines) + "\n"
