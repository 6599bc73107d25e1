"""Exhaustive enumeration of small posets and graphs, class group census and
machine checks of the rank one, two and three classification statements.

Objects are enumerated up to isomorphism by vertex augmentation with
canonical-form rejection.  Every object is stored in its canonical
labelling and identified by a string derived from its canonical
certificate, so output order never depends on how the work was scheduled.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from collections import defaultdict
from dataclasses import asdict, dataclass, field
from itertools import combinations, product
from pathlib import Path

from .canon import canonical_labeling
from .classgroup import AbelianGroup, class_group, divisor_matrix, shortcut_rank
from .equivalence import (
    DEFAULT_BUDGET,
    Fingerprint,
    fingerprint,
    unimodular_equivalent,
)
from .errors import BadParams, SearchBudgetExceeded, TooLarge
from .graph import (
    SimpleGraph,
    blocks,
    edge_polytope,
    edge_psi_forms,
    graph_family,
    graph_from_json,
    graph_to_json,
    is_perfect,
    maximal_cliques,
    odd_cycle_condition,
    stable_set_polytope,
)
from .polytope import LatticePolytope, pyramid_reduce
from .poset import (
    Poset,
    chain_polytope,
    comparability_graph,
    contains_x_shape,
    hibi_rank,
    order_polytope,
    poset_family,
    poset_from_json,
    poset_to_json,
    X_SHAPE,
)

__all__ = [
    "CODE_VERSION",
    "MAX_GRAPH_VERTICES",
    "MAX_POSET_ELEMENTS",
    "CensusRecord",
    "VerifyReport",
    "canonical_id",
    "canonicalize",
    "enumerate_objects",
    "classify",
    "verify",
    "CHECKS",
]

CODE_VERSION = "1"
MAX_GRAPH_VERTICES = 8
MAX_POSET_ELEMENTS = 7


# --------------------------------------------------------------------------
# canonical objects


def _graph_codes(G: SimpleGraph):
    return [[1 if G.adj[i] >> j & 1 else 0 for j in range(G.n)] for i in range(G.n)]


def _encode(prefix, n, cert, base):
    value = 0
    for c in cert:
        value = value * base + c
    return f"{prefix}{n}-{value:x}"


def canonicalize(obj):
    """Return ``(canonical_id, relabelled copy in canonical order)``."""
    if isinstance(obj, SimpleGraph):
        cert, order = canonical_labeling(_graph_codes(obj))
        perm = {v + 1: k + 1 for k, v in enumerate(order)}
        return _encode("g", obj.n, cert, 2), obj.relabel(perm) if obj.n else obj
    if isinstance(obj, Poset):
        cert, order = canonical_labeling(obj.relation_codes())
        perm = {v + 1: k + 1 for k, v in enumerate(order)}
        return _encode("p", obj.size, cert, 3), obj.relabel(perm) if obj.size else obj
    raise TypeError("expected a SimpleGraph or a Poset")


def canonical_id(obj) -> str:
    return canonicalize(obj)[0]


def _doc(obj) -> dict:
    return graph_to_json(obj) if isinstance(obj, SimpleGraph) else poset_to_json(obj)


def _from_doc(doc: dict):
    return graph_from_json(doc) if "edges" in doc else poset_from_json(doc)


# --------------------------------------------------------------------------
# enumeration


_LEVELS = {"graphs": {}, "posets": {}}


def _graph_level(n: int) -> list:
    levels = _LEVELS["graphs"]
    if n in levels:
        return levels[n]
    if n == 0:
        out = [("g0-0", SimpleGraph(0))]
    else:
        seen = {}
        for _, G in _graph_level(n - 1):
            for mask in range(1 << (n - 1)):
                extra = {(v + 1, n) for v in range(n - 1) if mask >> v & 1}
                cid, canon = canonicalize(SimpleGraph(n, G.edges | extra))
                seen.setdefault(cid, canon)
        out = sorted(seen.items())
    levels[n] = out
    return out


def _poset_level(n: int) -> list:
    levels = _LEVELS["posets"]
    if n in levels:
        return levels[n]
    if n == 0:
        out = [("p0-0", Poset(0))]
    else:
        seen = {}
        for _, P in _poset_level(n - 1):
            for ideal in P.ideals():
                tops = [x for x in ideal if not any(P.less(x, y) for y in ideal)]
                Q = Poset(n, P.covers | {(x, n) for x in tops})
                cid, canon = canonicalize(Q)
                seen.setdefault(cid, canon)
        out = sorted(seen.items())
    levels[n] = out
    return out


def _parse_filters(filters) -> tuple:
    """Normalize filters to a sorted tuple of (name, value) pairs."""
    if not filters:
        return ()
    items = filters.items() if isinstance(filters, dict) else filters
    out = {}
    for item in items:
        if isinstance(item, str):
            name, _, value = item.partition("=")
            val = int(value) if value else True
        else:
            name, val = item
        out[name.strip()] = val
    return tuple(sorted(out.items()))


def _count_nonbipartite_blocks(G: SimpleGraph) -> int:
    bd = blocks(G)
    return sum(1 for b in bd.blocks if len(b) > 2 and not G.induced(b).is_bipartite())


def _is_two_connected(G: SimpleGraph) -> bool:
    return G.n >= 3 and G.is_connected() and not blocks(G).cut_vertices


def _edge_dim(G: SimpleGraph) -> int:
    """Dimension of the edge polytope of a graph without isolated vertices."""
    return G.n - G.bipartite_component_count() - 1


_GRAPH_FILTERS = {
    "connected": lambda G, v: G.is_connected() == bool(v),
    "two_connected": lambda G, v: _is_two_connected(G) == bool(v),
    "bipartite": lambda G, v: G.is_bipartite() == bool(v),
    "nonbipartite": lambda G, v: (not G.is_bipartite()) == bool(v),
    "perfect": lambda G, v: is_perfect(G) == bool(v),
    "occ": lambda G, v: odd_cycle_condition(G) == bool(v),
    "no_isolated": lambda G, v: all(G.degree(x) > 0 for x in range(1, G.n + 1)) == bool(v),
    "edge_count": lambda G, v: len(G.edges) == v,
    "independent_sets": lambda G, v: len(G.independent_sets()) == v,
    "nontrivial_independent_sets": lambda G, v: len(G.independent_sets()) - 1 - G.n == v,
    "max_nonbipartite_blocks": lambda G, v: _count_nonbipartite_blocks(G) <= v,
    "edge_dim": lambda G, v: bool(G.edges) and _edge_dim(G) == v,
}

_POSET_FILTERS = {
    "connected": lambda P, v: comparability_graph(P).is_connected() == bool(v),
    "ideals": lambda P, v: len(P.ideals()) == v,
    "x_free": lambda P, v: (not contains_x_shape(P)) == bool(v),
}

# cheap structural tests first
_FILTER_ORDER = [
    "edge_count", "no_isolated", "connected", "bipartite", "nonbipartite", "edge_dim",
    "two_connected", "max_nonbipartite_blocks", "ideals", "x_free", "independent_sets",
    "nontrivial_independent_sets", "occ", "perfect",
]


def _predicate(kind: str, filters: tuple):
    table = _GRAPH_FILTERS if kind == "graphs" else _POSET_FILTERS
    for name, _ in filters:
        if name not in table:
            raise BadParams(f"unknown {kind} filter {name!r}")
    tests = sorted(filters, key=lambda f: _FILTER_ORDER.index(f[0]))

    def ok(obj):
        return all(table[name](obj, val) for name, val in tests)

    return ok


def _cache_root(cache_dir):
    if cache_dir is None:
        cache_dir = os.environ.get("TORICLASS_CACHE") or None
    return Path(cache_dir) if cache_dir else None


def _cache_path(root: Path, kind: str, n: int, key) -> Path:
    blob = json.dumps([kind, n, key, CODE_VERSION], sort_keys=True).encode()
    return root / kind / str(n) / (hashlib.sha256(blob).hexdigest()[:16] + ".jsonl")


def _cache_load(path: Path):
    if path is None or not path.exists():
        return None
    with path.open() as fh:
        return [json.loads(line) for line in fh if line.strip()]


def _cache_store(path: Path, rows):
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(f".tmp{os.getpid()}")
    with tmp.open("w") as fh:
        for row in rows:
            fh.write(json.dumps(row, sort_keys=True) + "\n")
    tmp.replace(path)


def enumerate_objects(kind: str, n: int, filters=None, cache_dir=None) -> list:
    """One canonical representative per isomorphism class on exactly n vertices.

    ``kind`` is "graphs" or "posets".  Returns ``(canonical_id, object)``
    pairs sorted by id.
    """
    if kind not in ("graphs", "posets"):
        raise BadParams(f"unknown kind {kind!r}")
    limit = MAX_GRAPH_VERTICES if kind == "graphs" else MAX_POSET_ELEMENTS
    if n > limit:
        raise TooLarge(f"{kind} are enumerated up to {limit}")
    if n < 0:
        raise BadParams("n must be non-negative")
    key = _parse_filters(filters)
    root = _cache_root(cache_dir)
    path = _cache_path(root, kind, n, key) if root else None
    rows = _cache_load(path)
    if rows is not None:
        return [(r["id"], _from_doc(r["object"])) for r in rows]
    level = _graph_level(n) if kind == "graphs" else _poset_level(n)
    ok = _predicate(kind, key)
    out = [(cid, obj) for cid, obj in level if ok(obj)]
    _cache_store(path, [{"id": cid, "object": _doc(obj)} for cid, obj in out])
    return out


def _objects_upto(kind, nmax, filters=None, nmin=1, cache_dir=None):
    out = []
    for n in range(nmin, nmax + 1):
        out.extend(enumerate_objects(kind, n, filters, cache_dir))
    return out


# --------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class CensusRecord:
    kind: str  # "order", "stable" or "edge"
    source_id: str
    source: dict
    n: int
    dim: int
    rank: int
    torsion: tuple
    shortcut: int
    facets: int
    fingerprint: Fingerprint
    apex_count: int
    core_ref: str  # digest of the fingerprint of the pyramid-free core

    def to_json(self) -> dict:
        d = asdict(self)
        d["torsion"] = list(self.torsion)
        d["fingerprint"] = _fp_json(self.fingerprint)
        return d

    @classmethod
    def from_json(cls, d: dict) -> "CensusRecord":
        d = dict(d)
        d["torsion"] = tuple(d["torsion"])
        fp = d["fingerprint"]
        d["fingerprint"] = Fingerprint(
            fp["dim"], fp["vertices"], fp["lattice_points"], fp["facets"],
            tuple(fp["points_per_facet"]), tuple(fp["facets_per_vertex"]), fp["volume"],
        )
        return cls(**d)

    @property
    def group(self) -> AbelianGroup:
        return AbelianGroup(self.rank, self.torsion)


def _fp_json(fp: Fingerprint) -> dict:
    d = asdict(fp)
    d["points_per_facet"] = list(fp.points_per_facet)
    d["facets_per_vertex"] = list(fp.facets_per_vertex)
    return d


_SOURCE_KIND = {"order": "posets", "stable": "graphs", "edge": "graphs"}
_INSTANCE_FILTERS = {
    "order": (),
    "stable": (("perfect", True),),
    "edge": (("connected", True), ("occ", True)),
}


def polytope_of(kind: str, obj) -> LatticePolytope:
    if kind == "order":
        return order_polytope(obj)
    if kind == "chain":
        return chain_polytope(obj)
    if kind == "stable":
        return stable_set_polytope(obj)
    if kind == "edge":
        return edge_polytope(obj)
    raise BadParams(f"unknown polytope kind {kind!r}")


def _digest(fp: Fingerprint) -> str:
    return hashlib.sha256(json.dumps(_fp_json(fp), sort_keys=True).encode()).hexdigest()[:16]


def _make_record(args) -> dict:
    kind, cid, doc = args
    obj = _from_doc(doc)
    P = polytope_of(kind, obj)
    group = class_group(P, assume_idp=True)
    short = shortcut_rank(obj, kind)
    core, apex = pyramid_reduce(P)
    rec = CensusRecord(
        kind=kind,
        source_id=cid,
        source=doc,
        n=obj.n if isinstance(obj, SimpleGraph) else obj.size,
        dim=P.dim,
        rank=group.free_rank,
        torsion=group.torsion,
        shortcut=short,
        facets=len(P.facets) if P.dim else 0,
        fingerprint=fingerprint(P),
        apex_count=apex,
        core_ref=_digest(fingerprint(core)),
    )
    return rec.to_json()


def _parallel_map(fn, items, jobs: int):
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    from concurrent.futures import ProcessPoolExecutor

    chunk = max(1, len(items) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


def classify(kind: str, nmax: int, rank_filter=None, jobs: int = 1, cache_dir=None, nmin: int = 1) -> list:
    """Census records for order polytopes of posets, stable set polytopes of
    perfect graphs or edge polytopes of connected graphs with the odd cycle
    condition, on nmin..nmax elements or vertices."""
    if kind not in _SOURCE_KIND:
        raise BadParams(f"unknown census kind {kind!r}")
    if kind == "edge":
        nmin = max(nmin, 2)
    source = _SOURCE_KIND[kind]
    root = _cache_root(cache_dir)
    records = []
    for n in range(nmin, nmax + 1):
        path = _cache_path(root, "classify-" + kind, n, list(_INSTANCE_FILTERS[kind])) if root else None
        rows = _cache_load(path)
        if rows is None:
            objs = enumerate_objects(source, n, _INSTANCE_FILTERS[kind], cache_dir)
            rows = _parallel_map(_make_record, [(kind, cid, _doc(o)) for cid, o in objs], jobs)
            rows.sort(key=lambda r: r["source_id"])
            _cache_store(path, rows)
        records.extend(CensusRecord.from_json(r) for r in rows)
    if rank_filter is not None:
        records = [r for r in records if r.rank == rank_filter]
    return records


def record_object(rec: CensusRecord):
    return _from_doc(rec.source)


# --------------------------------------------------------------------------
# reports


@dataclass
class VerifyReport:
    theorem_id: str
    instance_count: int = 0
    counterexamples: list = field(default_factory=list)
    wall_time: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_json(self, timings: bool = False) -> dict:
        d = {
            "check": self.theorem_id,
            "passed": self.passed,
            "instance_count": self.instance_count,
            "counterexamples": self.counterexamples,
            "details": self.details,
        }
        if timings:
            d["wall_time"] = round(self.wall_time, 3)
        return d

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} {self.theorem_id}: {self.instance_count} instances, "
            f"{len(self.counterexamples)} counterexamples, {self.wall_time:.1f}s"
        )


@dataclass
class _Context:
    jobs: int = 1
    budget: int = DEFAULT_BUDGET
    cache_dir: str | None = None


class _Catalogue:
    """Pyramid-free cores of labelled polytopes, grouped by fingerprint."""

    def __init__(self, entries=()):
        self.groups = defaultdict(list)
        for label, P in entries:
            self.add(label, P)

    def add(self, label, P):
        core, _ = pyramid_reduce(P)
        self.groups[fingerprint(core)].append((label, core))

    def find(self, Q: LatticePolytope, budget: int):
        """Label of a member equivalent to the core Q, or None."""
        for label, C in self.groups.get(fingerprint(Q), ()):
            if unimodular_equivalent(Q, C, budget) is not None:
                return label
        return None


def _label(name, params):
    return f"{name}({','.join(str(p) for p in params)})"


def _compositions(total_max, parts, mins):
    """Integer tuples with x_i >= mins[i] and sum <= total_max."""
    def rec(k, left):
        if k == parts:
            yield ()
            return
        for x in range(mins[k], left - sum(mins[k + 1:]) + 1):
            for rest in rec(k + 1, left - x):
                yield (x,) + rest

    if sum(mins) > total_max:
        return
    yield from rec(0, total_max)


def _poset_family_members(names, max_size):
    """(label, poset) for the named families with at most max_size elements."""
    spec = {"Pi1": (2, (1, 1), 0), "Pi2": (4, (1, 1, 1, 0), 0),
            "Pi3": (5, (1, 1, 1, 1, 0), 0), "Pi4": (4, (1, 1, 1, 1), 1)}
    for name in names:
        parts, mins, extra = spec[name]
        for params in _compositions(max_size - extra, parts, mins):
            yield _label(name, params), poset_family(name, params)


def _order_catalogue(names, max_size):
    return _Catalogue((lab, order_polytope(P)) for lab, P in _poset_family_members(names, max_size))


def _match(catalogue, P, budget, fallback=None):
    """Find an equivalent catalogue member for the core of P.

    ``fallback`` is a callable producing more (label, polytope) candidates
    for the core's fingerprint, used only when the catalogue has no match.
    """
    core, apex = pyramid_reduce(P)
    label = catalogue.find(core, budget)
    if label is None and fallback is not None:
        extra = _Catalogue(fallback(core))
        label = extra.find(core, budget)
    return label, core, apex


def _ce(rec_or_obj, reason, **extra):
    if isinstance(rec_or_obj, CensusRecord):
        d = {"kind": rec_or_obj.kind, "id": rec_or_obj.source_id, "source": rec_or_obj.source}
    elif isinstance(rec_or_obj, (SimpleGraph, Poset)):
        d = {"id": canonical_id(rec_or_obj), "source": _doc(rec_or_obj)}
    else:
        d = {"instance": rec_or_obj}
    d["reason"] = reason
    d.update(extra)
    return d


def _guarded(fn, where, failures):
    """Run fn(); a budget exit becomes a recorded failure instead of an exception."""
    try:
        return fn()
    except SearchBudgetExceeded as exc:
        failures.append(_ce(where, "search budget exceeded", nodes=exc.nodes))
        return None


# --------------------------------------------------------------------------
# pools of candidate polytopes with matching invariants


def _quick_invariants(kind, obj):
    """(dim, lattice point count) without building the polytope."""
    if kind == "order":
        return obj.size, len(obj.ideals())
    if kind == "stable":
        return obj.n, len(obj.independent_sets())
    if not obj.edges:
        return None
    return _edge_dim(obj), len(obj.edges)


def _pool(kind, size_range, filters, ctx):
    source = _SOURCE_KIND[kind]
    out = []
    for n in size_range:
        for cid, obj in enumerate_objects(source, n, filters, ctx.cache_dir):
            out.append((kind, cid, obj))
    return out


def _pool_check(target: LatticePolytope, pools: dict, ctx: _Context):
    """Check that no candidate in the union of the pools is equivalent to target."""
    dim, npts = target.dim, len(target.lattice_points)
    seen = {}
    info = {}
    for name, entries in pools.items():
        matching = 0
        for kind, cid, obj in entries:
            if _quick_invariants(kind, obj) == (dim, npts):
                matching += 1
                seen[(kind, cid)] = obj
        info[name] = {"size": len(entries), "matching_invariants": matching}
    failures = []
    tfp = fingerprint(target)
    same_fp = 0
    for (kind, cid), obj in sorted(seen.items()):
        P = polytope_of(kind, obj)
        if fingerprint(P) != tfp:
            continue
        same_fp += 1
        w = _guarded(lambda: unimodular_equivalent(P, target, ctx.budget), obj, failures)
        if w is not None:
            failures.append(_ce(obj, f"{kind} polytope is equivalent to the target"))
    info["union_matching_invariants"] = len(seen)
    info["union_same_fingerprint"] = same_fp
    return len(seen), failures, info


def _pool_edge(dim, npts, ctx):
    return _pool(
        "edge", range(2, MAX_GRAPH_VERTICES + 1),
        (("no_isolated", True), ("edge_count", npts), ("edge_dim", dim)), ctx,
    )


def _pool_stable(dim, npts, ctx):
    if dim > MAX_GRAPH_VERTICES:
        return []
    return _pool("stable", [dim], (("independent_sets", npts),), ctx)


def _pool_order(dim, npts, ctx):
    if dim > MAX_POSET_ELEMENTS:
        return []
    return _pool("order", [dim], (("ideals", npts),), ctx)


# --------------------------------------------------------------------------
# checks


def _check_torsion_free(b, ctx):
    """Empty torsion and agreement with the combinatorial rank formula."""
    fails = []
    count = 0
    for kind, nmax in (("order", b["max_elements"]), ("stable", b["max_vertices"]), ("edge", b["max_vertices"])):
        for rec in classify(kind, nmax, jobs=ctx.jobs, cache_dir=ctx.cache_dir):
            count += 1
            if rec.torsion:
                fails.append(_ce(rec, "torsion", torsion=list(rec.torsion)))
            if rec.rank != rec.shortcut:
                fails.append(_ce(rec, "rank differs from shortcut", rank=rec.rank, shortcut=rec.shortcut))
    return count, fails, {}


def _check_rank_formula(b, ctx):
    fails = []
    count = 0
    for kind, nmax in (("order", b["max_elements"]), ("stable", b["max_vertices"]), ("edge", b["max_vertices"])):
        for rec in classify(kind, nmax, jobs=ctx.jobs, cache_dir=ctx.cache_dir):
            count += 1
            expect = rec.facets - (rec.dim + 1) if rec.dim else 0
            if rec.rank != expect:
                fails.append(_ce(rec, "rank differs from facets - (dim + 1)", rank=rec.rank, expected=expect))
    return count, fails, {}


def _ambient_value_sets(P: LatticePolytope):
    """Facet value vectors listed over the ambient lattice points in sorted order."""
    amb = [P.reduction.lift(c) for c in P.reduced_lattice_points]
    order = sorted(range(len(amb)), key=lambda i: amb[i])
    rows = {tuple(row[i] for i in order) for row in P.facet_values()}
    return rows, [amb[i] for i in order]


def _check_facet_systems(b, ctx):
    fails = []
    count = 0
    skipped = 0
    for _, G in _objects_upto("graphs", b["max_vertices"], (("perfect", True),), cache_dir=ctx.cache_dir):
        P = stable_set_polytope(G)
        count += 1
        geo, pts = _ambient_value_sets(P)
        forms = [tuple(1 if i == v else 0 for i in range(G.n)) + (0,) for v in range(G.n)]
        for Q in maximal_cliques(G):
            forms.append(tuple(-1 if i + 1 in Q else 0 for i in range(G.n)) + (1,))
        comb = {tuple(sum(a * x for a, x in zip(f, p)) + f[-1] for p in pts) for f in forms}
        if geo != comb or len(forms) != len(P.facets):
            fails.append(_ce(G, "stable set facets differ from the clique system"))
    for _, G in _objects_upto("graphs", b["max_vertices"], (("connected", True), ("occ", True)), 2, ctx.cache_dir):
        P = edge_polytope(G)
        if P.dim == 0:
            skipped += 1
            continue
        count += 1
        geo, pts = _ambient_value_sets(P)
        forms = edge_psi_forms(G)
        comb = set()
        for coeffs, div, _ in forms:
            vals = [sum(a * x for a, x in zip(coeffs, p)) for p in pts]
            if any(v % div for v in vals):
                fails.append(_ce(G, "form values not divisible by its divisor"))
            comb.add(tuple(v // div for v in vals))
        if geo != comb or len(forms) != len(P.facets):
            fails.append(_ce(G, "edge polytope facets differ from the combinatorial system"))
    return count, fails, {"skipped_points": skipped}


def _check_order_small_rank(b, ctx):
    E = b["max_elements"]
    cats = {1: _order_catalogue(["Pi1"], E), 2: _order_catalogue(["Pi2", "Pi3", "Pi4"], E)}
    fails = []
    count = 0
    matched = defaultdict(int)
    for rec in classify("order", E, jobs=ctx.jobs, cache_dir=ctx.cache_dir):
        if rec.rank not in cats:
            continue
        count += 1
        P = order_polytope(record_object(rec))
        res = _guarded(lambda: _match(cats[rec.rank], P, ctx.budget), rec, fails)
        if res is None:
            continue
        label = res[0]
        if label is None:
            fails.append(_ce(rec, f"rank {rec.rank} core matches no family member"))
        else:
            matched[label.split("(")[0]] += 1
    for rank, names in ((1, ["Pi1"]), (2, ["Pi2", "Pi3", "Pi4"])):
        for label, Pi in _poset_family_members(names, E):
            count += 1
            r = class_group(order_polytope(Pi), assume_idp=True).free_rank
            if r != rank or hibi_rank(Pi) != rank:
                fails.append(_ce(Pi, f"{label} has rank {r}, expected {rank}"))
    return count, fails, {"matched_by_family": dict(sorted(matched.items()))}


def _check_order_chain_families(b, ctx):
    fails = []
    count = 0
    for label, Pi in _poset_family_members(["Pi1", "Pi2", "Pi3"], b["max_elements"]):
        count += 1
        O, C = order_polytope(Pi), chain_polytope(Pi)
        w = _guarded(lambda: unimodular_equivalent(O, C, ctx.budget), Pi, fails)
        if w is None:
            fails.append(_ce(Pi, f"{label}: order and chain polytopes not equivalent"))
        if not C.same_points(stable_set_polytope(comparability_graph(Pi))):
            fails.append(_ce(Pi, f"{label}: chain polytope differs from the stable set polytope"))
    return count, fails, {}


def _check_order_chain_equivalence(b, ctx):
    fails = []
    count = 0
    equivalent = 0
    for _, Pi in _objects_upto("posets", b["max_elements"], cache_dir=ctx.cache_dir):
        count += 1
        O, C = order_polytope(Pi), chain_polytope(Pi)
        budget_fail = []
        w = _guarded(lambda: unimodular_equivalent(O, C, ctx.budget), Pi, budget_fail)
        if budget_fail:
            fails.extend(budget_fail)
            continue
        equivalent += w is not None
        if (w is not None) == contains_x_shape(Pi):
            fails.append(_ce(Pi, "equivalence verdict disagrees with the X-shape test"))
    return count, fails, {"equivalent": equivalent}


def _check_stable_small_rank(b, ctx):
    V = b["max_vertices"]
    cats = {1: _order_catalogue(["Pi1"], V), 2: _order_catalogue(["Pi2", "Pi3"], V)}
    fails = []
    count = 0
    for rec in classify("stable", V, jobs=ctx.jobs, cache_dir=ctx.cache_dir):
        if rec.rank not in cats:
            continue
        count += 1
        P = stable_set_polytope(record_object(rec))
        res = _guarded(lambda: _match(cats[rec.rank], P, ctx.budget), rec, fails)
        if res is not None and res[0] is None:
            fails.append(_ce(rec, f"rank {rec.rank} core matches no family member"))
    for rank, names in ((1, ["Pi1"]), (2, ["Pi2", "Pi3"])):
        for label, Pi in _poset_family_members(names, V):
            count += 1
            r = class_group(stable_set_polytope(comparability_graph(Pi)), assume_idp=True).free_rank
            if r != rank:
                fails.append(_ce(Pi, f"stable set polytope of {label} has rank {r}, expected {rank}"))
    return count, fails, {}


def _bipartite_family(V):
    """Canonical ids of complete bipartite (rank 1) and notched (rank 2) graphs."""
    fam = {1: {}, 2: {}}
    for s1 in range(2, V + 1):
        for s2 in range(s1, V + 1 - s1):
            G = graph_family("complete_bipartite", (s1, s2))
            fam[1][canonical_id(G)] = _label("K", (s1, s2))
    for s1, s2, t1, t2 in _compositions(V, 4, (2, 2, 1, 1)):
        G = graph_family("K_s1s2_t1t2", (s1, s2, t1, t2), strict=False)
        fam[2].setdefault(canonical_id(G), _label("K_s1s2_t1t2", (s1, s2, t1, t2)))
    return fam


def _glued_members(V):
    """(rank, label, graph) for every glued-path construction with at most V vertices."""
    def attempt(case, params):
        try:
            return graph_family("glued", (case,) + tuple(params))
        except BadParams:
            return None

    out = []
    for s1 in range(2, V):
        for s2 in range(2, V):
            for L in range(1, V):
                for case in ("across", "within"):
                    if s1 + s2 + L - 1 <= V:
                        G = attempt(case, (s1, s2, L))
                        if G is not None:
                            out.append((1, _label(case, (s1, s2, L)), G))
    for s1, s2, t1, t2 in _compositions(V + 2, 4, (2, 2, 2, 2)):
        base = s1 + s2 + t1 + t2
        for L1 in range(0, V):
            for L2 in range(0, V):
                if base + L1 + L2 - 2 > V:
                    continue
                for case in ("two-across", "within-across", "two-within"):
                    G = attempt(case, (s1, s2, t1, t2, L1, L2))
                    if G is not None:
                        out.append((2, _label(case, (s1, s2, t1, t2, L1, L2)), G))
    for s1, s2, t1, t2 in _compositions(V, 4, (2, 2, 1, 1)):
        d = s1 + s2 + t1 + t2
        for i, j in combinations(range(1, d + 1), 2):
            for L in range(1, V - d + 2):
                for case in ("notched-across", "notched-within"):
                    G = attempt(case, (s1, s2, t1, t2, i, j, L))
                    if G is not None:
                        out.append((2, _label(case, (s1, s2, t1, t2, i, j, L)), G))
    for s1, s2, t1, t2 in _compositions(V - 1, 4, (2, 2, 0, 0)):
        G = attempt("apex", (s1, s2, t1, t2))
        if G is not None:
            out.append((2, _label("apex", (s1, s2, t1, t2)), G))
    return [(r, lab, G) for r, lab, G in out if G.n <= V]


def _compare_sets(instances, family, rank, fails):
    """instances: id -> graph with the given rank; family: id -> label."""
    for cid in sorted(set(instances) - set(family)):
        fails.append(_ce(instances[cid], f"rank {rank} graph is not a family member"))
    for cid in sorted(set(family) - set(instances)):
        fails.append({"id": cid, "label": family[cid], "reason": f"family member does not have rank {rank}"})


def _edge_ranks(filters, V, ctx):
    objs = _objects_upto("graphs", V, filters, 3, ctx.cache_dir)
    rows = _parallel_map(_make_record, [("edge", cid, _doc(G)) for cid, G in objs], ctx.jobs)
    return {r["source_id"]: (G, r["rank"]) for r, (_, G) in zip(rows, objs)}


def _check_edge_bipartite(b, ctx):
    V = b["max_vertices"]
    ranks = _edge_ranks((("two_connected", True), ("bipartite", True)), V, ctx)
    fam = _bipartite_family(V)
    fails = []
    for rank in (1, 2):
        inst = {cid: G for cid, (G, r) in ranks.items() if r == rank}
        _compare_sets(inst, fam[rank], rank, fails)
    return len(ranks), fails, {"family_sizes": {str(k): len(v) for k, v in fam.items()}}


def _check_edge_nonbipartite(b, ctx):
    V = b["max_vertices"]
    ranks = _edge_ranks((("two_connected", True), ("nonbipartite", True), ("occ", True)), V, ctx)
    fam = {1: {}, 2: {}}
    for rank, label, G in _glued_members(V):
        fam[rank].setdefault(canonical_id(G), label)
    fails = []
    for rank in (1, 2):
        inst = {cid: G for cid, (G, r) in ranks.items() if r == rank}
        _compare_sets(inst, fam[rank], rank, fails)
    return len(ranks), fails, {"family_sizes": {str(k): len(v) for k, v in fam.items()}}


def _check_rank_one(b, ctx):
    E, V = b["max_elements"], b["max_vertices"]
    cat = _order_catalogue(["Pi1"], max(E, V))
    fails = []
    count = 0
    for kind, nmax in (("order", E), ("stable", V), ("edge", V)):
        for rec in classify(kind, nmax, rank_filter=1, jobs=ctx.jobs, cache_dir=ctx.cache_dir):
            count += 1
            P = polytope_of(kind, record_object(rec))
            res = _guarded(lambda: _match(cat, P, ctx.budget), rec, fails)
            if res is not None and res[0] is None:
                fails.append(_ce(rec, "rank 1 core is not a Segre-type order polytope"))
    for s1, s2 in _compositions(E, 2, (1, 1)):
        count += 1
        Pi = poset_family("Pi1", (s1, s2))
        O = order_polytope(Pi)
        S = stable_set_polytope(comparability_graph(Pi))
        K = edge_polytope(graph_family("complete_bipartite", (s1 + 1, s2 + 1)))
        for name, Q in (("stable", S), ("edge", K)):
            w = _guarded(lambda: unimodular_equivalent(O, Q, ctx.budget), Pi, fails)
            if w is None:
                fails.append(_ce(Pi, f"{_label('Pi1', (s1, s2))} not equivalent to its {name} counterpart"))
    return count, fails, {}


def _check_edge_order(b, ctx):
    V = b["max_vertices"]
    fails = []
    count = 0
    for s1, s2, t1, t2 in _compositions(V - 2, 4, (1, 1, 1, 1)):
        count += 1
        label = _label("", (s1, s2, t1, t2))
        A = edge_polytope(graph_family("K_s1s2_t1t2", (s1 + 1, s2 + 1, t1, t2), strict=False))
        B = order_polytope(poset_family("Pi3", (s1, s2, t1, t2, 0)))
        C = edge_polytope(graph_family("K_1s1s2_t1t2", (s1 + 1, s2 + 1, t1 - 1, t2 - 1), strict=False))
        for x, y, what in ((A, B, "notched/order"), (C, B, "apex/order"), (A, C, "notched/apex")):
            w = _guarded(lambda: unimodular_equivalent(x, y, ctx.budget), label, fails)
            if w is None:
                fails.append(_ce(label, f"{what} pair not equivalent"))
    return count, fails, {}


def _order_fallback(ctx):
    def more(core):
        if core.dim > MAX_POSET_ELEMENTS:
            return []
        pool = _pool_order(core.dim, len(core.lattice_points), ctx)
        return [(cid, order_polytope(P)) for _, cid, P in pool]

    return more


def _check_rank_two_into_order(kind, b, ctx):
    V = b["max_vertices"]
    cat = _order_catalogue(["Pi1", "Pi2", "Pi3", "Pi4"], MAX_POSET_ELEMENTS)
    if kind == "stable":
        recs = classify("stable", V, rank_filter=2, jobs=ctx.jobs, cache_dir=ctx.cache_dir)
        items = [(rec, record_object(rec)) for rec in recs]
    else:
        ranks = _edge_ranks((("two_connected", True), ("occ", True)), V, ctx)
        items = [(G, G) for cid, (G, r) in sorted(ranks.items()) if r == 2]
    fails = []
    for where, obj in items:
        P = polytope_of(kind, obj)
        res = _guarded(lambda: _match(cat, P, ctx.budget, _order_fallback(ctx)), where, fails)
        if res is not None and res[0] is None:
            fails.append(_ce(where, "rank 2 core is not equivalent to any order polytope"))
    return len(items), fails, {}


def _check_order_into_stable_or_edge(b, ctx):
    E = b["max_elements"]
    cat = _Catalogue()
    for label, Pi in _poset_family_members(["Pi1", "Pi2", "Pi3"], E):
        cat.add("stable:" + label, stable_set_polytope(comparability_graph(Pi)))
    for s1, s2, t1, t2 in _compositions(E - 1, 4, (1, 1, 1, 1)):
        cat.add("edge:" + _label("bipartite_wedge", (s1, s2, t1, t2)),
                edge_polytope(graph_family("bipartite_wedge", (s1, s2, t1, t2))))

    def more(core):
        dim, npts = core.dim, len(core.lattice_points)
        cands = []
        for kind, cid, G in _pool_stable(dim, npts, ctx) + _pool_edge(dim, npts, ctx):
            cands.append((f"{kind}:{cid}", polytope_of(kind, G)))
        return cands

    fails = []
    count = 0
    for rec in classify("order", E, rank_filter=2, jobs=ctx.jobs, cache_dir=ctx.cache_dir):
        count += 1
        P = order_polytope(record_object(rec))
        res = _guarded(lambda: _match(cat, P, ctx.budget, more), rec, fails)
        if res is not None and res[0] is None:
            fails.append(_ce(rec, "rank 2 core is neither a stable set nor an edge polytope"))
    return count, fails, {}


def _witness_stable_g():
    return comparability_graph(poset_family("Pi2", (1, 1, 1, 2)))


def _check_stable_not_edge(b, ctx):
    G = _witness_stable_g()
    target = stable_set_polytope(G)
    fails = []
    rank = class_group(target, assume_idp=True).free_rank
    if rank != 2:
        fails.append(_ce(G, f"witness has rank {rank}, expected 2"))
    dim, npts = target.dim, len(target.lattice_points)
    stated = _pool("edge", [7], (("bipartite", True), ("edge_count", 12), ("no_isolated", True)), ctx)
    stated += _pool("edge", [6], (("nonbipartite", True), ("edge_count", 12), ("no_isolated", True),
                                ("max_nonbipartite_blocks", 1)), ctx)
    derived = _pool_edge(dim, npts, ctx)
    count, f2, info = _pool_check(target, {"stated": stated, "derived": derived}, ctx)
    info.update({"target_dim": dim, "target_points": npts})
    return count, fails + f2, info


def _check_edge_not_stable(b, ctx):
    H = graph_family("h_graph")
    target = edge_polytope(H)
    fails = []
    rank = class_group(target, assume_idp=True).free_rank
    if rank != 2:
        fails.append(_ce(H, f"witness has rank {rank}, expected 2"))
    dim, npts = target.dim, len(target.lattice_points)
    stated = _pool("stable", [5], (("independent_sets", 8),), ctx)
    derived = _pool_stable(dim, npts, ctx)
    count, f2, info = _pool_check(target, {"stated": stated, "derived": derived}, ctx)
    info.update({"target_dim": dim, "target_points": npts})
    return count, fails + f2, info


def _rank_three_witnesses():
    Pi = X_SHAPE.disjoint_union(Poset(1))
    return {
        "order": (Pi, order_polytope(Pi)),
        "stable": (graph_family("gamma"), stable_set_polytope(graph_family("gamma"))),
        "edge": (graph_family("complete_multipartite", (2, 2, 2)),
                 edge_polytope(graph_family("complete_multipartite", (2, 2, 2)))),
    }


def _check_rank_three(b, ctx):
    wit = _rank_three_witnesses()
    fails = []
    details = {}
    count = 0
    for kind, (obj, P) in wit.items():
        g = class_group(P, assume_idp=True)
        details[f"{kind}_group"] = str(g)
        if g != AbelianGroup(3):
            fails.append(_ce(obj, f"{kind} witness has class group {g}, expected Z^3"))
    big_edge = (
        _pool("edge", [8], (("bipartite", True), ("no_isolated", True)), ctx)
        + _pool("edge", [7], (("nonbipartite", True), ("no_isolated", True), ("max_nonbipartite_blocks", 1)), ctx)
    )
    for kind, (obj, P) in wit.items():
        dim, npts = P.dim, len(P.lattice_points)
        for other in ("order", "stable", "edge"):
            if other == kind:
                continue
            if other == "order":
                pools = {"stated": _pool_order(dim, npts, ctx), "derived": _pool_order(dim, npts, ctx)}
            elif other == "stable":
                stated = (_pool("stable", [6], (("nontrivial_independent_sets", 4),), ctx)
                         if kind == "order" else _pool_stable(dim, npts, ctx))
                pools = {"stated": stated, "derived": _pool_stable(dim, npts, ctx)}
            else:
                pools = {"stated": big_edge, "derived": _pool_edge(dim, npts, ctx)}
            c, f, info = _pool_check(P, pools, ctx)
            count += c
            fails.extend(f)
            details[f"{kind}_not_{other}"] = info
    return count, fails, details


# ----- property suites


def _simple_cycles(G: SimpleGraph):
    """Each simple cycle once, as a vertex list starting at its smallest vertex."""
    out = []
    for s in range(1, G.n + 1):
        stack = [(s, [s])]
        while stack:
            v, path = stack.pop()
            for w in G.neighbors(v):
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    out.append(path[:])
                elif w > s and w not in path:
                    stack.append((w, path + [w]))
    return out


def _rotate(cycle, v):
    k = cycle.index(v)
    return cycle[k:] + cycle[:k]


def _cycle_edges(cycle):
    return [frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))]


def _alternating(columns, edges, coeff=1):
    out = None
    for i, e in enumerate(edges, start=1):
        sign = coeff if i % 2 == 0 else -coeff
        col = columns[e]
        out = [sign * x for x in col] if out is None else [a + sign * x for a, x in zip(out, col)]
    return out


def _paths_between(G, a, b, avoid):
    """Simple paths from a to b whose interior avoids ``avoid``."""
    out = []
    stack = [(a, [a])]
    while stack:
        v, path = stack.pop()
        for w in G.neighbors(v):
            if w == b:
                out.append(path + [w])
            elif w not in path and w not in avoid:
                stack.append((w, path + [w]))
    return out


def column_relations(G: SimpleGraph, limit: int = 400) -> tuple:
    """Check the linear relations among divisor-matrix columns coming from even
    cycles and from pairs of odd cycles.  Returns (relations checked, failures)."""
    P = edge_polytope(G)
    M = divisor_matrix(P)
    if not M.entries:
        return 0, []
    columns = {}
    for k, c in enumerate(M.cols):
        amb = P.reduction.lift(c)
        e = frozenset(i + 1 for i, x in enumerate(amb) if x)
        columns[e] = [row[k] for row in M.entries]
    cycles = _simple_cycles(G)
    even = [c for c in cycles if len(c) % 2 == 0]
    odd = [c for c in cycles if len(c) % 2 == 1]
    checked = 0
    bad = []

    def test(vec, what):
        nonlocal checked
        checked += 1
        if any(vec):
            bad.append(what)

    for c in even[:limit]:
        test(_alternating(columns, _cycle_edges(c)), ("even", c))
    pairs = 0
    for c1, c2 in combinations(odd, 2):
        if pairs >= limit:
            break
        common = set(c1) & set(c2)
        if len(common) == 1:
            v = common.pop()
            a = _alternating(columns, _cycle_edges(_rotate(c1, v)))
            b2 = _alternating(columns, _cycle_edges(_rotate(c2, v)))
            test([x - y for x, y in zip(a, b2)], ("shared vertex", c1, c2))
            pairs += 1
        elif not common:
            for v in c1:
                for w in c2:
                    for path in _paths_between(G, v, w, set(c1) | set(c2)):
                        m = len(path) - 1
                        a = _alternating(columns, _cycle_edges(_rotate(c1, v)))
                        b2 = _alternating(columns, _cycle_edges(_rotate(c2, w)))
                        f = _alternating(columns, [frozenset(p) for p in zip(path, path[1:])], 2)
                        sgn = -1 if m % 2 == 0 else 1
                        test([x + sgn * y - z for x, y, z in zip(a, b2, f)], ("joined", c1, c2, path))
                        pairs += 1
    return checked, bad


def _check_column_relations(b, ctx):
    fails = []
    relations = 0
    graphs = _objects_upto("graphs", b["max_vertices"], (("connected", True), ("occ", True)), 3, ctx.cache_dir)
    for _, G in graphs:
        c, bad = column_relations(G)
        relations += c
        for what in bad[:3]:
            fails.append(_ce(G, "column relation does not vanish", relation=str(what)))
    return len(graphs), fails, {"relations_checked": relations}


def _block_sum(G: SimpleGraph) -> AbelianGroup:
    total = AbelianGroup(0)
    for comp in G.components():
        H = G.induced(comp)
        for blk in blocks(H).blocks:
            B = H.induced(blk)
            if len(B.edges) > 1:
                total = total + class_group(edge_polytope(B), assume_idp=True)
    return total


def _check_block_additivity(b, ctx):
    fails = []
    count = 0
    filters = (("no_isolated", True), ("occ", True))
    for _, G in _objects_upto("graphs", b["max_graph_vertices"], filters, 2, ctx.cache_dir):
        comps = G.components()
        if len(comps) == 1 and not blocks(G).cut_vertices:
            continue
        if any(_count_nonbipartite_blocks(G.induced(c)) > 1 for c in comps):
            continue
        count += 1
        whole = class_group(edge_polytope(G), assume_idp=True)
        parts = _block_sum(G)
        if whole != parts:
            fails.append(_ce(G, f"class group {whole} differs from block sum {parts}"))
    return count, fails, {}


def _check_two_odd_blocks(b, ctx):
    fails = []
    count = 0
    for rec in classify("edge", b["max_vertices"], jobs=ctx.jobs, cache_dir=ctx.cache_dir):
        G = record_object(rec)
        if _count_nonbipartite_blocks(G) >= 2:
            count += 1
            if rec.rank < 4:
                fails.append(_ce(rec, f"rank {rec.rank} < 4 with two non-bipartite blocks"))
    return count, fails, {}


# --------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class Check:
    name: str
    description: str
    run: object
    bounds: dict


def _b(**kw):
    return kw


CHECKS = {
    c.name: c
    for c in [
        Check("torsion-free", "class groups are torsion free and match the shortcut formulas",
              _check_torsion_free, _b(max_elements=6, max_vertices=7)),
        Check("rank-formula", "free rank equals facets - (dim + 1)",
              _check_rank_formula, _b(max_elements=6, max_vertices=7)),
        Check("facet-systems", "hull facets equal the clique and vertex/special-set systems",
              _check_facet_systems, _b(max_vertices=7)),
        Check("order-chain-equivalence", "order and chain polytopes are equivalent iff no X-shape",
              _check_order_chain_equivalence, _b(max_elements=6)),
        Check("order-small-rank", "rank 1 and 2 order polytopes are Pi1..Pi4 up to pyramids",
              _check_order_small_rank, _b(max_elements=6)),
        Check("order-chain-families", "Pi1..Pi3 order polytopes equal their chain polytopes",
              _check_order_chain_families, _b(max_elements=6)),
        Check("stable-small-rank", "rank 1 and 2 stable set polytopes are Pi1..Pi3 order polytopes",
              _check_stable_small_rank, _b(max_vertices=7)),
        Check("edge-bipartite-small-rank", "2-connected bipartite graphs of rank 1 and 2",
              _check_edge_bipartite, _b(max_vertices=7)),
        Check("edge-nonbipartite-small-rank", "2-connected non-bipartite graphs of rank 1 and 2",
              _check_edge_nonbipartite, _b(max_vertices=7)),
        Check("rank-one-coincidence", "rank 1 cores of all three kinds are the same polytopes",
              _check_rank_one, _b(max_elements=6, max_vertices=6)),
        Check("edge-order-equivalences", "notched, apex and Pi3 order polytopes coincide",
              _check_edge_order, _b(max_vertices=7)),
        Check("stable-rank-two-in-order", "rank 2 stable set polytopes are order polytopes",
              lambda b, ctx: _check_rank_two_into_order("stable", b, ctx), _b(max_vertices=7)),
        Check("edge-rank-two-in-order", "rank 2 edge polytopes of 2-connected graphs are order polytopes",
              lambda b, ctx: _check_rank_two_into_order("edge", b, ctx), _b(max_vertices=7)),
        Check("order-rank-two-in-stable-or-edge", "rank 2 order polytopes are stable set or edge polytopes",
              _check_order_into_stable_or_edge, _b(max_elements=6)),
        Check("stable-witness-not-edge", "a rank 2 stable set polytope that is no edge polytope",
              _check_stable_not_edge, _b()),
        Check("edge-witness-not-stable", "a rank 2 edge polytope that is no stable set polytope",
              _check_edge_not_stable, _b()),
        Check("rank-three-witnesses", "rank 3 witnesses separating the three kinds",
              _check_rank_three, _b()),
        Check("divisor-column-relations", "cycle relations among divisor matrix columns",
              _check_column_relations, _b(max_vertices=7)),
        Check("block-additivity", "class groups add over blocks and components",
              _check_block_additivity, _b(max_graph_vertices=8)),
        Check("two-odd-blocks-rank-bound", "two non-bipartite blocks force rank at least 4",
              _check_two_odd_blocks, _b(max_vertices=7)),
    ]
}

GROUPS = {
    "rank-two-relations": [
        "stable-rank-two-in-order", "edge-rank-two-in-order",
        "order-rank-two-in-stable-or-edge", "stable-witness-not-edge", "edge-witness-not-stable",
    ],
}


def _check_bounds(bounds):
    for key, val in bounds.items():
        limit = MAX_POSET_ELEMENTS if key == "max_elements" else MAX_GRAPH_VERTICES
        if val > limit:
            raise TooLarge(f"{key}={val} exceeds the enumeration limit {limit}")


def verify(theorem_id: str, bounds=None, jobs: int = 1, budget: int = DEFAULT_BUDGET, cache_dir=None):
    """Run one registered check (or a group of them) and return a VerifyReport."""
    if theorem_id in GROUPS:
        reports = [verify(t, bounds, jobs, budget, cache_dir) for t in GROUPS[theorem_id]]
        merged = VerifyReport(theorem_id)
        for r in reports:
            merged.instance_count += r.instance_count
            merged.counterexamples.extend(dict(c, check=r.theorem_id) for c in r.counterexamples)
            merged.wall_time += r.wall_time
            merged.details[r.theorem_id] = r.details
        return merged
    if theorem_id not in CHECKS:
        raise BadParams(f"unknown check {theorem_id!r}")
    check = CHECKS[theorem_id]
    b = dict(check.bounds)
    for key, val in (bounds or {}).items():
        if key in b and val is not None:
            b[key] = int(val)
    _check_bounds(b)
    ctx = _Context(jobs=jobs, budget=budget, cache_dir=cache_dir)
    start = time.perf_counter()
    count, fails, details = check.run(b, ctx)
    details = dict(details, bounds=b)
    return VerifyReport(theorem_id, count, fails, time.perf_counter() - start, details)
