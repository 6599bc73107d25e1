"""Command-line front end.

Objects are given either as a JSON document on disk or as a family spec

    family:<domain>:<name>[:<p1>,<p2>,...]

where the domain is ``poset`` or ``graph`` for combinatorial objects and
``order``, ``chain``, ``stable`` or ``edge`` for the associated polytopes.
``K_a,b[,c...]`` is shorthand for a complete (multi)partite graph.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 proven
inequivalence, 4 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from dataclasses import dataclass
from pathlib import Path

from . import census
from .classgroup import class_group_details
from .equivalence import DEFAULT_BUDGET, fingerprint, unimodular_equivalent, witness_to_json
from .errors import SearchBudgetExceeded, ToriclassError
from .graph import (
    SimpleGraph,
    graph_family,
    graph_from_json,
    graph_polytope,
    graph_to_dot,
    graph_to_json,
)
from .polytope import LatticePolytope, is_idp, polytope_from_json, polytope_to_json
from .poset import (
    X_SHAPE,
    Poset,
    comparability_graph,
    poset_family,
    poset_from_json,
    poset_polytope,
    poset_to_dot,
    poset_to_json,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_INEQUIVALENT = 3
EXIT_BUDGET = 4

OBJECT_DOMAINS = ("poset", "graph")
POLYTOPE_DOMAINS = ("order", "chain", "stable", "edge")


class InputError(ToriclassError):
    pass


# --------------------------------------------------------------------------
# family specs


@dataclass(frozen=True)
class FamilySpec:
    domain: str
    name: str
    params: tuple


class _Parser:
    """Recursive descent over ``family:<domain>:<name>[:<params>]``."""

    _word = re.compile(r"[A-Za-z][A-Za-z0-9_\-]*")
    _int = re.compile(r"\d+")

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, what: str):
        raise InputError(f"bad family spec {self.text!r}: expected {what} at column {self.pos + 1}")

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.fail(repr(ch))
        self.pos += 1

    def word(self, what: str) -> str:
        m = self._word.match(self.text, self.pos)
        if not m:
            self.fail(what)
        self.pos = m.end()
        return m.group()

    def param(self):
        m = self._int.match(self.text, self.pos)
        if m:
            self.pos = m.end()
            return int(m.group())
        m = self._word.match(self.text, self.pos)
        if m:
            self.pos = m.end()
            return m.group()
        self.fail("an integer or a name")

    def params(self) -> list:
        out = [self.param()]
        while self.peek() == ",":
            self.pos += 1
            out.append(self.param())
        return out

    def spec(self) -> FamilySpec:
        if self.word("'family'") != "family":
            self.pos = 0
            self.fail("'family'")
        self.expect(":")
        start = self.pos
        domain = self.word("a domain")
        if domain not in OBJECT_DOMAINS + POLYTOPE_DOMAINS:
            self.pos = start
            self.fail("one of " + ", ".join(OBJECT_DOMAINS + POLYTOPE_DOMAINS))
        self.expect(":")
        name = self.word("a family name")
        params = []
        short = re.fullmatch(r"K_(\d+)", name)
        if short and self.peek() == ",":
            # K_a,b[,c...]
            self.pos += 1
            params = [int(short.group(1))] + self.params()
            name = "K"
        elif self.peek() == ":":
            self.pos += 1
            params = self.params()
        if self.pos != len(self.text):
            self.fail("end of spec")
        return FamilySpec(domain, name, tuple(params))


def parse_family(text: str) -> FamilySpec:
    return _Parser(text).spec()


def _poset_from_spec(name, params) -> Poset:
    if name in ("Pi1", "Pi2", "Pi3", "Pi4"):
        return poset_family(name, params)
    if name == "x_shape":
        return X_SHAPE
    if name == "x_shape_plus_point":
        return X_SHAPE.disjoint_union(Poset(1))
    if name in ("chain", "antichain"):
        if len(params) != 1 or not isinstance(params[0], int):
            raise InputError(f"{name} takes one size parameter")
        n = params[0]
        if name == "antichain":
            return Poset(n)
        return Poset(n, frozenset((i, i + 1) for i in range(1, n)))
    raise InputError(f"unknown poset family {name!r}")


def _graph_from_spec(name, params) -> SimpleGraph:
    if name == "K":
        kind = "complete_bipartite" if len(params) == 2 else "complete_multipartite"
        return graph_family(kind, params)
    if name == "comparability":
        if not params or not isinstance(params[0], str):
            raise InputError("comparability needs a poset family name first")
        return comparability_graph(_poset_from_spec(params[0], params[1:]))
    return graph_family(name, params)


def build_family(spec: FamilySpec):
    """The poset, graph or polytope described by a family spec."""
    if spec.domain in ("poset", "order", "chain"):
        obj = _poset_from_spec(spec.name, spec.params)
    else:
        obj = _graph_from_spec(spec.name, spec.params)
    if spec.domain in OBJECT_DOMAINS:
        return obj
    if spec.domain in ("order", "chain"):
        return poset_polytope(obj, spec.domain)
    return graph_polytope(obj, spec.domain)


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def load_object(ref: str):
    """A Poset, SimpleGraph or LatticePolytope from a family spec or JSON file."""
    if ref.startswith("family:"):
        return build_family(parse_family(ref))
    doc = _load_json(ref)
    if not isinstance(doc, dict):
        raise InputError(f"{ref}: expected a JSON object")
    try:
        if "generators" in doc:
            return polytope_from_json(doc)
        if "edges" in doc:
            return graph_from_json(doc)
        if "covers" in doc:
            return poset_from_json(doc)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{ref}: malformed document ({exc})") from None
    raise InputError(f"{ref}: not a poset, graph or polytope document")


def as_polytope(obj, kind: str | None) -> LatticePolytope:
    if isinstance(obj, LatticePolytope):
        return obj
    if isinstance(obj, Poset):
        return poset_polytope(obj, kind or "order")
    if kind is None:
        raise InputError("a graph needs --kind stable or --kind edge")
    return graph_polytope(obj, kind)


# --------------------------------------------------------------------------
# output


def _emit(args, text: str):
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _json(doc) -> str:
    return json.dumps(doc, indent=2)


def _scramble(P: LatticePolytope, seed: int) -> LatticePolytope:
    """Image of P under a seeded random unimodular map and translation."""
    rng = random.Random(seed)
    d = P.ambient_dim
    A = [[int(i == j) for j in range(d)] for i in range(d)]
    for _ in range(3 * d):
        i, j = rng.sample(range(d), 2) if d > 1 else (0, 0)
        if i == j:
            break
        c = rng.choice((-1, 1))
        A[i] = [a + c * b for a, b in zip(A[i], A[j])]
    t = [rng.randint(-3, 3) for _ in range(d)]
    gens = [tuple(sum(a * x for a, x in zip(row, g)) + s for row, s in zip(A, t)) for g in P.generators]
    return LatticePolytope(gens, d)


# --------------------------------------------------------------------------
# subcommands


def cmd_poset(args) -> int:
    P = load_object(args.ref)
    if not isinstance(P, Poset):
        raise InputError("expected a poset")
    if args.format == "dot":
        _emit(args, poset_to_dot(P, hat=args.hat))
    elif args.format == "text":
        lines = [
            f"size: {P.size}",
            "covers: " + " ".join(f"{i}<{j}" for i, j in sorted(P.covers)),
            f"ideals: {len(P.ideals())}",
            f"minimal: {P.minimal_elements()}",
            f"maximal: {P.maximal_elements()}",
        ]
        _emit(args, "\n".join(lines))
    else:
        _emit(args, _json(poset_to_json(P)))
    return EXIT_OK


def cmd_graph(args) -> int:
    G = load_object(args.ref)
    if not isinstance(G, SimpleGraph):
        raise InputError("expected a graph")
    if args.format == "dot":
        parts = G.bipartition() if G.is_bipartite() and G.edges else None
        _emit(args, graph_to_dot(G, parts))
    elif args.format == "text":
        lines = [
            f"vertices: {G.n}",
            "edges: " + " ".join(f"{i}-{j}" for i, j in G.sorted_edges()),
            f"connected: {G.is_connected()}",
            f"bipartite: {G.is_bipartite()}",
        ]
        _emit(args, "\n".join(lines))
    else:
        _emit(args, _json(graph_to_json(G)))
    return EXIT_OK


def cmd_polytope(args) -> int:
    P = as_polytope(load_object(args.ref), args.kind)
    if args.scramble:
        P = _scramble(P, args.seed)
    if args.format == "dot":
        raise InputError("DOT output is available for posets and graphs only")
    cert = is_idp(P, args.degree_bound) if args.idp else None
    if args.format == "text":
        lines = [
            f"ambient dimension: {P.ambient_dim}",
            f"dimension: {P.dim}",
            f"vertices: {len(P.vertices)}",
            f"lattice points: {len(P.lattice_points)}",
            f"facets: {len(P.facets) if P.dim else 0}",
        ]
        if cert is not None:
            lines.append(f"IDP: {cert.verdict}")
        _emit(args, "\n".join(lines))
    else:
        doc = polytope_to_json(P)
        if cert is not None:
            doc["idp"] = {"verdict": cert.verdict, "witness": cert.witness and list(cert.witness),
                          "degree": cert.degree}
        _emit(args, _json(doc))
    return EXIT_OK


def _classgroup_source(args):
    refs = [r for r in (args.ref, args.graph_family, args.poset_family) if r]
    if len(refs) != 1:
        raise InputError("give exactly one of REF, --graph-family or --poset-family")
    if args.graph_family:
        name, _, params = args.graph_family.partition(":")
        return _graph_from_spec(name, _Parser(params).params() if params else [])
    if args.poset_family:
        name, _, params = args.poset_family.partition(":")
        return _poset_from_spec(name, _Parser(params).params() if params else [])
    return load_object(args.ref)


def cmd_classgroup(args) -> int:
    P = as_polytope(_classgroup_source(args), args.kind)
    if not args.assume_idp and P.dim > 0:
        cert = is_idp(P, args.degree_bound)
        if not cert.is_idp:
            raise InputError(f"polytope is not known to be IDP (verdict {cert.verdict})")
    info = class_group_details(P, assume_idp=True)
    g = info["group"]
    if args.format == "text":
        _emit(args, str(g))
    elif args.format == "dot":
        raise InputError("DOT output is available for posets and graphs only")
    else:
        _emit(args, json.dumps({
            "free_rank": g.free_rank,
            "torsion": list(g.torsion),
            "psi_size": info["psi_size"],
            "matrix_rank": info["matrix_rank"],
        }))
    return EXIT_OK


def cmd_equiv(args) -> int:
    refs = list(args.refs)
    a = args.a or (refs.pop(0) if refs else None)
    b = args.b or (refs.pop(0) if refs else None)
    if a is None or b is None or refs:
        raise InputError("equiv needs two polytopes (--a and --b, or two positional refs)")
    P = as_polytope(load_object(a), args.kind)
    Q = as_polytope(load_object(b), args.kind)
    try:
        w = unimodular_equivalent(P, Q, args.budget)
    except SearchBudgetExceeded as exc:
        print(f"search budget exceeded after {exc.nodes} nodes", file=sys.stderr)
        return EXIT_BUDGET
    if w is None:
        if args.format == "text":
            _emit(args, "not equivalent")
        else:
            _emit(args, json.dumps({"equivalent": False,
                                    "fingerprints_differ": fingerprint(P) != fingerprint(Q)}))
        return EXIT_INEQUIVALENT
    if args.format == "text":
        rows = "\n".join("  " + " ".join(f"{x:3d}" for x in row) for row in w.matrix)
        _emit(args, f"equivalent: x -> A x + v\nA =\n{rows}\nv = {list(w.translation)}")
    else:
        _emit(args, json.dumps(witness_to_json(w)))
    return EXIT_OK


def cmd_census(args) -> int:
    kind = args.kind
    if kind in ("graphs", "posets"):
        limit = args.max_vertices if kind == "graphs" else args.max_elements
        n = args.n if args.n is not None else limit
        if n is None:
            raise InputError("give --n, --max-vertices or --max-elements")
        sizes = [n] if args.n is not None else range(0, n + 1)
        rows = []
        for k in sizes:
            rows.extend(census.enumerate_objects(kind, k, args.filter, args.cache))
        if args.format == "text":
            _emit(args, "\n".join(cid for cid, _ in rows) + f"\n# {len(rows)} classes")
        else:
            doc = [{"id": cid, "object": census._doc(obj)} for cid, obj in rows]
            _emit(args, _json(doc))
        return EXIT_OK
    nmax = args.max_elements if kind == "order" else args.max_vertices
    if nmax is None:
        nmax = 6 if kind == "order" else 7
    recs = census.classify(kind, nmax, args.rank, args.jobs, args.cache)
    if args.format == "text":
        lines = [
            f"{r.source_id} n={r.n} dim={r.dim} rank={r.rank}"
            + (f" torsion={list(r.torsion)}" if r.torsion else "")
            + (f" pyramid^{r.apex_count}" if r.apex_count else "")
            for r in recs
        ]
        _emit(args, "\n".join(lines + [f"# {len(recs)} records"]))
    else:
        _emit(args, "\n".join(json.dumps(r.to_json()) for r in recs))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.list:
        lines = [f"{n:34s} {census.CHECKS[n].description}" for n in census.CHECKS]
        lines += [f"{g:34s} group: {', '.join(m)}" for g, m in census.GROUPS.items()]
        _emit(args, "\n".join(lines))
        return EXIT_OK
    if not args.check:
        raise InputError("name a check, or use --list")
    bounds = {"max_vertices": args.max_vertices, "max_elements": args.max_elements,
              "max_graph_vertices": args.max_vertices}
    names = list(census.CHECKS) if args.check == "all" else [args.check]
    reports = [census.verify(n, bounds, args.jobs, args.budget, args.cache) for n in names]
    for r in reports:
        print(r.summary(), file=sys.stderr)
    if args.format == "text":
        _emit(args, "\n".join(r.summary() for r in reports))
    else:
        docs = [r.to_json(timings=args.timings) for r in reports]
        _emit(args, _json(docs[0] if len(docs) == 1 else docs))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


# --------------------------------------------------------------------------
# argument parsing


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("json", "text", "dot"), default="json")
    p.add_argument("--out", help="write the result to this file instead of stdout")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--cache", help="cache directory (default: $TORICLASS_CACHE, else none)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="equivalence search node budget")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized operations")
    p.add_argument("--degree-bound", type=int, default=None, help="highest degree checked for IDP")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="toriclass", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poset", parents=[common], help="show a poset")
    p.add_argument("ref")
    p.add_argument("--hat", action="store_true", help="add bottom and top to the DOT diagram")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("graph", parents=[common], help="show a graph")
    p.add_argument("ref")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("polytope", parents=[common], help="vertices, facets and lattice points")
    p.add_argument("ref")
    p.add_argument("--kind", choices=POLYTOPE_DOMAINS)
    p.add_argument("--idp", action="store_true", help="also run the IDP check")
    p.add_argument("--scramble", action="store_true", help="apply a random unimodular map (see --seed)")
    p.set_defaults(func=cmd_polytope)

    p = sub.add_parser("classgroup", parents=[common], help="divisor class group of the toric ring")
    p.add_argument("ref", nargs="?")
    p.add_argument("--graph-family", help="NAME[:params], e.g. gamma or complete_bipartite:2,3")
    p.add_argument("--poset-family", help="NAME[:params], e.g. Pi2:1,1,1,2")
    p.add_argument("--kind", choices=POLYTOPE_DOMAINS)
    p.add_argument("--assume-idp", action="store_true", help="skip the IDP check")
    p.set_defaults(func=cmd_classgroup)

    p = sub.add_parser("equiv", parents=[common], help="unimodular equivalence with witness")
    p.add_argument("refs", nargs="*")
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--kind", choices=POLYTOPE_DOMAINS, help="polytope kind for poset/graph documents")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("census", parents=[common], help="enumerate objects or classify polytopes")
    p.add_argument("--kind", required=True, choices=("graphs", "posets", "order", "stable", "edge"))
    p.add_argument("--n", type=int, help="enumerate exactly this size")
    p.add_argument("--max-vertices", type=int)
    p.add_argument("--max-elements", type=int)
    p.add_argument("--rank", type=int, help="keep records of this class group rank")
    p.add_argument("--filter", action="append", default=[], help="e.g. bipartite or edge_count=12")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", parents=[common], help="run a registered check")
    p.add_argument("check", nargs="?", help="check name, group name or 'all'")
    p.add_argument("--list", action="store_true")
    p.add_argument("--max-vertices", type=int)
    p.add_argument("--max-elements", type=int)
    p.add_argument("--timings", action="store_true", help="include wall times in the JSON report")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SearchBudgetExceeded as exc:
        print(f"toriclass: search budget exceeded after {exc.nodes} nodes", file=sys.stderr)
        return EXIT_BUDGET
    except (ToriclassError, ValueError) as exc:
        print(f"toriclass: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
