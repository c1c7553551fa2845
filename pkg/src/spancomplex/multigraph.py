"""Finite connected multigraphs with parallel edges.

Vertices and edge ids are opaque strings.  Edges are unordered pairs of
distinct vertices; several edges may join the same pair (a parallel class).
A multigraph is *uni-cyclic* when its class-level quotient graph (one node
per vertex, one arc per parallel class) contains exactly one cycle, which
then has length >= 3.  ``recognize_unicyclic`` produces the canonical
layout used by every closed-form computation in this package.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import (
    DisconnectedGraphError,
    DuplicateEdgeIdError,
    EmptyGraphError,
    GraphValidationError,
    LoopEdgeError,
    NotUnicyclicError,
    SchemaError,
    UnknownEndpointError,
)

Edge = tuple[str, tuple[str, str]]


@dataclass(frozen=True)
class Multigraph:
    """A validated, connected, loop-free multigraph.

    ``vertices`` and ``edges`` keep their input order; that order drives
    every deterministic tie-break downstream.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def edge_ids(self) -> tuple[str, ...]:
        return tuple(eid for eid, _ in self.edges)

    def endpoints(self, edge_id: str) -> tuple[str, str]:
        for eid, ends in self.edges:
            if eid == edge_id:
                return ends
        raise KeyError(edge_id)

    def to_json_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"id": eid, "ends": list(ends)} for eid, ends in self.edges],
        }

    def fingerprint(self) -> str:
        """Short content hash, stable across runs; used in reports."""
        import hashlib

        blob = json.dumps(self.to_json_dict(), sort_keys=True).encode("utf-8")
        return hashlib.sha256(blob).hexdigest()[:12]


@dataclass(frozen=True)
class ParallelClass:
    """All edges sharing one unordered endpoint pair."""

    endpoints: tuple[str, str]  # sorted pair
    members: tuple[str, ...]  # edge ids in input order

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def is_multiple(self) -> bool:
        return self.size >= 2

    @property
    def min_member(self) -> str:
        return min(self.members)


@dataclass(frozen=True)
class UnicyclicLayout:
    """Canonical layout of a uni-cyclic multigraph.

    ``cycle_classes`` holds the m classes of the unique quotient cycle in
    position order: the r' multiple classes first (positions 1..r', in
    traversal order), then the m-r' single classes (positions r'+1..m, in
    traversal order).  ``outside_multiple_classes`` occupy positions
    m+1..m+r''; ``outside_single_edges`` are the remaining v single edges.

    Scalars: n total edges, alpha the total multiplicity on the cycle's
    multiple classes, beta the total multiplicity outside, and
    n = alpha + (m - r') + beta + v always holds.
    """

    graph: Multigraph = field(repr=False)
    cycle_classes: tuple[ParallelClass, ...]
    outside_multiple_classes: tuple[ParallelClass, ...]
    outside_single_edges: tuple[str, ...]
    n: int
    m: int
    r_prime: int
    r_dprime: int
    r: int
    alpha: int
    beta: int
    v: int

    def __post_init__(self):
        if self.n != self.alpha + (self.m - self.r_prime) + self.beta + self.v:
            raise AssertionError("layout scalars are inconsistent")

    @property
    def multiple_cycle_classes(self) -> tuple[ParallelClass, ...]:
        return self.cycle_classes[: self.r_prime]

    @property
    def single_cycle_classes(self) -> tuple[ParallelClass, ...]:
        return self.cycle_classes[self.r_prime :]

    def cycle_class_sizes(self) -> tuple[int, ...]:
        return tuple(c.size for c in self.cycle_classes)

    def canonical_labels(self) -> dict[str, str]:
        """Map every edge id to its positional label.

        Edges of the class at position h get ``e_{h,k}`` with k the member
        index (both 1-based); the v single edges outside the cycle get
        ``e_{a}`` with a = 1..v.
        """
        labels: dict[str, str] = {}
        positioned = self.cycle_classes + self.outside_multiple_classes
        for h, cls in enumerate(positioned, start=1):
            for k, eid in enumerate(cls.members, start=1):
                labels[eid] = f"e_{{{h},{k}}}"
        for a, eid in enumerate(self.outside_single_edges, start=1):
            labels[eid] = f"e_{{{a}}}"
        return labels

    def edge_order(self) -> tuple[str, ...]:
        """All edge ids in canonical label order."""
        out: list[str] = []
        for cls in self.cycle_classes + self.outside_multiple_classes:
            out.extend(cls.members)
        out.extend(self.outside_single_edges)
        return tuple(out)


def build_multigraph(vertices, edges) -> Multigraph:
    """Validate raw vertex/edge lists and return a ``Multigraph``.

    Raises a distinct error per defect: ``EmptyGraphError``,
    ``DuplicateEdgeIdError``, ``UnknownEndpointError``, ``LoopEdgeError``
    or ``DisconnectedGraphError``.
    """
    vertices = tuple(str(v) for v in vertices)
    if not vertices:
        raise EmptyGraphError("vertex list is empty")
    if not edges:
        raise EmptyGraphError("edge list is empty; no spanning structure possible")
    if len(set(vertices)) != len(vertices):
        dup = next(v for i, v in enumerate(vertices) if v in vertices[:i])
        raise GraphValidationError(f"duplicate vertex identifier {dup!r}")

    vset = set(vertices)
    seen_ids: set[str] = set()
    norm: list[Edge] = []
    for eid, ends in edges:
        eid = str(eid)
        u, v = ends
        if eid in seen_ids:
            raise DuplicateEdgeIdError(f"duplicate edge id {eid!r}")
        seen_ids.add(eid)
        if u not in vset:
            raise UnknownEndpointError(f"edge {eid!r} names unknown vertex {u!r}")
        if v not in vset:
            raise UnknownEndpointError(f"edge {eid!r} names unknown vertex {v!r}")
        if u == v:
            raise LoopEdgeError(f"edge {eid!r} is a loop on vertex {u!r}")
        norm.append((eid, (u, v)))

    # connectivity from the first vertex
    adj: dict[str, set[str]] = {v: set() for v in vertices}
    for _, (u, v) in norm:
        adj[u].add(v)
        adj[v].add(u)
    seen = {vertices[0]}
    stack = [vertices[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(vertices):
        missing = next(v for v in vertices if v not in seen)
        raise DisconnectedGraphError(f"vertex {missing!r} is unreachable")

    return Multigraph(vertices=vertices, edges=tuple(norm))


def parallel_classes(g: Multigraph) -> list[ParallelClass]:
    """Partition the edges into parallel classes.

    Class order is order of first appearance; member order is input order.
    """
    order: list[tuple[str, str]] = []
    groups: dict[tuple[str, str], list[str]] = {}
    for eid, (u, v) in g.edges:
        key = (u, v) if u <= v else (v, u)
        if key not in groups:
            groups[key] = []
            order.append(key)
        groups[key].append(eid)
    return [ParallelClass(endpoints=k, members=tuple(groups[k])) for k in order]


def _quotient_cycle(g: Multigraph, classes: list[ParallelClass]) -> list[ParallelClass]:
    """Return the classes of the unique quotient cycle, in traversal order
    starting from an arbitrary cycle class.

    Raises ``NotUnicyclicError`` when the quotient is a tree or has more
    than one independent cycle.
    """
    n_nodes = g.n_vertices
    n_arcs = len(classes)
    if n_arcs == n_nodes - 1:
        raise NotUnicyclicError("quotient graph is a tree: no cycle of length >= 3")
    if n_arcs != n_nodes:
        raise NotUnicyclicError(
            f"quotient graph has {n_arcs - n_nodes + 1} independent cycles; expected 1"
        )

    # peel leaves of the quotient until only the cycle remains
    incident: dict[str, set[int]] = {v: set() for v in g.vertices}
    for idx, cls in enumerate(classes):
        u, v = cls.endpoints
        incident[u].add(idx)
        incident[v].add(idx)
    alive_nodes = set(g.vertices)
    leaves = [v for v in alive_nodes if len(incident[v]) == 1]
    while leaves:
        leaf = leaves.pop()
        alive_nodes.discard(leaf)
        (arc,) = incident[leaf]
        incident[leaf].clear()
        u, v = classes[arc].endpoints
        other = v if u == leaf else u
        incident[other].discard(arc)
        if other in alive_nodes and len(incident[other]) == 1:
            leaves.append(other)

    cycle_idx = sorted({i for v in alive_nodes for i in incident[v]})
    # walk the cycle; every surviving node has exactly two incident arcs
    start = cycle_idx[0]
    ordered = [start]
    u, cur_node = classes[start].endpoints
    while cur_node != u:
        nxt = next(i for i in incident[cur_node] if i != ordered[-1])
        ordered.append(nxt)
        a, b = classes[nxt].endpoints
        cur_node = b if a == cur_node else a
    return [classes[i] for i in ordered]


def recognize_unicyclic(g: Multigraph) -> UnicyclicLayout:
    """Recognize a uni-cyclic multigraph and fix its canonical labeling.

    Tie-breaks: the traversal starts at the cycle class whose smallest
    member edge id is lexicographically minimal, in the direction whose
    next class has the smaller minimal member id.  Multiple cycle classes
    take positions 1..r' in traversal order, single cycle classes
    r'+1..m; classes and single edges outside the cycle are ordered by
    their smallest member id.
    """
    classes = parallel_classes(g)
    cycle = _quotient_cycle(g, classes)
    m = len(cycle)

    # rotate to the canonical start and direction
    start_pos = min(range(m), key=lambda i: cycle[i].min_member)
    forward = cycle[start_pos:] + cycle[:start_pos]
    backward = [forward[0]] + list(reversed(forward[1:]))
    traversal = forward if forward[1].min_member < backward[1].min_member else backward

    cyc_multiple = [c for c in traversal if c.is_multiple]
    cyc_single = [c for c in traversal if not c.is_multiple]
    on_cycle = {c.endpoints for c in traversal}
    outside = [c for c in classes if c.endpoints not in on_cycle]
    out_multiple = sorted((c for c in outside if c.is_multiple), key=lambda c: c.min_member)
    out_single = sorted(c.members[0] for c in outside if not c.is_multiple)

    alpha = sum(c.size for c in cyc_multiple)
    beta = sum(c.size for c in out_multiple)
    r_prime = len(cyc_multiple)
    r_dprime = len(out_multiple)
    return UnicyclicLayout(
        graph=g,
        cycle_classes=tuple(cyc_multiple + cyc_single),
        outside_multiple_classes=tuple(out_multiple),
        outside_single_edges=tuple(out_single),
        n=g.n_edges,
        m=m,
        r_prime=r_prime,
        r_dprime=r_dprime,
        r=r_prime + r_dprime,
        alpha=alpha,
        beta=beta,
        v=len(out_single),
    )


def edge_endpoint_indices(g: Multigraph) -> tuple[list[int], list[int]]:
    """Endpoints of every edge as vertex indices, in edge input order."""
    v_index = {v: i for i, v in enumerate(g.vertices)}
    us = [v_index[u] for _, (u, _) in g.edges]
    vs = [v_index[w] for _, (_, w) in g.edges]
    return us, vs


def _reject_duplicate_keys(pairs):
    seen = set()
    for key, _ in pairs:
        if key in seen:
            raise SchemaError(f"duplicate key {key!r} in JSON object")
        seen.add(key)
    return dict(pairs)


def multigraph_from_json(text: str) -> Multigraph:
    """Parse the graph file format.

    Expected shape: ``{"vertices": ["a", ...], "edges": [{"id": "e1",
    "ends": ["a", "b"]}, ...]}``.  Array order is significant.  Schema
    violations raise ``SchemaError`` naming the offending field.
    """
    try:
        doc = json.loads(text, object_pairs_hook=_reject_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("top level must be a JSON object")
    for key in ("vertices", "edges"):
        if key not in doc:
            raise SchemaError(f"missing required key {key!r}")
    extra = set(doc) - {"vertices", "edges"}
    if extra:
        raise SchemaError(f"unexpected key {sorted(extra)[0]!r}")
    verts = doc["vertices"]
    if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
        raise SchemaError("'vertices' must be an array of strings")
    raw_edges = doc["edges"]
    if not isinstance(raw_edges, list):
        raise SchemaError("'edges' must be an array")
    edges = []
    for i, rec in enumerate(raw_edges):
        where = f"edges[{i}]"
        if not isinstance(rec, dict):
            raise SchemaError(f"{where} must be an object")
        if set(rec) != {"id", "ends"}:
            raise SchemaError(f"{where} must have exactly the keys 'id' and 'ends'")
        if not isinstance(rec["id"], str):
            raise SchemaError(f"{where}.id must be a string")
        ends = rec["ends"]
        if (
            not isinstance(ends, list)
            or len(ends) != 2
            or not all(isinstance(x, str) for x in ends)
        ):
            raise SchemaError(f"{where}.ends must be an array of two vertex names")
        edges.append((rec["id"], (ends[0], ends[1])))
    return build_multigraph(verts, edges)


def load_graph_file(path) -> Multigraph:
    with open(path, "r", encoding="utf-8") as fh:
        return multigraph_from_json(fh.read())
