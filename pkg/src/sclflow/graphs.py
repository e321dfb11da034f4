"""Multi-digraphs, flows on complete digraphs, and graph abstraction.

Two graph-like values live here.  `MDGraph` is a finite multi-digraph
(parallel edges and loops allowed) with optional per-edge integer weights
and flow values.  `Flow` is a nonnegative edge function on the complete
digraph with n vertices (loops included, so an n x n matrix) satisfying
conservation at every vertex.

Abstraction repeatedly smooths subdivision vertices: a vertex with exactly
one incoming and one outgoing edge, the two distinct, merges into a single
edge whose weight is the sum of the merged weights.  A bare loop never
counts as a subdivision configuration, so collapsing a directed cycle
terminates at one loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Optional, Sequence

from .errors import InputError, InternalCheckError, LimitExceeded

HAMILTONIAN_LIMIT = 8
ISO_VERTEX_LIMIT = 8


# ---------------------------------------------------------------------------
# MDGraph
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MDGraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    weights: Optional[tuple[int, ...]] = None
    flows: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        for t, h in self.edges:
            if not (0 <= t < self.vertex_count and 0 <= h < self.vertex_count):
                raise InputError(f"edge ({t},{h}) out of range")
        for attr in (self.weights, self.flows):
            if attr is not None and len(attr) != len(self.edges):
                raise InputError("per-edge attribute length does not match edge count")
        if self.flows is not None and any(f < 0 for f in self.flows):
            raise InputError("flow values must be nonnegative")

    def edge_count(self) -> int:
        return len(self.edges)


def mdgraph(vertex_count, edges, weights=None, flows=None) -> MDGraph:
    return MDGraph(int(vertex_count),
                   tuple((int(t), int(h)) for t, h in edges),
                   None if weights is None else tuple(int(w) for w in weights),
                   None if flows is None else tuple(int(f) for f in flows))


def graph_to_json(g: MDGraph) -> dict:
    out = {"vertices": g.vertex_count, "edges": [list(e) for e in g.edges]}
    if g.weights is not None:
        out["weights"] = list(g.weights)
    if g.flows is not None:
        out["flows"] = list(g.flows)
    return out


def graph_from_json(obj) -> MDGraph:
    try:
        return mdgraph(obj["vertices"], obj["edges"],
                       obj.get("weights"), obj.get("flows"))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed graph JSON: {exc}") from exc


@dataclass(frozen=True)
class Connectivity:
    strong_components: tuple[tuple[int, ...], ...]
    weak_components: tuple[tuple[int, ...], ...]
    strongly_connected: bool
    weakly_connected: bool
    reflexive: bool


def connectivity(g: MDGraph) -> Connectivity:
    """Strong and weak component partitions; reflexive when they coincide."""
    n = g.vertex_count
    out_adj = [[] for _ in range(n)]
    und_adj = [[] for _ in range(n)]
    for t, h in g.edges:
        out_adj[t].append(h)
        und_adj[t].append(h)
        und_adj[h].append(t)

    # Tarjan, iterative
    index = [None] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    sccs: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] is not None:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for k in range(pi, len(out_adj[v])):
                w = out_adj[v][k]
                if index[w] is None:
                    work[-1] = (v, k + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                sccs.append(sorted(comp))
            if work:
                u, _ = work[-1]
                low[u] = min(low[u], low[v])

    seen = [False] * n
    weaks: list[list[int]] = []
    for root in range(n):
        if seen[root]:
            continue
        comp = []
        todo = [root]
        seen[root] = True
        while todo:
            v = todo.pop()
            comp.append(v)
            for w in und_adj[v]:
                if not seen[w]:
                    seen[w] = True
                    todo.append(w)
        weaks.append(sorted(comp))

    strong = tuple(tuple(c) for c in sorted(sccs))
    weak = tuple(tuple(c) for c in sorted(weaks))
    return Connectivity(
        strong_components=strong,
        weak_components=weak,
        strongly_connected=len(strong) == 1,
        weakly_connected=len(weak) == 1,
        reflexive=strong == weak,
    )


def _subdivision_vertex(g: MDGraph) -> Optional[tuple[int, int, int]]:
    """Smallest vertex v with exactly one in-edge and one out-edge, distinct.

    Returns (v, in_edge_index, out_edge_index) or None.
    """
    ins = [[] for _ in range(g.vertex_count)]
    outs = [[] for _ in range(g.vertex_count)]
    for idx, (t, h) in enumerate(g.edges):
        outs[t].append(idx)
        ins[h].append(idx)
    for v in range(g.vertex_count):
        if len(ins[v]) == 1 and len(outs[v]) == 1 and ins[v][0] != outs[v][0]:
            return v, ins[v][0], outs[v][0]
    return None


def _compact(g: MDGraph, drop: set[int]) -> MDGraph:
    keep = [v for v in range(g.vertex_count) if v not in drop]
    remap = {v: i for i, v in enumerate(keep)}
    edges = tuple((remap[t], remap[h]) for t, h in g.edges)
    return MDGraph(len(keep), edges, g.weights, g.flows)


def _sorted_edges(g: MDGraph) -> MDGraph:
    order = sorted(range(len(g.edges)),
                   key=lambda i: (g.edges[i],
                                  g.weights[i] if g.weights is not None else 0,
                                  g.flows[i] if g.flows is not None else 0))
    return MDGraph(
        g.vertex_count,
        tuple(g.edges[i] for i in order),
        None if g.weights is None else tuple(g.weights[i] for i in order),
        None if g.flows is None else tuple(g.flows[i] for i in order))


def abstract_graph(g: MDGraph) -> MDGraph:
    """The unique abstract representative, with weights summed across merges.

    When flow values are present, merged edges must carry equal flow; a
    mismatch means the input was not the support of a flow and is an error.
    """
    while True:
        found = _subdivision_vertex(g)
        if found is None:
            break
        v, ei, eo = found
        tail = g.edges[ei][0]
        head = g.edges[eo][1]
        if g.flows is not None and g.flows[ei] != g.flows[eo]:
            raise InputError(
                f"cannot merge edges with unequal flow values "
                f"{g.flows[ei]} != {g.flows[eo]} at vertex {v}")
        edges = []
        weights = [] if g.weights is not None else None
        flows = [] if g.flows is not None else None
        for idx, e in enumerate(g.edges):
            if idx in (ei, eo):
                continue
            edges.append(e)
            if weights is not None:
                weights.append(g.weights[idx])
            if flows is not None:
                flows.append(g.flows[idx])
        edges.append((tail, head))
        if weights is not None:
            weights.append(g.weights[ei] + g.weights[eo])
        if flows is not None:
            flows.append(g.flows[ei])
        g = _compact(MDGraph(g.vertex_count, tuple(edges),
                             None if weights is None else tuple(weights),
                             None if flows is None else tuple(flows)),
                     {v})
    return _sorted_edges(g)


def is_abstract(g: MDGraph) -> bool:
    return _subdivision_vertex(g) is None


def isomorphic(a: MDGraph, b: MDGraph, limit: int = ISO_VERTEX_LIMIT) -> bool:
    """Brute-force isomorphism of MD-graphs, matching weights/flows if both
    carry them.  Desk-scale only."""
    if a.vertex_count != b.vertex_count or len(a.edges) != len(b.edges):
        return False
    if a.vertex_count > limit:
        raise LimitExceeded(f"isomorphism search limited to {limit} vertices")
    use_w = a.weights is not None and b.weights is not None
    use_f = a.flows is not None and b.flows is not None

    def multiset(g, perm=None):
        items = []
        for idx, (t, h) in enumerate(g.edges):
            if perm is not None:
                t, h = perm[t], perm[h]
            items.append((t, h,
                          g.weights[idx] if use_w else 0,
                          g.flows[idx] if use_f else 0))
        return sorted(items)

    target = multiset(b)
    for perm in permutations(range(a.vertex_count)):
        if multiset(a, perm) == target:
            return True
    return False


# ---------------------------------------------------------------------------
# Flows on the complete digraph
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Flow:
    """n x n matrix of nonnegative values; entry (i, j) is flow on edge i->j."""

    n: int
    entries: tuple[tuple, ...]

    def __post_init__(self):
        if len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise InputError("flow matrix must be n x n")
        for row in self.entries:
            for v in row:
                if v < 0:
                    raise InputError("flow values must be nonnegative")

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def outflow(self, i: int):
        return sum(self.entries[i])

    def inflow(self, j: int):
        return sum(row[j] for row in self.entries)

    def is_conserved(self) -> bool:
        return all(self.outflow(i) == self.inflow(i) for i in range(self.n))

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.entries for v in row)

    def is_integral(self) -> bool:
        return all(
            (isinstance(v, int) or (isinstance(v, Fraction) and v.denominator == 1))
            for row in self.entries for v in row)

    def support_edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in range(self.n)
                if self.entries[i][j] != 0]

    def support_graph(self) -> MDGraph:
        """Support as an MDGraph on the touched vertices, with flow values.

        Vertices not incident to any nonzero edge are dropped (the support
        digraph is induced by the edges).
        """
        edges = self.support_edges()
        verts = sorted({v for e in edges for v in e})
        remap = {v: i for i, v in enumerate(verts)}
        return MDGraph(len(verts),
                       tuple((remap[t], remap[h]) for t, h in edges),
                       None,
                       tuple(int(self.entries[t][h]) for t, h in edges))

    def scale(self, c) -> "Flow":
        return Flow(self.n, tuple(tuple(v * c for v in row) for row in self.entries))

    def add(self, other: "Flow") -> "Flow":
        if self.n != other.n:
            raise InputError("flow dimensions differ")
        return Flow(self.n, tuple(tuple(a + b for a, b in zip(r1, r2))
                                  for r1, r2 in zip(self.entries, other.entries)))

    def leq(self, other: "Flow") -> bool:
        return all(a <= b for r1, r2 in zip(self.entries, other.entries)
                   for a, b in zip(r1, r2))


def flow_from_entries(n, entries) -> Flow:
    f = Flow(n, tuple(tuple(row) for row in entries))
    if not f.is_conserved():
        raise InputError("entries violate conservation")
    return f


def flow_from_edges(n, edge_values) -> Flow:
    """Build a flow from {(i, j): value}; conservation is checked."""
    entries = [[0] * n for _ in range(n)]
    for (i, j), v in edge_values.items():
        entries[i][j] += v
    return flow_from_entries(n, entries)


def zero_flow(n: int) -> Flow:
    return Flow(n, tuple(tuple(0 for _ in range(n)) for _ in range(n)))


def cycle_flow(n: int, vertices: Sequence[int]) -> Flow:
    """Unit flow along the directed cycle visiting `vertices` in order.

    A single vertex gives the loop at that vertex.
    """
    k = len(vertices)
    if k == 0:
        raise InputError("empty cycle")
    vals: dict[tuple[int, int], int] = {}
    for idx in range(k):
        e = (vertices[idx], vertices[(idx + 1) % k])
        vals[e] = vals.get(e, 0) + 1
    return flow_from_edges(n, vals)


def outflow_vector(f: Flow) -> tuple:
    return tuple(f.outflow(i) for i in range(f.n))


def flow_to_json(f: Flow) -> dict:
    def enc(v):
        if isinstance(v, Fraction) and v.denominator != 1:
            return {"num": str(v.numerator), "den": str(v.denominator)}
        return int(v)
    return {"n": f.n, "entries": [[enc(v) for v in row] for row in f.entries]}


def flow_from_json(obj) -> Flow:
    def dec(v):
        if isinstance(v, dict):
            return Fraction(int(v["num"]), int(v["den"]))
        return int(v)
    try:
        return flow_from_entries(int(obj["n"]),
                                 [[dec(v) for v in row] for row in obj["entries"]])
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed flow JSON: {exc}") from exc


def hamiltonian_cycles(vertex_subset: Sequence[int], n: int,
                       limit: int = HAMILTONIAN_LIMIT) -> list[Flow]:
    """All directed Hamiltonian cycles on the subset, as unit flows on the
    complete digraph with n vertices.  (|S|-1)! cycles for |S| >= 2; the
    loop for a singleton."""
    subset = sorted(set(vertex_subset))
    if len(subset) > limit:
        raise LimitExceeded(f"Hamiltonian enumeration limited to {limit} vertices")
    if not subset:
        raise InputError("empty vertex subset")
    if any(not 0 <= v < n for v in subset):
        raise InputError("vertex out of range")
    if len(subset) == 1:
        return [cycle_flow(n, subset)]
    first, rest = subset[0], subset[1:]
    out = []
    for perm in permutations(rest):
        out.append(cycle_flow(n, [first, *perm]))
    return out


# ---------------------------------------------------------------------------
# Abstraction of flows, removable edges, positive flows
# ---------------------------------------------------------------------------

def abstract_flow(f: Flow, vertex_weight: Sequence[int]) -> MDGraph:
    """Abstract the support of an integral flow, carrying the induced flow
    and the edge weights inherited from the vertex weights (an edge from a
    to b weighs vertex_weight[a])."""
    if f.is_zero():
        raise InputError("zero flow has no underlying abstract graph")
    if not f.is_integral():
        raise InputError("abstraction requires an integral flow")
    if len(vertex_weight) != f.n:
        raise InputError("vertex weight length must match flow dimension")
    edges = f.support_edges()
    verts = sorted({v for e in edges for v in e})
    remap = {v: i for i, v in enumerate(verts)}
    g = MDGraph(len(verts),
                tuple((remap[t], remap[h]) for t, h in edges),
                tuple(int(vertex_weight[t]) for t, h in edges),
                tuple(int(f.entries[t][h]) for t, h in edges))
    return abstract_graph(g)


def removable_edge(g: MDGraph) -> int:
    """An edge whose removal keeps g strongly connected.

    The existence proof walks an induction over cycle contractions; at desk
    scale an exhaustive scan finds the same witness directly, and the
    postcondition is verified on the way out.
    """
    if not g.edges:
        raise InputError("graph has no edges")
    if not connectivity(g).strongly_connected:
        raise InputError("graph is not strongly connected")
    if not is_abstract(g):
        raise InputError("graph is not abstract")
    for idx in range(len(g.edges)):
        rest = MDGraph(g.vertex_count,
                       tuple(e for i, e in enumerate(g.edges) if i != idx))
        if connectivity(rest).strongly_connected:
            return idx
    raise InternalCheckError(
        "no removable edge found in a connected abstract graph")


def _shortest_path_edges(g: MDGraph, src: int, dst: int,
                         forbidden: Optional[set[int]] = None) -> Optional[list[int]]:
    """Edge indices of a BFS-shortest directed path src -> dst (may be
    empty when src == dst), deterministic by edge index order."""
    if src == dst:
        return []
    forbidden = forbidden or set()
    prev: dict[int, tuple[int, int]] = {}
    seen = {src}
    frontier = [src]
    while frontier:
        nxt = []
        for v in frontier:
            for idx, (t, h) in enumerate(g.edges):
                if idx in forbidden or t != v or h in seen:
                    continue
                prev[h] = (v, idx)
                if h == dst:
                    path = []
                    cur = dst
                    while cur != src:
                        p, e = prev[cur]
                        path.append(e)
                        cur = p
                    return path[::-1]
                seen.add(h)
                nxt.append(h)
        frontier = nxt
    return None


def positive_flow(g: MDGraph) -> tuple[int, ...]:
    """A strictly positive integral flow on a reflexive graph.

    Edges are visited in index order; any edge still at zero gets one unit
    pushed around a simple cycle through it.  Each value is at most the
    number of edges, well inside the E^M bound.
    """
    conn = connectivity(g)
    if not conn.reflexive:
        raise InputError("graph is not reflexive; it supports no positive flow")
    vals = [0] * len(g.edges)
    for idx, (t, h) in enumerate(g.edges):
        if vals[idx] > 0:
            continue
        back = _shortest_path_edges(g, h, t)
        if back is None:
            raise InternalCheckError("reflexive graph lost a return path")
        vals[idx] += 1
        for e in back:
            vals[e] += 1
    # conservation check
    net = [0] * g.vertex_count
    for idx, (t, h) in enumerate(g.edges):
        net[t] += vals[idx]
        net[h] -= vals[idx]
    if any(x != 0 for x in net):
        raise InternalCheckError("constructed flow violates conservation")
    return tuple(vals)
