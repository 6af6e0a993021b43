"""Labeled graphs, orientations, graph6 I/O and local surgery operations.

Vertices are dense 1-based integers ``1..n``.  All values are immutable;
every operation returns a new object.  Edges are stored as a frozenset of
sorted pairs, adjacency structures are derived views.  Vertex deletion
relabels the remaining vertices back to ``1..n-1`` (labels above the
deleted vertex shift down by one) and the relabeling map is returned
alongside the new graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field


class GraphError(ValueError):
    """Structurally invalid graph data or operation arguments."""


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the offending byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class CapExceeded(RuntimeError):
    """An exhaustive routine was asked to run beyond its documented cap."""


def _normalize_edge(u: int, v: int) -> tuple[int, int]:
    if u == v:
        raise GraphError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``1..n`` given by its edge set."""

    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"vertex count must be positive, got {self.n}")
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise GraphError(f"edge ({u},{v}) out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        return cls(n, frozenset(_normalize_edge(u, v) for u, v in edges))

    # -- basic views ---------------------------------------------------

    @property
    def m(self) -> int:
        """Number of edges (the paper-style |G|)."""
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(u if w == v else w for u, w in self.edges if v in (u, w))

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> dict[int, int]:
        deg = dict.fromkeys(range(1, self.n + 1), 0)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency_bits(self) -> list[int]:
        """0-based bitmask adjacency rows, for the kernel layer."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return adj

    def edge_arrays(self) -> tuple[list[int], list[int]]:
        """Sorted edges as parallel 0-based endpoint lists."""
        es = self.sorted_edges()
        return [u - 1 for u, _ in es], [v - 1 for _, v in es]

    def support(self) -> frozenset[int]:
        """Vertices incident to at least one edge."""
        return frozenset(v for e in self.edges for v in e)

    def isolated_vertices(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1)) - self.support()

    # -- edits (pure) --------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        e = _normalize_edge(u, v)
        if not (1 <= e[0] and e[1] <= self.n):
            raise GraphError(f"edge {e} out of range for n={self.n}")
        return Graph(self.n, self.edges | {e})

    def remove_edge(self, u: int, v: int) -> "Graph":
        e = _normalize_edge(u, v)
        if e not in self.edges:
            raise GraphError(f"edge {e} not present")
        return Graph(self.n, self.edges - {e})

    def delete_vertex(self, v: int) -> tuple["Graph", dict[int, int]]:
        """Remove ``v`` and relabel; returns (graph, old-to-new map)."""
        if not (1 <= v <= self.n):
            raise GraphError(f"vertex {v} out of range")
        if self.n == 1:
            raise GraphError("cannot delete the last vertex")
        relab = {w: (w if w < v else w - 1) for w in range(1, self.n + 1) if w != v}
        kept = frozenset(
            (relab[a], relab[b]) for a, b in self.edges if v not in (a, b)
        )
        return Graph(self.n - 1, kept), relab

    def induced(self, vertices) -> "Graph":
        """Subgraph induced by a vertex subset, keeping the original labels."""
        vs = set(vertices)
        return Graph(self.n, frozenset(e for e in self.edges if e[0] in vs and e[1] in vs))

    # -- connectivity --------------------------------------------------

    def components(self) -> list[frozenset[int]]:
        """Connected components of the support (isolated vertices ignored)."""
        adj: dict[int, set[int]] = {}
        for u, v in self.edges:
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        seen: set[int] = set()
        comps = []
        for start in sorted(adj):
            if start in seen:
                continue
            stack, comp = [start], set()
            while stack:
                x = stack.pop()
                if x in comp:
                    continue
                comp.add(x)
                stack.extend(adj[x] - comp)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def is_2_connected(self) -> bool:
        """Connected with no cut vertex, over the support (needs >= 3 vertices)."""
        sup = set(self.support())
        if len(sup) < 3 or not self.is_connected():
            return False
        adj = {v: set(self.neighbors(v)) for v in sup}

        def n_comps(verts: set[int]) -> int:
            seen: set[int] = set()
            count = 0
            for s in verts:
                if s in seen:
                    continue
                count += 1
                stack = [s]
                while stack:
                    x = stack.pop()
                    if x in seen:
                        continue
                    seen.add(x)
                    stack.extend((adj[x] & verts) - seen)
            return count

        return all(n_comps(sup - {v}) == 1 for v in sup)


@dataclass(frozen=True)
class Orientation:
    """An assignment of a direction to every edge of ``base``."""

    base: Graph
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self):
        undirected = frozenset(_normalize_edge(u, v) for u, v in self.arcs)
        if undirected != self.base.edges or len(self.arcs) != self.base.m:
            raise GraphError("arc set does not orient the base graph exactly once per edge")

    def out_degree(self, v: int) -> int:
        return sum(1 for a, _ in self.arcs if a == v)

    def in_degree(self, v: int) -> int:
        return sum(1 for _, b in self.arcs if b == v)

    def reverse(self) -> "Orientation":
        return Orientation(self.base, frozenset((b, a) for a, b in self.arcs))

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)


def orient_by_positions(g: Graph, order: dict[int, int]) -> Orientation:
    """Orient every edge from the endpoint with the smaller position."""
    arcs = frozenset(
        (u, v) if order[u] < order[v] else (v, u) for u, v in g.edges
    )
    return Orientation(g, arcs)


# -- graph6 ------------------------------------------------------------

_G6_MAX_N = 258047


def parse_graph6(text: str) -> Graph:
    """Decode one graph6-encoded graph (header + packed upper triangle)."""
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    raw = data.encode("ascii", errors="replace")
    for i, b in enumerate(raw):
        if not (63 <= b <= 126):
            raise Graph6Error(f"character {raw[i:i+1]!r} outside graph6 range", i)
    if raw[0] == 126:
        if len(raw) < 4:
            raise Graph6Error("truncated extended vertex-count header", len(raw))
        if raw[1] == 126:
            raise Graph6Error("graphs beyond 258047 vertices unsupported", 1)
        n = ((raw[1] - 63) << 12) | ((raw[2] - 63) << 6) | (raw[3] - 63)
        body = raw[4:]
        body_off = 4
    else:
        n = raw[0] - 63
        body = raw[1:]
        body_off = 1
    if n == 0:
        raise Graph6Error("graph6 string encodes zero vertices", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) < nbytes:
        raise Graph6Error(
            f"truncated adjacency bits: need {nbytes} bytes, got {len(body)}",
            body_off + len(body),
        )
    if len(body) > nbytes:
        raise Graph6Error("trailing data after adjacency bits", body_off + nbytes)
    bits = 0
    for b in body:
        bits = (bits << 6) | (b - 63)
    total = nbytes * 6
    edges = []
    k = 0
    for j in range(2, n + 1):
        for i in range(1, j):
            if (bits >> (total - 1 - k)) & 1:
                edges.append((i, j))
            k += 1
    if bits & ((1 << (total - nbits)) - 1):
        raise Graph6Error("nonzero padding bits", body_off + nbytes - 1)
    return Graph(n, frozenset(edges))


def emit_graph6(g: Graph) -> str:
    """Encode a graph in canonical graph6 form (zero-padded, no header)."""
    n = g.n
    if n > _G6_MAX_N:
        raise GraphError(f"graph6 supports at most {_G6_MAX_N} vertices")
    if n <= 62:
        head = [n + 63]
    else:
        head = [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    nbits = n * (n - 1) // 2
    bits = 0
    k = 0
    for j in range(2, n + 1):
        for i in range(1, j):
            k += 1
            if (i, j) in g.edges:
                bits |= 1 << (nbits - k)
    total = ((nbits + 5) // 6) * 6
    bits <<= total - nbits
    body = [((bits >> shift) & 63) + 63 for shift in range(total - 6, -6, -6)]
    return bytes(head + body).decode("ascii")


def read_graph6_lines(text: str) -> list[Graph]:
    """Parse a newline-delimited multi-graph file body."""
    graphs = []
    for line in text.splitlines():
        line = line.strip()
        if line:
            graphs.append(parse_graph6(line))
    return graphs


# -- named graphs ------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(itertools.combinations(range(1, n + 1), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    left = range(1, a + 1)
    right = range(a + 1, a + b + 1)
    return Graph(a + b, frozenset((u, v) for u in left for v in right))


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    edges = {(i, i + 1) for i in range(1, n)} | {(1, n)}
    return Graph(n, frozenset(edges))


def prism_graph() -> Graph:
    """Triangular prism: two triangles joined by a perfect matching."""
    return Graph.from_edges(
        6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4), (2, 5), (3, 6)]
    )


def petersen_graph() -> Graph:
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(i + 5, (i + 1) % 5 + 6) for i in range(1, 6)]
    return Graph.from_edges(10, outer + spokes + inner)


# -- surgery operations ----------------------------------------------

def zero_extension(g: Graph, u: int, w: int) -> Graph:
    """Append a new vertex of degree 2 adjacent to exactly ``{u, w}``."""
    if u == w:
        raise GraphError("endpoints of a 0-extension must differ")
    if not (1 <= u <= g.n and 1 <= w <= g.n):
        raise GraphError(f"endpoints ({u},{w}) out of range for n={g.n}")
    x = g.n + 1
    return Graph(x, g.edges | {_normalize_edge(u, x), _normalize_edge(w, x)})


def one_extension(g: Graph, u: int, v: int, w: int) -> Graph:
    """Append a degree-3 vertex on ``{u, v, w}`` and delete the edge ``{u, v}``."""
    e = _normalize_edge(u, v)
    if e not in g.edges:
        raise GraphError(f"({u},{v}) is not an edge")
    if w in (u, v):
        raise GraphError("third endpoint must differ from the split edge")
    if not 1 <= w <= g.n:
        raise GraphError(f"vertex {w} out of range")
    x = g.n + 1
    new_edges = (g.edges - {e}) | {
        _normalize_edge(u, x),
        _normalize_edge(v, x),
        _normalize_edge(w, x),
    }
    return Graph(x, new_edges)


def clone_vertex(g: Graph, v: int) -> Graph:
    """Add a new twin of ``v``: vertex ``n+1`` adjacent to the neighbors of ``v``."""
    if not (1 <= v <= g.n):
        raise GraphError(f"vertex {v} out of range")
    x = g.n + 1
    return Graph(x, g.edges | {_normalize_edge(u, x) for u in g.neighbors(v)})


@dataclass(frozen=True)
class TwinReport:
    """Twin classes (identical open neighborhoods) and the tw3 statistic."""

    classes: tuple[tuple[int, ...], ...]
    tw3: int


def twin_classes(g: Graph) -> TwinReport:
    """Partition vertices by open neighborhood.

    Vertices with equal open neighborhoods are automatically non-adjacent,
    so each class is a set of pairwise twins.  ``tw3`` is the largest
    number of twins of any degree-3 vertex (0 when none has degree 3).
    """
    by_nbhd: dict[frozenset[int], list[int]] = {}
    for v in range(1, g.n + 1):
        by_nbhd.setdefault(g.neighbors(v), []).append(v)
    classes = tuple(sorted(tuple(sorted(c)) for c in by_nbhd.values()))
    tw3 = 0
    for cls in classes:
        if len(g.neighbors(cls[0])) == 3:
            tw3 = max(tw3, len(cls) - 1)
    return TwinReport(classes, tw3)


def is_2_degenerate(g: Graph) -> bool:
    """True iff repeatedly deleting vertices of degree <= 2 empties the graph."""
    deg = g.degrees()
    adj = {v: set(g.neighbors(v)) for v in range(1, g.n + 1)}
    queue = [v for v in adj if deg[v] <= 2]
    removed: set[int] = set()
    while queue:
        v = queue.pop()
        if v in removed:
            continue
        removed.add(v)
        for u in adj[v]:
            if u not in removed:
                deg[u] -= 1
                if deg[u] <= 2:
                    queue.append(u)
    return len(removed) == g.n


def all_graphs(n: int):
    """All labeled graphs on vertex set 1..n, as an iterator (2^C(n,2) items)."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))
