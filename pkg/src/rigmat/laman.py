"""The generic plane rigidity matroid on edge sets.

Independence has two routes: the exponential subset-count oracle
(:func:`laman_count_ok`, the source of truth in tests) and the
polynomial-time (2,3)-pebble game (:func:`r_independent`, the production
path).  Both are exact; the test suite checks their agreement
exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass

from rigmat._kernels import impl
from rigmat.graphcore import CapExceeded, Graph, GraphError

SUBSET_ORACLE_CAP = 10


def laman_count_ok(g: Graph) -> bool:
    """Subset-enumeration oracle: every m-subset induces at most 2m-3 edges.

    Exponential in ``g.n``; refuses graphs with more than
    ``SUBSET_ORACLE_CAP`` vertices.
    """
    if not g.edges:
        raise GraphError("subset oracle requires at least one edge")
    if g.n > SUBSET_ORACLE_CAP:
        raise CapExceeded(f"subset oracle capped at n={SUBSET_ORACLE_CAP}, got {g.n}")
    eu, ev = g.edge_arrays()
    return bool(impl.laman_ok(g.n, eu, ev))


def r_rank(g: Graph) -> int:
    """Rank of the edge set, greedily via the pebble game in sorted edge order."""
    eu, ev = g.edge_arrays()
    return impl.pebble_rank(g.n, eu, ev)


def r_independent(g: Graph) -> bool:
    return r_rank(g) == g.m


def r_circuit(g: Graph) -> bool:
    """Minimal dependent edge set: dependent, all one-edge deletions independent."""
    if r_independent(g):
        return False
    return all(r_independent(g.remove_edge(*e)) for e in g.edges)


@dataclass(frozen=True)
class RBaseCertificate:
    graph: Graph
    verified: bool


def r_base(g: Graph) -> RBaseCertificate:
    """Check |G| = 2v-3 together with the subset counts (v = support size)."""
    v = len(g.support())
    ok = v >= 2 and g.m == 2 * v - 3 and r_independent(g)
    return RBaseCertificate(g, ok)


def suppress(b: Graph, v: int) -> tuple[Graph, tuple[int, int]]:
    """Delete the degree-3 vertex ``v`` of a base and restore a missing edge
    between two of its former neighbors so the result is again a base.

    Vertices above ``v`` shift down by one in the returned graph; the added
    edge is reported in the new labeling.  Failure to find a valid edge is
    a hard error: for genuine bases one of the candidates always works.
    """
    if not r_base(b).verified:
        raise GraphError("suppress requires a verified base")
    nbrs = sorted(b.neighbors(v))
    if len(nbrs) != 3:
        raise GraphError(f"vertex {v} has degree {len(nbrs)}, need 3")
    candidates = [
        (a, c)
        for idx, a in enumerate(nbrs)
        for c in nbrs[idx + 1 :]
        if (a, c) not in b.edges
    ]
    if not candidates:
        raise GraphError(f"neighbors of {v} form a triangle; suppression undefined")
    reduced, relab = b.delete_vertex(v)
    for a, c in candidates:
        candidate = reduced.add_edge(relab[a], relab[c])
        if r_base(candidate).verified:
            e = (relab[a], relab[c])
            return candidate, (min(e), max(e))
    raise RuntimeError(
        "no suppression of a verified base yielded a base; this contradicts "
        "the theory and indicates a bug"
    )


def fundamental_circuit(b: Graph, e: tuple[int, int]) -> Graph:
    """The unique circuit inside base-plus-one-edge.

    An edge f lies on the circuit iff removing it from B+e restores
    independence.
    """
    if not r_base(b).verified:
        raise GraphError("fundamental_circuit requires a verified base")
    u, v = min(e), max(e)
    if (u, v) in b.edges:
        raise GraphError(f"edge {e} already present")
    if not (1 <= u and v <= b.n):
        raise GraphError(f"edge {e} out of range")
    g = b.add_edge(u, v)
    if r_independent(g):
        raise RuntimeError("base plus an edge must be dependent; bug in base check")
    circuit = frozenset(f for f in g.edges if r_independent(g.remove_edge(*f)))
    return Graph(b.n, circuit)
