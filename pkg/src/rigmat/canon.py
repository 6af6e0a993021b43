"""Canonical forms, isomorphism tests and automorphism counts.

Graphs are compared as edge sets: isolated vertices are dropped before
labeling.  The canonical form is the lexicographically smallest adjacency
bitstring over labelings explored by individualization--refinement; the
number of leaves attaining it equals the automorphism group order.
Intended for the small orders this project enumerates (n <= 12 or so).
"""

from __future__ import annotations

from rigmat.graphcore import Graph


def _support_masks(g: Graph) -> tuple[int, list[int]]:
    sup = sorted(g.support())
    idx = {v: i for i, v in enumerate(sup)}
    adj = [0] * len(sup)
    for u, v in g.edges:
        adj[idx[u]] |= 1 << idx[v]
        adj[idx[v]] |= 1 << idx[u]
    return len(sup), adj


def _refine(adj: list[int], cells: list[list[int]]) -> list[list[int]]:
    """Stable equitable refinement of an ordered partition."""
    while True:
        masks = [0] * len(cells)
        for i, cell in enumerate(cells):
            for v in cell:
                masks[i] |= 1 << v
        for tmask in masks:
            new_cells: list[list[int]] = []
            changed = False
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((adj[v] & tmask).bit_count(), []).append(v)
                if len(groups) > 1:
                    changed = True
                for key in sorted(groups):
                    new_cells.append(groups[key])
            cells = new_cells
            if changed:
                break
        else:
            return cells


def _code_of(n: int, adj: list[int], perm: list[int]) -> int:
    """Adjacency bits of the relabeled graph, row-major over new labels."""
    bits = 0
    for i in range(n):
        ai = adj[perm[i]]
        for j in range(i + 1, n):
            bits <<= 1
            if ai >> perm[j] & 1:
                bits |= 1
    return bits


def _canonize(n: int, adj: list[int]) -> tuple[int, int, list[int]]:
    best_code = -1
    best_perm: list[int] = []
    hits = 0

    def rec(cells: list[list[int]]):
        nonlocal best_code, best_perm, hits
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                for v in cell:
                    rest = [w for w in cell if w != v]
                    rec(_refine(adj, cells[:idx] + [[v], rest] + cells[idx + 1 :]))
                return
        perm = [c[0] for c in cells]
        code = _code_of(n, adj, perm)
        if best_code < 0 or code < best_code:
            best_code, best_perm, hits = code, perm, 1
        elif code == best_code:
            hits += 1

    rec(_refine(adj, [list(range(n))]))
    return best_code, hits, best_perm


def canonical_code(g: Graph) -> tuple[int, int]:
    """(support size, canonical adjacency bits); equal iff isomorphic edge sets."""
    if not g.edges:
        return (0, 0)
    n, adj = _support_masks(g)
    code, _, _ = _canonize(n, adj)
    return (n, code)


def canonical_graph(g: Graph) -> Graph:
    """Canonically labeled copy of the support graph."""
    if not g.edges:
        raise ValueError("empty edge set has no canonical support graph")
    n, adj = _support_masks(g)
    _, _, perm = _canonize(n, adj)
    pos = {old: new for new, old in enumerate(perm)}
    edges = set()
    for u in range(n):
        nb = adj[u]
        while nb:
            w = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            if pos[u] < pos[w]:
                edges.add((pos[u] + 1, pos[w] + 1))
    return Graph(n, frozenset(edges))


def automorphism_count(g: Graph) -> int:
    """Order of the automorphism group of the support graph."""
    if not g.edges:
        return 1
    n, adj = _support_masks(g)
    _, hits, _ = _canonize(n, adj)
    return hits


def are_isomorphic(a: Graph, b: Graph) -> bool:
    return canonical_code(a) == canonical_code(b)


def invariant_key(g: Graph) -> tuple:
    """Cheap isomorphism-invariant used to pre-bucket graphs before the
    full canonical form is computed."""
    if not g.edges:
        return (0,)
    n, adj = _support_masks(g)
    degs = [adj[v].bit_count() for v in range(n)]
    nbr_sig = sorted(
        (degs[v], tuple(sorted(degs[u] for u in _bits(adj[v]))))
        for v in range(n)
    )
    tri = 0
    for u in range(n):
        for w in _bits(adj[u]):
            if w > u:
                tri += (adj[u] & adj[w]).bit_count()
    return (n, len(g.edges), tri // 3, tuple(nbr_sig))


def _bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def dedup_by_isomorphism(graphs) -> list[Graph]:
    """Representatives of isomorphism classes, via invariant buckets plus
    canonical codes inside each bucket."""
    buckets: dict[tuple, dict[tuple, Graph]] = {}
    empties = False
    out: list[Graph] = []
    for g in graphs:
        if not g.edges:
            if not empties:
                empties = True
                out.append(g)
            continue
        bucket = buckets.setdefault(invariant_key(g), {})
        code = canonical_code(g)
        if code not in bucket:
            bucket[code] = g
            out.append(g)
    return out
