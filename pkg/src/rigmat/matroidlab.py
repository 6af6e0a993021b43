"""Matroid utilities over independence oracles: rank, circuits, the wedge
matroid and its duality with the pair matroid, cubic-graph classification,
and the family-level structure checks used by the verification suites.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from rigmat import canon, hconn, laman
from rigmat._fields import irreducible_poly, min_extension_degree, random_prime
from rigmat._kernels import impl
from rigmat.graphcore import CapExceeded, Graph, GraphError, clone_vertex

CIRCUIT_ENUM_CAP = 7
DUALITY_CAP = 6


@dataclass(frozen=True)
class MatroidOracle:
    """Ground edge set of K_n plus an exact independence predicate.

    The R and H predicates are hereditary in the vertex count and accept
    graphs on any number of vertices; wedge oracles are tied to their
    (n, r) and documented as such.
    """

    n: int
    label: str
    indep: Callable[[Graph], bool] = field(compare=False)

    @property
    def ground(self) -> frozenset[tuple[int, int]]:
        return frozenset(itertools.combinations(range(1, self.n + 1), 2))


def r_oracle(n: int) -> MatroidOracle:
    return MatroidOracle(n, "R", laman.r_independent)


def h_oracle(n: int, char: int = 0, seed: int = 0, trials: int = 3) -> MatroidOracle:
    """Exact hyperconnectivity oracle; raises if a dependence certificate
    cannot be pinned down under the symbolic cap."""

    def indep(g: Graph) -> bool:
        verdict = hconn.h_independent(g, char, seed=seed, trials=trials)
        if verdict.method == "probabilistic":
            raise RuntimeError(f"inexact dependence verdict for {g}")
        return verdict.independent

    return MatroidOracle(n, f"H({char})", indep)


def rank(oracle: MatroidOracle, edges) -> int:
    """Greedy rank of an edge subset, in canonical edge order."""
    chosen: list[tuple[int, int]] = []
    for e in sorted(tuple(sorted(p)) for p in edges):
        if oracle.indep(Graph.from_edges(oracle.n, chosen + [e])):
            chosen.append(e)
    return len(chosen)


def is_circuit(oracle: MatroidOracle, g: Graph) -> bool:
    if oracle.indep(g) or not g.edges:
        return False
    return all(oracle.indep(g.remove_edge(*e)) for e in g.edges)


def enumerate_circuits(oracle: MatroidOracle, n: int, max_edges: int) -> list[Graph]:
    """All circuits with at most ``max_edges`` edges on up to ``n``
    vertices, one representative per isomorphism class.

    Bottom-up by edge count; supersets of found circuits are pruned before
    any oracle call, so each surviving dependent set is minimal.
    """
    if n > CIRCUIT_ENUM_CAP:
        raise CapExceeded(f"circuit enumeration capped at n={CIRCUIT_ENUM_CAP}")
    pairs = sorted(itertools.combinations(range(1, n + 1), 2))
    circuit_masks: list[int] = []
    found: list[Graph] = []
    for size in range(1, max_edges + 1):
        for combo in itertools.combinations(range(len(pairs)), size):
            mask = 0
            for k in combo:
                mask |= 1 << k
            if any(cm & mask == cm for cm in circuit_masks):
                continue
            g = Graph(n, frozenset(pairs[k] for k in combo))
            if not oracle.indep(g):
                circuit_masks.append(mask)
                found.append(g)
    return canon.dedup_by_isomorphism(found)


# -- wedge-power matroid -----------------------------------------------------

@dataclass(frozen=True)
class WedgeMatrix:
    """Rows are vertex pairs, columns coordinate pairs (k, l) with k < l;
    the entry is the 2x2 minor x_ik x_jl - x_il x_jk.  Swapping the pair
    order would negate a row, so rows are kept with i < j."""

    n: int
    r: int
    char: int
    pairs: tuple[tuple[int, int], ...]
    rows: tuple[dict[int, hconn.Polynomial], ...]


def build_wedge_matrix(pairs, n: int, r: int, char: int = 0) -> WedgeMatrix:
    nvars = n * r
    cols = list(itertools.combinations(range(r), 2))
    minus = (char - 1) if char else -1
    rows = []
    spairs = tuple(tuple(sorted(p)) for p in sorted(pairs))
    for i, j in spairs:
        row = {}
        for cidx, (a, b) in enumerate(cols):
            v1 = hconn.Polynomial.variable((i - 1) * r + a, nvars, char)
            v2 = hconn.Polynomial.variable((j - 1) * r + b, nvars, char)
            v3 = hconn.Polynomial.variable((i - 1) * r + b, nvars, char, minus)
            v4 = hconn.Polynomial.variable((j - 1) * r + a, nvars, char)
            poly = v1 * v2 + v3 * v4
            if not poly.is_zero():
                row[cidx] = poly
        rows.append(row)
    return WedgeMatrix(n, r, char, spairs, tuple(rows))


def wedge_rank_symbolic(pairs, n: int, r: int, char: int = 0,
                        cap: int = hconn.SYMBOLIC_ROW_CAP) -> int:
    pairs = list(pairs)
    if len(pairs) > cap:
        raise CapExceeded(f"symbolic wedge rank capped at {cap} rows")
    if not pairs:
        return 0
    wm = build_wedge_matrix(pairs, n, r, char)
    raw = [{c: p._t for c, p in row.items()} for row in wm.rows]
    return hconn.bareiss_rank(raw, char, n * r)


def wedge_rank_randomized(pairs, n: int, r: int, p: int, trials: int = 3,
                          seed: int = 0) -> tuple[int, bool]:
    """(best evaluated rank, certified_full) for the wedge rows of a pair set."""
    pairs = sorted(tuple(sorted(q)) for q in pairs)
    m = len(pairs)
    if m == 0:
        return 0, True
    pu = [a - 1 for a, _ in pairs]
    pv = [b - 1 for _, b in pairs]
    rng = random.Random(seed)
    k = 1 if p == 0 else min_extension_degree(p)
    irr = list(irreducible_poly(p, k)) if (p and k > 1) else None
    best = 0
    for _ in range(trials):
        sub = rng.getrandbits(63)
        if p == 0:
            q = random_prime(rng, 62)
            rk = impl.wedge_rank_modp(n, r, pu, pv, q, sub)
        elif irr is None:
            rk = impl.wedge_rank_modp(n, r, pu, pv, p, sub)
        else:
            rk = impl.wedge_rank_gf(n, r, pu, pv, p, k, irr, sub)
        best = max(best, rk)
        if best == m:
            return best, True
    return best, False


_wedge_dep_cache: set[tuple] = set()


def build_wedge_oracle(n: int, r: int, p: int = 0, seed: int = 0,
                       trials: int = 3) -> MatroidOracle:
    """Wedge-power independence for pair sets over 1..n in dimension r.

    Full-rank evaluations certify independence; dependence is confirmed by
    symbolic elimination (cached per isomorphism class of the pair set).
    """
    if r < 2:
        raise GraphError("wedge dimension must be at least 2")
    ncols = r * (r - 1) // 2

    def indep(g: Graph) -> bool:
        pairs = g.sorted_edges()
        if not pairs:
            return True
        if len(pairs) > ncols:
            return False  # rank is bounded by the column count
        best, full = wedge_rank_randomized(pairs, n, r, p, trials, seed)
        if full:
            return True
        key = (canon.canonical_code(g), r, p)
        if key in _wedge_dep_cache:
            return False
        if wedge_rank_symbolic(pairs, n, r, p) == len(pairs):
            raise RuntimeError("wedge evaluation missed a full-rank point; bug")
        _wedge_dep_cache.add(key)
        return False

    return MatroidOracle(n, f"W({r},{p})", indep)


def check_duality(n: int, p: int = 0, seed: int = 0) -> bool:
    """For every (2n-3)-subset B of K_n's pairs: B independent in the pair
    matroid of characteristic p iff its complement is independent in the
    wedge matroid of dimension n-2."""
    if n > DUALITY_CAP:
        raise CapExceeded(f"duality check capped at n={DUALITY_CAP}")
    pairs = sorted(itertools.combinations(range(1, n + 1), 2))
    k = 2 * n - 3
    wedge = build_wedge_oracle(n, n - 2, p, seed=seed)
    for combo in itertools.combinations(pairs, k):
        b = Graph(n, frozenset(combo))
        comp = Graph(n, frozenset(pairs) - b.edges)
        h_ind = hconn.h_independent(b, p, seed=seed).independent
        w_ind = wedge.indep(comp)
        if h_ind != w_ind:
            return False
    return True


# -- cubic graphs -------------------------------------------------------------

def _cubic_leaves(n: int, fix_first: bool):
    """Adjacency bitmask rows (0-based) of labeled 3-regular graphs on [n];
    with ``fix_first`` the neighbors of vertex 0 are pinned to {1,2,3},
    which every cubic graph attains under relabeling."""
    resid = [3] * n
    adj = [0] * n

    def rec(i: int):
        if i == n:
            yield adj[:]
            return
        d = resid[i]
        if d == 0:
            yield from rec(i + 1)
            return
        cands = [j for j in range(i + 1, n) if resid[j] > 0]
        if len(cands) < d:
            return
        combos = [(1, 2, 3)] if (fix_first and i == 0) else itertools.combinations(cands, d)
        for combo in combos:
            for j in combo:
                resid[j] -= 1
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            resid[i] = 0
            yield from rec(i + 1)
            resid[i] = d
            for j in combo:
                resid[j] += 1
                adj[i] &= ~(1 << j)
                adj[j] &= ~(1 << i)

    yield from rec(0)


def _mask_connected(n: int, adj: list[int]) -> bool:
    seen, frontier = 1, 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            f &= f - 1
            nxt |= adj[v]
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    return seen == (1 << n) - 1


def _swap_beats(n: int, adj: list[int], i: int) -> bool:
    """True when swapping labels i and i+1 strictly increases the row-major
    adjacency code."""
    perm = list(range(n))
    perm[i], perm[i + 1] = perm[i + 1], perm[i]
    for a in range(n):
        pa = perm[a]
        ra, rpa = adj[a], adj[pa]
        for b in range(a + 1, n):
            x = ra >> b & 1
            y = rpa >> perm[b] & 1
            if x != y:
                return y > x
    return False


def generate_connected_cubic(n: int) -> list[Graph]:
    """All connected 3-regular graphs on n vertices up to isomorphism,
    canonically labeled, in canonical-code order.

    Labelings that are not maximal under adjacent transpositions are
    discarded before the full canonical form is computed; the lex-maximal
    labeling of every class is transposition-maximal and pins the first
    neighborhood to {2,3,4}, so no class is lost.
    """
    if n % 2:
        raise GraphError("no cubic graph on an odd number of vertices")
    if not 4 <= n <= 12:
        raise CapExceeded("cubic generation supports 4 <= n <= 12")
    reps: dict[tuple, Graph] = {}
    for adj in _cubic_leaves(n, fix_first=True):
        if not _mask_connected(n, adj):
            continue
        if any(_swap_beats(n, adj, i) for i in range(1, n - 1)):
            continue
        g = Graph.from_edges(
            n,
            [
                (i + 1, j + 1)
                for i in range(n)
                for j in range(i + 1, n)
                if adj[i] >> j & 1
            ],
        )
        code = canon.canonical_code(g)
        if code not in reps:
            reps[code] = canon.canonical_graph(g)
    return [reps[code] for code in sorted(reps)]


def cubic_census(n: int) -> dict:
    """Cross-validate the class generator against the independent labeled
    scan: the orbit sizes n!/|Aut| of the found classes must add up to the
    scanned number of labeled connected cubic graphs."""
    reps = generate_connected_cubic(n)
    total, connected = impl.cubic_scan(n)
    orbit_sum = sum(math.factorial(n) // canon.automorphism_count(g) for g in reps)
    return {
        "classes": len(reps),
        "labeled_total": total,
        "labeled_connected": connected,
        "orbit_sum": orbit_sum,
        "consistent": orbit_sum == connected,
    }


_K4_CODE = None
_K33_CODE = None


def classify_cubic(g: Graph) -> str:
    """One of K4-circuit-everywhere, K33-R-independent-else-circuit, or
    omniforest-candidate (certified independent in both concrete families)."""
    global _K4_CODE, _K33_CODE
    degs = g.degrees()
    if any(degs[v] != 3 for v in range(1, g.n + 1)) or not g.is_connected():
        raise GraphError("classification requires a connected cubic graph")
    if _K4_CODE is None:
        from rigmat.graphcore import complete_bipartite, complete_graph

        _K4_CODE = canon.canonical_code(complete_graph(4))
        _K33_CODE = canon.canonical_code(complete_bipartite(3, 3))
    code = canon.canonical_code(g)
    if code == _K4_CODE:
        return "K4-circuit-everywhere"
    if code == _K33_CODE:
        return "K33-R-independent-else-circuit"
    from rigmat.bernstein import find_bernstein_orientation

    if not laman.r_independent(g):
        raise RuntimeError(f"unexpected: cubic graph {g} dependent in R")
    if find_bernstein_orientation(g) is None:
        raise RuntimeError(f"unexpected: cubic graph {g} has no Bernstein orientation")
    return "omniforest-candidate"


# -- family-level checks -------------------------------------------------------

@dataclass(frozen=True)
class TriplingReport:
    circuit: Graph
    edge_checks: int
    vertex_checks: int
    part2_vacuous: bool
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def tripling_check(oracle: MatroidOracle, d: Graph) -> TriplingReport:
    """For a circuit D and each degree-3 vertex v: cloning v and deleting
    any edge not at v, or any degree-3 vertex non-adjacent to v, must leave
    a dependent graph."""
    if not is_circuit(oracle, d):
        raise GraphError("tripling check requires a circuit")
    degs = d.degrees()
    deg3 = [v for v in sorted(d.support()) if degs[v] == 3]
    if not deg3:
        raise GraphError("tripling check requires a degree-3 vertex")
    failures = []
    edge_checks = vertex_checks = 0
    for v in deg3:
        plus = clone_vertex(d, v)
        for e in d.sorted_edges():
            if v in e:
                continue
            edge_checks += 1
            if oracle.indep(plus.remove_edge(*e)):
                failures.append(f"clone {v} minus edge {e} independent")
        nbrs = d.neighbors(v)
        for w in deg3:
            if w == v or w in nbrs:
                continue
            vertex_checks += 1
            reduced, _ = plus.delete_vertex(w)
            if oracle.indep(reduced):
                failures.append(f"clone {v} minus vertex {w} independent")
    return TriplingReport(
        d, edge_checks, vertex_checks, vertex_checks == 0, tuple(failures)
    )


@dataclass(frozen=True)
class TwoCutReport:
    has_two_cut: bool
    separators_checked: int
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def _split_components(g: Graph, u: int, w: int) -> list[frozenset[int]]:
    verts = sorted(g.support() - {u, w})
    adj = {x: (g.neighbors(x) - {u, w}) for x in verts}
    comps, seen = [], set()
    for s in verts:
        if s in seen:
            continue
        comp, stack = set(), [s]
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.extend(adj[x] - comp)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def two_cut_check(oracle: MatroidOracle, g: Graph) -> TwoCutReport:
    """For every 2-vertex separator {u, w} of a circuit: {u, w} is a
    non-edge and both sides plus that edge are circuits again."""
    if not is_circuit(oracle, g):
        raise GraphError("two-cut check requires a circuit")
    sup = sorted(g.support())
    failures = []
    separators = 0
    for u, w in itertools.combinations(sup, 2):
        comps = _split_components(g, u, w)
        if len(comps) < 2:
            continue
        for comp in comps:
            side = frozenset(
                e for e in g.edges if set(e) <= comp | {u, w}
            ) - {(min(u, w), max(u, w))}
            other = g.edges - side
            x = Graph(g.n, side)
            y = Graph(g.n, other)
            if x.m < 2 or y.m < 2:
                continue
            separators += 1
            if (min(u, w), max(u, w)) in g.edges:
                failures.append(f"separator ({u},{w}) is an edge")
                continue
            xe = x.add_edge(u, w)
            ye = y.add_edge(u, w)
            if not is_circuit(oracle, xe):
                failures.append(f"X+({u},{w}) not a circuit for separator ({u},{w})")
            if not is_circuit(oracle, ye):
                failures.append(f"Y+({u},{w}) not a circuit for separator ({u},{w})")
    return TwoCutReport(separators > 0, separators, tuple(failures))


# -- small-graph corpora --------------------------------------------------------

@lru_cache(maxsize=None)
def graph_classes(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of edge sets on at most n
    vertices (the scan over labeled graphs on [n] covers them all)."""
    from rigmat.graphcore import all_graphs

    return tuple(canon.dedup_by_isomorphism(all_graphs(n)))


def degree_capped_graphs(n: int, maxdeg: int = 3):
    """Labeled graphs on [n] with maximum degree <= maxdeg, by edge-subset
    backtracking."""
    pairs = sorted(itertools.combinations(range(1, n + 1), 2))
    deg = [0] * (n + 1)
    chosen: list[tuple[int, int]] = []

    def rec(idx: int):
        if idx == len(pairs):
            yield Graph(n, frozenset(chosen))
            return
        yield from rec(idx + 1)
        u, v = pairs[idx]
        if deg[u] < maxdeg and deg[v] < maxdeg:
            deg[u] += 1
            deg[v] += 1
            chosen.append((u, v))
            yield from rec(idx + 1)
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1

    yield from rec(0)
