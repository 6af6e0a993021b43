"""Pure-Python reference kernels.

Mirrors the compiled module ``_ckern`` function for function, including the
xorshift64* sampling order, so both backends return identical results and
can be cross-checked.  Graph arguments are 0-based: parallel endpoint
lists ``eu``/``ev`` with ``eu[k] < ev[k]``, or adjacency bitmask lists.
"""

from itertools import combinations

BACKEND = "python"

_M64 = (1 << 64) - 1


class _Xorshift:
    """xorshift64* stream; seed 0 is remapped to a fixed odd constant."""

    def __init__(self, seed: int):
        self.state = (seed & _M64) or 0x9E3779B97F4A7C15

    def next(self) -> int:
        x = self.state
        x ^= x >> 12
        x = (x ^ (x << 25)) & _M64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & _M64


# -- sparsity kernels ---------------------------------------------------

def laman_ok(n: int, eu: list, ev: list) -> bool:
    """Every vertex subset of size m >= 2 induces at most 2m-3 edges."""
    adj = [0] * n
    for u, v in zip(eu, ev):
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    cnt = bytearray(1 << n)
    for mask in range(1, 1 << n):
        v = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << v)
        c = cnt[rest] + (adj[v] & rest).bit_count()
        cnt[mask] = c
        m = mask.bit_count()
        if m >= 2 and c > 2 * m - 3:
            return False
    return True


def pebble_rank(n: int, eu: list, ev: list) -> int:
    """Rank of the edge list in the (2,3)-sparsity matroid via the pebble game."""
    peb = [2] * n
    out = [0] * n
    parent = [-1] * n

    def search(s: int, t: int) -> bool:
        # move one free pebble (not on s or t) to s, reversing the path
        visited = 1 << s
        stack = [s]
        while stack:
            x = stack.pop()
            nb = out[x] & ~visited
            while nb:
                w = (nb & -nb).bit_length() - 1
                nb &= nb - 1
                visited |= 1 << w
                parent[w] = x
                if w != t and peb[w] > 0:
                    cur = w
                    while cur != s:
                        pr = parent[cur]
                        out[pr] &= ~(1 << cur)
                        out[cur] |= 1 << pr
                        cur = pr
                    peb[w] -= 1
                    peb[s] += 1
                    return True
                stack.append(w)
        return False

    rank = 0
    for u, v in zip(eu, ev):
        while peb[u] + peb[v] < 4:
            if not (search(u, v) or search(v, u)):
                break
        if peb[u] + peb[v] >= 4:
            peb[u] -= 1
            out[u] |= 1 << v
            rank += 1
    return rank


def agree_scan(n: int) -> int:
    """Mismatches between the pebble game and the subset count over all
    2^C(n,2) labeled graphs on n vertices."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mismatches = 0
    for mask in range(1 << len(pairs)):
        eu, ev = [], []
        k = mask
        while k:
            idx = (k & -k).bit_length() - 1
            k &= k - 1
            eu.append(pairs[idx][0])
            ev.append(pairs[idx][1])
        if (pebble_rank(n, eu, ev) == len(eu)) != laman_ok(n, eu, ev):
            mismatches += 1
    return mismatches


# -- finite-field rank kernels -------------------------------------------

def matrix_rank_modp(rows: list, ncols: int, p: int) -> int:
    """Rank over F_p by cross-multiplication elimination (no inverses)."""
    mat = [list(r) for r in rows]
    nrows = len(mat)
    rank = 0
    for col in range(ncols):
        piv = -1
        for i in range(rank, nrows):
            if mat[i][col]:
                piv = i
                break
        if piv < 0:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pv = mat[rank][col]
        prow = mat[rank]
        for i in range(rank + 1, nrows):
            f = mat[i][col]
            if f:
                ri = mat[i]
                for j in range(col, ncols):
                    ri[j] = (ri[j] * pv - prow[j] * f) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def _hmat_rows(n, eu, ev, r, b, p):
    rows = []
    for i, j in zip(eu, ev):
        row = [0] * (2 * n)
        row[2 * i] = r[j]
        row[2 * i + 1] = b[j]
        row[2 * j] = (p - r[i]) % p
        row[2 * j + 1] = (p - b[i]) % p
        rows.append(row)
    return rows


def hmat_rank_modp(n: int, eu: list, ev: list, p: int, seed: int) -> int:
    """Rank of the edge rows of the 2n-column pair matrix at a random F_p point."""
    rng = _Xorshift(seed)
    r = [rng.next() % p for _ in range(n)]
    b = [rng.next() % p for _ in range(n)]
    return matrix_rank_modp(_hmat_rows(n, eu, ev, r, b, p), 2 * n, p)


def wedge_rank_modp(n: int, r: int, pu: list, pv: list, p: int, seed: int) -> int:
    """Rank of the pairwise 2x2-minor (wedge) rows of n random r-vectors."""
    rng = _Xorshift(seed)
    x = [[rng.next() % p for _ in range(r)] for _ in range(n)]
    cols = [(a, bb) for a in range(r) for bb in range(a + 1, r)]
    rows = []
    for i, j in zip(pu, pv):
        rows.append([(x[i][a] * x[j][bb] - x[i][bb] * x[j][a]) % p for a, bb in cols])
    return matrix_rank_modp(rows, len(cols), p)


# GF(p^k): elements are length-k coefficient lists, low degree first, mod the
# monic irreducible x^k + irr[k-1] x^(k-1) + ... + irr[0].

def _gf_mul(a, b, p, k, irr):
    prod = [0] * (2 * k - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for i in range(2 * k - 2, k - 1, -1):
        ci = prod[i]
        if ci:
            prod[i] = 0
            base = i - k
            for j in range(k):
                prod[base + j] = (prod[base + j] - ci * irr[j]) % p
    return prod[:k]


def _gf_rank(rows, ncols, p, k, irr):
    mat = [list(r) for r in rows]
    nrows = len(mat)
    zero = [0] * k
    rank = 0
    for col in range(ncols):
        piv = -1
        for i in range(rank, nrows):
            if mat[i][col] != zero:
                piv = i
                break
        if piv < 0:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pv = mat[rank][col]
        prow = mat[rank]
        for i in range(rank + 1, nrows):
            f = mat[i][col]
            if f != zero:
                ri = mat[i]
                for j in range(col, ncols):
                    t1 = _gf_mul(ri[j], pv, p, k, irr)
                    t2 = _gf_mul(prow[j], f, p, k, irr)
                    ri[j] = [(u - w) % p for u, w in zip(t1, t2)]
        rank += 1
        if rank == nrows:
            break
    return rank


def _gf_sample(rng, p, k):
    return [rng.next() % p for _ in range(k)]


def hmat_rank_gf(n, eu, ev, p, k, irr, seed):
    """As hmat_rank_modp but over GF(p^k)."""
    rng = _Xorshift(seed)
    r = [_gf_sample(rng, p, k) for _ in range(n)]
    b = [_gf_sample(rng, p, k) for _ in range(n)]
    zero = [0] * k
    rows = []
    for i, j in zip(eu, ev):
        row = [zero] * (2 * n)
        row[2 * i] = r[j]
        row[2 * i + 1] = b[j]
        row[2 * j] = [(p - c) % p for c in r[i]]
        row[2 * j + 1] = [(p - c) % p for c in b[i]]
        rows.append(row)
    return _gf_rank(rows, 2 * n, p, k, irr)


def wedge_rank_gf(n, r, pu, pv, p, k, irr, seed):
    """As wedge_rank_modp but over GF(p^k)."""
    rng = _Xorshift(seed)
    x = [[_gf_sample(rng, p, k) for _ in range(r)] for _ in range(n)]
    cols = [(a, bb) for a in range(r) for bb in range(a + 1, r)]
    rows = []
    for i, j in zip(pu, pv):
        row = []
        for a, bb in cols:
            t1 = _gf_mul(x[i][a], x[j][bb], p, k, irr)
            t2 = _gf_mul(x[i][bb], x[j][a], p, k, irr)
            row.append([(u - w) % p for u, w in zip(t1, t2)])
        rows.append(row)
    return _gf_rank(rows, len(cols), p, k, irr)


# -- orientation search ---------------------------------------------------

def bernstein_search(n: int, adj: list):
    """First vertex order whose induced orientation is acyclic with a
    forest pair graph, by DFS with incremental union-find pruning.

    Returns the order as a list of 0-based vertices, or None.
    """
    parent = list(range(2 * n))
    size = [1] * (2 * n)
    undo: list = []

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        if size[ra] < size[rb]:
            ra, rb = rb, ra
        parent[rb] = ra
        size[ra] += size[rb]
        undo.append((rb, ra))
        return True

    def rollback(mark):
        while len(undo) > mark:
            rb, ra = undo.pop()
            parent[rb] = rb
            size[ra] -= size[rb]

    order: list = []
    chosen = 0

    def rec() -> bool:
        nonlocal chosen
        if len(order) == n:
            return True
        for v in range(n):
            if chosen >> v & 1:
                continue
            mark = len(undo)
            ok = True
            nb = adj[v] & chosen
            while nb:
                u = (nb & -nb).bit_length() - 1
                nb &= nb - 1
                if not union(u, n + v):
                    ok = False
                    break
            if ok:
                order.append(v)
                chosen |= 1 << v
                if rec():
                    return True
                order.pop()
                chosen &= ~(1 << v)
            rollback(mark)
        return False

    return order[:] if rec() else None


# -- cubic census ----------------------------------------------------------

def cubic_scan(n: int):
    """Count labeled 3-regular graphs on [n]: (all, connected)."""
    if n % 2 or n < 4:
        return (0, 0)
    resid = [3] * n
    adj = [0] * n
    total = 0
    connected = 0
    full = (1 << n) - 1

    def is_conn():
        seen = 1
        frontier = 1
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
        return seen == full

    def rec(i):
        nonlocal total, connected
        if i == n:
            total += 1
            if is_conn():
                connected += 1
            return
        d = resid[i]
        if d == 0:
            rec(i + 1)
            return
        cands = [j for j in range(i + 1, n) if resid[j] > 0]
        if len(cands) < d:
            return
        for combo in combinations(cands, d):
            for j in combo:
                resid[j] -= 1
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            resid[i] = 0
            rec(i + 1)
            resid[i] = d
            for j in combo:
                resid[j] += 1
                adj[i] &= ~(1 << j)
                adj[j] &= ~(1 << i)

    rec(0)
    return (total, connected)
