# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; mirrors pyref function for function, including the
xorshift64* sampling order, so both backends give identical results."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

cdef extern from *:
    int __builtin_popcountll(unsigned long long)
    int __builtin_ctzll(unsigned long long)
    ctypedef unsigned long long uint128 "unsigned __int128"

BACKEND = "c"


cdef inline unsigned long long _xs_next(unsigned long long* s) noexcept:
    cdef unsigned long long x = s[0]
    x ^= x >> 12
    x ^= x << 25
    x ^= x >> 27
    s[0] = x
    return x * <unsigned long long>0x2545F4914F6CDD1D


cdef inline unsigned long long _xs_seed(unsigned long long seed) noexcept:
    if seed == 0:
        return <unsigned long long>0x9E3779B97F4A7C15
    return seed


# -- sparsity kernels ---------------------------------------------------

cdef int _laman_ok_c(int n, int m, int* eu, int* ev, unsigned char* cnt) noexcept:
    cdef unsigned long long adj[24]
    cdef int k, v, mm, c
    cdef unsigned long long mask, rest
    for k in range(n):
        adj[k] = 0
    for k in range(m):
        adj[eu[k]] |= 1ULL << ev[k]
        adj[ev[k]] |= 1ULL << eu[k]
    cnt[0] = 0
    for mask in range(1, 1ULL << n):
        v = __builtin_ctzll(mask)
        rest = mask ^ (1ULL << v)
        c = cnt[rest] + __builtin_popcountll(adj[v] & rest)
        cnt[mask] = <unsigned char>c
        mm = __builtin_popcountll(mask)
        if mm >= 2 and c > 2 * mm - 3:
            return 0
    return 1


def laman_ok(int n, list eu, list ev):
    """Every vertex subset of size m >= 2 induces at most 2m-3 edges."""
    if n > 20:
        raise ValueError("subset kernel capped at n=20")
    cdef int m = len(eu)
    cdef int* ceu = <int*>malloc(2 * (m + 1) * sizeof(int))
    cdef int* cev = ceu + (m + 1)
    cdef unsigned char* cnt = <unsigned char*>malloc(1ULL << n)
    cdef int k, res
    try:
        for k in range(m):
            ceu[k] = eu[k]
            cev[k] = ev[k]
        res = _laman_ok_c(n, m, ceu, cev, cnt)
    finally:
        free(ceu)
        free(cnt)
    return bool(res)


cdef int _pebble_search(unsigned long long* out_, int* peb, int* parent,
                        int* stack, int s, int t) noexcept:
    cdef unsigned long long visited = 1ULL << s
    cdef unsigned long long nb
    cdef int top = 1, x, w, cur, pr
    stack[0] = s
    while top:
        top -= 1
        x = stack[top]
        nb = out_[x] & ~visited
        while nb:
            w = __builtin_ctzll(nb)
            nb &= nb - 1
            visited |= 1ULL << w
            parent[w] = x
            if w != t and peb[w] > 0:
                cur = w
                while cur != s:
                    pr = parent[cur]
                    out_[pr] &= ~(1ULL << cur)
                    out_[cur] |= 1ULL << pr
                    cur = pr
                peb[w] -= 1
                peb[s] += 1
                return 1
            stack[top] = w
            top += 1
    return 0


cdef int _pebble_rank_c(int n, int m, int* eu, int* ev) noexcept:
    cdef unsigned long long out_[64]
    cdef int peb[64]
    cdef int parent[64]
    cdef int stack[64]
    cdef int k, u, v, rank
    for k in range(n):
        out_[k] = 0
        peb[k] = 2
    rank = 0
    for k in range(m):
        u = eu[k]
        v = ev[k]
        while peb[u] + peb[v] < 4:
            if not (_pebble_search(out_, peb, parent, stack, u, v)
                    or _pebble_search(out_, peb, parent, stack, v, u)):
                break
        if peb[u] + peb[v] >= 4:
            peb[u] -= 1
            out_[u] |= 1ULL << v
            rank += 1
    return rank


def pebble_rank(int n, list eu, list ev):
    """Rank of the edge list in the (2,3)-sparsity matroid."""
    if n > 64:
        raise ValueError("pebble kernel capped at n=64")
    cdef int m = len(eu)
    cdef int* ceu = <int*>malloc(2 * (m + 1) * sizeof(int))
    cdef int* cev = ceu + (m + 1)
    cdef int k, res
    try:
        for k in range(m):
            ceu[k] = eu[k]
            cev[k] = ev[k]
        res = _pebble_rank_c(n, m, ceu, cev)
    finally:
        free(ceu)
    return res


def agree_scan(int n):
    """Mismatches between the pebble game and the subset count over all
    labeled graphs on n vertices."""
    if n > 7:
        raise ValueError("agreement scan capped at n=7")
    cdef int npairs = n * (n - 1) // 2
    cdef int pu[32]
    cdef int pv[32]
    cdef int i, j, k, m
    cdef int eu[32]
    cdef int ev[32]
    cdef unsigned char cnt[128]
    cdef long long mism = 0
    cdef unsigned long long mask, bits
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            pu[k] = i
            pv[k] = j
            k += 1
    for mask in range(1ULL << npairs):
        m = 0
        bits = mask
        while bits:
            k = __builtin_ctzll(bits)
            bits &= bits - 1
            eu[m] = pu[k]
            ev[m] = pv[k]
            m += 1
        if (_pebble_rank_c(n, m, eu, ev) == m) != _laman_ok_c(n, m, eu, ev, cnt):
            mism += 1
    return mism


# -- finite-field rank kernels -------------------------------------------

cdef inline unsigned long long _mulmod(unsigned long long a, unsigned long long b,
                                       unsigned long long p) noexcept:
    return <unsigned long long>((<uint128>a * b) % p)


cdef int _rank_modp(unsigned long long* mat, int nrows, int ncols,
                    unsigned long long p) noexcept:
    cdef int rank = 0, col, i, j, piv
    cdef unsigned long long pv, f, t1, t2
    cdef unsigned long long* tmp
    for col in range(ncols):
        piv = -1
        for i in range(rank, nrows):
            if mat[i * ncols + col]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(ncols):
                pv = mat[rank * ncols + j]
                mat[rank * ncols + j] = mat[piv * ncols + j]
                mat[piv * ncols + j] = pv
        pv = mat[rank * ncols + col]
        for i in range(rank + 1, nrows):
            f = mat[i * ncols + col]
            if f:
                for j in range(col, ncols):
                    t1 = _mulmod(mat[i * ncols + j], pv, p)
                    t2 = _mulmod(mat[rank * ncols + j], f, p)
                    mat[i * ncols + j] = (t1 + p - t2) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def matrix_rank_modp(list rows, int ncols, p):
    """Rank over F_p of a dense matrix given as a list of row lists."""
    cdef int nrows = len(rows)
    cdef unsigned long long cp = p
    cdef unsigned long long* mat = <unsigned long long*>malloc(
        (nrows * ncols + 1) * sizeof(unsigned long long))
    cdef int i, j, res
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                mat[i * ncols + j] = row[j] % cp
        res = _rank_modp(mat, nrows, ncols, cp)
    finally:
        free(mat)
    return res


def hmat_rank_modp(int n, list eu, list ev, p, seed):
    """Rank of the edge rows of the pair matrix at a random F_p point."""
    cdef int m = len(eu)
    cdef int ncols = 2 * n
    cdef unsigned long long cp = p
    cdef unsigned long long st = _xs_seed(seed)
    cdef unsigned long long* r = <unsigned long long*>malloc(
        (2 * n + m * ncols + 1) * sizeof(unsigned long long))
    cdef unsigned long long* b = r + n
    cdef unsigned long long* mat = b + n
    cdef int k, i, j, res
    try:
        for k in range(n):
            r[k] = _xs_next(&st) % cp
        for k in range(n):
            b[k] = _xs_next(&st) % cp
        memset(mat, 0, m * ncols * sizeof(unsigned long long))
        for k in range(m):
            i = eu[k]
            j = ev[k]
            mat[k * ncols + 2 * i] = r[j]
            mat[k * ncols + 2 * i + 1] = b[j]
            mat[k * ncols + 2 * j] = (cp - r[i]) % cp
            mat[k * ncols + 2 * j + 1] = (cp - b[i]) % cp
        res = _rank_modp(mat, m, ncols, cp)
    finally:
        free(r)
    return res


def wedge_rank_modp(int n, int r, list pu, list pv, p, seed):
    """Rank of the pairwise 2x2-minor rows of n random r-vectors mod p."""
    cdef int m = len(pu)
    cdef int ncols = r * (r - 1) // 2
    cdef unsigned long long cp = p
    cdef unsigned long long st = _xs_seed(seed)
    cdef unsigned long long* x = <unsigned long long*>malloc(
        (n * r + m * ncols + 1) * sizeof(unsigned long long))
    cdef unsigned long long* mat = x + n * r
    cdef int k, i, j, a, bb, c, res
    cdef unsigned long long t1, t2
    try:
        for k in range(n * r):
            x[k] = _xs_next(&st) % cp
        for k in range(m):
            i = pu[k]
            j = pv[k]
            c = 0
            for a in range(r):
                for bb in range(a + 1, r):
                    t1 = _mulmod(x[i * r + a], x[j * r + bb], cp)
                    t2 = _mulmod(x[i * r + bb], x[j * r + a], cp)
                    mat[k * ncols + c] = (t1 + cp - t2) % cp
                    c += 1
        res = _rank_modp(mat, m, ncols, cp)
    finally:
        free(x)
    return res


# GF(p^k): elements are k int64 coefficients, low degree first.

cdef void _gf_mul_c(long long* a, long long* b, long long* out_,
                    long long* scratch, long long p, int k, long long* irr) noexcept:
    cdef int i, j, base
    cdef long long ci
    for i in range(2 * k - 1):
        scratch[i] = 0
    for i in range(k):
        if a[i]:
            for j in range(k):
                scratch[i + j] = (scratch[i + j] + a[i] * b[j]) % p
    for i in range(2 * k - 2, k - 1, -1):
        ci = scratch[i]
        if ci:
            scratch[i] = 0
            base = i - k
            for j in range(k):
                scratch[base + j] = (scratch[base + j] - ci * irr[j]) % p
    for i in range(k):
        out_[i] = (scratch[i] + p) % p


cdef int _gf_is_zero(long long* a, int k) noexcept:
    cdef int i
    for i in range(k):
        if a[i]:
            return 0
    return 1


cdef int _rank_gf(long long* mat, int nrows, int ncols, long long p, int k,
                  long long* irr, long long* scratch) noexcept:
    # scratch needs 2k-1 (mul) + 3k (pivot copy, t1, t2)
    cdef int rank = 0, col, i, j, t, piv
    cdef long long* t1 = scratch + (2 * k - 1)
    cdef long long* t2 = t1 + k
    cdef long long* pv = t2 + k
    cdef long long* e1
    cdef long long* e2
    for col in range(ncols):
        piv = -1
        for i in range(rank, nrows):
            if not _gf_is_zero(mat + (i * ncols + col) * k, k):
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(ncols * k):
                t1[0] = mat[rank * ncols * k + j]
                mat[rank * ncols * k + j] = mat[piv * ncols * k + j]
                mat[piv * ncols * k + j] = t1[0]
        for t in range(k):
            pv[t] = mat[(rank * ncols + col) * k + t]
        for i in range(rank + 1, nrows):
            e1 = mat + (i * ncols + col) * k
            if _gf_is_zero(e1, k):
                continue
            for t in range(k):
                t2[t] = e1[t]  # f = a[i][col], copied since the loop clears it
            for j in range(col, ncols):
                e1 = mat + (i * ncols + j) * k
                e2 = mat + (rank * ncols + j) * k
                _gf_mul_c(e1, pv, t1, scratch, p, k, irr)
                _gf_mul_c(e2, t2, e1, scratch, p, k, irr)
                for t in range(k):
                    e1[t] = (t1[t] - e1[t] + p) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def hmat_rank_gf(int n, list eu, list ev, p, int k, list irr, seed):
    """As hmat_rank_modp but over GF(p^k)."""
    cdef int m = len(eu)
    cdef int ncols = 2 * n
    cdef long long cp = p
    cdef unsigned long long st = _xs_seed(seed)
    cdef long long* buf = <long long*>malloc(
        (k + 2 * n * k + m * ncols * k + 5 * k + 1) * sizeof(long long))
    cdef long long* cirr = buf
    cdef long long* rb = cirr + k
    cdef long long* mat = rb + 2 * n * k
    cdef long long* scratch = mat + m * ncols * k
    cdef int i, j, t, e, res
    try:
        for t in range(k):
            cirr[t] = irr[t]
        # r_1..r_n then b_1..b_n, k coefficients each, matching pyref
        for i in range(2 * n):
            for t in range(k):
                rb[i * k + t] = <long long>(_xs_next(&st) % <unsigned long long>cp)
        memset(mat, 0, m * ncols * k * sizeof(long long))
        for e in range(m):
            i = eu[e]
            j = ev[e]
            for t in range(k):
                mat[(e * ncols + 2 * i) * k + t] = rb[j * k + t]
                mat[(e * ncols + 2 * i + 1) * k + t] = rb[(n + j) * k + t]
                mat[(e * ncols + 2 * j) * k + t] = (cp - rb[i * k + t]) % cp
                mat[(e * ncols + 2 * j + 1) * k + t] = (cp - rb[(n + i) * k + t]) % cp
        res = _rank_gf(mat, m, ncols, cp, k, cirr, scratch)
    finally:
        free(buf)
    return res


def wedge_rank_gf(int n, int r, list pu, list pv, p, int k, list irr, seed):
    """As wedge_rank_modp but over GF(p^k)."""
    cdef int m = len(pu)
    cdef int ncols = r * (r - 1) // 2
    cdef long long cp = p
    cdef unsigned long long st = _xs_seed(seed)
    cdef long long* buf = <long long*>malloc(
        (k + n * r * k + m * ncols * k + 7 * k + 1) * sizeof(long long))
    cdef long long* cirr = buf
    cdef long long* x = cirr + k
    cdef long long* mat = x + n * r * k
    cdef long long* scratch = mat + m * ncols * k
    cdef long long* u1 = scratch + 5 * k
    cdef long long* u2 = u1 + k
    cdef int e, i, j, a, bb, c, t, res
    try:
        for t in range(k):
            cirr[t] = irr[t]
        for i in range(n * r):
            for t in range(k):
                x[i * k + t] = <long long>(_xs_next(&st) % <unsigned long long>cp)
        for e in range(m):
            i = pu[e]
            j = pv[e]
            c = 0
            for a in range(r):
                for bb in range(a + 1, r):
                    _gf_mul_c(x + (i * r + a) * k, x + (j * r + bb) * k, u1,
                              scratch, cp, k, cirr)
                    _gf_mul_c(x + (i * r + bb) * k, x + (j * r + a) * k, u2,
                              scratch, cp, k, cirr)
                    for t in range(k):
                        mat[(e * ncols + c) * k + t] = (u1[t] - u2[t] + cp) % cp
                    c += 1
        res = _rank_gf(mat, m, ncols, cp, k, cirr, scratch)
    finally:
        free(buf)
    return res


# -- orientation search ---------------------------------------------------

cdef int _uf_find(int* parent, int x) noexcept:
    while parent[x] != x:
        x = parent[x]
    return x


cdef int _bs_rec(int n, unsigned long long* adj, int* parent, int* size_,
                 int* undo_c, int* undo_p, int* nundo, int* order, int depth,
                 unsigned long long chosen) noexcept:
    cdef int v, u, ok, mark, ra, rb, tmp
    cdef unsigned long long nb
    if depth == n:
        return 1
    for v in range(n):
        if chosen >> v & 1:
            continue
        mark = nundo[0]
        ok = 1
        nb = adj[v] & chosen
        while nb:
            u = __builtin_ctzll(nb)
            nb &= nb - 1
            ra = _uf_find(parent, u)
            rb = _uf_find(parent, n + v)
            if ra == rb:
                ok = 0
                break
            if size_[ra] < size_[rb]:
                tmp = ra
                ra = rb
                rb = tmp
            parent[rb] = ra
            size_[ra] += size_[rb]
            undo_c[nundo[0]] = rb
            undo_p[nundo[0]] = ra
            nundo[0] += 1
        if ok:
            order[depth] = v
            if _bs_rec(n, adj, parent, size_, undo_c, undo_p, nundo, order,
                       depth + 1, chosen | (1ULL << v)):
                return 1
        while nundo[0] > mark:
            nundo[0] -= 1
            rb = undo_c[nundo[0]]
            ra = undo_p[nundo[0]]
            parent[rb] = rb
            size_[ra] -= size_[rb]
    return 0


def bernstein_search(int n, list adj):
    """First vertex order inducing an acyclic orientation with a forest
    pair graph, or None."""
    if n > 64:
        raise ValueError("orientation kernel capped at n=64")
    cdef unsigned long long cadj[64]
    cdef int* buf = <int*>malloc((2 * n + 2 * n + 2 * n * n + n + 2) * sizeof(int))
    cdef int* parent = buf
    cdef int* size_ = parent + 2 * n
    cdef int* undo_c = size_ + 2 * n
    cdef int* undo_p = undo_c + n * n
    cdef int* order = undo_p + n * n
    cdef int nundo = 0
    cdef int i, found
    try:
        for i in range(n):
            cadj[i] = adj[i]
        for i in range(2 * n):
            parent[i] = i
            size_[i] = 1
        found = _bs_rec(n, cadj, parent, size_, undo_c, undo_p, &nundo, order, 0, 0)
        if not found:
            return None
        return [order[i] for i in range(n)]
    finally:
        free(buf)


# -- cubic census ----------------------------------------------------------

cdef long long _cub_total, _cub_conn


cdef int _cub_conn_check(int n, unsigned long long* adjm) noexcept:
    cdef unsigned long long seen = 1, frontier = 1, nxt, f
    cdef int v
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = __builtin_ctzll(f)
            f &= f - 1
            nxt |= adjm[v]
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    return seen == (1ULL << n) - 1


cdef void _cub_pick(int n, int i, int need, int min_j, int* resid,
                    unsigned long long* adjm) noexcept:
    cdef int j
    if need == 0:
        _cub_vertex(n, i + 1, resid, adjm)
        return
    for j in range(min_j, n):
        if resid[j] > 0 and n - j >= need:
            resid[j] -= 1
            adjm[i] |= 1ULL << j
            adjm[j] |= 1ULL << i
            _cub_pick(n, i, need - 1, j + 1, resid, adjm)
            resid[j] += 1
            adjm[i] &= ~(1ULL << j)
            adjm[j] &= ~(1ULL << i)


cdef void _cub_vertex(int n, int i, int* resid, unsigned long long* adjm) noexcept:
    global _cub_total, _cub_conn
    cdef int d
    if i == n:
        _cub_total += 1
        if _cub_conn_check(n, adjm):
            _cub_conn += 1
        return
    d = resid[i]
    if d == 0:
        _cub_vertex(n, i + 1, resid, adjm)
        return
    resid[i] = 0
    _cub_pick(n, i, d, i + 1, resid, adjm)
    resid[i] = d


def cubic_scan(int n):
    """Count labeled 3-regular graphs on [n]: (all, connected)."""
    global _cub_total, _cub_conn
    if n % 2 or n < 4:
        return (0, 0)
    if n > 16:
        raise ValueError("cubic scan capped at n=16")
    cdef int resid[16]
    cdef unsigned long long adjm[16]
    cdef int i
    for i in range(n):
        resid[i] = 3
        adjm[i] = 0
    _cub_total = 0
    _cub_conn = 0
    _cub_vertex(n, 0, resid, adjm)
    return (_cub_total, _cub_conn)
