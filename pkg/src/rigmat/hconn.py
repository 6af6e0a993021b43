"""Hyperconnectivity matroid oracle via exact rank of a structured matrix.

For a graph on ``1..n`` the pair matrix has one row per edge and ``2n``
columns; the row of edge ``{i, j}`` (i < j) carries ``r_j, b_j`` in the
column pair of ``i`` and ``-r_i, -b_i`` in the column pair of ``j``.  The
row matroid over the rational function field in the ``r``/``b`` variables
(or its characteristic-p counterpart) is decided two ways:

* randomized evaluation at points of a large finite field (certifies
  independence exactly when a full-rank evaluation is found), and
* fraction-free symbolic elimination over the polynomial ring, used to
  confirm dependence exactly.

Column ``2(i-1)`` of the 0-based matrix is the paper-style column
``2i-1``; variable ``r_i`` has index ``i-1`` and ``b_i`` index ``n+i-1``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from rigmat import _fields, canon
from rigmat._kernels import impl
from rigmat.graphcore import CapExceeded, Graph, GraphError

SYMBOLIC_ROW_CAP = 14

# -- sparse multivariate polynomials ------------------------------------
#
# Monomials are packed into a single int, 6 bits per variable, variable 0
# occupying the highest bits so that integer order equals lex order.  The
# elimination engine guards the per-variable degree bound (row cap 31 =>
# products stay below 2^6).

_FIELD_BITS = 6
_FIELD_MAX = (1 << _FIELD_BITS) - 1


def _pack(exps: tuple[int, ...]) -> int:
    key = 0
    for e in exps:
        key = (key << _FIELD_BITS) | e
    return key


def _unpack(key: int, nvars: int) -> tuple[int, ...]:
    out = [0] * nvars
    for i in range(nvars - 1, -1, -1):
        out[i] = key & _FIELD_MAX
        key >>= _FIELD_BITS
    return tuple(out)


class Polynomial:
    """Sparse multivariate polynomial over Z (char 0) or F_p."""

    __slots__ = ("nvars", "char", "_t")

    def __init__(self, nvars: int, char: int, terms: dict[int, int]):
        self.nvars = nvars
        self.char = char
        self._t = terms

    @classmethod
    def zero(cls, nvars: int, char: int = 0) -> "Polynomial":
        return cls(nvars, char, {})

    @classmethod
    def constant(cls, c: int, nvars: int, char: int = 0) -> "Polynomial":
        c = c % char if char else c
        return cls(nvars, char, {0: c} if c else {})

    @classmethod
    def variable(cls, idx: int, nvars: int, char: int = 0, coeff: int = 1) -> "Polynomial":
        if not 0 <= idx < nvars:
            raise ValueError(f"variable index {idx} out of range")
        coeff = coeff % char if char else coeff
        key = 1 << (_FIELD_BITS * (nvars - 1 - idx))
        return cls(nvars, char, {key: coeff} if coeff else {})

    def is_zero(self) -> bool:
        return not self._t

    @property
    def n_terms(self) -> int:
        return len(self._t)

    def monomials(self) -> list[tuple[tuple[int, ...], int]]:
        """(exponent tuple, coefficient) pairs, leading term first."""
        return [(_unpack(k, self.nvars), c) for k in sorted(self._t, reverse=True)
                for c in (self._t[k],)]

    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars or self.char != other.char:
            raise ValueError("polynomial ring mismatch")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return Polynomial(self.nvars, self.char, _dadd(self._t, other._t, self.char))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return Polynomial(self.nvars, self.char, _dsub(self._t, other._t, self.char))

    def __neg__(self) -> "Polynomial":
        p = self.char
        return Polynomial(self.nvars, p, {k: (-c) % p if p else -c for k, c in self._t.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return Polynomial(self.nvars, self.char, _dmul(self._t, other._t, self.char))

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return Polynomial(
            self.nvars, self.char, _dexactdiv(dict(self._t), other._t, self.char, self.nvars)
        )

    def evaluate(self, values, mod: int | None = None) -> int:
        """Evaluate at integer points; reduce mod ``mod`` when given."""
        total = 0
        for k, c in self._t.items():
            term = c
            for idx in range(self.nvars - 1, -1, -1):
                e = k & _FIELD_MAX
                k >>= _FIELD_BITS
                if e:
                    term *= values[idx] ** e
            total += term
        if mod:
            total %= mod
        elif self.char:
            total %= self.char
        return total

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.nvars == other.nvars
            and self.char == other.char
            and self._t == other._t
        )

    def __hash__(self):
        return hash((self.nvars, self.char, tuple(sorted(self._t.items()))))

    def __repr__(self):
        return f"Polynomial(nvars={self.nvars}, char={self.char}, terms={self.n_terms})"


def _dadd(a: dict, b: dict, p: int) -> dict:
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) + c
        v = v % p if p else v
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _dsub(a: dict, b: dict, p: int) -> dict:
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) - c
        v = v % p if p else v
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _dmul(a: dict, b: dict, p: int) -> dict:
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    get = out.get
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    if p:
        return {k: v % p for k, v in out.items() if v % p}
    return {k: v for k, v in out.items() if v}


def _monomial_quotient(rk: int, dk: int, nvars: int) -> int:
    """rk / dk as packed monomials; -1 when not divisible."""
    q = rk - dk
    if q < 0:
        return -1
    r, d = rk, dk
    for _ in range(nvars):
        if (r & _FIELD_MAX) < (d & _FIELD_MAX):
            return -1
        r >>= _FIELD_BITS
        d >>= _FIELD_BITS
    return q


def _dexactdiv(num: dict, den: dict, p: int, nvars: int) -> dict:
    """Exact polynomial division; raises ArithmeticError on any remainder."""
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    if not num:
        return {}
    dk = max(den)
    dc = den[dk]
    dinv = pow(dc, p - 2, p) if p else None
    quot: dict = {}
    den_items = [(k, c) for k, c in den.items()]
    while num:
        rk = max(num)
        qk = _monomial_quotient(rk, dk, nvars)
        if qk < 0:
            raise ArithmeticError("inexact polynomial division (monomial)")
        rc = num[rk]
        if p:
            qc = rc * dinv % p
        else:
            if rc % dc:
                raise ArithmeticError("inexact polynomial division (coefficient)")
            qc = rc // dc
        quot[qk] = qc
        for k, c in den_items:
            kk = qk + k
            v = num.get(kk, 0) - qc * c
            v = v % p if p else v
            if v:
                num[kk] = v
            else:
                num.pop(kk, None)
    return quot


# -- fraction-free elimination -------------------------------------------

def bareiss_rank(rows: list[dict[int, dict]], p: int, nvars: int) -> int:
    """Exact rank of a sparse matrix of polynomial dicts over Frac(ring).

    One-step fraction-free elimination with full pivoting; the pivot column
    is the structurally sparsest, the pivot entry the one with fewest
    terms.  Rows beyond 31 would overflow the 6-bit exponent packing.
    """
    mat = [dict(r) for r in rows]
    m = len(mat)
    if m > 31:
        raise CapExceeded("symbolic elimination capped at 31 rows")
    prev = {0: 1}
    rank = 0
    while rank < m:
        counts: dict[int, int] = {}
        for i in range(rank, m):
            for c in mat[i]:
                counts[c] = counts.get(c, 0) + 1
        if not counts:
            break
        col = min(counts, key=lambda c: (counts[c], c))
        piv_i = min(
            (i for i in range(rank, m) if col in mat[i]),
            key=lambda i: (len(mat[i][col]), i),
        )
        mat[rank], mat[piv_i] = mat[piv_i], mat[rank]
        piv_row = mat[rank]
        piv = piv_row[col]
        for i in range(rank + 1, m):
            row = mat[i]
            aik = row.pop(col, None)
            new_row: dict[int, dict] = {}
            if aik is None:
                for j, a in row.items():
                    val = _dexactdiv(_dmul(piv, a, p), prev, p, nvars)
                    if val:
                        new_row[j] = val
            else:
                for j in set(row) | set(piv_row):
                    if j == col:
                        continue
                    t = _dmul(piv, row.get(j, {}), p)
                    s = _dmul(aik, piv_row.get(j, {}), p)
                    val = _dexactdiv(_dsub(t, s, p), prev, p, nvars)
                    if val:
                        new_row[j] = val
            mat[i] = new_row
        prev = piv
        rank += 1
    return rank


# -- the pair matrix -------------------------------------------------------

@dataclass(frozen=True)
class HMatrix:
    """Rows indexed by edges, 2n columns of single signed variables."""

    n: int
    char: int
    edges: tuple[tuple[int, int], ...]
    rows: tuple[dict[int, Polynomial], ...]

    @property
    def ncols(self) -> int:
        return 2 * self.n


def build_h_matrix(g: Graph, n: int | None = None, char: int = 0) -> HMatrix:
    """The edge-row matrix of the definition, over 1..n (default g.n)."""
    n = g.n if n is None else n
    for u, v in g.edges:
        if v > n:
            raise GraphError(f"edge ({u},{v}) outside 1..{n}")
    nvars = 2 * n
    minus = (char - 1) if char else -1
    rows = []
    edges = tuple(sorted(g.edges))
    for i, j in edges:
        rows.append({
            2 * (i - 1): Polynomial.variable(j - 1, nvars, char),
            2 * (i - 1) + 1: Polynomial.variable(n + j - 1, nvars, char),
            2 * (j - 1): Polynomial.variable(i - 1, nvars, char, minus),
            2 * (j - 1) + 1: Polynomial.variable(n + i - 1, nvars, char, minus),
        })
    return HMatrix(n, char, edges, tuple(rows))


def h_rank_symbolic(g: Graph, char: int = 0, cap: int = SYMBOLIC_ROW_CAP) -> int:
    """Exact rank over the fraction field, by fraction-free elimination."""
    if g.m > cap:
        raise CapExceeded(f"symbolic rank capped at {cap} rows, got {g.m}")
    if g.m == 0:
        return 0
    hm = build_h_matrix(g, g.n, char)
    raw = [{c: p._t for c, p in row.items()} for row in hm.rows]
    return bareiss_rank(raw, char, 2 * g.n)


# -- randomized evaluation --------------------------------------------------

@dataclass(frozen=True)
class FieldConfig:
    """Evaluation field: characteristic 0 with large random primes, or
    GF(p^k) with p^k >= 2^40."""

    characteristic: int = 0
    extension_degree: int = 1

    def __post_init__(self):
        c = self.characteristic
        if c == 0:
            if self.extension_degree != 1:
                raise ValueError("characteristic 0 uses prime evaluation, degree 1")
            return
        if not (_fields.is_prime(c) and c < 2**31):
            raise ValueError(f"characteristic must be 0 or a prime < 2^31, got {c}")
        if c**self.extension_degree < 2**_fields.MIN_FIELD_BITS:
            raise ValueError(
                f"evaluation field {c}^{self.extension_degree} below the 2^40 floor"
            )

    @classmethod
    def for_characteristic(cls, char: int) -> "FieldConfig":
        if char == 0:
            return cls(0, 1)
        return cls(char, _fields.min_extension_degree(char))


def h_rank_randomized(
    g: Graph, fc: FieldConfig, trials: int = 3, seed: int = 0
) -> tuple[int, bool]:
    """(best evaluated rank, certified_full).

    Each trial substitutes fresh random field elements; characteristic 0
    additionally draws a fresh 62-bit prime per trial.  A full-rank trial
    exhibits a nonzero maximal minor, so independence is certified exactly;
    otherwise the rank is a lower bound that is sharp with probability at
    least 1 - (|G|/2^40)^trials.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    m = g.m
    if m == 0:
        return 0, True
    eu, ev = g.edge_arrays()
    rng = random.Random(seed)
    p = fc.characteristic
    irr = None
    if p and fc.extension_degree > 1:
        irr = list(_fields.irreducible_poly(p, fc.extension_degree))
    best = 0
    for _ in range(trials):
        sub = rng.getrandbits(63)
        if p == 0:
            q = _fields.random_prime(rng, 62)
            r = impl.hmat_rank_modp(g.n, eu, ev, q, sub)
        elif irr is None:
            r = impl.hmat_rank_modp(g.n, eu, ev, p, sub)
        else:
            r = impl.hmat_rank_gf(g.n, eu, ev, p, fc.extension_degree, irr, sub)
        best = max(best, r)
        if best == m:
            return best, True
    return best, False


# -- the independence oracle -------------------------------------------------

@dataclass(frozen=True)
class HVerdict:
    independent: bool
    method: str

    def __bool__(self) -> bool:
        return self.independent


# Confirmed-dependent isomorphism classes, per characteristic.  Immutable
# mathematical facts, memoized for the exhaustive suites.
_dependent_class_cache: set[tuple[tuple[int, int], int]] = set()


def _randomized_dependent(g: Graph, char: int, trials: int, seed: int) -> bool:
    fc = FieldConfig.for_characteristic(char)
    _, full = h_rank_randomized(g, fc, trials, seed=seed)
    return not full


def _extract_core(g: Graph, char: int, trials: int, seed: int) -> Graph:
    """Shrink a (probably) dependent graph to a minimal dependent core by
    greedy edge deletion under the randomized oracle."""
    h = g
    rng = random.Random(seed)
    while True:
        for e in h.sorted_edges():
            h2 = h.remove_edge(*e)
            if h2.m and _randomized_dependent(h2, char, trials, rng.getrandbits(63)):
                h = h2
                break
        else:
            return h


def confirm_dependent(
    g: Graph, char: int = 0, seed: int = 0, trials: int = 3,
    cap: int = SYMBOLIC_ROW_CAP,
) -> Graph | None:
    """Exact dependence certificate: a subgraph whose symbolic rank falls
    short of its edge count.  Returns the core, or None when no certificate
    fits under the symbolic cap.  Results are cached per isomorphism class.
    """
    key = (canon.canonical_code(g), char)
    if key in _dependent_class_cache:
        return g
    for attempt in range(3):
        core = _extract_core(g, char, trials * (attempt + 1), seed + attempt)
        if core.m > cap:
            return None
        core_key = (canon.canonical_code(core), char)
        if core_key in _dependent_class_cache:
            _dependent_class_cache.add(key)
            return core
        if h_rank_symbolic(core, char, cap) < core.m:
            _dependent_class_cache.add(core_key)
            _dependent_class_cache.add(key)
            return core
    raise RuntimeError(
        "randomized dependence could not be confirmed symbolically; "
        "evaluation fields too small or a rank bug"
    )


def h_independent(
    g: Graph, char: int = 0, *, seed: int = 0, trials: int = 3,
    symbolic_cap: int = SYMBOLIC_ROW_CAP,
) -> HVerdict:
    """Exact independence in the pair-matrix row matroid of characteristic
    ``char``.

    Positive answers are certified by a full-rank evaluation; negative
    answers are confirmed by symbolic elimination on a dependent core when
    one fits under the cap, and flagged ``probabilistic`` otherwise.
    """
    if g.m == 0:
        return HVerdict(True, "trivial")
    fc = FieldConfig.for_characteristic(char)
    _, full = h_rank_randomized(g, fc, trials, seed=seed)
    if full:
        return HVerdict(True, "randomized-certified")
    core = confirm_dependent(g, char, seed=seed, trials=trials, cap=symbolic_cap)
    if core is not None:
        return HVerdict(False, "symbolic")
    return HVerdict(False, "probabilistic")
