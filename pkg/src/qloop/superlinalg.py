"""Z2- and P-graded linear algebra over Q(q).

Weights are integer tuples in the lattice P = sum_i Z*eps_i with
(eps_i, eps_j) = delta_ij d_i, d_i = +1 for i <= M and -1 for i > M;
parity of eps_i is even for i <= M, odd otherwise.  Operators are sparse
matrices over QRat; tensor products follow the Koszul sign rule.

Vectors are dicts {basis index: QRat} with zero entries absent.
"""

from fractions import Fraction

from .field import (QRat, ZERO, ONE, q_pow, zp_trim,
                    _content, _gcd_int, _valuation)


# ---------------------------------------------------------------------------
# weights
# ---------------------------------------------------------------------------

def index_parity(i, M):
    """Parity of the algebra index i (1-based): 0 for i <= M, 1 for i > M."""
    return 0 if i <= M else 1


def d_sign(i, M):
    return 1 if i <= M else -1


def wt_parity(w, M):
    return sum(w[M:]) % 2


def wt_pair(w, u, M):
    """Bilinear form (w, u) on P."""
    s = 0
    for i, (x, y) in enumerate(zip(w, u)):
        s += x * y if i < M else -x * y
    return s


def wt_add(w, u):
    return tuple(x + y for x, y in zip(w, u))


def wt_sub(w, u):
    return tuple(x - y for x, y in zip(w, u))


def eps(i, n):
    """The weight eps_i (1-based) in gl of rank n."""
    return tuple(1 if t == i - 1 else 0 for t in range(n))


def wt_dominates(w, u, n):
    """w >= u in the root order: w - u is a nonnegative sum of simple roots
    alpha_i = eps_i - eps_{i+1}."""
    s = 0
    d = [x - y for x, y in zip(w, u)]
    for t in range(n - 1):
        s += d[t]
        if s < 0:
            return False
    return s + d[n - 1] == 0


# ---------------------------------------------------------------------------
# graded spaces
# ---------------------------------------------------------------------------

class GradedSpace:
    """Finite basis with per-vector parity, weight and label."""

    def __init__(self, M, N, parities, weights, labels=None, check=True):
        self.M = M
        self.N = N
        self.dim = len(parities)
        self.parities = tuple(parities)
        self.weights = tuple(tuple(w) for w in weights)
        self.labels = tuple(labels) if labels is not None else tuple(range(self.dim))
        assert len(self.weights) == self.dim
        if check:
            for p, w in zip(self.parities, self.weights):
                assert p == wt_parity(w, M), "basis parity disagrees with weight parity"

    def __eq__(self, other):
        return (isinstance(other, GradedSpace)
                and (self.M, self.N) == (other.M, other.N)
                and self.parities == other.parities
                and self.weights == other.weights)

    def __repr__(self):
        return "GradedSpace(M=%d, N=%d, dim=%d)" % (self.M, self.N, self.dim)


def natural_space(M, N):
    n = M + N
    return GradedSpace(M, N, [index_parity(i + 1, M) for i in range(n)],
                       [eps(i + 1, n) for i in range(n)],
                       labels=[i + 1 for i in range(n)])


def tensor_space(V, W, check=True):
    assert (V.M, V.N) == (W.M, W.N), "mixed algebras"
    parities, weights, labels = [], [], []
    for pv, wv, lv in zip(V.parities, V.weights, V.labels):
        for pw, ww, lw in zip(W.parities, W.weights, W.labels):
            parities.append((pv + pw) % 2)
            weights.append(wt_add(wv, ww))
            labels.append((lv, lw))
    return GradedSpace(V.M, V.N, parities, weights, labels, check=check)


# ---------------------------------------------------------------------------
# operators
# ---------------------------------------------------------------------------

INHOMOGENEOUS = "inhomogeneous"


class OpMat:
    """Sparse matrix over QRat between graded spaces.

    entries: {(row, col): QRat} with no explicit zeros.  q_degree is the
    Q-degree of the operator (a weight), None if unknown, or
    "inhomogeneous" for ad-hoc operators.
    """

    __slots__ = ("dom", "cod", "entries", "q_degree")

    def __init__(self, dom, cod, entries, q_degree=None):
        self.dom = dom
        self.cod = cod
        self.entries = {k: v for k, v in entries.items() if v}
        self.q_degree = q_degree

    def __bool__(self):
        return bool(self.entries)

    def __eq__(self, other):
        return self.entries == other.entries

    def __add__(self, other):
        out = dict(self.entries)
        for k, v in other.entries.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return OpMat(self.dom, self.cod, out,
                     _deg_merge(self.q_degree, other.q_degree))

    def __sub__(self, other):
        out = dict(self.entries)
        for k, v in other.entries.items():
            s = out.get(k)
            s = -v if s is None else s - v
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return OpMat(self.dom, self.cod, out,
                     _deg_merge(self.q_degree, other.q_degree))

    def __neg__(self):
        return OpMat(self.dom, self.cod,
                     {k: -v for k, v in self.entries.items()}, self.q_degree)

    def scaled(self, c):
        if not c:
            return OpMat(self.dom, self.cod, {}, self.q_degree)
        return OpMat(self.dom, self.cod,
                     {k: v * c for k, v in self.entries.items()}, self.q_degree)

    def __matmul__(self, other):
        """Composition self o other."""
        rows = {}
        for (r, c), v in self.entries.items():
            rows.setdefault(c, []).append((r, v))
        out = {}
        for (r2, c2), v2 in other.entries.items():
            for r, v in rows.get(r2, ()):
                key = (r, c2)
                s = out.get(key)
                s = v * v2 if s is None else s + v * v2
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        deg = None
        if isinstance(self.q_degree, tuple) and isinstance(other.q_degree, tuple):
            deg = wt_add(self.q_degree, other.q_degree)
        return OpMat(other.dom, self.cod, out, deg)

    def apply(self, vec):
        out = {}
        for (r, c), v in self.entries.items():
            x = vec.get(c)
            if x is None:
                continue
            s = out.get(r)
            s = v * x if s is None else s + v * x
            if s:
                out[r] = s
            elif r in out:
                del out[r]
        return out

    def parity(self):
        """Z2 parity if homogeneous, else None."""
        p = None
        for (r, c) in self.entries:
            pe = (self.cod.parities[r] + self.dom.parities[c]) % 2
            if p is None:
                p = pe
            elif p != pe:
                return None
        return 0 if p is None else p

    def transpose_entries(self):
        return {(c, r): v for (r, c), v in self.entries.items()}

    def check_degree(self):
        if not isinstance(self.q_degree, tuple):
            return True
        for (r, c) in self.entries:
            if wt_sub(self.cod.weights[r], self.dom.weights[c]) != self.q_degree:
                return False
        return True

    def pretty(self):
        n, m = self.cod.dim, self.dom.dim
        from .field import qrat_str
        rows = []
        for r in range(n):
            rows.append("\t".join(qrat_str(self.entries.get((r, c), ZERO))
                                  for c in range(m)))
        return "\n".join(rows)

    def __repr__(self):
        return "OpMat(%dx%d, %d entries)" % (self.cod.dim, self.dom.dim, len(self.entries))


MINUS_ONE = QRat((-1,), (1,), _normalized=True)


def _deg_merge(a, b):
    if a == b:
        return a
    if a is None or b is None:
        return None
    return INHOMOGENEOUS


def op_zero(dom, cod=None, q_degree=None):
    return OpMat(dom, cod if cod is not None else dom, {}, q_degree)


def op_identity(V):
    return OpMat(V, V, {(i, i): ONE for i in range(V.dim)},
                 q_degree=(0,) * (V.M + V.N))


def op_unit(V, r, c, coeff=ONE):
    return OpMat(V, V, {(r, c): coeff},
                 q_degree=wt_sub(V.weights[r], V.weights[c]))


def op_tensor(A, B, space=None):
    """(A (x) B)(x (x) y) = (-1)^{|B||x|} A x (x) B y.

    B must have definite Z2 parity.  `space` may supply precomputed
    domain/codomain tensor spaces as a pair (dom, cod).
    """
    pB = B.parity()
    assert pB is not None, "second tensor factor has indefinite parity"
    if space is None:
        dom = tensor_space(A.dom, B.dom, check=False)
        cod = tensor_space(A.cod, B.cod, check=False)
    else:
        dom, cod = space
    dB, cB = B.dom.dim, B.cod.dim
    out = {}
    for (ra, ca), va in A.entries.items():
        sign = pB and A.dom.parities[ca]
        for (rb, cb), vb in B.entries.items():
            v = va * vb
            if sign:
                v = -v
            out[(ra * cB + rb, ca * dB + cb)] = v
    deg = None
    if isinstance(A.q_degree, tuple) and isinstance(B.q_degree, tuple):
        deg = wt_add(A.q_degree, B.q_degree)
    return OpMat(dom, cod, out, deg)


def supertranspose(A):
    """Linear extension of E_ij -> eps_ij E_ji, eps_ij = (-1)^{|i|(|i|+|j|)}."""
    assert A.dom.dim == A.cod.dim, "square required"
    out = {}
    par = A.cod.parities
    for (r, c), v in A.entries.items():
        sign = (par[r] * (par[r] + par[c])) % 2
        out[(c, r)] = -v if sign else v
    deg = None
    if isinstance(A.q_degree, tuple):
        deg = tuple(-x for x in A.q_degree)
    return OpMat(A.cod, A.dom, out, deg)


def braiding(V, W):
    """c(v_i (x) w_j) = (-1)^{|i||j|} w_j (x) v_i."""
    dom = tensor_space(V, W, check=False)
    cod = tensor_space(W, V, check=False)
    out = {}
    for i in range(V.dim):
        for j in range(W.dim):
            sign = V.parities[i] * W.parities[j]
            out[(j * V.dim + i, i * W.dim + j)] = MINUS_ONE if sign else ONE
    return OpMat(dom, cod, out, q_degree=(0,) * (V.M + V.N))


def op_inverse(A):
    """Inverse of a square OpMat over Q(q) (Gauss-Jordan)."""
    n = A.dom.dim
    assert n == A.cod.dim
    rows = [dict() for _ in range(n)]
    for (r, c), v in A.entries.items():
        rows[r][c] = v
    inv = [{i: ONE} for i in range(n)]
    perm = list(range(n))
    for col in range(n):
        piv = None
        for r in range(col, n):
            if rows[perm[r]].get(col):
                piv = r
                break
        assert piv is not None, "singular matrix"
        perm[col], perm[piv] = perm[piv], perm[col]
        pr = perm[col]
        pv = rows[pr][col]
        if pv != ONE:
            rows[pr] = {k: v / pv for k, v in rows[pr].items()}
            inv[pr] = {k: v / pv for k, v in inv[pr].items()}
        for r in range(n):
            tr = perm[r]
            if tr == pr:
                continue
            f = rows[tr].get(col)
            if not f:
                continue
            _row_sub(rows[tr], rows[pr], f)
            _row_sub(inv[tr], inv[pr], f)
    out = {}
    for r in range(n):
        # rows[perm[r]] is now the unit vector e_r; inv[perm[r]] is row r of A^-1
        for c, v in inv[perm[r]].items():
            out[(r, c)] = v
    deg = None
    if isinstance(A.q_degree, tuple):
        deg = tuple(-x for x in A.q_degree)
    return OpMat(A.cod, A.dom, out, deg)


def _row_sub(target, src, f):
    for k, v in src.items():
        s = target.get(k)
        s = -(v * f) if s is None else s - v * f
        if s:
            target[k] = s
        elif k in target:
            del target[k]


# ---------------------------------------------------------------------------
# series of operators
# ---------------------------------------------------------------------------

class SeriesOp:
    """num(z)/den(z) with OpMat numerator coefficients and QRat denominator
    coefficients, den(0) != 0; variable_kind 'z' or 'z_inverse'."""

    __slots__ = ("num", "den", "var", "_coeffs")

    def __init__(self, num, den, var="z"):
        assert den and den[0], "series not expandable: den(0) = 0"
        self.num = list(num)
        self.den = zp_trim(den) or [ONE]
        self.var = var
        self._coeffs = []

    @property
    def space(self):
        return self.num[0].dom if self.num else None

    def coeff(self, n):
        """n-th power-series coefficient (an OpMat) of num/den."""
        assert self.num, "empty series"
        dom, cod = self.num[0].dom, self.num[0].cod
        d0 = self.den[0]
        while len(self._coeffs) <= n:
            k = len(self._coeffs)
            acc = self.num[k] if k < len(self.num) else op_zero(dom, cod)
            for j in range(1, len(self.den)):
                if k - j >= 0 and self.den[j]:
                    acc = acc - self._coeffs[k - j].scaled(self.den[j])
            if d0 != ONE:
                acc = acc.scaled(_scalar_inv(d0))
            self._coeffs.append(acc)
        return self._coeffs[n]

    def max_useful_order(self):
        return max(0, len(self.num) - 1) + (len(self.den) - 1)

    def scaled_num(self, c):
        return SeriesOp([m.scaled(c) for m in self.num], list(self.den), self.var)


def coefficient_list(S):
    """All nonzero power-series coefficients of S up to the stabilization
    order, without linear reduction (a spanning set of the coefficient
    span; cheaper than coefficient_span for exact scalars)."""
    out = []
    for n in range(S.max_useful_order() + 1):
        c = S.coeff(n)
        if c:
            out.append(c)
    return out


def coefficient_list_scaled(S):
    """All nonzero power-series coefficients of S up to the stabilization
    order, with the k-th coefficient scaled by den[0]^(k+1).  The scaling
    leaves every coefficient span unchanged while making the recurrence
    division-free, so polynomial inputs stay polynomial."""
    num, den = S.num, S.den
    dom, cod = num[0].dom, num[0].cod
    d0 = den[0]
    trivial = d0 == ONE if isinstance(d0, QRat) else d0 == 1
    top = max(0, len(num) - 1) + (len(den) - 1)
    dp = [None] * (top + 1)                 # d0^k; None stands for 1
    if not trivial:
        for k in range(1, top + 1):
            dp[k] = d0 if dp[k - 1] is None else dp[k - 1] * d0
    dj = [None] * len(den)                  # den[j] * d0^(j-1)
    for j in range(1, len(den)):
        if den[j]:
            dj[j] = den[j] if dp[j - 1] is None else den[j] * dp[j - 1]
    coeffs = []
    out = []
    for k in range(top + 1):
        acc = num[k] if k < len(num) else op_zero(dom, cod)
        if dp[k] is not None:
            acc = acc.scaled(dp[k])
        for j in range(1, len(den)):
            if k - j >= 0 and dj[j] is not None:
                acc = acc - coeffs[k - j].scaled(dj[j])
        coeffs.append(acc)
        if acc:
            out.append(acc)
    return out


def coefficient_span(S):
    """Basis (as OpMats) of the span of all power-series coefficients of S.

    The span stabilizes at order deg(num) + deg(den) because den(0) != 0
    induces a length-deg(den) linear recurrence on coefficients.
    """
    basis = RowBasis()
    out = []
    for n in range(S.max_useful_order() + 1):
        c = S.coeff(n)
        if not c:
            continue
        if basis.add(dict(c.entries)) is not None:
            out.append(c)
    return out


# ---------------------------------------------------------------------------
# exact row reduction and closures
# ---------------------------------------------------------------------------

class RowBasis:
    """Incremental echelon basis of sparse vectors (keys totally ordered).

    With normalize=True (default) rows are stored pivot-normalized (pivot
    coefficient 1, pivot = smallest key) and reduction divides; works for
    any scalar supporting +,-,*,/ and truthiness.  With normalize=False
    reduction cross-multiplies instead (division-free), which keeps exact
    Q(q) scalars polynomial when the input vectors are; rows are then only
    defined up to scale and `coords` is unavailable.
    """

    def __init__(self, normalize=True):
        self.rows = {}  # pivot key -> vector dict
        self.normalize = normalize

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec):
        """Reduce vec against the basis; returns the (mutated) remainder."""
        vec = dict(vec)
        while vec:
            piv = min(vec)
            row = self.rows.get(piv)
            if row is None:
                return vec
            f = vec.pop(piv)
            if not self.normalize:
                pv = row[piv]
                vec = {k: v * pv for k, v in vec.items()}
            for k, v in row.items():
                if k == piv:
                    continue
                s = vec.get(k)
                s = -(v * f) if s is None else s - v * f
                if s:
                    vec[k] = s
                elif k in vec:
                    del vec[k]
        return vec

    def add(self, vec):
        """Insert vec if independent; returns the stored new row or None."""
        rem = self.reduce(vec)
        if not rem:
            return None
        piv = min(rem)
        if self.normalize:
            pv = rem[piv]
            if pv != ONE:
                inv = _scalar_inv(pv)
                rem = {k: v * inv for k, v in rem.items()}
        else:
            rem = _strip_content(rem)
        self.rows[piv] = rem
        return rem

    def coords(self, vec):
        """Coordinates of vec as {pivot: coeff} if vec is in the span, else None."""
        vec = dict(vec)
        out = {}
        while vec:
            piv = min(vec)
            row = self.rows.get(piv)
            if row is None:
                return None
            f = vec[piv]
            out[piv] = f
            for k, v in row.items():
                s = vec.get(k)
                s = -(v * f) if s is None else s - v * f
                if s:
                    vec[k] = s
                elif k in vec:
                    del vec[k]
        return out

    def vectors(self):
        return [self.rows[p] for p in sorted(self.rows)]


def _scalar_inv(x):
    if isinstance(x, QRat):
        return x.inv()
    return 1 / x


def _strip_content(vec):
    """Divide a row of polynomial QRats (denominator 1) by its common
    integer content and q-power; leaves other rows untouched."""
    g = 0
    kmin = None
    for v in vec.values():
        if not isinstance(v, QRat) or v.den != (1,):
            return vec
        g = _gcd_int(g, _content(v.num))
        k = _valuation(v.num)
        kmin = k if kmin is None else min(kmin, k)
    if g <= 1 and not kmin:
        return vec
    out = {}
    for k, v in vec.items():
        num = v.num[kmin:]
        if g > 1:
            num = tuple(x // g for x in num)
        out[k] = QRat(num, (1,), _normalized=True)
    return out


def subspace_closure(space, seed, ops, stop_dim=None, division_free=False):
    """Smallest subspace containing seed and stable under every op.

    Breadth-first over ops in the given (deterministic) order.  Returns a
    RowBasis.  `ops` entries are OpMats (or plain {(r,c): scalar} dicts for
    specialized arithmetic).  stop_dim allows early exit at full dimension.
    division_free selects cross-multiplying reduction (see RowBasis).
    """
    if stop_dim is None:
        stop_dim = space.dim if space is not None else None
    basis = RowBasis(normalize=not division_free)
    queue = []
    for v in seed:
        row = basis.add(v)
        if row is not None:
            queue.append(row)
    mats = [op.entries if isinstance(op, OpMat) else op for op in ops]
    while queue:
        if stop_dim is not None and len(basis) >= stop_dim:
            break
        nxt = []
        for vec in queue:
            for m in mats:
                w = _apply_entries(m, vec)
                if not w:
                    continue
                row = basis.add(w)
                if row is not None:
                    nxt.append(row)
                    if stop_dim is not None and len(basis) >= stop_dim:
                        return basis
        queue = nxt
    return basis


def _apply_entries(entries, vec):
    out = {}
    for (r, c), v in entries.items():
        x = vec.get(c)
        if x is None:
            continue
        s = out.get(r)
        s = v * x if s is None else s + v * x
        if s:
            out[r] = s
        elif r in out:
            del out[r]
    return out


# ---------------------------------------------------------------------------
# numeric specialization at q = q0 (used as a one-sided fast certificate:
# full rank at a specialization implies full rank over Q(q))
# ---------------------------------------------------------------------------

def specialize_entries(entries, q0):
    out = {}
    for k, v in entries.items():
        x = v.eval(q0)
        if x:
            out[k] = x
    return out


def specialize_vec(vec, q0):
    out = {}
    for k, v in vec.items():
        x = v.eval(q0)
        if x:
            out[k] = x
    return out
