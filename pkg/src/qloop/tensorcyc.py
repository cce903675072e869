"""Highest/lowest l-weight detection for tensor products, the pole/zero
separation predicates for gl(1,1) prime factors, the spectral-ratio
predicate for natural evaluation modules, the sufficiency predicate for
Kirillov-Reshetikhin tensor products, and the corner restriction to a
Y_q(gl(1,1))-module.

The oracle side decides "module generated by its extreme vector" by exact
subspace closure under a finite spanning set of generator-series
coefficients.  A numeric specialization of q in a prime field is used only
as a one-sided certificate of fullness (rank cannot grow under
specialization); any proper or degenerate specialized closure falls back
to exact arithmetic over Q(q).
"""

from .field import (QRat, ZERO, ONE, q_pow, RatZ, zeros_poles, zp_trim,
                    ModInt, p_gcd, p_divexact, p_mul)
from .superlinalg import (GradedSpace, OpMat, RowBasis, SeriesOp,
                          subspace_closure,
                          coefficient_span, coefficient_list,
                          coefficient_list_scaled,
                          specialize_entries,
                          specialize_vec, wt_dominates, wt_pair, eps,
                          index_parity, d_sign)
from .reps import Rep, tensor_reps


# specialization point for the one-sided fullness certificate
Q0 = ModInt(9187)


class TensorRep:
    """A tensor product with its factors kept alongside the materialized
    product action."""

    def __init__(self, factors):
        self.factors = list(factors)
        self.product = tensor_reps(self.factors)


def tensor(reps):
    return TensorRep(reps)


class EllWeight:
    """Diagonal eigen-series (f_1(z), ..., f_n(z)) as RatZ, plus the Z2
    parity of the eigenvector."""

    __slots__ = ("components", "parity")

    def __init__(self, components, parity):
        self.components = tuple(components)
        self.parity = parity % 2

    def __eq__(self, other):
        return (self.components, self.parity) == (other.components, other.parity)

    def __repr__(self):
        return "EllWeight(parity=%d, %r)" % (self.parity, list(self.components))


class CyclicityVerdict:
    """predicate / oracle may each be None when not computed; witness is the
    extreme vector when cyclic, or the proper closure dimension when not."""

    __slots__ = ("predicate", "oracle", "witness")

    def __init__(self, predicate=None, oracle=None, witness=None):
        self.predicate = predicate
        self.oracle = oracle
        self.witness = witness

    def __repr__(self):
        return "CyclicityVerdict(predicate=%r, oracle=%r)" % (
            self.predicate, self.oracle)


# ---------------------------------------------------------------------------
# l-weight vectors
# ---------------------------------------------------------------------------

def _den_lcm(values):
    """lcm of the denominators of the QRat values ((1,) for other scalars)."""
    D = (1,)
    for v in values:
        if isinstance(v, QRat) and v.den != (1,):
            D = p_mul(D, p_divexact(v.den, p_gcd(D, v.den)))
    return D


def _series_ops(num, den):
    """Nonzero coefficient matrices of num/den, each up to a nonzero scalar.

    The series is first scaled (uniformly, which rescales every coefficient
    by the same unit) to clear QRat denominators; the coefficients are then
    extracted division-free, so exact arithmetic stays polynomial."""
    Dn = _den_lcm(v for m in num for v in m.entries.values())
    if Dn != (1,):
        c = QRat(Dn)
        num = [m.scaled(c) for m in num]
    Dd = _den_lcm(den)
    if Dd != (1,):
        c = QRat(Dd)
        den = [x * c for x in den]
    return coefficient_list_scaled(SeriesOp(num, list(den)))


def _offdiag_ops(rep, mode):
    """Coefficient matrices of all strictly upper (mode=highest) or strictly
    lower (mode=lowest) generator series, from every available side."""
    n = rep.n
    ops = []
    for side in rep.sides():
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if (i < j) != (mode == "highest"):
                    continue
                if i == j:
                    continue
                num = rep.Snum.get((i, j)) if side == "S" else rep.Tnum.get((i, j))
                if not num:
                    continue
                den = rep.Sden if side == "S" else rep.Tden
                ops.extend(_series_ops(num, den))
    return ops


def _all_ops(rep):
    """Coefficient matrices (up to scale) of every generator series."""
    n = rep.n
    ops = []
    for side in rep.sides():
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                num = rep.Snum.get((i, j)) if side == "S" else rep.Tnum.get((i, j))
                if not num:
                    continue
                den = rep.Sden if side == "S" else rep.Tden
                ops.extend(_series_ops(num, den))
    return ops


def _cleared_ops(ops):
    """Scale each op so every QRat entry is a polynomial (denominator 1);
    scaling an op does not change the subspaces it generates."""
    out = []
    for op in ops:
        D = _den_lcm(op.entries.values())
        out.append(op if D == (1,) else op.scaled(QRat(D)))
    return out


def specialize_rep(rep, q0):
    """rep with every table entry evaluated at q = q0, so that products and
    closures can run in plain Fraction arithmetic.  Raises ZeroDivisionError
    when a denominator degenerates at q0."""
    def conv_table(table, den):
        den_q = [c.eval(q0) for c in den]
        if not den_q[0]:
            raise ZeroDivisionError("denominator vanishes at q0")
        num = {}
        for (i, j), mats in table.items():
            num[(i, j)] = [OpMat(rep.space, rep.space,
                                 specialize_entries(m.entries, q0))
                           for m in mats]
        return num, den_q
    Snum, Sden = conv_table(rep.Snum, rep.Sden)
    Tnum, Tden = (None, None)
    if rep.Tnum is not None:
        Tnum, Tden = conv_table(rep.Tnum, rep.Tden)
    return Rep(rep.M, rep.N, rep.space, Snum, Sden, Tnum, Tden,
               kind=rep.kind, check=False)


def generator_ops(rep):
    """Spanning matrices (each up to a nonzero scalar) of the coefficients
    of every generator series of rep; closure under these ops equals
    closure under the algebra action."""
    return _all_ops(rep)


def _all_ops_numeric(rep, q0):
    """Like _all_ops but with every table specialized at q = q0 first, so
    the coefficient spans are computed in Fraction arithmetic.  Raises
    ZeroDivisionError when the specialization degenerates."""
    ops = []
    for side in rep.sides():
        table = rep.Snum if side == "S" else rep.Tnum
        den = rep.Sden if side == "S" else rep.Tden
        den_q = [c.eval(q0) for c in den]
        if not den_q[0]:
            raise ZeroDivisionError("denominator vanishes at q0")
        for (i, j), num in table.items():
            mats = [OpMat(rep.space, rep.space,
                          specialize_entries(m.entries, q0)) for m in num]
            if not any(m.entries for m in mats):
                continue
            ops.extend(coefficient_span(SeriesOp(mats, den_q)))
    return ops


def ell_weight_of(rep, vec):
    """EllWeight of a joint eigenvector of the s_ii(z); None if vec is not
    a simultaneous eigenvector."""
    n = rep.n
    pivot = min(vec)
    pval = vec[pivot]
    comps = []
    for i in range(1, n + 1):
        num = rep.Snum.get((i, i), [])
        coeffs = []
        for mat in num:
            w = mat.apply(vec)
            if not w:
                coeffs.append(ZERO)
                continue
            c = w.get(pivot, ZERO) / pval
            # eigenvector test: w == c * vec
            if any(w.get(k, ZERO) != c * v for k, v in vec.items()) \
                    or len(w) > len(vec):
                return None
            coeffs.append(c)
        comps.append(RatZ(coeffs, list(rep.Sden)))
    return EllWeight(comps, rep.space.parities[pivot])


def highest_ell_vectors(rep, mode="highest"):
    """All (vector, EllWeight) with the vector killed by every strictly
    upper (resp. lower) series coefficient, grouped weight space by weight
    space."""
    ops = _offdiag_ops(rep, mode)
    by_wt = {}
    for t, w in enumerate(rep.space.weights):
        by_wt.setdefault(w, []).append(t)
    out = []
    for w in sorted(by_wt):
        for vec in _weight_space_kernel(by_wt[w], ops):
            ell = ell_weight_of(rep, vec)
            if ell is not None:
                out.append((vec, ell))
    return out


def _weight_space_kernel(cols, ops):
    """Kernel vectors of the stacked ops restricted to the given columns."""
    dep = RowBasis()
    kernel = []
    for t in cols:
        col = {}
        for oid, op in enumerate(ops):
            for k, v in op.apply({t: ONE}).items():
                col[(0, oid, k)] = v
        col[(1, 0, t)] = ONE
        rem = dep.reduce(col)
        if all(k[0] == 1 for k in rem):
            kernel.append({k[2]: v for k, v in rem.items()})
        else:
            dep.add(rem)
    return kernel


# ---------------------------------------------------------------------------
# the closure oracle
# ---------------------------------------------------------------------------

def extreme_vector(rep, mode):
    """The unique basis vector spanning the unique maximal (resp. minimal)
    weight space; raises ValueError when ambiguous."""
    n = rep.n
    weights = rep.space.weights
    distinct = set(weights)
    extreme = []
    for w in distinct:
        if mode == "highest":
            if all(u == w or not wt_dominates(u, w, n) for u in distinct):
                extreme.append(w)
        else:
            if all(u == w or not wt_dominates(w, u, n) for u in distinct):
                extreme.append(w)
    if len(extreme) != 1:
        raise ValueError("ambiguous extreme weight: %r" % sorted(extreme))
    idxs = [t for t, u in enumerate(weights) if u == extreme[0]]
    if len(idxs) != 1:
        raise ValueError("extreme weight space has dimension %d" % len(idxs))
    return {idxs[0]: ONE}


def closure_is_full(rep, seed, ops=None):
    """(full?, witness): does the closure of seed under all generator
    coefficients exhaust the module?  witness = proper closure dimension
    when not full, else None."""
    dim = rep.space.dim
    # one-sided certificate at a prime-field point: a full specialized
    # closure implies a full exact closure (the specialization of the exact
    # closure contains the specialized closure, and rank cannot exceed dim)
    try:
        if ops is None:
            sp_ops = _all_ops_numeric(rep, Q0)
        else:
            sp_ops = [specialize_entries(op.entries, Q0) for op in ops]
        sp_seed = [specialize_vec(seed, Q0)]
        if sp_seed[0]:
            basis = subspace_closure(rep.space, sp_seed, sp_ops, stop_dim=dim)
            if len(basis) == dim:
                return True, None
    except ZeroDivisionError:
        pass
    if ops is None:
        ops = _all_ops(rep)
    basis = subspace_closure(rep.space, [seed], _cleared_ops(ops),
                             division_free=True)
    if len(basis) == dim:
        return True, None
    return False, len(basis)


def closure_verdicts(rep):
    """(highest_full, lowest_full) with the generator spanning sets shared
    between the two closure runs."""
    dim = rep.space.dim
    seeds = {"highest": extreme_vector(rep, "highest"),
             "lowest": extreme_vector(rep, "lowest")}
    numeric = None
    try:
        numeric = _all_ops_numeric(rep, Q0)
    except ZeroDivisionError:
        pass
    exact = None
    out = {}
    for mode, seed in seeds.items():
        full = None
        if numeric is not None:
            sp = specialize_vec(seed, Q0)
            if sp:
                basis = subspace_closure(rep.space, [sp], numeric,
                                         stop_dim=dim)
                if len(basis) == dim:
                    full = True
        if full is None:
            if exact is None:
                exact = _cleared_ops(_all_ops(rep))
            full = len(subspace_closure(rep.space, [seed], exact,
                                        division_free=True)) == dim
        out[mode] = full
    return out["highest"], out["lowest"]


def is_highest_ell_weight(rep, predicate=None):
    seed = extreme_vector(rep, "highest")
    full, witness = closure_is_full(rep, seed)
    return CyclicityVerdict(predicate, full, seed if full else witness)


def is_lowest_ell_weight(rep, predicate=None):
    seed = extreme_vector(rep, "lowest")
    full, witness = closure_is_full(rep, seed)
    return CyclicityVerdict(predicate, full, seed if full else witness)


# ---------------------------------------------------------------------------
# predicates
# ---------------------------------------------------------------------------

def web_predicate(fs, mode):
    """Pole/zero separation for an ordered tensor of gl(1,1) prime factors:
    highest: P(f_i) disjoint from Z(f_j) for all i < j; lowest: mirrored."""
    assert mode in ("highest", "lowest")
    zp = []
    for f in fs:
        assert f.is_normalized(), "factor not normalized at z=0"
        zp.append(zeros_poles(f))
    s = len(fs)
    for i in range(s):
        for j in range(i + 1, s):
            if mode == "highest":
                if zp[i][1] & zp[j][0]:
                    return False
            else:
                if zp[i][0] & zp[j][1]:
                    return False
    return True


def simplicity_gl11(fs):
    """Simplicity predicate: separation for every ordered pair i != j."""
    zp = []
    for f in fs:
        assert f.is_normalized(), "factor not normalized at z=0"
        zp.append(zeros_poles(f))
    s = len(fs)
    for i in range(s):
        for j in range(s):
            if i != j and zp[i][1] & zp[j][0]:
                return False
    return True


def natural_cyclicity(params, M, N, mode):
    """Spectral-parameter predicate for tensor products of natural
    evaluation modules V(a_1) (x) ... (x) V(a_k):
    highest: a_i != a_j q_1^{-2}; lowest: a_i != a_j q_{M+N}^{-2} (i < j)."""
    assert all(params), "zero spectral parameter"
    n = M + N
    qq = q_pow(-2 * d_sign(1, M)) if mode == "highest" \
        else q_pow(-2 * d_sign(n, M))
    k = len(params)
    for i in range(k):
        for j in range(i + 1, k):
            if params[i] == params[j] * qq:
                return False
    return True


def kr_cyclicity_sufficient(xs):
    """Sufficient condition for a KR tensor product to be of highest
    l-weight: the exponent sequence is non-increasing."""
    return all(xs[i] >= xs[i + 1] for i in range(len(xs) - 1))


# ---------------------------------------------------------------------------
# corner restriction to Y_q(gl(1,1))
# ---------------------------------------------------------------------------

def restrict_gl11_corner(rep, vectors):
    """The Y_q(gl(1,1))-module carried by the span of `vectors` under the
    corner series s_11, s_1n, s_n1, s_nn (n = M+N); the span must be stable."""
    n = rep.n
    basis = RowBasis()
    for v in vectors:
        basis.add(v)
    rows = basis.vectors()
    dim = len(rows)
    pivots = sorted(basis.rows)
    pivot_pos = {p: t for t, p in enumerate(pivots)}
    corner = {(1, 1): (1, 1), (1, 2): (1, n), (2, 1): (n, 1), (2, 2): (n, n)}

    # parities from the old basis; weights from the q-power exponents of the
    # two diagonal eigenvalues when recognizable, else zero (check stays off)
    parities = [rep.space.parities[next(iter(r))] for r in rows]
    weights = []
    for row in rows:
        t = next(iter(row))
        w = rep.space.weights[t]
        e1 = wt_pair(eps(1, n), w, rep.M)
        e2 = wt_pair(eps(n, n), w, rep.M)
        weights.append((e1, -e2))
    space = GradedSpace(1, 1, parities, weights, check=False)

    def restrict(num):
        out = []
        for mat in num:
            entries = {}
            for jcol, row in enumerate(rows):
                w = mat.apply(row)
                if not w:
                    continue
                coords = basis.coords(w)
                assert coords is not None, "corner action leaves the subspace"
                for p, v in coords.items():
                    entries[(pivot_pos[p], jcol)] = v
            out.append(OpMat(space, space, entries))
        return out

    Snum = {}
    for (i, j), (si, sj) in corner.items():
        num = rep.Snum.get((si, sj))
        if num:
            mats = restrict(num)
            if any(mats):
                Snum[(i, j)] = mats
    return Rep(1, 1, space, Snum, list(rep.Sden), kind="q_yangian", check=False)
