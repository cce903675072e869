"""Concrete modules: natural representation and its evaluations, simple
finite-type modules L(varpi_r) inside tensor powers, Kirillov-Reshetikhin
modules, the 2-dimensional and 1-dimensional gl(1,1) q-Yangian zoo, duals,
series twists, and the gl(M,N) <-> gl(N,M) flip.

A Rep stores the generator tables as numerator z-polynomials with OpMat
coefficients over a single scalar denominator per table:
    s_ij(z) = Snum[i,j](z) / Sden(z)            (powers of z)
    t_ij(z) = Tnum[i,j](1/z) / Tden(1/z)        (powers of 1/z)
"""

from .field import (QRat, ZERO, ONE, q_pow, qint, RatZ, RATZ_ZERO, RATZ_ONE,
                    zp_trim, zp_mul, zp_divmod, zp_gcd, ratz_to_ratzfun,
                    FactoredRatZ)
from .superlinalg import (GradedSpace, OpMat, SeriesOp, natural_space,
                          tensor_space, op_tensor, op_zero, op_identity,
                          index_parity, d_sign, eps, wt_add, wt_sub, wt_pair,
                          wt_parity, MINUS_ONE, subspace_closure, RowBasis)


class Rep:
    """A module over U_q(gl(M,N)-hat) (affine), its q-Yangian (S only), or
    the finite-type algebra (constant tables)."""

    def __init__(self, M, N, space, Snum, Sden, Tnum=None, Tden=None,
                 kind="affine", check=True):
        self.M = M
        self.N = N
        self.space = space
        self.Snum = {k: v for k, v in Snum.items() if any(v)}
        self.Sden = zp_trim(Sden) or [ONE]
        self.Tnum = ({k: v for k, v in Tnum.items() if any(v)}
                     if Tnum is not None else None)
        self.Tden = (zp_trim(Tden) or [ONE]) if Tden is not None else None
        self.kind = kind
        assert self.Sden[0], "S denominator vanishes at z=0"
        if self.Tden is not None:
            assert self.Tden[0], "T denominator vanishes at z=infinity"
        if check:
            self._check_weight_diag()

    @property
    def n(self):
        return self.M + self.N

    def snum(self, i, j):
        return self.Snum.get((i, j), [])

    def tnum(self, i, j):
        assert self.Tnum is not None, "rep has no t-table"
        return self.Tnum.get((i, j), [])

    def series(self, i, j, side="S"):
        if side == "S":
            num = self.snum(i, j)
            if not num:
                num = [op_zero(self.space, self.space,
                               q_degree=wt_sub(eps(i, self.n), eps(j, self.n)))]
            return SeriesOp(num, self.Sden, var="z")
        num = self.tnum(i, j)
        if not num:
            num = [op_zero(self.space, self.space,
                           q_degree=wt_sub(eps(i, self.n), eps(j, self.n)))]
        return SeriesOp(num, self.Tden, var="z_inverse")

    def sides(self):
        return ("S", "T") if self.Tnum is not None else ("S",)

    def _check_weight_diag(self):
        """s_ii^(0) must act diagonally with eigenvalue q^((eps_i, wt))."""
        d0 = self.Sden[0]
        for i in range(1, self.n + 1):
            num = self.snum(i, i)
            mat = num[0] if num else None
            for (r, c), v in (mat.entries.items() if mat else ()):
                assert r == c, "s_%d%d^(0) not diagonal" % (i, i)
                expect = q_pow(wt_pair(eps(i, self.n), self.space.weights[r], self.M))
                assert v == expect * d0, \
                    "wrong diagonal eigenvalue at generator %d, basis %d" % (i, r)


# ---------------------------------------------------------------------------
# z-polynomials with OpMat coefficients
# ---------------------------------------------------------------------------

def mp_trim(ms):
    n = len(ms)
    while n and not ms[n - 1]:
        n -= 1
    return list(ms[:n])


def mp_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, m in enumerate(b):
        out[i] = out[i] + m
    return mp_trim(out)


def mp_scale(ms, c):
    return mp_trim([m.scaled(c) for m in ms])


def mp_neg(ms):
    return [-m for m in ms]


def mp_scalarpoly_mul(ms, sp):
    """Multiply an OpMat z-polynomial by a scalar z-polynomial."""
    if not ms or not sp:
        return []
    out = [None] * (len(ms) + len(sp) - 1)
    for i, m in enumerate(ms):
        for j, c in enumerate(sp):
            if not c:
                continue
            t = m.scaled(c)
            out[i + j] = t if out[i + j] is None else out[i + j] + t
    z = None
    for i, m in enumerate(out):
        if m is None:
            if z is None:
                z = op_zero(ms[0].dom, ms[0].cod)
            out[i] = z
    return mp_trim(out)


def mp_tensor_conv(a, b, space):
    """Coefficientwise (graded) tensor-product convolution of two OpMat
    z-polynomials; `space` is the (dom, cod) pair of the product."""
    if not a or not b:
        return []
    out = [None] * (len(a) + len(b) - 1)
    for i, m1 in enumerate(a):
        if not m1:
            continue
        for j, m2 in enumerate(b):
            if not m2:
                continue
            t = op_tensor(m1, m2, space=space)
            out[i + j] = t if out[i + j] is None else out[i + j] + t
    dom, cod = space
    z = None
    for i, m in enumerate(out):
        if m is None:
            if z is None:
                z = op_zero(dom, cod)
            out[i] = z
    return mp_trim(out)


# ---------------------------------------------------------------------------
# tensor products of reps (coproduct action)
# ---------------------------------------------------------------------------

def tensor_pair(V, W):
    """Action of the coproduct on V (x) W:
    s_ij -> sum_k (-1)^((|i|+|k|)(|k|+|j|)) s_ik (x) s_kj, same for t."""
    assert (V.M, V.N) == (W.M, W.N), "mixed algebras"
    M, N = V.M, V.N
    n = M + N
    space = tensor_space(V.space, W.space, check=False)
    pair = (space, space)

    def table(numV, denV, numW, denW):
        num = {}
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                acc = []
                for k in range(1, n + 1):
                    a = numV.get((i, k))
                    b = numW.get((k, j))
                    if not a or not b:
                        continue
                    term = mp_tensor_conv(a, b, pair)
                    sign = ((index_parity(i, M) + index_parity(k, M))
                            * (index_parity(k, M) + index_parity(j, M))) % 2
                    if sign:
                        term = mp_neg(term)
                    acc = mp_add(acc, term)
                if acc:
                    num[(i, j)] = acc
        return num, zp_mul(denV, denW)

    Snum, Sden = table(V.Snum, V.Sden, W.Snum, W.Sden)
    if V.Tnum is not None and W.Tnum is not None:
        Tnum, Tden = table(V.Tnum, V.Tden, W.Tnum, W.Tden)
        kind = "affine" if V.kind == W.kind == "affine" else "finite"
        if V.kind != W.kind:
            kind = "affine"
    else:
        Tnum, Tden, kind = None, None, "q_yangian"
    if V.kind == W.kind == "finite":
        kind = "finite"
    return Rep(M, N, space, Snum, Sden, Tnum, Tden, kind=kind, check=False)


def tensor_reps(reps):
    assert reps, "empty tensor"
    out = reps[0]
    for r in reps[1:]:
        out = tensor_pair(out, r)
    return out


# ---------------------------------------------------------------------------
# the natural representation and evaluation modules
# ---------------------------------------------------------------------------

def natural_finite(M, N):
    """rho(s_ii) = q_i E_ii + sum_{j!=i} E_jj, rho(s_ij) = (q_i - q_i^-1)E_ij
    (i<j), rho(t_ji) = (q_i^-1 - q_i)E_ji (i<j), t_ii = s_ii^-1."""
    n = M + N
    sp = natural_space(M, N)
    Snum, Tnum = {}, {}

    def unit(r, c, v):
        return OpMat(sp, sp, {(r, c): v},
                     q_degree=wt_sub(eps(r + 1, n), eps(c + 1, n)))

    for i in range(1, n + 1):
        qi = q_pow(d_sign(i, M))
        diag_s = {(r, r): (qi if r == i - 1 else ONE) for r in range(n)}
        diag_t = {(r, r): (qi.inv() if r == i - 1 else ONE) for r in range(n)}
        zdeg = (0,) * n
        Snum[(i, i)] = [OpMat(sp, sp, diag_s, q_degree=zdeg)]
        Tnum[(i, i)] = [OpMat(sp, sp, diag_t, q_degree=zdeg)]
        for j in range(i + 1, n + 1):
            coeff = qi - qi.inv()
            Snum[(i, j)] = [unit(i - 1, j - 1, coeff)]
            Tnum[(j, i)] = [unit(j - 1, i - 1, -coeff)]
    return Rep(M, N, sp, Snum, [ONE], Tnum, [ONE], kind="finite")


def evaluate(rep, a):
    """Pull a finite-type rep back through the evaluation map at spectral
    parameter a: s_ij(z) -> s_ij - z a t_ij, t_ij(z) -> t_ij - z^-1 a^-1 s_ij."""
    assert rep.kind == "finite", "evaluation needs a finite-type rep"
    assert a, "a = 0"
    ainv = a.inv()
    n = rep.n
    Snum, Tnum = {}, {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            s0 = rep.Snum.get((i, j))
            t0 = rep.Tnum.get((i, j))
            smat = s0[0] if s0 else None
            tmat = t0[0] if t0 else None
            if smat is not None or tmat is not None:
                zmat = op_zero(rep.space, rep.space)
                Snum[(i, j)] = mp_trim([smat if smat is not None else zmat,
                                        tmat.scaled(-a) if tmat is not None else zmat])
                Tnum[(i, j)] = mp_trim([tmat if tmat is not None else zmat,
                                        smat.scaled(-ainv) if smat is not None else zmat])
    return Rep(rep.M, rep.N, rep.space, Snum, [ONE], Tnum, [ONE], kind="affine")


def eval_natural(a, M, N):
    """The natural evaluation module V(a)."""
    return evaluate(natural_finite(M, N), a)


# ---------------------------------------------------------------------------
# L(varpi_r) and Kirillov-Reshetikhin modules
# ---------------------------------------------------------------------------

def sub_rep(rep, basis):
    """Restrict all tables of `rep` to the span of a RowBasis (must be stable)."""
    rows = basis.vectors()
    dim = len(rows)
    weights, parities, labels = [], [], []
    for row in rows:
        idx = next(iter(row))
        weights.append(rep.space.weights[idx])
        parities.append(rep.space.parities[idx])
        labels.append(min(row))
    space = GradedSpace(rep.M, rep.N, parities, weights, labels, check=False)
    pivots = sorted(basis.rows)
    pivot_pos = {p: t for t, p in enumerate(pivots)}

    def restrict(num):
        out = []
        for mat in num:
            entries = {}
            for jcol, row in enumerate(rows):
                w = mat.apply(row)
                if not w:
                    continue
                coords = basis.coords(w)
                assert coords is not None, "subspace not stable under action"
                for p, v in coords.items():
                    entries[(pivot_pos[p], jcol)] = v
            out.append(OpMat(space, space, entries, mat.q_degree))
        return out

    Snum = {k: restrict(v) for k, v in rep.Snum.items()}
    Tnum = ({k: restrict(v) for k, v in rep.Tnum.items()}
            if rep.Tnum is not None else None)
    return Rep(rep.M, rep.N, space, Snum, list(rep.Sden), Tnum,
               list(rep.Tden) if rep.Tden is not None else None,
               kind=rep.kind, check=False)


def simple_finite_module(M, N, r):
    """L(varpi_r) for 1 <= r <= M, as the submodule of V^(x)r generated by
    its highest-weight vector: the unique (up to scalar) vector of weight
    varpi_r = eps_1 + ... + eps_r killed by every raising generator s_ij, i<j."""
    assert 1 <= r <= M, "r out of range"
    V = natural_finite(M, N)
    T = tensor_reps([V] * r)
    n = M + N
    target = tuple(1 if t < r else 0 for t in range(n))
    cols = [t for t, w in enumerate(T.space.weights) if w == target]
    raising = [T.Snum[(i, j)][0] for i in range(1, n + 1)
               for j in range(i + 1, n + 1) if (i, j) in T.Snum]
    # kernel of the stacked raising action on the varpi_r weight space
    dep = RowBasis()
    kernel = []
    for t in cols:
        col = {}
        for oid, op in enumerate(raising):
            for k, v in op.apply({t: ONE}).items():
                col[(0, oid, k)] = v
        col[(1, 0, t)] = ONE  # bookkeeping tail, reduced after constraints
        rem = dep.reduce(col)
        if all(k[0] == 1 for k in rem):
            kernel.append({k[2]: v for k, v in rem.items()})
        else:
            dep.add(rem)
    assert len(kernel) == 1, "highest-weight vector not unique"
    ops = []
    for side in ("S", "T"):
        num = T.Snum if side == "S" else T.Tnum
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                mats = num.get((i, j))
                if mats:
                    ops.append(mats[0])
    basis = subspace_closure(T.space, kernel, ops)
    return sub_rep(T, basis)


def parity_shift(rep):
    """Tensor with the odd one-dimensional module: flip all basis parities."""
    sp = rep.space
    space = GradedSpace(rep.M, rep.N, [1 - p for p in sp.parities],
                        sp.weights, sp.labels, check=False)

    def move(num):
        return [OpMat(space, space, dict(m.entries), m.q_degree) for m in num]

    return Rep(rep.M, rep.N, space,
               {k: move(v) for k, v in rep.Snum.items()}, list(rep.Sden),
               {k: move(v) for k, v in rep.Tnum.items()} if rep.Tnum is not None else None,
               list(rep.Tden) if rep.Tden is not None else None,
               kind=rep.kind, check=False)


def flip_MN(rep):
    """Pull back through the isomorphism gl(M,N) <-> gl(N,M):
    s_{ij} acts as eps^J_{ji} s_{jbar,ibar}, ibar = M+N+1-i, with the sign
    computed in the parities of the target index set."""
    M, N = rep.M, rep.N
    n = M + N
    Mp = N  # flipped algebra sizes
    sp = rep.space
    space = GradedSpace(Mp, M, sp.parities,
                        [tuple(-w[n - 1 - t] for t in range(n)) for w in sp.weights],
                        sp.labels, check=False)

    def sign(i, j):
        pj = index_parity(j, Mp)
        pi = index_parity(i, Mp)
        return -1 if (pj * (pj + pi)) % 2 else 1

    def table(num):
        out = {}
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                src = num.get((n + 1 - j, n + 1 - i))
                if not src:
                    continue
                s = sign(i, j)
                deg = wt_sub(eps(i, n), eps(j, n))
                mats = [OpMat(space, space,
                              dict(m.entries) if s > 0 else
                              {k: -v for k, v in m.entries.items()},
                              deg)
                        for m in src]
                out[(i, j)] = mats
        return out

    return Rep(Mp, M, space, table(rep.Snum), list(rep.Sden),
               table(rep.Tnum) if rep.Tnum is not None else None,
               list(rep.Tden) if rep.Tden is not None else None,
               kind=rep.kind, check=False)


def kr_module(M, N, r, a):
    """W^(r)_{1,a} = ev_a^* L(varpi_r) tensored with the parity shift that
    makes the highest vector even.  For r > M, built over gl(N,M) and flipped."""
    assert 1 <= r <= M + N - 1, "r out of range"
    assert a, "a = 0"
    if r <= M:
        return evaluate(simple_finite_module(M, N, r), a)
    W = kr_module(N, M, M + N - r, a)
    W = flip_MN(W)
    if (M + N - r) % 2:
        W = parity_shift(W)
    return W


# ---------------------------------------------------------------------------
# the gl(1,1) zoo
# ---------------------------------------------------------------------------

def gl11_space():
    return GradedSpace(1, 1, [0, 1], [(0, 0), (-1, 1)], labels=["v1", "v2"])


def gl11_prime(a, b):
    """The 2-dimensional prime module V((1-za)/(1-zb)); a=0 or b=0 allowed,
    a != b required."""
    assert a != b, "a = b"
    sp = gl11_space()

    def m(entries, i, j):
        return OpMat(sp, sp, entries, q_degree=wt_sub(eps(i, 2), eps(j, 2)))

    qi = q_pow(-1)
    E11, E22 = (0, 0), (1, 1)
    Snum = {
        (1, 1): mp_trim([m({E11: ONE, E22: qi}, 1, 1),
                         m({E11: -a, E22: -(a * q_pow(1))}, 1, 1)]),
        (2, 2): mp_trim([m({E11: ONE, E22: qi}, 2, 2),
                         m({E11: -b, E22: -(b * q_pow(1))}, 2, 2)]),
    }
    c12 = (qi - q_pow(1)) * (b - a)
    if c12:
        Snum[(1, 2)] = [m({(0, 1): c12}, 1, 2)]
    Snum[(2, 1)] = [m({}, 2, 1), m({(1, 0): MINUS_ONE}, 2, 1)]
    return Rep(1, 1, sp, Snum, [ONE, -b], kind="q_yangian")


def gl11_onedim(kind, s=0, a=None, b=None, f=None):
    """One-dimensional Y_q(gl(1,1)) modules: parity shift C_s, torus
    character C_(a,b), series character C_f."""
    if kind == "parity":
        weight = (0, 0)
        sa = sb = [ONE]
        den = [ONE]
        par = s % 2
    elif kind == "torus":
        assert a and b, "zero parameter"
        pa, pb = a.as_q_power(), b.as_q_power()
        if pa and pb and pa[0] == 1 and pb[0] == 1:
            weight = (pa[1], -pb[1])
        else:
            weight = (0, 0)
        sa, sb = [a], [b]
        den = [ONE]
        par = 0
    elif kind == "series":
        assert f is not None and f.is_normalized(), "f(0) != 1"
        num, den = f.expand()
        weight = (0, 0)
        sa = sb = num
        par = 0
    else:
        raise ValueError("unknown kind %r" % kind)
    space = GradedSpace(1, 1, [par], [weight], labels=["u"], check=False)

    def mats(coeffs, i):
        return [OpMat(space, space, {(0, 0): c}, q_degree=(0, 0)) for c in coeffs]

    Snum = {(1, 1): mp_trim(mats(sa, 1)), (2, 2): mp_trim(mats(sb, 2))}
    return Rep(1, 1, space, Snum, den, kind="q_yangian", check=False)


# ---------------------------------------------------------------------------
# duals and twists
# ---------------------------------------------------------------------------

def dual_module(rep):
    """Graded dual with action through the antipode: rho*(x) phi = (-1)^{|x||phi|}
    phi(rho(S x) .), written in the reversed dual basis (v_d^*, ..., v_1^*)."""
    n, d = rep.n, rep.space.dim
    sp0 = rep.space
    # represent sum_ij s_ij (x) E_ij as an operator on V_rep (x) C^n with
    # Koszul signs baked in, so that plain matrix inversion inverts it in
    # the graded tensor-product algebra
    big = [[RATZ_ZERO] * (n * d) for _ in range(n * d)]
    for (i, j), num in rep.Snum.items():
        pij = (index_parity(i, rep.M) + index_parity(j, rep.M)) % 2
        for r in range(d):
            for c in range(d):
                coeffs = [m.entries.get((r, c), ZERO) for m in num]
                if any(coeffs):
                    F = RatZ(coeffs, list(rep.Sden))
                    if pij and sp0.parities[c]:
                        F = -F
                    big[r * n + i - 1][c * n + j - 1] = F
    biginv = _ratz_matrix_inverse(big)
    # un-bake the signs from the inverse to read off rho(antipode(s_ij))
    def ginv(i, j, r, c):
        F = biginv[r * n + i - 1][c * n + j - 1]
        pij = (index_parity(i, rep.M) + index_parity(j, rep.M)) % 2
        if F and pij and sp0.parities[c]:
            F = -F
        return F

    sp = rep.space
    space = GradedSpace(rep.M, rep.N,
                        list(reversed(sp.parities)),
                        [tuple(-x for x in w) for w in reversed(sp.weights)],
                        [("dual", l) for l in reversed(sp.labels)],
                        check=False)
    # collect the dual table as RatZ entries, then clear to one denominator
    entries = {}
    dens = [ONE]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            pij = (index_parity(i, rep.M) + index_parity(j, rep.M)) % 2
            for r in range(d):
                for c in range(d):
                    F = ginv(i, j, r, c)
                    if not F:
                        continue
                    if pij and sp.parities[r]:
                        F = -F
                    # old (row=c', col=l') = (c, r); reversed order
                    entries[(i, j, d - 1 - c, d - 1 - r)] = F
                    g = zp_gcd(dens, F.den)
                    extra, rem = zp_divmod(F.den, g)
                    assert not rem
                    dens = zp_mul(dens, extra)
    assert dens[0], "dual denominator vanishes at z=0"
    Snum = {}
    for (i, j, r, c), F in entries.items():
        cof, rem = zp_divmod(dens, F.den)
        assert not rem
        numpoly = zp_mul(F.num, cof)
        mats = Snum.setdefault((i, j), [])
        for k, v in enumerate(numpoly):
            while len(mats) <= k:
                mats.append(op_zero(space, space))
            if v:
                mats[k] = mats[k] + OpMat(space, space, {(r, c): v})
    Snum = {k: mp_trim(v) for k, v in Snum.items()}
    return Rep(rep.M, rep.N, space, Snum, dens, kind="q_yangian", check=False)


def _ratz_matrix_inverse(m):
    size = len(m)
    aug = [row[:] + [RATZ_ONE if r == c else RATZ_ZERO for c in range(size)]
           for r, row in enumerate(m)]
    for col in range(size):
        piv = next((r for r in range(col, size) if aug[r][col]), None)
        assert piv is not None, "singular S-matrix"
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


def twist_series(rep, f=None, g=None):
    """Twist by the automorphism t_ij(z) -> f(z) t_ij(z), s_ij(z) -> g(z) s_ij(z).
    g is a FactoredRatZ in z with g(0)=1; f is a FactoredRatZ in 1/z with
    f(infinity)=1 (both may be None for no twist)."""
    Snum, Sden = rep.Snum, list(rep.Sden)
    Tnum = rep.Tnum
    Tden = list(rep.Tden) if rep.Tden is not None else None
    if g is not None:
        assert g.is_normalized(), "g(0) != 1"
        gn, gd = g.expand()
        Snum = {k: mp_scalarpoly_mul(v, gn) for k, v in Snum.items()}
        Sden = zp_mul(Sden, gd)
    if f is not None:
        assert f.is_normalized(), "f not normalized at infinity"
        assert Tnum is not None, "rep has no t-table"
        fn, fd = f.expand()
        Tnum = {k: mp_scalarpoly_mul(v, fn) for k, v in Tnum.items()}
        Tden = zp_mul(Tden, fd)
    return Rep(rep.M, rep.N, rep.space, Snum, Sden, Tnum, Tden,
               kind=rep.kind, check=False)
