"""Block LDU (Gauss) decomposition of the generating matrices S(z), T(z)
acting on a module, extraction of the current series X_i^+-(z) and K_l^+-(z),
coefficientwise verification of the Cartan and [X+, X-] relations on
truncation windows, and the quantum-bracket identities relating degree-1
currents to corner matrix entries.

All series are truncated at order T (default 8, overridable by the
QLOOP_TRUNC_ORDER environment variable); every check is restricted to the
window of orders on which the truncated data determines the identity
exactly.
"""

import os

from .field import QRat, ZERO, ONE, q_pow
from .superlinalg import (OpMat, op_zero, op_identity, op_inverse,
                          index_parity, d_sign, eps, wt_sub, wt_pair,
                          wt_parity, MINUS_ONE)


def default_order():
    return int(os.environ.get("QLOOP_TRUNC_ORDER", "8"))


class TruncSeries:
    """Power series of OpMats truncated at order T (coefficients 0..T)."""

    __slots__ = ("coeffs", "T")

    def __init__(self, coeffs, T):
        self.T = T
        self.coeffs = list(coeffs) + [None] * (T + 1 - len(coeffs))
        sp = next((m for m in self.coeffs if m is not None), None)
        assert sp is not None, "empty series"
        z = op_zero(sp.dom, sp.cod)
        self.coeffs = [c if c is not None else z for c in self.coeffs]

    def __add__(self, other):
        return TruncSeries([a + b for a, b in zip(self.coeffs, other.coeffs)],
                           self.T)

    def __sub__(self, other):
        return TruncSeries([a - b for a, b in zip(self.coeffs, other.coeffs)],
                           self.T)

    def __mul__(self, other):
        out = [None] * (self.T + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.T + 1 - i):
                b = other.coeffs[j]
                if not b:
                    continue
                p = a @ b
                out[i + j] = p if out[i + j] is None else out[i + j] + p
        z = op_zero(self.coeffs[0].dom, self.coeffs[0].cod)
        return TruncSeries([c if c is not None else z for c in out], self.T)

    def inverse(self):
        """Series inverse; order-0 coefficient must be invertible."""
        c0inv = op_inverse(self.coeffs[0])
        out = [c0inv]
        for k in range(1, self.T + 1):
            acc = None
            for j in range(1, k + 1):
                t = self.coeffs[j] @ out[k - j]
                acc = t if acc is None else acc + t
            out.append((c0inv @ acc).scaled(MINUS_ONE) if acc
                       else op_zero(c0inv.dom, c0inv.cod))
        return TruncSeries(out, self.T)

    def log(self):
        """Formal log; requires order-0 coefficient = identity."""
        sp = self.coeffs[0].dom
        assert self.coeffs[0] == op_identity(sp), "log needs unit constant term"
        N = TruncSeries([op_zero(sp, sp)] + self.coeffs[1:], self.T)
        out = TruncSeries([op_zero(sp, sp)], self.T)
        power = N
        for k in range(1, self.T + 1):
            c = QRat((1,), (k,)) if k % 2 else QRat((-1,), (k,))
            out = out + TruncSeries([m.scaled(c) for m in power.coeffs], self.T)
            if k < self.T:
                power = power * N
        return out

    def is_zero(self):
        return not any(self.coeffs)


# ---------------------------------------------------------------------------
# Gauss decomposition of the generating matrix on a module
# ---------------------------------------------------------------------------

def _sign_apply(mat, pij, space, q_degree=None):
    """Multiply column entries by the Koszul sign (-1)^(pij * |col|)."""
    if not pij:
        return OpMat(space, space, dict(mat.entries), q_degree)
    out = {}
    for (r, c), v in mat.entries.items():
        out[(r, c)] = -v if space.parities[c] else v
    return OpMat(space, space, out, q_degree)


def _signed_blocks(rep, side, T):
    """Blocks of the generating matrix as TruncSeries with the Koszul signs
    of the identification U (x) End(C^n) = End(W (x) C^n) baked in, so that
    block arithmetic is the superalgebra arithmetic."""
    n, sp = rep.n, rep.space
    blocks = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            ser = rep.series(i, j, side)
            pij = (index_parity(i, rep.M) + index_parity(j, rep.M)) % 2
            blocks[(i, j)] = TruncSeries(
                [_sign_apply(ser.coeff(k), pij, sp) for k in range(T + 1)], T)
    return blocks


def _unbake(ts, i, j, rep):
    """Strip the Koszul signs from a signed coordinate series and attach the
    Q-degree eps_i - eps_j."""
    pij = (index_parity(i, rep.M) + index_parity(j, rep.M)) % 2
    deg = wt_sub(eps(i, rep.n), eps(j, rep.n))
    return [_sign_apply(m, pij, rep.space, q_degree=deg) for m in ts.coeffs]


class GaussFactors:
    """One-sided Gauss data: K[l] (l = 1..n), e[(i,j)] and f[(j,i)] for
    i < j, as unbaked coefficient lists (orders 0..T in z or 1/z)."""

    def __init__(self, rep, side, T):
        self.rep = rep
        self.side = side
        self.T = T
        n = rep.n
        X = _signed_blocks(rep, side, T)
        self._signed = {k: v for k, v in X.items()}
        work = dict(X)
        self._K_signed, self._e_signed, self._f_signed = {}, {}, {}
        for l in range(1, n + 1):
            Kl = work[(l, l)]
            Kinv = Kl.inverse()
            self._K_signed[l] = Kl
            for j in range(l + 1, n + 1):
                self._e_signed[(l, j)] = Kinv * work[(l, j)]
                self._f_signed[(j, l)] = work[(j, l)] * Kinv
            for a in range(l + 1, n + 1):
                for b in range(l + 1, n + 1):
                    work[(a, b)] = work[(a, b)] - \
                        self._f_signed[(a, l)] * Kl * self._e_signed[(l, b)]
        self.K = {l: _unbake(self._K_signed[l], l, l, rep) for l in self._K_signed}
        self.e = {ij: _unbake(self._e_signed[ij], ij[0], ij[1], rep)
                  for ij in self._e_signed}
        self.f = {ji: _unbake(self._f_signed[ji], ji[0], ji[1], rep)
                  for ji in self._f_signed}

    def reconstruction_ok(self):
        """Multiply the three factors back; compare with the input blocks."""
        n, T = self.rep.n, self.T
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                acc = None
                for l in range(1, min(i, j) + 1):
                    t = self._K_signed[l]
                    if l < i:
                        t = self._f_signed[(i, l)] * t
                    if l < j:
                        t = t * self._e_signed[(l, j)]
                    acc = t if acc is None else acc + t
                if not (acc - self._signed[(i, j)]).is_zero():
                    return False
        return True


def gauss_decompose(rep, side="S", T=None):
    if T is None:
        T = default_order()
    return GaussFactors(rep, side, T)


class DrinfeldData:
    """Currents on a module: K^+-_l coefficient lists, X_i^+- as Laurent
    dicts {mode: OpMat} on modes -T..T, H_{i,1} and h_{i,1} matrices."""

    def __init__(self, rep, T=None):
        if T is None:
            T = default_order()
        assert rep.Tnum is not None, "both generating matrices required"
        self.rep = rep
        self.T = T
        self.plus = gauss_decompose(rep, "S", T)
        self.minus = gauss_decompose(rep, "T", T)
        self.Kplus = self.plus.K      # orders 0..T in z
        self.Kminus = self.minus.K    # orders 0..T in 1/z
        n = rep.n
        self.X = {}
        for i in range(1, n):
            ep = self.plus.e[(i, i + 1)]
            em = self.minus.e[(i, i + 1)]
            fp = self.plus.f[(i + 1, i)]
            fm = self.minus.f[(i + 1, i)]
            xp = {k: ep[k] for k in range(T + 1)}
            for k in range(T + 1):
                v = em[k]
                key = -k
                xp[key] = xp.get(key, op_zero(rep.space, rep.space,
                                              v.q_degree)) - v
            xm = {-k: fm[k] for k in range(T + 1)}
            for k in range(T + 1):
                v = fp[k]
                xm[k] = xm.get(k, op_zero(rep.space, rep.space,
                                          v.q_degree)) - v
            self.X[i] = {"+": xp, "-": xm}
        # H_{i,1} = coefficient of z in log((s_ii^(0))^-1 K_i^+(z)) / (q_i - 1/q_i)
        self.H1 = {}
        for l in range(1, n + 1):
            ql = q_pow(d_sign(l, rep.M))
            c = (ql - ql.inv()).inv()
            k0inv = op_inverse(self.Kplus[l][0])
            self.H1[l] = (k0inv @ self.Kplus[l][1]).scaled(c)
        self.h1 = {}
        for i in range(1, n):
            di, di1 = d_sign(i, rep.M), d_sign(i + 1, rep.M)
            a = self.H1[i].scaled(q_pow(0) if di == 1 else MINUS_ONE)
            b = self.H1[i + 1].scaled(q_pow(0) if di1 == 1 else MINUS_ONE)
            self.h1[i] = a - b


# ---------------------------------------------------------------------------
# relation checks on truncation windows
# ---------------------------------------------------------------------------

def _khat(data, l, side):
    """K-series coefficient accessor in true z-exponents: K^+ lives on
    exponents 0..T, K^- on -T..0."""
    T = data.T
    K = data.Kplus if side == "+" else data.Kminus
    z = op_zero(data.rep.space, data.rep.space)

    def at(m):
        k = m if side == "+" else -m
        return K[l][k] if 0 <= k <= T else z

    rng = range(0, T + 1) if side == "+" else range(-T, 1)
    return at, rng


def check_cartan(data, i_K, j_X, x_sign, k_side):
    """One Cartan relation, exactly on its valid coefficient window:
        i_K not in {j_X, j_X+1}: K and X commute;
        i_K = j_X:   (q_j z - q_j^-1 w)^(+-1) factor;
        i_K = j_X+1: (q_{j+1}^-1 z - q_{j+1} w)^(+-1) factor."""
    rep, T = data.rep, data.T
    Kat, Krng = _khat(data, i_K, k_side)
    Xc = data.X[j_X][x_sign]
    n_rng = range(-T + 1, T + 1)
    if i_K not in (j_X, j_X + 1):
        for m in Krng:
            for nn in range(-T, T + 1):
                if Kat(m) @ Xc[nn] != Xc[nn] @ Kat(m):
                    return False
        return True
    if i_K == j_X:
        qi = q_pow(d_sign(j_X, rep.M))
        a, b = qi, -qi.inv()
    else:
        qi1 = q_pow(d_sign(j_X + 1, rep.M))
        a, b = qi1.inv(), -qi1
    # with P(z,w) = a z + b w:  X+ :  P * K X = (z - w) X K
    #                           X- :  (z - w) K X = P * X K
    m_rng = [m for m in Krng if (m - 1 in Krng)]
    for m in m_rng:
        for nn in n_rng:
            KX1, KX0 = Kat(m - 1) @ Xc[nn], Kat(m) @ Xc[nn - 1]
            XK1, XK0 = Xc[nn] @ Kat(m - 1), Xc[nn - 1] @ Kat(m)
            if x_sign == "+":
                lhs = KX1.scaled(a) + KX0.scaled(b)
                rhs = XK1 - XK0
            else:
                lhs = KX1 - KX0
                rhs = XK1.scaled(a) + XK0.scaled(b)
            if lhs != rhs:
                return False
    return True


def _series_ratio(data, i, side):
    """K_{i+1}(z) K_i(z)^-1 as a truncated series in z (side '+') or 1/z
    (side '-'), returned as coefficient list 0..T."""
    T = data.T
    src = data.plus if side == "+" else data.minus
    num = TruncSeries(list((data.Kplus if side == "+" else data.Kminus)[i + 1]), T)
    den = TruncSeries(list((data.Kplus if side == "+" else data.Kminus)[i]), T)
    return (num * den.inverse()).coeffs


def check_xx(data, i, j):
    """[X_i^+(z), X_j^-(w)] = delta_ij (q_i - q_i^-1) delta(z/w)
    (K_{i+1}^+ K_i^+(z)^-1 - K_{i+1}^- K_i^-(w)^-1), checked on the window
    |m|, |n| <= T/2 where every contribution is exact."""
    rep, T = data.rep, data.T
    Xp, Xm = data.X[i]["+"], data.X[j]["-"]
    pi = (index_parity(i, rep.M) + index_parity(i + 1, rep.M)) % 2
    pj = (index_parity(j, rep.M) + index_parity(j + 1, rep.M)) % 2
    koszul = MINUS_ONE if (pi and pj) else q_pow(0)
    if i == j:
        A = _series_ratio(data, i, "+")
        B = _series_ratio(data, i, "-")
        qi = q_pow(d_sign(i, rep.M))
        c = qi - qi.inv()
    h = T // 2
    for m in range(-h, h + 1):
        for nn in range(-h, h + 1):
            lhs = Xp[m] @ Xm[nn] - (Xm[nn] @ Xp[m]).scaled(koszul)
            if i != j:
                if lhs:
                    return False
                continue
            s = m + nn
            rhs = None
            if 0 <= s <= T:
                rhs = A[s].scaled(c)
            if -T <= s <= 0:
                t = B[-s].scaled(-c)
                rhs = t if rhs is None else rhs + t
            if lhs != (rhs if rhs is not None
                       else op_zero(rep.space, rep.space)):
                return False
    return True


def check_k_commute(data):
    rep, T = data.rep, data.T
    n = rep.n
    for l1 in range(1, n + 1):
        for l2 in range(l1, n + 1):
            for s1 in ("+", "-"):
                for s2 in ("+", "-"):
                    A = (data.Kplus if s1 == "+" else data.Kminus)[l1]
                    B = (data.Kplus if s2 == "+" else data.Kminus)[l2]
                    for a in A:
                        for b in B:
                            if a @ b != b @ a:
                                return False
    return True


# ---------------------------------------------------------------------------
# quantum brackets and the degree-1 identities
# ---------------------------------------------------------------------------

def quantum_bracket(x, y):
    """|_ x, y _| = xy - (-1)^(|alpha||beta|) q^((alpha,beta)) yx for
    Q-homogeneous operators (Q-degrees carried on the OpMats)."""
    a, b = x.q_degree, y.q_degree
    assert isinstance(a, tuple) and isinstance(b, tuple), "inhomogeneous input"
    M = x.dom.M
    sign = wt_parity(a, M) * wt_parity(b, M)
    c = q_pow(wt_pair(a, b, M))
    if sign:
        c = -c
    return x @ y - (y @ x).scaled(c)


def bracket_left(xs):
    """|_ x1, ..., xr _|_L, folding from the left."""
    out = xs[0]
    for x in xs[1:]:
        out = quantum_bracket(out, x)
    return out


def bracket_right(xs):
    """|_ x1, ..., xr _|_R, folding from the right."""
    out = xs[-1]
    for x in reversed(xs[:-1]):
        out = quantum_bracket(x, out)
    return out


def proportional(A, B):
    """A = c B for a single nonzero scalar c: equal zero patterns, constant
    ratio.  Returns (ok, c)."""
    if not A or not B:
        return (not A and not B), None
    if set(A.entries) != set(B.entries):
        return False, None
    c = None
    for k, v in A.entries.items():
        r = v / B.entries[k]
        if c is None:
            c = r
        elif c != r:
            return False, None
    return True, c


def _mat_coeff(rep, side, i, j, order):
    """rho(s_ij^(order)) (or t) as an OpMat, from the polynomial tables
    (denominator must be constant for the constant/linear reads used here)."""
    num = rep.Snum.get((i, j)) if side == "S" else rep.Tnum.get((i, j))
    den = rep.Sden if side == "S" else rep.Tden
    assert len(den) == 1, "non-constant denominator"
    deg = wt_sub(eps(i, rep.n), eps(j, rep.n))
    if not num or order >= len(num):
        return op_zero(rep.space, rep.space, deg)
    m = num[order].scaled(den[0].inv())
    return OpMat(rep.space, rep.space, dict(m.entries), deg)


def zero_node_bracket(data):
    """(ok, scalar) for the identity
    |_ X^-_{1,1}, X^-_{2,0}, ..., X^-_{n-1,0} _|_L  ~  s_{n,1}^(1) (s_11^(0))^-1
    up to a nonzero scalar."""
    rep = data.rep
    n = rep.n
    xs = [data.X[1]["-"][1]]
    for i in range(2, n):
        xs.append(data.X[i]["-"][0])
    lhs = bracket_left(xs)
    rhs = _mat_coeff(rep, "S", n, 1, 1) @ op_inverse(_mat_coeff(rep, "S", 1, 1, 0))
    return proportional(lhs, rhs)


def x_minus_11_identity(data):
    """X^-_{1,1} = -s_21^(1) (s_11^(0))^-1, exactly."""
    rep = data.rep
    rhs = (_mat_coeff(rep, "S", 2, 1, 1)
           @ op_inverse(_mat_coeff(rep, "S", 1, 1, 0))).scaled(MINUS_ONE)
    return data.X[1]["-"][1] == rhs


def x_minus_i0_identity(data, i):
    """X^-_{i,0} = t_{i+1,i}^(0) (t_ii^(0))^-1, exactly."""
    rep = data.rep
    rhs = _mat_coeff(rep, "T", i + 1, i, 0) @ op_inverse(
        _mat_coeff(rep, "T", i, i, 0))
    return data.X[i]["-"][0] == rhs


def h1_bracket(data, i):
    """(ok, scalar) for
    h_{i,1} ~ |_ E_i, E_{i-1}, ..., E_1, E_{i+1}, ..., E_{n-1}, E_0 _|_R."""
    rep = data.rep
    n = rep.n
    e0 = _mat_coeff(rep, "S", n, 1, 1) @ op_inverse(
        _mat_coeff(rep, "S", n, n, 0))
    es = {k: data.X[k]["+"][0] for k in range(1, n)}
    seq = [es[i]] + [es[k] for k in range(i - 1, 0, -1)] \
        + [es[k] for k in range(i + 1, n)] + [e0]
    lhs = bracket_right(seq)
    h = OpMat(rep.space, rep.space, dict(data.h1[i].entries),
              (0,) * n)
    return proportional(lhs, h)
