"""Perk-Schultz R-matrix R(z,w) for gl(M,N), its structural properties
(Yang-Baxter, unitarity, ice rule, supertranspose symmetry, spectral
decomposition, Hecke relation, q <-> 1/q inversions), the projectors onto
the quantum (anti)symmetric squares, generator-level Hopf pairing values,
and the RTT-relation checker used on modules.

Bivariate objects are dicts {(z-degree, w-degree): OpMat}; all identities
are checked coefficientwise, never by sampling.
"""

from .field import QRat, ZERO, ONE, Q, QINV, q_pow
from .superlinalg import (OpMat, natural_space, tensor_space, op_tensor,
                          op_identity, op_inverse, braiding, supertranspose,
                          index_parity, d_sign, MINUS_ONE)


class PerkSchultz:
    """Holds R(z,w) = z*Rz + w*Rw on C^(M+N) (x) C^(M+N), with Rz = R(1,0)
    and (by PS5) Rw = -R' = -c R^(-1) c."""

    def __init__(self, M, N):
        self.M = M
        self.N = N
        self.V = natural_space(M, N)
        self.VV = tensor_space(self.V, self.V)
        self.c = braiding(self.V, self.V)
        self.Rz, self.Rw = _build_parts(M, N, self.V, self.VV)
        self.R = self.Rz
        self.Rprime = self.c @ op_inverse(self.Rz) @ self.c

    def of(self):
        """R(z,w) as a bivariate dict."""
        return {(1, 0): self.Rz, (0, 1): self.Rw}

    def rcheck_normalized(self):
        """Rcheck(z,w) = R(z,w)/(zq - w/q); returns (num dict, den linear form
        (alpha, beta)) with den = alpha*z + beta*w."""
        return self.of(), (Q, -QINV)


def _build_parts(M, N, V, VV):
    n = M + N

    def idx(i, j):
        return (i - 1) * n + (j - 1)

    zc, wc = {}, {}
    for i in range(1, n + 1):
        qi = q_pow(d_sign(i, M))
        zc[(idx(i, i), idx(i, i))] = qi
        wc[(idx(i, i), idx(i, i))] = -qi.inv()
        for j in range(1, n + 1):
            if j == i:
                continue
            zc[(idx(i, j), idx(i, j))] = ONE
            wc[(idx(i, j), idx(i, j))] = MINUS_ONE
        for j in range(i + 1, n + 1):
            qj = q_pow(d_sign(j, M))
            # z (q_i - q_i^-1) E_ji (x) E_ij and w (q_j - q_j^-1) E_ij (x) E_ji
            # as operators with the Koszul sign of the second tensor factor
            pi, pj = index_parity(i, M), index_parity(j, M)
            sgn_z = -1 if ((pi + pj) * pi) % 2 else 1
            sgn_w = -1 if ((pi + pj) * pj) % 2 else 1
            cz = (qi - qi.inv())
            cw = (qj - qj.inv())
            if cz:
                zc[(idx(j, i), idx(i, j))] = -cz if sgn_z < 0 else cz
            if cw:
                wc[(idx(i, j), idx(j, i))] = -cw if sgn_w < 0 else cw
    zero = (0,) * n
    return (OpMat(VV, VV, zc, q_degree=zero), OpMat(VV, VV, wc, q_degree=zero))


def build_perk_schultz(M, N):
    return PerkSchultz(M, N)


# ---------------------------------------------------------------------------
# bivariate / trivariate dict algebra
# ---------------------------------------------------------------------------

def poly_mul(A, B):
    out = {}
    for ka, ma in A.items():
        for kb, mb in B.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            p = ma @ mb
            if k in out:
                out[k] = out[k] + p
            else:
                out[k] = p
    return {k: v for k, v in out.items() if v}


def poly_eq(A, B):
    A = {k: v for k, v in A.items() if v}
    B = {k: v for k, v in B.items() if v}
    return A == B


def poly_scale(A, c):
    return {k: v.scaled(c) for k, v in A.items() if v and c}


def poly_sub(A, B):
    out = {k: v for k, v in A.items() if v}
    for k, v in B.items():
        if k in out:
            s = out[k] - v
            if s:
                out[k] = s
            else:
                del out[k]
        elif v:
            out[k] = v.scaled(MINUS_ONE)
    return out


# ---------------------------------------------------------------------------
# property checks PS1-PS7
# ---------------------------------------------------------------------------

def _embed13(mat, V):
    """X on V (x) V -> X_13 on V (x) V (x) V (identity in the middle slot)."""
    n = V.dim
    W3 = tensor_space(tensor_space(V, V, check=False), V, check=False)
    out = {}
    for ((rr, cc), v) in mat.entries.items():
        a, c = divmod(rr, n)
        b, d = divmod(cc, n)
        pyd = (V.parities[c] + V.parities[d]) % 2
        for k in range(n):
            val = -v if (pyd and V.parities[k]) else v
            out[((a * n + k) * n + c, (b * n + k) * n + d)] = val
    return OpMat(W3, W3, out, q_degree=mat.q_degree)


def check_properties(ps):
    """Evaluate PS1-PS7 as exact polynomial identities; returns an ordered
    dict name -> bool."""
    M, N, V = ps.M, ps.N, ps.V
    n = M + N
    c = ps.c
    idV = op_identity(V)
    idVV = op_identity(ps.VV)
    report = {}

    # PS1: Yang-Baxter in three formal variables
    r12 = {(1, 0, 0): op_tensor(ps.Rz, idV), (0, 1, 0): op_tensor(ps.Rw, idV)}
    r23 = {(0, 1, 0): op_tensor(idV, ps.Rz), (0, 0, 1): op_tensor(idV, ps.Rw)}
    r13 = {(1, 0, 0): _embed13(ps.Rz, V), (0, 0, 1): _embed13(ps.Rw, V)}
    lhs = poly_mul(poly_mul(r12, r13), r23)
    rhs = poly_mul(poly_mul(r23, r13), r12)
    report["PS1"] = poly_eq(lhs, rhs)

    # PS2: unitarity R(z,w) c R(w,z) c = (zq - w/q)(wq - z/q) id
    Rzw = ps.of()
    Rwz = {(0, 1): ps.Rz, (1, 0): ps.Rw}
    cmat = {(0, 0): c}
    lhs = poly_mul(Rzw, poly_mul(cmat, poly_mul(Rwz, cmat)))
    # (zq - wq^-1)(wq - zq^-1) = zw(q^2 + q^-2) - z^2 - w^2
    rhs = {(1, 1): idVV.scaled(Q * Q + QINV * QINV),
           (2, 0): idVV.scaled(MINUS_ONE),
           (0, 2): idVV.scaled(MINUS_ONE)}
    report["PS2"] = poly_eq(lhs, rhs)

    # PS3: ice rule
    def ice(mat):
        for (rr, cc) in mat.entries:
            a, b = divmod(rr, n)
            cx, dx = divmod(cc, n)
            if sorted((a, b)) != sorted((cx, dx)):
                return False
        return True

    report["PS3"] = ice(ps.Rz) and ice(ps.Rw)

    # PS4: c R(z,w) c = (tau (x) tau) R(z,w)
    report["PS4"] = (c @ ps.Rz @ c == tau_tensor2(ps.Rz, V)
                     and c @ ps.Rw @ c == tau_tensor2(ps.Rw, V))

    # PS5: R(z,w) = zR - wR' with R' = c R^-1 c
    report["PS5"] = ps.Rw == ps.Rprime.scaled(MINUS_ONE)

    # PS6: Hecke, R' = R - (q - q^-1) c
    report["PS6"] = ps.Rprime == ps.R - c.scaled(Q - QINV)

    # PS7: inversions under q -> 1/q
    psq = _subs_qinv_mat
    Rq_inv_ok = (ps.R @ psq(ps.R, V)) == op_identity(ps.VV)
    Rpq_inv_ok = (ps.Rprime @ psq(ps.Rprime, V)) == op_identity(ps.VV)
    # Rcheck_q(z,w)^-1 = Rcheck_{1/q}(z,w):
    #   R_q(z,w) R_{1/q}(z,w) = (zq - w/q)(z/q - wq) id
    Rzw_qinv = {(1, 0): psq(ps.Rz, V), (0, 1): psq(ps.Rw, V)}
    prod = poly_mul(Rzw, Rzw_qinv)
    # (zq - wq^-1)(zq^-1 - wq) = z^2 - zw(q^2 + q^-2) + w^2
    scal = {(2, 0): idVV, (1, 1): idVV.scaled(-(Q * Q + QINV * QINV)),
            (0, 2): idVV}
    report["PS7"] = Rq_inv_ok and Rpq_inv_ok and poly_eq(prod, scal)
    return report


def tau_tensor2(mat, V):
    """(tau (x) tau) applied to an operator on V (x) V (matrix convention
    with Koszul signs baked into entries)."""
    n = V.dim
    par = V.parities
    out = {}
    for ((rr, cc), v) in mat.entries.items():
        a, b = divmod(rr, n)
        cx, dx = divmod(cc, n)
        # strip the Koszul sign of E_{a,cx} (x) E_{b,dx}, apply tau, re-bake
        s = 0
        s += (par[b] + par[dx]) * par[cx]          # original Koszul sign
        s += par[a] * (par[a] + par[cx])           # eps_{a,cx}
        s += par[b] * (par[b] + par[dx])           # eps_{b,dx}
        s += (par[dx] + par[b]) * par[a]           # Koszul sign of the image
        key = (cx * n + dx, a * n + b)
        val = -v if s % 2 else v
        out[key] = val if key not in out else out[key] + val
    return OpMat(mat.dom, mat.cod, out)


def _subs_qinv_mat(mat, V):
    return OpMat(mat.dom, mat.cod,
                 {k: v.subs_qinv() for k, v in mat.entries.items()},
                 mat.q_degree)


# ---------------------------------------------------------------------------
# projectors onto the quantum symmetric / antisymmetric squares
# ---------------------------------------------------------------------------

class Projectors:
    def __init__(self, M, N):
        ps = PerkSchultz(M, N)
        V, VV = ps.V, ps.VV
        n = M + N
        cols = []
        for i in range(n):
            for j in range(i + 1, n):
                sgn = MINUS_ONE if V.parities[i] * V.parities[j] else ONE
                cols.append({i * n + j: Q, j * n + i: sgn})
        for k in range(M):
            cols.append({k * n + k: ONE})
        self.dim_plus = len(cols)
        for i in range(n):
            for j in range(i + 1, n):
                sgn = MINUS_ONE if V.parities[i] * V.parities[j] else ONE
                cols.append({i * n + j: QINV, j * n + i: -sgn})
        for k in range(M, n):
            cols.append({k * n + k: ONE})
        self.dim_minus = len(cols) - self.dim_plus
        U = OpMat(VV, VV, {(r, c): v for c, col in enumerate(cols)
                           for r, v in col.items()})
        Uinv = op_inverse(U)
        Dp = OpMat(VV, VV, {(i, i): ONE for i in range(self.dim_plus)})
        Dm = OpMat(VV, VV, {(i, i): ONE
                            for i in range(self.dim_plus, VV.dim)})
        self.Pplus = U @ Dp @ Uinv
        self.Pminus = U @ Dm @ Uinv
        self.ps = ps

    def reconstruct_r(self):
        """c((zq - w/q)P+ + (wq - z/q)P-) as a bivariate dict."""
        c = self.ps.c
        zpart = (c @ self.Pplus).scaled(Q) + (c @ self.Pminus).scaled(-QINV)
        wpart = (c @ self.Pplus).scaled(-QINV) + (c @ self.Pminus).scaled(Q)
        return {(1, 0): zpart, (0, 1): wpart}


# ---------------------------------------------------------------------------
# Hopf pairing values from the expansion of Rcheck(z,w)
# ---------------------------------------------------------------------------

def hopf_pairing_value(M, N, i, j, n_mode, a, b, m_mode, order=None):
    """phi-hat(s_ij^(n), t_ab^(m)) = coefficient of z^-m w^n on E_ab (x) E_ij
    in Rcheck(z,w) = R(z,w)/(zq - w/q), expanded in z^-1 and w."""
    ps = PerkSchultz(M, N)
    n = M + N
    if order is None:
        order = max(8, n_mode + 1, m_mode + 1)
    rr = (a - 1) * n + (i - 1)
    cc = (b - 1) * n + (j - 1)
    alpha = ps.Rz.entries.get((rr, cc), ZERO)
    beta = ps.Rw.entries.get((rr, cc), ZERO)
    # strip the Koszul sign so we read the coefficient on E_ab (x) E_ij
    pij = (index_parity(i, M) + index_parity(j, M)) % 2
    sgn = MINUS_ONE if (pij and index_parity(b, M)) else ONE
    # (alpha z + beta w)/(zq - w/q) = sum_k q^{-2k-1}(alpha z + beta w) w^k z^{-k-1}
    total = ZERO
    for k in range(order + 1):
        cfac = q_pow(-2 * k - 1)
        # alpha term: z^{-k} w^k
        if k == m_mode and k == n_mode:
            total = total + alpha * cfac
        # beta term: z^{-k-1} w^{k+1}
        if k + 1 == m_mode and k + 1 == n_mode:
            total = total + beta * cfac
    return total * sgn


# ---------------------------------------------------------------------------
# RTT relations on modules
# ---------------------------------------------------------------------------

def _table_laurent(rep, side, slot, aux_pair, spaces):
    """The operator-valued Laurent polynomial S_1x(z) (slot=2 or 3) as a
    bivariate dict on V_rep (x) C^n (x) C^n."""
    n = rep.n
    aux = aux_pair
    id_aux = op_identity(aux)
    out = {}
    num = rep.Snum if side == "S" else rep.Tnum
    sign = 1 if side == "S" else -1
    varpos = 0 if slot == 2 else 1
    for (i, j), mats in num.items():
        E = OpMat(aux, aux, {(i - 1, j - 1): ONE})
        for k, mat in enumerate(mats):
            if not mat:
                continue
            if slot == 2:
                big = op_tensor(op_tensor(mat, E), id_aux)
            else:
                big = op_tensor(op_tensor(mat, id_aux), E)
            key = [0, 0]
            key[varpos] = sign * k
            key = tuple(key)
            out[key] = big if key not in out else out[key] + big
    return out


def check_rtt(rep, relation):
    """Check one of the defining relations on a module, exactly in z, w:
    relation in {"SS", "TT", "TS"}:
        R23(z,w) A12(z) B13(w) = B13(w) A12(z) R23(z,w)
    with (A,B) = (S,S), (T,T) or (T,S).  Denominators are scalar and common,
    so numerator tables are compared.  Returns (ok, witness)."""
    ps = PerkSchultz(rep.M, rep.N)
    aux = ps.V
    idrep = op_identity(rep.space)
    r23 = {(1, 0): op_tensor(idrep, ps.Rz), (0, 1): op_tensor(idrep, ps.Rw)}
    sideA, sideB = {"SS": ("S", "S"), "TT": ("T", "T"), "TS": ("T", "S")}[relation]
    A12 = _table_laurent(rep, sideA, 2, aux, None)
    B13 = _table_laurent(rep, sideB, 3, aux, None)
    lhs = poly_mul(r23, poly_mul(A12, B13))
    rhs = poly_mul(poly_mul(B13, A12), r23)
    diff = poly_sub(lhs, rhs)
    if not diff:
        return True, None
    key = sorted(diff)[0]
    return False, (key, sorted(diff[key].entries)[0])
