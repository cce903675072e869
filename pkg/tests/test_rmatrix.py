"""The Perk-Schultz R-matrix: explicit entries, structural identities,
Hecke projectors, the pairing values, and the defining relations on
concrete modules."""

from qloop.field import ZERO, ONE, Q, QINV, q_pow, qint
from qloop.rmatrix import (PerkSchultz, build_perk_schultz, check_properties,
                           Projectors, hopf_pairing_value, check_rtt)
from qloop.superlinalg import op_identity
from qloop.reps import eval_natural, gl11_prime, kr_module, dual_module


class TestEntries:
    def test_gl11_coefficients(self):
        ps = build_perk_schultz(1, 1)
        n = 2

        def at(part, i, j, a, b):
            return part.entries.get(((i - 1) * n + (a - 1),
                                     (j - 1) * n + (b - 1)), ZERO)

        # E_11 (x) E_11: z q - w q^{-1}
        assert at(ps.Rz, 1, 1, 1, 1) == Q
        assert at(ps.Rw, 1, 1, 1, 1) == -QINV
        # E_22 (x) E_22 (odd index): z q^{-1} - w q, Koszul sign trivial here
        assert at(ps.Rz, 2, 2, 2, 2) == QINV
        assert at(ps.Rw, 2, 2, 2, 2) == -Q
        # E_11 (x) E_22: z - w
        assert at(ps.Rz, 1, 1, 2, 2) == ONE
        assert at(ps.Rw, 1, 1, 2, 2) == -ONE
        # exchange term carries z(q - q^{-1}); its mirror carries w(q - q^{-1})
        assert at(ps.Rz, 2, 1, 1, 2) == Q - QINV
        assert at(ps.Rw, 1, 2, 2, 1) == Q - QINV

    def test_ice_rule(self):
        ps = build_perk_schultz(2, 1)
        n = 3
        for part in (ps.Rz, ps.Rw):
            for (r, c) in part.entries:
                i, a = divmod(r, n)
                j, b = divmod(c, n)
                assert sorted((i, a)) == sorted((j, b))


class TestProperties:
    def test_all_small(self):
        for M, N in [(1, 1), (2, 1), (1, 2)]:
            report = check_properties(build_perk_schultz(M, N))
            assert list(report) == ["PS%d" % k for k in range(1, 8)]
            assert all(report.values()), (M, N, report)


class TestProjectors:
    def test_dimensions(self):
        pr = Projectors(2, 1)
        assert (pr.dim_plus, pr.dim_minus) == (5, 4)
        pr2 = Projectors(1, 1)
        assert (pr2.dim_plus, pr2.dim_minus) == (2, 2)

    def test_idempotent_orthogonal(self):
        pr = Projectors(2, 1)
        VV = pr.ps.VV
        assert pr.Pplus @ pr.Pplus == pr.Pplus
        assert pr.Pminus @ pr.Pminus == pr.Pminus
        assert not (pr.Pplus @ pr.Pminus)
        assert pr.Pplus + pr.Pminus == op_identity(VV)

    def test_reconstruct(self):
        pr = Projectors(2, 1)
        rec = pr.reconstruct_r()
        assert rec[(1, 0)] == pr.ps.Rz
        assert rec[(0, 1)] == pr.ps.Rw


class TestPairing:
    def test_frozen_value(self):
        assert hopf_pairing_value(1, 1, 2, 2, 0, 2, 2, 0) == q_pow(-2)

    def test_mode_mismatch_vanishes(self):
        assert hopf_pairing_value(1, 1, 2, 2, 0, 2, 2, 1) == ZERO
        assert hopf_pairing_value(1, 1, 1, 1, 2, 1, 1, 3) == ZERO

    def test_diagonal_modes(self):
        # the alpha and beta contributions to phi-hat(s_11^(n), t_11^(n))
        # cancel exactly for n >= 1 and give 1 at n = 0
        assert hopf_pairing_value(1, 1, 1, 1, 0, 1, 1, 0) == ONE
        assert hopf_pairing_value(1, 1, 1, 1, 1, 1, 1, 1) == ZERO


class TestRTT:
    def test_natural_evaluation(self):
        rep = eval_natural(q_pow(2), 2, 1)
        for rel in ("SS", "TT", "TS"):
            ok, witness = check_rtt(rep, rel)
            assert ok, (rel, witness)

    def test_gl11_prime(self):
        # gl(1,1) prime modules carry only the S-side generators
        rep = gl11_prime(q_pow(2), ONE)
        ok, witness = check_rtt(rep, "SS")
        assert ok, witness

    def test_kr_and_dual(self):
        rep = kr_module(2, 1, 2, Q)
        for rel in ("SS", "TT", "TS"):
            ok, witness = check_rtt(rep, rel)
            assert ok, (rel, witness)
        d = dual_module(gl11_prime(q_pow(2), ONE))
        ok, witness = check_rtt(d, "SS")
        assert ok, witness
