"""Modules over the RTT algebra: natural, evaluation, simple finite,
Kirillov-Reshetikhin, the gl(1,1) zoo, duals, twists, and tensor products."""

import pytest

from qloop.field import (ZERO, ONE, Q, QINV, q_pow, qint, FactoredRatZ,
                         RatZ)
from qloop.reps import (natural_finite, evaluate, eval_natural,
                        simple_finite_module, kr_module, gl11_prime,
                        gl11_onedim, dual_module, flip_MN, parity_shift,
                        twist_series, tensor_pair, tensor_reps)
from qloop.chars import character, bkk_character
from qloop.rmatrix import check_rtt


class TestNatural:
    def test_matrices_gl11(self):
        V = natural_finite(1, 1)
        # s_ii constant: rho(s_11) = diag(q, 1), rho(s_22) = diag(1, q^-1)
        assert V.Snum[(1, 1)][0].entries == {(0, 0): Q, (1, 1): ONE}
        assert V.Snum[(2, 2)][0].entries == {(0, 0): ONE, (1, 1): QINV}
        # raising s_12 = (q - q^-1) E_12; lowering t_21 = -(q - q^-1) E_21
        assert V.Snum[(1, 2)][0].entries == {(0, 1): Q - QINV}
        assert V.Tnum[(2, 1)][0].entries == {(1, 0): -(Q - QINV)}

    def test_t_diag_inverts_s_diag(self):
        V = natural_finite(2, 1)
        for i in (1, 2, 3):
            s = V.Snum[(i, i)][0]
            t = V.Tnum[(i, i)][0]
            prod = s @ t
            assert prod.entries == {(k, k): ONE for k in range(3)}

    def test_evaluation_series(self):
        rep = eval_natural(q_pow(2), 1, 1)
        # s_ij(z) = s_ij - z a t_ij: degree <= 1 in z, denominator trivial
        assert rep.Sden == [ONE]
        assert len(rep.Snum[(1, 1)]) == 2
        # off-diagonal s_21(z) = -z a t_21 has no constant term
        assert not rep.Snum[(2, 1)][0]


class TestSimpleFinite:
    @pytest.mark.parametrize("M,N,r", [(1, 1, 1), (2, 1, 1), (2, 1, 2),
                                       (2, 2, 1), (2, 2, 2), (3, 1, 2)])
    def test_character_matches_combinatorics(self, M, N, r):
        L = simple_finite_module(M, N, r)
        assert character(L) == bkk_character(M, N, r)

    def test_r_range(self):
        with pytest.raises(AssertionError):
            simple_finite_module(2, 1, 3)

    def test_highest_vector_even(self):
        L = simple_finite_module(2, 1, 2)
        top = [t for t, w in enumerate(L.space.weights) if w == (1, 1, 0)]
        assert len(top) == 1
        assert L.space.parities[top[0]] == 0


class TestKR:
    def test_direct_range(self):
        W = kr_module(2, 1, 2, Q)
        assert character(W) == bkk_character(2, 1, 2)
        ok, witness = check_rtt(W, "SS")
        assert ok, witness

    def test_flipped_range(self):
        # r > M goes through gl(N,M); weights live in the gl(M,N) convention
        W = kr_module(1, 2, 2, Q)
        assert W.M == 1 and W.N == 2
        assert W.space.dim == bkk_character(2, 1, 1).dim()
        for rel in ("SS", "TT", "TS"):
            ok, witness = check_rtt(W, rel)
            assert ok, (rel, witness)

    def test_out_of_range(self):
        with pytest.raises(AssertionError):
            kr_module(1, 1, 2, Q)


class TestGl11Zoo:
    def test_prime_table(self):
        a, b = q_pow(2), ONE
        rep = gl11_prime(a, b)
        assert rep.Sden == [ONE, -b]
        # s_11(z) acts on the even line by (1 - za)/(1 - zb)
        s11 = rep.Snum[(1, 1)]
        assert s11[0].entries[(0, 0)] == ONE
        assert s11[1].entries[(0, 0)] == -a
        # and on the odd line by q^-1(1 - zaq^2)/(1 - zb)
        assert s11[0].entries[(1, 1)] == QINV
        assert s11[1].entries[(1, 1)] == -a * Q

    def test_prime_needs_distinct_params(self):
        with pytest.raises(AssertionError):
            gl11_prime(Q, Q)

    def test_onedim_parity(self):
        rep = gl11_onedim("parity", s=1)
        assert rep.space.dim == 1 and rep.space.parities == (1,)
        assert rep.Snum[(1, 1)][0].entries == {(0, 0): ONE}

    def test_onedim_torus(self):
        rep = gl11_onedim("torus", a=Q, b=QINV)
        assert rep.Snum[(1, 1)][0].entries == {(0, 0): Q}
        assert rep.Snum[(2, 2)][0].entries == {(0, 0): QINV}

    def test_onedim_series(self):
        f = FactoredRatZ(ONE, (q_pow(2),), (q_pow(4),))
        rep = gl11_onedim("series", f=f)
        assert rep.Sden == [ONE, -q_pow(4)]
        assert rep.Snum[(1, 1)] == rep.Snum[(2, 2)]
        assert rep.Snum[(1, 1)][1].entries == {(0, 0): -q_pow(2)}


class TestDualTwistFlip:
    def test_dual_reverses_weights(self):
        rep = gl11_prime(q_pow(2), ONE)
        d = dual_module(rep)
        assert d.space.parities == tuple(reversed(rep.space.parities))
        assert d.space.weights == tuple(tuple(-x for x in w)
                                        for w in reversed(rep.space.weights))

    def test_dual_of_natural_passes_rtt(self):
        d = dual_module(eval_natural(Q, 2, 1))
        ok, witness = check_rtt(d, "SS")
        assert ok, witness

    def test_twist_scales_diagonal(self):
        rep = gl11_prime(q_pow(2), ONE)
        g = FactoredRatZ(ONE, (Q,), ())
        tw = twist_series(rep, g=g)
        # l-weight components are multiplied by g: compare as RatZ
        orig = RatZ([m.entries.get((0, 0), ZERO) for m in rep.Snum[(1, 1)]],
                    list(rep.Sden))
        new = RatZ([m.entries.get((0, 0), ZERO) for m in tw.Snum[(1, 1)]],
                   list(tw.Sden))
        assert new == orig * RatZ([ONE, -Q])

    def test_twist_requires_normalized(self):
        with pytest.raises(AssertionError):
            twist_series(gl11_prime(Q, ONE), g=FactoredRatZ(Q))

    def test_flip_and_parity_shift(self):
        rep = eval_natural(Q, 2, 1)
        fl = flip_MN(rep)
        assert (fl.M, fl.N) == (1, 2)
        assert fl.space.dim == 3
        for rel in ("SS", "TT", "TS"):
            ok, witness = check_rtt(fl, rel)
            assert ok, (rel, witness)
        sh = parity_shift(rep)
        assert sh.space.parities == tuple(1 - p for p in rep.space.parities)


class TestTensor:
    def test_dimension_and_character(self):
        A = eval_natural(Q, 1, 1)
        B = eval_natural(q_pow(3), 1, 1)
        T = tensor_pair(A, B)
        assert T.space.dim == 4
        assert character(T) == character(A) * character(B)

    def test_coproduct_action_on_top(self):
        # Delta(s_11) (v1 (x) v1) = s_11 v1 (x) s_11 v1 at z-order 0
        A = natural_finite(1, 1)
        T = tensor_pair(A, A)
        v = T.Snum[(1, 1)][0].apply({0: ONE})
        assert v == {0: Q * Q}

    def test_rtt_on_product(self):
        T = tensor_reps([eval_natural(Q, 1, 1), gl11_prime(q_pow(2), ONE)])
        ok, witness = check_rtt(T, "SS")
        assert ok, witness
