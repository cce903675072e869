"""Exact rational-function arithmetic over Q(q) and in the variable z."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qloop.field import (QRat, ZERO, ONE, Q, QINV, qint, q_pow, qrat_str,
                         parse_qrat, FactoredRatZ, INF, zeros_poles,
                         ratz_str, parse_ratz, ratz_to_ratzfun,
                         RatZ, RATZ_ONE, RATZ_ZERO)


coeffs = st.lists(st.integers(-6, 6), min_size=0, max_size=4)


def qrat(num, den):
    return QRat(tuple(num), tuple(den))


nonzero_poly = coeffs.filter(lambda c: any(c))
qrats = st.builds(qrat, coeffs, nonzero_poly)
nonzero_qrats = st.builds(qrat, nonzero_poly, nonzero_poly)


class TestQRat:
    def test_constants(self):
        assert Q * QINV == ONE
        assert ZERO + ONE == ONE
        assert qint(3) - qint(3) == ZERO
        assert q_pow(-2) * q_pow(5) == q_pow(3)

    def test_canonical_form(self):
        # gcd-reduced with positive leading denominator coefficient
        a = QRat((0, 2), (0, 0, 2))   # 2q / 2q^2
        assert a == QINV
        b = QRat((1,), (-1,))
        assert b == qint(-1)

    @given(qrats, qrats, qrats)
    @settings(max_examples=60, deadline=None)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == ZERO
        assert a * ONE == a

    @given(nonzero_qrats)
    @settings(max_examples=60, deadline=None)
    def test_field_axioms(self, a):
        assert a * a.inv() == ONE
        assert (ONE / a) * a == ONE
        assert a ** 3 == a * a * a
        assert a ** -2 == (a * a).inv()

    @given(qrats)
    @settings(max_examples=60, deadline=None)
    def test_str_roundtrip(self, a):
        assert parse_qrat(qrat_str(a)) == a

    def test_unary_minus_binds_looser_than_power(self):
        assert parse_qrat("-q^2") == -q_pow(2)
        assert parse_qrat("(-q^2+1)/q") == (ONE - q_pow(2)) / Q
        assert parse_qrat("-q^2+1") == ONE - q_pow(2)

    def test_parse_forms(self):
        assert parse_qrat("q^2 - q^-2") == q_pow(2) - q_pow(-2)
        assert parse_qrat("(q-1)*(q+1)") == Q * Q - ONE
        assert parse_qrat("1/(q^2+1)") == (Q * Q + ONE).inv()
        assert parse_qrat("-3*q") == qint(-3) * Q

    @given(qrats, qrats)
    @settings(max_examples=40, deadline=None)
    def test_eval_is_homomorphism(self, a, b):
        q0 = Fraction(3, 2)
        try:
            va, vb = a.eval(q0), b.eval(q0)
        except ZeroDivisionError:
            return
        assert (a + b).eval(q0) == va + vb
        assert (a * b).eval(q0) == va * vb

    def test_eval_pole(self):
        a = ONE / (Q - ONE)
        with pytest.raises(ZeroDivisionError):
            a.eval(Fraction(1))

    @given(nonzero_qrats)
    @settings(max_examples=40, deadline=None)
    def test_subs_qinv_involution(self, a):
        assert a.subs_qinv().subs_qinv() == a

    def test_subs_qinv(self):
        assert Q.subs_qinv() == QINV
        assert (Q - QINV).subs_qinv() == QINV - Q

    def test_as_q_power(self):
        assert q_pow(-3).as_q_power() == (Fraction(1), -3)
        c, m = (qint(2) * Q * Q).as_q_power()
        assert (c, m) == (Fraction(2), 2)
        assert (Q + ONE).as_q_power() is None


class TestFactoredRatZ:
    def test_cancellation(self):
        f = FactoredRatZ(ONE, (Q, q_pow(2)), (Q,))
        assert f.zeros == (q_pow(2),) and f.poles == ()

    def test_mul_inv(self):
        f = FactoredRatZ(ONE, (Q,), (q_pow(3),))
        g = FactoredRatZ(ONE, (q_pow(3),), ())
        h = f * g
        assert h.zeros == (Q,) and h.poles == ()
        assert (f * f.inv()).zeros == () and (f * f.inv()).poles == ()
        assert f.is_normalized()
        assert not FactoredRatZ(Q, (ONE,)).is_normalized()

    def test_zeros_poles_infinity(self):
        f = FactoredRatZ(ONE, (q_pow(2),), ())      # zero at q^-2, pole at oo
        Z, P = zeros_poles(f)
        assert Z == frozenset({q_pow(-2)})
        assert P == frozenset({INF})
        g = FactoredRatZ(ONE, (), (Q,))             # pole at q^-1, zero at oo
        Z, P = zeros_poles(g)
        assert Z == frozenset({INF})
        assert P == frozenset({q_pow(-1)})
        h = FactoredRatZ(ONE, (Q,), (q_pow(2),))    # balanced degrees
        Z, P = zeros_poles(h)
        assert INF not in Z and INF not in P

    def test_expand_eval(self):
        f = FactoredRatZ(q_pow(1), (q_pow(2),), (ONE,))
        num, den = f.expand()
        assert num == [Q, -Q * q_pow(2)]
        assert den == [ONE, -ONE]
        z0 = qint(2)
        assert f.eval(z0) == Q * (ONE - z0 * q_pow(2)) / (ONE - z0)

    def test_str_roundtrip(self):
        for f in [FactoredRatZ(ONE),
                  FactoredRatZ(ONE, (Q, q_pow(-2)), (qint(5),)),
                  FactoredRatZ(Q - QINV, (), (ONE,)),
                  FactoredRatZ(ONE / (Q + ONE), (Q + ONE,), ())]:
            assert parse_ratz(ratz_str(f)) == f

    def test_canonical_text(self):
        f = FactoredRatZ(ONE, (q_pow(2),), (ONE,))
        assert ratz_str(f) == "1 * (1-z*q^2) / (1-z*1)"


class TestRatZ:
    def test_monic_normalization(self):
        r = RatZ([Q, Q], [Q])    # (q + qz)/q -> (1+z)/1
        assert r.den == [ONE]
        assert r.num == [ONE, ONE]

    def test_field_ops(self):
        a = RatZ([ONE, Q])
        b = RatZ([ONE], [ONE, -Q])
        assert a * b / b == a
        assert (a + b) - b == a
        assert a * a.inv() == RATZ_ONE
        assert a - a == RATZ_ZERO

    def test_from_factored(self):
        f = FactoredRatZ(ONE, (Q,), (q_pow(2),))
        r = ratz_to_ratzfun(f)
        assert r == RatZ([ONE, -Q], [ONE, -q_pow(2)])
