"""Exact arithmetic in Q(q) and factored rational functions of z over Q(q).

Scalars are quotients of integer-coefficient polynomials in a transcendental
q (so q is in particular never a root of unity).  Rational functions of the
spectral variable z are kept in factored form ``c * prod(1-z*a) / prod(1-z*b)``
so that zero/pole sets on the Riemann sphere are available without any
polynomial factorization.
"""

from fractions import Fraction


# ---------------------------------------------------------------------------
# integer-coefficient polynomials in q, as tuples (low degree first)
# ---------------------------------------------------------------------------

def _trim(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def p_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    c = list(a)
    for i, x in enumerate(b):
        c[i] += x
    return _trim(c)


def p_neg(a):
    return tuple(-x for x in a)


def p_sub(a, b):
    return p_add(a, p_neg(b))


def p_mul(a, b):
    if not a or not b:
        return ()
    c = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                c[i + j] += x * y
    return _trim(c)


def p_scale(a, k):
    if k == 0:
        return ()
    return tuple(x * k for x in a)


def _content(a):
    g = 0
    for x in a:
        g = _gcd_int(g, x)
        if g == 1:
            return 1
    return g


def _gcd_int(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _monomial(a):
    # c*q^k?  returns (c, k) or None
    for i, x in enumerate(a[:-1]):
        if x:
            return None
    return (a[-1], len(a) - 1) if a else None


def _valuation(a):
    for i, x in enumerate(a):
        if x:
            return i
    return 0


def _primitive(a):
    g = _content(a)
    if g > 1:
        a = tuple(x // g for x in a)
    return a


def p_gcd(a, b):
    """gcd in Z[q], including the integer content, sign-normalized positive lc."""
    if not a:
        return b if (not b or b[-1] > 0) else p_neg(b)
    if not b:
        return a if a[-1] > 0 else p_neg(a)
    ca, cb = _content(a), _content(b)
    g0 = _gcd_int(ca, cb)
    ma, mb = _monomial(a), _monomial(b)
    if ma is not None or mb is not None:
        # gcd with a monomial is a monomial
        k = min(_valuation(a), _valuation(b))
        return ((0,) * k) + (g0,)
    a = tuple(x // ca for x in a)
    b = tuple(x // cb for x in b)
    # primitive PRS
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, _primitive(r)
    if a[-1] < 0:
        a = p_neg(a)
    return p_mul((g0,), a) if g0 != 1 else a


def _prem(a, b):
    """pseudo-remainder of a by b (len(a) >= len(b) not required)."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(r) - 1 >= db and any(r):
        r = list(_trim(r))
        if len(r) - 1 < db:
            break
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for i, y in enumerate(b):
            r[shift + i] -= lr * y
        r = list(_trim(r))
        if not r:
            break
    return _trim(r)


def p_divexact(a, b):
    """Exact division in Z[q]; raises if not divisible."""
    if not a:
        return ()
    assert b, "division by zero polynomial"
    mb = _monomial(b)
    if mb is not None:
        c, k = mb
        assert _valuation(a) >= k or not any(a[:k])
        out = []
        for x in a[k:]:
            v, rem = divmod(x, c)
            assert rem == 0, "inexact division"
            out.append(v)
        return _trim(out)
    r = [Fraction(x) for x in a]
    db, lb = len(b) - 1, b[-1]
    q = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        if i >= len(r):
            continue
        while len(r) <= i:
            r.append(Fraction(0))
        coef = r[i] / lb
        if coef:
            q[i - db] = coef
            for j, y in enumerate(b):
                r[i - db + j] -= coef * y
    assert all(x == 0 for x in r), "inexact division"
    out = []
    for x in q:
        assert x.denominator == 1, "inexact division"
        out.append(int(x))
    return _trim(out)


def p_pow(a, n):
    r = (1,)
    for _ in range(n):
        r = p_mul(r, a)
    return r


def p_eval(a, x):
    """Evaluate at x (Horner); x is a Fraction or ModInt."""
    r = 0
    for c in reversed(a):
        r = r * x + c
    return r


def p_str(a):
    if not a:
        return "0"
    parts = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if c == 0:
            continue
        if k == 0:
            term = str(abs(c))
        elif abs(c) == 1:
            term = "q" if k == 1 else "q^%d" % k
        else:
            term = "%d*q" % abs(c) if k == 1 else "%d*q^%d" % (abs(c), k)
        if not parts:
            parts.append(("-" if c < 0 else "") + term)
        else:
            parts.append(("-" if c < 0 else "+") + term)
    return "".join(parts)


# ---------------------------------------------------------------------------
# QRat: the field Q(q)
# ---------------------------------------------------------------------------

class QRat:
    """Element of Q(q), stored as num/den in lowest terms.

    Invariants: den != 0, gcd(num, den) = 1 in Z[q] (content included),
    den has positive leading coefficient.  Canonical, so equality and
    hashing are componentwise.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,), _normalized=False):
        if not _normalized:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if not isinstance(other, QRat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if self.den == other.den:
            if self.den == (1,):
                return QRat(p_add(self.num, other.num), (1,), _normalized=True)
            return QRat(p_add(self.num, other.num), self.den)
        return QRat(p_add(p_mul(self.num, other.den), p_mul(other.num, self.den)),
                    p_mul(self.den, other.den))

    def __sub__(self, other):
        if self.den == other.den:
            if self.den == (1,):
                return QRat(p_sub(self.num, other.num), (1,), _normalized=True)
            return QRat(p_sub(self.num, other.num), self.den)
        return QRat(p_sub(p_mul(self.num, other.den), p_mul(other.num, self.den)),
                    p_mul(self.den, other.den))

    def __neg__(self):
        return QRat(p_neg(self.num), self.den, _normalized=True)

    def __mul__(self, other):
        if not self.num or not other.num:
            return ZERO
        if self.den == (1,) and other.den == (1,):
            return QRat(p_mul(self.num, other.num), (1,), _normalized=True)
        # cross-cancel to keep gcds small
        g1 = p_gcd(self.num, other.den)
        g2 = p_gcd(other.num, self.den)
        n1 = self.num if g1 == (1,) else p_divexact(self.num, g1)
        d2 = other.den if g1 == (1,) else p_divexact(other.den, g1)
        n2 = other.num if g2 == (1,) else p_divexact(other.num, g2)
        d1 = self.den if g2 == (1,) else p_divexact(self.den, g2)
        num, den = p_mul(n1, n2), p_mul(d1, d2)
        if den[-1] < 0:
            num, den = p_neg(num), p_neg(den)
        return QRat(num, den, _normalized=True)

    def __truediv__(self, other):
        if not other.num:
            raise ZeroDivisionError("zero divisor")
        return self * QRat(other.den, other.num)

    def __pow__(self, n):
        if n < 0:
            return ONE / (self ** (-n))
        r = ONE
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def inv(self):
        if not self.num:
            raise ZeroDivisionError("zero divisor")
        return QRat(self.den, self.num)

    def subs_qinv(self):
        """Substitute q -> 1/q."""
        n, d = self.num, self.den
        k = max(len(n), len(d)) - 1
        num = p_mul(tuple(reversed(n)), (0,) * (k - (len(n) - 1)) + (1,))
        den = p_mul(tuple(reversed(d)), (0,) * (k - (len(d) - 1)) + (1,))
        return QRat(num, den)

    def eval(self, q0):
        """Numeric value at q = q0 (a Fraction)."""
        dv = p_eval(self.den, q0)
        if dv == 0:
            raise ZeroDivisionError("denominator vanishes at q0")
        return p_eval(self.num, q0) / dv

    def as_q_power(self):
        """If self = c*q^m with c rational, return (Fraction c, int m), else None."""
        mn, md = _monomial(self.num), _monomial(self.den)
        if mn is None or md is None:
            return None
        return Fraction(mn[0], md[0]), mn[1] - md[1]

    def __repr__(self):
        return "QRat(%s)" % qrat_str(self)


def _normalize(num, den):
    num, den = _trim(num), _trim(den)
    assert den, "zero denominator"
    if not num:
        return (), (1,)
    g = p_gcd(num, den)
    if g != (1,):
        num, den = p_divexact(num, g), p_divexact(den, g)
    if den[-1] < 0:
        num, den = p_neg(num), p_neg(den)
    return num, den


ZERO = QRat((), (1,), _normalized=True)
ONE = QRat((1,), (1,), _normalized=True)
Q = QRat((0, 1), (1,), _normalized=True)
QINV = QRat((1,), (0, 1), _normalized=True)


def qint(n):
    return QRat((n,), (1,), _normalized=True) if n else ZERO


def q_pow(m):
    """q^m for any integer m."""
    if m >= 0:
        return QRat((0,) * m + (1,), (1,), _normalized=True)
    return QRat((1,), (0,) * (-m) + (1,), _normalized=True)


MOD_P = (1 << 31) - 1


class ModInt:
    """Scalar in the prime field Z/p, p = 2^31 - 1.

    Used for one-sided rank certificates: specializing q to a residue mod p
    can only lower the rank of a matrix over Q(q), so a full-rank result
    mod p certifies full rank over the exact field.  Mixed arithmetic with
    plain ints is supported (polynomial coefficients)."""

    __slots__ = ("v",)

    def __init__(self, v):
        self.v = v % MOD_P

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, ModInt):
            return self.v == other.v
        if isinstance(other, int):
            return self.v == other % MOD_P
        return NotImplemented

    def __hash__(self):
        return hash(self.v)

    def __add__(self, other):
        o = other.v if isinstance(other, ModInt) else other
        if not isinstance(o, int):
            return NotImplemented
        return ModInt(self.v + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = other.v if isinstance(other, ModInt) else other
        if not isinstance(o, int):
            return NotImplemented
        return ModInt(self.v - o)

    def __rsub__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return ModInt(other - self.v)

    def __neg__(self):
        return ModInt(-self.v)

    def __mul__(self, other):
        o = other.v if isinstance(other, ModInt) else other
        if not isinstance(o, int):
            return NotImplemented
        return ModInt(self.v * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = other.v if isinstance(other, ModInt) else other
        if not isinstance(o, int):
            return NotImplemented
        o %= MOD_P
        if not o:
            raise ZeroDivisionError("division by zero mod p")
        return ModInt(self.v * pow(o, MOD_P - 2, MOD_P))

    def __rtruediv__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        if not self.v:
            raise ZeroDivisionError("division by zero mod p")
        return ModInt(other * pow(self.v, MOD_P - 2, MOD_P))

    def inv(self):
        return 1 / self

    def __repr__(self):
        return "ModInt(%d)" % self.v


def qrat_arith(x, y, kind):
    """Four-function arithmetic dispatch; kind in {add, sub, mul, div}."""
    if kind == "add":
        return x + y
    if kind == "sub":
        return x - y
    if kind == "mul":
        return x * y
    if kind == "div":
        return x / y
    raise ValueError("unknown kind %r" % kind)


def qrat_str(x):
    if x.den == (1,):
        return p_str(x.num)
    return "(%s)/(%s)" % (p_str(x.num), p_str(x.den))


# ---------------------------------------------------------------------------
# QRat parser: integers, q, + - * / ^ and parentheses; q^-3 is accepted
# ---------------------------------------------------------------------------

class _Tok:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, msg):
        raise ValueError("parse error at column %d: %s" % (self.pos + 1, msg))


def parse_qrat(text):
    t = _Tok(text)
    v = _parse_sum(t)
    if t.peek():
        t.error("trailing input")
    return v


def _parse_sum(t):
    v = _parse_product(t)
    while True:
        c = t.peek()
        if c == "+":
            t.pos += 1
            v = v + _parse_product(t)
        elif c == "-":
            t.pos += 1
            v = v - _parse_product(t)
        else:
            return v


def _parse_product(t):
    v = _parse_power(t)
    while True:
        c = t.peek()
        if c == "*":
            t.pos += 1
            v = v * _parse_power(t)
        elif c == "/":
            t.pos += 1
            v = v / _parse_power(t)
        else:
            return v


def _parse_power(t):
    # unary minus binds looser than ^, so -q^2 means -(q^2)
    if t.peek() == "-":
        t.pos += 1
        return -_parse_power(t)
    v = _parse_atom(t)
    if t.peek() == "^":
        t.pos += 1
        neg = False
        if t.peek() == "-":
            neg = True
            t.pos += 1
        n = _parse_int(t)
        v = v ** (-n if neg else n)
    return v


def _parse_atom(t):
    c = t.peek()
    if c == "(":
        t.pos += 1
        v = _parse_sum(t)
        if t.peek() != ")":
            t.error("expected ')'")
        t.pos += 1
        return v
    if c == "q":
        t.pos += 1
        return Q
    if c.isdigit():
        return qint(_parse_int(t))
    t.error("expected atom")


def _parse_int(t):
    c = t.peek()
    if not c.isdigit():
        t.error("expected integer")
    start = t.pos
    while t.pos < len(t.text) and t.text[t.pos].isdigit():
        t.pos += 1
    return int(t.text[start:t.pos])


# ---------------------------------------------------------------------------
# FactoredRatZ: c * prod (1 - z a_i) / prod (1 - z b_j), parameters in Q(q)
# ---------------------------------------------------------------------------

INF = "oo"  # the point at infinity on the sphere


class FactoredRatZ:
    """Rational function of z stored factored; scale = value at z=0.

    zeros / poles are sorted tuples of nonzero QRat parameters; common
    factors are cancelled on construction.  Membership in the set of
    0-normalized functions means scale == 1.
    """

    __slots__ = ("scale", "zeros", "poles")

    def __init__(self, scale, zeros=(), poles=()):
        assert isinstance(scale, QRat) and scale, "scale must be a nonzero QRat"
        zs = list(zeros)
        ps = list(poles)
        assert all(a for a in zs) and all(b for b in ps), "zero parameter"
        out_p = []
        for b in ps:
            if b in zs:
                zs.remove(b)
            else:
                out_p.append(b)
        self.scale = scale
        self.zeros = tuple(sorted(zs, key=_qrat_key))
        self.poles = tuple(sorted(out_p, key=_qrat_key))

    def __eq__(self, other):
        if not isinstance(other, FactoredRatZ):
            return NotImplemented
        return (self.scale, self.zeros, self.poles) == (other.scale, other.zeros, other.poles)

    def __hash__(self):
        return hash((self.scale, self.zeros, self.poles))

    def __mul__(self, other):
        return FactoredRatZ(self.scale * other.scale,
                            self.zeros + other.zeros,
                            self.poles + other.poles)

    def inv(self):
        return FactoredRatZ(self.scale.inv(), self.poles, self.zeros)

    def is_normalized(self):
        return self.scale == ONE

    def expand(self):
        """Return (num, den) as polynomials in z over QRat (coefficient lists)."""
        num = [self.scale]
        for a in self.zeros:
            num = _zpoly_mul_linear(num, a)
        den = [ONE]
        for b in self.poles:
            den = _zpoly_mul_linear(den, b)
        return num, den

    def eval(self, z):
        """Value at z (a QRat)."""
        v = self.scale
        for a in self.zeros:
            v = v * (ONE - z * a)
        for b in self.poles:
            v = v / (ONE - z * b)
        return v

    def __repr__(self):
        return "FactoredRatZ(%s)" % ratz_str(self)


def _qrat_key(x):
    return (x.num, x.den)


def _zpoly_mul_linear(poly, a):
    # multiply a z-polynomial (list of QRat) by (1 - z*a)
    out = poly + [ZERO]
    for i in range(len(poly)):
        out[i + 1] = out[i + 1] - poly[i] * a
    return out


def ratz_one():
    return FactoredRatZ(ONE)


def ratz_mul(f, g):
    return f * g


def zeros_poles(f):
    """(Z(f), P(f)) as frozensets of QRat points 1/a, with INF for infinity."""
    zs = set(a.inv() for a in f.zeros)
    ps = set(b.inv() for b in f.poles)
    if len(f.poles) > len(f.zeros):
        zs.add(INF)
    elif len(f.zeros) > len(f.poles):
        ps.add(INF)
    return frozenset(zs), frozenset(ps)


def ratz_str(f):
    def factors(params):
        return "".join("(1-z*%s)" % qrat_str(a) for a in params)

    out = qrat_str(f.scale)
    if f.zeros:
        out += " * " + factors(f.zeros)
    if f.poles:
        out += " / " + factors(f.poles)
    return out


def parse_ratz(text):
    """Parse the canonical FactoredRatZ text form."""
    if "/" in text and "(1-z*" in text:
        # split at the top-level " / " that precedes pole factors
        idx = text.find(" / ")
        if idx >= 0:
            head, tail = text[:idx], text[idx + 3:]
        else:
            head, tail = text, ""
    else:
        head, tail = text, ""
    scale_txt, zeros_txt = (head.split(" * ", 1) + [""])[:2]
    scale = parse_qrat(scale_txt)
    zeros = _parse_factors(zeros_txt)
    poles = _parse_factors(tail)
    return FactoredRatZ(scale, zeros, poles)


def _parse_factors(text):
    text = text.strip()
    params = []
    while text:
        assert text.startswith("(1-z*"), "malformed factor in %r" % text
        depth, i = 0, 0
        for i, ch in enumerate(text):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0:
                    break
        params.append(parse_qrat(text[5:i]))
        text = text[i + 1:].strip()
    return params


# ---------------------------------------------------------------------------
# PolyZ / RatZ: unfactored rational functions of z over QRat (internal
# plumbing for series denominators, matrix inversion, l-weight comparison)
# ---------------------------------------------------------------------------

def zp_trim(a):
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return list(a[:n])


def zp_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = out[i] + x
    return zp_trim(out)


def zp_neg(a):
    return [-x for x in a]


def zp_sub(a, b):
    return zp_add(a, zp_neg(b))


def zp_mul(a, b):
    if not a or not b:
        return []
    zero = a[0] - a[0]
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
    return zp_trim(out)


def zp_scale(a, c):
    return zp_trim([x * c for x in a])


def zp_divmod(a, b):
    assert b, "division by zero z-polynomial"
    r = list(a)
    qout = [ZERO] * max(0, len(a) - len(b) + 1)
    db, lb = len(b) - 1, b[-1]
    for i in range(len(r) - 1, db - 1, -1):
        if not r[i]:
            continue
        c = r[i] / lb
        qout[i - db] = c
        for j, y in enumerate(b):
            r[i - db + j] = r[i - db + j] - c * y
    return zp_trim(qout), zp_trim(r)


def zp_gcd(a, b):
    a, b = zp_trim(a), zp_trim(b)
    while b:
        _, r = zp_divmod(a, b)
        a, b = b, r
    if a:
        lc = a[-1]
        a = [x / lc for x in a]
    return a


class RatZ:
    """num/den with QRat coefficients, den monic, gcd-reduced."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _normalized=False):
        if den is None:
            den = [ONE]
        if not _normalized:
            num, den = zp_trim(num), zp_trim(den)
            assert den, "zero denominator"
            g = zp_gcd(num, den)
            if len(g) > 1:
                num, _ = zp_divmod(num, g)
                den, _ = zp_divmod(den, g)
            lc = den[-1]
            if lc != ONE:
                num = [x / lc for x in num]
                den = [x / lc for x in den]
        self.num = num
        self.den = den

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        return self.num == other.num and self.den == other.den

    def __add__(self, other):
        if self.den == other.den:
            return RatZ(zp_add(self.num, other.num), list(self.den))
        return RatZ(zp_add(zp_mul(self.num, other.den), zp_mul(other.num, self.den)),
                    zp_mul(self.den, other.den))

    def __neg__(self):
        return RatZ(zp_neg(self.num), list(self.den), _normalized=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return RatZ(zp_mul(self.num, other.num), zp_mul(self.den, other.den))

    def __truediv__(self, other):
        assert other.num, "division by zero"
        return RatZ(zp_mul(self.num, other.den), zp_mul(self.den, other.num))

    def inv(self):
        assert self.num, "division by zero"
        return RatZ(list(self.den), list(self.num))

    def __repr__(self):
        return "RatZ(%r, %r)" % (self.num, self.den)


RATZ_ZERO = RatZ([])
RATZ_ONE = RatZ([ONE])


def ratz_to_ratzfun(f):
    """FactoredRatZ -> RatZ."""
    num, den = f.expand()
    return RatZ(num, den)
