"""P-graded characters: counting basis vectors by weight, and the
combinatorial character of L(varpi_r) by enumeration of admissible
index sequences (weakly increasing, strictly increasing while the
value stays in the even range)."""


class Character:
    """Finite formal sum of weights with non-negative integer multiplicities."""

    __slots__ = ("mult",)

    def __init__(self, mult=None):
        self.mult = {k: v for k, v in (mult or {}).items() if v}

    def __eq__(self, other):
        return self.mult == other.mult

    def __add__(self, other):
        out = dict(self.mult)
        for k, v in other.mult.items():
            out[k] = out.get(k, 0) + v
        return Character(out)

    def __sub__(self, other):
        out = dict(self.mult)
        for k, v in other.mult.items():
            out[k] = out.get(k, 0) - v
        return Character(out)

    def __mul__(self, other):
        out = {}
        for k1, v1 in self.mult.items():
            for k2, v2 in other.mult.items():
                k = tuple(x + y for x, y in zip(k1, k2))
                out[k] = out.get(k, 0) + v1 * v2
        return Character(out)

    def dim(self):
        return sum(self.mult.values())

    def support(self):
        return set(self.mult)

    def __repr__(self):
        return "Character(%d weights, dim %d)" % (len(self.mult), self.dim())


def character(rep):
    """Count basis vectors of a Rep per weight."""
    out = {}
    for w in rep.space.weights:
        out[w] = out.get(w, 0) + 1
    return Character(out)


def bkk_character(M, N, r):
    """Character of L(varpi_r), 1 <= r <= M: sum over sequences
    i_1 <= ... <= i_r in {1..M+N} with i_s < i_{s+1} whenever i_s <= M."""
    assert 1 <= r <= M, "r out of range"
    n = M + N
    out = {}

    def rec(pos, last, weight):
        if pos == r:
            w = tuple(weight)
            out[w] = out.get(w, 0) + 1
            return
        lo = last + 1 if (last and last <= M) else max(last, 1)
        for v in range(lo, n + 1):
            weight[v - 1] += 1
            rec(pos + 1, v, weight)
            weight[v - 1] -= 1

    rec(0, 0, [0] * n)
    return Character(out)
