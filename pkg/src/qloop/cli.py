"""Command-line interface: line-oriented module-spec files, deterministic
TSV reports.

Subcommands: rmatrix, character, cyclicity, sweep, drinfeld, pairing.
Exit codes: 0 success, 1 at least one FAIL row, 2 usage/parse error.
"""

import argparse
import sys
import time

from .field import (QRat, ZERO, ONE, q_pow, qrat_str, parse_qrat,
                    FactoredRatZ)
from .rmatrix import check_properties, build_perk_schultz, hopf_pairing_value
from .reps import (eval_natural, kr_module, gl11_prime, gl11_onedim,
                   dual_module, flip_MN, twist_series, tensor_reps)
from .chars import character
from .tensorcyc import (web_predicate, simplicity_gl11, natural_cyclicity,
                        kr_cyclicity_sufficient, is_highest_ell_weight,
                        is_lowest_ell_weight, CyclicityVerdict)
from .gauss import (DrinfeldData, gauss_decompose, check_cartan, check_xx,
                    zero_node_bracket, h1_bracket, x_minus_11_identity,
                    x_minus_i0_identity, default_order)


class SpecError(Exception):
    def __init__(self, line, col, msg):
        super().__init__("line %d, column %d: %s" % (line, col, msg))
        self.line = line
        self.col = col


class Factor:
    def __init__(self, kind, params, line):
        self.kind = kind
        self.params = dict(params)
        self.modifiers = []   # list of (name, params)
        self.line = line

    def describe(self):
        parts = [self.kind] + ["%s=%s" % (k, v) for k, v in
                               sorted(self.params.items())]
        for name, mp in self.modifiers:
            parts.append("|" + name +
                         "".join(" %s=%s" % (k, v) for k, v in sorted(mp.items())))
        return " ".join(parts)


class SpecFile:
    def __init__(self, M, N, factors, grids):
        self.M = M
        self.N = N
        self.factors = factors
        self.grids = grids  # list of (param letter, 1-based factor index, lo, hi)


FACTOR_KINDS = {"kr", "natural", "gl11prime", "onedim"}
MODIFIER_KINDS = {"dual", "flip", "twist"}


def parse_spec(text):
    M = N = None
    factors = []
    grids = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        head = words[0]
        if head == "algebra":
            if len(words) != 3:
                raise SpecError(lineno, 1, "expected: algebra M N")
            try:
                M, N = int(words[1]), int(words[2])
            except ValueError:
                raise SpecError(lineno, len("algebra "), "M, N must be integers")
            if M < 0 or N < 0 or M + N < 1:
                raise SpecError(lineno, len("algebra "), "bad algebra size")
        elif head == "factor":
            if M is None:
                raise SpecError(lineno, 1, "factor before algebra line")
            if len(words) < 2 or words[1] not in FACTOR_KINDS:
                raise SpecError(lineno, len("factor "),
                                "unknown factor kind %r" % (words[1:2] or [""])[0])
            params = _parse_kv(words[2:], lineno)
            factors.append(Factor(words[1], params, lineno))
        elif head == "modifier":
            if not factors:
                raise SpecError(lineno, 1, "modifier before any factor")
            if len(words) < 2 or words[1] not in MODIFIER_KINDS:
                raise SpecError(lineno, len("modifier "),
                                "unknown modifier %r" % (words[1:2] or [""])[0])
            factors[-1].modifiers.append((words[1], _parse_kv(words[2:], lineno)))
        elif head == "grid":
            grids.append(_parse_grid(" ".join(words[1:]), lineno))
        else:
            raise SpecError(lineno, 1, "unknown directive %r" % head)
    if M is None:
        raise SpecError(1, 1, "missing algebra line")
    if not factors:
        raise SpecError(1, 1, "no factors")
    return SpecFile(M, N, factors, grids)


def _parse_kv(words, lineno):
    params = {}
    for w in words:
        if "=" not in w:
            raise SpecError(lineno, 1, "expected key=value, got %r" % w)
        k, v = w.split("=", 1)
        params[k] = v
    return params


def _parse_grid(text, lineno):
    # "a2=q^-3..q^3" or "a2 = q^-3..q^3"
    text = text.replace(" ", "")
    if "=" not in text or ".." not in text:
        raise SpecError(lineno, 1, "expected grid NAME=q^LO..q^HI")
    name, rng = text.split("=", 1)
    lo_txt, hi_txt = rng.split("..", 1)
    lo = _q_exponent(lo_txt, lineno)
    hi = _q_exponent(hi_txt, lineno)
    letter = name.rstrip("0123456789")
    idx_txt = name[len(letter):]
    idx = int(idx_txt) if idx_txt else 1
    if not letter or idx < 1:
        raise SpecError(lineno, 1, "bad grid parameter name %r" % name)
    return (letter, idx, lo, hi)


def _q_exponent(txt, lineno):
    v = parse_qrat(txt)
    p = v.as_q_power()
    if p is None or p[0] != 1:
        raise SpecError(lineno, 1, "grid bounds must be powers of q")
    return p[1]


def _qrat_param(params, key, lineno, default=None):
    if key not in params:
        if default is not None:
            return default
        raise SpecError(lineno, 1, "missing parameter %r" % key)
    try:
        return parse_qrat(params[key])
    except Exception:
        raise SpecError(lineno, 1, "malformed value for %r: %r" % (key, params[key]))


def _qrat_list(params, key, lineno):
    if key not in params or not params[key]:
        return []
    return [_qrat_param({key: t}, key, lineno) for t in params[key].split(",")]


def build_factor(spec, fac):
    M, N = spec.M, spec.N
    if fac.kind == "natural":
        a = _qrat_param(fac.params, "a", fac.line)
        if not a:
            raise SpecError(fac.line, 1, "a = 0")
        rep = eval_natural(a, M, N)
    elif fac.kind == "kr":
        try:
            r = int(fac.params.get("r", ""))
        except ValueError:
            raise SpecError(fac.line, 1, "kr needs integer r")
        a = _qrat_param(fac.params, "a", fac.line)
        if not (1 <= r <= M + N - 1):
            raise SpecError(fac.line, 1, "r out of range")
        if not a:
            raise SpecError(fac.line, 1, "a = 0")
        rep = kr_module(M, N, r, a)
    elif fac.kind == "gl11prime":
        if (M, N) != (1, 1):
            raise SpecError(fac.line, 1, "gl11prime needs algebra 1 1")
        a = _qrat_param(fac.params, "a", fac.line, default=ZERO)
        b = _qrat_param(fac.params, "b", fac.line, default=ZERO)
        if a == b:
            raise SpecError(fac.line, 1, "a = b")
        rep = gl11_prime(a, b)
    elif fac.kind == "onedim":
        if (M, N) != (1, 1):
            raise SpecError(fac.line, 1, "onedim needs algebra 1 1")
        kind = fac.params.get("kind")
        if kind == "parity":
            rep = gl11_onedim("parity", s=int(fac.params.get("s", "1")))
        elif kind == "torus":
            rep = gl11_onedim("torus", a=_qrat_param(fac.params, "a", fac.line),
                              b=_qrat_param(fac.params, "b", fac.line))
        elif kind == "series":
            f = FactoredRatZ(ONE, _qrat_list(fac.params, "zeros", fac.line),
                             _qrat_list(fac.params, "poles", fac.line))
            rep = gl11_onedim("series", f=f)
        else:
            raise SpecError(fac.line, 1, "onedim needs kind=parity|torus|series")
    else:
        raise SpecError(fac.line, 1, "unknown factor kind %r" % fac.kind)
    for name, mp in fac.modifiers:
        if name == "dual":
            rep = dual_module(rep)
        elif name == "flip":
            rep = flip_MN(rep)
        elif name == "twist":
            g = f = None
            if "gzeros" in mp or "gpoles" in mp:
                g = FactoredRatZ(ONE, _qrat_list(mp, "gzeros", fac.line),
                                 _qrat_list(mp, "gpoles", fac.line))
            if "fzeros" in mp or "fpoles" in mp:
                f = FactoredRatZ(ONE, _qrat_list(mp, "fzeros", fac.line),
                                 _qrat_list(mp, "fpoles", fac.line))
            rep = twist_series(rep, f=f, g=g)
    return rep


def build_product(spec):
    return tensor_reps([build_factor(spec, f) for f in spec.factors])


def spec_predicate(spec, mode):
    """Cyclicity predicate matching the factor pattern, or None if the spec
    mixes factor kinds the predicates do not cover."""
    kinds = {f.kind for f in spec.factors}
    if any(f.modifiers for f in spec.factors):
        return None
    if kinds <= {"gl11prime", "onedim"}:
        fs = []
        for f in spec.factors:
            if f.kind == "onedim":
                return None
            a = _qrat_param(f.params, "a", f.line, default=ZERO)
            b = _qrat_param(f.params, "b", f.line, default=ZERO)
            fs.append(FactoredRatZ(ONE, (a,) if a else (), (b,) if b else ()))
        if mode == "simple":
            return simplicity_gl11(fs)
        return web_predicate(fs, mode)
    if kinds == {"natural"}:
        if mode == "simple":
            return None
        params = [_qrat_param(f.params, "a", f.line) for f in spec.factors]
        return natural_cyclicity(params, spec.M, spec.N, mode)
    if kinds == {"kr"}:
        if mode != "highest":
            return None
        rs = {f.params.get("r") for f in spec.factors}
        if len(rs) != 1:
            return None
        r = int(next(iter(rs)))
        dr = 1 if r <= spec.M else -1
        xs = []
        for f in spec.factors:
            p = _qrat_param(f.params, "a", f.line).as_q_power()
            if p is None or p[0] != 1:
                return None
            xs.append(p[1] * dr)
        return kr_cyclicity_sufficient(xs)
    return None


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_rmatrix(args, out):
    if not args.check:
        print("rmatrix: nothing to do (use --check M N)", file=sys.stderr)
        return 2
    M, N = args.check
    report = check_properties(build_perk_schultz(M, N))
    fails = 0
    out.write("property\talgebra\tstatus\n")
    for name, ok in report.items():
        out.write("%s\tgl(%d,%d)\t%s\n" % (name, M, N, "PASS" if ok else "FAIL"))
        fails += not ok
    return 1 if fails else 0


def cmd_pairing(args, out):
    a_val = parse_qrat(args.a)
    b_val = parse_qrat(args.b)
    v = hopf_pairing_value(args.M, args.N, args.i, args.j, args.n,
                           int(qrat_as_index(a_val)), int(qrat_as_index(b_val)),
                           args.m)
    out.write("i\tj\tn\ta\tb\tm\tvalue\n")
    out.write("%d\t%d\t%d\t%s\t%s\t%d\t%s\n" %
              (args.i, args.j, args.n, args.a, args.b, args.m, qrat_str(v)))
    return 0


def qrat_as_index(v):
    """Pairing slots a, b are basis indices (integers), accepted as QRat."""
    p = v.as_q_power()
    assert p is not None and p[1] == 0 and p[0].denominator == 1, \
        "index expected"
    return p[0].numerator


def cmd_character(args, out):
    spec = parse_spec(open(args.spec, encoding="utf-8").read())
    rep = build_product(spec)
    ch = character(rep)
    out.write("weight\tmultiplicity\n")
    for w in sorted(ch.mult):
        out.write("%s\t%d\n" % (",".join(str(x) for x in w), ch.mult[w]))
    return 0


def _verdict_row(spec, rep, mode, want_pred, want_oracle):
    t0 = time.monotonic()
    pred = spec_predicate(spec, mode) if want_pred else None
    oracle = None
    dim = rep.space.dim
    if want_oracle:
        if mode == "simple":
            hi = is_highest_ell_weight(rep)
            lo = is_lowest_ell_weight(rep)
            oracle = hi.oracle and lo.oracle
            witness = hi.witness if not hi.oracle else lo.witness
        else:
            v = is_highest_ell_weight(rep) if mode == "highest" \
                else is_lowest_ell_weight(rep)
            oracle = v.oracle
            witness = v.witness
    else:
        witness = None
    runtime = time.monotonic() - t0
    status = "PASS"
    if want_pred and want_oracle and pred is not None and pred != oracle:
        status = "FAIL"
    wtxt = ""
    if want_oracle and not oracle and witness is not None:
        wtxt = "closure_dim=%s" % witness
    return (pred, oracle, dim, status, wtxt, runtime)


def _fmt_bool(b):
    return "-" if b is None else ("true" if b else "false")


def cmd_cyclicity(args, out):
    spec = parse_spec(open(args.spec, encoding="utf-8").read())
    rep = build_product(spec)
    params = "; ".join(f.describe() for f in spec.factors)
    pred, oracle, dim, status, wtxt, rt = _verdict_row(
        spec, rep, args.mode, args.predicate, args.oracle)
    out.write("parameters\tmode\tpredicate\toracle\tdim\tstatus\twitness\truntime_s\n")
    out.write("%s\t%s\t%s\t%s\t%d\t%s\t%s\t%.3f\n" %
              (params, args.mode, _fmt_bool(pred), _fmt_bool(oracle),
               dim, status, wtxt, rt))
    return 1 if status == "FAIL" else 0


def cmd_sweep(args, out):
    spec = parse_spec(open(args.spec, encoding="utf-8").read())
    grids = list(spec.grids)
    if args.grid:
        grids.append(_parse_grid(args.grid, 0))
    if not grids:
        print("sweep: no grid given", file=sys.stderr)
        return 2
    letter, idx, lo, hi = grids[0]
    if not (1 <= idx <= len(spec.factors)):
        print("sweep: factor index out of range", file=sys.stderr)
        return 2
    fails = 0
    out.write("parameters\tmode\tpredicate\toracle\tdim\tstatus\twitness\truntime_s\n")
    for mexp in range(lo, hi + 1):
        fac = spec.factors[idx - 1]
        old = fac.params.get(letter)
        fac.params[letter] = "q^%d" % mexp
        params = "; ".join(f.describe() for f in spec.factors)
        try:
            rep = build_product(spec)
        except SpecError as e:
            out.write("%s\t%s\t-\t-\t0\tSKIP\t%s\t0.000\n" %
                      (params, args.mode, e))
            rep = None
        if rep is not None:
            pred, oracle, dim, status, wtxt, rt = _verdict_row(
                spec, rep, args.mode, True, True)
            out.write("%s\t%s\t%s\t%s\t%d\t%s\t%s\t%.3f\n" %
                      (params, args.mode, _fmt_bool(pred), _fmt_bool(oracle),
                       dim, status, wtxt, rt))
            fails += status == "FAIL"
        if old is None:
            del fac.params[letter]
        else:
            fac.params[letter] = old
    return 1 if fails else 0


def cmd_drinfeld(args, out):
    spec = parse_spec(open(args.spec, encoding="utf-8").read())
    rep = build_product(spec)
    if rep.Tnum is None:
        print("drinfeld: spec has no T-side (q-Yangian only)", file=sys.stderr)
        return 2
    T = args.order if args.order else default_order()
    n = spec.M + spec.N
    fails = 0
    out.write("check\tdetail\tstatus\twitness\n")

    def row(check, detail, ok, witness=""):
        nonlocal fails
        out.write("%s\t%s\t%s\t%s\n" % (check, detail, "PASS" if ok else "FAIL",
                                        witness))
        fails += not ok

    if args.verify == "gauss":
        for side in ("S", "T"):
            g = gauss_decompose(rep, side, T)
            row("reconstruction", side, g.reconstruction_ok())
        return 1 if fails else 0
    data = DrinfeldData(rep, T)
    if args.verify == "cartan":
        for iK in range(1, n + 1):
            for jX in range(1, n):
                for xs in ("+", "-"):
                    for ks in ("+", "-"):
                        row("cartan", "K%s_%d,X%s_%d" % (ks, iK, xs, jX),
                            check_cartan(data, iK, jX, xs, ks))
    elif args.verify == "xx":
        for i in range(1, n):
            for j in range(1, n):
                row("xx", "i=%d,j=%d" % (i, j), check_xx(data, i, j))
    elif args.verify == "appendix":
        row("xminus11", "", x_minus_11_identity(data))
        for i in range(1, n):
            row("xminus_i0", "i=%d" % i, x_minus_i0_identity(data, i))
        ok, c = zero_node_bracket(data)
        row("zero_node", "", ok, qrat_str(c) if c else "")
        for i in range(1, n):
            ok, c = h1_bracket(data, i)
            row("h1_bracket", "i=%d" % i, ok, qrat_str(c) if c else "")
    else:
        print("drinfeld: unknown --verify %r" % args.verify, file=sys.stderr)
        return 2
    return 1 if fails else 0


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def make_parser():
    p = argparse.ArgumentParser(prog="qloop")
    sub = p.add_subparsers(dest="command")

    pr = sub.add_parser("rmatrix")
    pr.add_argument("--check", nargs=2, type=int, metavar=("M", "N"))

    pp = sub.add_parser("pairing")
    pp.add_argument("M", type=int)
    pp.add_argument("N", type=int)
    pp.add_argument("i", type=int)
    pp.add_argument("j", type=int)
    pp.add_argument("n", type=int)
    pp.add_argument("a")
    pp.add_argument("b")
    pp.add_argument("m", type=int)

    pc = sub.add_parser("character")
    pc.add_argument("--spec", required=True)

    py = sub.add_parser("cyclicity")
    py.add_argument("--spec", required=True)
    py.add_argument("--mode", choices=["highest", "lowest", "simple"],
                    default="highest")
    py.add_argument("--oracle", action="store_true")
    py.add_argument("--predicate", action="store_true")

    ps = sub.add_parser("sweep")
    ps.add_argument("--spec", required=True)
    ps.add_argument("--mode", choices=["highest", "lowest", "simple"],
                    default="highest")
    ps.add_argument("--grid")

    pd = sub.add_parser("drinfeld")
    pd.add_argument("--spec", required=True)
    pd.add_argument("--order", type=int)
    pd.add_argument("--verify", default="cartan",
                    choices=["gauss", "cartan", "xx", "appendix"])
    return p


def run_command(argv, out=None):
    out = out if out is not None else sys.stdout
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    handlers = {"rmatrix": cmd_rmatrix, "pairing": cmd_pairing,
                "character": cmd_character, "cyclicity": cmd_cyclicity,
                "sweep": cmd_sweep, "drinfeld": cmd_drinfeld}
    if args.command not in handlers:
        parser.print_usage(sys.stderr)
        return 2
    try:
        return handlers[args.command](args, out)
    except SpecError as e:
        print("spec error: %s" % e, file=sys.stderr)
        return 2
    except FileNotFoundError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
