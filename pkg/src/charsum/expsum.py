"""Exponential sums S_f(0) of f(x) = Tr(a x^d + b x^2) over GF(p^n), n = 4k.

The central identity: with U the cyclic subgroup of order p^2k + 1 of
GF(p^n)* (generated by xi^(p^2k - 1)) and the linearized polynomial

    L(X) = b^(p^2k) X + a X^(p^k) + b X^(p^2k) + a^(p^2k) X^(p^3k),

the sum S_f(0) equals p^2k (2 N(a,b) - 1), where 2 N(a,b) is the number
of zeros of L in U (always even, since -U = U and L is odd).

Coefficient pairs split into three cases:

* SQUARE_MATCH   a^2 = b^d with b != 0,
* NORM_DIFFER    a^(p^k (p^k+1)) != b^(p^k+1) (and not SQUARE_MATCH),
* JACOBSTHAL     the norms agree but a^2 != b^d.

In the first two cases N(a,b) <= 2, so S_f(0) is one of -p^2k, p^2k,
3 p^2k (and zeros of L coincide with those of a companion polynomial
F when the norms differ).  In the JACOBSTHAL case N(a,b) is computed
three independent ways: the direct zero count, a nonsquare count over
GF(p^k) through an auxiliary g with g^(p^k-1) = -b^(p^3k)/a, and a
Jacobsthal sum of order p^k + 1:

    2 N(a,b) = p^k - H_{p^k+1}(-b^(p^2k+1)/g^2) / (p^k + 1) + 1.

distribution_sweep fixes b, walks every a, checks the closed form
against the brute-force sum and tallies how often S_f(0) hits each of
the three values (r, s, t), verifying

    r + s + t  = p^n - p^k + chi(b),
    -r + s + 3t = chi(b) p^k,
    sum_a S_f(0) = p^n,

with chi(b) = b^((p^n - 1)/2) read as +-1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import jacobsthal
from .cycint import CycInt
from .errors import (
    BothCoefficientsZero,
    NoSolution,
    OracleMismatch,
    WrongCase,
    ZeroB,
)
from .field_core import Elem, FieldCtx


@dataclass(frozen=True)
class CoeffPair:
    """The (a, b) of f(x) = Tr(a x^d + b x^2)."""

    a: Elem
    b: Elem

    def require_admissible(self):
        if self.a.is_zero and self.b.is_zero:
            raise BothCoefficientsZero("(a, b) = (0, 0) is not admissible")


class CaseTag(enum.Enum):
    NORM_DIFFER = "NORM_DIFFER"
    SQUARE_MATCH = "SQUARE_MATCH"
    JACOBSTHAL = "JACOBSTHAL"


@dataclass(frozen=True)
class CaseDetail:
    tag: CaseTag
    norms_match: bool   # a^(p^k(p^k+1)) == b^(p^k+1)
    b_square: bool      # b != 0 and b^((p^n-1)/2) == 1


def classify(ctx: FieldCtx, pair: CoeffPair) -> CaseTag:
    """Which of the three cases (a, b) falls in.  Exact exponentiation only."""
    return case_detail(ctx, pair).tag


def case_detail(ctx: FieldCtx, pair: CoeffPair) -> CaseDetail:
    pair.require_admissible()
    p, k, d = ctx.p, ctx.params.k, ctx.params.d
    a, b = pair.a, pair.b
    pk = p ** k
    norms_match = a ** (pk * (pk + 1)) == b ** (pk + 1)
    square_match = (not b.is_zero) and a * a == b ** d
    b_square = (not b.is_zero) and b ** (ctx.order // 2) == ctx.one
    if square_match:
        tag = CaseTag.SQUARE_MATCH
    elif not norms_match:
        tag = CaseTag.NORM_DIFFER
    else:
        tag = CaseTag.JACOBSTHAL
    return CaseDetail(tag=tag, norms_match=norms_match, b_square=b_square)


def chi(ctx: FieldCtx, b: Elem) -> int:
    """b^((p^n-1)/2) as +-1 (the quadratic-character sign of b != 0)."""
    if b.is_zero:
        raise ZeroB("chi needs b != 0")
    return 1 if b ** (ctx.order // 2) == ctx.one else -1


# --------------------------------------------------------------------------
# the subgroup U and the linearized polynomial
# --------------------------------------------------------------------------

def subgroup_U(ctx: FieldCtx) -> list:
    """The p^2k + 1 powers of xi^(p^2k - 1)."""
    step = ctx.p ** (2 * ctx.params.k) - 1
    g = ctx.from_exp(step)
    out = []
    u = ctx.one
    for _ in range(step + 2):  # |U| = p^2k + 1
        out.append(u)
        u = u * g
    return out


def L_eval(ctx: FieldCtx, x: Elem, pair: CoeffPair) -> Elem:
    k = ctx.params.k
    p = ctx.p
    a, b = pair.a, pair.b
    return (b ** (p ** (2 * k)) * x
            + a * x ** (p ** k)
            + b * x ** (p ** (2 * k))
            + a ** (p ** (2 * k)) * x ** (p ** (3 * k)))


def _L_terms(ctx: FieldCtx, pair: CoeffPair):
    # (coefficient, frobenius multiplier) view of L, for the bulk evaluator
    p, k = ctx.p, ctx.params.k
    a, b = pair.a, pair.b
    return (
        (b ** (p ** (2 * k)), 1),
        (a, p ** k),
        (b, p ** (2 * k)),
        (a ** (p ** (2 * k)), p ** (3 * k)),
    )


def _linearized_values(ctx: FieldCtx, terms, logs):
    """Evaluate sum_i c_i x^(p^e_i) at x = xi^logs (numpy array of logs).

    terms: iterable of (Elem coefficient, integer power multiplier p^e_i).
    Returns an int64 array of value encodings."""
    order = ctx.order
    total = None
    for c, mult in terms:
        if c.is_zero:
            continue
        enc = ctx.exp_enc[(ctx.dlog(c) + (mult % order) * logs) % order]
        total = enc if total is None else ctx.add_enc_bulk(total, enc)
    if total is None:
        return np.zeros(len(logs), dtype=np.int64)
    return total


def N_count(ctx: FieldCtx, pair: CoeffPair):
    """Zeros of L on U: returns (N, witnesses), witnesses sorted by dlog.

    The raw zero count is always even (checked); N is half of it."""
    pair.require_admissible()
    witnesses = [u for u in subgroup_U(ctx) if L_eval(ctx, u, pair).is_zero]
    assert len(witnesses) % 2 == 0, "zero count on U must be even"
    witnesses.sort(key=ctx.dlog)
    return len(witnesses) // 2, witnesses


def _N_fast(ctx: FieldCtx, pair: CoeffPair, u_logs) -> int:
    vals = _linearized_values(ctx, _L_terms(ctx, pair), u_logs)
    zeros = int(np.count_nonzero(vals == 0))
    assert zeros % 2 == 0
    return zeros // 2


# --------------------------------------------------------------------------
# S_f(0): closed form and brute force
# --------------------------------------------------------------------------

def S0_closed(ctx: FieldCtx, pair: CoeffPair) -> int:
    """p^2k (2 N(a,b) - 1)."""
    n, _ = N_count(ctx, pair)
    return ctx.p ** (2 * ctx.params.k) * (2 * n - 1)


def S0_bruteforce(ctx: FieldCtx, pair: CoeffPair) -> CycInt:
    """The defining sum over all of GF(p^n), exact in Z[w]."""
    pair.require_admissible()
    return CycInt.from_counts(ctx.p, _f_value_counts(ctx, pair))


def _f_value_counts(ctx: FieldCtx, pair: CoeffPair):
    """Histogram of f(x) = Tr(a x^d + b x^2) over all x in GF(p^n)."""
    p = ctx.p
    d = ctx.params.d
    a, b = pair.a, pair.b
    if ctx.has_tables:
        order = ctx.order
        logs = np.arange(order, dtype=np.int64)
        terms = []
        if not a.is_zero:
            terms.append((ctx.dlog(a), d % order))
        if not b.is_zero:
            terms.append((ctx.dlog(b), 2))
        total = None
        for e_c, mult in terms:
            enc = ctx.exp_enc[(e_c + mult * logs) % order]
            total = enc if total is None else ctx.add_enc_bulk(total, enc)
        if total is None:
            total = np.zeros(order, dtype=np.int64)
        counts = np.bincount(ctx.trace_enc[total], minlength=p).astype(object)
        counts[0] += 1  # the x = 0 term, f(0) = 0
        return [int(v) for v in counts]
    counts = [0] * p
    for x in ctx.elements():
        counts[ctx.abs_trace(a * x ** d + b * x * x)] += 1
    return counts


# --------------------------------------------------------------------------
# the companion polynomial F (norms-differ case)
# --------------------------------------------------------------------------

def _F_terms(ctx: FieldCtx, pair: CoeffPair):
    p, k = ctx.p, ctx.params.k
    a, b = pair.a, pair.b
    pk = p ** k
    A = a ** (pk * (pk + 1)) - b ** (pk + 1)
    B = a ** (p ** (2 * k)) * b ** (p ** (3 * k)) - a * b ** pk
    return A, B


def prop1_F_zeros(ctx: FieldCtx, pair: CoeffPair) -> list:
    """Zero set in GF(p^n) of
    F(X) = A X^(p^2k) + B X^(p^k) + A^(p^k) X,  A = a^(p^k(p^k+1)) - b^(p^k+1),
    B = a^(p^2k) b^(p^3k) - a b^(p^k); requires A != 0.

    Checked elsewhere to coincide with the zero set of L."""
    pair.require_admissible()
    A, B = _F_terms(ctx, pair)
    if A.is_zero:
        raise WrongCase("F degenerates when the norms agree")
    p, k = ctx.p, ctx.params.k
    terms = ((A ** (p ** k), 1), (B, p ** k), (A, p ** (2 * k)))
    if ctx.has_tables:
        logs = np.arange(ctx.order, dtype=np.int64)
        vals = _linearized_values(ctx, terms, logs)
        zeros = [ctx.from_enc(int(ctx.exp_enc[e])) for e in logs[vals == 0]]
    else:
        zeros = [x for x in ctx.powers()
                 if sum((c * x ** m for c, m in terms), ctx.zero).is_zero]
    zeros.append(ctx.zero)
    return sorted(zeros, key=lambda z: -1 if z.is_zero else ctx.dlog(z))


def L_zeros_field(ctx: FieldCtx, pair: CoeffPair) -> list:
    """Zero set of L in all of GF(p^n), same ordering as prop1_F_zeros."""
    pair.require_admissible()
    if ctx.has_tables:
        logs = np.arange(ctx.order, dtype=np.int64)
        vals = _linearized_values(ctx, _L_terms(ctx, pair), logs)
        zeros = [ctx.from_enc(int(ctx.exp_enc[e])) for e in logs[vals == 0]]
    else:
        zeros = [x for x in ctx.powers() if L_eval(ctx, x, pair).is_zero]
    zeros.append(ctx.zero)
    return sorted(zeros, key=lambda z: -1 if z.is_zero else ctx.dlog(z))


# --------------------------------------------------------------------------
# the Jacobsthal case: g, the nonsquare count, and the H-sum route
# --------------------------------------------------------------------------

def _require_jacobsthal(ctx: FieldCtx, pair: CoeffPair):
    if classify(ctx, pair) is not CaseTag.JACOBSTHAL:
        raise WrongCase("operation defined only in the JACOBSTHAL case")


def find_g(ctx: FieldCtx, pair: CoeffPair) -> Elem:
    """Canonical g in GF(p^2k)* with g^(p^k-1) = -b^(p^3k)/a.

    Solves t (p^k-1) = log_nu(target) mod (p^2k-1); returns nu^t with the
    smallest nonnegative t.  Solvable whenever the case conditions hold."""
    _require_jacobsthal(ctx, pair)
    p, k = ctx.p, ctx.params.k
    pk = p ** k
    view = ctx.subfield(2 * k)
    target = -(pair.b ** (p ** (3 * k))) / pair.a
    e = view.discrete_log(target)  # raises NotInSubfield if out of case
    if e % (pk - 1):
        raise NoSolution("target is not a (p^k-1)-th power")
    t = (e // (pk - 1)) % (pk + 1)
    g = view.generator ** t
    assert g ** (pk - 1) == target
    return g


def N_via_nonsquares(ctx: FieldCtx, pair: CoeffPair) -> int:
    """#{c in GF(p^k) : (cg)^2 - b^(p^2k+1) is a nonsquare in GF(p^2k)}."""
    _require_jacobsthal(ctx, pair)
    k = ctx.params.k
    view = ctx.subfield(2 * k)
    kview = ctx.subfield(k)
    g = find_g(ctx, pair)
    bq = pair.b ** (ctx.p ** (2 * k) + 1)
    count = 0
    for c in kview.elements():
        diff = (c * g) ** 2 - bq
        e = view.eta(diff)
        assert e != 0, "(cg)^2 - b^(p^2k+1) vanished; case conditions violated"
        if e == -1:
            count += 1
    return count


def N_via_jacobsthal(ctx: FieldCtx, pair: CoeffPair) -> int:
    """N from 2N = p^k - H_{p^k+1}(-b^(p^2k+1)/g^2)/(p^k+1) + 1."""
    _require_jacobsthal(ctx, pair)
    p, k = ctx.p, ctx.params.k
    pk = p ** k
    view = ctx.subfield(2 * k)
    g = find_g(ctx, pair)
    arg = -(pair.b ** (p ** (2 * k) + 1)) / (g * g)
    H = jacobsthal.H_sum(view, pk + 1, arg)
    assert H % (pk + 1) == 0
    num = pk - H // (pk + 1) + 1
    assert num % 2 == 0
    return num // 2


# --------------------------------------------------------------------------
# scaling invariance and the Jacobsthal-case corollaries
# --------------------------------------------------------------------------

def corollary1_check(ctx: FieldCtx, pair: CoeffPair, h: Elem) -> bool:
    """N(a, b) == N(a h^d, b h^2) for h != 0."""
    pair.require_admissible()
    if h.is_zero:
        raise ZeroB("scaling element h must be nonzero")
    d = ctx.params.d
    scaled = CoeffPair(pair.a * h ** d, pair.b * h * h)
    return N_count(ctx, pair)[0] == N_count(ctx, scaled)[0]


def jacobsthal_pairs(ctx: FieldCtx, b: Elem):
    """All a with matching norms and a^2 != b^d, i.e. the JACOBSTHAL slice."""
    if b.is_zero:
        raise ZeroB("b must be nonzero")
    out = []
    for a in ctx.powers():
        pair = CoeffPair(a, b)
        if classify(ctx, pair) is CaseTag.JACOBSTHAL:
            out.append(a)
    return out


def corollary_eq9_check(ctx: FieldCtx, b: Elem):
    """sum of N over the JACOBSTHAL slice of b vs (p^k+1)(p^k - chi(b))/2."""
    pk = ctx.p ** ctx.params.k
    total = sum(N_count(ctx, CoeffPair(a, b))[0] for a in jacobsthal_pairs(ctx, b))
    expected = (pk + 1) * (pk - chi(ctx, b)) // 2
    return total, expected


def corollary_suite(ctx: FieldCtx, pair: CoeffPair) -> dict:
    """The seven verified properties of N in the JACOBSTHAL case.

    Returns {"i": bool, ..., "vii": bool}; "vi" is None when its
    hypotheses (p = 3 mod 4, k odd, b square) do not apply."""
    _require_jacobsthal(ctx, pair)
    p, k = ctx.p, ctx.params.k
    pk = p ** k
    a, b = pair.a, pair.b
    detail = case_detail(ctx, pair)
    N = N_count(ctx, pair)[0]
    N_inv = N_count(ctx, CoeffPair(a.inverse(), b.inverse()))[0]
    N_nega = N_count(ctx, CoeffPair(-a, b))[0]
    N_negb = N_count(ctx, CoeffPair(a, -b))[0]

    out = {}
    if detail.b_square:
        out["i"] = N == N_inv
        out["iii"] = N_nega == pk + 1 - N_inv
    else:
        out["i"] = N == pk + 1 - N_inv
        out["iii"] = N_nega == N_inv
    out["ii"] = (N + N_nega == pk + 1) and (N + N_negb == pk + 1)
    out["iv"] = (N % 2 == 0) == detail.b_square
    out["v"] = (2 * N - (pk + 1)) ** 2 <= 4 * pk and N >= 1
    if p % 4 == 3 and k % 2 == 1 and detail.b_square:
        view = ctx.subfield(2 * k)
        root = view.generator ** ((p ** (2 * k) - 1) // 4)
        half = ctx.params.d // 2
        ok = True
        for sign in (1, -1):
            special = CoeffPair(sign * root * b ** half, b)
            assert classify(ctx, special) is CaseTag.JACOBSTHAL
            ok = ok and N_count(ctx, special)[0] == (pk + 1) // 2
        out["vi"] = ok
    else:
        out["vi"] = None
    total, expected = corollary_eq9_check(ctx, b)
    out["vii"] = total == expected
    return out


# --------------------------------------------------------------------------
# per-pair records and the full distribution sweep
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ExpSumRecord:
    pair: CoeffPair
    tag: CaseTag
    N: int
    S0: int
    witnesses: tuple

    def to_json_dict(self, ctx: FieldCtx) -> dict:
        return {
            "a": ctx.format_element(self.pair.a),
            "b": ctx.format_element(self.pair.b),
            "tag": self.tag.value,
            "N": self.N,
            "S0": self.S0,
            "witnesses": [ctx.format_element(w) for w in self.witnesses],
        }


def expsum_record(ctx: FieldCtx, pair: CoeffPair, check_oracle=True) -> ExpSumRecord:
    """Classify, count zeros, and (optionally) confirm the brute-force sum."""
    tag = classify(ctx, pair)
    n, witnesses = N_count(ctx, pair)
    s0 = ctx.p ** (2 * ctx.params.k) * (2 * n - 1)
    if check_oracle:
        brute = S0_bruteforce(ctx, pair)
        if brute != s0:
            raise OracleMismatch(f"closed {s0} != brute {brute} at {pair}")
    return ExpSumRecord(pair=pair, tag=tag, N=n, S0=s0, witnesses=tuple(witnesses))


@dataclass(frozen=True)
class DistributionReport:
    """Tallies of S_f(0) over all a for a fixed b.

    r, s, t count S_f(0) = -p^2k, p^2k, 3 p^2k over the NORM_DIFFER and
    SQUARE_MATCH cases; jac_histogram maps N to its frequency over the
    JACOBSTHAL case.  residuals are the three identity defects and must
    all be zero."""

    b: Elem
    chi_b: int
    r: int
    s: int
    t: int
    jac_histogram: dict
    s0_total: int
    residuals: tuple

    def to_json_dict(self, ctx: FieldCtx) -> dict:
        return {
            "b": ctx.format_element(self.b),
            "chi_b": self.chi_b,
            "r": self.r,
            "s": self.s,
            "t": self.t,
            "jac_histogram": {str(k): v for k, v in sorted(self.jac_histogram.items())},
            "s0_total": self.s0_total,
            "residuals": list(self.residuals),
        }


def distribution_sweep(ctx: FieldCtx, b: Elem, check_oracle=True) -> DistributionReport:
    """Walk every a in GF(p^n) for the fixed b != 0.

    For each pair the closed form p^2k (2N - 1) is compared against the
    brute-force sum (OracleMismatch on any defect), then tallied."""
    if b.is_zero:
        raise ZeroB("distribution sweep needs b != 0")
    p, k = ctx.p, ctx.params.k
    p2k = p ** (2 * k)
    pk = p ** k
    sign = chi(ctx, b)

    fast = ctx.has_tables
    if fast:
        order = ctx.order
        logs = np.arange(order, dtype=np.int64)
        d_logs = (ctx.params.d % order) * logs % order
        b_part = ctx.exp_enc[(ctx.dlog(b) + 2 * logs) % order]
        u_logs = ((p2k - 1) * np.arange(p2k + 1, dtype=np.int64)) % order

    tally = {0: 0, 1: 0, 2: 0}
    jac_hist = {}
    s0_total = 0
    for a in [ctx.zero] + list(ctx.powers()):
        pair = CoeffPair(a, b)
        tag = classify(ctx, pair)
        if fast:
            n = _N_fast(ctx, pair, u_logs)
            if check_oracle:
                if a.is_zero:
                    total = b_part
                else:
                    total = ctx.add_enc_bulk(ctx.exp_enc[(ctx.dlog(a) + d_logs) % order], b_part)
                counts = np.bincount(ctx.trace_enc[total], minlength=p)
                counts = [int(v) for v in counts]
                counts[0] += 1
                brute = CycInt.from_counts(p, counts)
        else:
            n = N_count(ctx, pair)[0]
            if check_oracle:
                brute = S0_bruteforce(ctx, pair)
        s0 = p2k * (2 * n - 1)
        if check_oracle and brute != s0:
            raise OracleMismatch(
                f"closed {s0} != brute force at a={ctx.format_element(a)}")
        s0_total += s0
        if tag is CaseTag.JACOBSTHAL:
            jac_hist[n] = jac_hist.get(n, 0) + 1
        else:
            assert n <= 2, "three-valued case produced N > 2"
            tally[n] += 1

    r, s, t = tally[0], tally[1], tally[2]
    residuals = (
        (r + s + t) - (ctx.q - pk + sign),
        (-r + s + 3 * t) - sign * pk,
        s0_total - ctx.q,
    )
    if any(residuals):
        raise OracleMismatch(f"distribution identities violated: {residuals}")
    return DistributionReport(b=b, chi_b=sign, r=r, s=s, t=t,
                              jac_histogram=jac_hist, s0_total=s0_total,
                              residuals=residuals)
