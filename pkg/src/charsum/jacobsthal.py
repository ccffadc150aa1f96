"""Jacobsthal sums over GF(p^2k) and their elliptic-curve reduction.

For the quadratic character eta of GF(p^2k) (eta(0) = 0):

    H_n(a) = sum_{x in GF(p^2k)}  eta(x^(n+1) + a x)
    I_n(a) = sum_{x != 0}         eta(x^n + a)

linked by I_2n(a) = I_n(a) + H_n(a).  At order n = p^k + 1 and
a outside GF(p^k) the companion sum collapses to the closed form

    I_{p^k+1}(a) = -(p^k + 1)(eta(a) + 1)

and H factors through an elliptic curve: writing a = a0 + 2 mu^(1/2) a1
over the half basis (mu the induced generator of GF(p^k)*),

    H_{p^k+1}(a) / (p^k + 1) = N - p^k,

with N the number of affine points of f^2 = z^3 - A z^2 + C z over
GF(p^k), A = a0, C = mu a1^2.  The Hasse bound on N yields

    |H_{p^k+1}(a)| <= 2 p^(k/2) (p^k + 1),

which theorem2_scan asserts exhaustively (in exact integer arithmetic,
comparing H^2 against 4 p^k (p^k+1)^2).

All functions take a SubfieldView of even degree 2k, so they run both
on the 2k-view of the big context and on a standalone GF(p^2k) context.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BoundViolation, NotInSubfield, ZeroArgument, ZeroC
from .field_core import Elem, SubfieldView


def _check_arg(view: SubfieldView, a: Elem) -> None:
    if a.is_zero:
        raise ZeroArgument("a must be nonzero")
    if not view.contains(a):
        raise NotInSubfield(f"{a!r} is not in the scan field")


def H_sum(view: SubfieldView, n: int, a: Elem) -> int:
    """Jacobsthal sum of order n at a (exact integer)."""
    _check_arg(view, a)
    total = 0
    for x in view.nonzero_elements():  # the x = 0 term is eta(0) = 0
        total += view.eta(x ** (n + 1) + a * x)
    return total


def I_sum(view: SubfieldView, n: int, a: Elem) -> int:
    """Companion sum of order n at a (exact integer)."""
    _check_arg(view, a)
    total = 0
    for x in view.nonzero_elements():
        total += view.eta(x ** n + a)
    return total


def eq1_value(pk: int, eta_a: int) -> int:
    """Closed form of I_{p^k+1}(a) for a outside GF(p^k)."""
    return -(pk + 1) * (eta_a + 1)


# --------------------------------------------------------------------------
# half-basis decomposition and the curve reduction
# --------------------------------------------------------------------------

def mu_sqrt(view: SubfieldView) -> Elem:
    """A fixed square root of mu, the induced generator of GF(p^k)*.

    mu = xi^e with e = (q_ambient - 1)/(p^k - 1); e is always even here,
    so mu^(1/2) = xi^(e/2).  It lies in GF(p^2k) but not in GF(p^k)."""
    kview = view.ctx.subfield(view.degree // 2)
    assert kview.step % 2 == 0
    return view.ctx.from_exp(kview.step // 2)


def decompose_half_basis(view: SubfieldView, a: Elem) -> tuple:
    """Write a = a0 + 2 mu^(1/2) a1 with a0, a1 in GF(p^k).

    The conjugate over GF(p^k) flips the sign of mu^(1/2), so
    a0 = (a + a^(p^k))/2 and a1 = (a - a^(p^k))/(4 mu^(1/2))."""
    if not view.contains(a):
        raise NotInSubfield(f"{a!r} is not in the decomposition field")
    ctx = view.ctx
    pk = ctx.p ** (view.degree // 2)
    conj = a ** pk
    inv2 = ctx.one * pow(2, -1, ctx.p)
    root = mu_sqrt(view)
    a0 = (a + conj) * inv2
    a1 = (a - conj) * inv2 * inv2 / root
    return a0, a1


def recompose(view: SubfieldView, a0: Elem, a1: Elem) -> Elem:
    return a0 + 2 * mu_sqrt(view) * a1


def curve_point_count(kview: SubfieldView, A: Elem, C: Elem) -> int:
    """Affine points of f^2 = z^3 - A z^2 + C z over GF(p^k).

    Counted as sum_z (1 + zeta(z^3 - A z^2 + C z)) with zeta(0) = 0, so
    a z with vanishing cubic contributes exactly the one point (z, 0)."""
    if C.is_zero:
        raise ZeroC("curve reduction needs C != 0")
    count = 0
    for z in kview.elements():
        w = z * z * z - A * z * z + C * z
        count += 1 + kview.eta(w)
    return count


# --------------------------------------------------------------------------
# records and the exhaustive bound scan
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class JacobsthalRecord:
    a: Elem
    order_n: int          # p^k + 1
    H: int
    I: int
    I2: int               # I at order 2(p^k+1); equals I + H
    curve_N: int | None   # affine point count, when a is outside GF(p^k)
    bound_ratio: float | None

    def to_json_dict(self, view: SubfieldView) -> dict:
        return {
            "a": f"g^{view.discrete_log(self.a)}",
            "H": self.H,
            "I": self.I,
            "I2": self.I2,
            "curve_N": self.curve_N,
            "bound_ratio": self.bound_ratio,
        }


def jacobsthal_record(view: SubfieldView, a: Elem) -> JacobsthalRecord:
    """H, I, I_{2n} and (off GF(p^k)) the curve count, at order n = p^k+1."""
    _check_arg(view, a)
    pk = view.ctx.p ** (view.degree // 2)
    n = pk + 1
    H = H_sum(view, n, a)
    I = I_sum(view, n, a)
    I2 = I_sum(view, 2 * n, a)
    kview = view.ctx.subfield(view.degree // 2)
    curve_N = None
    ratio = None
    if not kview.contains(a):
        a0, a1 = decompose_half_basis(view, a)
        mu = kview.generator
        curve_N = curve_point_count(kview, a0, mu * a1 * a1)
        ratio = abs(H) / (2 * math.sqrt(pk) * n)
    return JacobsthalRecord(a=a, order_n=n, H=H, I=I, I2=I2,
                            curve_N=curve_N, bound_ratio=ratio)


@dataclass(frozen=True)
class BoundScanReport:
    pk: int
    records: tuple            # JacobsthalRecord per a outside GF(p^k), dlog order
    max_abs_H: int
    argmax_log: int           # discrete log of a maximizing |H|
    bound_sq: int             # 4 p^k (p^k+1)^2
    attained: bool            # H^2 == bound_sq for some a (k even only)

    @property
    def max_ratio(self) -> float:
        return math.sqrt(self.max_abs_H ** 2 / self.bound_sq)


def theorem2_scan(view: SubfieldView) -> BoundScanReport:
    """Check |H_{p^k+1}(a)| <= 2 p^(k/2) (p^k+1) for every a off GF(p^k).

    The comparison is exact: H^2 <= 4 p^k (p^k+1)^2.  A violation would
    falsify the bound and raises BoundViolation."""
    ctx = view.ctx
    pk = ctx.p ** (view.degree // 2)
    kview = ctx.subfield(view.degree // 2)
    bound_sq = 4 * pk * (pk + 1) ** 2
    records = []
    best = (-1, 0)
    for e, a in enumerate(view.nonzero_elements()):
        if kview.contains(a):
            continue
        rec = jacobsthal_record(view, a)
        if rec.H ** 2 > bound_sq:
            raise BoundViolation(f"|H({a!r})| = {abs(rec.H)} exceeds the bound")
        if abs(rec.H) > best[0]:
            best = (abs(rec.H), e)
        records.append(rec)
    return BoundScanReport(
        pk=pk,
        records=tuple(records),
        max_abs_H=best[0],
        argmax_log=best[1],
        bound_sq=bound_sq,
        attained=any(r.H ** 2 == bound_sq for r in records),
    )
