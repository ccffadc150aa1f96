"""Cyclotomic classes of order p^k+1 in GF(p^2k)* and their statistics.

With nu the induced generator of GF(p^2k)*, the classes are

    C_t = { nu^((p^k+1) i + t) : i = 0 .. p^k-2 },   t = 0 .. p^k,

so C_0 = GF(p^k)* and -1 lies in C_0.  The cyclotomic number (i, j)
counts x in C_i with x + 1 in C_j.  The verified closed form is

    (i, j) = p^k - 2   if i = j = 0,
             1         if i != j and i*j != 0,
             0         otherwise,

and the per-class character sums P_t = sum_{x in C_t} w^Tr(x) equal
p^k - 1 at t = (p^k+1)/2 and -1 everywhere else.

All functions take a SubfieldView of even degree 2k (either the 2k-view
of the big GF(p^4k) context or the full view of a standalone GF(p^2k)
context); values do not depend on that choice, class indices do, so
reports record the generator nu in use.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cycint import CycInt
from .errors import IndexOutOfRange, ZeroArgument
from .field_core import Elem, SubfieldView


def _pk(view: SubfieldView) -> int:
    if view.degree % 2 != 0:
        raise ValueError("cyclotomy needs a view of even degree 2k")
    return view.ctx.p ** (view.degree // 2)


def class_count(view: SubfieldView) -> int:
    """Number of classes, p^k + 1."""
    return _pk(view) + 1


def class_index(view: SubfieldView, x: Elem) -> int:
    """t with x in C_t, i.e. log_nu(x) mod (p^k + 1)."""
    if x.is_zero:
        raise ZeroArgument("zero belongs to no cyclotomic class")
    return view.discrete_log(x) % class_count(view)


def cyclotomic_number(view: SubfieldView, i: int, j: int) -> int:
    """Brute-force (i, j): walk C_i and classify x + 1."""
    order = class_count(view)
    if not (0 <= i <= order - 1 and 0 <= j <= order - 1):
        raise IndexOutOfRange(f"indices must lie in 0..{order - 1}")
    one = view.ctx.one
    base = view.generator ** i
    step = view.generator ** order
    count = 0
    x = base
    for _ in range(_pk(view) - 1):
        y = x + one
        if not y.is_zero and class_index(view, y) == j:
            count += 1
        x = x * step
    return count


def closed_form(pk: int, i: int, j: int) -> int:
    """The verified value of (i, j) for class order p^k + 1."""
    if i == 0 and j == 0:
        return pk - 2
    if i != j and i != 0 and j != 0:
        return 1
    return 0


@dataclass(frozen=True)
class CycNumberTable:
    """Full matrix of cyclotomic numbers; table[i][j] = (i, j)."""

    order: int              # p^k + 1
    table: tuple            # (order x order) tuple of tuples
    nu_log: int             # ambient dlog of the generator nu in use

    @property
    def total(self) -> int:
        return sum(sum(row) for row in self.table)

    def to_csv(self) -> str:
        lines = ["i\\j," + ",".join(str(j) for j in range(self.order))]
        for i, row in enumerate(self.table):
            lines.append(f"{i}," + ",".join(str(v) for v in row))
        return "\n".join(lines)


def full_table(view: SubfieldView) -> CycNumberTable:
    """All cyclotomic numbers in one pass over GF(p^2k)*."""
    order = class_count(view)
    ctx = view.ctx
    if ctx.has_tables:
        sub_exp, sub_log = view._tables()
        i_idx = np.arange(view.order, dtype=np.int64) % order
        shifted = ctx.add_enc_bulk(sub_exp, np.ones(view.order, dtype=np.int64))
        mask = shifted != 0
        j_idx = sub_log[shifted[mask]] % order
        assert (sub_log[shifted[mask]] >= 0).all()
        flat = np.bincount(i_idx[mask] * order + j_idx, minlength=order * order)
        table = tuple(tuple(int(v) for v in flat[r * order:(r + 1) * order])
                      for r in range(order))
    else:
        counts = [[0] * order for _ in range(order)]
        one = ctx.one
        for e, x in enumerate(view.nonzero_elements()):
            y = x + one
            if not y.is_zero:
                counts[e % order][class_index(view, y)] += 1
        table = tuple(tuple(row) for row in counts)
    return CycNumberTable(order=order, table=table, nu_log=ctx.dlog(view.generator))


@dataclass(frozen=True)
class Lemma1Report:
    ok: bool
    pk: int
    mismatches: tuple  # ((i, j, got, want), ...)
    total: int


def verify_lemma1(view: SubfieldView) -> Lemma1Report:
    """Compare the full table against the closed form, entry by entry."""
    pk = _pk(view)
    tab = full_table(view)
    bad = []
    for i in range(tab.order):
        for j in range(tab.order):
            want = closed_form(pk, i, j)
            if tab.table[i][j] != want:
                bad.append((i, j, tab.table[i][j], want))
    return Lemma1Report(ok=not bad, pk=pk, mismatches=tuple(bad), total=tab.total)


@dataclass(frozen=True)
class PtVector:
    """values[t] = P_t = sum_{x in C_t} w^Tr(x), exact in Z[w]."""

    order: int
    values: tuple  # of CycInt


def pt_sums(view: SubfieldView) -> PtVector:
    """Per-class additive character sums, checked against their closed form."""
    order = class_count(view)
    pk = _pk(view)
    p = view.ctx.p
    counts = [[0] * p for _ in range(order)]
    for e, x in enumerate(view.nonzero_elements()):
        counts[e % order][view.abs_trace(x)] += 1
    values = tuple(CycInt.from_counts(p, c) for c in counts)
    for t, v in enumerate(values):
        want = pk - 1 if t == (pk + 1) // 2 else -1
        assert v == want, f"P_{t} = {v}, expected {want}"
    return PtVector(order=order, values=values)
