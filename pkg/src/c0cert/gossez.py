"""Gossez's skew operator on summable sequences and its exact inverse solver.

The operator sends a summable sequence y to the bounded sequence whose n-th
entry is the sum of y beyond index n minus the sum of y before index n:

    (G y)_n = sum_{i > n} y_i  -  sum_{i < n} y_i .

On the finitely supported sequences representable here G is linear,
injective and skew, meaning pairing(G(y), y) = 0 exactly.  Its image has
constant tail -sum(y), so -G(y) converges to zero precisely when sum(y) = 0.
``t_solve`` inverts x = -G(y) on such right-hand sides and reports
NotInDomain otherwise; the solvable x form the graph of a point-to-point
maximal monotone operator from null sequences to summable ones, whose range
is exactly the zero-sum summable sequences.
"""

from __future__ import annotations

from fractions import Fraction

from .seqspace import NonSummable, Seq, total_sum

__all__ = ["NotInDomain", "gossez_apply", "t_solve", "unit_u", "unit_v", "range_member"]


class NotInDomain(ValueError):
    """The right-hand side has no finitely supported preimage under -G."""


def gossez_apply(y: Seq) -> Seq:
    """Image of a finitely supported sequence under the skew map.

    One pass over the support with running before/after sums.  The result
    has tail -total_sum(y), so it stays eventually constant.
    """
    if y.tail != 0:
        raise NonSummable("gossez_apply requires a finitely supported argument")
    total = total_sum(y)
    out = []
    before = Fraction(0)
    remaining = total
    for yn in y.prefix:
        after = remaining - yn
        out.append(after - before)
        before += yn
        remaining = after
    return Seq(tuple(out), -total)


def t_solve(x: Seq) -> Seq:
    """The unique finitely supported y with -G(y) = x, if one exists.

    Any solution has vanishing suffix sums beyond the support of x, so the
    suffix sums S_i = sum_{k >= i} y_k obey the backward recurrence
    S_i = -x_i - S_{i+1} starting from S_{L+1} = 0, and the entries are
    y_i = S_i - S_{i+1}.  A solution exists iff the recurrence closes with
    S_1 = 0, which is the zero-sum constraint on y; otherwise NotInDomain is
    raised.  The candidate is re-checked against the forward map before
    being returned: solver and forward map are independent code paths, so
    the comparison is a free internal oracle.
    """
    if x.tail != 0:
        raise NonSummable("t_solve requires a finitely supported argument")
    s_next = Fraction(0)
    entries_rev = []
    for xi in reversed(x.prefix):
        s_i = -xi - s_next
        entries_rev.append(s_i - s_next)
        s_next = s_i
    if s_next != 0:
        raise NotInDomain(f"no finitely supported preimage: residual sum {s_next}")
    y = Seq(tuple(reversed(entries_rev)))
    if -gossez_apply(y) != x:
        raise AssertionError("solver disagrees with the forward map")
    return y


def unit_u(m: int) -> Seq:
    """Difference test vector: -1 at index m, +1 at index m+1, 0 elsewhere."""
    if m < 1:
        raise ValueError(f"index must be >= 1, got {m}")
    return Seq((Fraction(0),) * (m - 1) + (Fraction(-1), Fraction(1)))


def unit_v(m: int) -> Seq:
    """Image of unit_u(m) under the skew map: +1 at indices m and m+1."""
    if m < 1:
        raise ValueError(f"index must be >= 1, got {m}")
    return Seq((Fraction(0),) * (m - 1) + (Fraction(1), Fraction(1)))


def range_member(y: Seq) -> bool:
    """Whether y is a value of the solver, i.e. a zero-sum summable sequence."""
    if y.tail != 0:
        raise NonSummable("range membership is defined for summable sequences only")
    return total_sum(y) == 0
