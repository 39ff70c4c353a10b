"""Skew operator: forward map against a brute-force oracle, solver, vectors."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from c0cert.gossez import (
    NotInDomain,
    gossez_apply,
    range_member,
    t_solve,
    unit_u,
    unit_v,
)
from c0cert.seqspace import ONES, ZERO, NonSummable, Seq, pairing, seq, total_sum, unit

from strategies import nonzero_rationals, rationals, summables, zero_sum_summables


def oracle_entry(y: Seq, n: int) -> Fraction:
    """Literal double-sum evaluation of the skew map at index n.

    Independent of the production path: no running sums, every term summed
    on its own.  Valid for finitely supported y (entries beyond the prefix
    are zero).
    """
    above = sum((y.entry(i) for i in range(n + 1, len(y.prefix) + 1)), Fraction(0))
    below = sum((y.entry(i) for i in range(1, n)), Fraction(0))
    return above - below


# --- forward map ------------------------------------------------------------


@given(summables())
def test_matches_brute_force_oracle(y):
    g = gossez_apply(y)
    for n in range(1, len(y.prefix) + 4):
        assert g.entry(n) == oracle_entry(y, n)


@given(summables())
def test_tail_is_minus_total(y):
    assert gossez_apply(y).tail == -total_sum(y)


def test_unit_family_images():
    assert gossez_apply(unit_u(1)) == unit_v(1)
    for m in range(1, 51):
        assert gossez_apply(unit_u(m)) == unit_v(m)


def test_image_of_first_coordinate():
    assert gossez_apply(unit(1)) == Seq((Fraction(0),), Fraction(-1))


def test_image_of_zero():
    assert gossez_apply(ZERO) == ZERO


def test_rejects_nonzero_tail():
    with pytest.raises(NonSummable):
        gossez_apply(ONES)


@given(summables())
def test_skew_identity(y):
    assert pairing(gossez_apply(y), y) == 0


@given(rationals, rationals, summables(), summables())
def test_linearity(a, b, y, z):
    assert gossez_apply(a * y + b * z) == a * gossez_apply(y) + b * gossez_apply(z)


@given(summables(), summables())
def test_injectivity(y, z):
    if y != z:
        assert gossez_apply(y) != gossez_apply(z)


# --- solver -----------------------------------------------------------------


def test_solver_inverts_unit_vectors():
    assert t_solve(-unit_v(1)) == unit_u(1)


def test_solver_rejects_first_coordinate():
    with pytest.raises(NotInDomain):
        t_solve(unit(1))


def test_solver_zero():
    assert t_solve(ZERO) == ZERO


def test_solver_rejects_nonzero_tail():
    with pytest.raises(NonSummable):
        t_solve(ONES)


@given(zero_sum_summables())
def test_round_trip_from_range(y):
    assert t_solve(-gossez_apply(y)) == y


@given(summables())
def test_round_trip_from_domain(x):
    try:
        y = t_solve(x)
    except NotInDomain:
        return
    assert -gossez_apply(y) == x


@given(nonzero_rationals, st.integers(min_value=1, max_value=50))
def test_solver_scaling_identity(lam, m):
    assert t_solve(-lam * unit_v(m)) == lam * unit_u(m)


# --- range ------------------------------------------------------------------


def test_range_examples():
    assert range_member(unit_u(1)) is True
    assert range_member(unit(1)) is False
    assert range_member(ZERO) is True
    with pytest.raises(NonSummable):
        range_member(ONES)


@given(summables())
def test_range_membership_is_zero_sum(y):
    assert range_member(y) == (total_sum(y) == 0)


@given(summables())
def test_images_under_minus_g_are_solvable_iff_zero_sum(y):
    x = -gossez_apply(y)
    if total_sum(y) == 0:
        assert t_solve(x) == y
    else:
        # x leaves the null-sequence model entirely
        assert x.tail != 0


def test_unit_vector_shapes():
    assert unit_u(1) == seq(-1, 1)
    assert unit_v(2) == seq(0, 1, 1)
    with pytest.raises(ValueError):
        unit_u(0)
    with pytest.raises(ValueError):
        unit_v(0)
