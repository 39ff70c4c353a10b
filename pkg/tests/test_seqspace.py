"""Sequence arithmetic: canonical form, pairing, norms, serialization."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from c0cert.seqspace import (
    ONES,
    ZERO,
    NonSummable,
    Seq,
    add,
    canonicalize,
    constant,
    l1_norm,
    pairing,
    rat,
    rat_str,
    scale,
    seq,
    sup_norm,
    total_sum,
    unit,
)

from strategies import eventually_constants, rationals, summables


def oracle_pairing(x: Seq, y: Seq) -> Fraction:
    """Brute-force pairing over the joint prefix window.

    Exact whenever at least one tail is zero, since every later product
    vanishes.
    """
    n = max(len(x.prefix), len(y.prefix))
    return sum((x.entry(i) * y.entry(i) for i in range(1, n + 1)), Fraction(0))


# --- canonical form ---------------------------------------------------------


def test_canonicalize_absorbs_trailing_duplicates():
    assert canonicalize([1, 2, 2], 2) == Seq((Fraction(1),), Fraction(2))


def test_canonicalize_zero():
    assert canonicalize([], 0) == ZERO


def test_canonicalize_negative_tail():
    assert canonicalize([0, -1, -1], -1) == Seq((Fraction(0),), Fraction(-1))


@given(eventually_constants(), st.integers(min_value=0, max_value=3))
def test_appending_tail_copies_is_identity(s, k):
    assert Seq(s.prefix + (s.tail,) * k, s.tail) == s


@given(st.lists(rationals, max_size=8), rationals)
def test_canonicalization_preserves_entries(raw, tail):
    s = Seq(tuple(raw), tail)
    for i in range(1, len(raw) + 4):
        expected = raw[i - 1] if i <= len(raw) else tail
        assert s.entry(i) == expected


def test_entry_rejects_nonpositive_index():
    with pytest.raises(IndexError):
        ZERO.entry(0)


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        rat(0.5)
    with pytest.raises(TypeError):
        Seq((0.5,))


# --- linear structure -------------------------------------------------------


def test_add_example():
    a = Seq((Fraction(0),), Fraction(1))  # (0, 1, 1, ...)
    total = add(a, ONES)
    assert total == Seq((Fraction(1),), Fraction(2))
    assert [total.entry(i) for i in range(1, 5)] == [1, 2, 2, 2]


@given(eventually_constants(), eventually_constants())
def test_add_tail_law(a, b):
    assert (a + b).tail == a.tail + b.tail


@given(rationals, eventually_constants())
def test_scale_tail_law(c, a):
    assert scale(c, a).tail == c * a.tail


@given(eventually_constants())
def test_scale_by_zero(a):
    assert scale(0, a) == ZERO


def test_scale_minus_one_ones():
    assert scale(-1, ONES) == Seq((), Fraction(-1))


@given(eventually_constants(), eventually_constants(), eventually_constants())
def test_add_associative_commutative(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)


# --- pairing ----------------------------------------------------------------


def test_pairing_examples():
    u1 = seq(-1, 1)
    v1 = seq(1, 1)
    assert pairing(ONES, u1) == 0
    assert pairing(v1, unit(1)) == 1
    with pytest.raises(NonSummable):
        pairing(ONES, ONES)


@given(eventually_constants(), summables())
def test_pairing_matches_oracle(x, y):
    assert pairing(x, y) == oracle_pairing(x, y)


@given(summables(), summables())
def test_pairing_symmetric_on_summables(x, y):
    assert pairing(x, y) == pairing(y, x)


@given(rationals, rationals, eventually_constants(), eventually_constants(), summables())
def test_pairing_bilinear(a, b, x1, x2, y):
    assert pairing(a * x1 + b * x2, y) == a * pairing(x1, y) + b * pairing(x2, y)


@given(eventually_constants(), summables())
def test_hoelder_bound(x, y):
    assert abs(pairing(x, y)) <= sup_norm(x) * l1_norm(y)


# --- norms and sums ---------------------------------------------------------


def test_norm_examples():
    assert sup_norm(Seq((Fraction(1),), Fraction(2))) == 2
    assert l1_norm(seq(-1, 1)) == 2
    assert total_sum(seq(-1, 1)) == 0


def test_norms_reject_nonzero_tail():
    with pytest.raises(NonSummable):
        l1_norm(ONES)
    with pytest.raises(NonSummable):
        total_sum(ONES)


@given(eventually_constants(), eventually_constants())
def test_sup_norm_triangle(a, b):
    assert sup_norm(a + b) <= sup_norm(a) + sup_norm(b)


@given(rationals, eventually_constants())
def test_sup_norm_homogeneous(c, a):
    assert sup_norm(c * a) == abs(c) * sup_norm(a)


@given(summables(), summables())
def test_l1_norm_triangle(a, b):
    assert l1_norm(a + b) <= l1_norm(a) + l1_norm(b)


@given(rationals, summables())
def test_l1_norm_homogeneous(c, a):
    assert l1_norm(c * a) == abs(c) * l1_norm(a)


@given(summables(), summables())
def test_total_sum_additive(a, b):
    assert total_sum(a + b) == total_sum(a) + total_sum(b)


# --- generators -------------------------------------------------------------


def test_unit_and_constant():
    assert unit(1) == seq(1)
    assert unit(3).entry(3) == 1 and unit(3).entry(2) == 0 and unit(3).entry(4) == 0
    assert constant(1) == ONES
    assert constant(0) == ZERO
    with pytest.raises(ValueError):
        unit(0)


# --- serialization ----------------------------------------------------------


def test_rat_str_format():
    assert rat_str(Fraction(3, 4)) == "3/4"
    assert rat_str(Fraction(5)) == "5"
    assert rat_str(Fraction(-6, 8)) == "-3/4"


def test_to_obj_round_trip():
    s = seq("1/2", -3, tail="7/5")
    assert s.to_obj() == {"prefix": ["1/2", "-3"], "tail": "7/5"}
    assert Seq.from_obj(s.to_obj()) == s


@given(eventually_constants())
def test_obj_round_trip_property(s):
    assert Seq.from_obj(s.to_obj()) == s


@pytest.mark.parametrize(
    "obj",
    [
        "not a dict",
        {"prefix": "oops"},
        {"prefix": ["1/0"]},
        {"prefix": ["x"]},
        {"prefix": [1.5]},
        {"tail": "nope"},
        {"prefix": [], "tail": 0, "extra": 1},
    ],
)
def test_from_obj_rejects_malformed(obj):
    with pytest.raises(ValueError):
        Seq.from_obj(obj)
