"""Exact certificates for the graph of the skew operator's inverse.

Everything here reduces a structural claim about the operator to rational
identities that are checked literally:

* ``monotone_product`` pairs two graph points off to exactly zero, the skew
  sharpening of the monotonicity inequality.
* ``violation_witness`` is a constructive maximality check: any candidate
  pair off the graph is refuted by an explicit graph point whose monotone
  product with the candidate is strictly negative (normalized to -1 whenever
  a difference-recurrence index witnesses the failure).
* ``closure_margin`` and ``distinctness`` handle the one-parameter family of
  bidual points built from a positive-sum direction: each family point is
  monotone against the whole graph with one constant strictly positive
  margin, yet any two family points are strictly non-monotone against each
  other, so no single monotone extension of the graph can contain two of
  them.
* ``fitzpatrick_value`` and ``fitzpatrick_gap`` certify the same failure
  through the Fitzpatrick function: the supremum of the graph evaluations
  stays short of the family point's self-pairing by an exactly computed
  positive gap.

Sampling helpers are deterministic given their random.Random generator; use
one generator per worker, with seeds derived by fixed splitting.
"""

from __future__ import annotations

import random
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .gossez import gossez_apply, unit_u
from .seqspace import ONES, ZERO, NonSummable, Rational, Seq, pairing, rat, total_sum

__all__ = [
    "InvalidParameter",
    "EmptySample",
    "GraphPoint",
    "ExtensionPoint",
    "Member",
    "Violation",
    "WitnessVerdict",
    "random_rational",
    "random_summable",
    "random_graph_point",
    "random_offgraph_pair",
    "monotone_product",
    "extension_point",
    "closure_margin",
    "distinctness",
    "fitzpatrick_value",
    "fitzpatrick_gap",
    "violation_witness",
]


class InvalidParameter(ValueError):
    """A certificate was requested for parameters outside its preconditions."""


class EmptySample(ValueError):
    """A nonempty sample of graph points is required."""


@dataclass(frozen=True)
class GraphPoint:
    """A pair (x, y) with x = -G(y); membership is verified on construction.

    The zero-tail requirement on x forces sum(y) = 0, since -G(y) has
    constant tail sum(y).
    """

    x: Seq
    y: Seq

    def __post_init__(self) -> None:
        if self.x.tail != 0 or self.y.tail != 0:
            raise InvalidParameter("graph points need zero tails on both components")
        if self.x != -gossez_apply(self.y):
            raise InvalidParameter("not a graph point: x != -G(y)")

    @classmethod
    def from_y(cls, y: Seq) -> GraphPoint:
        """The graph point above a zero-sum summable y."""
        return cls(-gossez_apply(y), y)


@dataclass(frozen=True)
class ExtensionPoint:
    """A closure point beyond the graph, parametrized by tau > 0.

    For a summable direction ytilde with pairing(ones, ytilde) > 0,

        xstar     = tau * ytilde
        xstarstar = -G(tau * ytilde) + (1/tau) * ones .

    The first component stays summable; the second has constant tail
    tau * sum(ytilde) + 1/tau > 0, so it is bounded but not a null sequence.
    All fields are recomputable from (tau, ytilde) and are re-derived and
    compared on construction.
    """

    tau: Rational
    ytilde: Seq
    xstar: Seq
    xstarstar: Seq

    def __post_init__(self) -> None:
        if self.tau <= 0:
            raise InvalidParameter(f"tau must be positive, got {self.tau}")
        if self.ytilde.tail != 0:
            raise InvalidParameter("ytilde must be finitely supported")
        if pairing(ONES, self.ytilde) <= 0:
            raise InvalidParameter("pairing(ones, ytilde) must be positive")
        if self.xstar != self.tau * self.ytilde:
            raise InvalidParameter("xstar != tau * ytilde")
        expected = -gossez_apply(self.xstar) + (Fraction(1) / self.tau) * ONES
        if self.xstarstar != expected:
            raise InvalidParameter("xstarstar does not match its construction")


def extension_point(tau: Rational | int | str, ytilde: Seq) -> ExtensionPoint:
    """Build the family point for parameter tau > 0 and direction ytilde.

    The positive total pairing(ones, ytilde) is exactly the closure margin
    and the Fitzpatrick gap this point certifies.
    """
    tau = rat(tau)
    if tau <= 0:
        raise InvalidParameter(f"tau must be positive, got {tau}")
    if ytilde.tail != 0:
        raise InvalidParameter("ytilde must be finitely supported")
    if pairing(ONES, ytilde) <= 0:
        raise InvalidParameter("pairing(ones, ytilde) must be positive")
    xstar = tau * ytilde
    xstarstar = -gossez_apply(xstar) + (Fraction(1) / tau) * ONES
    return ExtensionPoint(tau, ytilde, xstar, xstarstar)


@dataclass(frozen=True)
class Member:
    """Verdict: the candidate pair lies on the graph."""


@dataclass(frozen=True)
class Violation:
    """Verdict: an explicit graph point refutes the candidate pair.

    ``product`` is the monotone product of the candidate against the
    witness, strictly negative, so no monotone extension of the graph can
    contain the candidate.
    """

    witness: GraphPoint
    product: Rational


WitnessVerdict = Member | Violation


def monotone_product(p: GraphPoint, q: GraphPoint) -> Rational:
    """pairing(p.x - q.x, p.y - q.y); identically zero on the graph."""
    return pairing(p.x - q.x, p.y - q.y)


def closure_margin(ep: ExtensionPoint, p: GraphPoint) -> Rational:
    """Monotone product of a family point against a graph point.

    Equals pairing(ones, ep.ytilde) for every graph point: the graph part
    pairs off by skewness, graph values are zero-sum so they are orthogonal
    to the ones direction, and what remains is (1/tau) * pairing(tau *
    ytilde, ones).  Constancy with strict positivity over arbitrary graph
    samples certifies membership in the monotone closure of the graph.
    """
    return pairing(ep.xstarstar - p.x, ep.xstar - p.y)


def distinctness(
    tau1: Rational | int | str, tau2: Rational | int | str, ytilde: Seq
) -> Rational:
    """Monotone product between two family points, from the sequences themselves.

    The value is checked against the closed form

        (tau1 - tau2) * (1/tau1 - 1/tau2) * pairing(ones, ytilde)

    and required to be strictly negative: the two points cannot live in a
    common monotone graph, so distinct parameters force distinct maximal
    monotone extensions into the bidual.
    """
    tau1, tau2 = rat(tau1), rat(tau2)
    if tau1 == tau2:
        raise InvalidParameter("distinctness needs two different parameters")
    p1 = extension_point(tau1, ytilde)
    p2 = extension_point(tau2, ytilde)
    direct = pairing(p1.xstarstar - p2.xstarstar, p1.xstar - p2.xstar)
    closed = (tau1 - tau2) * (1 / tau1 - 1 / tau2) * pairing(ONES, ytilde)
    if direct != closed:
        raise AssertionError(f"distinctness mismatch: direct {direct} != closed {closed}")
    if direct >= 0:
        raise AssertionError(f"distinctness product must be negative, got {direct}")
    return direct


def fitzpatrick_value(ep: ExtensionPoint, p: GraphPoint) -> Rational:
    """Fitzpatrick evaluation of a graph point against a family point:

        pairing(p.x, ep.xstar) + pairing(ep.xstarstar, p.y) - pairing(p.x, p.y) .

    Constant over the graph, equal to the family point's self-pairing minus
    its closure margin.
    """
    return (
        pairing(p.x, ep.xstar)
        + pairing(ep.xstarstar, p.y)
        - pairing(p.x, p.y)
    )


def fitzpatrick_gap(ep: ExtensionPoint, sample: Sequence[GraphPoint]) -> Rational:
    """Self-pairing of the family point minus the best graph evaluation.

    The per-point evaluations must all coincide; the gap then equals
    pairing(ones, ep.ytilde) > 0.  Strict positivity means the supremum over
    the whole graph stays short of pairing(xstar, xstarstar), which is the
    machine-checkable failure-of-unique-extension certificate.
    """
    if not sample:
        raise EmptySample("need at least one graph point")
    values = [fitzpatrick_value(ep, p) for p in sample]
    if any(v != values[0] for v in values):
        raise AssertionError("Fitzpatrick evaluations must be constant over the graph")
    return pairing(ep.xstar, ep.xstarstar) - max(values)


def violation_witness(x: Seq, y: Seq) -> WitnessVerdict:
    """Constructive graph-membership check for a candidate pair.

    Scans the difference recurrence x_{m+1} - x_m = y_{m+1} + y_m over the
    joint support plus one.  A failure at index m yields the witness
    (-lam * v_m, lam * u_m) with lam chosen so the monotone product against
    the candidate is exactly -1 (the quadratic term cancels because
    pairing(v_m, u_m) = 0).  If the recurrence holds throughout but
    sum(y) != 0, the origin is a witness with product -(sum(y))^2.
    Otherwise x = -G(y) entrywise and the pair is a member of the graph.

    Every returned product is recomputed from the witness sequences, never
    from the closed form alone.
    """
    if x.tail != 0 or y.tail != 0:
        raise NonSummable("candidate pair must have zero tails")
    horizon = max(len(x.prefix), len(y.prefix)) + 1
    for m in range(1, horizon + 1):
        gap = (y.entry(m + 1) + y.entry(m)) - (x.entry(m + 1) - x.entry(m))
        if gap != 0:
            lam = -(pairing(x, y) + 1) / gap
            witness = GraphPoint.from_y(lam * unit_u(m))
            product = pairing(x - witness.x, y - witness.y)
            if product != -1:
                raise AssertionError("witness normalization failed")
            return Violation(witness, product)
    total = total_sum(y)
    if total != 0:
        witness = GraphPoint(ZERO, ZERO)
        product = pairing(x, y)
        if product != -total * total:
            raise AssertionError("origin-witness product mismatch")
        return Violation(witness, product)
    if x != -gossez_apply(y):
        raise AssertionError("membership reconstruction failed")
    return Member()


def random_rational(rng: random.Random, coeff_bound: int) -> Rational:
    """A draw with numerator in [-coeff_bound, coeff_bound] and denominator in [1, coeff_bound]."""
    return Fraction(rng.randint(-coeff_bound, coeff_bound), rng.randint(1, coeff_bound))


def random_summable(rng: random.Random, support_max: int, coeff_bound: int) -> Seq:
    """A random finitely supported sequence with support inside 1..support_max."""
    width = rng.randint(0, support_max)
    return Seq(tuple(random_rational(rng, coeff_bound) for _ in range(width)))


def random_graph_point(
    rng: random.Random, support_max: int = 16, coeff_bound: int = 100
) -> GraphPoint:
    """A deterministic-under-seed draw from the graph.

    Draws a random finitely supported direction, rebalances its last nonzero
    entry so the total vanishes (the exact range constraint), and pairs it
    with its image under -G.
    """
    if support_max < 2:
        raise InvalidParameter(f"support_max must be at least 2, got {support_max}")
    y = random_summable(rng, support_max, coeff_bound)
    total = total_sum(y)
    if total != 0:
        entries = list(y.prefix)
        # canonical form: the last prefix entry is the last nonzero entry
        entries[-1] -= total
        y = Seq(tuple(entries))
    return GraphPoint.from_y(y)


def random_offgraph_pair(
    rng: random.Random, support_max: int = 16, coeff_bound: int = 100
) -> tuple[Seq, Seq]:
    """A graph point perturbed off the graph by a nonzero summable delta.

    Cycles through three perturbation shapes: move the null-sequence side,
    move the summable side, or break the zero-sum constraint while keeping
    the difference recurrence intact (the shape that exercises the
    origin-witness branch).  The graph is a linear subspace, so a fully
    random two-sided delta could land back on it; membership of the result
    is re-checked and the draw repeated in that case.
    """
    while True:
        mode = rng.randrange(3)
        if mode == 2:
            y = random_summable(rng, support_max, coeff_bound)
            total = total_sum(y)
            if total == 0:
                continue
            x = -gossez_apply(y) - total * ONES
        else:
            base = random_graph_point(rng, support_max, coeff_bound)
            delta = random_summable(rng, support_max, coeff_bound)
            if delta == ZERO:
                continue
            if mode == 0:
                x, y = base.x + delta, base.y
            else:
                x, y = base.x, base.y + delta
        if x == -gossez_apply(y):
            continue
        return x, y
