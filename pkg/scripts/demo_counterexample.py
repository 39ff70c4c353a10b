#!/usr/bin/env python3
"""Walk through the whole construction with exact printed evidence.

Builds the skew operator's graph, checks maximality constructively on random
perturbations, then produces the family of bidual points that are all
monotone against the graph yet pairwise incompatible, and finishes with the
strict Fitzpatrick gap.  Every number printed is an exact rational.

Run from the repository root:

    PYTHONPATH=src python3 scripts/demo_counterexample.py [--seed N] [--samples N]
"""

from __future__ import annotations

import argparse
import random
from fractions import Fraction

from c0cert.certify import (
    Member,
    Violation,
    closure_margin,
    distinctness,
    extension_point,
    fitzpatrick_gap,
    fitzpatrick_value,
    monotone_product,
    random_graph_point,
    random_offgraph_pair,
    violation_witness,
)
from c0cert.gossez import gossez_apply, t_solve, unit_u, unit_v
from c0cert.seqspace import ONES, pairing, rat_str, unit


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--samples", type=int, default=200)
    parser.add_argument("--taus", default="1/3,1/2,1,2,3", help="comma-separated positive rationals")
    args = parser.parse_args()

    taus = [Fraction(t) for t in args.taus.split(",")]
    ytilde = unit(1)

    print("== the operator ==")
    u1, v1 = unit_u(1), unit_v(1)
    print(f"u1 = {u1}")
    print(f"G(u1) = {gossez_apply(u1)}  (equals v1: {gossez_apply(u1) == v1})")
    print(f"t_solve(-v1) = {t_solve(-v1)}  (recovers u1: {t_solve(-v1) == u1})")

    rng = random.Random(args.seed)
    print(f"\n== monotonicity ({args.samples} random graph pairs) ==")
    products = {
        monotone_product(
            random_graph_point(rng), random_graph_point(rng)
        )
        for _ in range(args.samples)
    }
    print(f"monotone products seen: {sorted(rat_str(p) for p in products)}")

    print(f"\n== constructive maximality ({args.samples} candidates each side) ==")
    members = sum(
        isinstance(violation_witness(p.x, p.y), Member)
        for p in (random_graph_point(rng) for _ in range(args.samples))
    )
    print(f"graph points recognized as members: {members}/{args.samples}")
    worst = None
    for _ in range(args.samples):
        x, y = random_offgraph_pair(rng)
        verdict = violation_witness(x, y)
        assert isinstance(verdict, Violation)
        worst = verdict.product if worst is None else max(worst, verdict.product)
    print(f"perturbed pairs refuted: {args.samples}/{args.samples}, "
          f"worst (closest to zero) product: {rat_str(worst)}")

    print("\n== the extension family ==")
    margin = pairing(ONES, ytilde)
    sample = [random_graph_point(rng) for _ in range(args.samples)]
    for tau in taus:
        ep = extension_point(tau, ytilde)
        margins = {closure_margin(ep, p) for p in sample}
        print(f"tau = {rat_str(tau):>4}:  x** = {ep.xstarstar}  "
              f"margins over sample: {sorted(rat_str(m) for m in margins)}")
    print(f"every margin equals pairing(ones, ytilde) = {rat_str(margin)} > 0")

    print("\n== pairwise incompatibility ==")
    for i, t1 in enumerate(taus):
        for t2 in taus[i + 1 :]:
            value = distinctness(t1, t2, ytilde)
            print(f"  <x**({rat_str(t1)}) - x**({rat_str(t2)}), "
                  f"{rat_str(t1)}*yt - {rat_str(t2)}*yt> = {rat_str(value)} < 0")

    print("\n== Fitzpatrick gap ==")
    for tau in taus:
        ep = extension_point(tau, ytilde)
        value = fitzpatrick_value(ep, sample[0])
        gap = fitzpatrick_gap(ep, sample)
        self_pairing = pairing(ep.xstar, ep.xstarstar)
        print(f"tau = {rat_str(tau):>4}:  sup over graph = {rat_str(value)}  "
              f"<x*, x**> = {rat_str(self_pairing)}  gap = {rat_str(gap)}")
    print("strict positive gap for every tau: no unique extension to the bidual.")


if __name__ == "__main__":
    main()
