#!/usr/bin/env python3
"""Checking the proved inequalities at desk scale.

Three bound families: the self-centered direct-substitution table for the
accessibility bound k = r - x, the deficit classifier that predicts where
l = 2 runs can succeed, and the dispersion-index sandwich
l(k*-1) <= diam(G) <= l(2k*+1)/(l-1) evaluated with oracle-minimal k*.
"""

import warnings
from fractions import Fraction

from comfnet import (
    cycle_graph,
    hicom,
    path_graph,
    self_centered_direct_substitution,
    two_hc_feasibility,
)
from comfnet.corpus import cycles_corpus, trees_corpus
from comfnet.oracle import bound_sweep

# probing l = 2 is the whole point here; silence the existence warning
warnings.filterwarnings("ignore", message="l=.*not guaranteed")

print("Self-centered direct substitution at l = 3/2:")
print("  diam   d1    x    k = r - x   vs d1")
for diameter in (500, 100, 99, 81, 50, 34, 23, 20):
    row = self_centered_direct_substitution(diameter)
    print(f"  {row.diameter:4d}  {row.d1:4d} {row.x:4d}   {row.k_bound:6d}      "
          f"{row.relation} d1")

print("\nDeficit classifier for l = 2 (b = 2r - diam):")
for name, g in [("P5", path_graph(5)), ("P8", path_graph(8)), ("C12", cycle_graph(12))]:
    pred = two_hc_feasibility(g)
    try:
        hicom(g, 2)
        outcome = "run succeeded"
    except Exception:
        outcome = "run found no team"
    print(f"  {name}: b={pred.b} threshold diam>={pred.threshold} "
          f"predicted_feasible={pred.predicted_feasible} ({pred.case_label}); {outcome}")

print("\nDispersion-index sandwich over small trees and cycles at l = 3/2:")
corpus = trees_corpus(max_n=8) + cycles_corpus(7, 12)
checks, skipped = bound_sweep(corpus, Fraction(3, 2))
held = sum(check.holds for check in checks)
print(f"  {held}/{len(checks)} checks held over {len(corpus)} graphs "
      f"({len(skipped)} infeasible skipped)")
worst_lower = max(
    (c for c in checks if c.name.startswith("l(k*")), key=lambda c: c.lhs / max(c.rhs, 1)
)
print(f"  tightest lower bound: {worst_lower.lhs} <= {worst_lower.rhs} "
      f"on {worst_lower.context}")
