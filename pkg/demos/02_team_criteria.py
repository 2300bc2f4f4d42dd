#!/usr/bin/env python3
"""What makes a vertex subset a team worth having.

A good team is connected (members can talk), dominates the rest of the
network within a small distance (it can serve everyone), and is less
dispersive (every member sees a strictly smaller world inside the team
than in the whole network). Tightening the induced diameter gives the
better-comfortable level, and capping the domination distance by that
diameter gives the highly-comfortable level.
"""

from fractions import Fraction

from comfnet import (
    check_hc,
    cycle_graph,
    domination_radius,
    is_less_dispersive,
    parse_edge_list,
)

p6 = parse_edge_list("6 5\n0 1\n1 2\n2 3\n3 4\n4 5")
c6 = cycle_graph(6)


def show(g, members, l):
    report = check_hc(g, members, l)
    names = [g.labels[v] for v in sorted(members)]
    print(f"  team {names} at l={l}:")
    print(f"    connected={report.is_connected} "
          f"domination_radius={report.domination_radius} "
          f"induced_diameter={report.induced_diameter} "
          f"(target <= {report.bc_target})")
    if report.violators:
        print(f"    violators (kept their whole-graph eccentricity): "
              f"{[g.labels[v] for v in report.violators]}")
    print(f"    verdict: {report.verdict}")


print("On the 6-path, the four interior vertices form a comfortable team:")
ok, _ = is_less_dispersive(p6, {1, 2, 3, 4})
print(f"  less dispersive: {ok}, domination radius: "
      f"{domination_radius(p6, {1, 2, 3, 4})}")
show(p6, {1, 2, 3, 4}, Fraction(5, 3))

print("\nOn the 6-cycle, a four-vertex arc fails: the arc's endpoints keep")
print("their whole-graph eccentricity, so nothing improved for them.")
show(c6, {0, 1, 2, 3}, 2)

print("\nA three-vertex arc works, at the price of domination distance two:")
show(c6, {0, 1, 2}, 2)

print("\nThe same arc is also highly comfortable at l = 3/2, since its")
print("domination radius 2 does not exceed its induced diameter 2:")
show(c6, {0, 1, 2}, Fraction(3, 2))
