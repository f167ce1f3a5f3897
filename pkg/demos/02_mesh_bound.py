#!/usr/bin/env python3
"""The analytic elasticity bound of the full mesh.

Three views of the same quantity:
  * the discrete trapezoid formula,
  * its continuous-integration counterpart (limit 1/3),
  * a full attack simulation on an actual complete graph.

The discrete and continuous forms converge within ~1/(6n) of each other,
so the closed forms can stand in for simulation at any scale.
"""

import netelast as ne

print("full-removal elasticity of the n-node mesh")
print(f"{'n':>5s} {'discrete':>10s} {'continuous':>11s} {'gap':>9s} {'simulated':>10s}")
for n in (2, 3, 5, 10, 20, 50):
    disc = ne.mesh_elasticity_discrete(n, n)
    cont = ne.mesh_elasticity_continuous(n)
    sim = ne.elasticity(ne.gen_mesh(n), ne.AttackStrategy("random", seed=7)).elasticity
    print(f"{n:5d} {disc:10.6f} {cont:11.6f} {abs(disc - cont):9.2e} {sim:10.6f}")

for n in (10**3, 10**6, 10**9):
    print(f"{n:>9d} nodes: continuous bound = {ne.mesh_elasticity_continuous(n):.9f}")
print("limit: 1/3")

print()
print("partial removal, n = 20 (both forms track from the first removals):")
print(f"{'removed':>8s} {'discrete':>10s} {'continuous':>11s}")
for zeta in (1, 2, 5, 10, 15, 20):
    print(f"{zeta:8d} {ne.mesh_elasticity_discrete(20, zeta):10.6f} "
          f"{ne.mesh_elasticity_continuous(20, zeta):11.6f}")
