"""
Budgeted orienteering, end to end
=================================

Visit as many points as possible on a length budget, starting from a fixed
root.  The driver reduces the problem to multi-path queries over "skeleton"
tuples: candidate waypoint sequences whose segments are solved jointly.  At
desk scale the answer is provably within the (1 - delta) guarantee of the
true optimum, which we confirm by exhaustive search across a sweep of
budgets; the final instance is also written to disk, re-verified, and drawn.
"""

import math

import numpy as np

from orienteer import PointSet, solve_orienteering
from orienteer.io import Instance, Solution, dumps
from orienteer.oracle import brute_orienteering
from orienteer.orienteering import OrienteeringInstance
from orienteer.render import render_svg
from orienteer.verify import verify_solution

rng = np.random.default_rng(5)
n = 8
pts = PointSet(rng.random((n, 2)))
root = 0
delta = 0.34

print(f"{n} points, root {root}, delta {delta} -> guarantee: at least "
      f"ceil({1-delta:.2f} * k_opt) visits within budget\n")
print(f"{'budget':>7} {'k_opt':>6} {'visited':>8} {'length':>9}  route")

for budget in (0.0, 0.4, 0.8, 1.2, 1.6, 2.0, 2.6):
    k_opt, _ = brute_orienteering(pts, root, budget)
    sol = solve_orienteering(OrienteeringInstance(pts, root, budget, delta))
    assert sol.length <= budget + 1e-9
    assert sol.visited >= math.ceil((1 - delta) * k_opt)
    route = "-".join(str(v) for v in sol.path.visits)
    print(f"{budget:>7.2f} {k_opt:>6} {sol.visited:>8} {sol.length:>9.4f}  {route}")

# Persist the last instance/solution pair, verify it independently, draw it.
inst = Instance(
    kind="orienteering",
    points=[[float(a), float(b)] for a, b in pts.coords],
    delta=delta,
    root=root,
    budget=2.6,
).validate()
solution = Solution(
    kind="orienteering",
    length=sol.length,
    visited=sol.visited,
    visits=list(sol.path.visits),
    config={"delta": delta},
)
report = verify_solution(inst, solution, oracle_check=True)
print(f"\nindependent verification: {'PASS' if report.passed else 'FAIL'}")
for check in report.checks:
    print(f"  {check['check']:<24} {'ok' if check['ok'] else 'FAILED'}")

with open("orienteering_demo.json", "w") as fh:
    fh.write(dumps(solution))
with open("orienteering_demo.svg", "w") as fh:
    fh.write(render_svg(inst, solution))
print("\nwrote orienteering_demo.json and orienteering_demo.svg")
