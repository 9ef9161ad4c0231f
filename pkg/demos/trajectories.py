"""Classical trajectories: iterate the step map, watch the differences.

The forward difference of a trajectory encodes parity exactly: odd values
rise by 2v + 1, even values fall by v/2.  This script walks a few orbits
and checks that law on every index.
"""

from collatzkit import (check_parity_sign_law, classical_trajectory,
                        total_stopping_time, trajectory_set)
from collatzkit.export import render_classical_table

print("Trajectory of 106, continued past the first 1:\n")
traj = classical_trajectory(106, max_steps=15, stop_at_one=False)
print(render_classical_table(traj))

print("\nFirst 1 appears at index", traj.reached_one_at)
print("Total stopping time of 106:", total_stopping_time(106))
print("Distinct values visited:", sorted(trajectory_set(106), reverse=True))

print("\nParity law on a few starts:")
for n in (27, 97, 106, 871):
    t = classical_trajectory(n)
    report = check_parity_sign_law(t)
    print(f"  n={n}: {len(t.values)} values, {report.checked} indices checked, "
          f"{'clean' if report.ok else report.violations}")

print("\nOdd values rise, even values fall:")
t = classical_trajectory(27)
for k in range(6):
    v, d = t.values[k], t.deltas[k]
    kind = "odd " if v % 2 else "even"
    print(f"  k={k}: {kind} {v:>4} -> delta {d:>5}")
