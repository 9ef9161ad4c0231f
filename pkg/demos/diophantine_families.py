"""Linear Diophantine machinery behind the odd-part trace.

Applying the step map to an odd y solves x - 3y = 1; to an even y it solves
2x - y = 0.  The whole odd-part trace therefore lives inside one solution
family anchored at its first transition, with eta_i = y_0 - y_i selecting
row i.  The fixed point (4, 1) sits in that family no matter the start.
"""

from collatzkit import (accelerated_trace, solve_linear_diophantine,
                        verify_collatz_solvability)

print("x - 3y = 1, the odd-step equation:")
sol = solve_linear_diophantine(1, -3, 1)
print("  gcd:", sol.gcd)
print("  particular:", sol.particular, "step:", sol.step)
print("  points eta=-2..2:", [sol.point(e) for e in range(-2, 3)])
print("  (4, 1) is the point at eta =", (4 - sol.particular[0]) // sol.step[0])

print("\n2x - y = 0, the even-step equation:")
sol = solve_linear_diophantine(2, -1, 0)
print("  particular:", sol.particular, "step:", sol.step)

print("\nNo solution when the gcd does not divide c:")
print("  2x + 4y = 3 ->", solve_linear_diophantine(2, 4, 3))

print("\nEvery trace row of 3200 sits in the family anchored at (x_1, y_0):")
trace = accelerated_trace(3200)
x1, y0 = trace.rows[1].x, trace.rows[0].y
for row in trace.rows[1:]:
    eta_prev = trace.rows[row.w - 1].eta
    print(f"  x_{row.w} = {x1} - 3*({eta_prev}) = {x1 - 3 * eta_prev} = {row.x}")

print("\nSolvability audits:")
for y0 in (25, 106, 1, 27):
    report = verify_collatz_solvability(y0)
    print(f"  y0={y0}: {report.checked} checks, {'clean' if report.ok else report.violations}")
