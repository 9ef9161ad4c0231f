"""The accelerated iteration: odd part to odd part, no explicit halvings.

Each row applies the step map to the previous odd part and strips the whole
power of 2 in one move; the u column remembers how many halvings were
skipped.  The trace stops when consecutive lookahead points coincide, which
only happens at the fixed point (4, 1).  The row count plus the u column
recovers, exactly, how many distinct values the classical orbit visits.
"""

from collatzkit import (accelerated_trace, cardinality_formula, cross_check,
                        total_stopping_time)
from collatzkit.export import render_accelerated_table

print("Odd-part trace of 3200:\n")
trace = accelerated_trace(3200)
print(render_accelerated_table(trace))

print("\nFirst odd part equal to 1 at row:", trace.i_min)
print("Halvings skipped along the way:", sum(r.u for r in trace.rows[: trace.i_min + 1]))
card = cardinality_formula(trace)
print("Cardinality formula:", card)
print("Brute-force stopping time + 1:", total_stopping_time(3200) + 1)

print("\nCross-checks (formula vs brute force vs set size):")
for n in (1, 27, 106, 3200, 2**20, 3**40):
    res = cross_check(n)
    label = str(n) if n < 10**9 else f"~{n.bit_length()}-bit"
    print(f"  n={label:>10}: i_min={res.i_min:>4}  cardinality={res.cardinality:>5}  "
          f"stopping={res.stopping_time:>5}  {'ok' if res.ok else res.violations}")

print("\nThe trace is much shorter than the orbit it summarizes:")
for n in (97, 3200, 77031):
    t = accelerated_trace(n)
    print(f"  n={n}: {len(t.rows)} rows against {total_stopping_time(n) + 1} orbit values")
