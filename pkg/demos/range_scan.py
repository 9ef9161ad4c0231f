"""Batch verification over a range, with a live progress stream.

Every n in the range gets the full treatment: odd-part trace, brute-force
orbit, cardinality formula, odd-value agreement, halving count.  Chunks are
merged in ascending order so the summary is identical for any worker count.
"""

import sys

from collatzkit import scan_range
from collatzkit.export import render_scan_summary

print("Scanning [1, 201) ...")
summary = scan_range(1, 201, chunk_size=50, progress=sys.stdout)

print()
print(render_scan_summary(summary), end="")

print()
n, i_min = summary.max_i_min
print(f"Deepest trace in range: n={n} with {i_min + 1} odd parts")
n, card = summary.max_cardinality
print(f"Longest orbit in range: n={n} visiting {card} distinct values")

print("\nSame range, four workers, identical summary:",
      scan_range(1, 201, chunk_size=50, workers=4) == summary)
