"""Functional graphs as DOT, for rendering with graphviz.

The classical map draws one edge n -> C(n) per node; the accelerated map
only keeps odd nodes, wiring y to the odd part of C(y), which collapses
every halving chain and leaves a much sparser picture.

    python demos/graphs.py
    dot -Tpng -O collatz_classical.gv
    dot -Tpng -O collatz_odd.gv
"""

from collatzkit.export import collatz_graph_dot

LIMIT = 50

classical = collatz_graph_dot(LIMIT, kind="classical")
accelerated = collatz_graph_dot(LIMIT, kind="accelerated")

with open("collatz_classical.gv", "w") as fh:
    fh.write(classical)
with open("collatz_odd.gv", "w") as fh:
    fh.write(accelerated)

print(f"Wrote collatz_classical.gv ({classical.count(';')} edges, nodes 1..{LIMIT})")
print(f"Wrote collatz_odd.gv ({accelerated.count(';')} edges, odd nodes only)")

print("\nA taste of each:")
print("\n".join(classical.splitlines()[:6]) + "\n  ...")
print("\n".join(accelerated.splitlines()[:6]) + "\n  ...")
