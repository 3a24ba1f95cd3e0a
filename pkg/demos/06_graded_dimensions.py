"""Graded dimensions of the quantum Serre quotient, checked against Kostant.

The degree-beta slice of the two-sided Serre ideal is a matrix over Z[t];
its rank over the fraction field is computed fraction-free (specializing t
could silently drop rank).  The quotient dimension must equal the number of
Kostant partitions of beta in every degree.
"""

from cyclotome import build_index, kostant_multisets, kostant_partitions, orient, serre_quotient_dims

q = orient("A2", "linear")
idx = build_index(q)

print("A2, total degree <= 4:")
dims = serre_quotient_dims(q, 4)
print(f"  {'degree':>10s} {'quotient':>9s} {'kostant':>8s}")
for beta in sorted(dims):
    print(f"  {str(beta):>10s} {dims[beta]:>9d} {kostant_partitions(idx, beta):>8d}")

print("\nthe two Kostant partitions of 2a1 + a2:")
for multiset in kostant_multisets(idx, (2, 1)):
    print("  ", " + ".join(str(r) for r in multiset))

print("\nA3, total degree <= 3 (orientation-independent):")
q3 = orient("A3", "alternating")
idx3 = build_index(q3)
dims3 = serre_quotient_dims(q3, 3)
mismatches = [b for b, d in dims3.items() if d != kostant_partitions(idx3, b)]
print(f"  {len(dims3)} degrees checked, {len(mismatches)} mismatches")
