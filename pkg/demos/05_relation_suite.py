"""Machine verification of the Chevalley relations over a quiver.

Every report is a list of exact checks; a single failing equality fails the
report.  The exponent dictionary at the end replays the defining relations of
the quantized enveloping algebra through the generator labels.
"""

from cyclotome import build_index, orient, verify_all, verify_ef, verify_serre
from cyclotome.relations import chevalley_generators

idx = build_index(orient("A2", "linear"))

print("generator dictionary:")
for name, pair in sorted(chevalley_generators(idx).items()):
    print(f"  {name:4s} -> L{pair.pretty(idx)}")

print("\nthe EF identity at i = 1, spelled out:")
rep = verify_ef(idx, 1, 1)
for check in rep.checks:
    print(f"  [{'ok' if check.passed else 'XX'}] {check.name}: {check.computed!r}")

print("\nquantum Serre at (1,2):")
rep = verify_serre(idx, 1, 2)
for check in rep.checks:
    print(f"  [{'ok' if check.passed else 'XX'}] {check.name} = {check.computed!r}")

print("\nfull suite:")
reports = verify_all(idx)
for r in reports:
    print(f"  {'pass' if r.passed else 'FAIL':4s} {r.relation}{r.args} ({len(r.checks)} checks)")
print(f"\noverall: {'pass' if all(r.passed for r in reports) else 'FAIL'}")
