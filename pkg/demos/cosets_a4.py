"""Coset representatives of W(A4) modulo W(A1 x A2), checked by brute force."""
from srep.cosets import brute_force_partition, coset_reps, embed_subsystem, verify_complete_system
from srep.rootsys import build_root_system, format_root, standard_simple_system

amb = build_root_system("A", 4)
sub = embed_subsystem(amb, "A1xA2")
cs = coset_reps(amb, sub)

# each representative w moves the simple system; print w.Psi
psi = standard_simple_system(amb)
for w, label in zip(cs.reps, cs.labels):
    print(f"{label:>14}  ", ", ".join(format_root(w(a)) for a in psi))

# the oracle generates all 120 elements and the 12-element subgroup
report = verify_complete_system(cs)
print("\ncount", report.count, "index", report.index, "ok", report.ok)
print("classes in the brute-force partition:", len(brute_force_partition(amb, sub)))
