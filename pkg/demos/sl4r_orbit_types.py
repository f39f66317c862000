"""Local orbit types of hyperbolic orbits for (sl(4,R), so(2,2))."""
from srep.liealg import render
from srep.orbits import local_orbit_types
from srep.pairs import parse_selector

spec = parse_selector("sl4R-so22")
table = local_orbit_types(spec)
print(spec.name, "index", spec.index, "rows", len(table.rows))

print(table.to_markdown())

# so(2,0) and so(0,2) are kept apart unless asked otherwise
merged = local_orbit_types(spec, annotated=False)
print("distinct types:", len(table), "merged up to orientation:", len(merged))
for t in merged.types():
    print("  ", render(t, "unicode"))
