"""Elliptic orbit types of (sl(n,R)^2, sl(n,R)) via the c-dual (sl(n,C), sl(n,R))."""
from srep.orbits import elliptic_orbit_types
from srep.pairs import lookup_pair

for n in range(2, 9):
    table = elliptic_orbit_types(lookup_pair("slR2-slR", {"n": n}))
    print(f"n={n}  principal: {table.principal}   types: {len(table)}")

table = elliptic_orbit_types(lookup_pair("slR2-slR", {"n": 3}))
for rec in table:
    print(" ", rec.h_theta, "  Delta_Theta", rec.delta_theta_type, " witnesses", len(rec.witnesses))
