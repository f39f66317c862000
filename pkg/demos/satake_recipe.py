"""HPIS of (su(2p,2(n-p)), sp(p,n-p)) from its Satake triple."""
from srep.liealg import parse
from srep.pairs import lookup_pair
from srep.satake import recipe_trace, serialize_triple, triple_for

n, p = 6, 2
triple = triple_for("su2p2np-sppq", n=n, p=p)
print(serialize_triple(triple))

trace = recipe_trace(triple)
for c in trace.to_dict()["components"]:
    print(c["case"], c["component"], c["type"], "->", c["h_part"])
print("z_h =", trace.z_h)

# compare with the catalog row
print("catalog:", lookup_pair("su2p2np-sppq", {"n": n, "p": p}).hpis_expr)
assert trace.z_h == parse(f"sl(2,C)^{p} + sp({n - 2 * p})")

# (sl(n,C), sl(n,R)) has no black nodes: z_h is all centre
for m in range(2, 9):
    print(m, recipe_trace(triple_for("slC-slR", n=m)).z_h)
