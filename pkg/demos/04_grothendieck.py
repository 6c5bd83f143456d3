"""Decategorification: graded ranks evaluated at q = sqrt(-1) reproduce U+ structure constants."""

from oddnh import grothendieck as G

for m in range(1, 6):
    print(f"[{m}]_q = {G.qint(m)}  ->  {G.qint(m).eval_i()}")
print("[4 choose 2] =", G.qbinom(4, 2), "->", G.qbinom(4, 2).eval_i())
print("E^(2) E^(2) =", G.uplus_mul(G.UPlus.E(2), G.UPlus.E(2)))
print("r(E^(2)) =", G.uplus_comul(2))
print("bialgebra check through degree 6:", G.bialgebra_check(6).passed)

rep = G.k0_symbols(4)
for r in rep["products"]:
    if r["a"] and r["b"]:
        print(f"  E^({r['a']})E^({r['b']}): rank {r['rank']} -> {r['at_i']}")
for r in rep["euler"]:
    print(f"  chi(U_{r['n']}) = {r['at_i']}")
