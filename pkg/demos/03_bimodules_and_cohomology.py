"""Thin and thick bimodules, the complexes U_n and V_ab, and their cohomology."""

from oddnh import bimodules as B
from oddnh import homology as H
from oddnh.textfmt import format_partition

c = B.un_complex(3)
print("U_3:")
for lab in c.labels:
    arrows = ", ".join(f"{v:+d} {t}" for t, v in c.out_edges(lab.id))
    print(f"  {lab.id:8s} -> {arrows}")
for comp in H.hypercube_decompose(c):
    print(f"  summand from {comp.initial}: hypercube of dimension {comp.k}")
print("  acyclic:", H.cohomology(c, "Z").is_acyclic())

print("\nV_ab cohomology (partitions in the b x a box):")
for a in range(1, 5):
    for b in range(1, 5):
        res = H.cohomology(B.vab_complex(a, b), "Z")
        classes = sorted({k for g in res.groups for v in g.representatives for k in v})
        print(f"  a={a} b={b}: rank {res.total()}  {' '.join(classes)}")
print("  odd a is acyclic only for odd b: the Euler characteristic [a+b choose a] at q = i is then nonzero.")

rows, cols, M = B.pairing_matrix(2, 2)
print("\ntrace pairing for (2,2):")
print("  " + " ".join(f"{format_partition(m):>6}" for m in cols))
for lam, line in zip(rows, M):
    print(f"  " + " ".join(f"{v:>6}" for v in line), format_partition(lam))

rep = B.natural_generator_differential(1, 2)
print("\nnatural twist, a=1 b=2: model agrees", rep.agree, "| literal rule agrees", rep.literal_agree)
