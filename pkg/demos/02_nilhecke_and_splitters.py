"""The odd nilHecke algebra as a dg algebra: PBW products, the idempotent e_n and thick splitters."""

from oddnh import onh as O
from oddnh.skewpoly import SkewPoly, delta
from oddnh.textfmt import format_onh, format_poly, parse_onh

xi = parse_onh("d[2,1]*x1")
print("d_1 x_1 in PBW form:", format_onh(xi))

for n in range(1, 5):
    w0 = O.ONHElement.longest(n)
    e = O.idempotent(n)
    print(f"n={n}: d_w0(x^delta) = {format_poly(w0.act(SkewPoly.monomial(delta(n))))},",
          f"e_n^2 == e_n: {e * e == e},  d(e_n) has {len(e.d().terms)} PBW terms")
print("d(e_2) =", format_onh(O.idempotent(2).d()))

for name, ok in O.operator_relations(3).items():
    print(f"  {'ok ' if ok else 'BAD'} {name}")

print("d(up splitter (1,2)) =", format_onh(O.splitter_differential("up", 1, 2)))
w = O.acyclicity_witness(3)
print("a contracting element for n=3:", format_onh(w), "with d =", format_onh(w.d()))
