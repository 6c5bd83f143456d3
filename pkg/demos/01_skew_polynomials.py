"""Skew polynomials: anticommuting variables, the differential d(x_i) = x_i^2, odd divided differences."""

from oddnh import oddsym as S
from oddnh.skewpoly import SkewPoly
from oddnh.textfmt import format_combination, format_partition, format_poly, parse_poly

f = parse_poly("x2*x1")
print("x2*x1 normalizes to", format_poly(f))

g = parse_poly("x1*x2 + 3*x3^2", 3)
print("d(g)   =", format_poly(g.d()))
print("d(d(g)) =", format_poly(g.d().d()))

h = SkewPoly.var(1, 2) * SkewPoly.var(1, 2)
print("divided difference of x1^2:", format_poly(h.dd(1)))

# the differential preserves odd symmetric polynomials and acts on Schur classes by box contents
for lam in [(1,), (2,), (2, 1), (2, 2)]:
    n = sum(lam) + 1
    print(f"d(s_{format_partition(lam)}) =", format_combination(S.schur_differential(lam, n)) or "0")
