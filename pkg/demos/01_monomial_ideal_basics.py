"""A tour of exact monomial-ideal arithmetic.

Everything in fiberlab is built from one currency: monomial ideals held as
their unique minimal generating sets.  This script walks through the basic
algebra (sums, products, powers, intersections, colons) and the canonical
printing order.
"""

from fiberlab import MonomialIdeal, Ring, maxideal_power, parse_monomial, star_derivative

ring = Ring("R", ("x", "y", "z"))


def ideal(*texts):
    return MonomialIdeal.from_monomials([parse_monomial(ring, t) for t in texts])


print("== construction and minimalization ==")
raw = ideal("x^2", "x^2*y", "x*y")  # x^2*y is redundant
print("minimal generators of (x^2, x^2*y, x*y):", raw)

print("\n== sums, products, powers ==")
mm = maxideal_power(ring, None, 1)
print("m       =", mm)
print("m^2     =", mm * mm)
print("m^3     =", mm ** 3)
print("(x)+(y) =", ideal("x") + ideal("y"))

print("\n== intersections and colons ==")
a = ideal("x^2", "x*y")
print("(x) & (y)        =", ideal("x") & ideal("y"))
print("(x^2,xy) & (y^2) =", a & ideal("y^2"))
print("(x^2,xy) : x     =", a.colon(parse_monomial(ring, "x")))

print("\n== membership and containment ==")
print("x in (x^2)?      ", ideal("x^2").member(parse_monomial(ring, "x")))
print("x^3 in (x^2)?    ", ideal("x^2").member(parse_monomial(ring, "x^3")))
print("(x^2) <= (x)?    ", ideal("x").contains(ideal("x^2")))

print("\n== the square-free derivative ==")
# divide each generator by each variable in its support
print("dstar((x^2*y))   =", star_derivative(ideal("x^2*y")))

print("\n== degree data ==")
mixed = ideal("x^2", "y^3")
print("t0 =", mixed.t0(), " indeg =", mixed.indeg(), " equigenerated =", mixed.is_equigenerated())
