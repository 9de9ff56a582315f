"""Multigraded Betti numbers, two independent ways.

The lattice engine computes reduced homology of upper Koszul complexes at
the join-closure of the generator degrees.  The Koszul engine tensors the
ideal with the Koszul complex on all ring variables and takes homology of
total-degree strands.  They must agree; regularity, projective dimension,
and depth then fall out of the coarse table.
"""

from fiberlab import (
    Ring,
    betti_table,
    invariants_of,
    lcm_lattice,
    maxideal_power,
    tor_dimensions,
    upper_koszul,
)
from fiberlab.ideals import MonomialIdeal
from fiberlab.core import parse_monomial

ring = Ring("R", ("x", "y", "z"))
mm = maxideal_power(ring, None, 1)

print("== the Koszul baseline: the maximal ideal of k[x,y,z] ==")
table = betti_table(mm, 0)
print("coarse table:", table.coarse())
print("reg:", table.regularity())

print("\n== the lcm lattice drives the computation ==")
taylor = MonomialIdeal.from_monomials(
    [parse_monomial(ring, "x^2"), parse_monomial(ring, "x*y")]
)
print("lattice points of (x^2, xy):", lcm_lattice(taylor).points)
print("multigraded table:", betti_table(taylor, 0).multigraded())

print("\n== what the engine sees at one multidegree ==")
cx = upper_koszul(MonomialIdeal.from_monomials(
    [parse_monomial(ring, "x"), parse_monomial(ring, "y")]), (1, 1, 0))
print("faces at b = xy for (x, y):", cx.face_sets(), " (a 0-sphere: one first syzygy)")

print("\n== the independent Koszul-strand engine agrees ==")
print("strand dimensions:", tor_dimensions(taylor, 0).table())
print("lattice engine:   ", betti_table(taylor, 0).coarse())

print("\n== derived invariants ==")
H = MonomialIdeal.from_exponents(
    Ring("Q", ("a", "b", "c", "d")), [(2, 0, 0, 0), (0, 2, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2)]
)
inv = invariants_of(H, 0)
print(f"four squares: reg={inv.reg} pdim={inv.pdim} depth={inv.depth}")

print("\n== characteristic matters in general ==")
print("(here it does not; see tests for a projective-plane ideal where it does)")
print("char 0:    ", betti_table(H, 0).coarse())
print("char 32003:", betti_table(H, 32003).coarse())
