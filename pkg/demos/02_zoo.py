"""Tour of the polygon zoo: trapezoids, corner chops, random sampling, and
the parallel-pair census.
"""

from fractions import Fraction

from delzant import (
    ChopSpec,
    chop,
    hirzebruch,
    parallel_pair_census,
    parallel_pair_count,
    random_delzant,
    validate_delzant,
)

# Every Delzant polygon with five or more edges is, up to a lattice map,
# a chopped trapezoid, so these two constructors generate the whole zoo.
trap = hirzebruch(2, 1, 1)
print("hirzebruch(2,1,1):", trap.vertices, "pairs:", parallel_pair_count(trap))

pent = chop(trap, ChopSpec(0, Fraction(1, 3)))
print("after one chop:", pent.edge_count, "edges, still Delzant:", validate_delzant(pent).valid)
new_edge = min(pent.edges, key=lambda e: e.lattice_length)
print("new edge: length", new_edge.lattice_length, "normal", tuple(new_edge.normal))
print("area drop:", trap.area - pent.area, "= depth^2 / 2")

# Seeded sampling is deterministic.
p = random_delzant(7, seed=42, param_bound=4)
print("random 7-gon:", [tuple(v) for v in p.vertices])
print("same seed, same polygon:", p == random_delzant(7, seed=42, param_bound=4))

# How often do bounded-parameter polygons stay reconstructible (<= 3 pairs)?
for d in (5, 6, 8):
    census = parallel_pair_census(d, 3)
    good = sum(v for k, v in census.histogram.items() if k <= 3)
    print(f"d={d}: histogram {census.histogram}, fraction with <=3 pairs "
          f"{good}/{census.total}")
