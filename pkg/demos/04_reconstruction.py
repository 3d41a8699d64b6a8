"""From hearable data back to the polygon: the finite ambiguity in action.

Triangles come back in exactly two mirror copies; a square collapses to a
single candidate; three parallel pairs add an area quadratic whose second
root can produce a genuinely different polygon with the same data.
"""

from fractions import Fraction

from delzant import (
    ChopSpec,
    Polygon,
    chop,
    enumerate_candidates,
    is_generic,
    perturb_generic,
    solve_three_pair_parameter,
    spectral_data,
    three_pair_family,
)

for label, polygon in (
    ("triangle", Polygon(((0, 0), (1, 0), (0, 1)))),
    ("unit square", Polygon(((0, 0), (1, 0), (1, 1), (0, 1)))),
):
    candidates = enumerate_candidates(spectral_data(polygon))
    print(f"{label}: {len(candidates)} candidate(s)")
    for c in candidates:
        print("   ", [tuple(v) for v in c.vertices])

# Three parallel pairs: chop opposite corners of a rectangle unevenly.
base = Polygon(((0, 0), (5, 0), (5, 4), (0, 4)))
hexagon = chop(chop(base, ChopSpec(0, Fraction(1))), ChopSpec(3, Fraction(2)))
family = three_pair_family(hexagon)
coeff_a, coeff_b = family.area_coefficients
print(f"\nthree-pair hexagon: area along the family is {family.base_area} "
      f"+ ({coeff_a})t + ({coeff_b})t^2")
roots = solve_three_pair_parameter(family, hexagon.area)
print("area-preserving parameters:", [str(t) for t in roots])
for t in roots:
    other = family.polygon_at(t)
    print(f"  t={t}: vertices {[tuple(v) for v in other.vertices]}")
candidates = enumerate_candidates(spectral_data(hexagon))
print("full candidate set size:", len(candidates))

# A non-generic polygon gets nudged until its data pins it down again.
lumpy = Polygon(((1, 0), (2, 0), (2, 1), (1, 2), (0, 2), (0, 1)))
print("\nhexagon with subpolygons generic?", bool(is_generic(lumpy)))
fixed = perturb_generic(lumpy)
print("after perturbation:", bool(is_generic(fixed)),
      "candidates:", len(enumerate_candidates(spectral_data(fixed))))
