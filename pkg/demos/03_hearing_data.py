"""What the spectrum determines about a polygon.

The equivariant spectrum singles out torus directions normal to an edge:
their fixed loci jump in dimension, and the leading heat-trace coefficient
carries the edge volume.  The real locus adds the vertex count through its
Euler characteristic.
"""

import math

from delzant import (
    Vec2,
    donnelly_leading_term,
    euler_characteristic,
    evaluate_leading_coefficient,
    fixed_point_strata,
    hirzebruch,
    spectral_data,
    vertex_count,
)

polygon = hirzebruch(1, 1, 1)
data = spectral_data(polygon)
print("hearable data of hirzebruch(1,1,1):")
print("  vertices:", data.vertex_count)
for c in data.classes:
    print(f"  normal class {tuple(c.normal)}: length sum {c.length_sum}, edges {c.edge_count}")
print("  area:", data.area)

print("\nfixed loci by direction:")
for theta in (Vec2(0, 0), Vec2(1, 0), Vec2(1, 2)):
    strata = fixed_point_strata(polygon, theta)
    print(f"  theta={tuple(theta)}:", [(s.kind, s.index) for s in strata])

print("\nleading heat terms for theta=(1,0):")
for term in donnelly_leading_term(polygon, Vec2(1, 0)):
    if term.codimension == 1:
        value = evaluate_leading_coefficient(term, math.pi)
        print(
            f"  edge {term.stratum.index}: t^{term.t_exponent}, "
            f"volume 2*pi * {term.lattice_volume} * |{tuple(term.direction)}|, "
            f"at s=pi: {value:.6f}"
        )

chi = euler_characteristic(polygon.edge_count)
print("\nreal locus Euler characteristic:", chi, "-> vertex count", vertex_count(chi))
