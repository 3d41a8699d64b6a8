"""Build polygons, test the Delzant condition, and compare up to lattice maps.

Every coordinate is an exact rational; nothing here ever touches a float.
"""

from fractions import Fraction

from delzant import (
    Polygon,
    Vec2,
    area,
    detect_subpolygons,
    normalize_translation,
    sl2z_equivalent,
    validate_delzant,
)

# The moment polygon of the projective plane: a half-size right simplex.
triangle = Polygon(((0, 0), (Fraction(1, 2), 0), (0, Fraction(1, 2))))
print("triangle:", triangle)
print("  area:", area(triangle))
print("  Delzant:", validate_delzant(triangle).valid)

# Scaling the legs unevenly breaks the vertex condition.
report = validate_delzant(Polygon(((0, 0), (2, 0), (0, 3))))
print("weighted triangle failures:", report.failures)

# Translates share a canonical form.
shifted = triangle.translate(Vec2(Fraction(7, 3), -2))
print("canonical forms equal:", normalize_translation(shifted) == normalize_translation(triangle))

# A unimodular shear is invisible to the lattice structure.
sheared = triangle.transform(((1, 1), (0, 1)))
matrix, offset = sl2z_equivalent(triangle, sheared)
print("recovered shear:", matrix, "translation:", tuple(offset))

# Subpolygons (edge subsets summing to zero) obstruct reconstruction.
hexagon = Polygon(((1, 0), (2, 0), (2, 1), (1, 2), (0, 2), (0, 1)))
print("hexagon subpolygons:", detect_subpolygons(hexagon).subsets)
