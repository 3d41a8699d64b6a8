"""Exact lattice-polygon core.

Convex rational polygons with derived lattice data (primitive edge
directions, lattice lengths, primitive outward normals), the Delzant
vertex condition, exact area, canonical translation forms, unimodular
equivalence, and subpolygon detection.  Everything here is pure exact
arithmetic; no floats.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import BudgetExceededError, StructuralPolygonError
from .vectors import Vec2, as_scalar, lattice_multiple, primitive_part

# Integer 2x2 matrices travel as ((a, b), (c, d)), acting as rows on columns.
IntMatrix = tuple[tuple[int, int], tuple[int, int]]


def primitive_outward_normal(edge_vector: Vec2) -> Vec2:
    """Primitive integer normal of a CCW-traversed edge, pointing outward.

    Convention: for edge vector (a, b) the outward side is (b, -a); e.g. the
    bottom edge (1, 0) of a CCW square has normal (0, -1).
    """
    if edge_vector.is_zero():
        raise StructuralPolygonError("zero edge vector has no outward normal")
    return primitive_part(edge_vector.perp_cw())


class Edge(NamedTuple):
    """One polygon edge together with its derived lattice data."""

    vector: Vec2          # endpoint minus start point
    direction: Vec2       # primitive integer vector along the edge
    lattice_length: Fraction
    normal: Vec2          # primitive integer outward normal


class VertexCheck(NamedTuple):
    vertex_index: int
    determinant: int


class ValidationReport(NamedTuple):
    """Outcome of the Delzant vertex test; ``failures`` lists bad vertices."""

    valid: bool
    failures: tuple[VertexCheck, ...]

    def __bool__(self) -> bool:
        return self.valid


class SubpolygonReport(NamedTuple):
    """Proper edge subsets (size >= 3, complement >= 3) summing to zero."""

    subsets: tuple[tuple[int, ...], ...]

    def __bool__(self) -> bool:
        return bool(self.subsets)


class Polygon:
    """A strictly convex polygon with exact rational vertices, stored CCW.

    The constructor accepts vertices in either orientation (clockwise input
    is reversed) and raises :class:`StructuralPolygonError` for anything
    that is not a strictly convex polygon: fewer than three vertices,
    repeated vertices, collinear triples, or a non-convex chain.
    """

    __slots__ = ("vertices", "edges", "_area")

    def __init__(self, vertices: Iterable[Sequence]):
        pts = [Vec2(as_scalar(v[0]), as_scalar(v[1])) for v in vertices]
        if len(pts) < 3:
            raise StructuralPolygonError("a polygon needs at least 3 vertices")
        d = len(pts)
        vecs = [pts[(i + 1) % d] - pts[i] for i in range(d)]
        for i, vec in enumerate(vecs):
            if vec.is_zero():
                raise StructuralPolygonError(f"repeated vertex at index {i}")
        crosses = [vecs[i].cross(vecs[(i + 1) % d]) for i in range(d)]
        if all(c < 0 for c in crosses):
            pts.reverse()
            vecs = [pts[(i + 1) % d] - pts[i] for i in range(d)]
            crosses = [vecs[i].cross(vecs[(i + 1) % d]) for i in range(d)]
        if any(c == 0 for c in crosses):
            bad = crosses.index(0)
            raise StructuralPolygonError(f"collinear edges around vertex {(bad + 1) % d}")
        if any(c < 0 for c in crosses):
            raise StructuralPolygonError("vertices do not bound a convex polygon")
        self.vertices: tuple[Vec2, ...] = tuple(pts)
        edges = []
        for vec in vecs:
            direction = primitive_part(vec)
            edges.append(
                Edge(
                    vector=vec,
                    direction=direction,
                    lattice_length=lattice_multiple(vec, direction),
                    normal=direction.perp_cw(),
                )
            )
        self.edges: tuple[Edge, ...] = tuple(edges)
        self._area: Fraction | None = None

    @property
    def edge_count(self) -> int:
        return len(self.vertices)

    @property
    def area(self) -> Fraction:
        if self._area is None:
            verts = self.vertices
            total = sum(
                (verts[i].cross(verts[(i + 1) % len(verts)]) for i in range(len(verts))),
                start=Fraction(0),
            )
            self._area = Fraction(total) / 2
        return self._area

    def translate(self, offset: Vec2) -> "Polygon":
        return Polygon(tuple(v + offset for v in self.vertices))

    def __neg__(self) -> "Polygon":
        # Point reflection; preserves orientation, so no reversal happens.
        return Polygon(tuple(-v for v in self.vertices))

    def transform(self, matrix: IntMatrix) -> "Polygon":
        (a, b), (c, d) = matrix
        return Polygon(tuple(Vec2(a * v.x + b * v.y, c * v.x + d * v.y) for v in self.vertices))

    def canonical(self) -> "Polygon":
        """Translate the lex-min vertex to the origin and start the list there.

        Two polygons are translates of each other iff their canonical forms
        compare equal; the map is idempotent.
        """
        anchor = min(self.vertices)
        idx = self.vertices.index(anchor)
        rotated = self.vertices[idx:] + self.vertices[:idx]
        return Polygon(tuple(v - anchor for v in rotated))

    def canonical_key(self) -> tuple:
        return tuple(self.canonical().vertices)

    def support(self, direction: Vec2) -> Fraction:
        """Maximum of x . direction over the polygon (attained at a vertex)."""
        return max(Fraction(v.dot(direction)) for v in self.vertices)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polygon) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        coords = ", ".join(f"({v.x}, {v.y})" for v in self.vertices)
        return f"Polygon[{coords}]"


def area(polygon: Polygon) -> Fraction:
    """Exact shoelace area (always positive)."""
    return polygon.area


def normalize_translation(polygon: Polygon) -> Polygon:
    """Canonical representative of the polygon's translation class."""
    return polygon.canonical()


def validate_delzant(polygon: Polygon) -> ValidationReport:
    """Check the vertex condition: adjacent primitive edge directions must
    have determinant 1 (equivalently the adjacent normals form a Z^2 basis).

    Structural problems (non-convexity etc.) surface earlier, when the
    Polygon itself is constructed.
    """
    d = polygon.edge_count
    failures = []
    for i in range(d):
        incoming = polygon.edges[(i - 1) % d].direction
        outgoing = polygon.edges[i].direction
        det = int(incoming.cross(outgoing))
        if det != 1:
            failures.append(VertexCheck(vertex_index=i, determinant=det))
    return ValidationReport(valid=not failures, failures=tuple(failures))


def sl2z_equivalent(p: Polygon, q: Polygon) -> Optional[tuple]:
    """Search for A in SL(2, Z) and a translation v with A.p + v == q.

    Candidate matrices are read off by mapping an adjacent pair of primitive
    edge directions of ``p`` onto each adjacent pair of ``q``; Delzant
    validity of ``p`` guarantees every candidate is integral with det 1.
    Returns ``(matrix, translation)`` or ``None``.
    """
    d = p.edge_count
    if d != q.edge_count:
        return None
    pd = [e.direction for e in p.edges]
    qd = [e.direction for e in q.edges]
    det_p = int(pd[0].cross(pd[1]))
    if det_p == 0:
        raise StructuralPolygonError("degenerate edge pair")
    q_key = q.canonical_key()
    q_anchor = min(q.vertices)
    for j in range(d):
        f1, f2 = qd[j], qd[(j + 1) % d]
        # A = F . D^{-1} with D, F the column matrices of the direction pairs.
        inv = ((pd[1].y, -pd[1].x), (-pd[0].y, pd[0].x))  # D^{-1} * det_p
        a11 = f1.x * inv[0][0] + f2.x * inv[1][0]
        a12 = f1.x * inv[0][1] + f2.x * inv[1][1]
        a21 = f1.y * inv[0][0] + f2.y * inv[1][0]
        a22 = f1.y * inv[0][1] + f2.y * inv[1][1]
        if det_p != 1:
            if any(v % det_p for v in (a11, a12, a21, a22)):
                continue
            a11, a12, a21, a22 = (v // det_p for v in (a11, a12, a21, a22))
        matrix = ((int(a11), int(a12)), (int(a21), int(a22)))
        if matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0] != 1:
            continue
        image = p.transform(matrix)
        if image.canonical_key() == q_key:
            translation = q_anchor - min(image.vertices)
            return matrix, translation
    return None


def detect_subpolygons(polygon: Polygon, max_edges: int = 16) -> SubpolygonReport:
    """Exhaustively find edge subsets of size >= 3 (complement >= 3) whose
    vectors sum to zero.  Enumeration is over all 2^d subsets, so polygons
    with more than ``max_edges`` edges are rejected up front.
    """
    d = polygon.edge_count
    if d > max_edges:
        raise BudgetExceededError(f"subpolygon enumeration needs 2^{d} subsets; budget is 2^{max_edges}")
    # Scale edge vectors to integers once so mask sums are pure int work.
    fracs = [(Fraction(e.vector.x), Fraction(e.vector.y)) for e in polygon.edges]
    common = math.lcm(*(c.denominator for pair in fracs for c in pair))
    xs = [int(pair[0] * common) for pair in fracs]
    ys = [int(pair[1] * common) for pair in fracs]
    found = []
    for mask in range(1, 1 << d):
        k = mask.bit_count()
        if k < 3 or d - k < 3:
            continue
        sx = sy = 0
        m = mask
        while m:
            low = m & -m
            i = low.bit_length() - 1
            sx += xs[i]
            sy += ys[i]
            m ^= low
        if sx == 0 and sy == 0:
            found.append(tuple(i for i in range(d) if mask >> i & 1))
    return SubpolygonReport(subsets=tuple(found))


def polygon_from_halfplanes(normals: Sequence[Vec2], offsets: Sequence) -> Polygon:
    """Build the polygon bounded by lines x . n_i = c_i, one edge per line.

    The normals must already be in counterclockwise cyclic order; the vertex
    starting edge ``i`` is the intersection of lines ``i-1`` and ``i``.
    Raises :class:`StructuralPolygonError` when consecutive lines are
    parallel or the data does not bound a convex polygon.
    """
    d = len(normals)
    if d < 3 or d != len(offsets):
        raise StructuralPolygonError("need at least three half-planes with matching offsets")
    cs = [as_scalar(c) for c in offsets]
    vertices = []
    for i in range(d):
        u, v = normals[(i - 1) % d], normals[i]
        cu, cv = cs[(i - 1) % d], cs[i]
        det = u.cross(v)
        if det == 0:
            raise StructuralPolygonError(f"consecutive half-planes {(i - 1) % d} and {i} are parallel")
        x = Fraction(cu * v.y - cv * u.y, 1) / det
        y = Fraction(cv * u.x - cu * v.x, 1) / det
        vertices.append(Vec2(x, y))
    return Polygon(vertices)
