"""Generators for the universe of Delzant polygons.

Hirzebruch trapezoids, corner chopping, seeded random sampling, genericity
perturbation, and the exhaustive parallel-pair census.  Every polygon that
leaves this module is Delzant-valid.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import NamedTuple

from .errors import BudgetExceededError, ChopError, StructuralPolygonError
from .geometry import Polygon, polygon_from_halfplanes, validate_delzant
from .reconstruct import is_generic
from .vectors import as_scalar


class ChopSpec(NamedTuple):
    """Where and how deep to cut a corner.

    ``depth`` is the lattice length of the new edge; it must be strictly
    smaller than the lattice lengths of both edges at the vertex.
    """

    vertex_index: int
    depth: Fraction


class ZooCensus(NamedTuple):
    """Histogram of parallel-pair counts over a bounded enumeration."""

    edge_count: int
    histogram: dict[int, int]
    total: int


def hirzebruch(m: int, w, h) -> Polygon:
    """The trapezoid (0,0), (w,0), (w,h), (0,h+m*w); a rectangle for m = 0.

    Delzant for every nonnegative integer slope parameter m and positive
    rational width and height.
    """
    if not isinstance(m, int) or m < 0:
        raise ValueError("slope parameter m must be a nonnegative integer")
    w = as_scalar(w)
    h = as_scalar(h)
    if w <= 0 or h <= 0:
        raise ValueError("width and height must be positive")
    return Polygon(((0, 0), (w, 0), (w, h), (0, h + m * w)))


def chop(polygon: Polygon, spec: ChopSpec) -> Polygon:
    """Cut the corner at a vertex, at lattice depth ``spec.depth`` along both
    incident edges.

    The new edge has lattice length ``depth`` and its outward normal is the
    sum of the two adjacent outward normals; chopping a Delzant polygon at
    an admissible depth always yields a Delzant polygon.
    """
    d = polygon.edge_count
    i = spec.vertex_index
    if not 0 <= i < d:
        raise ChopError(f"vertex index {i} out of range for a {d}-gon")
    depth = as_scalar(spec.depth)
    if depth <= 0:
        raise ChopError("chop depth must be positive")
    incoming = polygon.edges[(i - 1) % d]
    outgoing = polygon.edges[i]
    if depth >= incoming.lattice_length:
        raise ChopError(
            f"depth {depth} is not below the lattice length {incoming.lattice_length} "
            f"of edge {(i - 1) % d} into vertex {i}"
        )
    if depth >= outgoing.lattice_length:
        raise ChopError(
            f"depth {depth} is not below the lattice length {outgoing.lattice_length} "
            f"of edge {i} out of vertex {i}"
        )
    v = polygon.vertices[i]
    a = v - incoming.direction * depth
    b = v + outgoing.direction * depth
    return Polygon(polygon.vertices[:i] + (a, b) + polygon.vertices[i + 1:])


def _random_unimodular(rng: random.Random, bound: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """A small random SL(2, Z) matrix built from one or two shears."""
    bound = max(1, min(bound, 3))
    mat = ((1, 0), (0, 1))
    for _ in range(rng.randint(1, 2)):
        k = rng.randint(-bound, bound)
        if rng.random() < 0.5:
            shear = ((1, k), (0, 1))
        else:
            shear = ((1, 0), (k, 1))
        mat = (
            (mat[0][0] * shear[0][0] + mat[0][1] * shear[1][0],
             mat[0][0] * shear[0][1] + mat[0][1] * shear[1][1]),
            (mat[1][0] * shear[0][0] + mat[1][1] * shear[1][0],
             mat[1][0] * shear[0][1] + mat[1][1] * shear[1][1]),
        )
    return mat


def random_delzant(d: int, seed: int, param_bound: int = 5, twist: bool = False) -> Polygon:
    """A seeded random Delzant d-gon.

    Triangles are bounded unimodular images of a scaled standard simplex;
    quadrilaterals are Hirzebruch trapezoids; anything larger is a
    trapezoid with d - 4 random admissible chops.  Deterministic for a
    fixed argument tuple.  ``twist`` applies an extra random unimodular
    map (off by default to keep coordinates small).
    """
    if d < 3:
        raise ValueError("a polygon needs at least 3 edges")
    bound = max(1, param_bound)
    rng = random.Random(seed)
    if d == 3:
        k = Fraction(rng.randint(1, bound))
        polygon = Polygon(((0, 0), (k, 0), (0, k))).transform(_random_unimodular(rng, bound))
    else:
        polygon = hirzebruch(rng.randint(0, bound), rng.randint(1, bound), rng.randint(1, bound))
        for _ in range(d - 4):
            i = rng.randrange(polygon.edge_count)
            shortest = min(
                polygon.edges[(i - 1) % polygon.edge_count].lattice_length,
                polygon.edges[i].lattice_length,
            )
            denom = rng.randint(2, 4)
            depth = shortest * Fraction(rng.randint(1, denom - 1), denom)
            polygon = chop(polygon, ChopSpec(i, depth))
        if twist:
            polygon = polygon.transform(_random_unimodular(rng, bound))
    report = validate_delzant(polygon)
    if not report:
        raise AssertionError(f"sampler produced an invalid polygon: {report.failures}")
    return polygon


_PERTURB_BASE = Fraction(1, 64)


def perturb_generic(polygon: Polygon, budget: int = 24) -> Polygon:
    """Shift the support offsets by small rationals until the polygon is
    generic, keeping the normal fan (hence the parallel-pair count) intact.

    Already-generic input is returned unchanged.  The step size starts at
    1/64 and halves on every retry, with deterministic pseudo-random
    multipliers per edge, so results are reproducible.
    """
    if is_generic(polygon):
        return polygon
    d = polygon.edge_count
    normals = [e.normal for e in polygon.edges]
    offsets = [Fraction(normals[i].dot(polygon.vertices[i])) for i in range(d)]
    last = None
    for attempt in range(budget):
        step = _PERTURB_BASE / (1 << attempt)
        rng = random.Random(attempt)
        shifted = [c + step * rng.randint(0, 7) for c in offsets]
        try:
            candidate = polygon_from_halfplanes(normals, shifted)
        except StructuralPolygonError:
            continue
        if [e.normal for e in candidate.edges] != normals:
            continue  # an edge collapsed or flipped; the fan changed
        if not validate_delzant(candidate):
            continue
        last = candidate
        if is_generic(candidate):
            return candidate
    raise BudgetExceededError(
        f"no generic perturbation found in {budget} attempts", partial=last
    )


def _census_pairs(normals: tuple[tuple[int, int], ...]) -> int:
    seen: dict[tuple[int, int], int] = {}
    for n in normals:
        key = n if (n[0] > 0 or (n[0] == 0 and n[1] > 0)) else (-n[0], -n[1])
        seen[key] = seen.get(key, 0) + 1
    return sum(1 for count in seen.values() if count == 2)


def parallel_pair_census(d: int, param_bound: int, max_instances: int = 5_000_000) -> ZooCensus:
    """Exhaustive census of bounded-parameter chopped trapezoids with d edges.

    Enumerates every Hirzebruch base with integer slope 0..bound and integer
    sides 1..bound, then every sequence of d - 4 corner chops at integer
    depths 1..bound (strictly below both incident lattice lengths), and
    histograms the number of parallel pairs.  Each parametrized instance
    counts once; the reported fractions are relative to this grid, not to
    any continuous measure.
    """
    if d < 4:
        raise ValueError("the census starts at quadrilaterals")
    bound = max(1, param_bound)
    histogram: dict[int, int] = {}
    total = 0

    def visit(normals: tuple, lengths: tuple, remaining: int):
        nonlocal total
        if remaining == 0:
            pairs = _census_pairs(normals)
            histogram[pairs] = histogram.get(pairs, 0) + 1
            total += 1
            if total > max_instances:
                raise BudgetExceededError(
                    f"census exceeded {max_instances} instances",
                    partial=ZooCensus(d, dict(histogram), total),
                )
            return
        k = len(normals)
        for i in range(k):
            len_in = lengths[(i - 1) % k]
            len_out = lengths[i]
            n_new = (
                normals[(i - 1) % k][0] + normals[i][0],
                normals[(i - 1) % k][1] + normals[i][1],
            )
            for t in range(1, min(len_in, len_out, bound + 1)):
                new_normals = normals[:i] + (n_new,) + normals[i:]
                # Shorten both incident edges, insert the new one at i.
                new_lengths = list(lengths)
                new_lengths[(i - 1) % k] = len_in - t
                new_lengths[i] = len_out - t
                new_lengths.insert(i, t)
                visit(new_normals, tuple(new_lengths), remaining - 1)

    for m in range(0, bound + 1):
        for w in range(1, bound + 1):
            for h in range(1, bound + 1):
                base_normals = ((0, -1), (1, 0), (m, 1), (-1, 0))
                base_lengths = (w, h, w, h + m * w)
                visit(base_normals, base_lengths, d - 4)
    return ZooCensus(edge_count=d, histogram=dict(sorted(histogram.items())), total=total)
