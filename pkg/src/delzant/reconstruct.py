"""The inverse map: finite candidate sets from hearable data, and exact
half-space rebuilds.

Reconstruction works purely over the rationals.  From spectral data it
enumerates which normal classes are doubled, the signs of the class
representatives, and the length splits inside each parallel pair; closure
is a small exact linear system, with a one-parameter family resolved
against the area when three pairs are present.  Every surviving candidate
is validated and must reproduce the input data exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from math import gcd, isqrt
from typing import NamedTuple, Sequence, Union

from .errors import (
    DegenerateFamilyError,
    InconsistentSystemError,
    ReconstructionInfeasibleError,
    StructuralPolygonError,
    UnsupportedAmbiguityError,
)
from .geometry import Polygon, detect_subpolygons, polygon_from_halfplanes, validate_delzant
from .polytope3 import Polytope3
from .spectral import HalfSpaceSystem, SpectralData, spectral_data
from .vectors import Vec2, Vec3, is_primitive_integer


@dataclass(frozen=True)
class SignedEdgeList:
    """Edge vectors known to bound a convex polygon, with an anchor side.

    ``edges[0]`` is the starting edge and ``anchor_normal`` the side of it
    that must face outward.
    """

    edges: tuple[Vec2, ...]
    anchor_normal: Vec2

    def __post_init__(self):
        if len(self.edges) < 3:
            raise ReconstructionInfeasibleError("need at least three edges")
        total = Vec2(0, 0)
        for e in self.edges:
            if e.is_zero():
                raise ReconstructionInfeasibleError("zero edge vector")
            total = total + e
        if not total.is_zero():
            raise ReconstructionInfeasibleError("edge vectors do not close up")
        if self.anchor_normal.is_zero() or self.anchor_normal.dot(self.edges[0]) != 0:
            raise ReconstructionInfeasibleError("anchor normal must be nonzero and orthogonal to the first edge")


def _chain_polygon(ordered: Sequence[Vec2]) -> Polygon:
    vertices = [Vec2(Fraction(0), Fraction(0))]
    for e in ordered[:-1]:
        vertices.append(vertices[-1] + e)
    try:
        return Polygon(vertices)
    except StructuralPolygonError as exc:
        raise ReconstructionInfeasibleError(f"edges admit no convex ordering: {exc}") from exc


def build_most_obtuse(edge_list: SignedEdgeList) -> Polygon:
    """Greedy most-obtuse-angle construction of the unique convex polygon.

    Starting from the anchored first edge, repeatedly append the unused edge
    in the forward half-plane whose interior angle with the previous edge is
    most obtuse, i.e. whose direction turns the least.  Comparisons are
    exact cross products, so edges of wildly different lengths are handled
    uniformly.
    """
    e1 = edge_list.edges[0]
    # The CCW outward normal of e1 is its -90 degree rotation; if the anchor
    # sits on the other side the traversal runs clockwise instead.
    side = e1.perp_cw().cross(edge_list.anchor_normal)
    if side != 0:
        raise ReconstructionInfeasibleError("anchor normal is not perpendicular to the first edge")
    orient = 1 if e1.perp_cw().dot(edge_list.anchor_normal) > 0 else -1
    pool = list(edge_list.edges[1:])
    ordered = [e1]
    prev = e1
    while pool:
        best = None
        for e in pool:
            if orient * prev.cross(e) <= 0:
                continue
            if best is None:
                best = e
            else:
                turn = orient * e.cross(best)
                if turn == 0:
                    raise ReconstructionInfeasibleError("two edges share a direction; not strictly convex")
                if turn > 0:
                    best = e
        if best is None:
            raise ReconstructionInfeasibleError("no admissible next edge; vectors do not bound a convex polygon")
        ordered.append(best)
        pool.remove(best)
        prev = best
    return _chain_polygon(ordered)


def angle_sort_oracle(edge_list: SignedEdgeList) -> Polygon:
    """Independent construction by polar-angle sort, for cross-checking.

    Sorts all edges by angle starting from the first edge's direction, in
    the orientation chosen by the anchor normal, then chains them.
    """
    e1 = edge_list.edges[0]
    orient = 1 if e1.perp_cw().dot(edge_list.anchor_normal) > 0 else -1

    def bucket(v: Vec2) -> int:
        c = orient * e1.cross(v)
        if c > 0:
            return 1
        if c < 0:
            return 3
        return 0 if e1.dot(v) > 0 else 2

    def compare(a: Vec2, b: Vec2) -> int:
        ba, bb = bucket(a), bucket(b)
        if ba != bb:
            return -1 if ba < bb else 1
        if ba in (0, 2):
            if a.cross(b) == 0:
                raise ReconstructionInfeasibleError("two edges share a direction; not strictly convex")
            return 0
        c = orient * a.cross(b)
        if c == 0:
            raise ReconstructionInfeasibleError("two edges share a direction; not strictly convex")
        return -1 if c > 0 else 1

    ordered = sorted(edge_list.edges, key=cmp_to_key(compare))
    return _chain_polygon(ordered)


class AssignmentRecord(NamedTuple):
    """One explored branch of the candidate enumeration."""

    doubled: tuple[tuple[int, int], ...]          # unsigned normals of the doubled classes
    signs: tuple[int, ...]                        # sign per class representative
    splits: tuple[tuple[Fraction, Fraction], ...]  # (length+, length-) per doubled class
    parameter: Fraction | None                    # three-pair parameter, when used
    anchor: int                                   # +1 / -1; 0 when the branch died earlier
    outcome: str
    candidate_index: int | None


@dataclass(frozen=True)
class CandidateSet:
    """Canonical-form candidates together with the full assignment trace."""

    candidates: tuple[Polygon, ...]
    trace: tuple[AssignmentRecord, ...]

    def __len__(self) -> int:
        return len(self.candidates)

    def __iter__(self):
        return iter(self.candidates)

    def __contains__(self, polygon: Polygon) -> bool:
        key = polygon.canonical_key()
        return any(c.canonical_key() == key for c in self.candidates)


def _solve_two(w1: Vec2, w2: Vec2, rhs: Vec2) -> tuple[Fraction, Fraction]:
    det = Fraction(w1.cross(w2))
    return Fraction(rhs.cross(w2)) / det, Fraction(w1.cross(rhs)) / det


def _rational_sqrt(value: Fraction) -> Fraction | None:
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def _quadratic_roots(b2: Fraction, b1: Fraction, b0: Fraction) -> list[Fraction]:
    """Rational roots of b2 t^2 + b1 t + b0 = 0 (empty if none)."""
    if b2 == 0:
        if b1 == 0:
            return []
        return [-b0 / b1]
    disc = b1 * b1 - 4 * b2 * b0
    root = _rational_sqrt(disc)
    if root is None:
        return []
    if root == 0:
        return [-b1 / (2 * b2)]
    return sorted([(-b1 - root) / (2 * b2), (-b1 + root) / (2 * b2)])


def _angle_order(directions: Sequence[Vec2]) -> list[int]:
    """Indices sorted counterclockwise by direction angle, from (1, 0)."""
    ref = Vec2(1, 0)

    def bucket(v: Vec2) -> int:
        c = ref.cross(v)
        if c == 0:
            return 0 if v.x > 0 else 2
        return 1 if c > 0 else 3

    def compare(i: int, j: int) -> int:
        a, b = directions[i], directions[j]
        ba, bb = bucket(a), bucket(b)
        if ba != bb:
            return -1 if ba < bb else 1
        c = a.cross(b)
        if c == 0:
            return 0
        return -1 if c > 0 else 1

    return sorted(range(len(directions)), key=cmp_to_key(compare))


def _signed_chain_area(edges: Sequence[Vec2]) -> Fraction:
    """Signed shoelace area of the chain 0, e0, e0+e1, ... (no validity check)."""
    x = Fraction(0)
    y = Fraction(0)
    total = Fraction(0)
    for e in edges:
        nx, ny = x + e.x, y + e.y
        total += x * ny - nx * y
        x, y = nx, ny
    return total / 2


@dataclass(frozen=True)
class ThreePairFamily:
    """The one-parameter family of a three-parallel-pair configuration.

    Edge directions stay fixed along the family; only the length splits
    inside the doubled classes move, as ``delta(t) = base_splits + t *
    kernel``, where the kernel spans the unique linear relation among the
    three doubled directions.  The area along the family is the quadratic
    ``base_area + A t + B t^2`` with ``(A, B) = area_coefficients``.
    """

    directions: tuple[Vec2, Vec2, Vec2]    # doubled-class edge directions
    sums: tuple[Fraction, Fraction, Fraction]
    base_splits: tuple[Fraction, Fraction, Fraction]   # split differences at t = 0
    kernel: tuple[int, int, int]
    fixed_edges: tuple[Vec2, ...]          # signed single-class edges
    base_area: Fraction
    area_coefficients: tuple[Fraction, Fraction]       # (A, B)
    admissible_interval: tuple[Fraction, Fraction]     # open interval for t

    def splits_at(self, t) -> tuple[Fraction, Fraction, Fraction]:
        t = Fraction(t)
        return tuple(d + t * a for d, a in zip(self.base_splits, self.kernel))

    def edge_multiset(self, t) -> tuple[Vec2, ...]:
        edges = list(self.fixed_edges)
        for w, s, delta in zip(self.directions, self.sums, self.splits_at(t)):
            edges.append(w * ((s + delta) / 2))
            edges.append(w * (-(s - delta) / 2))
        return tuple(edges)

    def polygon_at(self, t) -> Polygon:
        """The family member at parameter ``t`` (must be admissible)."""
        edges = self.edge_multiset(t)
        order = _angle_order([e for e in edges])
        return _chain_polygon([edges[i] for i in order])

    def predicted_area(self, t) -> Fraction:
        t = Fraction(t)
        a, b = self.area_coefficients
        return self.base_area + a * t + b * t * t


def _family_from_parts(
    directions: tuple[Vec2, Vec2, Vec2],
    sums: tuple[Fraction, Fraction, Fraction],
    base_splits: tuple[Fraction, Fraction, Fraction],
    fixed_edges: tuple[Vec2, ...],
) -> ThreePairFamily | None:
    """Assemble the family; None when no parameter value is admissible."""
    w1, w2, w3 = directions
    raw = (int(w2.cross(w3)), int(w3.cross(w1)), int(w1.cross(w2)))
    g = gcd(*(abs(a) for a in raw))
    kernel = tuple(a // g for a in raw)
    if next(a for a in kernel if a != 0) < 0:
        kernel = tuple(-a for a in kernel)
    lo, hi = None, None
    for delta, alpha, s in zip(base_splits, kernel, sums):
        # |delta + t alpha| < s
        bounds = sorted(((-s - delta) / alpha, (s - delta) / alpha))
        lo = bounds[0] if lo is None else max(lo, bounds[0])
        hi = bounds[1] if hi is None else min(hi, bounds[1])
    if lo >= hi:
        return None

    def multiset(t: Fraction) -> list[Vec2]:
        edges = list(fixed_edges)
        for w, s, d0, alpha in zip(directions, sums, base_splits, kernel):
            delta = d0 + t * alpha
            edges.append(w * ((s + delta) / 2))
            edges.append(w * (-(s - delta) / 2))
        return edges

    # The angular order is read off at the interval midpoint, where every
    # edge length is strictly positive; it then stays fixed for all t, which
    # makes the chained shoelace value a global quadratic in t.
    sample = multiset((lo + hi) / 2)
    order = _angle_order(sample)

    def area_at(t: Fraction) -> Fraction:
        edges = multiset(t)
        return _signed_chain_area([edges[i] for i in order])

    f0 = area_at(Fraction(0))
    f1 = area_at(Fraction(1))
    fm1 = area_at(Fraction(-1))
    coeff_a = (f1 - fm1) / 2
    coeff_b = (f1 + fm1) / 2 - f0
    return ThreePairFamily(
        directions=directions,
        sums=sums,
        base_splits=base_splits,
        kernel=kernel,
        fixed_edges=fixed_edges,
        base_area=f0,
        area_coefficients=(coeff_a, coeff_b),
        admissible_interval=(lo, hi),
    )


def three_pair_family(polygon: Polygon) -> ThreePairFamily:
    """The family through a polygon with exactly three parallel pairs."""
    data = spectral_data(polygon)
    if data.parallel_pairs != 3:
        raise ValueError(f"polygon has {data.parallel_pairs} parallel pairs, need exactly 3")
    doubled = [c for c in data.classes if c.edge_count == 2]
    singles = [c for c in data.classes if c.edge_count == 1]
    directions = tuple(c.normal.perp_ccw() for c in doubled)
    sums = tuple(c.length_sum for c in doubled)
    splits = []
    for c, w in zip(doubled, directions):
        plus = minus = None
        for e in polygon.edges:
            if e.direction == w:
                plus = e.lattice_length
            elif e.direction == -w:
                minus = e.lattice_length
        splits.append(plus - minus)
    fixed = []
    for c in singles:
        w = c.normal.perp_ccw()
        edge = next(e for e in polygon.edges if e.direction in (w, -w))
        fixed.append(edge.vector)
    family = _family_from_parts(directions, sums, tuple(splits), tuple(fixed))
    if family is None:
        raise ReconstructionInfeasibleError("polygon's own splits are not admissible")
    if family.base_area != polygon.area:
        raise AssertionError("family anchor does not reproduce the source polygon's area")
    return family


def solve_three_pair_parameter(family: ThreePairFamily, target_area) -> tuple[Fraction, ...]:
    """Admissible parameters where the family's area equals ``target_area``.

    For a family anchored at a polygon of the target area this is {0} plus
    at most one further root.  When the area is constant along the family
    and equal to the target, every parameter works and a
    :class:`DegenerateFamilyError` carrying the interval is raised.
    """
    target = Fraction(target_area)
    coeff_a, coeff_b = family.area_coefficients
    lo, hi = family.admissible_interval
    if coeff_a == 0 and coeff_b == 0:
        if family.base_area == target:
            raise DegenerateFamilyError(
                "area is constant along the family; every parameter matches", interval=(lo, hi)
            )
        return ()
    roots = _quadratic_roots(coeff_b, coeff_a, family.base_area - target)
    return tuple(t for t in roots if lo < t < hi)


def enumerate_candidates(
    data: SpectralData,
    max_parallel_pairs: int = 3,
    trust_counts: bool = False,
) -> CandidateSet:
    """All translation classes of Delzant polygons with the given data.

    Enumerates doubled-class assignments (all of them by default; the
    stored per-class counts are only used when ``trust_counts`` is set),
    signs of the class representatives, and exact closure solutions for the
    length splits; three-pair branches are pinned against the area.  Every
    emitted candidate validates Delzant and reproduces ``data`` exactly.
    """
    r = len(data.classes)
    d = data.vertex_count
    p = d - r
    if d < 3 or p < 0 or data.area <= 0:
        raise ReconstructionInfeasibleError(f"inconsistent data: {d} vertices, {r} normal classes")
    if p > min(max_parallel_pairs, 3):
        raise UnsupportedAmbiguityError(
            f"{p} parallel pairs admit no finite reconstruction (supported: up to {min(max_parallel_pairs, 3)})"
        )
    if trust_counts and not data.counts_known:
        raise ValueError("data carries no per-class edge counts to trust")
    if data.counts_known and sum(c.edge_count for c in data.classes) != d:
        raise ReconstructionInfeasibleError("per-class edge counts do not sum to the vertex count")

    normals = [c.normal for c in data.classes]
    dirs = [n.perp_ccw() for n in normals]
    sums = [c.length_sum for c in data.classes]
    if trust_counts:
        choices = [tuple(i for i, c in enumerate(data.classes) if c.edge_count == 2)]
    else:
        choices = list(combinations(range(r), p))

    records: list[dict] = []
    emitted: dict[tuple, Polygon] = {}

    for choice in choices:
        chosen = set(choice)
        singles = [i for i in range(r) if i not in chosen]
        doubled_normals = tuple(tuple(normals[i]) for i in choice)
        for bits in range(1 << len(singles)):
            signs = [1] * r
            for b, i in enumerate(singles):
                if bits >> b & 1:
                    signs[i] = -1
            rhs = Vec2(Fraction(0), Fraction(0))
            for i in singles:
                rhs = rhs - dirs[i] * (signs[i] * sums[i])
            # rhs is what the doubled-class split differences must sum to.
            solutions: list[tuple[tuple[Fraction, ...], Fraction | None]] = []
            degenerate = None
            if p == 0:
                if rhs.is_zero():
                    solutions.append(((), None))
            elif p == 1:
                w = dirs[choice[0]]
                if rhs.cross(w) == 0:
                    delta = (Fraction(rhs.x) / w.x) if w.x != 0 else (Fraction(rhs.y) / w.y)
                    solutions.append(((delta,), None))
            elif p == 2:
                d1, d2 = _solve_two(dirs[choice[0]], dirs[choice[1]], rhs)
                solutions.append(((d1, d2), None))
            else:
                ws = tuple(dirs[i] for i in choice)
                ss = tuple(sums[i] for i in choice)
                base = _solve_two(ws[0], ws[1], rhs) + (Fraction(0),)
                fixed = tuple(dirs[i] * (signs[i] * sums[i]) for i in singles)
                family = _family_from_parts(ws, ss, base, fixed)
                if family is not None:
                    try:
                        ts = solve_three_pair_parameter(family, data.area)
                    except DegenerateFamilyError as exc:
                        degenerate = (family, exc)
                        ts = ()
                    for t in ts:
                        solutions.append((family.splits_at(t), t))
            if degenerate is not None:
                # Constant area along the family only matters if its members
                # actually are Delzant polygons with this data; validity is
                # constant along the family (the directions never change), so
                # one probe at the midpoint decides.
                family, exc = degenerate
                lo, hi = family.admissible_interval
                try:
                    probe = family.polygon_at((lo + hi) / 2)
                except ReconstructionInfeasibleError:
                    probe = None
                if (
                    probe is not None
                    and validate_delzant(probe)
                    and spectral_data(probe).matches(data, with_counts=trust_counts)
                ):
                    raise DegenerateFamilyError(
                        "a three-pair branch matches the data along a whole interval; "
                        "the candidate set is not finite",
                        interval=exc.interval,
                    )
                records.append(
                    dict(doubled=doubled_normals, signs=tuple(signs), splits=(),
                         parameter=None, anchor=0, outcome="degenerate_dead", key=None)
                )
                continue
            if not solutions:
                records.append(
                    dict(doubled=doubled_normals, signs=tuple(signs), splits=(),
                         parameter=None, anchor=0, outcome="no_closure", key=None)
                )
                continue
            for deltas, parameter in solutions:
                splits = []
                admissible = True
                for i, delta in zip(choice, deltas):
                    lam = (sums[i] + delta) / 2
                    mu = (sums[i] - delta) / 2
                    if lam <= 0 or mu <= 0:
                        admissible = False
                    splits.append((lam, mu))
                if not admissible:
                    records.append(
                        dict(doubled=doubled_normals, signs=tuple(signs), splits=tuple(splits),
                             parameter=parameter, anchor=0, outcome="inadmissible_split", key=None)
                    )
                    continue
                edges: list[Vec2] = []
                for i in range(r):
                    if i in chosen:
                        lam, mu = splits[choice.index(i)]
                        edges.append(dirs[i] * lam)
                        edges.append(dirs[i] * (-mu))
                    else:
                        edges.append(dirs[i] * (signs[i] * sums[i]))
                for anchor in (1, -1):
                    record = dict(doubled=doubled_normals, signs=tuple(signs), splits=tuple(splits),
                                  parameter=parameter, anchor=anchor, key=None)
                    try:
                        poly = build_most_obtuse(SignedEdgeList(tuple(edges), normals[0] * anchor))
                    except ReconstructionInfeasibleError:
                        record["outcome"] = "no_convex_ordering"
                        records.append(record)
                        continue
                    if not validate_delzant(poly):
                        record["outcome"] = "dropped_invalid"
                        records.append(record)
                        continue
                    if not spectral_data(poly).matches(data, with_counts=trust_counts):
                        record["outcome"] = "dropped_mismatch"
                        records.append(record)
                        continue
                    canon = poly.canonical()
                    key = tuple(canon.vertices)
                    emitted.setdefault(key, canon)
                    record["outcome"] = "emitted"
                    record["key"] = key
                    records.append(record)

    if not emitted:
        raise ReconstructionInfeasibleError("no Delzant polygon is consistent with the data")
    ordered_keys = sorted(emitted)
    index_of = {key: i for i, key in enumerate(ordered_keys)}
    trace = tuple(
        AssignmentRecord(
            doubled=rec["doubled"],
            signs=rec["signs"],
            splits=rec["splits"],
            parameter=rec["parameter"],
            anchor=rec["anchor"],
            outcome=rec["outcome"],
            candidate_index=index_of.get(rec["key"]),
        )
        for rec in records
    )
    return CandidateSet(candidates=tuple(emitted[key] for key in ordered_keys), trace=trace)


@dataclass(frozen=True)
class GenericityReport:
    """Outcome of the genericity test, with what broke it when it fails."""

    generic: bool
    rectangle: bool
    subpolygons: tuple[tuple[int, ...], ...]
    emitting_assignments: tuple[tuple[tuple[int, int], ...], ...]
    candidate_count: int | None

    def __bool__(self) -> bool:
        return self.generic


def is_generic(polygon: Polygon, max_parallel_pairs: int = 3) -> GenericityReport:
    """Whether the data of this polygon pins it down to the minimal set.

    Generic means: no subpolygons, a unique doubled-class assignment
    produces candidates, and the candidate set collapses to at most two
    polygons (four with three parallel pairs).  Rectangles are generic by
    definition: four vertices with exactly two normal directions leave no
    freedom at all.
    """
    data = spectral_data(polygon)
    p = data.parallel_pairs
    if p > min(max_parallel_pairs, 3):
        raise UnsupportedAmbiguityError(f"{p} parallel pairs are not supported by the genericity test")
    if data.vertex_count == 4 and len(data.classes) == 2:
        return GenericityReport(
            generic=True,
            rectangle=True,
            subpolygons=(),
            emitting_assignments=(tuple(tuple(c.normal) for c in data.classes),),
            candidate_count=None,
        )
    subs = detect_subpolygons(polygon).subsets
    try:
        candidates = enumerate_candidates(data, max_parallel_pairs=max_parallel_pairs)
    except DegenerateFamilyError:
        return GenericityReport(False, False, subs, (), None)
    assignments = tuple(sorted({rec.doubled for rec in candidates.trace if rec.outcome == "emitted"}))
    bound = 2 if p <= 2 else 4
    generic = not subs and len(assignments) == 1 and len(candidates) <= bound
    return GenericityReport(
        generic=generic,
        rectangle=False,
        subpolygons=subs,
        emitting_assignments=assignments,
        candidate_count=len(candidates),
    )


def bundle_reconstruct(system: HalfSpaceSystem) -> Union[Polygon, Polytope3]:
    """Rebuild the polytope from per-facet half-space data, exactly.

    The offsets are absolute, so there is no translation ambiguity; the
    result must reproduce every entry (normal, offset and facet volume) or
    an inconsistency is raised.
    """
    if system.dim == 2:
        return _reconstruct_polygon(system)
    if system.dim == 3:
        return _reconstruct_polytope(system)
    raise ValueError(f"unsupported dimension {system.dim}")


def _reconstruct_polygon(system: HalfSpaceSystem) -> Polygon:
    entries = list(system.entries)
    if len(entries) < 3:
        raise ReconstructionInfeasibleError("a bounded polygon needs at least three half-planes")
    normals = [Vec2(*e.normal) for e in entries]
    if len(set(e.normal for e in entries)) != len(entries):
        raise InconsistentSystemError("normals must be pairwise distinct")
    for n in normals:
        if not is_primitive_integer(n):
            raise InconsistentSystemError(f"normal {tuple(n)} is not a primitive integer vector")
    order = _angle_order(normals)
    sorted_normals = [normals[i] for i in order]
    sorted_entries = [entries[i] for i in order]
    m = len(order)
    for i in range(m):
        if sorted_normals[i].cross(sorted_normals[(i + 1) % m]) <= 0:
            raise ReconstructionInfeasibleError("normals fit in a half-plane; the intersection is unbounded")
    try:
        polygon = polygon_from_halfplanes(sorted_normals, [e.offset for e in sorted_entries])
    except StructuralPolygonError as exc:
        raise InconsistentSystemError(f"half-planes do not bound a polygon: {exc}") from exc
    for i, (edge, entry) in enumerate(zip(polygon.edges, sorted_entries)):
        if tuple(edge.normal) != tuple(sorted_normals[i]):
            raise InconsistentSystemError(f"half-space {entry.normal} is redundant")
        if edge.lattice_length != entry.volume:
            raise InconsistentSystemError(
                f"facet {entry.normal} has lattice length {edge.lattice_length}, data says {entry.volume}"
            )
    for v in polygon.vertices:
        for entry, n in zip(sorted_entries, sorted_normals):
            if v.dot(n) > entry.offset:
                raise ReconstructionInfeasibleError("half-space system is infeasible")
    return polygon


def _reconstruct_polytope(system: HalfSpaceSystem) -> Polytope3:
    entries = list(system.entries)
    if len(entries) < 4:
        raise ReconstructionInfeasibleError("a bounded 3-polytope needs at least four half-spaces")
    if len(set(e.normal for e in entries)) != len(entries):
        raise InconsistentSystemError("normals must be pairwise distinct")
    normals = [Vec3(*e.normal) for e in entries]
    for n in normals:
        if not is_primitive_integer(n):
            raise InconsistentSystemError(f"normal {tuple(n)} is not a primitive integer vector")
    offsets = [Fraction(e.offset) for e in entries]
    points: list[Vec3] = []
    for i, j, k in combinations(range(len(entries)), 3):
        det = Fraction(normals[i].dot(normals[j].cross(normals[k])))
        if det == 0:
            continue
        combo = (
            normals[j].cross(normals[k]) * offsets[i]
            + normals[k].cross(normals[i]) * offsets[j]
            + normals[i].cross(normals[j]) * offsets[k]
        )
        x = Vec3(Fraction(combo.x) / det, Fraction(combo.y) / det, Fraction(combo.z) / det)
        if any(x.dot(n) > c for n, c in zip(normals, offsets)):
            continue
        if x not in points:
            points.append(x)
    if len(points) < 4:
        raise ReconstructionInfeasibleError("half-space system has an empty or degenerate intersection")
    try:
        polytope = Polytope3(points)
    except StructuralPolygonError as exc:
        raise ReconstructionInfeasibleError(f"intersection is not a 3-polytope: {exc}") from exc
    derived = {(tuple(f.normal), f.offset): f.lattice_area for f in polytope.facets}
    given = {(e.normal, Fraction(e.offset)): Fraction(e.volume) for e in entries}
    for key in derived:
        if key not in given:
            raise ReconstructionInfeasibleError(
                f"intersection is unbounded: extreme points span a facet {key[0]} absent from the data"
            )
    for key, volume in given.items():
        if key not in derived:
            raise InconsistentSystemError(f"half-space {key[0]} is redundant (no facet)")
        if derived[key] != volume:
            raise InconsistentSystemError(
                f"facet {key[0]} has lattice area {derived[key]}, data says {volume}"
            )
    return polytope
