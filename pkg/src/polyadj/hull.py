"""Exact decision procedures on explicit 0/1 vertex sets.

Operations: vertex enumeration of a coded polytope, convex-hull
membership with convex-weight certificates, Caratheodory support
reduction, supporting-hyperplane face tests, and vertex adjacency.

Every positive answer carries a certificate that re-verifies by exact
arithmetic, and every procedure is deterministic: identical inputs yield
identical certificates (fixed pivot order under Bland's rule, fixed
iteration order elsewhere).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from . import linalg, simplex
from .errors import (
    DimensionCapExceeded,
    DimensionMismatch,
    EmptyVertexList,
    EqualVertices,
    InvalidCertificate,
    InvariantViolation,
    NotASubset,
    VertexNotInSet,
)
from .model import (
    DEFAULT_ENUMERATION_CAP,
    Bits,
    PolytopeCode,
    RatVector,
    bits_from_int,
    constraint_rows,
    dimension,
)


# ---- vertex enumeration ----------------------------------------------------


def enumerate_vertices(
    code: PolytopeCode, *, max_dim: int = DEFAULT_ENUMERATION_CAP
) -> list[Bits]:
    """All 0/1 members of the coded polytope, in lexicographic order with
    coordinate 0 most significant.

    The search is a complete depth-first scan of the coordinate tree
    with per-constraint window pruning, so sparse vertex sets in high
    dimension enumerate quickly; the cap guards the dense worst case
    and must be raised explicitly to go past it.
    """
    d = dimension(code)
    if d > max_dim:
        raise DimensionCapExceeded(d, max_dim)
    return [bits_from_int(w, d) for w in _members(code)]


@lru_cache(maxsize=512)
def _members(code: PolytopeCode) -> tuple[int, ...]:
    return tuple(_pruned_search(dimension(code), constraint_rows(code)))


def _pruned_search(d: int, constraints: Sequence[tuple[tuple[int, ...], int, int]]) -> list[int]:
    lo = [c[1] for c in constraints]
    hi = [c[2] for c in constraints]
    rem = [len(c[0]) for c in constraints]
    for ci in range(len(constraints)):
        if lo[ci] > rem[ci] or hi[ci] < 0:
            return []
    by_coord: list[list[int]] = [[] for _ in range(d)]
    for ci, (support, _, _) in enumerate(constraints):
        for i in support:
            by_coord[i].append(ci)
    cnt = [0] * len(constraints)
    out: list[int] = []

    def descend(i: int, acc: int) -> None:
        if i == d:
            out.append(acc)
            return
        cs = by_coord[i]
        for c in cs:
            rem[c] -= 1
        ok = True
        for c in cs:
            if cnt[c] + rem[c] < lo[c]:
                ok = False
                break
        if ok:
            descend(i + 1, acc << 1)
        ok = True
        for c in cs:
            v = cnt[c] + 1
            if v > hi[c] or v + rem[c] < lo[c]:
                ok = False
                break
        if ok:
            for c in cs:
                cnt[c] += 1
            descend(i + 1, (acc << 1) | 1)
            for c in cs:
                cnt[c] -= 1
        for c in cs:
            rem[c] += 1

    descend(0, 0)
    return out


# ---- hull membership -------------------------------------------------------


@dataclass(frozen=True)
class HullCertificate:
    """Convex combination witnessing p in conv(X): strictly positive
    weights, indexed into X, summing to one."""

    support: tuple[tuple[int, Fraction], ...]

    def as_lines(self) -> list[str]:
        return [f"{i}: {w.numerator}/{w.denominator}" for i, w in self.support]


@dataclass(frozen=True)
class FaceCertificate:
    """Supporting hyperplane: normal . x == offset on the face, and
    normal . x <= offset - 1 on every vertex outside it."""

    normal: RatVector
    offset: Fraction

    def as_lines(self) -> list[str]:
        coeffs = " ".join(f"{v.numerator}/{v.denominator}" for v in self.normal)
        return [f"normal: {coeffs}", f"offset: {self.offset.numerator}/{self.offset.denominator}"]


@dataclass(frozen=True)
class SegmentCertificate:
    """Non-adjacency witness for vertex sets without midpoint symmetry:
    the point v + alpha*(u-v), strictly inside the segment, written as a
    convex combination of the other vertices."""

    alpha: Fraction
    point: RatVector
    support: tuple[tuple[int, Fraction], ...]


@dataclass(frozen=True)
class AdjacencyVerdict:
    adjacent: bool
    face_certificate: FaceCertificate | None
    midpoint_certificate: HullCertificate | None
    segment_certificate: SegmentCertificate | None = None


def _as_rational(p: Sequence) -> RatVector:
    return tuple(Fraction(v) for v in p)


def _check_vertex_list(point_dim: int, vertices: Sequence[Bits]) -> None:
    if not vertices:
        raise EmptyVertexList()
    for x in vertices:
        if len(x) != point_dim:
            raise DimensionMismatch(point_dim, len(x))


def verify_hull_certificate(
    point: Sequence, vertices: Sequence[Bits], cert: HullCertificate
) -> None:
    """Exact re-check of a convex-combination certificate; raises
    InvalidCertificate on any failure."""
    p = _as_rational(point)
    total = Fraction(0)
    acc = [Fraction(0)] * len(p)
    for i, w in cert.support:
        if not 0 <= i < len(vertices):
            raise InvalidCertificate(f"support index {i} out of range")
        if w <= 0:
            raise InvalidCertificate(f"weight at index {i} is not positive")
        total += w
        for k, bit in enumerate(vertices[i]):
            if bit:
                acc[k] += w
    if total != 1:
        raise InvalidCertificate(f"weights sum to {total}, not 1")
    if tuple(acc) != p:
        raise InvalidCertificate("weighted vertex sum does not reproduce the point")


def in_convex_hull(point: Sequence, vertices: Sequence[Bits]) -> HullCertificate | None:
    """Membership of a rational point in conv(vertices).

    Returns a convex-weight certificate when inside, None when outside.
    Decided by exact phase-1 simplex on the combination system; the
    basic solution it returns already has support of size at most d+1.
    """
    p = _as_rational(point)
    _check_vertex_list(len(p), vertices)
    d = len(p)
    rows = [[Fraction(x[r]) for x in vertices] for r in range(d)]
    rows.append([Fraction(1)] * len(vertices))
    rhs = list(p) + [Fraction(1)]
    sol = simplex.feasible_point(rows, rhs)
    if sol is None:
        return None
    cert = HullCertificate(tuple((i, w) for i, w in enumerate(sol) if w > 0))
    verify_hull_certificate(p, vertices, cert)
    return cert


def in_convex_hull_bruteforce(point: Sequence, vertices: Sequence[Bits]) -> HullCertificate | None:
    """Independent hull-membership oracle.

    Tries every affinely independent support subset of size at most d+1
    and solves the exact linear system directly; by Caratheodory's
    theorem this decides membership.  Exponential in |vertices|, meant
    for cross-validation on small inputs only.
    """
    p = _as_rational(point)
    _check_vertex_list(len(p), vertices)
    d = len(p)
    rhs = list(p) + [Fraction(1)]
    for k in range(1, min(d + 1, len(vertices)) + 1):
        for subset in combinations(range(len(vertices)), k):
            matrix = [[Fraction(vertices[i][r]) for i in subset] for r in range(d)]
            matrix.append([Fraction(1)] * k)
            sol, unique = linalg.gauss_solve(matrix, rhs)
            if sol is None or not unique:
                continue
            if all(w >= 0 for w in sol):
                cert = HullCertificate(
                    tuple((i, w) for i, w in zip(subset, sol) if w > 0)
                )
                verify_hull_certificate(p, vertices, cert)
                return cert
    return None


def caratheodory_reduce(
    point: Sequence, vertices: Sequence[Bits], cert: HullCertificate
) -> HullCertificate:
    """Shrink a hull certificate to support of size at most d+1.

    While the support is affinely dependent, an exact dependency is
    subtracted at the largest step that keeps all weights nonnegative,
    zeroing at least one weight per round.
    """
    p = _as_rational(point)
    _check_vertex_list(len(p), vertices)
    verify_hull_certificate(p, vertices, cert)
    d = len(p)
    idxs = [i for i, _ in cert.support]
    wts = [w for _, w in cert.support]
    while len(idxs) > d + 1:
        mu = linalg.affine_dependency([vertices[i] for i in idxs])
        if mu is None:
            raise InvariantViolation(
                f"{len(idxs)} points in dimension {d} must be affinely dependent"
            )
        if all(m <= 0 for m in mu):
            mu = [-m for m in mu]
        step = min(w / m for w, m in zip(wts, mu) if m > 0)
        wts = [w - step * m for w, m in zip(wts, mu)]
        keep = [k for k, w in enumerate(wts) if w > 0]
        idxs = [idxs[k] for k in keep]
        wts = [wts[k] for k in keep]
    reduced = HullCertificate(tuple(zip(idxs, wts)))
    verify_hull_certificate(p, vertices, reduced)
    return reduced


# ---- face tests ------------------------------------------------------------


def verify_face_certificate(
    face: Sequence[Bits], vertices: Sequence[Bits], cert: FaceCertificate
) -> None:
    """Exact re-check of a supporting hyperplane; raises
    InvalidCertificate on any failure."""
    face_set = set(face)
    a, b = cert.normal, cert.offset
    for x in vertices:
        value = sum((w for w, bit in zip(a, x) if bit), Fraction(0))
        if x in face_set:
            if value != b:
                raise InvalidCertificate(f"face vertex {x} off the hyperplane")
        elif value > b - 1:
            raise InvalidCertificate(f"outside vertex {x} not separated by a full unit")


def is_face(face: Iterable[Bits], vertices: Sequence[Bits]) -> FaceCertificate | None:
    """Decide whether the given vertex subset is exactly the vertex set
    of a face of conv(vertices).

    Positive answers return a hyperplane with normal . x == offset on
    the subset and normal . x <= offset - 1 outside it (strictness is
    normalized to a full unit by scaling, which is harmless for a
    finite vertex set).  The empty set and the full set are faces.
    Decided by exact LP feasibility, with one shortcut: when the subset
    is exactly a coordinate slice of the vertex list, the +-1 indicator
    hyperplane of the agreeing coordinates is emitted directly.  The
    shortcut is verified like any other certificate and never decides
    the negative direction.
    """
    face_list = [tuple(x) for x in face]
    face_set = set(face_list)
    if len(face_set) != len(face_list):
        raise InvalidCertificate("face subset contains duplicates")
    vert_list = [tuple(x) for x in vertices]
    vert_set = set(vert_list)
    if not face_set <= vert_set:
        raise NotASubset()
    d = len(vert_list[0]) if vert_list else 0
    if not face_set:
        return FaceCertificate(tuple(Fraction(0) for _ in range(d)), Fraction(1))
    members = [x for x in vert_list if x in face_set]
    outside = [x for x in vert_list if x not in face_set]
    if not outside:
        return FaceCertificate(tuple(Fraction(0) for _ in range(d)), Fraction(0))

    cert = _slice_certificate(members, outside, d)
    if cert is not None:
        verify_face_certificate(members, vert_list, cert)
        return cert

    # LP over (a, b), translated so b = a . x0: equalities pin the face
    # to the hyperplane, inequalities push everything else a unit below.
    # Free coordinates of a are split into positive and negative parts;
    # one slack per outside vertex.
    x0 = members[0]
    cols = 2 * d + len(outside)
    rows = []
    rhs = []
    for f in members[1:]:
        row = [0] * cols
        for k in range(d):
            diff = f[k] - x0[k]
            if diff:
                row[k] = diff
                row[d + k] = -diff
        rows.append(row)
        rhs.append(0)
    for slack, z in enumerate(outside):
        row = [0] * cols
        for k in range(d):
            diff = x0[k] - z[k]
            if diff:
                row[k] = diff
                row[d + k] = -diff
        row[2 * d + slack] = -1
        rows.append(row)
        rhs.append(1)
    sol = simplex.feasible_point(rows, rhs)
    if sol is None:
        return None
    normal = tuple(sol[k] - sol[d + k] for k in range(d))
    offset = sum((w for w, bit in zip(normal, x0) if bit), Fraction(0))
    cert = FaceCertificate(normal, offset)
    verify_face_certificate(members, vert_list, cert)
    return cert


def _slice_certificate(
    members: Sequence[Bits], outside: Sequence[Bits], d: int
) -> FaceCertificate | None:
    """When the face subset is exactly the set of vertices agreeing with
    it on its constant coordinates, those coordinates support it."""
    first = members[0]
    agree = [k for k in range(d) if all(x[k] == first[k] for x in members)]
    for z in outside:
        if all(z[k] == first[k] for k in agree):
            return None
    normal = [Fraction(0)] * d
    offset = Fraction(0)
    for k in agree:
        if first[k]:
            normal[k] = Fraction(1)
            offset += 1
        else:
            normal[k] = Fraction(-1)
    return FaceCertificate(tuple(normal), offset)


# ---- adjacency -------------------------------------------------------------


def _segment_witness(
    u: Bits, v: Bits, rest: Sequence[Bits]
) -> tuple[Fraction, RatVector, HullCertificate] | None:
    """A point of the open segment (u, v) inside conv(rest), if any.

    Solved as one feasibility LP over the convex weights and the
    segment parameter alpha with z = v + alpha*(u - v).
    """
    if not rest:
        return None
    d = len(u)
    nw = len(rest)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for i in range(d):
        row = [Fraction(x[i]) for x in rest]
        row.append(Fraction(v[i] - u[i]))
        row.append(Fraction(0))
        rows.append(row)
        rhs.append(Fraction(v[i]))
    rows.append([Fraction(1)] * nw + [Fraction(0), Fraction(0)])
    rhs.append(Fraction(1))
    rows.append([Fraction(0)] * nw + [Fraction(1), Fraction(1)])
    rhs.append(Fraction(1))
    sol = simplex.feasible_point(rows, rhs)
    if sol is None:
        return None
    alpha = sol[nw]
    if not 0 < alpha < 1:
        raise InvariantViolation(
            f"segment witness landed on an endpoint (alpha = {alpha})"
        )
    point = tuple(Fraction(b) + alpha * (a - b) for a, b in zip(u, v))
    support = tuple((i, w) for i, w in enumerate(sol[:nw]) if w)
    cert = HullCertificate(support)
    verify_hull_certificate(point, rest, cert)
    return alpha, point, cert


def are_adjacent(vertices: Sequence[Bits], u: Bits, v: Bits) -> AdjacencyVerdict:
    """Whether u and v span an edge of conv(vertices).

    Decided as "is {u, v} a face".  A negative verdict carries a
    certificate placing the midpoint (u+v)/2 in the hull of the other
    vertices whenever the midpoint lies there (always, on this package's
    polytope families); for vertex sets without that symmetry it falls
    back to a certificate for some other interior point of the segment,
    which exists for every non-adjacent vertex pair.
    """
    u = tuple(u)
    v = tuple(v)
    if u == v:
        raise EqualVertices()
    vert_list = [tuple(x) for x in vertices]
    if u not in vert_list or v not in vert_list:
        raise VertexNotInSet()
    cert = is_face((u, v), vert_list)
    if cert is not None:
        return AdjacencyVerdict(True, cert, None)
    midpoint = tuple(Fraction(a + b, 2) for a, b in zip(u, v))
    rest_positions = [i for i, x in enumerate(vert_list) if x != u and x != v]
    rest = [vert_list[i] for i in rest_positions]
    inner = in_convex_hull(midpoint, rest)
    if inner is not None:
        support = tuple((rest_positions[i], w) for i, w in inner.support)
        return AdjacencyVerdict(False, None, HullCertificate(support))
    witness = _segment_witness(u, v, rest)
    if witness is None:
        raise InvariantViolation(
            "non-adjacent pair whose segment avoids the hull of the rest"
        )
    alpha, point, inner_cert = witness
    support = tuple((rest_positions[i], w) for i, w in inner_cert.support)
    return AdjacencyVerdict(
        False, None, None, SegmentCertificate(alpha, point, support)
    )
