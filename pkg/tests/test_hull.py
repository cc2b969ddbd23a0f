import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyadj.errors import (
    DimensionCapExceeded,
    EqualVertices,
    InvalidCertificate,
    NotASubset,
    VertexNotInSet,
)
from polyadj.generators import random_vertex_set
from polyadj.hull import (
    HullCertificate,
    are_adjacent,
    caratheodory_reduce,
    enumerate_vertices,
    in_convex_hull,
    in_convex_hull_bruteforce,
    is_face,
    verify_face_certificate,
    verify_hull_certificate,
)
from polyadj.model import (
    BinaryMatrix,
    Graph,
    bits_from_int,
    dcp,
    dimension,
    membership,
    npadj,
    part,
    stable,
)

OCTA = dcp(BinaryMatrix.from_rows([[1, 1, 1, 1]]))


def test_enumeration_is_lexicographic():
    verts = enumerate_vertices(OCTA)
    assert verts == sorted(verts)
    assert len(verts) == 6


def test_enumeration_matches_direct_scan():
    # Independent oracle: test every point of the cube via membership.
    a = BinaryMatrix.from_rows([[1, 1, 1]])
    code = npadj(a)
    d = dimension(code)
    scan = [bits_from_int(w, d) for w in range(1 << d)]
    expected = [x for x in scan if membership(code, x)]
    assert enumerate_vertices(code) == expected
    assert len(expected) == 14


def test_enumeration_cap():
    a = BinaryMatrix.from_rows([[1, 1, 1, 0, 0, 0, 0, 0]])
    code = npadj(a)
    with pytest.raises(DimensionCapExceeded):
        enumerate_vertices(code)
    verts = enumerate_vertices(code, max_dim=27)
    assert len(verts) == 2 + 4 * 96


def test_in_convex_hull_inside():
    verts = [(0, 0), (1, 1)]
    cert = in_convex_hull((Fraction(1, 2), Fraction(1, 2)), verts)
    assert cert is not None
    verify_hull_certificate((Fraction(1, 2), Fraction(1, 2)), verts, cert)


def test_in_convex_hull_outside():
    verts = [(0, 0), (1, 1)]
    assert in_convex_hull((Fraction(3, 4), Fraction(1, 4)), verts) is None
    assert in_convex_hull_bruteforce((Fraction(3, 4), Fraction(1, 4)), verts) is None


def test_hull_certificate_rejects_tampering():
    verts = [(0, 0), (1, 1)]
    point = (Fraction(1, 2), Fraction(1, 2))
    cert = in_convex_hull(point, verts)
    bad = HullCertificate(((0, Fraction(1, 4)), (1, Fraction(1, 2))))
    with pytest.raises(InvalidCertificate):
        verify_hull_certificate(point, verts, bad)
    good = HullCertificate(cert.support)
    verify_hull_certificate(point, verts, good)


def test_caratheodory_reduces_octahedron_center():
    verts = enumerate_vertices(OCTA)
    center = tuple(Fraction(1, 2) for _ in range(4))
    fat = HullCertificate(tuple((i, Fraction(1, 6)) for i in range(6)))
    verify_hull_certificate(center, verts, fat)
    slim = caratheodory_reduce(center, verts, fat)
    assert len(slim.support) <= 5
    verify_hull_certificate(center, verts, slim)


def test_caratheodory_reduces_dependent_square():
    verts = [(0, 0), (0, 1), (1, 0), (1, 1)]
    center = (Fraction(1, 2), Fraction(1, 2))
    fat = HullCertificate(tuple((i, Fraction(1, 4)) for i in range(4)))
    slim = caratheodory_reduce(center, verts, fat)
    assert len(slim.support) <= 3
    verify_hull_certificate(center, verts, slim)


def test_is_face_empty_and_improper():
    verts = enumerate_vertices(OCTA)
    empty = is_face([], verts)
    assert empty is not None and empty.offset == 1
    whole = is_face(verts, verts)
    assert whole is not None and whole.offset == 0
    assert all(c == 0 for c in whole.normal)


def test_is_face_slice():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    verts = enumerate_vertices(stable(g))
    face = [x for x in verts if x[0] == 1]
    cert = is_face(face, verts)
    assert cert is not None
    verify_face_certificate(face, verts, cert)


def test_is_face_rejects_diagonal_pair():
    verts = enumerate_vertices(OCTA)
    pair = [(1, 1, 0, 0), (0, 0, 1, 1)]
    assert is_face(pair, verts) is None


def test_is_face_rejects_non_subset():
    verts = enumerate_vertices(OCTA)
    with pytest.raises(NotASubset):
        is_face([(1, 0, 0, 0)], verts)


def test_is_face_rejects_duplicates():
    verts = enumerate_vertices(OCTA)
    with pytest.raises(InvalidCertificate):
        is_face([verts[0], verts[0]], verts)


def test_octahedron_adjacency_pattern():
    verts = enumerate_vertices(OCTA)
    for u, v in combinations(verts, 2):
        verdict = are_adjacent(verts, u, v)
        complementary = all(a + b == 1 for a, b in zip(u, v))
        assert verdict.adjacent == (not complementary)
        if verdict.adjacent:
            verify_face_certificate([u, v], verts, verdict.face_certificate)
        else:
            assert verdict.midpoint_certificate is not None
            midpoint = tuple(Fraction(a + b, 2) for a, b in zip(u, v))
            rest = [x for x in verts if x != u and x != v]
            support = tuple(
                (rest.index(verts[i]), w)
                for i, w in verdict.midpoint_certificate.support
            )
            verify_hull_certificate(midpoint, rest, HullCertificate(support))


def test_adjacency_argument_errors():
    verts = enumerate_vertices(OCTA)
    with pytest.raises(EqualVertices):
        are_adjacent(verts, verts[0], verts[0])
    with pytest.raises(VertexNotInSet):
        are_adjacent(verts, verts[0], (1, 0, 0, 0))


def test_segment_fallback_without_midpoint_symmetry():
    # The midpoint criterion fails on this vertex set: 000 and 111 are
    # not adjacent, yet their midpoint misses the hull of the rest.  The
    # segment meets that hull only at (1/3, 1/3, 1/3).
    verts = [(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)]
    verdict = are_adjacent(verts, (0, 0, 0), (1, 1, 1))
    assert not verdict.adjacent
    assert verdict.midpoint_certificate is None
    seg = verdict.segment_certificate
    assert seg is not None
    assert seg.alpha == Fraction(2, 3)
    assert seg.point == (Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))
    weights = dict(seg.support)
    assert set(weights) == {1, 2, 3}
    assert all(w == Fraction(1, 3) for w in weights.values())


def test_part_simplex_all_pairs_adjacent():
    verts = enumerate_vertices(part(BinaryMatrix.from_rows([[1, 1, 1]])))
    for u, v in combinations(verts, 2):
        assert are_adjacent(verts, u, v).adjacent


@given(st.integers(min_value=1, max_value=4), st.data())
def test_hull_routes_agree(d, data):
    seed = data.draw(st.integers(min_value=0, max_value=10_000))
    rng = random.Random(seed)
    count = rng.randint(1, min(6, 1 << d))
    verts = random_vertex_set(rng, d, count)
    point = tuple(Fraction(rng.randint(-2, 6), 4) for _ in range(d))
    fast = in_convex_hull(point, verts)
    slow = in_convex_hull_bruteforce(point, verts)
    assert (fast is None) == (slow is None)


@given(st.integers(min_value=2, max_value=4), st.data())
def test_coordinate_slices_are_faces(d, data):
    seed = data.draw(st.integers(min_value=0, max_value=10_000))
    rng = random.Random(seed)
    count = rng.randint(2, min(8, 1 << d))
    verts = random_vertex_set(rng, d, count)
    coord = rng.randrange(d)
    value = rng.randint(0, 1)
    face = [x for x in verts if x[coord] == value]
    # A coordinate slice is always a face: the hyperplane fixing that
    # coordinate supports it exactly.
    cert = is_face(face, verts)
    assert cert is not None
    verify_face_certificate(face, verts, cert)
