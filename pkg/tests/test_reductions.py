import dataclasses

import pytest

from polyadj.errors import (
    CoordinateOutOfRange,
    EmptyGraph,
    EmptyMatrix,
    InputError,
    NoEdges,
    RowWeightNotThree,
)
from polyadj.hull import enumerate_vertices
from polyadj.model import AffineMap, BinaryMatrix, Graph
from polyadj.reductions import (
    compose,
    face_slice,
    npadj_to_dcp,
    part_to_npadj,
    reduction_chain,
    stable_to_part,
    verify_reduction,
)

EDGE = Graph.from_edges(2, [(0, 1)])
PATH3 = Graph.from_edges(3, [(0, 1), (1, 2)])


def test_stable_to_part_single_edge():
    art = stable_to_part(EDGE)
    assert art.target.family == "part"
    assert art.target.params.rows == ((1, 1, 1),)
    report = verify_reduction(art)
    assert report.ok
    assert report.source_dim == 2 and report.target_dim == 3


def test_stable_to_part_path():
    art = stable_to_part(PATH3)
    assert art.target.params.rows == ((1, 1, 0, 1, 0), (0, 1, 1, 0, 1))
    assert verify_reduction(art).ok


def test_stable_to_part_images_extend_with_slacks():
    art = stable_to_part(PATH3)
    image = art.amap.apply_bits((1, 0, 1))
    assert image == (1, 0, 1, 0, 0)
    image = art.amap.apply_bits((0, 0, 0))
    assert image == (0, 0, 0, 1, 1)


def test_part_to_npadj_structure():
    a = BinaryMatrix.from_rows([[1, 1, 1]])
    art = part_to_npadj(a)
    assert art.target.family == "npadj"
    assert art.face_fixes == ((0, 0), (1, 1), (2, 1))
    image = art.amap.apply_bits((0, 1, 0))
    # Selector pattern, primal copy, complement, shadow copy.
    assert image == (0, 1, 1) + (0, 1, 0) + (1, 0, 1) + (0, 1, 0)
    assert verify_reduction(art).ok


def test_npadj_to_dcp_shape_and_weights():
    a = BinaryMatrix.from_rows([[1, 1, 1, 0], [0, 1, 1, 1]])
    art = npadj_to_dcp(a)
    b = art.target.params
    n, m = a.ncols, a.nrows
    assert (b.nrows, b.ncols) == (2 * n + m, 3 * n + 5)
    assert all(b.row_weight(i) == 4 for i in range(b.nrows))
    assert art.face_fixes == ((0, 0), (1, 1))


def test_chain_on_single_edge():
    arts = reduction_chain(EDGE)
    b = arts.composed.target.params
    assert (b.nrows, b.ncols) == (7, 14)
    for art in (arts.to_part, arts.to_npadj, arts.to_dcp, arts.composed):
        assert verify_reduction(art, max_dim=40).ok


def test_chain_on_path():
    arts = reduction_chain(PATH3)
    b = arts.composed.target.params
    # n = 3 vertices + 2 slack columns, m = 2 rows.
    assert (b.nrows, b.ncols) == (12, 20)
    assert verify_reduction(arts.composed, max_dim=40).ok


def test_composed_fixes_accumulate():
    arts = reduction_chain(EDGE)
    assert arts.composed.face_fixes == ((0, 0), (1, 1), (2, 0), (3, 1), (4, 1))


def test_input_errors():
    with pytest.raises(NoEdges):
        stable_to_part(Graph.from_edges(3, []))
    with pytest.raises(EmptyGraph):
        stable_to_part(Graph.from_edges(0, []))
    with pytest.raises(RowWeightNotThree):
        part_to_npadj(BinaryMatrix.from_rows([[1, 1, 0]]))
    with pytest.raises(RowWeightNotThree):
        npadj_to_dcp(BinaryMatrix.from_rows([[1, 1, 1, 1]]))
    with pytest.raises(EmptyMatrix):
        part_to_npadj(BinaryMatrix((), 3))


def test_compose_requires_matching_codes():
    first = stable_to_part(EDGE)
    other = stable_to_part(PATH3)
    with pytest.raises(InputError):
        compose(other, part_to_npadj(first.target.params))


def test_face_slice_selects_fixed_coordinates():
    a = BinaryMatrix.from_rows([[1, 1, 1]])
    art = part_to_npadj(a)
    verts = enumerate_vertices(art.target)
    sliced = face_slice(art.target, art.face_fixes)
    assert sliced == sorted(x for x in verts if x[0] == 0 and x[1] == 1 and x[2] == 1)
    with pytest.raises(CoordinateOutOfRange):
        face_slice(art.target, ((99, 0),))


def test_corrupted_map_fails_verification():
    art = stable_to_part(EDGE)
    zero = AffineMap.from_int_rows(
        [(0, 0)] * art.amap.target_dim, (0,) * art.amap.target_dim
    )
    broken = dataclasses.replace(art, amap=zero)
    assert not verify_reduction(broken).ok


def test_corrupted_fixes_fail_verification():
    a = BinaryMatrix.from_rows([[1, 1, 1]])
    art = part_to_npadj(a)
    broken = dataclasses.replace(art, face_fixes=((0, 1), (1, 0), (2, 0)))
    assert not verify_reduction(broken).ok
