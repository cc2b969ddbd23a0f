"""Vertex-preserving affine reductions between polytope families.

Three building blocks: stable-set polytopes embed into partition
polytopes by appending one slack per edge; partition polytopes embed
into the adjacency family as the coordinate slice y1=0, y2=1, y3=1;
the adjacency family embeds into the double-cover family by pinning
two fresh coordinates a=0, b=1.  Each reduction carries its affine map
and the coordinate fixes that cut its image out of the target, and
composes with the others.

verify_reduction replays a reduction exhaustively on enumerated vertex
sets: the image must equal the declared face slice, the map must be
injective, and the slice must be supported as a face of the target.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CoordinateOutOfRange,
    EmptyGraph,
    EmptyMatrix,
    InputError,
    NoEdges,
    RowWeightNotThree,
)
from .hull import enumerate_vertices, is_face
from .model import (
    DEFAULT_ENUMERATION_CAP,
    AffineMap,
    BinaryMatrix,
    Bits,
    Graph,
    NPadjLayout,
    PolytopeCode,
    dcp,
    dimension,
    npadj,
    part,
    stable,
)


@dataclass(frozen=True)
class ReductionArtifact:
    """A reduction: an affine map onto a coordinate slice of the target.

    face_fixes lists (coordinate, value) pairs; the image of the source
    vertex set is exactly the set of target vertices satisfying them
    (no fixes means the map is onto the whole target vertex set).
    coord_embedding records where each source coordinate reappears in
    the target, which is what lets artifacts compose.
    """

    source: PolytopeCode
    target: PolytopeCode
    amap: AffineMap
    face_fixes: tuple[tuple[int, int], ...]
    coord_embedding: tuple[int, ...]


@dataclass(frozen=True)
class ReductionReport:
    image_equals_face_slice: bool
    injective: bool
    face_is_supported: bool
    source_dim: int
    target_dim: int
    source_code_len: int
    target_code_len: int

    @property
    def ok(self) -> bool:
        return self.image_equals_face_slice and self.injective and self.face_is_supported


def code_len(code: PolytopeCode) -> int:
    """Symbol count of the canonical code encoding: matrix entries for
    matrix families, vertex count plus two endpoints per edge for graphs."""
    if isinstance(code.params, Graph):
        return code.params.vertex_count + 2 * code.params.edge_count
    return code.params.nrows * code.params.ncols


def _require_three_ones(a: BinaryMatrix) -> None:
    if a.nrows == 0:
        raise EmptyMatrix()
    for i in range(a.nrows):
        if a.row_weight(i) != 3:
            raise RowWeightNotThree(i)


def stable_to_part(g: Graph) -> ReductionArtifact:
    """Stable-set polytope onto a whole partition polytope.

    The target matrix has one row per edge {u, v} with ones at u, v, and
    a fresh slack column; a stable vertex x maps to (x, slack) with
    slack_e = 1 - x_u - x_v.  The image is the entire target vertex set,
    so the face fixes are empty.
    """
    if g.vertex_count == 0:
        raise EmptyGraph()
    if g.edge_count == 0:
        raise NoEdges()
    nv, ne = g.vertex_count, g.edge_count
    n = nv + ne
    rows = []
    for e, (u, v) in enumerate(g.edges):
        row = [0] * n
        row[u] = row[v] = 1
        row[nv + e] = 1
        rows.append(tuple(row))
    a = BinaryMatrix(tuple(rows), n)

    map_rows = []
    offset = []
    for i in range(nv):
        row = [0] * nv
        row[i] = 1
        map_rows.append(row)
        offset.append(0)
    for u, v in g.edges:
        row = [0] * nv
        row[u] = -1
        row[v] = -1
        map_rows.append(row)
        offset.append(1)
    return ReductionArtifact(
        source=stable(g),
        target=part(a),
        amap=AffineMap.from_int_rows(map_rows, offset),
        face_fixes=(),
        coord_embedding=tuple(range(nv)),
    )


def part_to_npadj(a: BinaryMatrix) -> ReductionArtifact:
    """Partition polytope onto the y1=0, y2=1, y3=1 slice of the
    adjacency family: z maps to (0,1,1 | z | 1-z | z)."""
    _require_three_ones(a)
    n = a.ncols
    lay = NPadjLayout(n)
    map_rows = [[0] * n for _ in range(lay.dim)]
    offset = [0] * lay.dim
    offset[lay.y2] = 1
    offset[lay.y3] = 1
    for j in range(n):
        map_rows[lay.x(j)][j] = 1
        map_rows[lay.xbar(j)][j] = -1
        offset[lay.xbar(j)] = 1
        map_rows[lay.xprime(j)][j] = 1
    return ReductionArtifact(
        source=part(a),
        target=npadj(a),
        amap=AffineMap.from_int_rows(map_rows, offset),
        face_fixes=((lay.y1, 0), (lay.y2, 1), (lay.y3, 1)),
        coord_embedding=tuple(lay.x(j) for j in range(n)),
    )


def npadj_to_dcp(a: BinaryMatrix) -> ReductionArtifact:
    """Adjacency family onto the a=0, b=1 slice of a double-cover code.

    The target matrix keeps every original weight-four row and replaces
    each pair constraint x_j + xbar_j = 1 with the weight-four row
    a + b + x_j + xbar_j (sum two), pinned by the two fixes.
    """
    _require_three_ones(a)
    n = a.ncols
    lay = NPadjLayout(n)
    target_dim = lay.dim + 2

    def shifted(i: int) -> int:
        return 2 + i

    b_rows = []
    for j in range(n):
        row = [0] * target_dim
        row[0] = row[1] = 1
        row[shifted(lay.x(j))] = 1
        row[shifted(lay.xbar(j))] = 1
        b_rows.append(tuple(row))
        row = [0] * target_dim
        row[shifted(lay.y1)] = 1
        row[shifted(lay.y2)] = 1
        row[shifted(lay.xprime(j))] = 1
        row[shifted(lay.xbar(j))] = 1
        b_rows.append(tuple(row))
    for r in range(a.nrows):
        i, j, k = a.row_support(r)
        row = [0] * target_dim
        row[shifted(lay.y3)] = 1
        row[shifted(lay.x(i))] = 1
        row[shifted(lay.xprime(j))] = 1
        row[shifted(lay.xprime(k))] = 1
        b_rows.append(tuple(row))
    b = BinaryMatrix(tuple(b_rows), target_dim)

    map_rows = [[0] * lay.dim for _ in range(target_dim)]
    offset = [0] * target_dim
    offset[1] = 1
    for i in range(lay.dim):
        map_rows[shifted(i)][i] = 1
    return ReductionArtifact(
        source=npadj(a),
        target=dcp(b),
        amap=AffineMap.from_int_rows(map_rows, offset),
        face_fixes=((0, 0), (1, 1)),
        coord_embedding=tuple(shifted(i) for i in range(lay.dim)),
    )


def compose(first: ReductionArtifact, second: ReductionArtifact) -> ReductionArtifact:
    """The reduction running first, then second.

    Requires second's source code to be first's target code.  First's
    face fixes are pushed through second's coordinate embedding, which
    is exact because every reduction here re-emits its source
    coordinates verbatim somewhere in its target.
    """
    if second.source != first.target:
        raise InputError("reductions do not chain: target and source codes differ")
    fixes = second.face_fixes + tuple(
        (second.coord_embedding[i], v) for i, v in first.face_fixes
    )
    return ReductionArtifact(
        source=first.source,
        target=second.target,
        amap=second.amap.compose(first.amap),
        face_fixes=fixes,
        coord_embedding=tuple(second.coord_embedding[i] for i in first.coord_embedding),
    )


@dataclass(frozen=True)
class ChainArtifacts:
    to_part: ReductionArtifact
    to_npadj: ReductionArtifact
    to_dcp: ReductionArtifact
    composed: ReductionArtifact


def reduction_chain(g: Graph) -> ChainArtifacts:
    """The full pipeline stable -> part -> npadj -> dcp plus its
    composition into a single artifact."""
    s2p = stable_to_part(g)
    assert isinstance(s2p.target.params, BinaryMatrix)
    a = s2p.target.params
    p2n = part_to_npadj(a)
    n2d = npadj_to_dcp(a)
    composed = compose(compose(s2p, p2n), n2d)
    return ChainArtifacts(s2p, p2n, n2d, composed)


def face_slice(
    code: PolytopeCode,
    fixes: tuple[tuple[int, int], ...],
    *,
    max_dim: int = DEFAULT_ENUMERATION_CAP,
) -> list[Bits]:
    """The sublist of enumerate_vertices(code) satisfying every
    coordinate fix, in the same lexicographic order."""
    d = dimension(code)
    for i, v in fixes:
        if not 0 <= i < d:
            raise CoordinateOutOfRange(i, d)
        if v not in (0, 1):
            raise InputError(f"fix value must be 0/1, got {v}")
    verts = enumerate_vertices(code, max_dim=max_dim)
    return [x for x in verts if all(x[i] == v for i, v in fixes)]


def verify_reduction(
    artifact: ReductionArtifact, *, max_dim: int = DEFAULT_ENUMERATION_CAP
) -> ReductionReport:
    """Replay a reduction on full enumerated vertex sets.

    Checks that the image of the source vertex set equals the declared
    face slice of the target, that the map is injective on it, and that
    the slice is supported as a face of the target vertex set.
    """
    source_verts = enumerate_vertices(artifact.source, max_dim=max_dim)
    images = [artifact.amap.apply_bits(x) for x in source_verts]
    injective = len(set(images)) == len(images)
    slice_verts = face_slice(artifact.target, artifact.face_fixes, max_dim=max_dim)
    image_equals = sorted(set(images)) == slice_verts
    target_verts = enumerate_vertices(artifact.target, max_dim=max_dim)
    supported = is_face(slice_verts, target_verts) is not None
    return ReductionReport(
        image_equals_face_slice=image_equals,
        injective=injective,
        face_is_supported=supported,
        source_dim=dimension(artifact.source),
        target_dim=dimension(artifact.target),
        source_code_len=code_len(artifact.source),
        target_code_len=code_len(artifact.target),
    )
