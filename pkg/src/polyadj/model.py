"""Polytope codes, coordinate layouts, and exact membership predicates.

A code names one of six families of 0/1-polytopes: covering, packing,
and partition polytopes of a 0/1 matrix, stable-set polytopes of a
graph, the double-cover family (rows of weight four, row sums pinned to
two), and the adjacency family built from a matrix with weight-three
rows.  Every code determines an ambient dimension and a membership
predicate over {0,1}^d; the polytope is the convex hull of the members,
and each member is a vertex of that hull.

All arithmetic in this package is exact.  Rational values are
fractions.Fraction throughout, which keeps every number in lowest terms
with a positive denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .errors import (
    CoordinateOutOfRange,
    DcpRowWeight,
    DimensionMismatch,
    EmptyMatrix,
    InputError,
    InvariantViolation,
    NPadjEmptyMatrix,
    NPadjRowWeight,
)

Bits = tuple[int, ...]
RatVector = tuple[Fraction, ...]

DEFAULT_ENUMERATION_CAP = 24

FAMILIES = ("cover", "pack", "part", "stable", "dcp", "npadj")


def as_bits(values: Iterable[int]) -> Bits:
    """Coerce to a tuple of 0/1 ints, rejecting anything else."""
    bits = tuple(int(v) for v in values)
    for b in bits:
        if b not in (0, 1):
            raise InputError(f"not a 0/1 vector: contains {b}")
    return bits


def complement(x: Bits) -> Bits:
    return tuple(1 - b for b in x)


def vector_sum(x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
    if len(x) != len(y):
        raise DimensionMismatch(len(x), len(y))
    return tuple(a + b for a, b in zip(x, y))


def bits_from_int(word: int, dim: int) -> Bits:
    """Unpack an integer into a bit vector, coordinate 0 most significant."""
    return tuple((word >> (dim - 1 - i)) & 1 for i in range(dim))


def bits_to_int(x: Bits) -> int:
    word = 0
    for b in x:
        word = (word << 1) | b
    return word


# ---- matrices and graphs -------------------------------------------------


@dataclass(frozen=True)
class BinaryMatrix:
    """A 0/1 matrix with m >= 0 rows and n >= 1 columns."""

    rows: tuple[Bits, ...]
    ncols: int

    def __post_init__(self) -> None:
        if self.ncols < 1:
            raise InputError("matrix needs at least one column")
        for row in self.rows:
            if len(row) != self.ncols:
                raise DimensionMismatch(self.ncols, len(row))
            for v in row:
                if v not in (0, 1):
                    raise InputError(f"matrix entries must be 0/1, got {v}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], ncols: int | None = None) -> "BinaryMatrix":
        tup = tuple(tuple(int(v) for v in row) for row in rows)
        if ncols is None:
            if not tup:
                raise EmptyMatrix()
            ncols = len(tup[0])
        return cls(tup, ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def row_support(self, i: int) -> tuple[int, ...]:
        return tuple(j for j, v in enumerate(self.rows[i]) if v)

    def row_weight(self, i: int) -> int:
        return sum(self.rows[i])


@dataclass(frozen=True)
class Graph:
    """An undirected graph on vertices 0..vertex_count-1.

    Edges are stored normalized (u < v) and sorted, so two graphs with
    the same edge set compare and hash equal regardless of input order.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise InputError("vertex count must be nonnegative")
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < v < self.vertex_count):
                raise InputError(f"edge ({u}, {v}) is not a normalized pair of distinct vertices")
            if (u, v) in seen:
                raise InputError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        normalized = set()
        for u, v in edges:
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            normalized.add((min(u, v), max(u, v)))
        return cls(vertex_count, tuple(sorted(normalized)))

    @property
    def edge_count(self) -> int:
        return len(self.edges)


CodeParams = Union[BinaryMatrix, Graph]


@dataclass(frozen=True)
class PolytopeCode:
    family: str
    params: CodeParams


def cover(a: BinaryMatrix) -> PolytopeCode:
    return PolytopeCode("cover", a)


def pack(a: BinaryMatrix) -> PolytopeCode:
    return PolytopeCode("pack", a)


def part(a: BinaryMatrix) -> PolytopeCode:
    return PolytopeCode("part", a)


def stable(g: Graph) -> PolytopeCode:
    return PolytopeCode("stable", g)


def dcp(b: BinaryMatrix) -> PolytopeCode:
    return PolytopeCode("dcp", b)


def npadj(a: BinaryMatrix) -> PolytopeCode:
    return PolytopeCode("npadj", a)


def validate_code(code: PolytopeCode) -> None:
    """Raise on the first violated family invariant.

    The double-cover family needs every row weight to be exactly four;
    the adjacency family needs a nonempty matrix of weight-three rows.
    The remaining families accept any 0/1 matrix or graph.
    """
    if code.family not in FAMILIES:
        raise InputError(f"unknown family {code.family!r}")
    if code.family == "stable":
        if not isinstance(code.params, Graph):
            raise InputError("stable codes take a graph")
        return
    if not isinstance(code.params, BinaryMatrix):
        raise InputError(f"{code.family} codes take a 0/1 matrix")
    a = code.params
    if code.family == "dcp":
        for i in range(a.nrows):
            if a.row_weight(i) != 4:
                raise DcpRowWeight(i)
    elif code.family == "npadj":
        if a.nrows == 0:
            raise NPadjEmptyMatrix()
        for i in range(a.nrows):
            if a.row_weight(i) != 3:
                raise NPadjRowWeight(i)


def dimension(code: PolytopeCode) -> int:
    validate_code(code)
    if code.family == "stable":
        assert isinstance(code.params, Graph)
        return code.params.vertex_count
    assert isinstance(code.params, BinaryMatrix)
    if code.family == "npadj":
        return 3 * code.params.ncols + 3
    return code.params.ncols


# ---- coordinate layouts --------------------------------------------------


@dataclass(frozen=True)
class NPadjLayout:
    """Coordinate layout of the adjacency family in dimension 3n + 3.

    Order: the three selector coordinates y1 y2 y3, then the n primal
    coordinates x_j, then their complements xbar_j, then the shadow
    copies xp_j.
    """

    n: int

    @property
    def dim(self) -> int:
        return 3 * self.n + 3

    y1 = 0
    y2 = 1
    y3 = 2

    def x(self, j: int) -> int:
        self._check(j)
        return 3 + j

    def xbar(self, j: int) -> int:
        self._check(j)
        return 3 + self.n + j

    def xprime(self, j: int) -> int:
        self._check(j)
        return 3 + 2 * self.n + j

    def _check(self, j: int) -> None:
        if not 0 <= j < self.n:
            raise CoordinateOutOfRange(j, self.n)

    def name(self, index: int) -> str:
        if not 0 <= index < self.dim:
            raise CoordinateOutOfRange(index, self.dim)
        if index < 3:
            return ("y1", "y2", "y3")[index]
        block, j = divmod(index - 3, self.n)
        prefix = ("x", "xbar", "xp")[block]
        return f"{prefix}{j + 1}"

    def index(self, name: str) -> int:
        if name in ("y1", "y2", "y3"):
            return ("y1", "y2", "y3").index(name)
        for prefix, block in (("xbar", 1), ("xp", 2), ("x", 0)):
            if name.startswith(prefix) and name[len(prefix):].isdigit():
                j = int(name[len(prefix):]) - 1
                self._check(j)
                return 3 + block * self.n + j
        raise InputError(f"unknown coordinate name {name!r}")


@dataclass(frozen=True)
class DcpLayout:
    """Double-cover layout: two pin coordinates a, b, then an adjacency
    layout shifted by two."""

    n: int

    a = 0
    b = 1

    @property
    def dim(self) -> int:
        return 3 * self.n + 5

    @property
    def inner(self) -> NPadjLayout:
        return NPadjLayout(self.n)

    def shifted(self, inner_index: int) -> int:
        return 2 + inner_index

    def name(self, index: int) -> str:
        if not 0 <= index < self.dim:
            raise CoordinateOutOfRange(index, self.dim)
        if index == 0:
            return "a"
        if index == 1:
            return "b"
        return self.inner.name(index - 2)

    def index(self, name: str) -> int:
        if name == "a":
            return 0
        if name == "b":
            return 1
        return 2 + self.inner.index(name)


# ---- membership ----------------------------------------------------------

# A constraint is a popcount window: the sum of the supported
# coordinates must land in [lo, hi].
ConstraintRow = tuple[tuple[int, ...], int, int]


@lru_cache(maxsize=4096)
def constraint_rows(code: PolytopeCode) -> tuple[ConstraintRow, ...]:
    """Compile a code into popcount-window constraints over its layout."""
    validate_code(code)
    if code.family == "stable":
        assert isinstance(code.params, Graph)
        return tuple(((u, v), 0, 1) for u, v in code.params.edges)
    assert isinstance(code.params, BinaryMatrix)
    a = code.params
    if code.family == "cover":
        return tuple((a.row_support(i), 1, a.row_weight(i)) for i in range(a.nrows))
    if code.family == "pack":
        return tuple((a.row_support(i), 0, 1) for i in range(a.nrows))
    if code.family == "part":
        return tuple((a.row_support(i), 1, 1) for i in range(a.nrows))
    if code.family == "dcp":
        return tuple((a.row_support(i), 2, 2) for i in range(a.nrows))
    # adjacency family: per column j, the pair x_j + xbar_j = 1 and the
    # selector row y1 + y2 + xp_j + xbar_j = 2; per matrix row with
    # support {i < j < k}, the row y3 + x_i + xp_j + xp_k = 2 (the
    # smallest index takes the primal role).
    lay = NPadjLayout(a.ncols)
    rows: list[ConstraintRow] = []
    for j in range(a.ncols):
        rows.append(((lay.x(j), lay.xbar(j)), 1, 1))
        rows.append(((lay.y1, lay.y2, lay.xprime(j), lay.xbar(j)), 2, 2))
    for r in range(a.nrows):
        i, j, k = a.row_support(r)
        rows.append(((lay.y3, lay.x(i), lay.xprime(j), lay.xprime(k)), 2, 2))
    return tuple(rows)


def membership(code: PolytopeCode, x: Sequence[int]) -> bool:
    """Exact membership of a 0/1 point in the coded polytope's vertex set."""
    d = dimension(code)
    if len(x) != d:
        raise DimensionMismatch(d, len(x))
    for support, lo, hi in constraint_rows(code):
        s = 0
        for i in support:
            s += x[i]
        if s < lo or s > hi:
            return False
    return True


# ---- affine maps ----------------------------------------------------------


@dataclass(frozen=True)
class AffineMap:
    """An exact affine map x -> T x + c over the rationals."""

    matrix: tuple[RatVector, ...]
    offset: RatVector

    def __post_init__(self) -> None:
        if len(self.matrix) != len(self.offset):
            raise DimensionMismatch(len(self.matrix), len(self.offset))
        widths = {len(row) for row in self.matrix}
        if len(widths) > 1:
            raise InputError("ragged affine map matrix")

    @classmethod
    def from_int_rows(cls, rows: Iterable[Iterable[int]], offset: Iterable[int]) -> "AffineMap":
        return cls(
            tuple(tuple(Fraction(v) for v in row) for row in rows),
            tuple(Fraction(v) for v in offset),
        )

    @classmethod
    def identity(cls, dim: int) -> "AffineMap":
        return cls(
            tuple(tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)),
            tuple(Fraction(0) for _ in range(dim)),
        )

    @property
    def source_dim(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    @property
    def target_dim(self) -> int:
        return len(self.matrix)

    def apply(self, x: Sequence) -> RatVector:
        if len(x) != self.source_dim:
            raise DimensionMismatch(self.source_dim, len(x))
        out = []
        for row, c in zip(self.matrix, self.offset):
            acc = c
            for t, v in zip(row, x):
                if t and v:
                    acc += t * v
            out.append(acc)
        return tuple(out)

    def apply_bits(self, x: Sequence[int]) -> Bits:
        """Apply and demand a 0/1 image.

        Reduction maps built by this package send 0/1 vertices to 0/1
        vertices; a non-integral image means the map is broken.
        """
        image = self.apply(x)
        bits = []
        for v in image:
            if v == 0:
                bits.append(0)
            elif v == 1:
                bits.append(1)
            else:
                raise InvariantViolation(f"affine image is not 0/1: coordinate value {v}")
        return tuple(bits)

    def compose(self, inner: "AffineMap") -> "AffineMap":
        """The map x -> self(inner(x))."""
        if inner.target_dim != self.source_dim:
            raise DimensionMismatch(self.source_dim, inner.target_dim)
        rows = []
        for row in self.matrix:
            rows.append(
                tuple(
                    sum((row[k] * inner.matrix[k][j] for k in range(self.source_dim)), Fraction(0))
                    for j in range(inner.source_dim)
                )
            )
        off = tuple(
            sum((row[k] * inner.offset[k] for k in range(self.source_dim)), c)
            for row, c in zip(self.matrix, self.offset)
        )
        return AffineMap(tuple(rows), off)


def apply_affine(amap: AffineMap, x: Sequence) -> RatVector:
    return amap.apply(x)
