"""Witness construction refuting face embeddings of equal-sum pair families.

Given an odd number (at least three) of distinct vertex pairs of a
stable-set polytope, all sharing one coordinate sum, there is always a
further pair with the same sum, built explicitly from the symmetric
difference of three of the family's indicator sets.  Consequence: no
such family is ever the complete vertex set of a face, because the new
pair's midpoint coincides with the family's common midpoint.

The construction: coordinates where the pairs agree are frozen, the
rest form the active set J.  Each pair is oriented by its value at the
smallest active coordinate, giving indicator sets U_i inside J that all
contain that coordinate and are pairwise distinct.  A parity count over
an odd family shows some t >= 2 makes S = U_0 xor U_1 xor U_t distinct
from every U_p and every complement J - U_p; the vertex with active
support S and its counterpart form the new pair, and a swap argument
over the four index classes shows both are stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DegeneratePair,
    DimensionMismatch,
    DuplicatePairs,
    InputError,
    InvariantViolation,
    MembershipViolation,
    NotInStablePolytope,
    TooFewPairs,
    UnequalSums,
)
from .hull import enumerate_vertices
from .model import (
    DEFAULT_ENUMERATION_CAP,
    Bits,
    Graph,
    as_bits,
    membership,
    stable,
    vector_sum,
)

Pair = tuple[Bits, Bits]


def symmetric_difference(x: Iterable[int], y: Iterable[int]) -> frozenset[int]:
    return frozenset(x) ^ frozenset(y)


@dataclass(frozen=True)
class PairFamily:
    """A validated, oriented family of distinct equal-sum stable pairs.

    pairs holds every input pair, oriented so the designated member has
    a one at j0; working counts the prefix actually searched (the whole
    family when its size is odd, one less when even, keeping the parity
    argument available).  fixed is the frozen coordinate set, active its
    complement, and indicator[i] the active support of pair i's
    designated member.
    """

    graph: Graph
    pairs: tuple[Pair, ...]
    total: tuple[int, ...]
    fixed: frozenset[int]
    active: frozenset[int]
    j0: int
    indicator: tuple[frozenset[int], ...]
    k: int
    working: int


@dataclass(frozen=True)
class Witness:
    y_star: Bits
    y_star_bar: Bits
    t: int | None
    s_set: frozenset[int]


@dataclass(frozen=True)
class Refutation:
    family: PairFamily
    witness: Witness
    midpoint: tuple[Fraction, ...]


def build_pair_family(graph: Graph, pairs: Sequence[tuple[Sequence[int], Sequence[int]]]) -> PairFamily:
    """Validate and orient a family of equal-sum stable pairs.

    Checks, in order: at least three pairs, every member a stable-set
    vertex of the graph, equal coordinate sums, pairwise distinct pairs,
    and a nondegenerate lead pair.  The orientation and the indicator
    sets are then forced, no choices remain.
    """
    if len(pairs) < 3:
        raise TooFewPairs(len(pairs))
    code = stable(graph)
    d = graph.vertex_count
    checked: list[Pair] = []
    for idx, (u, v) in enumerate(pairs):
        ub, vb = as_bits(u), as_bits(v)
        if len(ub) != d or len(vb) != d:
            raise DimensionMismatch(d, len(ub) if len(ub) != d else len(vb))
        if not membership(code, ub) or not membership(code, vb):
            raise NotInStablePolytope(idx)
        checked.append((ub, vb))
    if checked[0][0] == checked[0][1]:
        raise DegeneratePair()
    total = vector_sum(*checked[0])
    for idx in range(1, len(checked)):
        if vector_sum(*checked[idx]) != total:
            raise UnequalSums(idx)
    seen: set[frozenset[Bits]] = set()
    for idx, (ub, vb) in enumerate(checked):
        key = frozenset((ub, vb))
        if key in seen:
            raise DuplicatePairs(idx)
        seen.add(key)
    active = frozenset(i for i, s in enumerate(total) if s == 1)
    if not active:
        raise DegeneratePair()
    fixed = frozenset(range(d)) - active
    j0 = min(active)
    oriented = tuple((u, v) if u[j0] == 1 else (v, u) for u, v in checked)
    indicator = tuple(
        frozenset(j for j in active if y[j] == 1) for y, _ in oriented
    )
    working = len(oriented) if len(oriented) % 2 == 1 else len(oriented) - 1
    return PairFamily(
        graph=graph,
        pairs=oriented,
        total=total,
        fixed=fixed,
        active=active,
        j0=j0,
        indicator=indicator,
        k=(working - 1) // 2,
        working=working,
    )


def find_t(family: PairFamily) -> tuple[int, frozenset[int]]:
    """Smallest t in 2..2k with S = U_0 xor U_1 xor U_t distinct from
    every indicator and complement indicator in the whole family.

    For an odd family this always succeeds: at most half the candidate
    indices can collide with an indicator (collisions pair up), and no
    candidate ever collides with a complement because j0 lands in S.
    An even family leaves one pair outside the searched prefix, and a
    collision with that pair alone can be unavoidable; that raises
    InvariantViolation, pointing at the excluded pair.
    """
    u = family.indicator
    active = family.active
    for t in range(2, family.working):
        s = u[0] ^ u[1] ^ u[t]
        if all(s != u[p] and s != active - u[p] for p in range(len(u))):
            return t, s
    if family.working < len(family.pairs):
        raise InvariantViolation(
            "every candidate collides; the excluded even-family pair blocks the search"
        )
    raise InvariantViolation("no valid symmetric difference found in an odd family")


def construct_witness(
    family: PairFamily, s_set: Iterable[int], t: int | None = None
) -> Witness:
    """Build the new pair from an active support set and check both
    members against the stable-set polytope.

    Raises MembershipViolation if either member escapes the polytope,
    which the swap argument rules out for any S produced by find_t.
    """
    s = frozenset(s_set)
    if not s <= family.active:
        raise InputError("witness support must lie inside the active coordinate set")
    lead = family.pairs[0][0]
    d = family.graph.vertex_count
    y_star = tuple(
        lead[i] if i in family.fixed else int(i in s) for i in range(d)
    )
    y_bar = tuple(
        lead[i] if i in family.fixed else int(i in family.active - s) for i in range(d)
    )
    code = stable(family.graph)
    if not membership(code, y_star) or not membership(code, y_bar):
        raise MembershipViolation("constructed pair member is not a stable-set vertex")
    if vector_sum(y_star, y_bar) != family.total:
        raise InvariantViolation("constructed pair breaks the common sum")
    return Witness(y_star=y_star, y_star_bar=y_bar, t=t, s_set=s)


def refute_face(
    graph: Graph, pairs: Sequence[tuple[Sequence[int], Sequence[int]]]
) -> Refutation:
    """Produce a same-sum pair outside the given family.

    The witness shares the family's coordinate sum, so the common
    midpoint lies in the hull of the witness pair; a face containing
    the whole family would have to contain the witness too, hence the
    family is never the complete vertex set of a face.
    """
    family = build_pair_family(graph, pairs)
    t, s = find_t(family)
    witness = construct_witness(family, s, t)
    new_pair = frozenset((witness.y_star, witness.y_star_bar))
    for u, v in family.pairs:
        if frozenset((u, v)) == new_pair:
            raise InvariantViolation("witness pair duplicates an input pair")
    midpoint = tuple(Fraction(v, 2) for v in family.total)
    return Refutation(family=family, witness=witness, midpoint=midpoint)


def pair_extension_oracle(
    graph: Graph, total: Sequence[int], *, max_dim: int = DEFAULT_ENUMERATION_CAP
) -> list[Pair]:
    """All unordered stable-vertex pairs with the given coordinate sum,
    lexicographic by smaller member.

    Linear in the vertex count: each vertex looks up its forced
    counterpart in a hash set.
    """
    d = graph.vertex_count
    if len(total) != d:
        raise DimensionMismatch(d, len(total))
    for v in total:
        if v not in (0, 1, 2):
            raise InputError(f"coordinate sums must be 0, 1, or 2, got {v}")
    verts = enumerate_vertices(stable(graph), max_dim=max_dim)
    vert_set = set(verts)
    out: list[Pair] = []
    for y in verts:
        z = tuple(s - b for s, b in zip(total, y))
        if any(b not in (0, 1) for b in z):
            continue
        if y < z and z in vert_set:
            out.append((y, z))
    return out
