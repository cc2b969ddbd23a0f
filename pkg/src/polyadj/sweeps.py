"""Batch experiment drivers.

Each sweep replays one of the package's guaranteed properties across an
instance family and reports failures instead of raising, so a driver
run always completes and the caller decides what a failure means.
Randomized sweeps take explicit seeds; given the same arguments they
revisit exactly the same instances.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .errors import PolytopeError
from .generators import (
    all_graphs,
    odd_index_subsets,
    random_graph,
    random_vertex_set,
    three_ones_matrices,
)
from .hull import (
    are_adjacent,
    enumerate_vertices,
    in_convex_hull,
    in_convex_hull_bruteforce,
    is_face,
)
from .matsui import matsui_check
from .model import BinaryMatrix, Bits, Graph, dcp, npadj, stable
from .simplex import feasible_point
from .reductions import reduction_chain, verify_reduction
from .witness import pair_extension_oracle, refute_face

Progress = Callable[[str], None]


def _tick(progress: Progress | None, message: str) -> None:
    if progress is not None:
        progress(message)


# ---- adjacency criterion sweep --------------------------------------------


@dataclass
class MatsuiSweepResult:
    instances: int = 0
    part_empty_instances: int = 0
    failures: list[BinaryMatrix] = field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        return self.instances > 0 and not self.failures


def matsui_instance_family(
    widths: Sequence[int] = (3, 4, 5), row_counts: Sequence[int] = (1, 2, 3, 4)
) -> list[BinaryMatrix]:
    """The deduplicated sweep family: every row multiset of weight-three
    rows for each width and row count."""
    out: list[BinaryMatrix] = []
    for n in widths:
        for m in row_counts:
            out.extend(three_ones_matrices(n, m))
    return out


def run_matsui_sweep(
    matrices: Iterable[BinaryMatrix],
    *,
    max_dim: int = 24,
    progress: Progress | None = None,
) -> MatsuiSweepResult:
    result = MatsuiSweepResult()
    for a in matrices:
        report = matsui_check(a, max_dim=max_dim)
        result.instances += 1
        if report.part_empty:
            result.part_empty_instances += 1
        if not report.criterion_holds:
            result.failures.append(a)
        if result.instances % 100 == 0:
            _tick(progress, f"checked {result.instances} instances")
    return result


# ---- reduction chain sweep -------------------------------------------------


@dataclass
class ChainSweepResult:
    graphs: int = 0
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        return self.graphs > 0 and not self.failures


def run_chain_sweep(
    vertex_counts: Sequence[int] = (2, 3, 4),
    *,
    max_dim: int = 40,
    progress: Progress | None = None,
) -> ChainSweepResult:
    """Verify every stage and the full composition of the reduction
    chain on every graph with at least one edge, and audit the final
    double-cover matrix shape and row weights."""
    result = ChainSweepResult()
    for nv in vertex_counts:
        for g in all_graphs(nv, min_edges=1):
            result.graphs += 1
            arts = reduction_chain(g)
            stages = (
                ("stable-part", arts.to_part),
                ("part-npadj", arts.to_npadj),
                ("npadj-dcp", arts.to_dcp),
                ("composed", arts.composed),
            )
            for label, art in stages:
                report = verify_reduction(art, max_dim=max_dim)
                result.checks += 1
                if not report.ok:
                    result.failures.append(f"{label} failed on {g}")
            b = arts.to_dcp.target.params
            assert isinstance(b, BinaryMatrix)
            n = nv + g.edge_count
            m = g.edge_count
            if (b.nrows, b.ncols) != (2 * n + m, 3 * n + 5):
                result.failures.append(f"bad double-cover shape on {g}")
            if any(b.row_weight(i) != 4 for i in range(b.nrows)):
                result.failures.append(f"bad double-cover row weight on {g}")
            _tick(progress, f"chain verified on {result.graphs} graphs")
    return result


# ---- hull oracle crosschecks -----------------------------------------------


@dataclass
class HullCrosscheckResult:
    queries: int = 0
    inside_answers: int = 0
    disagreements: int = 0

    @property
    def all_agree(self) -> bool:
        return self.queries > 0 and self.disagreements == 0


def run_hull_crosscheck(
    n_queries: int = 1000,
    *,
    seed: int = 20260819,
    max_dim: int = 4,
    max_vertices: int = 8,
    progress: Progress | None = None,
) -> HullCrosscheckResult:
    """Compare the simplex membership route against the exhaustive
    support-subset oracle on random rational queries."""
    rng = random.Random(seed)
    result = HullCrosscheckResult()
    while result.queries < n_queries:
        d = rng.randint(1, max_dim)
        count = rng.randint(1, min(max_vertices, 1 << d))
        vertices = random_vertex_set(rng, d, count)
        if rng.random() < 0.5:
            # A guaranteed-inside query: a random convex combination.
            weights = [rng.randint(0, 4) for _ in vertices]
            if sum(weights) == 0:
                weights[rng.randrange(len(weights))] = 1
            total = sum(weights)
            point = tuple(
                sum(Fraction(w * x[k], total) for w, x in zip(weights, vertices))
                for k in range(d)
            )
        else:
            point = tuple(Fraction(rng.randint(-2, 6), 4) for _ in range(d))
        fast = in_convex_hull(point, vertices)
        slow = in_convex_hull_bruteforce(point, vertices)
        result.queries += 1
        if fast is not None:
            result.inside_answers += 1
        if (fast is None) != (slow is None):
            result.disagreements += 1
        if result.queries % 200 == 0:
            _tick(progress, f"{result.queries} hull queries")
    return result


@dataclass
class AdjacencyCrosscheckResult:
    vertex_sets: int = 0
    pairs: int = 0
    disagreements: int = 0

    @property
    def all_agree(self) -> bool:
        return self.pairs > 0 and self.disagreements == 0


def _segment_meets_rest(u: Bits, v: Bits, rest: Sequence[Bits]) -> bool:
    """Independent non-adjacency oracle: does the segment [u, v] meet
    conv(rest)?  One feasibility LP over convex weights on rest and a
    two-sided split of the segment point."""
    if not rest:
        return False
    d = len(u)
    nw = len(rest)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for i in range(d):
        row = [Fraction(x[i]) for x in rest]
        row.extend((Fraction(-u[i]), Fraction(-v[i])))
        rows.append(row)
        rhs.append(Fraction(0))
    rows.append([Fraction(1)] * nw + [Fraction(0), Fraction(0)])
    rhs.append(Fraction(1))
    rows.append([Fraction(0)] * nw + [Fraction(1), Fraction(1)])
    rhs.append(Fraction(1))
    return feasible_point(rows, rhs) is not None


def run_adjacency_crosscheck(
    n_sets: int = 100,
    *,
    seed: int = 20260820,
    progress: Progress | None = None,
) -> AdjacencyCrosscheckResult:
    """Compare the face-based adjacency decision against the segment
    criterion (some point of the open segment lies in the hull of the
    other vertices) on every vertex pair of random small vertex sets."""
    rng = random.Random(seed)
    result = AdjacencyCrosscheckResult()
    for _ in range(n_sets):
        d = rng.randint(2, 5)
        count = rng.randint(3, min(10, 1 << d))
        vertices = random_vertex_set(rng, d, count)
        result.vertex_sets += 1
        for u, v in combinations(vertices, 2):
            verdict = are_adjacent(vertices, u, v)
            rest = [x for x in vertices if x != u and x != v]
            by_segment = not _segment_meets_rest(u, v, rest)
            result.pairs += 1
            if verdict.adjacent != by_segment:
                result.disagreements += 1
        _tick(progress, f"{result.vertex_sets} vertex sets")
    return result


def family_vertex_sets(
    *, seed: int = 20260822, max_dim: int = 24
) -> list[tuple[str, list[Bits]]]:
    """At least a hundred vertex sets drawn from the polytope families:
    every stable-set polytope on 3 and 4 vertices, seeded random graphs
    on 5, all single-row double-cover codes of width 4 to 6, and the
    single-row three-ones instances."""
    rng = random.Random(seed)
    sets: list[tuple[str, list[Bits]]] = []
    for nv in (3, 4):
        for g in all_graphs(nv):
            sets.append((f"stable{g}", enumerate_vertices(stable(g), max_dim=max_dim)))
    for _ in range(10):
        g = random_graph(rng, 5)
        sets.append((f"stable{g}", enumerate_vertices(stable(g), max_dim=max_dim)))
    for width in (4, 5, 6):
        for sup in combinations(range(width), 4):
            row = tuple(1 if i in sup else 0 for i in range(width))
            code = dcp(BinaryMatrix.from_rows([row]))
            sets.append((f"dcp{row}", enumerate_vertices(code, max_dim=max_dim)))
    for width in (3, 4):
        for sup in combinations(range(width), 3):
            row = tuple(1 if i in sup else 0 for i in range(width))
            code = npadj(BinaryMatrix.from_rows([row]))
            sets.append((f"npadj{row}", enumerate_vertices(code, max_dim=max_dim)))
    return sets


def run_family_midpoint_sweep(
    *,
    seed: int = 20260822,
    progress: Progress | None = None,
) -> AdjacencyCrosscheckResult:
    """Compare the face-based adjacency decision against the literal
    midpoint criterion on every vertex pair of family-built polytopes,
    where the two are equivalent."""
    result = AdjacencyCrosscheckResult()
    for label, vertices in family_vertex_sets(seed=seed):
        result.vertex_sets += 1
        for u, v in combinations(vertices, 2):
            verdict = are_adjacent(vertices, u, v)
            midpoint = tuple(Fraction(a + b, 2) for a, b in zip(u, v))
            rest = [x for x in vertices if x != u and x != v]
            by_midpoint = (
                in_convex_hull(midpoint, rest) is None if rest else True
            )
            result.pairs += 1
            if verdict.adjacent != by_midpoint:
                result.disagreements += 1
        _tick(progress, f"{result.vertex_sets} family vertex sets")
    return result


# ---- pair extension sweep ----------------------------------------------------


@dataclass
class PairSweepResult:
    graphs: int = 0
    buckets: int = 0
    families: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        return self.families > 0 and not self.failures


def _sum_buckets(vertices: Sequence[Bits]) -> dict[int, list[tuple[int, int]]]:
    """Index pairs grouped by coordinate sum; sums are base-4 packed
    (digits never exceed two, so addition cannot carry)."""
    enc = []
    for x in vertices:
        word = 0
        for i, b in enumerate(x):
            word |= b << (2 * i)
        enc.append(word)
    buckets: dict[int, list[tuple[int, int]]] = {}
    for i in range(len(vertices)):
        ei = enc[i]
        for j in range(i + 1, len(vertices)):
            buckets.setdefault(ei + enc[j], []).append((i, j))
    return buckets


def _decode_sum(key: int, dim: int) -> tuple[int, ...]:
    return tuple((key >> (2 * i)) & 3 for i in range(dim))


def run_pair_extension_sweep(
    exhaustive_max_vertices: int = 6,
    *,
    sampled_sizes: Sequence[int] = (7, 8),
    samples_per_size: int = 5000,
    seed: int = 20260821,
    triple_budget: int = 12,
    random_family_draws: int = 6,
    progress: Progress | None = None,
) -> PairSweepResult:
    """Refute every sampled odd-size family of equal-sum stable pairs.

    Graphs up to the exhaustive bound are enumerated completely; the
    sampled sizes get seeded random graphs.  For each realized sum with
    at least three pairs, odd-size families are drawn (all triples up to
    a budget, the largest odd prefix, and random odd subsets) and
    refute_face must deliver a valid witness for each: in the polytope,
    on the right sum, absent from the inputs, present in the oracle's
    pair list.
    """
    rng = random.Random(seed)
    result = PairSweepResult()

    def visit(g: Graph) -> None:
        result.graphs += 1
        vertices = enumerate_vertices(stable(g))
        vert_set = set(vertices)
        buckets = _sum_buckets(vertices)
        for key, index_pairs in sorted(buckets.items()):
            if len(index_pairs) < 3:
                continue
            result.buckets += 1
            total = _decode_sum(key, g.vertex_count)
            pair_list = [(vertices[i], vertices[j]) for i, j in index_pairs]
            oracle_pairs = {
                frozenset(p) for p in pair_extension_oracle(g, total)
            }
            if {frozenset(p) for p in pair_list} != oracle_pairs:
                result.failures.append(f"oracle disagrees with pair scan on {g} sum {total}")
                continue
            for subset in odd_index_subsets(
                rng,
                len(pair_list),
                exhaustive_triples=triple_budget,
                random_draws=random_family_draws,
            ):
                family = [pair_list[i] for i in subset]
                result.families += 1
                try:
                    refutation = refute_face(g, family)
                except PolytopeError as exc:
                    result.failures.append(f"refutation failed on {g} sum {total}: {exc}")
                    continue
                w = refutation.witness
                new_pair = frozenset((w.y_star, w.y_star_bar))
                if w.y_star not in vert_set or w.y_star_bar not in vert_set:
                    result.failures.append(f"witness outside polytope on {g} sum {total}")
                elif tuple(a + b for a, b in zip(w.y_star, w.y_star_bar)) != total:
                    result.failures.append(f"witness sum mismatch on {g} sum {total}")
                elif any(frozenset(p) == new_pair for p in family):
                    result.failures.append(f"witness repeats an input on {g} sum {total}")
                elif new_pair not in oracle_pairs:
                    result.failures.append(f"witness missing from oracle on {g} sum {total}")
        if result.graphs % 2000 == 0:
            _tick(progress, f"{result.graphs} graphs, {result.families} families")

    for nv in range(2, exhaustive_max_vertices + 1):
        for g in all_graphs(nv):
            visit(g)
    for nv in sampled_sizes:
        for _ in range(samples_per_size):
            visit(random_graph(rng, nv))
    return result


# ---- face corollary sweep ----------------------------------------------------


@dataclass
class FaceCorollaryResult:
    graphs: int = 0
    subsets: int = 0
    counterexamples: list[str] = field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        return self.subsets > 0 and not self.counterexamples


def run_face_corollary_sweep(
    vertex_counts: Sequence[int] = (2, 3, 4, 5, 6),
    *,
    stable_cap: int = 12,
    progress: Progress | None = None,
) -> FaceCorollaryResult:
    """Exhaustively confirm that no odd-size collection of three or more
    distinct equal-sum pairs is the vertex set of a face, over all
    graphs whose stable-set polytope has at most stable_cap vertices."""
    result = FaceCorollaryResult()
    for nv in vertex_counts:
        for g in all_graphs(nv):
            vertices = enumerate_vertices(stable(g))
            if len(vertices) > stable_cap:
                continue
            result.graphs += 1
            buckets = _sum_buckets(vertices)
            for key, index_pairs in sorted(buckets.items()):
                if len(index_pairs) < 3:
                    continue
                for size in range(3, len(index_pairs) + 1, 2):
                    for chosen in combinations(index_pairs, size):
                        face = []
                        for i, j in chosen:
                            face.append(vertices[i])
                            face.append(vertices[j])
                        result.subsets += 1
                        if is_face(face, vertices) is not None:
                            total = _decode_sum(key, g.vertex_count)
                            result.counterexamples.append(
                                f"face of {size} pairs on {g} sum {total}"
                            )
            _tick(progress, f"{result.graphs} graphs, {result.subsets} subsets")
    return result
