"""Degree sequences of r-uniform hypergraphs via majorization.

Order the r-element subsets of [n] coordinatewise, each subset written in
increasing order.  Edge sets that are downward closed ("r-ideals") have
weakly decreasing degree sequences, and a partition with total divisible
by r is the degree sequence of some r-graph exactly when an r-ideal
partition with the same total majorizes it.

Both directions of that test are constructive here.  Downward: a
Muirhead chain of unit transfers (move one unit from a vertex whose
degree exceeds another's by at least two) walks any majorizing partition
to the target, and each transfer is realized on the hypergraph by a
single edge swap.  Upward: reverse saturation greedily applies the
opposite transfers until none applies, after which relabeling by weakly
decreasing degree leaves an r-ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

from .core import (
    IntSequence,
    Partition,
    check_partition,
    is_weakly_decreasing,
    majorizes,
    prefix_sums,
    sort_decreasing,
)

RSubset = tuple[int, ...]

# Poset-wide enumerations stay tractable while C(n, r) is small.
POSET_SIZE_BOUND = 20


def r_subsets(n: int, r: int) -> tuple[RSubset, ...]:
    """All r-element subsets of [n] as increasing tuples, lexicographic."""
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    return tuple(combinations(range(1, n + 1), r))


def subset_lower_covers(subset: RSubset) -> Iterator[RSubset]:
    """Decrement one coordinate, keeping the tuple strictly increasing."""
    for p, v in enumerate(subset):
        floor = subset[p - 1] if p else 0
        if v - 1 > floor:
            yield subset[:p] + (v - 1,) + subset[p + 1 :]


@dataclass(frozen=True)
class RGraph:
    """An r-uniform hypergraph on [n]; edges stored sorted."""

    n: int
    r: int
    edges: frozenset[RSubset]

    def __post_init__(self) -> None:
        if not 1 <= self.r <= self.n:
            raise ValueError(f"need 1 <= r <= n, got r={self.r}, n={self.n}")
        normalized = set()
        for edge in self.edges:
            e = tuple(sorted(edge))
            if len(e) != self.r or len(set(e)) != self.r:
                raise ValueError(f"not an {self.r}-subset: {edge!r}")
            if not (1 <= e[0] and e[-1] <= self.n):
                raise ValueError(f"edge {edge!r} leaves [{self.n}]")
            normalized.add(e)
        object.__setattr__(self, "edges", frozenset(normalized))


def degree_sequence(graph: RGraph) -> IntSequence:
    """Vertex degrees in label order 1..n (not sorted)."""
    deg = [0] * graph.n
    for edge in graph.edges:
        for v in edge:
            deg[v - 1] += 1
    return tuple(deg)


def is_r_ideal(graph: RGraph) -> bool:
    """Is the edge set downward closed in the coordinatewise order?

    Single-coordinate decrements generate the order, so checking lower
    covers of every edge suffices.
    """
    return all(
        cover in graph.edges
        for edge in graph.edges
        for cover in subset_lower_covers(edge)
    )


@dataclass(frozen=True)
class UnitTransformation:
    """Move one unit of degree from ``source`` to ``target`` (1-based)."""

    source: int
    target: int


def apply_unit_transformation(a: Sequence[int], step: UnitTransformation) -> IntSequence:
    """Requires the source to exceed the target by at least two."""
    src, tgt = step.source, step.target
    if src == tgt or not (1 <= src <= len(a) and 1 <= tgt <= len(a)):
        raise ValueError(f"bad transfer indices {step!r} for length {len(a)}")
    if a[src - 1] < a[tgt - 1] + 2:
        raise ValueError(
            f"transfer needs a[{src}] >= a[{tgt}] + 2, got {a[src - 1]} and {a[tgt - 1]}"
        )
    out = list(a)
    out[src - 1] -= 1
    out[tgt - 1] += 1
    return tuple(out)


def muirhead_chain(a: Sequence[int], b: Sequence[int]) -> tuple[UnitTransformation, ...]:
    """Unit transfers carrying ``a`` to a rearrangement of ``b``.

    Requires ``a`` to majorize ``b``.  Each step views the current
    sequence in sorted order (ties broken by position), takes the first
    sorted position where the prefix sums strictly exceed those of the
    sorted target as the source and the first valuewise deficit as the
    target; majorization makes the source at least two larger.
    """
    if not majorizes(a, b):
        raise ValueError("chain construction needs the start to majorize the goal")
    cur = list(a)
    goal = sort_decreasing(b)
    goal_prefix = prefix_sums(goal)
    chain: list[UnitTransformation] = []
    while sort_decreasing(cur) != goal:
        order = sorted(range(len(cur)), key=lambda p: (-cur[p], p))
        vals = [cur[p] for p in order]
        val_prefix = prefix_sums(vals)
        src_pos = next(t for t in range(len(cur)) if val_prefix[t] > goal_prefix[t])
        tgt_pos = next(t for t in range(len(cur)) if vals[t] < goal[t])
        step = UnitTransformation(order[src_pos] + 1, order[tgt_pos] + 1)
        chain.append(step)
        cur[order[src_pos]] -= 1
        cur[order[tgt_pos]] += 1
    return tuple(chain)


def reverse_saturate(graph: RGraph) -> tuple[RGraph, tuple[int, ...]]:
    """Push degree upward in majorization until no reverse transfer applies.

    A reverse transfer takes vertices i != j with deg(i) >= deg(j) and an
    (r-1)-subset X avoiding both such that X + {i} is a non-edge while
    X + {j} is an edge, then swaps the two; the degree sequence strictly
    rises in majorization.  Moves are applied first-in-lexicographic
    (i, j, X) order.  Returns the stable graph in the original labels
    together with the vertices listed in weakly decreasing degree order
    (ties by label); relabeling along that order yields an r-ideal.
    """
    n, r = graph.n, graph.r
    edges = set(graph.edges)
    contexts = tuple(combinations(range(1, n + 1), r - 1))
    deg = list(degree_sequence(graph))
    budget = sum(deg) * n * comb(n, r) + 1
    for _ in range(budget):
        move = None
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j or deg[i - 1] < deg[j - 1]:
                    continue
                for ctx in contexts:
                    if i in ctx or j in ctx:
                        continue
                    with_i = tuple(sorted(ctx + (i,)))
                    if with_i in edges:
                        continue
                    with_j = tuple(sorted(ctx + (j,)))
                    if with_j in edges:
                        move = (i, j, with_i, with_j)
                        break
                if move:
                    break
            if move:
                break
        if move is None:
            order = tuple(sorted(range(1, n + 1), key=lambda v: (-deg[v - 1], v)))
            return RGraph(n, r, frozenset(edges)), order
        i, j, with_i, with_j = move
        edges.remove(with_j)
        edges.add(with_i)
        deg[i - 1] += 1
        deg[j - 1] -= 1
    raise AssertionError(f"saturation exceeded its move budget of {budget}")


def relabel_rgraph(graph: RGraph, order: Sequence[int]) -> RGraph:
    """Give the vertex ``order[k]`` the new label k+1."""
    if sorted(order) != list(range(1, graph.n + 1)):
        raise ValueError(f"not a permutation of [{graph.n}]: {order!r}")
    new_label = {v: k + 1 for k, v in enumerate(order)}
    return RGraph(
        graph.n,
        graph.r,
        frozenset(tuple(sorted(new_label[v] for v in edge)) for edge in graph.edges),
    )


@lru_cache(maxsize=None)
def enumerate_r_ideals(n: int, r: int) -> tuple[frozenset[RSubset], ...]:
    """Every downward-closed edge set of the r-subset poset.

    Lexicographic order on subsets extends the coordinatewise order, so a
    depth-first include/exclude scan along it, where a subset may be
    included only once all its lower covers are in, visits each ideal
    exactly once.  Capped at C(n, r) <= 20 poset elements.
    """
    if comb(n, r) > POSET_SIZE_BOUND:
        raise ValueError(
            f"ideal enumeration needs C(n, r) <= {POSET_SIZE_BOUND}, got {comb(n, r)}"
        )
    elems = r_subsets(n, r)
    index = {e: t for t, e in enumerate(elems)}
    cover_ids = [
        tuple(index[c] for c in subset_lower_covers(e))
        for e in elems
    ]
    out: list[frozenset[RSubset]] = []
    chosen = [False] * len(elems)

    def walk(t: int) -> None:
        if t == len(elems):
            out.append(frozenset(e for e, c in zip(elems, chosen) if c))
            return
        chosen[t] = False
        walk(t + 1)
        if all(chosen[c] for c in cover_ids[t]):
            chosen[t] = True
            walk(t + 1)
            chosen[t] = False

    walk(0)
    return tuple(out)


def _ideal_partitions_with_total(n: int, r: int, total: int) -> list[tuple[Partition, frozenset[RSubset]]]:
    if total < 0 or total % r:
        return []
    picks: dict[Partition, frozenset[RSubset]] = {}
    for ideal in enumerate_r_ideals(n, r):
        if len(ideal) * r != total:
            continue
        deg = [0] * n
        for edge in ideal:
            for v in edge:
                deg[v - 1] += 1
        part = tuple(deg)
        assert is_weakly_decreasing(part), "ideal degrees must weakly decrease"
        picks.setdefault(part, ideal)
    return sorted(picks.items())


def enumerate_r_ideal_partitions(n: int, r: int, total: int) -> frozenset[Partition]:
    """Degree sequences of the r-ideals with the given degree total."""
    return frozenset(part for part, _ in _ideal_partitions_with_total(n, r, total))


def is_r_graphical_partition(d: Sequence[int], n: int, r: int) -> bool:
    """Is ``d`` the degree partition of some r-graph on [n]?

    True exactly when the total is divisible by r and some r-ideal
    partition with the same total majorizes ``d``.
    """
    vec = check_partition(d, "degree partition")
    if len(vec) != n:
        raise ValueError(f"partition length {len(vec)} differs from n={n}")
    total = sum(vec)
    if total % r:
        return False
    return any(
        majorizes(part, vec) for part in enumerate_r_ideal_partitions(n, r, total)
    )


def realize_r_graph(d: Sequence[int], n: int, r: int) -> RGraph | None:
    """Build an r-graph whose degree partition is ``d``, or None.

    Starts from the lexicographically least majorizing r-ideal partition,
    realized by its ideal, and walks the Muirhead chain down to ``d``.
    Each unit transfer from vertex i to vertex j is realized by swapping
    one edge X + {i} (present) for X + {j} (absent); a counting argument
    on the degrees guarantees such an X exists, and the first one in
    lexicographic order is taken.
    """
    vec = check_partition(d, "degree partition")
    if len(vec) != n:
        raise ValueError(f"partition length {len(vec)} differs from n={n}")
    total = sum(vec)
    if total % r:
        return None
    start = None
    for part, ideal in _ideal_partitions_with_total(n, r, total):
        if majorizes(part, vec):
            start = (part, ideal)
            break
    if start is None:
        return None
    part, ideal = start
    edges = set(ideal)
    deg = list(part)
    for step in muirhead_chain(part, vec):
        src, tgt = step.source, step.target
        swap = None
        for ctx in combinations(range(1, n + 1), r - 1):
            if src in ctx or tgt in ctx:
                continue
            with_src = tuple(sorted(ctx + (src,)))
            if with_src not in edges:
                continue
            with_tgt = tuple(sorted(ctx + (tgt,)))
            if with_tgt not in edges:
                swap = (with_src, with_tgt)
                break
        assert swap is not None, "degree surplus guarantees a swappable edge"
        edges.remove(swap[0])
        edges.add(swap[1])
        deg[src - 1] -= 1
        deg[tgt - 1] += 1
    result = RGraph(n, r, frozenset(edges))
    assert sort_decreasing(degree_sequence(result)) == vec
    return result


def brute_force_r_graphical(
    d: Sequence[int], n: int, r: int, budget: int = 5_000_000
) -> bool:
    """Try every edge set of the right size; the slow exact oracle."""
    vec = check_partition(d, "degree partition")
    if len(vec) != n:
        raise ValueError(f"partition length {len(vec)} differs from n={n}")
    total = sum(vec)
    if total % r:
        return False
    m = total // r
    universe = r_subsets(n, r)
    if m > len(universe):
        return False
    if comb(len(universe), m) > budget:
        raise ValueError(
            f"C({len(universe)}, {m}) candidate edge sets exceed the budget {budget}"
        )
    for pick in combinations(universe, m):
        deg = [0] * n
        for edge in pick:
            for v in edge:
                deg[v - 1] += 1
        if tuple(sorted(deg, reverse=True)) == vec:
            return True
    return False


def parse_hypergraph(text: str, r: int | None = None) -> frozenset[RSubset]:
    """One edge per line: r strictly increasing 1-based labels."""
    edges = set()
    width = r
    for lineno, line in enumerate(text.splitlines(), start=1):
        parts = line.split()
        if not parts:
            continue
        try:
            edge = tuple(int(p) for p in parts)
        except ValueError:
            raise ValueError(f"line {lineno}: labels must be integers: {line!r}") from None
        if width is None:
            width = len(edge)
        if len(edge) != width:
            raise ValueError(f"line {lineno}: expected {width} labels, got {len(edge)}")
        if edge[0] < 1 or any(a >= b for a, b in zip(edge, edge[1:])):
            raise ValueError(f"line {lineno}: labels must strictly increase from 1: {line!r}")
        edges.add(edge)
    return frozenset(edges)


def format_hypergraph(edges: Iterable[RSubset]) -> str:
    """Inverse of :func:`parse_hypergraph`, edges sorted, one per line."""
    return "\n".join(" ".join(str(v) for v in edge) for edge in sorted(edges))
