"""The degree-partition polytope: membership, facets, edges, lattice points.

A weakly decreasing integer vector is the degree sequence of some simple
graph exactly when it satisfies every prefix-suffix inequality

    x_1 + ... + x_k - (x_{n-l+1} + ... + x_n) <= k (n - 1 - l)

for k, l >= 0 with 1 <= k + l <= n, and has even sum.  The rational
solution set of those inequalities together with x_1 >= ... >= x_n is a
polytope whose vertices are precisely the threshold partitions of
:mod:`degpoly.threshold`; dropping the ordering constraints instead and
ranging over all index pairs of disjoint subsets S, T gives the
unordered (Koren) version, whose membership reduces to sorting.

This module keeps every test exact.  It knows the irredundant facet
list for n >= 4, decides vertex adjacency by difference patterns,
counts edges in closed form and by enumeration, and spot-checks the
n = 3 volume: the polytope is a tetrahedron of volume 1/3, and the
unordered region in [0,2]^3 has volume 2, estimated by Monte Carlo with
exact membership per sample.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping, Sequence

from .core import (
    Partition,
    Rational,
    RationalVector,
    as_rational_vector,
    is_weakly_decreasing,
    prefix_sums,
    sort_decreasing,
)
from .sampling import make_rng
from .threshold import (
    Pair,
    enumerate_threshold_partitions,
    is_threshold_partition,
    pair_poset,
)


@dataclass(frozen=True)
class FacetInequality:
    """One linear constraint a . x <= rhs over integer coefficients.

    ``kind`` is "monotone" (x_i >= x_{i+1}, parameter i) or "fhm"
    (prefix-suffix inequality, parameters k and l).
    """

    kind: str
    coefficients: tuple[int, ...]
    rhs: int
    i: int | None = None
    k: int | None = None
    l: int | None = None

    def value(self, x: Sequence[Rational]) -> Fraction:
        return sum((Fraction(c) * v for c, v in zip(self.coefficients, x)), Fraction(0))

    def satisfied(self, x: Sequence[Rational]) -> bool:
        return self.value(x) <= self.rhs

    def tight(self, x: Sequence[Rational]) -> bool:
        return self.value(x) == self.rhs


def monotone_inequality(n: int, i: int) -> FacetInequality:
    """x_i >= x_{i+1}, encoded as -x_i + x_{i+1} <= 0."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"monotone index must satisfy 1 <= i <= {n - 1}, got {i}")
    coeff = [0] * n
    coeff[i - 1] = -1
    coeff[i] = 1
    return FacetInequality("monotone", tuple(coeff), 0, i=i)


def fhm_inequality(n: int, k: int, l: int) -> FacetInequality:
    """Prefix sum of k minus suffix sum of l, bounded by k (n - 1 - l)."""
    if k < 0 or l < 0 or not 1 <= k + l <= n:
        raise ValueError(f"need k, l >= 0 and 1 <= k + l <= {n}, got ({k}, {l})")
    coeff = [0] * n
    for t in range(k):
        coeff[t] = 1
    for t in range(n - l, n):
        coeff[t] = -1
    return FacetInequality("fhm", tuple(coeff), k * (n - 1 - l), k=k, l=l)


@dataclass(frozen=True)
class FhmMembership:
    member: bool
    violations: tuple[FacetInequality, ...]

    def __bool__(self) -> bool:
        return self.member


def in_fhm_polytope(x: Sequence[Rational]) -> FhmMembership:
    """Check x_1 >= ... >= x_n plus every prefix-suffix inequality.

    Returns the verdict together with the violated constraints, so a
    failed membership is self-explaining.
    """
    vec = as_rational_vector(x)
    n = len(vec)
    if n < 1:
        raise ValueError("membership needs a nonempty vector")
    violations: list[FacetInequality] = []
    for i in range(1, n):
        if vec[i - 1] < vec[i]:
            violations.append(monotone_inequality(n, i))
    pre = prefix_sums(vec)
    suf = prefix_sums(vec[::-1])
    for k in range(0, n + 1):
        head = pre[k - 1] if k else 0
        for l in range(max(1 - k, 0), n - k + 1):
            lhs = head - (suf[l - 1] if l else 0)
            if lhs > k * (n - 1 - l):
                violations.append(fhm_inequality(n, k, l))
    return FhmMembership(not violations, tuple(violations))


def in_fhm_polytope_facets_only(x: Sequence[Rational]) -> bool:
    """Fast path over just the irredundant facet list (n >= 4)."""
    vec = as_rational_vector(x)
    return all(f.satisfied(vec) for f in facet_inequalities(len(vec)))


def in_koren_polytope(x: Sequence[Rational], method: str = "sorted") -> bool:
    """Unordered membership: every disjoint S, T obey the subset bound.

    ``method="sorted"`` sorts decreasingly and defers to
    :func:`in_fhm_polytope`; ``method="direct"`` literally enumerates the
    3^n assignments of each index to S, T, or neither (n <= 12).
    """
    vec = as_rational_vector(x)
    n = len(vec)
    if n < 1:
        raise ValueError("membership needs a nonempty vector")
    if method == "sorted":
        return in_fhm_polytope(sort_decreasing(vec)).member
    if method == "direct":
        if n > 12:
            raise ValueError(f"direct enumeration is capped at n <= 12, got n={n}")
        for assign in product((0, 1, 2), repeat=n):
            lhs = Fraction(0)
            ns = nt = 0
            for role, v in zip(assign, vec):
                if role == 1:
                    lhs += v
                    ns += 1
                elif role == 2:
                    lhs -= v
                    nt += 1
            if ns + nt and lhs > ns * (n - 1 - nt):
                return False
        return True
    raise ValueError(f"unknown method {method!r}")


def _check_ints(d: Sequence[int], what: str) -> tuple[int, ...]:
    for v in d:
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"{what} must be integers, got {d!r}")
    return tuple(d)


def is_degree_partition(d: Sequence[int]) -> bool:
    """Degree sequence of a simple graph, in weakly decreasing order."""
    vec = _check_ints(d, "degree partition")
    if not vec or not is_weakly_decreasing(vec):
        return False
    return sum(vec) % 2 == 0 and in_fhm_polytope(vec).member


def is_degree_sequence(x: Sequence[int]) -> bool:
    """Degree sequence of a simple graph, any vertex order."""
    vec = _check_ints(x, "degree sequence")
    if not vec:
        return False
    return sum(vec) % 2 == 0 and in_koren_polytope(vec, method="sorted")


@lru_cache(maxsize=None)
def facet_inequalities(n: int) -> tuple[FacetInequality, ...]:
    """The irredundant defining constraints for n >= 4.

    n - 1 monotone constraints, then the prefix-suffix inequalities with
    (k, l) = (1, 0), (0, 1), or both positive with k + l in
    {2, ..., n-3} or k + l = n.  That is (n^2 - 3n + 12) / 2 in total.
    At n = 3 the polytope is a simplex and this list is not defined.
    """
    if n < 4:
        raise ValueError(f"the facet list needs n >= 4, got n={n}")
    facets = [monotone_inequality(n, i) for i in range(1, n)]
    params = [(1, 0), (0, 1)]
    params += [(k, s - k) for s in range(2, n - 2) for k in range(1, s)]
    params += [(k, n - k) for k in range(1, n)]
    facets.extend(fhm_inequality(n, k, l) for k, l in params)
    assert len(facets) == (n * n - 3 * n + 12) // 2
    return tuple(facets)


def interval_step_vector(n: int, interval: tuple[int, int]) -> tuple[int, ...]:
    """Size-1 on an interval of at least two indices, zero elsewhere.

    These vectors, together with :func:`pair_step_vector`, are exactly
    the possible coordinate differences across an edge of the polytope.
    """
    lo, hi = interval
    if not 1 <= lo < hi <= n:
        raise ValueError(f"need an interval 1 <= lo < hi <= {n}, got {interval!r}")
    size = hi - lo + 1
    return tuple(size - 1 if lo <= t <= hi else 0 for t in range(1, n + 1))


def pair_step_vector(n: int, left: tuple[int, int], right: tuple[int, int]) -> tuple[int, ...]:
    """|right| on the left interval and |left| on the right one."""
    a, b = left
    c, d = right
    if not (1 <= a <= b and b < c and c <= d <= n):
        raise ValueError(f"need 1 <= {left!r} < {right!r} <= {n} as disjoint intervals")
    p, q = b - a + 1, d - c + 1
    out = [0] * n
    for t in range(a, b + 1):
        out[t - 1] = q
    for t in range(c, d + 1):
        out[t - 1] = p
    return tuple(out)


@lru_cache(maxsize=None)
def _step_patterns(n: int) -> frozenset[tuple[int, ...]]:
    """Every interval or interval-pair step vector on [n]."""
    intervals = [(lo, hi) for lo in range(1, n + 1) for hi in range(lo, n + 1)]
    patterns = {interval_step_vector(n, iv) for iv in intervals if iv[0] < iv[1]}
    for left in intervals:
        for right in intervals:
            if left[1] < right[0]:
                patterns.add(pair_step_vector(n, left, right))
    return frozenset(patterns)


def are_adjacent(d: Sequence[int], e: Sequence[int]) -> bool:
    """Do two distinct threshold partitions span an edge of the polytope?

    They do exactly when one dominates the other componentwise and the
    difference matches a step pattern.
    """
    n = len(d)
    if len(e) != n or n < 3:
        raise ValueError("adjacency needs two partitions of equal length n >= 3")
    a, b = tuple(d), tuple(e)
    if not (is_threshold_partition(a) and is_threshold_partition(b)):
        raise ValueError("adjacency is defined between threshold partitions")
    if a == b:
        raise ValueError("adjacency needs two distinct partitions")
    if not (all(x <= y for x, y in zip(a, b)) or all(y <= x for x, y in zip(a, b))):
        return False
    diff = tuple(abs(x - y) for x, y in zip(a, b))
    return diff in _step_patterns(n)


def count_edges(n: int, method: str = "formula") -> int:
    """Edge count of the polytope: 2^(n-2) (2n - 3) for n >= 3."""
    if n < 3:
        raise ValueError(f"the edge count needs n >= 3, got n={n}")
    if method == "formula":
        return 2 ** (n - 2) * (2 * n - 3)
    if method == "enumerate":
        if n > 12:
            raise ValueError(f"edge enumeration is capped at n <= 12, got n={n}")
        tps = enumerate_threshold_partitions(n)
        return sum(
            1
            for s in range(len(tps))
            for t in range(s + 1, len(tps))
            if are_adjacent(tps[s], tps[t])
        )
    raise ValueError(f"unknown method {method!r}")


def dominating_count(d: Sequence[int]) -> int:
    """How many leading entries of a dominating-vertex partition equal n-1."""
    vec = tuple(d)
    if not is_threshold_partition(vec) or vec[0] != len(vec) - 1:
        raise ValueError(f"need a threshold partition with d_1 = n - 1, got {d!r}")
    m = 0
    for v in vec:
        if v != len(vec) - 1:
            break
        m += 1
    return m


def dominating_sum_identity(n: int) -> tuple[int, int]:
    """(sum of dominating counts over dominating-vertex partitions, 2^(n-1)).

    The two components are equal for every n; the caller gets both so the
    identity stays checkable rather than assumed.
    """
    total = sum(
        dominating_count(d)
        for d in enumerate_threshold_partitions(n)
        if d[0] == n - 1
    )
    return total, 2 ** (n - 1)


def apply_incidence(
    n: int,
    y: Mapping[Pair, Rational] | Sequence[Rational],
    check_unit_interval: bool = False,
) -> RationalVector:
    """Pair loads to vertex loads: x_i sums y over the pairs containing i.

    ``y`` is a mapping from pairs (missing pairs count as zero) or a full
    sequence in lexicographic pair order.  With ``check_unit_interval``
    every load must lie in [0, 1], the box whose image is the unordered
    degree-sequence region.
    """
    pairs = pair_poset(n)
    if isinstance(y, Mapping):
        loads = {pair: Fraction(0) for pair in pairs}
        for key, value in y.items():
            pair = tuple(key)
            if pair not in loads:
                raise ValueError(f"{pair!r} is not a pair of [{n}]")
            loads[pair] = Fraction(value)
    else:
        if len(y) != len(pairs):
            raise ValueError(f"expected {len(pairs)} pair loads, got {len(y)}")
        loads = {pair: Fraction(v) for pair, v in zip(pairs, y)}
    if check_unit_interval and any(not 0 <= v <= 1 for v in loads.values()):
        raise ValueError("pair loads must lie in [0, 1]")
    x = [Fraction(0)] * n
    for (i, j), v in loads.items():
        x[i - 1] += v
        x[j - 1] += v
    return tuple(x)


def face_vertices(n: int, tight: Iterable[FacetInequality]) -> tuple[Partition, ...]:
    """The threshold partitions satisfying every given constraint tightly."""
    if not 4 <= n <= 10:
        raise ValueError(f"face enumeration is supported for 4 <= n <= 10, got n={n}")
    constraints = tuple(tight)
    return tuple(
        d
        for d in enumerate_threshold_partitions(n)
        if all(f.tight(d) for f in constraints)
    )


def enumerate_degree_partitions(n: int) -> frozenset[Partition]:
    """Sorted degree sequences of all 2^C(n,2) graphs on [n] (n <= 7).

    Walks edge subsets in Gray-code order so each step flips one edge and
    touches two degrees.
    """
    if not 1 <= n <= 7:
        raise ValueError(f"graph enumeration is capped at n <= 7, got n={n}")
    pairs = pair_poset(n)
    deg = [0] * n
    found = {tuple(deg)}
    present = 0
    for t in range(1, 1 << len(pairs)):
        bit = (t & -t).bit_length() - 1
        present ^= 1 << bit
        delta = 1 if present & (1 << bit) else -1
        i, j = pairs[bit]
        deg[i - 1] += delta
        deg[j - 1] += delta
        found.add(tuple(sorted(deg, reverse=True)))
    return frozenset(found)


def affine_rank(points: Sequence[Sequence[Rational]]) -> int:
    """Size of a largest affinely independent subset, exactly.

    Gaussian elimination over Fractions on the differences from the
    first point; the affine rank is that matrix rank plus one.
    """
    if not points:
        return 0
    base = as_rational_vector(points[0])
    rows = [
        [Fraction(v) - b for v, b in zip(p, base)]
        for p in points[1:]
    ]
    rank = 0
    width = len(base)
    for col in range(width):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        head = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            if rows[r][col]:
                factor = rows[r][col] / head
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank + 1


def irredundancy_witness(n: int, facet: FacetInequality) -> RationalVector:
    """A rational point violating only the given facet.

    Starts at the barycenter of the facet's tight vertices, which lies
    strictly inside every other facet because distinct facets have
    distinct hyperplanes, then steps outward along the facet normal by
    half the largest exactly-safe amount.
    """
    facets = facet_inequalities(n)
    if facet not in facets:
        raise ValueError("witness requested for a constraint outside the facet list")
    tight = [d for d in enumerate_threshold_partitions(n) if facet.tight(d)]
    assert tight, "every facet is tight somewhere on the vertex set"
    bary = tuple(Fraction(sum(col), len(tight)) for col in zip(*tight))
    normal = facet.coefficients
    limits = []
    for g in facets:
        if g == facet:
            continue
        rate = sum(gc * nc for gc, nc in zip(g.coefficients, normal))
        if rate > 0:
            slack = Fraction(g.rhs) - g.value(bary)
            assert slack > 0
            limits.append(slack / rate)
    eps = min(limits) / 2 if limits else Fraction(1)
    witness = tuple(b + eps * c for b, c in zip(bary, normal))
    assert not facet.satisfied(witness)
    assert all(g.satisfied(witness) for g in facets if g != facet)
    return witness


def dp3_volume() -> Fraction:
    """Exact volume of the n = 3 polytope, a tetrahedron on 4 vertices."""
    v0, v1, v2, v3 = enumerate_threshold_partitions(3)
    rows = [
        [a - b for a, b in zip(v, v0)]
        for v in (v1, v2, v3)
    ]
    det = (
        rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
        - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
        + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0])
    )
    return Fraction(abs(det), 6)


@dataclass(frozen=True)
class VolumeEstimate:
    """Monte Carlo result; ``estimate`` is exact given the sampled points."""

    samples: int
    hits: int
    estimate: Fraction

    @property
    def value(self) -> float:
        """The estimate as a float, for display only."""
        return float(self.estimate)


# Samples are dyadic rationals k / 2^30 in [0, 2); membership clears the
# common denominator and compares integers, which is the same exact test.
_SCALE_BITS = 30
_SCALE = 1 << _SCALE_BITS


def _koren3_scaled(a: int, b: int, c: int) -> bool:
    """The n = 3 subset bounds on (a, b, c) / 2^30, in integer arithmetic."""
    if a < b:
        a, b = b, a
    if b < c:
        b, c = c, b
        if a < b:
            a, b = b, a
    # (k, 0), (0, l) and mixed (k, l) with k + l <= 3, rhs k (2 - l) scaled
    return (
        a <= 2 * _SCALE
        and a + b <= 4 * _SCALE
        and a + b + c <= 6 * _SCALE
        and c >= 0
        and b + c >= 0
        and a + b + c >= 0
        and a - c <= _SCALE
        and a - b - c <= 0
        and a + b - c <= 2 * _SCALE
    )


def ds3_volume_estimate(
    samples: int = 1_000_000,
    seed: int | None = None,
    cross_check: int = 10_000,
) -> VolumeEstimate:
    """Monte Carlo volume of the unordered degree region inside [0,2]^3.

    Every membership decision is exact: coordinates are dyadic rationals
    and the subset bounds are evaluated in integer arithmetic after
    clearing the denominator.  The first ``cross_check`` samples are also
    routed through :func:`in_koren_polytope` and the answers asserted
    equal, pinning the fast path to the reference predicate.  Randomness
    enters only through the seeded generator; the estimate itself is the
    exact rational 8 * hits / samples.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    rng = make_rng(seed)
    hits = 0
    checked = min(cross_check, samples)
    for idx in range(samples):
        a = rng.getrandbits(_SCALE_BITS + 1)
        b = rng.getrandbits(_SCALE_BITS + 1)
        c = rng.getrandbits(_SCALE_BITS + 1)
        member = _koren3_scaled(a, b, c)
        if idx < checked:
            reference = in_koren_polytope(
                (Fraction(a, _SCALE), Fraction(b, _SCALE), Fraction(c, _SCALE)),
                method="sorted",
            )
            assert member == reference
        if member:
            hits += 1
    return VolumeEstimate(samples, hits, Fraction(8 * hits, samples))
