"""Exact linear optimization over threshold graphs and their partitions.

Two routes compute the same optimum and certify each other.

The pair route assigns a cost to every vertex pair and finds a
maximum-weight order ideal by dynamic programming over windows
{i, ..., j}: scanning rows i = n-1 down to 1, vertex i either dominates
the window - contributing its row of edge costs plus the best ideal on
{i+1..j} - or is isolated in it, inheriting the best ideal on {i..j-1}.
Breaking ties toward the dominating branch yields the edge-maximal
optimum; breaking them the other way yields the edge-minimal one.

The vertex route maximizes sum(c_i * d_i) over threshold partitions d.
Pooling c to its decreasing projection b and taking the edge set
{(i,j) : b_i + b_j >= 0} (strict > for the minimal variant) reads the
optimizer straight off the projection.  A certificate makes the optimum
checkable by hand: c equals its projection plus a nonnegative rational
combination of the adjacent-difference vectors v_i = e_{i+1} - e_i,
supported only where the optimal partition has d_i = d_{i+1}.

Both routes come with brute-force oracles over the full enumeration so
the test suite can pin them down exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .core import Partition, Rational, RationalVector, as_rational_vector, is_weakly_decreasing
from .runs import ascending_runs, pool
from .threshold import (
    OrderIdeal,
    Pair,
    degree_partition_of_ideal,
    enumerate_order_ideals,
    enumerate_threshold_partitions,
    graph_from_weights,
    pair_poset,
)

MODES = ("max", "min")


def _check_mode(mode: str) -> str:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    return mode


@dataclass(frozen=True)
class PairCosts:
    """A rational cost for every pair (i, j), 1 <= i < j <= n."""

    n: int
    costs: Mapping[Pair, Fraction]

    def __post_init__(self) -> None:
        full = {pair: Fraction(0) for pair in pair_poset(self.n)}
        for key, value in dict(self.costs).items():
            pair = tuple(key)
            if pair not in full:
                raise ValueError(f"{pair!r} is not a pair of [{self.n}]")
            full[pair] = Fraction(value)
        object.__setattr__(self, "costs", full)

    def weight(self, edges: Sequence[Pair] | frozenset[Pair]) -> Fraction:
        return sum((self.costs[pair] for pair in edges), Fraction(0))


def lift_costs(c: Sequence[Rational]) -> PairCosts:
    """Vertex costs to pair costs: the pair (i, j) costs c_i + c_j."""
    vec = as_rational_vector(c)
    if not vec:
        raise ValueError("need at least one vertex cost")
    n = len(vec)
    return PairCosts(n, {(i, j): vec[i - 1] + vec[j - 1] for i, j in pair_poset(n)})


def max_weight_ideal(costs: PairCosts, mode: str = "max") -> OrderIdeal:
    """A maximum-weight order ideal by the window dynamic program.

    ``mode="max"`` breaks ties toward the dominating branch and returns
    the edge-maximal maximizer, ``mode="min"`` the edge-minimal one.
    Row i only consults row i+1 and earlier entries of row i, so two
    rows of state suffice.
    """
    _check_mode(mode)
    n = costs.n
    # prev[j] = (edge set, weight) of the best ideal on the window {i+1..j}
    prev: dict[int, tuple[frozenset[Pair], Fraction]] = {}
    for i in range(n, 0, -1):
        cur: dict[int, tuple[frozenset[Pair], Fraction]] = {i: (frozenset(), Fraction(0))}
        row_prefix = Fraction(0)
        row_edges: list[Pair] = []
        for j in range(i + 1, n + 1):
            row_prefix += costs.costs[(i, j)]
            row_edges.append((i, j))
            below_edges, below_weight = prev[j]
            dominating = row_prefix + below_weight
            other_edges, other_weight = cur[j - 1]
            take = dominating >= other_weight if mode == "max" else dominating > other_weight
            if take:
                cur[j] = (frozenset(row_edges) | below_edges, dominating)
            else:
                cur[j] = (other_edges, other_weight)
        prev = cur
    edges, _ = prev[n]
    return OrderIdeal(n, edges)


def brute_force_max_weight_ideals(costs: PairCosts) -> tuple[Fraction, tuple[frozenset[Pair], ...]]:
    """(best weight, every ideal attaining it), by full enumeration."""
    best: Fraction | None = None
    argmax: list[frozenset[Pair]] = []
    for edges in enumerate_order_ideals(costs.n):
        w = costs.weight(edges)
        if best is None or w > best:
            best, argmax = w, [edges]
        elif w == best:
            argmax.append(edges)
    assert best is not None
    return best, tuple(argmax)


def objective_value(c: Sequence[Rational], d: Sequence[int]) -> Fraction:
    """The linear functional sum(c_i * d_i)."""
    vec = as_rational_vector(c)
    if len(vec) != len(d):
        raise ValueError("cost vector and partition lengths differ")
    return sum((ci * di for ci, di in zip(vec, d)), Fraction(0))


def optimal_threshold_partition(c: Sequence[Rational], mode: str = "max") -> Partition:
    """The extreme optimizer of sum(c_i * d_i) over threshold partitions.

    ``mode="max"`` returns the componentwise-maximal element of the argmax
    set, ``mode="min"`` the componentwise-minimal one.  Both maximize.
    """
    _check_mode(mode)
    b = pool(c).vector
    ideal = graph_from_weights(b, strict=(mode == "min"))
    return degree_partition_of_ideal(ideal)


def brute_force_optimal_partition(c: Sequence[Rational]) -> tuple[Fraction, frozenset[Partition]]:
    """(best value, the full argmax set) over all threshold partitions."""
    vec = as_rational_vector(c)
    best: Fraction | None = None
    argmax: list[Partition] = []
    for d in enumerate_threshold_partitions(len(vec)):
        v = objective_value(vec, d)
        if best is None or v > best:
            best, argmax = v, [d]
        elif v == best:
            argmax.append(d)
    assert best is not None
    return best, frozenset(argmax)


def certificate_step(c: Sequence[Rational]) -> tuple[RationalVector, dict[int, Fraction]]:
    """One averaging round with its difference-vector bookkeeping.

    Returns (averaged vector, coefficients) with every coefficient
    nonnegative and c == averaged + sum alpha_i * (e_{i+1} - e_i).
    Within a run starting at m with mean a, position i < run end carries
    (i + 1 - m) * a - (c_m + ... + c_i): the run mean times the prefix
    length minus the prefix sum, which is nonnegative because prefixes
    of an ascending run average at most the whole run.
    """
    vec = as_rational_vector(c)
    averaged = []
    coeffs: dict[int, Fraction] = {}
    for run in ascending_runs(vec).runs:
        mean = Fraction(sum(vec[i - 1] for i in run), len(run))
        averaged.extend([mean] * len(run))
        prefix = Fraction(0)
        for i in run[:-1]:
            prefix += vec[i - 1]
            alpha = (i + 1 - run[0]) * mean - prefix
            assert alpha >= 0
            if alpha:
                coeffs[i] = alpha
    return tuple(averaged), coeffs


@dataclass(frozen=True)
class Certificate:
    """c = base + sum alpha_i (e_{i+1} - e_i), base decreasing, alpha >= 0."""

    base: RationalVector
    coefficients: tuple[Fraction, ...]  # alpha_1 .. alpha_{n-1}
    support: frozenset[int]

    def __post_init__(self) -> None:
        if len(self.coefficients) != max(len(self.base) - 1, 0):
            raise ValueError("need one coefficient per adjacent pair of base entries")
        if not is_weakly_decreasing(self.base):
            raise ValueError("certificate base must be weakly decreasing")
        if any(a < 0 for a in self.coefficients):
            raise ValueError("certificate coefficients must be nonnegative")
        nonzero = frozenset(i for i, a in enumerate(self.coefficients, start=1) if a)
        if self.support != nonzero:
            raise ValueError("support must list exactly the nonzero coefficients")

    def reconstruct(self) -> RationalVector:
        out = list(self.base)
        for i, alpha in enumerate(self.coefficients, start=1):
            out[i - 1] -= alpha
            out[i] += alpha
        return tuple(out)


def optimality_certificate(c: Sequence[Rational]) -> Certificate:
    """Accumulate :func:`certificate_step` until the vector is decreasing.

    The base comes out equal to the pooled projection of c, and the
    support only touches positions where consecutive entries of the
    projection (hence of the optimal partition) coincide.
    """
    cur = as_rational_vector(c)
    if not cur:
        raise ValueError("cannot certify an empty vector")
    alpha = [Fraction(0)] * (len(cur) - 1)
    limit = max(1, len(cur) - 1)
    for _ in range(limit + 1):
        if is_weakly_decreasing(cur):
            support = frozenset(i for i, a in enumerate(alpha, start=1) if a)
            return Certificate(base=cur, coefficients=tuple(alpha), support=support)
        cur, step = certificate_step(cur)
        for i, a in step.items():
            alpha[i - 1] += a
    raise AssertionError(f"certificate failed to stabilize within {limit} rounds: {c!r}")
