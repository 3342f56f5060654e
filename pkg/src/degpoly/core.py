"""Exact arithmetic primitives for integer and rational sequences.

Every quantity in this package is an ``int`` or a ``fractions.Fraction``;
no decision anywhere is made in floating point.  This module collects the
small sequence utilities everything else leans on: decreasing
rearrangement, weak-decrease tests, prefix sums, and the majorization
preorder.

Majorization compares two equal-length sequences through their sorted
prefix sums: ``a`` majorizes ``b`` when, after sorting both in weakly
decreasing order, every prefix sum of ``a`` is at least the matching
prefix sum of ``b``, and the totals agree.  It is the order underlying
both the averaging projection in :mod:`degpoly.runs` and the hypergraph
recognition theorem in :mod:`degpoly.hypergraph`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]
RationalVector = tuple[Fraction, ...]
IntSequence = tuple[int, ...]
# A partition here is a weakly decreasing tuple of nonnegative integers.
Partition = tuple[int, ...]


def as_rational_vector(values: Iterable[Rational]) -> RationalVector:
    """Coerce a sequence of ints/Fractions to a tuple of Fractions."""
    return tuple(Fraction(v) for v in values)


def is_weakly_decreasing(values: Sequence[Rational]) -> bool:
    return all(a >= b for a, b in zip(values, values[1:]))


def sort_decreasing(values: Iterable[Rational]) -> tuple:
    """The weakly decreasing rearrangement of ``values``."""
    return tuple(sorted(values, reverse=True))


def prefix_sums(values: Sequence[Rational]) -> tuple:
    """Partial sums s_1, s_1+s_2, ...; empty input gives the empty tuple."""
    out = []
    total: Rational = 0
    for v in values:
        total = total + v
        out.append(total)
    return tuple(out)


def majorizes(a: Sequence[Rational], b: Sequence[Rational]) -> bool:
    """True when ``a`` majorizes ``b``.

    Both are sorted decreasingly first, so the input order is irrelevant.
    Sequences of different length do not compare and raise ``ValueError``.
    """
    if len(a) != len(b):
        raise ValueError(
            "majorization compares sequences of equal length, got %d and %d"
            % (len(a), len(b))
        )
    ta: Rational = 0
    tb: Rational = 0
    for x, y in zip(sort_decreasing(a), sort_decreasing(b)):
        ta += x
        tb += y
        if ta < tb:
            return False
    return ta == tb


def is_partition(values: Sequence) -> bool:
    """Nonempty weakly decreasing nonnegative integers (booleans excluded)."""
    if len(values) == 0:
        return False
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            return False
    return is_weakly_decreasing(values)


def check_partition(values: Sequence, what: str = "sequence") -> Partition:
    """Return ``values`` as a tuple, raising if it is not a partition."""
    if not is_partition(values):
        raise ValueError(f"{what} must be weakly decreasing nonnegative integers: {values!r}")
    return tuple(values)
