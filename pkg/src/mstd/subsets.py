"""Subsets of a finite abelian group as bit vectors, sum/difference sets,
and the lift from group subsets to integer sets.

A subset A is a mask with bit i set iff element i is in A. Translation of a
whole mask by a group element decomposes, factor by factor, into a cyclic
rotation of equally-sized bit blocks, so

    A + A = union over a in A of (A translated by a)
    A - A = union over b in A of (A translated by -b)

cost O(|A| * rank) word operations instead of the |A|^2 double loop.

Lifting: a subset of Z/a_1 x ... x Z/a_r pulls back to the integer box
[0, k*a_1) x ... x [0, k*a_r) by congruence in each coordinate, and the box
maps injectively to the integers via base-m positional encoding once m
exceeds every coordinate sum that can arise. Subsets of a cyclic group lift
directly to residue-class representatives below k*n.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .groups import GroupSpec


@dataclass(frozen=True)
class SubsetMask:
    """An immutable subset of a group, stored as an integer bit mask."""

    group: GroupSpec
    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.bits < (1 << self.group.order):
            raise ValueError(
                f"mask {self.bits:#x} out of range for group of order {self.group.order}"
            )

    @classmethod
    def empty(cls, group: GroupSpec) -> "SubsetMask":
        return cls(group, 0)

    @classmethod
    def full(cls, group: GroupSpec) -> "SubsetMask":
        return cls(group, (1 << group.order) - 1)

    @classmethod
    def from_elements(cls, group: GroupSpec, elements: Iterable[int]) -> "SubsetMask":
        bits = 0
        for e in elements:
            if not 0 <= e < group.order:
                raise ValueError(f"element {e} out of range for group {group}")
            bits |= 1 << e
        return cls(group, bits)

    @classmethod
    def from_string(cls, group: GroupSpec, text: str) -> "SubsetMask":
        """Parse a subset literal like "{0,2,3}" (indices; "{}" is empty)."""
        s = text.strip()
        if not (s.startswith("{") and s.endswith("}")):
            raise ValueError(f"subset literal must be brace-delimited, got {text!r}")
        body = s[1:-1].strip()
        if not body:
            return cls.empty(group)
        return cls.from_elements(group, (int(p) for p in body.split(",")))

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements()) + "}"

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, e: int) -> bool:
        return 0 <= e < self.group.order and bool((self.bits >> e) & 1)

    def elements(self) -> tuple[int, ...]:
        bits = self.bits
        out = []
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return tuple(out)


@lru_cache(maxsize=None)
def _digit_lt_mask(group: GroupSpec, i: int, c: int) -> int:
    """Mask of all indices whose i-th digit is < c (c in [0, a_i])."""
    s = group.strides[i]
    a = group.factors[i]
    block_len = s * a
    block = (1 << (c * s)) - 1
    repeat = ((1 << group.order) - 1) // ((1 << block_len) - 1)
    return block * repeat


@lru_cache(maxsize=None)
def _rotation(group: GroupSpec, i: int, v: int) -> tuple[int, int, int, int]:
    """(keep, up, wrap, down) for rotating digit i by v on a whole mask."""
    s = group.strides[i]
    a = group.factors[i]
    keep = _digit_lt_mask(group, i, a - v)
    wrap = _digit_lt_mask(group, i, a) & ~keep
    return keep, v * s, wrap, (a - v) * s


def translate_mask(group: GroupSpec, bits: int, g: int) -> int:
    """Mask of {x + g : x in the mask}."""
    for i, (s, a) in enumerate(zip(group.strides, group.factors)):
        v = (g // s) % a
        if v:
            keep, up, wrap, down = _rotation(group, i, v)
            bits = ((bits & keep) << up) | ((bits & wrap) >> down)
    return bits


def _iter_bits(bits: int):
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def sumset(subset: SubsetMask) -> SubsetMask:
    """A + A = {a + b : a, b in A}."""
    g = subset.group
    out = 0
    for a in _iter_bits(subset.bits):
        out |= translate_mask(g, subset.bits, a)
    return SubsetMask(g, out)


def diffset(subset: SubsetMask) -> SubsetMask:
    """A - A = {a - b : a, b in A}; always closed under negation."""
    g = subset.group
    out = 0
    for b in _iter_bits(subset.bits):
        out |= translate_mask(g, subset.bits, g.neg(b))
    return SubsetMask(g, out)


def is_mstd(subset: SubsetMask) -> bool:
    """True iff A has more sums than differences."""
    return len(sumset(subset)) > len(diffset(subset))


def _dedup_sorted(values: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(values)))


def integer_sumset(s: Iterable[int]) -> tuple[int, ...]:
    vals = _dedup_sorted(s)
    return _dedup_sorted(a + b for a, b in itertools.combinations_with_replacement(vals, 2))


def integer_diffset(s: Iterable[int]) -> tuple[int, ...]:
    vals = _dedup_sorted(s)
    return _dedup_sorted(a - b for a in vals for b in vals)


def integer_mstd_check(s: Iterable[int]) -> tuple[bool, int, int]:
    """Exact (is_mstd, |S+S|, |S-S|) for a finite integer set."""
    vals = _dedup_sorted(s)
    n_sums = len(integer_sumset(vals))
    n_diffs = len(integer_diffset(vals))
    return n_sums > n_diffs, n_sums, n_diffs


def lift_cyclic(subset: SubsetMask, k: int) -> tuple[int, ...]:
    """All residue-class representatives of A below k*n, for cyclic groups."""
    if subset.group.rank > 1:
        raise ValueError("lift_cyclic requires a cyclic group; use lift_general")
    if k < 1:
        raise ValueError("k must be >= 1")
    n = subset.group.order
    return tuple(sorted(a + n * j for j in range(k) for a in subset.elements()))


def default_lift_base(group: GroupSpec, k: int) -> int:
    """Base that is strictly larger than any coordinate sum on the lifted box."""
    return 2 * k * max(group.factors) + 1


def lift_general(subset: SubsetMask, k: int, m: int | None = None) -> tuple[int, ...]:
    """Lift A to the box [0, k*a_i) per coordinate, then encode in base m.

    The encoding sends (b_1, ..., b_r) to sum(b_i * m**(i-1)). It is
    injective and respects coordinatewise sums/differences on the box as
    long as m exceeds every coordinate sum, i.e. m > 2*(k*max(a_i) - 1).
    """
    g = subset.group
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.rank == 0:
        return (0,) if subset.bits else ()
    if m is None:
        m = default_lift_base(g, k)
    if m <= 2 * (k * max(g.factors) - 1):
        raise ValueError(
            f"base {m} too small to encode the lifted box faithfully; "
            f"need m > {2 * (k * max(g.factors) - 1)}"
        )
    out = []
    for e in subset.elements():
        digits = g.digits(e)
        reps = [range(d, k * a, a) for d, a in zip(digits, g.factors)]
        for combo in itertools.product(*reps):
            out.append(sum(b * m**i for i, b in enumerate(combo)))
    return tuple(sorted(out))
