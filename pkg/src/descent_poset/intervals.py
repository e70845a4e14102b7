"""Intervals of the pattern-containment poset.

The central structure is the pattern closure of a top permutation: every
pattern it contains, generated by repeated single-letter deletions level
by level.  Containment between closure elements is materialized as one
Python-int bitmask per element, which keeps the Mobius and topology scans
inside cheap integer operations.

The poset is graded by length, so the cover relation is exactly one-step
deletion and every element's down-set is the union of its covers'
down-sets.
"""
from __future__ import annotations

import os
from functools import lru_cache

from .errors import PreconditionError
from .perms import Permutation, _delete_standardized
from . import config


class PatternClosure:
    """All patterns of a fixed top permutation, with containment bitmasks.

    Elements are stored as letter tuples sorted by (length, letters), so
    element indices increase with length.  `down_masks[i]` has bit j set
    iff element j is contained in element i (including j == i).
    """

    __slots__ = ("top", "elements", "index", "cover_lists", "down_masks", "_up_masks")

    def __init__(self, top: tuple[int, ...]):
        self.top = top
        n = len(top)
        levels: dict[int, set[tuple[int, ...]]] = {n: {top}}
        for m in range(n, 1, -1):
            nxt: set[tuple[int, ...]] = set()
            for t in levels[m]:
                for j in range(m):
                    nxt.add(_delete_standardized(t, j))
            levels[m - 1] = nxt
        elements: list[tuple[int, ...]] = []
        for m in range(1, n + 1):
            elements.extend(sorted(levels[m]))
        self.elements = elements
        self.index = {t: i for i, t in enumerate(elements)}
        cover_lists: list[tuple[int, ...]] = []
        down_masks: list[int] = []
        for i, t in enumerate(elements):
            if len(t) == 1:
                cover_lists.append(())
                down_masks.append(1 << i)
                continue
            covers = sorted({self.index[_delete_standardized(t, j)] for j in range(len(t))})
            cover_lists.append(tuple(covers))
            mask = 1 << i
            for c in covers:
                mask |= down_masks[c]
            down_masks.append(mask)
        self.cover_lists = cover_lists
        self.down_masks = down_masks
        self._up_masks: list[int] | None = None

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def up_masks(self) -> list[int]:
        """Transpose of `down_masks`, built on first use."""
        if self._up_masks is None:
            ups = [0] * len(self.elements)
            for i, mask in enumerate(self.down_masks):
                bit = 1 << i
                m = mask
                while m:
                    low = m & -m
                    ups[low.bit_length() - 1] |= bit
                    m ^= low
            self._up_masks = ups
        return self._up_masks

    def contains_letters(self, letters: tuple[int, ...]) -> bool:
        return letters in self.index

    def leq(self, a: tuple[int, ...], b: tuple[int, ...]) -> bool:
        ia, ib = self.index.get(a), self.index.get(b)
        if ia is None or ib is None:
            return False
        return bool(self.down_masks[ib] >> ia & 1)


@lru_cache(maxsize=2048)
def closure_of(top_letters: tuple[int, ...]) -> PatternClosure:
    return PatternClosure(top_letters)


def iter_bits(mask: int):
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Interval:
    """The closed interval [bottom, top], graded by length.

    Wraps the top's pattern closure restricted to elements containing the
    bottom.  Exposes the element list (sorted by length then letters), the
    cover relation, and a containment test.
    """

    __slots__ = ("bottom", "top", "closure", "bottom_idx", "top_idx", "member_mask")

    def __init__(self, bottom: Permutation, top: Permutation, closure: PatternClosure):
        self.bottom = bottom
        self.top = top
        self.closure = closure
        self.bottom_idx = closure.index[bottom.letters]
        self.top_idx = closure.index[top.letters]
        bit = 1 << self.bottom_idx
        mask = 0
        for i, dm in enumerate(closure.down_masks):
            if dm & bit:
                mask |= 1 << i
        self.member_mask = mask

    @property
    def rank(self) -> int:
        return len(self.top) - len(self.bottom)

    def member_indices(self) -> list[int]:
        return list(iter_bits(self.member_mask))

    @property
    def elements(self) -> tuple[Permutation, ...]:
        return tuple(Permutation(self.closure.elements[i]) for i in self.member_indices())

    def __len__(self) -> int:
        return self.member_mask.bit_count()

    def __contains__(self, tau: Permutation) -> bool:
        i = self.closure.index.get(tau.letters)
        return i is not None and bool(self.member_mask >> i & 1)

    def leq(self, a: Permutation, b: Permutation) -> bool:
        """Containment between interval elements."""
        return self.closure.leq(a.letters, b.letters)

    def interior_indices(self) -> list[int]:
        mask = self.member_mask & ~(1 << self.bottom_idx) & ~(1 << self.top_idx)
        return list(iter_bits(mask))

    def interior_elements(self) -> tuple[Permutation, ...]:
        return tuple(Permutation(self.closure.elements[i]) for i in self.interior_indices())

    def cover_pairs(self) -> list[tuple[Permutation, Permutation]]:
        """Hasse edges (covered, covering) within the interval."""
        out = []
        for i in self.member_indices():
            upper = Permutation(self.closure.elements[i])
            for c in self.closure.cover_lists[i]:
                if self.member_mask >> c & 1:
                    out.append((Permutation(self.closure.elements[c]), upper))
        return out


def interval_size_limit() -> int:
    """Top-length guard for interval materialization (env-overridable)."""
    return config.load_config().max_interval_top_length


def build_interval(sigma: Permutation, pi: Permutation, size_limit: int | None = None) -> Interval:
    """Materialize [sigma, pi]; raises when sigma does not occur in pi.

    The element set is exponential in the rank, hence the length guard.
    """
    limit = interval_size_limit() if size_limit is None else size_limit
    if len(pi) > limit:
        raise PreconditionError(
            f"top length {len(pi)} exceeds the interval size guard {limit} "
            f"(raise {config.MAX_LEN_ENV} or pass an explicit size_limit)"
        )
    closure = closure_of(pi.letters)
    if sigma.letters not in closure.index:
        raise PreconditionError(f"{sigma} does not occur in {pi}")
    return Interval(sigma, pi, closure)


def clear_caches() -> None:
    """Drop memoized closures (useful in long scans over many tops)."""
    closure_of.cache_clear()


def default_workers() -> int:
    value = os.environ.get(config.WORKERS_ENV)
    if value:
        return max(1, int(value))
    return min(os.cpu_count() or 1, 8)
