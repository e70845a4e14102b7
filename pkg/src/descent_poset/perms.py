"""Permutations under pattern containment.

A permutation of length n is an arrangement of 1..n, stored one-line as a
tuple.  Positions and values are 1-based throughout.  All operations are
pure; `Permutation` is immutable and freely shareable.

The canonical text form is compact digits for n <= 9 ("23514") and
comma-separated values otherwise ("10,2,3,...").
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ParseError, PreconditionError


@dataclass(frozen=True)
class Permutation:
    """One-line permutation of {1, ..., n}, n >= 1."""

    letters: tuple[int, ...]

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        n = len(letters)
        if n == 0:
            raise ParseError("empty permutation")
        if sorted(letters) != list(range(1, n + 1)):
            seen = set()
            for x in letters:
                if not isinstance(x, int) or x < 1:
                    raise ParseError(f"non-positive letter {x!r}")
                if x in seen:
                    raise ParseError(f"duplicate letter {x}")
                seen.add(x)
            missing = sorted(set(range(1, n + 1)) - seen)
            raise ParseError(f"value set has gaps, missing {missing}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, pos: int) -> int:
        """Letter at 1-based position `pos`."""
        if not 1 <= pos <= len(self.letters):
            raise IndexError(f"position {pos} out of range")
        return self.letters[pos - 1]

    def __str__(self) -> str:
        return render_letters(self.letters)

    def __repr__(self) -> str:
        return f"Permutation({self!s})"

    def position_of(self, value: int) -> int:
        """1-based position of `value`."""
        return self.letters.index(value) + 1


def render_letters(letters: Sequence[int]) -> str:
    """Canonical text: compact digits when every entry fits one digit."""
    if all(0 <= x <= 9 for x in letters):
        return "".join(str(x) for x in letters)
    return ",".join(str(x) for x in letters)


def parse_permutation(text: str) -> Permutation:
    """Parse the canonical text form.

    Compact digit strings are only accepted for n <= 9; longer
    permutations must be comma or space separated.

    >>> parse_permutation("23514").letters
    (2, 3, 5, 1, 4)
    """
    text = text.strip()
    if not text:
        raise ParseError("empty input")
    if any(sep in text for sep in (",", " ", "\t")):
        parts = [p for p in text.replace(",", " ").split() if p]
        try:
            letters = tuple(int(p) for p in parts)
        except ValueError as exc:
            raise ParseError(f"not an integer sequence: {text!r}") from exc
    else:
        if not text.isdigit():
            raise ParseError(f"not a permutation: {text!r}")
        letters = tuple(int(ch) for ch in text)
    return Permutation(letters)


def descents(pi: Permutation) -> tuple[int, ...]:
    """Positions i with pi_i > pi_{i+1}, in increasing order.

    >>> descents(parse_permutation("23154"))
    (2, 4)
    """
    ls = pi.letters
    return tuple(i + 1 for i in range(len(ls) - 1) if ls[i] > ls[i + 1])


def descent_count(pi: Permutation) -> int:
    ls = pi.letters
    return sum(1 for i in range(len(ls) - 1) if ls[i] > ls[i + 1])


def run_index(pi: Permutation, value: int) -> int:
    """Index of the maximal increasing run containing `value`.

    Equals 1 plus the number of descents strictly before the position
    of `value`.
    """
    if not 1 <= value <= len(pi):
        raise PreconditionError(f"letter {value} not in permutation of length {len(pi)}")
    pos = pi.position_of(value)
    return 1 + sum(1 for d in descents(pi) if d < pos)


def direct_sum(sigma: Permutation, pi: Permutation) -> Permutation:
    """Concatenation with the second block shifted above the first.

    >>> str(direct_sum(parse_permutation("213"), parse_permutation("312")))
    '213645'
    """
    shift = len(sigma)
    return Permutation(sigma.letters + tuple(x + shift for x in pi.letters))


def standardize(letters: Sequence[int]) -> Permutation:
    """Replace distinct letters by their ranks, preserving relative order.

    >>> str(standardize((4, 1, 2)))
    '312'
    """
    letters = tuple(letters)
    if len(set(letters)) != len(letters):
        raise ParseError(f"repeated letters in {letters}")
    ranks = {x: r for r, x in enumerate(sorted(letters), start=1)}
    return Permutation(tuple(ranks[x] for x in letters))


def _standardize_tuple(letters: tuple[int, ...]) -> tuple[int, ...]:
    ranks = {x: r for r, x in enumerate(sorted(letters), start=1)}
    return tuple(ranks[x] for x in letters)


def _delete_standardized(letters: tuple[int, ...], pos0: int) -> tuple[int, ...]:
    # Drop one position (0-based) and close the value gap in one pass.
    gone = letters[pos0]
    return tuple(x - 1 if x > gone else x for i, x in enumerate(letters) if i != pos0)


def occurrences(sigma: Permutation, pi: Permutation) -> list[tuple[int, ...]]:
    """All 1-based position tuples whose letters spell `sigma`, lex ordered.

    Empty iff sigma does not occur in pi.
    """
    return [tuple(p + 1 for p in occ) for occ in _occurrences0(sigma.letters, pi.letters)]


def _occurrences0(sv: tuple[int, ...], pv: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Occurrences as 0-based position tuples, lexicographic."""
    m, n = len(sv), len(pv)
    if m > n:
        return []
    out: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def extend_ok(pos: int) -> bool:
        # The chosen prefix stays order-isomorphic iff the new letter has
        # the same rank among chosen letters as the pattern letter does.
        j = len(chosen)
        x = pv[pos]
        want = sum(1 for t in range(j) if sv[t] < sv[j])
        have = sum(1 for p in chosen if pv[p] < x)
        return want == have

    def walk(start: int) -> None:
        j = len(chosen)
        if j == m:
            out.append(tuple(chosen))
            return
        for pos in range(start, n - (m - j) + 1):
            if extend_ok(pos):
                chosen.append(pos)
                walk(pos + 1)
                chosen.pop()

    walk(0)
    return out


def contains(pi: Permutation, sigma: Permutation) -> bool:
    """Whether sigma occurs in pi as a pattern (sigma <= pi)."""
    return _contains0(sigma.letters, pi.letters)


def _contains0(sv: tuple[int, ...], pv: tuple[int, ...]) -> bool:
    m, n = len(sv), len(pv)
    if m > n:
        return False
    if m == n:
        return sv == pv
    chosen: list[int] = []

    def walk(start: int) -> bool:
        j = len(chosen)
        if j == m:
            return True
        for pos in range(start, n - (m - j) + 1):
            x = pv[pos]
            want = sum(1 for t in range(j) if sv[t] < sv[j])
            have = sum(1 for p in chosen if pv[p] < x)
            if want == have:
                chosen.append(pos)
                if walk(pos + 1):
                    return True
                chosen.pop()
        return False

    return walk(0)


@dataclass(frozen=True)
class Embedding:
    """A padded occurrence: guest letters at occurrence positions, zeros elsewhere.

    Removing the zeros from `slots` yields the guest exactly; the nonzero
    positions are the positions of one occurrence of the guest in the host.
    Hosts and guests may be permutations or words.
    """

    slots: tuple[int, ...]
    host: object
    guest: object

    def __post_init__(self):
        nonzero = tuple(x for x in self.slots if x != 0)
        if nonzero != tuple(self.guest.letters):
            raise ValueError("slots with zeros removed must spell the guest")

    def __str__(self) -> str:
        return render_letters(self.slots)

    def __len__(self) -> int:
        return len(self.slots)

    @property
    def positions(self) -> tuple[int, ...]:
        """1-based positions used by the occurrence."""
        return tuple(i + 1 for i, x in enumerate(self.slots) if x != 0)

    @property
    def zero_set(self) -> frozenset[int]:
        """1-based positions left unused (drives the connectivity tests)."""
        return frozenset(i + 1 for i, x in enumerate(self.slots) if x == 0)


def embeddings(sigma: Permutation, pi: Permutation) -> list[Embedding]:
    """One embedding per occurrence of sigma in pi, lex by position set."""
    out = []
    for occ in _occurrences0(sigma.letters, pi.letters):
        slots = [0] * len(pi)
        for letter, pos in zip(sigma.letters, occ):
            slots[pos] = letter
        out.append(Embedding(tuple(slots), pi, sigma))
    return out


@dataclass(frozen=True)
class AdjacencyBlock:
    """Maximal run of consecutively valued letters in increasing consecutive positions.

    `start_pos` is 1-based; the block occupies positions
    start_pos..start_pos+length-1 with values start_value..start_value+length-1.
    The tail of the block is every position after the first.
    """

    start_pos: int
    length: int
    start_value: int

    @property
    def tail_positions(self) -> tuple[int, ...]:
        return tuple(range(self.start_pos + 1, self.start_pos + self.length))


def adjacency_blocks(pi: Permutation) -> list[AdjacencyBlock]:
    """All maximal increasing adjacency blocks, left to right.

    >>> [(b.start_pos, b.length, b.start_value) for b in adjacency_blocks(parse_permutation("142356"))]
    [(3, 2, 2), (5, 2, 5)]
    """
    ls = pi.letters
    blocks = []
    i = 0
    while i < len(ls) - 1:
        if ls[i + 1] == ls[i] + 1:
            j = i
            while j < len(ls) - 1 and ls[j + 1] == ls[j] + 1:
                j += 1
            blocks.append(AdjacencyBlock(i + 1, j - i + 1, ls[i]))
            i = j
        else:
            i += 1
    return blocks


def tail_total(pi: Permutation) -> int:
    """Total number of letters in the tails of all adjacency blocks."""
    return sum(b.length - 1 for b in adjacency_blocks(pi))


def adjacency_pairs(pi: Permutation) -> int:
    """Number of adjacency pairs, counting a length-k block as k-1 pairs.

    Numerically equal to `tail_total`; both names are kept because the two
    counts enter different formulas.
    """
    return tail_total(pi)


def _tail_positions0(pv: tuple[int, ...]) -> tuple[int, ...]:
    """0-based tail positions of all adjacency blocks of the host."""
    tails = []
    for i in range(len(pv) - 1):
        if pv[i + 1] == pv[i] + 1:
            tails.append(i + 1)
    return tuple(tails)


def count_normal_embeddings(sigma: Permutation, pi: Permutation) -> int:
    """Number of embeddings that are nonzero at every adjacency-tail position.

    Backtracking over host positions with two prunings: a skipped tail
    position kills the branch, and so does running out of room.  Must agree
    with filtering `embeddings` by the tail condition (the test oracle).
    """
    sv, pv = sigma.letters, pi.letters
    m, n = len(sv), len(pv)
    if m > n:
        return 0
    is_tail = [False] * n
    for t in _tail_positions0(pv):
        is_tail[t] = True
    chosen: list[int] = []

    def count_from(pos: int) -> int:
        j = len(chosen)
        if j == m:
            # Every remaining tail position would be skipped.
            return 0 if any(is_tail[p] for p in range(pos, n)) else 1
        if n - pos < m - j:
            return 0
        total = 0
        x = pv[pos]
        want = sum(1 for t in range(j) if sv[t] < sv[j])
        have = sum(1 for p in chosen if pv[p] < x)
        if want == have:
            chosen.append(pos)
            total += count_from(pos + 1)
            chosen.pop()
        if not is_tail[pos]:
            total += count_from(pos + 1)
        return total

    return count_from(0)


def deletions(pi: Permutation) -> set[Permutation]:
    """Standardized single-letter deletions; exactly the elements covered by pi."""
    if len(pi) < 2:
        raise PreconditionError("cannot delete from a length-1 permutation")
    return {Permutation(_delete_standardized(pi.letters, j)) for j in range(len(pi))}


def sort_key(pi: Permutation) -> tuple[int, tuple[int, ...]]:
    """Deterministic ordering: by length, then lexicographically."""
    return (len(pi.letters), pi.letters)


def all_permutations(n: int) -> Iterator[Permutation]:
    """All permutations of length n in lexicographic order."""
    for p in itertools.permutations(range(1, n + 1)):
        yield Permutation(p)


def permutations_with_descents(n: int, k: int) -> list[Permutation]:
    """All length-n permutations with exactly k descents, lex ordered."""
    if not 0 <= k < max(n, 1):
        raise PreconditionError(f"descent count {k} impossible at length {n}")
    return [p for p in all_permutations(n) if descent_count(p) == k]


def identity_permutation(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def evens_then_odds(n: int) -> Permutation:
    """246...135..., one of the two adjacency-free one-descent permutations."""
    if n < 2:
        raise PreconditionError("needs length >= 2")
    return Permutation(tuple(range(2, n + 1, 2)) + tuple(range(1, n + 1, 2)))


def odds_then_evens(n: int) -> Permutation:
    """135...246..., the other adjacency-free one-descent permutation (n >= 3)."""
    if n < 3:
        raise PreconditionError("needs length >= 3")
    return Permutation(tuple(range(1, n + 1, 2)) + tuple(range(2, n + 1, 2)))


def permutations_upto(max_len: int, min_len: int = 1) -> Iterator[Permutation]:
    for n in range(min_len, max_len + 1):
        yield from all_permutations(n)


def one_descent_permutations(n: int) -> list[Permutation]:
    """All length-n permutations with exactly one descent."""
    return permutations_with_descents(n, 1)


def normal_embeddings(sigma: Permutation, pi: Permutation) -> list[Embedding]:
    """Enumerate-then-filter path: embeddings nonzero at every tail position.

    Exponential; exists as the independent oracle for `count_normal_embeddings`.
    """
    tails = _tail_positions0(pi.letters)
    return [e for e in embeddings(sigma, pi) if all(e.slots[t] != 0 for t in tails)]
