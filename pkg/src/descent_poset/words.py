"""Words over the positive integers with subword order.

`v <= w` when v appears in w as a (not necessarily consecutive)
subsequence, letter for letter.  The run words singled out by
`is_run_word` are exactly the words arising as run-index encodings of
permutations: every letter 1..max(w) occurs, and the rightmost occurrence
of each letter below the max is preceded by a letter one larger.

Rendering follows the permutation convention: compact digits while every
letter fits a single digit, comma-separated otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import ParseError, PreconditionError
from .perms import Embedding, render_letters


@dataclass(frozen=True)
class Word:
    """Nonempty word of positive integers."""

    letters: tuple[int, ...]

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if not letters:
            raise ParseError("empty word")
        for x in letters:
            if not isinstance(x, int) or x < 1:
                raise ParseError(f"word letters must be positive integers, got {x!r}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __str__(self) -> str:
        return render_letters(self.letters)

    def __repr__(self) -> str:
        return f"Word({self!s})"

    @property
    def max_letter(self) -> int:
        return max(self.letters)


def parse_word(text: str) -> Word:
    """Parse compact digits or comma/space-separated letters."""
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
            raise ParseError(f"not a word: {text!r}")
        letters = tuple(int(ch) for ch in text)
    return Word(letters)


def is_subword(v: Word, w: Word) -> bool:
    """Subword order test by greedy left-to-right matching."""
    it = iter(w.letters)
    return all(x in it for x in v.letters)


def positions(w: Word, letter: int) -> tuple[int, ...]:
    """1-based positions of `letter` in w, increasing (possibly empty)."""
    if letter < 1:
        raise PreconditionError(f"letters are positive, got {letter}")
    return tuple(i + 1 for i, x in enumerate(w.letters) if x == letter)


def is_run_word(w: Word) -> bool:
    """Whether w is the run-index encoding of some permutation.

    Requires every letter 1..max(w) to occur, and the rightmost occurrence
    of each letter i < max(w) to have an i+1 somewhere to its left.
    """
    k = w.max_letter
    present = set(w.letters)
    if present != set(range(1, k + 1)):
        return False
    for i in range(1, k):
        rightmost = max(p for p, x in enumerate(w.letters) if x == i)
        if not any(w.letters[q] == i + 1 for q in range(rightmost)):
            return False
    return True


def is_run_word_with_max(w: Word, k: int) -> bool:
    """Run word whose largest letter is exactly k."""
    return w.max_letter == k and is_run_word(w)


def word_embeddings(v: Word, w: Word) -> list[Embedding]:
    """All embeddings of v in w, lex by position set."""
    vv, wv = v.letters, w.letters
    m, n = len(vv), len(wv)
    out: list[Embedding] = []
    chosen: list[int] = []

    def walk(start: int) -> None:
        j = len(chosen)
        if j == m:
            slots = [0] * n
            for letter, pos in zip(vv, chosen):
                slots[pos] = letter
            out.append(Embedding(tuple(slots), w, v))
            return
        for pos in range(start, n - (m - j) + 1):
            if wv[pos] == vv[j]:
                chosen.append(pos)
                walk(pos + 1)
                chosen.pop()

    walk(0)
    return out


def _word_tail_positions0(wv: tuple[int, ...]) -> tuple[int, ...]:
    """0-based positions after the first in each maximal equal-letter block."""
    return tuple(i + 1 for i in range(len(wv) - 1) if wv[i + 1] == wv[i])


def normal_word_embeddings(v: Word, w: Word) -> list[Embedding]:
    """Oracle filter: embeddings nonzero at every equal-letter-block tail of w."""
    tails = _word_tail_positions0(w.letters)
    return [e for e in word_embeddings(v, w) if all(e.slots[t] != 0 for t in tails)]


def count_normal_word_embeddings(v: Word, w: Word) -> int:
    """Count embeddings of v in w that use every equal-letter-block tail of w.

    Positional dynamic program: a[j] counts partial embeddings of v[:j]
    into the scanned prefix of w, where skipping a position is only
    allowed off the block tails.  Runs in O(|v| |w|).
    """
    vv, wv = v.letters, w.letters
    m = len(vv)
    tails = set(_word_tail_positions0(wv))
    a = [0] * (m + 1)
    a[0] = 1
    for i, x in enumerate(wv):
        if i in tails:
            nxt = [0] * (m + 1)
        else:
            nxt = a[:]
        for j in range(m):
            if vv[j] == x and a[j]:
                nxt[j + 1] += a[j]
        a = nxt
    return a[m]


def enumerate_run_words(max_letter: int, length: int) -> list[Word]:
    """All run words of the given length whose largest letter is exactly
    `max_letter`, in lexicographic order.

    Backtracking over prefixes, pruning branches that cannot place every
    required letter in the remaining positions.
    """
    if max_letter < 1 or length < 1:
        raise PreconditionError("need max_letter >= 1 and length >= 1")
    if max_letter > length:
        return []
    out: list[Word] = []
    prefix: list[int] = []
    seen_count = [0] * (max_letter + 1)
    missing = max_letter  # letters of 1..max_letter not yet placed

    def walk() -> None:
        nonlocal missing
        if len(prefix) == length:
            w = Word(tuple(prefix))
            if is_run_word_with_max(w, max_letter):
                out.append(w)
            return
        remaining = length - len(prefix)
        for x in range(1, max_letter + 1):
            gap = missing - 1 if seen_count[x] == 0 else missing
            if gap > remaining - 1:
                continue
            if seen_count[x] == 0:
                missing -= 1
            seen_count[x] += 1
            prefix.append(x)
            walk()
            prefix.pop()
            seen_count[x] -= 1
            if seen_count[x] == 0:
                missing += 1

    walk()
    return out
