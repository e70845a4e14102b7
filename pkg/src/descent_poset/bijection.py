"""Descent-preserving encoding between permutations and run words.

`perm_to_word` sends a permutation to the word of run indices of its
values 1, 2, ..., n; `word_to_perm` concatenates the position lists of
the letters 1, 2, ..., max(w).  The two maps are mutually inverse, and
a permutation with k descents corresponds to a run word with largest
letter k+1.  Restricted to a fixed descent count, the encoding is an
order isomorphism onto subword order; it is not order-preserving across
different descent counts.
"""
from __future__ import annotations

from .errors import PreconditionError
from .perms import Permutation, descents
from .words import Word, is_run_word


def perm_to_word(pi: Permutation) -> Word:
    """Run-index word: letter c of the result is the run index of value c.

    >>> from .perms import parse_permutation
    >>> str(perm_to_word(parse_permutation("263415")))
    '312231'
    """
    ds = descents(pi)
    pos_of = {x: i + 1 for i, x in enumerate(pi.letters)}
    letters = []
    for value in range(1, len(pi) + 1):
        p = pos_of[value]
        letters.append(1 + sum(1 for d in ds if d < p))
    return Word(tuple(letters))


def word_to_perm(w: Word) -> Permutation:
    """Concatenated position lists of letters 1..max(w).

    Only run words are accepted: on anything else the construction does
    not invert `perm_to_word`.

    >>> from .words import parse_word
    >>> str(word_to_perm(parse_word("214321")))
    '261543'
    """
    if not is_run_word(w):
        raise PreconditionError(f"{w} is not a run word")
    letters: list[int] = []
    for letter in range(1, w.max_letter + 1):
        letters.extend(i + 1 for i, x in enumerate(w.letters) if x == letter)
    return Permutation(tuple(letters))
