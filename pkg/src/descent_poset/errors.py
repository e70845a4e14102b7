"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: parse problems exit 1,
violated preconditions exit 2, and a fast path disagreeing with the
recursive oracle exits 3.
"""


class ParseError(ValueError):
    """Malformed textual input (permutation or word)."""


class PreconditionError(ValueError):
    """An operation was called outside its stated domain."""


class VerificationError(RuntimeError):
    """A fast path disagreed with the ground-truth oracle."""
