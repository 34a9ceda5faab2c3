"""Exception types shared across the library."""


class VotingError(Exception):
    """Base class for all omvote errors."""


class DuplicateOutcomeError(VotingError):
    """An outcome index appears more than once in a ranking."""


class OutOfRangeIndexError(VotingError):
    """An outcome index is negative or not below the outcome count."""


class WrongLengthError(VotingError):
    """A ranking or priority order has the wrong number of entries."""


class TooLargeError(VotingError):
    """An exhaustive enumeration would exceed its budget."""


class DimensionMismatchError(VotingError):
    """Score vector, profile, or tie-break sizes disagree."""


class InvalidParametersError(VotingError):
    """Rule parameters are malformed or inconsistent (e.g. k >= m)."""


class UnsupportedRuleError(VotingError):
    """The requested operation is not available for this rule."""


class ProfileFormatError(VotingError):
    """A profile file or string does not follow the text format."""


class VerificationError(VotingError):
    """An internal consistency re-check failed; indicates a library bug."""
