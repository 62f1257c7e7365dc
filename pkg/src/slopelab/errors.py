"""Exception types shared across the package."""


class SlopelabError(Exception):
    """Base class for package errors."""


class UsageError(SlopelabError):
    """Malformed input or misuse of an API surface."""


class ContextMismatchError(UsageError):
    """Character and field context are incompatible."""


class InvalidPresentationError(SlopelabError):
    """A presentation failed validation; ``violations`` lists the reasons."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("invalid presentation: " + "; ".join(self.violations))


class UnsupportedHypothesisError(SlopelabError):
    """The requested computation lies outside the supported hypotheses.

    Raised for a nonzero linking vector in slope computations, for vanishing
    character coordinates (the patching extension is not implemented), and
    for non-unitary characters in signature computations.
    """
