"""Exception hierarchy. Library code raises these; only app.py turns them into exit codes."""

from __future__ import annotations


class BettiError(Exception):
    """Base class for every error raised by aci-betti."""


class InvalidInput(BettiError, ValueError):
    """Malformed or out-of-range input (exit code 2)."""


class ClassificationError(BettiError):
    """Operation needs a proper almost complete intersection."""


class ShapeMismatch(BettiError):
    """A resolution shape does not have the form an operation requires."""


class NonPolynomial(BettiError):
    """Alternating Betti sum is not divisible by (1 - z)^n."""


class NegativeCoefficient(BettiError):
    """Hilbert series derived from a Betti table has a negative coefficient."""


class InsufficientMultiplicity(BettiError):
    """A splitting asks to cancel more copies of a twist than are present."""


class ProfileMismatch(BettiError):
    """Gorenstein profile or derived exponents contradict a formula's hypotheses."""


class HypothesisNotMet(BettiError):
    """A prediction route does not apply to this tuple."""


class OddDimension(BettiError):
    pass


class EvenDimension(BettiError):
    pass


class BoundsPresent(BettiError):
    """Ghost detection needs an exact prediction."""


class NotOSequence(BettiError):
    pass


class NotStable(BettiError):
    pass


class NotSISequence(BettiError):
    pass


class NonRegularSequence(BettiError):
    pass


class TruncationTooSmall(BettiError):
    """The quotient is still nonzero at the truncation degree."""


class NotGeneric(BettiError):
    """Every sampled set of forms had a non-generic Hilbert function."""
