"""Domain exceptions. Every error carries a stable machine-readable ``code``."""

from __future__ import annotations


class ErgokitError(Exception):
    """Base class for all toolkit errors."""

    code = "Error"


class LengthMismatch(ErgokitError):
    """Energies and populations are empty or of unequal length."""

    code = "LengthMismatch"


class NegativePopulation(ErgokitError):
    """A population is below zero."""

    code = "NegativePopulation"


class NotNormalized(ErgokitError):
    """Populations (or mixture weights) do not sum to one within tolerance."""

    code = "NotNormalized"


class NonFiniteEnergy(ErgokitError):
    """An energy value is NaN or infinite."""

    code = "NonFiniteEnergy"


class DegenerateTransition(ErgokitError):
    """The two levels have exactly equal energies; no temperature is assigned."""

    code = "DegenerateTransition"


class UndefinedTemperature(ErgokitError):
    """Both populations of the pair vanish; the temperature limit does not exist."""

    code = "UndefinedTemperature"


class IndexOutOfRange(ErgokitError):
    """A level index is invalid for the system."""

    code = "IndexOutOfRange"


class DimensionCap(ErgokitError):
    """A composite system would exceed the configured level cap."""

    code = "DimensionCap"


class DimensionTooLarge(ErgokitError):
    """The brute-force search is capped at small dimensions."""

    code = "DimensionTooLarge"


class DimensionMismatch(ErgokitError):
    """Two objects that must share a dimension do not."""

    code = "DimensionMismatch"


class DegenerateComposite(ErgokitError):
    """The composed transition has zero energy gap."""

    code = "DegenerateComposite"


class ZeroPopulation(ErgokitError):
    """A base level of a composite transition has zero population."""

    code = "ZeroPopulation"


class NotActivatable(ErgokitError):
    """The transition pair cannot produce an inversion (equal or non-positive
    virtual temperatures, or an infinite one)."""

    code = "NotActivatable"


class IntervalTooNarrow(ErgokitError):
    """The copy-count interval admits no fraction within the denominator cap."""

    code = "IntervalTooNarrow"


class InvalidParameter(ErgokitError):
    """A scalar argument violates its precondition (non-finite, non-positive...)."""

    code = "InvalidParameter"


class ParseError(ErgokitError):
    """Input text does not parse as the documented state format."""

    code = "ParseError"
