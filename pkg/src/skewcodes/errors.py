"""Exception types shared across the package."""


class SkewcodesError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(SkewcodesError):
    """Malformed textual input; carries the offending position when known."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class InvalidAutomorphism(SkewcodesError):
    """The (k, d) pair does not define a ring automorphism."""


class LengthMismatch(SkewcodesError):
    """Vectors do not live in the same ambient space."""


class LengthNotDivisible(SkewcodesError):
    """Block index does not divide the word length."""


class ContextMismatch(SkewcodesError):
    """Operands belong to different (modulus, automorphism) contexts."""


class DivisionByZeroPoly(SkewcodesError):
    """Attempted division by the zero polynomial."""


class NonUnitLeadingCoeff(SkewcodesError):
    """Division requires the divisor's leading coefficient to be a unit."""


class EnumerationCapExceeded(SkewcodesError):
    """A brute-force scan would exceed the configured candidate cap."""


class GeneratorNotDivisor(SkewcodesError):
    """The generator polynomial does not divide its modulus binomial."""


class NotAParityCheck(SkewcodesError):
    """The polynomial is not a factor of x^beta - lambda on either side."""


class UnsupportedVariant(SkewcodesError):
    """Gray map variant is not available for this modulus."""


class ZeroCode(SkewcodesError):
    """The operation is undefined for the zero code."""


class ManifestMissing(SkewcodesError):
    """The reproduction manifest could not be located."""
