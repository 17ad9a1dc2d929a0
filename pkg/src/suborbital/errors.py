"""Exception hierarchy shared by every module in the package.

All errors raised on purpose derive from SuborbitalError so callers can
catch domain failures without swallowing programming mistakes.
"""


class SuborbitalError(Exception):
    """Base class for all failures this package raises deliberately."""


class ZeroOverZero(SuborbitalError):
    """0/0 has no projective meaning."""


class NotInvertible(SuborbitalError):
    """Residue has no multiplicative inverse for the given modulus."""


class InvalidModulus(SuborbitalError):
    """Modulus arguments must be positive integers."""


class InvalidSpec(SuborbitalError):
    """Graph or subgroup parameters violate a construction precondition."""


class InvalidBound(SuborbitalError):
    """Enumeration bounds must be at least 1."""


class BoundTooLarge(SuborbitalError):
    """Requested enumeration exceeds the configured resource ceiling."""


class NotMappable(SuborbitalError):
    """No integer matrix with the requested vertex images exists."""


class MalformedDocument(SuborbitalError):
    """Serialized graph document is structurally unreadable."""


class VersionMismatch(SuborbitalError):
    """Serialized graph document declares an unsupported format version."""


class InvariantViolation(SuborbitalError):
    """Deserialized data fails a semantic consistency check."""
