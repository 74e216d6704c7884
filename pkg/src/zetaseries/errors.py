"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument lies outside the validity region of a series or closed form."""


class UnsupportedKindError(ValueError):
    """Requested series kind has no closed form or no reliable oracle."""


class ToleranceError(ValueError):
    """Requested tolerance is below what binary64 evaluation can certify."""


class UnknownIdError(KeyError):
    """Lookup of an identity, series or approximant id failed."""
