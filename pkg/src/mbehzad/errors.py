"""Exception types raised across the package."""


class MBehzadError(Exception):
    """Base class for all package errors."""


class NonPositiveField(MBehzadError, ValueError):
    pass


class BadEta(MBehzadError, ValueError):
    pass


class OutOfZone(MBehzadError, ValueError):
    """A point lies outside the outermost corona (e.g. in a corner of the square)."""


class NegativeInput(MBehzadError, ValueError):
    pass


class ConfigError(MBehzadError, ValueError):
    """Invalid simulation configuration; the message is meant for humans."""
