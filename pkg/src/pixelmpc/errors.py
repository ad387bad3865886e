"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes: ConfigError -> 2, DataError -> 3,
NumericError -> 4.
"""


class ContractViolationError(ValueError):
    """An operation was called with inputs violating its preconditions."""


class ConfigError(ValueError):
    """A configuration value or file is invalid."""


class DataError(RuntimeError):
    """Stored data is missing, malformed, or inconsistent."""


class BadMagicError(DataError):
    """A container file does not start with the expected magic bytes."""


class UnsupportedVersionError(DataError):
    """A container file uses a format version this build cannot read."""


class TruncatedRecordError(DataError):
    """A container file ends before its declared payload does."""


class ChecksumError(DataError):
    """A container payload does not match its stored CRC32."""


class UnknownAttributeError(DataError):
    """A filter query references an attribute key that does not exist."""


class NumericError(RuntimeError):
    """A numeric computation produced non-finite values."""
