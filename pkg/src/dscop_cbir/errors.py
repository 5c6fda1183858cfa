"""Exception types raised by the retrieval engine.

Validation failures on in-memory arguments (bad bin counts, undersized
planes, mismatched vector lengths) raise plain ValueError. The classes
here cover file- and dataset-level failures so callers (notably the CLI)
can catch everything package-specific in one place.
"""


class CbirError(Exception):
    """Base class for all package-specific errors."""


class DecodeError(CbirError):
    """An image file could not be decoded (or is below the 3x3 minimum)."""


class DatasetError(CbirError):
    """A dataset directory could not be ingested."""


class BuildError(CbirError):
    """Index construction failed; the message lists the offending ids."""


class IndexFormatError(CbirError):
    """An index file is unreadable: bad header, version, truncation or checksum."""
