"""Exception types that map to CLI exit code 1."""


class DataError(Exception):
    """Input data violates a contract (bad schema, impossible request)."""


class CorruptInputError(DataError):
    """More than half of an input stream failed to parse."""


class StratificationError(DataError):
    """A class is too small to stratify into the requested folds."""
