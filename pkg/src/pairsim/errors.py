"""Exception hierarchy shared across the package.

Every error raised on a user-facing path carries a human-readable message
naming the offending input (file, line, id, dimension) so that CLI and
service layers can surface it verbatim.
"""

from __future__ import annotations


class PairsimError(Exception):
    """Base class for all package errors."""


class ConfigError(PairsimError):
    """A run configuration is incomplete or inconsistent."""


class DatasetReadError(PairsimError):
    """A dataset file could not be opened or read."""


class UnknownFormatError(PairsimError):
    """The declared dataset format is not one of the supported names."""


class HeaderError(PairsimError):
    """A dataset file's header row does not match the declared format."""


class LineFormatError(PairsimError):
    """A line-oriented data file violates its wire format.

    Carries the file path and 1-based line number of the first offence.
    """

    def __init__(self, path: str, line_no: int, message: str) -> None:
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = path
        self.line_no = line_no


class EmbeddingFileError(LineFormatError):
    """An embedding file line is malformed."""


class ScoreFileError(LineFormatError):
    """A score file line is malformed."""


class LemmaTableError(LineFormatError):
    """A lemma table line is malformed."""


class DimensionMismatchError(PairsimError):
    """Two vectors that must share a dimension do not."""


class ZeroVectorError(PairsimError):
    """A vector with zero norm was passed to a direction-based scorer."""


class SingleClassError(PairsimError):
    """ROC evaluation was requested on data with only one label value."""


class MissingEmbeddingError(PairsimError):
    """A dataset text id has no vector in the loaded embedding file."""


class MissingPairError(PairsimError):
    """A scored pair id could not be resolved back to its texts."""


class ScoreMismatchError(PairsimError):
    """An external score file does not cover exactly the dataset's pair ids."""
