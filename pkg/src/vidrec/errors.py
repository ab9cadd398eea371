"""Exception types shared across the engine.

Every error raised on purpose by this package derives from VidrecError so
callers (CLI, HTTP service) can catch one base class and translate it into
an exit code or status code.
"""

from __future__ import annotations


class VidrecError(Exception):
    """Base class for all errors raised by this package."""


class SchemaError(VidrecError):
    """Catalog input lacks a required column or a header row."""


class EmptyCatalogError(VidrecError):
    """Too few usable rows survived ingestion filtering."""


class DuplicateTitleError(VidrecError):
    """Two surviving catalog rows share the same title."""


class MappingFileError(VidrecError):
    """Phrase mapping file is malformed."""


class EmptyVocabularyError(VidrecError):
    """Every document in the corpus cleaned down to zero tokens."""


class UnknownTermError(VidrecError):
    """Term is not part of the fitted vocabulary."""

    def __init__(self, term: str):
        self.term = term
        super().__init__(f"unknown term: {term!r}")


class UnknownVideoError(VidrecError):
    """Video id is outside the catalog range."""


class UnknownTitleError(VidrecError):
    """Title does not match any catalog entry.

    Carries the exact-prefix matches found in the catalog, if any, so
    front ends can suggest what the caller probably meant.
    """

    def __init__(self, title: str, suggestions: tuple[str, ...] = ()):
        self.title = title
        self.suggestions = tuple(suggestions)
        message = f"unknown title: {title!r}"
        if self.suggestions:
            message += "; closest prefix matches: " + ", ".join(self.suggestions)
        super().__init__(message)


class IndexFormatError(VidrecError):
    """Saved index file is malformed or has an unsupported version."""
