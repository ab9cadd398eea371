"""Catalog ingestion and text preprocessing.

Turns a tabular video catalog (title, genre, cast, overview) into a cleaned
token corpus. Each video becomes one document: a flat, order-preserving list
of lowercase alphanumeric tokens drawn from its genre, cast, and overview
fields, in that field order.

Fields are treated as comma-separated phrase lists. Each phrase is first
looked up in a configurable phrase mapping (the "collapse list") which can
rewrite a multi-word phrase into a single token or drop it outright; this is
how multi-word names and genres survive as one vocabulary entry. Phrases not
covered by the mapping fall back to per-field rules: cast phrases are
concatenated into a single token (names must not fragment into first/last
halves), genre and overview phrases split on whitespace into ordinary words.
Stopwords and empty tokens are removed last.
"""

from __future__ import annotations

import csv
import logging
import re
from dataclasses import dataclass
from pathlib import Path

from .errors import (
    DuplicateTitleError,
    EmptyCatalogError,
    MappingFileError,
    SchemaError,
)

logger = logging.getLogger(__name__)

REQUIRED_COLUMNS = ("title", "genre", "cast", "overview")

# Marker for a mapping entry whose phrase is removed entirely. "-" can never
# collide with a real token because cleaning strips every non-alphanumeric.
DROP_MARKER = "-"

_NON_ALNUM = re.compile(r"[^a-z0-9]+")
_TOKEN_RE = re.compile(r"^[a-z0-9]+$")


@dataclass(frozen=True)
class VideoRecord:
    """One surviving catalog row. The id is the row's catalog ordinal."""

    id: int
    title: str
    genre: str
    cast: str
    overview: str


@dataclass(frozen=True)
class Document:
    """Cleaned token list for one video, parallel to its VideoRecord."""

    video_id: int
    tokens: tuple[str, ...]


@dataclass(frozen=True)
class Catalog:
    """Surviving records plus their cleaned documents, in file order."""

    records: tuple[VideoRecord, ...]
    documents: tuple[Document, ...]
    dropped_rows: int = 0
    warnings: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.records)

    def title_of(self, video_id: int) -> str:
        return self.records[video_id].title


def load_stopwords(path: str | Path) -> frozenset[str]:
    """Read a stopword file: one word per line, '#' comments allowed."""
    words = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        word = line.strip()
        if word and not word.startswith("#"):
            words.add(word.lower())
    return frozenset(words)


def load_collapse_list(path: str | Path) -> dict[str, str]:
    """Parse a phrase mapping file into {normalized phrase: token}.

    Format: one mapping per line, "source phrase<TAB>token". Lines that are
    blank or start with '#' are ignored. A token of "-" drops the phrase.
    Keys are normalized the same way lookups are (lowercased, punctuation
    collapsed to single spaces), so the file can spell phrases naturally.
    """
    mapping: dict[str, str] = {}
    for lineno, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if "\t" not in line:
            raise MappingFileError(f"{path}:{lineno}: expected 'phrase<TAB>token'")
        phrase, target = line.split("\t", 1)
        key = normalize_phrase(phrase)
        if not key:
            raise MappingFileError(f"{path}:{lineno}: empty source phrase")
        target = target.strip()
        if target == DROP_MARKER:
            token = ""
        else:
            token = clean_token(target)
            if not token:
                raise MappingFileError(
                    f"{path}:{lineno}: empty token; use {DROP_MARKER!r} to drop"
                )
        if key in mapping:
            raise MappingFileError(f"{path}:{lineno}: duplicate phrase {key!r}")
        mapping[key] = token
    return mapping


def normalize_phrase(phrase: str) -> str:
    """Canonical lookup key: lowercase, punctuation and runs of whitespace
    collapsed to single spaces, outer whitespace stripped."""
    return " ".join(_NON_ALNUM.sub(" ", phrase.lower()).split())


def clean_token(text: str) -> str:
    """Lowercase and strip every non-alphanumeric character."""
    return _NON_ALNUM.sub("", text.lower())


def preprocess_record(
    record: VideoRecord,
    stopwords: frozenset[str],
    collapse: dict[str, str],
) -> Document:
    """Clean one record into its document. Token order is genre, cast,
    overview; within a field, phrase order is preserved."""
    tokens: list[str] = []
    _extend(tokens, record.genre, stopwords, collapse, concat=False)
    _extend(tokens, record.cast, stopwords, collapse, concat=True)
    _extend(tokens, record.overview, stopwords, collapse, concat=False)
    return Document(video_id=record.id, tokens=tuple(tokens))


def _extend(
    out: list[str],
    field: str,
    stopwords: frozenset[str],
    collapse: dict[str, str],
    concat: bool,
) -> None:
    for phrase in field.split(","):
        key = normalize_phrase(phrase)
        if not key:
            continue
        if key in collapse:
            candidates = [collapse[key]]
        elif concat:
            # Names collapse to a single token so they stay one vocabulary
            # entry instead of fragmenting into given/family-name words.
            candidates = [clean_token("".join(phrase.split()))]
        else:
            candidates = [clean_token(word) for word in phrase.split()]
        for token in candidates:
            if token and token not in stopwords:
                out.append(token)


def build_corpus(
    records: list[VideoRecord] | tuple[VideoRecord, ...],
    stopwords: frozenset[str],
    collapse: dict[str, str],
) -> tuple[list[Document], list[str]]:
    """Preprocess every record in order; the result is parallel to records.

    Returns the documents plus a warning per record that cleaned down to an
    empty document (such records stay in the catalog but carry no signal).
    """
    documents: list[Document] = []
    warnings: list[str] = []
    for record in records:
        document = preprocess_record(record, stopwords, collapse)
        if not document.tokens:
            message = (
                f"record {record.id} ({record.title!r}) cleaned to an empty document"
            )
            logger.warning(message)
            warnings.append(message)
        documents.append(document)
    return documents, warnings


def load_catalog(
    source: str | Path,
    *,
    stopwords: frozenset[str],
    collapse: dict[str, str],
) -> Catalog:
    """Read a catalog CSV and build its cleaned token corpus.

    The CSV must carry title, genre, cast, and overview columns (matched
    case-insensitively; extra columns are ignored). Rows where any required
    field is missing or blank are dropped and counted. Surviving rows get
    sequential ids in file order.
    """
    path = Path(source)
    with path.open(newline="", encoding="utf-8-sig") as handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames is None:
            raise SchemaError(f"{path}: no header row")
        column_for: dict[str, str] = {}
        for name in reader.fieldnames:
            lowered = (name or "").strip().lower()
            if lowered in REQUIRED_COLUMNS and lowered not in column_for:
                column_for[lowered] = name
        missing = [c for c in REQUIRED_COLUMNS if c not in column_for]
        if missing:
            raise SchemaError(
                f"{path}: missing required column(s): {', '.join(missing)}"
            )
        rows = list(reader)

    records: list[VideoRecord] = []
    dropped = 0
    for row in rows:
        values = {c: (row.get(column_for[c]) or "").strip() for c in REQUIRED_COLUMNS}
        if any(not values[c] for c in REQUIRED_COLUMNS):
            dropped += 1
            continue
        records.append(
            VideoRecord(
                id=len(records),
                title=values["title"],
                genre=values["genre"],
                cast=values["cast"],
                overview=values["overview"],
            )
        )

    if len(records) < 2:
        raise EmptyCatalogError(
            f"{path}: {len(records)} usable row(s) after dropping {dropped}; "
            "need at least 2"
        )

    first_row_of: dict[str, int] = {}
    for record in records:
        if record.title in first_row_of:
            raise DuplicateTitleError(
                f"{path}: duplicate title {record.title!r} "
                f"(rows {first_row_of[record.title]} and {record.id})"
            )
        first_row_of[record.title] = record.id

    documents, warnings = build_corpus(records, stopwords, collapse)
    return Catalog(
        records=tuple(records),
        documents=tuple(documents),
        dropped_rows=dropped,
        warnings=tuple(warnings),
    )
