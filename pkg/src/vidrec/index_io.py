"""Canonical on-disk index: vocabulary, counts, titles, sparse weights.

The file is plain JSON written in a fixed layout (sorted keys, one weight
vector per line) so rebuilding the same model always produces byte-identical
output. Weights are serialized with Python's shortest round-trip float
format, which parses back to the exact same binary value.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import IndexFormatError
from .vectorizer import TfIdfModel, Vocabulary

FORMAT_VERSION = 1

_REQUIRED_KEYS = (
    "doc_count",
    "doc_freq",
    "doc_lengths",
    "format_version",
    "titles",
    "vectors",
    "vocabulary",
)


def _format_value(value) -> str:
    # repr of a finite float is its shortest form that parses back
    # bit-identically, and is valid JSON.
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_format_value(v) for v in value) + "]"
    return json.dumps(value, ensure_ascii=False)


def _dumps(payload: dict) -> str:
    lines = ["{"]
    keys = sorted(payload)
    for position, key in enumerate(keys):
        value = payload[key]
        if key == "vectors" and value:
            body = ",\n".join("    " + _format_value(row) for row in value)
            rendered = "[\n" + body + "\n  ]"
        else:
            rendered = _format_value(value)
        comma = "," if position < len(keys) - 1 else ""
        lines.append(f'  "{key}": {rendered}{comma}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def save_index(
    model: TfIdfModel, titles: tuple[str, ...] | list[str], path: str | Path
) -> None:
    """Write the fitted model and its catalog titles to one JSON file."""
    titles = list(titles)
    if len(titles) != model.doc_count:
        raise ValueError(
            f"{len(titles)} titles for a {model.doc_count}-document model"
        )
    payload = {
        "format_version": FORMAT_VERSION,
        "vocabulary": list(model.vocabulary.terms),
        "doc_count": model.doc_count,
        "doc_lengths": list(model.doc_lengths),
        "doc_freq": list(model.doc_freq),
        "titles": titles,
        "vectors": [
            [[i, w] for i, w in sorted(vector.items())] for vector in model.vectors
        ],
    }
    Path(path).write_text(_dumps(payload), encoding="utf-8")


def load_index(path: str | Path) -> tuple[TfIdfModel, tuple[str, ...]]:
    """Read an index file back into a model and its titles.

    Any structural problem raises IndexFormatError: unparseable JSON, a
    missing or unsupported format_version, missing keys, or lengths that
    disagree with doc_count.
    """
    path = Path(path)
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise IndexFormatError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(payload, dict):
        raise IndexFormatError(f"{path}: top level must be a JSON object")
    if "format_version" not in payload:
        raise IndexFormatError(f"{path}: missing format_version")
    version = payload["format_version"]
    if version != FORMAT_VERSION:
        raise IndexFormatError(
            f"{path}: unsupported format_version {version!r}; "
            f"this build reads version {FORMAT_VERSION}"
        )
    missing = [key for key in _REQUIRED_KEYS if key not in payload]
    if missing:
        raise IndexFormatError(f"{path}: missing key(s): {', '.join(missing)}")

    try:
        vocabulary = Vocabulary(tuple(str(t) for t in payload["vocabulary"]))
        doc_count = int(payload["doc_count"])
        doc_lengths = tuple(int(v) for v in payload["doc_lengths"])
        doc_freq = tuple(int(v) for v in payload["doc_freq"])
        titles = tuple(str(t) for t in payload["titles"])
        vectors = tuple(
            {int(i): float(w) for i, w in vector} for vector in payload["vectors"]
        )
    except (TypeError, ValueError) as exc:
        raise IndexFormatError(f"{path}: malformed field ({exc})") from exc

    if len(titles) != doc_count or len(vectors) != doc_count:
        raise IndexFormatError(
            f"{path}: doc_count {doc_count} disagrees with "
            f"{len(titles)} titles / {len(vectors)} vectors"
        )
    if len(doc_lengths) != doc_count:
        raise IndexFormatError(f"{path}: doc_lengths length != doc_count")
    if len(doc_freq) != len(vocabulary):
        raise IndexFormatError(f"{path}: doc_freq length != vocabulary size")

    model = TfIdfModel(
        vocabulary=vocabulary,
        doc_count=doc_count,
        doc_lengths=doc_lengths,
        doc_freq=doc_freq,
        vectors=vectors,
    )
    return model, titles
