"""Engine configuration: stopword list, phrase mappings, ranking knobs.

Defaults point at the data files bundled with the package. A JSON config
file can override them; relative paths in the file resolve against the
file's own directory so a config travels with its data.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields
from importlib import resources
from pathlib import Path

from .recommender import AGGREGATIONS

_DATA = resources.files(__package__) / "data"

DEFAULT_STOPWORDS = Path(str(_DATA / "stopwords_en.txt"))
DEFAULT_COLLAPSE = Path(str(_DATA / "collapse_en.tsv"))


@dataclass(frozen=True)
class EngineConfig:
    stopword_path: Path = DEFAULT_STOPWORDS
    collapse_list_path: Path = DEFAULT_COLLAPSE
    aggregation: str = "max"

    def __post_init__(self):
        if self.aggregation not in AGGREGATIONS:
            raise ValueError(
                f"unknown aggregation {self.aggregation!r}; "
                f"expected one of {AGGREGATIONS}"
            )

    @classmethod
    def from_file(cls, path: str | Path) -> "EngineConfig":
        path = Path(path)
        raw = json.loads(path.read_text(encoding="utf-8"))
        if not isinstance(raw, dict):
            raise ValueError(f"{path}: config must be a JSON object")
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(raw) - known)
        if unknown:
            raise ValueError(f"{path}: unknown config key(s): {', '.join(unknown)}")
        kwargs: dict = {}
        for key in ("stopword_path", "collapse_list_path"):
            if key in raw:
                kwargs[key] = _resolve(raw[key], relative_to=path.parent)
        if "aggregation" in raw:
            kwargs["aggregation"] = raw["aggregation"]
        return cls(**kwargs)


def _resolve(value: str, relative_to: Path) -> Path:
    if os.path.isabs(value):
        return Path(value)
    return relative_to / value
