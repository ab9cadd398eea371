"""End-to-end orchestration: build from a catalog, query, persist.

An Engine is a read-only query surface. Construction fits nothing lazily;
the similarity grid is built up front so every query afterward is a lookup.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .catalog import Catalog, load_catalog, load_collapse_list, load_stopwords
from .config import EngineConfig
from .errors import UnknownTitleError
from .index_io import FORMAT_VERSION, load_index, save_index
from .recommender import WatchHistory, recommend
from .similarity import format_matrix, similarity_matrix
from .vectorizer import TfIdfModel, fit

MAX_TITLE_SUGGESTIONS = 5


@dataclass(frozen=True)
class ScoredTitle:
    video_id: int
    title: str
    score: float


class Engine:
    """Fitted model, catalog titles, and the precomputed similarity grid."""

    def __init__(
        self,
        model: TfIdfModel,
        titles,
        config: EngineConfig | None = None,
        source_catalog: Catalog | None = None,
    ):
        self.model = model
        self.titles = tuple(titles)
        if len(self.titles) != model.doc_count:
            raise ValueError(
                f"{len(self.titles)} titles for a {model.doc_count}-document model"
            )
        self.config = config if config is not None else EngineConfig()
        self.source_catalog = source_catalog
        self.matrix = similarity_matrix(model)
        self._id_of = {title: i for i, title in enumerate(self.titles)}

    @classmethod
    def build(cls, catalog_path: str | Path, config: EngineConfig | None = None):
        """Fit a fresh engine from a catalog CSV."""
        config = config if config is not None else EngineConfig()
        stopwords = load_stopwords(config.stopword_path)
        collapse = load_collapse_list(config.collapse_list_path)
        catalog = load_catalog(catalog_path, stopwords=stopwords, collapse=collapse)
        model = fit(catalog.documents)
        titles = tuple(record.title for record in catalog.records)
        return cls(model, titles, config, source_catalog=catalog)

    @classmethod
    def from_index(cls, index_path: str | Path, config: EngineConfig | None = None):
        """Restore an engine from a saved index; the grid is recomputed."""
        model, titles = load_index(index_path)
        return cls(model, titles, config)

    def save(self, index_path: str | Path) -> None:
        save_index(self.model, self.titles, index_path)

    def id_of_title(self, title: str) -> int:
        """Exact title lookup. Misses raise and carry up to
        MAX_TITLE_SUGGESTIONS exact-prefix matches as suggestions."""
        try:
            return self._id_of[title]
        except KeyError:
            suggestions = tuple(
                t for t in self.titles if t.startswith(title)
            )[:MAX_TITLE_SUGGESTIONS]
            raise UnknownTitleError(title, suggestions) from None

    def similar(self, title: str, k: int) -> list[ScoredTitle]:
        """Videos most similar to one title; the title itself is excluded
        and zero-score videos never appear."""
        video_id = self.id_of_title(title)
        history = WatchHistory(user_id="", watched=(video_id,))
        return self._scored(
            recommend(self.matrix, history, k, self.config.aggregation)
        )

    def recommend_for(self, watched_ids, k: int) -> list[ScoredTitle]:
        """Top-k unwatched videos for a watch history of catalog ids."""
        history = WatchHistory.of(watched_ids)
        return self._scored(
            recommend(self.matrix, history, k, self.config.aggregation)
        )

    def _scored(self, recommendations) -> list[ScoredTitle]:
        return [
            ScoredTitle(r.video_id, self.titles[r.video_id], r.score)
            for r in recommendations
        ]

    def matrix_csv(self) -> str:
        return format_matrix(self.matrix, self.titles)

    def stats(self) -> dict:
        return {
            "videos": self.model.doc_count,
            "vocabulary": len(self.model.vocabulary),
            "format_version": FORMAT_VERSION,
        }
