"""Ranked suggestions from a watch history and the similarity grid."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnknownVideoError
from .similarity import SimilarityMatrix

AGGREGATIONS = ("max", "mean")


@dataclass(frozen=True)
class WatchHistory:
    """Videos a user has already seen, deduplicated, first-seen order."""

    user_id: str
    watched: tuple[int, ...]

    @classmethod
    def of(cls, video_ids, user_id: str = "") -> "WatchHistory":
        seen: set[int] = set()
        ordered: list[int] = []
        for video_id in video_ids:
            if video_id not in seen:
                seen.add(video_id)
                ordered.append(video_id)
        return cls(user_id=user_id, watched=tuple(ordered))


@dataclass(frozen=True)
class Recommendation:
    video_id: int
    score: float


def _check_ids(matrix: SimilarityMatrix, video_ids) -> None:
    for video_id in video_ids:
        if not 0 <= video_id < matrix.n:
            raise UnknownVideoError(
                f"video id {video_id} outside 0..{matrix.n - 1}"
            )


def _check_aggregation(aggregation: str) -> None:
    if aggregation not in AGGREGATIONS:
        raise ValueError(
            f"unknown aggregation {aggregation!r}; expected one of {AGGREGATIONS}"
        )


def score_candidate(
    matrix: SimilarityMatrix,
    history: WatchHistory,
    candidate: int,
    aggregation: str = "max",
) -> float:
    """Aggregate similarity between one unwatched candidate and every
    watched video."""
    _check_aggregation(aggregation)
    if not history.watched:
        raise ValueError("watch history is empty")
    if candidate in history.watched:
        raise ValueError(f"candidate {candidate} is already in the watch history")
    _check_ids(matrix, (*history.watched, candidate))
    column = matrix.scores[list(history.watched), candidate]
    return float(column.max() if aggregation == "max" else column.mean())


def recommend(
    matrix: SimilarityMatrix,
    history: WatchHistory,
    k: int,
    aggregation: str = "max",
) -> list[Recommendation]:
    """Top-k unwatched videos by aggregated similarity to the history.

    Zero-score candidates are never recommended, so the result may be
    shorter than k. Ties break toward the lower video id, which keeps the
    ranking deterministic. An empty history yields an empty list.
    """
    _check_aggregation(aggregation)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if not history.watched:
        return []
    _check_ids(matrix, history.watched)

    rows = matrix.scores[list(history.watched)]
    aggregated = rows.max(axis=0) if aggregation == "max" else rows.mean(axis=0)
    watched = set(history.watched)
    ranked = sorted(
        (
            Recommendation(video_id=i, score=float(score))
            for i, score in enumerate(aggregated)
            if i not in watched and score > 0.0
        ),
        key=lambda r: (-r.score, r.video_id),
    )
    return ranked[:k]
