"""Read-only HTTP query surface over a loaded engine.

Routes answer from the engine's precomputed state and never mutate it, so
identical requests always return identical bodies. Malformed query values
are 400s; lookups that miss the catalog are 404s.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from fastapi.responses import PlainTextResponse
from pydantic import BaseModel

from .engine import Engine
from .errors import UnknownTitleError, UnknownVideoError
from .index_io import FORMAT_VERSION

DEFAULT_K = 10


class VideoItem(BaseModel):
    id: int
    title: str


class ScoredItem(BaseModel):
    id: int
    title: str
    score: float


class RankedList(BaseModel):
    items: list[ScoredItem]


class HealthInfo(BaseModel):
    status: str
    videos: int
    vocabulary: int
    format_version: int


def _parse_k(raw: str | None) -> int:
    # k arrives as a raw string so a malformed value can be a 400 instead
    # of the framework's default 422.
    if raw is None or raw == "":
        return DEFAULT_K
    try:
        k = int(raw)
    except ValueError:
        raise HTTPException(status_code=400, detail=f"malformed k: {raw!r}") from None
    if k < 1:
        raise HTTPException(status_code=400, detail="k must be >= 1")
    return k


def _parse_watched(raw: str | None) -> tuple[int, ...]:
    if raw is None or raw == "":
        return ()
    ids = []
    for piece in raw.split(","):
        piece = piece.strip()
        try:
            ids.append(int(piece))
        except ValueError:
            raise HTTPException(
                status_code=400, detail=f"malformed watched id: {piece!r}"
            ) from None
    return tuple(ids)


def _ranked(scored) -> RankedList:
    return RankedList(
        items=[ScoredItem(id=s.video_id, title=s.title, score=s.score) for s in scored]
    )


def create_app(engine: Engine) -> FastAPI:
    app = FastAPI(title="vidrec", version="0.1.0")

    @app.get("/videos", response_model=list[VideoItem])
    def videos() -> list[VideoItem]:
        return [VideoItem(id=i, title=t) for i, t in enumerate(engine.titles)]

    @app.get("/similar", response_model=RankedList)
    def similar(title: str | None = None, k: str | None = None) -> RankedList:
        if title is None:
            raise HTTPException(status_code=400, detail="missing title")
        top_k = _parse_k(k)
        try:
            return _ranked(engine.similar(title, top_k))
        except UnknownTitleError as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from None

    @app.get("/recommend", response_model=RankedList)
    def recommend(watched: str | None = None, k: str | None = None) -> RankedList:
        top_k = _parse_k(k)
        watched_ids = _parse_watched(watched)
        try:
            return _ranked(engine.recommend_for(watched_ids, top_k))
        except UnknownVideoError as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from None

    @app.get("/matrix", response_class=PlainTextResponse)
    def matrix() -> str:
        return engine.matrix_csv()

    @app.get("/health", response_model=HealthInfo)
    def health() -> HealthInfo:
        stats = engine.stats()
        return HealthInfo(
            status="ok",
            videos=stats["videos"],
            vocabulary=stats["vocabulary"],
            format_version=FORMAT_VERSION,
        )

    return app
