"""Command-line front end: a thin client over the engine library."""

from __future__ import annotations

import argparse
import sys

from .config import EngineConfig
from .engine import Engine
from .errors import VidrecError
from .evaluation import ConfusionMatrix, evaluate, format_metric
from .similarity import export_matrix

DEFAULT_INDEX = "index.json"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vidrec",
        description="Content-based video recommendation engine",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="fit a model from a catalog CSV and save it")
    p.add_argument("catalog", help="CSV with title, genre, cast, overview columns")
    p.add_argument("--config", help="engine config JSON")
    p.add_argument("--index", default=DEFAULT_INDEX, help="output index path")

    p = sub.add_parser("similar", help="videos most similar to one title")
    p.add_argument("title")
    p.add_argument("--index", default=DEFAULT_INDEX)
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--config", help="engine config JSON")

    p = sub.add_parser("recommend", help="top-k videos for a watch history")
    p.add_argument("--watched", default="", help="comma-separated video ids")
    p.add_argument("--index", default=DEFAULT_INDEX)
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--config", help="engine config JSON")

    p = sub.add_parser("evaluate", help="metrics from confusion counts")
    p.add_argument("tp", type=int)
    p.add_argument("fn", type=int)
    p.add_argument("fp", type=int)
    p.add_argument("tn", type=int)

    p = sub.add_parser("export-matrix", help="write the full similarity grid as CSV")
    p.add_argument("destination")
    p.add_argument("--index", default=DEFAULT_INDEX)
    p.add_argument("--config", help="engine config JSON")

    p = sub.add_parser("serve", help="run the HTTP query service")
    p.add_argument("--index", default=DEFAULT_INDEX)
    p.add_argument("--bind", default="127.0.0.1:8000", help="host:port to listen on")
    p.add_argument("--config", help="engine config JSON")

    return parser


def _load_config(args) -> EngineConfig:
    if getattr(args, "config", None):
        return EngineConfig.from_file(args.config)
    return EngineConfig()


def _load_engine(args) -> Engine:
    return Engine.from_index(args.index, _load_config(args))


def _parse_watched(raw: str) -> list[int]:
    ids = []
    for piece in raw.split(","):
        piece = piece.strip()
        if not piece:
            continue
        try:
            ids.append(int(piece))
        except ValueError:
            raise ValueError(f"malformed watched id: {piece!r}") from None
    return ids


def _print_scored(scored) -> None:
    for item in scored:
        print(f"{item.title}\t{item.score:.6f}")


def _cmd_build(args) -> int:
    engine = Engine.build(args.catalog, _load_config(args))
    engine.save(args.index)
    catalog = engine.source_catalog
    for warning in catalog.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    print(
        f"indexed {len(catalog.records)} videos "
        f"({catalog.dropped_rows} dropped), "
        f"{len(engine.model.vocabulary)} terms -> {args.index}"
    )
    return 0


def _cmd_similar(args) -> int:
    _print_scored(_load_engine(args).similar(args.title, args.k))
    return 0


def _cmd_recommend(args) -> int:
    watched = _parse_watched(args.watched)
    _print_scored(_load_engine(args).recommend_for(watched, args.k))
    return 0


def _cmd_evaluate(args) -> int:
    report = evaluate(ConfusionMatrix(tp=args.tp, fn=args.fn, fp=args.fp, tn=args.tn))
    print(f"precision {format_metric(report.precision)}")
    print(f"recall {format_metric(report.recall)}")
    print(f"f1 {format_metric(report.f1)}")
    return 0


def _cmd_export_matrix(args) -> int:
    engine = _load_engine(args)
    export_matrix(engine.matrix, engine.titles, args.destination)
    print(f"wrote {engine.matrix.n}x{engine.matrix.n} matrix -> {args.destination}")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    host, _, port = args.bind.rpartition(":")
    if not host or not port.isdigit():
        raise ValueError(f"malformed bind address: {args.bind!r}; expected host:port")
    uvicorn.run(create_app(_load_engine(args)), host=host, port=int(port))
    return 0


_COMMANDS = {
    "build": _cmd_build,
    "similar": _cmd_similar,
    "recommend": _cmd_recommend,
    "evaluate": _cmd_evaluate,
    "export-matrix": _cmd_export_matrix,
    "serve": _cmd_serve,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (VidrecError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
