"""Content-based video recommendation engine.

Builds term-weight vectors from a video catalog's text fields, scores every
pair of videos by cosine similarity, and ranks unwatched videos for a watch
history. Ships with a CLI, an HTTP query service, and offline evaluation
metrics.
"""

from .catalog import Catalog, Document, VideoRecord, load_catalog
from .config import EngineConfig
from .engine import Engine, ScoredTitle
from .errors import VidrecError
from .evaluation import ConfusionMatrix, EvalReport, evaluate
from .recommender import Recommendation, WatchHistory, recommend
from .similarity import SimilarityMatrix, cosine, similarity_matrix
from .vectorizer import TfIdfModel, Vocabulary, fit

__version__ = "0.1.0"

__all__ = [
    "Catalog",
    "ConfusionMatrix",
    "Document",
    "Engine",
    "EngineConfig",
    "EvalReport",
    "Recommendation",
    "ScoredTitle",
    "SimilarityMatrix",
    "TfIdfModel",
    "VideoRecord",
    "VidrecError",
    "Vocabulary",
    "WatchHistory",
    "__version__",
    "cosine",
    "evaluate",
    "fit",
    "load_catalog",
    "recommend",
    "similarity_matrix",
]
