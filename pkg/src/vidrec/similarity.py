"""Pairwise cosine scores between video weight vectors.

Single-pair scoring works directly on sparse dict vectors; the full catalog
grid is built through a sparse matrix product, which is the same arithmetic
vectorized. Scores are clamped to [0, 1]: weights are non-negative, so any
excursion outside that range is floating-point noise.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from math import fsum, sqrt
from pathlib import Path

import numpy as np
from scipy import sparse

from .vectorizer import TfIdfModel

SparseVector = dict[int, float]


@dataclass(frozen=True, eq=False)
class SimilarityMatrix:
    """Symmetric n x n grid of pairwise scores, diagonal 1 (or 0 for a
    zero-weight document). The backing array is frozen read-only."""

    scores: np.ndarray

    def __post_init__(self):
        self.scores.setflags(write=False)

    @property
    def n(self) -> int:
        return self.scores.shape[0]


def cosine(a: SparseVector, b: SparseVector) -> float:
    """Cosine of the angle between two sparse non-negative vectors.

    Absent keys are exact zeros. Either vector having zero norm scores 0.0
    by convention (there is no angle to measure). Summation uses fsum so the
    result is bit-for-bit identical regardless of argument order.
    """
    norm_a = sqrt(fsum(w * w for w in a.values()))
    norm_b = sqrt(fsum(w * w for w in b.values()))
    if norm_a == 0.0 or norm_b == 0.0:
        return 0.0
    if a == b:
        # dot/(norm*norm) is not exactly 1.0 in floats; equal vectors are.
        return 1.0
    small, large = (a, b) if len(a) <= len(b) else (b, a)
    dot = fsum(w * large[i] for i, w in small.items() if i in large)
    if dot == 0.0:
        return 0.0
    return min(max(dot / (norm_a * norm_b), 0.0), 1.0)


def similarity_matrix(model: TfIdfModel) -> SimilarityMatrix:
    """Score every unordered pair of catalog documents.

    Rows are L2-normalized in sparse form and multiplied against their own
    transpose, then the strict upper triangle is mirrored so symmetry is
    exact rather than merely within rounding. Disjoint supports stay exact
    zeros because the product never touches those cells.
    """
    n = model.doc_count
    dim = len(model.vocabulary)

    indptr = [0]
    indices: list[int] = []
    data: list[float] = []
    for vector in model.vectors:
        for i, w in sorted(vector.items()):
            indices.append(i)
            data.append(w)
        indptr.append(len(indices))
    weights = sparse.csr_matrix(
        (np.asarray(data, dtype=np.float64), indices, indptr), shape=(n, dim)
    )

    squared = weights.copy()
    squared.data **= 2
    norms = np.sqrt(np.asarray(squared.sum(axis=1)).ravel())
    nonzero = norms > 0.0
    inverse = np.zeros(n, dtype=np.float64)
    inverse[nonzero] = 1.0 / norms[nonzero]
    normalized = sparse.diags(inverse) @ weights

    scores = (normalized @ normalized.T).toarray()
    for i in range(n - 1):
        scores[i + 1 :, i] = scores[i, i + 1 :]
    np.fill_diagonal(scores, np.where(nonzero, 1.0, 0.0))
    np.clip(scores, 0.0, 1.0, out=scores)
    return SimilarityMatrix(scores=scores)


def format_matrix(matrix: SimilarityMatrix, labels: tuple[str, ...] | list[str]) -> str:
    """Render the grid as labeled CSV text, six decimal places per score.

    First row is "title" plus every label in catalog order; each following
    row is a label plus its full score row in the same order.
    """
    labels = list(labels)
    if len(labels) != matrix.n:
        raise ValueError(f"{len(labels)} labels for a {matrix.n}-row matrix")
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["title", *labels])
    for label, row in zip(labels, matrix.scores):
        writer.writerow([label, *(f"{value:.6f}" for value in row)])
    return buffer.getvalue()


def export_matrix(
    matrix: SimilarityMatrix,
    labels: tuple[str, ...] | list[str],
    destination: str | Path,
) -> None:
    """Write the labeled CSV grid to a file."""
    Path(destination).write_text(format_matrix(matrix, labels), encoding="utf-8")
