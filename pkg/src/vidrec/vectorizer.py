"""Term weighting over a cleaned corpus.

The weight of a term in a document is the product of two factors:

  raw term share   count(term in doc) / len(doc)
  rarity factor    log10(doc_count / docs_containing_term)

A term that appears in every document gets rarity 0 and therefore weight 0;
weights are never negative because the document-frequency ratio is >= 1.
Vectors are kept sparse as {vocabulary index: weight} with zero weights
unstored.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import log10

from .catalog import Document
from .errors import EmptyVocabularyError, UnknownTermError, UnknownVideoError


@dataclass(frozen=True)
class Vocabulary:
    """Unique corpus terms in order of first occurrence."""

    terms: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "_index_of", {term: i for i, term in enumerate(self.terms)}
        )

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, term: object) -> bool:
        return term in self._index_of

    def index(self, term: str) -> int:
        try:
            return self._index_of[term]
        except KeyError:
            raise UnknownTermError(term) from None


@dataclass(frozen=True)
class TfIdfModel:
    """Fitted weighting model: vocabulary, per-document stats, and the
    sparse weight vector of every document, in catalog order."""

    vocabulary: Vocabulary
    doc_count: int
    doc_lengths: tuple[int, ...]
    doc_freq: tuple[int, ...]
    vectors: tuple[dict[int, float], ...]


def build_vocabulary(corpus: list[Document] | tuple[Document, ...]) -> Vocabulary:
    """Collect unique terms across the corpus in first-occurrence order."""
    terms: list[str] = []
    seen: set[str] = set()
    for document in corpus:
        for token in document.tokens:
            if token not in seen:
                seen.add(token)
                terms.append(token)
    if not terms:
        raise EmptyVocabularyError("every document in the corpus is empty")
    return Vocabulary(tuple(terms))


def term_frequency(term: str, document: Document) -> float:
    """Share of the document's tokens equal to term; 0.0 if the document
    is empty."""
    if not document.tokens:
        return 0.0
    return document.tokens.count(term) / len(document.tokens)


def inverse_document_frequency(term: str, model: TfIdfModel) -> float:
    """log10 of (documents / documents containing term). Unknown terms
    raise rather than guessing a frequency."""
    index = model.vocabulary.index(term)
    return log10(model.doc_count / model.doc_freq[index])


def fit(corpus: list[Document] | tuple[Document, ...]) -> TfIdfModel:
    """Fit the weighting model over the whole corpus in one pass."""
    corpus = list(corpus)
    vocabulary = build_vocabulary(corpus)
    index_of = {term: i for i, term in enumerate(vocabulary.terms)}

    doc_freq = [0] * len(vocabulary)
    counts_per_doc: list[Counter[str]] = []
    for document in corpus:
        counts = Counter(document.tokens)
        counts_per_doc.append(counts)
        for term in counts:
            doc_freq[index_of[term]] += 1

    n = len(corpus)
    # Every vocabulary term occurs somewhere, so df >= 1 and n/df <= n.
    idf = [log10(n / df) for df in doc_freq]

    vectors: list[dict[int, float]] = []
    for document, counts in zip(corpus, counts_per_doc):
        length = len(document.tokens)
        vector: dict[int, float] = {}
        for term, count in counts.items():
            i = index_of[term]
            weight = (count / length) * idf[i]
            if weight != 0.0:
                vector[i] = weight
        vectors.append(vector)

    return TfIdfModel(
        vocabulary=vocabulary,
        doc_count=n,
        doc_lengths=tuple(len(d.tokens) for d in corpus),
        doc_freq=tuple(doc_freq),
        vectors=tuple(vectors),
    )


def vector_of(model: TfIdfModel, video_id: int) -> dict[int, float]:
    """Sparse weight vector of one document."""
    if not 0 <= video_id < model.doc_count:
        raise UnknownVideoError(
            f"video id {video_id} outside 0..{model.doc_count - 1}"
        )
    return model.vectors[video_id]


def dense_vector(model: TfIdfModel, video_id: int) -> list[float]:
    """Weight vector of one document expanded over the full vocabulary."""
    vector = vector_of(model, video_id)
    return [vector.get(i, 0.0) for i in range(len(model.vocabulary))]
