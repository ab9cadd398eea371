"""Weighting model behavior, checked against brute-force recomputation."""

from __future__ import annotations

from fractions import Fraction
from math import fsum, isclose, log10

import numpy as np
import pytest

import oracles
from vidrec import sample
from vidrec.catalog import Document
from vidrec.errors import EmptyVocabularyError, UnknownTermError, UnknownVideoError
from vidrec.vectorizer import (
    Vocabulary,
    build_vocabulary,
    dense_vector,
    fit,
    inverse_document_frequency,
    term_frequency,
    vector_of,
)


def _documents(token_lists):
    return [Document(video_id=i, tokens=tuple(t)) for i, t in enumerate(token_lists)]


SAMPLE_DOCS = _documents(sample.TOKENS)


class TestVocabulary:
    def test_first_occurrence_order(self):
        vocabulary = build_vocabulary(_documents([("b", "a", "b"), ("c", "a")]))
        assert vocabulary.terms == ("b", "a", "c")

    def test_sample_vocabulary(self):
        assert build_vocabulary(SAMPLE_DOCS).terms == sample.TERMS

    def test_no_duplicates(self):
        vocabulary = build_vocabulary(SAMPLE_DOCS)
        assert len(set(vocabulary.terms)) == len(vocabulary)

    def test_index_and_contains(self):
        vocabulary = Vocabulary(("x", "y"))
        assert vocabulary.index("y") == 1
        assert "x" in vocabulary
        assert "z" not in vocabulary

    def test_unknown_term_raises(self):
        with pytest.raises(UnknownTermError, match="'z'"):
            Vocabulary(("x",)).index("z")

    def test_all_empty_corpus_raises(self):
        with pytest.raises(EmptyVocabularyError):
            build_vocabulary(_documents([(), ()]))


class TestTermFrequency:
    def test_counts_over_length(self):
        document = Document(0, ("a", "b", "a", "c"))
        assert term_frequency("a", document) == 0.5
        assert term_frequency("b", document) == 0.25
        assert term_frequency("missing", document) == 0.0

    def test_empty_document_scores_zero(self):
        assert term_frequency("a", Document(0, ())) == 0.0

    def test_rows_sum_to_one(self):
        for document in SAMPLE_DOCS:
            total = fsum(term_frequency(t, document) for t in set(document.tokens))
            assert isclose(total, 1.0, rel_tol=0, abs_tol=1e-12)


class TestFit:
    def test_sample_doc_freq(self):
        model = fit(SAMPLE_DOCS)
        assert model.doc_freq == sample.DOC_FREQ
        assert model.doc_lengths == sample.DOC_LENGTHS
        assert model.doc_count == 5

    def test_idf_is_base10_of_count_ratio(self):
        model = fit(SAMPLE_DOCS)
        for term, df in zip(sample.TERMS, sample.DOC_FREQ):
            assert inverse_document_frequency(term, model) == log10(5 / df)

    def test_idf_zero_for_ubiquitous_term(self):
        model = fit(_documents([("a", "b"), ("a", "c")]))
        assert inverse_document_frequency("a", model) == 0.0

    def test_weights_match_brute_force(self):
        model = fit(SAMPLE_DOCS)
        expected = oracles.tfidf_grid(sample.TOKENS, sample.TERMS)
        for video_id in range(5):
            np.testing.assert_allclose(
                dense_vector(model, video_id), expected[video_id], rtol=0, atol=1e-12
            )

    def test_weight_is_share_times_rarity_exactly(self):
        model = fit(SAMPLE_DOCS)
        for video_id, tokens in enumerate(sample.TOKENS):
            vector = vector_of(model, video_id)
            for term in set(tokens):
                i = model.vocabulary.index(term)
                share = Fraction(tokens.count(term), len(tokens))
                expected = float(share) * log10(5 / sample.DOC_FREQ[i])
                if expected == 0.0:
                    assert i not in vector
                else:
                    assert vector[i] == expected

    def test_zero_weights_not_stored(self):
        model = fit(_documents([("a", "b"), ("a", "c")]))
        for vector in model.vectors:
            assert all(weight != 0.0 for weight in vector.values())
        # "a" occurs everywhere, so it carries no weight anywhere
        a = model.vocabulary.index("a")
        assert all(a not in vector for vector in model.vectors)

    def test_weights_never_negative(self):
        model = fit(SAMPLE_DOCS)
        for vector in model.vectors:
            assert all(weight > 0.0 for weight in vector.values())

    def test_empty_document_gets_empty_vector(self):
        model = fit(_documents([("a", "b"), ()]))
        assert model.vectors[1] == {}
        assert model.doc_lengths == (2, 0)

    def test_vectors_parallel_to_corpus(self):
        model = fit(SAMPLE_DOCS)
        assert model.doc_count == len(model.vectors) == len(model.doc_lengths)

    def test_vector_of_range_check(self):
        model = fit(SAMPLE_DOCS)
        with pytest.raises(UnknownVideoError):
            vector_of(model, 5)
        with pytest.raises(UnknownVideoError):
            vector_of(model, -1)

    def test_refit_is_deterministic(self):
        first = fit(SAMPLE_DOCS)
        second = fit(SAMPLE_DOCS)
        assert first.vocabulary.terms == second.vocabulary.terms
        assert first.vectors == second.vectors


class TestRandomizedAgainstOracle:
    def test_random_corpora_match_brute_force(self):
        rng = np.random.default_rng(42)
        alphabet = [f"t{i}" for i in range(12)]
        for _ in range(200):
            n_docs = int(rng.integers(2, 7))
            token_lists = [
                tuple(rng.choice(alphabet, size=int(rng.integers(1, 9))))
                for _ in range(n_docs)
            ]
            model = fit(_documents(token_lists))
            terms = model.vocabulary.terms
            expected = oracles.tfidf_grid(token_lists, terms)
            for video_id in range(n_docs):
                np.testing.assert_allclose(
                    dense_vector(model, video_id),
                    expected[video_id],
                    rtol=0,
                    atol=1e-12,
                )
