"""Five-video demo catalog and its golden reference tables.

The tables record the expected cleaned corpus, raw term shares, document
frequencies, combined weights, pair scores, and quality metrics for the demo
catalog under the default configuration. They double as fixtures for the
test suite and as a worked example for the README.

A few recorded figures are internally inconsistent with the formulas the
engine implements (they do not survive recomputation at the precision they
are recorded to). deviation_report() recomputes every figure and returns the
cells that disagree; the test suite pins both the recomputed values and the
expected list of deviations, so a silent change to either side fails loudly.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

from .catalog import Catalog, VideoRecord, build_corpus, load_collapse_list, load_stopwords
from .config import DEFAULT_COLLAPSE, DEFAULT_STOPWORDS
from .engine import Engine
from .evaluation import ConfusionMatrix, evaluate
from .vectorizer import dense_vector, fit

# Raw rows as they would sit in a catalog CSV: title, genre, cast, overview.
SAMPLE_ROWS = (
    ("Ironman", "scifi", "Rober Downey Jr", "mcu, weaponed suit, super hero"),
    ("Titanic", "romance", "Leonardo Dicarpio", "sea disaster, romance"),
    ("Avengers", "scifi", "Rober Downey Jr, chris evans", "mcu, shield, super hero"),
    (
        "Great gatsby",
        "romance, novel",
        "Leonardo Dicarpio",
        "social difference, obsession, novel",
    ),
    ("Forrest gump", "novel", "Tom Hank", "inspiration, low iq, romance"),
)

TITLES = tuple(row[0] for row in SAMPLE_ROWS)

# Cleaned documents the default configuration must produce from SAMPLE_ROWS.
TOKENS = (
    ("scifi", "robertdowneyjr", "mcu", "weaponedsuit", "superhero"),
    ("romance", "leonardodicarpio", "seadisaster", "romance"),
    ("scifi", "robertdowneyjr", "chrisevans", "mcu", "shield", "superhero"),
    ("romance", "novel", "leonardodicarpio", "socialdifference", "obsession", "novel"),
    ("novel", "tomhank", "inspirational", "romance"),
)

DOC_LENGTHS = (5, 4, 6, 6, 4)

# Vocabulary in first-occurrence order.
TERMS = (
    "scifi",
    "robertdowneyjr",
    "mcu",
    "weaponedsuit",
    "superhero",
    "romance",
    "leonardodicarpio",
    "seadisaster",
    "chrisevans",
    "shield",
    "novel",
    "socialdifference",
    "obsession",
    "tomhank",
    "inspirational",
)

# Per-document term counts over TERMS; raw share = count / document length.
TF_COUNTS = (
    (1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 2, 1, 1, 0, 0, 0, 0, 0, 0, 0),
    (1, 1, 1, 0, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 2, 1, 1, 0, 0),
    (0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 1),
)

DOC_FREQ = (2, 2, 2, 1, 2, 3, 2, 1, 1, 1, 2, 1, 1, 1, 1)

# Rarity factor per term, recorded to seven decimals.
REFERENCE_IDF = (
    0.3979400,
    0.3979400,
    0.3979400,
    0.6989700,
    0.3979400,
    0.2218487,
    0.3979400,
    0.6989700,
    0.6989700,
    0.6989700,
    0.3979400,
    0.6989700,
    0.6989700,
    0.6989700,
    0.6989700,
)

# Combined weight grid, recorded to seven decimals. One cell (Avengers,
# scifi) is recorded as 0.0795880 but the formula gives 0.0663233; the
# recorded figure equals a 5-token document's share although Avengers has 6
# tokens. deviation_report() flags exactly that cell.
REFERENCE_WEIGHTS = (
    (0.0795880, 0.0795880, 0.0795880, 0.1397940, 0.0795880,
     0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.1109244, 0.0994850, 0.1747425,
     0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
    (0.0795880, 0.0663233, 0.0663233, 0.0, 0.0663233,
     0.0, 0.0, 0.0, 0.1164950, 0.1164950, 0.0, 0.0, 0.0, 0.0, 0.0),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0369748, 0.0663233, 0.0,
     0.0, 0.0, 0.1326467, 0.1164950, 0.1164950, 0.0, 0.0),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0554622, 0.0, 0.0, 0.0, 0.0,
     0.0994850, 0.0, 0.0, 0.1747425, 0.1747425),
)

# Pair score recorded to two decimals, and pairs recorded as exact zeros.
REFERENCE_PAIR = ("Ironman", "Avengers", 0.48)
REFERENCE_ZERO_PAIRS = (("Ironman", "Titanic"), ("Ironman", "Great gatsby"))

# Offline evaluation example: counts and the metrics recorded for them.
REFERENCE_CONFUSION = ConfusionMatrix(tp=10, fn=2, fp=1, tn=4)
REFERENCE_METRICS = {"precision": 0.90901, "recall": 0.83333, "f1": 0.86952}

# Half-ulp of the precision each table is recorded to: figures that round
# correctly sit within these of the recomputed values.
_WEIGHT_TOLERANCE = 5e-8
_PAIR_TOLERANCE = 5e-3
_METRIC_TOLERANCE = 5e-6

_METRIC_NOTES = {
    "precision": "no five-decimal rounding of tp/(tp+fp) yields the recorded figure",
    "f1": "consistent with recombining the recorded precision and recall, "
    "so the rounding error was carried downstream",
}


@dataclass(frozen=True)
class Deviation:
    """One recorded figure that disagrees with its own formula."""

    table: str
    cell: str
    recorded: float
    computed: float
    note: str = ""


def sample_records() -> tuple[VideoRecord, ...]:
    return tuple(VideoRecord(i, *row) for i, row in enumerate(SAMPLE_ROWS))


def sample_catalog() -> Catalog:
    """Demo rows cleaned under the default configuration."""
    stopwords = load_stopwords(DEFAULT_STOPWORDS)
    collapse = load_collapse_list(DEFAULT_COLLAPSE)
    records = sample_records()
    documents, warnings = build_corpus(records, stopwords, collapse)
    return Catalog(
        records=records,
        documents=tuple(documents),
        dropped_rows=0,
        warnings=tuple(warnings),
    )


def sample_engine() -> Engine:
    """Engine fitted on the demo catalog, ready for queries."""
    catalog = sample_catalog()
    model = fit(catalog.documents)
    titles = tuple(record.title for record in catalog.records)
    return Engine(model, titles, source_catalog=catalog)


def write_sample_catalog(path: str | Path) -> Path:
    """Write the demo rows as a catalog CSV, e.g. for CLI walkthroughs."""
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["title", "genre", "cast", "overview"])
        writer.writerows(SAMPLE_ROWS)
    return path


def deviation_report() -> list[Deviation]:
    """Recompute every recorded figure and list the ones that disagree.

    The comparison threshold for each table is half an ulp at its recorded
    precision, so a correctly rounded figure never appears here.
    """
    engine = sample_engine()
    model = engine.model
    deviations: list[Deviation] = []

    for d, title in enumerate(TITLES):
        computed_row = dense_vector(model, d)
        for t, term in enumerate(TERMS):
            recorded = REFERENCE_WEIGHTS[d][t]
            computed = computed_row[t]
            if abs(recorded - computed) > _WEIGHT_TOLERANCE:
                deviations.append(
                    Deviation(
                        table="weights",
                        cell=f"({title}, {term})",
                        recorded=recorded,
                        computed=computed,
                        note="recorded figure uses the wrong document length",
                    )
                )

    id_of = {title: i for i, title in enumerate(TITLES)}
    a, b, recorded_pair = REFERENCE_PAIR
    computed_pair = float(engine.matrix.scores[id_of[a], id_of[b]])
    if abs(recorded_pair - computed_pair) > _PAIR_TOLERANCE:
        deviations.append(
            Deviation(
                table="pairwise",
                cell=f"({a}, {b})",
                recorded=recorded_pair,
                computed=computed_pair,
                note="propagates the wrong weight cell above",
            )
        )
    for a, b in REFERENCE_ZERO_PAIRS:
        computed_zero = float(engine.matrix.scores[id_of[a], id_of[b]])
        if computed_zero != 0.0:
            deviations.append(
                Deviation(
                    table="pairwise",
                    cell=f"({a}, {b})",
                    recorded=0.0,
                    computed=computed_zero,
                )
            )

    report = evaluate(REFERENCE_CONFUSION)
    for name, recorded_metric in REFERENCE_METRICS.items():
        computed_metric = getattr(report, name)
        if abs(recorded_metric - computed_metric) > _METRIC_TOLERANCE:
            deviations.append(
                Deviation(
                    table="metrics",
                    cell=name,
                    recorded=recorded_metric,
                    computed=computed_metric,
                    note=_METRIC_NOTES.get(name, ""),
                )
            )

    return deviations
