"""Shared fixtures plus the acceptance summary hook.

The demo engine fixtures are session-scoped: every object involved is
immutable, and fitting once keeps the suite fast.
"""

from __future__ import annotations

import pytest

from vidrec import sample
from vidrec.catalog import load_collapse_list, load_stopwords
from vidrec.config import DEFAULT_COLLAPSE, DEFAULT_STOPWORDS

ACCEPTANCE_FILE = "test_acceptance.py"

CRITERIA = {
    "c01": "raw term shares match the recorded grid exactly",
    "c02": "rarity factors match the recorded products",
    "c03": "weight grid matches, wrong cell flagged as deviation",
    "c04": "document vectors match the corrected grid",
    "c05": "pair scores: unit diagonal, exact zeros, both pair variants",
    "c06": "ranking goldens for single-title histories",
    "c07": "metrics within 5e-5 of the recorded figures",
    "c08": "property suites, 1000+ seeded cases each",
    "c09": "full-scale build and serve under five minutes",
    "c10": "save/load round-trip reproduces the matrix export byte-for-byte",
}


@pytest.fixture(scope="session")
def default_stopwords():
    return load_stopwords(DEFAULT_STOPWORDS)


@pytest.fixture(scope="session")
def default_collapse():
    return load_collapse_list(DEFAULT_COLLAPSE)


@pytest.fixture(scope="session")
def sample_catalog_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("catalog") / "sample_catalog.csv"
    return sample.write_sample_catalog(path)


@pytest.fixture(scope="session")
def sample_engine():
    return sample.sample_engine()


@pytest.fixture(scope="session")
def sample_model(sample_engine):
    return sample_engine.model


@pytest.fixture(scope="session")
def sample_matrix(sample_engine):
    return sample_engine.matrix


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one PASS/FAIL line per acceptance criterion."""
    verdicts: dict[str, bool] = {}
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            if f"{ACCEPTANCE_FILE}::test_c" not in nodeid:
                continue
            name = nodeid.split("::test_", 1)[1][:3]
            if name not in CRITERIA:
                continue
            passed = outcome == "passed"
            verdicts[name] = verdicts.get(name, True) and passed
    if not verdicts:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name in sorted(CRITERIA):
        if name not in verdicts:
            continue
        verdict = "PASS" if verdicts[name] else "FAIL"
        terminalreporter.write_line(f"{name} {CRITERIA[name]}: {verdict}")
