"""HTTP service routes, exercised in-process."""

from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from vidrec import sample
from vidrec.service import create_app


@pytest.fixture(scope="module")
def client():
    app = create_app(sample.sample_engine())
    with TestClient(app) as test_client:
        yield test_client


class TestVideos:
    def test_lists_catalog_in_order(self, client):
        response = client.get("/videos")
        assert response.status_code == 200
        assert response.json() == [
            {"id": i, "title": t} for i, t in enumerate(sample.TITLES)
        ]


class TestSimilar:
    def test_ranked_items(self, client):
        response = client.get("/similar", params={"title": "Titanic", "k": "2"})
        assert response.status_code == 200
        items = response.json()["items"]
        assert [(i["id"], i["title"]) for i in items] == [
            (3, "Great gatsby"),
            (4, "Forrest gump"),
        ]
        assert items[0]["score"] == pytest.approx(0.2073251, abs=1e-6)

    def test_self_and_zero_scores_excluded(self, client):
        response = client.get("/similar", params={"title": "Ironman", "k": "10"})
        titles = [i["title"] for i in response.json()["items"]]
        assert titles == ["Avengers"]

    def test_missing_title_is_400(self, client):
        assert client.get("/similar").status_code == 400

    def test_unknown_title_is_404_with_suggestions(self, client):
        response = client.get("/similar", params={"title": "Iron"})
        assert response.status_code == 404
        assert "Ironman" in response.json()["detail"]

    def test_malformed_k_is_400(self, client):
        for bad in ("abc", "1.5", "0", "-2"):
            response = client.get("/similar", params={"title": "Ironman", "k": bad})
            assert response.status_code == 400, bad

    def test_k_defaults_when_omitted(self, client):
        response = client.get("/similar", params={"title": "Ironman"})
        assert response.status_code == 200
        assert len(response.json()["items"]) == 1


class TestRecommend:
    def test_ranked_items(self, client):
        response = client.get("/recommend", params={"watched": "1", "k": "2"})
        assert response.status_code == 200
        assert [i["title"] for i in response.json()["items"]] == [
            "Great gatsby",
            "Forrest gump",
        ]

    def test_multi_history_excludes_watched(self, client):
        response = client.get("/recommend", params={"watched": "0,2", "k": "5"})
        ids = [i["id"] for i in response.json()["items"]]
        assert 0 not in ids and 2 not in ids

    def test_empty_history_is_empty_200(self, client):
        response = client.get("/recommend", params={"watched": "", "k": "3"})
        assert response.status_code == 200
        assert response.json() == {"items": []}

    def test_malformed_watched_is_400(self, client):
        response = client.get("/recommend", params={"watched": "1,x"})
        assert response.status_code == 400

    def test_unknown_id_is_404(self, client):
        response = client.get("/recommend", params={"watched": "42"})
        assert response.status_code == 404

    def test_malformed_k_is_400(self, client):
        response = client.get("/recommend", params={"watched": "1", "k": "many"})
        assert response.status_code == 400


class TestMatrixAndHealth:
    def test_matrix_is_the_export_text(self, client, sample_engine):
        response = client.get("/matrix")
        assert response.status_code == 200
        assert response.text == sample_engine.matrix_csv()

    def test_health(self, client):
        response = client.get("/health")
        assert response.status_code == 200
        assert response.json() == {
            "status": "ok",
            "videos": 5,
            "vocabulary": 15,
            "format_version": 1,
        }


class TestReadOnlyDeterminism:
    def test_identical_requests_identical_bodies(self, client):
        first = client.get("/similar", params={"title": "Titanic", "k": "3"})
        second = client.get("/similar", params={"title": "Titanic", "k": "3"})
        assert first.content == second.content
        assert client.get("/matrix").content == client.get("/matrix").content
