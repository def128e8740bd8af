import pytest
from fastapi.testclient import TestClient

from gausslint.config import settings
from gausslint.main import app
from gausslint.tools.state import report_store


@pytest.fixture
def client():
    report_store.clear()
    with TestClient(app) as test_client:
        yield test_client


def test_health(client):
    response = client.get("/")
    assert response.status_code == 200
    assert response.json()["status"] == "healthy"
    assert "X-Trace-ID" in response.headers


def test_config(client):
    data = client.get("/config").json()
    assert data["api_max_size"] == settings.API_MAX_SIZE
    assert data["api_max_chords"] == settings.API_MAX_CHORDS
    assert data["max_size"] <= 12
    assert data["dedup"] in ("set", "lyndon-test")


def test_check_trefoil(client):
    response = client.post("/check", json={"diagram": "123123"})
    assert response.status_code == 200
    data = response.json()
    assert data["realizable"] and data["stz"] and data["prime"]
    assert data["lintel"] == [[0, 3], [1, 4], [2, 5]]


def test_check_bad_input(client):
    response = client.post("/check", json={"diagram": "1212"})
    assert response.status_code == 400
    assert "C1 violation" in response.json()["detail"]


def test_canon_and_convert(client):
    canon = client.post("/canon", json={"diagram": "[[0,5],[1,2],[3,4]]"}).json()
    assert canon["canonical"] == "[[0,1],[2,3],[4,5]]"

    converted = client.post("/convert", json={"diagram": "12334124"}).json()
    assert converted == {"lintel": "[[0,5],[1,6],[2,3],[4,7]]", "word": "12334124"}


def test_render(client):
    data = client.post("/render", json={"diagram": "123123", "format": "dot"}).json()
    assert data["format"] == "dot"
    assert "1 -- 2;" in data["content"]
    assert client.post("/render", json={"diagram": "123123", "format": "png"}).status_code == 400


def test_enumerate_caches_reports(client):
    body = {"size": 5, "filter": "prime,ca"}
    first = client.post("/enumerate", json=body)
    assert first.status_code == 200
    data = first.json()
    assert data["report"]["count"] == 2
    assert len(data["lintels"]) == 2
    assert (5, "prime+CA", settings.DEDUP_MODE) in report_store

    second = client.post("/enumerate", json=body).json()
    assert second == data


def test_enumerate_limits(client):
    too_big = client.post("/enumerate", json={"size": settings.API_MAX_SIZE + 1})
    assert too_big.status_code == 413
    assert client.post("/enumerate", json={"size": 0}).status_code == 422
    assert client.post("/enumerate", json={"size": 4, "filter": "prime,nope"}).status_code == 400


def test_discrepancies(client):
    response = client.post("/discrepancies", json={"size": 6, "a": "B", "b": "CA"})
    assert response.status_code == 200
    assert response.json() == []


def test_non_decimal_digits_are_bad_input(client):
    response = client.post("/check", json={"diagram": "1²"})
    assert response.status_code == 400


def test_diagram_chord_limit(client, monkeypatch):
    too_many = "[" + ",".join(f"[{2 * i},{2 * i + 1}]" for i in range(settings.API_MAX_CHORDS + 1)) + "]"
    response = client.post("/check", json={"diagram": too_many})
    assert response.status_code == 413

    monkeypatch.setattr(settings, "API_MAX_CHORDS", 2)
    assert client.post("/check", json={"diagram": "123123"}).status_code == 413
    assert client.post("/render", json={"diagram": "123123", "format": "dot"}).status_code == 413
    assert client.post("/check", json={"diagram": "1221"}).status_code == 200
