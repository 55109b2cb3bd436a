import pytest
from fastapi.testclient import TestClient

from tanglekit.service.app import create_app

UNKNOT_SRC = "tangle 0 0\ncap 1\ncup 1\n"
TREFOIL_SRC = "braid 2: 1 1 1 ; close\n"


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health(client):
    assert client.get("/health").json() == {"status": "ok"}


def test_parse(client):
    resp = client.post("/parse", json={"source": TREFOIL_SRC})
    assert resp.status_code == 200
    body = resp.json()
    assert body["n"] == 0 and body["m"] == 0
    assert body["crossings"] == 3
    assert body["components"] == 1
    assert body["canonical"].startswith("tangle 0 0\n")


def test_parse_error_is_422(client):
    resp = client.post("/parse", json={"source": "tangle 0 0\ncros 1 2\n"})
    assert resp.status_code == 422
    assert "unknown layer" in resp.json()["detail"]


def test_jones(client):
    resp = client.post("/jones", json={"source": UNKNOT_SRC})
    assert resp.json() == {"jones": "q^-1 + q", "components": 1}
    resp = client.post("/jones", json={"source": TREFOIL_SRC})
    assert resp.json()["jones"] == "-q^-9 + q^-5 + q^-3 + q^-1"


def test_jones_rejects_open_tangle(client):
    resp = client.post("/jones", json={"source": "tangle 2 2\ncross 1 1\n"})
    assert resp.status_code == 422


def test_homology(client):
    resp = client.post("/homology", json={"source": UNKNOT_SRC})
    body = resp.json()
    assert body["dims"] == [{"i": -1, "j": 1, "dim": 1}, {"i": 1, "j": -1, "dim": 1}]
    assert body["total"] == 2
    resp = client.post("/homology", json={"source": TREFOIL_SRC, "standard": True})
    body = resp.json()
    assert body["standard"] is True
    assert body["total"] == 4


def test_reduced(client):
    resp = client.post("/reduced", json={"source": UNKNOT_SRC, "mark": "1:1"})
    body = resp.json()
    assert body["dims"] == [{"i": 0, "j": 0, "dim": 1}]
    assert body["euler_matches_jones"] is True
    resp = client.post("/reduced", json={"source": UNKNOT_SRC, "mark": "3:1"})
    assert resp.status_code == 422


def test_euler(client):
    resp = client.post("/euler", json={"source": TREFOIL_SRC})
    body = resp.json()
    assert body["matches"] is True
    assert body["jones"] == body["euler"]


def test_skein(client):
    resp = client.post("/skein", json={"source": TREFOIL_SRC, "crossing": 1})
    body = resp.json()
    assert body["ok"] is True
    resp = client.post("/skein", json={"source": TREFOIL_SRC, "crossing": 9})
    assert resp.status_code == 422


def test_relcheck(client):
    resp = client.post("/relcheck", json={"max_width": 3, "model": "rt"})
    body = resp.json()
    assert body["ok"] is True and body["failed"] == 0
    assert set(body["families"]) == {
        "r0", "r1", "r2", "r3", "capcap", "cupcup", "cupcap",
        "capcross", "cupcross", "crosscross", "pitchfork"}


def test_kcheck(client):
    resp = client.post("/kcheck", json={"max_width": 3, "shifts": True})
    body = resp.json()
    assert body["ok"] is True
    assert body["shift_report"]["4"] == "agree"
