import pytest

import Discriminators.server as server
from Discriminators.core_feature.classes import singleton_class, threshold_class
from Discriminators.core_feature.universe import VertexUniverse

U4 = VertexUniverse(4)
THRESHOLDS = threshold_class(U4).to_dict()
SINGLETONS = singleton_class(U4).to_dict()
P1 = {"probs": ["1/2", "1/4", "1/4", 0]}
P2 = {"probs": [0, "1/4", "1/4", "1/2"]}


@pytest.fixture
def client():
    server.app.testing = True
    return server.app.test_client()


# ---------- /api/ipm ----------

def test_ipm_success(client):
    resp = client.post("/api/ipm", json={"class": THRESHOLDS, "p1": P1, "p2": P2})
    assert resp.status_code == 200
    data = resp.get_json()
    assert data["value"] == "1/2"
    assert data["witness"] == 1
    assert len(data["per_graph_gaps"]) == 5


def test_ipm_missing_field(client):
    resp = client.post("/api/ipm", json={"class": THRESHOLDS, "p1": P1})
    assert resp.status_code == 400
    assert "p2" in resp.get_json()["error"]


def test_ipm_rejects_non_object_body(client):
    resp = client.post("/api/ipm", json=[1, 2])
    assert resp.status_code == 400
    assert resp.get_json() == {"error": "request body must be a JSON object"}


def test_ipm_unsorted_edge(client):
    bad = {"universe": {"size": 3}, "arity": 2, "graphs": [{"edges": [[1, 0]]}]}
    resp = client.post("/api/ipm", json={"class": bad, "p1": P1, "p2": P2})
    assert resp.status_code == 400
    assert "not sorted" in resp.get_json()["error"]


# ---------- /api/gvc ----------

def test_gvc_success(client):
    resp = client.post("/api/gvc", json={"class": SINGLETONS})
    assert resp.status_code == 200
    assert resp.get_json() == {"dimension": 1, "witness": [0], "pins": []}


def test_gvc_internal_error(client, monkeypatch):
    def boom(c):
        raise RuntimeError("search blew up")

    monkeypatch.setattr(server, "graph_vc_dim", boom)
    resp = client.post("/api/gvc", json={"class": SINGLETONS})
    assert resp.status_code == 500
    assert resp.get_json() == {"error": "search blew up"}


# ---------- /api/discriminate ----------

def test_discriminate_with_samples(client):
    body = {"class": SINGLETONS, "s1": {"vertices": [0, 0, 1]}, "s2": {"vertices": [3, 3, 2]}}
    resp = client.post("/api/discriminate", json=body)
    assert resp.status_code == 200
    data = resp.get_json()
    assert data["index"] == 0
    assert data["empirical_gap"] == "2/3"
    assert data["true_gap"] is None


def test_discriminate_draws_from_distributions(client):
    body = {"class": THRESHOLDS, "p1": P1, "p2": P2, "m": 100, "seed": 2}
    first = client.post("/api/discriminate", json=body).get_json()
    second = client.post("/api/discriminate", json=body).get_json()
    assert first == second
    assert first["true_gap"] is not None


def test_discriminate_needs_m(client):
    resp = client.post("/api/discriminate", json={"class": THRESHOLDS, "p1": P1, "p2": P2})
    assert resp.status_code == 400


# ---------- /api/test-closeness ----------

def test_closeness_verdict(client):
    far = {"vertices": [0] * 20}
    other = {"vertices": [3] * 20}
    body = {"class": SINGLETONS, "s1": far, "s2": other, "h1": far, "h2": other, "epsilon": 0.3}
    resp = client.post("/api/test-closeness", json=body)
    assert resp.status_code == 200
    data = resp.get_json()
    assert data["verdict"] == "DISTINCT"
    assert data["witness_gap"] == "1"


def test_closeness_equivalent_samples(client):
    s = {"vertices": [0, 1, 2, 3]}
    body = {"class": SINGLETONS, "s1": s, "s2": s, "h1": s, "h2": s, "epsilon": 0.3}
    assert client.post("/api/test-closeness", json=body).get_json()["verdict"] == "EQUIVALENT"


# ---------- /api/vandermonde ----------

def test_vandermonde_success(client):
    resp = client.get("/api/vandermonde?k=3&trials=20")
    assert resp.status_code == 200
    data = resp.get_json()
    assert data["holds"] is True
    assert data["grid_dominance"]["trials"] == 20
    assert data["spectrum"]["k"] == 3


def test_vandermonde_requires_k(client):
    resp = client.get("/api/vandermonde")
    assert resp.status_code == 400
    assert "k is required" in resp.get_json()["error"]


def test_vandermonde_k_out_of_range(client):
    assert client.get("/api/vandermonde?k=20").status_code == 400


# ---------- /api/construct/<mode> ----------

def test_construct_collision(client):
    resp = client.get("/api/construct/collision?n=2&k=3")
    assert resp.status_code == 200
    assert resp.get_json()["edges"] == [[0, 0, 0], [1, 1, 1]]


def test_construct_passes_query_params(client, monkeypatch):
    called = {}

    def fake_construct_payload(mode, **kwargs):
        called["mode"] = mode
        called.update(kwargs)
        return {"ok": True}

    monkeypatch.setattr(server, "construct_payload", fake_construct_payload)
    resp = client.get("/api/construct/hard-pair?ell=6&epsilon=0.4&method=sampling")
    assert resp.status_code == 200
    assert called["mode"] == "hard-pair"
    assert called["ell"] == 6
    assert called["epsilon"] == 0.4
    assert called["method"] == "sampling"
    assert called["n"] is None


def test_construct_unknown_mode(client):
    resp = client.get("/api/construct/ladder")
    assert resp.status_code == 400
    assert "unknown construction" in resp.get_json()["error"]


def test_construct_failure_is_500(client):
    resp = client.get("/api/construct/disjoint-pair?adversary=power-set&ell=4")
    assert resp.status_code == 500
