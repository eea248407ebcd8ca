"""HTTP layer: endpoint contracts and error mapping."""

import pytest
from fastapi.testclient import TestClient

from jacograph.fixtures import J8_EDGES, REFERENCE_ROWS
from jacograph.service.app import create_app


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app()) as c:
        yield c


def test_health(client):
    r = client.get("/healthz")
    assert r.status_code == 200
    assert r.json() == {"status": "ok"}


def test_table_matches_reference(client):
    r = client.get("/table", params={"max_n": 32})
    assert r.status_code == 200
    body = r.json()
    assert body["max_n"] == 32
    assert len(body["rows"]) == 32
    for row, want in zip(body["rows"], REFERENCE_ROWS):
        assert (row["n"], row["back_degree"], row["forward_degree"],
                row["size"], tuple(row["max_degree_set"]),
                row["domination_number"], row["diameter"],
                row["max_degree"]) == want


def test_table_rejects_out_of_range(client):
    assert client.get("/table", params={"max_n": 0}).status_code == 422
    assert client.get("/table", params={"max_n": 20001}).status_code == 422


def test_graph_with_edges(client):
    r = client.get("/graph/8")
    assert r.status_code == 200
    body = r.json()
    assert body["n"] == 8
    assert body["size"] == 13
    assert [tuple(e) for e in body["edges"]] == list(J8_EDGES)
    assert body["lo"][0] == 1 and body["hi"][0] == 2
    assert len(body["lo"]) == 8 == len(body["hi"])


def test_graph_large_omits_edges(client):
    r = client.get("/graph/601")
    assert r.status_code == 200
    body = r.json()
    assert body["edges"] is None
    assert body["size"] > 0


def test_graph_bounds(client):
    assert client.get("/graph/0").status_code == 422
    assert client.get("/graph/2001").status_code == 422


def test_dompath_endpoints(client):
    r = client.get("/dompath/15")
    assert r.status_code == 200
    assert r.json() == {"n": 15, "kind": "primary",
                        "vertices": [1, 2, 3, 4, 7, 11, 15],
                        "gamma_set": [2, 7, 15]}
    r = client.get("/dompath/8", params={"secondary": "true"})
    assert r.json() == {"n": 8, "kind": "secondary",
                        "vertices": [8, 5, 3, 2, 1], "gamma_set": [5, 1]}
    assert client.get("/dompath/0").status_code == 422


def test_sequence_endpoint(client):
    r = client.get("/sequence/A000149", params={"count": 4})
    assert r.status_code == 200
    assert r.json() == {"id": "A000149", "start": 1, "count": 4,
                        "prepend_artificial": False, "terms": [2, 7, 20, 54]}
    r = client.get("/sequence/A003622",
                   params={"count": 3, "prepend_artificial": "true"})
    assert r.json()["terms"] == [1, 1, 4, 6]


def test_sequence_errors(client):
    assert client.get("/sequence/A999999", params={"count": 3}).status_code == 404
    assert client.get("/sequence/A000149", params={"count": 65}).status_code == 422
    assert client.get("/sequence/A060144", params={"count": 10001}).status_code == 422


def test_check_endpoint_full(client):
    r = client.post("/check", json={"max_n": 100})
    assert r.status_code == 200
    body = r.json()
    assert body["max_n"] == 100
    assert body["all_verified"] is False  # the path-length claim fails at 21
    ids = [rep["id"] for rep in body["reports"]]
    assert ids == ["P1", "C1", "C1-recursive", "C1-identity", "C2", "C3",
                   "C4a", "C4b", "C4c", "C5", "C6", "C7"]
    c6 = next(rep for rep in body["reports"] if rep["id"] == "C6")
    assert c6["status"] == "counterexample"
    assert c6["witness"] == [21, 7, 8]


def test_check_endpoint_filtered(client):
    r = client.post("/check", json={"conjectures": ["P1", "C7"], "max_n": 50})
    body = r.json()
    assert body["all_verified"] is True
    assert [rep["id"] for rep in body["reports"]] == ["P1", "C7"]


def test_check_endpoint_rejects_bad_input(client):
    assert client.post("/check", json={"max_n": 0}).status_code == 422
    assert client.post("/check", json={"max_n": 300000}).status_code == 422
    assert client.post("/check", json={"conjectures": ["bogus"]}).status_code == 422
    assert client.post("/check", json={"c7_terms": 0}).status_code == 422
