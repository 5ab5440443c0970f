"""HTTP endpoints: happy paths, validation failures, payload shapes."""

from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from fpskit.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_revert_catalan(client):
    response = client.post(
        "/revert", json={"coeffs": ["0", "1", "-1"], "order": 6}
    )
    assert response.status_code == 200
    assert response.json() == {
        "order": 6,
        "coeffs": ["0", "1", "1", "2", "5", "14"],
    }


def test_revert_validation_error(client):
    response = client.post("/revert", json={"coeffs": ["1", "2"], "order": 4})
    assert response.status_code == 422
    body = response.json()
    assert body["error"] == "BadValuation"


def test_revert_malformed_rational(client):
    response = client.post("/revert", json={"coeffs": ["0", "x"], "order": 4})
    assert response.status_code == 422
    assert response.json()["error"] == "MalformedRational"


def test_revert_pydantic_validation(client):
    response = client.post("/revert", json={"coeffs": []})
    assert response.status_code == 422  # handled by FastAPI request validation


def test_ladder_endpoint(client):
    response = client.post("/dl", json={"coeffs": ["1", "1"], "n": 3})
    assert response.status_code == 200
    body = response.json()
    assert body["partials"] == [["1"], ["1", "1"], ["1", "2", "1"]]
    assert body["mirrors"][2] == ["1", "2", "1"]
    assert body["mirror_constants"] == ["1", "1", "1"]


def test_fixed_point_endpoint(client):
    response = client.post("/qser", json={"coeffs": ["1", "1", "1"], "n": 5})
    assert response.status_code == 200
    assert response.json()["coeffs"] == ["0", "1", "1", "2", "4", "9"]


def test_interp_endpoints(client):
    payload = {"coeffs": ["1", "1"], "tau": "0", "order": 5}
    response = client.post("/interp", json=payload)
    assert response.status_code == 200
    assert response.json()["coeffs"] == ["1", "-1", "1", "-1", "1"]

    payload = {"coeffs": ["1", "1"], "tau": "1", "order": 5, "variant": "derivative"}
    response = client.post("/interp", json=payload)
    assert response.status_code == 200


def test_hankel_endpoint(client):
    response = client.post(
        "/hankel", json={"seq": ["1", "1", "2", "5", "14"], "shift": 0, "n": 3}
    )
    assert response.status_code == 200
    assert response.json() == {"dets": ["1", "1", "1"]}


def test_hankel_insufficient_sequence(client):
    response = client.post("/hankel", json={"seq": ["1", "1"], "n": 3})
    assert response.status_code == 422
    assert response.json()["error"] == "InsufficientSequence"


def test_jfrac_endpoint(client):
    response = client.post(
        "/jfrac",
        json={"coeffs": ["1", "1", "2", "5", "14", "42", "132", "429"], "depth": 3},
    )
    assert response.status_code == 200
    body = response.json()
    assert body["d0"] == "1"
    assert body["p"] == ["1", "2", "2", "2"]
    assert body["q"] == ["1", "1", "1"]


def test_transform_endpoint(client):
    response = client.post(
        "/transform",
        json={"seq": ["1", "1", "1", "1"], "kind": "binomial", "tau": "1"},
    )
    assert response.status_code == 200
    assert response.json()["seq"] == ["1", "2", "4", "8"]

    response = client.post(
        "/transform", json={"seq": ["1", "0", "0"], "kind": "inverse", "iterations": 2}
    )
    assert response.status_code == 200
    assert response.json()["seq"] == ["1", "-2", "4"]


def test_enum_luka(client):
    response = client.post("/enum", json={"kind": "luka", "n": 4})
    assert response.status_code == 200
    body = response.json()
    assert body["count"] == 5
    assert [1, 1, 1, 0] in body["items"]


def test_enum_motzkin_with_weights(client):
    response = client.post("/enum", json={"kind": "motzkin", "n": 3, "weights": True})
    assert response.status_code == 200
    body = response.json()
    assert body["count"] == 4
    assert len(body["weights"]) == 4


def test_enum_trees_with_orbits(client):
    response = client.post("/enum", json={"kind": "trees", "n": 3, "orbits": True})
    assert response.status_code == 200
    body = response.json()
    assert body["count"] == 5
    assert body["orbits"]["count"] == 5
    assert body["orbits"]["fixed_left"] == 1  # one symmetric binary tree for n=3


def test_verify_endpoint(client):
    response = client.post("/verify", json={"suite": "sin2"})
    assert response.status_code == 200
    body = response.json()
    assert body["passed"] is True
    assert all(check["passed"] for check in body["checks"])


def test_verify_unknown_suite(client):
    response = client.post("/verify", json={"suite": "nope"})
    assert response.status_code == 422
    assert response.json()["error"] == "BadRange"
