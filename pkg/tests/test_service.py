import pytest
from fastapi.testclient import TestClient

from krvlab.service import app

client = TestClient(app)


def test_health():
    response = client.get("/health")
    assert response.status_code == 200
    body = response.json()
    assert body["schema"] == "krv-lab/1"
    assert body["status"] == "ok"
    assert body["version"]


def test_dims_weight_two():
    response = client.post("/dims", json={"weight": 2, "j_max": 6})
    assert response.status_code == 200
    body = response.json()
    assert body["schema"] == "krv-lab/1"
    assert [row["dim"] for row in body["rows"]] == [0, 1, 0, 1, 0, 1]
    assert [row["j"] for row in body["rows"]] == list(range(1, 7))
    assert all(row["match"] for row in body["rows"])
    assert body["all_match"] is True


def test_dims_weight_three():
    response = client.post("/dims", json={"weight": 3, "j_max": 9})
    body = response.json()
    assert [row["dim"] for row in body["rows"]] == [0, 0, 1, 0, 1, 0, 1, 0, 2]
    assert [row["formula"] for row in body["rows"]] \
        == [row["dim"] for row in body["rows"]]


def test_dims_parallel_jobs_match_serial():
    serial = client.post("/dims", json={"weight": 2, "j_max": 5}).json()
    parallel = client.post("/dims",
                           json={"weight": 2, "j_max": 5, "jobs": 3}).json()
    assert serial["rows"] == parallel["rows"]


def test_basis_endpoints():
    body = client.post("/basis", json={"i": 2, "j": 2}).json()
    assert body["dim"] == 1 and len(body["basis"]) == 1
    assert "theta(" in body["basis"][0]

    body = client.post("/basis", json={"i": 2, "j": 3}).json()
    assert body["dim"] == 0 and body["basis"] == []

    body = client.post("/basis", json={"i": 3, "j": 5}).json()
    assert body["dim"] == 1


def test_delta_endpoint():
    body = client.post("/delta", json={"n": 2}).json()
    assert body["theta"] == "theta(x; [[x,y],y])"
    assert body["value"] == "2*tr(xxyy) - 2*tr(xyxy)"
    assert body["u_y"] == "-2*xyy + 4*yxy - 2*yyx"
    assert body["divergence"] == "0"
    assert body["symplectic"] is True


def test_verify_endpoint():
    body = client.post("/verify", json={"suite": "euler", "seed": 5,
                                        "cases": 10}).json()
    assert body["suite"] == "euler"
    assert body["passed"] is True
    assert len(body["cases"]) == 10
    assert all(case["ok"] for case in body["cases"])


def test_eval_endpoint():
    body = client.post("/eval",
                       json={"expr": "div(theta(x; ad(y,2)(x)))"}).json()
    assert body == {"schema": "krv-lab/1", "expr": "div(theta(x; ad(y,2)(x)))",
                    "sort": "trace", "value": "0"}


def test_eval_parse_error_is_400():
    response = client.post("/eval", json={"expr": "tr(x) + x"})
    assert response.status_code == 400
    assert "expected trace" in response.json()["detail"]

    response = client.post("/eval", json={"expr": "x +"})
    assert response.status_code == 400


def test_domain_errors_are_422():
    response = client.post("/delta", json={"n": 3})
    assert response.status_code == 422
    assert "even" in response.json()["detail"]

    response = client.post("/dims", json={"weight": 3, "j_max": 14})
    assert response.status_code == 422
    assert "cap" in response.json()["detail"]


def test_request_validation():
    assert client.post("/dims", json={"weight": 4, "j_max": 3}).status_code \
        == 422
    assert client.post("/dims", json={"weight": 2, "j_max": 0}).status_code \
        == 422
    assert client.post("/verify", json={"suite": "bogus"}).status_code == 422
    assert client.post("/verify",
                       json={"suite": "euler", "cases": 0}).status_code == 422


def test_relaxed_flag_changes_the_kernel():
    strict = client.post("/basis", json={"i": 4, "j": 4}).json()
    relaxed = client.post("/basis",
                          json={"i": 4, "j": 4, "relaxed": True}).json()
    assert strict["dim"] == 1
    assert relaxed["dim"] == 2
