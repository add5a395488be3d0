import pytest
from fastapi.testclient import TestClient

from skein4.main import app


@pytest.fixture
def client():
    return TestClient(app)


def test_root_and_health(client):
    assert client.get("/").json()["docs"] == "/api/docs"
    health = client.get("/health")
    assert health.status_code == 200
    assert health.json()["status"] == "ok"


def test_eval(client):
    response = client.get("/api/eval", params={"expr": "close(braid3[])"})
    assert response.status_code == 200
    body = response.json()
    assert body["value"] == "1*t^3"
    assert body["components"] == 3


def test_eval_invariant(client):
    response = client.get("/api/eval", params={"expr": "torus(2,2)", "invariant": "p1"})
    assert response.status_code == 200
    assert response.json()["spec"] == "p1"


@pytest.mark.parametrize(
    "params, status",
    [
        ({"expr": "N(int(2)"}, 400),
        ({"expr": "rat(2 2)"}, 400),
        ({"expr": "torus(3,4)"}, 422),
        ({"expr": "torus(2,3)", "invariant": "p3"}, 422),
        ({"expr": "torus(2,3)", "spec": "nope"}, 400),
    ],
)
def test_eval_errors(client, params, status):
    assert client.get("/api/eval", params=params).status_code == status


def test_catalog_read(client):
    response = client.get("/api/catalog/4_1")
    assert response.status_code == 200
    assert response.json()["expression"] == "N(rat(2 2))"
    assert client.get("/api/catalog/nope").status_code == 404
    names = [item["name"] for item in client.get("/api/catalog/").json()]
    assert "trefoil" in names


def test_catalog_add(client, fresh_catalog):
    item = {"name": "hopf", "expression": "torus(2,2)", "note": "Hopf link"}
    response = client.post("/api/catalog/", json=item)
    assert response.status_code == 201
    assert response.json() == item
    assert client.get("/api/catalog/hopf").json()["note"] == "Hopf link"
    assert client.post("/api/catalog/", json=item).status_code == 400
    assert client.post("/api/catalog/", json={"name": "x", "expression": ""}).status_code == 422


def test_check_routes(client):
    assert "basis-counts" in client.get("/api/check/").json()["suites"]
    assert client.get("/api/check/unknown").status_code == 404
    report = client.get("/api/check/basis-counts").json()
    assert report["suite"] == "basis-counts"
    assert report["items"][0]["passed"]


def test_tricolor(client):
    response = client.get("/api/tricolor", params={"expr": "pretzel(3,3,3)"})
    assert response.status_code == 200
    assert response.json()["rank"] == 3


def test_burau(client):
    response = client.get("/api/burau", params={"braid": "braid3[1 -1]", "mod": "t^2-t+1"})
    assert response.status_code == 200
    body = response.json()
    assert body["ideal"] == "(t^2-t+1)"
    assert body["rows"] == [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    assert client.get("/api/burau", params={"braid": "braid2[1]", "int_mod": 1}).status_code == 422


def test_cache_routes(client, spec_ii):
    from skein4.app.services.engine.table_cache import VectorStore
    from skein4.app.services.engine.vectors import SkeinVector

    store = VectorStore("api_probe", spec_ii, 0, lambda key: (str(key), ""), int)
    store.save(1, SkeinVector.link(spec_ii.t))
    summary = client.get("/api/cache/", params={"spec": "spec-ii"}).json()
    assert summary["entries"]["spec-ii"]["api_probe"] == 1
    removed = client.delete("/api/cache/", params={"spec": "spec-ii"}).json()["removed"]
    assert removed >= 1
    assert client.get("/api/cache/", params={"spec": "spec-ii"}).json()["entries"] == {}


def test_lifespan_opens_cache():
    from skein4.app.services.engine.table_cache import cache_ready

    with TestClient(app) as started:
        assert started.get("/health").status_code == 200
        assert cache_ready()
