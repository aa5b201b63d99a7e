"""Wire-level contract of the judging HTTP API.

Everything here goes through the ASGI test client; the only white-box
access is reading service.tasks to locate trap ids, which never cross the
wire by design.
"""

import pytest
from fastapi.testclient import TestClient

from parkbandit.eventlog import MemoryLog
from parkbandit.service import JudgeService
from parkbandit.webapi import create_app

WIRE_KEYS = {"task_id", "domain_id", "phrase", "snapshot_url"}


@pytest.fixture
def rig(corpus_model):
    service = JudgeService(corpus_model, log=MemoryLog())
    return service, TestClient(create_app(service))


def open_iteration(client, seed=7, m=1, trap_rate=0.1) -> int:
    resp = client.post("/api/iterations",
                       json={"seed": seed, "m": m, "trap_rate": trap_rate})
    assert resp.status_code == 200, resp.text
    return resp.json()["iteration_id"]


def assert_error(resp, status: int, name: str):
    assert resp.status_code == status, resp.text
    body = resp.json()
    assert set(body) == {"error", "detail"}
    assert body["error"] == name
    assert isinstance(body["detail"], str) and body["detail"]


# -- POST /api/iterations --------------------------------------------------

def test_open_iteration_returns_id(rig):
    _service, client = rig
    assert open_iteration(client) == 1
    assert_error(client.post("/api/iterations", json={"seed": 1, "m": 1}),
                 409, "IterationAlreadyOpen")


def test_open_iteration_input_errors(rig):
    _service, client = rig
    assert_error(client.post("/api/iterations", json={"seed": 1}),
                 400, "InvalidParams")
    assert_error(client.post("/api/iterations", json={"m": 1}),
                 400, "InvalidParams")
    assert_error(client.post("/api/iterations", json=[1, 2]),
                 400, "InvalidParams")
    assert_error(
        client.post("/api/iterations",
                    json={"seed": 1, "m": 1, "trap_rate": "lots"}),
        400, "InvalidParams")
    assert_error(client.post("/api/iterations",
                             json={"seed": 1, "m": 0}),
                 400, "InvalidParams")


# -- GET /api/tasks --------------------------------------------------------

def test_tasks_endpoint_serves_wire_tasks(rig):
    _service, client = rig
    open_iteration(client)
    resp = client.get("/api/tasks", params={"assessor": "alice", "batch": 3})
    assert resp.status_code == 200
    batch = resp.json()
    assert len(batch) == 3
    for item in batch:
        assert set(item) == WIRE_KEYS
    # default batch is 10
    assert len(client.get("/api/tasks", params={"assessor": "alice"}).json()) == 10


def test_tasks_endpoint_errors(rig):
    _service, client = rig
    assert_error(client.get("/api/tasks", params={"assessor": "alice"}),
                 409, "NoOpenIteration")
    open_iteration(client)
    assert_error(client.get("/api/tasks"), 400, "InvalidParams")
    assert_error(client.get("/api/tasks", params={"assessor": "a", "batch": 0}),
                 400, "InvalidParams")


# -- GET /api/snapshots/<domain_id> ----------------------------------------

def test_snapshot_returns_archived_html(rig, corpus_model):
    _service, client = rig
    domain_id = corpus_model.domain_ids()[0]
    resp = client.get(f"/api/snapshots/{domain_id}")
    assert resp.status_code == 200
    assert resp.headers["content-type"].startswith("text/html")
    raw = (corpus_model.corpus_dir / domain_id / "page.html").read_bytes()
    assert resp.content == raw
    assert_error(client.get("/api/snapshots/nope.example"),
                 404, "UnknownTask")


def test_snapshot_urls_from_tasks_resolve(rig):
    _service, client = rig
    open_iteration(client)
    for item in client.get("/api/tasks", params={"assessor": "a"}).json():
        assert client.get(item["snapshot_url"]).status_code == 200


# -- POST /api/judgments ---------------------------------------------------

def test_judgment_round_trip(rig):
    _service, client = rig
    open_iteration(client)
    task = client.get("/api/tasks", params={"assessor": "alice"}).json()[0]
    resp = client.post("/api/judgments", json={
        "assessor_id": "alice", "task_id": task["task_id"], "score": 4,
    })
    assert resp.status_code == 200
    assert resp.json() == {"accepted": True, "flagged": False}
    assert_error(client.post("/api/judgments", json={
        "assessor_id": "alice", "task_id": task["task_id"], "score": 4,
    }), 409, "DuplicateJudgment")


def test_judgment_input_errors(rig):
    _service, client = rig
    open_iteration(client)
    task = client.get("/api/tasks", params={"assessor": "alice"}).json()[0]
    assert_error(client.post("/api/judgments", json={
        "assessor_id": "alice", "task_id": task["task_id"], "score": 6,
    }), 400, "InvalidScore")
    assert_error(client.post("/api/judgments", json={
        "assessor_id": "alice", "task_id": task["task_id"],
    }), 400, "InvalidScore")
    assert_error(client.post("/api/judgments", json={
        "assessor_id": "alice", "task_id": "feedfacefeedface", "score": 3,
    }), 404, "UnknownTask")
    assert_error(client.post("/api/judgments", json={
        "assessor_id": 7, "task_id": task["task_id"], "score": 3,
    }), 400, "InvalidParams")
    assert_error(client.post("/api/judgments", json="not an object"),
                 400, "InvalidParams")


def test_flagged_assessor_gets_403(rig):
    service, client = rig
    open_iteration(client, m=5, trap_rate=0.1)
    traps = sorted(t.task_id for t in service.tasks.values() if t.is_trap)
    assert len(traps) == 10
    last = None
    for tid in traps[:5]:
        gold = service.tasks[tid].trap_expected
        last = client.post("/api/judgments", json={
            "assessor_id": "mallory", "task_id": tid,
            "score": 0 if gold >= 2 else 5,
        })
        assert last.status_code == 200
    assert last.json() == {"accepted": True, "flagged": True}
    assert_error(client.get("/api/tasks", params={"assessor": "mallory"}),
                 403, "AssessorFlagged")
    assert_error(client.post("/api/judgments", json={
        "assessor_id": "mallory", "task_id": traps[5], "score": 3,
    }), 403, "AssessorFlagged")


# -- close + reports -------------------------------------------------------

def test_close_and_report_round_trip(rig):
    _service, client = rig
    iteration = open_iteration(client, m=2)
    for assessor in ("alice", "bob"):
        for item in client.get("/api/tasks",
                               params={"assessor": assessor}).json():
            client.post("/api/judgments", json={
                "assessor_id": assessor, "task_id": item["task_id"],
                "score": (len(item["phrase"]) % 6),
            })
    closed = client.post(f"/api/iterations/{iteration}/close")
    assert closed.status_code == 200
    report = closed.json()
    assert report["iteration"] == iteration
    assert 0.0 <= report["precision"] <= 1.0
    fetched = client.get(f"/api/reports/{iteration}")
    assert fetched.status_code == 200
    assert fetched.json() == report


def test_close_and_report_errors(rig):
    _service, client = rig
    assert_error(client.post("/api/iterations/1/close"),
                 409, "NoOpenIteration")
    iteration = open_iteration(client)
    assert_error(client.post(f"/api/iterations/{iteration + 3}/close"),
                 404, "UnknownTask")
    assert client.post(f"/api/iterations/{iteration}/close").status_code == 200
    assert_error(client.post(f"/api/iterations/{iteration}/close"),
                 409, "NoOpenIteration")
    assert_error(client.get(f"/api/reports/{iteration + 1}"),
                 404, "UnknownTask")


def test_wire_responses_never_mention_traps(rig):
    _service, client = rig
    open_iteration(client, m=2, trap_rate=0.2)
    resp = client.get("/api/tasks", params={"assessor": "eve", "batch": 50})
    assert b"trap" not in resp.content.lower()
    task = resp.json()[0]
    ack = client.post("/api/judgments", json={
        "assessor_id": "eve", "task_id": task["task_id"], "score": 2,
    })
    assert b"trap" not in ack.content.lower()
