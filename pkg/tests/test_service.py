import json
import threading
import urllib.error
import urllib.request

import pytest

from sedec.geometry import ligature_grid
from sedec.render import to_svg
from sedec.service import create_server
from sedec.sessions import SessionStore


@pytest.fixture()
def service():
    server = create_server(port=0, store=SessionStore())
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{server.server_address[1]}"
    server.shutdown()
    server.server_close()


def request(method, url, body=None):
    data = json.dumps(body).encode() if body is not None else None
    req = urllib.request.Request(
        url, data=data, method=method, headers={"Content-Type": "application/json"}
    )
    try:
        with urllib.request.urlopen(req) as resp:
            return resp.status, json.loads(resp.read()), resp.headers
    except urllib.error.HTTPError as err:
        return err.code, json.loads(err.read()), err.headers


@pytest.fixture()
def sample(tmp_path):
    path = tmp_path / "sample.bin"
    path.write_bytes(bytes([0x89, 0xEF, 0x00, 0x41]))
    return path


def test_open_and_read_range(service, sample):
    status, opened, _ = request("POST", f"{service}/api/sessions", {"path": str(sample)})
    assert status == 200
    assert opened["length"] == 4

    status, view, _ = request(
        "GET", f"{service}/api/sessions/{opened['id']}/range?offset=0&length=2"
    )
    assert status == 200
    assert view["bytes"] == [0x89, 0xEF]
    assert view["names"] == ["Koka", "Dedi"]
    assert view["segments"][0] == [["A", "B", "F", "G"], ["D", "E", "F"]]


def test_range_defaults_and_clamping(service, sample):
    _, opened, _ = request("POST", f"{service}/api/sessions", {"path": str(sample)})
    status, view, _ = request("GET", f"{service}/api/sessions/{opened['id']}/range")
    assert status == 200 and len(view["bytes"]) == 4
    status, view, _ = request(
        "GET", f"{service}/api/sessions/{opened['id']}/range?offset=99&length=5"
    )
    assert status == 200 and view["bytes"] == []


def test_patch_and_save_flow(service, sample):
    _, opened, _ = request("POST", f"{service}/api/sessions", {"path": str(sample)})
    sid = opened["id"]

    status, patched, _ = request(
        "PATCH", f"{service}/api/sessions/{sid}", {"offset": 0, "value": 0xFF}
    )
    assert status == 200 and patched == {"dirty": True}

    _, view, _ = request("GET", f"{service}/api/sessions/{sid}/range?offset=0&length=1")
    assert view["bytes"] == [0xFF] and view["names"] == ["Didi"]

    status, saved, _ = request("POST", f"{service}/api/sessions/{sid}/save")
    assert status == 200 and saved == {"dirty": False}
    assert sample.read_bytes()[0] == 0xFF


def test_error_payloads(service, sample, tmp_path):
    status, body, _ = request(
        "POST", f"{service}/api/sessions", {"path": str(tmp_path / "gone")}
    )
    assert status == 404
    assert body["error"] == "NotFound" and "detail" in body

    status, body, _ = request("GET", f"{service}/api/sessions/beef/range")
    assert status == 404

    _, opened, _ = request("POST", f"{service}/api/sessions", {"path": str(sample)})
    status, body, _ = request(
        "PATCH", f"{service}/api/sessions/{opened['id']}", {"offset": 99, "value": 0}
    )
    assert status == 400 and body["error"] == "OutOfRange"

    status, body, _ = request(
        "PATCH", f"{service}/api/sessions/{opened['id']}", {"offset": "x"}
    )
    assert status == 400

    status, body, _ = request("GET", f"{service}/api/nothing/here")
    assert status == 404


def test_glyph_endpoint(service):
    with urllib.request.urlopen(f"{service}/api/glyph/89.svg") as resp:
        assert resp.status == 200
        assert resp.headers["Content-Type"] == "image/svg+xml"
        assert resp.read().decode() == to_svg(ligature_grid(0x89))


def test_cors_headers_for_browser_clients(service, sample):
    _, _, headers = request("POST", f"{service}/api/sessions", {"path": str(sample)})
    assert headers["Access-Control-Allow-Origin"] == "*"


def test_static_ui_serving(tmp_path, sample):
    ui = tmp_path / "ui"
    ui.mkdir()
    (ui / "index.html").write_text("<html>editor</html>")
    server = create_server(port=0, ui_root=ui)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    base = f"http://127.0.0.1:{server.server_address[1]}"
    try:
        with urllib.request.urlopen(f"{base}/") as resp:
            assert resp.read() == b"<html>editor</html>"
        with pytest.raises(urllib.error.HTTPError) as err:
            urllib.request.urlopen(f"{base}/../secrets")
        assert err.value.code == 404
    finally:
        server.shutdown()
        server.server_close()


def test_concurrent_sessions_are_independent(service, tmp_path):
    paths = []
    for i in range(4):
        p = tmp_path / f"f{i}.bin"
        p.write_bytes(bytes([i]) * 64)
        paths.append(p)
    sids = []
    for p in paths:
        _, opened, _ = request("POST", f"{service}/api/sessions", {"path": str(p)})
        sids.append(opened["id"])

    def hammer(sid, value):
        for offset in range(32):
            request("PATCH", f"{service}/api/sessions/{sid}", {"offset": offset, "value": value})

    threads = [
        threading.Thread(target=hammer, args=(sid, i + 100)) for i, sid in enumerate(sids)
    ]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for i, sid in enumerate(sids):
        _, view, _ = request("GET", f"{service}/api/sessions/{sid}/range?offset=0&length=64")
        assert view["bytes"] == [i + 100] * 32 + [i] * 32
