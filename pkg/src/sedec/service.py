"""Localhost HTTP service for the interactive hex editor.

JSON API over plain threading http.server:

    POST  /api/sessions                      {path} -> {id, length}
    GET   /api/sessions/{id}/range?offset&length    -> range view JSON
    PATCH /api/sessions/{id}                 {offset, value} -> {dirty}
    POST  /api/sessions/{id}/save                   -> {dirty: false}
    GET   /api/glyph/{hex byte}.svg                 -> SVG document

Errors come back as {error, detail} with status 400, 404 or 409.  The
server binds 127.0.0.1 only and prints its (by default ephemeral) port
at startup.  A static directory may be served alongside the API so the
browser UI can run same-origin.
"""

from __future__ import annotations

import argparse
import json
import mimetypes
import re
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlsplit

from .geometry import ligature_grid
from .render import to_svg
from .sessions import (
    IoError,
    NotFound,
    OutOfRange,
    PermissionDenied,
    SessionError,
    SessionStore,
    SessionUnknown,
)

_RANGE_RE = re.compile(r"/api/sessions/([0-9a-f]+)/range")
_SAVE_RE = re.compile(r"/api/sessions/([0-9a-f]+)/save")
_SESSION_RE = re.compile(r"/api/sessions/([0-9a-f]+)")
_GLYPH_RE = re.compile(r"/api/glyph/([0-9a-fA-F]{1,2})\.svg")

_DEFAULT_RANGE_LENGTH = 256


def _status_for(exc: SessionError) -> int:
    if isinstance(exc, (NotFound, SessionUnknown)):
        return 404
    if isinstance(exc, OutOfRange):
        return 400
    return 409  # PermissionDenied, IoError


class EditorHandler(BaseHTTPRequestHandler):
    store: SessionStore
    ui_root: Path | None = None
    protocol_version = "HTTP/1.1"

    # -- plumbing ---------------------------------------------------------

    def log_message(self, fmt, *args):  # keep test output quiet
        pass

    def _send(self, status: int, payload: bytes, content_type: str) -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(payload)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header(
            "Access-Control-Allow-Methods", "GET, POST, PATCH, OPTIONS"
        )
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()
        self.wfile.write(payload)

    def _send_json(self, status: int, obj) -> None:
        self._send(status, json.dumps(obj).encode("utf-8"), "application/json")

    def _send_error_json(self, status: int, error: str, detail: str) -> None:
        self._send_json(status, {"error": error, "detail": detail})

    def _read_body(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            raise ValueError("empty request body")
        body = json.loads(raw)
        if not isinstance(body, dict):
            raise ValueError("request body must be a JSON object")
        return body

    def _fail(self, exc: SessionError) -> None:
        self._send_error_json(_status_for(exc), type(exc).__name__, str(exc))

    # -- methods ----------------------------------------------------------

    def do_OPTIONS(self):
        self._send(204, b"", "text/plain")

    def do_GET(self):
        url = urlsplit(self.path)
        if match := _RANGE_RE.fullmatch(url.path):
            return self._handle_range(match.group(1), parse_qs(url.query))
        if match := _GLYPH_RE.fullmatch(url.path):
            return self._handle_glyph(match.group(1))
        if self.ui_root is not None:
            return self._handle_static(url.path)
        self._send_error_json(404, "NotFound", f"no route for {url.path}")

    def do_POST(self):
        url = urlsplit(self.path)
        if match := _SAVE_RE.fullmatch(url.path):
            return self._handle_save(match.group(1))
        if url.path == "/api/sessions":
            return self._handle_open()
        self._send_error_json(404, "NotFound", f"no route for {url.path}")

    def do_PATCH(self):
        url = urlsplit(self.path)
        if match := _SESSION_RE.fullmatch(url.path):
            return self._handle_patch(match.group(1))
        self._send_error_json(404, "NotFound", f"no route for {url.path}")

    # -- handlers ---------------------------------------------------------

    def _handle_open(self):
        try:
            body = self._read_body()
            path = body["path"]
        except (ValueError, KeyError) as exc:
            return self._send_error_json(400, "BadRequest", f"bad body: {exc}")
        try:
            session = self.store.open_session(path)
        except SessionError as exc:
            return self._fail(exc)
        self._send_json(200, {"id": session.id, "length": session.length})

    def _handle_range(self, session_id: str, query: dict):
        try:
            offset = int(query.get("offset", ["0"])[0])
            length = int(query.get("length", [str(_DEFAULT_RANGE_LENGTH)])[0])
        except ValueError:
            return self._send_error_json(400, "BadRequest", "offset and length must be integers")
        try:
            view = self.store.read_range(session_id, offset, length)
        except SessionError as exc:
            return self._fail(exc)
        self._send_json(
            200,
            {
                "offset": view.offset,
                "length": view.length,
                "bytes": list(view.bytes),
                "names": list(view.names),
                "segments": [
                    [sorted(s.value for s in high), sorted(s.value for s in low)]
                    for high, low in view.segments
                ],
            },
        )

    def _handle_patch(self, session_id: str):
        try:
            body = self._read_body()
            offset = int(body["offset"])
            value = int(body["value"])
        except (ValueError, KeyError, TypeError) as exc:
            return self._send_error_json(400, "BadRequest", f"bad body: {exc}")
        try:
            session = self.store.apply_patch(session_id, offset, value)
        except SessionError as exc:
            return self._fail(exc)
        self._send_json(200, {"dirty": session.dirty})

    def _handle_save(self, session_id: str):
        try:
            session = self.store.save_session(session_id)
        except SessionError as exc:
            return self._fail(exc)
        self._send_json(200, {"dirty": session.dirty})

    def _handle_glyph(self, hex_byte: str):
        svg = to_svg(ligature_grid(int(hex_byte, 16)))
        self._send(200, svg.encode("utf-8"), "image/svg+xml")

    def _handle_static(self, raw_path: str):
        assert self.ui_root is not None
        relative = raw_path.lstrip("/") or "index.html"
        root = self.ui_root.resolve()
        target = (root / relative).resolve()
        if root not in target.parents and target != root:
            return self._send_error_json(404, "NotFound", "outside ui root")
        if target.is_dir():
            target = target / "index.html"
        if not target.is_file():
            return self._send_error_json(404, "NotFound", f"no file {raw_path}")
        content_type = mimetypes.guess_type(target.name)[0] or "application/octet-stream"
        self._send(200, target.read_bytes(), content_type)


def create_server(
    port: int = 0, store: SessionStore | None = None, ui_root=None
) -> ThreadingHTTPServer:
    """Build the localhost server; port 0 picks an ephemeral port."""
    handler = type(
        "BoundEditorHandler",
        (EditorHandler,),
        {
            "store": store or SessionStore(),
            "ui_root": Path(ui_root) if ui_root else None,
        },
    )
    server = ThreadingHTTPServer(("127.0.0.1", port), handler)
    server.daemon_threads = True
    return server


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="sedec-editor", description=__doc__.splitlines()[0])
    parser.add_argument("--port", type=int, default=0, help="0 picks an ephemeral port")
    parser.add_argument("--ui", help="directory of browser UI files to serve at /")
    args = parser.parse_args(argv)
    server = create_server(port=args.port, ui_root=args.ui)
    host, port = server.server_address[:2]
    print(f"sedec editor listening on http://{host}:{port}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
