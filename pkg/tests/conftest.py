import socket
import threading
import time
from datetime import datetime, timezone
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

import pytest

from flexirank.corpus import CorpusManifest, PageRecord

FIXTURE_PAGES = Path(__file__).parent / "fixtures" / "pages"


class _ServerState:
    def __init__(self):
        self.lock = threading.Lock()
        self.in_flight = 0
        self.max_in_flight = 0
        self.request_times: list[tuple[str, float]] = []

    def enter(self, path):
        with self.lock:
            self.in_flight += 1
            self.max_in_flight = max(self.max_in_flight, self.in_flight)
            self.request_times.append((path, time.monotonic()))

    def leave(self):
        with self.lock:
            self.in_flight -= 1

    def reset(self):
        with self.lock:
            self.in_flight = 0
            self.max_in_flight = 0
            self.request_times = []


class _Handler(BaseHTTPRequestHandler):
    state: _ServerState

    def log_message(self, *args):
        pass

    def _send(self, status, body: bytes, content_type="text/html; charset=utf-8", headers=()):
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        for k, v in headers:
            self.send_header(k, v)
        self.end_headers()
        self.wfile.write(body)

    def do_GET(self):
        self.state.enter(self.path)
        try:
            if self.path == "/a.html":
                self._send(200, b"<html><body><h1>alpha</h1>fixture page</body></html>")
            elif self.path == "/missing":
                self._send(404, b"<html>not here</html>")
            elif self.path == "/redirect":
                self._send(302, b"", headers=[("Location", "/a.html")])
            elif self.path == "/latin1":
                body = "<html><body>caf\xe9</body></html>".encode("latin-1")
                self._send(200, body, content_type="text/html; charset=ISO-8859-1")
            elif self.path == "/meta-charset":
                body = (
                    '<html><head><meta charset="latin-1"></head>'
                    "<body>d\xe9j\xe0</body></html>"
                ).encode("latin-1")
                self._send(200, body, content_type="text/html")
            elif self.path.startswith("/slow"):
                time.sleep(0.05)
                self._send(200, b"<html>slow</html>")
            elif self.path.startswith("/page/"):
                name = self.path.split("/")[-1].encode()
                self._send(200, b"<html><body>page " + name + b"</body></html>")
            else:
                self._send(404, b"<html>unknown</html>")
        finally:
            self.state.leave()


@pytest.fixture(scope="session")
def fixture_server():
    state = _ServerState()
    handler = type("Handler", (_Handler,), {"state": state})
    server = ThreadingHTTPServer(("127.0.0.1", 0), handler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    base = f"http://127.0.0.1:{server.server_address[1]}"
    yield base, state
    server.shutdown()


@pytest.fixture
def silent_socket():
    """A listening socket that never answers: connects succeed, reads hang."""
    sock = socket.socket()
    sock.bind(("127.0.0.1", 0))
    sock.listen(1)
    yield f"http://127.0.0.1:{sock.getsockname()[1]}/"
    sock.close()


def _read_fixture_pages() -> dict[str, str]:
    return {p.stem: p.read_text() for p in sorted(FIXTURE_PAGES.glob("*.html"))}


FIXTURE_HOST = "http://www.fix.test"


def fixture_url(name: str) -> str:
    return f"{FIXTURE_HOST}/{name}.html"


@pytest.fixture(scope="session")
def fixture_corpus() -> CorpusManifest:
    """The shipped demo corpus: every page under tests/fixtures/pages
    mounted on one host."""
    stamp = datetime(2026, 1, 1, 12, 0, 0, tzinfo=timezone.utc)
    records = [
        PageRecord(
            url=fixture_url(name),
            html=html,
            fetched_at=stamp,
            status=200,
            content_type="text/html",
        )
        for name, html in _read_fixture_pages().items()
    ]
    return CorpusManifest.from_records(records, source_note="fixture corpus")
