"""Fetching and persisting the working set of pages.

The corpus is a line-delimited tab-separated file: url, fetch time
(RFC3339), HTTP status, content type, base64 of the decoded HTML. Lines
starting with '#' are comments; the first "# note:" comment carries the
manifest's source note. Base64 keeps markup with newlines, tabs and
replacement characters intact, so load(save(m)) reproduces m exactly.
"""

from __future__ import annotations

import base64
import binascii
import codecs
import re
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from urllib.parse import urlsplit

import requests

DEFAULT_TIMEOUT = 10.0
DEFAULT_WORKERS = 4
DEFAULT_HOST_DELAY = 0.5
MAX_REDIRECTS = 10

_CHARSET_HEADER_RE = re.compile(r"charset=[\"']?([\w.-]+)", re.I)
_META_CHARSET_RE = re.compile(
    rb"<meta[^>]+charset=[\"']?([\w.-]+)", re.I
)


class CorpusFormatError(ValueError):
    """A corpus line failed to parse; the message names the line."""


class FetchError(RuntimeError):
    def __init__(self, url: str, cause: str):
        super().__init__(f"fetch failed for {url}: {cause}")
        self.url = url
        self.cause = cause


def _require_absolute_http(url: str) -> None:
    parts = urlsplit(url)
    if parts.scheme not in ("http", "https") or not parts.netloc:
        raise ValueError(f"not an absolute http/https URL: {url!r}")


@dataclass(frozen=True)
class PageRecord:
    url: str
    html: str
    fetched_at: datetime
    status: int
    content_type: str = ""

    def __post_init__(self):
        _require_absolute_http(self.url)
        if 200 <= self.status < 300 and not self.html:
            raise ValueError(f"2xx record without a body: {self.url}")


@dataclass
class CorpusManifest:
    """Ordered, URL-unique set of page records (last write wins)."""

    source_note: str = ""
    _by_url: dict[str, PageRecord] = field(default_factory=dict)

    @classmethod
    def from_records(cls, records, source_note: str = "") -> "CorpusManifest":
        manifest = cls(source_note=source_note)
        for record in records:
            manifest.add(record)
        return manifest

    def add(self, record: PageRecord) -> None:
        self._by_url[record.url] = record

    def get(self, url: str) -> PageRecord | None:
        return self._by_url.get(url)

    def __contains__(self, url: str) -> bool:
        return url in self._by_url

    def __len__(self) -> int:
        return len(self._by_url)

    def __iter__(self):
        return iter(self._by_url.values())

    @property
    def records(self) -> list[PageRecord]:
        return list(self._by_url.values())

    def __eq__(self, other):
        return (
            isinstance(other, CorpusManifest)
            and self.source_note == other.source_note
            and self.records == other.records
        )


def save_corpus(manifest: CorpusManifest, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        if manifest.source_note:
            note = re.sub(r"\s+", " ", manifest.source_note).strip()
            fh.write(f"# note: {note}\n")
        for r in manifest:
            html64 = base64.b64encode(r.html.encode("utf-8")).decode("ascii")
            content_type = r.content_type.replace("\t", " ").replace("\n", " ")
            fh.write(
                f"{r.url}\t{r.fetched_at.isoformat()}\t{r.status}\t{content_type}\t{html64}\n"
            )


def _parse_timestamp(text: str) -> datetime:
    if text.endswith(("Z", "z")):
        text = text[:-1] + "+00:00"
    stamp = datetime.fromisoformat(text)
    if stamp.tzinfo is None:
        stamp = stamp.replace(tzinfo=timezone.utc)
    return stamp


def load_corpus(path) -> CorpusManifest:
    manifest = CorpusManifest()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            if line.startswith("#"):
                if line.startswith("# note: ") and not manifest.source_note:
                    manifest.source_note = line[len("# note: "):]
                continue
            fields = line.split("\t")
            if len(fields) != 5:
                raise CorpusFormatError(
                    f"line {lineno}: expected 5 tab-separated fields, got {len(fields)}"
                )
            url, stamp, status, content_type, html64 = fields
            try:
                record = PageRecord(
                    url=url,
                    html=base64.b64decode(html64, validate=True).decode("utf-8"),
                    fetched_at=_parse_timestamp(stamp),
                    status=int(status),
                    content_type=content_type,
                )
            except (ValueError, binascii.Error) as exc:
                raise CorpusFormatError(f"line {lineno}: {exc}") from exc
            manifest.add(record)
    return manifest


def _decode_body(content: bytes, header_content_type: str) -> str:
    """Charset from the Content-Type header, else the meta tag, else UTF-8;
    undecodable bytes become replacement characters."""
    charset = None
    match = _CHARSET_HEADER_RE.search(header_content_type or "")
    if match:
        charset = match.group(1)
    if charset is None:
        match = _META_CHARSET_RE.search(content[:4096])
        if match:
            charset = match.group(1).decode("ascii", "ignore")
    if charset:
        try:
            codecs.lookup(charset)
        except LookupError:
            charset = None
    return content.decode(charset or "utf-8", errors="replace")


def fetch_page(url: str, timeout: float = DEFAULT_TIMEOUT, session=None) -> PageRecord:
    """GET one page, following redirects; the final URL is recorded."""
    _require_absolute_http(url)
    owns_session = session is None
    if owns_session:
        session = requests.Session()
    session.max_redirects = MAX_REDIRECTS
    try:
        response = session.get(url, timeout=timeout, allow_redirects=True)
        content_type = response.headers.get("Content-Type", "")
        html = _decode_body(response.content, content_type)
        return PageRecord(
            url=response.url,
            html=html,
            fetched_at=datetime.now(timezone.utc),
            status=response.status_code,
            content_type=content_type.split(";")[0].strip(),
        )
    except requests.RequestException as exc:
        raise FetchError(url, type(exc).__name__) from exc
    except ValueError as exc:
        raise FetchError(url, str(exc)) from exc
    finally:
        if owns_session:
            session.close()


class _HostThrottle:
    """Serializes request start times per host with a fixed delay."""

    def __init__(self, delay: float):
        self.delay = delay
        self._lock = threading.Lock()
        self._next_slot: dict[str, float] = {}

    def wait(self, host: str) -> None:
        if self.delay <= 0:
            return
        while True:
            with self._lock:
                now = time.monotonic()
                slot = self._next_slot.get(host, 0.0)
                if slot <= now:
                    self._next_slot[host] = now + self.delay
                    return
                pause = slot - now
            time.sleep(pause)


def fetch_all(
    urls,
    manifest: CorpusManifest | None = None,
    workers: int = DEFAULT_WORKERS,
    host_delay: float = DEFAULT_HOST_DELAY,
    timeout: float = DEFAULT_TIMEOUT,
) -> tuple[CorpusManifest, list[FetchError]]:
    """Fetch urls concurrently into a manifest.

    At most `workers` requests are in flight; consecutive requests to one
    host are spaced by `host_delay` seconds; URLs already present in the
    manifest (or repeated in the input) are fetched once at most.
    """
    if manifest is None:
        manifest = CorpusManifest()
    throttle = _HostThrottle(host_delay)
    todo = []
    seen = set()
    for url in urls:
        if url not in manifest and url not in seen:
            seen.add(url)
            todo.append(url)

    errors: list[FetchError] = []

    def job(url: str) -> PageRecord:
        throttle.wait(urlsplit(url).netloc.lower())
        return fetch_page(url, timeout=timeout)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        for url, future in [(u, pool.submit(job, u)) for u in todo]:
            try:
                manifest.add(future.result())
            except FetchError as exc:
                errors.append(exc)
    return manifest, errors
