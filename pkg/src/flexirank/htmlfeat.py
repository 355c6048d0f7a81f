"""Syntactic HTML measurements for one page.

Everything the type profiles score on is measured here: hyperlinks (with
frame/iframe sources, same-page links excluded from the total), link
levels in the host/path tree, images and linked thumbnails, download and
dynamic-page targets, visible-text length, and title/heading texts.
Parsing is browser-style tolerant; malformed markup never raises.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from html.parser import HTMLParser
from urllib.parse import urldefrag, urljoin, urlsplit

SELF = "self"
LOWER = "lower"
SAME = "same"
OTHER = "other"

DOWNLOAD_EXTENSIONS = (".zip", ".tar", ".gz", ".exe", ".ps", ".pdf")
DOCUMENT_EXTENSIONS = (".ps", ".pdf")
DYNAMIC_EXTENSIONS = (".php", ".asp", ".aspx", ".jsp", ".cgi")

_WS_RE = re.compile(r"\s+")


@dataclass(frozen=True)
class LinkInfo:
    target: str          # resolved absolute URL, fragment stripped
    anchor_text: str     # empty for frame/iframe sources
    level: str           # self | lower | same | other
    is_dynamic: bool
    is_download: bool
    from_frame: bool = False


@dataclass(frozen=True)
class DocumentFeatures:
    n_links: int               # anchors + frame sources, minus same-page links
    n_self_links: int
    n_lower_links: int
    n_same_links: int
    n_images: int
    n_thumbnails: int          # images nested inside a hyperlink
    n_download_links: int
    n_dynamic_links: int
    n_paper_links: int         # .ps/.pdf targets
    doc_length: int            # characters of whitespace-collapsed visible text
    title_text: str
    heading_text: str
    anchor_alphabet_score: float   # fraction of anchors that are a single letter
    links_per_length: float
    text_to_image: float


def _collapse(text: str) -> str:
    return _WS_RE.sub(" ", text).strip()


def _normalize_url(url: str):
    """(host, path, query) with lowercase host, default ports dropped,
    empty path mapped to '/' and the fragment ignored."""
    parts = urlsplit(url)
    scheme = parts.scheme.lower()
    host = (parts.hostname or "").lower()
    try:
        port = parts.port
    except ValueError:
        port = None
    if port is not None and (scheme, port) not in (("http", 80), ("https", 443)):
        host = f"{host}:{port}"
    return host, parts.path or "/", parts.query


def classify_link_level(source: str, target: str) -> str:
    """Place target relative to source in the host/path tree.

    self: identical host, path and query. lower: same host, target path
    strictly inside the source page's directory. same: sibling host
    under the immediate parent domain (a.b.com -> x.b.com). Everything
    else, including deeper cousin hosts, is other.
    """
    s_host, s_path, s_query = _normalize_url(source)
    t_host, t_path, t_query = _normalize_url(target)
    if s_host == t_host:
        if s_path == t_path and s_query == t_query:
            return SELF
        directory = s_path[: s_path.rfind("/") + 1]
        if t_path.startswith(directory) and len(t_path) > len(directory) and t_path != s_path:
            return LOWER
        return OTHER
    s_labels = s_host.split(".")
    t_labels = t_host.split(".")
    if (
        len(s_labels) >= 2
        and len(t_labels) >= 2
        and s_labels[1:] == t_labels[1:]
        and s_labels[0] != t_labels[0]
    ):
        return SAME
    return OTHER


class _PageParser(HTMLParser):
    """One tolerant pass collecting links, images, title/headings and
    visible text."""

    _SKIP_TEXT = {"script", "style", "title", "noscript", "template", "iframe"}
    _HEADINGS = {"h1", "h2", "h3", "h4", "h5", "h6"}

    def __init__(self, page_url: str):
        super().__init__(convert_charrefs=True)
        self.base_url = page_url
        self.links: list[tuple[str, list[str], bool]] = []  # (href, text parts, from_frame)
        self.n_images = 0
        self.n_thumbnails = 0
        self.title_parts: list[str] = []
        self.heading_parts: list[str] = []
        self.text_parts: list[str] = []
        self._skip_depth = 0
        self._heading_depth = 0
        self._in_title = False
        self._open_anchor: tuple[str, list[str]] | None = None
        self._saw_base = False

    def handle_starttag(self, tag, attrs):
        attrs = dict(attrs)
        if tag in self._SKIP_TEXT:
            if tag == "iframe" and attrs.get("src"):
                self.links.append((attrs["src"], [], True))
            if tag == "title":
                self._in_title = True
            else:
                self._skip_depth += 1
            return
        if tag == "base" and not self._saw_base and attrs.get("href"):
            self.base_url = urljoin(self.base_url, attrs["href"])
            self._saw_base = True
        elif tag == "a":
            self._close_anchor()
            href = attrs.get("href")
            if href is not None:
                self._open_anchor = (href, [])
        elif tag in ("frame", "iframe"):
            src = attrs.get("src")
            if src:
                self.links.append((src, [], True))
        elif tag == "img":
            self.n_images += 1
            if self._open_anchor is not None:
                self.n_thumbnails += 1
        elif tag in self._HEADINGS:
            self._heading_depth += 1

    def handle_endtag(self, tag):
        if tag in self._SKIP_TEXT:
            if tag == "title":
                self._in_title = False
            elif self._skip_depth > 0:
                self._skip_depth -= 1
            return
        if tag == "a":
            self._close_anchor()
        elif tag in self._HEADINGS and self._heading_depth > 0:
            self._heading_depth -= 1

    def handle_data(self, data):
        if self._in_title:
            self.title_parts.append(data)
            return
        if self._skip_depth > 0:
            return
        self.text_parts.append(data)
        if self._heading_depth > 0:
            self.heading_parts.append(data)
        if self._open_anchor is not None:
            self._open_anchor[1].append(data)

    def close(self):
        super().close()
        self._close_anchor()

    def _close_anchor(self):
        if self._open_anchor is not None:
            href, parts = self._open_anchor
            self.links.append((href, parts, False))
            self._open_anchor = None


def _parse(page) -> _PageParser:
    parser = _PageParser(page.url)
    try:
        parser.feed(page.html)
        parser.close()
    except Exception:
        pass  # salvage whatever was collected before the parser choked
    return parser


def _path_ends_with(target: str, extensions) -> bool:
    path = urlsplit(target).path.lower()
    return path.endswith(extensions)


def _make_link(page_url: str, base_url: str, href: str, text_parts, from_frame: bool) -> LinkInfo | None:
    resolved = urldefrag(urljoin(base_url, href))[0]
    scheme = urlsplit(resolved).scheme.lower()
    if scheme not in ("http", "https"):
        return None
    return LinkInfo(
        target=resolved,
        anchor_text=_collapse("".join(text_parts)),
        level=classify_link_level(page_url, resolved),
        is_dynamic=bool(urlsplit(resolved).query) or _path_ends_with(resolved, DYNAMIC_EXTENSIONS),
        is_download=_path_ends_with(resolved, DOWNLOAD_EXTENSIONS),
        from_frame=from_frame,
    )


@dataclass(frozen=True)
class PageAnalysis:
    """One parse worth of measurements; ranking consumes this directly."""

    links: list[LinkInfo]
    features: DocumentFeatures
    visible_text: str


def extract_links(page) -> list[LinkInfo]:
    """Every a-href and frame/iframe source with its resolved target.

    Same-page links are included here (they still carry level == self);
    extract_features subtracts them from the hyperlink total.
    """
    return analyze_page(page).links


def extract_features(page) -> DocumentFeatures:
    """Measure every syntactic feature of one page."""
    return analyze_page(page).features


def visible_text(page) -> str:
    """Whitespace-collapsed text content with tags/scripts/styles stripped."""
    return analyze_page(page).visible_text


def analyze_page(page) -> PageAnalysis:
    parser = _parse(page)
    links = []
    for href, text_parts, from_frame in parser.links:
        info = _make_link(page.url, parser.base_url, href, text_parts, from_frame)
        if info is not None:
            links.append(info)

    n_total = len(links)
    n_self = sum(1 for l in links if l.level == SELF)
    n_links = n_total - n_self
    anchors = [l for l in links if not l.from_frame]
    single_letter = sum(
        1 for l in anchors if len(l.anchor_text) == 1 and l.anchor_text.isascii() and l.anchor_text.isalpha()
    )
    visible = _collapse(" ".join(parser.text_parts))
    doc_length = len(visible)
    n_images = parser.n_images

    features = DocumentFeatures(
        n_links=n_links,
        n_self_links=n_self,
        n_lower_links=sum(1 for l in links if l.level == LOWER),
        n_same_links=sum(1 for l in links if l.level == SAME),
        n_images=n_images,
        n_thumbnails=parser.n_thumbnails,
        n_download_links=sum(1 for l in links if l.is_download),
        n_dynamic_links=sum(1 for l in links if l.is_dynamic),
        n_paper_links=sum(1 for l in links if _path_ends_with(l.target, DOCUMENT_EXTENSIONS)),
        doc_length=doc_length,
        title_text=_collapse(" ".join(parser.title_parts)),
        heading_text=_collapse(" ".join(parser.heading_parts)),
        anchor_alphabet_score=single_letter / len(anchors) if anchors else 0.0,
        links_per_length=n_links / max(doc_length, 1),
        text_to_image=doc_length / max(n_images, 1),
    )
    return PageAnalysis(links=links, features=features, visible_text=visible)
