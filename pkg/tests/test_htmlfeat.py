from datetime import datetime, timezone
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from flexirank.corpus import PageRecord
from flexirank.htmlfeat import (
    LOWER,
    OTHER,
    SAME,
    SELF,
    classify_link_level,
    extract_features,
    extract_links,
)

FIXTURES = Path(__file__).parent / "fixtures" / "pages"


def page(url: str, html: str) -> PageRecord:
    return PageRecord(
        url=url,
        html=html,
        fetched_at=datetime(2026, 1, 1, tzinfo=timezone.utc),
        status=200,
        content_type="text/html",
    )


# Hand-labeled before implementation, from the rule: strip fragments,
# lowercase hosts, drop default ports, empty path == "/". self needs
# identical host+path+query; lower needs the same host and a target path
# strictly inside the source page's directory; same needs sibling hosts
# under the immediate parent domain.
LEVEL_CASES = [
    # the three canonical cases
    ("http://a.b.com", "http://a.b.com/x", LOWER),
    ("http://a.b.com", "http://x.b.com", SAME),
    ("http://a.b.com", "http://a.b.com", SELF),
    # derived edge cases: fragments, ports, trailing slashes, queries
    ("http://a.b.com/", "http://a.b.com", SELF),
    ("http://a.b.com", "http://a.b.com#top", SELF),
    ("http://a.b.com/page.html", "http://a.b.com/page.html#sec", SELF),
    ("http://a.b.com:80/", "http://a.b.com/", SELF),
    ("https://a.b.com:443/x", "https://a.b.com/x", SELF),
    ("http://a.b.com:8080/", "http://a.b.com/", OTHER),
    ("http://a.b.com/", "http://a.b.com:8080/", OTHER),
    ("http://A.B.com/", "http://a.b.com/", SELF),
    ("http://a.b.com/x", "http://a.b.com/x/", LOWER),
    ("http://a.b.com/x/", "http://a.b.com/x", OTHER),
    ("http://a.b.com/dir/page.html", "http://a.b.com/dir/other.html", LOWER),
    ("http://a.b.com/dir/page.html", "http://a.b.com/dir/sub/deep.html", LOWER),
    ("http://a.b.com/dir/page.html", "http://a.b.com/dir/", OTHER),
    ("http://a.b.com/dir/page.html", "http://a.b.com/", OTHER),
    ("http://a.b.com/dir/page.html", "http://a.b.com/other/x.html", OTHER),
    ("http://a.b.com/", "http://a.b.com/?q=1", OTHER),
    ("http://a.b.com/x?q=1", "http://a.b.com/x?q=1", SELF),
    ("http://a.b.com/x?q=1", "http://a.b.com/x?q=2", OTHER),
    ("http://a.b.com", "https://a.b.com", SELF),
    ("http://a.b.com", "http://y.b.com/deep/path.html", SAME),
    ("http://a.b.com/any/where", "http://x.b.com", SAME),
    ("http://a.b.com", "http://b.com", OTHER),
    ("http://b.com", "http://a.b.com", OTHER),
    ("http://a.b.com", "http://x.y.b.com", OTHER),
    ("http://a.b.com", "http://a.c.com", OTHER),
    ("http://a.com", "http://b.com", SAME),
    ("http://localhost", "http://otherhost", OTHER),
    ("http://a.b.com", "http://a.b.com/x?s=1", LOWER),
    ("http://a.b.com/X", "http://a.b.com/x", LOWER),
    ("http://x.b.com/deep/page", "http://a.b.com/also/deep", SAME),
]


@pytest.mark.parametrize("source,target,expected", LEVEL_CASES)
def test_classify_link_level(source, target, expected):
    assert classify_link_level(source, target) == expected


def test_level_is_total_function():
    urls = [s for s, _, _ in LEVEL_CASES] + [t for _, t, _ in LEVEL_CASES]
    for s in urls:
        for t in urls:
            assert classify_link_level(s, t) in (SELF, LOWER, SAME, OTHER)


class TestExtractLinks:
    def test_self_link_excluded_from_total(self):
        p = page("http://a.b.com/", '<a href="/x">x</a><a href="#top">t</a>')
        links = extract_links(p)
        assert len(links) == 2
        assert {l.level for l in links} == {LOWER, SELF}
        assert extract_features(p).n_links == 1
        assert extract_features(p).n_self_links == 1

    def test_no_links(self):
        assert extract_links(page("http://a.b.com/", "<p>plain text</p>")) == []

    def test_frame_src_counts_with_empty_anchor(self):
        p = page("http://a.b.com/", '<frameset><frame src="menu.html"></frameset>')
        links = extract_links(p)
        assert len(links) == 1
        assert links[0].anchor_text == ""
        assert links[0].target == "http://a.b.com/menu.html"
        assert extract_features(p).n_links == 1

    def test_iframe_src_counts(self):
        p = page("http://a.b.com/", '<iframe src="embed.html"></iframe>')
        assert len(extract_links(p)) == 1

    def test_relative_resolution_and_fragment_stripping(self):
        p = page("http://a.b.com/dir/page.html", '<a href="../up.html#frag">up</a>')
        (link,) = extract_links(p)
        assert link.target == "http://a.b.com/up.html"

    def test_base_tag_honored(self):
        p = page(
            "http://a.b.com/",
            '<base href="http://cdn.example/root/"><a href="x.html">x</a>',
        )
        (link,) = extract_links(p)
        assert link.target == "http://cdn.example/root/x.html"

    def test_non_web_schemes_skipped(self):
        html = '<a href="mailto:x@y.z">mail</a><a href="javascript:void(0)">js</a>'
        assert extract_links(page("http://a.b.com/", html)) == []

    def test_anchor_text_collected(self):
        p = page("http://a.b.com/", '<a href="/x">read <b>more</b> here</a>')
        (link,) = extract_links(p)
        assert link.anchor_text == "read more here"

    def test_malformed_html_never_raises(self):
        html = '<a href="/x">unclosed <div><<<&&& <a href="/y">y'
        links = extract_links(page("http://a.b.com/", html))
        assert {l.target for l in links} == {"http://a.b.com/x", "http://a.b.com/y"}


class TestExtractFeatures:
    def test_empty_body(self):
        feats = extract_features(page("http://a.b.com/", "<html><head><title>T</title></head><body></body></html>"))
        assert feats.doc_length == 0
        assert feats.n_links == feats.n_images == feats.n_thumbnails == 0
        assert feats.title_text == "T"

    def test_alphabet_anchors(self):
        letters = "".join(f'<a href="/{c}.html">{c}</a>' for c in "ABCDEFGHIJKLMNOPQRSTUVWXYZ")
        feats = extract_features(page("http://a.b.com/glossary.html", letters))
        assert feats.anchor_alphabet_score == 1.0

    def test_alphabet_score_fraction(self):
        html = '<a href="/a.html">A</a><a href="/x.html">long anchor text</a>'
        feats = extract_features(page("http://a.b.com/", html))
        assert feats.anchor_alphabet_score == 0.5

    def test_downloads_fixture_hand_count(self):
        html = (FIXTURES / "downloads.html").read_text()
        feats = extract_features(page("http://mirror.example/downloads.html", html))
        assert feats.n_download_links == 4  # 3 .zip + 1 .exe in the fixture
        assert feats.n_paper_links == 0

    def test_dynamic_links(self):
        html = (
            '<a href="/search?q=x">q</a>'
            '<a href="/page.php">php</a>'
            '<a href="/static.html">s</a>'
        )
        feats = extract_features(page("http://a.b.com/", html))
        assert feats.n_dynamic_links == 2

    def test_paper_and_download_extensions(self):
        html = '<a href="/a.pdf">pdf</a><a href="/b.ps">ps</a><a href="/c.tar.gz">tgz</a>'
        feats = extract_features(page("http://a.b.com/", html))
        assert feats.n_paper_links == 2
        assert feats.n_download_links == 3

    def test_thumbnails_are_images_inside_anchors(self):
        html = (
            '<a href="/x"><img src="t.png"></a>'
            '<img src="plain.png">'
            '<a href="/y"><span><img src="u.png"></span></a>'
        )
        feats = extract_features(page("http://a.b.com/", html))
        assert feats.n_images == 3
        assert feats.n_thumbnails == 2

    def test_doc_length_visible_text_only(self):
        html = (
            "<head><title>Title Words</title><style>p{color:red}</style>"
            "<script>var x=1;</script></head>"
            "<body><h1>Top</h1><p>one   two\n three</p></body>"
        )
        feats = extract_features(page("http://a.b.com/", html))
        # visible text collapses to "Top one two three"
        assert feats.doc_length == len("Top one two three")
        assert feats.heading_text == "Top"
        assert feats.title_text == "Title Words"

    def test_level_counts_and_ratios(self):
        html = (
            '<a href="/sub/x.html">lower</a>'
            '<a href="http://sib.b.com/">same</a>'
            '<a href="http://elsewhere.org/">other</a>'
            '<a href="#here">self</a>'
        )
        feats = extract_features(page("http://a.b.com/", html))
        assert (feats.n_links, feats.n_self_links, feats.n_lower_links, feats.n_same_links) == (3, 1, 1, 1)
        assert feats.n_lower_links + feats.n_same_links <= feats.n_links
        assert feats.links_per_length == feats.n_links / max(feats.doc_length, 1)
        assert feats.text_to_image == feats.doc_length / 1  # no images -> divisor 1

    def test_determinism(self):
        html = (FIXTURES / "downloads.html").read_text()
        p = page("http://mirror.example/downloads.html", html)
        assert extract_features(p) == extract_features(p)


@given(st.integers(min_value=0, max_value=5), st.integers(min_value=0, max_value=3))
def test_appending_anchor_increments_n_links(n_existing, n_images):
    body = "<p>seed text</p>"
    body += "".join(f'<a href="/p{i}.html">p{i}</a>' for i in range(n_existing))
    body += "<img src='x.png'>" * n_images
    before = extract_features(page("http://a.b.com/", body))
    after = extract_features(
        page("http://a.b.com/", body + '<a href="http://fresh.example/new.html">new</a>')
    )
    assert after.n_links == before.n_links + 1
    assert after.n_images == before.n_images
    assert after.n_thumbnails == before.n_thumbnails
