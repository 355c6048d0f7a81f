"""Textual relevance scoring.

A query is cleaned (stop words dropped, the rest stemmed) and expanded
into every contiguous word n-gram; each n-gram carries a weight equal to
the character length of its original wording divided by the length of
the whole query string. A document's relevance is the weighted sum of
the occurrence counts of all n-grams: a page containing the full query
phrase therefore always outscores one containing only fragments of it
the same number of times.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources

from .stem import porter_stem

_WORD_RE = re.compile(r"[A-Za-z0-9]+")


class EmptyQueryError(ValueError):
    """Query is empty, or nothing is left of it after stop-word removal."""


def _load_default_stopwords() -> frozenset[str]:
    text = resources.files("flexirank.data").joinpath("stopwords.txt").read_text()
    return frozenset(_parse_stoplist(text))


def _parse_stoplist(text: str) -> set[str]:
    words = set()
    for line in text.splitlines():
        line = line.strip().lower()
        if line and not line.startswith("#"):
            words.add(line)
    return words


DEFAULT_STOPWORDS = _load_default_stopwords()


def load_stoplist(path) -> frozenset[str]:
    """Read a stop list override: one word per line, '#' comments."""
    with open(path, encoding="utf-8") as fh:
        return frozenset(_parse_stoplist(fh.read()))


def tokenize(text: str) -> list[str]:
    """Lowercased alphanumeric word tokens."""
    return [m.group(0).lower() for m in _WORD_RE.finditer(text)]


def stem_tokens(tokens: list[str]) -> tuple[str, ...]:
    return tuple(porter_stem(t) for t in tokens)


@dataclass(frozen=True)
class Keyword:
    term: str                 # lowercased original wording, space-joined
    stems: tuple[str, ...]    # stemmed token sequence used for matching
    weight: float             # len(original wording) / len(query string)


@dataclass(frozen=True)
class QueryTerms:
    original: str
    keywords: tuple[Keyword, ...]

    @property
    def total_weight(self) -> float:
        return sum(k.weight for k in self.keywords)


def normalize_query(s: str, stopwords: frozenset[str] | None = None) -> QueryTerms:
    """Clean a raw query and expand it into weighted keyword n-grams.

    Raises EmptyQueryError when the query is blank or consists solely of
    stop words.
    """
    if stopwords is None:
        stopwords = DEFAULT_STOPWORDS
    s = s.strip()
    if not s:
        raise EmptyQueryError("empty query")
    surfaces = [m.group(0) for m in _WORD_RE.finditer(s)]
    kept = [w for w in surfaces if w.lower() not in stopwords]
    if not kept:
        raise EmptyQueryError("query is empty after stop-word removal")

    denom = len(s)
    keywords: list[Keyword] = []
    seen: set[tuple[str, ...]] = set()
    for size in range(1, len(kept) + 1):
        for start in range(0, len(kept) - size + 1):
            words = kept[start : start + size]
            stems = stem_tokens([w.lower() for w in words])
            if stems in seen:
                continue
            seen.add(stems)
            surface = " ".join(words)
            keywords.append(
                Keyword(term=surface.lower(), stems=stems, weight=len(surface) / denom)
            )
    return QueryTerms(original=s, keywords=tuple(keywords))


def _count_phrase(haystack: tuple[str, ...], needle: tuple[str, ...]) -> int:
    """Non-overlapping left-to-right occurrences of needle in haystack."""
    n, size = len(haystack), len(needle)
    count = 0
    i = 0
    while i + size <= n:
        if haystack[i : i + size] == needle:
            count += 1
            i += size
        else:
            i += 1
    return count


def calc_relevance_weight(doc_text: str, q: QueryTerms) -> float:
    """Sum over keywords of weight x occurrence count in the document.

    Matching is case-insensitive on stemmed token sequences; each keyword
    is counted independently, so one hit of the full phrase also scores
    every sub-phrase once.
    """
    if not doc_text:
        return 0.0
    doc_stems = stem_tokens(tokenize(doc_text))
    return sum(k.weight * _count_phrase(doc_stems, k.stems) for k in q.keywords)


def tag_relevance(page, q: QueryTerms) -> tuple[float, float]:
    """Relevance of the query inside the page's title and heading tags."""
    from .htmlfeat import extract_features

    features = extract_features(page)
    return (
        calc_relevance_weight(features.title_text, q),
        calc_relevance_weight(features.heading_text, q),
    )
