"""The ranking pipeline: measure, normalize, weight, sort.

For a query and a page type, every corpus page is measured (text
relevance, hub/authority over the neighborhood graph, syntactic
features), the selected attributes are min-max normalized across the
candidate set, and each page's score is the profile-weighted average of
its normalized values. Different type profiles therefore reorder the
same candidate set for the same query.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import DEFAULT_MAX_ITER, DEFAULT_ROOT_LIMIT, DEFAULT_TOL, build_neighborhood, hits
from .htmlfeat import analyze_page
from .profiles import ATTRIBUTES, TypeProfile, load_profiles, select_attributes
from .relevance import QueryTerms, calc_relevance_weight, normalize_query


@dataclass(frozen=True)
class FeatureVector:
    url: str
    values: dict[str, float]   # keyed by registered attribute names

    def __post_init__(self):
        unknown = set(self.values) - set(ATTRIBUTES)
        if unknown:
            raise ValueError(f"unknown attributes: {sorted(unknown)}")


@dataclass(frozen=True)
class RankedResult:
    rank: int                      # 1-based
    url: str
    score: float                   # in [0, 1]
    contributions: dict[str, float]  # attribute -> weight x normalized value


def measure_pages(corpus, q: QueryTerms, root_limit: int = DEFAULT_ROOT_LIMIT,
                  tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> list[FeatureVector]:
    """One FeatureVector per corpus page.

    Hub/authority come from the HITS run over the neighborhood graph of
    the relevance-ranked root set; pages outside the neighborhood score 0.
    """
    pages = list(corpus)
    analyses = {p.url: analyze_page(p) for p in pages}
    relevance = {
        p.url: calc_relevance_weight(analyses[p.url].visible_text, q) for p in pages
    }
    root = sorted(pages, key=lambda p: (-relevance[p.url], p.url))
    graph = build_neighborhood(root, corpus, root_limit=root_limit)
    scores = hits(graph, tol=tol, max_iter=max_iter)
    hub = dict(zip(graph.nodes, scores.hub))
    authority = dict(zip(graph.nodes, scores.authority))

    vectors = []
    for p in pages:
        analysis = analyses[p.url]
        feats = analysis.features
        rel = relevance[p.url]
        values = {
            "relevance": rel,
            "hub": float(hub.get(p.url, 0.0)),
            "authority": float(authority.get(p.url, 0.0)),
            "title_relevance": calc_relevance_weight(feats.title_text, q),
            "heading_relevance": calc_relevance_weight(feats.heading_text, q),
            "relevance_per_length": rel / max(feats.doc_length, 1),
            "n_links": float(feats.n_links),
            "n_self_links": float(feats.n_self_links),
            "n_lower_links": float(feats.n_lower_links),
            "n_same_links": float(feats.n_same_links),
            "n_images": float(feats.n_images),
            "n_thumbnails": float(feats.n_thumbnails),
            "n_download_links": float(feats.n_download_links),
            "n_dynamic_links": float(feats.n_dynamic_links),
            "n_paper_links": float(feats.n_paper_links),
            "doc_length": float(feats.doc_length),
            "anchor_alphabet_score": feats.anchor_alphabet_score,
            "links_per_length": feats.links_per_length,
            "text_to_image": feats.text_to_image,
        }
        vectors.append(FeatureVector(url=p.url, values=values))
    return vectors


def normalize_features(vectors: list[FeatureVector], profile: TypeProfile) -> list[FeatureVector]:
    """Min-max scale each selected attribute to [0, 1] across candidates.

    Attributes constant across the set map to 0; inverted attributes
    (where the profile says smaller is better) become 1 - scaled.
    """
    if not vectors:
        return []
    normalized: list[dict[str, float]] = [{} for _ in vectors]
    for attr in profile.selected:
        column = [v.values[attr] for v in vectors]
        low, high = min(column), max(column)
        span = high - low
        for i, raw in enumerate(column):
            if span == 0:
                scaled = 0.0
            else:
                scaled = (raw - low) / span
                if attr in profile.inverted:
                    scaled = 1.0 - scaled
            normalized[i][attr] = scaled
    return [FeatureVector(url=v.url, values=vals) for v, vals in zip(vectors, normalized)]


def score_vectors(vectors: list[FeatureVector], profile: TypeProfile, k: int) -> list[RankedResult]:
    """Weighted average of normalized values; ties break on URL."""
    normalized = normalize_features(vectors, profile)
    scored = []
    for vector in normalized:
        contributions = {
            attr: profile.weights[attr] * vector.values[attr] for attr in sorted(profile.selected)
        }
        scored.append((sum(contributions.values()), vector.url, contributions))
    scored.sort(key=lambda item: (-item[0], item[1]))
    return [
        RankedResult(rank=i + 1, url=url, score=score, contributions=contributions)
        for i, (score, url, contributions) in enumerate(scored[:k])
    ]


def rank(query: str, page_type: str, corpus, k: int = 10,
         profiles: dict[str, TypeProfile] | None = None, stopwords=None,
         root_limit: int = DEFAULT_ROOT_LIMIT) -> list[RankedResult]:
    """Top-k pages for the query under the given page type's profile."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if profiles is None:
        profiles = load_profiles()
    profile = select_attributes(page_type, profiles)
    q = normalize_query(query, stopwords)
    if len(corpus) == 0:
        return []
    vectors = measure_pages(corpus, q, root_limit=root_limit)
    return score_vectors(vectors, profile, k)
