"""flexirank: web-page ranking that adapts to a requested page type.

Pages are scored by a weighted average of text relevance, HITS
hub/authority and syntactic HTML measurements; the attribute selection
and weights come from per-type profiles, so the same query can rank the
same corpus differently for different requested types.
"""

from .corpus import CorpusManifest, PageRecord, fetch_page, load_corpus, save_corpus
from .graph import HubAuthScores, NeighborhoodGraph, build_neighborhood, hits
from .htmlfeat import (
    DocumentFeatures,
    LinkInfo,
    classify_link_level,
    extract_features,
    extract_links,
)
from .profiles import TypeProfile, load_profiles, select_attributes
from .ranking import FeatureVector, RankedResult, normalize_features, rank
from .relevance import QueryTerms, calc_relevance_weight, normalize_query, tag_relevance

__version__ = "0.1.0"

__all__ = [
    "CorpusManifest",
    "DocumentFeatures",
    "FeatureVector",
    "HubAuthScores",
    "LinkInfo",
    "NeighborhoodGraph",
    "PageRecord",
    "QueryTerms",
    "RankedResult",
    "TypeProfile",
    "build_neighborhood",
    "calc_relevance_weight",
    "classify_link_level",
    "extract_features",
    "extract_links",
    "fetch_page",
    "hits",
    "load_corpus",
    "load_profiles",
    "normalize_features",
    "normalize_query",
    "rank",
    "save_corpus",
    "select_attributes",
    "tag_relevance",
    "__version__",
]
