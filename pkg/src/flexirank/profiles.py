"""Page-type profiles: which attributes a type scores on, and how hard.

Profiles are data, not code: the shipped defaults live in
data/profiles.ini and any file with the same layout can replace them.
Every profile must include the three mandatory attributes (relevance,
hub, authority), reference only registered attribute names, and have
weights summing to 1.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass
from importlib import resources

# Every attribute a profile may select. The first six are query/graph
# scores; the rest are the per-page syntactic measurements.
ATTRIBUTES = (
    "relevance",
    "hub",
    "authority",
    "title_relevance",
    "heading_relevance",
    "relevance_per_length",
    "n_links",
    "n_self_links",
    "n_lower_links",
    "n_same_links",
    "n_images",
    "n_thumbnails",
    "n_download_links",
    "n_dynamic_links",
    "n_paper_links",
    "doc_length",
    "anchor_alphabet_score",
    "links_per_length",
    "text_to_image",
)

MANDATORY_ATTRIBUTES = frozenset({"relevance", "hub", "authority"})

PAGE_TYPES = (
    "index",
    "homepage",
    "portal",
    "article",
    "advertisement",
    "research_paper",
    "glossary",
    "tutorial",
    "definition",
    "downloads",
    "default",
)

_WEIGHT_SUM_TOL = 1e-9


class ProfileError(ValueError):
    """A profile file failed validation."""


class UnknownPageTypeError(KeyError):
    def __init__(self, page_type: str):
        valid = ", ".join(PAGE_TYPES)
        super().__init__(f"unknown page type {page_type!r}; valid types: {valid}")
        self.page_type = page_type


@dataclass(frozen=True)
class TypeProfile:
    page_type: str
    weights: dict[str, float]      # attribute -> non-negative weight, sums to 1
    inverted: frozenset[str]       # attributes where smaller raw values win

    @property
    def selected(self) -> frozenset[str]:
        return frozenset(self.weights)

    def validate(self) -> "TypeProfile":
        unknown = set(self.weights) - set(ATTRIBUTES)
        if unknown:
            raise ProfileError(
                f"[{self.page_type}] unknown attributes: {sorted(unknown)}"
            )
        missing = MANDATORY_ATTRIBUTES - set(self.weights)
        if missing:
            raise ProfileError(
                f"[{self.page_type}] missing mandatory attributes: {sorted(missing)}"
            )
        if any(w < 0 for w in self.weights.values()):
            raise ProfileError(f"[{self.page_type}] weights must be non-negative")
        total = sum(self.weights.values())
        if abs(total - 1.0) > _WEIGHT_SUM_TOL:
            raise ProfileError(
                f"[{self.page_type}] weights sum to {total!r}, expected 1"
            )
        stray = self.inverted - set(self.weights)
        if stray:
            raise ProfileError(
                f"[{self.page_type}] inverted attributes not selected: {sorted(stray)}"
            )
        return self


def _parse_profiles(text: str, origin: str) -> dict[str, TypeProfile]:
    parser = configparser.ConfigParser()
    try:
        parser.read_string(text, source=origin)
    except configparser.Error as exc:
        raise ProfileError(f"{origin}: {exc}") from exc
    profiles: dict[str, TypeProfile] = {}
    for section in parser.sections():
        weights: dict[str, float] = {}
        inverted: frozenset[str] = frozenset()
        for key, value in parser.items(section):
            if key == "invert":
                inverted = frozenset(value.replace(",", " ").split())
                continue
            try:
                weights[key] = float(value)
            except ValueError as exc:
                raise ProfileError(
                    f"[{section}] weight for {key!r} is not a number: {value!r}"
                ) from exc
        profiles[section] = TypeProfile(
            page_type=section, weights=weights, inverted=inverted
        ).validate()
    if not profiles:
        raise ProfileError(f"{origin}: no profile sections found")
    return profiles


def load_profiles(path=None) -> dict[str, TypeProfile]:
    """Profiles from a config file, or the shipped defaults."""
    if path is None:
        text = resources.files("flexirank.data").joinpath("profiles.ini").read_text()
        return _parse_profiles(text, "profiles.ini (shipped)")
    with open(path, encoding="utf-8") as fh:
        return _parse_profiles(fh.read(), str(path))


def select_attributes(page_type: str, profiles: dict[str, TypeProfile] | None = None) -> TypeProfile:
    """The profile to score with for a requested page type."""
    if profiles is None:
        profiles = load_profiles()
    try:
        return profiles[page_type]
    except KeyError:
        raise UnknownPageTypeError(page_type) from None
