"""Neighborhood graph construction and hub/authority iteration.

The working graph for a query is the top-ranked root pages plus every
corpus page they link to and every corpus page linking to them. Hub and
authority scores are computed by the classic alternating updates
(authority from in-link hubs, hub from out-link authorities) with L2
normalization each round.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .htmlfeat import extract_links
from .kernels import hits_kernel

DEFAULT_ROOT_LIMIT = 200
DEFAULT_TOL = 1e-8
DEFAULT_MAX_ITER = 100


@dataclass
class NeighborhoodGraph:
    nodes: list[str]
    edges: list[tuple[int, int]]     # (from, to) node indices, no dupes/self
    root_set: list[bool]

    def index_of(self, url: str) -> int:
        return self.nodes.index(url)


@dataclass
class HubAuthScores:
    hub: np.ndarray
    authority: np.ndarray
    iterations: int
    converged: bool


def _outgoing(page, node_urls: set[str]) -> set[str]:
    return {
        link.target
        for link in extract_links(page)
        if link.target != page.url and link.target in node_urls
    }


def build_neighborhood(root, corpus, root_limit: int = DEFAULT_ROOT_LIMIT) -> NeighborhoodGraph:
    """Expand a ranked root list into the HITS working graph.

    Nodes: the top `root_limit` root pages, the corpus pages they link
    to, and the corpus pages linking to any of them. Edges come from
    every node page's links, restricted to the node set.
    """
    roots = list(root)[:root_limit]
    root_urls = [p.url for p in roots]
    corpus_urls = {p.url for p in corpus}
    all_links = {p.url: {l.target for l in extract_links(p) if l.target != p.url} for p in corpus}

    nodes: dict[str, None] = dict.fromkeys(root_urls)
    root_set = set(root_urls)
    for url in root_urls:
        for target in sorted(all_links.get(url, ())):
            if target in corpus_urls:
                nodes.setdefault(target, None)
    for page in corpus:
        if page.url not in root_set and all_links[page.url] & root_set:
            nodes.setdefault(page.url, None)

    node_list = list(nodes)
    index = {url: i for i, url in enumerate(node_list)}
    edges: list[tuple[int, int]] = []
    seen = set()
    for url in node_list:
        for target in sorted(all_links.get(url, ())):
            if target in index:
                edge = (index[url], index[target])
                if edge not in seen:
                    seen.add(edge)
                    edges.append(edge)
    return NeighborhoodGraph(
        nodes=node_list,
        edges=edges,
        root_set=[url in root_set for url in node_list],
    )


def hits(graph: NeighborhoodGraph, tol: float = DEFAULT_TOL,
         max_iter: int = DEFAULT_MAX_ITER) -> HubAuthScores:
    """Iterate hub/authority to convergence.

    Scores are L2-normalized each round; iteration stops when the largest
    per-node change of both vectors drops below tol. An edgeless graph
    yields all-zero scores immediately.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")
    n = len(graph.nodes)
    src = np.fromiter((e[0] for e in graph.edges), dtype=np.intp, count=len(graph.edges))
    dst = np.fromiter((e[1] for e in graph.edges), dtype=np.intp, count=len(graph.edges))
    hub, authority, iterations, converged = hits_kernel(n, src, dst, tol, max_iter)
    return HubAuthScores(
        hub=np.asarray(hub),
        authority=np.asarray(authority),
        iterations=iterations,
        converged=bool(converged),
    )
