"""The flexirank command line.

Subcommands mirror the pipeline stages: fetch pages into a corpus file,
inspect it, emit per-page features or relevance scores, run the link
analysis, rank for a query and page type, run the clustering /
classifier validation tools, and serve the HTTP interface.
"""

from __future__ import annotations

import argparse
import os
import re
import sys

import numpy as np

from . import cluster as clustering
from . import mlp as neural
from .corpus import (
    CorpusFormatError,
    CorpusManifest,
    fetch_all,
    load_corpus,
    save_corpus,
)
from .graph import DEFAULT_ROOT_LIMIT, DEFAULT_TOL, build_neighborhood, hits
from .htmlfeat import extract_features, visible_text
from .profiles import PAGE_TYPES, ProfileError, UnknownPageTypeError, load_profiles
from .ranking import measure_pages, rank
from .relevance import (
    EmptyQueryError,
    calc_relevance_weight,
    load_stoplist,
    normalize_query,
)

FEATURE_FIELDS = (
    "n_links", "n_self_links", "n_lower_links", "n_same_links", "n_images",
    "n_thumbnails", "n_download_links", "n_dynamic_links", "n_paper_links",
    "doc_length", "anchor_alphabet_score", "links_per_length", "text_to_image",
    "title_text", "heading_text",
)


def _profiles_from(args):
    path = getattr(args, "profiles", None) or os.environ.get("FLEXIRANK_PROFILES")
    return load_profiles(path)


def _sanitize(text: str) -> str:
    return re.sub(r"\s+", " ", text).strip()


def cmd_fetch(args) -> int:
    with open(args.urls, encoding="utf-8") as fh:
        urls = [line.strip() for line in fh if line.strip() and not line.startswith("#")]
    manifest = CorpusManifest(source_note=args.note or f"fetched from {args.urls}")
    manifest, errors = fetch_all(
        urls, manifest=manifest, workers=args.workers,
        host_delay=args.delay, timeout=args.timeout,
    )
    save_corpus(manifest, args.out)
    for err in errors:
        print(f"error: {err}", file=sys.stderr)
    print(f"fetched {len(manifest)} pages into {args.out} ({len(errors)} errors)")
    return 0 if not errors else 1


def cmd_corpus_ls(args) -> int:
    manifest = load_corpus(args.corpus)
    for r in manifest:
        print(f"{r.url}\t{r.status}\t{r.content_type}\t{r.fetched_at.isoformat()}\t{len(r.html)}")
    return 0


def cmd_features(args) -> int:
    manifest = load_corpus(args.corpus)
    print("# url\t" + "\t".join(FEATURE_FIELDS))
    for record in manifest:
        if args.url and args.url not in record.url:
            continue
        feats = extract_features(record)
        values = []
        for name in FEATURE_FIELDS:
            value = getattr(feats, name)
            values.append(_sanitize(value) if isinstance(value, str) else f"{value:g}")
        print(record.url + "\t" + "\t".join(values))
    return 0


def cmd_relevance(args) -> int:
    manifest = load_corpus(args.corpus)
    stopwords = load_stoplist(args.stoplist) if args.stoplist else None
    q = normalize_query(args.query, stopwords)
    scored = [
        (calc_relevance_weight(visible_text(record), q), record.url)
        for record in manifest
    ]
    scored.sort(key=lambda item: (-item[0], item[1]))
    for score, url in scored:
        print(f"{url}\t{score:.6f}")
    return 0


def cmd_hits(args) -> int:
    manifest = load_corpus(args.corpus)
    q = normalize_query(args.query)
    relevance = {
        record.url: calc_relevance_weight(visible_text(record), q)
        for record in manifest
    }
    root = sorted(manifest, key=lambda r: (-relevance[r.url], r.url))
    graph = build_neighborhood(root, manifest, root_limit=args.root_limit)
    scores = hits(graph, tol=args.tol, max_iter=args.max_iter)
    rows = sorted(
        zip(graph.nodes, scores.hub, scores.authority),
        key=lambda row: (-row[2], row[0]),
    )
    for url, hub_score, auth_score in rows:
        print(f"{url}\t{hub_score:.6f}\t{auth_score:.6f}")
    if not scores.converged:
        print(f"warning: not converged after {scores.iterations} iterations", file=sys.stderr)
    return 0


def cmd_rank(args) -> int:
    manifest = load_corpus(args.corpus)
    profiles = _profiles_from(args)
    stopwords = load_stoplist(args.stoplist) if args.stoplist else None
    results = rank(args.query, args.type, manifest, k=args.k,
                   profiles=profiles, stopwords=stopwords)
    for r in results:
        print(f"{r.rank}\t{r.score:.6f}\t{r.url}")
    return 0


def cmd_cluster(args) -> int:
    manifest = load_corpus(args.corpus)
    q = normalize_query(args.query)
    vectors = measure_pages(manifest, q)
    data = np.array(
        [[v.values[name] for name in clustering.CLUSTERING_FEATURES] for v in vectors]
    )
    model = clustering.fcm_fit(data, c=args.c, m=args.m, seed=args.seed)
    print("# cluster\t" + "\t".join(clustering.CLUSTERING_FEATURES))
    for i, center in enumerate(model.centers, start=1):
        print(f"{i}\t" + "\t".join(f"{value:.3f}" for value in center))
    entropy = clustering.classification_entropy(model)
    print(f"classification_entropy\t{entropy:.6f}")
    print(f"iterations\t{model.iterations}")
    return 0


def cmd_classify_train(args) -> int:
    data = np.loadtxt(args.features, ndmin=2)
    with open(args.labels, encoding="utf-8") as fh:
        labels = [line.strip() for line in fh if line.strip() and not line.startswith("#")]
    model = neural.mlp_train(
        data, labels, hidden=args.hidden, epochs=args.epochs,
        rate=args.rate, seed=args.seed,
    )
    print(f"rms_error\t{model.rms_error:.6f}")
    return 0


def cmd_serve(args) -> int:
    from .service import serve

    profiles_path = args.profiles or os.environ.get("FLEXIRANK_PROFILES")
    serve(args.corpus, profiles_path, bind=args.bind, ui_dir=args.ui)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="flexirank")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fetch", help="download pages listed in a file into a corpus")
    p.add_argument("--urls", required=True, help="file with one URL per line")
    p.add_argument("--out", required=True, help="corpus file to write")
    p.add_argument("--workers", type=int, default=4)
    p.add_argument("--delay", type=float, default=0.5, help="per-host delay, seconds")
    p.add_argument("--timeout", type=float, default=10.0)
    p.add_argument("--note", default="", help="source note stored in the corpus")
    p.set_defaults(func=cmd_fetch)

    p = sub.add_parser("corpus", help="corpus file utilities")
    corpus_sub = p.add_subparsers(dest="corpus_command", required=True)
    p_ls = corpus_sub.add_parser("ls", help="list records")
    p_ls.add_argument("corpus")
    p_ls.set_defaults(func=cmd_corpus_ls)

    p = sub.add_parser("features", help="emit per-page syntactic features")
    p.add_argument("corpus")
    p.add_argument("--url", default="", help="only pages whose URL contains this")
    p.set_defaults(func=cmd_features)

    p = sub.add_parser("relevance", help="score pages against a query")
    p.add_argument("corpus")
    p.add_argument("--query", required=True)
    p.add_argument("--stoplist", default="", help="stop-list override file")
    p.set_defaults(func=cmd_relevance)

    p = sub.add_parser("hits", help="hub/authority scores for a query's neighborhood")
    p.add_argument("corpus")
    p.add_argument("--query", required=True)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--max-iter", type=int, default=100)
    p.add_argument("--root-limit", type=int, default=DEFAULT_ROOT_LIMIT)
    p.set_defaults(func=cmd_hits)

    p = sub.add_parser("rank", help="rank the corpus for a query and page type")
    p.add_argument("corpus")
    p.add_argument("--query", required=True)
    p.add_argument("--type", default="default", choices=PAGE_TYPES)
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--profiles", default="", help="profile config override")
    p.add_argument("--stoplist", default="")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("cluster", help="fuzzy c-means over page features")
    p.add_argument("corpus")
    p.add_argument("--query", required=True,
                   help="query used for the relevance feature column")
    p.add_argument("--c", type=int, default=4)
    p.add_argument("--m", type=float, default=2.0)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("classify-train", help="train the neural page classifier")
    p.add_argument("features", help="matrix file, one row of numbers per page")
    p.add_argument("labels", help="one class label per line")
    p.add_argument("--hidden", type=int, default=5)
    p.add_argument("--epochs", type=int, default=1000)
    p.add_argument("--rate", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_classify_train)

    p = sub.add_parser("serve", help="run the HTTP search service")
    p.add_argument("--corpus", required=True)
    p.add_argument("--profiles", default="")
    p.add_argument("--bind", default="127.0.0.1:8080")
    p.add_argument("--ui", default="", help="directory with the web console build")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (
        CorpusFormatError,
        EmptyQueryError,
        ProfileError,
        UnknownPageTypeError,
        FileNotFoundError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
