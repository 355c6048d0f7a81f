"""Fuzzy c-means clustering and the classification-entropy validity index.

Data is min-max scaled per column before distance computations (the
clustering features mix counts with character lengths); reported centers
are mapped back to raw units. Fits are deterministic given the seed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .kernels import fcm_kernel

# Feature columns the page-clustering CLI feeds in, in order.
CLUSTERING_FEATURES = (
    "relevance",
    "n_images",
    "n_links",
    "n_self_links",
    "n_same_links",
    "n_lower_links",
    "doc_length",
)

DEFAULT_FUZZIFIER = 2.0
DEFAULT_TOL = 1e-6
DEFAULT_MAX_ITER = 300


@dataclass
class ClusterModel:
    c: int
    m: float
    centers: np.ndarray          # c x d, raw units
    membership: np.ndarray       # n x c, rows sum to 1
    objective_trace: np.ndarray  # one value per iteration, non-increasing
    iterations: int


def _minmax(data: np.ndarray):
    mins = data.min(axis=0)
    ranges = data.max(axis=0) - mins
    safe = np.where(ranges > 0, ranges, 1.0)
    return (data - mins) / safe, mins, safe


def fcm_fit(
    data,
    c: int,
    m: float = DEFAULT_FUZZIFIER,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    seed: int = 0,
    initial_membership=None,
    scale: bool = True,
) -> ClusterModel:
    """Alternate center and membership updates until memberships settle.

    Initial memberships are seeded uniform noise, row-normalized; pass
    initial_membership to pin them. A point sitting exactly on a center
    gets full membership there (split evenly when several coincide).
    """
    X = np.asarray(data, dtype=float)
    if X.ndim != 2:
        raise ValueError("data must be a 2-D matrix")
    n = X.shape[0]
    if m <= 1:
        raise ValueError("fuzzifier m must be > 1")
    if c < 1 or n < c:
        raise ValueError(f"need at least c={c} rows, got {n}")

    if initial_membership is None:
        rng = np.random.default_rng(seed)
        U0 = rng.uniform(size=(n, c))
        U0 /= U0.sum(axis=1, keepdims=True)
    else:
        U0 = np.asarray(initial_membership, dtype=float)
        if U0.shape != (n, c):
            raise ValueError(f"initial membership must be {n}x{c}")

    if scale:
        X_fit, mins, ranges = _minmax(X)
    else:
        X_fit, mins, ranges = X, np.zeros(X.shape[1]), np.ones(X.shape[1])

    U, centers_scaled, trace, iterations = fcm_kernel(X_fit, U0, m, tol, max_iter)
    return ClusterModel(
        c=c,
        m=m,
        centers=centers_scaled * ranges + mins,
        membership=U,
        objective_trace=trace,
        iterations=iterations,
    )


def classification_entropy(model: ClusterModel) -> float:
    """Average membership entropy, -(1/n) sum u*ln(u); 0 means crisp."""
    U = model.membership
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(U > 0, U * np.log(U), 0.0)
    return float(-terms.sum() / U.shape[0])
