"""NumPy implementations of the iterative kernels.

This is the fallback backend used when the compiled extension is not
available. Both backends implement identical update rules and iteration
order, so results agree to floating-point noise.
"""

import numpy as np

NAME = "python"


def hits_kernel(n, src, dst, tol, max_iter):
    """Hub/authority power iteration over an edge list.

    Starts from all-ones vectors; each round recomputes authorities from
    hubs, hubs from the fresh authorities, then L2-normalizes both.
    Returns (hub, authority, iterations, converged).
    """
    hub = np.ones(n)
    auth = np.ones(n)
    if n == 0:
        return hub, auth, 0, True
    if len(src) == 0:
        return np.zeros(n), np.zeros(n), 1, True

    src = np.asarray(src, dtype=np.intp)
    dst = np.asarray(dst, dtype=np.intp)
    iterations = 0
    converged = False
    for iterations in range(1, max_iter + 1):
        auth_new = np.zeros(n)
        np.add.at(auth_new, dst, hub[src])
        hub_new = np.zeros(n)
        np.add.at(hub_new, src, auth_new[dst])
        auth_new /= np.linalg.norm(auth_new)
        hub_new /= np.linalg.norm(hub_new)
        delta = max(
            np.max(np.abs(auth_new - auth)), np.max(np.abs(hub_new - hub))
        )
        auth = auth_new
        hub = hub_new
        if delta < tol:
            converged = True
            break
    return hub, auth, iterations, converged


def _fcm_centers(X, U, m):
    Um = U**m
    denom = Um.sum(axis=0)
    centers = (Um.T @ X) / denom[:, None]
    # A cluster nobody belongs to collapses onto the data mean.
    dead = denom <= 1e-300
    if dead.any():
        centers[dead] = X.mean(axis=0)
    return centers


def _fcm_memberships(d2, m):
    n, c = d2.shape
    U = np.empty((n, c))
    zero = d2 <= 1e-300
    any_zero = zero.any(axis=1)
    expo = 1.0 / (m - 1.0)
    ok = ~any_zero
    if ok.any():
        # u_ik = 1 / sum_j (d2_ik / d2_ij)^(1/(m-1))
        ratios = (d2[ok, :, None] / d2[ok, None, :]) ** expo
        U[ok] = 1.0 / ratios.sum(axis=2)
    if any_zero.any():
        rows = np.where(any_zero)[0]
        U[rows] = 0.0
        for i in rows:
            hits = np.where(zero[i])[0]
            U[i, hits] = 1.0 / len(hits)
    return U


def fcm_kernel(X, U0, m, tol, max_iter):
    """Alternating fuzzy c-means updates.

    Per round: centers from membership-weighted means, squared Euclidean
    distances, membership update, objective J = sum(u^m * d2). Stops when
    the largest membership change drops below tol. Returns
    (U, centers, objective_trace, iterations).
    """
    U = np.array(U0, dtype=float)
    trace = []
    iterations = 0
    for iterations in range(1, max_iter + 1):
        centers = _fcm_centers(X, U, m)
        d2 = ((X[:, None, :] - centers[None, :, :]) ** 2).sum(axis=2)
        U_new = _fcm_memberships(d2, m)
        trace.append(float(((U_new**m) * d2).sum()))
        delta = np.max(np.abs(U_new - U))
        U = U_new
        if delta < tol:
            break
    centers = _fcm_centers(X, U, m)
    return U, centers, np.array(trace), iterations


def _sigmoid(z):
    return 1.0 / (1.0 + np.exp(-z))


def mlp_kernel(X, T, W1, b1, W2, b2, epochs, rate):
    """Online backpropagation: per-sample updates in row order each epoch.

    Logistic activations on both layers, squared-error loss. Parameter
    arrays are updated in place.
    """
    n = X.shape[0]
    for _ in range(epochs):
        for i in range(n):
            x = X[i]
            a1 = _sigmoid(W1 @ x + b1)
            y = _sigmoid(W2 @ a1 + b2)
            delta2 = (y - T[i]) * y * (1.0 - y)
            delta1 = (W2.T @ delta2) * a1 * (1.0 - a1)
            W2 -= rate * np.outer(delta2, a1)
            b2 -= rate * delta2
            W1 -= rate * np.outer(delta1, x)
            b1 -= rate * delta1
