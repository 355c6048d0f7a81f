"""Minimal feedforward classifier trained by online backpropagation.

One hidden layer (5 nodes by default), logistic activations on both
layers, squared-error loss. Inputs are min-max scaled to [0, 1]; labels
become one-hot targets. Training runs per-sample updates in row order,
so a fit is fully determined by the seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .kernels import mlp_kernel

DEFAULT_HIDDEN = 5
DEFAULT_RATE = 0.5


def _sigmoid(z):
    return 1.0 / (1.0 + np.exp(-z))


@dataclass
class MlpModel:
    classes: list
    W1: np.ndarray
    b1: np.ndarray
    W2: np.ndarray
    b2: np.ndarray
    input_mins: np.ndarray
    input_ranges: np.ndarray
    rms_error: float

    def _scale(self, X):
        return (np.asarray(X, dtype=float) - self.input_mins) / self.input_ranges

    def forward(self, X) -> np.ndarray:
        """Output activations, one row per sample."""
        Xs = self._scale(X)
        hidden = _sigmoid(Xs @ self.W1.T + self.b1)
        return _sigmoid(hidden @ self.W2.T + self.b2)

    def predict(self, X) -> list:
        outputs = self.forward(X)
        return [self.classes[i] for i in outputs.argmax(axis=1)]


def _one_hot(labels):
    classes = sorted(set(labels))
    index = {label: i for i, label in enumerate(classes)}
    T = np.zeros((len(labels), len(classes)))
    for row, label in enumerate(labels):
        T[row, index[label]] = 1.0
    return classes, T


def _rms(Y, T) -> float:
    return float(np.sqrt(np.mean((Y - T) ** 2)))


def mlp_train(
    data,
    labels,
    hidden: int = DEFAULT_HIDDEN,
    epochs: int = 1000,
    rate: float = DEFAULT_RATE,
    seed: int = 0,
) -> MlpModel:
    """Fit the classifier; rms_error is measured over the training set."""
    X = np.asarray(data, dtype=float)
    if X.ndim != 2:
        raise ValueError("data must be a 2-D matrix")
    if hidden < 1:
        raise ValueError("hidden layer needs at least one node")
    labels = list(labels)
    if len(labels) != X.shape[0]:
        raise ValueError("one label per data row required")
    classes, T = _one_hot(labels)
    if len(classes) < 2:
        raise ValueError("training needs at least two distinct classes")

    mins = X.min(axis=0)
    ranges = X.max(axis=0) - mins
    ranges = np.where(ranges > 0, ranges, 1.0)
    Xs = (X - mins) / ranges

    rng = np.random.default_rng(seed)
    W1 = rng.uniform(-0.5, 0.5, size=(hidden, X.shape[1]))
    b1 = rng.uniform(-0.5, 0.5, size=hidden)
    W2 = rng.uniform(-0.5, 0.5, size=(len(classes), hidden))
    b2 = rng.uniform(-0.5, 0.5, size=len(classes))

    mlp_kernel(Xs, T, W1, b1, W2, b2, epochs, rate)

    model = MlpModel(
        classes=classes, W1=W1, b1=b1, W2=W2, b2=b2,
        input_mins=mins, input_ranges=ranges, rms_error=0.0,
    )
    model.rms_error = _rms(model.forward(X), T)
    return model


def loss_and_grads(W1, b1, W2, b2, X, T):
    """Batch squared-error loss and its analytic gradients.

    Used to verify the backprop arithmetic against finite differences;
    the training kernels apply the same per-sample gradients.
    """
    hidden = _sigmoid(X @ W1.T + b1)
    Y = _sigmoid(hidden @ W2.T + b2)
    loss = 0.5 * np.sum((Y - T) ** 2)
    delta2 = (Y - T) * Y * (1.0 - Y)
    dW2 = delta2.T @ hidden
    db2 = delta2.sum(axis=0)
    delta1 = (delta2 @ W2) * hidden * (1.0 - hidden)
    dW1 = delta1.T @ X
    db1 = delta1.sum(axis=0)
    return loss, (dW1, db1, dW2, db2)
