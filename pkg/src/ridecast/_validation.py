"""Input validation helpers shared by the estimators."""

from __future__ import annotations

import numpy as np


def check_matrix(X, name="X"):
    """Coerce to a 2-D float64 array without copying when possible."""
    X = np.asarray(X, dtype=np.float64)
    if X.ndim == 1:
        X = X.reshape(-1, 1)
    if X.ndim != 2:
        raise ValueError(f"{name} must be a 2-D array, got ndim={X.ndim}")
    if X.shape[0] == 0:
        raise ValueError(f"{name} has no rows")
    return X


def check_vector(y, name="y"):
    y = np.asarray(y, dtype=np.float64).ravel()
    if y.shape[0] == 0:
        raise ValueError(f"{name} is empty")
    return y


def check_aligned(X, y):
    if X.shape[0] != y.shape[0]:
        raise ValueError(
            f"X and y are misaligned: {X.shape[0]} rows vs {y.shape[0]} targets"
        )


def check_categorical_indices(categorical_features, n_features):
    """Normalize the categorical column spec to a sorted tuple of ints."""
    if categorical_features is None:
        return ()
    idx = sorted(int(i) for i in categorical_features)
    for i in idx:
        if not 0 <= i < n_features:
            raise ValueError(
                f"categorical feature index {i} out of range for {n_features} columns"
            )
    return tuple(idx)
