"""Incremental Gaussian naive Bayes."""

from __future__ import annotations

import numpy as np

from .base import IncrementalClassifier

VARIANCE_FLOOR = 1e-9


class GaussianNaiveBayes(IncrementalClassifier):
    """Naive Bayes with per-(class, feature) running Gaussian moments.

    Moments are maintained with Welford accumulators, so fitting a batch at
    once or one instance at a time yields the same result. Variances are
    floored at query time to remove zero-variance singularities.
    """

    def __init__(self, n_classes=None):
        super().__init__(n_classes=n_classes)
        self._counts = None  # (C,) instances per class
        self._mean = None  # (C, d)
        self._m2 = None  # (C, d) sum of squared deviations

    def partial_fit(self, X, y, n_classes=None):
        prepared = self._prepare_fit(X, y, n_classes)
        if prepared is None:
            return self
        X, y = prepared
        if self._counts is None:
            self._counts = np.zeros(self.n_classes_)
            self._mean = np.zeros((self.n_classes_, self.n_features_))
            self._m2 = np.zeros((self.n_classes_, self.n_features_))
        for x, c in zip(X, y):
            self._counts[c] += 1.0
            delta = x - self._mean[c]
            self._mean[c] += delta / self._counts[c]
            self._m2[c] += delta * (x - self._mean[c])
        return self

    def _variances(self):
        # Sample variance (ddof=1) where defined, floored everywhere.
        denom = np.maximum(self._counts - 1.0, 1.0)[:, None]
        var = self._m2 / denom
        return np.maximum(var, VARIANCE_FLOOR)

    def predict_proba(self, X):
        X = np.asarray(X, dtype=np.float64)
        if X.ndim == 1:
            X = X.reshape(1, -1)
        if self._counts is None or self._counts.sum() == 0:
            return self._uniform_proba(len(X))
        var = self._variances()
        with np.errstate(divide="ignore"):
            log_prior = np.log(self._counts / self._counts.sum())
        # log P(x|c) summed over features, vectorized over (n, C, d)
        diff = X[:, None, :] - self._mean[None, :, :]
        log_like = -0.5 * np.sum(
            np.log(2.0 * np.pi * var)[None, :, :] + diff * diff / var[None, :, :],
            axis=2,
        )
        joint = log_prior[None, :] + log_like
        joint[:, self._counts == 0] = -np.inf
        shifted = joint - joint.max(axis=1, keepdims=True)
        proba = np.exp(shifted)
        return proba / proba.sum(axis=1, keepdims=True)

    @property
    def class_priors_(self):
        if self._counts is None or self._counts.sum() == 0:
            return None
        return self._counts / self._counts.sum()
