"""Shared incremental-classifier contract."""

from __future__ import annotations

import numpy as np

from ..utils import ParamsMixin, as_feature_matrix, as_label_vector


class IncrementalClassifier(ParamsMixin):
    """Base class for learners trained instance-by-instance.

    The contract: partial_fit(X, y, n_classes) updates the model, predict(X)
    returns class indices, predict_proba(X) returns rows summing to one.
    predict is always the argmax of predict_proba with ties resolved to the
    lowest class index; an unfit model predicts class 0 with a uniform
    probability vector.
    """

    def __init__(self, n_classes=None):
        self.n_classes = n_classes
        self.n_classes_ = int(n_classes) if n_classes else None
        self.n_features_ = None

    def _prepare_fit(self, X, y, n_classes):
        X = as_feature_matrix(X, self.n_features_)
        y = as_label_vector(y, len(X))
        if len(X) == 0:
            return None
        if self.n_classes_ is None:
            self.n_classes_ = int(n_classes) if n_classes else int(y.max()) + 1
        if self.n_features_ is None:
            self.n_features_ = X.shape[1]
        as_label_vector(y, len(X), self.n_classes_)
        return X, y

    def partial_fit(self, X, y, n_classes=None):
        raise NotImplementedError

    def predict_proba(self, X):
        raise NotImplementedError

    def predict(self, X):
        return np.argmax(self.predict_proba(X), axis=1)

    def _uniform_proba(self, n_rows):
        n_classes = self.n_classes_ if self.n_classes_ else 1
        return np.full((n_rows, n_classes), 1.0 / n_classes)
