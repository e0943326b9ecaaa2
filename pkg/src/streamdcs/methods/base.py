"""Shared machinery for the stream-facing classification methods."""

from __future__ import annotations

import numpy as np

from ..streams import Chunk
from ..utils import ParamsMixin, as_feature_matrix, as_label_vector


class Pool:
    """Ordered, bounded collection of classifiers with birth metadata."""

    def __init__(self, max_size):
        if max_size < 1:
            raise ValueError("pool size must be positive")
        self.max_size = int(max_size)
        self._members = []
        self._births = []

    def __len__(self):
        return len(self._members)

    @property
    def learners(self):
        return list(self._members)

    @property
    def births(self):
        return list(self._births)

    def append(self, learner, birth_index):
        if self._births and birth_index < self._births[-1]:
            raise ValueError("birth indices must be nondecreasing")
        self._members.append(learner)
        self._births.append(int(birth_index))

    @property
    def over_capacity(self):
        return len(self._members) > self.max_size

    def evict(self, position):
        self._members.pop(position)
        self._births.pop(position)


class BaseStreamClassifier(ParamsMixin):
    """partial_fit/predict contract shared by all stream methods.

    predict never raises on an untrained model: until the method is ready
    it returns class 0, so prequential evaluation can start at instance 1.
    """

    def __init__(self):
        self.n_classes_ = None
        self.n_features_ = None

    @property
    def is_ready(self):
        return False

    def _validate_fit(self, X, y, n_classes):
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
        prepared = self._validate_fit(X, y, n_classes)
        if prepared is None:
            return self
        self._learn_batch(*prepared)
        return self

    def _learn_batch(self, X, y):
        raise NotImplementedError

    def predict(self, X):
        X = as_feature_matrix(X)
        if not self.is_ready:
            return np.zeros(len(X), dtype=np.int64)
        return np.array([self._predict_one(x) for x in X], dtype=np.int64)

    def _predict_one(self, x):
        raise NotImplementedError


class ChunkedStreamClassifier(BaseStreamClassifier):
    """Buffers the stream into fixed-size chunks and reacts at boundaries."""

    def __init__(self, chunk_size):
        super().__init__()
        if chunk_size < 1:
            raise ValueError("chunk size must be positive")
        self._buffer = Chunk(chunk_size)
        self._chunk_index = 0
        self.learners_created = 0

    def _learn_batch(self, X, y):
        offset = 0
        while offset < len(X):
            offset += self._buffer.add(X[offset:], y[offset:])
            if self._buffer.is_full:
                self._on_chunk(self._buffer)
                self._chunk_index += 1
                self._buffer = Chunk(self._buffer.capacity)

    def _on_chunk(self, chunk):
        raise NotImplementedError
