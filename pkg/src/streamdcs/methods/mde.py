"""Minority-driven chunk ensemble for imbalanced streams."""

from __future__ import annotations

import math

import numpy as np

from ..evaluation import confusion_matrix, gmean
from ..learners import HoeffdingTreeClassifier
from ..utils import majority_vote
from ..validation import ValidationSet
from .base import ChunkedStreamClassifier, Pool


class MdeClassifier(ChunkedStreamClassifier):
    """Chunk ensemble that votes through members proven competent on the
    minority class.

    Each full chunk trains a fresh learner about which all members are then
    rescored by the geometric mean of their per-class recalls on that chunk;
    the lowest-scoring member leaves when the pool overflows (ties evict the
    oldest). At query time the members correct on at least half of the k
    nearest minority-class validation instances vote; with no competent
    member, or no minority instance in the window, the whole pool votes.

    Parameters
    ----------
    learner_factory : callable
        Zero-argument factory for fresh base learners.
    chunk_size : int
        Instances per training chunk.
    max_pool_size : int
        Upper bound on pool membership.
    k : int
        Minority neighbors consulted per query.
    window_chunks : int
        Chunks retained as validation data.
    """

    def __init__(
        self,
        learner_factory=HoeffdingTreeClassifier,
        chunk_size=1000,
        max_pool_size=10,
        k=7,
        window_chunks=4,
    ):
        super().__init__(chunk_size)
        self.learner_factory = learner_factory
        self.chunk_size = chunk_size
        self.max_pool_size = max_pool_size
        self.k = k
        self.window_chunks = window_chunks
        self.pool_ = Pool(max_pool_size)
        self.validation_ = ValidationSet(window_chunks)
        self.scores_ = []
        self.minority_class_ = None

    @property
    def is_ready(self):
        return len(self.pool_) > 0 and len(self.validation_) > 0

    def _on_chunk(self, chunk):
        self.minority_class_ = self._minority_label(chunk.labels)
        learner = self.learner_factory()
        learner.partial_fit(chunk.features, chunk.labels, n_classes=self.n_classes_)
        self.pool_.append(learner, self._chunk_index)
        self.learners_created += 1
        self.scores_ = [
            self._score_member(m, chunk) for m in self.pool_.learners
        ]
        if self.pool_.over_capacity:
            victim = int(np.argmin(self.scores_))
            self.pool_.evict(victim)
            self.scores_.pop(victim)
        self.validation_.push_chunk(chunk)

    def _minority_label(self, labels):
        counts = np.bincount(labels, minlength=self.n_classes_)
        present = np.flatnonzero(counts > 0)
        return int(present[np.argmin(counts[present])])

    def _score_member(self, member, chunk):
        predictions = member.predict(chunk.features)
        return gmean(confusion_matrix(chunk.labels, predictions, self.n_classes_))

    def _predict_one(self, x):
        learners = self.pool_.learners
        minority_mask = self.validation_.labels == self.minority_class_
        if not minority_mask.any():
            votes = [int(m.predict(x.reshape(1, -1))[0]) for m in learners]
            return majority_vote(votes, self.n_classes_)
        neighborhood = self.validation_.knn_query(x, self.k, where=minority_mask)
        needed = math.ceil(self.k / 2)
        votes = []
        query = x.reshape(1, -1)
        for member in learners:
            correct = int(
                np.sum(member.predict(neighborhood.features) == neighborhood.labels)
            )
            if correct >= needed:
                votes.append(int(member.predict(query)[0]))
        if not votes:
            votes = [int(m.predict(query)[0]) for m in learners]
        return majority_vote(votes, self.n_classes_)
