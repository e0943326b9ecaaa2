"""k-nearest-oracle selection rules."""

from __future__ import annotations

import numpy as np

from ..utils import majority_vote
from .base import DCSRule, SelectionResult


class KNORAE(DCSRule):
    """k-nearest oracles, eliminate variant.

    Keeps only members that classify every neighbor correctly. When no
    member is perfect, the farthest neighbor is dropped and the search
    restarts; if the neighborhood empties, the whole pool votes. The
    surviving members decide the query by majority vote.
    """

    def select(self, ctx):
        for m in range(len(ctx.neighborhood), 0, -1):
            perfect = np.flatnonzero(ctx.correctness[:, :m].all(axis=1))
            if len(perfect):
                prediction = majority_vote(
                    ctx.query_predictions[perfect], ctx.n_classes
                )
                return SelectionResult(
                    selected=tuple(int(i) for i in perfect),
                    prediction=prediction,
                    n_neighbors_used=m,
                )
        return self._fallback(ctx, n_neighbors_used=0)


class KNORAU(DCSRule):
    """k-nearest oracles, union variant.

    Every member votes for its query prediction with weight equal to the
    number of neighbors it classifies correctly. All-zero weights fall back
    to an unweighted vote of the whole pool.
    """

    def select(self, ctx):
        weights = ctx.correctness.sum(axis=1).astype(np.float64)
        if not weights.any():
            return self._fallback(ctx, n_neighbors_used=len(ctx.neighborhood))
        votes = np.bincount(
            ctx.query_predictions, weights=weights, minlength=ctx.n_classes
        )
        selected = np.flatnonzero(weights > 0)
        return SelectionResult(
            selected=tuple(int(i) for i in selected),
            prediction=int(np.argmax(votes)),
            weights=tuple(float(w) for w in weights[selected]),
            n_neighbors_used=len(ctx.neighborhood),
        )


class KNOP(KNORAU):
    """K-nearest output profiles: KNORA-U aggregation over a neighborhood
    located in output-profile space rather than feature space."""

    neighborhood_space = "profile"
