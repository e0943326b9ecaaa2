"""Probability-weighted selection rules."""

from __future__ import annotations

import numpy as np

from .base import DCSRule, distance_weights


class APriori(DCSRule):
    """Competence is the distance-weighted mean posterior each member
    assigns to the neighbors' true classes, before seeing the member's own
    query prediction."""

    def select(self, ctx):
        w = distance_weights(ctx.distances)
        true_post = ctx.posteriors[
            :, np.arange(len(ctx.neighborhood)), ctx.labels
        ]  # (P, k')
        competence = (true_post * w).sum(axis=1) / w.sum()
        return self._single(ctx, np.argmax(competence), len(ctx.neighborhood))


class APosteriori(DCSRule):
    """Competence conditions on the member's query prediction c: the
    distance-weighted posterior mass for c on neighbors truly of class c,
    normalized by the mass for c over the whole neighborhood."""

    def select(self, ctx):
        w = distance_weights(ctx.distances)
        competence = np.zeros(ctx.n_members)
        for i in range(ctx.n_members):
            c = ctx.query_predictions[i]
            mass = ctx.posteriors[i, :, c] * w
            denominator = mass.sum()
            if denominator > 0:
                competence[i] = mass[ctx.labels == c].sum() / denominator
        return self._single(ctx, np.argmax(competence), len(ctx.neighborhood))
