"""Reference-based proposal selection.

Embeddings are stored unit-norm, so cosine similarity reduces to a dot
product. Selection aggregates evidence across the reference views
either by voting (each reference backs its single best proposal) or by
mean similarity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionMismatchError, NoCandidatesError
from .scene import Embedding, Proposal, ReferenceSet


@dataclass(frozen=True, eq=False)
class SelectionResult:
    """Winner plus the evidence behind it.

    ``votes[winner_index] == max(votes)`` holds for vote-based
    selection; mean-based selection may pick a proposal with fewer
    votes, in which case the votes are diagnostic only. Mean cosines
    are always populated for report transparency.
    """

    winner_index: int
    votes: np.ndarray
    mean_cosines: np.ndarray
    tie_broken: bool


def cosine(a: Embedding, b: Embedding) -> float:
    """Cosine similarity between two embeddings."""
    return a.dot(b)


def _similarity_matrix(proposals: Sequence[Proposal], refs: ReferenceSet) -> np.ndarray:
    if len(proposals) == 0:
        raise NoCandidatesError("no proposals to select from")
    dims = {p.embedding.dim for p in proposals}
    if len(dims) != 1 or dims != {refs.dim}:
        raise DimensionMismatchError(
            f"proposal dims {sorted(dims)} do not match reference dim {refs.dim}"
        )
    stacked = np.stack([p.embedding.values for p in proposals])
    return stacked @ refs.matrix().T  # (n proposals, k references)


def vote_select(proposals: Sequence[Proposal], refs: ReferenceSet) -> SelectionResult:
    """Pick the proposal that most reference views rank first.

    Each reference votes for its most similar proposal (ties toward the
    lowest proposal index). Vote-count ties are broken by the highest
    mean cosine to the references, remaining ties by lowest index;
    ``tie_broken`` records whether a vote-count tie occurred.
    """
    sims = _similarity_matrix(proposals, refs)
    n = sims.shape[0]
    per_ref_best = np.argmax(sims, axis=0)  # first maximum = lowest index
    votes = np.bincount(per_ref_best, minlength=n)
    mean_cos = sims.mean(axis=1)
    tied = np.flatnonzero(votes == votes.max())
    winner = int(tied[np.argmax(mean_cos[tied])])
    return SelectionResult(
        winner_index=winner,
        votes=votes,
        mean_cosines=mean_cos,
        tie_broken=len(tied) > 1,
    )


def average_select(proposals: Sequence[Proposal], refs: ReferenceSet) -> SelectionResult:
    """Pick the proposal with the highest mean cosine across references.

    Ties go to the lowest index. Votes are computed for diagnostics but
    never influence the winner; ``tie_broken`` records a mean-cosine tie.
    """
    sims = _similarity_matrix(proposals, refs)
    n = sims.shape[0]
    votes = np.bincount(np.argmax(sims, axis=0), minlength=n)
    mean_cos = sims.mean(axis=1)
    winner = int(np.argmax(mean_cos))
    tie = int(np.count_nonzero(mean_cos == mean_cos[winner])) > 1
    return SelectionResult(
        winner_index=winner,
        votes=votes,
        mean_cosines=mean_cos,
        tie_broken=tie,
    )
