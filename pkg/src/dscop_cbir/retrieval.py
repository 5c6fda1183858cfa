"""Exhaustive ranking of index records against a query feature.

Every record gets exactly one distance evaluation; results are sorted by
ascending distance with ties broken by ascending id, so repeated queries are
bit-for-bit reproducible. The query image, if present in the index, stays in
the candidate set unless explicitly excluded.
"""

from dataclasses import dataclass

import numpy as np

from .metrics import distance_matrix
from .validation import check_vector


@dataclass
class RankedResult:
    """Top hits for one query: ordered (id, label, distance) triples."""

    hits: list
    query_id: str | None
    metric: str
    n: int

    def ids(self):
        return [h[0] for h in self.hits]


def id_sort_rank(ids):
    """Rank of each id in ascending lexicographic order (tie-break key)."""
    order = np.argsort(np.asarray(ids, dtype=object), kind="stable")
    rank = np.empty(len(ids), dtype=np.int64)
    rank[order] = np.arange(len(ids))
    return rank


def ranked_order(distances, id_rank):
    """Indices sorted by (distance, id rank) ascending."""
    return np.lexsort((id_rank, distances))


def query(index, q, metric=None, n=10, exclude_id=None, query_id=None):
    """Rank every index record against feature vector q and return the top n.

    metric defaults to the index's stored default. A record whose id equals
    exclude_id is dropped from the candidate set before ranking.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    metric = metric if metric is not None else index.metric_default
    q = check_vector(q, length=index.scheme.feature_length, name="query feature")

    dists = distance_matrix(q[None, :], index.features, metric)[0]
    id_rank = id_sort_rank(index.ids)
    order = ranked_order(dists, id_rank)
    hits = []
    for i in order:
        if exclude_id is not None and index.ids[i] == exclude_id:
            continue
        hits.append((index.ids[i], index.labels[i], float(dists[i])))
        if len(hits) == n:
            break
    return RankedResult(hits=hits, query_id=query_id, metric=metric, n=n)
