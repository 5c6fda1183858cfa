"""scikit-learn compatible wrappers around the descriptor and the retriever.

DscopDescriptor is a stateless transformer (images in, feature matrix out)
and NearestImageRetriever is a fit/kneighbors/predict estimator over an
exhaustive scan, so both compose with pipelines, grid search, and anything
else that speaks get_params/set_params.
"""

from pathlib import Path

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from .descriptor import QuantizationScheme, extract_feature, extract_feature_from_file
from .metrics import DEFAULT_METRIC, distance_matrix, normalize_metric
from .retrieval import id_sort_rank, ranked_order
from .validation import check_matrix


class DscopDescriptor(TransformerMixin, BaseEstimator):
    """Transformer computing the combined color+texture feature per image.

    Parameters
    ----------
    k_bins : int, hue bin count (saturation-voted mass)
    l_bins : int, saturation bin count (hue-voted mass)

    transform accepts an iterable of (H, W, 3) uint8 arrays or image file
    paths and returns an (n_samples, k_bins + l_bins + 256) float64 matrix.
    """

    def __init__(self, k_bins=18, l_bins=10):
        self.k_bins = k_bins
        self.l_bins = l_bins

    def fit(self, X=None, y=None):
        self.scheme_ = QuantizationScheme(self.k_bins, self.l_bins)
        return self

    def transform(self, X):
        if not hasattr(self, "scheme_"):
            raise NotFittedError("DscopDescriptor must be fitted before transform")
        rows = []
        for item in X:
            if isinstance(item, (str, Path)):
                rows.append(extract_feature_from_file(item, self.scheme_))
            else:
                rows.append(extract_feature(item, self.scheme_))
        if not rows:
            return np.empty((0, self.scheme_.feature_length), dtype=np.float64)
        return np.stack(rows)


class NearestImageRetriever(BaseEstimator):
    """Exhaustive nearest-neighbor retrieval over stored feature vectors.

    fit stores the feature matrix, labels, and optional string ids;
    kneighbors ranks by the configured metric with ties broken by id, and
    predict returns the label of the single closest record.
    """

    def __init__(self, metric=DEFAULT_METRIC, n_neighbors=10):
        self.metric = metric
        self.n_neighbors = n_neighbors

    def fit(self, X, y, ids=None):
        X = check_matrix(X, name="X")
        y = np.asarray(y, dtype=object)
        if y.shape[0] != X.shape[0]:
            raise ValueError(
                f"X has {X.shape[0]} rows but y has {y.shape[0]} labels"
            )
        if ids is None:
            width = len(str(max(X.shape[0] - 1, 0)))
            ids = [str(i).zfill(width) for i in range(X.shape[0])]
        elif len(ids) != X.shape[0]:
            raise ValueError(f"X has {X.shape[0]} rows but {len(ids)} ids were given")
        self.features_ = X
        self.labels_ = y
        self.ids_ = list(ids)
        self._id_rank = id_sort_rank(self.ids_)
        self._metric = normalize_metric(self.metric)
        return self

    def _check_fitted(self):
        if not hasattr(self, "features_"):
            raise NotFittedError("NearestImageRetriever must be fitted first")

    def kneighbors(self, X, n_neighbors=None, return_distance=True):
        """Indices (and distances) of the closest records for each query row."""
        self._check_fitted()
        k = self.n_neighbors if n_neighbors is None else n_neighbors
        if k < 1:
            raise ValueError(f"n_neighbors must be >= 1, got {k}")
        k = min(k, self.features_.shape[0])
        Q = check_matrix(X, length=self.features_.shape[1], name="X")
        dists = distance_matrix(Q, self.features_, self._metric)
        idx = np.empty((Q.shape[0], k), dtype=np.int64)
        for row in range(Q.shape[0]):
            idx[row] = ranked_order(dists[row], self._id_rank)[:k]
        if return_distance:
            return np.take_along_axis(dists, idx, axis=1), idx
        return idx

    def predict(self, X):
        """Label of the nearest stored record for each query row."""
        idx = self.kneighbors(X, n_neighbors=1, return_distance=False)
        return self.labels_[idx[:, 0]]
