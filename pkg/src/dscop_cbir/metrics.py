"""Distance measures used to rank database features against a query.

Five metrics are supported:

* d1          sum of |a - b| / (1 + a + b) per element
* euclidean   L2 norm of a - b
* manhattan   L1 norm of a - b
* canberra    sum of |a - b| / (a + b), 0/0 terms counting as 0
* chi_square  half the sum of (a - b)^2 / (a + b), 0/0 terms counting as 0

Zero-denominator terms only arise when both entries are 0, in which case the
numerator is 0 as well; resolving them to 0 keeps every metric finite on
sparse histograms. d1 is the default everywhere.
"""

import numpy as np

from .validation import check_matrix, check_vector

METRICS = ("d1", "euclidean", "manhattan", "canberra", "chi_square")

# CLI spelling -> canonical name
_ALIASES = {"chisq": "chi_square"}

DEFAULT_METRIC = "d1"


def normalize_metric(name):
    """Resolve a metric name or CLI alias to its canonical form."""
    key = str(name).strip().lower()
    key = _ALIASES.get(key, key)
    if key not in METRICS:
        raise ValueError(
            f"unknown metric {name!r}; choose from d1, euclidean, manhattan, "
            f"canberra, chisq"
        )
    return key


def _distance_block(q, x, metric):
    """Distances between (B, 1, d) queries and (1, n, d) records, in place.

    Zero denominators are replaced by +inf so their terms contribute exactly 0.
    """
    diff = q - x
    if metric == "d1":
        den = q + x
        den += 1.0
        np.divide(diff, den, out=diff)
        np.abs(diff, out=diff)
        return diff.sum(axis=2)
    if metric == "euclidean":
        np.multiply(diff, diff, out=diff)
        return np.sqrt(diff.sum(axis=2))
    if metric == "manhattan":
        np.abs(diff, out=diff)
        return diff.sum(axis=2)
    den = q + x
    den[den == 0.0] = np.inf
    if metric == "canberra":
        np.divide(diff, den, out=diff)
        np.abs(diff, out=diff)
        return diff.sum(axis=2)
    # chi_square
    np.multiply(diff, diff, out=diff)
    np.divide(diff, den, out=diff)
    return 0.5 * diff.sum(axis=2)


def distance_matrix(queries, records, metric=DEFAULT_METRIC):
    """Pairwise distances between query rows and record rows.

    queries: (n_q, d) array; records: (n_r, d) array with matching d.
    Returns an (n_q, n_r) float64 matrix. Work is chunked over query rows to
    bound the size of broadcast temporaries.
    """
    metric = normalize_metric(metric)
    Q = check_matrix(queries, name="queries")
    X = check_matrix(records, name="records")
    if Q.shape[1] != X.shape[1]:
        raise ValueError(
            f"feature length mismatch: queries have {Q.shape[1]}, records have {X.shape[1]}"
        )

    n_q, n_r = Q.shape[0], X.shape[0]
    out = np.empty((n_q, n_r), dtype=np.float64)
    block = max(1, int(1_000_000 // max(1, n_r * Q.shape[1])))
    x = X[None, :, :]
    for start in range(0, n_q, block):
        q = Q[start : start + block, None, :]
        out[start : start + block] = _distance_block(q, x, metric)
    return out


def distance(a, b, metric=DEFAULT_METRIC):
    """Distance between two feature vectors of equal length."""
    a = check_vector(a, name="a")
    b = check_vector(b, length=a.shape[0], name="b")
    return float(distance_matrix(a[None, :], b[None, :], metric)[0, 0])
