"""Precision/recall evaluation over a feature index.

Protocol: every indexed image is used once as a query against the full index
(self-match included by default). Per query at depth n,

    precision = correct / hits returned        recall = correct / N_k

where N_k is the query's class size. Category averages divide by the class
size; the totals divide by the number of categories. The total recall at a
fixed n is the average retrieval rate (ARR), always reported together with
the n it was measured at.
"""

import json
from dataclasses import dataclass

import numpy as np

from .retrieval import id_sort_rank, ranked_order
from .metrics import distance_matrix

_QUERY_BLOCK = 256


@dataclass(frozen=True)
class QueryStats:
    id: str
    label: str
    n: int
    correct: int
    precision: float
    recall: float


@dataclass(frozen=True)
class CategoryStats:
    size: int
    p_avg: float
    r_avg: float


@dataclass
class EvalReport:
    per_query: list
    per_category: dict
    p_total: float
    r_total: float
    n: int
    metric: str
    scheme_label: str

    def to_dict(self):
        return {
            "scheme": self.scheme_label,
            "metric": self.metric,
            "n": self.n,
            "p_total": self.p_total,
            "r_total_arr": self.r_total,
            "categories": {
                label: {"size": c.size, "p_avg": c.p_avg, "r_avg": c.r_avg}
                for label, c in self.per_category.items()
            },
            "queries": [
                {
                    "id": q.id,
                    "label": q.label,
                    "n": q.n,
                    "correct": q.correct,
                    "precision": q.precision,
                    "recall": q.recall,
                }
                for q in self.per_query
            ],
        }


@dataclass
class CurveData:
    """(n, P_total, R_total) points for an increasing sweep of n."""

    points: list
    metric: str
    scheme_label: str


def precision_recall(result, query_label, n_k):
    """Precision and recall of one ranked result against its query label."""
    if n_k < 1:
        raise ValueError(f"N_k must be >= 1, got {n_k}")
    if not result.hits:
        raise ValueError("ranked result has no hits")
    correct = sum(1 for _, label, _ in result.hits if label == query_label)
    return correct / len(result.hits), correct / n_k


def evaluate_all(index, metric=None, n=10, exclude_self=False):
    """Use every indexed image as a query and aggregate precision/recall."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if len(index) == 0:
        raise ValueError("cannot evaluate an empty index")
    metric = metric if metric is not None else index.metric_default

    labels = np.asarray(index.labels, dtype=object)
    class_sizes = index.class_sizes
    id_rank = id_sort_rank(index.ids)

    per_query = []
    for start in range(0, len(index), _QUERY_BLOCK):
        stop = min(start + _QUERY_BLOCK, len(index))
        dists = distance_matrix(index.features[start:stop], index.features, metric)
        for row in range(stop - start):
            qi = start + row
            order = ranked_order(dists[row], id_rank)
            if exclude_self:
                order = order[order != qi]
            top = order[:n]
            correct = int(np.sum(labels[top] == labels[qi]))
            per_query.append(
                QueryStats(
                    id=index.ids[qi],
                    label=index.labels[qi],
                    n=len(top),
                    correct=correct,
                    precision=correct / len(top),
                    recall=correct / class_sizes[index.labels[qi]],
                )
            )

    per_category = {}
    for label in sorted(class_sizes):
        members = [q for q in per_query if q.label == label]
        per_category[label] = CategoryStats(
            size=class_sizes[label],
            p_avg=sum(q.precision for q in members) / len(members),
            r_avg=sum(q.recall for q in members) / len(members),
        )
    c = len(per_category)
    return EvalReport(
        per_query=per_query,
        per_category=per_category,
        p_total=sum(cs.p_avg for cs in per_category.values()) / c,
        r_total=sum(cs.r_avg for cs in per_category.values()) / c,
        n=n,
        metric=metric,
        scheme_label=index.scheme.label,
    )


def sweep_curves(index, n_values, metric=None, exclude_self=False):
    """One full evaluate_all per n; returns the (n, P_total, R_total) points."""
    n_values = list(n_values)
    if not n_values:
        raise ValueError("n_values must not be empty")
    if any(v < 1 for v in n_values) or any(
        b <= a for a, b in zip(n_values, n_values[1:])
    ):
        raise ValueError(f"n_values must be strictly increasing and >= 1: {n_values}")
    metric = metric if metric is not None else index.metric_default

    points = []
    for n in n_values:
        report = evaluate_all(index, metric=metric, n=n, exclude_self=exclude_self)
        points.append((n, report.p_total, report.r_total))
    return CurveData(points=points, metric=metric, scheme_label=index.scheme.label)


def write_report_json(report, path):
    """Write the machine-readable report; float formatting is repr-stable."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(report.to_dict(), fh, indent=2)
        fh.write("\n")


def format_report_table(report):
    """Human-readable per-category table with the totals line."""
    lines = [
        f"scheme {report.scheme_label}  metric {report.metric}  n {report.n}",
        f"{'category':<24}{'size':>6}{'P_avg':>12}{'R_avg':>12}",
    ]
    for label, c in report.per_category.items():
        lines.append(f"{label:<24}{c.size:>6}{c.p_avg:>12.6f}{c.r_avg:>12.6f}")
    lines.append(
        f"{'total over ' + str(len(report.per_category)) + ' categories':<30}"
        f"{report.p_total:>12.6f}{report.r_total:>12.6f}"
        f"   (R_total = ARR at n={report.n})"
    )
    return "\n".join(lines)


def write_curves_csv(curves, path):
    """Write sweep points as CSV: n,p_total,r_total (repr-stable floats)."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("n,p_total,r_total\n")
        for n, p, r in curves.points:
            fh.write(f"{n},{p!r},{r!r}\n")
