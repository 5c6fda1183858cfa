"""Independent brute-force oracles used to check the fast implementations.

Everything here is deliberately plain Python (loops + math), derived straight
from the definitions, and imports nothing from the package under test.
"""

import math

# Window positions (row, col) of neighbors 1..8, counter-clockwise from
# top-center; the window center is (1, 1).
NEIGHBOR_POS = {
    1: (0, 1),
    2: (0, 0),
    3: (1, 0),
    4: (2, 0),
    5: (2, 1),
    6: (2, 2),
    7: (1, 2),
    8: (0, 2),
}
_POS_TO_K = {pos: k for k, pos in NEIGHBOR_POS.items()}


def reflection_pairs():
    """Derive the six diagonal neighbor pairs purely from window geometry.

    Principal-diagonal pairs come from the map (r, c) -> (c, r), taking each
    neighbor strictly above that diagonal (r < c) in numbering order; counter
    pairs come from (r, c) -> (2 - c, 2 - r) with sources above it (r + c < 2).
    """
    principal, counter = [], []
    for k in sorted(NEIGHBOR_POS):
        r, c = NEIGHBOR_POS[k]
        if r < c:
            principal.append((k, _POS_TO_K[(c, r)]))
        if r + c < 2:
            counter.append((k, _POS_TO_K[(2 - c, 2 - r)]))
    return principal + counter


def oracle_dscop_code(window):
    """6-bit code of a 3x3 window from the geometrically derived pairs."""
    center = window[1][1]
    diffs = {k: window[r][c] - center for k, (r, c) in NEIGHBOR_POS.items()}
    code = 0
    for a, b in reflection_pairs():
        bit = 1 if diffs[a] * diffs[b] >= 0 else 0
        code = (code << 1) | bit
    return code


def oracle_dscop_map(plane):
    """Per-interior-pixel codes via per-window re-extraction."""
    rows, cols = len(plane), len(plane[0])
    out = []
    for r in range(1, rows - 1):
        out.append(
            [
                oracle_dscop_code([row[c - 1 : c + 2] for row in plane[r - 1 : r + 2]])
                for c in range(1, cols - 1)
            ]
        )
    return out


def oracle_glcm(code_map):
    """Exhaustive count of horizontal distance-1 level pairs, flattened 16x16."""
    counts = [0] * 256
    for row in code_map:
        for c in range(len(row) - 1):
            left = int(row[c]) // 4
            right = int(row[c + 1]) // 4
            counts[left * 16 + right] += 1
    return counts


def oracle_lbp_histogram(plane):
    """256-bin LBP histogram via per-window recomputation."""
    rows, cols = len(plane), len(plane[0])
    hist = [0] * 256
    for r in range(1, rows - 1):
        for c in range(1, cols - 1):
            center = plane[r][c]
            code = 0
            for k, (dr, dc) in NEIGHBOR_POS.items():
                if plane[r - 1 + dr][c - 1 + dc] >= center:
                    code += 2 ** (k - 1)
            hist[code] += 1
    return hist


def oracle_voting_histogram(bin_values, vote_values, bins):
    """Per-pixel accumulation: floor(bin_value * bins) capped at bins - 1."""
    out = [0.0] * bins
    for bv, vv in zip(bin_values, vote_values):
        idx = min(int(math.floor(float(bv) * bins)), bins - 1)
        out[idx] += float(vv)
    return out


def oracle_distance(a, b, metric):
    """Naive index-ascending summation of each metric's terms."""
    total = 0.0
    for x, y in zip(a, b):
        x, y = float(x), float(y)
        if metric == "d1":
            total += abs((x - y) / (1.0 + x + y))
        elif metric == "euclidean":
            total += (x - y) ** 2
        elif metric == "manhattan":
            total += abs(x - y)
        elif metric == "canberra":
            total += abs((x - y) / (x + y)) if (x + y) != 0 else 0.0
        elif metric == "chi_square":
            total += ((x - y) ** 2) / (x + y) if (x + y) != 0 else 0.0
        else:
            raise ValueError(metric)
    if metric == "euclidean":
        return math.sqrt(total)
    if metric == "chi_square":
        return 0.5 * total
    return total


def oracle_ranking(ids, labels, vectors, q, metric):
    """All (distance, id, label) triples sorted by (distance, id)."""
    rows = [
        (oracle_distance(vec, q, metric), ids[i], labels[i])
        for i, vec in enumerate(vectors)
    ]
    rows.sort(key=lambda t: (t[0], t[1]))
    return rows
