"""Diagonally symmetric co-occurrence pattern (DSCoP), its GLCM, and an LBP baseline.

Neighbor numbering inside a 3x3 window is fixed as k = 1..8 counter-clockwise
starting at top-center:

        +----+----+----+
        | 2  | 1  | 8  |
        +----+----+----+
        | 3  | c  | 7  |
        +----+----+----+
        | 4  | 5  | 6  |
        +----+----+----+

Reflecting across the principal diagonal (top-left to bottom-right) pairs the
off-diagonal neighbors as (1,3), (7,5), (8,4); reflecting across the counter
diagonal pairs them as (1,7), (2,6), (3,5). For each pair the DSCoP bit is 1
when the two center-differences have the same sign (a zero product counts as
agreement). The six bits are packed most-significant-first in the pair order
above, giving codes 0..63. Codes are quantized to 16 levels (code // 4) before
the co-occurrence count.

The LBP baseline uses the same numbering with weight 2**(k-1) for neighbor k,
giving the usual 0..255 codes.
"""

import numpy as np

from .validation import check_plane, l1_normalize

# (row, col) offset of neighbor k relative to the window center
NEIGHBOR_OFFSETS = {
    1: (-1, 0),
    2: (-1, -1),
    3: (0, -1),
    4: (1, -1),
    5: (1, 0),
    6: (1, 1),
    7: (0, 1),
    8: (-1, 1),
}

# Bit 5 down to bit 0: three principal-diagonal pairs, three counter-diagonal pairs
DIAGONAL_PAIRS = ((1, 3), (7, 5), (8, 4), (1, 7), (2, 6), (3, 5))

GLCM_LEVELS = 16
GLCM_LENGTH = GLCM_LEVELS * GLCM_LEVELS


def _neighbor_diffs(plane):
    """Center-differences I_k - I_c for every interior pixel, keyed by k."""
    rows, cols = plane.shape
    center = plane[1 : rows - 1, 1 : cols - 1]
    diffs = {}
    for k, (dr, dc) in NEIGHBOR_OFFSETS.items():
        diffs[k] = plane[1 + dr : rows - 1 + dr, 1 + dc : cols - 1 + dc] - center
    return diffs


def dscop_map(plane):
    """Per-interior-pixel DSCoP codes of a 2-D plane (at least 3x3).

    Returns a uint8 array of shape (height - 2, width - 2) with codes in
    [0, 63]; border pixels have no full window and are excluded.
    """
    plane = check_plane(plane)
    diffs = _neighbor_diffs(plane)
    codes = np.zeros(diffs[1].shape, dtype=np.uint8)
    for bit, (a, b) in enumerate(DIAGONAL_PAIRS):
        agree = (diffs[a] * diffs[b] >= 0).astype(np.uint8)
        codes |= agree << (5 - bit)
    return codes


def dscop_code(window):
    """DSCoP code (0..63) of a single 3x3 window."""
    window = np.asarray(window, dtype=np.float64)
    if window.shape != (3, 3):
        raise ValueError(f"expected a 3x3 window, got shape {window.shape}")
    return int(dscop_map(window)[0, 0])


def glcm(code_map, distance=1, direction=(0, 1)):
    """16x16 co-occurrence counts of a quantized DSCoP map, flattened row-major.

    Codes are quantized to levels code // 4 in [0, 15]. For every ordered pixel
    pair (p, p + distance * direction) inside the map, the count at
    (level(p), level(p + offset)) is incremented; pairs are directed, so the
    matrix is not symmetrized. The default is the horizontal neighbor at
    distance 1. Returns int64 counts of length 256.
    """
    codes = np.asarray(code_map)
    if codes.ndim != 2:
        raise ValueError(f"expected a 2-D code map, got shape {codes.shape}")
    if codes.size and (codes.min() < 0 or codes.max() > 63):
        raise ValueError("DSCoP codes must lie in [0, 63]")
    if not isinstance(distance, (int, np.integer)) or distance < 1:
        raise ValueError(f"distance must be a positive integer, got {distance!r}")
    dr, dc = direction
    if (dr, dc) == (0, 0):
        raise ValueError("direction must be a nonzero (row, col) step")

    rows, cols = codes.shape
    orow, ocol = dr * distance, dc * distance
    if rows <= abs(orow) or cols <= abs(ocol):
        raise ValueError(
            f"map of shape {cols}x{rows} has no pixel pairs at offset ({orow}, {ocol})"
        )
    levels = codes.astype(np.int64) >> 2

    r0, r1 = max(0, -orow), min(rows, rows - orow)
    c0, c1 = max(0, -ocol), min(cols, cols - ocol)
    first = levels[r0:r1, c0:c1]
    second = levels[r0 + orow : r1 + orow, c0 + ocol : c1 + ocol]
    joint = first.ravel() * GLCM_LEVELS + second.ravel()
    return np.bincount(joint, minlength=GLCM_LENGTH)


def texture_feature(v_channel):
    """L1-normalized flattened GLCM of the DSCoP map of a value plane."""
    return l1_normalize(glcm(dscop_map(v_channel)).astype(np.float64))


def lbp_histogram(v_channel):
    """256-bin histogram of plain LBP codes over the interior pixels.

    Neighbor k contributes 2**(k-1) when its value is >= the center value.
    Bin counts sum to the number of interior pixels.
    """
    plane = check_plane(v_channel)
    diffs = _neighbor_diffs(plane)
    codes = np.zeros(diffs[1].shape, dtype=np.int64)
    for k in range(1, 9):
        codes |= (diffs[k] >= 0).astype(np.int64) << (k - 1)
    return np.bincount(codes.ravel(), minlength=256)
