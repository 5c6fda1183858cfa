"""Inter-channel voting color histograms.

Instead of counting pixels, each histogram accumulates the *other* channel's
value: hue bins collect saturation mass, saturation bins collect hue mass.
Bins are half-open [i/K, (i+1)/K); a channel value of exactly 1.0 folds into
the last bin.
"""

import numpy as np

from .validation import check_bin_count, l1_normalize


def _voting_histogram(bin_channel, vote_channel, bins):
    idx = (bin_channel * bins).astype(np.int64)
    np.minimum(idx, bins - 1, out=idx)
    return np.bincount(idx.ravel(), weights=vote_channel.ravel(), minlength=bins)


def hue_voted_histogram(img, k_bins=18):
    """Histogram over k_bins hue bins where each pixel votes its saturation.

    Bin index is floor(h * k_bins), with h = 1.0 mapped to the last bin.
    Returns the raw (un-normalized) float64 bin masses.
    """
    k = check_bin_count(k_bins, "k_bins")
    return _voting_histogram(img.h, img.s, k)


def saturation_voted_histogram(img, l_bins=10):
    """Histogram over l_bins saturation bins where each pixel votes its hue."""
    l = check_bin_count(l_bins, "l_bins")
    return _voting_histogram(img.s, img.h, l)


def color_feature(img, k_bins=18, l_bins=10):
    """Concatenated [hue-voted | saturation-voted] histograms.

    Each half is independently L1-normalized; a half with zero total mass is
    left as zeros. Output length is k_bins + l_bins.
    """
    hue_part = l1_normalize(hue_voted_histogram(img, k_bins))
    sat_part = l1_normalize(saturation_voted_histogram(img, l_bins))
    return np.concatenate([hue_part, sat_part])
