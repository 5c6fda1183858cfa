"""Input validation helpers shared by the functional core and the estimators."""

import numpy as np


def check_rgb_image(img):
    """Validate an RGB image array: uint8, shape (H, W, 3), at least 3x3.

    Returns the array unchanged (no copy).
    """
    arr = np.asarray(img)
    if arr.ndim != 3 or arr.shape[2] != 3:
        raise ValueError(f"expected an (H, W, 3) RGB array, got shape {arr.shape}")
    if arr.dtype != np.uint8:
        raise ValueError(f"expected uint8 pixel values, got dtype {arr.dtype}")
    if arr.shape[0] < 3 or arr.shape[1] < 3:
        raise ValueError(
            f"image too small: {arr.shape[1]}x{arr.shape[0]}, minimum is 3x3"
        )
    return arr


def check_plane(plane, min_height=3, min_width=3):
    """Validate a 2-D real-valued plane and return it as float64."""
    arr = np.asarray(plane, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D plane, got shape {arr.shape}")
    if arr.shape[0] < min_height or arr.shape[1] < min_width:
        raise ValueError(
            f"plane too small: {arr.shape[1]}x{arr.shape[0]}, "
            f"minimum is {min_width}x{min_height}"
        )
    return arr


def check_bin_count(bins, name="bins"):
    """Validate a histogram bin count (positive integer)."""
    if not isinstance(bins, (int, np.integer)) or isinstance(bins, bool):
        raise ValueError(f"{name} must be an integer, got {bins!r}")
    if bins < 1:
        raise ValueError(f"{name} must be >= 1, got {bins}")
    return int(bins)


def check_vector(v, length=None, name="vector"):
    """Validate a 1-D feature vector, optionally of a fixed length."""
    arr = np.asarray(v, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be 1-D, got shape {arr.shape}")
    if length is not None and arr.shape[0] != length:
        raise ValueError(f"{name} has length {arr.shape[0]}, expected {length}")
    return arr


def check_matrix(X, length=None, name="X"):
    """Validate a 2-D feature matrix (n_samples, length) as float64."""
    arr = np.asarray(X, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {arr.shape}")
    if length is not None and arr.shape[1] != length:
        raise ValueError(
            f"{name} has {arr.shape[1]} columns, expected {length}"
        )
    return arr


def l1_normalize(v):
    """Divide a non-negative vector by its sum; an all-zero vector stays zero."""
    arr = np.asarray(v, dtype=np.float64)
    total = arr.sum()
    if total > 0:
        return arr / total
    return arr.copy()
