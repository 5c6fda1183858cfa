import numpy as np
import pytest

from dscop_cbir import (
    HsvImage,
    color_feature,
    hue_voted_histogram,
    saturation_voted_histogram,
)

from _oracles import oracle_voting_histogram
from conftest import random_hsv_image


def constant_hsv(h, s, v=0.5, shape=(4, 4)):
    return HsvImage(
        h=np.full(shape, h), s=np.full(shape, s), v=np.full(shape, v)
    )


def test_constant_image_single_hue_bin():
    hist = hue_voted_histogram(constant_hsv(h=0.25, s=0.8), k_bins=18)
    assert hist.shape == (18,)
    assert hist[4] == pytest.approx(12.8)
    assert hist.sum() == hist[4]


def test_zero_saturation_votes_nothing(rng):
    img = HsvImage(h=rng.random((6, 6)), s=np.zeros((6, 6)), v=rng.random((6, 6)))
    assert (hue_voted_histogram(img, 18) == 0).all()


def test_constant_image_single_saturation_bin():
    hist = saturation_voted_histogram(constant_hsv(h=0.6, s=0.05), l_bins=10)
    assert hist[0] == pytest.approx(9.6)
    assert (hist[1:] == 0).all()


def test_zero_hue_votes_nothing(rng):
    # pure-red pixels occupy saturation bins but carry zero hue mass
    img = HsvImage(h=np.zeros((6, 6)), s=rng.random((6, 6)), v=rng.random((6, 6)))
    assert (saturation_voted_histogram(img, 10) == 0).all()


def test_histograms_match_bruteforce_oracle(rng):
    for _ in range(20):
        img = random_hsv_image(rng)
        for bins in (10, 18, 36):
            got = hue_voted_histogram(img, bins)
            want = oracle_voting_histogram(img.h.ravel(), img.s.ravel(), bins)
            assert got.tolist() == want
            got = saturation_voted_histogram(img, bins)
            want = oracle_voting_histogram(img.s.ravel(), img.h.ravel(), bins)
            assert got.tolist() == want


def test_mass_conservation(rng):
    img = random_hsv_image(rng, 12, 9)
    hue_mass = hue_voted_histogram(img, 18).sum()
    sat_mass = saturation_voted_histogram(img, 10).sum()
    assert hue_mass == pytest.approx(img.s.sum(), rel=1e-9)
    assert sat_mass == pytest.approx(img.h.sum(), rel=1e-9)


def test_pixel_order_irrelevant(rng):
    # dyadic vote weights make the accumulation exact, so equality is bitwise
    h = rng.integers(0, 64, (8, 8)) / 64.0
    s = rng.integers(0, 64, (8, 8)) / 64.0
    img = HsvImage(h=h, s=s, v=np.zeros((8, 8)))
    perm = rng.permutation(64)
    shuffled = HsvImage(
        h=h.ravel()[perm].reshape(8, 8), s=s.ravel()[perm].reshape(8, 8),
        v=np.zeros((8, 8)),
    )
    assert (hue_voted_histogram(img, 18) == hue_voted_histogram(shuffled, 18)).all()
    assert (
        saturation_voted_histogram(img, 10)
        == saturation_voted_histogram(shuffled, 10)
    ).all()


@pytest.mark.parametrize(
    "h, bins, expected_bin",
    [
        (0.5, 18, 9),     # exact bin edge lands in the upper bin
        (0.25, 4, 1),
        (0.375, 8, 3),
        (1.0, 18, 17),    # closing value folds into the last bin
        (0.0, 18, 0),
    ],
)
def test_bin_edges(h, bins, expected_bin):
    hist = hue_voted_histogram(constant_hsv(h=h, s=1.0, shape=(3, 3)), bins)
    assert hist[expected_bin] == pytest.approx(9.0)
    assert hist.sum() == hist[expected_bin]


def test_refining_bins_then_merging_recovers_coarse(rng):
    h = rng.integers(0, 256, (8, 8)) / 256.0
    s = rng.integers(0, 64, (8, 8)) / 64.0
    img = HsvImage(h=h, s=s, v=np.zeros((8, 8)))
    for k in (9, 18):
        coarse = hue_voted_histogram(img, k)
        fine = hue_voted_histogram(img, 2 * k)
        assert (fine.reshape(k, 2).sum(axis=1) == coarse).all()


def test_zero_bins_rejected(rng):
    img = random_hsv_image(rng)
    with pytest.raises(ValueError, match="k_bins"):
        hue_voted_histogram(img, 0)
    with pytest.raises(ValueError, match="l_bins"):
        saturation_voted_histogram(img, 0)


def test_color_feature_layout_and_normalization(rng):
    img = random_hsv_image(rng)
    feat = color_feature(img, 18, 10)
    assert feat.shape == (28,)
    assert feat[:18].sum() == pytest.approx(1.0, rel=1e-12)
    assert feat[18:].sum() == pytest.approx(1.0, rel=1e-12)
    assert (feat >= 0).all()
    # normalization divides each half by its brute-force mass
    raw_hue = np.array(oracle_voting_histogram(img.h.ravel(), img.s.ravel(), 18))
    assert feat[:18] == pytest.approx(raw_hue / raw_hue.sum(), rel=1e-12)


def test_color_feature_degenerate_mass_stays_zero():
    img = constant_hsv(h=0.0, s=0.0)
    feat = color_feature(img, 18, 10)
    assert feat.shape == (28,)
    assert (feat == 0).all()
