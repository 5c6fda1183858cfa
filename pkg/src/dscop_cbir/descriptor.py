"""Quantization schemes and assembly of the combined feature vector.

A feature vector is the concatenation [hue-voted | saturation-voted | GLCM],
each block independently L1-normalized. The vector as a whole is not
re-normalized, so each of the three information sources carries unit mass.
"""

import re
from dataclasses import dataclass

import numpy as np

from .color import color_feature
from .imaging import decode_image, rgb_to_hsv
from .texture import GLCM_LENGTH, texture_feature
from .validation import check_bin_count, check_rgb_image

_SCHEME_RE = re.compile(r"^HSV\((\d+),(\d+),256\)$")


@dataclass(frozen=True)
class QuantizationScheme:
    """Hue/saturation bin counts; the texture block is always 256 entries."""

    k_bins: int = 18
    l_bins: int = 10

    def __post_init__(self):
        check_bin_count(self.k_bins, "k_bins")
        check_bin_count(self.l_bins, "l_bins")

    @property
    def feature_length(self):
        return self.k_bins + self.l_bins + GLCM_LENGTH

    @property
    def label(self):
        return f"HSV({self.k_bins},{self.l_bins},256)"

    @classmethod
    def parse(cls, text):
        """Parse 'K,L' or 'HSV(K,L,256)' into a scheme."""
        text = text.strip()
        m = _SCHEME_RE.match(text)
        if m:
            return cls(int(m.group(1)), int(m.group(2)))
        parts = text.split(",")
        if len(parts) == 2:
            try:
                return cls(int(parts[0]), int(parts[1]))
            except ValueError:
                pass
        raise ValueError(
            f"cannot parse quantization scheme {text!r}; expected 'K,L' or 'HSV(K,L,256)'"
        )


DEFAULT_SCHEME = QuantizationScheme(18, 10)

# The six standard hue/saturation bin combinations
STANDARD_SCHEMES = (
    QuantizationScheme(18, 10),
    QuantizationScheme(18, 20),
    QuantizationScheme(36, 10),
    QuantizationScheme(36, 20),
    QuantizationScheme(72, 10),
    QuantizationScheme(72, 20),
)


def extract_feature(img, scheme=DEFAULT_SCHEME):
    """Combined color+texture feature of an (H, W, 3) uint8 RGB array.

    Deterministic: byte-identical images give bit-identical vectors.
    """
    check_rgb_image(img)
    hsv = rgb_to_hsv(img)
    color = color_feature(hsv, scheme.k_bins, scheme.l_bins)
    texture = texture_feature(hsv.v)
    return np.concatenate([color, texture])


def extract_feature_from_file(path, scheme=DEFAULT_SCHEME):
    """Decode an image file and extract its combined feature vector."""
    return extract_feature(decode_image(path), scheme)
