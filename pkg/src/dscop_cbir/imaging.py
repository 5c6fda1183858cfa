"""Image decoding and RGB -> HSV conversion.

Conventions (fixed so results are reproducible):

* Hue follows the hexcone model, normalized to [0, 1): 0 = red, 1/3 = green,
  2/3 = blue. Achromatic pixels (max = min) get hue 0.
* Saturation is chroma / max (0 where max = 0); value is max / 255.
* Grayscale sources are replicated into R = G = B, alpha is discarded, and
  16-bit samples are reduced to 8 bits, so every file flows through the same
  8-bit RGB pipeline.

All channel math is done on the integer pixel values before the final
divisions, which keeps value exactly max/255 and makes hue exactly invariant
under integer scaling of (r, g, b).
"""

from dataclasses import dataclass

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import DecodeError
from .validation import check_rgb_image

# Pillow modes holding >8-bit integer samples, reduced via floor division by 257
_DEEP_MODES = ("I", "I;16", "I;16B", "I;16L", "I;16N")


@dataclass(frozen=True)
class HsvImage:
    """Per-pixel hue/saturation/value planes, each float64 in [0, 1]."""

    h: np.ndarray
    s: np.ndarray
    v: np.ndarray

    @property
    def height(self):
        return self.h.shape[0]

    @property
    def width(self):
        return self.h.shape[1]


def decode_image(path):
    """Decode an image file to an (H, W, 3) uint8 RGB array.

    Palette and 16-bit sources are reduced to 8-bit RGB, grayscale is
    replicated across the three channels, and any alpha channel is dropped.

    Raises DecodeError for unreadable files, unsupported formats, and images
    smaller than 3x3.
    """
    try:
        with Image.open(path) as im:
            im.load()
            if im.mode in _DEEP_MODES:
                deep = np.asarray(im, dtype=np.int64)
                gray = (np.clip(deep, 0, 65535) // 257).astype(np.uint8)
                im = Image.fromarray(gray, mode="L")
            if im.mode != "RGB":
                im = im.convert("RGB")
            arr = np.asarray(im, dtype=np.uint8)
    except FileNotFoundError:
        raise DecodeError(f"cannot read image file: {path}") from None
    except (UnidentifiedImageError, OSError, ValueError) as exc:
        raise DecodeError(f"cannot decode image {path}: {exc}") from exc
    if arr.shape[0] < 3 or arr.shape[1] < 3:
        raise DecodeError(
            f"image too small: {path} is {arr.shape[1]}x{arr.shape[0]}, minimum is 3x3"
        )
    return arr


def rgb_to_hsv(img):
    """Convert an (H, W, 3) uint8 RGB array to an HsvImage.

    For every pixel: v = max/255 exactly, s = 0 wherever r = g = b, and hue
    is computed from the dominant-channel sector with ties resolved in
    r, g, b order.
    """
    arr = check_rgb_image(img).astype(np.int64)
    r, g, b = arr[..., 0], arr[..., 1], arr[..., 2]
    mx = np.maximum(np.maximum(r, g), b)
    mn = np.minimum(np.minimum(r, g), b)
    c = mx - mn

    v = mx / 255.0
    s = np.where(mx > 0, c / np.where(mx > 0, mx, 1), 0.0)

    cc = np.where(c == 0, 1, c).astype(np.float64)
    h6 = np.select(
        [r == mx, g == mx],
        [((g - b) / cc) % 6.0, (b - r) / cc + 2.0],
        default=(r - g) / cc + 4.0,
    )
    h = np.where(c == 0, 0.0, h6 / 6.0)
    return HsvImage(h=h, s=s, v=v)
