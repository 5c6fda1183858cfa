import numpy as np
import pytest
from PIL import Image

from _synth import write_corpus


def random_hsv_image(rng, height=8, width=8):
    """An HsvImage-shaped object with uniform random channels (for oracles)."""
    from dscop_cbir import HsvImage

    return HsvImage(
        h=rng.random((height, width)),
        s=rng.random((height, width)),
        v=rng.random((height, width)),
    )


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(scope="session")
def tiny_dataset(tmp_path_factory):
    """3 classes x 3 images, 16x16, subdirectory-per-class layout."""
    root = tmp_path_factory.mktemp("tiny") / "data"
    return write_corpus(root, n_classes=3, per_class=3, size=16, seed=11)


def save_png(path, array):
    Image.fromarray(array, "RGB").save(path)
    return path
